// The differential-operator specialization: the Heisenberg triple (a, h, x)
// represented on polynomials (a acts as d/dt, x as multiplication by t, h as
// the identity), the matrix V_g of derivative entries, and the verification
// engine for (g(x) a)^n = e0^T (V_g S)^n H_1.
#pragma once

#include <cstddef>
#include <string>

#include "commat/copeland.hpp"
#include "commat/errors.hpp"
#include "commat/heisenberg.hpp"
#include "commat/matrix.hpp"
#include "commat/poly.hpp"
#include "commat/report.hpp"

namespace commat {

// Applies the operator represented by w to p: per PBW term x^i h^j a^k, the
// rightmost factor acts first, so p is differentiated k times, then shifted
// by t^i; h acts as the identity.
inline Poly weyl_apply(const HeisenbergElem& w, const Poly& p) {
  Poly out = Poly::zero();
  for (const auto& [mono, c] : w.terms()) {
    Poly q = p.derivative(mono.a);
    q = Poly::monomial(c, mono.x) * q;
    out = out + q;
  }
  return out;
}

// g evaluated at the generator x, as a Heisenberg element.
inline HeisenbergElem poly_at_x(const Poly& g) {
  return g.eval(HeisenbergElem::gen_x());
}

// V_g = (binom(i, j) * g^(i-j)(x) * h^(i-j) for i >= j, else 0).
inline Mat<HeisenbergElem> deriv_matrix(const Poly& g, Dim m) {
  auto entry_for = [](const Poly& gg, std::size_t i, std::size_t j) {
    if (i < j) return HeisenbergElem::zero();
    const unsigned d = static_cast<unsigned>(i - j);
    const HeisenbergElem gx = poly_at_x(gg.derivative(d));
    const HeisenbergElem hp = HeisenbergElem::monomial(BigInt::one(), {0, d, 0});
    return HeisenbergElem::from_int(binomial(i, j)) * gx * hp;
  };
  if (m.is_finite()) {
    const std::size_t n = m.count();
    return detail::materialize<HeisenbergElem>(
        n, n, [&](std::size_t i, std::size_t j) { return entry_for(g, i, j); });
  }
  return Mat<HeisenbergElem>::lazy(m, m, 0, [g, entry_for](std::size_t i, std::size_t j) {
    return entry_for(g, i, j);
  });
}

// U_{g(x)} = V_g, entrywise (to a window when m is infinite).
inline VerifyReport verify_u_eq_v(const Poly& g, Dim m, unsigned depth = 16) {
  detail::Stopwatch sw;
  const Mat<HeisenbergElem> U =
      ad_matrix(HeisenbergElem::gen_a(), poly_at_x(g), m);
  const Mat<HeisenbergElem> V = deriv_matrix(g, m);
  const std::size_t cap = m.is_finite() ? m.count() : depth;
  VerifyReport rep;
  bool ok = true;
  for (std::size_t i = 0; i < cap; ++i)
    for (std::size_t j = 0; j < cap; ++j) {
      const HeisenbergElem u = U.entry(i, j), v = V.entry(i, j);
      if (!(u == v)) {
        ok = false;
        rep.row_diag.push_back("entry (" + std::to_string(i) + ", " + std::to_string(j) +
                               "): " + u.str() + " != " + v.str());
      }
    }
  rep.check = "verify_u_eq_v";
  rep.config["g"] = g.str();
  rep.config["m"] = m.is_finite() ? nlohmann::json(m.count()) : nlohmann::json("inf");
  rep.lhs = "U_g(x)";
  rep.rhs = "V_g";
  rep.equal = ok;
  rep.windowed = !m.is_finite();
  rep.check_depth = depth;
  rep.ms = sw.ms();
  return rep;
}

// ad_a^p(g(x)) = g^(p)(x) h^p.
inline VerifyReport ad_derivative_check(const Poly& g, unsigned p) {
  detail::Stopwatch sw;
  const HeisenbergElem a = HeisenbergElem::gen_a();
  const HeisenbergElem lhs = ad_power(a, poly_at_x(g), p);
  const HeisenbergElem rhs =
      poly_at_x(g.derivative(p)) * HeisenbergElem::monomial(BigInt::one(), {0, p, 0});
  VerifyReport rep;
  rep.check = "ad_derivative_check";
  rep.config["g"] = g.str();
  rep.config["p"] = p;
  rep.lhs = lhs.str();
  rep.rhs = rhs.str();
  rep.equal = (lhs == rhs);
  rep.ms = sw.ms();
  return rep;
}

// a g(x) = g(x) a + g'(x) h.
inline VerifyReport derivative_commutator_check(const Poly& g) {
  detail::Stopwatch sw;
  const HeisenbergElem a = HeisenbergElem::gen_a();
  const HeisenbergElem h = HeisenbergElem::gen_h();
  const HeisenbergElem gx = poly_at_x(g);
  const HeisenbergElem lhs = a * gx;
  const HeisenbergElem rhs = gx * a + poly_at_x(g.derivative()) * h;
  VerifyReport rep;
  rep.check = "derivative_commutator_check";
  rep.config["g"] = g.str();
  rep.lhs = lhs.str();
  rep.rhs = rhs.str();
  rep.equal = (lhs == rhs);
  rep.ms = sw.ms();
  return rep;
}

// ad_a(b h^i) = ad_a(b) h^i; h^i is central so it factors out of the bracket.
inline VerifyReport central_factor_check(const HeisenbergElem& b, unsigned i) {
  detail::Stopwatch sw;
  const HeisenbergElem a = HeisenbergElem::gen_a();
  const HeisenbergElem hi = HeisenbergElem::monomial(BigInt::one(), {0, i, 0});
  const HeisenbergElem lhs = commutator(a, b * hi);
  const HeisenbergElem rhs = commutator(a, b) * hi;
  VerifyReport rep;
  rep.check = "central_factor_check";
  rep.config["b"] = b.str();
  rep.config["i"] = i;
  rep.lhs = lhs.str();
  rep.rhs = rhs.str();
  rep.equal = (lhs == rhs);
  rep.ms = sw.ms();
  return rep;
}

// (g(x) a)^n = e0^T (V_g S)^n H_1 in the Heisenberg algebra, cross-validated
// by applying both sides to the monomials t^k, k <= rep_depth, under the
// polynomial representation.
inline VerifyReport verify_copeland(const Poly& g, unsigned n, Dim m, unsigned rep_depth = 8,
                                    unsigned check_depth = 16) {
  detail::Stopwatch sw;
  using H = HeisenbergElem;
  if (m.is_finite() && n >= m.count())
    throw config_error("require n < m, got n = " + std::to_string(n) + ", m = " + m.str());
  const H a = H::gen_a();
  const H direct = ring_pow(poly_at_x(g) * a, n);

  const Mat<H> S = shift_matrix<H>(m);
  const Mat<H> V = deriv_matrix(g, m);
  const Mat<H> P = pow(V * S, n);
  const H viamat =
      scalar(basis_row<H>(0, m) * memoized(P * power_column(a, H::one(), m)));

  VerifyReport rep;
  rep.check = "verify_copeland";
  rep.config["g"] = g.str();
  rep.config["n"] = n;
  rep.config["m"] = m.is_finite() ? nlohmann::json(m.count()) : nlohmann::json("inf");
  rep.lhs = direct.str();
  rep.rhs = viamat.str();
  bool ok = (direct == viamat);

  // Representation cross-check: both sides act identically on t^k.
  for (unsigned k = 0; k <= rep_depth; ++k) {
    const Poly tk = Poly::monomial(BigInt::one(), k);
    const Poly pl = weyl_apply(direct, tk);
    const Poly pr = weyl_apply(viamat, tk);
    if (!(pl == pr)) {
      ok = false;
      rep.row_diag.push_back("on t^" + std::to_string(k) + ": " + pl.str() +
                             " != " + pr.str());
    }
  }
  rep.equal = ok;
  rep.windowed = !m.is_finite();
  rep.check_depth = check_depth;
  rep.ms = sw.ms();
  return rep;
}

} // namespace commat

// Builders for the shift matrix S, the ad-power matrix U_b, the power
// column H_c and the basis vectors e_j; the row-equivalence predicate; and
// the verification engine for the factorization (ba)^n = e0^T (U_b S)^n H_1.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "commat/errors.hpp"
#include "commat/matrix.hpp"
#include "commat/report.hpp"
#include "commat/ring.hpp"

namespace commat {

// S = ([j = i+1]); tri bound -1.
template <Ring R>
Mat<R> shift_matrix(Dim m) {
  auto ent = [](std::size_t i, std::size_t j) {
    return j == i + 1 ? R::one() : R::zero();
  };
  if (m.is_finite()) return detail::materialize<R>(m.count(), m.count(), ent);
  return Mat<R>::lazy(m, m, -1, ent);
}

// U_b = (binom(i, j) * ad_a^(i-j)(b) for i >= j, else 0); lower-triangular.
template <Ring R>
Mat<R> ad_matrix(const R& a, const R& b, Dim m) {
  if (m.is_finite()) {
    const std::size_t n = m.count();
    std::vector<R> ads;
    ads.reserve(n);
    ads.push_back(b);
    for (std::size_t p = 1; p < n; ++p) ads.push_back(commutator(a, ads.back()));
    return detail::materialize<R>(n, n, [&](std::size_t i, std::size_t j) {
      if (i < j) return R::zero();
      return R::from_int(binomial(i, j)) * ads[i - j];
    });
  }
  return Mat<R>::lazy(m, m, 0, [a, b](std::size_t i, std::size_t j) {
    if (i < j) return R::zero();
    return R::from_int(binomial(i, j)) * ad_power(a, b, static_cast<unsigned>(i - j));
  });
}

// H_c = (a^i c), a column vector of size m.
template <Ring R>
Mat<R> power_column(const R& a, const R& c, Dim m) {
  if (m.is_finite()) {
    const std::size_t n = m.count();
    std::vector<R> v;
    v.reserve(n);
    R p = R::one();
    for (std::size_t i = 0; i < n; ++i) {
      v.push_back(p * c);
      p = p * a;
    }
    return Mat<R>::dense(n, 1, std::move(v));
  }
  return Mat<R>::lazy(m, Dim(1), 0, [a, c](std::size_t i, std::size_t) {
    return ring_pow(a, static_cast<unsigned>(i)) * c;
  });
}

// e_j = ([p = j]), the j-th standard basis column vector.
template <Ring R>
Mat<R> basis_column(std::size_t j, Dim m) {
  if (!m.admits(j))
    throw std::out_of_range("basis index " + std::to_string(j) + " out of range for m = " + m.str());
  auto ent = [j](std::size_t p, std::size_t) { return p == j ? R::one() : R::zero(); };
  if (m.is_finite()) return detail::materialize<R>(m.count(), 1, ent);
  return Mat<R>::lazy(m, Dim(1), static_cast<long long>(j), ent);
}

// e_j^T as a 1 x m matrix; tri bound -j.
template <Ring R>
Mat<R> basis_row(std::size_t j, Dim m) {
  if (!m.admits(j))
    throw std::out_of_range("basis index " + std::to_string(j) + " out of range for m = " + m.str());
  auto ent = [j](std::size_t, std::size_t q) { return q == j ? R::one() : R::zero(); };
  if (m.is_finite()) return detail::materialize<R>(1, m.count(), ent);
  return Mat<R>::lazy(Dim(1), m, -static_cast<long long>(j), ent);
}

// A ~ B in rows 0 .. m-k (all rows except the last k-1). For infinite m the
// index set is unbounded, so rows are checked for u up to `depth` only; an
// infinite column count is likewise windowed at `depth`.
template <Ring R>
bool rows_equiv(const Mat<R>& A, const Mat<R>& B, unsigned k, unsigned depth = 16) {
  if (A.rows() != B.rows() || A.cols() != B.cols())
    throw shape_error("rows_equiv shape mismatch: " + A.shape_str() + " vs " + B.shape_str());
  if (k < 1) throw config_error("rows_equiv requires k >= 1");
  long long umax;
  if (A.rows().is_finite())
    umax = static_cast<long long>(A.rows().count()) - static_cast<long long>(k);
  else
    umax = static_cast<long long>(depth);
  const std::size_t ccap = A.cols().is_finite() ? A.cols().count() : depth;
  for (long long u = 0; u <= umax; ++u)
    for (std::size_t q = 0; q < ccap; ++q)
      if (!(A.entry(static_cast<std::size_t>(u), q) == B.entry(static_cast<std::size_t>(u), q)))
        return false;
  return true;
}

template <Ring R>
struct GeneralConfig {
  R a;
  R b;
  Dim m = Dim(1);
  unsigned n = 0;
  unsigned check_depth = 16;

  void validate() const {
    if (m.is_finite() && n >= m.count())
      throw config_error("require n < m, got n = " + std::to_string(n) + ", m = " + m.str());
  }

  nlohmann::json echo() const {
    nlohmann::json j;
    j["n"] = n;
    j["m"] = m.is_finite() ? nlohmann::json(m.count()) : nlohmann::json("inf");
    j["check_depth"] = check_depth;
    return j;
  }
};

enum class EvalPath {
  power, // multiply U_b S once, raise to the n-th power
  fold   // fold H_1 through n alternating multiplications by S then U_b
};

// e0^T (U_b S)^n H_1 as a ring element, computed through the matrix layer.
template <Ring R>
R general_rhs(const GeneralConfig<R>& cfg, EvalPath path = EvalPath::power) {
  cfg.validate();
  const Mat<R> S = shift_matrix<R>(cfg.m);
  const Mat<R> U = ad_matrix(cfg.a, cfg.b, cfg.m);
  const Mat<R> e0t = basis_row<R>(0, cfg.m);
  Mat<R> col = power_column(cfg.a, R::one(), cfg.m);
  if (path == EvalPath::power) {
    const Mat<R> P = pow(U * S, cfg.n);
    return scalar(e0t * memoized(P * col));
  }
  for (unsigned step = 0; step < cfg.n; ++step) col = memoized(U * memoized(S * col));
  return scalar(e0t * col);
}

// Compares e0^T (U_b S)^n H_1 against the directly expanded (ba)^n. The two
// sides share no code path: the left is plain ring multiplication, the
// right goes through the matrix calculus.
template <PrintableRing R>
VerifyReport verify_general(const GeneralConfig<R>& cfg) {
  detail::Stopwatch sw;
  cfg.validate();
  const R direct = ring_pow(cfg.b * cfg.a, cfg.n);
  const R viamat = general_rhs(cfg);
  VerifyReport rep;
  rep.check = "verify_general";
  rep.config = cfg.echo();
  rep.config["a"] = element_str(cfg.a);
  rep.config["b"] = element_str(cfg.b);
  rep.lhs = element_str(direct);
  rep.rhs = element_str(viamat);
  rep.equal = (direct == viamat);
  rep.windowed = !cfg.m.is_finite();
  rep.check_depth = cfg.check_depth;
  rep.ms = sw.ms();
  return rep;
}

// (U_b S)^n H_1 agrees with H_{(ba)^n} in all rows except the last n.
template <PrintableRing R>
VerifyReport factor_column_check(const GeneralConfig<R>& cfg) {
  detail::Stopwatch sw;
  cfg.validate();
  const Mat<R> S = shift_matrix<R>(cfg.m);
  const Mat<R> U = ad_matrix(cfg.a, cfg.b, cfg.m);
  const Mat<R> lhs = memoized(pow(U * S, cfg.n) * power_column(cfg.a, R::one(), cfg.m));
  const Mat<R> rhs = power_column(cfg.a, ring_pow(cfg.b * cfg.a, cfg.n), cfg.m);

  VerifyReport rep;
  rep.check = "factor_column_check";
  rep.config = cfg.echo();
  rep.equal = rows_equiv(lhs, rhs, cfg.n + 1, cfg.check_depth);
  rep.windowed = !cfg.m.is_finite();
  rep.check_depth = cfg.check_depth;
  const std::size_t shown = cfg.m.is_finite() ? cfg.m.count()
                                              : static_cast<std::size_t>(cfg.check_depth) + 1;
  for (std::size_t u = 0; u < shown; ++u) {
    const R l = lhs.entry(u, 0), r = rhs.entry(u, 0);
    rep.row_diag.push_back("row " + std::to_string(u) + ": " + element_str(l) +
                           (l == r ? " == " : " != ") + element_str(r));
  }
  rep.lhs = "(U_b S)^n H_1";
  rep.rhs = "H_((ba)^n)";
  rep.ms = sw.ms();
  return rep;
}

// a^i b = sum_j binom(i, j) ad_a^(i-j)(b) a^j.
template <PrintableRing R>
VerifyReport ad_expansion_check(const R& a, const R& b, unsigned i) {
  detail::Stopwatch sw;
  const R lhs = ring_pow(a, i) * b;
  R rhs = R::zero();
  for (unsigned j = 0; j <= i; ++j)
    rhs = rhs + R::from_int(binomial(i, j)) * ad_power(a, b, i - j) * ring_pow(a, j);
  VerifyReport rep;
  rep.check = "ad_expansion_check";
  rep.config["i"] = i;
  rep.lhs = element_str(lhs);
  rep.rhs = element_str(rhs);
  rep.equal = (lhs == rhs);
  rep.ms = sw.ms();
  return rep;
}

// (a) e_u^T S = e_{u+1}^T and (b) e_u^T S H_c = e_u^T H_{ac}, for u+1 < m.
template <PrintableRing R>
VerifyReport shift_row_check(const R& a, const R& c, Dim m, std::size_t u, unsigned depth = 16) {
  detail::Stopwatch sw;
  if (!m.admits(u + 1))
    throw config_error("shift_row_check requires u + 1 < m, got u = " + std::to_string(u) +
                       ", m = " + m.str());
  const Mat<R> S = shift_matrix<R>(m);
  const Mat<R> lhs_row = basis_row<R>(u, m) * S;
  const Mat<R> rhs_row = basis_row<R>(u + 1, m);
  const std::size_t cap = m.is_finite() ? m.count() : depth;
  const bool part_a = window_eq(lhs_row, rhs_row, 1, cap);

  const R lhs_b = scalar(basis_row<R>(u, m) * memoized(S * power_column(a, c, m)));
  const R rhs_b = scalar(basis_row<R>(u, m) * power_column(a, a * c, m));
  const bool part_b = (lhs_b == rhs_b);

  VerifyReport rep;
  rep.check = "shift_row_check";
  rep.config["u"] = u;
  rep.config["m"] = m.is_finite() ? nlohmann::json(m.count()) : nlohmann::json("inf");
  rep.lhs = element_str(lhs_b);
  rep.rhs = element_str(rhs_b);
  rep.equal = part_a && part_b;
  rep.windowed = !m.is_finite();
  rep.check_depth = depth;
  rep.row_diag.push_back(std::string("e_u^T S = e_{u+1}^T: ") + (part_a ? "ok" : "FAIL"));
  rep.row_diag.push_back(std::string("e_u^T S H_c = e_u^T H_ac: ") + (part_b ? "ok" : "FAIL"));
  rep.ms = sw.ms();
  return rep;
}

// U_b H_c = H_{bc}, entrywise (all m entries when finite, to depth if not).
template <PrintableRing R>
VerifyReport column_absorb_check(const R& a, const R& b, const R& c, Dim m, unsigned depth = 16) {
  detail::Stopwatch sw;
  const Mat<R> lhs = memoized(ad_matrix(a, b, m) * power_column(a, c, m));
  const Mat<R> rhs = power_column(a, b * c, m);
  const std::size_t cap = m.is_finite() ? m.count() : depth;
  bool ok = true;
  VerifyReport rep;
  for (std::size_t u = 0; u < cap; ++u) {
    const R l = lhs.entry(u, 0), r = rhs.entry(u, 0);
    if (!(l == r)) {
      ok = false;
      rep.row_diag.push_back("row " + std::to_string(u) + ": " + element_str(l) +
                             " != " + element_str(r));
    }
  }
  rep.check = "column_absorb_check";
  rep.config["m"] = m.is_finite() ? nlohmann::json(m.count()) : nlohmann::json("inf");
  rep.lhs = "U_b H_c";
  rep.rhs = "H_bc";
  rep.equal = ok;
  rep.windowed = !m.is_finite();
  rep.check_depth = depth;
  rep.ms = sw.ms();
  return rep;
}

} // namespace commat

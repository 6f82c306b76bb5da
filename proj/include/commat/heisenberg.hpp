// The Heisenberg algebra on generators x, h, a with a*x = x*a + h and h
// central, in the PBW basis x^i h^j a^k. Products are normal-ordered by
// repeated application of the rewrite a*x^i -> x^i*a + i*x^(i-1)*h.
#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "commat/bigint.hpp"
#include "commat/detail/term_format.hpp"

namespace commat {

// Exponents of the PBW monomial x^x_exp h^h_exp a^a_exp.
struct PbwMono {
  unsigned x = 0;
  unsigned h = 0;
  unsigned a = 0;

  unsigned degree() const { return x + h + a; }
  friend bool operator==(const PbwMono& l, const PbwMono& r) {
    return l.x == r.x && l.h == r.h && l.a == r.a;
  }
};

class HeisenbergElem {
public:
  // Degree first, then reversed lexicographic on (x, h, a); reverse
  // iteration gives the canonical print order (degree descending).
  struct MonoOrder {
    bool operator()(const PbwMono& u, const PbwMono& v) const {
      if (u.degree() != v.degree()) return u.degree() < v.degree();
      return std::tie(v.x, v.h, v.a) < std::tie(u.x, u.h, u.a);
    }
  };

  using TermMap = std::map<PbwMono, BigInt, MonoOrder>;

  HeisenbergElem() = default;

  static HeisenbergElem zero() { return HeisenbergElem(); }
  static HeisenbergElem one() { return monomial(BigInt::one(), {}); }
  static HeisenbergElem from_int(const BigInt& n) { return monomial(n, {}); }
  static HeisenbergElem gen_x() { return monomial(BigInt::one(), {1, 0, 0}); }
  static HeisenbergElem gen_h() { return monomial(BigInt::one(), {0, 1, 0}); }
  static HeisenbergElem gen_a() { return monomial(BigInt::one(), {0, 0, 1}); }

  static HeisenbergElem monomial(BigInt c, PbwMono m) {
    HeisenbergElem e;
    if (!c.is_zero()) e.terms_.emplace(m, std::move(c));
    return e;
  }

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  friend HeisenbergElem operator+(const HeisenbergElem& u, const HeisenbergElem& v) {
    HeisenbergElem r = u;
    for (const auto& [m, c] : v.terms_) r.add_term(m, c);
    return r;
  }

  friend HeisenbergElem operator-(const HeisenbergElem& u, const HeisenbergElem& v) {
    HeisenbergElem r = u;
    for (const auto& [m, c] : v.terms_) r.add_term(m, -c);
    return r;
  }

  HeisenbergElem operator-() const {
    HeisenbergElem r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  friend HeisenbergElem operator*(const HeisenbergElem& u, const HeisenbergElem& v) {
    HeisenbergElem r;
    for (const auto& [mu, cu] : u.terms_)
      for (const auto& [mv, cv] : v.terms_) {
        // x^i1 h^j1 a^k1 * x^i2 h^j2 a^k2
        //   = x^i1 h^(j1+j2) * (a^k1 x^i2) * a^k2   (h central)
        HeisenbergElem w = monomial(BigInt::one(), {mv.x, 0, 0});
        for (unsigned s = 0; s < mu.a; ++s) w = left_mul_by_a(w);
        const BigInt c = cu * cv;
        for (const auto& [mw, cw] : w.terms_)
          r.add_term({mu.x + mw.x, mu.h + mw.h + mv.h, mw.a + mv.a}, c * cw);
      }
    return r;
  }

  friend bool operator==(const HeisenbergElem& u, const HeisenbergElem& v) {
    return u.terms_ == v.terms_;
  }

  // e.g. "x^2*h*a + 3*x*h^2".
  std::string str() const {
    std::vector<std::pair<BigInt, std::string>> out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      std::string mono;
      append_power(mono, "x", it->first.x);
      append_power(mono, "h", it->first.h);
      append_power(mono, "a", it->first.a);
      out.emplace_back(it->second, mono);
    }
    return detail::join_terms(out);
  }

private:
  // a * (x^i h^j a^k) = x^i h^j a^(k+1) + i * x^(i-1) h^(j+1) a^k.
  static HeisenbergElem left_mul_by_a(const HeisenbergElem& e) {
    HeisenbergElem r;
    for (const auto& [m, c] : e.terms_) {
      r.add_term({m.x, m.h, m.a + 1}, c);
      if (m.x > 0) r.add_term({m.x - 1, m.h + 1, m.a}, c * BigInt(static_cast<long>(m.x)));
    }
    return r;
  }

  static void append_power(std::string& out, const char* name, unsigned e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += name;
    if (e > 1) out += "^" + std::to_string(e);
  }

  void add_term(PbwMono m, BigInt c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_.emplace(m, std::move(c));
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  TermMap terms_;
};

} // namespace commat

// Exact univariate polynomials over BigInt, with formal derivatives and
// evaluation at an element of an arbitrary ring.
#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "commat/bigint.hpp"
#include "commat/detail/term_format.hpp"
#include "commat/ring.hpp"

namespace commat {

// Coefficient i is the coefficient of t^i. Canonical form: the highest
// stored coefficient is nonzero, or the sequence is empty (zero polynomial).
class Poly {
public:
  Poly() = default;

  // Coefficients in ascending degree, constant term first.
  Poly(std::initializer_list<long> coeffs) {
    for (long c : coeffs) coeffs_.emplace_back(c);
    strip();
  }

  static Poly from_coeffs(std::vector<BigInt> coeffs) {
    Poly p;
    p.coeffs_ = std::move(coeffs);
    p.strip();
    return p;
  }

  static Poly zero() { return Poly(); }
  static Poly one() { return Poly{1}; }
  static Poly t() { return Poly{0, 1}; }
  static Poly from_int(const BigInt& n) { return from_coeffs({n}); }

  static Poly monomial(BigInt c, std::size_t degree) {
    std::vector<BigInt> v(degree + 1, BigInt::zero());
    v[degree] = std::move(c);
    return from_coeffs(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }

  // The zero polynomial has no degree.
  std::optional<std::size_t> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }

  // Coefficient of t^i; zero beyond the stored range.
  BigInt coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : BigInt::zero();
  }

  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt::zero());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return from_coeffs(std::move(v));
  }

  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt::zero());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
    return from_coeffs(std::move(v));
  }

  Poly operator-() const {
    std::vector<BigInt> v(coeffs_.size(), BigInt::zero());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = -coeffs_[i];
    return from_coeffs(std::move(v));
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt::zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return from_coeffs(std::move(v));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  // n-th formal derivative; n = 0 returns the polynomial unchanged.
  Poly derivative(unsigned n = 1) const {
    Poly p = *this;
    for (unsigned step = 0; step < n; ++step) {
      if (p.coeffs_.empty()) return p;
      std::vector<BigInt> v;
      v.reserve(p.coeffs_.size() - 1);
      for (std::size_t i = 1; i < p.coeffs_.size(); ++i)
        v.push_back(BigInt(static_cast<long>(i)) * p.coeffs_[i]);
      p = from_coeffs(std::move(v));
    }
    return p;
  }

  // Sum of coeff(i) * x^i computed in R; powers of one element commute with
  // each other, so Horner evaluation is valid in any ring.
  template <Ring R>
  R eval(const R& x) const {
    if (coeffs_.empty()) return R::zero();
    R acc = R::from_int(coeffs_.back());
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;)
      acc = acc * x + R::from_int(coeffs_[i]);
    return acc;
  }

  // e.g. "t^3 - 2*t", highest degree first.
  std::string str() const {
    std::vector<std::pair<BigInt, std::string>> terms;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      if (coeffs_[i].is_zero()) continue;
      std::string mono;
      if (i == 1) mono = "t";
      else if (i > 1) mono = "t^" + std::to_string(i);
      terms.emplace_back(coeffs_[i], mono);
    }
    return detail::join_terms(terms);
  }

private:
  void strip() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

} // namespace commat

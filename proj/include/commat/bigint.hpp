// Arbitrary-precision signed integers (GMP-backed) and exact binomial
// coefficients.
#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

namespace commat {

// Exact integer scalar. All coefficient arithmetic in the library goes
// through this type; there is no fixed-width fallback.
class BigInt {
public:
  BigInt() : v_(0) {}
  BigInt(long v) : v_(v) {}
  BigInt(int v) : v_(v) {}
  explicit BigInt(const std::string& decimal) : v_(decimal) {}
  explicit BigInt(mpz_class v) : v_(std::move(v)) {}

  static BigInt zero() { return BigInt(0l); }
  static BigInt one() { return BigInt(1l); }
  static BigInt from_int(const BigInt& n) { return n; }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  const mpz_class& raw() const { return v_; }

  std::string str() const { return v_.get_str(); }

  friend BigInt operator+(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ + b.v_)); }
  friend BigInt operator-(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ - b.v_)); }
  friend BigInt operator*(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ * b.v_)); }
  BigInt operator-() const { return BigInt(mpz_class(-v_)); }

  BigInt& operator+=(const BigInt& o) { v_ += o.v_; return *this; }
  BigInt& operator-=(const BigInt& o) { v_ -= o.v_; return *this; }
  BigInt& operator*=(const BigInt& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const BigInt& a, const BigInt& b) { return a.v_ == b.v_; }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return a.v_ != b.v_; }
  friend bool operator<(const BigInt& a, const BigInt& b) { return a.v_ < b.v_; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return a.v_ <= b.v_; }

  // Quotient of an exact division; the caller guarantees divisibility.
  BigInt divexact(const BigInt& d) const {
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), v_.get_mpz_t(), d.v_.get_mpz_t());
    return BigInt(q);
  }

private:
  mpz_class v_;
};

// Binomial coefficient by the multiplicative formula with exact division.
// Returns 0 when j > i. The Pascal-table route lives in the test suite and
// is cross-checked against this one.
inline BigInt binomial(unsigned long i, unsigned long j) {
  if (j > i) return BigInt::zero();
  if (j > i - j) j = i - j;
  BigInt acc = BigInt::one();
  for (unsigned long t = 1; t <= j; ++t) {
    acc *= BigInt(static_cast<long>(i - j + t));
    acc = acc.divexact(BigInt(static_cast<long>(t)));
  }
  return acc;
}

} // namespace commat

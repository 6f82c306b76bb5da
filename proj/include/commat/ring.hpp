// The ring abstraction every other component is generic over, plus the
// commutator / iterated-ad operations.
#pragma once

#include <concepts>
#include <string>

#include "commat/bigint.hpp"

namespace commat {

// An associative ring with unity. Commutativity is NOT assumed anywhere.
// from_int is the canonical embedding of the integers (n |-> n * one); it is
// how scalar coefficients such as binomial weights enter a ring.
template <class T>
concept Ring = requires(const T& x, const T& y, const BigInt& n) {
  { T::zero() } -> std::same_as<T>;
  { T::one() } -> std::same_as<T>;
  { T::from_int(n) } -> std::same_as<T>;
  { x + y } -> std::same_as<T>;
  { x - y } -> std::same_as<T>;
  { -x } -> std::same_as<T>;
  { x * y } -> std::same_as<T>;
  { x == y } -> std::convertible_to<bool>;
};

template <class T>
concept PrintableRing = Ring<T> && requires(const T& x) {
  { x.str() } -> std::convertible_to<std::string>;
};

template <PrintableRing T>
std::string element_str(const T& x) {
  return x.str();
}

// x^n with x^0 = 1.
template <Ring T>
T ring_pow(const T& x, unsigned n) {
  T acc = T::one();
  for (unsigned i = 0; i < n; ++i) acc = acc * x;
  return acc;
}

// [a, b] = ab - ba.
template <Ring T>
T commutator(const T& a, const T& b) {
  return a * b - b * a;
}

// ad_a applied p times to b; p = 0 returns b unchanged.
template <Ring T>
T ad_power(const T& a, T b, unsigned p) {
  for (unsigned i = 0; i < p; ++i) b = commutator(a, b);
  return b;
}

} // namespace commat

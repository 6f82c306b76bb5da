#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "commat/bigint.hpp"
#include "support/ring_axioms.hpp"
#include "support/samplers.hpp"

using commat::BigInt;
using commat::binomial;

namespace {

// Independent route: Pascal's triangle built by additions only.
std::vector<std::vector<BigInt>> pascal_table(unsigned long n) {
  std::vector<std::vector<BigInt>> t(n + 1);
  for (unsigned long i = 0; i <= n; ++i) {
    t[i].resize(i + 1, BigInt::one());
    for (unsigned long j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
  }
  return t;
}

} // namespace

TEST_CASE("binomial basics") {
  CHECK(binomial(0, 0) == BigInt(1));
  CHECK(binomial(5, 2) == BigInt(10));
  CHECK(binomial(3, 5) == BigInt(0));
  CHECK(binomial(8, 4) == BigInt(70));
  CHECK(binomial(20, 10) == BigInt(184756));
}

TEST_CASE("binomial agrees with the Pascal-table route") {
  const auto table = pascal_table(20);
  for (unsigned long i = 0; i <= 20; ++i)
    for (unsigned long j = 0; j <= i; ++j) REQUIRE(binomial(i, j) == table[i][j]);
}

TEST_CASE("binomial satisfies Pascal's rule") {
  for (unsigned long i = 0; i <= 20; ++i)
    for (unsigned long j = 0; j <= 20; ++j)
      REQUIRE(binomial(i + 1, j + 1) == binomial(i, j) + binomial(i, j + 1));
}

TEST_CASE("binomial does not overflow") {
  // C(64, 32) exceeds 2^61; exactness must survive that comfortably.
  CHECK(binomial(64, 32) == BigInt(std::string("1832624140942590534")));
  CHECK(binomial(100, 50) ==
        BigInt(std::string("100891344545564193334812497256")));
}

TEST_CASE("BigInt ring axioms") {
  testsupport::check_ring_axioms<BigInt>(17, 50, [](testsupport::Rng& rng) {
    return testsupport::random_bigint(rng);
  });
}

TEST_CASE("BigInt rendering") {
  CHECK(BigInt(0).str() == "0");
  CHECK(BigInt(-42).str() == "-42");
  CHECK((BigInt(1) - BigInt(3)).str() == "-2");
}

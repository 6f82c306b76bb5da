#include <catch2/catch_amalgamated.hpp>

#include "commat/copeland.hpp"
#include "commat/free_algebra.hpp"
#include "commat/heisenberg.hpp"
#include "support/samplers.hpp"

using commat::ad_matrix;
using commat::ad_power;
using commat::basis_column;
using commat::basis_row;
using commat::BigInt;
using commat::Dim;
using commat::EvalPath;
using commat::FreeAlgElem;
using commat::GeneralConfig;
using commat::general_rhs;
using commat::HeisenbergElem;
using commat::Mat;
using commat::power_column;
using commat::ring_pow;
using commat::rows_equiv;
using commat::scalar;
using commat::shift_matrix;

namespace {
const FreeAlgElem fa = FreeAlgElem::generator(0);
const FreeAlgElem fb = FreeAlgElem::generator(1);
const FreeAlgElem fc = FreeAlgElem::generator(2);

GeneralConfig<FreeAlgElem> cfg_ab(unsigned n, Dim m, unsigned depth = 16) {
  return {fa, fb, m, n, depth};
}

FreeAlgElem word(std::initializer_list<unsigned char> w) {
  return FreeAlgElem::term(BigInt::one(), FreeAlgElem::Word(w));
}
} // namespace

TEST_CASE("shift matrix") {
  const auto S = shift_matrix<BigInt>(Dim(3));
  const BigInt expect[3][3] = {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(S.entry(i, j) == expect[i][j]);
  const auto Sinf = shift_matrix<BigInt>(Dim::inf());
  CHECK(Sinf.entry(4, 5) == BigInt(1));
  CHECK(Sinf.entry(5, 4) == BigInt(0));
}

TEST_CASE("ad matrix") {
  const auto U = ad_matrix(fa, fb, Dim(3));
  const FreeAlgElem ad1 = ad_power(fa, fb, 1), ad2 = ad_power(fa, fb, 2);
  const FreeAlgElem z = FreeAlgElem::zero();
  CHECK(U.entry(0, 0) == fb);
  CHECK(U.entry(0, 1) == z);
  CHECK(U.entry(1, 0) == ad1);
  CHECK(U.entry(1, 1) == fb);
  CHECK(U.entry(2, 0) == ad2);
  CHECK(U.entry(2, 1) == FreeAlgElem::from_int(2) * ad1);
  CHECK(U.entry(2, 2) == fb);

  const auto Uinf = ad_matrix(fa, fb, Dim::inf());
  for (std::size_t i = 0; i < 6; ++i) CHECK(Uinf.entry(i, i) == fb);
  CHECK(Uinf.entry(3, 1) == FreeAlgElem::from_int(3) * ad2);
  CHECK(commat::check_tri_bound(Uinf, 0, 8));
  CHECK(commat::check_tri_bound(shift_matrix<FreeAlgElem>(Dim::inf()), -1, 8));
}

TEST_CASE("power column") {
  const auto H1 = power_column(fa, FreeAlgElem::one(), Dim(3));
  CHECK(H1.entry(0, 0) == FreeAlgElem::one());
  CHECK(H1.entry(1, 0) == fa);
  CHECK(H1.entry(2, 0) == fa * fa);

  const auto Hba = power_column(fa, fb * fa, Dim::inf());
  CHECK(Hba.entry(0, 0) == fb * fa);
  CHECK(Hba.entry(2, 0) == word({0, 0, 1, 0})); // a a b a
}

TEST_CASE("basis vectors") {
  const auto e0 = basis_column<BigInt>(0, Dim(3));
  CHECK(e0.entry(0, 0) == BigInt(1));
  CHECK(e0.entry(1, 0) == BigInt(0));
  const auto e2 = basis_column<BigInt>(2, Dim(3));
  CHECK(e2.entry(2, 0) == BigInt(1));
  CHECK(e2.entry(0, 0) == BigInt(0));
  CHECK_THROWS_AS(basis_column<BigInt>(3, Dim(3)), std::out_of_range);
  CHECK_THROWS_AS(basis_row<BigInt>(5, Dim(4)), std::out_of_range);

  const auto e7t = basis_row<BigInt>(7, Dim::inf());
  CHECK(e7t.entry(0, 7) == BigInt(1));
  CHECK(e7t.entry(0, 6) == BigInt(0));
  CHECK(*e7t.tri_bound() == -7);
}

TEST_CASE("a^i b expands through ad powers") {
  // i = 1: ab = (ab - ba) + ba
  auto rep = commat::ad_expansion_check(fa, fb, 1);
  CHECK(rep.equal);
  CHECK(rep.lhs == "a*b");
  // i = 2: aab = ad^2(b) + 2 ad(b) a + b a^2, as words
  const FreeAlgElem rhs2 = ad_power(fa, fb, 2) +
                           FreeAlgElem::from_int(2) * ad_power(fa, fb, 1) * fa +
                           fb * fa * fa;
  CHECK(rhs2 == word({0, 0, 1}));
  for (unsigned i = 0; i <= 8; ++i) CHECK(commat::ad_expansion_check(fa, fb, i).equal);
}

TEST_CASE("row equivalence") {
  const auto SH = shift_matrix<FreeAlgElem>(Dim(3)) * power_column(fa, fc, Dim(3));
  const auto Hac = power_column(fa, fa * fc, Dim(3));
  CHECK(rows_equiv(SH, SH, 1));
  CHECK(rows_equiv(SH, Hac, 2));
  CHECK(!rows_equiv(SH, Hac, 1));

  CHECK_THROWS_AS(rows_equiv(SH, power_column(fa, fc, Dim(4)), 1), commat::shape_error);
  CHECK_THROWS_AS(rows_equiv(SH, Hac, 0), commat::config_error);

  // Vacuous when k exceeds m.
  CHECK(rows_equiv(SH, Hac, 4));
}

TEST_CASE("row equivalence is monotone in k") {
  testsupport::Rng rng(61);
  for (unsigned c = 0; c < 40; ++c) {
    const std::size_t m = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    const auto A = testsupport::random_dense<BigInt>(
        rng, m, 1, [](testsupport::Rng& g) { return testsupport::random_bigint(g); });
    const auto B = testsupport::random_dense<BigInt>(
        rng, m, 1, [](testsupport::Rng& g) { return testsupport::random_bigint(g); });
    for (unsigned k = 1; k + 1 <= m + 2; ++k)
      if (rows_equiv(A, B, k))
        for (unsigned kp = k; kp <= m + 2; ++kp) REQUIRE(rows_equiv(A, B, kp));
  }
}

namespace {

// Copy of A with rows >= keep replaced by fresh random entries; by
// construction A ~ the copy in the first `keep` rows.
Mat<FreeAlgElem> mutate_tail(testsupport::Rng& rng, const Mat<FreeAlgElem>& A,
                             std::size_t keep) {
  const std::size_t m = A.rows().count(), l = A.cols().count();
  std::vector<FreeAlgElem> v;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < l; ++j)
      v.push_back(i < keep ? A.entry(i, j) : testsupport::random_free_elem(rng, 2, 2));
  return Mat<FreeAlgElem>::dense(m, l, std::move(v));
}

} // namespace

TEST_CASE("left multiplication respects row equivalence") {
  testsupport::Rng rng(333);
  for (unsigned c = 0; c < 30; ++c) {
    const std::size_t m = std::uniform_int_distribution<std::size_t>(2, 6)(rng);
    const std::size_t l = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    const unsigned k =
        std::uniform_int_distribution<unsigned>(1, static_cast<unsigned>(m))(rng);
    const auto A = testsupport::random_dense<FreeAlgElem>(
        rng, m, l, [](testsupport::Rng& g) { return testsupport::random_free_elem(g, 2, 2); });
    const auto B = mutate_tail(rng, A, m - k + 1);
    REQUIRE(rows_equiv(A, B, k));

    const FreeAlgElem b = testsupport::random_free_elem(rng, 2, 2);
    const auto U = ad_matrix(fa, b, Dim(m));
    // U_b A ~ U_b B with the same k; S A ~ S B with k + 1.
    REQUIRE(rows_equiv(U * A, U * B, k));
    const auto S = shift_matrix<FreeAlgElem>(Dim(m));
    REQUIRE(rows_equiv(S * A, S * B, k + 1));
  }
}

TEST_CASE("shift of a column equivalent to H_c lands on H_ac") {
  testsupport::Rng rng(444);
  for (unsigned c = 0; c < 30; ++c) {
    const std::size_t m = std::uniform_int_distribution<std::size_t>(2, 6)(rng);
    const unsigned k =
        std::uniform_int_distribution<unsigned>(1, static_cast<unsigned>(m))(rng);
    const auto Hc = power_column(fa, fc, Dim(m));
    const auto A = mutate_tail(rng, Hc, m - k + 1);
    REQUIRE(rows_equiv(A, Hc, k));
    const auto S = shift_matrix<FreeAlgElem>(Dim(m));
    REQUIRE(rows_equiv(S * A, power_column(fa, fa * fc, Dim(m)), k + 1));
  }
}

TEST_CASE("factor column relation") {
  CHECK(commat::factor_column_check(cfg_ab(0, Dim(3))).equal);

  // n = 1, m = 3: rows 0..1 of (U_b S) H_1 are (ba, aba).
  const auto M = ad_matrix(fa, fb, Dim(3)) * shift_matrix<FreeAlgElem>(Dim(3));
  const auto col = M * power_column(fa, FreeAlgElem::one(), Dim(3));
  CHECK(col.entry(0, 0) == fb * fa);
  CHECK(col.entry(1, 0) == word({0, 1, 0})); // aba
  CHECK(commat::factor_column_check(cfg_ab(1, Dim(3))).equal);

  CHECK(commat::factor_column_check(cfg_ab(2, Dim(5))).equal);
  CHECK(commat::factor_column_check(cfg_ab(3, Dim::inf(), 10)).equal);
}

TEST_CASE("shift row identities") {
  CHECK(commat::shift_row_check(fa, fc, Dim(3), 0).equal);

  // u = 1, c = 1: both sides are a^2.
  const auto rep = commat::shift_row_check(fa, FreeAlgElem::one(), Dim(3), 1);
  CHECK(rep.equal);
  CHECK(rep.lhs == "a*a");

  CHECK(commat::shift_row_check(fa, fc, Dim::inf(), 7).equal);
  CHECK_THROWS_AS(commat::shift_row_check(fa, fc, Dim(3), 2), commat::config_error);
}

TEST_CASE("column absorption identities") {
  const auto UH = ad_matrix(fa, fb, Dim(3)) * power_column(fa, fc, Dim(3));
  CHECK(UH.entry(0, 0) == fb * fc);
  CHECK(UH.entry(2, 0) == fa * fa * fb * fc); // via the a^i b expansion, times c

  CHECK(commat::column_absorb_check(fa, fb, fc, Dim(3)).equal);
  CHECK(commat::column_absorb_check(fa, fb, FreeAlgElem::one(), Dim(5)).equal);
  CHECK(commat::column_absorb_check(fa, fb, fc, Dim::inf(), 12).equal);
}

TEST_CASE("matrix path reproduces (ba)^n") {
  CHECK(general_rhs(cfg_ab(0, Dim(1))) == FreeAlgElem::one());
  CHECK(general_rhs(cfg_ab(2, Dim(3))) == word({1, 0, 1, 0}));       // baba
  CHECK(general_rhs(cfg_ab(3, Dim(4))) == word({1, 0, 1, 0, 1, 0})); // bababa
  CHECK(general_rhs(cfg_ab(4, Dim::inf(), 12)) == ring_pow(fb * fa, 4));
}

TEST_CASE("n = 0 gives one in every ring") {
  CHECK(general_rhs(cfg_ab(0, Dim(3))) == FreeAlgElem::one());
  GeneralConfig<BigInt> ci{BigInt(5), BigInt(-7), Dim(4), 0, 16};
  CHECK(general_rhs(ci) == BigInt::one());
  GeneralConfig<HeisenbergElem> ch{HeisenbergElem::gen_a(), HeisenbergElem::gen_x(),
                                   Dim::inf(), 0, 8};
  CHECK(general_rhs(ch) == HeisenbergElem::one());
}

TEST_CASE("verification reports") {
  const auto rep = commat::verify_general(cfg_ab(2, Dim(3)));
  CHECK(rep.equal);
  CHECK(rep.lhs == "b*a*b*a");
  CHECK(rep.rhs == "b*a*b*a");
  CHECK(!rep.windowed);

  const auto rep0 = commat::verify_general(cfg_ab(0, Dim(1)));
  CHECK(rep0.equal);
  CHECK(rep0.lhs == "1");

  const auto repinf = commat::verify_general(cfg_ab(4, Dim::inf(), 12));
  CHECK(repinf.equal);
  CHECK(repinf.windowed);

  CHECK_THROWS_AS(commat::verify_general(cfg_ab(3, Dim(3))), commat::config_error);
}

TEST_CASE("verification holds for substituted elements") {
  testsupport::Rng rng(808);
  for (unsigned c = 0; c < 8; ++c) {
    GeneralConfig<FreeAlgElem> cfg{testsupport::random_free_elem(rng, 2, 2),
                                   testsupport::random_free_elem(rng, 2, 2), Dim(4), 3, 16};
    REQUIRE(commat::verify_general(cfg).equal);
  }
}

TEST_CASE("finite and infinite evaluations agree") {
  for (unsigned n = 0; n <= 5; ++n)
    for (std::size_t m = n + 1; m <= 8; ++m) {
      const FreeAlgElem fin = general_rhs(cfg_ab(n, Dim(m)));
      const FreeAlgElem inf = general_rhs(cfg_ab(n, Dim::inf(), 12));
      REQUIRE(fin == inf);
      REQUIRE(fin == ring_pow(fb * fa, n));
    }
}

TEST_CASE("power and fold evaluation paths agree") {
  for (unsigned n = 0; n <= 4; ++n)
    for (std::size_t m = n + 1; m <= n + 3; ++m) {
      const auto cfg = cfg_ab(n, Dim(m));
      REQUIRE(general_rhs(cfg, EvalPath::power) == general_rhs(cfg, EvalPath::fold));
    }
  const auto cinf = cfg_ab(3, Dim::inf(), 10);
  REQUIRE(general_rhs(cinf, EvalPath::power) == general_rhs(cinf, EvalPath::fold));
}

// The n < m hypothesis is necessary: at n = m the top-row contribution is
// lost. Outcomes are recorded, not asserted as a general law.
TEST_CASE("exploratory: n = m small cases") {
  for (unsigned n = 1; n <= 3; ++n) {
    const Dim m(n);
    const auto S = shift_matrix<FreeAlgElem>(m);
    const auto U = ad_matrix(fa, fb, m);
    const auto P = commat::pow(U * S, n);
    const FreeAlgElem viamat = scalar(
        basis_row<FreeAlgElem>(0, m) * (P * power_column(fa, FreeAlgElem::one(), m)));
    const FreeAlgElem direct = ring_pow(fb * fa, n);
    INFO("n = m = " << n << ": matrix path gives " << viamat.str() << ", direct gives "
                    << direct.str());
    CHECK(viamat != direct); // observed outcome for these cases
  }
}

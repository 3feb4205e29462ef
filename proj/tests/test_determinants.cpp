#include "hankel/builders.hpp"
#include "hankel/determinants.hpp"

#include "oracles.hpp"
#include "support.hpp"

#include <random>

using namespace hankel;
using hankel::test::mat;
using hankel::test::q;
using hankel::test::rows_of;

namespace {

ExactMatrix random_matrix(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
  return ExactMatrix::from_rows(oracle::random_int_matrix(rng, n, lo, hi));
}

ExactMatrix random_rational_matrix(std::mt19937_64& rng, std::size_t n) {
  return ExactMatrix::generate(n, [&](std::size_t, std::size_t) {
    return make_rational(static_cast<long>(rng() % 21) - 10, static_cast<long>(rng() % 4) + 1);
  });
}

}  // namespace

TEST_CASE("laplace expansion") {
  CHECK(det_laplace(mat({{1, 1}, {1, 2}})) == 1);
  CHECK(det_laplace(mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 1);
  CHECK(det_laplace(mat({{2, 5}, {5, 14}})) == 3);
  CHECK_THROWS_AS(det_laplace(ExactMatrix::generate(8, [](std::size_t i, std::size_t j) { return Rational(i == j); })),
                  Refused);
  std::mt19937_64 rng(101);
  for (std::size_t n = 1; n <= 6; ++n)
    for (int t = 0; t < 10; ++t) {
      ExactMatrix m = random_rational_matrix(rng, n);
      CHECK(det_laplace(m) == oracle::leibniz_det(rows_of(m)));
    }
}

TEST_CASE("fraction-free elimination") {
  CHECK(det_fraction_free(build_hankel(SequenceSpec::catalan(), 3, 1)) == 1);
  CHECK(det_fraction_free(mat({{1, 2, 3}, {1, 2, 3}, {4, 5, 7}})) == 0);
  CHECK(det_fraction_free(mat({{0, 1}, {1, 0}})) == -1);
  CHECK_THROWS_AS(det_fraction_free(ExactMatrix::from_rows({{q("1/2")}})), DomainError);
  std::mt19937_64 rng(202);
  for (int t = 0; t < 20; ++t) {
    ExactMatrix m = random_matrix(rng, 6, -9, 9);
    CHECK(Rational(det_fraction_free(m)) == det_laplace(m));
  }
  // Zero pivots force row swaps.
  DetStats stats;
  CHECK(det_fraction_free(mat({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}), &stats) == -1);
  CHECK(stats.row_swaps >= 1);
}

TEST_CASE("rational elimination") {
  CHECK(det_rational_elim(build_thm10_matrix(Thm10Variant::E5_2, 2)) == 2);
  CHECK(det_rational_elim(build_thm10_matrix(Thm10Variant::E5_11, 1)) == q("7/2"));
  CHECK(det_rational_elim(mat({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}})) == -1);
  std::mt19937_64 rng(303);
  for (std::size_t n = 1; n <= 6; ++n)
    for (int t = 0; t < 10; ++t) {
      ExactMatrix m = random_rational_matrix(rng, n);
      CHECK(det_rational_elim(m) == det_laplace(m));
    }
}

TEST_CASE("condensation") {
  CHECK(det_condensation(build_hankel(SequenceSpec::catalan(), 4, 2)) == 5);
  std::mt19937_64 rng(404);
  for (int t = 0; t < 20; ++t) {
    ExactMatrix m = random_matrix(rng, 7, -5, 5);
    CHECK(det_condensation(m) == Rational(det_fraction_free(m)));
  }
}

TEST_CASE("condensation falls back when an interior minor vanishes") {
  // A 3x3 step divides only by the centre entry, so all-ones 3x3 condenses
  // without trouble; the 4x4 version has vanishing interior 2x2 minors.
  DetStats s3;
  CHECK(det_condensation(mat({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}), &s3) == 0);
  CHECK(s3.fallbacks == 0);

  DetStats s4;
  ExactMatrix ones4 = ExactMatrix::generate(4, [](std::size_t, std::size_t) { return Rational(1); });
  CHECK(det_condensation(ones4, &s4) == 0);
  CHECK(s4.fallbacks >= 1);

  DetStats sz;
  ExactMatrix zero_centre = mat({{2, 1, 3}, {1, 0, 1}, {4, 1, 1}});
  CHECK(det_condensation(zero_centre, &sz) == det_laplace(zero_centre));
  CHECK(sz.fallbacks >= 1);

  // Nonsingular matrix whose interior minors vanish.
  DetStats sp;
  ExactMatrix perm = mat({{0, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 0}});
  CHECK(det_condensation(perm, &sp) == -1);
  CHECK(sp.fallbacks >= 1);
}

TEST_CASE("dispatch") {
  ExactMatrix cat = build_hankel(SequenceSpec::catalan(), 4, 0);
  DetResult a = det(cat);
  CHECK(a.engine == Engine::FractionFreeElim);
  CHECK(a.value == 1);
  DetResult b = det(build_hankel({SequenceKind::Thm10C, 2}, 3, 0));
  CHECK(b.engine == Engine::RationalElim);
  for (Engine e : kAllEngines) {
    DetResult r = det(cat, e);
    CHECK(r.engine == e);
    CHECK(r.value == 1);
  }
  CHECK_THROWS_AS(det(ExactMatrix::from_rows({{q("1/3")}}), Engine::FractionFreeElim), DomainError);
}

TEST_CASE("engine names") {
  for (Engine e : kAllEngines) CHECK(parse_engine(to_string(e)) == e);
  CHECK(parse_engine("bareiss") == Engine::FractionFreeElim);
  CHECK(parse_engine("dodgson") == Engine::Condensation);
  CHECK_FALSE(parse_engine("gauss-jordan").has_value());
}

TEST_CASE("engines agree, property") {
  std::mt19937_64 rng(505);
  for (std::size_t n = 1; n <= 7; ++n) {
    for (int t = 0; t < 15; ++t) {
      ExactMatrix m = random_matrix(rng, n, -3, 3);
      const Rational ref = det_laplace(m);
      CHECK(Rational(det_fraction_free(m)) == ref);
      CHECK(det_rational_elim(m) == ref);
      CHECK(det_condensation(m) == ref);
    }
  }
}

TEST_CASE("determinant invariants") {
  std::mt19937_64 rng(606);
  for (std::size_t n = 2; n <= 6; ++n) {
    ExactMatrix m = random_rational_matrix(rng, n);
    auto rows = rows_of(m);
    const Rational d = det_rational_elim(m);

    auto transposed = rows;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) transposed[i][j] = rows[j][i];
    CHECK(det_rational_elim(ExactMatrix::from_rows(transposed)) == d);

    auto swapped = rows;
    std::swap(swapped[0], swapped[n - 1]);
    CHECK(det_rational_elim(ExactMatrix::from_rows(swapped)) == -d);

    auto scaled = rows;
    for (auto& v : scaled[1]) v *= q("-5/3");
    CHECK(det_rational_elim(ExactMatrix::from_rows(scaled)) == d * q("-5/3"));

    auto added = rows;
    for (std::size_t j = 0; j < n; ++j) added[0][j] += 7 * rows[1][j];
    CHECK(det_rational_elim(ExactMatrix::from_rows(added)) == d);
  }
}

#include "residuum/integer_squares.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "residuum/constructions.hpp"
#include "residuum/error.hpp"
#include "support/oracles.hpp"

using namespace residuum;

namespace {

Errc error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return Errc::internal;
}

const IntGrid kLoShu{{4, 9, 2, 3, 5, 7, 8, 1, 6}};
const IntGrid kSquares{{1, 4, 9, 16, 25, 36, 49, 64, 81}};

IntGrid scaled(const IntGrid& g, std::uint64_t k) {
  IntGrid out = g;
  for (auto& v : out.cells) v *= k;
  return out;
}

Mod2Class bits(std::array<std::uint8_t, 9> b) { return Mod2Class{b}; }

}  // namespace

TEST(IsMagic, Examples) {
  EXPECT_EQ(is_magic(kLoShu), 15u);
  EXPECT_EQ(is_magic(IntGrid{{1, 1, 1, 1, 1, 1, 1, 1, 1}}), 3u);
  EXPECT_FALSE(is_magic(IntGrid{{1, 2, 3, 4, 5, 6, 7, 8, 9}}));
  EXPECT_EQ(count_lines_with_sum(kLoShu, 15), 8);
  EXPECT_EQ(count_lines_with_sum(IntGrid{{1, 2, 3, 4, 5, 6, 7, 8, 9}}, 15), 4);
}

TEST(CheckTotalIsThreeCenters, Examples) {
  EXPECT_TRUE(check_total_is_three_centers(kLoShu));
  EXPECT_EQ(error_of([] { check_total_is_three_centers(kSquares); }), Errc::not_magic);
}

TEST(IsSquareEntried, Examples) {
  EXPECT_TRUE(is_square_entried(kSquares));
  EXPECT_FALSE(is_square_entried(kLoShu));
  EXPECT_TRUE(is_square_entried(IntGrid{}));
  EXPECT_TRUE(is_distinct(kSquares));
  EXPECT_FALSE(is_distinct(IntGrid{}));
}

TEST(Isqrt, ExactAtBoundaries) {
  EXPECT_EQ(isqrt(0), 0u);
  EXPECT_EQ(isqrt(15), 3u);
  EXPECT_EQ(isqrt(16), 4u);
  EXPECT_EQ(isqrt(~std::uint64_t{0}), 4294967295u);
  const std::uint64_t big = 4294967295ull * 4294967295ull;
  EXPECT_EQ(exact_sqrt(big), 4294967295u);
  EXPECT_FALSE(exact_sqrt(big - 1));
  for (std::uint64_t n = 0; n < 20000; ++n) {
    ASSERT_EQ(exact_sqrt(n).has_value(), oracle::is_square_int(n)) << n;
  }
}

TEST(ReducePrimitive, Examples) {
  EXPECT_EQ(reduce_primitive(scaled(kSquares, 4)), kSquares);
  EXPECT_EQ(reduce_primitive(kSquares), kSquares);
  EXPECT_EQ(reduce_primitive(scaled(kSquares, 36)), kSquares);
  EXPECT_EQ(error_of([] { reduce_primitive(IntGrid{}); }), Errc::all_zero);
  EXPECT_EQ(error_of([] { reduce_primitive(kLoShu); }), Errc::not_square_entried);
}

TEST(AdmissibleCenterCheck, Examples) {
  const auto c21 = admissible_center_check(21);
  ASSERT_EQ(c21.factors.size(), 2u);
  EXPECT_EQ(c21.factors[0].prime, 3u);
  EXPECT_FALSE(c21.factors[0].admissible);
  EXPECT_EQ(c21.factors[1].prime, 7u);
  EXPECT_FALSE(c21.factors[1].admissible);
  EXPECT_FALSE(c21.all_admissible());

  const auto c65 = admissible_center_check(65);
  ASSERT_EQ(c65.factors.size(), 2u);
  EXPECT_TRUE(c65.factors[0].admissible);
  EXPECT_TRUE(c65.factors[1].admissible);
  EXPECT_TRUE(c65.all_admissible());
  EXPECT_FALSE(c65.degenerate_center);

  const auto c1 = admissible_center_check(1);
  EXPECT_TRUE(c1.factors.empty());
  EXPECT_TRUE(c1.degenerate_center);
  EXPECT_TRUE(admissible_center_check(2).degenerate_center);
  EXPECT_TRUE(admissible_center_check(2).factors[0].admissible);
}

TEST(Factorize, Examples) {
  using F = std::vector<std::pair<std::uint64_t, unsigned>>;
  EXPECT_EQ(factorize(360), (F{{2, 3}, {3, 2}, {5, 1}}));
  EXPECT_EQ(factorize(999'999'999'989ULL), (F{{999'999'999'989ULL, 1}}));
  EXPECT_EQ(error_of([] { factorize(kMaxFactorInput + 1); }), Errc::out_of_range);
}

TEST(ResidueClassOf, Examples) {
  const auto g = residue_class_of(kSquares, make_context(5));
  EXPECT_EQ(g.cells(), (Cells{1, 4, 4, 1, 0, 1, 4, 4, 1}));
  const auto g2 = residue_class_of(kSquares, make_context(2));
  for (auto v : g2.cells()) EXPECT_LE(v, 1u);
  EXPECT_EQ(error_of([] { residue_class_of(kLoShu, make_context(5)); }),
            Errc::not_square_entried);
}

TEST(Mod2Classify, Examples) {
  const auto& pats = mod2_patterns();
  EXPECT_EQ(mod2_classify(scaled(kSquares, 4)), pats[0]);
  // Classical form with center 10, a = 2, b = 1.
  const IntGrid g{{9, 13, 8, 9, 10, 11, 12, 7, 11}};
  ASSERT_EQ(is_magic(g), 30u);
  EXPECT_EQ(mod2_classify(g), bits({1, 1, 0, 1, 0, 1, 0, 1, 1}));
  EXPECT_EQ(error_of([] { mod2_classify(kSquares); }), Errc::odd_center);
  EXPECT_EQ(error_of([] { mod2_classify(IntGrid{{1, 0, 0, 0, 0, 0, 0, 0, 0}}); }),
            Errc::unexpected_pattern);
}

TEST(KleinGroup, Table) {
  const auto& pats = mod2_patterns();
  const auto table = klein_group_table();
  EXPECT_EQ(pats[1] ^ pats[1], pats[0]);
  EXPECT_EQ(pats[1] ^ pats[2], pats[3]);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(table[0][i], pats[i]);
    EXPECT_EQ(table[i][i], pats[0]);
    for (std::size_t j = 0; j < 4; ++j) {
      EXPECT_NE(std::find(pats.begin(), pats.end(), table[i][j]), pats.end());
      EXPECT_EQ(table[i][j], table[j][i]);
    }
  }
}

TEST(HasEvenCenterLine, Examples) {
  for (const auto& m : mod2_patterns()) EXPECT_TRUE(has_even_center_line(m));
  EXPECT_FALSE(has_even_center_line(bits({1, 1, 1, 1, 1, 1, 1, 1, 1})));
  EXPECT_TRUE(has_even_center_line(bits({1, 0, 1, 1, 0, 1, 1, 0, 1})));
}

// Properties.

TEST(IntegerSquaresProperty, TotalIsThreeCentersOnClassicalGrids) {
  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<std::int64_t> param(-1000, 1000);
  int tested = 0;
  while (tested < 20000) {
    const std::int64_t c = 3000 + param(rng);
    const auto g = oracle::classical_magic(c, param(rng), param(rng));
    const IntGrid grid{g};
    const auto t = is_magic(grid);
    ASSERT_TRUE(t.has_value());
    ASSERT_EQ(*t, 3 * grid.center());
    ASSERT_TRUE(check_total_is_three_centers(grid));
    ++tested;
  }
}

TEST(IntegerSquaresProperty, ReducePrimitiveIsIdempotent) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> root(0, 400);
  std::uniform_int_distribution<std::uint64_t> factor(1, 30);
  for (int k = 0; k < 2000; ++k) {
    IntGrid g;
    for (auto& v : g.cells) v = root(rng) * root(rng);
    for (auto& v : g.cells) v = exact_sqrt(v) ? v : isqrt(v) * isqrt(v);
    if (g == IntGrid{}) continue;
    const auto f = factor(rng);
    const auto r = reduce_primitive(scaled(g, f * f));
    ASSERT_EQ(cell_gcd(r), 1u);
    ASSERT_TRUE(is_square_entried(r));
    ASSERT_EQ(reduce_primitive(r), r);
  }
}

TEST(IntegerSquaresProperty, MagicGridsReduceToZeroSumClassesModCenterPrimes) {
  // A progression z^2, y^2, x^2 of squares gives a square-entried (but not
  // distinct) magic grid with center y^2. Reduce it mod each prime factor
  // of y, and mod p after scaling by p^2 for small p.
  int checked = 0;
  for (std::uint64_t m = 2; m <= 20; ++m) {
    for (std::uint64_t n = 1; n < m; ++n) {
      const auto s = congruum_triple(m, n);
      const std::uint64_t x2 = s.x * s.x, y2 = s.y * s.y, z2 = s.z * s.z;
      const IntGrid g{{z2, x2, y2, x2, y2, z2, y2, z2, x2}};
      ASSERT_EQ(is_magic(g), 3 * y2);
      ASSERT_TRUE(is_square_entried(g));
      for (const auto& [p, mult] : factorize(s.y)) {
        if (p > 1000) continue;
        const auto rg = residue_class_of(g, make_context(p));
        ASSERT_EQ(rg.center(), 0u);
        ASSERT_EQ(is_magic_class(rg), 0u) << m << "," << n << " p=" << p;
        ++checked;
      }
      for (std::uint64_t p : {2, 3, 5, 7}) {
        ASSERT_EQ(is_magic_class(residue_class_of(scaled(g, p * p), make_context(p))), 0u);
      }
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(IntegerSquaresProperty, Mod2ClassifyCompleteOnParityConsistentGrids) {
  // Every magic grid with even center reduces to one of the four patterns.
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::int64_t> param(-500, 500);
  for (int k = 0; k < 20000; ++k) {
    const std::int64_t c = 2 * (1000 + param(rng));
    const IntGrid g{oracle::classical_magic(c, param(rng), param(rng))};
    const auto m = mod2_classify(g);
    ASSERT_TRUE(has_even_center_line(m));
  }
}

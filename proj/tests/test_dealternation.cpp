#include <gtest/gtest.h>

#include <random>

#include "cosmetic/dealternation.hpp"
#include "oracles.hpp"

using namespace cosmetic;

TEST(Violations, Examples)
{
  EXPECT_EQ(violations(parse_braid("1 2 -1"), Pattern::PlusOdd), 2);
  EXPECT_EQ(violations(parse_braid("1 1 1"), Pattern::PlusOdd), 0);
  EXPECT_EQ(violations(parse_braid("1 1 1"), Pattern::MinusOdd), 3);
  EXPECT_EQ(violations(BraidWord(3), Pattern::MinusOdd), 0);
}

TEST(BandCost, Examples)
{
  auto c13 = band_alternating_cost(1, 3, 4, 1, Pattern::PlusOdd);
  EXPECT_EQ(c13.cost, 1);
  EXPECT_EQ(violations(expand_band(1, 3, 4, 1), Pattern::PlusOdd), 2);
  EXPECT_TRUE(oracle::braid_equal(c13.word, expand_band(1, 3, 4, 1)));

  auto c24 = band_alternating_cost(2, 4, 4, 1, Pattern::PlusOdd);
  EXPECT_EQ(c24.cost, 1);
  EXPECT_EQ(c24.word, parse_braid("2 3 -2", 4));

  auto c14 = band_alternating_cost(1, 4, 4, 1, Pattern::PlusOdd);
  EXPECT_EQ(c14.cost, 2);
  EXPECT_EQ(c14.word, parse_braid("1 2 3 -2 -1", 4));

  EXPECT_THROW(band_alternating_cost(1, 2, 3, 1, Pattern::PlusOdd), std::invalid_argument);
  EXPECT_THROW(band_alternating_cost(2, 2, 4, 1, Pattern::PlusOdd), std::out_of_range);
}

TEST(BandCost, SecondSeedIsTheSameBraid)
{
  // (s_{j-1}^-1 ... s_{i+1}^-1) s_i^e (s_{i+1} ... s_{j-1}) equals a_{i,j}^e
  for (int n = 3; n <= 7; ++n)
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int s : {1, -1})
          EXPECT_TRUE(oracle::braid_equal(detail::band_right_form(i, j, n, s), expand_band(i, j, n, s)))
              << i << "," << j << " n=" << n;
  // the all-positive conjugate s2 s1 s2^-1 is a different braid from a_{1,3}
  EXPECT_FALSE(oracle::braid_equal(parse_braid("2 1 -2"), expand_band(1, 3, 3, 1)));
}

TEST(BandCost, RewriteMovesAreIdentities)
{
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 3 + static_cast<int>(rng() % 4);
    auto w = oracle::random_braid(rng, n, 3 + static_cast<int>(rng() % 6));
    auto code = detail::encode(w);
    for (const auto& next : detail::rewrite_neighbours(code)) {
      BraidWord v(n, detail::decode(next));
      EXPECT_TRUE(oracle::braid_equal(v, w)) << w.to_string() << " -> " << v.to_string();
    }
  }
}

TEST(BandCost, ExhaustiveBoundsAndRepresentatives)
{
  for (int n = 4; n <= 8; ++n)
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int s : {1, -1})
          for (Pattern p : {Pattern::PlusOdd, Pattern::MinusOdd}) {
            auto seed = expand_band(i, j, n, s);
            auto c = band_alternating_cost(i, j, n, s, p);
            int limit = (i == 1 && j == n) ? n - 2 : n - 3;
            EXPECT_LE(c.cost, limit) << "n=" << n << " (" << i << "," << j << ") sign " << s << " " << pattern_name(p);
            EXPECT_EQ(c.cost, violations(c.word, p));
            EXPECT_EQ(permutation(c.word), permutation(seed));
            EXPECT_EQ(writhe(c.word), writhe(seed));
            if (n <= 6) {
              EXPECT_TRUE(oracle::braid_equal(c.word, seed)) << c.word.to_string();
            }
          }
}

TEST(Gamma, Words)
{
  EXPECT_EQ(gamma_word(1, 3, 5), parse_braid("1 2 3", 5));
  EXPECT_EQ(gamma_word(3, 1, 5), parse_braid("3 2 1", 5));
  EXPECT_EQ(gamma_word(2, 2, 5), parse_braid("2", 5));
  EXPECT_THROW(gamma_word(0, 2, 5), std::out_of_range);
  EXPECT_THROW(gamma_word(1, 5, 5), std::out_of_range);
}

TEST(Gamma, Costs)
{
  EXPECT_EQ(gamma_alternating_cost(1, 3, 5), 1);
  EXPECT_EQ(gamma_alternating_cost(2, 2, 5), 0);
  EXPECT_EQ(gamma_alternating_cost(1, 2, 4), 1);
  EXPECT_THROW(gamma_alternating_cost(1, 3, 4), std::out_of_range);
  for (int n = 4; n <= 9; ++n)
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j) {
        if (std::abs(i - j) > n - 3) continue;
        int c = gamma_alternating_cost(i, j, n);
        EXPECT_LE(c, (n - 2) / 2);
        if (n % 2 == 1) {
          EXPECT_LE(2 * c, n - 3);
        }
        auto inv = gamma_word(i, j, n).inverse();
        EXPECT_EQ(std::min(violations(inv, Pattern::PlusOdd), violations(inv, Pattern::MinusOdd)), c);
      }
}

TEST(DealternationWord, Examples)
{
  auto r = dealternation_upper_word(parse_bands("(1,2) (2,3) (3,4)"));
  EXPECT_EQ(r.total, 1);
  EXPECT_EQ(r.pattern, Pattern::PlusOdd);
  EXPECT_EQ(r.formula, 3);

  auto g2 = dealternation_upper_word(parse_bands("(1,4) (1,4) (1,2) (2,3) (3,4) (1,2) (2,3)"));
  EXPECT_EQ(g2.formula, 8);
  EXPECT_EQ(g2.wrap_count, 1);
  EXPECT_LE(g2.total, g2.formula);
  EXPECT_LE(Rational(g2.formula), thm4_bound(2, 4).exact);
  EXPECT_EQ(thm4_bound(2, 4).exact, Rational(35, 4));

  EXPECT_THROW(dealternation_upper_word(parse_bands("(1,2) (1,2) (1,2)")), std::invalid_argument);
  EXPECT_THROW(dealternation_upper_word(parse_bands("(1,2) (1,2) (3,4)")), std::invalid_argument);
}

TEST(DealternationWord, RandomKnotWords)
{
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 150; ++trial) {
    int n = 4 + static_cast<int>(rng() % 3);
    int g = static_cast<int>(rng() % 4);
    auto b = oracle::random_knot_band_word(rng, n, g);
    auto r = dealternation_upper_word(b);
    int genus = bennequin_genus(b);
    EXPECT_EQ(genus, g);
    EXPECT_LE(r.total, r.formula);
    EXPECT_LE(Rational(r.formula), thm4_bound(genus, n).exact);
    int sum = 0;
    for (const auto& c : r.bands) sum += c.cost;
    EXPECT_EQ(sum, r.total);
    auto alt = r.alternating_word();
    EXPECT_EQ(is_alternating_word(alt), alt.empty() ? std::optional<Pattern>(Pattern::PlusOdd) : std::optional<Pattern>(r.pattern));
    // flipping exactly `total` letters of the concatenated representatives
    BraidWord concat(n);
    for (const auto& c : r.bands) concat *= c.word;
    int flips = 0;
    for (std::size_t k = 0; k < concat.size(); ++k) flips += concat.letters()[k] == alt.letters()[k] ? 0 : 1;
    EXPECT_EQ(flips, r.total);
    for (std::size_t k = 0; k < r.bands.size(); ++k) {
      const auto& band = r.word.bands()[k];
      EXPECT_TRUE(oracle::braid_equal(r.bands[k].word, expand_band(band.i, band.j, n, band.sign)));
    }
  }
}

TEST(Thm4Bound, Values)
{
  EXPECT_EQ(thm4_bound(3, 4).exact, Rational(45, 4));
  EXPECT_EQ(thm4_bound(3, 4).floor, 11);
  EXPECT_EQ(thm4_bound(2, 4).floor, 8);
  EXPECT_EQ(thm4_bound(1, 4).exact, Rational(25, 4));
  EXPECT_EQ(thm4_bound(1, 4).floor, 6);
  EXPECT_THROW(thm4_bound(3, 3), std::invalid_argument);
  EXPECT_EQ(to_string(Rational(45, 4)), "45/4");
  EXPECT_EQ(floor_of(Rational(-1, 2)), -1);
}

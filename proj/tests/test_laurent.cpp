#include <gtest/gtest.h>

#include <cstdint>
#include <limits>

#include "cosmetic/laurent.hpp"

using namespace cosmetic;

TEST(Laurent, ArithmeticDropsZeros)
{
  LaurentPoly a(Variable::A, {{2, -1}, {-2, -1}});
  LaurentPoly b(Variable::A, {{2, 1}});
  auto s = a + b;
  EXPECT_EQ(s, LaurentPoly(Variable::A, {{-2, -1}}));
  EXPECT_EQ(s.terms().size(), 1u);
  EXPECT_TRUE((a - a).is_zero());
  auto sq = a * a;
  EXPECT_EQ(sq, LaurentPoly(Variable::A, {{4, 1}, {0, 2}, {-4, 1}}));
}

TEST(Laurent, TextForms)
{
  LaurentPoly v(Variable::t, {{4, -1}, {3, 1}, {1, 1}});
  EXPECT_EQ(v.to_string(), "-t^4+t^3+t");
  EXPECT_EQ(v.span(), 3);
  EXPECT_EQ(v.term_list(), (std::vector<std::string>{"1*t^1", "1*t^3", "-1*t^4"}));
  EXPECT_EQ(LaurentPoly(Variable::t, {{0, 1}}).to_string(), "1");
  EXPECT_EQ(LaurentPoly(Variable::A, {{-3, 2}, {0, -5}}).to_string(), "-5+2A^-3");
  EXPECT_EQ(LaurentPoly().to_string(), "0");
}

TEST(Laurent, Substitution)
{
  LaurentPoly f(Variable::A, {{-16, -1}, {-12, 1}, {-4, 1}});
  auto v = f.substitute(-4, true, Variable::t);
  EXPECT_EQ(v, LaurentPoly(Variable::t, {{4, -1}, {3, 1}, {1, 1}}));
  EXPECT_THROW(LaurentPoly(Variable::A, {{2, 1}}).substitute(4, true, Variable::t), std::domain_error);
}

TEST(Laurent, OverflowIsAnError)
{
  const auto big = std::numeric_limits<std::int64_t>::max();
  LaurentPoly a(Variable::A, {{0, big}});
  EXPECT_THROW(a + a, std::overflow_error);
  EXPECT_THROW(a * a, std::overflow_error);
  EXPECT_THROW(LaurentPoly().span(), std::domain_error);
}

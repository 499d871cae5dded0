#include "dtriple/classify.hpp"
#include "dtriple/enumerate.hpp"
#include "dtriple/nabla.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

namespace dtriple {
namespace {

const FiniteTriple kE0{0, 0, 0};

TEST(BuildNormalizer, Table1Members) {
  auto na = build_normalizer(table1_algebra());
  EXPECT_TRUE(na.contains({0, 2, 4}));
  EXPECT_TRUE(na.contains({0, 1, 3}));
  EXPECT_FALSE(na.contains({1, 2, 4}));
  EXPECT_EQ(na.size(), 19u);
  EXPECT_TRUE(std::is_sorted(na.triples().begin(), na.triples().end()));
}

TEST(BuildNormalizer, SingletonAlgebra) {
  auto na = build_normalizer(FiniteAlgebra(1, {0}));
  ASSERT_EQ(na.size(), 1u);
  EXPECT_EQ(na.triples()[0], kE0);
}

TEST(BuildNormalizer, TruncatedOrderAlgebraIsMonotoneTriples) {
  auto na = build_normalizer(truncated_order_algebra(3));
  std::vector<FiniteTriple> expect;
  for (Element a = 0; a < 3; ++a)
    for (Element b = a; b < 3; ++b)
      for (Element c = b; c < 3; ++c) expect.push_back({a, b, c});
  EXPECT_EQ(na.triples(), expect);
  EXPECT_EQ(na.size(), 10u);
}

TEST(BuildNormalizer, MatchesDefinitionOnRandomTables) {
  for (int i = 0; i < 100; ++i) {
    auto a = testing::random_table(1 + i % 5);
    auto na = build_normalizer(a);
    std::size_t count = 0;
    for (Element x = 0; x < a.size(); ++x)
      for (Element y = 0; y < a.size(); ++y)
        for (Element z = 0; z < a.size(); ++z) {
          const bool member = a.op(x, y) == 0 && a.op(y, z) == 0;
          EXPECT_EQ(na.contains({x, y, z}), member);
          count += member;
        }
    EXPECT_EQ(na.size(), count);
  }
}

TEST(Epsilon, Projection) {
  EXPECT_EQ(epsilon(Element{0}), kE0);
  auto na = build_normalizer(table1_algebra());
  EXPECT_TRUE(na.contains(epsilon(Element{3})));
  for (Element x = 0; x < 5; ++x) {
    auto o = na.star(epsilon(x), epsilon(x));
    ASSERT_TRUE(o.defined);
    EXPECT_EQ(o.result, kE0);
  }
}

TEST(Star, Table1WorkedValues) {
  auto na = build_normalizer(table1_algebra());
  auto defined = na.star({0, 2, 4}, {0, 1, 3});
  ASSERT_TRUE(defined.defined);
  EXPECT_EQ(defined.result, (FiniteTriple{0, 2, 4}));

  // (1*2)*(3*0) = 2*3 = 3
  auto undefined = na.star({0, 1, 3}, {0, 2, 4});
  EXPECT_FALSE(undefined.defined);
  EXPECT_EQ(undefined.failed_equation, 2);
  EXPECT_EQ(undefined.value, 3u);
  EXPECT_EQ(undefined.result, (FiniteTriple{0, 2, 3}));

  auto self = na.star({0, 2, 4}, {0, 2, 4});
  ASSERT_TRUE(self.defined);
  EXPECT_EQ(self.result, (FiniteTriple{0, 0, 4}));
  EXPECT_NE(self.result, kE0);
}

TEST(Star, FirstEquationFailure) {
  // Table 1: (1,1,1)*(0,0,2) = (1*2, 1*0, 1*0) = (2,1,1); 2*1 = 2.
  auto na = build_normalizer(table1_algebra());
  auto o = na.star({1, 1, 1}, {0, 0, 2});
  EXPECT_FALSE(o.defined);
  EXPECT_EQ(o.failed_equation, 1);
  EXPECT_EQ(o.value, 2u);
}

TEST(Star, DefinedResultsAreMembers) {
  for (int i = 0; i < 50; ++i) {
    auto na = build_normalizer(testing::random_table(1 + i % 4));
    for (std::size_t p = 0; p < na.size(); ++p)
      for (std::size_t q = 0; q < na.size(); ++q) {
        auto o = na.star(p, q);
        EXPECT_EQ(o.defined, na.contains(o.result));
      }
  }
}

TEST(Star, RejectsNonMembers) {
  auto na = build_normalizer(table1_algebra());
  EXPECT_THROW(na.star({1, 2, 4}, {0, 0, 0}), std::invalid_argument);
  EXPECT_THROW(na.star({0, 0, 0}, {9, 0, 0}), std::invalid_argument);
  EXPECT_THROW(na.diameter({1, 2, 4}), std::invalid_argument);
  EXPECT_THROW(na.strict_less({1, 2, 4}, {0, 0, 0}), std::invalid_argument);
}

TEST(Diameter, Examples) {
  auto na = build_normalizer(table1_algebra());
  for (Element x = 0; x < 5; ++x) EXPECT_EQ(na.diameter(epsilon(x)), 0u);
  EXPECT_EQ(na.diameter({0, 2, 4}), 4u);  // 4*0

  FormulaAlgebra f;
  for (int i = 0; i < 100; ++i) {
    auto x = testing::random_rational();
    EXPECT_EQ(diameter_of(f, RationalTriple{0, 0, x}), x * x);
    EXPECT_EQ(diameter_of(f, RationalTriple{0, x, x}), x * x);
  }

  auto chain = build_normalizer(bck_chain2());
  EXPECT_EQ(chain.diameter({0, 1, 1}), 1u);
}

TEST(StrictLess, Examples) {
  auto na = build_normalizer(table1_algebra());
  for (const auto& t : na.triples()) {
    if (t != kE0) {
      EXPECT_TRUE(na.strict_less(kE0, t));
    }
    EXPECT_FALSE(na.strict_less(t, t));
  }
  EXPECT_TRUE(na.strict_less({0, 1, 3}, {3, 3, 3}));
}

TEST(FormulaStar, WorkedValues) {
  FormulaAlgebra f;
  auto o = star_product(f, RationalTriple{0, 0, 2}, RationalTriple{0, 3, 3});
  ASSERT_TRUE(o.defined);
  EXPECT_EQ(o.result, (RationalTriple{0, 0, 4}));
  EXPECT_NE(o.result, epsilon(Rational(0)));

  // The same arithmetic on (0,0,3) gives (0,0,9), so (0,0,3) < (0,3,3) does not hold.
  auto p = star_product(f, RationalTriple{0, 0, 3}, RationalTriple{0, 3, 3});
  ASSERT_TRUE(p.defined);
  EXPECT_EQ(p.result, (RationalTriple{0, 0, 9}));
}

TEST(RationalMembership, Examples) {
  EXPECT_TRUE(rational_nabla_membership(0, Rational(5, 2), Rational(5, 2)));
  EXPECT_TRUE(rational_nabla_closed_form(0, Rational(5, 2), Rational(5, 2)));
  EXPECT_FALSE(rational_nabla_membership(2, 2, 0));  // 2*0 = 4
  EXPECT_FALSE(rational_nabla_closed_form(2, 2, 0));
  EXPECT_EQ(FormulaAlgebra::op(2, 0), 4);
  for (int i = 0; i < 100; ++i) {
    auto x = testing::random_rational();
    EXPECT_TRUE(rational_nabla_membership(x, x, x));
  }
}

TEST(RationalMembership, TwoRoutesAgreeOnGrid) {
  std::vector<Rational> vals{0, 1, -1, 2, Rational(1, 2), Rational(-3, 4), 5, Rational(7, 3), -6, Rational(5, 2), 3};
  std::size_t members = 0;
  std::size_t checked = 0;
  for (const auto& a : vals)
    for (const auto& b : vals)
      for (const auto& c : vals) {
        const bool eq = rational_nabla_membership(a, b, c);
        EXPECT_EQ(eq, rational_nabla_closed_form(a, b, c)) << a << " " << b << " " << c;
        members += eq;
        ++checked;
      }
  EXPECT_EQ(checked, 1331u);
  // |{(x,x,x)}| + |{(0,x,x)}| + |{(0,0,x)}| minus the overlaps at 0: 11 + 11 + 11 - 2.
  EXPECT_EQ(members, 31u);
}

// Structural facts over every d-algebra of order 3, checked directly.
TEST(NormalizerUniverse, EpsilonSubalgebraAndUnitLaws) {
  EnumSpec spec;
  spec.n = 3;
  for_each_d_algebra(spec, [](const FiniteAlgebra& a) {
    auto na = build_normalizer(a);
    const bool edge = is_edge(a).holds;
    for (Element x = 0; x < 3; ++x)
      for (Element y = 0; y < 3; ++y) {
        auto o = na.star(epsilon(x), epsilon(y));
        ASSERT_TRUE(o.defined);
        EXPECT_EQ(o.result, epsilon(a.op(x, y)));
      }
    for (const auto& t : na.triples()) {
      auto l = na.star(kE0, t);
      EXPECT_TRUE(l.defined && l.result == kE0);
      if (edge) {
        auto r = na.star(t, kE0);
        EXPECT_TRUE(r.defined && r.result == t);
      }
    }
  });
}

}  // namespace
}  // namespace dtriple

#include "dtriple/classify.hpp"
#include "dtriple/enumerate.hpp"
#include "dtriple/order.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

namespace dtriple {
namespace {

using W = std::vector<Element>;

TEST(CheckAxioms, Table1IsDAlgebraButNotDStar) {
  auto r = check_axioms(table1_algebra());
  EXPECT_TRUE(r.holds(Flag::d_algebra));
  EXPECT_FALSE(r.holds(Flag::d_star));
  // (1*2)*1 = 2*1 = 2
  EXPECT_EQ(r[Flag::IV].witness, (W{1, 2}));
  EXPECT_EQ(r[Flag::d_star].witness, (W{1, 2}));
  EXPECT_FALSE(r.holds(Flag::bck));
}

TEST(CheckAxioms, TruncatedOrderAlgebraFailsBckAtSix) {
  auto r = check_axioms(truncated_order_algebra(3));
  EXPECT_TRUE(r.holds(Flag::d_algebra));
  EXPECT_TRUE(r.holds(Flag::V));
  EXPECT_FALSE(r.holds(Flag::VI));
  EXPECT_EQ(r[Flag::VI].witness, (W{2, 0}));
  EXPECT_FALSE(r.holds(Flag::bck));
  EXPECT_EQ(r[Flag::bck].witness, (W{2, 0}));
}

TEST(CheckAxioms, WitnessPresentExactlyOnFailure) {
  for (int i = 0; i < 200; ++i) {
    auto r = check_axioms(testing::random_table(1 + i % 5));
    for (const auto& f : r.flags) EXPECT_EQ(f.holds, f.witness.empty());
  }
}

TEST(CheckAxioms, ClassFlagsAreConjunctions) {
  for (int i = 0; i < 300; ++i) {
    auto r = check_axioms(testing::random_table(1 + i % 4));
    const bool d = r.holds(Flag::I) && r.holds(Flag::II) && r.holds(Flag::III);
    EXPECT_EQ(r.holds(Flag::d_algebra), d);
    EXPECT_EQ(r.holds(Flag::d_star), d && r.holds(Flag::IV));
    EXPECT_EQ(r.holds(Flag::bck), d && r.holds(Flag::V) && r.holds(Flag::VI));
  }
}

TEST(CheckAxioms, WitnessesAreLexicographicallyMinimal) {
  // Brute-force the first (x,y,z) failing (V) and compare.
  for (int i = 0; i < 200; ++i) {
    auto a = testing::random_table(4);
    auto r = check_axioms(a);
    W expect;
    for (Element x = 0; x < 4 && expect.empty(); ++x)
      for (Element y = 0; y < 4 && expect.empty(); ++y)
        for (Element z = 0; z < 4 && expect.empty(); ++z)
          if (a.op(a.op(a.op(x, y), a.op(x, z)), a.op(z, y)) != 0) expect = {x, y, z};
    EXPECT_EQ(r[Flag::V].witness, expect);
    EXPECT_EQ(check_axioms(a)[Flag::V].witness, r[Flag::V].witness);
  }
}

TEST(IsEdge, Examples) {
  auto e = is_edge(truncated_order_algebra(3));
  EXPECT_FALSE(e.holds);
  EXPECT_EQ(e.witness, (W{2, 1}));  // 2*0 = 1, not in {2,0}

  auto t = is_edge(table1_algebra());
  EXPECT_FALSE(t.holds);
  EXPECT_EQ(t.witness, (W{1, 2}));  // 1*2 = 2

  EXPECT_TRUE(is_edge(bck_chain2()).holds);
  // Row 1 never takes the value 1.
  auto missing = is_edge(FiniteAlgebra::from_rows({{0, 0}, {0, 0}}));
  EXPECT_FALSE(missing.holds);
  EXPECT_EQ(missing.witness, (W{1}));
}

TEST(IsEdge, PosetInducedTablesAreEdge) {
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_TRUE(is_edge(induce_bck(Relation::chain(n))).holds);
}

TEST(IsDTransitive, Examples) {
  for (std::size_t n = 2; n <= 7; ++n) EXPECT_TRUE(is_d_transitive(truncated_order_algebra(n)).holds);
  EXPECT_TRUE(is_d_transitive(FiniteAlgebra(1, {0})).holds);
  // Exhaustive scan of the 125 triples of Table 1 finds no failure.
  EXPECT_TRUE(is_d_transitive(table1_algebra()).holds);
  // 1*2 = 0, 2*3 = 0 but 1*3 = 1.
  auto a = FiniteAlgebra::from_rows({{0, 0, 0, 0}, {1, 0, 0, 1}, {2, 2, 0, 0}, {3, 0, 3, 0}});
  auto r = is_d_transitive(a);
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.witness, (W{1, 2, 3}));
}

TEST(FormulaAxioms, RefutationsOnGrids) {
  auto small = check_formula_axioms(SampleGrid::parse("0,1,2"));
  EXPECT_TRUE(small.refutation_only);
  EXPECT_TRUE(small.holds(Flag::I));
  EXPECT_TRUE(small.holds(Flag::II));
  EXPECT_TRUE(small.holds(Flag::III));
  EXPECT_TRUE(small.holds(Flag::d_algebra));
  ASSERT_FALSE(small.holds(Flag::IV));
  // Lexicographically first in grid order is x=1, y=2: 1*2 = -1, (-1)*1 = 2.
  EXPECT_EQ(small[Flag::IV].witness, (std::vector<Rational>{1, 2}));

  // The pair (2,0) also refutes (IV): (2*0)*2 = 4*(4-2) = 8.
  FormulaAlgebra f;
  EXPECT_EQ(f.op(f.op(2, 0), 2), 8);

  auto r = check_formula_axioms(SampleGrid::parse("0,2,1,3"));
  ASSERT_FALSE(r.holds(Flag::IV));
  EXPECT_EQ(r[Flag::IV].witness, (std::vector<Rational>{2, 0}));
  ASSERT_FALSE(r.holds(Flag::IX));
  EXPECT_EQ(r[Flag::IX].witness, (std::vector<Rational>{2}));  // 2*0 = 4

  auto natural = check_formula_axioms(SampleGrid::parse("0,1,2,3"));
  EXPECT_EQ(natural[Flag::IX].witness, (std::vector<Rational>{2}));  // 1*0 = 1 passes
}

TEST(FormulaAxioms, OneAndTwoNeverRefuted) {
  std::vector<Rational> vals{0};
  for (int i = 0; i < 40; ++i) {
    auto v = testing::random_rational();
    if (std::find(vals.begin(), vals.end(), v) == vals.end()) vals.push_back(v);
  }
  auto r = check_formula_axioms(SampleGrid(vals));
  EXPECT_TRUE(r.holds(Flag::I));
  EXPECT_TRUE(r.holds(Flag::II));
  EXPECT_TRUE(r.holds(Flag::III));
}

// Invariants over every d-algebra of order <= 4.
class ClassifyUniverse : public ::testing::TestWithParam<std::size_t> {};

TEST_P(ClassifyUniverse, DerivedAxiomsAndEdgeTheorems) {
  EnumSpec spec;
  spec.n = GetParam();
  std::size_t edge_v_failures = 0;
  for_each_d_algebra(spec, [&](const FiniteAlgebra& a) {
    auto r = check_axioms(a);
    if (r.holds(Flag::bck)) {
      for (Flag f : {Flag::VII, Flag::VIII, Flag::IX, Flag::X}) EXPECT_TRUE(r.holds(f));
    }
    if (r.holds(Flag::edge)) {
      EXPECT_TRUE(r.holds(Flag::IX));
      if (!r.holds(Flag::V)) ++edge_v_failures;
      if (r.holds(Flag::d_transitive)) {
        EXPECT_TRUE(r.holds(Flag::bck));
      }
    }
    auto c = check_axioms(canonical_form(a));
    for (std::size_t i = 0; i < kFlagCount; ++i) EXPECT_EQ(c.flags[i].holds, r.flags[i].holds);
  });
  // Edge alone does not force (V): counterexamples first appear at order 4.
  EXPECT_EQ(edge_v_failures, GetParam() == 4 ? 8u : 0u);
}

INSTANTIATE_TEST_SUITE_P(Orders, ClassifyUniverse, ::testing::Values(2, 3, 4));

TEST(ClassifyUniverse, EdgeWithoutVCounterexample) {
  auto a = FiniteAlgebra::from_rows({{0, 0, 0, 0}, {1, 0, 0, 1}, {2, 2, 0, 0}, {3, 0, 3, 0}});
  auto r = check_axioms(a);
  EXPECT_TRUE(r.holds(Flag::d_algebra));
  EXPECT_TRUE(r.holds(Flag::edge));
  EXPECT_FALSE(r.holds(Flag::V));
  EXPECT_EQ(r[Flag::V].witness, (W{1, 3, 2}));
}

}  // namespace
}  // namespace dtriple

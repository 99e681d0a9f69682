#include <gtest/gtest.h>

#include <random>

#include "imlab/formula.hpp"

using namespace imlab;

namespace {

Formula p() { return Formula::prop("p"); }
Formula q() { return Formula::prop("q"); }
Formula r() { return Formula::prop("r"); }

Formula random_formula(std::mt19937& rng, int budget) {
  std::uniform_int_distribution<int> pick(0, budget <= 0 ? 2 : 8);
  switch (pick(rng)) {
    case 0: return Formula::bottom();
    case 1: return p();
    case 2: return q();
    case 3: return Formula::conj(random_formula(rng, budget - 1), random_formula(rng, budget - 1));
    case 4: return Formula::disj(random_formula(rng, budget - 1), random_formula(rng, budget - 1));
    case 5: return Formula::impl(random_formula(rng, budget - 1), random_formula(rng, budget - 1));
    case 6: return Formula::box(random_formula(rng, budget - 1));
    case 7: return Formula::diamond(random_formula(rng, budget - 1));
    default: return Formula::neg(random_formula(rng, budget - 1));
  }
}

}  // namespace

TEST(Parse, SingleImplication) { EXPECT_EQ(parse("p -> q"), Formula::impl(p(), q())); }

TEST(Parse, DiamondDistribution) {
  Formula dp = Formula::impl(Formula::diamond(Formula::disj(p(), q())),
                             Formula::disj(Formula::diamond(p()), Formula::diamond(q())));
  EXPECT_EQ(parse("<>(p | q) -> <>p | <>q"), dp);
}

TEST(Parse, PrecedenceTable) {
  Formula expected = Formula::impl(Formula::box(p()), Formula::disj(p(), Formula::conj(Formula::neg(q()), r())));
  EXPECT_EQ(parse("[] p -> p | !q & r"), expected);
}

TEST(Parse, ImplicationIsRightAssociative) {
  EXPECT_EQ(parse("p -> q -> r"), Formula::impl(p(), Formula::impl(q(), r())));
}

TEST(Parse, ConjunctionIsLeftAssociative) {
  EXPECT_EQ(parse("p & q & r"), Formula::conj(Formula::conj(p(), q()), r()));
  EXPECT_EQ(parse("p | q | r"), Formula::disj(Formula::disj(p(), q()), r()));
}

TEST(Parse, SugarDesugars) {
  EXPECT_EQ(parse("true"), Formula::impl(Formula::bottom(), Formula::bottom()));
  EXPECT_EQ(parse("!p"), Formula::impl(p(), Formula::bottom()));
  EXPECT_EQ(parse("false"), Formula::bottom());
}

TEST(Parse, WhitespaceInsignificant) { EXPECT_EQ(parse("  []p->q"), parse("[]p -> q")); }

TEST(Parse, ErrorReportsOffsetAndExpected) {
  try {
    parse("p & ");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 4U);
    EXPECT_FALSE(e.expected().empty());
  }
  EXPECT_THROW(parse("p q"), ParseError);
  EXPECT_THROW(parse("(p"), ParseError);
  EXPECT_THROW(parse(""), ParseError);
  EXPECT_THROW(parse("p -> "), ParseError);
  EXPECT_THROW(parse("p $ q"), ParseError);
}

TEST(Parse, UppercaseIdentifiersAreMetavariables) {
  Formula a = parse("A -> p");
  EXPECT_TRUE(a.lhs().is_metavariable());
  EXPECT_FALSE(a.rhs().is_metavariable());
}

TEST(Prop, RejectsBadNames) {
  EXPECT_THROW(Formula::prop(""), Error);
  EXPECT_THROW(Formula::prop("1p"), Error);
  EXPECT_THROW(Formula::prop("true"), Error);
}

TEST(Render, Simple) {
  EXPECT_EQ(render(Formula::impl(p(), q())), "p -> q");
  EXPECT_EQ(render(Formula::conj(Formula::disj(p(), q()), r())), "(p | q) & r");
  EXPECT_EQ(render(Formula::box(Formula::neg(p()))), "[]!p");
  EXPECT_EQ(render(Formula::top()), "true");
  EXPECT_EQ(render(Formula::bottom()), "false");
}

TEST(Render, ImplicationNesting) {
  EXPECT_EQ(render(Formula::impl(Formula::impl(p(), q()), r())), "(p -> q) -> r");
  EXPECT_EQ(render(Formula::impl(p(), Formula::impl(q(), r()))), "p -> q -> r");
  EXPECT_EQ(render(Formula::conj(p(), Formula::conj(q(), r()))), "p & (q & r)");
}

TEST(Render, RoundTripRandom) {
  std::mt19937 rng(7);
  for (int i = 0; i < 2000; ++i) {
    Formula f = random_formula(rng, 5);
    EXPECT_EQ(parse(render(f)), f) << render(f);
  }
}

TEST(Subformulas, Closure) {
  auto s = subformula_closure(parse("<>p -> []q"));
  EXPECT_EQ(s, (std::set<Formula>{parse("<>p -> []q"), parse("<>p"), parse("[]q"), p(), q()}));
  EXPECT_EQ(subformula_closure(Formula::bottom()).size(), 1U);
  EXPECT_EQ(subformula_closure(parse("[](p & p)")).size(), 3U);
}

TEST(Subformulas, BoundedByNodeCount) {
  std::mt19937 rng(11);
  for (int i = 0; i < 500; ++i) {
    Formula f = random_formula(rng, 5);
    EXPECT_LE(subformula_closure(f).size(), f.node_count());
  }
}

TEST(ModalDepth, Examples) {
  EXPECT_EQ(modal_depth(parse("p -> q")), 0);
  EXPECT_EQ(modal_depth(parse("[](p -> <>q)")), 2);
  EXPECT_EQ(modal_depth(parse("<><>p -> <>p")), 2);
}

TEST(Instantiate, Substitutes) {
  Formula four = parse("[]A -> [][]A");
  EXPECT_EQ(instantiate(four, {{"A", parse("p & q")}}), parse("[](p & q) -> [][](p & q)"));
  EXPECT_EQ(instantiate(parse("(A -> B) | (B -> A)"), {{"A", p()}, {"B", q()}}), parse("(p -> q) | (q -> p)"));
  EXPECT_EQ(instantiate(parse("!<>false"), {}), Formula::neg(Formula::diamond(Formula::bottom())));
}

TEST(Instantiate, UnboundMetavariable) { EXPECT_THROW(instantiate(parse("A -> B"), {{"A", p()}}), Error); }

TEST(Instantiate, Homomorphic) {
  Binding b{{"A", parse("[]p")}, {"B", parse("q | r")}};
  Formula a = parse("A -> <>B");
  Formula c = parse("B & A");
  EXPECT_EQ(instantiate(Formula::conj(a, c), b), Formula::conj(instantiate(a, b), instantiate(c, b)));
}

TEST(Propositions, ExcludesMetavariables) {
  EXPECT_EQ(propositions(parse("A -> p & q")), (std::set<std::string>{"p", "q"}));
  EXPECT_EQ(metavariables(parse("A -> p & B")), (std::set<std::string>{"A", "B"}));
}

TEST(Conjoin, LeftNestedAndEmpty) {
  EXPECT_EQ(conjoin({p(), q(), r()}), parse("p & q & r"));
  EXPECT_EQ(conjoin({p()}), p());
  EXPECT_EQ(conjoin({}), Formula::top());
}

TEST(Ordering, StructuralEqualityAndHash) {
  Formula a = parse("[]p -> q");
  Formula b = parse("[] p->q");
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.hash(), b.hash());
  EXPECT_NE(parse("p & q"), parse("q & p"));
  EXPECT_TRUE(parse("p") < parse("p & q"));
}

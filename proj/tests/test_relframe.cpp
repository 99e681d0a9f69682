#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace imlab;
using namespace fixtures;

TEST(Relation, RangeChecked) {
  Relation r(2);
  EXPECT_THROW(r.add(0, 2), Error);
  EXPECT_THROW(r.add(-1, 0), Error);
  EXPECT_THROW(Relation(0), LimitError);
  EXPECT_THROW(Relation(33), LimitError);
}

TEST(Relation, MaskRoundTrip) {
  Relation r = rel(3, {{0, 1}, {2, 0}, {1, 1}});
  EXPECT_EQ(Relation::from_mask(3, r.to_mask()), r);
}

TEST(Compose, Examples) {
  EXPECT_EQ(compose(rel(3, {{0, 1}}), rel(3, {{1, 2}})), rel(3, {{0, 2}}));
  EXPECT_TRUE(compose(rel(3, {{0, 1}}), Relation(3)).empty());
  Relation pre = Relation::identity(3) | rel(3, {{0, 1}});
  EXPECT_EQ(compose(pre, rel(3, {{0, 2}, {1, 2}})), rel(3, {{0, 2}, {1, 2}}));
  EXPECT_THROW(compose(Relation(2), Relation(3)), Error);
}

TEST(Closure, Examples) {
  EXPECT_EQ(transitive_closure(rel(3, {{0, 1}, {1, 2}})), rel(3, {{0, 1}, {1, 2}, {0, 2}}));
  EXPECT_EQ(reflexive_transitive_closure(Relation(2)), Relation::identity(2));
  Relation once = transitive_closure(rel(2, {{0, 1}}));
  EXPECT_EQ(transitive_closure(once), once);
}

TEST(Closure, IdempotentAndMinimal) {
  for (std::uint64_t m = 0; m < (1U << 9); ++m) {
    Relation r = Relation::from_mask(3, m);
    Relation t = transitive_closure(r);
    EXPECT_TRUE(t.is_transitive());
    EXPECT_EQ(transitive_closure(t), t);
    if (r.is_transitive()) {
      EXPECT_EQ(t, r);
    }
    EXPECT_TRUE(reflexive_transitive_closure(r).is_preorder());
  }
}

TEST(Frame, RejectsInvalid) {
  EXPECT_THROW(BirelFrame(Relation(2), Relation(2)), Error);
  EXPECT_THROW(BirelFrame(Relation::identity(3), rel(3, {{0, 1}, {1, 2}})), Error);
  EXPECT_THROW(BirelFrame(Relation::identity(2), Relation(3)), Error);
}

TEST(Lead, Examples) {
  EXPECT_EQ(l62().lead(), rel(3, {{0, 2}, {1, 2}}));
  EXPECT_EQ(f2().lead(), rel(3, {{0, 1}}));
  EXPECT_EQ(l1().lead(), rel(1, {{0, 0}}));
}

TEST(RelationalOperators, Examples) {
  EXPECT_EQ(relational_derivative(f2().mod(), {2}), WorldSet{});
  EXPECT_EQ(relational_integral(l62().lead(), {2}), WorldSet::full(3));
  for (std::uint64_t m = 0; m < (1U << 9); ++m) EXPECT_TRUE(relational_derivative(Relation::from_mask(3, m), {}).empty());
}

TEST(RelationalOperators, Additive) {
  for (std::uint64_t m = 0; m < (1U << 16); m += 7) {
    Relation r = Relation::from_mask(4, m);
    for (std::uint32_t a = 0; a < 16; ++a) {
      for (std::uint32_t b = 0; b < 16; ++b) {
        WorldSet A(a), B(b);
        EXPECT_EQ(relational_derivative(r, A | B), relational_derivative(r, A) | relational_derivative(r, B));
        EXPECT_EQ(relational_integral(r, A & B), relational_integral(r, A) & relational_integral(r, B));
      }
    }
  }
}

TEST(Properties, F2) {
  FrameProperties p = frame_properties(f2());
  EXPECT_TRUE(p.forward_confluent);
  EXPECT_FALSE(p.backward_confluent);
  EXPECT_TRUE(p.downward_confluent);
  EXPECT_TRUE(p.locally_linear);
}

TEST(Properties, L62) {
  FrameProperties p = frame_properties(l62());
  EXPECT_TRUE(p.forward_confluent);
  EXPECT_TRUE(p.backward_confluent);
  EXPECT_TRUE(p.downward_confluent);
  EXPECT_TRUE(p.locally_linear);
  EXPECT_TRUE(p.mod_irreflexive);
  EXPECT_FALSE(p.mod_reflexive);
}

TEST(Properties, Fork) {
  EXPECT_FALSE(frame_properties(fork_frame()).locally_linear);
  EXPECT_TRUE(frame_properties(fork_frame()).forward_confluent);
}

TEST(Properties, ForwardFailure) {
  // 0 sees 1, 0 pre 2, but 2 sees nothing.
  BirelFrame f = BirelFrame::from_generators(3, {{0, 2}}, {{0, 1}});
  EXPECT_FALSE(forward_confluent(f));
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify_frame(f2()), (std::vector<LogicId>{LogicId::CK4, LogicId::K4I}));
  EXPECT_EQ(classify_frame(l62()),
            (std::vector<LogicId>{LogicId::CK4, LogicId::IK4, LogicId::K4I, LogicId::GK4, LogicId::GK4c}));
  EXPECT_EQ(classify_frame(l1()), std::vector<LogicId>(kAllLogics.begin(), kAllLogics.end()));
}

TEST(Lead, BackwardAndDownwardShortcuts) {
  for_each_small_frame(4, [](const BirelFrame& f) {
    EXPECT_TRUE(f.lead().is_transitive());
    if (backward_confluent(f)) {
      EXPECT_EQ(f.lead(), compose(f.pre(), f.mod()));
    }
    if (downward_confluent(f)) {
      Relation mp = compose(f.mod(), f.pre());
      EXPECT_TRUE(mp.is_transitive());
      EXPECT_EQ(f.lead() | mp, mp);
    }
  });
}

TEST(Lead, DownwardEqualityFailsOnF2) {
  // Downward confluent, yet mod;pre reaches 2 while lead does not.
  ASSERT_TRUE(downward_confluent(f2()));
  EXPECT_EQ(compose(f2().mod(), f2().pre()), rel(3, {{0, 1}, {0, 2}}));
  EXPECT_NE(f2().lead(), compose(f2().mod(), f2().pre()));
}

#include <gtest/gtest.h>

#include <numeric>

#include "fixtures.hpp"

using namespace imlab;
using namespace fixtures;

TEST(Enumerate, SmallCounts) {
  EXPECT_EQ(enumerate_frames(1, LogicId::CK4).size(), 2U);
  EXPECT_EQ(enumerate_frames(1, LogicId::CS4).size(), 1U);
  EXPECT_EQ(preorder_masks(2).size(), 4U);
  EXPECT_EQ(preorder_masks(3).size(), 29U);
  EXPECT_EQ(preorder_masks(4).size(), 355U);
  EXPECT_THROW(enumerate_frames(5, LogicId::CK4), LimitError);
  EXPECT_THROW(enumerate_frames(3, LogicId::CK4, {.limit = 2}), LimitError);
}

TEST(Enumerate, OrderAndMembership) {
  auto frames = enumerate_frames(3, LogicId::IK4);
  for (std::size_t i = 0; i < frames.size(); ++i) {
    EXPECT_TRUE(in_frame_class(frames[i], LogicId::IK4));
    if (i > 0) {
      auto prev = std::pair{frames[i - 1].pre().to_mask(), frames[i - 1].mod().to_mask()};
      EXPECT_LT(prev, std::pair(frames[i].pre().to_mask(), frames[i].mod().to_mask()));
    }
  }
}

TEST(Enumerate, IsomorphismReductionShrinks) {
  auto all = enumerate_frames(3, LogicId::CK4);
  auto reduced = enumerate_frames(3, LogicId::CK4, {.isomorphism_reduction = true});
  EXPECT_LT(reduced.size(), all.size());
  EXPECT_GT(reduced.size(), 0U);
}

TEST(Countermodel, GodelDummettFork) {
  SearchResult r = find_countermodel(parse("(p -> q) | (q -> p)"), LogicId::CK4, 3);
  ASSERT_TRUE(r.countermodel);
  const BirelModel& m = r.countermodel->model;
  EXPECT_EQ(m.frame.size(), 3);
  EXPECT_FALSE(locally_linear(m.frame.pre()));
  EXPECT_EQ(r.countermodel->world, 0);
  EXPECT_EQ(m.valuation.at("p"), WorldSet({1}));
  EXPECT_EQ(m.valuation.at("q"), WorldSet({2}));
  EXPECT_EQ(m.frame, fork_frame());
}

TEST(Countermodel, FsOnK4I) {
  Formula fs = parse("(<>p -> []q) -> [](p -> q)");
  SearchResult r = find_countermodel(fs, LogicId::K4I, 3);
  ASSERT_TRUE(r.countermodel);
  EXPECT_TRUE(in_frame_class(r.countermodel->model.frame, LogicId::K4I));
  EXPECT_FALSE(relational_extension(r.countermodel->model, fs).contains(r.countermodel->world));
}

TEST(Countermodel, ExhaustsOnIK4) {
  EXPECT_FALSE(find_countermodel(parse("(<>p -> []q) -> [](p -> q)"), LogicId::IK4, 3).countermodel);
  SearchResult dp = find_countermodel(parse("<>(p | q) -> <>p | <>q"), LogicId::IK4, 3);
  EXPECT_FALSE(dp.countermodel);
  EXPECT_GT(dp.frames_enumerated, 0U);
}

TEST(Countermodel, DeterministicAcrossThreads) {
  Formula f = parse("[](p | q) -> []p | <>q");
  SearchResult one = find_countermodel(f, LogicId::IK4, 3, {.threads = 1, .enumeration = {}});
  for (unsigned t : {2U, 4U, 7U}) {
    SearchResult many = find_countermodel(f, LogicId::IK4, 3, {.threads = t, .enumeration = {}});
    ASSERT_EQ(one.countermodel.has_value(), many.countermodel.has_value());
    EXPECT_EQ(one.frames_enumerated, many.frames_enumerated);
    EXPECT_EQ(one.valuations_checked, many.valuations_checked);
    if (one.countermodel) {
      EXPECT_EQ(one.countermodel->model.frame, many.countermodel->model.frame);
      EXPECT_EQ(one.countermodel->model.valuation, many.countermodel->model.valuation);
      EXPECT_EQ(one.countermodel->world, many.countermodel->world);
    }
  }
}

TEST(Countermodel, Limit) { EXPECT_THROW(find_countermodel(parse("p"), LogicId::CK4, 5), LimitError); }

TEST(Bisim, SelfContainsIdentity) {
  BirelModel m = l62_model();
  BisimRelation z = largest_bisimulation(m, m);
  for (int w = 0; w < 3; ++w) EXPECT_TRUE(z.contains(w, w));
}

TEST(Bisim, Permutation) {
  // l62 relabelled by 0->2, 1->0, 2->1.
  std::vector<int> perm{2, 0, 1};
  BirelModel m = l62_model();
  std::vector<std::pair<int, int>> pre, mod;
  for (auto [a, b] : m.frame.pre().pairs()) pre.emplace_back(perm[a], perm[b]);
  for (auto [a, b] : m.frame.mod().pairs()) mod.emplace_back(perm[a], perm[b]);
  BirelModel pm = make_birel_model(BirelFrame(Relation(3, pre), Relation(3, mod)), {{"p", {0}}, {"q", {1}}});
  BisimRelation z = largest_bisimulation(m, pm);
  for (int w = 0; w < 3; ++w) EXPECT_TRUE(z.contains(w, perm[w]));
}

TEST(Bisim, ReflexivePointAndTotalPair) {
  BirelModel a = make_birel_model(l1(), {{"p", {0}}});
  BirelModel b = make_birel_model(BirelFrame(Relation::identity(2), rel(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}})),
                                  {{"p", {0, 1}}});
  BisimRelation z = largest_bisimulation(a, b);
  EXPECT_EQ(z.pairs(), (std::vector<std::pair<int, int>>{{0, 0}, {0, 1}}));
}

TEST(Bisim, AtomDisagreementEmpties) {
  BirelModel a = make_birel_model(l1(), {{"p", {0}}});
  BirelModel b = make_birel_model(l1(), {{"p", {}}});
  EXPECT_TRUE(largest_bisimulation(a, b).empty());
}

TEST(Bisim, InvarianceAtDepth3) {
  BirelModel a = l62_model();
  BirelModel b = irreflexivize(a, 2, IndexCoupling::same_level);
  BisimRelation z = largest_bisimulation(a, b);
  RelationalAlgebra alg{a.frame};
  std::vector<std::pair<std::string, WorldSet>> atoms(a.valuation.begin(), a.valuation.end());
  auto reps = canonical_formulas(ExtensionKey<RelationalAlgebra>{alg}, atoms, 3);
  ASSERT_FALSE(z.empty());
  for (auto [w, v] : z.pairs()) {
    for (const auto& r : reps) {
      EXPECT_EQ(r.value.contains(w), relational_extension(b, r.formula).contains(v)) << render(r.formula);
    }
  }
}

TEST(Irreflexivize, L1FreeCoupling) {
  BirelModel m = irreflexivize(l1_model(), 3);
  EXPECT_EQ(m.frame.size(), 3);
  EXPECT_EQ(m.frame.pre().pair_count(), 9U);
  EXPECT_EQ(m.frame.mod(), rel(3, {{0, 1}, {0, 2}, {1, 2}}));
}

TEST(Irreflexivize, SingleCopyHasNoModalEdges) {
  for_each_small_frame(2, [](const BirelFrame& f) {
    EXPECT_TRUE(irreflexivize(make_birel_model(f, {}), 1).frame.mod().empty());
  });
  EXPECT_THROW(irreflexivize(l1_model(), 0), Error);
}

TEST(Irreflexivize, F2TwoCopies) {
  BirelModel m = irreflexivize(f2_model(), 2);
  EXPECT_EQ(m.frame.size(), 6);
  EXPECT_EQ(m.frame.mod().pairs(), (std::vector<std::pair<int, int>>{{copy_world(0, 0, 2), copy_world(1, 1, 2)}}));
  EXPECT_EQ(m.valuation.at("p"), WorldSet({copy_world(2, 0, 2), copy_world(2, 1, 2)}));
}

TEST(Irreflexivize, SameLevelPreservesConfluence) {
  for_each_small_frame(3, [](const BirelFrame& f) {
    BirelFrame g = irreflexivize(make_birel_model(f, {}), 4, IndexCoupling::same_level).frame;
    EXPECT_TRUE(g.mod().is_irreflexive());
    EXPECT_TRUE(g.mod().is_transitive());
    FrameProperties a = frame_properties(f), b = frame_properties(g);
    if (a.forward_confluent) {
      EXPECT_TRUE(b.forward_confluent);
    }
    if (a.backward_confluent) {
      EXPECT_TRUE(b.backward_confluent);
    }
    if (a.downward_confluent) {
      EXPECT_TRUE(b.downward_confluent);
    }
    if (a.locally_linear) {
      EXPECT_TRUE(b.locally_linear);
    }
  });
}

TEST(Irreflexivize, FreeCouplingLosesForwardConfluence) {
  BirelFrame g = irreflexivize(l1_model(), 3).frame;
  EXPECT_FALSE(forward_confluent(g));
}

TEST(Equivalence, SelfAgrees) {
  BirelModel m = l62_model();
  for (int w = 0; w < 3; ++w) {
    EXPECT_TRUE(depth_bounded_equivalence(m, w, m, w, 3, {"p", "q"}).agree);
    EXPECT_TRUE(depth_bounded_equivalence(m, w, m, w, 3, {"p", "q"}, {.bisimulation_shortcut = false}).agree);
  }
}

TEST(Equivalence, SingleCopySeparates) {
  BirelModel m = l1_model();
  EquivalenceVerdict v = depth_bounded_equivalence(m, 0, irreflexivize(m, 1), 0, 1, {"p"});
  ASSERT_FALSE(v.agree);
  ASSERT_TRUE(v.separating);
  EXPECT_LE(modal_depth(*v.separating), 1);
  EXPECT_NE(relational_extension(m, *v.separating).contains(0),
            relational_extension(irreflexivize(m, 1), *v.separating).contains(0));
}

TEST(Equivalence, LoopSeparatesFromEveryTruncation) {
  // []<>true holds on the reflexive point but fails at copy 0 of any finite
  // irreflexive unravelling, since the last copy has no modal successor.
  BirelModel m = l1_model();
  for (int k = 1; k <= 4; ++k) {
    BirelModel t = irreflexivize(m, k, IndexCoupling::same_level);
    EXPECT_FALSE(depth_bounded_equivalence(m, 0, t, 0, 2, {"p"}).agree) << k;
  }
  EXPECT_TRUE(depth_bounded_equivalence(m, 0, irreflexivize(m, 4, IndexCoupling::same_level), 0, 1, {"p"}).agree);
}

TEST(Equivalence, ShortcutIsSound) {
  for_each_small_frame(2, [](const BirelFrame& f) {
    for (WorldSet u : alexandroff(f.pre()).opens()) {
      BirelModel m = make_birel_model(f, {{"p", u}});
      BirelModel t = irreflexivize(m, 3, IndexCoupling::same_level);
      for (int w = 0; w < f.size(); ++w) {
        for (int d = 0; d <= 2; ++d) {
          bool fast = depth_bounded_equivalence(m, w, t, copy_world(w, 0, 3), d, {"p"}).agree;
          bool slow = depth_bounded_equivalence(m, w, t, copy_world(w, 0, 3), d, {"p"}, {.bisimulation_shortcut = false}).agree;
          EXPECT_EQ(fast, slow);
        }
      }
    }
  });
}

TEST(Equivalence, DepthBound) {
  BirelModel m = l1_model();
  EXPECT_THROW(depth_bounded_equivalence(m, 0, m, 0, 4, {"p"}), LimitError);
}

TEST(Generator, DistinguishesPerturbedValuations) {
  // Two points separated by a random formula are also separated by a canonical representative.
  BirelModel m = l62_model();
  RelationalAlgebra alg{m.frame};
  std::vector<std::pair<std::string, WorldSet>> atoms(m.valuation.begin(), m.valuation.end());
  auto reps = canonical_formulas(ExtensionKey<RelationalAlgebra>{alg}, atoms, 2);
  std::set<WorldSet> values;
  for (const auto& r : reps) values.insert(r.value);
  for (const char* text : {"<>q -> p", "[](p | q) & !p", "(p -> <>q) -> []q", "<>[]q | p"}) {
    EXPECT_TRUE(values.count(relational_extension(m, parse(text)))) << text;
  }
  EXPECT_THROW(canonical_formulas(ExtensionKey<RelationalAlgebra>{alg}, atoms, 2, 2), LimitError);
}

#include <gtest/gtest.h>

#include <cstdio>

#include "fixtures.hpp"

using namespace imlab;
using namespace fixtures;

namespace {

std::string data(const char* name) { return std::string(IMLAB_DATA_DIR) + "/" + name; }

std::string error_of(const std::string& text, LoadOptions opts = {}) {
  try {
    parse_model(text, opts);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(ModelFile, L62) {
  BirelModel m = load_model(data("l62.model"));
  EXPECT_EQ(m.frame, l62());
  EXPECT_EQ(m.valuation, l62_model().valuation);
}

TEST(ModelFile, FixturesMatch) {
  EXPECT_EQ(load_model(data("f2.model")).frame, f2());
  EXPECT_EQ(load_model(data("l1.model")).frame, l1());
  EXPECT_EQ(load_model(data("fork.model")).frame, fork_frame());
  EXPECT_EQ(load_model(data("f2.model")).valuation.at("q"), WorldSet{});
}

TEST(ModelFile, RejectsNonUpset) {
  std::string why;
  try {
    load_model(data("l62_bad_val.model"));
  } catch (const Error& e) {
    why = e.what();
  }
  EXPECT_EQ(why, "val p not pre-closed: 0 in ||p||, 0 pre 1, 1 not in ||p||");
  BirelModel closed = load_model(data("l62_bad_val.model"), {.close_valuation = true});
  EXPECT_EQ(closed.valuation.at("p"), WorldSet({0, 1}));
}

TEST(ModelFile, EmptyModIsCK4) {
  BirelModel m = parse_model("worlds 2\npre 0 1\n");
  EXPECT_TRUE(m.frame.mod().empty());
  EXPECT_TRUE(in_frame_class(m.frame, LogicId::CK4));
}

TEST(ModelFile, ClosesGenerators) {
  BirelModel m = parse_model("worlds 3\npre 0 1\npre 1 2\nmod 0 1\nmod 1 2\n");
  EXPECT_TRUE(m.frame.pre().contains(0, 2));
  EXPECT_TRUE(m.frame.mod().contains(0, 2));
}

TEST(ModelFile, ParseErrorsNameLine) {
  EXPECT_NE(error_of("pre 0 1\n").find("worlds"), std::string::npos);
  EXPECT_NE(error_of("worlds 2\n\npre 0 5\n").find("line 3"), std::string::npos);
  EXPECT_NE(error_of("worlds 2\nfoo 1\n").find("unknown directive"), std::string::npos);
  EXPECT_NE(error_of("worlds 2\nmod 0\n").find("line 2"), std::string::npos);
  EXPECT_NE(error_of("worlds 2\nval P 0\n").find("lowercase"), std::string::npos);
  EXPECT_NE(error_of("worlds 2\nval p x\n").find("world index"), std::string::npos);
  EXPECT_NE(error_of("worlds 0\n").find("at least one"), std::string::npos);
  EXPECT_NE(error_of("worlds 2\nworlds 3\n").find("duplicate"), std::string::npos);
  EXPECT_NE(error_of("").find("missing"), std::string::npos);
  EXPECT_THROW(load_model(data("no_such_file.model")), Error);
}

TEST(ModelFile, Comments) {
  BirelModel m = parse_model("# header\nworlds 2 # two\nmod 0 1 # edge\n");
  EXPECT_TRUE(m.frame.mod().contains(0, 1));
}

TEST(ModelFile, SaveLoadIdempotent) {
  for (const char* name : {"l62.model", "f2.model", "l1.model", "fork.model"}) {
    BirelModel m = load_model(data(name));
    std::string path = testing::TempDir() + "/roundtrip.model";
    save_model(m, path);
    BirelModel again = load_model(path);
    EXPECT_EQ(again.frame, m.frame) << name;
    EXPECT_EQ(again.valuation, m.valuation) << name;
    EXPECT_EQ(format_model(again), format_model(m));
    std::remove(path.c_str());
  }
}

TEST(TopologyFile, Load) {
  FiniteTopology t = load_topology(data("sierpinski.top"));
  EXPECT_EQ(t, alexandroff(rel(2, {{0, 1}})));
  EXPECT_EQ(parse_topology(format_topology(t)), t);
}

TEST(TopologyFile, Invalid) {
  EXPECT_THROW(parse_topology("worlds 2\nopen\nopen 0\nopen 1\n"), Error);
  EXPECT_THROW(parse_topology("worlds 2\nopen 0 1\nclosed 0\n"), Error);
  EXPECT_THROW(parse_topology("worlds 2\nopen 2\n"), Error);
}

TEST(DerivationFile, Fixtures) {
  EXPECT_TRUE(check_derivation(load_derivation(data("k_nec.deriv")), LogicId::CK4).accepted);
  EXPECT_TRUE(check_derivation(load_derivation(data("identity.deriv")), LogicId::CK4).accepted);
  CheckVerdict v = check_derivation(load_derivation(data("not_axiom.deriv")), LogicId::CK4);
  EXPECT_FALSE(v.accepted);
  EXPECT_EQ(v.failed_step, 0U);
}

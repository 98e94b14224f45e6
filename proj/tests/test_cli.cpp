#include <gtest/gtest.h>

#include <sstream>

#include <json.hpp>

#include "mvlogic/cli.hpp"

using mvlogic::cli::run;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ValidAxiomExitsZero) {
  auto r = call({"valid", "--frame", "data/diag2_frame.json", "--sequent", "p & q |- p"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("valid"), std::string::npos);
}

TEST(Cli, CheckFalseSequentPrintsCountermodel) {
  auto r = call({"check", "--model", "data/diag2_box0_model.json", "--sequent", "p |- box p"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("a1"), std::string::npos);
  // The witness is a JSON object.
  EXPECT_NE(r.out.find('{'), std::string::npos);
}

TEST(Cli, InvalidSequentHasWitness) {
  auto r = call({"valid", "--frame", "data/diag2_box0_frame.json", "--sequent", "p |- box p"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("countermodel"), std::string::npos);
}

TEST(Cli, LatticeDotHasFourNodes) {
  auto r = call({"lattice", "--context", "data/diag2_context.json", "--out", "dot"});
  EXPECT_EQ(r.code, 0);
  std::size_t nodes = 0;
  for (std::size_t p = r.out.find("[label="); p != std::string::npos; p = r.out.find("[label=", p + 1)) ++nodes;
  EXPECT_EQ(nodes, 4u);
}

TEST(Cli, LatticeJson) {
  auto r = call({"lattice", "--context", "data/diag2_context.json", "--out", "json"});
  EXPECT_EQ(r.code, 0);
  json j = json::parse(r.out);
  EXPECT_EQ(j["concepts"].size(), 4u);
}

TEST(Cli, AlgebraValidation) {
  EXPECT_EQ(call({"algebra", "--algebra", "lukasiewicz:5"}).code, 0);
  EXPECT_EQ(call({"algebra", "--algebra", "data/goedel_luk_mix.json"}).code, 1);
  EXPECT_EQ(call({"algebra", "--algebra", "nonsense:3"}).code, 2);
}

TEST(Cli, AxiomsOnFramesAndRefusal) {
  EXPECT_EQ(call({"axioms", "--frame", "data/diag2_frame.json"}).code, 0);
  EXPECT_EQ(call({"axioms", "--frame", "data/half_frame.json"}).code, 0);
  auto r = call({"axioms", "--frame", "data/incompatible_frame.json"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("refus"), std::string::npos);
}

TEST(Cli, RandomAxiomsAreDeterministic) {
  std::vector<std::string> args{"axioms", "--random", "5", "--seed", "7", "--algebra", "goedel:3"};
  auto a = call(args);
  auto b = call(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  args.insert(args.begin(), "--serial");
  EXPECT_EQ(call(args).out, a.out);
}

TEST(Cli, Canonical) {
  EXPECT_EQ(call({"canonical", "--lattice", "data/chain2.json"}).code, 0);
  EXPECT_EQ(call({"canonical", "--lattice", "data/diamond4.json"}).code, 0);
  // Properness violations are informational.
  EXPECT_EQ(call({"canonical", "--lattice", "data/box_bot_top.json"}).code, 0);
}

TEST(Cli, ArenaAnalyses) {
  auto firm = call({"arena", "--arena", "data/arena_firms.json", "--firm", "a", "--out", "json"});
  ASSERT_EQ(firm.code, 0) << firm.err;
  EXPECT_NE(firm.out.find("1/2"), std::string::npos);
  EXPECT_EQ(call({"arena", "--arena", "data/arena_rhd.json", "--rhd-market", "x1"}).code, 0);
  EXPECT_EQ(call({"arena", "--arena", "data/arena_box.json", "--box-firm", "a"}).code, 0);
  EXPECT_EQ(call({"arena", "--arena", "data/arena_firms.json", "--firm", "zz"}).code, 2);
}

TEST(Cli, InputErrorsExitTwoWithJson) {
  auto parse = call({"valid", "--frame", "data/diag2_frame.json", "--sequent", "p |- (q"});
  EXPECT_EQ(parse.code, 2);
  json e = json::parse(parse.err);
  EXPECT_TRUE(e.contains("error"));
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({"lattice", "--context", "data/no_such_file.json"}).code, 2);
  EXPECT_EQ(call({"check", "--model", "data/diag2_box0_model.json", "--sequent", "rhd p |- p"}).code, 2);
}

#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "mvlogic/kernels.hpp"
#include "oracles.hpp"

using namespace mvlogic;
using namespace testing_helpers;

TEST(Kernels, FirstFailureFindsSmallestIndex) {
  for (Exec e : {Exec::serial, Exec::parallel}) {
    EXPECT_EQ(kernels::first_failure(100000, [](std::uint64_t i) { return i % 7919 == 7918; }, e),
              std::optional<std::uint64_t>(7918));
    EXPECT_EQ(kernels::first_failure(1000, [](std::uint64_t) { return false; }, e), std::nullopt);
    EXPECT_EQ(kernels::first_failure(0, [](std::uint64_t) { return true; }, e), std::nullopt);
  }
}

TEST(Kernels, SelectKeepsOrder) {
  auto keep = [](std::uint64_t i) { return (i * 2654435761u) % 5 == 0; };
  auto s = kernels::select(50000, keep, Exec::serial);
  auto p = kernels::select(50000, keep, Exec::parallel);
  EXPECT_EQ(s, p);
  EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
  for (auto i : s) EXPECT_TRUE(keep(i));
}

TEST(Kernels, DecodeMixedIsLexicographic) {
  std::vector<Degree> d(3);
  kernels::decode_mixed(0, 3, d);
  EXPECT_EQ(d, (std::vector<Degree>{0, 0, 0}));
  kernels::decode_mixed(5, 3, d);
  EXPECT_EQ(d, (std::vector<Degree>{0, 1, 2}));
  auto all = oracle::all_vectors(3, 3);
  for (std::size_t i = 0; i < all.size(); ++i) {
    kernels::decode_mixed(i, 3, d);
    EXPECT_EQ(d, all[i]);
  }
}

TEST(Kernels, CheckedPower) {
  EXPECT_EQ(kernels::checked_power(3, 4, 1000), std::optional<std::uint64_t>(81));
  EXPECT_EQ(kernels::checked_power(3, 7, 1000), std::nullopt);
  EXPECT_EQ(kernels::checked_power(2, 200, ~0ull), std::nullopt);
  EXPECT_EQ(kernels::checked_power(5, 0, 1), std::optional<std::uint64_t>(1));
}

TEST(Kernels, BatchesMatchOracleSerialAndParallel) {
  std::mt19937_64 rng(3);
  auto alg = luk(5);
  const std::size_t rows = 6, cols = 5, count = 300;
  std::vector<Degree> rel(rows * cols);
  for (auto& v : rel) v = rng() % 5;
  std::vector<Degree> in1(count * rows), in0(count * cols);
  for (auto& v : in1) v = rng() % 5;
  for (auto& v : in0) v = rng() % 5;
  oracle::RawContext rc{alg.get(), rows, cols, rel};
  for (Exec e : {Exec::serial, Exec::parallel}) {
    std::vector<Degree> out1(count * cols), out0(count * rows);
    kernels::lift1_batch(*alg, rel, rows, cols, in1, count, out1, e);
    kernels::lift0_batch(*alg, rel, rows, cols, in0, count, out0, e);
    for (std::size_t k = 0; k < count; ++k) {
      oracle::Vec f(in1.begin() + k * rows, in1.begin() + (k + 1) * rows);
      oracle::Vec u(in0.begin() + k * cols, in0.begin() + (k + 1) * cols);
      EXPECT_EQ(oracle::Vec(out1.begin() + k * cols, out1.begin() + (k + 1) * cols), rc.up(f));
      EXPECT_EQ(oracle::Vec(out0.begin() + k * rows, out0.begin() + (k + 1) * rows), rc.down(u));
    }
    std::vector<Degree> with(rows), met(count * rows);
    for (auto& v : with) v = rng() % 5;
    kernels::meet_batch(*alg, in1, count, with, met, e);
    for (std::size_t k = 0; k < count * rows; ++k) EXPECT_EQ(met[k], std::min(in1[k], with[k % rows]));
  }
}

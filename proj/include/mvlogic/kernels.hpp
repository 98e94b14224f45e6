#pragma once

// Dense data-parallel kernels. Every batched kernel has a serial reference
// path and an OpenMP path; both must produce identical output.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "mvlogic/truth_algebra.hpp"

namespace mvlogic {

enum class Exec { serial, parallel };

// Exec::parallel unless MVLOGIC_SERIAL is set in the environment.
Exec default_exec();

// Number of OpenMP threads the parallel path will use (1 without OpenMP).
int parallel_threads();

namespace kernels {

// out[x] = meet_a f[a] -> rel[a * cols + x]
void lift1(const TruthAlgebra& alg, std::span<const Degree> rel, std::size_t rows, std::size_t cols,
           std::span<const Degree> f, std::span<Degree> out);

// out[a] = meet_x u[x] -> rel[a * cols + x]
void lift0(const TruthAlgebra& alg, std::span<const Degree> rel, std::size_t rows, std::size_t cols,
           std::span<const Degree> u, std::span<Degree> out);

// Applies lift1 to each of `count` input rows of width `rows` (a row-major batch).
void lift1_batch(const TruthAlgebra& alg, std::span<const Degree> rel, std::size_t rows,
                 std::size_t cols, std::span<const Degree> inputs, std::size_t count,
                 std::span<Degree> outputs, Exec exec);

void lift0_batch(const TruthAlgebra& alg, std::span<const Degree> rel, std::size_t rows,
                 std::size_t cols, std::span<const Degree> inputs, std::size_t count,
                 std::span<Degree> outputs, Exec exec);

// outputs[k] = pointwise meet of inputs[k] with `with`; each vector has `width` entries.
void meet_batch(const TruthAlgebra& alg, std::span<const Degree> inputs, std::size_t count,
                std::span<const Degree> with, std::span<Degree> outputs, Exec exec);

// Smallest index in [0, count) for which `fails` returns true.
std::optional<std::uint64_t> first_failure(std::uint64_t count,
                                           const std::function<bool(std::uint64_t)>& fails,
                                           Exec exec);

// Every index in [0, count) for which `keep` returns true, in increasing order.
std::vector<std::uint64_t> select(std::uint64_t count,
                                  const std::function<bool(std::uint64_t)>& keep, Exec exec);

// Decodes `index` as a base-`radix` numeral into `digits`, most significant first,
// so increasing indices enumerate digit vectors in lexicographic order.
void decode_mixed(std::uint64_t index, std::size_t radix, std::span<Degree> digits);

// radix^exponent, or nullopt on overflow past `limit`.
std::optional<std::uint64_t> checked_power(std::uint64_t radix, std::size_t exponent,
                                           std::uint64_t limit);

}  // namespace kernels
}  // namespace mvlogic

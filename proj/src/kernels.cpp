#include "mvlogic/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mvlogic {

Exec default_exec() {
  static const Exec exec = std::getenv("MVLOGIC_SERIAL") != nullptr ? Exec::serial : Exec::parallel;
  return exec;
}

int parallel_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace kernels {

void lift1(const TruthAlgebra& alg, std::span<const Degree> rel, std::size_t rows, std::size_t cols,
           std::span<const Degree> f, std::span<Degree> out) {
  for (std::size_t x = 0; x < cols; ++x) {
    Degree acc = alg.top();
    for (std::size_t a = 0; a < rows; ++a) {
      acc = alg.meet(acc, alg.residuum(f[a], rel[a * cols + x]));
    }
    out[x] = acc;
  }
}

void lift0(const TruthAlgebra& alg, std::span<const Degree> rel, std::size_t rows, std::size_t cols,
           std::span<const Degree> u, std::span<Degree> out) {
  for (std::size_t a = 0; a < rows; ++a) {
    Degree acc = alg.top();
    const Degree* row = rel.data() + a * cols;
    for (std::size_t x = 0; x < cols; ++x) {
      acc = alg.meet(acc, alg.residuum(u[x], row[x]));
    }
    out[a] = acc;
  }
}

void lift1_batch(const TruthAlgebra& alg, std::span<const Degree> rel, std::size_t rows,
                 std::size_t cols, std::span<const Degree> inputs, std::size_t count,
                 std::span<Degree> outputs, Exec exec) {
  const auto n = static_cast<std::int64_t>(count);
  if (exec == Exec::serial) {
    for (std::int64_t k = 0; k < n; ++k) {
      lift1(alg, rel, rows, cols, inputs.subspan(k * rows, rows), outputs.subspan(k * cols, cols));
    }
    return;
  }
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < n; ++k) {
    lift1(alg, rel, rows, cols, inputs.subspan(k * rows, rows), outputs.subspan(k * cols, cols));
  }
}

void lift0_batch(const TruthAlgebra& alg, std::span<const Degree> rel, std::size_t rows,
                 std::size_t cols, std::span<const Degree> inputs, std::size_t count,
                 std::span<Degree> outputs, Exec exec) {
  const auto n = static_cast<std::int64_t>(count);
  if (exec == Exec::serial) {
    for (std::int64_t k = 0; k < n; ++k) {
      lift0(alg, rel, rows, cols, inputs.subspan(k * cols, cols), outputs.subspan(k * rows, rows));
    }
    return;
  }
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < n; ++k) {
    lift0(alg, rel, rows, cols, inputs.subspan(k * cols, cols), outputs.subspan(k * rows, rows));
  }
}

void meet_batch(const TruthAlgebra& alg, std::span<const Degree> inputs, std::size_t count,
                std::span<const Degree> with, std::span<Degree> outputs, Exec exec) {
  const std::size_t width = with.size();
  const auto n = static_cast<std::int64_t>(count);
  auto one = [&](std::int64_t k) {
    const Degree* in = inputs.data() + k * width;
    Degree* out = outputs.data() + k * width;
    for (std::size_t i = 0; i < width; ++i) out[i] = alg.meet(in[i], with[i]);
  };
  if (exec == Exec::serial) {
    for (std::int64_t k = 0; k < n; ++k) one(k);
    return;
  }
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < n; ++k) one(k);
}

std::optional<std::uint64_t> first_failure(std::uint64_t count,
                                           const std::function<bool(std::uint64_t)>& fails,
                                           Exec exec) {
  if (exec == Exec::serial) {
    for (std::uint64_t k = 0; k < count; ++k) {
      if (fails(k)) return k;
    }
    return std::nullopt;
  }
  constexpr std::uint64_t none = std::numeric_limits<std::uint64_t>::max();
  std::atomic<std::uint64_t> best{none};
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t k = 0; k < n; ++k) {
    const auto idx = static_cast<std::uint64_t>(k);
    if (idx >= best.load(std::memory_order_relaxed)) continue;
    if (fails(idx)) {
      std::uint64_t cur = best.load(std::memory_order_relaxed);
      while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
      }
    }
  }
  const std::uint64_t found = best.load();
  if (found == none) return std::nullopt;
  return found;
}

std::vector<std::uint64_t> select(std::uint64_t count,
                                  const std::function<bool(std::uint64_t)>& keep, Exec exec) {
  std::vector<std::uint64_t> kept;
  if (exec == Exec::serial) {
    for (std::uint64_t k = 0; k < count; ++k) {
      if (keep(k)) kept.push_back(k);
    }
    return kept;
  }
  std::vector<unsigned char> flags(count, 0);
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 256)
  for (std::int64_t k = 0; k < n; ++k) {
    flags[k] = keep(static_cast<std::uint64_t>(k)) ? 1 : 0;
  }
  for (std::uint64_t k = 0; k < count; ++k) {
    if (flags[k]) kept.push_back(k);
  }
  return kept;
}

void decode_mixed(std::uint64_t index, std::size_t radix, std::span<Degree> digits) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    digits[i] = static_cast<Degree>(index % radix);
    index /= radix;
  }
}

std::optional<std::uint64_t> checked_power(std::uint64_t radix, std::size_t exponent,
                                           std::uint64_t limit) {
  std::uint64_t acc = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (radix != 0 && acc > limit / radix) return std::nullopt;
    acc *= radix;
  }
  if (acc > limit) return std::nullopt;
  return acc;
}

}  // namespace kernels
}  // namespace mvlogic

#include "mvlogic/context.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mvlogic/error.hpp"

namespace mvlogic {

Context::Context(CarrierPtr objects, CarrierPtr attributes, MvRelation incidence)
    : objects_(std::move(objects)), attributes_(std::move(attributes)), incidence_(std::move(incidence)) {
  if (!same_carrier(objects_, incidence_.source()) || !same_carrier(attributes_, incidence_.target())) {
    throw InputError("incidence must be an objects x attributes matrix");
  }
}

MvSet Context::up(const MvSet& extent) const {
  if (!same_carrier(extent.carrier(), objects_)) throw UsageError("up: set is not over the objects");
  return lift1(incidence_, extent);
}

MvSet Context::down(const MvSet& intent) const {
  if (!same_carrier(intent.carrier(), attributes_)) throw UsageError("down: set is not over the attributes");
  return lift0(incidence_, intent);
}

MvSet Context::all_objects(Degree value) const { return MvSet::constant(algebra(), objects_, value); }

MvSet Context::all_attributes(Degree value) const {
  return MvSet::constant(algebra(), attributes_, value);
}

bool is_stable(const Context& ctx, Side side, const MvSet& s) {
  if (side == Side::extent) return ctx.down(ctx.up(s)) == s;
  return ctx.up(ctx.down(s)) == s;
}

Concept concept_of(const Context& ctx, const MvSet& seed_extent) {
  MvSet intent = ctx.up(seed_extent);
  MvSet extent = ctx.down(intent);
  return Concept{std::move(extent), std::move(intent)};
}

Concept concept_of_intent(const Context& ctx, const MvSet& seed_intent) {
  MvSet extent = ctx.down(seed_intent);
  MvSet intent = ctx.up(extent);
  return Concept{std::move(extent), std::move(intent)};
}

bool concept_leq(const Concept& c, const Concept& d) { return included(c.extent, d.extent); }

std::size_t DegreeVectorHash::operator()(const std::vector<Degree>& v) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Degree d : v) {
    h ^= d;
    h *= 1099511628211ull;
  }
  return h;
}

ConceptLattice::ConceptLattice(Context context, std::vector<Concept> concepts)
    : context_(std::move(context)), concepts_(std::move(concepts)) {
  if (concepts_.empty()) throw UsageError("a concept lattice has at least one concept");
  by_extent_.reserve(concepts_.size());
  for (std::size_t i = 0; i < concepts_.size(); ++i) {
    if (!by_extent_.emplace(concepts_[i].extent.degrees(), i).second) {
      throw UsageError("duplicate concept in lattice");
    }
  }
}

bool ConceptLattice::leq(std::size_t i, std::size_t j) const {
  return concept_leq(concepts_[i], concepts_[j]);
}

std::size_t ConceptLattice::meet(std::size_t i, std::size_t j) const {
  const MvSet m = pointwise_meet(concepts_[i].extent, concepts_[j].extent);
  if (auto k = find_extent(m.degrees())) return *k;
  throw UsageError("meet of two extents is missing from the lattice");
}

std::size_t ConceptLattice::join(std::size_t i, std::size_t j) const {
  const MvSet m = pointwise_meet(concepts_[i].intent, concepts_[j].intent);
  if (auto k = find_extent(context_.down(m).degrees())) return *k;
  throw UsageError("join of two concepts is missing from the lattice");
}

std::optional<std::size_t> ConceptLattice::find_extent(const std::vector<Degree>& extent) const {
  auto it = by_extent_.find(extent);
  if (it == by_extent_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> ConceptLattice::find(const Concept& c) const {
  auto k = find_extent(c.extent.degrees());
  if (k && concepts_[*k].intent == c.intent) return k;
  return std::nullopt;
}

std::size_t ConceptLattice::index_of(const Concept& c) const {
  if (auto k = find(c)) return *k;
  throw UsageError("pair " + format_degrees(c.extent) + " / " + format_degrees(c.intent) +
                   " is not a concept of this lattice");
}

std::vector<std::pair<std::size_t, std::size_t>> ConceptLattice::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> above;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i && leq(i, j)) above.push_back(j);
    }
    for (std::size_t j : above) {
      const bool covering = std::none_of(above.begin(), above.end(), [&](std::size_t k) {
        return k != j && leq(k, j);
      });
      if (covering) edges.emplace_back(i, j);
    }
  }
  return edges;
}

ConceptLattice enumerate_concepts(const Context& ctx, EnumerationBudget budget, Exec exec) {
  const TruthAlgebra& alg = *ctx.algebra();
  const std::size_t n_obj = ctx.objects()->size();
  const std::size_t n_att = ctx.attributes()->size();
  const std::size_t n_val = alg.size();
  const auto& rel = ctx.incidence().degrees();

  // Basic extents {alpha/x}_ for every nonzero alpha; alpha = 0 gives the top extent.
  const std::size_t n_seeds = n_att * (n_val - 1);
  std::vector<Degree> seeds(n_seeds * n_att, alg.bottom());
  for (std::size_t x = 0; x < n_att; ++x) {
    for (std::size_t a = 1; a < n_val; ++a) {
      seeds[(x * (n_val - 1) + a - 1) * n_att + x] = static_cast<Degree>(a);
    }
  }
  std::vector<Degree> basics(n_seeds * n_obj);
  kernels::lift0_batch(alg, rel, n_obj, n_att, seeds, n_seeds, basics, exec);

  std::unordered_map<std::vector<Degree>, std::size_t, DegreeVectorHash> seen;
  std::vector<Degree> extents(n_obj, alg.top());
  seen.emplace(extents, 0);

  auto check_budget = [&] {
    if (seen.size() > budget.max_concepts) {
      throw ResourceError("concept enumeration exceeded the budget of " +
                          std::to_string(budget.max_concepts) + " concepts");
    }
  };

  std::vector<Degree> met;
  for (std::size_t b = 0; b < n_seeds; ++b) {
    const std::span<const Degree> basic(basics.data() + b * n_obj, n_obj);
    if (seen.count(std::vector<Degree>(basic.begin(), basic.end())) != 0) continue;
    const std::size_t count = seen.size();
    met.resize(count * n_obj);
    kernels::meet_batch(alg, std::span<const Degree>(extents.data(), count * n_obj), count, basic,
                        met, exec);
    for (std::size_t k = 0; k < count; ++k) {
      std::vector<Degree> e(met.begin() + static_cast<std::ptrdiff_t>(k * n_obj),
                            met.begin() + static_cast<std::ptrdiff_t>((k + 1) * n_obj));
      if (seen.emplace(e, seen.size()).second) {
        extents.insert(extents.end(), e.begin(), e.end());
        check_budget();
      }
    }
  }

  const std::size_t m = seen.size();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::uint64_t> weight(m, 0);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < n_obj; ++i) weight[k] += extents[k * n_obj + i];
  }
  auto row = [&](std::size_t k) { return extents.begin() + static_cast<std::ptrdiff_t>(k * n_obj); };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (weight[a] != weight[b]) return weight[a] < weight[b];
    return std::lexicographical_compare(row(a), row(a) + static_cast<std::ptrdiff_t>(n_obj), row(b),
                                        row(b) + static_cast<std::ptrdiff_t>(n_obj));
  });

  std::vector<Degree> sorted(m * n_obj);
  for (std::size_t k = 0; k < m; ++k) {
    std::copy(row(order[k]), row(order[k]) + static_cast<std::ptrdiff_t>(n_obj),
              sorted.begin() + static_cast<std::ptrdiff_t>(k * n_obj));
  }
  std::vector<Degree> intents(m * n_att);
  kernels::lift1_batch(alg, rel, n_obj, n_att, sorted, m, intents, exec);

  std::vector<Concept> concepts;
  concepts.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    concepts.push_back(Concept{
        MvSet(ctx.algebra(), ctx.objects(),
              std::vector<Degree>(sorted.begin() + static_cast<std::ptrdiff_t>(k * n_obj),
                                  sorted.begin() + static_cast<std::ptrdiff_t>((k + 1) * n_obj))),
        MvSet(ctx.algebra(), ctx.attributes(),
              std::vector<Degree>(intents.begin() + static_cast<std::ptrdiff_t>(k * n_att),
                                  intents.begin() + static_cast<std::ptrdiff_t>((k + 1) * n_att)))});
  }
  return ConceptLattice(ctx, std::move(concepts));
}

std::string format_degrees(const MvSet& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += s.algebra()->label(s[i]);
  }
  return out + ")";
}

std::string to_dot(const ConceptLattice& lattice) {
  std::ostringstream os;
  os << "digraph concepts {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    os << "  c" << i << " [label=\"extent " << format_degrees(lattice[i].extent) << "\\nintent "
       << format_degrees(lattice[i].intent) << "\"];\n";
  }
  for (const auto& [lo, hi] : lattice.covers()) os << "  c" << lo << " -> c" << hi << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace mvlogic

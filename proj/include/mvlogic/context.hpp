#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mvlogic/kernels.hpp"
#include "mvlogic/mvset.hpp"

namespace mvlogic {

// A formal A-context (A, X, I): objects, attributes and an A-valued incidence.
class Context {
 public:
  Context(CarrierPtr objects, CarrierPtr attributes, MvRelation incidence);

  const AlgebraPtr& algebra() const { return incidence_.algebra(); }
  const CarrierPtr& objects() const { return objects_; }
  const CarrierPtr& attributes() const { return attributes_; }
  const MvRelation& incidence() const { return incidence_; }

  // f^ = I^(1)[f]
  MvSet up(const MvSet& extent) const;
  // u_ = I^(0)[u]
  MvSet down(const MvSet& intent) const;

  MvSet all_objects(Degree value) const;
  MvSet all_attributes(Degree value) const;

 private:
  CarrierPtr objects_;
  CarrierPtr attributes_;
  MvRelation incidence_;
};

enum class Side { extent, intent };

// Whether s is fixed by the Galois round trip on the given side.
bool is_stable(const Context& ctx, Side side, const MvSet& s);

struct Concept {
  MvSet extent;
  MvSet intent;

  friend bool operator==(const Concept& a, const Concept& b) {
    return a.extent == b.extent && a.intent == b.intent;
  }
};

// (seed^_, seed^)
Concept concept_of(const Context& ctx, const MvSet& seed_extent);
// (seed_, seed_^)
Concept concept_of_intent(const Context& ctx, const MvSet& seed_intent);
// Pointwise concept order: extent inclusion.
bool concept_leq(const Concept& c, const Concept& d);

struct DegreeVectorHash {
  std::size_t operator()(const std::vector<Degree>& v) const noexcept;
};

// The complete lattice of all concepts of a context. Concepts are sorted by
// total extent degree, so index 0 is the bottom and the last index is the top.
class ConceptLattice {
 public:
  ConceptLattice(Context context, std::vector<Concept> concepts);

  const Context& context() const { return context_; }
  std::size_t size() const { return concepts_.size(); }
  const Concept& operator[](std::size_t i) const { return concepts_[i]; }
  const std::vector<Concept>& concepts() const { return concepts_; }

  std::size_t bottom() const { return 0; }
  std::size_t top() const { return concepts_.size() - 1; }

  bool leq(std::size_t i, std::size_t j) const;
  // Extent meet, already stable.
  std::size_t meet(std::size_t i, std::size_t j) const;
  // Intent meet, closed on the extent side.
  std::size_t join(std::size_t i, std::size_t j) const;

  std::optional<std::size_t> find_extent(const std::vector<Degree>& extent) const;
  std::optional<std::size_t> find(const Concept& c) const;
  // Throws UsageError when c is not a concept of this lattice.
  std::size_t index_of(const Concept& c) const;

  // Covering pairs (lower, upper) of the Hasse diagram.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

 private:
  Context context_;
  std::vector<Concept> concepts_;
  std::unordered_map<std::vector<Degree>, std::size_t, DegreeVectorHash> by_extent_;
};

struct EnumerationBudget {
  std::size_t max_concepts = 100000;
};

// All concepts, generated by closing the basic extents {alpha/x}_ under meets.
// Throws ResourceError once more than budget.max_concepts concepts exist.
ConceptLattice enumerate_concepts(const Context& ctx, EnumerationBudget budget = {},
                                  Exec exec = default_exec());

// Graphviz rendering: one node per concept, one edge per covering pair.
std::string to_dot(const ConceptLattice& lattice);

// "(d0, d1, ...)" using the algebra's labels.
std::string format_degrees(const MvSet& s);

}  // namespace mvlogic

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mvlogic/enriched.hpp"
#include "mvlogic/formula.hpp"

namespace mvlogic {

using FramePtr = std::shared_ptr<const EnrichedContext>;
using Valuation = std::map<std::string, Concept>;

// A conceptual model: an enriched context plus a valuation of atoms into its concepts.
class Model {
 public:
  // Throws InputError when a valuation target is not a concept of the frame.
  Model(FramePtr frame, Valuation valuation);

  const EnrichedContext& frame() const { return *frame_; }
  const FramePtr& frame_ptr() const { return frame_; }
  const Valuation& valuation() const { return valuation_; }
  const Concept& value(const std::string& atom) const;

 private:
  FramePtr frame_;
  Valuation valuation_;
};

// The homomorphic extension of the valuation, computed on degree maps.
Concept evaluate(const Model& m, const Formula& phi);

// [[phi]](a) and <<phi>>(x).
Degree degree_membership(const Model& m, const std::string& object, const Formula& phi);
Degree degree_description(const Model& m, const std::string& attribute, const Formula& phi);
// M, a ||-^alpha phi
bool membership_holds(const Model& m, const std::string& object, Degree alpha, const Formula& phi);
// M, x >-^alpha phi
bool description_holds(const Model& m, const std::string& attribute, Degree alpha, const Formula& phi);

// First object a with [[lhs]](a) not below [[rhs]](a), if any.
std::optional<std::size_t> sequent_witness(const Model& m, const Sequent& s);
// Extent inclusion; cross-checked against reverse intent inclusion.
bool sequent_true(const Model& m, const Sequent& s);

struct ValidityBudget {
  std::size_t max_concepts = 100000;
  std::uint64_t max_valuations = 10'000'000;
  // Dense meet/join tables are built for lattices up to this size.
  std::size_t max_table_concepts = 4096;
};

// The complex algebra of a frame on concept indices: dense lattice tables plus
// the index maps of every usable modal operator.
class ComplexAlgebra {
 public:
  ComplexAlgebra(FramePtr frame, const ValidityBudget& budget = {}, Exec exec = default_exec());

  const EnrichedContext& frame() const { return *frame_; }
  const FramePtr& frame_ptr() const { return frame_; }
  const ConceptLattice& lattice() const { return lattice_; }
  std::size_t size() const { return lattice_.size(); }

  std::uint32_t meet(std::uint32_t i, std::uint32_t j) const { return meet_[i * size() + j]; }
  std::uint32_t join(std::uint32_t i, std::uint32_t j) const { return join_[i * size() + j]; }
  bool leq(std::uint32_t i, std::uint32_t j) const { return meet(i, j) == i; }
  bool supports(Connective op) const;
  // Image of concept i under a unary connective.
  std::uint32_t apply(Connective op, std::uint32_t i) const;

  // Evaluates phi when atoms[k] is sent to concept assignment[k].
  std::uint32_t evaluate(const Formula& phi, const std::vector<std::string>& atoms,
                         const std::vector<std::uint32_t>& assignment) const;

 private:
  FramePtr frame_;
  ConceptLattice lattice_;
  std::vector<std::uint32_t> meet_;
  std::vector<std::uint32_t> join_;
  std::map<Connective, std::vector<std::uint32_t>> unary_;
};

struct Countermodel {
  // Atom name -> concept index in the frame's lattice, for the atoms of the sequent.
  std::map<std::string, std::size_t> assignment;
  Valuation valuation;
  // First object whose lhs membership exceeds its rhs membership.
  std::size_t object = 0;
};

struct ValidityVerdict {
  bool valid = true;
  std::size_t lattice_size = 0;
  std::uint64_t valuations = 0;
  std::optional<Countermodel> countermodel;
};

// Brute force over every valuation of the sequent's atoms (sorted by name)
// into the concept lattice. The reported countermodel is the lexicographically
// first failing assignment.
ValidityVerdict sequent_valid(const ComplexAlgebra& algebra, const Sequent& s,
                              const ValidityBudget& budget = {}, Exec exec = default_exec());
ValidityVerdict sequent_valid(const FramePtr& frame, const Sequent& s,
                              const ValidityBudget& budget = {}, Exec exec = default_exec());

struct AxiomResult {
  Sequent axiom;
  ValidityVerdict verdict;
};

struct RuleResult {
  std::string rule;
  bool passed = true;
  // Concept indices c <= d with op(c) not below op(d).
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

struct SoundnessReport {
  std::string label;
  bool refused = false;
  std::string refusal;
  CompatibilityReport compatibility;
  std::size_t lattice_size = 0;
  std::vector<AxiomResult> axioms;
  std::vector<RuleResult> rules;

  bool passed() const;
};

// Validity of every catalogue axiom plus monotonicity of [R_box] and <R_diamond>
// on the concept lattice. Refuses frames lacking a compatible R_box and R_diamond.
SoundnessReport soundness_suite(const FramePtr& frame, const std::string& label = {},
                                const ValidityBudget& budget = {}, Exec exec = default_exec());

}  // namespace mvlogic

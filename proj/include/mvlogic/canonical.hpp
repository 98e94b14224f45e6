#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mvlogic/formula.hpp"
#include "mvlogic/semantics.hpp"

namespace mvlogic {

// A finite bounded lattice given by its order, with a box and a diamond map.
// The diamond preserves finite joins (and bottom); the box preserves finite
// meets (and top). Atoms, when present, name designated elements.
class ModalLattice {
 public:
  // Throws InputError when `leq` is not a lattice order or a modality breaks
  // its preservation law.
  ModalLattice(std::vector<std::string> elements, std::vector<std::vector<bool>> leq,
               std::vector<std::size_t> box, std::vector<std::size_t> dia,
               std::map<std::string, std::size_t> atoms = {});

  // The n-element chain 0 < 1 < ... < n-1 with identity modalities.
  static ModalLattice chain(std::size_t n);
  // The four-element lattice bot < a, b < top with identity modalities.
  static ModalLattice diamond4();

  ModalLattice with_modalities(std::vector<std::size_t> box, std::vector<std::size_t> dia) const;
  ModalLattice with_atoms(std::map<std::string, std::size_t> atoms) const;

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a * size() + b]; }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * size() + b]; }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * size() + b]; }
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }
  std::size_t box(std::size_t a) const { return box_[a]; }
  std::size_t dia(std::size_t a) const { return dia_[a]; }
  const std::vector<std::size_t>& box_map() const { return box_; }
  const std::vector<std::size_t>& dia_map() const { return dia_; }
  const std::map<std::string, std::size_t>& atoms() const { return atoms_; }

  // Element denoted by phi when each atom is sent to its designated element.
  // rhd/lhd are not interpreted here.
  std::size_t interpret(const Formula& phi) const;

 private:
  std::vector<std::string> names_;
  std::vector<bool> leq_;
  std::vector<std::size_t> join_;
  std::vector<std::size_t> meet_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
  std::vector<std::size_t> box_;
  std::vector<std::size_t> dia_;
  std::map<std::string, std::size_t> atoms_;
};

// Top- and meet-preserving map L -> A; proper when it also sends bottom to 0.
struct MvFilter {
  std::vector<Degree> degrees;
  bool proper = false;
  friend bool operator==(const MvFilter&, const MvFilter&) = default;
};

// Bottom-to-1 and join-to-meet map L -> A; proper when it also sends top to 0.
struct MvIdeal {
  std::vector<Degree> degrees;
  bool proper = false;
  friend bool operator==(const MvIdeal&, const MvIdeal&) = default;
};

bool is_filter(const ModalLattice& L, const TruthAlgebra& alg, const std::vector<Degree>& k);
bool is_ideal(const ModalLattice& L, const TruthAlgebra& alg, const std::vector<Degree>& k);

struct FilterBudget {
  std::uint64_t max_candidates = 1'000'000;
};

// Every filter (ideal) of L, in lexicographic order of degree vectors.
std::vector<MvFilter> enumerate_filters(const ModalLattice& L, const TruthAlgebra& alg,
                                        FilterBudget budget = {}, Exec exec = default_exec());
std::vector<MvIdeal> enumerate_ideals(const ModalLattice& L, const TruthAlgebra& alg,
                                      FilterBudget budget = {}, Exec exec = default_exec());

// k^{-dia}(a) = join { k(b) | dia b <= a }
std::vector<Degree> diamond_inverse(const ModalLattice& L, const TruthAlgebra& alg,
                                    const std::vector<Degree>& k);
// k^{-box}(a) = join { k(b) | a <= box b }
std::vector<Degree> box_inverse(const ModalLattice& L, const TruthAlgebra& alg,
                                const std::vector<Degree>& k);

MvFilter diamond_inverse(const ModalLattice& L, const TruthAlgebra& alg, const MvFilter& f);
MvIdeal box_inverse(const ModalLattice& L, const TruthAlgebra& alg, const MvIdeal& i);

// Finite stand-in for the canonical frame: proper filters against proper ideals.
struct CanonicalSurrogate {
  std::shared_ptr<const ModalLattice> lattice;
  AlgebraPtr algebra;
  std::vector<MvFilter> filters;
  std::vector<MvIdeal> ideals;
  // Objects f0.. are the proper filters, attributes i0.. the proper ideals.
  FramePtr frame;

  // Both displayed forms of R_diamond (and of R_box) coincide on every pair.
  bool diamond_forms_agree = true;
  bool box_forms_agree = true;
  // First disagreeing (filter, ideal) pair, if any.
  std::optional<std::pair<std::size_t, std::size_t>> diamond_disagreement;
  std::optional<std::pair<std::size_t, std::size_t>> box_disagreement;
};

// I(f,i) = join_a f(a) (x) i(a); R_dia(i,f) = join_a f^{-dia}(a) (x) i(a);
// R_box(f,i) = join_a f(a) (x) i^{-box}(a). The second displayed forms
// join_a f(a) (x) i(dia a) and join_a f(box a) (x) i(a) are cross-checked.
CanonicalSurrogate build_surrogate(std::shared_ptr<const ModalLattice> L, AlgebraPtr algebra,
                                   FilterBudget budget = {}, Exec exec = default_exec());

struct LemmaItem {
  std::string item;
  bool holds = true;
  // Informational items are reported but do not fail the suite.
  bool informational = false;
  std::uint64_t checked = 0;
  std::string witness;
};

struct LemmaReport {
  std::size_t filters = 0;
  std::size_t proper_filters = 0;
  std::size_t ideals = 0;
  std::size_t proper_ideals = 0;
  std::vector<LemmaItem> items;

  bool passed() const;
  const LemmaItem* find(const std::string& item) const;
};

LemmaReport lemma_suite(const ModalLattice& L, AlgebraPtr algebra, FilterBudget budget = {},
                        Exec exec = default_exec());

// V(p) = (f -> f(p), i -> i(p)) for every atom of the lattice. Throws InputError
// if some atom's pair is not a concept of the surrogate frame.
Valuation canonical_valuation(const CanonicalSurrogate& s);

struct TruthLemmaFailure {
  Formula formula;
  // "extent" or "intent"
  std::string side;
  std::size_t element = 0;
};

struct TruthLemmaReport {
  bool valuation_ok = true;
  std::string valuation_error;
  std::size_t formulas = 0;
  std::vector<TruthLemmaFailure> failures;

  bool passed() const { return valuation_ok && failures.empty(); }
};

// Every formula over the lattice's atoms, constants, &, |, box, dia up to the given depth.
std::vector<Formula> formulas_up_to_depth(const std::vector<std::string>& atoms, std::size_t depth);

// Compares evaluate() in the canonical model with f(phi)/i(phi) for all formulas
// up to `depth`.
TruthLemmaReport truth_lemma_check(const CanonicalSurrogate& s, std::size_t depth);

}  // namespace mvlogic

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mvlogic/canonical.hpp"
#include "mvlogic/enriched.hpp"
#include "mvlogic/formula.hpp"

namespace mvlogic {

using Rng = std::mt19937_64;

// Every seeded generator draws from this engine type; a fixed seed reproduces the same output.
MvRelation random_relation(Rng& rng, const AlgebraPtr& alg, CarrierPtr source, CarrierPtr target);
Context random_context(Rng& rng, const AlgebraPtr& alg, std::size_t objects, std::size_t attributes);

// Smallest relation above r (pointwise) whose singleton images are all stable.
// R_box: columns become extents and rows intents; R_diamond (X x A): columns
// become intents and rows extents. Entries only grow, so the loop terminates.
MvRelation repair_box(const Context& base, MvRelation r);
MvRelation repair_diamond(const Context& base, MvRelation r);

struct FrameShape {
  std::size_t max_objects = 3;
  std::size_t max_attributes = 3;
  bool with_rhd = false;
  bool with_lhd = false;
};

// Uniformly sampled I, R_box and R_diamond, repaired to compatibility.
FramePtr random_compatible_frame(Rng& rng, const AlgebraPtr& alg, FrameShape shape = {});

// Random formula over the given atoms with depth at most max_depth.
Formula random_formula(Rng& rng, const std::vector<std::string>& atoms, std::size_t max_depth,
                       bool with_rhd_lhd = true);

// Every lattice with at most max_size elements (up to isomorphism, max_size <= 4)
// paired with every meet-preserving box and join-preserving diamond.
std::vector<ModalLattice> small_modal_lattices(std::size_t max_size = 4);

}  // namespace mvlogic

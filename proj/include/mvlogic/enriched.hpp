#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mvlogic/context.hpp"

namespace mvlogic {

enum class RelationSlot { box, diamond, rhd, lhd };

std::string to_string(RelationSlot slot);

// One unstable singleton image found by the compatibility check.
struct CompatibilityWitness {
  RelationSlot slot;
  // "R_box^(0)[{alpha/x}]" and friends.
  std::string family;
  Degree alpha;
  std::string element;
  MvSet image;
  MvSet round_trip;
};

struct CompatibilityReport {
  bool box_checked = false;
  bool box_compatible = true;
  bool diamond_checked = false;
  bool diamond_compatible = true;
  // Number of (alpha, element) singleton images examined.
  std::size_t images_checked = 0;
  std::vector<CompatibilityWitness> failures;

  bool passed() const { return box_compatible && diamond_compatible; }
};

// A formal context with optional relations R_box: A x X, R_diamond: X x A,
// R_rhd: A x A and R_lhd: X x X. I-compatibility of R_box and R_diamond is
// checked once at construction.
class EnrichedContext {
 public:
  EnrichedContext(Context base, std::optional<MvRelation> r_box = std::nullopt,
                  std::optional<MvRelation> r_diamond = std::nullopt,
                  std::optional<MvRelation> r_rhd = std::nullopt,
                  std::optional<MvRelation> r_lhd = std::nullopt);

  const Context& base() const { return base_; }
  const AlgebraPtr& algebra() const { return base_.algebra(); }
  const std::optional<MvRelation>& r_box() const { return r_box_; }
  const std::optional<MvRelation>& r_diamond() const { return r_diamond_; }
  const std::optional<MvRelation>& r_rhd() const { return r_rhd_; }
  const std::optional<MvRelation>& r_lhd() const { return r_lhd_; }

  bool has(RelationSlot slot) const;
  // Present and, for box/diamond, compatible.
  bool usable(RelationSlot slot) const;
  const CompatibilityReport& compatibility() const { return compatibility_; }

 private:
  Context base_;
  std::optional<MvRelation> r_box_;
  std::optional<MvRelation> r_diamond_;
  std::optional<MvRelation> r_rhd_;
  std::optional<MvRelation> r_lhd_;
  CompatibilityReport compatibility_;
};

// Runs the four singleton-family stability checks from scratch.
CompatibilityReport check_compatibility(const Context& base, const std::optional<MvRelation>& r_box,
                                        const std::optional<MvRelation>& r_diamond,
                                        Exec exec = default_exec());
CompatibilityReport check_compatibility(const EnrichedContext& ec, Exec exec = default_exec());

// [R_box]c = (R_box^(0)[intent], its up-closure). Throws CapabilityError if
// R_box is absent or incompatible.
Concept box_op(const EnrichedContext& ec, const Concept& c);
// <R_diamond>c = ((R_diamond^(0)[extent])_, R_diamond^(0)[extent]).
Concept diamond_op(const EnrichedContext& ec, const Concept& c);

// Result of the operators whose relations carry no compatibility condition:
// the raw degree map and the concept it generates.
struct ModalImage {
  MvSet raw;
  Concept closed;
  bool raw_stable = false;
};

// raw extent b -> meet over b' of extent(b') -> R_rhd(b', b), closed via concept_of.
ModalImage rhd_op(const EnrichedContext& ec, const Concept& c);
// raw intent y -> meet over z of intent(z) -> R_lhd(z, y), closed on the intent side.
ModalImage lhd_op(const EnrichedContext& ec, const Concept& c);

}  // namespace mvlogic

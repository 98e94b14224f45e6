#include "mvlogic/enriched.hpp"

#include <algorithm>

#include "mvlogic/error.hpp"

namespace mvlogic {

std::string to_string(RelationSlot slot) {
  switch (slot) {
    case RelationSlot::box:
      return "R_box";
    case RelationSlot::diamond:
      return "R_diamond";
    case RelationSlot::rhd:
      return "R_rhd";
    case RelationSlot::lhd:
      return "R_lhd";
  }
  return "?";
}

namespace {

void require_shape(const std::optional<MvRelation>& r, const CarrierPtr& source,
                   const CarrierPtr& target, const AlgebraPtr& algebra, RelationSlot slot) {
  if (!r) return;
  if (!same_carrier(r->source(), source) || !same_carrier(r->target(), target)) {
    throw InputError(to_string(slot) + " must be a " + std::to_string(source->size()) + "x" +
                     std::to_string(target->size()) + " matrix over the base carriers");
  }
  if (!same_algebra(r->algebra(), algebra)) {
    throw InputError(to_string(slot) + " uses a different algebra than the incidence");
  }
}

// Every singleton {alpha/w} over a carrier of `width`, alpha-major within w.
std::vector<Degree> singleton_batch(std::size_t width, std::size_t n_val) {
  std::vector<Degree> seeds(width * n_val * width, 0);
  for (std::size_t w = 0; w < width; ++w) {
    for (std::size_t a = 0; a < n_val; ++a) seeds[(w * n_val + a) * width + w] = static_cast<Degree>(a);
  }
  return seeds;
}

struct Family {
  RelationSlot slot;
  std::string name;
  const MvRelation* relation;
  bool use_lift0;    // lift0 consumes sets over the target, lift1 over the source
  Side result_side;  // which side of the base the image must be stable on
};

// Checks one singleton family; returns true when every image is stable.
bool check_family(const Context& base, const Family& fam, CompatibilityReport& report, Exec exec) {
  const TruthAlgebra& alg = *base.algebra();
  const MvRelation& r = *fam.relation;
  const CarrierPtr& seed_carrier = fam.use_lift0 ? r.target() : r.source();
  const CarrierPtr& image_carrier = fam.use_lift0 ? r.source() : r.target();
  const std::size_t width = seed_carrier->size();
  const std::size_t out_width = image_carrier->size();
  const std::size_t n_val = alg.size();
  const std::size_t count = width * n_val;

  const std::vector<Degree> seeds = singleton_batch(width, n_val);
  std::vector<Degree> images(count * out_width);
  if (fam.use_lift0) {
    kernels::lift0_batch(alg, r.degrees(), r.rows(), r.cols(), seeds, count, images, exec);
  } else {
    kernels::lift1_batch(alg, r.degrees(), r.rows(), r.cols(), seeds, count, images, exec);
  }

  const MvRelation& inc = base.incidence();
  const std::size_t n_obj = inc.rows();
  const std::size_t n_att = inc.cols();
  std::vector<Degree> round_trip(count * out_width);
  if (fam.result_side == Side::extent) {
    std::vector<Degree> mid(count * n_att);
    kernels::lift1_batch(alg, inc.degrees(), n_obj, n_att, images, count, mid, exec);
    kernels::lift0_batch(alg, inc.degrees(), n_obj, n_att, mid, count, round_trip, exec);
  } else {
    std::vector<Degree> mid(count * n_obj);
    kernels::lift0_batch(alg, inc.degrees(), n_obj, n_att, images, count, mid, exec);
    kernels::lift1_batch(alg, inc.degrees(), n_obj, n_att, mid, count, round_trip, exec);
  }

  report.images_checked += count;
  bool all_stable = true;
  for (std::size_t k = 0; k < count; ++k) {
    auto first = images.begin() + static_cast<std::ptrdiff_t>(k * out_width);
    auto trip = round_trip.begin() + static_cast<std::ptrdiff_t>(k * out_width);
    if (std::equal(first, first + static_cast<std::ptrdiff_t>(out_width), trip)) continue;
    all_stable = false;
    report.failures.push_back(CompatibilityWitness{
        fam.slot, fam.name, static_cast<Degree>(k % n_val), seed_carrier->name(k / n_val),
        MvSet(base.algebra(), image_carrier,
              std::vector<Degree>(first, first + static_cast<std::ptrdiff_t>(out_width))),
        MvSet(base.algebra(), image_carrier,
              std::vector<Degree>(trip, trip + static_cast<std::ptrdiff_t>(out_width)))});
  }
  return all_stable;
}

}  // namespace

CompatibilityReport check_compatibility(const Context& base, const std::optional<MvRelation>& r_box,
                                        const std::optional<MvRelation>& r_diamond, Exec exec) {
  require_shape(r_box, base.objects(), base.attributes(), base.algebra(), RelationSlot::box);
  require_shape(r_diamond, base.attributes(), base.objects(), base.algebra(), RelationSlot::diamond);
  CompatibilityReport report;
  if (r_box) {
    report.box_checked = true;
    const bool f0 = check_family(
        base, {RelationSlot::box, "R_box^(0)[{alpha/x}]", &*r_box, true, Side::extent}, report, exec);
    const bool f1 = check_family(
        base, {RelationSlot::box, "R_box^(1)[{alpha/a}]", &*r_box, false, Side::intent}, report, exec);
    report.box_compatible = f0 && f1;
  }
  if (r_diamond) {
    report.diamond_checked = true;
    const bool f0 = check_family(
        base, {RelationSlot::diamond, "R_diamond^(0)[{alpha/a}]", &*r_diamond, true, Side::intent},
        report, exec);
    const bool f1 = check_family(
        base, {RelationSlot::diamond, "R_diamond^(1)[{alpha/x}]", &*r_diamond, false, Side::extent},
        report, exec);
    report.diamond_compatible = f0 && f1;
  }
  return report;
}

CompatibilityReport check_compatibility(const EnrichedContext& ec, Exec exec) {
  return check_compatibility(ec.base(), ec.r_box(), ec.r_diamond(), exec);
}

EnrichedContext::EnrichedContext(Context base, std::optional<MvRelation> r_box,
                                 std::optional<MvRelation> r_diamond, std::optional<MvRelation> r_rhd,
                                 std::optional<MvRelation> r_lhd)
    : base_(std::move(base)),
      r_box_(std::move(r_box)),
      r_diamond_(std::move(r_diamond)),
      r_rhd_(std::move(r_rhd)),
      r_lhd_(std::move(r_lhd)) {
  require_shape(r_rhd_, base_.objects(), base_.objects(), base_.algebra(), RelationSlot::rhd);
  require_shape(r_lhd_, base_.attributes(), base_.attributes(), base_.algebra(), RelationSlot::lhd);
  compatibility_ = check_compatibility(base_, r_box_, r_diamond_);
}

bool EnrichedContext::has(RelationSlot slot) const {
  switch (slot) {
    case RelationSlot::box:
      return r_box_.has_value();
    case RelationSlot::diamond:
      return r_diamond_.has_value();
    case RelationSlot::rhd:
      return r_rhd_.has_value();
    case RelationSlot::lhd:
      return r_lhd_.has_value();
  }
  return false;
}

bool EnrichedContext::usable(RelationSlot slot) const {
  if (!has(slot)) return false;
  if (slot == RelationSlot::box) return compatibility_.box_compatible;
  if (slot == RelationSlot::diamond) return compatibility_.diamond_compatible;
  return true;
}

namespace {

void require_usable(const EnrichedContext& ec, RelationSlot slot) {
  if (!ec.has(slot)) throw CapabilityError("frame has no " + to_string(slot) + " relation");
  if (!ec.usable(slot)) {
    throw CapabilityError(to_string(slot) + " is not I-compatible; the operator is disabled");
  }
}

}  // namespace

Concept box_op(const EnrichedContext& ec, const Concept& c) {
  require_usable(ec, RelationSlot::box);
  MvSet extent = lift0(*ec.r_box(), c.intent);
  MvSet intent = ec.base().up(extent);
  return Concept{std::move(extent), std::move(intent)};
}

Concept diamond_op(const EnrichedContext& ec, const Concept& c) {
  require_usable(ec, RelationSlot::diamond);
  MvSet intent = lift0(*ec.r_diamond(), c.extent);
  MvSet extent = ec.base().down(intent);
  return Concept{std::move(extent), std::move(intent)};
}

ModalImage rhd_op(const EnrichedContext& ec, const Concept& c) {
  require_usable(ec, RelationSlot::rhd);
  MvSet raw = lift1(*ec.r_rhd(), c.extent);
  Concept closed = concept_of(ec.base(), raw);
  const bool stable = closed.extent == raw;
  return ModalImage{std::move(raw), std::move(closed), stable};
}

ModalImage lhd_op(const EnrichedContext& ec, const Concept& c) {
  require_usable(ec, RelationSlot::lhd);
  MvSet raw = lift1(*ec.r_lhd(), c.intent);
  Concept closed = concept_of_intent(ec.base(), raw);
  const bool stable = closed.intent == raw;
  return ModalImage{std::move(raw), std::move(closed), stable};
}

}  // namespace mvlogic

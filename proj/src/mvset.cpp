#include "mvlogic/mvset.hpp"

#include <unordered_set>

#include "mvlogic/error.hpp"
#include "mvlogic/kernels.hpp"

namespace mvlogic {

Carrier::Carrier(std::vector<std::string> names) : names_(std::move(names)) {
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw InputError("carrier element names must be nonempty");
    if (!seen.insert(n).second) throw InputError("duplicate carrier element '" + n + "'");
  }
}

std::optional<std::size_t> Carrier::find(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t Carrier::index_of(const std::string& name) const {
  if (auto i = find(name)) return *i;
  throw UsageError("unknown element '" + name + "'");
}

CarrierPtr make_carrier(std::vector<std::string> names) {
  return std::make_shared<const Carrier>(std::move(names));
}

CarrierPtr make_carrier(const std::string& prefix, std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  return make_carrier(std::move(names));
}

bool same_carrier(const CarrierPtr& a, const CarrierPtr& b) {
  return a == b || (a && b && *a == *b);
}

namespace {

void require_compatible(const MvSet& f, const MvSet& g, const char* what) {
  if (!same_carrier(f.carrier(), g.carrier())) {
    throw UsageError(std::string(what) + ": carrier mismatch");
  }
  if (!same_algebra(f.algebra(), g.algebra())) {
    throw UsageError(std::string(what) + ": algebra mismatch");
  }
}

}  // namespace

MvSet::MvSet(AlgebraPtr algebra, CarrierPtr carrier, std::vector<Degree> degrees)
    : algebra_(std::move(algebra)), carrier_(std::move(carrier)), degrees_(std::move(degrees)) {
  if (!algebra_ || !carrier_) throw UsageError("MvSet needs an algebra and a carrier");
  if (degrees_.size() != carrier_->size()) {
    throw InputError("MvSet has " + std::to_string(degrees_.size()) + " degrees for a carrier of " +
                     std::to_string(carrier_->size()));
  }
  for (Degree d : degrees_) {
    if (d >= algebra_->size()) {
      throw InputError("degree " + std::to_string(d) + " is not in " + algebra_->name());
    }
  }
}

MvSet MvSet::constant(AlgebraPtr algebra, CarrierPtr carrier, Degree value) {
  const std::size_t n = carrier->size();
  return MvSet(std::move(algebra), std::move(carrier), std::vector<Degree>(n, value));
}

MvSet MvSet::singleton(AlgebraPtr algebra, CarrierPtr carrier, Degree alpha, std::size_t w) {
  if (w >= carrier->size()) throw UsageError("singleton point is not in the carrier");
  std::vector<Degree> d(carrier->size(), algebra->bottom());
  d[w] = alpha;
  return MvSet(std::move(algebra), std::move(carrier), std::move(d));
}

MvSet MvSet::singleton(AlgebraPtr algebra, CarrierPtr carrier, Degree alpha, const std::string& w) {
  const std::size_t i = carrier->index_of(w);
  return singleton(std::move(algebra), std::move(carrier), alpha, i);
}

Degree MvSet::at(const std::string& element) const { return degrees_[carrier_->index_of(element)]; }

Degree subsethood(const MvSet& f, const MvSet& g) {
  require_compatible(f, g, "subsethood");
  const TruthAlgebra& alg = *f.algebra();
  Degree acc = alg.top();
  for (std::size_t i = 0; i < f.size(); ++i) acc = alg.meet(acc, alg.residuum(f[i], g[i]));
  return acc;
}

bool included(const MvSet& f, const MvSet& g) {
  require_compatible(f, g, "inclusion");
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!f.algebra()->leq(f[i], g[i])) return false;
  }
  return true;
}

MvSet pointwise_meet(const MvSet& f, const MvSet& g) {
  require_compatible(f, g, "meet");
  std::vector<Degree> d(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) d[i] = f.algebra()->meet(f[i], g[i]);
  return MvSet(f.algebra(), f.carrier(), std::move(d));
}

MvSet pointwise_join(const MvSet& f, const MvSet& g) {
  require_compatible(f, g, "join");
  std::vector<Degree> d(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) d[i] = f.algebra()->join(f[i], g[i]);
  return MvSet(f.algebra(), f.carrier(), std::move(d));
}

MvSet join_all(std::span<const MvSet> family) {
  if (family.empty()) throw UsageError("join of an empty family needs an explicit carrier");
  MvSet acc = MvSet::constant(family.front().algebra(), family.front().carrier(),
                              family.front().algebra()->bottom());
  for (const auto& f : family) acc = pointwise_join(acc, f);
  return acc;
}

MvRelation::MvRelation(AlgebraPtr algebra, CarrierPtr source, CarrierPtr target,
                       std::vector<Degree> degrees)
    : algebra_(std::move(algebra)),
      source_(std::move(source)),
      target_(std::move(target)),
      degrees_(std::move(degrees)) {
  if (!algebra_ || !source_ || !target_) throw UsageError("MvRelation needs algebra and carriers");
  if (degrees_.size() != source_->size() * target_->size()) {
    throw InputError("relation matrix must be " + std::to_string(source_->size()) + "x" +
                     std::to_string(target_->size()));
  }
  for (Degree d : degrees_) {
    if (d >= algebra_->size()) {
      throw InputError("degree " + std::to_string(d) + " is not in " + algebra_->name());
    }
  }
}

MvRelation MvRelation::constant(AlgebraPtr algebra, CarrierPtr source, CarrierPtr target,
                                Degree value) {
  const std::size_t n = source->size() * target->size();
  return MvRelation(std::move(algebra), std::move(source), std::move(target),
                    std::vector<Degree>(n, value));
}

MvRelation MvRelation::identity(AlgebraPtr algebra, CarrierPtr carrier) {
  const std::size_t n = carrier->size();
  std::vector<Degree> d(n * n, algebra->bottom());
  for (std::size_t i = 0; i < n; ++i) d[i * n + i] = algebra->top();
  return MvRelation(std::move(algebra), carrier, carrier, std::move(d));
}

MvRelation MvRelation::transpose() const {
  std::vector<Degree> d(degrees_.size());
  for (std::size_t s = 0; s < rows(); ++s) {
    for (std::size_t t = 0; t < cols(); ++t) d[t * rows() + s] = (*this)(s, t);
  }
  return MvRelation(algebra_, target_, source_, std::move(d));
}

MvSet MvRelation::row(std::size_t s) const {
  std::vector<Degree> d(degrees_.begin() + static_cast<std::ptrdiff_t>(s * cols()),
                        degrees_.begin() + static_cast<std::ptrdiff_t>((s + 1) * cols()));
  return MvSet(algebra_, target_, std::move(d));
}

MvSet MvRelation::column(std::size_t t) const {
  std::vector<Degree> d(rows());
  for (std::size_t s = 0; s < rows(); ++s) d[s] = (*this)(s, t);
  return MvSet(algebra_, source_, std::move(d));
}

MvSet lift1(const MvRelation& r, const MvSet& f) {
  if (!same_carrier(r.source(), f.carrier())) throw UsageError("lift1: set is not on the relation source");
  if (!same_algebra(r.algebra(), f.algebra())) throw UsageError("lift1: algebra mismatch");
  std::vector<Degree> out(r.cols());
  kernels::lift1(*r.algebra(), r.degrees(), r.rows(), r.cols(), f.degrees(), out);
  return MvSet(r.algebra(), r.target(), std::move(out));
}

MvSet lift0(const MvRelation& r, const MvSet& u) {
  if (!same_carrier(r.target(), u.carrier())) throw UsageError("lift0: set is not on the relation target");
  if (!same_algebra(r.algebra(), u.algebra())) throw UsageError("lift0: algebra mismatch");
  std::vector<Degree> out(r.rows());
  kernels::lift0(*r.algebra(), r.degrees(), r.rows(), r.cols(), u.degrees(), out);
  return MvSet(r.algebra(), r.source(), std::move(out));
}

}  // namespace mvlogic

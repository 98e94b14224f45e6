#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mvlogic/truth_algebra.hpp"

namespace mvlogic {

// Finite ordered set of element identifiers.
class Carrier {
 public:
  explicit Carrier(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> find(const std::string& name) const;
  // Throws UsageError for unknown names.
  std::size_t index_of(const std::string& name) const;

  friend bool operator==(const Carrier& a, const Carrier& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
};

using CarrierPtr = std::shared_ptr<const Carrier>;

CarrierPtr make_carrier(std::vector<std::string> names);
// Carrier named prefix0, prefix1, ...
CarrierPtr make_carrier(const std::string& prefix, std::size_t n);

bool same_carrier(const CarrierPtr& a, const CarrierPtr& b);

// An A-valued subset: a total map from a finite carrier into a truth algebra.
class MvSet {
 public:
  MvSet(AlgebraPtr algebra, CarrierPtr carrier, std::vector<Degree> degrees);

  static MvSet constant(AlgebraPtr algebra, CarrierPtr carrier, Degree value);
  // {alpha/w}: alpha at w, bottom elsewhere.
  static MvSet singleton(AlgebraPtr algebra, CarrierPtr carrier, Degree alpha, std::size_t w);
  static MvSet singleton(AlgebraPtr algebra, CarrierPtr carrier, Degree alpha, const std::string& w);

  const AlgebraPtr& algebra() const { return algebra_; }
  const CarrierPtr& carrier() const { return carrier_; }
  std::size_t size() const { return degrees_.size(); }
  Degree operator[](std::size_t i) const { return degrees_[i]; }
  Degree at(const std::string& element) const;
  const std::vector<Degree>& degrees() const { return degrees_; }

  friend bool operator==(const MvSet& a, const MvSet& b) { return a.degrees_ == b.degrees_; }

 private:
  AlgebraPtr algebra_;
  CarrierPtr carrier_;
  std::vector<Degree> degrees_;
};

// S_W(f, g): meet over the carrier of f(z) -> g(z).
Degree subsethood(const MvSet& f, const MvSet& g);
// Pointwise order f <= g.
bool included(const MvSet& f, const MvSet& g);
MvSet pointwise_meet(const MvSet& f, const MvSet& g);
MvSet pointwise_join(const MvSet& f, const MvSet& g);
// Join of a nonempty family over a shared carrier.
MvSet join_all(std::span<const MvSet> family);

// An A-valued relation R: source x target -> A, stored row-major.
class MvRelation {
 public:
  MvRelation(AlgebraPtr algebra, CarrierPtr source, CarrierPtr target, std::vector<Degree> degrees);

  static MvRelation constant(AlgebraPtr algebra, CarrierPtr source, CarrierPtr target, Degree value);
  // Delta_Z: top on the diagonal, bottom elsewhere.
  static MvRelation identity(AlgebraPtr algebra, CarrierPtr carrier);

  const AlgebraPtr& algebra() const { return algebra_; }
  const CarrierPtr& source() const { return source_; }
  const CarrierPtr& target() const { return target_; }
  std::size_t rows() const { return source_->size(); }
  std::size_t cols() const { return target_->size(); }
  Degree operator()(std::size_t s, std::size_t t) const { return degrees_[s * cols() + t]; }
  const std::vector<Degree>& degrees() const { return degrees_; }

  MvRelation transpose() const;
  MvSet row(std::size_t s) const;
  MvSet column(std::size_t t) const;

  friend bool operator==(const MvRelation& a, const MvRelation& b) {
    return a.degrees_ == b.degrees_ && a.rows() == b.rows();
  }

 private:
  AlgebraPtr algebra_;
  CarrierPtr source_;
  CarrierPtr target_;
  std::vector<Degree> degrees_;
};

// R^(1)[f]: x -> meet over a of f(a) -> R(a, x). f lives on the source.
MvSet lift1(const MvRelation& r, const MvSet& f);
// R^(0)[u]: a -> meet over x of u(x) -> R(a, x). u lives on the target.
MvSet lift0(const MvRelation& r, const MvSet& u);

}  // namespace mvlogic

#pragma once

#include <initializer_list>
#include <memory>
#include <vector>

#include "mvlogic/enriched.hpp"
#include "mvlogic/semantics.hpp"

namespace testing_helpers {

using namespace mvlogic;

inline AlgebraPtr luk(std::size_t n) { return TruthAlgebra::chain(AlgebraKind::lukasiewicz, n); }
inline AlgebraPtr goedel(std::size_t n) { return TruthAlgebra::chain(AlgebraKind::goedel, n); }
inline AlgebraPtr boolean() { return TruthAlgebra::chain(AlgebraKind::boolean, 2); }

inline std::vector<Degree> flat(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<Degree> out;
  for (const auto& r : rows)
    for (int v : r) out.push_back(static_cast<Degree>(v));
  return out;
}

// Objects a1.., attributes x1..
inline Context context(const AlgebraPtr& alg, std::size_t na, std::size_t nx, std::vector<Degree> incidence) {
  std::vector<std::string> a, x;
  for (std::size_t i = 1; i <= na; ++i) a.push_back("a" + std::to_string(i));
  for (std::size_t i = 1; i <= nx; ++i) x.push_back("x" + std::to_string(i));
  CarrierPtr objects = make_carrier(a);
  CarrierPtr attributes = make_carrier(x);
  return Context(objects, attributes, MvRelation(alg, objects, attributes, std::move(incidence)));
}

inline Context diagonal2() { return context(boolean(), 2, 2, flat({{1, 0}, {0, 1}})); }
// 1 x 1 context with I = 1/2 over Lukasiewicz 3.
inline Context half1() { return context(luk(3), 1, 1, {1}); }

inline MvSet extent(const Context& c, std::vector<Degree> d) { return MvSet(c.algebra(), c.objects(), std::move(d)); }
inline MvSet intent(const Context& c, std::vector<Degree> d) { return MvSet(c.algebra(), c.attributes(), std::move(d)); }

inline MvRelation box_rel(const Context& c, std::vector<Degree> d) {
  return MvRelation(c.algebra(), c.objects(), c.attributes(), std::move(d));
}
inline MvRelation dia_rel(const Context& c, std::vector<Degree> d) {
  return MvRelation(c.algebra(), c.attributes(), c.objects(), std::move(d));
}

inline FramePtr frame(Context c, std::optional<MvRelation> box, std::optional<MvRelation> dia,
                      std::optional<MvRelation> rhd = std::nullopt, std::optional<MvRelation> lhd = std::nullopt) {
  return std::make_shared<const EnrichedContext>(std::move(c), std::move(box), std::move(dia), std::move(rhd),
                                                 std::move(lhd));
}

// R_box = I and R_diamond = I transposed.
inline FramePtr identity_frame(const Context& c) {
  return frame(c, c.incidence(), c.incidence().transpose());
}

}  // namespace testing_helpers

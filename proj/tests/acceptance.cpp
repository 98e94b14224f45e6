// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "helpers.hpp"
#include "mvlogic/canonical.hpp"
#include "mvlogic/generators.hpp"
#include "mvlogic/market.hpp"
#include "oracles.hpp"

using namespace mvlogic;
using namespace testing_helpers;
using nlohmann::json;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

// AC1: residuated-lattice laws on the built-in chains, residuation re-derived independently.
Outcome ac1() {
  std::uint64_t triples = 0;
  for (auto kind : {AlgebraKind::lukasiewicz, AlgebraKind::goedel}) {
    for (std::size_t n = 2; n <= 7; ++n) {
      auto alg = TruthAlgebra::chain(kind, n);
      if (!validate_algebra(alg->tables()).passed()) return fail(alg->name() + " fails validate_algebra");
      for (Degree a = 0; a < n; ++a)
        for (Degree b = 0; b < n; ++b)
          for (Degree c = 0; c < n; ++c, ++triples)
            if (alg->leq(alg->otimes(a, b), c) != alg->leq(a, alg->residuum(b, c)))
              return fail(alg->name() + " residuation");
    }
  }
  return {true, std::to_string(triples) + " triples"};
}

// AC2: S(f, u down) = S(u, f up), exhaustive over Ł3 2x2 contexts.
Outcome ac2() {
  auto l3 = luk(3);
  auto vecs = oracle::all_vectors(3, 2);
  std::uint64_t checked = 0;
  for (const auto& inc : oracle::all_vectors(3, 4)) {
    Context c = context(l3, 2, 2, inc);
    for (const auto& f : vecs)
      for (const auto& u : vecs) {
        MvSet fe = extent(c, f);
        MvSet ui = intent(c, u);
        if (subsethood(fe, c.down(ui)) != subsethood(ui, c.up(fe))) return fail("adjunction");
        ++checked;
      }
  }
  return {true, std::to_string(checked) + " cases"};
}

// AC3: f = join of its singletons, carriers of size <= 3 over Ł4.
Outcome ac3() {
  auto l4 = luk(4);
  std::uint64_t checked = 0;
  for (std::size_t n = 0; n <= 3; ++n) {
    auto w = make_carrier("w", n);
    for (const auto& d : oracle::all_vectors(4, n)) {
      MvSet f(l4, w, d);
      MvSet acc = MvSet::constant(l4, w, l4->bottom());
      for (std::size_t i = 0; i < n; ++i) acc = pointwise_join(acc, MvSet::singleton(l4, w, f[i], i));
      if (acc != f) return fail("decomposition");
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " sets"};
}

// AC4: enumeration equals brute-force stable pairs.
Outcome ac4() {
  ConceptLattice d = enumerate_concepts(diagonal2());
  if (d.size() != 4 || d.covers().size() != 4) return fail("diagonal lattice is not the 4-diamond");
  if (enumerate_concepts(half1()).size() != 2) return fail("half context");
  Rng rng(4004);
  const AlgebraPtr algs[] = {boolean(), luk(3), goedel(3)};
  for (int t = 0; t < 200; ++t) {
    Context c = random_context(rng, algs[t % 3], 1 + rng() % 3, 1 + rng() % 3);
    ConceptLattice L = enumerate_concepts(c);
    std::set<std::pair<oracle::Vec, oracle::Vec>> got;
    for (const auto& k : L.concepts()) got.emplace(k.extent.degrees(), k.intent.degrees());
    if (got.size() != L.size() || got != oracle::stable_pairs(oracle::raw(c)))
      return fail("context " + std::to_string(t));
  }
  return {true, "200 contexts + 2 fixed"};
}

// AC5: box preserves meets and top, diamond joins and bottom.
Outcome ac5() {
  Rng rng(5005);
  const AlgebraPtr algs[] = {boolean(), luk(3), goedel(3)};
  std::uint64_t pairs = 0;
  for (int t = 0; t < 200; ++t) {
    FramePtr f = random_compatible_frame(rng, algs[t % 3]);
    ConceptLattice L = enumerate_concepts(f->base());
    const std::size_t n = L.size();
    std::vector<std::size_t> b(n), d(n);
    for (std::size_t i = 0; i < n; ++i) {
      b[i] = L.index_of(box_op(*f, L[i]));
      d[i] = L.index_of(diamond_op(*f, L[i]));
    }
    if (b[L.top()] != L.top()) return fail("box top, frame " + std::to_string(t));
    if (d[L.bottom()] != L.bottom()) return fail("diamond bottom, frame " + std::to_string(t));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j, ++pairs) {
        if (b[L.meet(i, j)] != L.meet(b[i], b[j])) return fail("box meet, frame " + std::to_string(t));
        if (d[L.join(i, j)] != L.join(d[i], d[j])) return fail("diamond join, frame " + std::to_string(t));
      }
  }
  return {true, std::to_string(pairs) + " concept pairs"};
}

// AC6: every catalogue axiom valid on random compatible frames.
Outcome ac6() {
  Rng rng(6006);
  const AlgebraPtr algs[] = {boolean(), luk(3), goedel(3)};
  for (int t = 0; t < 100; ++t) {
    FramePtr f = random_compatible_frame(rng, algs[t % 3]);
    SoundnessReport r = soundness_suite(f);
    if (!r.passed()) return fail("frame " + std::to_string(t));
  }
  return {true, std::to_string(axiom_catalogue().size()) + " axioms (the full display) + 2 rules x 100 frames"};
}

// AC7: R_box = I and R_diamond = I^t act as identities.
Outcome ac7() {
  Rng rng(7007);
  std::uint64_t concepts = 0;
  for (int t = 0; t < 50; ++t) {
    Context c = random_context(rng, t % 2 ? luk(4) : goedel(3), 1 + rng() % 3, 1 + rng() % 3);
    auto f = identity_frame(c);
    const ConceptLattice L = enumerate_concepts(c);
    for (const auto& k : L.concepts()) {
      if (box_op(*f, k) != k || diamond_op(*f, k) != k) return fail("context " + std::to_string(t));
      ++concepts;
    }
  }
  return {true, std::to_string(concepts) + " concepts"};
}

// AC8: filter/ideal closure of the inverse transforms, the join identities, agreement of both relation forms.
Outcome ac8() {
  auto l3 = luk(3);
  auto lattices = small_modal_lattices(4);
  const char* items[] = {"filter_closed_under_diamond_inverse", "ideal_closed_under_box_inverse",
                         "diamond_inverse_identity", "box_inverse_identity"};
  for (std::size_t k = 0; k < lattices.size(); ++k) {
    const ModalLattice& L = lattices[k];
    LemmaReport r = lemma_suite(L, l3);
    for (const char* item : items) {
      const LemmaItem* it = r.find(item);
      if (!it || !it->holds) return fail(std::string(item) + " on lattice " + std::to_string(k));
    }
    auto s = build_surrogate(std::make_shared<const ModalLattice>(L), l3);
    if (!s.diamond_forms_agree || !s.box_forms_agree) return fail("forms disagree on lattice " + std::to_string(k));
  }
  return {true, std::to_string(lattices.size()) + " modal lattices"};
}

// AC9: canonical surrogate compatibility.
Outcome ac9() {
  for (const auto& L : {ModalLattice::chain(2), ModalLattice::diamond4()}) {
    for (auto alg : {boolean(), luk(3)}) {
      auto s = build_surrogate(std::make_shared<const ModalLattice>(L), alg);
      const EnrichedContext& f = *s.frame;
      if (!check_compatibility(f.base(), f.r_box(), f.r_diamond()).passed())
        return fail(std::to_string(L.size()) + "-element lattice over " + alg->name());
    }
  }
  return {true, "2-chain and 4-diamond"};
}

// AC10: parse(print(phi)) = phi.
Outcome ac10() {
  Rng rng(1010);
  for (int t = 0; t < 1000; ++t) {
    Formula f = random_formula(rng, {"p", "q", "r"}, 8);
    if (parse_formula(to_string(f)) != f) return fail(to_string(f));
  }
  return {true, "1000 formulas"};
}

// AC11: the market worked degrees.
Outcome ac11() {
  const Degree half = 1;
  Arena firms = arena_from_json(json{{"algebra", "lukasiewicz:3"},
                                     {"objects", {"a", "b"}},
                                     {"attributes", {"x1", "x2"}},
                                     {"I", {{2, 1}, {1, 1}}}});
  if (firm_category(firms, "a").extent[1] != half) return fail("firm_category extent at b");

  Arena basket = arena_from_json(
      json{{"algebra", "lukasiewicz:3"}, {"objects", {"a"}}, {"attributes", {"x1", "x2"}}, {"I", {{2, 1}}}});
  if (basket_category(basket, {{"x1", half}, {"x2", 2}}).extent[0] != half) return fail("basket extent at a");

  // Crisp diagonal, so c_x1 has extent (1, 0).
  Arena rhd = arena_from_json(json{{"algebra", "lukasiewicz:3"},
                                   {"objects", {"a", "b"}},
                                   {"attributes", {"x1", "x2"}},
                                   {"I", {{2, 0}, {0, 2}}},
                                   {"R_rhd", {{2, 1}, {0, 2}}}});
  Concept seed = market_category(rhd, "x1");
  if (seed.extent.degrees() != std::vector<Degree>{2, 0}) return fail("rhd seed extent");
  auto t = typicality_analysis(rhd, Typicality::rhd_over_concept, seed);
  if (t.entries.size() != 2 || t.entries[1].degree != half) return fail("rhd degree at b");

  Arena box = arena_from_json(json{{"algebra", "lukasiewicz:3"},
                                   {"objects", {"a", "b"}},
                                   {"attributes", {"x"}},
                                   {"I", {{2}, {1}}},
                                   {"R_box", {{2}, {1}}}});
  auto b = box_refinement_analysis(box, "a");
  if (b.entries.size() != 2 || b.entries[1].degree != half) return fail("box refinement degree at b");
  return {true, "firm 1/2, basket 1/2, rhd 1/2, box 1/2"};
}

// AC12: p |- box p is invalid on the all-0 R_box diagonal frame.
Outcome ac12() {
  Context d = diagonal2();
  auto f = frame(d, box_rel(d, {0, 0, 0, 0}), std::nullopt);
  const Sequent s = parse_sequent("p |- box p");
  ValidityVerdict v = sequent_valid(f, s);
  if (v.valid || !v.countermodel) return fail("reported valid");
  Model m(f, v.countermodel->valuation);
  if (sequent_true(m, s)) return fail("countermodel does not refute the sequent");
  return {true, "countermodel p = " + format_degrees(v.countermodel->valuation.at("p").extent) + " at " +
                    d.objects()->name(v.countermodel->object)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"AC1  residuated-lattice laws", 1, ac1},      {"AC2  Galois adjunction", 30, ac2},
      {"AC3  singleton decomposition", 1, ac3},      {"AC4  concept enumeration", 60, ac4},
      {"AC5  modal meet/join preservation", 120, ac5}, {"AC6  soundness", 120, ac6},
      {"AC7  identity-relation laws", 10, ac7},      {"AC8  appendix lemma suite", 120, ac8},
      {"AC9  surrogate compatibility", 10, ac9},     {"AC10 parser round-trip", 1, ac10},
      {"AC11 market worked degrees", 1, ac11},       {"AC12 known-invalid sequent", 1, ac12},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > c.limit_s) o = fail("took longer than " + std::to_string(c.limit_s) + " s");
    failures += !o.ok;
    std::printf("%-36s %s  %.3fs  %s\n", c.name, o.ok ? "PASS" : "FAIL", secs, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures ? 1 : 0;
}

#include <gtest/gtest.h>

#include "helpers.hpp"
#include "mvlogic/error.hpp"
#include "mvlogic/generators.hpp"
#include "oracles.hpp"

using namespace mvlogic;
using namespace testing_helpers;

namespace {

oracle::RawFrame raw_frame(const EnrichedContext& f) {
  return {oracle::raw(f.base()), f.r_box()->degrees(), f.r_diamond()->degrees()};
}

Model diag_box0_model() {
  Context d = diagonal2();
  auto f = frame(d, box_rel(d, {0, 0, 0, 0}), std::nullopt);
  return Model(f, {{"p", concept_of(d, extent(d, {1, 0}))}});
}

}  // namespace

TEST(Evaluate, TopIsAllOnesExtent) {
  Context h = half1();
  Model m(identity_frame(h), {});
  Concept t = evaluate(m, Formula::top());
  EXPECT_EQ(t.extent.degrees(), (std::vector<Degree>{2}));
  EXPECT_EQ(t.intent, h.up(t.extent));
}

TEST(Evaluate, BoxUnderIncidenceIsIdentity) {
  Rng rng(8);
  for (int t = 0; t < 10; ++t) {
    Context c = random_context(rng, luk(3), 2, 2);
    auto f = identity_frame(c);
    ConceptLattice L = enumerate_concepts(c);
    for (const auto& k : L.concepts()) {
      Model m(f, {{"p", k}});
      EXPECT_EQ(evaluate(m, parse_formula("box p")), k);
      EXPECT_EQ(evaluate(m, parse_formula("dia box p")), k);
    }
  }
}

TEST(Evaluate, DisjointAtomsMeetAtBottom) {
  Context d = diagonal2();
  Model m(identity_frame(d), {{"p", concept_of(d, extent(d, {1, 0}))}, {"q", concept_of(d, extent(d, {0, 1}))}});
  ConceptLattice L = enumerate_concepts(d);
  EXPECT_EQ(evaluate(m, parse_formula("p & q")), L[L.bottom()]);
  EXPECT_EQ(evaluate(m, parse_formula("p | q")), L[L.top()]);
}

TEST(Evaluate, Errors) {
  Context h = half1();
  Model m(frame(h, std::nullopt, std::nullopt), {{"p", concept_of(h, extent(h, {1}))}});
  EXPECT_THROW(evaluate(m, parse_formula("q")), UsageError);
  EXPECT_THROW(evaluate(m, parse_formula("box p")), CapabilityError);
  EXPECT_THROW(evaluate(m, parse_formula("rhd p")), CapabilityError);
  EXPECT_THROW(Model(identity_frame(h), {{"p", Concept{extent(h, {0}), intent(h, {2})}}}), InputError);
}

TEST(Degrees, Examples) {
  auto l3 = luk(3);
  Context c = context(l3, 2, 2, flat({{2, 1}, {1, 0}}));
  Model m(identity_frame(c), {});
  for (const char* a : {"a1", "a2"}) EXPECT_EQ(degree_membership(m, a, Formula::top()), 2);
  for (const char* x : {"x1", "x2"}) EXPECT_EQ(degree_description(m, x, Formula::bot()), 2);
  EXPECT_EQ(degree_membership(m, "a1", Formula::bot()), 1);
  EXPECT_EQ(degree_membership(m, "a2", Formula::bot()), 0);
  EXPECT_TRUE(membership_holds(m, "a1", 1, Formula::bot()));
  EXPECT_FALSE(membership_holds(m, "a1", 2, Formula::bot()));
  EXPECT_TRUE(description_holds(m, "x2", 2, Formula::bot()));
  EXPECT_THROW(degree_membership(m, "zz", Formula::top()), UsageError);
}

TEST(SequentTrue, Examples) {
  Rng rng(12);
  for (int t = 0; t < 10; ++t) {
    FramePtr f = random_compatible_frame(rng, luk(3));
    ConceptLattice L = enumerate_concepts(f->base());
    for (const auto& kp : L.concepts()) {
      for (const auto& kq : L.concepts()) {
        Model m(f, {{"p", kp}, {"q", kq}});
        EXPECT_TRUE(sequent_true(m, parse_sequent("p & q |- p")));
        EXPECT_TRUE(sequent_true(m, parse_sequent("p |- p | q")));
      }
    }
  }
  Model m = diag_box0_model();
  EXPECT_FALSE(sequent_true(m, parse_sequent("p |- box p")));
  EXPECT_EQ(sequent_witness(m, parse_sequent("p |- box p")), std::optional<std::size_t>(0));
}

TEST(Validity, Examples) {
  Context d = diagonal2();
  auto box0 = frame(d, box_rel(d, {0, 0, 0, 0}), std::nullopt);
  auto v = sequent_valid(box0, parse_sequent("p |- box p"));
  EXPECT_FALSE(v.valid);
  ASSERT_TRUE(v.countermodel.has_value());
  EXPECT_EQ(v.lattice_size, 4u);
  Model cm(box0, v.countermodel->valuation);
  EXPECT_FALSE(sequent_true(cm, parse_sequent("p |- box p")));
  EXPECT_TRUE(sequent_valid(box0, parse_sequent("top |- box top")).valid);

  auto h = identity_frame(half1());
  auto pq = sequent_valid(h, parse_sequent("p |- q"));
  EXPECT_FALSE(pq.valid);
  EXPECT_EQ(pq.valuations, 4u);
}

TEST(Validity, AxiomsOnRandomCompatibleFrames) {
  Rng rng(31);
  for (auto alg : {boolean(), luk(3), goedel(3)}) {
    for (int t = 0; t < 8; ++t) {
      FramePtr f = random_compatible_frame(rng, alg);
      for (const auto& ax : axiom_catalogue()) EXPECT_TRUE(sequent_valid(f, ax).valid) << to_string(ax);
    }
  }
}

TEST(Validity, BudgetIsResourceError) {
  auto f = identity_frame(diagonal2());
  ValidityBudget tight;
  tight.max_valuations = 10;
  EXPECT_THROW(sequent_valid(f, parse_sequent("p & q |- r"), tight), ResourceError);
}

TEST(Validity, CountermodelIsLexicographicallyFirst) {
  Rng rng(5);
  for (int t = 0; t < 10; ++t) {
    FramePtr f = random_compatible_frame(rng, luk(3));
    ComplexAlgebra ca(f);
    const Sequent s = parse_sequent("q |- box p | p");
    auto v = sequent_valid(ca, s);
    // Atoms are sorted, so assignment p varies slowest.
    std::optional<std::pair<std::size_t, std::size_t>> first;
    for (std::uint32_t i = 0; i < ca.size() && !first; ++i)
      for (std::uint32_t j = 0; j < ca.size() && !first; ++j)
        if (!ca.leq(ca.evaluate(s.lhs, {"p", "q"}, {i, j}), ca.evaluate(s.rhs, {"p", "q"}, {i, j}))) first = {i, j};
    EXPECT_EQ(v.valid, !first.has_value());
    if (first) {
      EXPECT_EQ(v.countermodel->assignment.at("p"), first->first);
      EXPECT_EQ(v.countermodel->assignment.at("q"), first->second);
    }
    EXPECT_EQ(sequent_valid(ca, s, {}, Exec::serial).countermodel.has_value(), v.countermodel.has_value());
  }
}

TEST(Soundness, Examples) {
  auto diag = soundness_suite(identity_frame(diagonal2()), "diag");
  EXPECT_TRUE(diag.passed());
  EXPECT_EQ(diag.axioms.size(), axiom_catalogue().size());
  EXPECT_EQ(diag.rules.size(), 2u);

  EXPECT_TRUE(soundness_suite(identity_frame(half1())).passed());

  Context h = half1();
  auto bad = soundness_suite(frame(h, box_rel(h, {0}), dia_rel(h, {1})));
  EXPECT_TRUE(bad.refused);
  EXPECT_FALSE(bad.passed());
  EXPECT_FALSE(bad.compatibility.box_compatible);
  EXPECT_TRUE(bad.axioms.empty());
}

TEST(Invariants, EvaluationMatchesOracleAndComplexAlgebra) {
  Rng rng(77);
  for (auto alg : {luk(3), goedel(3)}) {
    for (int t = 0; t < 10; ++t) {
      FramePtr f = random_compatible_frame(rng, alg);
      ComplexAlgebra ca(f);
      const oracle::RawFrame rf = raw_frame(*f);
      for (int k = 0; k < 20; ++k) {
        Formula phi = random_formula(rng, {"p", "q"}, 4, false);
        std::uint32_t ip = rng() % ca.size(), iq = rng() % ca.size();
        Model m(f, {{"p", ca.lattice()[ip]}, {"q", ca.lattice()[iq]}});
        std::map<std::string, oracle::Pair> v{
            {"p", {ca.lattice()[ip].extent.degrees(), ca.lattice()[ip].intent.degrees()}},
            {"q", {ca.lattice()[iq].extent.degrees(), ca.lattice()[iq].intent.degrees()}}};
        Concept got = evaluate(m, phi);
        auto want = oracle::evaluate(rf, v, phi);
        ASSERT_EQ(got.extent.degrees(), want.first) << to_string(phi);
        ASSERT_EQ(got.intent.degrees(), want.second) << to_string(phi);
        EXPECT_EQ(ca.lattice()[ca.evaluate(phi, {"p", "q"}, {ip, iq})], got);
      }
    }
  }
}

TEST(Invariants, TruthEquivalence) {
  Rng rng(19);
  for (int t = 0; t < 20; ++t) {
    FramePtr f = random_compatible_frame(rng, luk(3));
    ConceptLattice L = enumerate_concepts(f->base());
    Model m(f, {{"p", L[rng() % L.size()]}, {"q", L[rng() % L.size()]}});
    for (int k = 0; k < 10; ++k) {
      Concept a = evaluate(m, random_formula(rng, {"p", "q"}, 3, false));
      Concept b = evaluate(m, random_formula(rng, {"p", "q"}, 3, false));
      EXPECT_EQ(included(a.extent, b.extent), included(b.intent, a.intent));
    }
  }
}

TEST(Invariants, PositiveFormulasAreMonotone) {
  Rng rng(4);
  const char* texts[] = {"p", "box p", "dia p", "box p & q", "dia (p | q)", "box (p & q) | dia p", "dia box p"};
  for (int t = 0; t < 10; ++t) {
    FramePtr f = random_compatible_frame(rng, goedel(3));
    ConceptLattice L = enumerate_concepts(f->base());
    const Concept& q = L[rng() % L.size()];
    for (const char* s : texts) {
      Formula phi = parse_formula(s);
      for (std::size_t i = 0; i < L.size(); ++i)
        for (std::size_t j = 0; j < L.size(); ++j) {
          if (!L.leq(i, j)) continue;
          Concept lo = evaluate(Model(f, {{"p", L[i]}, {"q", q}}), phi);
          Concept hi = evaluate(Model(f, {{"p", L[j]}, {"q", q}}), phi);
          EXPECT_TRUE(included(lo.extent, hi.extent)) << s;
        }
    }
  }
}

TEST(Validity, SerialAndParallelAgree) {
  Rng rng(90);
  for (int t = 0; t < 10; ++t) {
    FramePtr f = random_compatible_frame(rng, luk(3));
    Sequent s{random_formula(rng, {"p", "q"}, 3, false), random_formula(rng, {"p", "q"}, 3, false)};
    auto a = sequent_valid(f, s, {}, Exec::serial);
    auto b = sequent_valid(f, s, {}, Exec::parallel);
    EXPECT_EQ(a.valid, b.valid);
    EXPECT_EQ(a.valuations, b.valuations);
    if (a.countermodel) EXPECT_EQ(a.countermodel->assignment, b.countermodel->assignment);
  }
}

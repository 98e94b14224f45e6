#include <gtest/gtest.h>

#include "helpers.hpp"
#include "mvlogic/error.hpp"
#include "mvlogic/generators.hpp"
#include "mvlogic/market.hpp"

using namespace mvlogic;
using namespace testing_helpers;
using nlohmann::json;

namespace {

Degree at(const MvSet& s, const std::string& name) { return s[s.carrier()->index_of(name)]; }

Degree entry(const AnalysisReport& r, const std::string& element) {
  for (const auto& e : r.entries)
    if (e.element == element) return e.degree;
  throw std::logic_error("no entry " + element);
}

Arena arena(json j) { return arena_from_json(j); }

json luk3(json j) {
  j["algebra"] = "lukasiewicz:3";
  return j;
}

}  // namespace

TEST(LoadArena, MinimalHalfArena) {
  Arena a = arena(luk3({{"objects", {"a"}}, {"attributes", {"x"}}, {"I", {{1}}}}));
  EXPECT_EQ(enumerate_concepts(a.base()).size(), 2u);
  EXPECT_TRUE(a.warnings.empty());
}

TEST(LoadArena, MissingIncidenceIsInputError) {
  EXPECT_THROW(arena(luk3({{"objects", {"a"}}, {"attributes", {"x"}}})), InputError);
}

TEST(LoadArena, IncompatibleBoxLoadsWithWarning) {
  Arena a = arena(luk3({{"objects", {"a"}}, {"attributes", {"x"}}, {"I", {{1}}}, {"R_box", {{0}}}}));
  ASSERT_EQ(a.warnings.size(), 1u);
  EXPECT_FALSE(a.frame->usable(RelationSlot::box));
  EXPECT_THROW(box_refinement_analysis(a, "a"), CapabilityError);
}

TEST(LoadArena, QuantizesDecimals) {
  Arena a = arena({{"quantize", {{"chain_size", 3}}},
                   {"objects", {"a", "b"}},
                   {"attributes", {"x"}},
                   {"I", {{0.8}, {0.3}}},
                   {"labels", {{"I", "share"}}}});
  EXPECT_EQ(a.algebra()->name(), "lukasiewicz:3");
  EXPECT_EQ(a.base().incidence().degrees(), (std::vector<Degree>{2, 1}));
  EXPECT_EQ(a.labels.at("I"), "share");
  EXPECT_EQ(a.quantization.size(), 2u);
  EXPECT_THROW(arena({{"quantize", {{"chain_size", 3}}}, {"objects", {"a"}}, {"attributes", {"x"}}, {"I", {{1.5}}}}),
               InputError);
  EXPECT_THROW(arena({{"quantize", {{"chain_size", 3}}},
                      {"algebra", "goedel:3"},
                      {"objects", {"a"}},
                      {"attributes", {"x"}},
                      {"I", {{1.0}}}}),
               InputError);
}

TEST(FirmCategory, Examples) {
  Arena a = arena(luk3({{"objects", {"a", "b"}}, {"attributes", {"x1", "x2"}}, {"I", {{2, 1}, {1, 1}}}}));
  Concept c = firm_category(a, "a");
  EXPECT_EQ(at(c.extent, "a"), 2);
  EXPECT_EQ(at(c.extent, "b"), 1);
  EXPECT_EQ(c.intent.degrees(), (std::vector<Degree>{2, 1}));
  EXPECT_THROW(firm_category(a, "z"), UsageError);
}

TEST(MarketCategory, Examples) {
  Arena a = arena(luk3({{"objects", {"a", "b"}}, {"attributes", {"x", "y"}}, {"I", {{2, 1}, {1, 2}}}}));
  Concept c = market_category(a, "x");
  EXPECT_EQ(c.extent.degrees(), (std::vector<Degree>{2, 1}));
  EXPECT_EQ(at(c.intent, "x"), 2);
  EXPECT_EQ(at(c.intent, "y"), 1);
}

TEST(BasketCategory, Examples) {
  Arena a = arena(luk3({{"objects", {"a"}}, {"attributes", {"x1", "x2"}}, {"I", {{2, 1}}}}));
  EXPECT_EQ(at(basket_category(a, {}).extent, "a"), 2);
  EXPECT_EQ(at(basket_category(a, {{"x1", 1}, {"x2", 2}}).extent, "a"), 1);
  EXPECT_EQ(basket_category(a, {{"x2", 2}}), market_category(a, "x2"));
  EXPECT_THROW(basket_category(a, {{"zz", 1}}), UsageError);
}

TEST(Typicality, Examples) {
  json j = luk3({{"objects", {"a", "b"}},
                 {"attributes", {"x1", "x2"}},
                 {"I", {{2, 0}, {0, 2}}},
                 {"R_rhd", {{2, 1}, {0, 2}}},
                 {"R_lhd", {{2, 0}, {0, 2}}}});
  Arena a = arena(j);
  auto rhd = typicality_analysis(a, Typicality::rhd_over_concept, market_category(a, "x1"), "c_x1");
  EXPECT_EQ(entry(rhd, "b"), 1);
  EXPECT_EQ(rhd.side, "extent");
  EXPECT_FALSE(rhd.trail.empty());

  const Concept bottom{extent(a.base(), {0, 0}), intent(a.base(), {2, 2})};
  auto all1 = typicality_analysis(a, Typicality::rhd_over_concept, bottom);
  for (const auto& e : all1.entries) EXPECT_EQ(e.degree, 2);

  // R_lhd the diagonal and a crisp column: degrees reproduce the diagonal row.
  auto lhd = typicality_analysis(a, Typicality::lhd_over_concept, market_category(a, "x1"));
  EXPECT_EQ(entry(lhd, "x1"), 2);
  EXPECT_EQ(entry(lhd, "x2"), 0);

  j.erase("R_lhd");
  EXPECT_THROW(typicality_analysis(arena(j), Typicality::lhd_over_concept, bottom), CapabilityError);
}

TEST(BoxRefinement, Examples) {
  Arena a = arena(luk3({{"objects", {"a", "b"}}, {"attributes", {"x"}}, {"I", {{2}, {1}}}, {"R_box", {{2}, {1}}}}));
  EXPECT_EQ(entry(box_refinement_analysis(a, "a"), "b"), 1);

  Arena z = arena(luk3({{"objects", {"a", "b"}}, {"attributes", {"x"}}, {"I", {{0}, {1}}}, {"R_box", {{0}, {1}}}}));
  for (const auto& e : box_refinement_analysis(z, "a").entries) EXPECT_EQ(e.degree, 2);
}

TEST(Invariants, RandomArenas) {
  Rng rng(64);
  for (int t = 0; t < 40; ++t) {
    Context c = random_context(rng, luk(3), 1 + rng() % 3, 1 + rng() % 3);
    Arena a{identity_frame(c), {}, {}, {}};
    for (const auto& firm : c.objects()->names()) {
      Concept fc = firm_category(a, firm);
      // R_box = I reproduces the firm category extent.
      auto box = box_refinement_analysis(a, firm);
      for (const auto& e : box.entries) EXPECT_EQ(e.degree, at(fc.extent, e.element));
      // Dominating firms get degree 1.
      const std::size_t ia = c.objects()->index_of(firm);
      for (std::size_t b = 0; b < c.objects()->size(); ++b) {
        bool dominates = true;
        for (std::size_t x = 0; x < c.attributes()->size(); ++x)
          dominates = dominates && c.algebra()->leq(c.incidence()(ia, x), c.incidence()(b, x));
        if (dominates) EXPECT_EQ(fc.extent[b], c.algebra()->top());
      }
    }
    for (const auto& market : c.attributes()->names())
      EXPECT_EQ(basket_category(a, {{market, c.algebra()->top()}}), market_category(a, market));
  }
}

TEST(Report, JsonAndTextListEveryEntry) {
  Arena a = arena(luk3({{"objects", {"a", "b"}}, {"attributes", {"x"}}, {"I", {{2}, {1}}}, {"R_box", {{2}, {1}}}}));
  auto r = box_refinement_analysis(a, "a");
  json j = to_json(r);
  EXPECT_EQ(j["degrees"].size(), 2u);
  EXPECT_EQ(j["degrees"][1]["label"], "1/2");
  std::string text = to_text(r);
  EXPECT_NE(text.find("1/2"), std::string::npos);
  EXPECT_NE(text.find("b"), std::string::npos);
}

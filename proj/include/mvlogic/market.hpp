#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mvlogic/enriched.hpp"
#include "mvlogic/semantics.hpp"

namespace mvlogic {

// One real-valued input entry rounded onto the chain at load time.
struct QuantizationEntry {
  std::string matrix;
  std::size_t row = 0;
  std::size_t col = 0;
  double raw = 0.0;
  Degree index = 0;
};

// Firms (objects) against product markets (attributes).
struct Arena {
  FramePtr frame;
  // Relation slot ("I", "R_box", ...) -> interpretation tag.
  std::map<std::string, std::string> labels;
  std::vector<QuantizationEntry> quantization;
  // Set when R_box / R_diamond fail compatibility; the matching analyses are disabled.
  std::vector<std::string> warnings;

  const Context& base() const { return frame->base(); }
  const AlgebraPtr& algebra() const { return frame->algebra(); }
};

// Frame file plus optional "labels" and "quantize": {"chain_size": n}. With
// "quantize", every matrix entry is a decimal in [0,1] rounded onto Lukasiewicz n.
Arena arena_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir = {});
Arena load_arena(const std::filesystem::path& path);

// c_a = (f_a^_, f_a^) for the crisp singleton f_a.
Concept firm_category(const Arena& arena, const std::string& firm);
// c_x = (u_x_, u_x_^).
Concept market_category(const Arena& arena, const std::string& market);
// c_Y = (u_Y_, u_Y_^); markets absent from weights get degree 0.
Concept basket_category(const Arena& arena, const std::map<std::string, Degree>& weights);

struct ReportEntry {
  std::string element;
  Degree degree = 0;
  std::string label;
};

struct AnalysisReport {
  std::string query;
  // How to read a degree, e.g. "degree to which b is a strategically typical producer".
  std::string reading;
  // Formulas applied, innermost first.
  std::vector<std::string> trail;
  // "extent" (firms) or "intent" (markets).
  std::string side;
  std::vector<ReportEntry> entries;
  std::optional<Concept> closed;
  std::optional<bool> raw_stable;
  std::vector<std::string> notes;
};

// Extent and intent of a category, reported per firm and per market.
AnalysisReport category_report(const Arena& arena, const std::string& query, const std::vector<std::string>& trail,
                               const Concept& c);

enum class Typicality { rhd_over_concept, lhd_over_concept };

// rhd: b -> meet over b' of extent(b') -> R_rhd(b', b).
// lhd: y -> meet over z of intent(z) -> R_lhd(z, y).
AnalysisReport typicality_analysis(const Arena& arena, Typicality kind, const Concept& seed,
                                   const std::string& seed_name = "c");

// b -> meet over x of I(a, x) -> R_box(b, x), the extent of [R_box]c_a.
AnalysisReport box_refinement_analysis(const Arena& arena, const std::string& firm);

nlohmann::json to_json(const AnalysisReport& report);
// Aligned two-column listing.
std::string to_text(const AnalysisReport& report);

}  // namespace mvlogic

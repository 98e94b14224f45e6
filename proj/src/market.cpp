#include "mvlogic/market.hpp"

#include <iomanip>
#include <sstream>

#include "mvlogic/error.hpp"
#include "mvlogic/io.hpp"

namespace mvlogic {

using nlohmann::json;

namespace {

constexpr const char* kMatrices[] = {"I", "R_box", "R_diamond", "R_rhd", "R_lhd"};

json quantize_matrix(const json& m, const std::string& name, const TruthAlgebra& alg,
                     std::vector<QuantizationEntry>& log) {
  if (!m.is_array()) throw InputError("\"" + name + "\" must be a matrix");
  json out = json::array();
  for (std::size_t r = 0; r < m.size(); ++r) {
    if (!m[r].is_array()) throw InputError("\"" + name + "\" must be a matrix");
    json row = json::array();
    for (std::size_t c = 0; c < m[r].size(); ++c) {
      if (!m[r][c].is_number()) throw InputError("\"" + name + "\" entries must be decimals in [0,1]");
      const double raw = m[r][c].get<double>();
      const Degree d = alg.quantize(raw);
      log.push_back({name, r, c, raw, d});
      row.push_back(d);
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::string category_trail_firm(const std::string& a) {
  return "c_" + a + " := (f_" + a + "^_, f_" + a + "^), extent(b) = meet_x I(" + a + ",x) -> I(b,x)";
}

}  // namespace

Arena arena_from_json(const json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) throw InputError("arena must be a JSON object");
  Arena arena;
  json frame = j;
  if (auto q = j.find("quantize"); q != j.end()) {
    if (!q->is_object() || !q->contains("chain_size") || !(*q)["chain_size"].is_number_integer()) {
      throw InputError("\"quantize\" must be {\"chain_size\": n}");
    }
    const auto n = (*q)["chain_size"].get<long long>();
    if (n < 2) throw InputError("\"quantize\".chain_size must be at least 2");
    AlgebraPtr chain = TruthAlgebra::chain(AlgebraKind::lukasiewicz, static_cast<std::size_t>(n));
    if (j.contains("algebra")) {
      const json& spec = j["algebra"];
      AlgebraPtr given = spec.is_object() ? io::algebra_from_json(spec) : io::algebra_from_arg(spec.get<std::string>());
      if (!same_algebra(given, chain)) {
        throw InputError("\"algebra\" disagrees with \"quantize\" (expected " + chain->name() + ")");
      }
    }
    frame["algebra"] = io::to_json(*chain);
    if (!j.contains("I")) throw InputError("missing field \"I\"");
    for (const char* name : kMatrices) {
      if (j.contains(name)) frame[name] = quantize_matrix(j[name], name, *chain, arena.quantization);
    }
  }
  arena.frame = io::frame_from_json(frame, base_dir);
  if (auto l = j.find("labels"); l != j.end()) {
    if (!l->is_object()) throw InputError("\"labels\" must map relation names to strings");
    for (const auto& [slot, text] : l->items()) {
      if (!text.is_string()) throw InputError("\"labels\" must map relation names to strings");
      arena.labels[slot] = text.get<std::string>();
    }
  }
  const CompatibilityReport& comp = arena.frame->compatibility();
  if (arena.frame->has(RelationSlot::box) && !comp.box_compatible) {
    arena.warnings.push_back("R_box is not I-compatible; box analyses are disabled");
  }
  if (arena.frame->has(RelationSlot::diamond) && !comp.diamond_compatible) {
    arena.warnings.push_back("R_diamond is not I-compatible; diamond analyses are disabled");
  }
  return arena;
}

Arena load_arena(const std::filesystem::path& path) {
  return arena_from_json(io::read_json(path), path.parent_path());
}

Concept firm_category(const Arena& arena, const std::string& firm) {
  const Context& base = arena.base();
  return concept_of(base, MvSet::singleton(base.algebra(), base.objects(), base.algebra()->top(), firm));
}

Concept market_category(const Arena& arena, const std::string& market) {
  const Context& base = arena.base();
  return concept_of_intent(base,
                           MvSet::singleton(base.algebra(), base.attributes(), base.algebra()->top(), market));
}

Concept basket_category(const Arena& arena, const std::map<std::string, Degree>& weights) {
  const Context& base = arena.base();
  std::vector<Degree> u(base.attributes()->size(), base.algebra()->bottom());
  for (const auto& [market, w] : weights) {
    if (w >= base.algebra()->size()) throw UsageError("basket weight out of range for " + market);
    u[base.attributes()->index_of(market)] = w;
  }
  return concept_of_intent(base, MvSet(base.algebra(), base.attributes(), std::move(u)));
}

namespace {

std::vector<ReportEntry> entries_of(const MvSet& s) {
  std::vector<ReportEntry> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    out.push_back({s.carrier()->name(i), s[i], s.algebra()->label(s[i])});
  }
  return out;
}

void add_notes(const Arena& arena, AnalysisReport& r) {
  for (const auto& w : arena.warnings) r.notes.push_back(w);
  if (!arena.quantization.empty()) {
    r.notes.push_back("inputs quantized onto " + arena.algebra()->name() + " (" +
                      std::to_string(arena.quantization.size()) + " entries)");
  }
}

}  // namespace

AnalysisReport category_report(const Arena& arena, const std::string& query, const std::vector<std::string>& trail,
                               const Concept& c) {
  AnalysisReport r;
  r.query = query;
  r.reading = "extent: firms in the category; intent: markets describing it";
  r.trail = trail;
  r.side = "extent";
  r.entries = entries_of(c.extent);
  r.closed = c;
  r.raw_stable = true;
  add_notes(arena, r);
  return r;
}

AnalysisReport typicality_analysis(const Arena& arena, Typicality kind, const Concept& seed,
                                   const std::string& seed_name) {
  AnalysisReport r;
  ModalImage image = kind == Typicality::rhd_over_concept ? rhd_op(*arena.frame, seed) : lhd_op(*arena.frame, seed);
  if (kind == Typicality::rhd_over_concept) {
    r.query = "rhd " + seed_name;
    r.reading = "degree to which b is a strategically typical producer for " + seed_name;
    r.trail = {"[[rhd " + seed_name + "]](b) = meet_b' [[" + seed_name + "]](b') -> R_rhd(b',b)"};
    r.side = "extent";
  } else {
    r.query = "lhd " + seed_name;
    r.reading = "degree to which y is a typical product market for " + seed_name;
    r.trail = {"<<lhd " + seed_name + ">>(y) = meet_z <<" + seed_name + ">>(z) -> R_lhd(z,y)"};
    r.side = "intent";
  }
  if (auto l = arena.labels.find(kind == Typicality::rhd_over_concept ? "R_rhd" : "R_lhd"); l != arena.labels.end()) {
    r.notes.push_back("relation: " + l->second);
  }
  r.entries = entries_of(image.raw);
  r.closed = std::move(image.closed);
  r.raw_stable = image.raw_stable;
  add_notes(arena, r);
  return r;
}

AnalysisReport box_refinement_analysis(const Arena& arena, const std::string& firm) {
  const Concept ca = firm_category(arena, firm);
  const Concept boxed = box_op(*arena.frame, ca);
  AnalysisReport r;
  r.query = "box c_" + firm;
  r.reading = "degree to which b is at least as active as " + firm + " relative to the target group";
  r.trail = {category_trail_firm(firm), "[[box c_" + firm + "]](b) = meet_x I(" + firm + ",x) -> R_box(b,x)"};
  r.side = "extent";
  if (auto l = arena.labels.find("R_box"); l != arena.labels.end()) r.notes.push_back("relation: " + l->second);
  r.entries = entries_of(boxed.extent);
  r.closed = boxed;
  r.raw_stable = true;
  add_notes(arena, r);
  return r;
}

json to_json(const AnalysisReport& report) {
  json entries = json::array();
  for (const auto& e : report.entries) {
    entries.push_back({{"element", e.element}, {"degree", e.degree}, {"label", e.label}});
  }
  json j{{"query", report.query},
         {"reading", report.reading},
         {"formulas", report.trail},
         {"side", report.side},
         {"degrees", std::move(entries)},
         {"notes", report.notes}};
  if (report.closed) j["concept"] = io::to_json(*report.closed);
  if (report.raw_stable) j["raw_stable"] = *report.raw_stable;
  return j;
}

std::string to_text(const AnalysisReport& report) {
  std::ostringstream os;
  os << "query:   " << report.query << "\n";
  os << "reading: " << report.reading << "\n";
  for (const auto& f : report.trail) os << "formula: " << f << "\n";
  std::size_t width = report.side.size();
  for (const auto& e : report.entries) width = std::max(width, e.element.size());
  os << std::left << std::setw(static_cast<int>(width) + 2) << report.side << "degree\n";
  for (const auto& e : report.entries) {
    os << std::left << std::setw(static_cast<int>(width) + 2) << e.element << e.label << "\n";
  }
  if (report.raw_stable) os << "raw map stable: " << (*report.raw_stable ? "yes" : "no") << "\n";
  for (const auto& n : report.notes) os << "note: " << n << "\n";
  return os.str();
}

}  // namespace mvlogic

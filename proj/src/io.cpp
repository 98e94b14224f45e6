#include "mvlogic/io.hpp"

#include <fstream>

#include "mvlogic/error.hpp"

namespace mvlogic::io {

namespace fs = std::filesystem;

json read_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::vector<std::string> names_of(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_array()) throw InputError(std::string("\"") + key + "\" must be an array of names");
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (!e.is_string()) throw InputError(std::string("\"") + key + "\" must be an array of names");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::size_t index_value(const json& e, std::size_t bound, const std::string& where) {
  if (!e.is_number_integer() || e.get<long long>() < 0 || static_cast<std::size_t>(e.get<long long>()) >= bound) {
    throw InputError(where + ": entry " + e.dump() + " is not an index below " + std::to_string(bound));
  }
  return static_cast<std::size_t>(e.get<long long>());
}

std::vector<Degree> index_matrix(const json& m, std::size_t rows, std::size_t cols, std::size_t bound,
                                 const std::string& name) {
  if (!m.is_array() || m.size() != rows) {
    throw InputError("\"" + name + "\" must have " + std::to_string(rows) + " rows");
  }
  std::vector<Degree> out;
  out.reserve(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!m[r].is_array() || m[r].size() != cols) {
      throw InputError("\"" + name + "\" row " + std::to_string(r) + " must have " + std::to_string(cols) +
                       " entries");
    }
    for (const auto& e : m[r]) out.push_back(static_cast<Degree>(index_value(e, bound, name)));
  }
  return out;
}

std::vector<Degree> index_vector(const json& v, std::size_t n, std::size_t bound, const std::string& name) {
  if (!v.is_array() || v.size() != n) {
    throw InputError("\"" + name + "\" must have " + std::to_string(n) + " entries");
  }
  std::vector<Degree> out;
  for (const auto& e : v) out.push_back(static_cast<Degree>(index_value(e, bound, name)));
  return out;
}

AlgebraPtr resolve_algebra(const json& j, const fs::path& base_dir) {
  if (j.is_object()) return algebra_from_json(j);
  if (!j.is_string()) throw InputError("\"algebra\" must be an object, a spec string, or a file path");
  const std::string s = j.get<std::string>();
  try {
    return parse_algebra_spec(s);
  } catch (const InputError&) {
  }
  fs::path p(s);
  if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
  if (!fs::exists(p)) throw InputError("\"algebra\": '" + s + "' is neither a spec nor a file");
  return algebra_from_json(read_json(p));
}

std::optional<MvRelation> optional_relation(const json& j, const char* key, const AlgebraPtr& alg,
                                            const CarrierPtr& source, const CarrierPtr& target) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return MvRelation(alg, source, target, index_matrix(*it, source->size(), target->size(), alg->size(), key));
}

}  // namespace

AlgebraTables tables_from_json(const json& j) {
  const AlgebraKind kind = algebra_kind_from_string(field(j, "kind").get<std::string>());
  const json& size_field = field(j, "size");
  if (!size_field.is_number_integer() || size_field.get<long long>() < 1) {
    throw InputError("\"size\" must be a positive integer");
  }
  const auto n = static_cast<std::size_t>(size_field.get<long long>());
  if (kind != AlgebraKind::custom) {
    try {
      return TruthAlgebra::chain(kind, n)->tables();
    } catch (const ConstructionError& e) {
      throw InputError(e.what());
    }
  }
  AlgebraTables t;
  t.kind = AlgebraKind::custom;
  t.size = n;
  t.otimes = index_matrix(field(j, "otimes"), n, n, n, "otimes");
  t.residuum = index_matrix(field(j, "residuum"), n, n, n, "residuum");
  t.join = index_matrix(field(j, "join"), n, n, n, "join");
  t.meet = index_matrix(field(j, "meet"), n, n, n, "meet");
  return t;
}

AlgebraPtr algebra_from_json(const json& j) {
  AlgebraTables t = tables_from_json(j);
  if (t.kind != AlgebraKind::custom) return TruthAlgebra::chain(t.kind, t.size);
  try {
    return TruthAlgebra::from_tables(std::move(t));
  } catch (const ConstructionError& e) {
    throw InputError(e.what());
  }
}

AlgebraPtr algebra_from_arg(const std::string& arg) { return resolve_algebra(json(arg), {}); }

json to_json(const TruthAlgebra& alg) {
  json j{{"kind", to_string(alg.kind())}, {"size", alg.size()}};
  if (alg.kind() == AlgebraKind::custom) {
    auto matrix = [&](const std::vector<Degree>& v) {
      json m = json::array();
      for (std::size_t r = 0; r < alg.size(); ++r) {
        m.push_back(std::vector<Degree>(v.begin() + r * alg.size(), v.begin() + (r + 1) * alg.size()));
      }
      return m;
    };
    j["otimes"] = matrix(alg.tables().otimes);
    j["residuum"] = matrix(alg.tables().residuum);
    j["join"] = matrix(alg.tables().join);
    j["meet"] = matrix(alg.tables().meet);
  }
  return j;
}

Context context_from_json(const json& j, const fs::path& base_dir) {
  try {
    AlgebraPtr alg = resolve_algebra(field(j, "algebra"), base_dir);
    CarrierPtr objects = make_carrier(names_of(j, "objects"));
    CarrierPtr attributes = make_carrier(names_of(j, "attributes"));
    MvRelation incidence(alg, objects, attributes,
                         index_matrix(field(j, "I"), objects->size(), attributes->size(), alg->size(), "I"));
    return Context(objects, attributes, std::move(incidence));
  } catch (const json::exception& e) {
    throw InputError(e.what());
  }
}

FramePtr frame_from_json(const json& j, const fs::path& base_dir) {
  Context base = context_from_json(j, base_dir);
  try {
    const AlgebraPtr alg = base.algebra();
    auto r_box = optional_relation(j, "R_box", alg, base.objects(), base.attributes());
    auto r_dia = optional_relation(j, "R_diamond", alg, base.attributes(), base.objects());
    auto r_rhd = optional_relation(j, "R_rhd", alg, base.objects(), base.objects());
    auto r_lhd = optional_relation(j, "R_lhd", alg, base.attributes(), base.attributes());
    return std::make_shared<const EnrichedContext>(std::move(base), std::move(r_box), std::move(r_dia),
                                                   std::move(r_rhd), std::move(r_lhd));
  } catch (const json::exception& e) {
    throw InputError(e.what());
  }
}

Model model_from_json(const json& j, const fs::path& base_dir) {
  FramePtr frame = frame_from_json(j, base_dir);
  const Context& base = frame->base();
  const AlgebraPtr& alg = base.algebra();
  Valuation v;
  const json& vj = field(j, "V");
  if (!vj.is_object()) throw InputError("\"V\" must map atoms to {\"extent\"} or {\"intent\"}");
  for (const auto& [atom, spec] : vj.items()) {
    const bool has_extent = spec.is_object() && spec.contains("extent");
    const bool has_intent = spec.is_object() && spec.contains("intent");
    if (has_extent == has_intent) {
      throw InputError("V[\"" + atom + "\"] must give exactly one of \"extent\" or \"intent\"");
    }
    if (has_extent) {
      MvSet e(alg, base.objects(), index_vector(spec["extent"], base.objects()->size(), alg->size(), "extent"));
      if (!is_stable(base, Side::extent, e)) throw InputError("V[\"" + atom + "\"]: extent is not stable");
      v.emplace(atom, concept_of(base, e));
    } else {
      MvSet i(alg, base.attributes(),
              index_vector(spec["intent"], base.attributes()->size(), alg->size(), "intent"));
      if (!is_stable(base, Side::intent, i)) throw InputError("V[\"" + atom + "\"]: intent is not stable");
      v.emplace(atom, concept_of_intent(base, i));
    }
  }
  return Model(std::move(frame), std::move(v));
}

ModalLattice modal_lattice_from_json(const json& j) {
  try {
    std::vector<std::string> elements = names_of(j, "elements");
    const std::size_t n = elements.size();
    auto element_index = [&](const json& e, const std::string& where) -> std::size_t {
      if (e.is_string()) {
        auto it = std::find(elements.begin(), elements.end(), e.get<std::string>());
        if (it == elements.end()) throw InputError(where + ": unknown element " + e.dump());
        return static_cast<std::size_t>(it - elements.begin());
      }
      return index_value(e, n, where);
    };
    const json& lj = field(j, "leq");
    if (!lj.is_array() || lj.size() != n) throw InputError("\"leq\" must be an n x n boolean matrix");
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
    for (std::size_t a = 0; a < n; ++a) {
      if (!lj[a].is_array() || lj[a].size() != n) throw InputError("\"leq\" must be an n x n boolean matrix");
      for (std::size_t b = 0; b < n; ++b) {
        if (!lj[a][b].is_boolean()) throw InputError("\"leq\" entries must be booleans");
        leq[a][b] = lj[a][b].get<bool>();
      }
    }
    auto unary_map = [&](const char* key) {
      const json& m = field(j, key);
      std::vector<std::size_t> out(n);
      if (m.is_array()) {
        if (m.size() != n) throw InputError(std::string("\"") + key + "\" must map every element");
        for (std::size_t a = 0; a < n; ++a) out[a] = element_index(m[a], key);
      } else if (m.is_object()) {
        if (m.size() != n) throw InputError(std::string("\"") + key + "\" must map every element");
        for (const auto& [from, to] : m.items()) out[element_index(json(from), key)] = element_index(to, key);
      } else {
        throw InputError(std::string("\"") + key + "\" must be an array or an object");
      }
      return out;
    };
    std::vector<std::size_t> box = unary_map("box");
    std::vector<std::size_t> dia = unary_map("dia");
    std::map<std::string, std::size_t> atoms;
    if (auto it = j.find("atoms"); it != j.end()) {
      if (it->is_array()) {
        for (const auto& a : *it) atoms[a.get<std::string>()] = element_index(a, "atoms");
      } else if (it->is_object()) {
        for (const auto& [atom, e] : it->items()) atoms[atom] = element_index(e, "atoms");
      } else {
        throw InputError("\"atoms\" must be an array of element names or an object");
      }
    }
    return ModalLattice(std::move(elements), std::move(leq), std::move(box), std::move(dia), std::move(atoms));
  } catch (const json::exception& e) {
    throw InputError(e.what());
  }
}

Context load_context(const fs::path& path) { return context_from_json(read_json(path), path.parent_path()); }
FramePtr load_frame(const fs::path& path) { return frame_from_json(read_json(path), path.parent_path()); }
Model load_model(const fs::path& path) { return model_from_json(read_json(path), path.parent_path()); }
ModalLattice load_modal_lattice(const fs::path& path) { return modal_lattice_from_json(read_json(path)); }

json to_json(const MvSet& s) {
  json j = json::object();
  for (std::size_t i = 0; i < s.size(); ++i) j[s.carrier()->name(i)] = s.algebra()->label(s[i]);
  return j;
}

json to_json(const Concept& c) { return json{{"extent", to_json(c.extent)}, {"intent", to_json(c.intent)}}; }

json to_json(const ConceptLattice& lattice) {
  json concepts = json::array();
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    json c = to_json(lattice[i]);
    c["index"] = i;
    concepts.push_back(std::move(c));
  }
  json covers = json::array();
  for (const auto& [lo, hi] : lattice.covers()) covers.push_back({lo, hi});
  return json{{"algebra", lattice.context().algebra()->name()},
              {"size", lattice.size()},
              {"bottom", lattice.bottom()},
              {"top", lattice.top()},
              {"concepts", std::move(concepts)},
              {"covers", std::move(covers)}};
}

json to_json(const CompatibilityReport& report) {
  json failures = json::array();
  for (const auto& w : report.failures) {
    failures.push_back({{"relation", to_string(w.slot)},
                        {"family", w.family},
                        {"alpha", w.alpha},
                        {"element", w.element},
                        {"image", to_json(w.image)},
                        {"round_trip", to_json(w.round_trip)}});
  }
  return json{{"passed", report.passed()},
              {"box_checked", report.box_checked},
              {"box_compatible", report.box_compatible},
              {"diamond_checked", report.diamond_checked},
              {"diamond_compatible", report.diamond_compatible},
              {"images_checked", report.images_checked},
              {"failures", std::move(failures)}};
}

json to_json(const ValidityVerdict& verdict, const ConceptLattice& lattice) {
  json j{{"valid", verdict.valid}, {"lattice_size", verdict.lattice_size}, {"valuations", verdict.valuations}};
  if (verdict.countermodel) {
    const Countermodel& cm = *verdict.countermodel;
    json v = json::object();
    for (const auto& [atom, c] : cm.valuation) {
      json entry = to_json(c);
      entry["concept"] = cm.assignment.at(atom);
      v[atom] = std::move(entry);
    }
    j["countermodel"] = {{"valuation", std::move(v)},
                         {"object", lattice.context().objects()->name(cm.object)}};
  }
  return j;
}

json to_json(const SoundnessReport& report, const ConceptLattice* lattice) {
  json j{{"label", report.label}, {"passed", report.passed()}, {"refused", report.refused}};
  if (report.refused) {
    j["refusal"] = report.refusal;
    j["compatibility"] = to_json(report.compatibility);
    return j;
  }
  j["lattice_size"] = report.lattice_size;
  json axioms = json::array();
  for (const auto& a : report.axioms) {
    json entry{{"axiom", to_string(a.axiom)}, {"valid", a.verdict.valid}};
    if (lattice && a.verdict.countermodel) entry["witness"] = to_json(a.verdict, *lattice)["countermodel"];
    axioms.push_back(std::move(entry));
  }
  j["axioms"] = std::move(axioms);
  json rules = json::array();
  for (const auto& r : report.rules) {
    json entry{{"rule", r.rule}, {"passed", r.passed}};
    if (r.witness) entry["witness"] = {r.witness->first, r.witness->second};
    rules.push_back(std::move(entry));
  }
  j["rules"] = std::move(rules);
  return j;
}

json to_json(const LemmaReport& report) {
  json items = json::array();
  for (const auto& i : report.items) {
    json entry{{"item", i.item}, {"holds", i.holds}, {"informational", i.informational}, {"checked", i.checked}};
    if (!i.witness.empty()) entry["witness"] = i.witness;
    items.push_back(std::move(entry));
  }
  return json{{"passed", report.passed()},
              {"filters", report.filters},
              {"proper_filters", report.proper_filters},
              {"ideals", report.ideals},
              {"proper_ideals", report.proper_ideals},
              {"items", std::move(items)}};
}

json to_json(const CanonicalSurrogate& s) {
  auto rows = [](const auto& list) {
    json out = json::array();
    for (const auto& k : list) out.push_back(k.degrees);
    return out;
  };
  const Context& base = s.frame->base();
  auto matrix = [](const MvRelation& r) {
    json out = json::array();
    for (std::size_t i = 0; i < r.rows(); ++i) out.push_back(r.row(i).degrees());
    return out;
  };
  json j{{"proper_filters", rows(s.filters)},
         {"proper_ideals", rows(s.ideals)},
         {"I", matrix(base.incidence())},
         {"R_box", matrix(*s.frame->r_box())},
         {"R_diamond", matrix(*s.frame->r_diamond())},
         {"diamond_forms_agree", s.diamond_forms_agree},
         {"box_forms_agree", s.box_forms_agree},
         {"compatibility", to_json(s.frame->compatibility())}};
  if (s.diamond_disagreement) j["diamond_disagreement"] = {s.diamond_disagreement->first, s.diamond_disagreement->second};
  if (s.box_disagreement) j["box_disagreement"] = {s.box_disagreement->first, s.box_disagreement->second};
  return j;
}

}  // namespace mvlogic::io

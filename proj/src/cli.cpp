#include "mvlogic/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <sstream>

#include "mvlogic/canonical.hpp"
#include "mvlogic/error.hpp"
#include "mvlogic/generators.hpp"
#include "mvlogic/io.hpp"
#include "mvlogic/market.hpp"

namespace mvlogic::cli {

using nlohmann::json;

namespace {

struct Options {
  std::string out = "text";
  bool serial = false;

  std::string context, frame, model, lattice, arena;
  std::string sequent;
  std::string algebra;

  std::size_t max_concepts = 100000;
  std::uint64_t max_valuations = 10'000'000;
  std::uint64_t max_candidates = 1'000'000;

  std::size_t random = 0;
  unsigned long long seed = default_seed;
  std::size_t max_objects = 3;
  std::size_t max_attributes = 3;

  std::size_t truth_depth = 2;

  std::string firm, market, basket, rhd_market, rhd_firm, lhd_firm, lhd_market, box_firm;
};

Exec exec_of(const Options& o) { return o.serial ? Exec::serial : default_exec(); }

ValidityBudget validity_budget(const Options& o) {
  ValidityBudget b;
  b.max_concepts = o.max_concepts;
  b.max_valuations = o.max_valuations;
  return b;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

int cmd_algebra(const Options& o, std::ostream& out) {
  AlgebraTables tables;
  try {
    tables = parse_algebra_spec(o.algebra)->tables();
  } catch (const InputError&) {
    tables = io::tables_from_json(io::read_json(o.algebra));
  }
  const ValidationReport report = validate_algebra(tables);
  json laws = json::array();
  for (const auto& law : report.laws) {
    json entry{{"law", law.law}, {"passed", law.passed}};
    if (!law.passed) entry["counterexample"] = law.counterexample;
    laws.push_back(std::move(entry));
  }
  if (o.out == "json") {
    emit(out, json{{"passed", report.passed()}, {"size", tables.size}, {"laws", laws}});
  } else {
    std::size_t width = 0;
    for (const auto& law : report.laws) width = std::max(width, law.law.size());
    for (const auto& law : report.laws) {
      out << std::left << std::setw(static_cast<int>(width) + 2) << law.law << (law.passed ? "pass" : "FAIL") << "\n";
    }
    out << (report.passed() ? "residuated lattice" : "not a residuated lattice") << "\n";
    if (!report.passed()) {
      for (const auto& law : report.laws) {
        if (!law.passed) {
          emit(out, json{{"law", law.law}, {"counterexample", law.counterexample}});
          break;
        }
      }
    }
  }
  return report.passed() ? pass : fail;
}

int cmd_lattice(const Options& o, std::ostream& out) {
  const Context ctx = io::load_context(o.context);
  const ConceptLattice lattice = enumerate_concepts(ctx, {o.max_concepts}, exec_of(o));
  if (o.out == "dot") {
    out << to_dot(lattice);
  } else if (o.out == "json") {
    emit(out, io::to_json(lattice));
  } else {
    out << lattice.size() << " concepts over " << ctx.algebra()->name() << "\n";
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      out << "  [" << i << "] extent " << format_degrees(lattice[i].extent) << "  intent "
          << format_degrees(lattice[i].intent) << "\n";
    }
  }
  return pass;
}

int cmd_check(const Options& o, std::ostream& out) {
  const Model m = io::load_model(o.model);
  const Sequent s = parse_sequent(o.sequent);
  const auto witness = sequent_witness(m, s);
  if (!witness) {
    if (o.out == "json") emit(out, json{{"sequent", to_string(s)}, {"true", true}});
    else out << "true\n";
    return pass;
  }
  const Context& base = m.frame().base();
  const Concept l = evaluate(m, s.lhs);
  const Concept r = evaluate(m, s.rhs);
  const TruthAlgebra& alg = *base.algebra();
  json w{{"sequent", to_string(s)},
         {"true", false},
         {"countermodel",
          {{"object", base.objects()->name(*witness)},
           {"lhs_degree", alg.label(l.extent[*witness])},
           {"rhs_degree", alg.label(r.extent[*witness])}}}};
  if (o.out != "json") out << "false\n";
  emit(out, w);
  return fail;
}

int cmd_valid(const Options& o, std::ostream& out) {
  const FramePtr frame = io::load_frame(o.frame);
  const Sequent s = parse_sequent(o.sequent);
  const ValidityBudget budget = validity_budget(o);
  const ComplexAlgebra alg(frame, budget, exec_of(o));
  const ValidityVerdict v = sequent_valid(alg, s, budget, exec_of(o));
  json j = io::to_json(v, alg.lattice());
  j["sequent"] = to_string(s);
  if (o.out == "json") {
    emit(out, j);
  } else {
    out << (v.valid ? "valid" : "invalid") << "\n";
    if (!v.valid) emit(out, j);
  }
  return v.valid ? pass : fail;
}

int cmd_axioms(const Options& o, std::ostream& out) {
  const ValidityBudget budget = validity_budget(o);
  std::vector<std::pair<std::string, FramePtr>> frames;
  if (!o.frame.empty()) frames.emplace_back(o.frame, io::load_frame(o.frame));
  if (o.random > 0) {
    if (o.algebra.empty()) throw UsageError("--random needs --algebra");
    const AlgebraPtr alg = io::algebra_from_arg(o.algebra);
    Rng rng(o.seed);
    FrameShape shape;
    shape.max_objects = o.max_objects;
    shape.max_attributes = o.max_attributes;
    for (std::size_t t = 0; t < o.random; ++t) {
      frames.emplace_back("random #" + std::to_string(t) + " (seed " + std::to_string(o.seed) + ")",
                          random_compatible_frame(rng, alg, shape));
    }
  }
  if (frames.empty()) throw UsageError("axioms needs --frame or --random N");

  bool all = true;
  json reports = json::array();
  std::ostringstream text;
  for (const auto& [label, frame] : frames) {
    const SoundnessReport r = soundness_suite(frame, label, budget, exec_of(o));
    all = all && r.passed();
    if (!r.refused) {
      const ComplexAlgebra alg(frame, budget, exec_of(o));
      reports.push_back(io::to_json(r, &alg.lattice()));
    } else {
      reports.push_back(io::to_json(r));
    }
    text << (r.passed() ? "pass  " : "FAIL  ") << label;
    if (r.refused) text << "  refused: " << r.refusal;
    else text << "  (" << r.lattice_size << " concepts, " << r.axioms.size() << " axioms, " << r.rules.size()
              << " rules)";
    text << "\n";
  }
  if (o.out == "json") {
    emit(out, json{{"passed", all}, {"frames", reports}});
  } else {
    out << text.str();
    out << (all ? "all frames sound" : "soundness check failed") << "\n";
    if (!all) {
      for (const auto& r : reports) {
        if (!r["passed"].get<bool>()) {
          emit(out, r);
          break;
        }
      }
    }
  }
  return all ? pass : fail;
}

int cmd_canonical(const Options& o, std::ostream& out) {
  auto lattice = std::make_shared<const ModalLattice>(io::load_modal_lattice(o.lattice));
  const AlgebraPtr alg = io::algebra_from_arg(o.algebra.empty() ? "lukasiewicz:3" : o.algebra);
  FilterBudget budget{o.max_candidates};
  const LemmaReport lemmas = lemma_suite(*lattice, alg, budget, exec_of(o));
  const CanonicalSurrogate s = build_surrogate(lattice, alg, budget, exec_of(o));
  json j{{"algebra", alg->name()}, {"lemmas", io::to_json(lemmas)}, {"surrogate", io::to_json(s)}};
  if (!lattice->atoms().empty()) {
    const TruthLemmaReport t = truth_lemma_check(s, o.truth_depth);
    json tl{{"passed", t.passed()}, {"depth", o.truth_depth}, {"formulas", t.formulas}};
    if (!t.valuation_ok) tl["valuation_error"] = t.valuation_error;
    json failures = json::array();
    for (const auto& f : t.failures) {
      failures.push_back({{"formula", to_string(f.formula)}, {"side", f.side}, {"element", f.element}});
    }
    tl["failures"] = std::move(failures);
    j["truth_lemma"] = std::move(tl);
  }
  const bool ok = lemmas.passed() && s.diamond_forms_agree && s.box_forms_agree && s.frame->compatibility().passed();
  j["passed"] = ok;
  if (o.out == "json") {
    emit(out, j);
  } else {
    out << "filters " << lemmas.filters << " (" << lemmas.proper_filters << " proper), ideals " << lemmas.ideals
        << " (" << lemmas.proper_ideals << " proper)\n";
    for (const auto& i : lemmas.items) {
      out << "  " << std::left << std::setw(40) << i.item << (i.holds ? "holds" : (i.informational ? "violated (informational)" : "FAILS"))
          << "\n";
    }
    out << "  " << std::left << std::setw(40) << "displayed_forms_agree"
        << (s.diamond_forms_agree && s.box_forms_agree ? "holds" : "FAILS") << "\n";
    out << "  " << std::left << std::setw(40) << "surrogate_compatible"
        << (s.frame->compatibility().passed() ? "holds" : "FAILS") << "\n";
    if (j.contains("truth_lemma")) {
      out << "  " << std::left << std::setw(40) << "truth_lemma"
          << (j["truth_lemma"]["passed"].get<bool>() ? "holds" : "FAILS") << "\n";
    }
    out << (ok ? "lemma suite passed" : "lemma suite failed") << "\n";
    if (!ok) emit(out, j);
  }
  return ok ? pass : fail;
}

std::map<std::string, Degree> parse_basket(const std::string& text, const TruthAlgebra& alg) {
  std::map<std::string, Degree> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("basket entries look like market=weight");
    const std::string w = item.substr(eq + 1);
    double value = 0.0;
    try {
      std::size_t used = 0;
      value = std::stod(w, &used);
      if (used != w.size()) throw std::invalid_argument(w);
    } catch (const std::exception&) {
      throw InputError("basket weight '" + w + "' is not a number");
    }
    out[item.substr(0, eq)] = alg.quantize(value);
  }
  return out;
}

int cmd_arena(const Options& o, std::ostream& out) {
  const Arena arena = load_arena(o.arena);
  std::vector<AnalysisReport> reports;
  if (!o.firm.empty()) {
    reports.push_back(category_report(arena, "c_" + o.firm, {"c_" + o.firm + " := (f_" + o.firm + "^_, f_" + o.firm + "^)"},
                                      firm_category(arena, o.firm)));
  }
  if (!o.market.empty()) {
    reports.push_back(category_report(arena, "c_" + o.market,
                                      {"c_" + o.market + " := (u_" + o.market + "_, u_" + o.market + "_^)"},
                                      market_category(arena, o.market)));
  }
  if (!o.basket.empty()) {
    reports.push_back(category_report(arena, "c_Y", {"c_Y := (u_Y_, u_Y_^)"},
                                      basket_category(arena, parse_basket(o.basket, *arena.algebra()))));
  }
  if (!o.rhd_market.empty()) {
    reports.push_back(typicality_analysis(arena, Typicality::rhd_over_concept, market_category(arena, o.rhd_market),
                                          "c_" + o.rhd_market));
  }
  if (!o.rhd_firm.empty()) {
    reports.push_back(typicality_analysis(arena, Typicality::rhd_over_concept, firm_category(arena, o.rhd_firm),
                                          "c_" + o.rhd_firm));
  }
  if (!o.lhd_firm.empty()) {
    reports.push_back(typicality_analysis(arena, Typicality::lhd_over_concept, firm_category(arena, o.lhd_firm),
                                          "c_" + o.lhd_firm));
  }
  if (!o.lhd_market.empty()) {
    reports.push_back(typicality_analysis(arena, Typicality::lhd_over_concept,
                                          market_category(arena, o.lhd_market), "c_" + o.lhd_market));
  }
  if (!o.box_firm.empty()) reports.push_back(box_refinement_analysis(arena, o.box_firm));

  if (o.out == "json") {
    json j{{"algebra", arena.algebra()->name()},
           {"labels", arena.labels},
           {"warnings", arena.warnings},
           {"compatibility", io::to_json(arena.frame->compatibility())}};
    json rs = json::array();
    for (const auto& r : reports) rs.push_back(to_json(r));
    j["reports"] = std::move(rs);
    emit(out, j);
  } else {
    out << "arena: " << arena.base().objects()->size() << " firms x " << arena.base().attributes()->size()
        << " markets over " << arena.algebra()->name() << "\n";
    for (const auto& w : arena.warnings) out << "warning: " << w << "\n";
    for (const auto& r : reports) out << "\n" << to_text(r);
  }
  return pass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Many-valued polarity semantics for non-distributive modal logic", "mvlogic"};
  app.require_subcommand(1, 1);
  app.add_flag("--serial", o.serial, "Disable OpenMP kernels");

  auto out_opt = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--out", o.out, "Output format")->check(CLI::IsMember(allowed))->capture_default_str();
  };

  auto* algebra = app.add_subcommand("algebra", "Validate an algebra against the residuated-lattice laws");
  algebra->add_option("--algebra", o.algebra, "Inline spec (lukasiewicz:5) or algebra file")->required();
  out_opt(algebra, {"text", "json"});

  auto* lattice = app.add_subcommand("lattice", "Enumerate the concept lattice of a context");
  lattice->add_option("--context", o.context, "Context file")->required();
  lattice->add_option("--max-concepts", o.max_concepts, "Enumeration budget")->capture_default_str();
  out_opt(lattice, {"text", "json", "dot"});

  auto* check = app.add_subcommand("check", "Truth of a sequent in a model");
  check->add_option("--model", o.model, "Model file")->required();
  check->add_option("--sequent", o.sequent, "Sequent, e.g. \"p |- box p\"")->required();
  out_opt(check, {"text", "json"});

  auto* valid = app.add_subcommand("valid", "Validity of a sequent on a frame");
  valid->add_option("--frame", o.frame, "Frame file")->required();
  valid->add_option("--sequent", o.sequent, "Sequent")->required();
  valid->add_option("--max-concepts", o.max_concepts, "Enumeration budget")->capture_default_str();
  valid->add_option("--max-valuations", o.max_valuations, "Valuation budget")->capture_default_str();
  out_opt(valid, {"text", "json"});

  auto* axioms = app.add_subcommand("axioms", "Soundness suite on a frame or on seeded random frames");
  axioms->add_option("--frame", o.frame, "Frame file");
  axioms->add_option("--random", o.random, "Number of random compatible frames");
  axioms->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  axioms->add_option("--algebra", o.algebra, "Algebra for random frames");
  axioms->add_option("--max-objects", o.max_objects, "Largest random object set")->capture_default_str();
  axioms->add_option("--max-attributes", o.max_attributes, "Largest random attribute set")->capture_default_str();
  axioms->add_option("--max-concepts", o.max_concepts, "Enumeration budget")->capture_default_str();
  axioms->add_option("--max-valuations", o.max_valuations, "Valuation budget")->capture_default_str();
  out_opt(axioms, {"text", "json"});

  auto* canonical = app.add_subcommand("canonical", "Filter/ideal lemma suite and canonical surrogate");
  canonical->add_option("--lattice", o.lattice, "Modal lattice file")->required();
  canonical->add_option("--algebra", o.algebra, "Truth algebra (default lukasiewicz:3)");
  canonical->add_option("--max-candidates", o.max_candidates, "Candidate map budget")->capture_default_str();
  canonical->add_option("--truth-depth", o.truth_depth, "Formula depth for the truth-lemma check")
      ->capture_default_str();
  out_opt(canonical, {"text", "json"});

  auto* arena = app.add_subcommand("arena", "Multi-market competition analyses");
  arena->add_option("--arena", o.arena, "Arena file")->required();
  arena->add_option("--firm", o.firm, "Firm category c_a");
  arena->add_option("--market", o.market, "Market category c_x");
  arena->add_option("--basket", o.basket, "Basket category, e.g. x1=0.5,x2=1");
  arena->add_option("--rhd-market", o.rhd_market, "rhd over c_x");
  arena->add_option("--rhd-firm", o.rhd_firm, "rhd over c_a");
  arena->add_option("--lhd-firm", o.lhd_firm, "lhd over c_a");
  arena->add_option("--lhd-market", o.lhd_market, "lhd over c_x");
  arena->add_option("--box-firm", o.box_firm, "Box refinement of c_a");
  out_opt(arena, {"text", "json"});

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return pass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return pass;
  } catch (const CLI::ParseError& e) {
    err << json{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
    return input_error;
  }

  try {
    if (*algebra) return cmd_algebra(o, out);
    if (*lattice) return cmd_lattice(o, out);
    if (*check) return cmd_check(o, out);
    if (*valid) return cmd_valid(o, out);
    if (*axioms) return cmd_axioms(o, out);
    if (*canonical) return cmd_canonical(o, out);
    if (*arena) return cmd_arena(o, out);
  } catch (const ParseError& e) {
    err << json{{"error", "parse"}, {"message", e.what()}, {"position", e.position()}}.dump() << "\n";
    return input_error;
  } catch (const ResourceError& e) {
    err << json{{"error", "resource"}, {"message", e.what()}}.dump() << "\n";
    return input_error;
  } catch (const CapabilityError& e) {
    err << json{{"error", "capability"}, {"message", e.what()}}.dump() << "\n";
    return input_error;
  } catch (const Error& e) {
    err << json{{"error", "input"}, {"message", e.what()}}.dump() << "\n";
    return input_error;
  }
  return input_error;
}

}  // namespace mvlogic::cli

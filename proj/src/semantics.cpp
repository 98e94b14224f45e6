#include "mvlogic/semantics.hpp"

#include <algorithm>
#include <stdexcept>

#include "mvlogic/error.hpp"

namespace mvlogic {

Model::Model(FramePtr frame, Valuation valuation)
    : frame_(std::move(frame)), valuation_(std::move(valuation)) {
  if (!frame_) throw UsageError("model needs a frame");
  const Context& base = frame_->base();
  for (const auto& [atom, c] : valuation_) {
    if (!same_carrier(c.extent.carrier(), base.objects()) ||
        !same_carrier(c.intent.carrier(), base.attributes())) {
      throw InputError("valuation of '" + atom + "' is not over the frame's carriers");
    }
    if (base.up(c.extent) != c.intent || base.down(c.intent) != c.extent) {
      throw InputError("valuation of '" + atom + "' is not a formal concept of the frame");
    }
  }
}

const Concept& Model::value(const std::string& atom) const {
  auto it = valuation_.find(atom);
  if (it == valuation_.end()) throw UsageError("atom '" + atom + "' is not bound by the valuation");
  return it->second;
}

Concept evaluate(const Model& m, const Formula& phi) {
  const EnrichedContext& frame = m.frame();
  const Context& base = frame.base();
  switch (phi.connective()) {
    case Connective::atom:
      return m.value(phi.name());
    case Connective::top: {
      MvSet extent = base.all_objects(base.algebra()->top());
      MvSet intent = base.up(extent);
      return Concept{std::move(extent), std::move(intent)};
    }
    case Connective::bot: {
      MvSet intent = base.all_attributes(base.algebra()->top());
      MvSet extent = base.down(intent);
      return Concept{std::move(extent), std::move(intent)};
    }
    case Connective::conj: {
      MvSet extent = pointwise_meet(evaluate(m, phi.lhs()).extent, evaluate(m, phi.rhs()).extent);
      MvSet intent = base.up(extent);
      return Concept{std::move(extent), std::move(intent)};
    }
    case Connective::disj: {
      MvSet intent = pointwise_meet(evaluate(m, phi.lhs()).intent, evaluate(m, phi.rhs()).intent);
      MvSet extent = base.down(intent);
      return Concept{std::move(extent), std::move(intent)};
    }
    case Connective::box:
      return box_op(frame, evaluate(m, phi.lhs()));
    case Connective::dia:
      return diamond_op(frame, evaluate(m, phi.lhs()));
    case Connective::rhd:
      return rhd_op(frame, evaluate(m, phi.lhs())).closed;
    case Connective::lhd:
      return lhd_op(frame, evaluate(m, phi.lhs())).closed;
  }
  throw UsageError("unknown connective");
}

Degree degree_membership(const Model& m, const std::string& object, const Formula& phi) {
  const std::size_t a = m.frame().base().objects()->index_of(object);
  return evaluate(m, phi).extent[a];
}

Degree degree_description(const Model& m, const std::string& attribute, const Formula& phi) {
  const std::size_t x = m.frame().base().attributes()->index_of(attribute);
  return evaluate(m, phi).intent[x];
}

bool membership_holds(const Model& m, const std::string& object, Degree alpha, const Formula& phi) {
  return m.frame().algebra()->leq(alpha, degree_membership(m, object, phi));
}

bool description_holds(const Model& m, const std::string& attribute, Degree alpha,
                       const Formula& phi) {
  return m.frame().algebra()->leq(alpha, degree_description(m, attribute, phi));
}

std::optional<std::size_t> sequent_witness(const Model& m, const Sequent& s) {
  const Concept lhs = evaluate(m, s.lhs);
  const Concept rhs = evaluate(m, s.rhs);
  const bool by_extent = included(lhs.extent, rhs.extent);
  const bool by_intent = included(rhs.intent, lhs.intent);
  if (by_extent != by_intent) {
    throw std::logic_error("extent and intent inclusion disagree on " + to_string(s));
  }
  if (by_extent) return std::nullopt;
  const TruthAlgebra& alg = *m.frame().algebra();
  for (std::size_t a = 0; a < lhs.extent.size(); ++a) {
    if (!alg.leq(lhs.extent[a], rhs.extent[a])) return a;
  }
  return std::nullopt;
}

bool sequent_true(const Model& m, const Sequent& s) { return !sequent_witness(m, s).has_value(); }

namespace {

std::uint32_t require_index(const ConceptLattice& lattice, const Concept& c, const char* what) {
  if (auto k = lattice.find(c)) return static_cast<std::uint32_t>(*k);
  throw std::logic_error(std::string(what) + " produced a pair outside the concept lattice");
}

}  // namespace

ComplexAlgebra::ComplexAlgebra(FramePtr frame, const ValidityBudget& budget, Exec exec)
    : frame_(std::move(frame)),
      lattice_(enumerate_concepts(frame_->base(), EnumerationBudget{budget.max_concepts}, exec)) {
  const std::size_t m = lattice_.size();
  if (m > budget.max_table_concepts) {
    throw ResourceError("complex algebra tables need " + std::to_string(m) +
                        " concepts, above the table budget of " +
                        std::to_string(budget.max_table_concepts));
  }
  meet_.resize(m * m);
  join_.resize(m * m);
  const auto n = static_cast<std::int64_t>(m);
  auto fill_row = [&](std::int64_t i) {
    for (std::size_t j = 0; j < m; ++j) {
      meet_[i * m + j] = static_cast<std::uint32_t>(lattice_.meet(static_cast<std::size_t>(i), j));
      join_[i * m + j] = static_cast<std::uint32_t>(lattice_.join(static_cast<std::size_t>(i), j));
    }
  };
  if (exec == Exec::serial) {
    for (std::int64_t i = 0; i < n; ++i) fill_row(i);
  } else {
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < n; ++i) fill_row(i);
  }

  const EnrichedContext& ec = *frame_;
  auto build = [&](Connective op, auto image) {
    std::vector<std::uint32_t> map(m);
    for (std::size_t i = 0; i < m; ++i) map[i] = image(lattice_[i]);
    unary_.emplace(op, std::move(map));
  };
  if (ec.usable(RelationSlot::box)) {
    build(Connective::box, [&](const Concept& c) { return require_index(lattice_, box_op(ec, c), "box"); });
  }
  if (ec.usable(RelationSlot::diamond)) {
    build(Connective::dia,
          [&](const Concept& c) { return require_index(lattice_, diamond_op(ec, c), "diamond"); });
  }
  if (ec.usable(RelationSlot::rhd)) {
    build(Connective::rhd,
          [&](const Concept& c) { return require_index(lattice_, rhd_op(ec, c).closed, "rhd"); });
  }
  if (ec.usable(RelationSlot::lhd)) {
    build(Connective::lhd,
          [&](const Concept& c) { return require_index(lattice_, lhd_op(ec, c).closed, "lhd"); });
  }
}

bool ComplexAlgebra::supports(Connective op) const { return unary_.count(op) != 0; }

std::uint32_t ComplexAlgebra::apply(Connective op, std::uint32_t i) const {
  auto it = unary_.find(op);
  if (it == unary_.end()) throw CapabilityError("frame does not support this modal operator");
  return it->second[i];
}

namespace {

RelationSlot slot_of(Connective op) {
  switch (op) {
    case Connective::box:
      return RelationSlot::box;
    case Connective::dia:
      return RelationSlot::diamond;
    case Connective::rhd:
      return RelationSlot::rhd;
    default:
      return RelationSlot::lhd;
  }
}

// Postfix program over concept indices.
struct Instr {
  Connective op;
  std::uint32_t slot = 0;
};

void compile(const Formula& phi, const std::vector<std::string>& atoms, const ComplexAlgebra& alg,
             std::vector<Instr>& out) {
  switch (phi.connective()) {
    case Connective::atom: {
      auto it = std::find(atoms.begin(), atoms.end(), phi.name());
      if (it == atoms.end()) throw UsageError("atom '" + phi.name() + "' is not bound");
      out.push_back({Connective::atom, static_cast<std::uint32_t>(it - atoms.begin())});
      return;
    }
    case Connective::top:
    case Connective::bot:
      out.push_back({phi.connective()});
      return;
    case Connective::conj:
    case Connective::disj:
      compile(phi.lhs(), atoms, alg, out);
      compile(phi.rhs(), atoms, alg, out);
      out.push_back({phi.connective()});
      return;
    default:
      if (!alg.supports(phi.connective())) {
        const RelationSlot slot = slot_of(phi.connective());
        if (!alg.frame().has(slot)) throw CapabilityError("frame has no " + to_string(slot) + " relation");
        throw CapabilityError(to_string(slot) + " is not I-compatible; the operator is disabled");
      }
      compile(phi.lhs(), atoms, alg, out);
      out.push_back({phi.connective()});
      return;
  }
}

std::uint32_t run(const std::vector<Instr>& prog, const ComplexAlgebra& alg,
                  const std::vector<std::uint32_t>& assignment, std::vector<std::uint32_t>& stack) {
  stack.clear();
  const auto top = static_cast<std::uint32_t>(alg.lattice().top());
  for (const Instr& in : prog) {
    switch (in.op) {
      case Connective::atom:
        stack.push_back(assignment[in.slot]);
        break;
      case Connective::top:
        stack.push_back(top);
        break;
      case Connective::bot:
        stack.push_back(0);
        break;
      case Connective::conj:
      case Connective::disj: {
        const std::uint32_t r = stack.back();
        stack.pop_back();
        std::uint32_t& l = stack.back();
        l = in.op == Connective::conj ? alg.meet(l, r) : alg.join(l, r);
        break;
      }
      default:
        stack.back() = alg.apply(in.op, stack.back());
        break;
    }
  }
  return stack.back();
}

}  // namespace

std::uint32_t ComplexAlgebra::evaluate(const Formula& phi, const std::vector<std::string>& atoms,
                                       const std::vector<std::uint32_t>& assignment) const {
  std::vector<Instr> prog;
  compile(phi, atoms, *this, prog);
  std::vector<std::uint32_t> stack;
  return run(prog, *this, assignment, stack);
}

ValidityVerdict sequent_valid(const ComplexAlgebra& alg, const Sequent& s,
                              const ValidityBudget& budget, Exec exec) {
  std::vector<std::string> atoms = s.atoms();
  std::sort(atoms.begin(), atoms.end());
  std::vector<Instr> lhs;
  std::vector<Instr> rhs;
  compile(s.lhs, atoms, alg, lhs);
  compile(s.rhs, atoms, alg, rhs);

  const std::size_t m = alg.size();
  const auto total = kernels::checked_power(m, atoms.size(), budget.max_valuations);
  if (!total) {
    throw ResourceError(std::to_string(m) + "^" + std::to_string(atoms.size()) +
                        " valuations exceed the budget of " + std::to_string(budget.max_valuations));
  }

  auto decode = [&](std::uint64_t index) {
    // Concept counts can exceed the Degree range, so no kernels::decode_mixed here.
    std::vector<std::uint32_t> assignment(atoms.size());
    for (std::size_t k = atoms.size(); k-- > 0;) {
      assignment[k] = static_cast<std::uint32_t>(index % m);
      index /= m;
    }
    return assignment;
  };
  auto fails = [&](std::uint64_t index) {
    thread_local std::vector<std::uint32_t> stack;
    const std::vector<std::uint32_t> assignment = decode(index);
    const std::uint32_t l = run(lhs, alg, assignment, stack);
    const std::uint32_t r = run(rhs, alg, assignment, stack);
    return !alg.leq(l, r);
  };

  ValidityVerdict verdict;
  verdict.lattice_size = m;
  verdict.valuations = *total;
  const auto failure = kernels::first_failure(*total, fails, exec);
  if (!failure) return verdict;

  verdict.valid = false;
  Countermodel cm;
  const std::vector<std::uint32_t> assignment = decode(*failure);
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    cm.assignment[atoms[k]] = assignment[k];
    cm.valuation.emplace(atoms[k], alg.lattice()[assignment[k]]);
  }
  std::vector<std::uint32_t> stack;
  const Concept& l = alg.lattice()[run(lhs, alg, assignment, stack)];
  const Concept& r = alg.lattice()[run(rhs, alg, assignment, stack)];
  const TruthAlgebra& truth = *alg.frame().algebra();
  for (std::size_t a = 0; a < l.extent.size(); ++a) {
    if (!truth.leq(l.extent[a], r.extent[a])) {
      cm.object = a;
      break;
    }
  }
  verdict.countermodel = std::move(cm);
  return verdict;
}

ValidityVerdict sequent_valid(const FramePtr& frame, const Sequent& s, const ValidityBudget& budget,
                              Exec exec) {
  return sequent_valid(ComplexAlgebra(frame, budget, exec), s, budget, exec);
}

bool SoundnessReport::passed() const {
  if (refused) return false;
  return std::all_of(axioms.begin(), axioms.end(), [](const AxiomResult& r) { return r.verdict.valid; }) &&
         std::all_of(rules.begin(), rules.end(), [](const RuleResult& r) { return r.passed; });
}

SoundnessReport soundness_suite(const FramePtr& frame, const std::string& label,
                                const ValidityBudget& budget, Exec exec) {
  SoundnessReport report;
  report.label = label;
  report.compatibility = frame->compatibility();
  if (!frame->has(RelationSlot::box) || !frame->has(RelationSlot::diamond)) {
    report.refused = true;
    report.refusal = "frame must carry both R_box and R_diamond";
    return report;
  }
  if (!report.compatibility.passed()) {
    report.refused = true;
    report.refusal = "frame is not I-compatible";
    return report;
  }

  const ComplexAlgebra alg(frame, budget, exec);
  report.lattice_size = alg.size();
  for (const Sequent& axiom : axiom_catalogue()) {
    report.axioms.push_back(AxiomResult{axiom, sequent_valid(alg, axiom, budget, exec)});
  }

  const std::size_t m = alg.size();
  for (Connective op : {Connective::box, Connective::dia}) {
    RuleResult rule{op == Connective::box ? "phi |- psi / box phi |- box psi"
                                          : "phi |- psi / dia phi |- dia psi",
                    true,
                    std::nullopt};
    for (std::uint32_t i = 0; i < m && rule.passed; ++i) {
      for (std::uint32_t j = 0; j < m; ++j) {
        if (alg.leq(i, j) && !alg.leq(alg.apply(op, i), alg.apply(op, j))) {
          rule.passed = false;
          rule.witness = std::make_pair(std::size_t{i}, std::size_t{j});
          break;
        }
      }
    }
    report.rules.push_back(std::move(rule));
  }
  return report;
}

}  // namespace mvlogic

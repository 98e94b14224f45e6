#include "mvlogic/canonical.hpp"

#include <algorithm>
#include <sstream>

#include "mvlogic/error.hpp"

namespace mvlogic {

ModalLattice::ModalLattice(std::vector<std::string> elements, std::vector<std::vector<bool>> leq,
                           std::vector<std::size_t> box, std::vector<std::size_t> dia,
                           std::map<std::string, std::size_t> atoms)
    : names_(std::move(elements)), box_(std::move(box)), dia_(std::move(dia)), atoms_(std::move(atoms)) {
  const std::size_t n = names_.size();
  if (n == 0) throw InputError("modal lattice needs at least one element");
  Carrier check(names_);  // rejects duplicate or empty names
  if (leq.size() != n) throw InputError("leq must be an n x n matrix");
  leq_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (leq[a].size() != n) throw InputError("leq must be an n x n matrix");
    for (std::size_t b = 0; b < n; ++b) leq_[a * n + b] = leq[a][b];
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (!this->leq(a, a)) throw InputError("leq is not reflexive at " + names_[a]);
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && this->leq(a, b) && this->leq(b, a)) {
        throw InputError("leq is not antisymmetric at " + names_[a] + ", " + names_[b]);
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (this->leq(a, b) && this->leq(b, c) && !this->leq(a, c)) {
          throw InputError("leq is not transitive at " + names_[a] + ", " + names_[b] + ", " + names_[c]);
        }
      }
    }
  }
  join_.resize(n * n);
  meet_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::optional<std::size_t> lub;
      std::optional<std::size_t> glb;
      for (std::size_t c = 0; c < n; ++c) {
        if (this->leq(a, c) && this->leq(b, c)) {
          bool least = true;
          for (std::size_t d = 0; d < n && least; ++d) {
            if (this->leq(a, d) && this->leq(b, d) && !this->leq(c, d)) least = false;
          }
          if (least) lub = c;
        }
        if (this->leq(c, a) && this->leq(c, b)) {
          bool greatest = true;
          for (std::size_t d = 0; d < n && greatest; ++d) {
            if (this->leq(d, a) && this->leq(d, b) && !this->leq(d, c)) greatest = false;
          }
          if (greatest) glb = c;
        }
      }
      if (!lub) throw InputError("elements " + names_[a] + " and " + names_[b] + " have no join");
      if (!glb) throw InputError("elements " + names_[a] + " and " + names_[b] + " have no meet");
      join_[a * n + b] = *lub;
      meet_[a * n + b] = *glb;
    }
  }
  bottom_ = 0;
  top_ = 0;
  for (std::size_t a = 1; a < n; ++a) {
    bottom_ = meet(bottom_, a);
    top_ = join(top_, a);
  }

  if (box_.size() != n || dia_.size() != n) throw InputError("box and dia must map every element");
  for (std::size_t a = 0; a < n; ++a) {
    if (box_[a] >= n || dia_[a] >= n) throw InputError("box/dia map outside the lattice");
  }
  if (box_[top_] != top_) throw InputError("box must preserve top");
  if (dia_[bottom_] != bottom_) throw InputError("dia must preserve bottom");
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (box_[meet(a, b)] != meet(box_[a], box_[b])) {
        throw InputError("box does not preserve the meet of " + names_[a] + " and " + names_[b]);
      }
      if (dia_[join(a, b)] != join(dia_[a], dia_[b])) {
        throw InputError("dia does not preserve the join of " + names_[a] + " and " + names_[b]);
      }
    }
  }
  for (const auto& [atom, e] : atoms_) {
    if (e >= n) throw InputError("atom '" + atom + "' designates no element");
  }
}

ModalLattice ModalLattice::chain(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  std::vector<std::size_t> id(n);
  for (std::size_t a = 0; a < n; ++a) {
    names.push_back("e" + std::to_string(a));
    id[a] = a;
    for (std::size_t b = 0; b < n; ++b) leq[a][b] = a <= b;
  }
  return ModalLattice(std::move(names), std::move(leq), id, id);
}

ModalLattice ModalLattice::diamond4() {
  std::vector<std::string> names{"bot", "a", "b", "top"};
  std::vector<std::vector<bool>> leq{{true, true, true, true},
                                     {false, true, false, true},
                                     {false, false, true, true},
                                     {false, false, false, true}};
  std::vector<std::size_t> id{0, 1, 2, 3};
  return ModalLattice(std::move(names), std::move(leq), id, id);
}

ModalLattice ModalLattice::with_modalities(std::vector<std::size_t> box, std::vector<std::size_t> dia) const {
  std::vector<std::vector<bool>> leq(size(), std::vector<bool>(size()));
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = 0; b < size(); ++b) leq[a][b] = this->leq(a, b);
  }
  return ModalLattice(names_, std::move(leq), std::move(box), std::move(dia), atoms_);
}

ModalLattice ModalLattice::with_atoms(std::map<std::string, std::size_t> atoms) const {
  ModalLattice copy = *this;
  for (const auto& [atom, e] : atoms) {
    if (e >= size()) throw InputError("atom '" + atom + "' designates no element");
  }
  copy.atoms_ = std::move(atoms);
  return copy;
}

std::size_t ModalLattice::interpret(const Formula& phi) const {
  switch (phi.connective()) {
    case Connective::bot:
      return bottom_;
    case Connective::top:
      return top_;
    case Connective::atom: {
      auto it = atoms_.find(phi.name());
      if (it == atoms_.end()) throw UsageError("atom '" + phi.name() + "' is not designated");
      return it->second;
    }
    case Connective::conj:
      return meet(interpret(phi.lhs()), interpret(phi.rhs()));
    case Connective::disj:
      return join(interpret(phi.lhs()), interpret(phi.rhs()));
    case Connective::box:
      return box_[interpret(phi.lhs())];
    case Connective::dia:
      return dia_[interpret(phi.lhs())];
    default:
      throw CapabilityError("modal lattices interpret only box and dia");
  }
}

bool is_filter(const ModalLattice& L, const TruthAlgebra& alg, const std::vector<Degree>& k) {
  if (k[L.top()] != alg.top()) return false;
  for (std::size_t a = 0; a < L.size(); ++a) {
    for (std::size_t b = a + 1; b < L.size(); ++b) {
      if (k[L.meet(a, b)] != alg.meet(k[a], k[b])) return false;
    }
  }
  return true;
}

bool is_ideal(const ModalLattice& L, const TruthAlgebra& alg, const std::vector<Degree>& k) {
  if (k[L.bottom()] != alg.top()) return false;
  for (std::size_t a = 0; a < L.size(); ++a) {
    for (std::size_t b = a + 1; b < L.size(); ++b) {
      if (k[L.join(a, b)] != alg.meet(k[a], k[b])) return false;
    }
  }
  return true;
}

namespace {

std::vector<std::vector<Degree>> enumerate_maps(const ModalLattice& L, const TruthAlgebra& alg,
                                                FilterBudget budget, Exec exec, bool filters) {
  const auto total = kernels::checked_power(alg.size(), L.size(), budget.max_candidates);
  if (!total) {
    throw ResourceError(std::to_string(alg.size()) + "^" + std::to_string(L.size()) +
                        " candidate maps exceed the budget of " + std::to_string(budget.max_candidates));
  }
  auto keep = [&](std::uint64_t index) {
    std::vector<Degree> k(L.size());
    kernels::decode_mixed(index, alg.size(), k);
    return filters ? is_filter(L, alg, k) : is_ideal(L, alg, k);
  };
  std::vector<std::vector<Degree>> out;
  for (std::uint64_t index : kernels::select(*total, keep, exec)) {
    std::vector<Degree> k(L.size());
    kernels::decode_mixed(index, alg.size(), k);
    out.push_back(std::move(k));
  }
  return out;
}

Degree join_over(const TruthAlgebra& alg, std::size_t n, const auto& term) {
  Degree acc = alg.bottom();
  for (std::size_t a = 0; a < n; ++a) acc = alg.join(acc, term(a));
  return acc;
}

std::string show(const std::vector<Degree>& k) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
  os << ")";
  return os.str();
}

}  // namespace

std::vector<MvFilter> enumerate_filters(const ModalLattice& L, const TruthAlgebra& alg,
                                        FilterBudget budget, Exec exec) {
  std::vector<MvFilter> out;
  for (auto& k : enumerate_maps(L, alg, budget, exec, true)) {
    const bool proper = k[L.bottom()] == alg.bottom();
    out.push_back(MvFilter{std::move(k), proper});
  }
  return out;
}

std::vector<MvIdeal> enumerate_ideals(const ModalLattice& L, const TruthAlgebra& alg,
                                      FilterBudget budget, Exec exec) {
  std::vector<MvIdeal> out;
  for (auto& k : enumerate_maps(L, alg, budget, exec, false)) {
    const bool proper = k[L.top()] == alg.bottom();
    out.push_back(MvIdeal{std::move(k), proper});
  }
  return out;
}

std::vector<Degree> diamond_inverse(const ModalLattice& L, const TruthAlgebra& alg,
                                    const std::vector<Degree>& k) {
  std::vector<Degree> out(L.size(), alg.bottom());
  for (std::size_t a = 0; a < L.size(); ++a) {
    for (std::size_t b = 0; b < L.size(); ++b) {
      if (L.leq(L.dia(b), a)) out[a] = alg.join(out[a], k[b]);
    }
  }
  return out;
}

std::vector<Degree> box_inverse(const ModalLattice& L, const TruthAlgebra& alg,
                                const std::vector<Degree>& k) {
  std::vector<Degree> out(L.size(), alg.bottom());
  for (std::size_t a = 0; a < L.size(); ++a) {
    for (std::size_t b = 0; b < L.size(); ++b) {
      if (L.leq(a, L.box(b))) out[a] = alg.join(out[a], k[b]);
    }
  }
  return out;
}

MvFilter diamond_inverse(const ModalLattice& L, const TruthAlgebra& alg, const MvFilter& f) {
  std::vector<Degree> d = diamond_inverse(L, alg, f.degrees);
  const bool proper = d[L.bottom()] == alg.bottom();
  return MvFilter{std::move(d), proper};
}

MvIdeal box_inverse(const ModalLattice& L, const TruthAlgebra& alg, const MvIdeal& i) {
  std::vector<Degree> d = box_inverse(L, alg, i.degrees);
  const bool proper = d[L.top()] == alg.bottom();
  return MvIdeal{std::move(d), proper};
}

CanonicalSurrogate build_surrogate(std::shared_ptr<const ModalLattice> L, AlgebraPtr algebra,
                                   FilterBudget budget, Exec exec) {
  const ModalLattice& lat = *L;
  const TruthAlgebra& alg = *algebra;
  CanonicalSurrogate s;
  s.lattice = L;
  s.algebra = algebra;
  for (auto& f : enumerate_filters(lat, alg, budget, exec)) {
    if (f.proper) s.filters.push_back(std::move(f));
  }
  for (auto& i : enumerate_ideals(lat, alg, budget, exec)) {
    if (i.proper) s.ideals.push_back(std::move(i));
  }

  const std::size_t nf = s.filters.size();
  const std::size_t ni = s.ideals.size();
  const std::size_t n = lat.size();
  std::vector<std::vector<Degree>> f_dia(nf);
  std::vector<std::vector<Degree>> i_box(ni);
  for (std::size_t f = 0; f < nf; ++f) f_dia[f] = diamond_inverse(lat, alg, s.filters[f].degrees);
  for (std::size_t i = 0; i < ni; ++i) i_box[i] = box_inverse(lat, alg, s.ideals[i].degrees);

  std::vector<Degree> incidence(nf * ni);
  std::vector<Degree> r_box(nf * ni);
  std::vector<Degree> r_dia(ni * nf);
  for (std::size_t f = 0; f < nf; ++f) {
    const auto& fd = s.filters[f].degrees;
    for (std::size_t i = 0; i < ni; ++i) {
      const auto& id = s.ideals[i].degrees;
      incidence[f * ni + i] = join_over(alg, n, [&](std::size_t a) { return alg.otimes(fd[a], id[a]); });

      const Degree dia_first = join_over(alg, n, [&](std::size_t a) { return alg.otimes(f_dia[f][a], id[a]); });
      const Degree dia_second = join_over(alg, n, [&](std::size_t a) { return alg.otimes(fd[a], id[lat.dia(a)]); });
      r_dia[i * nf + f] = dia_first;
      if (dia_first != dia_second && !s.diamond_disagreement) {
        s.diamond_forms_agree = false;
        s.diamond_disagreement = std::make_pair(f, i);
      }

      const Degree box_first = join_over(alg, n, [&](std::size_t a) { return alg.otimes(fd[a], i_box[i][a]); });
      const Degree box_second = join_over(alg, n, [&](std::size_t a) { return alg.otimes(fd[lat.box(a)], id[a]); });
      r_box[f * ni + i] = box_first;
      if (box_first != box_second && !s.box_disagreement) {
        s.box_forms_agree = false;
        s.box_disagreement = std::make_pair(f, i);
      }
    }
  }

  CarrierPtr objects = make_carrier("f", nf);
  CarrierPtr attributes = make_carrier("i", ni);
  Context base(objects, attributes, MvRelation(algebra, objects, attributes, std::move(incidence)));
  s.frame = std::make_shared<const EnrichedContext>(
      std::move(base), MvRelation(algebra, objects, attributes, std::move(r_box)),
      MvRelation(algebra, attributes, objects, std::move(r_dia)));
  return s;
}

bool LemmaReport::passed() const {
  return std::all_of(items.begin(), items.end(),
                     [](const LemmaItem& i) { return i.informational || i.holds; });
}

const LemmaItem* LemmaReport::find(const std::string& item) const {
  for (const auto& i : items) {
    if (i.item == item) return &i;
  }
  return nullptr;
}

LemmaReport lemma_suite(const ModalLattice& L, AlgebraPtr algebra, FilterBudget budget, Exec exec) {
  const TruthAlgebra& alg = *algebra;
  const std::vector<MvFilter> filters = enumerate_filters(L, alg, budget, exec);
  const std::vector<MvIdeal> ideals = enumerate_ideals(L, alg, budget, exec);
  const std::size_t n = L.size();

  LemmaReport report;
  report.filters = filters.size();
  report.ideals = ideals.size();
  for (const auto& f : filters) report.proper_filters += f.proper ? 1 : 0;
  for (const auto& i : ideals) report.proper_ideals += i.proper ? 1 : 0;

  auto fail = [](LemmaItem& item, std::string witness) {
    if (item.holds) item.witness = std::move(witness);
    item.holds = false;
  };

  LemmaItem closure_dia{"filter_closed_under_diamond_inverse", true, false, 0, {}};
  LemmaItem proper_dia{"proper_filter_diamond_inverse_proper", true, true, 0, {}};
  LemmaItem closure_box{"ideal_closed_under_box_inverse", true, false, 0, {}};
  LemmaItem proper_box{"proper_ideal_box_inverse_proper", true, true, 0, {}};
  LemmaItem below_dia{"k_below_diamond_inverse_of_dia", true, false, 0, {}};
  LemmaItem below_box{"k_below_box_inverse_of_box", true, false, 0, {}};
  LemmaItem identity_dia{"diamond_inverse_identity", true, false, 0, {}};
  LemmaItem identity_box{"box_inverse_identity", true, false, 0, {}};

  std::vector<std::vector<Degree>> f_dia(filters.size());
  for (std::size_t k = 0; k < filters.size(); ++k) {
    const auto& f = filters[k];
    f_dia[k] = diamond_inverse(L, alg, f.degrees);
    ++closure_dia.checked;
    if (!is_filter(L, alg, f_dia[k])) fail(closure_dia, "filter " + show(f.degrees));
    if (f.proper) {
      ++proper_dia.checked;
      if (f_dia[k][L.bottom()] != alg.bottom()) fail(proper_dia, "proper filter " + show(f.degrees));
    }
    for (std::size_t a = 0; a < n; ++a) {
      ++below_dia.checked;
      if (!alg.leq(f.degrees[a], f_dia[k][L.dia(a)])) {
        fail(below_dia, "filter " + show(f.degrees) + " at " + L.name(a));
      }
    }
  }
  std::vector<std::vector<Degree>> i_box(ideals.size());
  for (std::size_t k = 0; k < ideals.size(); ++k) {
    const auto& i = ideals[k];
    i_box[k] = box_inverse(L, alg, i.degrees);
    ++closure_box.checked;
    if (!is_ideal(L, alg, i_box[k])) fail(closure_box, "ideal " + show(i.degrees));
    if (i.proper) {
      ++proper_box.checked;
      if (i_box[k][L.top()] != alg.bottom()) fail(proper_box, "proper ideal " + show(i.degrees));
    }
    for (std::size_t a = 0; a < n; ++a) {
      ++below_box.checked;
      if (!alg.leq(i.degrees[a], i_box[k][L.box(a)])) {
        fail(below_box, "ideal " + show(i.degrees) + " at " + L.name(a));
      }
    }
  }

  for (std::size_t fk = 0; fk < filters.size(); ++fk) {
    if (!filters[fk].proper) continue;
    const auto& fd = filters[fk].degrees;
    for (std::size_t ik = 0; ik < ideals.size(); ++ik) {
      if (!ideals[ik].proper) continue;
      const auto& id = ideals[ik].degrees;
      ++identity_dia.checked;
      ++identity_box.checked;
      const Degree d1 = join_over(alg, n, [&](std::size_t b) { return alg.otimes(f_dia[fk][b], id[b]); });
      const Degree d2 = join_over(alg, n, [&](std::size_t a) { return alg.otimes(fd[a], id[L.dia(a)]); });
      if (d1 != d2) fail(identity_dia, "filter " + show(fd) + ", ideal " + show(id));
      const Degree b1 = join_over(alg, n, [&](std::size_t b) { return alg.otimes(fd[b], i_box[ik][b]); });
      const Degree b2 = join_over(alg, n, [&](std::size_t a) { return alg.otimes(fd[L.box(a)], id[a]); });
      if (b1 != b2) fail(identity_box, "filter " + show(fd) + ", ideal " + show(id));
    }
  }

  report.items = {closure_dia, proper_dia, closure_box, proper_box,
                  below_dia,   below_box,  identity_dia, identity_box};
  return report;
}

Valuation canonical_valuation(const CanonicalSurrogate& s) {
  const EnrichedContext& frame = *s.frame;
  const Context& base = frame.base();
  Valuation v;
  for (const auto& [atom, element] : s.lattice->atoms()) {
    std::vector<Degree> extent(s.filters.size());
    std::vector<Degree> intent(s.ideals.size());
    for (std::size_t f = 0; f < s.filters.size(); ++f) extent[f] = s.filters[f].degrees[element];
    for (std::size_t i = 0; i < s.ideals.size(); ++i) intent[i] = s.ideals[i].degrees[element];
    Concept c{MvSet(s.algebra, base.objects(), std::move(extent)),
              MvSet(s.algebra, base.attributes(), std::move(intent))};
    if (base.up(c.extent) != c.intent || base.down(c.intent) != c.extent) {
      throw InputError("canonical valuation of '" + atom + "' is not a concept of the surrogate");
    }
    v.emplace(atom, std::move(c));
  }
  return v;
}

std::vector<Formula> formulas_up_to_depth(const std::vector<std::string>& atoms, std::size_t depth) {
  std::vector<Formula> all{Formula::bot(), Formula::top()};
  for (const auto& a : atoms) all.push_back(Formula::atom(a));
  for (std::size_t d = 0; d < depth; ++d) {
    const std::vector<Formula> prev = all;
    std::vector<Formula> next;
    for (const auto& x : prev) {
      for (const auto& y : prev) {
        if (std::max(x.depth(), y.depth()) != d) continue;
        next.push_back(Formula::conj(x, y));
        next.push_back(Formula::disj(x, y));
      }
      if (x.depth() == d) {
        next.push_back(Formula::box(x));
        next.push_back(Formula::dia(x));
      }
    }
    // Pairs mixing a depth-d operand with a shallower one on the other side.
    for (const auto& x : prev) {
      for (const auto& y : prev) {
        if (x.depth() == d && y.depth() < d) {
          next.push_back(Formula::conj(y, x));
          next.push_back(Formula::disj(y, x));
        }
      }
    }
    all.insert(all.end(), next.begin(), next.end());
  }
  return all;
}

TruthLemmaReport truth_lemma_check(const CanonicalSurrogate& s, std::size_t depth) {
  TruthLemmaReport report;
  Valuation v;
  try {
    v = canonical_valuation(s);
  } catch (const InputError& e) {
    report.valuation_ok = false;
    report.valuation_error = e.what();
    return report;
  }
  const Model model(s.frame, std::move(v));
  std::vector<std::string> atoms;
  for (const auto& [atom, element] : s.lattice->atoms()) atoms.push_back(atom);
  for (const Formula& phi : formulas_up_to_depth(atoms, depth)) {
    ++report.formulas;
    const Concept c = evaluate(model, phi);
    const std::size_t element = s.lattice->interpret(phi);
    for (std::size_t f = 0; f < s.filters.size(); ++f) {
      if (c.extent[f] != s.filters[f].degrees[element]) {
        report.failures.push_back({phi, "extent", f});
        break;
      }
    }
    for (std::size_t i = 0; i < s.ideals.size(); ++i) {
      if (c.intent[i] != s.ideals[i].degrees[element]) {
        report.failures.push_back({phi, "intent", i});
        break;
      }
    }
  }
  return report;
}

}  // namespace mvlogic

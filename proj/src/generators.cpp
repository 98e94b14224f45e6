#include "mvlogic/generators.hpp"

#include "mvlogic/error.hpp"

namespace mvlogic {

namespace {

std::size_t draw(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::vector<std::vector<std::size_t>> all_maps(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= n;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<std::size_t> m(n);
    std::size_t rest = code;
    for (std::size_t i = n; i-- > 0;) {
      m[i] = rest % n;
      rest /= n;
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

MvRelation random_relation(Rng& rng, const AlgebraPtr& alg, CarrierPtr source, CarrierPtr target) {
  std::vector<Degree> d(source->size() * target->size());
  for (auto& v : d) v = static_cast<Degree>(draw(rng, 0, alg->size() - 1));
  return MvRelation(alg, std::move(source), std::move(target), std::move(d));
}

Context random_context(Rng& rng, const AlgebraPtr& alg, std::size_t objects, std::size_t attributes) {
  CarrierPtr a = make_carrier("a", objects);
  CarrierPtr x = make_carrier("x", attributes);
  MvRelation incidence = random_relation(rng, alg, a, x);
  return Context(a, x, std::move(incidence));
}

MvRelation repair_box(const Context& base, MvRelation r) {
  const std::size_t na = r.rows();
  const std::size_t nx = r.cols();
  std::vector<Degree> d = r.degrees();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t x = 0; x < nx; ++x) {
      std::vector<Degree> col(na);
      for (std::size_t a = 0; a < na; ++a) col[a] = d[a * nx + x];
      const MvSet closed = base.down(base.up(MvSet(r.algebra(), base.objects(), col)));
      for (std::size_t a = 0; a < na; ++a) {
        if (closed[a] != d[a * nx + x]) {
          d[a * nx + x] = closed[a];
          changed = true;
        }
      }
    }
    for (std::size_t a = 0; a < na; ++a) {
      std::vector<Degree> row(d.begin() + a * nx, d.begin() + (a + 1) * nx);
      const MvSet closed = base.up(base.down(MvSet(r.algebra(), base.attributes(), row)));
      for (std::size_t x = 0; x < nx; ++x) {
        if (closed[x] != d[a * nx + x]) {
          d[a * nx + x] = closed[x];
          changed = true;
        }
      }
    }
  }
  return MvRelation(r.algebra(), r.source(), r.target(), std::move(d));
}

MvRelation repair_diamond(const Context& base, MvRelation r) {
  const std::size_t nx = r.rows();
  const std::size_t na = r.cols();
  std::vector<Degree> d = r.degrees();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < na; ++a) {
      std::vector<Degree> col(nx);
      for (std::size_t x = 0; x < nx; ++x) col[x] = d[x * na + a];
      const MvSet closed = base.up(base.down(MvSet(r.algebra(), base.attributes(), col)));
      for (std::size_t x = 0; x < nx; ++x) {
        if (closed[x] != d[x * na + a]) {
          d[x * na + a] = closed[x];
          changed = true;
        }
      }
    }
    for (std::size_t x = 0; x < nx; ++x) {
      std::vector<Degree> row(d.begin() + x * na, d.begin() + (x + 1) * na);
      const MvSet closed = base.down(base.up(MvSet(r.algebra(), base.objects(), row)));
      for (std::size_t a = 0; a < na; ++a) {
        if (closed[a] != d[x * na + a]) {
          d[x * na + a] = closed[a];
          changed = true;
        }
      }
    }
  }
  return MvRelation(r.algebra(), r.source(), r.target(), std::move(d));
}

FramePtr random_compatible_frame(Rng& rng, const AlgebraPtr& alg, FrameShape shape) {
  const std::size_t na = draw(rng, 1, shape.max_objects);
  const std::size_t nx = draw(rng, 1, shape.max_attributes);
  Context base = random_context(rng, alg, na, nx);
  MvRelation r_box = repair_box(base, random_relation(rng, alg, base.objects(), base.attributes()));
  MvRelation r_dia = repair_diamond(base, random_relation(rng, alg, base.attributes(), base.objects()));
  std::optional<MvRelation> r_rhd;
  std::optional<MvRelation> r_lhd;
  if (shape.with_rhd) r_rhd = random_relation(rng, alg, base.objects(), base.objects());
  if (shape.with_lhd) r_lhd = random_relation(rng, alg, base.attributes(), base.attributes());
  auto frame = std::make_shared<const EnrichedContext>(std::move(base), std::move(r_box), std::move(r_dia),
                                                       std::move(r_rhd), std::move(r_lhd));
  if (!frame->compatibility().passed()) {
    throw std::logic_error("compatibility repair left an unstable singleton image");
  }
  return frame;
}

Formula random_formula(Rng& rng, const std::vector<std::string>& atoms, std::size_t max_depth,
                       bool with_rhd_lhd) {
  const std::size_t leaves = 2 + atoms.size();
  if (max_depth == 0 || draw(rng, 0, 3) == 0) {
    const std::size_t k = draw(rng, 0, leaves - 1);
    if (k == 0) return Formula::bot();
    if (k == 1) return Formula::top();
    return Formula::atom(atoms[k - 2]);
  }
  const std::size_t ops = with_rhd_lhd ? 6 : 4;
  switch (draw(rng, 0, ops - 1)) {
    case 0:
      return Formula::conj(random_formula(rng, atoms, max_depth - 1, with_rhd_lhd),
                           random_formula(rng, atoms, max_depth - 1, with_rhd_lhd));
    case 1:
      return Formula::disj(random_formula(rng, atoms, max_depth - 1, with_rhd_lhd),
                           random_formula(rng, atoms, max_depth - 1, with_rhd_lhd));
    case 2:
      return Formula::box(random_formula(rng, atoms, max_depth - 1, with_rhd_lhd));
    case 3:
      return Formula::dia(random_formula(rng, atoms, max_depth - 1, with_rhd_lhd));
    case 4:
      return Formula::rhd(random_formula(rng, atoms, max_depth - 1, with_rhd_lhd));
    default:
      return Formula::lhd(random_formula(rng, atoms, max_depth - 1, with_rhd_lhd));
  }
}

std::vector<ModalLattice> small_modal_lattices(std::size_t max_size) {
  if (max_size > 4) throw UsageError("small_modal_lattices supports at most 4 elements");
  std::vector<ModalLattice> shapes;
  for (std::size_t n = 1; n <= max_size; ++n) shapes.push_back(ModalLattice::chain(n));
  if (max_size >= 4) shapes.push_back(ModalLattice::diamond4());

  std::vector<ModalLattice> out;
  for (const ModalLattice& L : shapes) {
    const std::size_t n = L.size();
    std::vector<std::vector<std::size_t>> boxes;
    std::vector<std::vector<std::size_t>> dias;
    for (auto& m : all_maps(n)) {
      bool box_ok = m[L.top()] == L.top();
      bool dia_ok = m[L.bottom()] == L.bottom();
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          box_ok = box_ok && m[L.meet(a, b)] == L.meet(m[a], m[b]);
          dia_ok = dia_ok && m[L.join(a, b)] == L.join(m[a], m[b]);
        }
      }
      if (box_ok) boxes.push_back(m);
      if (dia_ok) dias.push_back(m);
    }
    for (const auto& box : boxes) {
      for (const auto& dia : dias) out.push_back(L.with_modalities(box, dia));
    }
  }
  return out;
}

}  // namespace mvlogic

#include "mvlogic/truth_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "mvlogic/error.hpp"

namespace mvlogic {

std::string to_string(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::boolean:
      return "boolean";
    case AlgebraKind::lukasiewicz:
      return "lukasiewicz";
    case AlgebraKind::goedel:
      return "goedel";
    case AlgebraKind::custom:
      return "custom";
  }
  return "custom";
}

AlgebraKind algebra_kind_from_string(const std::string& name) {
  if (name == "boolean") return AlgebraKind::boolean;
  if (name == "lukasiewicz") return AlgebraKind::lukasiewicz;
  if (name == "goedel" || name == "godel") return AlgebraKind::goedel;
  if (name == "custom") return AlgebraKind::custom;
  throw InputError("unknown algebra kind '" + name + "'");
}

bool ValidationReport::passed() const {
  return std::all_of(laws.begin(), laws.end(), [](const LawCheck& l) { return l.passed; });
}

const LawCheck* ValidationReport::find(const std::string& law) const {
  for (const auto& l : laws) {
    if (l.law == law) return &l;
  }
  return nullptr;
}

namespace {

class LawRunner {
 public:
  explicit LawRunner(std::size_t n) : n_(n) {}

  void unary(const std::string& law, const std::function<bool(Degree)>& holds) {
    LawCheck check{law, true, {}};
    for (std::size_t a = 0; a < n_ && check.passed; ++a) {
      if (!holds(static_cast<Degree>(a))) {
        check.passed = false;
        check.counterexample = {static_cast<Degree>(a)};
      }
    }
    report_.laws.push_back(std::move(check));
  }

  void binary(const std::string& law, const std::function<bool(Degree, Degree)>& holds) {
    LawCheck check{law, true, {}};
    for (std::size_t a = 0; a < n_ && check.passed; ++a) {
      for (std::size_t b = 0; b < n_ && check.passed; ++b) {
        if (!holds(static_cast<Degree>(a), static_cast<Degree>(b))) {
          check.passed = false;
          check.counterexample = {static_cast<Degree>(a), static_cast<Degree>(b)};
        }
      }
    }
    report_.laws.push_back(std::move(check));
  }

  void ternary(const std::string& law, const std::function<bool(Degree, Degree, Degree)>& holds) {
    LawCheck check{law, true, {}};
    for (std::size_t a = 0; a < n_ && check.passed; ++a) {
      for (std::size_t b = 0; b < n_ && check.passed; ++b) {
        for (std::size_t c = 0; c < n_ && check.passed; ++c) {
          if (!holds(static_cast<Degree>(a), static_cast<Degree>(b), static_cast<Degree>(c))) {
            check.passed = false;
            check.counterexample = {static_cast<Degree>(a), static_cast<Degree>(b),
                                    static_cast<Degree>(c)};
          }
        }
      }
    }
    report_.laws.push_back(std::move(check));
  }

  ValidationReport take() { return std::move(report_); }

 private:
  std::size_t n_;
  ValidationReport report_;
};

void check_shape(const AlgebraTables& t) {
  if (t.size == 0) throw InputError("algebra size must be positive");
  const std::size_t cells = t.size * t.size;
  const std::pair<const char*, const std::vector<Degree>*> tables[] = {
      {"otimes", &t.otimes}, {"residuum", &t.residuum}, {"join", &t.join}, {"meet", &t.meet}};
  for (const auto& [name, table] : tables) {
    if (table->size() != cells) {
      throw InputError(std::string(name) + " table must be " + std::to_string(t.size) + "x" +
                       std::to_string(t.size));
    }
    for (Degree d : *table) {
      if (d >= t.size) {
        throw InputError(std::string(name) + " table entry " + std::to_string(d) +
                         " is not a valid index");
      }
    }
  }
}

}  // namespace

ValidationReport validate_algebra(const AlgebraTables& t) {
  check_shape(t);
  const std::size_t n = t.size;
  const Degree bot = 0;
  const Degree top = static_cast<Degree>(n - 1);
  auto at = [n](const std::vector<Degree>& tab, Degree a, Degree b) { return tab[a * n + b]; };
  auto join = [&](Degree a, Degree b) { return at(t.join, a, b); };
  auto meet = [&](Degree a, Degree b) { return at(t.meet, a, b); };
  auto mul = [&](Degree a, Degree b) { return at(t.otimes, a, b); };
  auto imp = [&](Degree a, Degree b) { return at(t.residuum, a, b); };
  auto leq = [&](Degree a, Degree b) { return meet(a, b) == a; };

  LawRunner run(n);
  run.unary("join_idempotent", [&](Degree a) { return join(a, a) == a; });
  run.unary("meet_idempotent", [&](Degree a) { return meet(a, a) == a; });
  run.binary("join_commutative", [&](Degree a, Degree b) { return join(a, b) == join(b, a); });
  run.binary("meet_commutative", [&](Degree a, Degree b) { return meet(a, b) == meet(b, a); });
  run.ternary("join_associative", [&](Degree a, Degree b, Degree c) {
    return join(join(a, b), c) == join(a, join(b, c));
  });
  run.ternary("meet_associative", [&](Degree a, Degree b, Degree c) {
    return meet(meet(a, b), c) == meet(a, meet(b, c));
  });
  run.binary("absorption", [&](Degree a, Degree b) {
    return join(a, meet(a, b)) == a && meet(a, join(a, b)) == a;
  });
  run.unary("bottom_is_least", [&](Degree a) { return join(bot, a) == a; });
  run.unary("top_is_greatest", [&](Degree a) { return meet(top, a) == a; });
  run.ternary("meet_distributes_over_join", [&](Degree a, Degree b, Degree c) {
    return meet(a, join(b, c)) == join(meet(a, b), meet(a, c));
  });
  run.ternary("join_distributes_over_meet", [&](Degree a, Degree b, Degree c) {
    return join(a, meet(b, c)) == meet(join(a, b), join(a, c));
  });
  run.binary("otimes_commutative", [&](Degree a, Degree b) { return mul(a, b) == mul(b, a); });
  run.ternary("otimes_associative", [&](Degree a, Degree b, Degree c) {
    return mul(mul(a, b), c) == mul(a, mul(b, c));
  });
  run.unary("otimes_unit", [&](Degree a) { return mul(top, a) == a; });
  run.unary("residuum_top_left", [&](Degree a) { return imp(top, a) == a; });
  run.ternary("residuation", [&](Degree a, Degree b, Degree c) {
    return leq(mul(a, b), c) == leq(a, imp(b, c));
  });
  run.unary("otimes_preserves_empty_join", [&](Degree a) { return mul(a, bot) == bot; });
  run.ternary("otimes_distributes_over_join", [&](Degree a, Degree b, Degree c) {
    return mul(a, join(b, c)) == join(mul(a, b), mul(a, c));
  });
  run.unary("residuum_empty_join_left", [&](Degree c) { return imp(bot, c) == top; });
  run.ternary("residuum_join_left_to_meet", [&](Degree a, Degree b, Degree c) {
    return imp(join(a, b), c) == meet(imp(a, c), imp(b, c));
  });
  run.unary("residuum_empty_meet_right", [&](Degree a) { return imp(a, top) == top; });
  run.ternary("residuum_preserves_meet_right", [&](Degree a, Degree b, Degree c) {
    return imp(a, meet(b, c)) == meet(imp(a, b), imp(a, c));
  });
  return run.take();
}

TruthAlgebra::TruthAlgebra(AlgebraTables tables) : tables_(std::move(tables)) {
  chain_ = true;
  for (std::size_t a = 0; a < tables_.size && chain_; ++a) {
    for (std::size_t b = 0; b < tables_.size; ++b) {
      if (!leq(static_cast<Degree>(a), static_cast<Degree>(b)) &&
          !leq(static_cast<Degree>(b), static_cast<Degree>(a))) {
        chain_ = false;
        break;
      }
    }
  }
}

std::shared_ptr<const TruthAlgebra> TruthAlgebra::chain(AlgebraKind kind, std::size_t n) {
  if (n < 2) throw ConstructionError("chain size must be at least 2, got " + std::to_string(n));
  if (kind == AlgebraKind::custom) throw ConstructionError("custom algebras need explicit tables");
  if (kind == AlgebraKind::boolean && n != 2) {
    throw ConstructionError("boolean algebra has exactly 2 elements, got " + std::to_string(n));
  }
  if (n > 4096) throw ConstructionError("chain size " + std::to_string(n) + " is too large");

  AlgebraTables t;
  t.kind = kind;
  t.size = n;
  t.otimes.resize(n * n);
  t.residuum.resize(n * n);
  t.join.resize(n * n);
  t.meet.resize(n * n);
  const int top = static_cast<int>(n) - 1;
  for (int a = 0; a <= top; ++a) {
    for (int b = 0; b <= top; ++b) {
      const std::size_t k = static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b);
      t.join[k] = static_cast<Degree>(std::max(a, b));
      t.meet[k] = static_cast<Degree>(std::min(a, b));
      if (kind == AlgebraKind::lukasiewicz) {
        t.otimes[k] = static_cast<Degree>(std::max(0, a + b - top));
        t.residuum[k] = static_cast<Degree>(std::min(top, top - a + b));
      } else {
        // Goedel; the 2-element boolean algebra coincides with it.
        t.otimes[k] = static_cast<Degree>(std::min(a, b));
        t.residuum[k] = static_cast<Degree>(a <= b ? top : b);
      }
    }
  }
  return std::shared_ptr<const TruthAlgebra>(new TruthAlgebra(std::move(t)));
}

std::shared_ptr<const TruthAlgebra> TruthAlgebra::from_tables(AlgebraTables tables) {
  const ValidationReport report = validate_algebra(tables);
  for (const auto& law : report.laws) {
    if (!law.passed) {
      std::string witness;
      for (Degree d : law.counterexample) {
        witness += (witness.empty() ? "" : ",") + std::to_string(d);
      }
      throw ConstructionError("algebra violates " + law.law + " at (" + witness + ")");
    }
  }
  return std::shared_ptr<const TruthAlgebra>(new TruthAlgebra(std::move(tables)));
}

std::string TruthAlgebra::name() const {
  if (kind() == AlgebraKind::boolean) return "boolean";
  return to_string(kind()) + ":" + std::to_string(size());
}

std::string TruthAlgebra::label(Degree d) const {
  if (!chain_) return std::to_string(d);
  const std::size_t den = size() - 1;
  if (d == 0) return "0";
  if (d == den) return "1";
  const std::size_t g = std::gcd(static_cast<std::size_t>(d), den);
  return std::to_string(d / g) + "/" + std::to_string(den / g);
}

double TruthAlgebra::to_real(Degree d) const {
  return static_cast<double>(d) / static_cast<double>(size() - 1);
}

Degree TruthAlgebra::quantize(double value) const {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw InputError("value " + std::to_string(value) + " is outside [0,1]");
  }
  if (!chain_) throw UsageError("quantization needs a chain algebra");
  return static_cast<Degree>(std::lround(value * static_cast<double>(size() - 1)));
}

AlgebraPtr parse_algebra_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind_name = spec.substr(0, colon);
  const AlgebraKind kind = algebra_kind_from_string(kind_name);
  std::size_t n = 2;
  if (colon != std::string::npos) {
    const std::string count = spec.substr(colon + 1);
    if (count.empty() || !std::all_of(count.begin(), count.end(), ::isdigit)) {
      throw InputError("bad algebra size in '" + spec + "'");
    }
    n = std::stoul(count);
  } else if (kind != AlgebraKind::boolean) {
    throw InputError("algebra '" + spec + "' needs a size, e.g. " + kind_name + ":3");
  }
  try {
    return TruthAlgebra::chain(kind, n);
  } catch (const ConstructionError& e) {
    throw InputError(e.what());
  }
}

TruthValue::TruthValue(AlgebraPtr algebra, Degree degree)
    : algebra_(std::move(algebra)), degree_(degree) {
  if (!algebra_) throw UsageError("truth value without an algebra");
  if (degree_ >= algebra_->size()) {
    throw UsageError("degree " + std::to_string(degree_) + " out of range for " + algebra_->name());
  }
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  const AlgebraTables& x = a->tables();
  const AlgebraTables& y = b->tables();
  return x.size == y.size && x.otimes == y.otimes && x.residuum == y.residuum &&
         x.join == y.join && x.meet == y.meet;
}

Degree aggregate(const TruthAlgebra& algebra, Aggregate kind, std::span<const Degree> values) {
  Degree acc = kind == Aggregate::join ? algebra.bottom() : algebra.top();
  for (Degree d : values) {
    acc = kind == Aggregate::join ? algebra.join(acc, d) : algebra.meet(acc, d);
  }
  return acc;
}

TruthValue aggregate(const AlgebraPtr& algebra, Aggregate kind, std::span<const TruthValue> values) {
  std::vector<Degree> raw;
  raw.reserve(values.size());
  for (const auto& v : values) {
    if (!same_algebra(v.algebra(), algebra)) {
      throw UsageError("cannot aggregate values of " + v.algebra()->name() + " with " +
                       algebra->name());
    }
    raw.push_back(v.degree());
  }
  return TruthValue(algebra, aggregate(*algebra, kind, raw));
}

}  // namespace mvlogic

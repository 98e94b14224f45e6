#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mvlogic {

// Index of a truth value inside its algebra. 0 is bottom, size-1 is top.
using Degree = std::uint16_t;

enum class AlgebraKind { boolean, lukasiewicz, goedel, custom };

std::string to_string(AlgebraKind kind);
AlgebraKind algebra_kind_from_string(const std::string& name);

// Raw operation tables of a candidate algebra, row-major size x size.
struct AlgebraTables {
  AlgebraKind kind = AlgebraKind::custom;
  std::size_t size = 0;
  std::vector<Degree> otimes;
  std::vector<Degree> residuum;
  std::vector<Degree> join;
  std::vector<Degree> meet;
};

struct LawCheck {
  std::string law;
  bool passed = true;
  // First failing argument tuple in lexicographic order; unused slots are empty.
  std::vector<Degree> counterexample;
};

struct ValidationReport {
  std::vector<LawCheck> laws;

  bool passed() const;
  const LawCheck* find(const std::string& law) const;
};

// Checks every residuated-lattice law on the given tables exhaustively.
// Throws InputError when the tables are not size x size or hold out-of-range entries.
ValidationReport validate_algebra(const AlgebraTables& tables);

// A finite, complete, commutative residuated lattice with integer-indexed values.
// Immutable; share it through std::shared_ptr<const TruthAlgebra>.
class TruthAlgebra {
 public:
  // Built-in chain with n elements (boolean requires n == 2).
  static std::shared_ptr<const TruthAlgebra> chain(AlgebraKind kind, std::size_t n);
  // Custom tables; throws ConstructionError carrying the failing law if validation fails.
  static std::shared_ptr<const TruthAlgebra> from_tables(AlgebraTables tables);

  AlgebraKind kind() const { return tables_.kind; }
  std::size_t size() const { return tables_.size; }
  Degree bottom() const { return 0; }
  Degree top() const { return static_cast<Degree>(tables_.size - 1); }
  bool is_chain() const { return chain_; }

  Degree otimes(Degree a, Degree b) const { return tables_.otimes[a * tables_.size + b]; }
  Degree residuum(Degree a, Degree b) const { return tables_.residuum[a * tables_.size + b]; }
  Degree join(Degree a, Degree b) const { return tables_.join[a * tables_.size + b]; }
  Degree meet(Degree a, Degree b) const { return tables_.meet[a * tables_.size + b]; }
  bool leq(Degree a, Degree b) const { return meet(a, b) == a; }

  const AlgebraTables& tables() const { return tables_; }

  // "lukasiewicz:5" style name, or "custom:n".
  std::string name() const;
  // Value label: "k/(n-1)" on chains, the index otherwise.
  std::string label(Degree d) const;
  // Real value in [0,1] for chains; index/(n-1) otherwise.
  double to_real(Degree d) const;
  // Nearest chain index for a real value in [0,1].
  Degree quantize(double value) const;

 private:
  explicit TruthAlgebra(AlgebraTables tables);

  AlgebraTables tables_;
  bool chain_ = false;
};

using AlgebraPtr = std::shared_ptr<const TruthAlgebra>;

// Same object, or identical operation tables.
bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

// Parses "lukasiewicz:5", "goedel:3", "boolean" / "boolean:2".
AlgebraPtr parse_algebra_spec(const std::string& spec);

// A degree tagged with the algebra it belongs to.
class TruthValue {
 public:
  TruthValue(AlgebraPtr algebra, Degree degree);

  const AlgebraPtr& algebra() const { return algebra_; }
  Degree degree() const { return degree_; }

  friend bool operator==(const TruthValue& a, const TruthValue& b) {
    return a.algebra_ == b.algebra_ && a.degree_ == b.degree_;
  }

 private:
  AlgebraPtr algebra_;
  Degree degree_;
};

enum class Aggregate { join, meet };

// Lattice join or meet of a finite multiset; empty join is 0, empty meet is 1.
// Throws UsageError when the values come from different algebras.
TruthValue aggregate(const AlgebraPtr& algebra, Aggregate kind, std::span<const TruthValue> values);

// Same on raw degrees of a single algebra.
Degree aggregate(const TruthAlgebra& algebra, Aggregate kind, std::span<const Degree> values);

}  // namespace mvlogic

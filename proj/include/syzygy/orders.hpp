#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "syzygy/repetition.hpp"

namespace syzygy {

// Exponents of a tiled order: entry (i, j) is π^{λ_ij} D.
struct ExponentMatrix {
  std::vector<std::vector<long>> lambda;

  std::size_t size() const { return lambda.size(); }
  long operator()(std::size_t i, std::size_t j) const { return lambda[i][j]; }
  // Square, nonnegative, zero diagonal, λ_ij + λ_jk >= λ_ik, λ_ij + λ_ji >= 1. Throws InvalidExponents.
  void validate() const;
};

struct ValuedArrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;
  long value = 0;
  friend bool operator==(const ValuedArrow&, const ValuedArrow&) = default;
};

struct ValuedQuiver {
  std::vector<std::string> vertices;
  std::vector<ValuedArrow> arrows;

  Quiver quiver() const;
  long path_value(const Path& p) const;
  friend bool operator==(const ValuedQuiver&, const ValuedQuiver&) = default;
};

// Arrow i -> j iff S_j is in the top of rad P_i; value λ_ji (1 for a loop). Arrows are named
// a<i>_<j> with 1-based indices.
ValuedQuiver valued_quiver_from_exponents(const ExponentMatrix& e);

// Least value of a path i -> j (trivial paths included), or nullopt when there is none.
// Throws NonpositiveCycle.
std::vector<std::vector<std::optional<long>>> min_path_values(const ValuedQuiver& vq);

// Relations of Λ = O/πO: paths above the minimal value vanish, parallel minimal paths agree.
// A single vertex carrying only loops gives the ground field. Throws LoopsPresent,
// NonpositiveCycle, IllFormedRelation (a generated relation is not inside J²).
std::vector<Relation> order_relations(const ValuedQuiver& vq);
Algebra presentation_from_valued_quiver(const ValuedQuiver& vq);

// Every simple occurs exactly once in every indecomposable projective (left and right).
bool has_multiplicity_one(const Algebra& a);
// Every path of length <= max_length whose value exceeds the minimal one is zero in a, and every
// pair of parallel minimal paths agrees. Returns the number of paths checked.
std::size_t check_value_relations(const ValuedQuiver& vq, const Algebra& a, std::size_t max_length);

struct DimRange {
  std::size_t lower = 0;
  std::optional<std::size_t> upper;
  bool exact() const { return upper && *upper == lower; }
  std::string describe() const;
};

struct OrderReport {
  ValuedQuiver quiver;
  Algebra algebra;
  std::shared_ptr<Workspace> workspace;  // engines holding the classes referenced below
  std::size_t budget = 0;
  FindimReport left;   // Λ, left modules
  FindimReport right;  // Λ, right modules
  InjectiveDims idim;
  DimRange lambda_left, lambda_right;  // little finitistic dimensions of Λ
  DimRange order_left, order_right;    // little finitistic dimensions of O (one more)
  // Both injective dimensions of Λ finite: every finitistic dimension of Λ equals this value.
  std::optional<std::size_t> gorenstein_value;
  std::optional<std::size_t> asserted_gldim;
  std::optional<std::size_t> global_repetition;  // asserted gl dim O minus one
  // Simples whose repetition index exceeds the asserted bound, or an inconsistent fin dim.
  std::vector<std::string> assertion_conflicts;
};

OrderReport order_report(const ValuedQuiver& vq, std::size_t budget,
                         std::optional<std::size_t> asserted_gldim = std::nullopt);

struct GldimCertificate {
  enum class Kind { finite_consistent, infinite_certified };
  Kind kind = Kind::finite_consistent;
  std::string witness;  // probe violating the syzygy relation for every admissible degree
  std::size_t fin_dim_bound = 0;  // upper bound on the finitistic dimension of O used
  std::vector<std::string> checks;  // one line per (probe, degree)
};

// Probes are Λ-modules on either side. A probe M of finite projective dimension m over O
// satisfies 1 <= m <= fin dim O and Ω^{m-1} ≅ Ω^{m+1} ⊕ projective; failing this for every
// admissible m certifies gl dim O = ∞. Probes must be modules over report.algebra.
GldimCertificate gldim_certificate(const OrderReport& report, const std::vector<NamedModule>& probes,
                                   std::size_t budget);

}  // namespace syzygy

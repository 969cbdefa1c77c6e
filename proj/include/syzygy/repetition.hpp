#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "syzygy/homology.hpp"

namespace syzygy {

struct Contingency {
  enum class Kind { absent, finite, infinite, open };
  Kind kind = Kind::open;
  std::size_t value = 0;  // finite: the largest degree in which the class occurs
  // infinite: catalog indices c_0 -> c_1 -> ... -> c_k with c_k == c_{cycle_start} for some
  // cycle_start < k, followed by a walk from the cycle to the class (last entry).
  std::vector<std::size_t> certificate;
  std::size_t cycle_start = 0;
  std::size_t cycle_end = 0;  // certificate[cycle_end] closes the cycle

  std::string describe() const;
};

struct CatalogClass {
  ClassId id = 0;
  RepModule representative;
  std::vector<std::size_t> dims;
  std::size_t first_degree = 0;
  std::size_t last_seen = 0;  // last degree <= the resolved horizon containing the class
  bool projective = false;
  bool explored = false;  // Ω¹ known
};

// Indecomposable classes occurring in the syzygies of a root module T, in registration order:
// by first degree, then dimension vector (lexicographically descending), then discovery.
// Classes first seen in degree < budget are explored; the catalog is closed when every
// non-projective class is explored.
struct SyzygyCatalog {
  Side side = Side::left;
  std::size_t budget = 0;
  RepModule root;
  std::vector<CatalogClass> classes;
  // omega[i]: summands of Ω¹(A_i) as (catalog index, multiplicity); empty unless explored.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> omega;
  // degrees[k]: multiplicities of the classes in Ω^k(T), k = 0..budget.
  std::vector<std::vector<mpz_class>> degrees;
  std::vector<Contingency> contingency;
  bool closed = false;
  std::size_t closure_degree = 0;  // largest first degree, when closed

  std::optional<std::size_t> index_of(ClassId id) const;
  std::size_t nonprojective_count() const;
  // Classes occurring in Ω^k(T); for k > budget only available when closed.
  std::vector<std::size_t> presence(std::size_t k) const;
};

SyzygyCatalog build_catalog(SyzygyEngine& engine, const RepModule& t, std::size_t budget);

struct CountResult {
  bool certified = false;  // otherwise only a lower bound reached within the budget
  std::size_t value = 0;
};
CountResult syzygy_type(const SyzygyCatalog& c);

struct RepetitionIndex {
  enum class Kind { finite, infinite, open };
  Kind kind = Kind::open;
  std::size_t value = 0;
  // open: rep <= upper_bound when present (every non-projective summand of Ω^upper_bound
  // carries a recurrence certificate).
  std::optional<std::size_t> upper_bound;

  std::string describe() const;
};
RepetitionIndex repetition_index(const SyzygyCatalog& c);

Contingency contingency(const SyzygyCatalog& c, ClassId id);

struct BSystem {
  Side side = Side::right;  // side of the classes A_i
  std::vector<std::size_t> catalog_index;
  std::vector<RepModule> classes;
  QMatrix b;                                 // b(i, j) = multiplicity of A_j in Ω¹(A_i)
  std::vector<std::vector<std::size_t>> p;   // p[i][l] = multiplicity of the vertex-l projective in the cover of A_i
  std::size_t stabilization = 0;

  std::size_t size() const { return classes.size(); }
};

// Rows and columns are the non-projective classes together with the projective classes that
// occur in some Ω¹(A_i). Throws CatalogOpen.
BSystem build_bsystem(const SyzygyCatalog& c);
// Least d >= 0 with rowspace(B^d) inside rowspace(B^{d+1}).
std::size_t stabilization_index(const QMatrix& b);
std::size_t stabilization_bound(const BSystem& b);

// τ_i = dim Tor_1(A_i, M), from the tensor formula; every entry is compared with a direct
// Tor_1 computation and a mismatch throws InternalConsistency.
std::vector<std::size_t> tau_vector(const BSystem& b, const RepModule& m);

struct BDecision {
  enum class Kind { finite, infinite, bound };
  Kind kind = Kind::bound;
  // finite: p dim. bound: the least m with B^m τ = 0, which is p dim M whenever p dim M is finite.
  std::size_t value = 0;
  std::vector<std::vector<mpz_class>> iterates;  // τ, Bτ, ..., up to the deciding power
};
BDecision pdim_via_b(const BSystem& b, const RepModule& m, bool t_is_lambda_mod_j);

// μ + 1, μ the largest contingency among classes A with Tor_1(A, m) != 0. Requires a closed
// catalog whose root contains Λ/J in its socle; m must have finite p dim.
std::size_t pdim_via_contingency(const SyzygyCatalog& c, const RepModule& m);

// True iff Λ/J embeds into t, i.e. every simple occurs in the socle.
bool contains_top_of_algebra(const RepModule& t);

struct CertifiedBound {
  std::size_t value = 0;
  std::string certificate;
};

struct TestModuleReport {
  std::string name;
  std::string certificate;  // how the catalog root was chosen
  std::size_t budget = 0;
  bool embeds = false;
  std::size_t classes = 0;
  bool closed = false;
  CountResult type;
  RepetitionIndex rep;
  std::optional<std::size_t> contingency_bound;
  std::optional<std::pair<std::size_t, std::size_t>> syzygy_type_bound;  // (bound, m)
  std::optional<std::size_t> b_matrix_bound;
};

struct ProbeReport {
  std::string name;
  DimResult pdim;
};

// Bounds for the finitistic dimensions of modules on `side`. The upper bound is certified for the
// big finitistic dimension, the lower bound for the little one.
struct FindimReport {
  Side side = Side::left;
  std::size_t budget = 0;
  std::vector<TestModuleReport> test_modules;
  DimResult idim;  // injective dimension of Λ on `side`
  std::optional<CertifiedBound> upper;
  std::vector<CertifiedBound> upper_candidates;
  std::size_t lower = 0;
  std::string lower_witness = "projective";
  std::vector<ProbeReport> probes;
  std::size_t probe_budget = 0;  // min(budget, upper + 1) when an upper bound came first

  bool exact() const { return upper && upper->value == lower; }
};

using NamedModule = std::pair<std::string, RepModule>;
// Standard probes on a side: simples, indecomposable injectives, and P_v/Λx for x an arrow
// out of v or the sum of two parallel arrows.
std::vector<NamedModule> standard_probes(const Algebra& a, Side side);

FindimReport findim_bounds(Workspace& ws, Side side, std::size_t budget,
                           const std::vector<NamedModule>& extra_probes = {});

}  // namespace syzygy

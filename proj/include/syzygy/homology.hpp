#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "syzygy/decompose.hpp"
#include "syzygy/module.hpp"

namespace syzygy {

struct ProjectiveCover {
  std::vector<std::size_t> multiplicities;  // copies of P_v, ordered by vertex
  std::vector<std::size_t> generator_vertices;  // vertex of each summand of the cover, in order
  RepModule cover;
  ModMorphism surjection;  // cover -> m
  RepModule kernel;
  ModMorphism inclusion;  // kernel -> cover
};

// Minimal cover. `extra_generators` appends further summands P_v mapped onto the given vectors of
// m_v, producing a non-minimal cover (used to test that projective padding is harmless).
ProjectiveCover projective_cover(const RepModule& m,
                                 const std::vector<std::pair<std::size_t, QMatrix>>& extra_generators = {});
RepModule syzygy(const RepModule& m);

// Iso classes of indecomposables over one algebra and side, with memoized first syzygies.
class SyzygyEngine {
 public:
  SyzygyEngine(Algebra algebra, Side side);

  const Algebra& algebra() const { return algebra_; }
  Side side() const { return side_; }
  IsoRegistry& registry() { return registry_; }
  const IsoRegistry& registry() const { return registry_; }

  ClassMultiset decompose(const RepModule& m);
  ClassId classify(const RepModule& indecomposable) { return registry_.classify(indecomposable); }
  // Krull-Schmidt multiset of the first syzygy of a class.
  ClassMultiset omega(ClassId id);
  bool has_omega(ClassId id) const;
  bool is_projective(ClassId id) const { return registry_.is_projective(id); }
  const RepModule& representative(ClassId id) const { return registry_.representative(id); }
  std::size_t dim(ClassId id) const { return registry_.representative(id).total_dim(); }
  const std::vector<std::size_t>& top(ClassId id) const { return registry_.info(id).top; }

 private:
  Algebra algebra_;
  Side side_;
  IsoRegistry registry_;
  mutable std::mutex memo_mutex_;
  std::map<ClassId, ClassMultiset> omega_;
};

using Multiplicities = std::map<ClassId, mpz_class>;

struct ResolutionDegree {
  Multiplicities summands;         // Krull-Schmidt multiset of Ω^k
  std::vector<mpz_class> cover;    // multiplicity of P_v in the cover of Ω^k
  mpz_class dim;                   // dim Ω^k
};

struct ResolutionTrace {
  Side side;
  std::vector<ResolutionDegree> degrees;  // degrees[k] describes Ω^k; degrees[0] is the module itself
  bool terminated = false;                // the last recorded syzygy is zero
  std::size_t max_degree = 0;

  // Ω^k as a direct sum of class representatives (isomorphic to the true syzygy).
  RepModule syzygy_module(const SyzygyEngine& engine, std::size_t k) const;
};

ResolutionTrace resolve(SyzygyEngine& engine, const RepModule& m, std::size_t max_degree);
Multiplicities next_degree(SyzygyEngine& engine, const Multiplicities& current);

// dim Tor_1(A, M), computed directly and via the four-term sequence; disagreement throws.
std::size_t tor1_dim(const RepModule& a_right, const RepModule& m_left);

struct DimResult {
  enum class Kind { finite, infinite, unknown };
  Kind kind = Kind::unknown;
  std::size_t value = 0;  // finite: the dimension; unknown: the budget explored
  // infinite: classes B_0..B_q, each a summand of Ω¹ of the previous, B_0 a summand of the
  // module, and chain[cycle_start] == chain.back().
  std::vector<ClassId> chain;
  std::size_t cycle_start = 0;

  std::string describe() const;
};

DimResult pdim(SyzygyEngine& engine, const RepModule& m, std::size_t budget);
DimResult pdim_of_classes(SyzygyEngine& engine, const ClassMultiset& classes, std::size_t budget);

struct InjectiveDims {
  DimResult left;   // i dim of Λ as a left module
  DimResult right;  // i dim of Λ as a right module
};
InjectiveDims idim_both_sides(SyzygyEngine& left, SyzygyEngine& right, std::size_t budget);

// dim Ext^i(M, N) for i = 0..max_degree (fewer entries never: zeros past termination).
std::vector<mpz_class> ext_dims(SyzygyEngine& engine, const RepModule& m, const RepModule& n,
                                std::size_t max_degree);
std::vector<mpz_class> poincare_betti_truncated(SyzygyEngine& engine, const RepModule& m, const RepModule& n,
                                                std::size_t max_degree);

// Left and right engines for one algebra.
struct Workspace {
  explicit Workspace(Algebra a) : algebra(a), left(a, Side::left), right(a, Side::right) {}
  Algebra algebra;
  SyzygyEngine left;
  SyzygyEngine right;
  SyzygyEngine& engine(Side s) { return s == Side::left ? left : right; }
};

}  // namespace syzygy

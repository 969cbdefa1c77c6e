#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "syzygy/module.hpp"

namespace syzygy {

struct EndRing {
  std::vector<ModMorphism> basis;
  QMatrix gram;  // gram(i, j) = trace(basis[i] ∘ basis[j])

  // Coordinates of (basis[i] ∘ basis[j]) in the basis, indexed [i][j].
  std::vector<std::vector<std::vector<Rational>>> multiplication_table() const;
  // Coordinates of an endomorphism in the basis.
  std::vector<Rational> coordinates(const ModMorphism& f) const;
};

// `shuffle_seed` != 0 permutes and rescales the basis (for order-independence checks).
EndRing end_ring(const RepModule& m, std::uint64_t shuffle_seed = 0);
std::vector<ModMorphism> radical_of_end(const EndRing& e);

// Throws ZeroModule, ExtensionFieldAmbiguity.
bool is_indecomposable(const RepModule& m);

struct Split {
  RepModule first, second;
  ModMorphism include_first, include_second;  // into m
  ModMorphism project_first, project_second;  // from m
};
// Nontrivial decomposition, or nullopt when m is indecomposable.
std::optional<Split> split_once(const RepModule& m, std::uint64_t shuffle_seed = 0);

struct IsoTest {
  bool isomorphic = false;
  std::optional<ModMorphism> witness;  // m -> n, verified invertible
  bool witness_search_exhausted = false;
};
// Both modules must be indecomposable.
IsoTest is_isomorphic(const RepModule& m, const RepModule& n);

using ClassId = std::size_t;
using ClassMultiset = std::map<ClassId, std::size_t>;

// Registry of isomorphism classes of indecomposable modules over one algebra and side.
class IsoRegistry {
 public:
  struct ClassInfo {
    RepModule representative;
    std::vector<std::size_t> dims, top, socle;
    bool projective = false;
  };

  ClassId classify(const RepModule& indecomposable);
  // Lookup without registering.
  std::optional<ClassId> find(const RepModule& indecomposable) const;
  std::size_t size() const;
  const ClassInfo& info(ClassId id) const;
  const RepModule& representative(ClassId id) const { return info(id).representative; }
  bool is_projective(ClassId id) const { return info(id).projective; }

 private:
  std::optional<ClassId> find_locked(const RepModule& m, const std::vector<std::size_t>& top,
                                     const std::vector<std::size_t>& socle) const;

  mutable std::mutex mutex_;
  std::deque<ClassInfo> classes_;
  std::map<std::vector<std::size_t>, std::vector<ClassId>> by_dims_;
};

std::vector<RepModule> indecomposable_summands(const RepModule& m, std::uint64_t shuffle_seed = 0);
ClassMultiset krull_schmidt(const RepModule& m, IsoRegistry& registry, std::uint64_t shuffle_seed = 0);

// Projective modules have cover dimension equal to their own dimension.
bool is_projective_module(const RepModule& m);

}  // namespace syzygy

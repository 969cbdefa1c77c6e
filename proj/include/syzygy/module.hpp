#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "syzygy/linalg.hpp"
#include "syzygy/presentation.hpp"

namespace syzygy {

enum class Side { left, right };

inline Side flip(Side s) { return s == Side::left ? Side::right : Side::left; }
inline const char* to_string(Side s) { return s == Side::left ? "left" : "right"; }

// A module as a quiver representation. Right modules are stored as left modules over the
// opposite presentation: for a right module, arrow a: i -> j acts as a map from the vertex-j
// space to the vertex-i space.
class RepModule {
 public:
  RepModule() = default;
  // Validates shapes and that every relation acts as zero (throws RelationViolation).
  RepModule(Algebra algebra, Side side, std::vector<std::size_t> dims, std::vector<QMatrix> actions);

  struct Unchecked {};
  RepModule(Unchecked, Algebra algebra, Side side, std::vector<std::size_t> dims, std::vector<QMatrix> actions);

  static RepModule zero(Algebra algebra, Side side);

  const Algebra& algebra() const { return algebra_; }
  Side side() const { return side_; }
  // The presentation whose left modules these are.
  const Presentation& acting() const;
  const Quiver& quiver() const { return acting().quiver(); }

  std::size_t vertex_count() const { return dims_.size(); }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dim(std::size_t v) const { return dims_[v]; }
  std::size_t total_dim() const;
  std::size_t offset(std::size_t v) const;
  bool is_zero() const { return total_dim() == 0; }

  // Matrix of arrow a in the acting presentation (dim target x dim source).
  const QMatrix& action(std::size_t arrow) const { return actions_[arrow]; }
  const std::vector<QMatrix>& actions() const { return actions_; }
  QMatrix path_action(const Path& p) const;
  QMatrix basis_action(std::size_t basis_index) const;

  // Name of the first relation not annihilating the module, or empty.
  std::string violated_relation() const;
  bool compatible(const RepModule& other) const;

 private:
  Algebra algebra_;
  Side side_ = Side::left;
  std::vector<std::size_t> dims_;
  std::vector<QMatrix> actions_;
};

// Per-vertex matrices (dim target_v x dim source_v).
struct ModMorphism {
  std::vector<QMatrix> blocks;

  static ModMorphism zero(const RepModule& source, const RepModule& target);
  static ModMorphism identity(const RepModule& m);
  bool is_zero() const;
  Rational trace() const;  // sum of per-vertex traces (endomorphisms)
  friend bool operator==(const ModMorphism&, const ModMorphism&) = default;
};

ModMorphism compose(const ModMorphism& second, const ModMorphism& first);  // second after first
ModMorphism operator+(const ModMorphism& a, const ModMorphism& b);
ModMorphism operator-(const ModMorphism& a, const ModMorphism& b);
ModMorphism operator*(const Rational& s, const ModMorphism& f);
ModMorphism combine(const std::vector<ModMorphism>& basis, const std::vector<Rational>& coeffs);
// tr(g . f) without forming the product.
Rational trace_of_composite(const ModMorphism& g, const ModMorphism& f);
bool is_homomorphism(const ModMorphism& f, const RepModule& source, const RepModule& target);
bool is_invertible(const ModMorphism& f);

RepModule projective(const Algebra& a, std::size_t vertex, Side side);
RepModule simple(const Algebra& a, std::size_t vertex, Side side);
RepModule regular(const Algebra& a, Side side);
RepModule semisimple_top(const Algebra& a, Side side);  // Λ/J
RepModule injective(const Algebra& a, std::size_t vertex, Side side);  // injective envelope of S_vertex
RepModule dual(const RepModule& m);
RepModule direct_sum(const std::vector<RepModule>& parts);

// Submodule spanned per vertex by the columns of `bases` (must be closed under the action).
RepModule submodule(const RepModule& m, const std::vector<QMatrix>& bases);
// Quotient by a submodule given by per-vertex bases; `projection` receives the quotient map.
RepModule quotient(const RepModule& m, const std::vector<QMatrix>& sub_bases, ModMorphism* projection = nullptr);
// Smallest submodule containing the given per-vertex vectors.
std::vector<QMatrix> generated_submodule(const RepModule& m, const std::vector<QMatrix>& generators);

// Per-vertex bases of J·M.
std::vector<QMatrix> radical_bases(const RepModule& m);
// Per-vertex bases of the socle.
std::vector<QMatrix> socle_bases(const RepModule& m);
std::vector<std::size_t> top_dims(const RepModule& m);
std::vector<std::size_t> socle_dims(const RepModule& m);
// Layers J^k M / J^{k+1} M as multiplicity vectors.
std::vector<std::vector<std::size_t>> radical_filtration(const RepModule& m);

std::vector<ModMorphism> hom_space(const RepModule& m, const RepModule& n);
std::size_t hom_dim(const RepModule& m, const RepModule& n);

// dim_K (A ⊗_Λ M) for a right module A and a left module M.
std::size_t tensor_dim(const RepModule& a_right, const RepModule& m_left);
// Rank of f ⊗ id_M : A ⊗ M -> A' ⊗ M.
std::size_t tensor_map_rank(const ModMorphism& f, const RepModule& a, const RepModule& a2, const RepModule& m_left);

struct LayeredGraph {
  struct Node {
    std::size_t vertex;
    std::size_t layer;
  };
  struct Edge {
    std::size_t from, to, arrow;
  };
  std::vector<Node> nodes;
  std::vector<Edge> edges;

  std::string to_dot(const Quiver& q, const std::string& name = "module") const;
  std::string to_text(const Quiver& q) const;
};
LayeredGraph layered_graph(const RepModule& m);

// One basis vector per node; edge arrow (of the acting quiver) sends node `from` to coeff times
// node `to`. Relations are checked (RelationViolation).
struct GraphEdge {
  std::size_t from, to, arrow;
  Rational coeff = 1;
};
RepModule module_from_graph(const Algebra& a, Side side, const std::vector<std::size_t>& node_vertex,
                            const std::vector<GraphEdge>& edges);

}  // namespace syzygy

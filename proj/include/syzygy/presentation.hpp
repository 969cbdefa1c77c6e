#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "syzygy/linalg.hpp"

namespace syzygy {

struct Arrow {
  std::string name;
  std::size_t source;
  std::size_t target;
};

class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(std::size_t i) const { return arrows_[i]; }
  const std::string& label(std::size_t v) const { return vertices_[v]; }

  std::optional<std::size_t> find_vertex(const std::string& label) const;
  std::optional<std::size_t> find_arrow(const std::string& name) const;
  std::size_t vertex(const std::string& label) const;  // throws PreconditionViolation
  std::size_t arrow_index(const std::string& name) const;

  const std::vector<std::size_t>& arrows_from(std::size_t v) const { return out_[v]; }
  const std::vector<std::size_t>& arrows_into(std::size_t v) const { return in_[v]; }

  // Same vertices and arrow names, every arrow reversed.
  Quiver reversed() const;

  friend bool operator==(const Quiver& a, const Quiver& b);

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
};

// A path in traversal order: first arrows[0], then arrows[1], ...
struct Path {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> arrows;

  static Path trivial(std::size_t v) { return Path{v, v, {}}; }
  // Builds a path from arrow indices, checking composability.
  static Path from_arrows(const Quiver& q, std::vector<std::size_t> arrows);
  // Parses "a*b*c" (traversal order) or "e(v)" for a trivial path.
  static Path parse(const Quiver& q, const std::string& text);

  std::size_t length() const { return arrows.size(); }
  Path reversed() const;
  std::string to_string(const Quiver& q) const;

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

// Deterministic order: by length, then arrow names lexicographically (trivial paths by vertex).
bool path_less(const Quiver& q, const Path& a, const Path& b);

// Either a monomial p, or a binomial p - coeff * q.
struct Relation {
  Path p;
  Rational coeff = 0;
  std::optional<Path> q;
  bool allow_short = false;  // accept terms of length < 2

  static Relation zero(Path p) { return Relation{std::move(p), 0, std::nullopt}; }
  static Relation equal(Path p, Rational c, Path q) { return Relation{std::move(p), std::move(c), std::move(q)}; }
  bool is_monomial() const { return !q.has_value(); }
  Relation reversed() const;
  friend bool operator==(const Relation&, const Relation&) = default;
};

// Sparse rational combination of basis elements, sorted by basis index.
using Element = std::vector<std::pair<std::size_t, Rational>>;

// Λ = KΓ/I with a path normal-form basis and structure constants.
class Presentation {
 public:
  static constexpr std::size_t kDefaultLengthCap = 12;

  // Throws NotNilpotent or IllFormedRelation.
  static std::shared_ptr<const Presentation> build(Quiver quiver, std::vector<Relation> relations,
                                                   std::size_t length_cap = kDefaultLengthCap);

  const Quiver& quiver() const { return quiver_; }
  const std::vector<Relation>& relations() const { return relations_; }
  std::size_t length_cap() const { return length_cap_; }
  std::size_t nilpotency_degree() const { return nilpotency_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Path>& basis() const { return basis_; }
  const Path& basis_path(std::size_t i) const { return basis_[i]; }
  // Basis indices of the paths from s to t, in basis order.
  const std::vector<std::size_t>& basis_between(std::size_t s, std::size_t t) const {
    return between_[s * quiver_.vertex_count() + t];
  }
  std::size_t trivial(std::size_t v) const { return trivial_[v]; }

  Element normal_form(const Path& path) const;
  Element normal_form(const std::vector<std::pair<Rational, Path>>& combo) const;
  // Basis element a followed by basis element b (algebra product b·a). Zero if not composable.
  const Element& concat(std::size_t a, std::size_t b) const;
  // Bilinear extension of concat.
  Element concat(const Element& x, const Element& y) const;

  // Reversed quiver and relations.
  std::shared_ptr<const Presentation> opposite() const;

 private:
  Presentation() = default;
  void compute();
  bool contains_monomial(const std::vector<std::size_t>& arrows) const;

  Quiver quiver_;
  std::vector<Relation> relations_;
  std::size_t length_cap_ = kDefaultLengthCap;
  std::size_t nilpotency_ = 0;
  std::vector<Path> basis_;
  std::vector<std::vector<std::size_t>> between_;
  std::vector<std::size_t> trivial_;
  std::vector<std::vector<std::size_t>> monomials_;
  std::size_t longest_monomial_ = 0;
  std::map<Path, Element> live_;  // normal form of every monomial-free path shorter than N
  std::vector<Element> products_;  // dim * dim table, empty when not composable
  Element zero_;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

// Both presentations needed to handle left and right modules over the same algebra.
class Algebra {
 public:
  Algebra() = default;
  explicit Algebra(PresentationPtr presentation);
  static Algebra build(Quiver quiver, std::vector<Relation> relations,
                       std::size_t length_cap = Presentation::kDefaultLengthCap);

  const Presentation& presentation() const { return *forward_; }
  const PresentationPtr& forward() const { return forward_; }
  const PresentationPtr& backward() const { return backward_; }
  // The algebra whose left modules are the right modules of this one.
  Algebra opposite() const;
  std::size_t vertex_count() const { return forward_->quiver().vertex_count(); }
  bool same_as(const Algebra& other) const { return forward_ == other.forward_; }

 private:
  PresentationPtr forward_;
  PresentationPtr backward_;
};

}  // namespace syzygy

#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "syzygy/presentation.hpp"

namespace fixtures {

using syzygy::Algebra;

struct ArrowSpec {
  std::string name, source, target;
};

struct EqualSpec {
  std::string p;
  long coeff;
  std::string q;
};

inline Algebra algebra(const std::vector<std::string>& vertices, const std::vector<ArrowSpec>& arrows,
                       const std::vector<std::string>& zero, const std::vector<EqualSpec>& equal = {}) {
  std::vector<syzygy::Arrow> as;
  auto index = [&](const std::string& v) {
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i] == v) return i;
    throw std::runtime_error("fixture: unknown vertex " + v);
  };
  for (const auto& a : arrows) as.push_back({a.name, index(a.source), index(a.target)});
  syzygy::Quiver q(vertices, as);
  std::vector<syzygy::Relation> rels;
  for (const auto& z : zero) rels.push_back(syzygy::Relation::zero(syzygy::Path::parse(q, z)));
  for (const auto& e : equal)
    rels.push_back(syzygy::Relation::equal(syzygy::Path::parse(q, e.p), e.coeff, syzygy::Path::parse(q, e.q)));
  return Algebra::build(q, rels);
}

// 1 -a-> 2 -b-> 3 with a loop c at 3; all paths of length 3 vanish.
inline Algebra chain_with_loop() {
  return algebra({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "3", "3"}},
                 {"a*b*c", "b*c*c", "c*c*c"});
}

// K[x,y]/(x^2, y^2): local, self-injective, commutative.
inline Algebra local_xy() {
  return algebra({"1"}, {{"x", "1", "1"}, {"y", "1", "1"}}, {"x*x", "y*y"}, {{"x*y", 1, "y*x"}});
}

// K[x]/(x^n).
inline Algebra truncated_polynomial(int n) {
  std::string p = "x";
  for (int i = 1; i < n; ++i) p += "*x";
  return algebra({"1"}, {{"x", "1", "1"}}, {p});
}

// Five-vertex monomial algebra: a:2->1, b:3->2, e:4->3, loops g,d at 4, al,be:5->4.
// Nonzero paths from 5: al, be, al*g, be*d.
inline Algebra five_vertex_monomial() {
  return algebra({"1", "2", "3", "4", "5"},
                 {{"a", "2", "1"}, {"b", "3", "2"}, {"e", "4", "3"}, {"g", "4", "4"}, {"d", "4", "4"},
                  {"al", "5", "4"}, {"be", "5", "4"}},
                 {"b*a", "e*b", "g*g", "g*d", "d*g", "d*d", "g*e", "d*e", "al*d", "be*g", "al*e", "be*e"});
}

// 1 -> 2 with no relations.
inline Algebra a2() { return algebra({"1", "2"}, {{"a", "1", "2"}}, {}); }

}  // namespace fixtures

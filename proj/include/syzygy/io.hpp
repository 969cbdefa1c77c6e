#pragma once

#include <string>
#include <utility>
#include <vector>

#include "syzygy/errors.hpp"
#include "syzygy/module.hpp"
#include "syzygy/orders.hpp"

namespace syzygy {

struct AlgebraText {
  Quiver quiver;
  std::vector<Relation> relations;
};

// quiver { vertices: 1, 2; arrows: a: 1 -> 2; } relations { zero: a*b; equal: p = 2/3 * q; }
// Throws ParseError with line and column; quiver errors (duplicate names, unknown vertices)
// are reported at the offending token.
AlgebraText parse_algebra(const std::string& text);
// Canonical form; parse_algebra(emit_algebra(x)) reproduces x.
std::string emit_algebra(const Quiver& q, const std::vector<Relation>& relations);
Algebra build_parsed(const AlgebraText& t);

// One or more `module <left|right> <form>;` statements; several statements give their direct sum.
// Forms: simple v, projective v, injective v, top, regular, cogenerator, explicit { ... },
// cokernel { ... }, graph { ... }.
RepModule parse_module(const std::string& text, const Algebra& a);

// exponents { 0 0; 1 0; } or valued_quiver { vertices: 1, 2; arrows: 1 -> 2 = 0, b: 2 -> 1 = 1; }
ValuedQuiver parse_order(const std::string& text);
std::string emit_valued_quiver(const ValuedQuiver& vq);

std::string read_file(const std::string& path);

}  // namespace syzygy

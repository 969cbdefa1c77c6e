#include <doctest.h>

#include "fixtures.hpp"
#include "syzygy/errors.hpp"

using namespace syzygy;

namespace {

std::vector<std::string> basis_names(const Presentation& p) {
  std::vector<std::string> out;
  for (const auto& b : p.basis()) out.push_back(b.to_string(p.quiver()));
  return out;
}

void check_algebra_laws(const Presentation& p) {
  const std::size_t nv = p.quiver().vertex_count();
  const std::size_t d = p.dim();
  for (std::size_t i = 0; i < nv; ++i)
    for (std::size_t j = 0; j < nv; ++j) {
      Element prod = p.concat(p.trivial(i), p.trivial(j));
      if (i == j)
        CHECK(prod == Element{{p.trivial(i), Rational(1)}});
      else
        CHECK(prod.empty());
    }
  std::size_t total = 0;
  for (std::size_t i = 0; i < nv; ++i)
    for (std::size_t j = 0; j < nv; ++j) total += p.basis_between(i, j).size();
  CHECK(total == d);
  if (d <= 60)
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b)
        for (std::size_t c = 0; c < d; ++c) {
          Element ab = p.concat(a, b), bc = p.concat(b, c);
          CHECK(p.concat(ab, Element{{c, Rational(1)}}) == p.concat(Element{{a, Rational(1)}}, bc));
        }
  // J^N = 0 and J^{N-1} != 0.
  bool has_long = false;
  for (const auto& b : p.basis()) {
    CHECK(b.length() < p.nilpotency_degree());
    if (b.length() + 1 == p.nilpotency_degree()) has_long = true;
  }
  CHECK(has_long);
}

}  // namespace

TEST_CASE("chain with loop: basis and nilpotency degree") {
  auto alg = fixtures::chain_with_loop();
  const Presentation& p = alg.presentation();
  CHECK(p.nilpotency_degree() == 3);
  CHECK(basis_names(p) ==
        std::vector<std::string>{"e(1)", "e(2)", "e(3)", "a", "b", "c", "a*b", "b*c", "c*c"});
  check_algebra_laws(p);
  CHECK(p.normal_form(Path::parse(p.quiver(), "a*b*c")).empty());
  CHECK_THROWS_AS(p.normal_form(Path{2, 2, std::vector<std::size_t>(13, 2)}), PathTooLong);
}

TEST_CASE("local algebra K[x,y]/(x^2,y^2)") {
  auto alg = fixtures::local_xy();
  const Presentation& p = alg.presentation();
  CHECK(basis_names(p) == std::vector<std::string>{"e(1)", "x", "y", "x*y"});
  CHECK(p.nilpotency_degree() == 3);
  check_algebra_laws(p);
  Element yx = p.normal_form(Path::parse(p.quiver(), "y*x"));
  CHECK(yx == Element{{3, Rational(1)}});
  // Commutative: the opposite presentation has the same basis.
  CHECK(basis_names(*alg.backward()) == basis_names(p));
}

TEST_CASE("five-vertex monomial algebra") {
  auto alg = fixtures::five_vertex_monomial();
  const Presentation& p = alg.presentation();
  CHECK(p.dim() == 14);
  check_algebra_laws(p);
  const Presentation& op = *alg.backward();
  CHECK(op.dim() == 14);
  std::size_t right_p1 = 0;
  for (std::size_t j = 0; j < 5; ++j) right_p1 += op.basis_between(0, j).size();
  CHECK(right_p1 == 2);
  CHECK(op.opposite()->dim() == p.dim());
}

TEST_CASE("hereditary quiver without relations") {
  auto alg = fixtures::algebra({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "1", "3"}}, {});
  CHECK(alg.presentation().dim() == 7);
  check_algebra_laws(alg.presentation());
}

TEST_CASE("commutative square identifies the two paths") {
  auto alg = fixtures::algebra({"1", "2", "3", "4"},
                               {{"a", "1", "2"}, {"b", "1", "3"}, {"c", "2", "4"}, {"d", "3", "4"}}, {},
                               {{"a*c", 2, "b*d"}});
  const Presentation& p = alg.presentation();
  CHECK(p.dim() == 4 + 4 + 1);
  Element ac = p.normal_form(Path::parse(p.quiver(), "a*c"));
  Element bd = p.normal_form(Path::parse(p.quiver(), "b*d"));
  REQUIRE(ac.size() == 1);
  REQUIRE(bd.size() == 1);
  CHECK(ac[0].first == bd[0].first);
  CHECK(ac[0].second == 2 * bd[0].second);
  check_algebra_laws(p);
}

TEST_CASE("relation errors") {
  CHECK_THROWS_AS(fixtures::algebra({"1"}, {{"x", "1", "1"}}, {}), NotNilpotent);
  CHECK_THROWS_AS(fixtures::algebra({"1", "2"}, {{"a", "1", "2"}}, {"a"}), IllFormedRelation);
  CHECK_THROWS_AS(fixtures::algebra({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "1", "3"}}, {},
                                    {{"a*b", 1, "c*c"}}),
                  IllFormedRelation);
}

TEST_CASE("non-homogeneous relation that is not nilpotent") {
  // x^2 = x^3 keeps x^2 nonzero forever.
  CHECK_THROWS_AS(fixtures::algebra({"1"}, {{"x", "1", "1"}}, {}, {{"x*x", 1, "x*x*x"}}), NotNilpotent);
}

#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "random_instances.hpp"
#include "syzygy/decompose.hpp"
#include "syzygy/errors.hpp"

using namespace syzygy;

TEST_CASE("indecomposable projectives and injectives") {
  Algebra a = fixtures::five_vertex_monomial();
  for (std::size_t v = 0; v < 5; ++v) {
    CHECK(is_indecomposable(projective(a, v, Side::left)));
    CHECK(is_indecomposable(injective(a, v, Side::right)));
    CHECK(is_projective_module(projective(a, v, Side::right)));
  }
  CHECK_FALSE(is_projective_module(simple(a, 3, Side::left)));
  CHECK_THROWS_AS(is_indecomposable(RepModule::zero(a, Side::left)), ZeroModule);
}

TEST_CASE("regular module splits into its projectives") {
  Algebra a = fixtures::chain_with_loop();
  IsoRegistry reg;
  ClassMultiset ks = krull_schmidt(regular(a, Side::left), reg);
  CHECK(ks.size() == 3);
  for (const auto& [id, k] : ks) {
    CHECK(k == 1);
    CHECK(reg.is_projective(id));
  }
  for (std::size_t v = 0; v < 3; ++v) CHECK(reg.find(projective(a, v, Side::left)).has_value());
}

TEST_CASE("semisimple module: multiplicities of the simples") {
  Algebra a = fixtures::local_xy();
  RepModule s = simple(a, 0, Side::left);
  RepModule m = direct_sum({s, s, s});
  auto parts = indecomposable_summands(m);
  CHECK(parts.size() == 3);
  IsoRegistry reg;
  ClassMultiset ks = krull_schmidt(m, reg);
  REQUIRE(ks.size() == 1);
  CHECK(ks.begin()->second == 3);
}

TEST_CASE("isomorphism test finds a witness for a change of basis") {
  std::mt19937_64 rng(7);
  Algebra a = fixtures::five_vertex_monomial();
  RepModule m = injective(a, 3, Side::left);
  RepModule n = random_instances::conjugate(rng, m);
  IsoTest t = is_isomorphic(m, n);
  CHECK(t.isomorphic);
  REQUIRE(t.witness.has_value());
  CHECK(is_homomorphism(*t.witness, m, n));
  CHECK(is_invertible(*t.witness));
  CHECK_FALSE(is_isomorphic(m, injective(a, 2, Side::left)).isomorphic);
}

TEST_CASE("uniserial modules over the chain with loop are told apart") {
  Algebra a = fixtures::chain_with_loop();
  RepModule p3 = projective(a, 2, Side::left);
  RepModule rad = submodule(p3, radical_bases(p3));
  RepModule rad2 = submodule(rad, radical_bases(rad));
  CHECK(rad.dims() == std::vector<std::size_t>{0, 0, 2});
  CHECK(is_isomorphic(rad2, simple(a, 2, Side::left)).isomorphic);
  CHECK_FALSE(is_isomorphic(rad, direct_sum({rad2, rad2})).isomorphic == true);
}

TEST_CASE("decomposition does not depend on the basis of the endomorphism ring") {
  std::mt19937_64 rng(11);
  Algebra a = fixtures::five_vertex_monomial();
  RepModule m = direct_sum({projective(a, 3, Side::left), simple(a, 3, Side::left), injective(a, 2, Side::left)});
  IsoRegistry reg;
  ClassMultiset base = krull_schmidt(m, reg);
  for (std::uint64_t seed : {1u, 2u, 3u}) CHECK(krull_schmidt(random_instances::conjugate(rng, m), reg, seed) == base);
}

TEST_CASE("end ring radical of a local module has codimension one") {
  Algebra a = fixtures::local_xy();
  EndRing e = end_ring(regular(a, Side::left));
  CHECK(e.basis.size() == 4);
  CHECK(radical_of_end(e).size() == 3);
}

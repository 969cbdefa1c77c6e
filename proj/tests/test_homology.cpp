#include <doctest.h>

#include "fixtures.hpp"
#include "syzygy/errors.hpp"
#include "syzygy/homology.hpp"

using namespace syzygy;

namespace {

using Dims = std::vector<std::size_t>;

Dims class_dims(const SyzygyEngine& e, const Multiplicities& m) {
  REQUIRE(m.size() == 1);
  return e.registry().info(m.begin()->first).dims;
}

}  // namespace

TEST_CASE("projective cover of the simple at 1 over the chain with loop") {
  Algebra a = fixtures::chain_with_loop();
  ProjectiveCover pc = projective_cover(simple(a, 0, Side::left));
  CHECK(pc.multiplicities == Dims{1, 0, 0});
  CHECK(pc.kernel.dims() == Dims{0, 1, 1});
  CHECK(is_homomorphism(pc.surjection, pc.cover, simple(a, 0, Side::left)));
  CHECK(is_homomorphism(pc.inclusion, pc.kernel, pc.cover));
}

TEST_CASE("resolution of S1 over the chain with loop") {
  Algebra a = fixtures::chain_with_loop();
  SyzygyEngine e(a, Side::left);
  ResolutionTrace t = resolve(e, simple(a, 0, Side::left), 6);
  REQUIRE(t.degrees.size() == 7);
  CHECK_FALSE(t.terminated);
  CHECK(class_dims(e, t.degrees[1].summands) == Dims{0, 1, 1});
  CHECK(class_dims(e, t.degrees[2].summands) == Dims{0, 0, 1});
  CHECK(class_dims(e, t.degrees[3].summands) == Dims{0, 0, 2});
  CHECK(t.degrees[3].summands == t.degrees[5].summands);
  CHECK(t.degrees[2].summands == t.degrees[4].summands);
  // dim P_k = dim Ω^k + dim Ω^{k+1}
  for (std::size_t k = 0; k + 1 < t.degrees.size(); ++k) {
    mpz_class cover = 0;
    for (std::size_t v = 0; v < 3; ++v) cover += t.degrees[k].cover[v] * projective(a, v, Side::left).total_dim();
    CHECK(cover == t.degrees[k].dim + t.degrees[k + 1].dim);
  }
}

TEST_CASE("pdim: infinite with a cycle, finite by exhaustion") {
  Algebra a = fixtures::chain_with_loop();
  SyzygyEngine e(a, Side::left);
  DimResult d = pdim(e, simple(a, 0, Side::left), 10);
  CHECK(d.kind == DimResult::Kind::infinite);
  REQUIRE(d.chain.size() >= 2);
  CHECK(d.chain[d.cycle_start] == d.chain.back());
  CHECK(pdim(e, projective(a, 1, Side::left), 10).kind == DimResult::Kind::finite);
  CHECK(pdim(e, projective(a, 1, Side::left), 10).value == 0);

  Algebra h = fixtures::a2();
  SyzygyEngine eh(h, Side::left);
  DimResult s1 = pdim(eh, simple(h, 0, Side::left), 5);
  CHECK(s1.kind == DimResult::Kind::finite);
  CHECK(s1.value == 1);
  CHECK_THROWS_AS(pdim(eh, simple(h, 0, Side::left), 0), PreconditionViolation);
}

TEST_CASE("pdim reports an unsettled budget") {
  Algebra a = fixtures::local_xy();
  SyzygyEngine e(a, Side::left);
  DimResult d = pdim(e, simple(a, 0, Side::left), 3);
  CHECK(d.kind == DimResult::Kind::unknown);
  CHECK(d.value == 3);
}

TEST_CASE("injective dimensions of a self-injective and a hereditary algebra") {
  Algebra a = fixtures::local_xy();
  SyzygyEngine l(a, Side::left), r(a, Side::right);
  InjectiveDims d = idim_both_sides(l, r, 5);
  CHECK(d.left.kind == DimResult::Kind::finite);
  CHECK(d.left.value == 0);
  CHECK(d.right.value == 0);
  Algebra h = fixtures::a2();
  SyzygyEngine hl(h, Side::left), hr(h, Side::right);
  InjectiveDims dh = idim_both_sides(hl, hr, 5);
  CHECK(dh.left.value == 1);
  CHECK(dh.right.value == 1);
}

TEST_CASE("Tor and Ext of simples over K[x]/(x^3)") {
  Algebra a = fixtures::truncated_polynomial(3);
  RepModule s_left = simple(a, 0, Side::left), s_right = simple(a, 0, Side::right);
  CHECK(tor1_dim(s_right, s_left) == 1);
  CHECK(tor1_dim(projective(a, 0, Side::right), s_left) == 0);
  SyzygyEngine e(a, Side::left);
  auto ext = ext_dims(e, s_left, s_left, 4);
  CHECK(ext == std::vector<mpz_class>{1, 1, 1, 1, 1});
}

TEST_CASE("engine memoizes first syzygies per class") {
  Algebra a = fixtures::five_vertex_monomial();
  SyzygyEngine e(a, Side::right);
  ClassMultiset top = e.decompose(semisimple_top(a, Side::right));
  CHECK(top.size() == 5);
  for (const auto& [id, k] : top) {
    ClassMultiset first = e.omega(id);
    CHECK(e.has_omega(id));
    CHECK(e.omega(id) == first);
  }
}

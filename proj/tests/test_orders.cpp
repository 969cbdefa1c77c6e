#include <doctest.h>

#include <map>

#include "syzygy/errors.hpp"
#include "syzygy/orders.hpp"

using namespace syzygy;

namespace {

const ExponentMatrix kSixVertex{{{0, 0, 0, 0, 0, 0},
                                 {1, 0, 1, 1, 0, 0},
                                 {1, 1, 0, 0, 0, 0},
                                 {2, 1, 2, 0, 1, 0},
                                 {2, 1, 1, 1, 0, 0},
                                 {2, 2, 2, 1, 1, 0}}};

ValuedQuiver gorenstein_quiver() {
  ValuedQuiver vq;
  vq.vertices = {"1", "2", "3", "4", "5", "6"};
  auto add = [&](std::size_t s, std::size_t t, long v) {
    vq.arrows.push_back({"a" + std::to_string(s) + "_" + std::to_string(t), s - 1, t - 1, v});
  };
  add(1, 6, 2), add(1, 2, 1), add(1, 3, 1), add(3, 5, 1), add(3, 1, 0), add(2, 1, 0), add(2, 4, 1);
  add(5, 2, 0), add(5, 6, 1), add(6, 4, 0), add(6, 5, 0), add(4, 6, 1), add(4, 3, 0);
  return vq;
}

}  // namespace

TEST_CASE("valued quiver of the six-vertex exponent matrix") {
  ValuedQuiver vq = valued_quiver_from_exponents(kSixVertex);
  std::map<std::string, long> got;
  for (const auto& a : vq.arrows) got[a.name] = a.value;
  const std::map<std::string, long> expected{{"a1_2", 1}, {"a1_3", 1}, {"a1_6", 2}, {"a2_1", 0}, {"a2_4", 1},
                                             {"a2_5", 1}, {"a3_1", 0}, {"a3_5", 1}, {"a4_3", 0}, {"a4_6", 1},
                                             {"a5_2", 0}, {"a5_3", 0}, {"a5_6", 1}, {"a6_4", 0}, {"a6_5", 0}};
  CHECK(got == expected);
  Algebra a = presentation_from_valued_quiver(vq);
  CHECK(a.presentation().dim() == 36);
  CHECK(has_multiplicity_one(a));
  CHECK(check_value_relations(vq, a, 7) > 0);
}

TEST_CASE("minimal path values") {
  ValuedQuiver vq = valued_quiver_from_exponents(kSixVertex);
  auto m = min_path_values(vq);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(m[i][i] == 0);
    for (std::size_t j = 0; j < 6; ++j) {
      REQUIRE(m[i][j].has_value());
      // the value of a path i -> j -> i is at least 1 away from the trivial path
      if (i != j) CHECK(*m[i][j] + *m[j][i] >= 1);
    }
  }
}

TEST_CASE("exponent matrix validation") {
  CHECK_THROWS_AS(valued_quiver_from_exponents(ExponentMatrix{{{1}}}), InvalidExponents);
  CHECK_THROWS_AS(valued_quiver_from_exponents(ExponentMatrix{{{0, 0}, {0, 0}}}), InvalidExponents);
  CHECK_THROWS_AS(valued_quiver_from_exponents(ExponentMatrix{{{0, 1}, {0}}}), InvalidExponents);
  CHECK_THROWS_AS(valued_quiver_from_exponents(ExponentMatrix{{{0, -1}, {2, 0}}}), InvalidExponents);
  // Hereditary order: the upper triangular matrix with π below the diagonal.
  ValuedQuiver h = valued_quiver_from_exponents(ExponentMatrix{{{0, 0}, {1, 0}}});
  CHECK(h.arrows.size() == 2);
}

TEST_CASE("valued quiver errors") {
  ValuedQuiver loops{{"1", "2"}, {{"l", 0, 0, 1}, {"x", 0, 1, 0}, {"y", 1, 0, 1}}};
  CHECK_THROWS_AS(order_relations(loops), LoopsPresent);
  ValuedQuiver zero_cycle{{"1", "2"}, {{"x", 0, 1, 0}, {"y", 1, 0, 0}}};
  CHECK_THROWS_AS(order_relations(zero_cycle), NonpositiveCycle);
  // One vertex with a loop gives the ground field.
  ValuedQuiver local{{"1"}, {{"p", 0, 0, 1}}};
  CHECK(presentation_from_valued_quiver(local).presentation().dim() == 1);
}

TEST_CASE("order report for the six-vertex exponent matrix") {
  OrderReport r = order_report(valued_quiver_from_exponents(kSixVertex), 8);
  CHECK(r.lambda_left.exact());
  CHECK(r.lambda_left.lower == 3);
  CHECK(r.lambda_right.exact());
  CHECK(r.lambda_right.lower == 0);
  CHECK(r.order_left.lower == 4);
  CHECK(r.order_right.lower == 1);
  CHECK(r.left.lower_witness == "E3");
  CHECK_FALSE(r.gorenstein_value.has_value());
  CHECK(r.idim.left.kind == DimResult::Kind::infinite);
  CHECK(r.idim.right.kind == DimResult::Kind::infinite);
}

TEST_CASE("order report and global dimension certificate for the Gorenstein example") {
  OrderReport r = order_report(gorenstein_quiver(), 8);
  REQUIRE(r.gorenstein_value.has_value());
  CHECK(*r.gorenstein_value == 1);
  CHECK(r.order_left.exact());
  CHECK(r.order_left.lower == 2);
  CHECK(r.order_right.lower == 2);
  GldimCertificate c = gldim_certificate(r, {{"S6", simple(r.algebra, 5, Side::left)}}, 8);
  CHECK(c.kind == GldimCertificate::Kind::infinite_certified);
  CHECK(c.witness == "S6");
  CHECK(c.checks.size() == 2);
}

TEST_CASE("asserted global dimension is cross-checked") {
  OrderReport r = order_report(gorenstein_quiver(), 8, 2);
  CHECK(r.global_repetition == 1u);
  OrderReport bad = order_report(gorenstein_quiver(), 8, 5);
  CHECK_FALSE(bad.assertion_conflicts.empty());
}

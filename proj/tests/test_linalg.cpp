#include <doctest.h>

#include <random>

#include "syzygy/errors.hpp"
#include "syzygy/linalg.hpp"

using namespace syzygy;

namespace {

QMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo = -2, int hi = 2) {
  std::uniform_int_distribution<int> dist(lo, hi);
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

// 7x7 B-matrix of the five-vertex monomial example.
QMatrix reference_b() {
  return QMatrix{{0, 1, 0, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 2, 1, 1},
                 {0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 1, 1}, {0, 0, 0, 0, 1, 1, 1}};
}

}  // namespace

TEST_CASE("rank of small matrices") {
  CHECK(rank(QMatrix::identity(2)) == 2);
  CHECK(rank(QMatrix(3, 4)) == 0);
  CHECK(rank(QMatrix{{1, 2}, {2, 4}}) == 1);
}

TEST_CASE("kernel basis") {
  CHECK(kernel_basis(QMatrix::identity(3)).rows() == 0);
  CHECK(kernel_basis(QMatrix(2, 3)).rows() == 3);
  QMatrix k = kernel_basis(QMatrix{{1, 1}});
  REQUIRE(k.rows() == 1);
  CHECK(k(0, 0) == -k(0, 1));
  CHECK(sgn(k(0, 0)) != 0);
}

TEST_CASE("rank-nullity and kernel verification on random matrices") {
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    QMatrix m = random_matrix(rng, r, c, -1, 1);
    QMatrix k = kernel_basis(m);
    CHECK(rank(m) + k.rows() == c);
    if (k.rows()) CHECK((m * k.transpose()).is_zero());
  }
}

TEST_CASE("rowspace containment") {
  std::mt19937 rng(11);
  QMatrix b = random_matrix(rng, 3, 5);
  CHECK(rowspace_contains(b, b));
  CHECK(rowspace_contains(QMatrix(2, 5), b));
  CHECK_THROWS_AS(rowspace_contains(QMatrix(1, 4), b), DimensionMismatch);
  for (int t = 0; t < 100; ++t) {
    QMatrix a = random_matrix(rng, 2, 4, -1, 1), c = random_matrix(rng, 2, 4, -1, 1);
    if (rowspace_contains(a, c)) CHECK(rank(vstack(a, c)) == rank(c));
    CHECK(rowspace_contains(random_matrix(rng, 2, 2) * c, c));
  }
}

TEST_CASE("stabilization of the five-vertex B-matrix") {
  // Cross-checked with sympy: ranks of B^1..B^6 are 5,4,3,2,1,1.
  QMatrix b = reference_b();
  const std::size_t expected[] = {5, 4, 3, 2, 1, 1};
  for (unsigned k = 1; k <= 6; ++k) CHECK(rank(power(b, k)) == expected[k - 1]);
  CHECK_FALSE(rowspace_contains(power(b, 4), power(b, 5)));
  CHECK(rowspace_contains(power(b, 5), power(b, 6)));
}

TEST_CASE("inverse, charpoly and rational roots") {
  QMatrix m{{2, 1}, {1, 1}};
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(m * *inv == QMatrix::identity(2));
  CHECK_FALSE(inverse(QMatrix{{1, 2}, {2, 4}}));
  // (t-1)(t-2)(t+3)
  QMatrix d{{1, 0, 0}, {5, 2, 0}, {7, 1, -3}};
  auto cp = charpoly(d);
  CHECK(cp == std::vector<Rational>{6, -7, 0, 1});
  auto roots = rational_roots(cp);
  REQUIRE(roots);
  CHECK(*roots == std::vector<Rational>{-3, 1, 2});
  auto half = rational_roots({Rational(-1), Rational(2)});
  REQUIRE(half);
  CHECK(*half == std::vector<Rational>{Rational(1, 2)});
  CHECK(rational_roots({Rational(1), Rational(0), Rational(1)})->empty());
}

TEST_CASE("nilpotency") {
  CHECK(is_nilpotent(QMatrix{{0, 1}, {0, 0}}));
  CHECK_FALSE(is_nilpotent(QMatrix{{0, 1}, {1, 0}}));
  CHECK(is_nilpotent(QMatrix(3, 3)));
}

TEST_CASE("subspace coordinates and complements") {
  QMatrix basis{{1, 0}, {1, 1}, {0, 2}};
  SubspaceCoords sc(basis);
  QMatrix v{{3}, {5}, {4}};
  CHECK(sc.coords(v) == QMatrix{{3}, {2}});
  CHECK(sc.contains(v));
  CHECK_FALSE(sc.contains(QMatrix{{1}, {0}, {0}}));
  QMatrix comp = complement_basis(basis, 3);
  CHECK(comp.cols() == 1);
  CHECK(rank(hstack(basis, comp)) == 3);
}

TEST_CASE("sparse echelon agrees with dense elimination") {
  std::mt19937 rng(3);
  for (int t = 0; t < 100; ++t) {
    std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
    QMatrix m = random_matrix(rng, r, c, -1, 1);
    SparseEchelon se(c);
    for (std::size_t i = 0; i < r; ++i) {
      SparseEchelon::Row row;
      for (std::size_t j = 0; j < c; ++j)
        if (sgn(m(i, j)) != 0) row.emplace_back(j, m(i, j));
      se.insert(row);
    }
    CHECK(se.rank() == rank(m));
    auto ker = se.kernel_basis();
    CHECK(ker.size() == c - se.rank());
    for (const auto& v : ker) {
      QMatrix x(c, 1);
      for (const auto& [j, val] : v) x(j, 0) = val;
      CHECK((m * x).is_zero());
    }
  }
}

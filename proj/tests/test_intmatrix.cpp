#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "graphk/errors.hpp"
#include "graphk/intmatrix.hpp"

#include "support/gen.hpp"
#include "support/oracles.hpp"

using namespace graphk;

namespace {

IntMatrix make(int rows, int cols, std::vector<long> entries) {
  IntMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) m.at(r, c) = entries[size_t(r) * cols + c];
  }
  return m;
}

IntMatrix diag_of(const SnfResult& s, int rows, int cols) {
  IntMatrix d(rows, cols);
  for (int i = 0; i < int(s.d.size()); ++i) d.at(i, i) = s.d[size_t(i)];
  return d;
}

void check_snf_contract(const IntMatrix& m) {
  SnfResult s = snf(m);
  CAPTURE(m.rows());
  CAPTURE(m.cols());
  // u m v reconstructs the diagonal exactly
  CHECK(mul(mul(s.u, m), s.v) == diag_of(s, m.rows(), m.cols()));
  // unimodular transforms
  CHECK(abs_int(oracles::naive_det(s.u)) == 1);
  CHECK(abs_int(oracles::naive_det(s.v)) == 1);
  CHECK(oracles::naive_det(s.u) == s.det_u);
  CHECK(oracles::naive_det(s.v) == s.det_v);
  // divisibility chain, nonnegative, zeros trailing
  for (size_t i = 0; i < s.d.size(); ++i) {
    CHECK(s.d[i] >= 0);
    if (i + 1 < s.d.size()) {
      if (s.d[i] == 0) {
        CHECK(s.d[i + 1] == 0);
      } else {
        CHECK(s.d[i + 1] % s.d[i] == 0);
      }
    }
  }
  CHECK(s.rank == oracles::rational_rank(m));
}

}  // namespace

TEST_CASE("snf of the all-ones 3x2 matrix") {
  SnfResult s = snf(make(3, 2, {1, 1, 1, 1, 1, 1}));
  REQUIRE(s.d.size() == 2);
  CHECK(s.d[0] == 1);
  CHECK(s.d[1] == 0);
  CHECK(s.rank == 1);
}

TEST_CASE("snf of the identity") {
  SnfResult s = snf(IntMatrix::identity(3));
  CHECK(s.d == std::vector<Int>{1, 1, 1});
  CHECK(s.rank == 3);
}

TEST_CASE("snf divisibility chain example") {
  SnfResult s = snf(make(2, 2, {2, 4, 6, 8}));
  CHECK(s.d == std::vector<Int>{2, 4});
}

TEST_CASE("snf of empty shapes") {
  SnfResult a = snf(IntMatrix(0, 3));
  CHECK(a.d.empty());
  CHECK(a.rank == 0);
  SnfResult b = snf(IntMatrix(2, 0));
  CHECK(b.d.empty());
  CHECK(b.rank == 0);
  CHECK(b.u == IntMatrix::identity(2));
}

TEST_CASE("det golden values") {
  CHECK(det(make(1, 1, {-1})) == -1);
  // I - A^t for the Cuntz-spliced two-loop graph
  CHECK(det(make(3, 3, {-1, -1, 0, -1, 0, -1, 0, -1, 0})) == 1);
  CHECK(det(IntMatrix::identity(4)) == 1);
  CHECK_THROWS_AS(det(IntMatrix(2, 3)), input_error);
}

TEST_CASE("rank examples") {
  CHECK(rank(make(3, 2, {1, 1, 1, 1, 1, 1})) == 1);
  CHECK(rank(IntMatrix(3, 3)) == 0);
  CHECK(rank(make(2, 2, {2, 4, 6, 8})) == 2);
}

TEST_CASE("snf contract on random matrices") {
  testgen::Rng rng(20240811);
  for (int i = 0; i < 1000; ++i) {
    IntMatrix m = testgen::random_matrix(rng, 6, 9);
    check_snf_contract(m);
  }
}

TEST_CASE("d1 is the gcd of all entries") {
  testgen::Rng rng(42);
  for (int i = 0; i < 200; ++i) {
    IntMatrix m = testgen::random_matrix(rng, 5, 9);
    Int g = 0;
    for (int r = 0; r < m.rows(); ++r) {
      for (int c = 0; c < m.cols(); ++c) g = gcd_int(g, m.at(r, c));
    }
    SnfResult s = snf(m);
    if (g == 0) {
      CHECK(s.rank == 0);
    } else {
      CHECK(s.d[0] == g);
    }
  }
}

TEST_CASE("invariant factors against the minor-gcd oracle") {
  testgen::Rng rng(7);
  for (int i = 0; i < 150; ++i) {
    IntMatrix m = testgen::random_matrix(rng, 4, 6);
    SnfResult s = snf(m);
    Int prod = 1;
    for (int k = 1; k <= s.rank; ++k) {
      prod *= s.d[size_t(k) - 1];
      CHECK(prod == abs_int(oracles::minor_gcd(m, k)));
    }
    if (s.rank < std::min(m.rows(), m.cols())) {
      CHECK(oracles::minor_gcd(m, s.rank + 1) == 0);
    }
  }
}

TEST_CASE("det agrees with cofactor expansion and the snf sign") {
  testgen::Rng rng(99);
  for (int i = 0; i < 200; ++i) {
    int n = testgen::pick(rng, 0, 4);
    IntMatrix m(n, n);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) m.at(r, c) = testgen::pick(rng, -9, 9);
    }
    Int expected = oracles::naive_det(m);
    CHECK(det(m) == expected);
    SnfResult s = snf(m);
    Int prod = 1;
    for (const Int& d : s.d) prod *= d;
    CHECK(Int(s.det_u) * Int(s.det_v) * prod == expected);
  }
}

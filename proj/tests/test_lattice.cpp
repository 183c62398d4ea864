#include <random>
#include <set>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "weylgrid/lattice.hpp"

using namespace weylgrid;

namespace {

oracle::QMatrix to_q(const IntMatrix& m) {
  oracle::QMatrix out(m.rows(), std::vector<oracle::Q>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

IntMatrix random_nonsingular(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> entry(-6, 6);
  for (;;) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
    if (oracle::determinant(to_q(m)).numerator() != 0) return m;
  }
}

std::vector<std::int64_t> column(const IntMatrix& m, std::size_t j) {
  std::vector<std::int64_t> v(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, j);
  return v;
}

// True when every column of `b` is an integer combination of the columns of `a`.
bool spans(const IntMatrix& a, const IntMatrix& b) {
  const auto inv = oracle::inverse(to_q(a));
  for (std::size_t j = 0; j < b.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i) {
      oracle::Q coeff = 0;
      for (std::size_t k = 0; k < a.rows(); ++k) coeff += inv[i][k] * b(k, j);
      if (coeff.denominator() != 1) return false;
    }
  return true;
}

}  // namespace

TEST(Lattice, HermiteFormIsCanonicalAndSpansTheSameLattice) {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const IntMatrix g = random_nonsingular(rng, n);
    const IntMatrix h = column_hnf(g);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_GT(h(i, i), 0);
      for (std::size_t j = i + 1; j < n; ++j) EXPECT_EQ(h(i, j), 0);
      for (std::size_t j = 0; j < i; ++j) {
        EXPECT_GE(h(i, j), 0);
        EXPECT_LT(h(i, j), h(i, i));
      }
    }
    EXPECT_TRUE(spans(g, h));
    EXPECT_TRUE(spans(h, g));
    const auto det = oracle::determinant(to_q(g)).numerator();
    EXPECT_EQ(LatticeReducer(g).index(), det < 0 ? -det : det);
  }
}

TEST(Lattice, ReductionIsCanonical) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coord(-40, 40);
  std::uniform_int_distribution<int> mult(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const IntMatrix g = random_nonsingular(rng, n);
    const LatticeReducer red(g);
    for (int k = 0; k < 20; ++k) {
      std::vector<std::int64_t> v(n);
      for (auto& x : v) x = coord(rng);
      auto shifted = v;
      for (std::size_t j = 0; j < n; ++j) {
        const auto col = column(g, j);
        const int m = mult(rng);
        for (std::size_t i = 0; i < n; ++i) shifted[i] += m * col[i];
      }
      const auto r = red.reduce(v);
      EXPECT_EQ(red.reduce(r), r);
      EXPECT_EQ(red.reduce(shifted), r);
      EXPECT_TRUE(red.congruent(v, shifted));
      for (std::size_t i = 0; i < n; ++i) {
        EXPECT_GE(r[i], 0);
        EXPECT_LT(r[i], red.hnf()(i, i));
      }
    }
  }
}

TEST(Lattice, ResidueCountEqualsIndex) {
  // Q^v in omega^v coordinates for C2 scaled by 3: columns of 3*C.
  const IntMatrix g{{6, -3}, {-6, 6}};
  const LatticeReducer red(g);
  std::set<std::vector<std::int64_t>> classes;
  for (std::int64_t a = -20; a <= 20; ++a)
    for (std::int64_t b = -20; b <= 20; ++b) classes.insert(red.reduce(std::vector<std::int64_t>{a, b}));
  EXPECT_EQ(static_cast<std::int64_t>(classes.size()), red.index());
  EXPECT_EQ(red.index(), 18);
}

TEST(Lattice, SingularGeneratorsAreRejected) {
  const IntMatrix g{{1, 2}, {2, 4}};
  EXPECT_THROW(column_hnf(g), Error);
}

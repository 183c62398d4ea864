#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "cases.hpp"
#include "oracle.hpp"
#include "weylgrid/grids.hpp"
#include "weylgrid/orbitfn.hpp"

using namespace weylgrid;

namespace {

double order_of(const AlgebraData& data) { return data.weyl_order.convert_to<double>(); }

std::vector<int> tail(const std::vector<int>& v) { return {v.begin() + 1, v.end()}; }

std::vector<long double> as_long(const std::vector<double>& y) { return {y.begin(), y.end()}; }

std::vector<double> random_point(std::mt19937& rng, int n) {
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  std::vector<double> y(static_cast<std::size_t>(n));
  for (auto& v : y) v = u(rng);
  return y;
}

std::vector<int> random_weight(std::mt19937& rng, int n, int lo) {
  std::uniform_int_distribution<int> u(lo, 4);
  std::vector<int> t(static_cast<std::size_t>(n));
  for (auto& v : t) v = u(rng);
  return t;
}

const std::vector<cases::Case> kSymmetryTypes = {{'A', 1}, {'A', 2}, {'C', 2}, {'G', 2}, {'A', 3}, {'B', 3}, {'C', 3}};

}  // namespace

TEST(OrbitFn, TrivialValues) {
  const auto c2 = build(Series::C, 2);
  for (const auto& x : enumerate_F(c2, 4)) {
    const auto v = eval_C_grid(c2, make_weight_point(c2, 4, {4, 0, 0}), x);
    EXPECT_NEAR(v.real(), 8.0, 1e-12);
    EXPECT_NEAR(v.imag(), 0.0, 1e-12);
  }
  for (const auto& w : enumerate_Lambda(c2, 4)) {
    const auto v = eval_C_grid(c2, w, make_grid_point(c2, 4, {4, 0, 0}));
    EXPECT_NEAR(std::abs(v - Complex(8.0, 0.0)), 0.0, 1e-12);
    const double origin[] = {0.0, 0.0};
    EXPECT_NEAR(std::abs(OrbitFunction(c2, w.weight(), FunctionKind::C).at(origin) - Complex(8.0, 0.0)), 0.0,
                1e-12);
  }
  const auto interior = make_weight_point(c2, 4, {1, 1, 1});
  EXPECT_NEAR(std::abs(eval_S_real(c2, interior, RealPoint{{0.0, 0.0}})), 0.0, 1e-12);
}

TEST(OrbitFn, RankOneExamples) {
  const auto a1 = build(Series::A, 1);
  // <omega_1, omega^v_1 / 2> = 1/4: e^{i pi/2} + e^{-i pi/2}.
  const auto v = eval_C_grid(a1, make_weight_point(a1, 2, {1, 1}), make_grid_point(a1, 2, {1, 1}));
  EXPECT_NEAR(std::abs(v), 0.0, 1e-12);
  const auto s = eval_S_grid(a1, make_weight_point(a1, 4, {3, 1}), make_grid_point(a1, 4, {3, 1}));
  EXPECT_NEAR(s.real(), 0.0, 1e-12);
  EXPECT_NEAR(s.imag(), std::sqrt(2.0), 1e-12);
}

TEST(OrbitFn, MismatchedLevelIsRejected) {
  const auto c2 = build(Series::C, 2);
  try {
    eval_C_grid(c2, make_weight_point(c2, 4, {1, 1, 1}), make_grid_point(c2, 3, {1, 1, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MismatchedGrid);
  }
}

TEST(OrbitFn, CapIsEnforced) {
  const auto e8 = build(Series::E, 8);
  const auto lambda = make_weight_point(e8, 2, {0, 1, 0, 0, 0, 0, 0, 0, 0});
  const auto x = make_grid_point(e8, 2, {2, 0, 0, 0, 0, 0, 0, 0, 0});
  try {
    eval_C_grid(e8, lambda, x);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CapExceeded);
  }
}

TEST(OrbitFn, GridValuesMatchFullGroupSum) {
  for (const auto& c : cases::small_types()) {
    const auto data = cases::build(c);
    const auto st = oracle::structure(c.series, c.rank);
    const auto group = oracle::weyl_group(st);
    const double W = order_of(data);
    for (int M : {1, 3, 5, 7}) {
      const auto points = enumerate_F(data, M);
      for (const auto& w : enumerate_Lambda(data, M)) {
        for (const auto& x : points) {
          std::vector<long double> y;
          for (int s : x.coweight()) y.push_back(static_cast<long double>(s) / M);
          const auto want_c = oracle::full_sum(st, group, tail(w.t), y, false);
          const auto want_s = oracle::full_sum(st, group, tail(w.t), y, true);
          const auto got_c = eval_C_grid(data, w, x);
          const auto got_s = eval_S_grid(data, w, x);
          EXPECT_LE(std::abs(got_c - Complex(static_cast<double>(want_c.real()), static_cast<double>(want_c.imag()))),
                    1e-12 * W)
              << cases::name(c) << to_string(w) << to_string(x);
          EXPECT_LE(std::abs(got_s - Complex(static_cast<double>(want_s.real()), static_cast<double>(want_s.imag()))),
                    1e-12 * W)
              << cases::name(c) << to_string(w) << to_string(x);
        }
      }
    }
  }
}

TEST(OrbitFn, RealPathMatchesFullGroupSum) {
  std::mt19937 rng(3);
  for (const auto& c : cases::small_types()) {
    const auto data = cases::build(c);
    const auto st = oracle::structure(c.series, c.rank);
    const auto group = oracle::weyl_group(st);
    const double W = order_of(data);
    for (int trial = 0; trial < 40; ++trial) {
      const auto t = random_weight(rng, data.n, 0);
      const auto y = random_point(rng, data.n);
      for (auto kind : {FunctionKind::C, FunctionKind::S}) {
        const auto want = oracle::full_sum(st, group, t, as_long(y), kind == FunctionKind::S);
        const auto got = OrbitFunction(data, t, kind).at(y);
        EXPECT_LE(std::abs(got - Complex(static_cast<double>(want.real()), static_cast<double>(want.imag()))),
                  1e-11 * W);
      }
    }
  }
}

TEST(OrbitFn, CrossPathAgreementOnGrid) {
  const auto c2 = build(Series::C, 2);
  for (const auto& w : enumerate_Lambda(c2, 4))
    for (const auto& x : enumerate_F(c2, 4)) {
      EXPECT_LE(std::abs(eval_C_real(c2, w, to_real_point(x)) - eval_C_grid(c2, w, x)), 1e-12 * 8);
      EXPECT_LE(std::abs(eval_S_real(c2, w, to_real_point(x)) - eval_S_grid(c2, w, x)), 1e-12 * 8);
    }
}

TEST(OrbitFn, SymmetriesOfRealPath) {
  std::mt19937 rng(101);
  for (const auto& c : kSymmetryTypes) {
    const auto data = cases::build(c);
    const auto st = oracle::structure(c.series, c.rank);
    const double W = order_of(data);
    for (int trial = 0; trial < 30; ++trial) {
      const auto t = random_weight(rng, data.n, 0);
      const auto y = random_point(rng, data.n);
      const OrbitFunction C(data, t, FunctionKind::C);
      const OrbitFunction S(data, t, FunctionKind::S);
      const Complex c0 = C.at(y), s0 = S.at(y);
      for (int i = 1; i <= data.n; ++i) {
        const auto ry = reflect_coweight(data, i, std::span<const double>(y));
        EXPECT_LE(std::abs(C.at(ry) - c0), 1e-10 * W);
        EXPECT_LE(std::abs(S.at(ry) + s0), 1e-10 * W);
      }
      const auto r0y = affine_reflect_coweight(data, y);
      EXPECT_LE(std::abs(C.at(r0y) - c0), 1e-10 * W);
      EXPECT_LE(std::abs(S.at(r0y) + s0), 1e-10 * W);
      for (int j = 0; j < data.n; ++j) {
        auto shifted = y;
        for (int i = 0; i < data.n; ++i) {
          const auto q = st.coroot_in_coweights[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
          shifted[static_cast<std::size_t>(i)] += boost::rational_cast<double>(q);
        }
        EXPECT_LE(std::abs(C.at(shifted) - c0), 1e-12 * W);
        EXPECT_LE(std::abs(S.at(shifted) - s0), 1e-12 * W);
      }
    }
  }
}

TEST(OrbitFn, LabelSymmetry) {
  std::mt19937 rng(17);
  for (const auto& c : kSymmetryTypes) {
    const auto data = cases::build(c);
    const double W = order_of(data);
    for (int trial = 0; trial < 10; ++trial) {
      const auto t = random_weight(rng, data.n, 1);
      const auto y = random_point(rng, data.n);
      const Complex c0 = OrbitFunction(data, t, FunctionKind::C).at(y);
      const Complex s0 = OrbitFunction(data, t, FunctionKind::S).at(y);
      for (const auto& e : orbit(data, t, OrbitBasis::Weight).elements) {
        EXPECT_LE(std::abs(OrbitFunction(data, e.coords, FunctionKind::C).at(y) - c0), 1e-10 * W);
        EXPECT_LE(std::abs(OrbitFunction(data, e.coords, FunctionKind::S).at(y) - double(e.sign) * s0), 1e-10 * W);
      }
    }
  }
}

TEST(OrbitFn, DualAffineReflectionOnGrid) {
  for (const auto& c : kSymmetryTypes) {
    const auto data = cases::build(c);
    const double W = order_of(data);
    for (int M = data.coxeter; M <= data.coxeter + 2; ++M) {
      const RootTable roots(data.cartan_det * M);
      const auto points = enumerate_F(data, M);
      for (const auto& w : enumerate_Lambda(data, M, true)) {
        const auto reflected = affine_reflect_weight(data, w.weight(), M);
        const OrbitFunction c0(data, w.weight(), FunctionKind::C), c1(data, reflected, FunctionKind::C);
        const OrbitFunction s0(data, w.weight(), FunctionKind::S), s1(data, reflected, FunctionKind::S);
        for (const auto& x : points) {
          EXPECT_LE(std::abs(c1.at_grid(x.coweight(), M, roots) - c0.at_grid(x.coweight(), M, roots)), 1e-10 * W);
          EXPECT_LE(std::abs(s1.at_grid(x.coweight(), M, roots) + s0.at_grid(x.coweight(), M, roots)), 1e-10 * W);
        }
      }
    }
  }
}

TEST(OrbitFn, CFunctionsAreRealWhenMinusOneIsInW) {
  std::mt19937 rng(5);
  for (const auto& c : std::vector<cases::Case>{{'A', 1}, {'C', 2}, {'G', 2}, {'B', 3}, {'C', 3}}) {
    const auto data = cases::build(c);
    const double W = order_of(data);
    // -1 in W: the orbit of a regular point contains its negative.
    std::vector<int> rho(static_cast<std::size_t>(data.n), 1), minus(static_cast<std::size_t>(data.n), -1);
    bool has_minus = false;
    for (const auto& e : orbit(data, rho, OrbitBasis::Weight).elements) has_minus |= e.coords == minus;
    ASSERT_TRUE(has_minus) << cases::name(c);
    for (int trial = 0; trial < 50; ++trial) {
      const auto t = random_weight(rng, data.n, 0);
      const auto y = random_point(rng, data.n);
      EXPECT_LE(std::abs(OrbitFunction(data, t, FunctionKind::C).at(y).imag()), 1e-10 * W);
    }
  }
}

TEST(OrbitFn, SFunctionsVanishOnTheBoundary) {
  for (const auto& c : kSymmetryTypes) {
    const auto data = cases::build(c);
    const double W = order_of(data);
    for (int M = 1; M <= 8; ++M) {
      const auto boundary = [&] {
        std::vector<GridPoint> out;
        for (const auto& x : enumerate_F(data, M))
          if (!x.is_interior()) out.push_back(x);
        return out;
      }();
      for (const auto& w : enumerate_Lambda(data, M)) {
        for (const auto& x : boundary) {
          EXPECT_LE(std::abs(eval_S_grid(data, w, x)), 1e-9 * W);
          EXPECT_LE(std::abs(eval_S_real(data, w, to_real_point(x))), 1e-9 * W);
        }
        if (w.is_interior()) continue;
        for (const auto& x : enumerate_F(data, M, true)) EXPECT_EQ(eval_S_grid(data, w, x), Complex(0.0, 0.0));
      }
    }
  }
}

TEST(OrbitFn, MagnitudeBoundedByGroupOrder) {
  std::mt19937 rng(23);
  for (const auto& c : kSymmetryTypes) {
    const auto data = cases::build(c);
    const double W = order_of(data);
    for (int trial = 0; trial < 30; ++trial) {
      const auto t = random_weight(rng, data.n, 0);
      const auto y = random_point(rng, data.n);
      EXPECT_LE(std::abs(OrbitFunction(data, t, FunctionKind::C).at(y)), W * (1 + 1e-12));
      EXPECT_LE(std::abs(OrbitFunction(data, t, FunctionKind::S).at(y)), W * (1 + 1e-12));
    }
  }
}

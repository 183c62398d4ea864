#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

#include "cases.hpp"
#include "oracle.hpp"
#include "weylgrid/algebra.hpp"

using namespace weylgrid;
using oracle::Q;

namespace {

class AlgebraVsOracle : public ::testing::TestWithParam<cases::Case> {};

std::vector<oracle::Q> vec_times_gram(const oracle::QMatrix& g, const std::vector<Q>& coeffs) {
  std::vector<Q> out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) out[i] += coeffs[j] * g[j][i];
  return out;
}

// Extended diagram drawn from explicit node vectors given as coefficient rows
// over the simple roots.
DynkinDiagram diagram_from_vectors(const oracle::QMatrix& g, const std::vector<std::vector<Q>>& nodes) {
  const std::size_t k = nodes.size();
  std::vector<std::vector<Q>> ip(k, std::vector<Q>(k));
  for (std::size_t a = 0; a < k; ++a) {
    const auto ga = vec_times_gram(g, nodes[a]);
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t i = 0; i < g.size(); ++i) ip[a][b] += ga[i] * nodes[b][i];
  }
  DynkinDiagram d;
  d.bonds = IntMatrix(k, k, 0);
  Q longest = 0;
  for (std::size_t a = 0; a < k; ++a) longest = std::max(longest, ip[a][a]);
  for (std::size_t a = 0; a < k; ++a) {
    d.lengths.push_back(ip[a][a] == longest ? RootLength::Long : RootLength::Short);
    for (std::size_t b = 0; b < k; ++b) {
      if (a == b) continue;
      const Q bond = 4 * ip[a][b] * ip[a][b] / (ip[a][a] * ip[b][b]);
      EXPECT_EQ(bond.denominator(), 1);
      d.bonds(a, b) = bond.numerator();
    }
  }
  return d;
}

}  // namespace

TEST_P(AlgebraVsOracle, StructureMatchesEuclideanRealisation) {
  const auto c = GetParam();
  const AlgebraData data = cases::build(c);
  const oracle::Structure st = oracle::structure(c.series, c.rank);
  const auto n = static_cast<std::size_t>(c.rank);

  ASSERT_EQ(data.n, c.rank);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(data.cartan(i, j), st.cartan[i][j]) << i << "," << j;
  EXPECT_EQ(data.cartan_det, st.center);
  EXPECT_EQ(data.marks, st.marks);
  EXPECT_EQ(data.dual_marks, st.dual_marks);
  EXPECT_EQ(data.coxeter, st.coxeter);
  EXPECT_EQ(data.weyl_order, BigInt(st.weyl_order));
  for (std::size_t i = 0; i < n; ++i) {
    EXPECT_EQ(data.root_norms[i].numerator(), st.gram[i][i].numerator());
    EXPECT_EQ(data.root_norms[i].denominator(), st.gram[i][i].denominator());
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Q expected = st.pairing[i][j];
      EXPECT_EQ(Q(data.pairing_num(i, j), data.cartan_det), expected) << i << "," << j;
    }
}

TEST_P(AlgebraVsOracle, ExtendedDiagramsMatchNodeVectors) {
  const auto c = GetParam();
  const AlgebraData data = cases::build(c);
  const oracle::Structure st = oracle::structure(c.series, c.rank);
  const auto n = static_cast<std::size_t>(c.rank);

  std::vector<std::vector<Q>> roots(n + 1, std::vector<Q>(n));
  std::vector<std::vector<Q>> coroots(n + 1, std::vector<Q>(n));
  for (std::size_t j = 0; j < n; ++j) {
    roots[0][j] = -st.marks[j];
    roots[j + 1][j] = 1;
    const Q scale = Q(2) / st.gram[j][j];
    coroots[0][j] = -st.dual_marks[j] * scale;
    coroots[j + 1][j] = scale;
  }
  const DynkinDiagram dd = diagram_from_vectors(st.gram, roots);
  const DynkinDiagram dual = diagram_from_vectors(st.gram, coroots);
  EXPECT_EQ(data.ext_dd.bonds, dd.bonds);
  EXPECT_EQ(data.ext_dd.lengths, dd.lengths);
  EXPECT_EQ(data.ext_dd_dual.bonds, dual.bonds);
  EXPECT_EQ(data.ext_dd_dual.lengths, dual.lengths);
}

TEST_P(AlgebraVsOracle, HighestRootCoordinates) {
  const auto c = GetParam();
  const AlgebraData data = cases::build(c);
  const oracle::Structure st = oracle::structure(c.series, c.rank);
  const auto n = static_cast<std::size_t>(c.rank);

  std::vector<Q> xi(n);
  for (std::size_t j = 0; j < n; ++j) xi[j] = st.marks[j];
  const auto xi_coords = vec_times_gram(st.gram, xi);  // <xi, alpha_i>
  const auto got = highest_root_coweight_coords(data);
  ASSERT_EQ(got.size(), n);
  for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(Q(got[i]), xi_coords[i]);

  std::vector<Q> eta(n);
  for (std::size_t j = 0; j < n; ++j) eta[j] = st.dual_marks[j] * Q(2) / st.gram[j][j];
  const auto eta_g = vec_times_gram(st.gram, eta);
  Q eta_sq = 0;
  for (std::size_t i = 0; i < n; ++i) eta_sq += eta_g[i] * eta[i];
  const auto got_dual = highest_dual_root_weight_coords(data);
  ASSERT_EQ(got_dual.size(), n);
  for (std::size_t i = 0; i < n; ++i) {
    const Q expected = Q(2) / eta_sq * eta_g[i] * Q(2) / st.gram[i][i];  // <2 eta/|eta|^2, alpha^v_i>
    EXPECT_EQ(Q(got_dual[i]), expected) << i;
  }
}

TEST_P(AlgebraVsOracle, LAndNFromMarks) {
  const AlgebraData data = cases::build(GetParam());
  int L = 1;
  for (int m : data.marks) L = std::lcm(L, m);
  EXPECT_EQ(data.L, L);
  const int excess = (data.n + 1) * L - data.coxeter;
  EXPECT_EQ(data.N, excess / L);
}

INSTANTIATE_TEST_SUITE_P(AllTypes, AlgebraVsOracle, ::testing::ValuesIn(cases::all_types()),
                         [](const auto& info) { return cases::name(info.param); });

TEST(Algebra, MarksTable) {
  EXPECT_EQ(build(Series::E, 6).marks, (std::vector<int>{1, 2, 3, 2, 1, 2}));
  EXPECT_EQ(build(Series::E, 7).marks, (std::vector<int>{2, 3, 4, 3, 2, 1, 2}));
  EXPECT_EQ(build(Series::E, 8).marks, (std::vector<int>{2, 3, 4, 5, 6, 4, 2, 3}));
  EXPECT_EQ(build(Series::F, 4).marks, (std::vector<int>{2, 3, 4, 2}));
  EXPECT_EQ(build(Series::F, 4).dual_marks, (std::vector<int>{2, 4, 3, 2}));
  EXPECT_EQ(build(Series::G, 2).marks, (std::vector<int>{2, 3}));
  EXPECT_EQ(build(Series::G, 2).dual_marks, (std::vector<int>{3, 2}));
  EXPECT_EQ(build(Series::B, 5).marks, (std::vector<int>{1, 2, 2, 2, 2}));
  EXPECT_EQ(build(Series::B, 5).dual_marks, (std::vector<int>{2, 2, 2, 2, 1}));
  EXPECT_EQ(build(Series::C, 4).marks, (std::vector<int>{2, 2, 2, 1}));
  EXPECT_EQ(build(Series::C, 4).dual_marks, (std::vector<int>{1, 2, 2, 2}));
  EXPECT_EQ(build(Series::D, 6).marks, (std::vector<int>{1, 2, 2, 2, 1, 1}));
}

TEST(Algebra, PairingExamples) {
  const auto a1 = build(Series::A, 1);
  const int one[] = {1};
  EXPECT_EQ(pairing(a1, one, one), Rational(1, 2));

  // <omega_1, omega^v_2> for C2 is (C^-1)_12 = 1/2.
  const auto c2 = build(Series::C, 2);
  const int t[] = {1, 0};
  const int s[] = {0, 1};
  EXPECT_EQ(pairing(c2, t, s), Rational(1, 2));
  EXPECT_EQ(pairing(c2, s, t), Rational(1, 1));
}

TEST(Algebra, VolumeClosedForms) {
  auto fact = [](int n) {
    double f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  auto close = [](double got, double want) { EXPECT_NEAR(got / want, 1.0, 1e-12) << got << " vs " << want; };
  for (int n = 1; n <= 8; ++n) close(volume_of_F(build(Series::A, n)), 1.0 / (fact(n) * std::sqrt(n + 1.0)));
  for (int n = 3; n <= 8; ++n) close(volume_of_F(build(Series::B, n)), 1.0 / (fact(n) * std::pow(2.0, n - 1)));
  for (int n = 2; n <= 8; ++n) close(volume_of_F(build(Series::C, n)), 1.0 / (fact(n) * std::pow(2.0, n / 2.0)));
  for (int n = 4; n <= 8; ++n) close(volume_of_F(build(Series::D, n)), 1.0 / (fact(n) * std::pow(2.0, n - 2)));
  close(volume_of_F(build(Series::E, 6)), std::sqrt(3.0) / 51840.0);
  close(volume_of_F(build(Series::E, 7)), std::sqrt(2.0) / 2903040.0);
  close(volume_of_F(build(Series::E, 8)), 1.0 / 696729600.0);
  close(volume_of_F(build(Series::F, 4)), 1.0 / 576.0);
  close(volume_of_F(build(Series::G, 2)), std::sqrt(3.0) / 12.0);
}

TEST(Algebra, RankBoundsAreEnforced) {
  auto code_of = [](Series s, int n) {
    try {
      make_lie_type(s, n);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Internal;
  };
  EXPECT_EQ(code_of(Series::A, 0), ErrorCode::InvalidRank);
  EXPECT_EQ(code_of(Series::B, 2), ErrorCode::InvalidRank);
  EXPECT_EQ(code_of(Series::C, 1), ErrorCode::InvalidRank);
  EXPECT_EQ(code_of(Series::D, 3), ErrorCode::InvalidRank);
  EXPECT_EQ(code_of(Series::E, 5), ErrorCode::InvalidRank);
  EXPECT_EQ(code_of(Series::E, 9), ErrorCode::InvalidRank);
  EXPECT_EQ(code_of(Series::F, 3), ErrorCode::InvalidRank);
  EXPECT_EQ(code_of(Series::G, 3), ErrorCode::InvalidRank);
  EXPECT_NO_THROW(make_lie_type(Series::B, 3));
}

TEST(Algebra, SeriesParsing) {
  EXPECT_EQ(parse_series("e"), Series::E);
  EXPECT_EQ(series_letter(Series::G), 'G');
  EXPECT_EQ(to_string(make_lie_type(Series::D, 5)), "D5");
  EXPECT_THROW(parse_series("H"), Error);
}

#include "weylgrid/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <utility>

namespace weylgrid {
namespace {

// Simple-root data in Fig. 1 numbering, nodes 1..n stored at 0..n-1.
struct Shape {
  std::vector<std::pair<int, int>> edges;  // 1-based node pairs
  std::vector<Rational> norms;
  std::vector<int> marks;
  std::vector<int> dual_marks;
  BigInt weyl_order;
};

BigInt factorial(int k) {
  BigInt f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

std::vector<std::pair<int, int>> chain(int from, int to) {
  std::vector<std::pair<int, int>> edges;
  for (int i = from; i < to; ++i) edges.emplace_back(i, i + 1);
  return edges;
}

Shape shape_of(LieType type) {
  const int n = type.rank;
  Shape s;
  s.norms.assign(static_cast<std::size_t>(n), Rational(2));
  switch (type.series) {
    case Series::A:
      s.edges = chain(1, n);
      s.marks.assign(n, 1);
      s.dual_marks = s.marks;
      s.weyl_order = factorial(n + 1);
      break;
    case Series::B:
      s.edges = chain(1, n);
      s.norms[n - 1] = 1;
      s.marks.assign(n, 2);
      s.marks[0] = 1;
      s.dual_marks.assign(n, 2);
      s.dual_marks[n - 1] = 1;
      s.weyl_order = (BigInt(1) << n) * factorial(n);
      break;
    case Series::C:
      s.edges = chain(1, n);
      std::fill(s.norms.begin(), s.norms.end() - 1, Rational(1));
      s.marks.assign(n, 2);
      s.marks[n - 1] = 1;
      s.dual_marks.assign(n, 2);
      s.dual_marks[0] = 1;
      s.weyl_order = (BigInt(1) << n) * factorial(n);
      break;
    case Series::D:
      s.edges = chain(1, n - 2);
      s.edges.emplace_back(n - 2, n - 1);
      s.edges.emplace_back(n - 2, n);
      s.marks.assign(n, 2);
      s.marks[0] = s.marks[n - 2] = s.marks[n - 1] = 1;
      s.dual_marks = s.marks;
      s.weyl_order = (BigInt(1) << (n - 1)) * factorial(n);
      break;
    case Series::E:
      if (n == 6) {
        s.edges = chain(1, 5);
        s.edges.emplace_back(3, 6);
        s.marks = {1, 2, 3, 2, 1, 2};
        s.weyl_order = 51840;
      } else if (n == 7) {
        s.edges = chain(1, 6);
        s.edges.emplace_back(3, 7);
        s.marks = {2, 3, 4, 3, 2, 1, 2};
        s.weyl_order = 2903040;
      } else {
        s.edges = chain(1, 7);
        s.edges.emplace_back(5, 8);
        s.marks = {2, 3, 4, 5, 6, 4, 2, 3};
        s.weyl_order = 696729600;
      }
      s.dual_marks = s.marks;
      break;
    case Series::F:
      s.edges = chain(1, 4);
      s.norms[2] = s.norms[3] = 1;
      s.marks = {2, 3, 4, 2};
      s.dual_marks = {2, 4, 3, 2};
      s.weyl_order = 1152;
      break;
    case Series::G:
      s.edges = {{1, 2}};
      s.norms[1] = Rational(2, 3);
      s.marks = {2, 3};
      s.dual_marks = {3, 2};
      s.weyl_order = 12;
      break;
  }
  return s;
}

std::int64_t determinant(const IntMatrix& m) {
  // Bareiss fraction-free elimination; every division is exact.
  const std::size_t n = m.rows();
  IntMatrix a = m;
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Matrix<Rational> inverse(const IntMatrix& m) {
  const std::size_t n = m.rows();
  Matrix<Rational> a(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = Rational(m(i, j));
    a(i, n + i) = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (a(pivot, col).numerator() == 0) ++pivot;
    if (pivot != col)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(a(col, j), a(pivot, j));
    const Rational p = a(col, col);
    for (std::size_t j = 0; j < 2 * n; ++j) a(col, j) /= p;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col).numerator() == 0) continue;
      const Rational f = a(i, col);
      for (std::size_t j = 0; j < 2 * n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  Matrix<Rational> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = a(i, n + j);
  return inv;
}

std::int64_t as_integer(const Rational& r) {
  if (r.denominator() != 1) throw Error(ErrorCode::Internal, "expected an integral value");
  return r.numerator();
}

// Extended diagram of the root system with Cartan matrix `k` (k_ij = 2(a_i,a_j)/(a_j,a_j)),
// squared lengths `norms`, and highest root sum mu_i a_i.
DynkinDiagram extended_diagram(const IntMatrix& k, const std::vector<Rational>& norms,
                               const std::vector<int>& mu) {
  const std::size_t n = k.rows();
  auto gram = [&](std::size_t i, std::size_t j) { return Rational(k(i, j)) * norms[j] / 2; };

  Rational theta_sq = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) theta_sq += Rational(mu[i] * mu[j]) * gram(i, j);

  const Rational longest = *std::max_element(norms.begin(), norms.end());
  DynkinDiagram d;
  d.bonds = IntMatrix(n + 1, n + 1, 0);
  d.lengths.resize(n + 1);
  d.lengths[0] = theta_sq == longest ? RootLength::Long : RootLength::Short;
  for (std::size_t i = 0; i < n; ++i) {
    d.lengths[i + 1] = norms[i] == longest ? RootLength::Long : RootLength::Short;
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) d.bonds(i + 1, j + 1) = k(i, j) * k(j, i);
  }
  for (std::size_t j = 0; j < n; ++j) {
    Rational a0j = 0;  // 2(a_0, a_j) / (a_j, a_j)
    Rational aj0 = 0;  // 2(a_j, a_0) / (a_0, a_0)
    for (std::size_t i = 0; i < n; ++i) {
      a0j -= Rational(mu[i] * k(i, j));
      aj0 -= Rational(2 * mu[i]) * gram(j, i) / theta_sq;
    }
    const std::int64_t bond = as_integer(a0j * aj0);
    d.bonds(0, j + 1) = d.bonds(j + 1, 0) = bond;
  }
  return d;
}

}  // namespace

LieType make_lie_type(Series series, int rank) {
  bool ok = false;
  const char* range = "";
  switch (series) {
    case Series::A: ok = rank >= 1; range = "n >= 1"; break;
    case Series::B: ok = rank >= 3; range = "n >= 3 (use C_2 for rank 2)"; break;
    case Series::C: ok = rank >= 2; range = "n >= 2"; break;
    case Series::D: ok = rank >= 4; range = "n >= 4"; break;
    case Series::E: ok = rank >= 6 && rank <= 8; range = "n in {6, 7, 8}"; break;
    case Series::F: ok = rank == 4; range = "n = 4"; break;
    case Series::G: ok = rank == 2; range = "n = 2"; break;
  }
  if (!ok)
    throw Error(ErrorCode::InvalidRank, std::string("rank ") + std::to_string(rank) + " out of range for series " +
                                            series_letter(series) + ": " + range);
  return LieType{series, rank};
}

Series parse_series(std::string_view letter) {
  if (letter.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(letter[0]))) {
      case 'A': return Series::A;
      case 'B': return Series::B;
      case 'C': return Series::C;
      case 'D': return Series::D;
      case 'E': return Series::E;
      case 'F': return Series::F;
      case 'G': return Series::G;
      default: break;
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown series '" + std::string(letter) + "' (expected A-G)");
}

char series_letter(Series series) noexcept { return "ABCDEFG"[static_cast<int>(series)]; }

std::string to_string(const LieType& type) { return series_letter(type.series) + std::to_string(type.rank); }

std::vector<int> DynkinDiagram::neighbours(int node) const {
  std::vector<int> out;
  for (std::size_t j = 0; j < node_count(); ++j)
    if (bonds(static_cast<std::size_t>(node), j) != 0) out.push_back(static_cast<int>(j));
  return out;
}

AlgebraData build(LieType type) {
  type = make_lie_type(type.series, type.rank);
  Shape shape = shape_of(type);
  const int n = type.rank;

  AlgebraData d;
  d.lie_type = type;
  d.n = n;
  d.root_norms = shape.norms;
  d.marks = shape.marks;
  d.dual_marks = shape.dual_marks;
  d.weyl_order = shape.weyl_order;

  d.cartan = IntMatrix(n, n, 0);
  for (int i = 0; i < n; ++i) d.cartan(i, i) = 2;
  for (auto [a, b] : shape.edges) {
    const std::size_t i = static_cast<std::size_t>(a - 1);
    const std::size_t j = static_cast<std::size_t>(b - 1);
    // Adjacent simple roots meet with (a_i, a_j) = -(longer squared length) / 2.
    const Rational inner = -std::max(d.root_norms[i], d.root_norms[j]) / 2;
    d.cartan(i, j) = as_integer(2 * inner / d.root_norms[j]);
    d.cartan(j, i) = as_integer(2 * inner / d.root_norms[i]);
  }
  d.cartan_det = determinant(d.cartan);

  const Matrix<Rational> inv = inverse(d.cartan);
  d.pairing_num = IntMatrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d.pairing_num(i, j) = as_integer(inv(i, j) * d.cartan_det);

  d.coxeter = 1 + std::accumulate(d.marks.begin(), d.marks.end(), 0);
  d.L = std::accumulate(d.marks.begin(), d.marks.end(), 1, [](int a, int b) { return std::lcm(a, b); });
  d.N = ((n + 1) * d.L - d.coxeter) / d.L;

  d.ext_dd = extended_diagram(d.cartan, d.root_norms, d.marks);
  std::vector<Rational> dual_norms;
  dual_norms.reserve(d.root_norms.size());
  for (const auto& v : d.root_norms) dual_norms.push_back(Rational(4) / v);
  d.ext_dd_dual = extended_diagram(d.cartan.transposed(), dual_norms, d.dual_marks);
  return d;
}

Rational pairing(const AlgebraData& data, std::span<const int> t, std::span<const int> s) {
  if (t.size() != static_cast<std::size_t>(data.n) || s.size() != static_cast<std::size_t>(data.n))
    throw Error(ErrorCode::InvalidArgument, "pairing expects two vectors of length " + std::to_string(data.n));
  std::int64_t acc = 0;
  for (int i = 0; i < data.n; ++i)
    for (int j = 0; j < data.n; ++j) acc += std::int64_t{t[i]} * data.pairing_num(i, j) * s[j];
  return Rational(acc, data.cartan_det);
}

double volume_of_F(const AlgebraData& data) {
  long double v = 1.0L;
  for (int i = 1; i <= data.n; ++i) v /= i;
  long double lengths = 1.0L;
  for (int i = 0; i < data.n; ++i) {
    v /= data.marks[i];
    const Rational r = Rational(2) / data.root_norms[i];
    lengths *= static_cast<long double>(r.numerator()) / r.denominator();
  }
  return static_cast<double>(v * std::sqrt(lengths) / std::sqrt(static_cast<long double>(data.cartan_det)));
}

std::vector<int> highest_root_coweight_coords(const AlgebraData& data) {
  std::vector<int> out(data.n);
  for (int j = 0; j < data.n; ++j) {
    Rational acc = 0;
    for (int i = 0; i < data.n; ++i) acc += Rational(data.marks[i]) * data.root_norms[i] / 2 * data.cartan(j, i);
    out[j] = static_cast<int>(as_integer(acc));
  }
  return out;
}

std::vector<int> highest_dual_root_weight_coords(const AlgebraData& data) {
  const int n = data.n;
  std::vector<Rational> eta(n, Rational(0));
  Rational eta_sq = 0;
  for (int i = 0; i < n; ++i) {
    const Rational scale = Rational(2 * data.dual_marks[i]) / data.root_norms[i];
    for (int j = 0; j < n; ++j) {
      eta[j] += scale * data.cartan(i, j);
      eta_sq += scale * data.dual_marks[j] * data.cartan(i, j);
    }
  }
  std::vector<int> out(n);
  for (int j = 0; j < n; ++j) out[j] = static_cast<int>(as_integer(2 * eta[j] / eta_sq));
  return out;
}

}  // namespace weylgrid

#include "weylgrid/grids.hpp"

#include <algorithm>

#include "appendix_tables.hpp"

namespace weylgrid {
namespace {

void require_positive(int M) {
  if (M < 1) throw Error(ErrorCode::InvalidArgument, "M must be a positive integer, got " + std::to_string(M));
}

// Solutions of c_0 + sum w_i c_i = total (c_0 has weight 1), descending lexicographic.
std::vector<std::vector<int>> barycentric_solutions(const std::vector<int>& marks, int total, bool interior) {
  std::vector<int> weights{1};
  weights.insert(weights.end(), marks.begin(), marks.end());
  const int lo = interior ? 1 : 0;
  const std::size_t last = weights.size() - 1;

  std::vector<std::vector<int>> out;
  std::vector<int> current(weights.size(), 0);
  auto recurse = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (i == last) {
      if (remaining % weights[i] == 0 && remaining / weights[i] >= lo) {
        current[i] = remaining / weights[i];
        out.push_back(current);
      }
      return;
    }
    // Room left for the minimum of every later coordinate.
    int reserve = 0;
    for (std::size_t j = i + 1; j < weights.size(); ++j) reserve += lo * weights[j];
    for (int v = (remaining - reserve) / weights[i]; v >= lo; --v) {
      current[i] = v;
      self(self, i + 1, remaining - v * weights[i]);
    }
  };
  if (total >= 0) recurse(recurse, 0, total);
  return out;
}

int moebius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

}  // namespace

std::vector<GridPoint> enumerate_F(const AlgebraData& data, int M, bool interior_only) {
  require_positive(M);
  std::vector<GridPoint> out;
  for (auto& s : barycentric_solutions(data.marks, M, interior_only)) out.push_back(GridPoint{M, std::move(s)});
  return out;
}

std::vector<WeightPoint> enumerate_Lambda(const AlgebraData& data, int M, bool interior_only) {
  require_positive(M);
  std::vector<WeightPoint> out;
  for (auto& t : barycentric_solutions(data.dual_marks, M, interior_only)) out.push_back(WeightPoint{M, std::move(t)});
  return out;
}

BigInt count_F(const AlgebraData& data, int M) {
  require_positive(M);
  const std::int64_t n = data.n;
  const std::int64_t k = M / 2;
  switch (data.lie_type.series) {
    case Series::A:
      return binomial(n + M, n);
    case Series::B:
    case Series::C:
      if (M % 2 == 0) return binomial(n + k, n) + binomial(n + k - 1, n);
      return 2 * binomial(n + k, n);
    case Series::D:
      if (M % 2 == 0) return binomial(n + k, n) + 6 * binomial(n + k - 1, n) + binomial(n + k - 2, n);
      return 4 * binomial(n + k, n) + 4 * binomial(n + k - 1, n);
    default: {
      const auto r = detail::stored_r_matrix(data.lie_type);
      const std::int64_t q = M / data.L;
      const std::size_t l = static_cast<std::size_t>(M % data.L);
      BigInt total = 0;
      for (std::size_t i = 0; i < r.cols(); ++i) total += r(l, i) * binomial(n - static_cast<std::int64_t>(i) + q, n);
      return total;
    }
  }
}

BigInt count_F_interior(const AlgebraData& data, int M) {
  require_positive(M);
  if (M < data.coxeter) return 0;
  if (M == data.coxeter) return 1;
  return count_F(data, M - data.coxeter);
}

BigInt count_weighted_compositions(std::span<const int> weights, int total) {
  if (total < 0) return 0;
  std::vector<BigInt> ways(static_cast<std::size_t>(total) + 1, BigInt(1));  // a_0 alone: one way each
  for (int w : weights) {
    if (w < 1) throw Error(ErrorCode::InvalidArgument, "composition weights must be positive");
    for (int v = w; v <= total; ++v) ways[v] += ways[v - w];
  }
  return ways[static_cast<std::size_t>(total)];
}

BigInt count_Lambda(const AlgebraData& data, int M) {
  require_positive(M);
  return count_weighted_compositions(data.dual_marks, M);
}

BigInt count_Lambda_interior(const AlgebraData& data, int M) {
  require_positive(M);
  int shift = 1;
  for (int m : data.dual_marks) shift += m;
  return count_weighted_compositions(data.dual_marks, M - shift);
}

RMatrix generate_R(const AlgebraData& data) {
  const int L = data.L;
  // Generating function of the box l_0 < L, l_j < L / m_j, graded by l_0 + sum m_j l_j.
  std::vector<BigInt> poly(static_cast<std::size_t>(L), BigInt(1));
  for (int m : data.marks) {
    const int terms = L / m;
    std::vector<BigInt> next(poly.size() + static_cast<std::size_t>((terms - 1) * m), BigInt(0));
    for (std::size_t d = 0; d < poly.size(); ++d) {
      if (poly[d] == 0) continue;
      for (int a = 0; a < terms; ++a) next[d + static_cast<std::size_t>(a * m)] += poly[d];
    }
    poly = std::move(next);
  }
  RMatrix r{Matrix<BigInt>(static_cast<std::size_t>(L), static_cast<std::size_t>(data.N) + 1, BigInt(0))};
  for (int l = 0; l < L; ++l)
    for (int i = 0; i <= data.N; ++i) {
      const std::size_t degree = static_cast<std::size_t>(L * i + l);
      if (degree < poly.size()) r.rows(l, i) = poly[degree];
    }
  return r;
}

RMatrix appendix_R(const AlgebraData& data) { return RMatrix{detail::stored_r_matrix(data.lie_type)}; }

std::vector<int> divisors(int M) {
  require_positive(M);
  std::vector<int> small, large;
  for (int d = 1; d * d <= M; ++d) {
    if (M % d != 0) continue;
    small.push_back(d);
    if (d != M / d) large.push_back(M / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

BigInt count_primitive(const AlgebraData& data, int M) {
  // |F_M| = sum_{d | M} |F_{d,1}|, inverted by Moebius.
  BigInt total = 0;
  for (int d : divisors(M)) {
    const int mu = moebius(M / d);
    if (mu != 0) total += mu * count_F(data, d);
  }
  return total;
}

std::map<int, BigInt> stratify_gcd(const AlgebraData& data, int M) {
  std::map<int, BigInt> out;
  for (int K : divisors(M)) out.emplace(K, count_primitive(data, M / K));
  return out;
}

BigInt nu(const AlgebraData& data, int M) {
  require_positive(M);
  if (M == 1) return 1;
  const auto& type = data.lie_type;
  const bool ad_order_is_order = type.series == Series::G || type.series == Series::F ||
                                 (type.series == Series::E && type.rank == 8);
  if (ad_order_is_order) {
    BigInt total = 0;
    for (int K : divisors(M)) total += count_primitive(data, K);
    return total;
  }
  if (type.series == Series::C) return binomial(data.n + M / 2, data.n);
  throw Error(ErrorCode::Unsupported,
              "nu(M, " + to_string(type) + ") needs full-order data that is only available for C_n, G_2, F_4, E_8");
}

}  // namespace weylgrid

#include "weylgrid/lattice.hpp"

#include <tuple>

namespace weylgrid {
namespace {

std::tuple<std::int64_t, std::int64_t, std::int64_t> extended_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_x = 1, x = 0, old_y = 0, y = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_tuple(r, old_r - q * r);
    std::tie(old_x, x) = std::make_tuple(x, old_x - q * x);
    std::tie(old_y, y) = std::make_tuple(y, old_y - q * y);
  }
  return {old_r, old_x, old_y};
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

IntMatrix column_hnf(IntMatrix a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw Error(ErrorCode::Internal, "column_hnf expects a square matrix");
  auto combine = [&](std::size_t ci, std::size_t cj, std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s) {
    // (col_i, col_j) <- (p col_i + q col_j, r col_i + s col_j)
    for (std::size_t row = 0; row < n; ++row) {
      const std::int64_t u = a(row, ci);
      const std::int64_t v = a(row, cj);
      a(row, ci) = p * u + q * v;
      a(row, cj) = r * u + s * v;
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::int64_t x = a(i, i);
      const std::int64_t y = a(i, j);
      if (y == 0) continue;
      auto [g, p, q] = extended_gcd(x, y);
      combine(i, j, p, q, -y / g, x / g);
    }
    if (a(i, i) == 0) throw Error(ErrorCode::Internal, "lattice generators are singular");
    if (a(i, i) < 0)
      for (std::size_t row = 0; row < n; ++row) a(row, i) = -a(row, i);
    for (std::size_t j = 0; j < i; ++j) {
      const std::int64_t q = floor_div(a(i, j), a(i, i));
      if (q == 0) continue;
      for (std::size_t row = 0; row < n; ++row) a(row, j) -= q * a(row, i);
    }
  }
  return a;
}

LatticeReducer::LatticeReducer(const IntMatrix& generators) : hnf_(column_hnf(generators)) {}

std::vector<std::int64_t> LatticeReducer::reduce(std::span<const std::int64_t> v) const {
  std::vector<std::int64_t> out(v.begin(), v.end());
  const std::size_t n = hnf_.rows();
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t q = floor_div(out[i], hnf_(i, i));
    if (q == 0) continue;
    for (std::size_t row = i; row < n; ++row) out[row] -= q * hnf_(row, i);
  }
  return out;
}

bool LatticeReducer::congruent(std::span<const std::int64_t> a, std::span<const std::int64_t> b) const {
  return reduce(a) == reduce(b);
}

std::int64_t LatticeReducer::index() const {
  std::int64_t det = 1;
  for (std::size_t i = 0; i < hnf_.rows(); ++i) det *= hnf_(i, i);
  return det;
}

}  // namespace weylgrid

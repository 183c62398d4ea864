#include "weylgrid/orbitfn.hpp"

#include <cmath>
#include <numbers>

namespace weylgrid {

RealPoint to_real_point(const GridPoint& p) {
  RealPoint r;
  for (int v : p.coweight()) r.y.push_back(static_cast<double>(v) / p.M);
  return r;
}

RootTable::RootTable(std::int64_t order) {
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "root table order must be positive");
  roots_.resize(static_cast<std::size_t>(order));
  const long double turn = 2.0L * std::numbers::pi_v<long double> / static_cast<long double>(order);
  for (std::int64_t k = 0; k < order; ++k) {
    const long double angle = turn * static_cast<long double>(k);
    roots_[static_cast<std::size_t>(k)] =
        Complex(static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle)));
  }
}

OrbitFunction::OrbitFunction(const AlgebraData& data, std::span<const int> weight, FunctionKind kind,
                             std::uint64_t cap)
    : n_(data.n), c_(data.cartan_det), kind_(kind), pairing_num_(data.pairing_num) {
  const Orbit orb = orbit(data, weight, OrbitBasis::Weight, cap);
  const auto group_order = static_cast<std::uint64_t>(data.weyl_order);
  stabilizer_ = group_order / orb.size();
  // A non-trivial weight stabiliser is generated by reflections, so the S sum cancels.
  zero_ = kind == FunctionKind::S && stabilizer_ != 1;
  if (!zero_) {
    coords_.reserve(orb.size() * static_cast<std::size_t>(n_));
    signs_.reserve(orb.size());
    for (const auto& el : orb.elements) {
      coords_.insert(coords_.end(), el.coords.begin(), el.coords.end());
      signs_.push_back(kind == FunctionKind::S ? el.sign : 1);
    }
  }
  cartan_inverse_ = Matrix<double>(static_cast<std::size_t>(n_), static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      cartan_inverse_(i, j) = static_cast<double>(pairing_num_(i, j)) / static_cast<double>(c_);
}

Complex OrbitFunction::at_grid(std::span<const int> coweight_numerators, int M, const RootTable& roots) const {
  if (roots.order() != c_ * M)
    throw Error(ErrorCode::InvalidArgument, "root table order must equal c*M = " + std::to_string(c_ * M));
  if (coweight_numerators.size() != static_cast<std::size_t>(n_))
    throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(n_) + " coweight coordinates");
  if (zero_) return {0.0, 0.0};

  // <mu, x> = mu^T (c C^-1) s / (cM): an exact integer count of (cM)-th turns.
  std::vector<std::int64_t> ps(static_cast<std::size_t>(n_), 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) ps[i] += pairing_num_(i, j) * coweight_numerators[j];

  Complex sum{0.0, 0.0};
  const std::size_t count = signs_.size();
  for (std::size_t e = 0; e < count; ++e) {
    const int* mu = coords_.data() + e * static_cast<std::size_t>(n_);
    std::int64_t phase = 0;
    for (int i = 0; i < n_; ++i) phase += mu[i] * ps[i];
    const Complex& root = roots[phase];
    sum += signs_[e] > 0 ? root : -root;
  }
  return sum * static_cast<double>(stabilizer_);
}

Complex OrbitFunction::at(std::span<const double> y) const {
  if (y.size() != static_cast<std::size_t>(n_))
    throw Error(ErrorCode::InvalidArgument, "expected a real point with " + std::to_string(n_) + " coordinates");
  if (zero_) return {0.0, 0.0};

  std::vector<double> z(static_cast<std::size_t>(n_), 0.0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) z[i] += cartan_inverse_(i, j) * y[j];

  Complex sum{0.0, 0.0};
  const std::size_t count = signs_.size();
  for (std::size_t e = 0; e < count; ++e) {
    const int* mu = coords_.data() + e * static_cast<std::size_t>(n_);
    double turns = 0.0;
    for (int i = 0; i < n_; ++i) turns += mu[i] * z[i];
    turns -= std::floor(turns);
    const double angle = 2.0 * std::numbers::pi * turns;
    const Complex term(std::cos(angle), std::sin(angle));
    sum += signs_[e] > 0 ? term : -term;
  }
  return sum * static_cast<double>(stabilizer_);
}

namespace {

Complex eval_grid(const AlgebraData& data, const WeightPoint& lambda, const GridPoint& x, FunctionKind kind,
                  std::uint64_t cap) {
  validate(data, lambda);
  validate(data, x);
  if (lambda.M != x.M)
    throw Error(ErrorCode::MismatchedGrid, "weight has M = " + std::to_string(lambda.M) + " but grid point has M = " +
                                               std::to_string(x.M));
  require_within_cap(data, cap);
  if (kind == FunctionKind::S && !lambda.is_interior()) return {0.0, 0.0};
  const OrbitFunction f(data, lambda.weight(), kind, cap);
  const RootTable roots(data.cartan_det * x.M);
  return f.at_grid(x.coweight(), x.M, roots);
}

Complex eval_real(const AlgebraData& data, const WeightPoint& lambda, const RealPoint& y, FunctionKind kind,
                  std::uint64_t cap) {
  validate(data, lambda);
  return OrbitFunction(data, lambda.weight(), kind, cap).at(y.y);
}

}  // namespace

Complex eval_C_grid(const AlgebraData& data, const WeightPoint& lambda, const GridPoint& x, std::uint64_t cap) {
  return eval_grid(data, lambda, x, FunctionKind::C, cap);
}

Complex eval_S_grid(const AlgebraData& data, const WeightPoint& lambda, const GridPoint& x, std::uint64_t cap) {
  return eval_grid(data, lambda, x, FunctionKind::S, cap);
}

Complex eval_C_real(const AlgebraData& data, const WeightPoint& lambda, const RealPoint& y, std::uint64_t cap) {
  return eval_real(data, lambda, y, FunctionKind::C, cap);
}

Complex eval_S_real(const AlgebraData& data, const WeightPoint& lambda, const RealPoint& y, std::uint64_t cap) {
  return eval_real(data, lambda, y, FunctionKind::S, cap);
}

}  // namespace weylgrid

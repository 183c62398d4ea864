#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "weylgrid/algebra.hpp"
#include "weylgrid/points.hpp"
#include "weylgrid/weyl.hpp"

namespace weylgrid {

using Complex = std::complex<double>;

enum class FunctionKind { C, S };

/// Arbitrary point y = sum y_i omega^v_i of R^n (grid points embed as y_i = s_i / M).
struct RealPoint {
  std::vector<double> y;
};

RealPoint to_real_point(const GridPoint& p);

/// exp(2 pi i k / order) for k in [0, order).
class RootTable {
 public:
  explicit RootTable(std::int64_t order);

  std::int64_t order() const noexcept { return static_cast<std::int64_t>(roots_.size()); }
  const Complex& operator[](std::int64_t k) const { return roots_[static_cast<std::size_t>(floor_mod(k, order()))]; }

 private:
  std::vector<Complex> roots_;
};

/// Phi_b or phi_b for one weight b, with its orbit enumerated once.
///
/// Values are sums over the full group: Phi_b(a) = sum_{w in W} e^{2 pi i <wb, a>},
/// evaluated as |Stab_W(b)| times the orbit sum. For the S kind a non-regular b
/// gives the zero function (an odd reflection fixes b), and is stored as such.
class OrbitFunction {
 public:
  OrbitFunction(const AlgebraData& data, std::span<const int> weight, FunctionKind kind,
                std::uint64_t cap = kDefaultOrbitCap);

  /// Exact-phase value at x = sum (s_i / M) omega^v_i; `roots` must have order c*M.
  Complex at_grid(std::span<const int> coweight_numerators, int M, const RootTable& roots) const;

  /// Floating-point value at an arbitrary real point.
  Complex at(std::span<const double> y) const;

  FunctionKind kind() const noexcept { return kind_; }
  bool identically_zero() const noexcept { return zero_; }
  std::size_t orbit_size() const noexcept { return signs_.size(); }
  /// |Stab_W(b)| for b as an element of P (not of P / MQ).
  std::uint64_t stabilizer_in_P() const noexcept { return stabilizer_; }

 private:
  int n_ = 0;
  std::int64_t c_ = 1;
  FunctionKind kind_ = FunctionKind::C;
  bool zero_ = false;
  std::uint64_t stabilizer_ = 1;
  std::vector<int> coords_;  // orbit, n entries per element
  std::vector<int> signs_;
  IntMatrix pairing_num_;
  Matrix<double> cartan_inverse_;
};

/// Phi_lambda(x) with exact phases; lambda and x must share M.
Complex eval_C_grid(const AlgebraData& data, const WeightPoint& lambda, const GridPoint& x,
                    std::uint64_t cap = kDefaultOrbitCap);

/// phi_lambda(x) with exact phases. Boundary lambda (some t_i = 0) returns exactly 0,
/// the value forced by the affine and simple dual mirrors.
Complex eval_S_grid(const AlgebraData& data, const WeightPoint& lambda, const GridPoint& x,
                    std::uint64_t cap = kDefaultOrbitCap);

Complex eval_C_real(const AlgebraData& data, const WeightPoint& lambda, const RealPoint& y,
                    std::uint64_t cap = kDefaultOrbitCap);
Complex eval_S_real(const AlgebraData& data, const WeightPoint& lambda, const RealPoint& y,
                    std::uint64_t cap = kDefaultOrbitCap);

}  // namespace weylgrid

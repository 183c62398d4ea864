#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "weylgrid/algebra.hpp"
#include "weylgrid/grids.hpp"
#include "weylgrid/orbitfn.hpp"

namespace weylgrid {

/// C: samples on F_M, labels in Lambda_M. S: samples on F~_M, labels in Lambda~_M.
enum class GridKind { C, S };

/// Function values on exactly the points of F_M (C) or F~_M (S), in enumeration order.
struct SampleSet {
  int M = 0;
  GridKind kind = GridKind::C;
  std::vector<GridPoint> points;
  std::vector<Complex> values;
};

enum class TransformWarning {
  /// M is below the Coxeter number; the interior grid is empty.
  EmptyGrid,
};

/// Expansion coefficients on exactly Lambda_M (C) or Lambda~_M (S).
struct CoefficientSet {
  int M = 0;
  GridKind kind = GridKind::C;
  std::vector<WeightPoint> weights;
  std::vector<Complex> coeffs;
  std::optional<TransformWarning> warning;
};

/// Samples f on the grid of the given kind.
SampleSet sample(const AlgebraData& data, int M, GridKind kind,
                 const std::function<Complex(const GridPoint&)>& f);

/// Orders arbitrary (point, value) pairs into a SampleSet; throws Error{MismatchedGrid}
/// on missing, duplicate or foreign points.
SampleSet make_sample_set(const AlgebraData& data, int M, GridKind kind,
                          std::vector<std::pair<GridPoint, Complex>> entries);
CoefficientSet make_coefficient_set(const AlgebraData& data, int M, GridKind kind,
                                    std::vector<std::pair<WeightPoint, Complex>> entries);

/// Throws Error{MismatchedGrid} unless the keys are exactly the expected enumeration.
void validate(const AlgebraData& data, const SampleSet& f);
void validate(const AlgebraData& data, const CoefficientSet& c);

/// sum_{x in F_M} epsilon(x) f(x) conj(g(x)).
Complex inner_C(const AlgebraData& data, const SampleSet& f, const SampleSet& g);

/// |W| sum_{x in F~_M} f(x) conj(g(x)).
Complex inner_S(const AlgebraData& data, const SampleSet& f, const SampleSet& g);

/// Cached evaluation matrix for one (algebra, M, kind): D(lambda, x) = Phi_lambda(x)
/// (or phi_lambda(x)) with exact phases, plus the weights and norms the
/// transforms need. Built once and read-only afterwards.
class TransformPlan {
 public:
  TransformPlan(const AlgebraData& data, int M, GridKind kind, std::uint64_t cap = kDefaultOrbitCap);

  int M() const noexcept { return M_; }
  GridKind kind() const noexcept { return kind_; }
  const std::vector<GridPoint>& points() const noexcept { return points_; }
  const std::vector<WeightPoint>& weights() const noexcept { return weights_; }
  const Matrix<Complex>& evaluation() const noexcept { return values_; }
  /// epsilon(x) for C; |W| for S.
  const std::vector<double>& point_weights() const noexcept { return point_weights_; }
  /// <Phi_lambda, Phi_lambda> = c|W|M^n h^v_lambda for C; c|W|M^n for S.
  const std::vector<double>& norms() const noexcept { return norms_; }

  CoefficientSet forward(const SampleSet& f) const;

 private:
  int M_;
  GridKind kind_;
  std::vector<GridPoint> points_;
  std::vector<WeightPoint> weights_;
  Matrix<Complex> values_;
  std::vector<double> point_weights_;
  std::vector<double> norms_;
};

/// c_lambda = (c|W|M^n h^v_lambda)^-1 sum_x epsilon(x) f(x) conj(Phi_lambda(x)).
CoefficientSet ctransform(const AlgebraData& data, const SampleSet& f, std::uint64_t cap = kDefaultOrbitCap);

/// c~_lambda = (cM^n)^-1 sum_{x in F~_M} f(x) conj(phi_lambda(x)). M below the
/// Coxeter number yields an empty set flagged with TransformWarning::EmptyGrid.
CoefficientSet stransform(const AlgebraData& data, const SampleSet& f, std::uint64_t cap = kDefaultOrbitCap);

/// Interpolating function built from a coefficient set; evaluate at any real point.
class Interpolant {
 public:
  Interpolant(const AlgebraData& data, const CoefficientSet& coeffs, std::uint64_t cap = kDefaultOrbitCap);

  Complex operator()(std::span<const double> y) const;
  Complex operator()(const RealPoint& p) const { return (*this)(p.y); }

 private:
  std::vector<OrbitFunction> functions_;
  std::vector<Complex> coeffs_;
};

Complex interpolate_C(const AlgebraData& data, const CoefficientSet& coeffs, const RealPoint& y,
                      std::uint64_t cap = kDefaultOrbitCap);
Complex interpolate_S(const AlgebraData& data, const CoefficientSet& coeffs, const RealPoint& y,
                      std::uint64_t cap = kDefaultOrbitCap);

struct OrthogonalityReport {
  int M = 0;
  GridKind kind = GridKind::C;
  std::size_t size = 0;
  /// max |G(l, l')| / (c|W|M^n) over l != l'.
  double max_offdiag = 0.0;
  /// max |G(l, l) - expected| / expected.
  double max_diag_rel_error = 0.0;
  double tolerance = 0.0;
  bool passed = true;
};

/// Full Gram matrix of the orbit functions on the grid, compared with
/// c|W|M^n h^v_lambda (C) or c|W|M^n (S). Passes when both measures are <= tolerance.
OrthogonalityReport verify_orthogonality(const AlgebraData& data, int M, GridKind kind, double tolerance,
                                         std::uint64_t cap = kDefaultOrbitCap);

}  // namespace weylgrid

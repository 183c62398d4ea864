#include "weylgrid/transform.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace weylgrid {
namespace {

bool interior_of(GridKind kind) { return kind == GridKind::S; }

FunctionKind function_kind(GridKind kind) { return kind == GridKind::C ? FunctionKind::C : FunctionKind::S; }

const char* kind_name(GridKind kind) { return kind == GridKind::C ? "C" : "S"; }

void require_positive(int M) {
  if (M < 1) throw Error(ErrorCode::InvalidArgument, "M must be a positive integer, got " + std::to_string(M));
}

double to_double(const BigInt& v) { return v.convert_to<double>(); }

// c |W| M^n, exactly, then converted once.
BigInt gram_scale(const AlgebraData& data, int M) {
  BigInt scale = data.weyl_order * data.cartan_det;
  for (int i = 0; i < data.n; ++i) scale *= M;
  return scale;
}

template <class Key>
std::vector<Complex> order_values(const std::vector<Key>& expected, std::vector<std::pair<Key, Complex>> entries,
                                  const char* what) {
  std::map<Key, std::size_t> index;
  for (std::size_t i = 0; i < expected.size(); ++i) index.emplace(expected[i], i);
  std::vector<Complex> values(expected.size());
  std::vector<bool> seen(expected.size(), false);
  for (auto& [key, value] : entries) {
    const auto it = index.find(key);
    if (it == index.end())
      throw Error(ErrorCode::MismatchedGrid, std::string(what) + " " + to_string(key) + " is not on the expected grid");
    if (seen[it->second])
      throw Error(ErrorCode::MismatchedGrid, std::string("duplicate ") + what + " " + to_string(key));
    seen[it->second] = true;
    values[it->second] = value;
  }
  const auto missing = std::find(seen.begin(), seen.end(), false);
  if (missing != seen.end())
    throw Error(ErrorCode::MismatchedGrid, std::string("missing ") + what + " " +
                                               to_string(expected[static_cast<std::size_t>(missing - seen.begin())]));
  return values;
}

void require_same_grid(const SampleSet& f, const SampleSet& g, GridKind kind) {
  if (f.kind != kind || g.kind != kind)
    throw Error(ErrorCode::MismatchedGrid, std::string("inner product needs two ") + kind_name(kind) + "-grid sample sets");
  if (f.M != g.M)
    throw Error(ErrorCode::MismatchedGrid,
                "sample sets have M = " + std::to_string(f.M) + " and M = " + std::to_string(g.M));
}

}  // namespace

SampleSet sample(const AlgebraData& data, int M, GridKind kind, const std::function<Complex(const GridPoint&)>& f) {
  SampleSet out{M, kind, enumerate_F(data, M, interior_of(kind)), {}};
  out.values.reserve(out.points.size());
  for (const auto& p : out.points) out.values.push_back(f(p));
  return out;
}

SampleSet make_sample_set(const AlgebraData& data, int M, GridKind kind,
                          std::vector<std::pair<GridPoint, Complex>> entries) {
  SampleSet out{M, kind, enumerate_F(data, M, interior_of(kind)), {}};
  out.values = order_values(out.points, std::move(entries), "grid point");
  return out;
}

CoefficientSet make_coefficient_set(const AlgebraData& data, int M, GridKind kind,
                                    std::vector<std::pair<WeightPoint, Complex>> entries) {
  CoefficientSet out{M, kind, enumerate_Lambda(data, M, interior_of(kind)), {}, std::nullopt};
  out.coeffs = order_values(out.weights, std::move(entries), "weight");
  return out;
}

void validate(const AlgebraData& data, const SampleSet& f) {
  require_positive(f.M);
  if (f.values.size() != f.points.size())
    throw Error(ErrorCode::MismatchedGrid, "sample set has " + std::to_string(f.points.size()) + " points but " +
                                               std::to_string(f.values.size()) + " values");
  if (f.points != enumerate_F(data, f.M, interior_of(f.kind)))
    throw Error(ErrorCode::MismatchedGrid, "sample points are not the grid F_" + std::to_string(f.M) +
                                               (f.kind == GridKind::S ? " interior" : "") + " in enumeration order");
}

void validate(const AlgebraData& data, const CoefficientSet& c) {
  require_positive(c.M);
  if (c.coeffs.size() != c.weights.size())
    throw Error(ErrorCode::MismatchedGrid, "coefficient set has " + std::to_string(c.weights.size()) +
                                               " weights but " + std::to_string(c.coeffs.size()) + " values");
  if (c.weights != enumerate_Lambda(data, c.M, interior_of(c.kind)))
    throw Error(ErrorCode::MismatchedGrid, "coefficient weights are not Lambda_" + std::to_string(c.M) +
                                               (c.kind == GridKind::S ? " interior" : "") + " in enumeration order");
}

Complex inner_C(const AlgebraData& data, const SampleSet& f, const SampleSet& g) {
  require_same_grid(f, g, GridKind::C);
  validate(data, f);
  validate(data, g);
  Complex sum{0.0, 0.0};
  for (std::size_t i = 0; i < f.points.size(); ++i)
    sum += to_double(epsilon(data, f.points[i])) * f.values[i] * std::conj(g.values[i]);
  return sum;
}

Complex inner_S(const AlgebraData& data, const SampleSet& f, const SampleSet& g) {
  require_same_grid(f, g, GridKind::S);
  validate(data, f);
  validate(data, g);
  Complex sum{0.0, 0.0};
  for (std::size_t i = 0; i < f.points.size(); ++i) sum += f.values[i] * std::conj(g.values[i]);
  return to_double(data.weyl_order) * sum;
}

TransformPlan::TransformPlan(const AlgebraData& data, int M, GridKind kind, std::uint64_t cap)
    : M_(M), kind_(kind) {
  require_positive(M);
  require_within_cap(data, cap);
  points_ = enumerate_F(data, M, interior_of(kind));
  weights_ = enumerate_Lambda(data, M, interior_of(kind));
  if (points_.size() != weights_.size())
    throw Error(ErrorCode::Internal, "grid and weight set sizes differ for M = " + std::to_string(M));

  const RootTable roots(data.cartan_det * M);
  values_ = Matrix<Complex>(weights_.size(), points_.size());
  for (std::size_t l = 0; l < weights_.size(); ++l) {
    const OrbitFunction f(data, weights_[l].weight(), function_kind(kind), cap);
    for (std::size_t x = 0; x < points_.size(); ++x) values_(l, x) = f.at_grid(points_[x].coweight(), M, roots);
  }

  point_weights_.reserve(points_.size());
  for (const auto& p : points_)
    point_weights_.push_back(kind == GridKind::C ? to_double(epsilon(data, p)) : to_double(data.weyl_order));

  const BigInt scale = gram_scale(data, M);
  norms_.reserve(weights_.size());
  for (const auto& w : weights_)
    norms_.push_back(kind == GridKind::C ? to_double(scale * stabilizer_order_lambda(data, w).order)
                                         : to_double(scale));
}

CoefficientSet TransformPlan::forward(const SampleSet& f) const {
  if (f.M != M_ || f.kind != kind_)
    throw Error(ErrorCode::MismatchedGrid, std::string("plan is for the ") + kind_name(kind_) + "-grid with M = " +
                                               std::to_string(M_) + ", samples are for the " + kind_name(f.kind) +
                                               "-grid with M = " + std::to_string(f.M));
  if (f.points != points_ || f.values.size() != points_.size())
    throw Error(ErrorCode::MismatchedGrid, "sample points do not match the grid of the plan");

  CoefficientSet out{M_, kind_, weights_, std::vector<Complex>(weights_.size()), std::nullopt};
  if (points_.empty()) out.warning = TransformWarning::EmptyGrid;
  for (std::size_t l = 0; l < weights_.size(); ++l) {
    Complex sum{0.0, 0.0};
    for (std::size_t x = 0; x < points_.size(); ++x)
      sum += point_weights_[x] * f.values[x] * std::conj(values_(l, x));
    out.coeffs[l] = sum / norms_[l];
  }
  return out;
}

CoefficientSet ctransform(const AlgebraData& data, const SampleSet& f, std::uint64_t cap) {
  if (f.kind != GridKind::C) throw Error(ErrorCode::MismatchedGrid, "ctransform needs a C-grid sample set");
  validate(data, f);
  return TransformPlan(data, f.M, GridKind::C, cap).forward(f);
}

CoefficientSet stransform(const AlgebraData& data, const SampleSet& f, std::uint64_t cap) {
  if (f.kind != GridKind::S) throw Error(ErrorCode::MismatchedGrid, "stransform needs an S-grid sample set");
  validate(data, f);
  return TransformPlan(data, f.M, GridKind::S, cap).forward(f);
}

Interpolant::Interpolant(const AlgebraData& data, const CoefficientSet& coeffs, std::uint64_t cap)
    : coeffs_(coeffs.coeffs) {
  validate(data, coeffs);
  require_within_cap(data, cap);
  functions_.reserve(coeffs.weights.size());
  for (const auto& w : coeffs.weights) functions_.emplace_back(data, w.weight(), function_kind(coeffs.kind), cap);
}

Complex Interpolant::operator()(std::span<const double> y) const {
  Complex sum{0.0, 0.0};
  for (std::size_t l = 0; l < functions_.size(); ++l)
    if (coeffs_[l] != Complex{}) sum += coeffs_[l] * functions_[l].at(y);
  return sum;
}

Complex interpolate_C(const AlgebraData& data, const CoefficientSet& coeffs, const RealPoint& y, std::uint64_t cap) {
  if (coeffs.kind != GridKind::C) throw Error(ErrorCode::MismatchedGrid, "interpolate_C needs C coefficients");
  return Interpolant(data, coeffs, cap)(y);
}

Complex interpolate_S(const AlgebraData& data, const CoefficientSet& coeffs, const RealPoint& y, std::uint64_t cap) {
  if (coeffs.kind != GridKind::S) throw Error(ErrorCode::MismatchedGrid, "interpolate_S needs S coefficients");
  return Interpolant(data, coeffs, cap)(y);
}

OrthogonalityReport verify_orthogonality(const AlgebraData& data, int M, GridKind kind, double tolerance,
                                         std::uint64_t cap) {
  const TransformPlan plan(data, M, kind, cap);
  const auto& D = plan.evaluation();
  const auto& pw = plan.point_weights();
  const auto& norms = plan.norms();
  const double scale = to_double(gram_scale(data, M));
  const std::size_t size = plan.weights().size();

  OrthogonalityReport report{M, kind, size, 0.0, 0.0, tolerance, true};
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = a; b < size; ++b) {
      Complex g{0.0, 0.0};
      for (std::size_t x = 0; x < plan.points().size(); ++x) g += pw[x] * D(a, x) * std::conj(D(b, x));
      if (a == b)
        report.max_diag_rel_error = std::max(report.max_diag_rel_error, std::abs(g - norms[a]) / norms[a]);
      else
        report.max_offdiag = std::max(report.max_offdiag, std::abs(g) / scale);
    }
  }
  report.passed = report.max_offdiag <= tolerance && report.max_diag_rel_error <= tolerance;
  return report;
}

}  // namespace weylgrid

#include "weylgrid/points.hpp"

#include <algorithm>

namespace weylgrid {
namespace {

void validate_barycentric(const std::vector<int>& coords, const std::vector<int>& weights, int M,
                          const char* what) {
  if (M < 1) throw Error(ErrorCode::InvalidArgument, "M must be a positive integer");
  if (coords.size() != weights.size() + 1)
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " needs " + std::to_string(weights.size() + 1) +
                                                " barycentric coordinates, got " + std::to_string(coords.size()));
  if (std::any_of(coords.begin(), coords.end(), [](int v) { return v < 0; }))
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " coordinates must be non-negative");
  std::int64_t total = coords[0];
  for (std::size_t i = 0; i < weights.size(); ++i) total += std::int64_t{weights[i]} * coords[i + 1];
  if (total != M)
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " coordinates sum to " + std::to_string(total) +
                                                " with the marks, expected M = " + std::to_string(M));
}

std::string bracketed(const std::vector<int>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + "]";
}

bool all_positive(const std::vector<int>& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x > 0; });
}

}  // namespace

bool GridPoint::is_interior() const { return all_positive(s); }
bool WeightPoint::is_interior() const { return all_positive(t); }

void validate(const AlgebraData& data, const GridPoint& p) { validate_barycentric(p.s, data.marks, p.M, "grid point"); }

void validate(const AlgebraData& data, const WeightPoint& w) {
  validate_barycentric(w.t, data.dual_marks, w.M, "weight point");
}

GridPoint make_grid_point(const AlgebraData& data, int M, std::vector<int> s) {
  GridPoint p{M, std::move(s)};
  validate(data, p);
  return p;
}

WeightPoint make_weight_point(const AlgebraData& data, int M, std::vector<int> t) {
  WeightPoint w{M, std::move(t)};
  validate(data, w);
  return w;
}

std::string to_string(const GridPoint& p) { return bracketed(p.s); }
std::string to_string(const WeightPoint& w) { return bracketed(w.t); }

}  // namespace weylgrid

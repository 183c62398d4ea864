#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "weylgrid/algebra.hpp"
#include "weylgrid/points.hpp"

namespace weylgrid {

/// Default ceiling on |W| for anything that enumerates whole orbits.
inline constexpr std::uint64_t kDefaultOrbitCap = 10'000'000;

/// Simple reflection r_i (1 <= i <= n) on omega coordinates:
/// (r_i t)_j = t_j - t_i C_ij.
std::vector<int> reflect_weight(const AlgebraData& data, int i, std::span<const int> t);

/// Simple reflection r_i on omega^v coordinates: (r_i y)_j = y_j - y_i C_ji.
std::vector<int> reflect_coweight(const AlgebraData& data, int i, std::span<const int> y);
std::vector<double> reflect_coweight(const AlgebraData& data, int i, std::span<const double> y);

/// Affine reflection r_0 a = r_xi a + xi on omega^v coordinates.
std::vector<double> affine_reflect_coweight(const AlgebraData& data, std::span<const double> y);

/// Affine reflection r^v_{0,M} lambda = r_eta lambda + M 2 eta/<eta,eta> on omega coordinates.
std::vector<int> affine_reflect_weight(const AlgebraData& data, std::span<const int> t, int M);

enum class OrbitBasis { Weight, Coweight };

struct OrbitElement {
  std::vector<int> coords;
  /// det w of the element that produced `coords` from the seed.
  int sign = 1;
};

struct Orbit {
  /// Deterministic BFS order starting at the seed.
  std::vector<OrbitElement> elements;
  /// False when an odd element stabilises the seed; signs are then meaningless.
  bool signs_consistent = true;

  std::size_t size() const noexcept { return elements.size(); }
};

/// All images W.seed, found by BFS over simple reflections.
/// Throws Error{CapExceeded} when |W| > cap; never truncates.
Orbit orbit(const AlgebraData& data, std::span<const int> seed, OrbitBasis basis,
            std::uint64_t cap = kDefaultOrbitCap);

/// Throws Error{CapExceeded} naming |W| and the cap.
void require_within_cap(const AlgebraData& data, std::uint64_t cap);

struct StabilizerReport {
  BigInt order{1};
  std::vector<BigInt> component_weyl_orders;
  /// Diagram nodes (0..n) whose barycentric coordinate vanishes.
  std::vector<int> zero_nodes;
};

/// Stabiliser order from the zero-coordinate subgraph of a diagram.
StabilizerReport stabilizer_from_diagram(const DynkinDiagram& diagram, std::span<const int> barycentric);

/// h_x via the extended Coxeter-Dynkin diagram.
StabilizerReport stabilizer_order_x(const AlgebraData& data, const GridPoint& p);

/// h^v_lambda via the extended dual diagram.
StabilizerReport stabilizer_order_lambda(const AlgebraData& data, const WeightPoint& w);

/// epsilon(x) = |W| / h_x, the size of the W-orbit of x on the torus.
BigInt epsilon(const AlgebraData& data, const GridPoint& p);

/// |W_l| of the simple type drawn by a connected subdiagram.
/// Throws Error{Internal} for shapes that are not finite-type diagrams.
BigInt classify_component(const DynkinDiagram& diagram, std::span<const int> nodes);

/// Orbit of x in (1/M)P^v / Q^v, returned as canonical omega^v numerators mod M Q^v.
std::vector<std::vector<std::int64_t>> torus_orbit(const AlgebraData& data, const GridPoint& p,
                                                   std::uint64_t cap = kDefaultOrbitCap);

/// Orbit of lambda in P / MQ, returned as canonical omega numerators mod MQ.
std::vector<std::vector<std::int64_t>> weight_class_orbit(const AlgebraData& data, const WeightPoint& w,
                                                          std::uint64_t cap = kDefaultOrbitCap);

}  // namespace weylgrid

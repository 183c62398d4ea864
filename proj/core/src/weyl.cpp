#include "weylgrid/weyl.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <unordered_map>

#include <boost/container_hash/hash.hpp>

#include "weylgrid/lattice.hpp"

namespace weylgrid {
namespace {

void check_node(const AlgebraData& data, int i) {
  if (i < 1 || i > data.n)
    throw Error(ErrorCode::InvalidArgument,
                "simple reflection index " + std::to_string(i) + " outside 1.." + std::to_string(data.n));
}

template <typename T>
void check_length(const AlgebraData& data, std::span<const T> v) {
  if (v.size() != static_cast<std::size_t>(data.n))
    throw Error(ErrorCode::InvalidArgument, "expected a vector of length " + std::to_string(data.n));
}

BigInt factorial(int k) {
  BigInt f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

struct VectorHash {
  std::size_t operator()(const std::vector<int>& v) const { return boost::hash_range(v.begin(), v.end()); }
};

// Walks a path component from one end; returns nodes in order.
std::vector<int> path_order(const std::vector<std::vector<int>>& adjacency) {
  std::size_t start = 0;
  for (std::size_t i = 0; i < adjacency.size(); ++i)
    if (adjacency[i].size() == 1) start = i;
  std::vector<int> order{static_cast<int>(start)};
  int prev = -1;
  int cur = static_cast<int>(start);
  while (true) {
    int next = -1;
    for (int nb : adjacency[cur])
      if (nb != prev) next = nb;
    if (next < 0) break;
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  return order;
}

[[noreturn]] void unknown_shape(std::size_t k) {
  throw Error(ErrorCode::Internal, "subdiagram with " + std::to_string(k) + " nodes is not of finite type");
}

std::vector<std::vector<std::int64_t>> class_orbit(std::vector<std::int64_t> seed, const LatticeReducer& reducer,
                                                   const std::function<std::vector<std::int64_t>(
                                                       int, const std::vector<std::int64_t>&)>& reflect,
                                                   int n) {
  std::set<std::vector<std::int64_t>> seen;
  std::deque<std::vector<std::int64_t>> queue;
  auto start = reducer.reduce(seed);
  seen.insert(start);
  queue.push_back(std::move(start));
  while (!queue.empty()) {
    auto cur = std::move(queue.front());
    queue.pop_front();
    for (int i = 1; i <= n; ++i) {
      auto next = reducer.reduce(reflect(i, cur));
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

std::vector<int> reflect_weight(const AlgebraData& data, int i, std::span<const int> t) {
  check_node(data, i);
  check_length(data, t);
  std::vector<int> out(t.begin(), t.end());
  const int ti = t[i - 1];
  for (int j = 0; j < data.n; ++j) out[j] -= ti * static_cast<int>(data.cartan(i - 1, j));
  return out;
}

std::vector<int> reflect_coweight(const AlgebraData& data, int i, std::span<const int> y) {
  check_node(data, i);
  check_length(data, y);
  std::vector<int> out(y.begin(), y.end());
  const int yi = y[i - 1];
  for (int j = 0; j < data.n; ++j) out[j] -= yi * static_cast<int>(data.cartan(j, i - 1));
  return out;
}

std::vector<double> reflect_coweight(const AlgebraData& data, int i, std::span<const double> y) {
  check_node(data, i);
  check_length(data, y);
  std::vector<double> out(y.begin(), y.end());
  const double yi = y[i - 1];
  for (int j = 0; j < data.n; ++j) out[j] -= yi * static_cast<double>(data.cartan(j, i - 1));
  return out;
}

std::vector<double> affine_reflect_coweight(const AlgebraData& data, std::span<const double> y) {
  check_length(data, y);
  const auto xi = highest_root_coweight_coords(data);
  double height = 0.0;  // <a, xi>
  for (int i = 0; i < data.n; ++i) height += data.marks[i] * y[i];
  std::vector<double> out(y.begin(), y.end());
  for (int j = 0; j < data.n; ++j) out[j] -= (height - 1.0) * xi[j];
  return out;
}

std::vector<int> affine_reflect_weight(const AlgebraData& data, std::span<const int> t, int M) {
  check_length(data, t);
  const auto eta = highest_dual_root_weight_coords(data);
  int height = 0;  // <lambda, eta>
  for (int i = 0; i < data.n; ++i) height += data.dual_marks[i] * t[i];
  std::vector<int> out(t.begin(), t.end());
  for (int j = 0; j < data.n; ++j) out[j] -= (height - M) * eta[j];
  return out;
}

void require_within_cap(const AlgebraData& data, std::uint64_t cap) {
  if (data.weyl_order > cap)
    throw Error(ErrorCode::CapExceeded, "orbit enumeration for " + to_string(data.lie_type) + " needs |W| = " +
                                            data.weyl_order.str() + " group elements, cap is " + std::to_string(cap));
}

Orbit orbit(const AlgebraData& data, std::span<const int> seed, OrbitBasis basis, std::uint64_t cap) {
  check_length(data, seed);
  require_within_cap(data, cap);

  Orbit result;
  std::unordered_map<std::vector<int>, std::size_t, VectorHash> index;
  result.elements.push_back({std::vector<int>(seed.begin(), seed.end()), 1});
  index.emplace(result.elements.front().coords, 0);
  for (std::size_t head = 0; head < result.elements.size(); ++head) {
    for (int i = 1; i <= data.n; ++i) {
      const auto& cur = result.elements[head];
      auto next = basis == OrbitBasis::Weight ? reflect_weight(data, i, cur.coords)
                                              : reflect_coweight(data, i, cur.coords);
      const int sign = -cur.sign;
      auto it = index.find(next);
      if (it == index.end()) {
        index.emplace(next, result.elements.size());
        result.elements.push_back({std::move(next), sign});
      } else if (result.elements[it->second].sign != sign) {
        result.signs_consistent = false;
      }
    }
  }
  return result;
}

BigInt classify_component(const DynkinDiagram& diagram, std::span<const int> nodes) {
  const std::size_t k = nodes.size();
  if (k == 0) throw Error(ErrorCode::Internal, "empty diagram component");
  if (k == 1) return 2;

  std::vector<std::vector<int>> adjacency(k);
  std::size_t edges = 0;
  int doubles = 0;
  int triples = 0;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      const auto bond = diagram.bonds(static_cast<std::size_t>(nodes[a]), static_cast<std::size_t>(nodes[b]));
      if (bond == 0) continue;
      if (bond > 3) unknown_shape(k);
      adjacency[a].push_back(static_cast<int>(b));
      adjacency[b].push_back(static_cast<int>(a));
      ++edges;
      doubles += bond == 2;
      triples += bond == 3;
    }
  }
  if (edges != k - 1) unknown_shape(k);  // disconnected or a cycle

  if (triples > 0) {
    if (k == 2) return 12;
    unknown_shape(k);
  }

  std::size_t max_degree = 0;
  for (const auto& nb : adjacency) max_degree = std::max(max_degree, nb.size());

  if (max_degree <= 2) {
    const int kk = static_cast<int>(k);
    if (doubles == 0) return factorial(kk + 1);
    if (doubles > 1) unknown_shape(k);
    if (k == 4) {
      const auto order = path_order(adjacency);
      const auto bond = diagram.bonds(static_cast<std::size_t>(nodes[order[1]]),
                                      static_cast<std::size_t>(nodes[order[2]]));
      if (bond == 2) return 1152;
    }
    return (BigInt(1) << kk) * factorial(kk);
  }

  if (max_degree != 3 || doubles > 0) unknown_shape(k);
  std::size_t branch = 0;
  int branches = 0;
  for (std::size_t i = 0; i < k; ++i)
    if (adjacency[i].size() == 3) {
      branch = i;
      ++branches;
    }
  if (branches != 1) unknown_shape(k);

  std::vector<int> arms;
  for (int start : adjacency[branch]) {
    int len = 1;
    int prev = static_cast<int>(branch);
    int cur = start;
    while (adjacency[cur].size() == 2) {
      const int next = adjacency[cur][0] == prev ? adjacency[cur][1] : adjacency[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  const int kk = static_cast<int>(k);
  if (arms[0] == 1 && arms[1] == 1) return (BigInt(1) << (kk - 1)) * factorial(kk);  // D_k
  if (arms[0] == 1 && arms[1] == 2) {
    if (arms[2] == 2) return 51840;
    if (arms[2] == 3) return 2903040;
    if (arms[2] == 4) return 696729600;
  }
  unknown_shape(k);
}

StabilizerReport stabilizer_from_diagram(const DynkinDiagram& diagram, std::span<const int> barycentric) {
  StabilizerReport report;
  const std::size_t nodes = diagram.node_count();
  if (barycentric.size() != nodes)
    throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(nodes) + " barycentric coordinates");
  for (std::size_t i = 0; i < nodes; ++i)
    if (barycentric[i] == 0) report.zero_nodes.push_back(static_cast<int>(i));
  if (report.zero_nodes.size() == nodes)
    throw Error(ErrorCode::InvalidArgument, "all barycentric coordinates vanish");

  std::vector<bool> zero(nodes, false), visited(nodes, false);
  for (int z : report.zero_nodes) zero[static_cast<std::size_t>(z)] = true;
  for (int start : report.zero_nodes) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    std::vector<int> component;
    std::vector<int> stack{start};
    visited[static_cast<std::size_t>(start)] = true;
    while (!stack.empty()) {
      const int cur = stack.back();
      stack.pop_back();
      component.push_back(cur);
      for (int nb : diagram.neighbours(cur)) {
        const auto u = static_cast<std::size_t>(nb);
        if (zero[u] && !visited[u]) {
          visited[u] = true;
          stack.push_back(nb);
        }
      }
    }
    std::sort(component.begin(), component.end());
    report.component_weyl_orders.push_back(classify_component(diagram, component));
    report.order *= report.component_weyl_orders.back();
  }
  return report;
}

StabilizerReport stabilizer_order_x(const AlgebraData& data, const GridPoint& p) {
  validate(data, p);
  return stabilizer_from_diagram(data.ext_dd, p.s);
}

StabilizerReport stabilizer_order_lambda(const AlgebraData& data, const WeightPoint& w) {
  validate(data, w);
  return stabilizer_from_diagram(data.ext_dd_dual, w.t);
}

BigInt epsilon(const AlgebraData& data, const GridPoint& p) {
  const auto report = stabilizer_order_x(data, p);
  if (data.weyl_order % report.order != 0)
    throw Error(ErrorCode::Internal, "stabiliser order does not divide |W|");
  return data.weyl_order / report.order;
}

std::vector<std::vector<std::int64_t>> torus_orbit(const AlgebraData& data, const GridPoint& p, std::uint64_t cap) {
  validate(data, p);
  require_within_cap(data, cap);
  const std::size_t n = static_cast<std::size_t>(data.n);
  IntMatrix generators(n, n);  // columns: M alpha^v_i in omega^v coordinates
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) generators(i, j) = std::int64_t{p.M} * data.cartan(i, j);
  const LatticeReducer reducer(generators);
  auto reflect = [&](int i, const std::vector<std::int64_t>& y) {
    std::vector<std::int64_t> out = y;
    for (std::size_t j = 0; j < n; ++j) out[j] -= y[static_cast<std::size_t>(i - 1)] * data.cartan(j, i - 1);
    return out;
  };
  const auto coweight = p.coweight();
  return class_orbit({coweight.begin(), coweight.end()}, reducer, reflect, data.n);
}

std::vector<std::vector<std::int64_t>> weight_class_orbit(const AlgebraData& data, const WeightPoint& w,
                                                          std::uint64_t cap) {
  validate(data, w);
  require_within_cap(data, cap);
  const std::size_t n = static_cast<std::size_t>(data.n);
  IntMatrix generators(n, n);  // columns: M alpha_i in omega coordinates
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) generators(i, j) = std::int64_t{w.M} * data.cartan(j, i);
  const LatticeReducer reducer(generators);
  auto reflect = [&](int i, const std::vector<std::int64_t>& t) {
    std::vector<std::int64_t> out = t;
    for (std::size_t j = 0; j < n; ++j) out[j] -= t[static_cast<std::size_t>(i - 1)] * data.cartan(i - 1, j);
    return out;
  };
  const auto weight = w.weight();
  return class_orbit({weight.begin(), weight.end()}, reducer, reflect, data.n);
}

}  // namespace weylgrid

#pragma once

#include <vector>

#include "fieldroute/geo.hpp"

namespace fieldroute {

/// An open visiting order over a point set. `order` holds local indices
/// 0..m-1; `length` is the open-path length under the metric the tour was
/// built with.
struct Tour {
  std::vector<int> order;
  Scalar length = 0.0;
  bool open_path = true;
};

/// Greedy chain from `start_index`: repeatedly append the nearest unvisited
/// point, ties by lowest index.
Tour nearest_neighbor_tour(const PointMatrix& members, const DistanceMetric& metric,
                           int start_index);

/// First-improvement 2-opt on the open path: reverses segments while an
/// improving reversal exists. Never increases length; handles asymmetric
/// (matrix-backed) metrics by evaluating reversed interior legs.
Tour two_opt_improve(const Tour& tour, const PointMatrix& members, const DistanceMetric& metric);

/// Exact minimum open path by exhaustive permutation search; ties resolved
/// toward the lexicographically smallest order. Guarded to |members| <= 10.
Tour brute_force_tour(const PointMatrix& members, const DistanceMetric& metric);

/// Nearest-neighbor construction followed by 2-opt. With `start_sweep`, every
/// start index is tried and the shortest result kept (ties by lowest start).
Tour solve_cluster_route(const PointMatrix& members, const DistanceMetric& metric,
                         bool start_sweep = false);

}  // namespace fieldroute

#pragma once

#include <cstdint>
#include <vector>

#include "fieldroute/geo.hpp"

namespace fieldroute {

/// Result of a k-means fit over station coordinates. Distances are planar
/// degree-space, so `sse` is in degrees^2.
struct ClusterAssignment {
  int k = 0;
  IndexVector labels;               // per-point cluster index in [0, k)
  PointMatrix centroids;            // k x 2, arithmetic mean of each cluster
  Scalar sse = 0.0;                 // sum of squared point-to-centroid distances
  int iterations_run = 0;
  std::vector<Scalar> sse_trace;    // sse after each iteration's mean update
};

/// Nearest-centroid labels under euclidean_degrees, ties broken by the lowest
/// centroid index. Throws InvalidArgument when either input is empty.
IndexVector assign_points(const PointMatrix& points, const PointMatrix& centroids);

/// Componentwise mean per cluster. Clusters with no members are reported in
/// `empty_clusters` (when given) and their centroid rows are left NaN rather
/// than silently kept.
PointMatrix update_centroids(const PointMatrix& points, const IndexVector& labels, int k,
                             std::vector<int>* empty_clusters = nullptr);

/// Lloyd iterations with Forgy initialization: k distinct point rows sampled
/// uniformly without replacement from a generator seeded with `rng_seed`.
/// Stops when labels are unchanged between iterations or after
/// `max_iterations`. Deterministic for a given seed; every cluster is
/// non-empty on return. Throws InvalidArgument for k < 1, k > n or
/// max_iterations < 1.
ClusterAssignment kmeans_fit(const PointMatrix& points, int k, int max_iterations,
                             std::uint64_t rng_seed);

/// Same loop with caller-supplied initial centroids (testing entry point).
ClusterAssignment kmeans_fit_with_centroids(const PointMatrix& points,
                                            const PointMatrix& initial_centroids,
                                            int max_iterations);

}  // namespace fieldroute

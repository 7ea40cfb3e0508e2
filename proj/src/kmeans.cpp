#include "fieldroute/kmeans.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <random>

namespace fieldroute {

namespace {

Scalar squared_degrees(const PointMatrix& pts, Eigen::Index i, const PointMatrix& centroids,
                       Eigen::Index c) {
  const Scalar dlat = pts(i, 0) - centroids(c, 0);
  const Scalar dlon = pts(i, 1) - centroids(c, 1);
  return dlat * dlat + dlon * dlon;
}

Scalar total_sse(const PointMatrix& pts, const IndexVector& labels, const PointMatrix& centroids) {
  Scalar sse = 0.0;
  for (Eigen::Index i = 0; i < pts.rows(); ++i) {
    sse += squared_degrees(pts, i, centroids, labels(i));
  }
  return sse;
}

/// Gives every empty cluster a centroid of its own: the point farthest from
/// its current centroid (ties by lowest point index) is re-labeled as the
/// empty cluster's sole member. Only points from clusters with >= 2 members
/// are candidates, so each repair strictly reduces the number of empty
/// clusters and the loop terminates for any k <= n.
void repair_empty_clusters(const PointMatrix& pts, IndexVector& labels, PointMatrix& centroids,
                           int k) {
  std::vector<int> counts(static_cast<std::size_t>(k), 0);
  for (Eigen::Index i = 0; i < labels.size(); ++i) {
    ++counts[static_cast<std::size_t>(labels(i))];
  }
  for (int c = 0; c < k; ++c) {
    if (counts[static_cast<std::size_t>(c)] > 0) {
      continue;
    }
    Eigen::Index farthest = -1;
    Scalar farthest_d2 = -1.0;
    for (Eigen::Index i = 0; i < pts.rows(); ++i) {
      if (counts[static_cast<std::size_t>(labels(i))] < 2) {
        continue;
      }
      const Scalar d2 = squared_degrees(pts, i, centroids, labels(i));
      if (d2 > farthest_d2) {
        farthest_d2 = d2;
        farthest = i;
      }
    }
    // k <= n guarantees a donor cluster exists.
    --counts[static_cast<std::size_t>(labels(farthest))];
    labels(farthest) = c;
    counts[static_cast<std::size_t>(c)] = 1;
    centroids.row(c) = pts.row(farthest);
  }
}

ClusterAssignment run_lloyd(const PointMatrix& points, PointMatrix centroids, int max_iterations) {
  const int k = static_cast<int>(centroids.rows());
  ClusterAssignment result;
  result.k = k;
  result.centroids = std::move(centroids);
  result.labels = IndexVector::Constant(points.rows(), -1);

  for (int iter = 0; iter < max_iterations; ++iter) {
    IndexVector labels = assign_points(points, result.centroids);
    repair_empty_clusters(points, labels, result.centroids, k);
    const bool converged = (iter > 0 && labels == result.labels);
    result.labels = labels;
    result.centroids = update_centroids(points, result.labels, k);
    result.sse = total_sse(points, result.labels, result.centroids);
    result.sse_trace.push_back(result.sse);
    result.iterations_run = iter + 1;
    if (converged) {
      break;
    }
  }
  return result;
}

}  // namespace

IndexVector assign_points(const PointMatrix& points, const PointMatrix& centroids) {
  if (points.rows() < 1) {
    throw InvalidArgument("assign_points: empty point set");
  }
  if (centroids.rows() < 1) {
    throw InvalidArgument("assign_points: empty centroid list");
  }
  IndexVector labels(points.rows());
  for (Eigen::Index i = 0; i < points.rows(); ++i) {
    int best = 0;
    Scalar best_d = euclidean_degrees({points(i, 0), points(i, 1)},
                                      {centroids(0, 0), centroids(0, 1)});
    for (Eigen::Index c = 1; c < centroids.rows(); ++c) {
      const Scalar d = euclidean_degrees({points(i, 0), points(i, 1)},
                                         {centroids(c, 0), centroids(c, 1)});
      if (d < best_d) {
        best_d = d;
        best = static_cast<int>(c);
      }
    }
    labels(i) = best;
  }
  return labels;
}

PointMatrix update_centroids(const PointMatrix& points, const IndexVector& labels, int k,
                             std::vector<int>* empty_clusters) {
  if (k < 1) {
    throw InvalidArgument("update_centroids: k must be >= 1");
  }
  if (labels.size() != points.rows() || (labels.size() > 0 && (labels.minCoeff() < 0 || labels.maxCoeff() >= k))) {
    throw InvalidArgument("update_centroids: labels invalid for k");
  }
  PointMatrix sums = PointMatrix::Zero(k, 2);
  std::vector<int> counts(static_cast<std::size_t>(k), 0);
  for (Eigen::Index i = 0; i < points.rows(); ++i) {
    sums.row(labels(i)) += points.row(i);
    ++counts[static_cast<std::size_t>(labels(i))];
  }
  if (empty_clusters) {
    empty_clusters->clear();
  }
  for (int c = 0; c < k; ++c) {
    if (counts[static_cast<std::size_t>(c)] > 0) {
      sums.row(c) /= static_cast<Scalar>(counts[static_cast<std::size_t>(c)]);
    } else {
      sums.row(c).setConstant(std::numeric_limits<Scalar>::quiet_NaN());
      if (empty_clusters) {
        empty_clusters->push_back(c);
      }
    }
  }
  return sums;
}

ClusterAssignment kmeans_fit(const PointMatrix& points, int k, int max_iterations,
                             std::uint64_t rng_seed) {
  const int n = static_cast<int>(points.rows());
  if (k < 1) {
    throw InvalidArgument("kmeans_fit: k must be >= 1");
  }
  if (k > n) {
    throw InvalidArgument("kmeans_fit: infeasible k, k exceeds point count");
  }
  if (max_iterations < 1) {
    throw InvalidArgument("kmeans_fit: max_iterations must be >= 1");
  }

  // Forgy: k distinct rows by partial Fisher-Yates.
  std::mt19937_64 rng(rng_seed);
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  PointMatrix centroids(k, 2);
  for (int c = 0; c < k; ++c) {
    std::uniform_int_distribution<int> pick(c, n - 1);
    std::swap(idx[static_cast<std::size_t>(c)], idx[static_cast<std::size_t>(pick(rng))]);
    centroids.row(c) = points.row(idx[static_cast<std::size_t>(c)]);
  }
  return run_lloyd(points, std::move(centroids), max_iterations);
}

ClusterAssignment kmeans_fit_with_centroids(const PointMatrix& points,
                                            const PointMatrix& initial_centroids,
                                            int max_iterations) {
  const int k = static_cast<int>(initial_centroids.rows());
  if (k < 1 || k > points.rows()) {
    throw InvalidArgument("kmeans_fit_with_centroids: need 1 <= k <= n");
  }
  if (max_iterations < 1) {
    throw InvalidArgument("kmeans_fit_with_centroids: max_iterations must be >= 1");
  }
  return run_lloyd(points, initial_centroids, max_iterations);
}

}  // namespace fieldroute

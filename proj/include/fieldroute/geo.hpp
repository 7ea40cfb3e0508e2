#pragma once

#include <Eigen/Dense>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fieldroute/errors.hpp"

namespace fieldroute {

using Scalar = double;

/// Point sets are dense n x 2 matrices, column 0 = latitude, column 1 =
/// longitude, both in decimal degrees. Row order is significant: it is the
/// dataset row order and, for matrix-backed metrics, the matrix index.
using PointMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, 2, Eigen::RowMajor>;
using IndexVector = Eigen::VectorXi;

/// IUGG mean Earth radius, km.
inline constexpr Scalar kEarthRadiusKm = 6371.0088;

struct Coordinate {
  Scalar lat = 0.0;  // degrees, [-90, 90]
  Scalar lon = 0.0;  // degrees, [-180, 180]

  bool finite() const;
  bool valid() const;  // finite and within range
};

/// One service point of a dataset. `id` is the zero-based dataset row.
struct Station {
  int id = 0;
  std::string name;
  Coordinate coord;
};

/// An ordered list of stations; the order defines the sequential reference
/// route.
using Dataset = std::vector<Station>;

/// Copies dataset coordinates into an n x 2 matrix (row i = station i).
PointMatrix dataset_points(const Dataset& dataset);

/// Planar distance in degree space: sqrt(dlat^2 + dlon^2).
/// Throws InvalidArgument on non-finite input.
Scalar euclidean_degrees(const Coordinate& a, const Coordinate& b);

/// Great-circle distance in km on a sphere of radius kEarthRadiusKm.
/// Throws InvalidArgument on non-finite input.
Scalar haversine_km(const Coordinate& a, const Coordinate& b);

enum class MetricKind {
  EuclideanDegrees,
  HaversineKm,
  MatrixBacked,
};

/// Distance evaluation between indexed points. The coordinate kinds compute
/// from the supplied point rows; the matrix kind looks indices up in an
/// externally supplied N x N km table (road networks are directed, so no
/// symmetry is assumed for it). An optional companion table carries leg
/// durations in minutes.
class DistanceMetric {
 public:
  static DistanceMetric euclidean_degrees();
  static DistanceMetric haversine_km();

  /// Validates the tables: square, zero diagonal, finite, non-negative;
  /// the duration table, when given, must have the same shape.
  static DistanceMetric matrix_backed(Eigen::MatrixXd distance_km,
                                      std::optional<Eigen::MatrixXd> duration_min = std::nullopt);

  MetricKind kind() const { return kind_; }
  bool symmetric() const { return kind_ != MetricKind::MatrixBacked; }
  bool has_duration_matrix() const { return duration_min_.has_value(); }
  Eigen::Index matrix_size() const;

  /// Distance from point i to point j of `pts`. Matrix-backed metrics ignore
  /// the coordinates and index the table directly; out-of-bounds indices
  /// raise InvalidArgument.
  Scalar between(Eigen::Index i, Eigen::Index j, const PointMatrix& pts) const;

  /// Leg duration in minutes (matrix-backed with a duration table only).
  Scalar duration_between(Eigen::Index i, Eigen::Index j) const;

  /// Metric over the subset `indices` of the original point set, so cluster
  /// tours can be solved in local index space. Coordinate metrics are
  /// returned unchanged; matrix tables are sliced to |indices|^2.
  DistanceMetric restricted(std::span<const int> indices) const;

 private:
  explicit DistanceMetric(MetricKind kind) : kind_(kind) {}

  MetricKind kind_;
  std::optional<Eigen::MatrixXd> distance_km_;
  std::optional<Eigen::MatrixXd> duration_min_;
};

/// Sum of consecutive leg distances of `order` (a permutation of all rows of
/// `pts`); adds the closing leg when `closed`. A single point has length 0.
/// Throws InvalidArgument when `order` is not a permutation of 0..n-1 or the
/// metric table is too small for the point set.
Scalar path_length(const PointMatrix& pts, std::span<const int> order,
                   const DistanceMetric& metric, bool closed);

/// True when `order` holds each of 0..n-1 exactly once.
bool is_permutation_of_n(std::span<const int> order, int n);

}  // namespace fieldroute

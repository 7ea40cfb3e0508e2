#include "fieldroute/geo.hpp"

#include <cmath>
#include <numbers>

namespace fieldroute {

namespace {

constexpr Scalar kDegToRad = std::numbers::pi_v<Scalar> / 180.0;

void require_finite(const Coordinate& c, const char* which) {
  if (!c.finite()) {
    throw InvalidArgument(std::string("invalid coordinate: non-finite ") + which);
  }
}

}  // namespace

bool Coordinate::finite() const {
  return std::isfinite(lat) && std::isfinite(lon);
}

bool Coordinate::valid() const {
  return finite() && lat >= -90.0 && lat <= 90.0 && lon >= -180.0 && lon <= 180.0;
}

PointMatrix dataset_points(const Dataset& dataset) {
  PointMatrix pts(static_cast<Eigen::Index>(dataset.size()), 2);
  for (Eigen::Index i = 0; i < pts.rows(); ++i) {
    pts(i, 0) = dataset[static_cast<std::size_t>(i)].coord.lat;
    pts(i, 1) = dataset[static_cast<std::size_t>(i)].coord.lon;
  }
  return pts;
}

Scalar euclidean_degrees(const Coordinate& a, const Coordinate& b) {
  require_finite(a, "input");
  require_finite(b, "input");
  return std::hypot(a.lat - b.lat, a.lon - b.lon);
}

Scalar haversine_km(const Coordinate& a, const Coordinate& b) {
  require_finite(a, "input");
  require_finite(b, "input");
  const Scalar lat1 = a.lat * kDegToRad;
  const Scalar lat2 = b.lat * kDegToRad;
  const Scalar dlat = (b.lat - a.lat) * kDegToRad;
  const Scalar dlon = (b.lon - a.lon) * kDegToRad;
  const Scalar s_lat = std::sin(0.5 * dlat);
  const Scalar s_lon = std::sin(0.5 * dlon);
  const Scalar h = s_lat * s_lat + std::cos(lat1) * std::cos(lat2) * s_lon * s_lon;
  // h can creep above 1 for antipodal-ish pairs.
  return 2.0 * kEarthRadiusKm * std::asin(std::sqrt(std::min(h, 1.0)));
}

DistanceMetric DistanceMetric::euclidean_degrees() {
  return DistanceMetric(MetricKind::EuclideanDegrees);
}

DistanceMetric DistanceMetric::haversine_km() {
  return DistanceMetric(MetricKind::HaversineKm);
}

DistanceMetric DistanceMetric::matrix_backed(Eigen::MatrixXd distance_km,
                                             std::optional<Eigen::MatrixXd> duration_min) {
  auto check = [](const Eigen::MatrixXd& m, const char* label) {
    if (m.rows() != m.cols() || m.rows() < 1) {
      throw InvalidArgument(std::string(label) + " matrix must be square and non-empty");
    }
    if (!m.allFinite() || (m.array() < 0.0).any()) {
      throw InvalidArgument(std::string(label) + " matrix entries must be finite and >= 0");
    }
    if ((m.diagonal().array() != 0.0).any()) {
      throw InvalidArgument(std::string(label) + " matrix diagonal must be zero");
    }
  };
  check(distance_km, "distance");
  if (duration_min) {
    check(*duration_min, "duration");
    if (duration_min->rows() != distance_km.rows()) {
      throw InvalidArgument("duration matrix shape differs from distance matrix");
    }
  }
  DistanceMetric m(MetricKind::MatrixBacked);
  m.distance_km_ = std::move(distance_km);
  m.duration_min_ = std::move(duration_min);
  return m;
}

Eigen::Index DistanceMetric::matrix_size() const {
  return distance_km_ ? distance_km_->rows() : 0;
}

Scalar DistanceMetric::between(Eigen::Index i, Eigen::Index j, const PointMatrix& pts) const {
  switch (kind_) {
    case MetricKind::EuclideanDegrees:
      return euclidean_degrees({pts(i, 0), pts(i, 1)}, {pts(j, 0), pts(j, 1)});
    case MetricKind::HaversineKm:
      return haversine_km({pts(i, 0), pts(i, 1)}, {pts(j, 0), pts(j, 1)});
    case MetricKind::MatrixBacked:
      if (i < 0 || j < 0 || i >= distance_km_->rows() || j >= distance_km_->rows()) {
        throw InvalidArgument("matrix-backed metric: index out of bounds");
      }
      return (*distance_km_)(i, j);
  }
  throw InvalidArgument("unknown metric kind");
}

Scalar DistanceMetric::duration_between(Eigen::Index i, Eigen::Index j) const {
  if (kind_ != MetricKind::MatrixBacked || !duration_min_) {
    throw MissingData("no duration matrix available");
  }
  if (i < 0 || j < 0 || i >= duration_min_->rows() || j >= duration_min_->rows()) {
    throw InvalidArgument("duration matrix: index out of bounds");
  }
  return (*duration_min_)(i, j);
}

DistanceMetric DistanceMetric::restricted(std::span<const int> indices) const {
  if (kind_ != MetricKind::MatrixBacked) {
    return *this;
  }
  const Eigen::Index n = matrix_size();
  std::vector<int> idx(indices.begin(), indices.end());
  for (int i : idx) {
    if (i < 0 || i >= n) {
      throw InvalidArgument("matrix-backed metric: restriction index out of bounds");
    }
  }
  Eigen::MatrixXd d = (*distance_km_)(idx, idx);
  std::optional<Eigen::MatrixXd> t;
  if (duration_min_) {
    t = (*duration_min_)(idx, idx);
  }
  DistanceMetric m(MetricKind::MatrixBacked);
  m.distance_km_ = std::move(d);
  m.duration_min_ = std::move(t);
  return m;
}

bool is_permutation_of_n(std::span<const int> order, int n) {
  if (order.size() != static_cast<std::size_t>(n)) {
    return false;
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : order) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
      return false;
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

Scalar path_length(const PointMatrix& pts, std::span<const int> order,
                   const DistanceMetric& metric, bool closed) {
  const int n = static_cast<int>(pts.rows());
  if (n < 1) {
    throw InvalidArgument("path_length: empty point set");
  }
  if (!is_permutation_of_n(order, n)) {
    throw InvalidArgument("path_length: order is not a permutation of 0..n-1");
  }
  if (metric.kind() == MetricKind::MatrixBacked && metric.matrix_size() < n) {
    throw InvalidArgument("path_length: metric matrix smaller than point set");
  }
  Scalar total = 0.0;
  for (int i = 0; i + 1 < n; ++i) {
    total += metric.between(order[static_cast<std::size_t>(i)],
                            order[static_cast<std::size_t>(i) + 1], pts);
  }
  if (closed && n > 1) {
    total += metric.between(order[static_cast<std::size_t>(n) - 1], order[0], pts);
  }
  return total;
}

}  // namespace fieldroute

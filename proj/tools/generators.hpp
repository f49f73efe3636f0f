#pragma once

#include <cstdint>

#include "barbridge/complex.hpp"

namespace barbridge::cli {

// Two point clouds with matching coordinates; Q indexes the rows of the cross
// matrix.
struct PointPair {
  PointCloud q;
  PointCloud p;
};

// Independent noisy samples of the unit circle.
PointPair circle_pair(std::uint64_t seed, std::size_t q_points = 12, std::size_t p_points = 12,
                      double noise = 0.08);

// Q: Gaussian blobs placed evenly on the unit circle; P: the blob centres.
PointPair cluster_scenario(std::uint64_t seed, std::size_t blobs = 5, std::size_t per_blob = 8,
                           double spread = 0.08);

// P: a jittered grid on the flat torus (cos a, sin a, cos b, sin b) in R^4;
// Q: points on the essential circle b = 0.
PointPair torus_grid(std::uint64_t seed, std::size_t grid = 6, std::size_t circle_points = 10,
                     double jitter = 0.05);

// Q: a sample of a trefoil knot in R^3; P: the same points projected to the
// xy-plane (same row order).
PointPair trefoil(std::uint64_t seed, std::size_t points = 30, double jitter = 0.02);

}  // namespace barbridge::cli

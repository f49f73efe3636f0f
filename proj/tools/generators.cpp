#include "generators.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace barbridge::cli {

namespace {

constexpr double kTau = 2 * std::numbers::pi;

PointCloud noisy_circle(std::mt19937_64& rng, std::size_t n, double noise) {
  // Stratified angles: one per arc of length 2 pi / n.
  std::uniform_real_distribution<double> within(0, 1);
  std::normal_distribution<double> radial(0, noise);
  PointCloud out;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = kTau * (static_cast<double>(i) + within(rng)) / static_cast<double>(n);
    const double r = 1 + radial(rng);
    out.push_back({r * std::cos(a), r * std::sin(a)});
  }
  return out;
}

}  // namespace

PointPair circle_pair(std::uint64_t seed, std::size_t q_points, std::size_t p_points,
                      double noise) {
  std::mt19937_64 rng(seed);
  PointPair out;
  out.q = noisy_circle(rng, q_points, noise);
  out.p = noisy_circle(rng, p_points, noise);
  return out;
}

PointPair cluster_scenario(std::uint64_t seed, std::size_t blobs, std::size_t per_blob,
                           double spread) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> offset(0, spread);
  PointPair out;
  for (std::size_t b = 0; b < blobs; ++b) {
    const double a = kTau * static_cast<double>(b) / static_cast<double>(blobs);
    const double cx = std::cos(a), cy = std::sin(a);
    out.p.push_back({cx, cy});
    for (std::size_t i = 0; i < per_blob; ++i) out.q.push_back({cx + offset(rng), cy + offset(rng)});
  }
  return out;
}

PointPair torus_grid(std::uint64_t seed, std::size_t grid, std::size_t circle_points,
                     double jitter) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> wobble(0, jitter);
  std::uniform_real_distribution<double> angle(0, kTau);
  auto embed = [](double a, double b) {
    return std::vector<double>{std::cos(a), std::sin(a), std::cos(b), std::sin(b)};
  };
  PointPair out;
  for (std::size_t i = 0; i < grid; ++i)
    for (std::size_t j = 0; j < grid; ++j) {
      const double a = kTau * static_cast<double>(i) / static_cast<double>(grid) + wobble(rng);
      const double b = kTau * static_cast<double>(j) / static_cast<double>(grid) + wobble(rng);
      out.p.push_back(embed(a, b));
    }
  for (std::size_t i = 0; i < circle_points; ++i) out.q.push_back(embed(angle(rng), 0));
  return out;
}

PointPair trefoil(std::uint64_t seed, std::size_t points, double jitter) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> wobble(0, jitter);
  PointPair out;
  for (std::size_t i = 0; i < points; ++i) {
    const double t = kTau * static_cast<double>(i) / static_cast<double>(points) + wobble(rng);
    const double x = std::sin(t) + 2 * std::sin(2 * t);
    const double y = std::cos(t) - 2 * std::cos(2 * t);
    const double z = -std::sin(3 * t);
    out.q.push_back({x, y, z});
    out.p.push_back({x, y});
  }
  return out;
}

}  // namespace barbridge::cli

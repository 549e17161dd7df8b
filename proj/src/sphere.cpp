// Copyright 2026 The snqi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "snqi/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace snqi {

namespace {
constexpr double kPi = std::numbers::pi;
}

Direction::Direction(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {
  const double norm = std::sqrt(x * x + y * y + z * z);
  if (std::abs(norm - 1.0) > 1e-12)
    throw std::invalid_argument("Direction: vector is not unit length");
}

Direction Direction::from_spherical(double theta, double phi) {
  const double st = std::sin(theta);
  return {st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
}

double Direction::theta() const { return std::acos(std::clamp(z, -1.0, 1.0)); }
double Direction::phi() const { return std::atan2(y, x); }

Ket bloch_ket(const Direction& n) {
  const double th = n.theta(), ph = n.phi();
  return {cplx(std::cos(th / 2), 0.0),
          std::sin(th / 2) * cplx(std::cos(ph), std::sin(ph))};
}

Rotation Rotation::about_axis(std::array<double, 3> axis, double angle) {
  const double norm = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
  if (norm < 1e-14) throw std::invalid_argument("Rotation: zero axis");
  for (double& c : axis) c /= norm;
  return {axis, angle};
}

std::array<double, 3> Rotation::apply(const std::array<double, 3>& v) const {
  // Rodrigues: v cos + (k x v) sin + k (k.v)(1 - cos)
  const double c = std::cos(angle), s = std::sin(angle);
  const auto& k = axis;
  const double kdv = k[0] * v[0] + k[1] * v[1] + k[2] * v[2];
  const std::array<double, 3> kx = {k[1] * v[2] - k[2] * v[1], k[2] * v[0] - k[0] * v[2],
                                    k[0] * v[1] - k[1] * v[0]};
  std::array<double, 3> r;
  for (int i = 0; i < 3; ++i) r[i] = v[i] * c + kx[i] * s + k[i] * kdv * (1 - c);
  return r;
}

Direction Rotation::apply(const Direction& n) const {
  const auto r = apply(std::array<double, 3>{n.x, n.y, n.z});
  const double norm = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
  return {r[0] / norm, r[1] / norm, r[2] / norm};
}

Rotation rotation_taking_up_to(const Direction& n) {
  const double s = std::hypot(n.x, n.y);
  if (s < 1e-14) {
    if (n.z > 0) return Rotation::identity();
    return Rotation::about_axis({1, 0, 0}, kPi);
  }
  const double angle = std::acos(std::clamp(n.z, -1.0, 1.0));
  return Rotation::about_axis({-n.y / s, n.x / s, 0.0}, angle);
}

ComplexMatrix su2_of_rotation(const Rotation& r) {
  const double c = std::cos(r.angle / 2), s = std::sin(r.angle / 2);
  ComplexMatrix u = ComplexMatrix::identity(2) * cplx(c, 0);
  const ComplexMatrix axdots =
      pauli_x() * cplx(r.axis[0], 0) + pauli_y() * cplx(r.axis[1], 0) + pauli_z() * cplx(r.axis[2], 0);
  return u - axdots * cplx(0, s);
}

void gauss_legendre(std::size_t n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  const std::size_t m = (n + 1) / 2;
  for (std::size_t i = 0; i < m; ++i) {
    double x = std::cos(kPi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
}

SphereQuadrature SphereQuadrature::gauss_legendre_product(std::size_t n_theta, std::size_t n_phi) {
  if (n_theta == 0 || n_phi == 0)
    throw std::invalid_argument("gauss_legendre_product: node counts must be positive");
  std::vector<double> u, w;
  gauss_legendre(n_theta, u, w);
  SphereQuadrature q;
  q.scheme_ = QuadScheme::GaussLegendreProduct;
  q.n_theta_ = n_theta;
  q.n_phi_ = n_phi;
  q.nodes_.reserve(n_theta * n_phi);
  for (std::size_t i = 0; i < n_theta; ++i) {
    const double z = u[i];
    const double st = std::sqrt(std::max(0.0, 1.0 - z * z));
    for (std::size_t j = 0; j < n_phi; ++j) {
      const double phi = 2.0 * kPi * (static_cast<double>(j) + 0.5) / static_cast<double>(n_phi);
      const double norm = std::sqrt(st * st + z * z);
      q.nodes_.push_back({Direction(st * std::cos(phi) / norm, st * std::sin(phi) / norm, z / norm),
                          0.5 * w[i] / static_cast<double>(n_phi)});
    }
  }
  return q;
}

SphereQuadrature SphereQuadrature::monte_carlo(std::size_t samples, std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("monte_carlo: sample count must be positive");
  SphereQuadrature q;
  q.scheme_ = QuadScheme::MonteCarlo;
  q.seed_ = seed;
  q.nodes_.reserve(samples);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uz(-1.0, 1.0), uphi(0.0, 2.0 * kPi);
  const double w = 1.0 / static_cast<double>(samples);
  for (std::size_t k = 0; k < samples; ++k) {
    const double z = uz(rng);
    const double phi = uphi(rng);
    const double st = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double x = st * std::cos(phi), y = st * std::sin(phi);
    const double norm = std::sqrt(x * x + y * y + z * z);
    q.nodes_.push_back({Direction(x / norm, y / norm, z / norm), w});
  }
  return q;
}

double integrate(const SphereQuadrature& q, const std::function<double(const Direction&)>& f) {
  double s = 0;
  for (const auto& node : q.nodes()) {
    const double v = f(node.n);
    if (!std::isfinite(v)) throw NumericalError("integrate: non-finite integrand value");
    s += node.weight * v;
  }
  return s;
}

McEstimate integrate_mc(const SphereQuadrature& q,
                        const std::function<double(const Direction&)>& f) {
  if (q.scheme() != QuadScheme::MonteCarlo)
    throw std::invalid_argument("integrate_mc: requires a Monte-Carlo quadrature");
  double s = 0, s2 = 0;
  const double n = static_cast<double>(q.nodes().size());
  for (const auto& node : q.nodes()) {
    const double v = f(node.n);
    if (!std::isfinite(v)) throw NumericalError("integrate_mc: non-finite integrand value");
    s += v;
    s2 += v * v;
  }
  const double mean = s / n;
  const double var = std::max(0.0, s2 / n - mean * mean);
  return {mean, std::sqrt(var / n)};
}

ComplexMatrix integrate_matrix(const SphereQuadrature& q,
                               const std::function<ComplexMatrix(const Direction&)>& f) {
  ComplexMatrix acc;
  bool first = true;
  for (const auto& node : q.nodes()) {
    const ComplexMatrix v = f(node.n) * cplx(node.weight, 0);
    if (first) {
      acc = v;
      first = false;
    } else {
      acc = acc + v;
    }
  }
  return acc;
}

std::array<Direction, 4> tetrahedron_directions() {
  const double s2 = std::sqrt(2.0), s23 = std::sqrt(2.0 / 3.0);
  return {Direction(0, 0, 1), Direction(2 * s2 / 3, 0, -1.0 / 3),
          Direction(-s2 / 3, s23, -1.0 / 3), Direction(-s2 / 3, -s23, -1.0 / 3)};
}

Direction random_direction(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uz(-1.0, 1.0), uphi(0.0, 2.0 * kPi);
  const double z = uz(rng), phi = uphi(rng);
  const double st = std::sqrt(std::max(0.0, 1.0 - z * z));
  const double norm = std::sqrt(st * st + z * z);
  return Direction(st * std::cos(phi) / norm, st * std::sin(phi) / norm, z / norm);
}

}  // namespace snqi

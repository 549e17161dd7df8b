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

#ifndef SNQI_SPHERE_HPP
#define SNQI_SPHERE_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "snqi/qmat.hpp"

namespace snqi {

// Unit vector on S2.
struct Direction {
  double x, y, z;

  Direction(double x_, double y_, double z_);
  static Direction from_spherical(double theta, double phi);
  static Direction up() { return {0.0, 0.0, 1.0}; }

  double dot(const Direction& o) const { return x * o.x + y * o.y + z * o.z; }
  Direction operator-() const { return {-x, -y, -z}; }
  double theta() const;
  double phi() const;
};

/// Bloch ket |n> = cos(theta/2)|0> + sin(theta/2) e^{i phi} |1>.
Ket bloch_ket(const Direction& n);

// Proper rotation as axis-angle; applied with the Rodrigues formula.
struct Rotation {
  std::array<double, 3> axis;  // unit
  double angle;                // radians

  static Rotation identity() { return {{0, 0, 1}, 0.0}; }
  static Rotation about_axis(std::array<double, 3> axis, double angle);

  std::array<double, 3> apply(const std::array<double, 3>& v) const;
  Direction apply(const Direction& n) const;
};

/// Rotation about (z-hat x n) by arccos(n_z); the antipode n = -z uses a
/// half turn about x. Any choice differing by a z-gauge gives the same
/// covariant integrals.
Rotation rotation_taking_up_to(const Direction& n);

/// SU(2) representative: cos(a/2) 1 - i sin(a/2) (axis . sigma).
ComplexMatrix su2_of_rotation(const Rotation& r);

enum class QuadScheme { GaussLegendreProduct, MonteCarlo };

struct QuadratureNode {
  Direction n;
  double weight;
};

// Nodes and weights realizing the normalized uniform measure dn on S2.
class SphereQuadrature {
 public:
  static SphereQuadrature gauss_legendre_product(std::size_t n_theta, std::size_t n_phi);
  static SphereQuadrature monte_carlo(std::size_t samples, std::uint64_t seed);

  const std::vector<QuadratureNode>& nodes() const { return nodes_; }
  QuadScheme scheme() const { return scheme_; }
  std::uint64_t seed() const { return seed_; }
  std::size_t n_theta() const { return n_theta_; }
  std::size_t n_phi() const { return n_phi_; }

 private:
  SphereQuadrature() = default;
  std::vector<QuadratureNode> nodes_;
  QuadScheme scheme_ = QuadScheme::GaussLegendreProduct;
  std::uint64_t seed_ = 0;
  std::size_t n_theta_ = 0, n_phi_ = 0;
};

/// Named default seed for Monte-Carlo oracle runs.
inline constexpr std::uint64_t kDefaultMcSeed = 20260810ULL;

/// Gauss-Legendre nodes/weights on [-1, 1] (Newton iteration on P_n).
void gauss_legendre(std::size_t n, std::vector<double>& nodes, std::vector<double>& weights);

/// Sum of w_i f(n_i). Throws on non-finite integrand values.
double integrate(const SphereQuadrature& q, const std::function<double(const Direction&)>& f);

struct McEstimate {
  double value;
  double std_error;
};

/// Monte-Carlo mean with its standard error (quadrature must be MC).
McEstimate integrate_mc(const SphereQuadrature& q,
                        const std::function<double(const Direction&)>& f);

ComplexMatrix integrate_matrix(const SphereQuadrature& q,
                               const std::function<ComplexMatrix(const Direction&)>& f);

/// The four tetrahedron summit directions; pairwise dots are -1/3.
std::array<Direction, 4> tetrahedron_directions();

/// Uniform random direction from the given stream.
Direction random_direction(std::mt19937_64& rng);

}  // namespace snqi

#endif  // SNQI_SPHERE_HPP

// SPDX-License-Identifier: Apache-2.0

#ifndef SBFD_FIELD_HPP
#define SBFD_FIELD_HPP

#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "sbfd/global.hpp"

namespace sbfd
{

using Displacement = Eigen::Vector2cd;

// Recovered radial profile of one subdomain: u[i] at grid.point(i), u[n] on the
// boundary (local dof numbering of `dofs`).
struct SubdomainField
{
  int subdomain = 0;
  RadialGrid grid;
  DofMap dofs;
  std::vector<ComplexVector> u;
};

struct FieldSolution
{
  double omega = 0.0;
  std::vector<SubdomainField> subdomains;

  // Null when subdomain k was not recovered.
  const SubdomainField *find(int k) const;
};

// Backward sweep for the selected subdomains (all when `selection` is empty).
// Subdomains are processed concurrently on up to `threads` threads.
FieldSolution recover_all(std::span<const Subdomain> subdomains,
                          std::span<const RadialCondensation> condensations,
                          const GlobalSystem &system, const ComplexVector &u_global,
                          std::optional<std::vector<int>> selection = std::nullopt,
                          int threads = 1);

// Displacement at (xi, eta) on element `element` of the subdomain: linear between the
// two bracketing radial points, Lagrange along eta. Throws OutOfRange.
Displacement sample(const SubdomainField &field, const Subdomain &subdomain, double xi,
                    double eta, int element);

// Re(u) cos(phi) - Im(u) sin(phi), phi in degrees, 0 <= phi < 360.
RealVector phase_snapshot(const ComplexVector &u, double phase_degrees);
Eigen::Vector2d phase_snapshot(const Displacement &u, double phase_degrees);

struct FieldPoint
{
  Point position;
  Displacement u;
};

// Every radial grid point times the GLL nodes of each element plus `refinement`
// equally spaced points between consecutive nodes, mapped to Cartesian coordinates.
std::vector<FieldPoint> field_points(const FieldSolution &field,
                                     std::span<const Subdomain> subdomains, int refinement = 0);

// CSV writers. Throw IoError when the file cannot be written.
void write_field_csv(const std::filesystem::path &path, std::span<const FieldPoint> points);
void write_phase_csv(const std::filesystem::path &path, std::span<const FieldPoint> points,
                     double phase_degrees);
void write_surface_csv(const std::filesystem::path &path, std::span<const double> x,
                       std::span<const Complex> v);

}  // namespace sbfd

#endif  // SBFD_FIELD_HPP

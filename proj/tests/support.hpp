// SPDX-License-Identifier: Apache-2.0

// Shared fixtures and independent reference computations for the test suites.

#ifndef SBFD_TESTS_SUPPORT_HPP
#define SBFD_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "sbfd/assembly.hpp"
#include "sbfd/driver.hpp"
#include "sbfd/halfspace.hpp"
#include "sbfd/model.hpp"
#include "sbfd/radial.hpp"

namespace sbfd::test
{

// Half-space material of the verification problem.
Material rock();

// Strip half-width (m) and pressure (Pa) of the bundled half-space configuration.
inline constexpr double kHalfWidth = 15.0;
inline constexpr double kPressure = 1e9;

// The bundled half-space mesh (96 m square, four segments per edge, 10 GLL points,
// 100 radial steps) with the verification material.
HalfspaceMesh bundled_mesh();
Model bundled_model();

// Frobenius-norm relative difference |a - b| / |b|.
double relative_difference(const ComplexMatrix &a, const ComplexMatrix &b);

// Random star-shaped subdomain around the origin with at most 10 boundary nodes
// (m <= 20 dofs): a closed polygon for bounded, an open arc for unbounded.
Subdomain random_subdomain(std::mt19937 &rng, SubdomainKind kind);

//
// Reference solution of the full radial block system: rows -1..n+1 over unknowns
// -1..n+1 assembled directly from the radial ODE and solved by one dense LU.
// `stiffness` maps boundary displacement to boundary force; `interior[i]` maps it to
// the displacement at grid point i (i = 0..n).
//
struct DenseRadialSolution
{
  ComplexMatrix stiffness;
  std::vector<ComplexMatrix> interior;
};

DenseRadialSolution dense_radial_solve(const CoefficientMatrices &C, const RadialGrid &grid,
                                       double omega, const DampingProfile &damping, int sign);

// Surface displacement of the strip-loaded half-space from GSL adaptive quadrature:
// QAG up to a cut-off and QAWF Fourier integrals for the tail.
Complex reference_surface_displacement(const HalfspaceProblem &p, double x);

// Condensed stiffness of the bundled bounded subdomain at `frequency` with n steps.
ComplexMatrix bundled_bounded_stiffness(int steps, double frequency);

}  // namespace sbfd::test

#endif  // SBFD_TESTS_SUPPORT_HPP

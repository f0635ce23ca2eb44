// SPDX-License-Identifier: Apache-2.0

#include "sbfd/assembly.hpp"

#include <limits>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "sbfd/errors.hpp"

namespace sbfd
{

CoefficientMatrices assemble_coefficients(const Subdomain &s, int quadrature_points)
{
  return assemble_coefficients(s, dof_map(s), quadrature_points);
}

CoefficientMatrices assemble_coefficients(const Subdomain &s, const DofMap &dofs,
                                          int quadrature_points)
{
  const int m = dofs.size();
  CoefficientMatrices c;
  c.E0.setZero(m, m);
  c.E1.setZero(m, m);
  c.E2.setZero(m, m);
  c.M0.setZero(m, m);

  const Eigen::Matrix3d D = elasticity_matrix(s.material);
  const double rho = s.material.density;

  for (const auto &element : s.elements)
  {
    const int npts = quadrature_points > 0 ? quadrature_points : element.degree() + 2;
    const auto rule = gauss_legendre(npts);
    const auto map = dofs.element_dofs(element);
    const int ne = static_cast<int>(map.size());

    RealMatrix e0 = RealMatrix::Zero(ne, ne);
    RealMatrix e1 = RealMatrix::Zero(ne, ne);
    RealMatrix e2 = RealMatrix::Zero(ne, ne);
    RealMatrix m0 = RealMatrix::Zero(ne, ne);
    for (int q = 0; q < npts; ++q)
    {
      const auto blocks = strain_blocks(s.center, element, rule.points[q]);
      const double w = rule.weights[q] * blocks.jac.det;
      const Eigen::Matrix<double, 3, Eigen::Dynamic> DB1 = D * blocks.B1;
      e0.noalias() += w * blocks.B1.transpose() * DB1;
      e1.noalias() += w * blocks.B2.transpose() * DB1;
      e2.noalias() += w * blocks.B2.transpose() * (D * blocks.B2);
      for (int a = 0; a < element.degree() + 1; ++a)
        for (int b = 0; b < element.degree() + 1; ++b)
        {
          const double v = w * rho * blocks.N[a] * blocks.N[b];
          m0(2 * a, 2 * b) += v;
          m0(2 * a + 1, 2 * b + 1) += v;
        }
    }
    for (int a = 0; a < ne; ++a)
      for (int b = 0; b < ne; ++b)
      {
        c.E0(map[a], map[b]) += e0(a, b);
        c.E1(map[a], map[b]) += e1(a, b);
        c.E2(map[a], map[b]) += e2(a, b);
        c.M0(map[a], map[b]) += m0(a, b);
      }
  }

  Eigen::SelfAdjointEigenSolver<RealMatrix> eig(c.E0, Eigen::EigenvaluesOnly);
  const double lo = eig.eigenvalues().minCoeff();
  const double hi = eig.eigenvalues().maxCoeff();
  if (!(lo > 0.0) || hi / lo > kMaxE0Condition)
    throw SingularE0(lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity());
  return c;
}

void fix_radial_dofs(CoefficientMatrices &C, const std::vector<int> &local_dofs)
{
  if (local_dofs.empty())
    return;
  const double scale = C.E0.diagonal().cwiseAbs().mean();
  for (int d : local_dofs)
  {
    if (d < 0 || d >= C.size())
      throw std::out_of_range("fixed dof out of range");
    for (RealMatrix *M : {&C.E0, &C.E1, &C.E2, &C.M0})
    {
      M->row(d).setZero();
      M->col(d).setZero();
    }
    C.E0(d, d) = scale;
  }
}

}  // namespace sbfd

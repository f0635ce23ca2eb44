// SPDX-License-Identifier: Apache-2.0

#include "sbfd/field.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include "sbfd/errors.hpp"
#include "sbfd/parallel.hpp"

namespace sbfd
{

const SubdomainField *FieldSolution::find(int k) const
{
  for (const auto &f : subdomains)
    if (f.subdomain == k)
      return &f;
  return nullptr;
}

FieldSolution recover_all(std::span<const Subdomain> subdomains,
                          std::span<const RadialCondensation> condensations,
                          const GlobalSystem &system, const ComplexVector &u_global,
                          std::optional<std::vector<int>> selection, int threads)
{
  std::vector<int> chosen;
  if (selection)
    chosen = *selection;
  else
    for (int k = 0; k < static_cast<int>(subdomains.size()); ++k)
      chosen.push_back(k);
  for (int k : chosen)
    if (k < 0 || k >= static_cast<int>(subdomains.size()))
      throw std::out_of_range("subdomain selection " + std::to_string(k) + " out of range");

  FieldSolution out;
  out.omega = system.omega;
  out.subdomains.resize(chosen.size());

  parallel_for(static_cast<int>(chosen.size()), threads, [&](int j) {
    const int k = chosen[j];
    auto &f = out.subdomains[j];
    f.subdomain = k;
    f.grid = subdomains[k].radial;
    f.dofs = dof_map(subdomains[k]);
    f.u = recover_interior(condensations[k], gather(system, k, u_global));
  });
  return out;
}

Displacement sample(const SubdomainField &field, const Subdomain &subdomain, double xi,
                    double eta, int element)
{
  if (element < 0 || element >= static_cast<int>(subdomain.elements.size()))
    throw OutOfRange("element index " + std::to_string(element) + " out of range");
  if (!(eta >= -1.0 && eta <= 1.0))
    throw OutOfRange("eta = " + std::to_string(eta) + " outside [-1, 1]");
  const auto &grid = field.grid;
  const int n = grid.steps;
  const double lo = std::min(grid.start, grid.end);
  const double hi = std::max(grid.start, grid.end);
  if (!(xi >= lo && xi <= hi))
    throw OutOfRange("xi = " + std::to_string(xi) + " outside the radial grid [" +
                     std::to_string(lo) + ", " + std::to_string(hi) + "]");

  // Bracketing interval [i, i+1] in grid order.
  const double s = (xi - grid.start) / grid.step();
  int i = std::clamp(static_cast<int>(std::floor(s)), 0, n - 1);
  double t = s - i;
  if (xi == grid.end)
  {
    i = n - 1;
    t = 1.0;
  }
  else if (xi == grid.point(i))
    t = 0.0;

  const auto &e = subdomain.elements[element];
  const auto shape = shape_functions(e.basis(), eta);
  const auto dofs = field.dofs.element_dofs(e);
  Displacement out = Displacement::Zero();
  for (std::size_t k = 0; k < e.node_ids.size(); ++k)
    for (int c = 0; c < kDofsPerNode; ++c)
    {
      const int d = dofs[kDofsPerNode * k + c];
      const Complex radial =
        t == 0.0 ? field.u[i][d]
                 : (t == 1.0 ? field.u[i + 1][d] : (1.0 - t) * field.u[i][d] + t * field.u[i + 1][d]);
      out[c] += shape.N[k] * radial;
    }
  return out;
}

namespace
{

std::pair<double, double> phase_factors(double phase_degrees)
{
  if (!(phase_degrees >= 0.0 && phase_degrees < 360.0))
    throw std::invalid_argument("phase angle must lie in [0, 360)");
  // Exact values at the quarter turns so the 0/90/180/270 snapshots are exact.
  if (phase_degrees == 0.0)
    return {1.0, 0.0};
  if (phase_degrees == 90.0)
    return {0.0, 1.0};
  if (phase_degrees == 180.0)
    return {-1.0, 0.0};
  if (phase_degrees == 270.0)
    return {0.0, -1.0};
  const double phi = phase_degrees * std::numbers::pi / 180.0;
  return {std::cos(phi), std::sin(phi)};
}

}  // namespace

RealVector phase_snapshot(const ComplexVector &u, double phase_degrees)
{
  const auto [c, s] = phase_factors(phase_degrees);
  return u.real() * c - u.imag() * s;
}

Eigen::Vector2d phase_snapshot(const Displacement &u, double phase_degrees)
{
  const auto [c, s] = phase_factors(phase_degrees);
  return u.real() * c - u.imag() * s;
}

std::vector<FieldPoint> field_points(const FieldSolution &field,
                                     std::span<const Subdomain> subdomains, int refinement)
{
  if (refinement < 0)
    throw std::invalid_argument("field refinement must be non-negative");
  std::vector<FieldPoint> points;
  for (const auto &f : field.subdomains)
  {
    const auto &s = subdomains[f.subdomain];
    for (int el = 0; el < static_cast<int>(s.elements.size()); ++el)
    {
      const auto &e = s.elements[el];
      const auto &nodes = e.basis().nodes;
      std::vector<double> etas;
      for (int k = 0; k <= e.degree(); ++k)
      {
        etas.push_back(nodes[k]);
        if (k < e.degree())
          for (int r = 1; r <= refinement; ++r)
            etas.push_back(nodes[k] + (nodes[k + 1] - nodes[k]) * r / (refinement + 1));
      }
      for (int i = 0; i <= f.grid.steps; ++i)
      {
        const double xi = f.grid.point(i);
        for (double eta : etas)
          points.push_back({map_point(s.center, e, xi, eta), sample(f, s, xi, eta, el)});
      }
    }
  }
  return points;
}

namespace
{

std::ofstream open_csv(const std::filesystem::path &path, const char *header)
{
  std::ofstream out(path);
  if (!out)
    throw IoError("cannot open " + path.string() + " for writing");
  out << header << '\n';
  return out;
}

void write_row(std::ofstream &out, std::initializer_list<double> values)
{
  char buffer[32];
  bool first = true;
  for (double v : values)
  {
    std::snprintf(buffer, sizeof buffer, "%.17g", v);
    if (!first)
      out << ',';
    out << buffer;
    first = false;
  }
  out << '\n';
}

void close_csv(std::ofstream &out, const std::filesystem::path &path)
{
  out.close();
  if (!out)
    throw IoError("failed writing " + path.string());
}

}  // namespace

void write_field_csv(const std::filesystem::path &path, std::span<const FieldPoint> points)
{
  auto out = open_csv(path, "x,y,re_ux,im_ux,re_uy,im_uy");
  for (const auto &p : points)
    write_row(out, {p.position.x(), p.position.y(), p.u[0].real(), p.u[0].imag(), p.u[1].real(),
                    p.u[1].imag()});
  close_csv(out, path);
}

void write_phase_csv(const std::filesystem::path &path, std::span<const FieldPoint> points,
                     double phase_degrees)
{
  auto out = open_csv(path, "x,y,ux,uy");
  for (const auto &p : points)
  {
    const auto r = phase_snapshot(p.u, phase_degrees);
    write_row(out, {p.position.x(), p.position.y(), r[0], r[1]});
  }
  close_csv(out, path);
}

void write_surface_csv(const std::filesystem::path &path, std::span<const double> x,
                       std::span<const Complex> v)
{
  if (x.size() != v.size())
    throw std::invalid_argument("surface abscissae and values differ in length");
  auto out = open_csv(path, "x,re_v,im_v");
  for (std::size_t k = 0; k < x.size(); ++k)
    write_row(out, {x[k], v[k].real(), v[k].imag()});
  close_csv(out, path);
}

}  // namespace sbfd

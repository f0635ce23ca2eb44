// SPDX-License-Identifier: Apache-2.0

#include "sbfd/driver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include "sbfd/errors.hpp"
#include "sbfd/parallel.hpp"

namespace sbfd
{

Solver::Solver(Model model, int threads) : model_(std::move(model))
{
  coefficients_.resize(model_.subdomains.size());
  parallel_for(static_cast<int>(model_.subdomains.size()), threads, [this](int k) {
    const auto &s = model_.subdomains[k];
    const DofMap dofs = dof_map(s);
    coefficients_[k] = assemble_coefficients(s, dofs);
    // A scaling centre on the symmetry plane puts the radial lines through plane
    // nodes inside the plane, so u_x vanishes along all of them.
    if (model_.symmetry_plane_x && std::abs(s.center.x() - *model_.symmetry_plane_x) < 1e-9)
    {
      std::vector<int> fixed;
      for (const auto &e : s.elements)
        for (std::size_t n = 0; n < e.node_ids.size(); ++n)
          if (std::abs(e.coords[n].x() - *model_.symmetry_plane_x) < 1e-9)
            fixed.push_back(dofs.local(e.node_ids[n], 0));
      std::sort(fixed.begin(), fixed.end());
      fixed.erase(std::unique(fixed.begin(), fixed.end()), fixed.end());
      fix_radial_dofs(coefficients_[k], fixed);
    }
  });
}

std::vector<RadialCondensation> Solver::condense_all(double omega, RecoveryMode mode,
                                                     int threads) const
{
  std::vector<RadialCondensation> out(model_.subdomains.size());
  parallel_for(static_cast<int>(out.size()), threads, [&](int k) {
    const auto &s = model_.subdomains[k];
    try
    {
      out[k] = condense(coefficients_[k], s.radial, omega, s.damping, s.sign(), mode);
    }
    catch (const Error &e)
    {
      throw Error("subdomain '" + s.name + "': " + e.what());
    }
  });
  return out;
}

LoadCase Solver::load_case(double pressure, double half_width, double omega) const
{
  return {pressure, half_width, model_.surface, omega};
}

std::vector<std::pair<int, double>> surface_nodes(const Model &model)
{
  std::map<int, double> nodes;
  for (const auto &e : model.surface)
    for (std::size_t k = 0; k < e.node_ids.size(); ++k)
      nodes.emplace(e.node_ids[k], e.coords[k].x());
  std::vector<std::pair<int, double>> out(nodes.begin(), nodes.end());
  std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) { return a.second < b.second; });
  return out;
}

std::vector<Complex> analytic_surface(const Material &material, double pressure,
                                      double half_width, double frequency,
                                      const std::vector<double> &x,
                                      const OracleSettings &settings, int threads)
{
  const HalfspaceProblem problem{material, pressure, half_width, frequency};
  std::vector<Complex> out(x.size());
  parallel_for(static_cast<int>(x.size()), threads, [&](int k) {
    out[k] = surface_displacement(problem, x[k], settings).value;
  });
  return out;
}

FrequencyResult Solver::solve(double frequency, const SolveOptions &options,
                              GlobalSystem *system_out, ComplexVector *solution_out) const
{
  if (!(frequency > 0.0))
    throw std::invalid_argument("frequency must be positive");
  const auto started = std::chrono::steady_clock::now();
  const double omega = 2.0 * std::numbers::pi * frequency;

  const auto mode = options.recover_field ? options.recovery : RecoveryMode::replay;
  const auto condensations = condense_all(omega, mode, options.threads);
  GlobalSystem system = assemble_global(model_.subdomains, condensations);
  if (model_.symmetry_plane_x)
    system = apply_symmetry_constraints(std::move(system), *model_.symmetry_plane_x);
  system.load = strip_load_vector(system, load_case(options.pressure, options.half_width, omega));
  const ComplexVector u = sbfd::solve(system);

  FrequencyResult r;
  r.frequency = frequency;
  r.dofs = system.size();
  r.constrained = static_cast<int>(system.constrained.size());
  // Residual over the free dofs; constrained rows hold reactions.
  ComplexVector residual = system.stiffness * u - system.load;
  for (int d : system.constrained)
    residual[d] = 0.0;
  const double fnorm = system.load.norm();
  r.residual = fnorm > 0.0 ? residual.norm() / fnorm : 0.0;

  for (const auto &[id, x] : surface_nodes(model_))
  {
    r.surface_x.push_back(x);
    r.surface_v.push_back(u[system.dof(id, 1)]);
  }
  if (options.oracle)
  {
    r.analytic_v = analytic_surface(model_.subdomains.front().material, options.pressure,
                                    options.half_width, frequency, r.surface_x,
                                    options.oracle_settings, options.threads);
    double sse = 0.0;
    double norm = 0.0;
    for (std::size_t k = 0; k < r.surface_v.size(); ++k)
    {
      sse += std::norm(r.surface_v[k] - r.analytic_v[k]);
      norm += std::norm(r.analytic_v[k]);
    }
    r.squared_error = sse;
    r.relative_l2 = std::sqrt(sse / norm);
  }
  if (options.recover_field)
    r.field = recover_all(model_.subdomains, condensations, system, u, options.field_subdomains,
                          options.threads);

  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  if (system_out)
    *system_out = std::move(system);
  if (solution_out)
    *solution_out = u;
  return r;
}

double pressure_wavelength(const Material &material, double frequency)
{
  return wave_speeds(material).pressure / frequency;
}

std::vector<ConvergenceRow> convergence_study(const HalfspaceMesh &base, double frequency,
                                              ConvergenceAxis axis,
                                              const std::vector<int> &values,
                                              const SolveOptions &options)
{
  if (values.empty())
    throw std::invalid_argument("convergence study needs at least one value");
  for (std::size_t k = 1; k < values.size(); ++k)
    if (values[k] <= values[k - 1])
      throw std::invalid_argument("convergence values must be strictly increasing");
  if (!options.oracle)
    throw std::invalid_argument("convergence study needs the analytic oracle");

  SolveOptions opts = options;
  opts.recover_field = false;
  const double wavelength = pressure_wavelength(base.material, frequency);

  // The analytic curve depends on the surface nodes only, so it is cached per node set.
  std::map<std::vector<double>, std::vector<Complex>> analytic;
  std::vector<ConvergenceRow> rows;
  for (int value : values)
  {
    HalfspaceMesh mesh = base;
    if (axis == ConvergenceAxis::radial_steps)
      mesh.radial_steps = value;
    else
      mesh.degree = value - 1;
    Solver solver(make_model(halfspace_mesh(mesh)), opts.threads);
    opts.oracle = false;
    const auto r = solver.solve(frequency, opts);
    auto it = analytic.find(r.surface_x);
    if (it == analytic.end())
      it = analytic
             .emplace(r.surface_x,
                      analytic_surface(base.material, opts.pressure, opts.half_width, frequency,
                                       r.surface_x, opts.oracle_settings, opts.threads))
             .first;
    double sse = 0.0;
    for (std::size_t k = 0; k < r.surface_v.size(); ++k)
      sse += std::norm(r.surface_v[k] - it->second[k]);

    const auto &model = solver.model();
    const double per = axis == ConvergenceAxis::radial_steps
                         ? value * wavelength / model.longest_radial_distance()
                         : value * wavelength / model.longest_element_length();
    rows.push_back({value, per, sse});
  }
  return rows;
}

}  // namespace sbfd

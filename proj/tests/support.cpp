// SPDX-License-Identifier: Apache-2.0

#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

namespace sbfd::test
{

Material rock()
{
  return {1e10, 0.2, 2500.0, 0.05};
}

HalfspaceMesh bundled_mesh()
{
  HalfspaceMesh h;
  h.size = 96.0;
  h.segments = 4;
  h.degree = 9;
  h.material = rock();
  h.radial_steps = 100;
  return h;
}

Model bundled_model()
{
  return make_model(halfspace_mesh(bundled_mesh()));
}

double relative_difference(const ComplexMatrix &a, const ComplexMatrix &b)
{
  return (a - b).norm() / b.norm();
}

Subdomain random_subdomain(std::mt19937 &rng, SubdomainKind kind)
{
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> degree(1, 3);
  const bool bounded = kind == SubdomainKind::bounded;

  // Vertex angles: a full turn for a closed loop, an arc below pi for an open fan.
  const int vertices = bounded ? std::uniform_int_distribution<int>(3, 5)(rng)
                               : std::uniform_int_distribution<int>(2, 4)(rng);
  const int elements = bounded ? vertices : vertices - 1;
  std::vector<int> degrees(elements);
  int nodes = bounded ? 0 : 1;
  for (int &d : degrees)
  {
    d = degree(rng);
    nodes += d;
  }
  while (nodes > 10)
  {
    auto it = std::max_element(degrees.begin(), degrees.end());
    --*it;
    --nodes;
  }

  const double span = bounded ? 2.0 * std::numbers::pi : (0.4 + 0.5 * unit(rng)) * std::numbers::pi;
  const double offset = 2.0 * std::numbers::pi * unit(rng);
  MeshDescription mesh;
  for (int k = 0; k < vertices; ++k)
  {
    // Jittered but ordered angles keep the polygon star-shaped about the origin.
    const double slot = span / (bounded ? vertices : vertices - 1);
    const double jitter = (k == 0 || (!bounded && k == vertices - 1)) ? 0.0 : 0.3 * (unit(rng) - 0.5);
    const double theta = offset + slot * (k + jitter);
    const double r = 0.6 + 0.8 * unit(rng);
    mesh.vertices.push_back({k, Point(r * std::cos(theta), r * std::sin(theta))});
  }
  MeshSubdomain sub;
  sub.name = bounded ? "random-bounded" : "random-unbounded";
  sub.kind = kind;
  sub.center = Point::Zero();
  for (int k = 0; k < elements; ++k)
  {
    mesh.elements.push_back({k, k, (k + 1) % vertices, degrees[k]});
    sub.elements.push_back(k);
  }
  sub.material = {1e9 * (1.0 + 99.0 * unit(rng)), 0.45 * unit(rng), 1000.0 + 2000.0 * unit(rng),
                  unit(rng)};
  sub.radial.steps = std::uniform_int_distribution<int>(2, 30)(rng);
  if (bounded)
  {
    // Log-uniform in [1e-3, 0.2]. Closer to the scaling centre the block system itself
    // loses digits in double precision, so no solver can be held to 1e-9 there.
    sub.radial.start = 1e-3 * std::pow(200.0, unit(rng));
    sub.damping = DampingProfile::constant(sub.material.damping_ratio);
  }
  else
  {
    sub.radial.start = 1.5 + 1.5 * unit(rng);
    sub.damping = DampingProfile::linear(unit(rng), sub.material.damping_ratio);
  }
  mesh.subdomains.push_back(sub);
  return make_model(mesh).subdomains.front();
}

DenseRadialSolution dense_radial_solve(const CoefficientMatrices &C, const RadialGrid &grid,
                                       double omega, const DampingProfile &damping, int sign)
{
  const int m = C.size();
  const int n = grid.steps;
  const int blocks = n + 3;  // unknowns u_{-1} .. u_{n+1}
  const double h = (grid.end - grid.start) / n;
  ComplexMatrix A = ComplexMatrix::Zero(blocks * m, blocks * m);
  auto put = [&](int row, int unknown, const ComplexMatrix &M) {
    A.block((row + 1) * m, (unknown + 1) * m, m, m) += M;
  };
  auto xi_at = [&](int i) { return i == n ? grid.end : grid.start + i * h; };
  auto modulus = [&](double xi) {
    const double t = (xi - grid.start) / (grid.end - grid.start);
    const double zeta = damping.kind == DampingProfile::Kind::constant
                          ? damping.start
                          : damping.start + t * (damping.end - damping.start);
    return Complex(1.0, 2.0 * zeta);
  };
  const ComplexMatrix E0 = C.E0.cast<Complex>();
  const ComplexMatrix E1 = C.E1.cast<Complex>();
  const ComplexMatrix E2 = C.E2.cast<Complex>();
  const ComplexMatrix M0 = C.M0.cast<Complex>();

  // c [xi^2 E0 u'' + xi (E0 + E1^T - E1) u' - E2 u] + omega^2 xi^2 M0 u = 0 at xi_0..xi_n.
  for (int i = 0; i <= n; ++i)
  {
    const double xi = xi_at(i);
    const Complex c = modulus(xi);
    const ComplexMatrix second = c * xi * xi / (h * h) * E0;
    const ComplexMatrix first = c * xi / (2.0 * h) * (E0 + E1.transpose() - E1);
    put(i, i - 1, second - first);
    put(i, i, -2.0 * second - c * E2 + omega * omega * xi * xi * M0);
    put(i, i + 1, second + first);
  }
  // Internal force c [xi E0 u' + E1^T u]: zero at xi_0, the boundary force at xi_n.
  for (int at : {0, n})
  {
    const int row = at == 0 ? -1 : n + 1;
    const double xi = xi_at(at);
    const Complex c = modulus(xi);
    put(row, at - 1, -c * xi / (2.0 * h) * E0);
    put(row, at, c * E1.transpose());
    put(row, at + 1, c * xi / (2.0 * h) * E0);
  }

  // Unit boundary forces (sign-adjusted internal force) in every direction.
  ComplexMatrix rhs = ComplexMatrix::Zero(blocks * m, m);
  rhs.bottomRows(m) = double(sign) * ComplexMatrix::Identity(m, m);
  const ComplexMatrix X = A.fullPivLu().solve(rhs);

  DenseRadialSolution out;
  const ComplexMatrix flexibility = X.block((n + 1) * m, 0, m, m);
  out.stiffness = flexibility.inverse();
  for (int i = 0; i <= n; ++i)
    out.interior.push_back(X.block((i + 1) * m, 0, m, m) * out.stiffness);
  return out;
}

namespace
{

struct Halfspace
{
  Complex kp2;
  Complex ks2;
  double b;
  double x;
};

Complex root(Complex z)
{
  Complex r = std::sqrt(z);
  return r.real() < 0.0 ? -r : r;
}

// alpha / (t R) with the Rayleigh function R = (t^2 + beta^2)^2 - 4 t^2 alpha beta; the
// full integrand is this times sin(b t) cos(x t). R is evaluated in rationalised form,
// R = P(s) / ((2 s - ks^2)^2 + 4 s alpha beta) with s = t^2 and
// P(s) = 16 s^3 (kp^2 - ks^2) + 8 ks^2 s^2 (3 ks^2 - 2 kp^2) - 8 s ks^6 + ks^8,
// which avoids the t^4 cancellation of the direct form in the far tail.
Complex envelope(const Halfspace &h, double t)
{
  const double s = t * t;
  const Complex a = root(s - h.kp2);
  const Complex be = root(s - h.ks2);
  const Complex k2 = h.ks2;
  const Complex P = 16.0 * s * s * s * (h.kp2 - k2) + 8.0 * k2 * s * s * (3.0 * k2 - 2.0 * h.kp2) -
                    8.0 * s * k2 * k2 * k2 + k2 * k2 * k2 * k2;
  const Complex Q = (2.0 * s - k2) * (2.0 * s - k2) + 4.0 * s * a * be;
  return a * Q / (t * P);
}

Complex full_integrand(const Halfspace &h, double t)
{
  if (t == 0.0)
  {
    const Complex a = root(-h.kp2);
    const Complex q = h.ks2 * h.ks2;
    return h.b * a / q;
  }
  return envelope(h, t) * std::sin(h.b * t) * std::cos(h.x * t);
}

struct Part
{
  const Halfspace *h;
  bool imaginary;
};

double full_part(double t, void *params)
{
  const auto *p = static_cast<Part *>(params);
  const Complex v = full_integrand(*p->h, t);
  return p->imaginary ? v.imag() : v.real();
}

double envelope_part(double t, void *params)
{
  const auto *p = static_cast<Part *>(params);
  const Complex v = 0.5 * envelope(*p->h, t);
  return p->imaginary ? v.imag() : v.real();
}

void check(int status, const char *what)
{
  if (status != GSL_SUCCESS)
    throw std::runtime_error(std::string("GSL ") + what + ": " + gsl_strerror(status));
}

}  // namespace

Complex reference_surface_displacement(const HalfspaceProblem &p, double x)
{
  gsl_set_error_handler_off();
  const auto speeds = wave_speeds(p.material);
  const double omega = 2.0 * std::numbers::pi * p.frequency;
  const Complex c(1.0, 2.0 * p.material.damping_ratio);
  const Halfspace h{omega * omega / (speeds.pressure * speeds.pressure * c),
                    omega * omega / (speeds.shear * speeds.shear * c), p.half_width, x};

  // Near part: adaptive Gauss-Kronrod on [0, cut] split into short pieces so every
  // piece holds a few oscillations at most.
  const double ks = std::sqrt(std::abs(h.ks2));
  const double cut = std::max(8.0 * ks, 40.0 / p.half_width);
  const double rate = std::abs(x) + p.half_width;
  const int pieces = std::max(64, static_cast<int>(std::ceil(cut * rate / std::numbers::pi)));
  const std::size_t limit = 2000;
  gsl_integration_workspace *ws = gsl_integration_workspace_alloc(limit);
  gsl_integration_workspace *cycle = gsl_integration_workspace_alloc(limit);
  Complex near = 0.0;
  Complex tail = 0.0;
  for (bool imaginary : {false, true})
  {
    Part part{&h, imaginary};
    gsl_function f{&full_part, &part};
    double sum = 0.0;
    for (int k = 0; k < pieces; ++k)
    {
      double value = 0.0;
      double error = 0.0;
      const double a = cut * k / pieces;
      const double b = cut * (k + 1) / pieces;
      check(gsl_integration_qag(&f, a, b, 1e-14, 1e-11, limit, GSL_INTEG_GAUSS61, ws, &value, &error),
            "qag");
      sum += value;
    }
    // Tail: sin(b t) cos(x t) = [sin((b + x) t) + sin((b - x) t)] / 2.
    gsl_function g{&envelope_part, &part};
    double tail_sum = 0.0;
    for (double w : {p.half_width + x, p.half_width - x})
    {
      if (w == 0.0)
        continue;
      gsl_integration_qawo_table *table =
        gsl_integration_qawo_table_alloc(std::abs(w), 1.0, GSL_INTEG_SINE, 50);
      double value = 0.0;
      double error = 0.0;
      const double tolerance = 1e-12 * std::max(1.0, std::abs(sum));
      check(gsl_integration_qawf(&g, cut, tolerance, limit, ws, cycle, table, &value, &error),
            "qawf");
      gsl_integration_qawo_table_free(table);
      tail_sum += w > 0.0 ? value : -value;
    }
    if (imaginary)
    {
      near.imag(sum);
      tail.imag(tail_sum);
    }
    else
    {
      near.real(sum);
      tail.real(tail_sum);
    }
  }
  gsl_integration_workspace_free(cycle);
  gsl_integration_workspace_free(ws);

  const double mu = p.material.shear_modulus();
  const double ks2 = omega * omega / (speeds.shear * speeds.shear);
  return 2.0 * ks2 * p.pressure / (std::numbers::pi * mu * c * c) * (near + tail);
}

ComplexMatrix bundled_bounded_stiffness(int steps, double frequency)
{
  const Model model = bundled_model();
  const auto it = std::find_if(model.subdomains.begin(), model.subdomains.end(),
                               [](const Subdomain &s) { return s.kind == SubdomainKind::bounded; });
  RadialGrid grid = it->radial;
  grid.steps = steps;
  const auto C = assemble_coefficients(*it);
  return condense(C, grid, 2.0 * std::numbers::pi * frequency, it->damping, it->sign()).stiffness;
}

}  // namespace sbfd::test

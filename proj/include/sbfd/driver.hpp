// SPDX-License-Identifier: Apache-2.0

#ifndef SBFD_DRIVER_HPP
#define SBFD_DRIVER_HPP

#include <optional>
#include <vector>

#include "sbfd/assembly.hpp"
#include "sbfd/field.hpp"
#include "sbfd/halfspace.hpp"
#include "sbfd/model.hpp"

namespace sbfd
{

struct SolveOptions
{
  double pressure = 1e9;
  double half_width = 10.0;
  bool recover_field = false;
  std::optional<std::vector<int>> field_subdomains;  // all when empty
  RecoveryMode recovery = RecoveryMode::stored;
  bool oracle = false;
  OracleSettings oracle_settings;
  int threads = 1;  // used inside one frequency (condensation, recovery, oracle)
};

struct FrequencyResult
{
  double frequency = 0.0;
  int dofs = 0;
  int constrained = 0;
  double residual = 0.0;
  std::vector<double> surface_x;          // surface nodes, ascending x
  std::vector<Complex> surface_v;         // vertical displacement there
  std::vector<Complex> analytic_v;        // empty without the oracle
  std::optional<double> squared_error;    // sum over surface nodes of |v - v_analytic|^2
  std::optional<double> relative_l2;      // sqrt(squared_error / sum |v_analytic|^2)
  std::optional<FieldSolution> field;
  double seconds = 0.0;
};

//
// Frequency-independent part of a model: coefficient matrices per subdomain. Solving
// at one frequency reads it only, so one Solver serves concurrent frequencies.
//
class Solver
{
public:
  explicit Solver(Model model, int threads = 1);

  const Model &model() const { return model_; }
  const std::vector<CoefficientMatrices> &coefficients() const { return coefficients_; }

  // Condensations of every subdomain at angular frequency omega.
  std::vector<RadialCondensation> condense_all(double omega, RecoveryMode mode,
                                               int threads = 1) const;

  // Assemble, constrain, load and solve at `frequency` (Hz). Returns the global
  // system and its solution through the optional out-parameters.
  FrequencyResult solve(double frequency, const SolveOptions &options,
                        GlobalSystem *system_out = nullptr,
                        ComplexVector *solution_out = nullptr) const;

  // Strip load case for this model.
  LoadCase load_case(double pressure, double half_width, double omega) const;

private:
  Model model_;
  std::vector<CoefficientMatrices> coefficients_;
};

// Node ids and abscissae of the loaded-surface nodes, ascending in x.
std::vector<std::pair<int, double>> surface_nodes(const Model &model);

// Analytic surface curve at the given abscissae for the model's (first) material.
std::vector<Complex> analytic_surface(const Material &material, double pressure,
                                      double half_width, double frequency,
                                      const std::vector<double> &x,
                                      const OracleSettings &settings = {}, int threads = 1);

enum class ConvergenceAxis
{
  radial_steps,
  gll_points
};

struct ConvergenceRow
{
  int value = 0;
  double per_wavelength = 0.0;
  double squared_error = 0.0;
};

// Pressure wavelength c_p / f.
double pressure_wavelength(const Material &material, double frequency);

// Sum-of-squared-error table against the analytic curve. `base` describes the half-
// space mesh; each value replaces its radial steps or its GLL points (degree + 1).
// Values must be strictly increasing.
std::vector<ConvergenceRow> convergence_study(const HalfspaceMesh &base, double frequency,
                                              ConvergenceAxis axis,
                                              const std::vector<int> &values,
                                              const SolveOptions &options);

}  // namespace sbfd

#endif  // SBFD_DRIVER_HPP

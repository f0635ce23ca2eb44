// SPDX-License-Identifier: Apache-2.0

#ifndef SBFD_CONFIG_HPP
#define SBFD_CONFIG_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sbfd/driver.hpp"

namespace sbfd
{

struct OutputSettings
{
  bool surface = true;
  bool field = false;
  int field_refinement = 0;
  std::optional<std::vector<int>> field_subdomains;
  std::vector<double> phases;
  bool oracle = false;
  RecoveryMode recovery = RecoveryMode::stored;
};

struct ConvergenceSettings
{
  ConvergenceAxis axis = ConvergenceAxis::radial_steps;
  std::vector<int> values;
};

//
// A parsed run description. `halfspace` is set for the parametric half-space model;
// `mesh` always holds the mesh that will be solved.
//
struct RunConfig
{
  std::optional<HalfspaceMesh> halfspace;
  MeshDescription mesh;
  Material material;
  double pressure = 0.0;
  double half_width = 0.0;
  std::vector<double> frequencies;
  OutputSettings output;
  OracleSettings oracle;
  std::optional<ConvergenceSettings> convergence;
};

// Parses YAML text. Throws ConfigError carrying the 1-based line of the offending
// entry when one is known.
RunConfig parse_config(const std::string &text);

// Reads and parses a file; a missing or unreadable file is a ConfigError too.
RunConfig load_config(const std::filesystem::path &path);

}  // namespace sbfd

#endif  // SBFD_CONFIG_HPP

// SPDX-License-Identifier: Apache-2.0

#include "sbfd/run.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "sbfd/errors.hpp"
#include "sbfd/parallel.hpp"

namespace sbfd
{

std::string frequency_tag(double frequency)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, "%gHz", frequency);
  return buf;
}

namespace
{

std::string phase_tag(double phase)
{
  char buf[64];
  if (phase == static_cast<int>(phase))
    std::snprintf(buf, sizeof buf, "phase%03d", static_cast<int>(phase));
  else
    std::snprintf(buf, sizeof buf, "phase%07.3f", phase);
  return buf;
}

SolveOptions solve_options(const RunConfig &c, int threads)
{
  SolveOptions o;
  o.pressure = c.pressure;
  o.half_width = c.half_width;
  o.recover_field = c.output.field || !c.output.phases.empty();
  o.field_subdomains = c.output.field_subdomains;
  o.recovery = c.output.recovery;
  o.oracle = c.output.oracle;
  o.oracle_settings = c.oracle;
  o.threads = threads;
  return o;
}

std::string fmt(const char *format, double v)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

void write_convergence_csv(const std::filesystem::path &path, ConvergenceAxis axis,
                           const std::vector<ConvergenceRow> &rows)
{
  std::ofstream out(path);
  if (!out)
    throw IoError("cannot write " + path.string());
  out << (axis == ConvergenceAxis::radial_steps ? "steps,steps_per_wavelength,sse\n"
                                                : "gll_points,points_per_wavelength,sse\n");
  for (const auto &r : rows)
    out << r.value << ',' << fmt("%.17g", r.per_wavelength) << ',' << fmt("%.17g", r.squared_error)
        << '\n';
  if (!out)
    throw IoError("cannot write " + path.string());
}

std::string summary_text(const RunConfig &config, const Model &model, const RunSummary &s)
{
  std::ostringstream out;
  out << "subdomains: " << model.subdomains.size() << '\n';
  for (const auto &r : s.results)
  {
    out << "frequency " << fmt("%g", r.frequency) << " Hz: dofs " << r.dofs << " (constrained "
        << r.constrained << "), residual " << fmt("%.3e", r.residual) << ", time "
        << fmt("%.3f", r.seconds) << " s";
    if (r.squared_error)
      out << ", sse " << fmt("%.6e", *r.squared_error) << ", relative L2 "
          << fmt("%.6e", *r.relative_l2);
    out << '\n';
  }
  for (const auto &[f, rows] : s.convergence)
  {
    const bool radial = config.convergence->axis == ConvergenceAxis::radial_steps;
    out << "convergence at " << fmt("%g", f) << " Hz ("
        << (radial ? "radial steps" : "GLL points") << "):\n";
    for (const auto &r : rows)
      out << "  " << r.value << "  " << fmt("%.2f", r.per_wavelength)
          << (radial ? " steps" : " points") << " per wavelength  sse " << fmt("%.6e", r.squared_error)
          << '\n';
  }
  out << "total time " << fmt("%.3f", s.seconds) << " s\n";
  return out.str();
}

}  // namespace

RunSummary run(const RunConfig &config, const RunOptions &options, std::ostream &log)
{
  const auto started = std::chrono::steady_clock::now();
  std::error_code ec;
  std::filesystem::create_directories(options.output, ec);
  if (ec)
    throw IoError("cannot create output directory " + options.output.string() + ": " + ec.message());

  const int threads = std::max(1, options.threads);
  const int outer = options.serial ? 1 : threads;
  const int inner = options.serial ? threads : 1;
  const auto nf = static_cast<int>(config.frequencies.size());

  RunSummary summary;
  const Model model = make_model(config.mesh);

  if (config.convergence)
  {
    summary.convergence.resize(nf);
    parallel_for(nf, outer, [&](int k) {
      const double f = config.frequencies[k];
      try
      {
        summary.convergence[k] = {f, convergence_study(*config.halfspace, f, config.convergence->axis,
                                                       config.convergence->values,
                                                       solve_options(config, inner))};
      }
      catch (const Error &e)
      {
        throw Error("frequency " + fmt("%g", f) + " Hz: " + e.what());
      }
    });
    const char *axis =
      config.convergence->axis == ConvergenceAxis::radial_steps ? "radial_steps" : "gll_points";
    for (const auto &[f, rows] : summary.convergence)
    {
      const auto path = options.output / ("convergence_" + std::string(axis) + "_" +
                                          frequency_tag(f) + ".csv");
      write_convergence_csv(path, config.convergence->axis, rows);
      summary.files.push_back(path);
    }
  }
  else
  {
    const Solver solver(model, inner);
    summary.results.resize(nf);
    std::vector<std::vector<std::filesystem::path>> files(nf);
    parallel_for(nf, outer, [&](int k) {
      const double f = config.frequencies[k];
      FrequencyResult r;
      try
      {
        r = solver.solve(f, solve_options(config, inner));
      }
      catch (const Error &e)
      {
        throw Error("frequency " + fmt("%g", f) + " Hz: " + e.what());
      }
      const std::string tag = frequency_tag(f);
      auto &out = files[k];
      if (config.output.surface)
      {
        out.push_back(options.output / ("surface_" + tag + ".csv"));
        write_surface_csv(out.back(), r.surface_x, r.surface_v);
      }
      if (!r.analytic_v.empty())
      {
        out.push_back(options.output / ("analytic_" + tag + ".csv"));
        write_surface_csv(out.back(), r.surface_x, r.analytic_v);
      }
      if (r.field)
      {
        const auto points =
          field_points(*r.field, solver.model().subdomains, config.output.field_refinement);
        if (config.output.field)
        {
          out.push_back(options.output / ("field_" + tag + ".csv"));
          write_field_csv(out.back(), points);
        }
        for (double phase : config.output.phases)
        {
          out.push_back(options.output / ("field_" + tag + "_" + phase_tag(phase) + ".csv"));
          write_phase_csv(out.back(), points, phase);
        }
        r.field.reset();
      }
      if (options.verbose)
      {
        std::ostringstream line;
        line << "solved " << fmt("%g", f) << " Hz in " << fmt("%.3f", r.seconds) << " s\n";
        log << line.str() << std::flush;
      }
      summary.results[k] = std::move(r);
    });
    for (auto &list : files)
      summary.files.insert(summary.files.end(), list.begin(), list.end());
  }

  summary.seconds =
    std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  const std::string text = summary_text(config, model, summary);
  const auto path = options.output / "summary.txt";
  std::ofstream out(path);
  out << text;
  if (!out)
    throw IoError("cannot write " + path.string());
  summary.files.push_back(path);
  log << text;
  if (options.verbose)
    for (const auto &f : summary.files)
      log << "wrote " << f.string() << '\n';
  return summary;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Frequency-domain scaled boundary spectral solver for 2D elastodynamics"};
  std::string config_path;
  RunOptions options;
  std::string output = ".";
  app.add_option("config", config_path, "YAML run description")->required();
  app.add_option("-o,--output", output, "Directory for CSV artifacts and summary.txt");
  app.add_option("-j,--threads", options.threads, "Worker threads")
    ->check(CLI::PositiveNumber)
    ->default_val(static_cast<int>(std::max(1u, std::thread::hardware_concurrency())));
  app.add_flag("-v,--verbose", options.verbose, "Report progress and written files");
  app.add_flag("--serial", options.serial, "Solve frequencies one at a time");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try
  {
    app.parse(reversed);
  }
  catch (const CLI::ParseError &e)
  {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kExitOk : kExitConfig;
  }
  options.output = output;

  try
  {
    const RunConfig config = load_config(config_path);
    run(config, options, out);
    return kExitOk;
  }
  catch (const ConfigError &e)
  {
    err << config_path << ": " << e.what() << '\n';
    return kExitConfig;
  }
  catch (const IoError &e)
  {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
  catch (const std::exception &e)
  {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace sbfd

// SPDX-License-Identifier: Apache-2.0

#include "sbfd/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <yaml-cpp/yaml.h>

#include "sbfd/errors.hpp"

namespace sbfd
{

namespace
{

int line_of(const YAML::Node &node)
{
  const auto mark = node.Mark();
  return mark.line >= 0 ? mark.line + 1 : 0;
}

[[noreturn]] void fail(const YAML::Node &node, const std::string &what)
{
  throw ConfigError(what, line_of(node));
}

//
// Map section with typed accessors. Every key that is read is remembered so the
// remaining ones can be reported as unknown.
//
class Section
{
public:
  Section(YAML::Node node, std::string name) : node_(std::move(node)), name_(std::move(name))
  {
    if (!node_.IsMap())
      fail(node_, "'" + name_ + "' must be a mapping");
  }

  bool has(const std::string &key) const { return static_cast<bool>(node_[key]); }

  YAML::Node get(const std::string &key)
  {
    seen_.insert(key);
    const YAML::Node n = node_[key];
    if (!n)
      fail(node_, "'" + name_ + "' is missing '" + key + "'");
    return n;
  }

  template <class T>
  T value(const std::string &key)
  {
    return as<T>(get(key), qualified(key));
  }

  template <class T>
  T value(const std::string &key, T fallback)
  {
    return has(key) ? value<T>(key) : (seen_.insert(key), fallback);
  }

  std::optional<YAML::Node> optional(const std::string &key)
  {
    seen_.insert(key);
    const YAML::Node n = node_[key];
    return n ? std::optional<YAML::Node>(n) : std::nullopt;
  }

  void finish() const
  {
    for (const auto &kv : node_)
    {
      const auto key = kv.first.as<std::string>();
      if (!seen_.count(key))
        fail(kv.first, "unknown key '" + key + "' in '" + name_ + "'");
    }
  }

  std::string qualified(const std::string &key) const { return name_ + "." + key; }

  template <class T>
  static T as(const YAML::Node &n, const std::string &what)
  {
    try
    {
      return n.as<T>();
    }
    catch (const YAML::Exception &)
    {
      fail(n, "'" + what + "' has the wrong type");
    }
  }

private:
  YAML::Node node_;
  std::string name_;
  std::set<std::string> seen_;
};

template <class T>
std::vector<T> list(const YAML::Node &n, const std::string &what)
{
  if (!n.IsSequence())
    fail(n, "'" + what + "' must be a list");
  std::vector<T> out;
  for (const auto &item : n)
    out.push_back(Section::as<T>(item, what));
  return out;
}

double positive(Section &s, const std::string &key)
{
  const auto n = s.get(key);
  const double v = Section::as<double>(n, s.qualified(key));
  if (!(v > 0.0) || !std::isfinite(v))
    fail(n, "'" + s.qualified(key) + "' must be positive");
  return v;
}

Material parse_material(Section s)
{
  Material m;
  m.young_modulus = positive(s, "young_modulus");
  const auto nu = s.get("poisson_ratio");
  m.poisson_ratio = Section::as<double>(nu, s.qualified("poisson_ratio"));
  if (!(m.poisson_ratio >= 0.0 && m.poisson_ratio < 0.5))
    fail(nu, "'" + s.qualified("poisson_ratio") + "' must lie in [0, 0.5)");
  m.density = positive(s, "density");
  const auto zeta = s.optional("damping_ratio");
  if (zeta)
  {
    m.damping_ratio = Section::as<double>(*zeta, s.qualified("damping_ratio"));
    if (!(m.damping_ratio >= 0.0))
      fail(*zeta, "'" + s.qualified("damping_ratio") + "' must be non-negative");
  }
  s.finish();
  return m;
}

struct RadialDefaults
{
  int steps = 100;
  double bounded_start = kDefaultBoundedStart;
  double unbounded_start = kDefaultUnboundedStart;
  DampingProfile unbounded_damping = DampingProfile::linear(1.0, 0.05);
};

DampingProfile parse_ramp(const YAML::Node &n, const std::string &what)
{
  Section s(n, what);
  const double a = s.value<double>("start");
  const double b = s.value<double>("end");
  if (!(a >= 0.0) || !(b >= 0.0))
    fail(n, "'" + what + "' damping ratios must be non-negative");
  s.finish();
  return DampingProfile::linear(a, b);
}

RadialDefaults parse_radial(Section s)
{
  RadialDefaults r;
  const auto steps = s.optional("steps");
  if (steps)
  {
    r.steps = Section::as<int>(*steps, s.qualified("steps"));
    if (r.steps < 2)
      fail(*steps, "'" + s.qualified("steps") + "' must be at least 2");
  }
  r.bounded_start = s.value<double>("bounded_start", r.bounded_start);
  r.unbounded_start = s.value<double>("unbounded_start", r.unbounded_start);
  if (const auto d = s.optional("unbounded_damping"))
    r.unbounded_damping = parse_ramp(*d, s.qualified("unbounded_damping"));
  s.finish();
  return r;
}

Point parse_point(const YAML::Node &n, const std::string &what)
{
  const auto v = list<double>(n, what);
  if (v.size() != 2)
    fail(n, "'" + what + "' must be [x, y]");
  return {v[0], v[1]};
}

MeshDescription parse_explicit(Section &s, const Material &material, const RadialDefaults &radial)
{
  MeshDescription mesh;
  for (const auto &v : s.get("vertices"))
  {
    Section vs(v, "vertex");
    mesh.vertices.push_back({vs.value<int>("id"), Point(vs.value<double>("x"), vs.value<double>("y"))});
    vs.finish();
  }
  for (const auto &e : s.get("elements"))
  {
    Section es(e, "element");
    const auto nodes = list<int>(es.get("nodes"), "element.nodes");
    if (nodes.size() != 2)
      fail(e, "'element.nodes' must list the two end vertices");
    const int points = es.value<int>("gll_points", 10);
    if (points < 2 || points > kMaxDegree + 1)
      fail(e, "'element.gll_points' must lie in [2, " + std::to_string(kMaxDegree + 1) + "]");
    mesh.elements.push_back({es.value<int>("id"), nodes[0], nodes[1], points - 1});
    es.finish();
  }
  for (const auto &d : s.get("subdomains"))
  {
    Section ds(d, "subdomain");
    MeshSubdomain sub;
    sub.name = ds.value<std::string>("name");
    const auto kind = ds.get("kind");
    const auto k = Section::as<std::string>(kind, "subdomain.kind");
    if (k == "bounded")
      sub.kind = SubdomainKind::bounded;
    else if (k == "unbounded")
      sub.kind = SubdomainKind::unbounded;
    else
      fail(kind, "'subdomain.kind' must be 'bounded' or 'unbounded'");
    if (const auto c = ds.optional("center"))
      sub.center = parse_point(*c, "subdomain.center");
    sub.elements = list<int>(ds.get("elements"), "subdomain.elements");
    sub.material = ds.has("material") ? parse_material(Section(ds.get("material"), "material"))
                                      : material;
    const bool bounded = sub.kind == SubdomainKind::bounded;
    sub.radial.steps = ds.value<int>("steps", radial.steps);
    sub.radial.start = ds.value<double>("start", bounded ? radial.bounded_start : radial.unbounded_start);
    sub.radial.end = 1.0;
    if (const auto damping = ds.optional("damping"))
    {
      if (bounded)
        fail(*damping, "bounded subdomains take the material damping ratio");
      sub.damping = parse_ramp(*damping, "subdomain.damping");
    }
    else
      sub.damping = bounded ? DampingProfile::constant(sub.material.damping_ratio)
                            : radial.unbounded_damping;
    ds.finish();
    mesh.subdomains.push_back(std::move(sub));
  }
  mesh.surface = list<int>(s.get("surface"), "model.surface");
  if (const auto plane = s.optional("symmetry_plane_x"))
    mesh.symmetry_plane_x = Section::as<double>(*plane, "model.symmetry_plane_x");
  return mesh;
}

}  // namespace

RunConfig parse_config(const std::string &text)
{
  YAML::Node root;
  try
  {
    root = YAML::Load(text);
  }
  catch (const YAML::ParserException &e)
  {
    throw ConfigError(e.msg, e.mark.line >= 0 ? e.mark.line + 1 : 0);
  }
  if (!root || root.IsNull())
    throw ConfigError("configuration is empty");
  Section top(root, "config");

  RunConfig c;
  c.material = parse_material(Section(top.get("material"), "material"));
  const RadialDefaults radial =
    top.has("radial") ? parse_radial(Section(top.get("radial"), "radial")) : RadialDefaults{};

  Section load(top.get("load"), "load");
  c.pressure = load.value<double>("pressure");
  if (!std::isfinite(c.pressure))
    fail(load.get("pressure"), "'load.pressure' must be finite");
  c.half_width = positive(load, "half_width");
  load.finish();

  const auto freqs = top.get("frequencies");
  c.frequencies = list<double>(freqs, "frequencies");
  if (c.frequencies.empty())
    fail(freqs, "'frequencies' must not be empty");
  for (double f : c.frequencies)
    if (!(f > 0.0) || !std::isfinite(f))
      fail(freqs, "every frequency must be positive");

  Section model(top.get("model"), "model");
  const auto type_node = model.get("type");
  const auto type = Section::as<std::string>(type_node, "model.type");
  if (type == "halfspace")
  {
    HalfspaceMesh h;
    h.size = model.has("size") ? positive(model, "size") : h.size;
    h.segments = model.value<int>("segments", h.segments);
    if (h.segments < 1)
      fail(model.get("segments"), "'model.segments' must be at least 1");
    const int points = model.value<int>("gll_points", h.degree + 1);
    if (points < 2 || points > kMaxDegree + 1)
      fail(model.get("gll_points"),
           "'model.gll_points' must lie in [2, " + std::to_string(kMaxDegree + 1) + "]");
    h.degree = points - 1;
    h.split_unbounded = model.value<bool>("split_unbounded", h.split_unbounded);
    h.material = c.material;
    h.radial_steps = radial.steps;
    h.bounded_start = radial.bounded_start;
    h.unbounded_start = radial.unbounded_start;
    h.unbounded_damping = radial.unbounded_damping;
    c.halfspace = h;
    c.mesh = halfspace_mesh(h);
  }
  else if (type == "explicit")
    c.mesh = parse_explicit(model, c.material, radial);
  else
    fail(type_node, "'model.type' must be 'halfspace' or 'explicit'");
  model.finish();

  if (const auto out = top.optional("output"))
  {
    Section o(*out, "output");
    c.output.surface = o.value<bool>("surface", true);
    c.output.field = o.value<bool>("field", false);
    c.output.field_refinement = o.value<int>("field_refinement", 0);
    if (c.output.field_refinement < 0)
      fail(o.get("field_refinement"), "'output.field_refinement' must be non-negative");
    if (const auto sel = o.optional("field_subdomains"))
    {
      c.output.field_subdomains = list<int>(*sel, "output.field_subdomains");
      for (int k : *c.output.field_subdomains)
        if (k < 0 || k >= static_cast<int>(c.mesh.subdomains.size()))
          fail(*sel, "'output.field_subdomains' refers to subdomain " + std::to_string(k) +
                       ", which does not exist");
    }
    if (const auto phases = o.optional("phases"))
    {
      c.output.phases = list<double>(*phases, "output.phases");
      for (double p : c.output.phases)
        if (!(p >= 0.0 && p < 360.0))
          fail(*phases, "phase angles must lie in [0, 360)");
    }
    c.output.oracle = o.value<bool>("oracle", false);
    const auto recovery = o.value<std::string>("recovery", "stored");
    if (recovery == "stored")
      c.output.recovery = RecoveryMode::stored;
    else if (recovery == "replay")
      c.output.recovery = RecoveryMode::replay;
    else
      fail(o.get("recovery"), "'output.recovery' must be 'stored' or 'replay'");
    o.finish();
  }

  if (const auto oracle = top.optional("oracle"))
  {
    Section o(*oracle, "oracle");
    c.oracle.tolerance = o.value<double>("tolerance", c.oracle.tolerance);
    c.oracle.panels = o.value<int>("panels", c.oracle.panels);
    if (!(c.oracle.tolerance > 0.0) || c.oracle.panels < 1)
      fail(*oracle, "'oracle' needs a positive tolerance and panel count");
    o.finish();
  }

  if (const auto conv = top.optional("convergence"))
  {
    Section cs(*conv, "convergence");
    ConvergenceSettings settings;
    const auto axis_node = cs.get("axis");
    const auto axis = Section::as<std::string>(axis_node, "convergence.axis");
    if (axis == "radial_steps")
      settings.axis = ConvergenceAxis::radial_steps;
    else if (axis == "gll_points")
      settings.axis = ConvergenceAxis::gll_points;
    else
      fail(axis_node, "'convergence.axis' must be 'radial_steps' or 'gll_points'");
    const auto values = cs.get("values");
    settings.values = list<int>(values, "convergence.values");
    if (settings.values.empty())
      fail(values, "'convergence.values' must not be empty");
    for (std::size_t k = 1; k < settings.values.size(); ++k)
      if (settings.values[k] <= settings.values[k - 1])
        fail(values, "'convergence.values' must be strictly increasing");
    if (settings.values.front() < 2)
      fail(values, "'convergence.values' must start at 2 or more");
    if (!c.halfspace)
      fail(*conv, "convergence studies need the halfspace model");
    if (!c.output.oracle)
      fail(*conv, "convergence studies need 'output.oracle: true'");
    cs.finish();
    c.convergence = settings;
  }

  top.finish();
  try
  {
    make_model(c.mesh);
  }
  catch (const std::invalid_argument &e)
  {
    throw ConfigError(std::string("model: ") + e.what(), line_of(root["model"]));
  }
  return c;
}

RunConfig load_config(const std::filesystem::path &path)
{
  std::ifstream in(path);
  if (!in)
    throw ConfigError("cannot read configuration file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

}  // namespace sbfd

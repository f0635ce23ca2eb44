// SPDX-License-Identifier: Apache-2.0

#ifndef SBFD_SUBDOMAIN_HPP
#define SBFD_SUBDOMAIN_HPP

#include <string>
#include <vector>

#include "sbfd/geometry.hpp"
#include "sbfd/material.hpp"

namespace sbfd
{

enum class SubdomainKind
{
  bounded,
  unbounded
};

inline constexpr double kDefaultBoundedStart = 1e-6;
inline constexpr double kDefaultUnboundedStart = 2.0;

//
// Uniform radial grid xi_i = start + i h, i = 0..steps, h = (end - start) / steps.
// `start` carries the zero-traction condition (near the scaling centre for bounded
// subdomains, the truncation point for unbounded ones) and `end` is the loaded
// boundary, so h < 0 for unbounded subdomains.
//
struct RadialGrid
{
  double start = kDefaultBoundedStart;
  double end = 1.0;
  int steps = 100;

  double step() const { return (end - start) / steps; }
  double point(int i) const { return i == steps ? end : start + i * step(); }

  // Throws std::invalid_argument if the grid does not suit `kind`.
  void validate(SubdomainKind kind) const;
};

struct Subdomain
{
  std::string name;
  SubdomainKind kind = SubdomainKind::bounded;
  Point center = Point::Zero();
  std::vector<BoundaryElement> elements;
  Material material;
  RadialGrid radial;
  DampingProfile damping;

  // +1 for bounded, -1 for unbounded (outward normal opposes xi).
  int sign() const { return kind == SubdomainKind::bounded ? 1 : -1; }
};

//
// Local dof numbering of a subdomain: distinct boundary nodes in ascending id, two
// interleaved components (x then y) per node.
//
class DofMap
{
public:
  DofMap() = default;
  explicit DofMap(std::vector<int> sorted_node_ids);

  int node_count() const { return static_cast<int>(node_ids_.size()); }
  int size() const { return kDofsPerNode * node_count(); }
  const std::vector<int> &node_ids() const { return node_ids_; }

  // Local index of (node, component); throws std::out_of_range for unknown nodes.
  int local(int node_id, int component) const;
  int node_of(int local_dof) const { return node_ids_[local_dof / kDofsPerNode]; }
  int component_of(int local_dof) const { return local_dof % kDofsPerNode; }

  // Local dofs of an element in its own node order.
  std::vector<int> element_dofs(const BoundaryElement &element) const;

private:
  std::vector<int> node_ids_;
};

// Validates the element chain and builds the local numbering. Throws DuplicateNode
// (a node repeated inside an element, or shared by more than two element ends) and
// DanglingNode (the chain is not a single connected open or closed path).
DofMap dof_map(const Subdomain &s);

// Checks grid, material, and element geometry (orientation plus star-convexity).
void validate_subdomain(const Subdomain &s);

}  // namespace sbfd

#endif  // SBFD_SUBDOMAIN_HPP

// SPDX-License-Identifier: Apache-2.0

#include "sbfd/subdomain.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "sbfd/errors.hpp"

namespace sbfd
{

void RadialGrid::validate(SubdomainKind kind) const
{
  if (steps < 2)
    throw std::invalid_argument("radial grid needs at least 2 steps");
  if (!(start > 0.0) || !(end > 0.0) || start == end)
    throw std::invalid_argument("radial grid end points must be positive and distinct");
  if (kind == SubdomainKind::bounded && !(start < 1.0 && end > start))
    throw std::invalid_argument("bounded subdomain radial start must lie in (0, end)");
  if (kind == SubdomainKind::unbounded && !(start > end))
    throw std::invalid_argument("unbounded subdomain truncation must lie beyond the boundary");
}

DofMap::DofMap(std::vector<int> sorted_node_ids) : node_ids_(std::move(sorted_node_ids)) {}

int DofMap::local(int node_id, int component) const
{
  const auto it = std::lower_bound(node_ids_.begin(), node_ids_.end(), node_id);
  if (it == node_ids_.end() || *it != node_id)
    throw std::out_of_range("node " + std::to_string(node_id) + " not in dof map");
  return kDofsPerNode * static_cast<int>(it - node_ids_.begin()) + component;
}

std::vector<int> DofMap::element_dofs(const BoundaryElement &element) const
{
  std::vector<int> dofs;
  dofs.reserve(kDofsPerNode * element.node_ids.size());
  for (int id : element.node_ids)
    for (int c = 0; c < kDofsPerNode; ++c)
      dofs.push_back(local(id, c));
  return dofs;
}

DofMap dof_map(const Subdomain &s)
{
  if (s.elements.empty())
    throw DanglingNode("subdomain '" + s.name + "' has no boundary elements");

  std::map<int, int> end_count;
  std::set<int> interior;
  std::set<int> all;
  for (const auto &element : s.elements)
  {
    if (element.node_ids.size() < 2 || element.coords.size() != element.node_ids.size())
      throw DanglingNode("malformed element in subdomain '" + s.name + "'");
    std::set<int> seen(element.node_ids.begin(), element.node_ids.end());
    if (seen.size() != element.node_ids.size())
      throw DuplicateNode("element repeats a node in subdomain '" + s.name + "'");
    ++end_count[element.node_ids.front()];
    ++end_count[element.node_ids.back()];
    for (std::size_t k = 1; k + 1 < element.node_ids.size(); ++k)
    {
      if (!interior.insert(element.node_ids[k]).second)
        throw DuplicateNode("interior node " + std::to_string(element.node_ids[k]) +
                            " shared by two elements of subdomain '" + s.name + "'");
    }
    all.insert(element.node_ids.begin(), element.node_ids.end());
  }

  int chain_ends = 0;
  for (const auto &[id, count] : end_count)
  {
    if (interior.count(id))
      throw DuplicateNode("node " + std::to_string(id) + " is both an element end and interior");
    if (count > 2)
      throw DuplicateNode("node " + std::to_string(id) + " joins more than two elements");
    if (count == 1)
      ++chain_ends;
  }
  if (chain_ends != 0 && chain_ends != 2)
    throw DanglingNode("boundary of subdomain '" + s.name + "' is not a single chain");

  // Connectivity of the element chain through shared end nodes.
  std::vector<int> parent(s.elements.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i)
  {
    while (parent[i] != i)
      i = parent[i] = parent[parent[i]];
    return i;
  };
  std::map<int, int> owner;
  for (int e = 0; e < static_cast<int>(s.elements.size()); ++e)
  {
    for (int id : {s.elements[e].node_ids.front(), s.elements[e].node_ids.back()})
    {
      auto [it, inserted] = owner.emplace(id, e);
      if (!inserted)
        parent[find(e)] = find(it->second);
    }
  }
  for (int e = 1; e < static_cast<int>(s.elements.size()); ++e)
    if (find(e) != find(0))
      throw DanglingNode("boundary of subdomain '" + s.name + "' is disconnected");

  return DofMap(std::vector<int>(all.begin(), all.end()));
}

void validate_subdomain(const Subdomain &s)
{
  s.material.validate();
  s.radial.validate(s.kind);
  if (s.damping.start < 0.0 || s.damping.end < 0.0)
    throw std::invalid_argument("damping ratios must be non-negative");
  if (s.kind == SubdomainKind::bounded && s.damping.kind != DampingProfile::Kind::constant)
    throw std::invalid_argument("bounded subdomains take a constant damping profile");
  dof_map(s);
  for (const auto &element : s.elements)
    for (double eta : element.basis().nodes)
      jacobian(s.center, element, eta);
  if (!star_convex(s.center, s.elements))
    throw std::invalid_argument("subdomain '" + s.name +
                                "' is not star-convex about its scaling centre");
}

}  // namespace sbfd

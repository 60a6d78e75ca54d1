#include "latrat/groups.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "latrat/exactla.hpp"

namespace latrat {

namespace {

long mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

GroupSpec GroupSpec::cyclic(long n) {
  if (n < 1) throw LatticeError(ErrorCode::InvalidArgument, "group order must be positive");
  return {GroupKind::Cyclic, n};
}

GroupSpec GroupSpec::dihedral(long n) {
  if (n < 1) throw LatticeError(ErrorCode::InvalidArgument, "group order must be positive");
  return {GroupKind::Dihedral, n};
}

std::string GroupSpec::name() const {
  return (is_dihedral() ? "D" : "C") + std::to_string(n);
}

GroupElement identity_element() { return {0, 0}; }
GroupElement sigma_element(long power) { return {power, 0}; }
GroupElement tau_element() { return {0, 1}; }

GroupElement normalize(const GroupSpec& g, GroupElement a) {
  if (!g.is_dihedral() && a.flip)
    throw LatticeError(ErrorCode::GroupMismatch, "reflection in a cyclic group");
  return {mod(a.rot, g.n), a.flip & 1};
}

GroupElement multiply(const GroupSpec& g, GroupElement a, GroupElement b) {
  if (a.flip == 0) return normalize(g, {a.rot + b.rot, b.flip});
  return normalize(g, {a.rot - b.rot, 1 - b.flip});
}

GroupElement inverse(const GroupSpec& g, GroupElement a) {
  if (a.flip) return normalize(g, a);
  return normalize(g, {-a.rot, 0});
}

long element_order(const GroupSpec& g, GroupElement a) {
  a = normalize(g, a);
  if (a.flip) return 2;
  return g.n / std::gcd(g.n, a.rot == 0 ? g.n : a.rot);
}

std::string to_string(GroupElement a) {
  if (a.rot == 0 && a.flip == 0) return "1";
  std::string s;
  if (a.rot == 1) s = "s";
  else if (a.rot != 0) s = "s^" + std::to_string(a.rot);
  if (a.flip) s += "t";
  return s;
}

std::vector<GroupElement> elements(const GroupSpec& g) {
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(g.order()));
  for (int f = 0; f < (g.is_dihedral() ? 2 : 1); ++f)
    for (long i = 0; i < g.n; ++i) out.push_back({i, f});
  return out;
}

std::size_t element_index(const GroupSpec& g, GroupElement a) {
  a = normalize(g, a);
  return static_cast<std::size_t>(a.rot + g.n * a.flip);
}

std::vector<GroupElement> group_generators(const GroupSpec& g) {
  if (g.is_dihedral()) return {sigma_element(), tau_element()};
  return {sigma_element()};
}

std::vector<GroupElement> closure(const GroupSpec& g,
                                  const std::vector<GroupElement>& gens) {
  std::set<GroupElement> seen{identity_element()};
  std::vector<GroupElement> frontier{identity_element()};
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& x : frontier)
      for (const auto& s : gens) {
        GroupElement y = multiply(g, x, s);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

bool SubgroupClass::contains(GroupElement e) const {
  return std::binary_search(representative.begin(), representative.end(), e);
}

bool SubgroupClass::is_cyclic() const {
  return std::none_of(generators.begin(), generators.end(),
                      [](const GroupElement& e) { return e.flip != 0; }) ||
         generators.size() == 1;
}

GroupSpec SubgroupClass::abstract_group() const {
  long m = static_cast<long>(size());
  if (is_cyclic()) return GroupSpec::cyclic(m);
  return GroupSpec::dihedral(m / 2);
}

std::vector<long> divisors(long n) {
  std::vector<long> out;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

std::vector<SubgroupClass> subgroup_classes(const GroupSpec& g) {
  std::vector<SubgroupClass> out;
  const long n = g.n;
  for (long d : divisors(n)) {
    SubgroupClass c;
    c.label = d == 1 ? "1" : "C_" + std::to_string(d);
    if (d > 1) c.generators = {sigma_element(n / d)};
    c.representative = closure(g, c.generators);
    c.conjugate_count = 1;
    out.push_back(std::move(c));
    if (!g.is_dihedral()) continue;
    const long index = n / d;
    // D_d = <sigma^{n/d}, sigma^k tau>; conjugation shifts k by 2.
    const int classes = index % 2 == 0 ? 2 : 1;
    for (int k = 0; k < classes; ++k) {
      SubgroupClass dc;
      dc.label = "D_" + std::to_string(d) + (k ? "'" : "");
      if (d > 1) dc.generators.push_back(sigma_element(index));
      dc.generators.push_back({k, 1});
      dc.representative = closure(g, dc.generators);
      dc.conjugate_count = classes == 2 ? index / 2 : index;
      out.push_back(std::move(dc));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.is_cyclic() && !b.is_cyclic();
  });
  return out;
}

const SubgroupClass& find_subgroup(const std::vector<SubgroupClass>& classes,
                                   const std::string& label) {
  for (const auto& c : classes)
    if (c.label == label) return c;
  throw LatticeError(ErrorCode::InvalidArgument, "unknown subgroup " + label);
}

SubgroupClass whole_group(const GroupSpec& g) {
  auto classes = subgroup_classes(g);
  return classes.back();
}

SubgroupClass trivial_subgroup(const GroupSpec& g) {
  return subgroup_classes(g).front();
}

SubgroupClass make_subgroup(const GroupSpec& g,
                            const std::vector<GroupElement>& els) {
  SubgroupClass c;
  long rot_gen = g.n;
  const GroupElement* refl = nullptr;
  for (const auto& e : els) {
    if (e.flip) {
      if (!refl) refl = &e;
    } else if (e.rot != 0) {
      rot_gen = std::gcd(rot_gen, e.rot);
    }
  }
  const long d = g.n / rot_gen;
  if (d > 1) c.generators.push_back(sigma_element(rot_gen));
  if (refl) c.generators.push_back(*refl);
  c.representative = closure(g, c.generators);
  std::vector<GroupElement> sorted = els;
  std::sort(sorted.begin(), sorted.end());
  if (c.representative != sorted)
    throw LatticeError(ErrorCode::InvalidArgument, "elements do not form a subgroup");
  c.label = refl ? "D_" + std::to_string(d) : (d == 1 ? "1" : "C_" + std::to_string(d));
  std::set<std::vector<GroupElement>> orbit;
  for (auto x : elements(g)) orbit.insert(conjugate_subgroup(g, sorted, x));
  c.conjugate_count = static_cast<long>(orbit.size());
  return c;
}

std::vector<GroupElement> conjugate_subgroup(const GroupSpec& g,
                                             const std::vector<GroupElement>& s,
                                             GroupElement x) {
  GroupElement xi = inverse(g, x);
  std::vector<GroupElement> out;
  out.reserve(s.size());
  for (const auto& e : s) out.push_back(multiply(g, multiply(g, x, e), xi));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace latrat

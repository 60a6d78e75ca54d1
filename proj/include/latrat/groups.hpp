#pragma once

#include <compare>
#include <string>
#include <vector>

namespace latrat {

enum class GroupKind { Cyclic, Dihedral };

struct GroupSpec {
  GroupKind kind = GroupKind::Cyclic;
  long n = 1;

  static GroupSpec cyclic(long n);
  static GroupSpec dihedral(long n);

  bool is_dihedral() const { return kind == GroupKind::Dihedral; }
  long order() const { return is_dihedral() ? 2 * n : n; }
  std::string name() const;  // "C5", "D5"
  bool operator==(const GroupSpec&) const = default;
};

/// sigma^rot tau^flip
struct GroupElement {
  long rot = 0;
  int flip = 0;
  auto operator<=>(const GroupElement&) const = default;
};

GroupElement identity_element();
GroupElement sigma_element(long power = 1);
GroupElement tau_element();

GroupElement multiply(const GroupSpec& g, GroupElement a, GroupElement b);
GroupElement inverse(const GroupSpec& g, GroupElement a);
GroupElement normalize(const GroupSpec& g, GroupElement a);
long element_order(const GroupSpec& g, GroupElement a);
std::string to_string(GroupElement a);

/// Identity first, then sigma^i, then sigma^i tau.
std::vector<GroupElement> elements(const GroupSpec& g);
std::size_t element_index(const GroupSpec& g, GroupElement a);
std::vector<GroupElement> group_generators(const GroupSpec& g);

/// Sorted element list of the subgroup generated by gens.
std::vector<GroupElement> closure(const GroupSpec& g,
                                  const std::vector<GroupElement>& gens);

struct SubgroupClass {
  std::string label;  // "1", "C_d", "D_d" (and "D_d'" for the second class at even index)
  std::vector<GroupElement> representative;
  std::vector<GroupElement> generators;
  long conjugate_count = 1;

  std::size_t size() const { return representative.size(); }
  bool contains(GroupElement e) const;
  bool is_cyclic() const;
  /// Group type of the subgroup with its generators read as (sigma', tau').
  GroupSpec abstract_group() const;
};

/// One representative per conjugacy class, ordered by subgroup order, cyclic
/// before dihedral at equal order.
std::vector<SubgroupClass> subgroup_classes(const GroupSpec& g);
const SubgroupClass& find_subgroup(const std::vector<SubgroupClass>& classes,
                                   const std::string& label);
SubgroupClass whole_group(const GroupSpec& g);
SubgroupClass trivial_subgroup(const GroupSpec& g);

std::vector<GroupElement> conjugate_subgroup(const GroupSpec& g,
                                             const std::vector<GroupElement>& s,
                                             GroupElement x);

/// SubgroupClass for an arbitrary subgroup given by its elements.
SubgroupClass make_subgroup(const GroupSpec& g,
                            const std::vector<GroupElement>& elements);

std::vector<long> divisors(long n);

}  // namespace latrat

#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "icc/catalog/perm_group.hpp"

namespace icc::catalog {

struct FiniteGroup {
  PermGroup group;
  friend bool operator==(const FiniteGroup&, const FiniteGroup&) = default;
};

/// Z^rank + Z/d1 + ... + Z/ds with d1 | d2 | ... | ds, every di >= 2.
struct FgAbelian {
  std::size_t rank = 0;
  std::vector<unsigned long> torsion;
  friend bool operator==(const FgAbelian&, const FgAbelian&) = default;
};

struct Free {
  std::vector<std::string> names;
  std::size_t rank() const { return names.size(); }
  friend bool operator==(const Free&, const Free&) = default;
};

using GroupAtom = std::variant<FiniteGroup, FgAbelian, Free>;

/// Throws ValidationError when an atom violates its invariants.
void validate_atom(const GroupAtom& atom);

/// Number of generators an atom contributes: perm generators, rank plus
/// torsion summands, or free rank.
std::size_t generator_count(const GroupAtom& atom);

bool is_trivial(const GroupAtom& atom);

std::string describe(const GroupAtom& atom);

/// A catalog group: a single atom, or a direct product of >= 2 atoms.
/// Products are stored flattened, so a product never has a product factor.
class GroupDesc {
 public:
  GroupDesc(GroupAtom atom);  // NOLINT(google-explicit-constructor)
  static GroupDesc product(const std::vector<GroupDesc>& factors);

  const std::vector<GroupAtom>& factors() const { return factors_; }
  bool is_product() const { return factors_.size() >= 2; }
  bool is_trivial() const;

  std::size_t generator_count() const;
  /// Index of the first quotient generator belonging to factor i.
  std::size_t generator_offset(std::size_t factor) const;

  std::string describe() const;

  friend bool operator==(const GroupDesc&, const GroupDesc&) = default;

 private:
  GroupDesc() = default;
  std::vector<GroupAtom> factors_;
};

enum class FcKind { Trivial, Whole };

/// FC-subgroup of a catalog group, one entry per direct factor.
struct FcDescription {
  std::vector<FcKind> factors;

  bool is_product() const { return factors.size() >= 2; }
  std::string describe() const;
  friend bool operator==(const FcDescription&, const FcDescription&) = default;
};

/// Finite and abelian atoms are FC-groups; free groups of rank >= 2 have
/// trivial FC-subgroup; FC distributes over direct products.
FcDescription fc_subgroup(const GroupDesc& q);

/// True when FC(q) is the trivial subgroup (every Whole factor is trivial).
bool fc_is_trivial(const GroupDesc& q);

}  // namespace icc::catalog

#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "icc/catalog/free_group.hpp"
#include "icc/catalog/group_desc.hpp"
#include "icc/error.hpp"
#include "icc/linalg/int_matrix.hpp"

namespace icc::analyzer {

using catalog::FreeAut;
using catalog::GroupDesc;
using catalog::Word;
using linalg::IntMatrix;

/// Kernel of the extension: Z^r (+ torsion), a free group, or a finite
/// permutation group. Z^0 is the trivial kernel.
using KernelDesc = std::variant<catalog::FgAbelian, catalog::Free, catalog::FiniteGroup>;

using MatrixAction = std::vector<IntMatrix>;
using FreeAction = std::vector<FreeAut>;
/// One automorphism of the kernel per quotient generator. Torsion and
/// finite kernels carry no action (`std::monostate`); any action supplied
/// for them is dropped because their verdict never depends on it.
using ActionData = std::variant<std::monostate, MatrixAction, FreeAction>;

/// Extension data 1 -> K -> G -> Q -> 1 given by the action of Q on K.
/// Construct through make_extension, which validates every invariant.
struct ExtensionSpec {
  KernelDesc kernel;
  GroupDesc quotient;
  std::vector<std::string> generator_labels;  // one per quotient generator
  ActionData action;

  friend bool operator==(const ExtensionSpec&, const ExtensionSpec&) = default;
};

enum class KernelClass { Trivial, Torsion, Abelian, Free, Finite };

KernelClass classify_kernel(const KernelDesc& k);
std::string describe_kernel(const KernelDesc& k);

/// Default labels: free factor names, t / t1.. for abelian generators,
/// q / q1.. for finite-group generators.
std::vector<std::string> default_labels(const GroupDesc& q);

/// Validates and normalizes. An absent action on Z^r or a free kernel
/// becomes the trivial action. Throws ValidationError on non-unimodular
/// matrices, non-automorphism maps, arity mismatches, or when the action
/// violates a relation of the quotient.
ExtensionSpec make_extension(KernelDesc kernel, GroupDesc quotient,
                             std::vector<std::string> labels, ActionData action);

/// Group operations on the two kinds of kernel automorphism. Composition
/// follows the quotient: theta(g h) = theta(g) * theta(h).
template <class T>
struct AutOps;

template <>
struct AutOps<IntMatrix> {
  static IntMatrix identity(const IntMatrix& like) { return IntMatrix::identity(like.rows()); }
  static IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) { return a * b; }
  static IntMatrix inverse(const IntMatrix& a) { return a.inverse_unimodular(); }
  static IntMatrix pow(const IntMatrix& a, long e) {
    return e >= 0 ? a.pow(static_cast<unsigned long long>(e))
                  : a.inverse_unimodular().pow(static_cast<unsigned long long>(-e));
  }
};

template <>
struct AutOps<FreeAut> {
  static FreeAut identity(const FreeAut& like) { return FreeAut::identity(like.rank()); }
  static FreeAut multiply(const FreeAut& a, const FreeAut& b) { return a.compose(b); }
  static FreeAut inverse(const FreeAut& a) { return a.inverse(); }
  static FreeAut pow(const FreeAut& a, long e) { return a.pow(e); }
};

/// theta on every element of a finite factor, indexed like
/// PermGroup::elements(). Throws ValidationError when the generator images
/// do not extend to a homomorphism.
template <class T>
std::vector<T> finite_action_table(const catalog::PermGroup& g, const std::vector<T>& generator_images,
                                   const T& identity) {
  std::vector<T> table(g.order(), identity);
  std::vector<bool> known(g.order(), false);
  known[0] = true;
  for (std::size_t x = 0; x < g.order(); ++x) {
    for (std::size_t k = 0; k < g.generators().size(); ++k) {
      const std::size_t y = g.index_of(catalog::perm_multiply(g.elements()[x], g.generators()[k]));
      T value = AutOps<T>::multiply(table[x], generator_images[k]);
      if (!known[y]) {
        table[y] = std::move(value);
        known[y] = true;
      } else if (!(table[y] == value)) {
        throw ValidationError("relation violation: action does not respect the relations of the finite quotient");
      }
    }
  }
  return table;
}

}  // namespace icc::analyzer

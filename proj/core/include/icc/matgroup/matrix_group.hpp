#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "icc/catalog/word.hpp"
#include "icc/linalg/hermite.hpp"
#include "icc/linalg/int_matrix.hpp"

namespace icc::matgroup {

using catalog::Word;
using linalg::Int;
using linalg::IntMatrix;
using linalg::IntVector;
using linalg::Lattice;

/// Generators of a finitely generated subgroup of GL(r, Z).
class MatGroupGens {
 public:
  /// Throws ValidationError if the list is empty, sizes disagree, or a
  /// generator is not unimodular. Labels default to g1, g2, ...
  MatGroupGens(std::vector<IntMatrix> generators, std::vector<std::string> labels = {});

  std::size_t rank() const { return rank_; }
  std::size_t size() const { return generators_.size(); }
  const std::vector<IntMatrix>& generators() const { return generators_; }
  const std::vector<IntMatrix>& inverses() const { return inverses_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Product of generator matrices along the word, left to right.
  IntMatrix evaluate(const Word& w) const;

 private:
  std::size_t rank_;
  std::vector<IntMatrix> generators_;
  std::vector<IntMatrix> inverses_;
  std::vector<std::string> labels_;
};

struct FiniteOrder {
  unsigned long long order;
};
struct InfiniteOrder {};
using MatrixOrder = std::variant<FiniteOrder, InfiniteOrder>;

/// Order of a unimodular matrix, decided from the cyclotomic factors of its
/// characteristic polynomial. Throws ValidationError for non-unimodular input.
MatrixOrder matrix_order(const IntMatrix& m);

struct FiniteGroupCert {
  unsigned long long order;
  /// Number of distinct integer matrices produced by the closure.
  unsigned long long element_count;
};
struct InfiniteGroupCert {
  Word witness_word;       // in the generators
  IntMatrix witness_matrix;  // != I, == I mod 3, infinite order
};
using FinitenessCert = std::variant<FiniteGroupCert, InfiniteGroupCert>;

/// Decides finiteness through the reduction GL(r,Z) -> GL(r,Z/3), whose
/// kernel is torsion-free. The closure is breadth first in generator order
/// and stops at the first nontrivial Schreier element.
FinitenessCert group_is_finite(const MatGroupGens& g);

/// All elements of a finite group, as integer matrices in closure order.
/// Throws Error if more than `cap` elements are produced.
std::vector<IntMatrix> enumerate_finite_group(const MatGroupGens& g, std::size_t cap);

/// { v : the <M>-orbit of v is finite } = ker(M^L - I), where L is the lcm
/// of the cyclotomic orders dividing charpoly(M).
Lattice single_finite_orbit_space(const IntMatrix& m);

struct ShrinkStep {
  Word witness_word;
  /// The witness acting on the lattice current at this step, in the
  /// coordinates of that lattice's basis.
  IntMatrix induced_matrix;
  Lattice lattice_before;
};

struct FiniteOrbitCert {
  Lattice lattice;
  std::vector<ShrinkStep> steps;
  FiniteGroupCert induced_finiteness;
};

/// The sublattice of vectors whose orbit under the group is finite.
FiniteOrbitCert finite_orbit_sublattice(const MatGroupGens& g);

/// Largest sublattice of `c` invariant under every generator and inverse.
Lattice invariant_core(const Lattice& c, const MatGroupGens& g);

struct OrbitFinite {
  std::vector<IntVector> orbit;  // breadth-first order, starting at v
};
struct OrbitExceededCap {
  std::size_t explored;
};
using OrbitResult = std::variant<OrbitFinite, OrbitExceededCap>;

inline constexpr std::size_t kDefaultOrbitCap = 10000;

/// Breadth-first closure of {v} under the generators and their inverses
/// (g1, g1^-1, g2, ...). Finite iff the orbit has at most `cap` elements.
OrbitResult orbit_bfs(const MatGroupGens& g, const IntVector& v,
                      std::size_t cap = kDefaultOrbitCap);

}  // namespace icc::matgroup

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "icc/linalg/int_matrix.hpp"

namespace icc::linalg {

struct HnfResult {
  IntMatrix h;  // row Hermite normal form of the input
  IntMatrix u;  // unimodular, h == u * input
};

/// Row Hermite normal form: pivots positive, entries above each pivot
/// reduced into [0, pivot), zero rows last. Canonical for the row space.
HnfResult hnf(const IntMatrix& a);

/// A sublattice of Z^r, stored as its canonical HNF basis (rows).
class Lattice {
 public:
  explicit Lattice(std::size_t ambient_rank = 0);

  /// Lattice generated by the given vectors (any number, any dependence).
  static Lattice span(std::size_t ambient_rank,
                      const std::vector<IntVector>& generators);
  static Lattice full(std::size_t ambient_rank);
  static Lattice zero(std::size_t ambient_rank) { return Lattice(ambient_rank); }

  std::size_t ambient_rank() const { return ambient_; }
  std::size_t rank() const { return basis_.rows(); }
  /// rank() x ambient_rank() matrix; rows are the HNF basis.
  const IntMatrix& basis() const { return basis_; }
  std::vector<IntVector> basis_vectors() const;

  bool contains(const IntVector& v) const;
  /// Coefficients c with v == sum_i c_i * basis_i, if v lies in the lattice.
  std::optional<IntVector> coordinates(const IntVector& v) const;
  /// sum_i c_i * basis_i
  IntVector combine(const IntVector& coefficients) const;

  /// The lattice { M v : v in this }.
  Lattice image(const IntMatrix& m) const;
  bool is_invariant_under(const IntMatrix& m) const;
  bool is_subset_of(const Lattice& other) const;

  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  std::size_t ambient_;
  IntMatrix basis_;
};

/// { v in Z^r : A v = 0 } for A with r columns.
Lattice kernel_lattice(const IntMatrix& a);

/// Throws ValidationError on ambient-rank mismatch.
Lattice lattice_intersect(const Lattice& a, const Lattice& b);

/// Matrix of `m` restricted to the invariant lattice `l`, in the coordinates
/// of l's basis: column j holds the coordinates of m * basis_j.
/// Throws ValidationError if l is not m-invariant.
IntMatrix restrict_to(const IntMatrix& m, const Lattice& l);

/// Floor division for integers (rounds toward negative infinity).
Int floor_div(const Int& a, const Int& b);

}  // namespace icc::linalg

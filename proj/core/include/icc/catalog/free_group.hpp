#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "icc/catalog/word.hpp"
#include "icc/linalg/int_matrix.hpp"

namespace icc::catalog {

/// The shortest root of w: the word r of least length with w = r^n.
Word root(const Word& w);

/// A conjugator c with c^-1 u c == v, if u and v are conjugate. Among all
/// conjugators the shortest one is returned, ties broken by Word order.
std::optional<Word> conjugacy_test_free(const Word& u, const Word& v);

struct NielsenMove {
  enum class Kind { RightMultiply, LeftMultiply };
  Kind kind;
  std::size_t target;  // entry replaced
  std::size_t source;  // entry multiplied in
  int exponent;        // +1 or -1
  std::size_t total_length_after;
};

struct NielsenResult {
  std::vector<Word> reduced;
  bool is_basis = false;
  std::vector<NielsenMove> log;
  /// reduced[i] written as a word in the original entries (letter j+1
  /// stands for entry j).
  std::vector<Word> expressions;
};

/// Nielsen reduction: applies the first length-decreasing move
/// t_i <- t_i t_j^{+-1} or t_i <- t_j^{+-1} t_i until none exists. When
/// stuck, a breadth-first search over length-preserving moves looks for a
/// tuple that admits a decreasing move, so total length never increases
/// along the log. `rank` is the rank of the ambient free group.
NielsenResult nielsen_reduce(const std::vector<Word>& tuple, std::size_t rank);

/// An automorphism of the free group of rank k, given by generator images.
class FreeAut {
 public:
  /// Throws ValidationError unless the images form a basis.
  FreeAut(std::size_t rank, std::vector<Word> images);

  static FreeAut identity(std::size_t rank);
  /// x -> w x w^-1
  static FreeAut conjugation(std::size_t rank, const Word& w);

  std::size_t rank() const { return images_.size(); }
  const std::vector<Word>& images() const { return images_; }

  Word apply(const Word& w) const;
  /// (this o other)(x) = this(other(x))
  FreeAut compose(const FreeAut& other) const;
  FreeAut inverse() const;
  FreeAut pow(long exponent) const;
  bool is_identity() const;

  /// Action on the abelianization Z^k: column i holds the exponent sums of
  /// the image of generator i.
  linalg::IntMatrix abelianization() const;

  std::string to_string(const std::vector<std::string>& names) const;

  friend bool operator==(const FreeAut&, const FreeAut&) = default;
  friend bool operator<(const FreeAut& a, const FreeAut& b) { return a.images_ < b.images_; }

 private:
  struct Unchecked {};
  FreeAut(Unchecked, std::vector<Word> images) : images_(std::move(images)) {}
  std::vector<Word> images_;
};

/// If phi(x) = w x w^-1 for every generator x, returns w (unique for
/// rank >= 2; the identity word for rank 1 when phi is the identity).
std::optional<Word> is_inner(const FreeAut& phi);

}  // namespace icc::catalog

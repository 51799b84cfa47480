#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "icc/catalog/word.hpp"

namespace icc::catalog {

/// Permutation of {0, ..., n-1}; p[i] is the image of i.
using Permutation = std::vector<int>;

/// p then q: (p * q)[i] = q[p[i]].
Permutation perm_multiply(const Permutation& p, const Permutation& q);
Permutation perm_inverse(const Permutation& p);
Permutation perm_identity(std::size_t degree);
/// Cycle notation on points 1..n, e.g. "(1,2,3)(4,5)"; "()" for the identity.
std::string perm_to_string(const Permutation& p);

inline constexpr std::size_t kMaxFiniteGroupOrder = 10000;

/// A finite permutation group with its full element list, computed by
/// breadth-first closure of the generators at construction.
class PermGroup {
 public:
  /// Throws ValidationError for malformed generators and UnsupportedError
  /// when the order exceeds kMaxFiniteGroupOrder.
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& generators() const { return generators_; }
  /// elements()[0] is the identity; the rest follow closure order.
  const std::vector<Permutation>& elements() const { return elements_; }
  /// Positive word in the generators reaching element i (BFS tree).
  const Word& word(std::size_t i) const { return words_[i]; }

  std::size_t index_of(const Permutation& p) const;
  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const;

  friend bool operator==(const PermGroup& a, const PermGroup& b) {
    return a.degree_ == b.degree_ && a.generators_ == b.generators_;
  }

 private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::vector<Word> words_;
  std::map<Permutation, std::size_t> index_;
};

}  // namespace icc::catalog

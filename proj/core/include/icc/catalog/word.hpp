#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace icc::catalog {

/// Freely reduced word over a free generating set.
///
/// Letters are signed 1-based generator indices: `i` is generator i-1 and
/// `-i` its inverse. The empty word is the identity.
class Word {
 public:
  Word() = default;
  /// Freely reduces `letters`.
  explicit Word(const std::vector<int>& letters);
  Word(std::initializer_list<int> letters);

  static Word generator(std::size_t index, int exponent = 1);

  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int front() const { return letters_.front(); }
  int back() const { return letters_.back(); }

  Word inverse() const;
  Word pow(long exponent) const;
  /// Largest generator index used (1-based), 0 for the identity.
  int max_generator() const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;
  /// Shortlex-free lexicographic order on letters with a < a^-1 < b < ...
  friend bool operator<(const Word& a, const Word& b);

  /// Renders as e.g. "a^2 b a^-1"; "1" for the identity.
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::vector<int> letters_;
};

/// Total order on letters: a < a^-1 < b < b^-1 < ...
bool letter_less(int x, int y);

/// Free reduction of an arbitrary letter sequence.
Word normalize(const std::vector<int>& letters);

/// Cyclic reduction followed by the least rotation: a canonical
/// representative of the conjugacy class.
Word cyclic_normalize(const Word& w);

/// w^-1 u w, reduced.
Word conjugate(const Word& u, const Word& w);

/// Default generator names a, b, c, ... (x1, x2, ... past 26).
std::vector<std::string> default_names(std::size_t count);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

}  // namespace icc::catalog

#include "icc/catalog/word.hpp"

#include <algorithm>
#include <cstdlib>

#include "icc/error.hpp"

namespace icc::catalog {

Word::Word(const std::vector<int>& letters) {
  letters_.reserve(letters.size());
  for (int x : letters) {
    if (x == 0) throw ValidationError("word letter 0 is not a generator");
    if (!letters_.empty() && letters_.back() == -x) {
      letters_.pop_back();
    } else {
      letters_.push_back(x);
    }
  }
}

Word::Word(std::initializer_list<int> letters) : Word(std::vector<int>(letters)) {}

Word Word::generator(std::size_t index, int exponent) {
  return Word({static_cast<int>(index) + 1}).pow(exponent);
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(-*it);
  return w;
}

Word Word::pow(long exponent) const {
  Word base = exponent < 0 ? inverse() : *this;
  unsigned long n = static_cast<unsigned long>(std::labs(exponent));
  Word result;
  for (unsigned long i = 0; i < n; ++i) result = result * base;
  return result;
}

int Word::max_generator() const {
  int m = 0;
  for (int x : letters_) m = std::max(m, std::abs(x));
  return m;
}

Word operator*(const Word& a, const Word& b) {
  Word out = a;
  for (int x : b.letters_) {
    if (!out.letters_.empty() && out.letters_.back() == -x) {
      out.letters_.pop_back();
    } else {
      out.letters_.push_back(x);
    }
  }
  return out;
}

bool letter_less(int x, int y) {
  const int ax = std::abs(x);
  const int ay = std::abs(y);
  if (ax != ay) return ax < ay;
  return x > y;  // positive letter first
}

bool operator<(const Word& a, const Word& b) {
  return std::lexicographical_compare(a.letters_.begin(), a.letters_.end(),
                                      b.letters_.begin(), b.letters_.end(), letter_less);
}

std::string Word::to_string(const std::vector<std::string>& names) const {
  if (letters_.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < letters_.size()) {
    const int x = letters_[i];
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == x) ++j;
    const long run = static_cast<long>(j - i);
    const std::size_t idx = static_cast<std::size_t>(std::abs(x) - 1);
    if (!out.empty()) out += " ";
    out += idx < names.size() ? names[idx] : "x" + std::to_string(idx + 1);
    const long e = x > 0 ? run : -run;
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

Word normalize(const std::vector<int>& letters) { return Word(letters); }

Word cyclic_normalize(const Word& w) {
  std::vector<int> core = w.letters();
  std::size_t lo = 0;
  std::size_t hi = core.size();
  while (hi - lo >= 2 && core[lo] == -core[hi - 1]) {
    ++lo;
    --hi;
  }
  std::vector<int> c(core.begin() + static_cast<std::ptrdiff_t>(lo),
                     core.begin() + static_cast<std::ptrdiff_t>(hi));
  std::vector<int> best = c;
  for (std::size_t k = 1; k < c.size(); ++k) {
    std::vector<int> rot(c.begin() + static_cast<std::ptrdiff_t>(k), c.end());
    rot.insert(rot.end(), c.begin(), c.begin() + static_cast<std::ptrdiff_t>(k));
    if (std::lexicographical_compare(rot.begin(), rot.end(), best.begin(), best.end(),
                                     letter_less)) {
      best = std::move(rot);
    }
  }
  return Word(best);
}

Word conjugate(const Word& u, const Word& w) { return w.inverse() * u * w; }

std::vector<std::string> default_names(std::size_t count) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) {
    names.push_back(count <= 26 ? std::string(1, static_cast<char>('a' + i))
                                : "x" + std::to_string(i + 1));
  }
  return names;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = w.size();
  for (int x : w.letters()) h = h * 1000003u ^ static_cast<std::size_t>(x + 65536);
  return h;
}

}  // namespace icc::catalog

#pragma once

#include <cstdlib>
#include <random>
#include <vector>

#include "icc/catalog/word.hpp"

namespace icc::testing {

using catalog::Word;

inline Word substitute(const std::vector<Word>& images, const Word& w) {
  Word out;
  for (int x : w.letters()) {
    const Word& img = images[static_cast<std::size_t>(std::abs(x)) - 1];
    out = out * (x > 0 ? img : img.inverse());
  }
  return out;
}

inline Word random_word(std::mt19937& rng, std::size_t rank, std::size_t max_length) {
  const std::size_t len = rng() % (max_length + 1);
  std::vector<int> letters;
  for (std::size_t i = 0; i < len; ++i) {
    const int g = static_cast<int>(rng() % rank) + 1;
    letters.push_back(rng() % 2 ? g : -g);
  }
  return Word(letters);
}

/// Generator images of a random product of elementary Nielsen
/// automorphisms (transvections, inversions, swaps), built by direct
/// substitution so no library validation is involved.
inline std::vector<Word> random_automorphism_images(std::mt19937& rng, std::size_t rank, int steps) {
  std::vector<Word> images;
  for (std::size_t i = 0; i < rank; ++i) images.push_back(Word::generator(i));
  for (int s = 0; s < steps; ++s) {
    std::vector<Word> e;
    for (std::size_t i = 0; i < rank; ++i) e.push_back(Word::generator(i));
    const std::size_t i = rng() % rank;
    const std::size_t j = rng() % rank;
    const int sign = rng() % 2 ? 1 : -1;
    switch (rng() % 4) {
      case 0:
        if (i != j) e[i] = e[i] * Word::generator(j, sign);
        break;
      case 1:
        if (i != j) e[i] = Word::generator(j, sign) * e[i];
        break;
      case 2:
        e[i] = e[i].inverse();
        break;
      default:
        std::swap(e[i], e[j]);
        break;
    }
    std::vector<Word> next;
    for (const auto& x : e) next.push_back(substitute(images, x));
    images = std::move(next);
  }
  return images;
}

}  // namespace icc::testing

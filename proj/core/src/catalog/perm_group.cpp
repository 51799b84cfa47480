#include "icc/catalog/perm_group.hpp"

#include <algorithm>

#include "icc/error.hpp"

namespace icc::catalog {

Permutation perm_multiply(const Permutation& p, const Permutation& q) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[static_cast<std::size_t>(p[i])];
  return r;
}

Permutation perm_inverse(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return r;
}

Permutation perm_identity(std::size_t degree) {
  Permutation p(degree);
  for (std::size_t i = 0; i < degree; ++i) p[i] = static_cast<int>(i);
  return p;
}

std::string perm_to_string(const Permutation& p) {
  std::string out;
  std::vector<bool> done(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == static_cast<int>(i)) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      if (!first) out += ",";
      out += std::to_string(j + 1);
      first = false;
      j = static_cast<std::size_t>(p[j]);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.size() != degree_) throw ValidationError("permutation has wrong degree");
    std::vector<int> sorted = g;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != perm_identity(degree_)) throw ValidationError("not a permutation");
  }
  elements_.push_back(perm_identity(degree_));
  words_.emplace_back();
  index_.emplace(elements_.front(), 0);
  for (std::size_t x = 0; x < elements_.size(); ++x) {
    for (std::size_t k = 0; k < generators_.size(); ++k) {
      Permutation y = perm_multiply(elements_[x], generators_[k]);
      if (index_.contains(y)) continue;
      if (elements_.size() >= kMaxFiniteGroupOrder) {
        throw UnsupportedError("finite group order exceeds " + std::to_string(kMaxFiniteGroupOrder));
      }
      index_.emplace(y, elements_.size());
      words_.push_back(words_[x] * Word::generator(k));
      elements_.push_back(std::move(y));
    }
  }
}

std::size_t PermGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw ValidationError("permutation is not in the group");
  return it->second;
}

std::size_t PermGroup::multiply(std::size_t a, std::size_t b) const {
  return index_of(perm_multiply(elements_[a], elements_[b]));
}

std::size_t PermGroup::inverse(std::size_t a) const { return index_of(perm_inverse(elements_[a])); }

}  // namespace icc::catalog

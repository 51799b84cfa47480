#include "icc/matgroup/matrix_group.hpp"

#include <deque>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "icc/error.hpp"
#include "icc/linalg/polynomial.hpp"

namespace icc::matgroup {

namespace {

struct VectorHash {
  std::size_t operator()(const IntVector& v) const noexcept {
    std::size_t h = v.size();
    std::hash<Int> hi;
    for (const auto& x : v) h = h * 0x9e3779b97f4a7c15ULL ^ hi(x);
    return h;
  }
};

std::string mod3_key(const IntMatrix& m) {
  std::string key;
  key.reserve(m.data().size());
  for (const auto& x : m.data()) {
    int r = static_cast<int>(x % 3);
    if (r < 0) r += 3;
    key.push_back(static_cast<char>('0' + r));
  }
  return key;
}

unsigned long long cyclotomic_lcm(const IntMatrix& m) {
  auto fact = linalg::cyclotomic_orders(linalg::charpoly(m), m.rows());
  Int l = 1;
  for (unsigned long n : fact.orders) l = linalg::lcm(l, Int(n));
  return l.convert_to<unsigned long long>();
}

}  // namespace

MatGroupGens::MatGroupGens(std::vector<IntMatrix> generators, std::vector<std::string> labels)
    : generators_(std::move(generators)), labels_(std::move(labels)) {
  if (generators_.empty()) throw ValidationError("matrix group needs at least one generator");
  rank_ = generators_.front().rows();
  inverses_.reserve(generators_.size());
  for (const auto& g : generators_) {
    if (g.rows() != rank_ || g.cols() != rank_)
      throw ValidationError("matrix group generators differ in size");
    require_unimodular(g);
    inverses_.push_back(g.inverse_unimodular());
  }
  if (labels_.empty()) {
    for (std::size_t i = 0; i < generators_.size(); ++i) labels_.push_back("g" + std::to_string(i + 1));
  }
  if (labels_.size() != generators_.size()) throw ValidationError("generator label count mismatch");
}

IntMatrix MatGroupGens::evaluate(const Word& w) const {
  IntMatrix acc = IntMatrix::identity(rank_);
  for (int x : w.letters()) {
    const std::size_t i = static_cast<std::size_t>(std::abs(x) - 1);
    if (i >= generators_.size()) throw ValidationError("word uses an unknown generator");
    acc = acc * (x > 0 ? generators_[i] : inverses_[i]);
  }
  return acc;
}

MatrixOrder matrix_order(const IntMatrix& m) {
  linalg::require_unimodular(m);
  auto fact = linalg::cyclotomic_orders(linalg::charpoly(m), m.rows());
  if (!fact.all_cyclotomic) return InfiniteOrder{};
  Int l = 1;
  for (unsigned long n : fact.orders) l = linalg::lcm(l, Int(n));
  const auto big_l = l.convert_to<unsigned long long>();
  if (!m.pow(big_l).is_identity()) return InfiniteOrder{};
  for (unsigned long long d = 1; d <= big_l; ++d) {
    if (big_l % d == 0 && m.pow(d).is_identity()) return FiniteOrder{d};
  }
  return FiniteOrder{big_l};
}

FinitenessCert group_is_finite(const MatGroupGens& g) {
  struct Element {
    IntMatrix rep;
    Word word;
  };
  std::vector<Element> elements;
  std::unordered_map<std::string, std::size_t> index;
  const IntMatrix id = IntMatrix::identity(g.rank());
  elements.push_back({id, Word{}});
  index.emplace(mod3_key(id), 0);
  for (std::size_t x = 0; x < elements.size(); ++x) {
    for (std::size_t k = 0; k < g.size(); ++k) {
      IntMatrix y = elements[x].rep * g.generators()[k];
      std::string key = mod3_key(y);
      auto it = index.find(key);
      if (it == index.end()) {
        Word w = elements[x].word * Word::generator(k);
        index.emplace(std::move(key), elements.size());
        elements.push_back({std::move(y), std::move(w)});
        continue;
      }
      const Element& z = elements[it->second];
      if (y == z.rep) continue;
      // Schreier element rep(x) g_k rep(xg_k)^-1: in the congruence kernel.
      Word w = elements[x].word * Word::generator(k) * z.word.inverse();
      IntMatrix s = y * z.rep.inverse_unimodular();
      return InfiniteGroupCert{std::move(w), std::move(s)};
    }
  }
  const auto n = static_cast<unsigned long long>(elements.size());
  return FiniteGroupCert{n, n};
}

std::vector<IntMatrix> enumerate_finite_group(const MatGroupGens& g, std::size_t cap) {
  std::vector<IntMatrix> elements{IntMatrix::identity(g.rank())};
  std::set<IntMatrix> seen(elements.begin(), elements.end());
  for (std::size_t x = 0; x < elements.size(); ++x) {
    for (const auto& gen : g.generators()) {
      IntMatrix y = elements[x] * gen;
      if (seen.insert(y).second) {
        if (elements.size() >= cap) throw Error("matrix group closure exceeded cap");
        elements.push_back(std::move(y));
      }
    }
  }
  return elements;
}

Lattice single_finite_orbit_space(const IntMatrix& m) {
  const unsigned long long l = cyclotomic_lcm(m);
  return linalg::kernel_lattice(m.pow(l) - IntMatrix::identity(m.rows()));
}

Lattice invariant_core(const Lattice& c, const MatGroupGens& g) {
  Lattice current = c;
  while (true) {
    Lattice next = current;
    for (std::size_t k = 0; k < g.size(); ++k) {
      next = linalg::lattice_intersect(next, current.image(g.generators()[k]));
      next = linalg::lattice_intersect(next, current.image(g.inverses()[k]));
    }
    if (next == current) return current;
    current = std::move(next);
  }
}

FiniteOrbitCert finite_orbit_sublattice(const MatGroupGens& g) {
  const std::size_t r = g.rank();
  Lattice c = Lattice::full(r);
  for (const auto& gen : g.generators()) {
    c = linalg::lattice_intersect(c, single_finite_orbit_space(gen));
  }
  std::vector<ShrinkStep> steps;
  while (true) {
    c = invariant_core(c, g);
    if (c.rank() == 0) return {c, std::move(steps), FiniteGroupCert{1, 1}};
    std::vector<IntMatrix> induced;
    induced.reserve(g.size());
    for (const auto& gen : g.generators()) induced.push_back(linalg::restrict_to(gen, c));
    MatGroupGens induced_group(std::move(induced), g.labels());
    FinitenessCert cert = group_is_finite(induced_group);
    if (auto* fin = std::get_if<FiniteGroupCert>(&cert)) {
      return {c, std::move(steps), *fin};
    }
    auto& inf = std::get<InfiniteGroupCert>(cert);
    Lattice local = single_finite_orbit_space(inf.witness_matrix);
    std::vector<IntVector> ambient;
    for (const auto& b : local.basis_vectors()) ambient.push_back(c.combine(b));
    Lattice shrunk = Lattice::span(r, ambient);
    if (shrunk.rank() >= c.rank()) {
      throw Error("finite_orbit_sublattice: congruence witness did not reduce rank");
    }
    steps.push_back({std::move(inf.witness_word), std::move(inf.witness_matrix), c});
    c = std::move(shrunk);
  }
}

OrbitResult orbit_bfs(const MatGroupGens& g, const IntVector& v, std::size_t cap) {
  if (cap == 0) throw ValidationError("orbit_bfs: cap must be at least 1");
  if (v.size() != g.rank()) throw ValidationError("orbit_bfs: vector length mismatch");
  std::vector<IntVector> orbit{v};
  std::unordered_set<IntVector, VectorHash> seen{v};
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (std::size_t k = 0; k < g.size(); ++k) {
      for (const IntMatrix* m : {&g.generators()[k], &g.inverses()[k]}) {
        IntVector w = *m * orbit[head];
        if (seen.contains(w)) continue;
        if (orbit.size() >= cap) return OrbitExceededCap{orbit.size() + 1};
        seen.insert(w);
        orbit.push_back(std::move(w));
      }
    }
  }
  return OrbitFinite{std::move(orbit)};
}

}  // namespace icc::matgroup

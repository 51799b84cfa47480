#include "icc/catalog/free_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <optional>
#include <set>

#include "icc/error.hpp"

namespace icc::catalog {

namespace {

struct CoreSplit {
  Word prefix;             // w == prefix * core * prefix^-1
  std::vector<int> core;   // cyclically reduced
};

CoreSplit split_core(const Word& w) {
  const auto& l = w.letters();
  std::size_t lo = 0;
  std::size_t hi = l.size();
  while (hi - lo >= 2 && l[lo] == -l[hi - 1]) {
    ++lo;
    --hi;
  }
  CoreSplit s;
  s.prefix = Word(std::vector<int>(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(lo)));
  s.core.assign(l.begin() + static_cast<std::ptrdiff_t>(lo), l.begin() + static_cast<std::ptrdiff_t>(hi));
  return s;
}

std::vector<int> rotate_left(const std::vector<int>& c, std::size_t k) {
  std::vector<int> r(c.begin() + static_cast<std::ptrdiff_t>(k), c.end());
  r.insert(r.end(), c.begin(), c.begin() + static_cast<std::ptrdiff_t>(k));
  return r;
}

// canonical == s^-1 w s
struct CanonicalForm {
  Word canonical;
  Word s;
};

CanonicalForm canonicalize(const Word& w) {
  CoreSplit split = split_core(w);
  const auto& c = split.core;
  std::size_t best_k = 0;
  std::vector<int> best = c;
  for (std::size_t k = 1; k < c.size(); ++k) {
    auto rot = rotate_left(c, k);
    if (std::lexicographical_compare(rot.begin(), rot.end(), best.begin(), best.end(), letter_less)) {
      best = std::move(rot);
      best_k = k;
    }
  }
  Word x(std::vector<int>(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(best_k)));
  return {Word(best), split.prefix * x};
}

bool shorter(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

Word root(const Word& w) {
  if (w.empty()) return w;
  CoreSplit split = split_core(w);
  const auto& c = split.core;
  const std::size_t n = c.size();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = c[i] == c[i - d];
    if (periodic) {
      Word r(std::vector<int>(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(d)));
      return split.prefix * r * split.prefix.inverse();
    }
  }
  return w;
}

std::optional<Word> conjugacy_test_free(const Word& u, const Word& v) {
  CanonicalForm cu = canonicalize(u);
  CanonicalForm cv = canonicalize(v);
  if (!(cu.canonical == cv.canonical)) return std::nullopt;
  if (u.empty()) return Word{};
  const Word w0 = cu.s * cv.s.inverse();
  // Every conjugator is root(u)^t * w0; beyond |t| > 2|w0| they only grow.
  const Word rho = root(u);
  const long bound = 2 * static_cast<long>(w0.size()) + 1;
  Word best = w0;
  for (long t = -bound; t <= bound; ++t) {
    Word cand = rho.pow(t) * w0;
    if (shorter(cand, best)) best = std::move(cand);
  }
  return best;
}

namespace {

struct NielsenState {
  std::vector<Word> tuple;
  std::vector<Word> expressions;
  std::vector<NielsenMove> path;
};

std::size_t total_length(const std::vector<Word>& t) {
  std::size_t s = 0;
  for (const auto& w : t) s += w.size();
  return s;
}

// Calls visit(next_state) for every move whose new entry has length
// compared to the old one as selected by `want` (-1 shorter, 0 equal).
template <class Visit>
bool for_each_move(const NielsenState& st, int want, Visit&& visit) {
  using Kind = NielsenMove::Kind;
  const std::size_t n = st.tuple.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      for (Kind kind : {Kind::RightMultiply, Kind::LeftMultiply}) {
        for (int e : {1, -1}) {
          const Word tj = e > 0 ? st.tuple[j] : st.tuple[j].inverse();
          Word cand = kind == Kind::RightMultiply ? st.tuple[i] * tj : tj * st.tuple[i];
          const std::size_t old = st.tuple[i].size();
          if (want < 0 ? cand.size() >= old : cand.size() != old) continue;
          NielsenState next = st;
          const Word ej = e > 0 ? st.expressions[j] : st.expressions[j].inverse();
          next.tuple[i] = std::move(cand);
          next.expressions[i] = kind == Kind::RightMultiply ? st.expressions[i] * ej : ej * st.expressions[i];
          next.path.push_back({kind, i, j, e, total_length(next.tuple)});
          if (visit(std::move(next))) return true;
        }
      }
    }
  }
  return false;
}

constexpr std::size_t kPlateauCap = 20000;

}  // namespace

NielsenResult nielsen_reduce(const std::vector<Word>& tuple, std::size_t rank) {
  if (tuple.empty()) throw ValidationError("nielsen_reduce: empty tuple");
  const std::size_t n = tuple.size();
  NielsenState cur{tuple, {}, {}};
  for (std::size_t i = 0; i < n; ++i) cur.expressions.push_back(Word::generator(i));

  while (true) {
    std::optional<NielsenState> found;
    for_each_move(cur, -1, [&](NielsenState s) {
      found = std::move(s);
      return true;
    });
    if (!found) {
      // No shortening move: search the length-preserving moves for a tuple
      // that admits one.
      std::set<std::vector<Word>> seen{cur.tuple};
      std::deque<NielsenState> queue;
      NielsenState start = cur;
      start.path.clear();
      queue.push_back(std::move(start));
      while (!queue.empty() && !found && seen.size() < kPlateauCap) {
        NielsenState st = std::move(queue.front());
        queue.pop_front();
        for_each_move(st, 0, [&](NielsenState next) {
          if (!seen.insert(next.tuple).second) return false;
          for_each_move(next, -1, [&](NielsenState done) {
            found = std::move(done);
            return true;
          });
          if (found) return true;
          queue.push_back(std::move(next));
          return false;
        });
      }
      if (!found) break;
      NielsenState merged = std::move(*found);
      merged.path.insert(merged.path.begin(), cur.path.begin(), cur.path.end());
      found = std::move(merged);
    }
    cur = std::move(*found);
  }

  NielsenResult res;
  res.reduced = std::move(cur.tuple);
  res.expressions = std::move(cur.expressions);
  res.log = std::move(cur.path);
  if (n == rank) {
    std::set<int> seen;
    bool ok = true;
    for (const auto& w : res.reduced) {
      if (w.size() != 1 || std::abs(w.front()) > static_cast<int>(rank)) {
        ok = false;
        break;
      }
      seen.insert(std::abs(w.front()));
    }
    res.is_basis = ok && seen.size() == rank;
  }
  return res;
}

FreeAut::FreeAut(std::size_t rank, std::vector<Word> images) : images_(std::move(images)) {
  if (rank == 0) throw ValidationError("free group automorphism needs rank >= 1");
  if (images_.size() != rank) {
    throw ValidationError("automorphism needs " + std::to_string(rank) + " generator images, got " +
                          std::to_string(images_.size()));
  }
  for (const auto& w : images_) {
    if (w.max_generator() > static_cast<int>(rank))
      throw ValidationError("automorphism image uses a generator outside the free group");
  }
  if (!nielsen_reduce(images_, rank).is_basis) {
    throw ValidationError("non-automorphism map: images do not form a free basis");
  }
}

FreeAut FreeAut::identity(std::size_t rank) {
  std::vector<Word> images;
  for (std::size_t i = 0; i < rank; ++i) images.push_back(Word::generator(i));
  return FreeAut(Unchecked{}, std::move(images));
}

FreeAut FreeAut::conjugation(std::size_t rank, const Word& w) {
  std::vector<Word> images;
  for (std::size_t i = 0; i < rank; ++i) images.push_back(w * Word::generator(i) * w.inverse());
  return FreeAut(Unchecked{}, std::move(images));
}

Word FreeAut::apply(const Word& w) const {
  Word out;
  for (int x : w.letters()) {
    const std::size_t i = static_cast<std::size_t>(std::abs(x) - 1);
    if (i >= images_.size()) throw ValidationError("word uses a generator outside the free group");
    out = out * (x > 0 ? images_[i] : images_[i].inverse());
  }
  return out;
}

FreeAut FreeAut::compose(const FreeAut& other) const {
  if (other.rank() != rank()) throw ValidationError("composing automorphisms of different ranks");
  std::vector<Word> images;
  images.reserve(rank());
  for (const auto& w : other.images_) images.push_back(apply(w));
  return FreeAut(Unchecked{}, std::move(images));
}

FreeAut FreeAut::inverse() const {
  NielsenResult nr = nielsen_reduce(images_, rank());
  if (!nr.is_basis) throw ValidationError("inverse of a non-automorphism");
  // reduced[j] = phi(expr_j) = x_p^e  =>  phi^-1(x_p) = expr_j^e
  std::vector<Word> inv(rank());
  for (std::size_t j = 0; j < rank(); ++j) {
    const int x = nr.reduced[j].front();
    const std::size_t p = static_cast<std::size_t>(std::abs(x) - 1);
    inv[p] = x > 0 ? nr.expressions[j] : nr.expressions[j].inverse();
  }
  return FreeAut(Unchecked{}, std::move(inv));
}

FreeAut FreeAut::pow(long exponent) const {
  FreeAut base = exponent < 0 ? inverse() : *this;
  FreeAut result = identity(rank());
  for (long i = 0; i < std::labs(exponent); ++i) result = result.compose(base);
  return result;
}

bool FreeAut::is_identity() const { return *this == identity(rank()); }

linalg::IntMatrix FreeAut::abelianization() const {
  const std::size_t k = rank();
  linalg::IntMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (int x : images_[i].letters()) {
      m(static_cast<std::size_t>(std::abs(x) - 1), i) += x > 0 ? 1 : -1;
    }
  }
  return m;
}

std::string FreeAut::to_string(const std::vector<std::string>& names) const {
  std::string out = "(";
  for (std::size_t i = 0; i < rank(); ++i) {
    if (i) out += ", ";
    out += (i < names.size() ? names[i] : "x" + std::to_string(i + 1)) + " -> " +
           images_[i].to_string(names);
  }
  return out + ")";
}

std::optional<Word> is_inner(const FreeAut& phi) {
  const std::size_t k = phi.rank();
  if (k == 1) {
    if (phi.is_identity()) return Word{};
    return std::nullopt;
  }
  if (!phi.abelianization().is_identity()) return std::nullopt;
  const Word x1 = Word::generator(0);
  const Word x2 = Word::generator(1);
  auto c = conjugacy_test_free(x1, phi.images()[0]);
  if (!c) return std::nullopt;
  // phi(x1) = w0 x1 w0^-1; every solution of that equation is w0 x1^t.
  const Word w0 = c->inverse();
  const long bound = static_cast<long>(phi.images()[1].size() + w0.size()) + 2;
  for (long step = 0; step <= 2 * bound; ++step) {
    const long t = (step % 2 == 0) ? step / 2 : -(step + 1) / 2;
    const Word w = w0 * x1.pow(t);
    if (!(w * x2 * w.inverse() == phi.images()[1])) continue;
    bool all = true;
    for (std::size_t i = 2; i < k && all; ++i) {
      const Word xi = Word::generator(i);
      all = w * xi * w.inverse() == phi.images()[i];
    }
    if (all) return w;
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace icc::catalog

#include "icc/oracle/concrete_group.hpp"

#include <cstdlib>
#include <unordered_set>

#include "icc/matgroup/matrix_group.hpp"
#include "icc/overloaded.hpp"

namespace icc::oracle {

using analyzer::Report;
using analyzer::Verdict;
using catalog::FgAbelian;
using catalog::FiniteGroup;
using catalog::Free;
using linalg::IntMatrix;

namespace {

Word shift_word(const Word& w, std::size_t offset) {
  std::vector<int> letters;
  letters.reserve(w.size());
  for (int x : w.letters()) letters.push_back(x > 0 ? x + static_cast<int>(offset) : x - static_cast<int>(offset));
  return Word(letters);
}

long reduce(long value, unsigned long modulus) {
  const long m = static_cast<long>(modulus);
  return ((value % m) + m) % m;
}

}  // namespace

ConcreteGroup::ConcreteGroup(ExtensionSpec spec) : spec_(std::move(spec)) {
  std::visit(overloaded{
                 [&](const FgAbelian& a) {
                   if (!a.torsion.empty())
                     throw UnsupportedError("oracle: torsion kernels are not materialized");
                   kind_ = KernelKind::Abelian;
                   kernel_rank_ = a.rank;
                 },
                 [&](const Free& f) {
                   kind_ = KernelKind::Free;
                   kernel_rank_ = f.rank();
                 },
                 [&](const FiniteGroup& g) {
                   kind_ = KernelKind::Finite;
                   kernel_rank_ = g.group.generators().size();
                 },
             },
             spec_.kernel);
  if (auto* m = std::get_if<analyzer::MatrixAction>(&spec_.action)) {
    mats_ = *m;
    for (const auto& x : mats_) mat_inverses_.push_back(x.inverse_unimodular());
  } else if (auto* a = std::get_if<analyzer::FreeAction>(&spec_.action)) {
    auts_ = *a;
    for (const auto& x : auts_) aut_inverses_.push_back(x.inverse());
  }

  for (std::size_t f = 0; f < spec_.quotient.factors().size(); ++f)
    for (std::size_t i = 0; i < catalog::generator_count(spec_.quotient.factors()[f]); ++i)
      generator_atom_.push_back(f);

  for (std::size_t i = 0; i < kernel_rank_; ++i) {
    switch (kind_) {
      case KernelKind::Abelian: {
        IntVector v(kernel_rank_, 0);
        v[i] = 1;
        generators_.push_back(kernel_element(v));
        break;
      }
      case KernelKind::Free:
        generators_.push_back(kernel_element(Word::generator(i)));
        break;
      case KernelKind::Finite: {
        const auto& g = std::get<FiniteGroup>(spec_.kernel).group;
        generators_.push_back(kernel_element(g.index_of(g.generators()[i])));
        break;
      }
    }
  }
  for (std::size_t j = 0; j < generator_atom_.size(); ++j) generators_.push_back(lift(Word::generator(j)));
}

ConcreteGroup materialize(const ExtensionSpec& spec) { return ConcreteGroup(spec); }

KernelPart ConcreteGroup::kernel_identity() const {
  switch (kind_) {
    case KernelKind::Abelian:
      return IntVector(kernel_rank_, 0);
    case KernelKind::Free:
      return Word{};
    case KernelKind::Finite:
      return std::size_t{0};
  }
  return std::size_t{0};
}

KernelPart ConcreteGroup::kernel_multiply(const KernelPart& a, const KernelPart& b) const {
  switch (kind_) {
    case KernelKind::Abelian: {
      IntVector out = std::get<IntVector>(a);
      const auto& y = std::get<IntVector>(b);
      for (std::size_t i = 0; i < out.size(); ++i) out[i] += y[i];
      return out;
    }
    case KernelKind::Free:
      return std::get<Word>(a) * std::get<Word>(b);
    case KernelKind::Finite:
      return std::get<FiniteGroup>(spec_.kernel).group.multiply(std::get<std::size_t>(a), std::get<std::size_t>(b));
  }
  return a;
}

KernelPart ConcreteGroup::kernel_inverse(const KernelPart& a) const {
  switch (kind_) {
    case KernelKind::Abelian: {
      IntVector out = std::get<IntVector>(a);
      for (auto& x : out) x = -x;
      return out;
    }
    case KernelKind::Free:
      return std::get<Word>(a).inverse();
    case KernelKind::Finite:
      return std::get<FiniteGroup>(spec_.kernel).group.inverse(std::get<std::size_t>(a));
  }
  return a;
}

AtomPart ConcreteGroup::generator_part(std::size_t atom, std::size_t local) const {
  return std::visit(overloaded{
                        [&](const FgAbelian& a) -> AtomPart {
                          std::vector<long> e(a.rank + a.torsion.size(), 0);
                          e[local] = 1;
                          return e;
                        },
                        [&](const Free&) -> AtomPart { return Word::generator(local); },
                        [&](const FiniteGroup& g) -> AtomPart { return g.group.index_of(g.group.generators()[local]); },
                    },
                    spec_.quotient.factors()[atom]);
}

std::vector<AtomPart> ConcreteGroup::quotient_multiply(const std::vector<AtomPart>& a,
                                                       const std::vector<AtomPart>& b) const {
  std::vector<AtomPart> out;
  out.reserve(a.size());
  for (std::size_t f = 0; f < a.size(); ++f) {
    out.push_back(std::visit(overloaded{
                                 [&](const FgAbelian& atom) -> AtomPart {
                                   auto e = std::get<std::vector<long>>(a[f]);
                                   const auto& y = std::get<std::vector<long>>(b[f]);
                                   for (std::size_t i = 0; i < e.size(); ++i) {
                                     e[i] += y[i];
                                     if (i >= atom.rank) e[i] = reduce(e[i], atom.torsion[i - atom.rank]);
                                   }
                                   return e;
                                 },
                                 [&](const Free&) -> AtomPart { return std::get<Word>(a[f]) * std::get<Word>(b[f]); },
                                 [&](const FiniteGroup& g) -> AtomPart {
                                   return g.group.multiply(std::get<std::size_t>(a[f]), std::get<std::size_t>(b[f]));
                                 },
                             },
                             spec_.quotient.factors()[f]));
  }
  return out;
}

std::vector<AtomPart> ConcreteGroup::quotient_inverse(const std::vector<AtomPart>& a) const {
  std::vector<AtomPart> out;
  out.reserve(a.size());
  for (std::size_t f = 0; f < a.size(); ++f) {
    out.push_back(std::visit(overloaded{
                                 [&](const FgAbelian& atom) -> AtomPart {
                                   auto e = std::get<std::vector<long>>(a[f]);
                                   for (std::size_t i = 0; i < e.size(); ++i) {
                                     e[i] = -e[i];
                                     if (i >= atom.rank) e[i] = reduce(e[i], atom.torsion[i - atom.rank]);
                                   }
                                   return e;
                                 },
                                 [&](const Free&) -> AtomPart { return std::get<Word>(a[f]).inverse(); },
                                 [&](const FiniteGroup& g) -> AtomPart {
                                   return g.group.inverse(std::get<std::size_t>(a[f]));
                                 },
                             },
                             spec_.quotient.factors()[f]));
  }
  return out;
}

Word ConcreteGroup::quotient_word(const std::vector<AtomPart>& q) const {
  Word w;
  for (std::size_t f = 0; f < q.size(); ++f) {
    const std::size_t off = spec_.quotient.generator_offset(f);
    std::visit(overloaded{
                   [&](const std::vector<long>& e) {
                     for (std::size_t i = 0; i < e.size(); ++i)
                       if (e[i] != 0) w = w * Word::generator(off + i, static_cast<int>(e[i]));
                   },
                   [&](const Word& x) { w = w * shift_word(x, off); },
                   [&](std::size_t idx) {
                     w = w * shift_word(std::get<FiniteGroup>(spec_.quotient.factors()[f]).group.word(idx), off);
                   },
               },
               q[f]);
  }
  return w;
}

KernelPart ConcreteGroup::apply_letter(int letter, const KernelPart& k) const {
  const std::size_t g = static_cast<std::size_t>(std::abs(letter)) - 1;
  switch (kind_) {
    case KernelKind::Abelian:
      if (mats_.empty()) return k;
      return (letter > 0 ? mats_[g] : mat_inverses_[g]) * std::get<IntVector>(k);
    case KernelKind::Free:
      if (auts_.empty()) return k;
      return (letter > 0 ? auts_[g] : aut_inverses_[g]).apply(std::get<Word>(k));
    case KernelKind::Finite:
      return k;
  }
  return k;
}

KernelPart ConcreteGroup::act(const std::vector<AtomPart>& q, const KernelPart& k) const {
  if (kind_ == KernelKind::Finite) return k;
  const Word w = quotient_word(q);
  KernelPart out = k;
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out = apply_letter(*it, out);
  return out;
}

Element ConcreteGroup::identity() const {
  Element e{kernel_identity(), {}};
  for (const auto& atom : spec_.quotient.factors()) {
    e.quotient.push_back(std::visit(overloaded{
                                        [](const FgAbelian& a) -> AtomPart {
                                          return std::vector<long>(a.rank + a.torsion.size(), 0);
                                        },
                                        [](const Free&) -> AtomPart { return Word{}; },
                                        [](const FiniteGroup&) -> AtomPart { return std::size_t{0}; },
                                    },
                                    atom));
  }
  return e;
}

Element ConcreteGroup::multiply(const Element& a, const Element& b) const {
  return Element{kernel_multiply(a.kernel, act(a.quotient, b.kernel)), quotient_multiply(a.quotient, b.quotient)};
}

Element ConcreteGroup::inverse(const Element& a) const {
  auto qi = quotient_inverse(a.quotient);
  KernelPart k = act(qi, kernel_inverse(a.kernel));
  return Element{std::move(k), std::move(qi)};
}

Element ConcreteGroup::conjugate(const Element& u, const Element& g) const {
  return multiply(multiply(inverse(g), u), g);
}

Element ConcreteGroup::kernel_element(const KernelPart& k) const {
  Element e = identity();
  e.kernel = k;
  return e;
}

Element ConcreteGroup::lift(const Word& quotient_word, const KernelPart& k) const {
  Element e = identity();
  for (int letter : quotient_word.letters()) {
    const std::size_t g = static_cast<std::size_t>(std::abs(letter)) - 1;
    if (g >= generator_atom_.size()) throw ValidationError("lift: quotient generator out of range");
    const std::size_t f = generator_atom_[g];
    Element step = identity();
    step.quotient[f] = generator_part(f, g - spec_.quotient.generator_offset(f));
    e = multiply(e, letter > 0 ? step : inverse(step));
  }
  return multiply(kernel_element(k), e);
}

Element ConcreteGroup::lift(const Word& quotient_word) const { return lift(quotient_word, kernel_identity()); }

std::string ConcreteGroup::key(const Element& e) const {
  std::string k = std::visit(overloaded{
                                 [](const IntVector& v) { return linalg::to_string(v); },
                                 [&](const Word& w) {
                                   return w.to_string(std::get<Free>(spec_.kernel).names);
                                 },
                                 [&](std::size_t idx) {
                                   return catalog::perm_to_string(
                                       std::get<FiniteGroup>(spec_.kernel).group.elements()[idx]);
                                 },
                             },
                             e.kernel);
  return "(" + k + " | " + quotient_word(e.quotient).to_string(spec_.generator_labels) + ")";
}

GrowthCurve conjugacy_ball(const ConcreteGroup& g, const Element& u, std::size_t radius, std::size_t size_cap) {
  if (radius < 1) throw ValidationError("conjugacy_ball: radius must be at least 1");
  std::vector<Element> conjugators;
  for (const auto& x : g.generators()) {
    conjugators.push_back(x);
    conjugators.push_back(g.inverse(x));
  }
  GrowthCurve curve;
  std::unordered_set<std::string> seen{g.key(u)};
  curve.elements.push_back(u);
  curve.sizes.push_back(1);
  std::vector<Element> frontier{u};
  for (std::size_t round = 1; round <= radius + 1; ++round) {
    std::vector<Element> next;
    for (const auto& x : frontier) {
      for (const auto& c : conjugators) {
        Element y = g.conjugate(x, c);
        if (seen.insert(g.key(y)).second) {
          curve.elements.push_back(y);
          next.push_back(std::move(y));
        }
      }
      if (seen.size() > size_cap) {
        curve.note = "size cap " + std::to_string(size_cap) + " exceeded at radius " + std::to_string(round);
        if (round <= radius) curve.sizes.push_back(seen.size());
        return curve;
      }
    }
    if (next.empty()) {
      curve.status = GrowthStatus::Closed;
      curve.closed_radius = std::max<std::size_t>(1, round - 1);
      curve.sizes.resize(radius + 1, seen.size());
      return curve;
    }
    if (round <= radius) curve.sizes.push_back(seen.size());
    frontier = std::move(next);
  }
  return curve;
}

AbelianClass exact_abelian_class(const ConcreteGroup& g, const IntVector& k, std::size_t cap) {
  if (g.kernel_kind() != ConcreteGroup::KernelKind::Abelian)
    throw ValidationError("exact_abelian_class requires an abelian kernel");
  const auto* mats = std::get_if<analyzer::MatrixAction>(&g.spec().action);
  if (!mats || mats->empty() || k.empty()) return ClassFinite{{k}};
  auto orbit = matgroup::orbit_bfs(matgroup::MatGroupGens(*mats), k, cap);
  if (auto* fin = std::get_if<matgroup::OrbitFinite>(&orbit)) return ClassFinite{fin->orbit};
  return ClassExceeded{std::get<matgroup::OrbitExceededCap>(orbit).explored};
}

std::vector<Element> sample_elements(const ConcreteGroup& g, std::size_t count) {
  std::vector<Element> letters;
  for (const auto& x : g.generators()) {
    letters.push_back(x);
    letters.push_back(g.inverse(x));
  }
  std::vector<Element> out;
  std::unordered_set<std::string> seen;
  auto offer = [&](const Element& e) {
    if (out.size() >= count || g.is_identity(e)) return;
    if (seen.insert(g.key(e)).second) out.push_back(e);
  };
  for (const auto& a : letters) offer(a);
  for (const auto& a : letters)
    for (const auto& b : letters) offer(g.multiply(a, b));
  for (const auto& a : letters)
    for (const auto& b : letters)
      for (const auto& c : letters) {
        if (out.size() >= count) return out;
        offer(g.multiply(g.multiply(a, b), c));
      }
  return out;
}

std::string to_string(GrowthStatus s) { return s == GrowthStatus::Closed ? "closed" : "still_growing"; }

void write_growth_csv(std::ostream& out, const GrowthCurve& curve) {
  out << "radius,size,status\n";
  for (std::size_t r = 0; r < curve.sizes.size(); ++r) {
    const bool closed = curve.status == GrowthStatus::Closed && r >= curve.closed_radius;
    out << r << ',' << curve.sizes[r] << ',' << (closed ? "closed" : "growing") << '\n';
  }
}

namespace {

std::optional<Element> witness_element(const ConcreteGroup& g, const analyzer::Witness& w) {
  return std::visit(
      overloaded{
          [&](const analyzer::KernelVectorWitness& v) -> std::optional<Element> {
            if (g.kernel_kind() == ConcreteGroup::KernelKind::Free) {
              // rank-1 free kernel analysed as Z
              return g.kernel_element(Word::generator(0, static_cast<int>(v.vector.front())));
            }
            return g.kernel_element(v.vector);
          },
          [&](const analyzer::KernelTorsionWitness&) -> std::optional<Element> {
            if (g.kernel_kind() != ConcreteGroup::KernelKind::Finite) return std::nullopt;
            return g.kernel_element(std::size_t{1});
          },
          [&](const analyzer::QuotientLiftWitness& q) -> std::optional<Element> {
            switch (g.kernel_kind()) {
              case ConcreteGroup::KernelKind::Free:
                return g.lift(q.element, q.lift_kernel_part);
              default:
                return g.lift(q.element);
            }
          },
      },
      w);
}

}  // namespace

CrossCheck cross_check(const ExtensionSpec& spec, const Report& report, std::size_t radius, std::size_t size_cap,
                       std::size_t samples) {
  CrossCheck out;
  if (auto* a = std::get_if<FgAbelian>(&spec.kernel); a && !a->torsion.empty()) {
    out.performed = false;
    out.summary = "torsion kernels are not materialized";
    return out;
  }
  const ConcreteGroup g = materialize(spec);

  if (report.verdict == Verdict::NotIcc && report.witness) {
    auto e = witness_element(g, *report.witness);
    if (!e) {
      out.performed = false;
      out.summary = "witness has no concrete element";
      return out;
    }
    SampleProbe probe{g.key(*e), conjugacy_ball(g, *e, radius, size_cap)};
    out.consistent = probe.curve.status == GrowthStatus::Closed;
    std::size_t expected = 0;
    if (auto* v = std::get_if<analyzer::KernelVectorWitness>(&*report.witness)) {
      expected = v->orbit.size();
      out.consistent = out.consistent && probe.curve.elements.size() == expected;
    }
    if (std::holds_alternative<analyzer::KernelTorsionWitness>(*report.witness)) {
      const std::size_t bound = std::get<FiniteGroup>(spec.kernel).group.order();
      out.consistent = out.consistent && probe.curve.elements.size() <= bound;
    }
    out.summary = "witness class " +
                  (probe.curve.status == GrowthStatus::Closed
                       ? "closed at radius " + std::to_string(probe.curve.closed_radius) + " with size " +
                             std::to_string(probe.curve.elements.size())
                       : std::string("did not close"));
    out.probes.push_back(std::move(probe));
    return out;
  }

  std::size_t closed = 0;
  for (const auto& e : sample_elements(g, samples)) {
    SampleProbe probe{g.key(e), conjugacy_ball(g, e, radius, size_cap)};
    if (probe.curve.status == GrowthStatus::Closed) ++closed;
    out.probes.push_back(std::move(probe));
  }
  out.consistent = report.verdict != Verdict::Icc || closed == 0;
  out.summary = std::to_string(closed) + " of " + std::to_string(out.probes.size()) +
                " sampled classes closed within radius " + std::to_string(radius);
  return out;
}

}  // namespace icc::oracle

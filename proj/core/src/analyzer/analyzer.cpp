#include "icc/analyzer/analyzer.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <type_traits>
#include <utility>

#include "icc/matgroup/matrix_group.hpp"
#include "icc/overloaded.hpp"

namespace icc::analyzer {

using linalg::Int;
using linalg::IntVector;
using linalg::Lattice;

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Icc:
      return "icc";
    case Verdict::NotIcc:
      return "not_icc";
    case Verdict::Unknown:
      return "unknown";
  }
  return "unknown";
}

std::string to_string(ConditionStatus s) {
  switch (s) {
    case ConditionStatus::Holds:
      return "holds";
    case ConditionStatus::Fails:
      return "fails";
    case ConditionStatus::Unknown:
      return "unknown";
    case ConditionStatus::NotEvaluated:
      return "not_evaluated";
  }
  return "not_evaluated";
}

std::string witness_kind(const Witness& w) {
  return std::visit(overloaded{
                        [](const KernelTorsionWitness&) { return std::string("kernel_torsion"); },
                        [](const KernelVectorWitness&) { return std::string("kernel_vector"); },
                        [](const QuotientLiftWitness&) { return std::string("quotient_lift"); },
                    },
                    w);
}

std::string quotient_element_text(const ExtensionSpec& spec, const Word& w) {
  return w.to_string(spec.generator_labels);
}

namespace {

Word shift_word(const Word& w, std::size_t offset) {
  std::vector<int> letters;
  letters.reserve(w.size());
  for (int x : w.letters()) letters.push_back(x > 0 ? x + static_cast<int>(offset) : x - static_cast<int>(offset));
  return Word(letters);
}

// FC(Q) = Z^a x P with P finite, as far as theta is concerned: `cyclic`
// lists the infinite cyclic generators, `finite_factors` the finite
// direct factors (each list starts with the identity).
template <class T>
struct FcModel {
  std::vector<std::pair<Word, T>> cyclic;
  std::vector<std::vector<std::pair<Word, T>>> finite_factors;
};

template <class T>
FcModel<T> build_fc_model(const GroupDesc& q, const std::vector<T>& action, const T& identity) {
  FcModel<T> model;
  const auto fc = catalog::fc_subgroup(q);
  for (std::size_t f = 0; f < q.factors().size(); ++f) {
    if (fc.factors[f] != catalog::FcKind::Whole) continue;
    const std::size_t off = q.generator_offset(f);
    std::visit(overloaded{
                   [&](const catalog::FiniteGroup& g) {
                     std::vector<T> local(action.begin() + static_cast<std::ptrdiff_t>(off),
                                          action.begin() + static_cast<std::ptrdiff_t>(off + g.group.generators().size()));
                     auto table = finite_action_table(g.group, local, identity);
                     std::vector<std::pair<Word, T>> elems;
                     for (std::size_t i = 0; i < g.group.order(); ++i)
                       elems.emplace_back(shift_word(g.group.word(i), off), table[i]);
                     model.finite_factors.push_back(std::move(elems));
                   },
                   [&](const catalog::FgAbelian& a) {
                     for (std::size_t i = 0; i < a.rank; ++i)
                       model.cyclic.emplace_back(Word::generator(off + i), action[off + i]);
                     for (std::size_t t = 0; t < a.torsion.size(); ++t) {
                       const std::size_t gi = off + a.rank + t;
                       std::vector<std::pair<Word, T>> elems;
                       T acc = identity;
                       for (unsigned long e = 0; e < a.torsion[t]; ++e) {
                         elems.emplace_back(Word::generator(gi, static_cast<int>(e)), acc);
                         acc = AutOps<T>::multiply(acc, action[gi]);
                       }
                       model.finite_factors.push_back(std::move(elems));
                     }
                   },
                   [&](const catalog::Free&) { model.cyclic.emplace_back(Word::generator(off), action[off]); },
               },
               q.factors()[f]);
  }
  return model;
}

// Enumerates P in mixed radix (first factor fastest), identity first.
template <class T>
std::optional<std::vector<std::pair<Word, T>>> enumerate_finite_part(const FcModel<T>& model, const T& identity,
                                                                     std::size_t cap) {
  std::size_t total = 1;
  for (const auto& f : model.finite_factors) {
    if (total > cap / std::max<std::size_t>(f.size(), 1)) return std::nullopt;
    total *= f.size();
  }
  std::vector<std::pair<Word, T>> out;
  out.reserve(total);
  std::vector<std::size_t> digit(model.finite_factors.size(), 0);
  for (std::size_t n = 0; n < total; ++n) {
    Word w;
    T act = identity;
    for (std::size_t f = 0; f < digit.size(); ++f) {
      const auto& e = model.finite_factors[f][digit[f]];
      w = w * e.first;
      act = AutOps<T>::multiply(act, e.second);
    }
    out.emplace_back(std::move(w), std::move(act));
    for (std::size_t f = 0; f < digit.size(); ++f) {
      if (++digit[f] < model.finite_factors[f].size()) break;
      digit[f] = 0;
    }
  }
  return out;
}

// Exponent vectors in [-bound, bound]^a minus zero, by max-norm then lex.
std::vector<std::vector<long>> exponent_vectors(std::size_t a, long bound) {
  std::vector<std::vector<long>> out;
  std::vector<long> e(a, -bound);
  while (true) {
    auto lead = std::find_if(e.begin(), e.end(), [](long x) { return x != 0; });
    if (lead != e.end() && *lead > 0) out.push_back(e);
    std::size_t i = a;
    while (i > 0) {
      --i;
      if (e[i] < bound) {
        ++e[i];
        for (std::size_t j = i + 1; j < a; ++j) e[j] = -bound;
        break;
      }
      if (i == 0) {
        i = a + 1;
        break;
      }
    }
    if (i == a + 1 || a == 0) break;
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    long nx = 0, ny = 0;
    for (long v : x) nx = std::max(nx, std::labs(v));
    for (long v : y) ny = std::max(ny, std::labs(v));
    return nx < ny;
  });
  return out;
}

template <class T>
using TrivialityTest = std::function<std::optional<LiftEvidence>(const T&)>;

template <class T>
FcInjectivity theta_fc_injective_impl(const GroupDesc& quotient, const std::vector<T>& action, const T& identity,
                                      const TrivialityTest<T>& trivial, const AnalyzerOptions& options) {
  if (action.size() != quotient.generator_count())
    throw ValidationError("theta_fc_injective: one action per quotient generator is required");
  const FcModel<T> model = build_fc_model(quotient, action, identity);
  auto finite_part = enumerate_finite_part(model, identity, options.fc_enumeration_cap);
  if (!finite_part) return FcUnknown{"fc-enumeration-cap"};

  for (std::size_t i = 1; i < finite_part->size(); ++i) {
    if (auto ev = trivial((*finite_part)[i].second)) return FcWitness{(*finite_part)[i].first, *ev};
  }
  const std::size_t a = model.cyclic.size();
  if (a == 0) return FcInjective{};

  if (a == 1) {
    const auto& [t, theta_t] = model.cyclic.front();
    if constexpr (std::is_same_v<T, IntMatrix>) {
      // theta(t)^n theta(f) = 1 forces theta(t)^n to have finite order.
      auto order = matgroup::matrix_order(theta_t);
      if (std::holds_alternative<matgroup::InfiniteOrder>(order)) return FcInjective{};
      const auto n = static_cast<long>(std::get<matgroup::FiniteOrder>(order).order);
      return FcWitness{t.pow(n), *trivial(AutOps<T>::pow(theta_t, n))};
    } else {
      // An inner power acts trivially on the abelianization up to a
      // finite-order factor.
      if (std::holds_alternative<matgroup::InfiniteOrder>(matgroup::matrix_order(theta_t.abelianization())))
        return FcInjective{};
    }
    T power = identity;
    for (long n = 1; n <= options.out_order_cap; ++n) {
      power = AutOps<T>::multiply(power, theta_t);
      for (const auto& [fw, fa] : *finite_part) {
        if (auto ev = trivial(AutOps<T>::multiply(power, fa))) return FcWitness{t.pow(n) * fw, *ev};
      }
    }
    return FcUnknown{"out-order-unbounded"};
  }

  const long bound = options.relation_bound;
  std::vector<std::vector<T>> powers(a);
  for (std::size_t i = 0; i < a; ++i) {
    const T inv = AutOps<T>::inverse(model.cyclic[i].second);
    powers[i].assign(static_cast<std::size_t>(2 * bound + 1), identity);
    for (long e = 1; e <= bound; ++e) {
      powers[i][static_cast<std::size_t>(bound + e)] =
          AutOps<T>::multiply(powers[i][static_cast<std::size_t>(bound + e - 1)], model.cyclic[i].second);
      powers[i][static_cast<std::size_t>(bound - e)] =
          AutOps<T>::multiply(powers[i][static_cast<std::size_t>(bound - e + 1)], inv);
    }
  }
  for (const auto& e : exponent_vectors(a, bound)) {
    T act = identity;
    Word w;
    for (std::size_t i = 0; i < a; ++i) {
      act = AutOps<T>::multiply(act, powers[i][static_cast<std::size_t>(bound + e[i])]);
      w = w * model.cyclic[i].first.pow(e[i]);
    }
    for (const auto& [fw, fa] : *finite_part) {
      if (auto ev = trivial(AutOps<T>::multiply(act, fa))) return FcWitness{w * fw, *ev};
    }
  }
  return FcUnknown{"abelian-relation-bound"};
}

// Orbit-size-minimizing witness on the finite-orbit lattice. The minimum
// orbit size is a conjugacy invariant of the action, so the witness class
// size does not depend on the chosen basis of Z^r.
KernelVectorWitness select_kernel_vector(const matgroup::MatGroupGens& g, const matgroup::FiniteOrbitCert& cert,
                                         std::size_t orbit_cap) {
  const Lattice& f = cert.lattice;
  const std::size_t k = f.rank();
  std::vector<IntMatrix> induced;
  for (const auto& gen : g.generators()) induced.push_back(linalg::restrict_to(gen, f));
  const auto elements = matgroup::enumerate_finite_group(matgroup::MatGroupGens(induced),
                                                         static_cast<std::size_t>(cert.induced_finiteness.order));
  std::vector<Lattice> fixed;
  fixed.reserve(elements.size());
  for (const auto& h : elements) fixed.push_back(linalg::kernel_lattice(h - IntMatrix::identity(k)));

  std::vector<Lattice> family{Lattice::full(k)};
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (const auto& fix : fixed) {
      Lattice next = linalg::lattice_intersect(family[i], fix);
      if (next.rank() == 0) continue;
      if (std::find(family.begin(), family.end(), next) == family.end()) family.push_back(std::move(next));
    }
  }
  std::size_t best_stab = 0;
  std::vector<std::size_t> best;
  for (std::size_t i = 0; i < family.size(); ++i) {
    std::size_t stab = 0;
    for (const auto& fix : fixed) stab += family[i].is_subset_of(fix) ? 1 : 0;
    if (stab > best_stab) {
      best_stab = stab;
      best.clear();
    }
    if (stab == best_stab) best.push_back(i);
  }

  auto normalized = [](IntVector v) {
    for (const auto& x : v) {
      if (x == 0) continue;
      if (x < 0)
        for (auto& y : v) y = -y;
      break;
    }
    return v;
  };
  auto key_less = [](const IntVector& a, const IntVector& b) {
    const Int na = linalg::max_norm(a), nb = linalg::max_norm(b);
    if (na != nb) return na < nb;
    const auto za = std::count_if(a.begin(), a.end(), [](const Int& x) { return x != 0; });
    const auto zb = std::count_if(b.begin(), b.end(), [](const Int& x) { return x != 0; });
    if (za != zb) return za < zb;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), std::greater<Int>());
  };
  std::optional<IntVector> choice;
  for (std::size_t idx : best) {
    const auto basis = family[idx].basis_vectors();
    std::vector<IntVector> local = basis;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = i + 1; j < basis.size(); ++j) {
        IntVector sum(k), diff(k);
        for (std::size_t c = 0; c < k; ++c) {
          sum[c] = basis[i][c] + basis[j][c];
          diff[c] = basis[i][c] - basis[j][c];
        }
        local.push_back(std::move(sum));
        local.push_back(std::move(diff));
      }
    }
    for (const auto& c : local) {
      IntVector v = normalized(f.combine(c));
      if (!choice || key_less(v, *choice)) choice = std::move(v);
    }
  }
  auto orbit = matgroup::orbit_bfs(g, *choice, orbit_cap);
  auto* fin = std::get_if<matgroup::OrbitFinite>(&orbit);
  if (!fin) throw Error("witness orbit exceeded the orbit cap");
  return KernelVectorWitness{*choice, fin->orbit, f, cert.induced_finiteness.order};
}

std::uint64_t product_of(const std::vector<unsigned long>& ds) {
  std::uint64_t p = 1;
  for (unsigned long d : ds) p *= d;
  return p;
}

ExtensionSpec as_abelian_kernel(const ExtensionSpec& spec) {
  const auto& auts = std::get<FreeAction>(spec.action);
  MatrixAction mats;
  for (const auto& a : auts) mats.push_back(a.abelianization());
  return ExtensionSpec{catalog::FgAbelian{1, {}}, spec.quotient, spec.generator_labels, std::move(mats)};
}

std::optional<Word> first_nontrivial_fc_element(const GroupDesc& q) {
  const auto fc = catalog::fc_subgroup(q);
  for (std::size_t f = 0; f < q.factors().size(); ++f) {
    if (fc.factors[f] != catalog::FcKind::Whole || catalog::is_trivial(q.factors()[f])) continue;
    const std::size_t off = q.generator_offset(f);
    if (auto* g = std::get_if<catalog::FiniteGroup>(&q.factors()[f])) return shift_word(g->group.word(1), off);
    return Word::generator(off);
  }
  return std::nullopt;
}

}  // namespace

FcInjectivity theta_fc_injective(const GroupDesc& quotient, const MatrixAction& action,
                                 const AnalyzerOptions& options) {
  if (action.empty()) {
    if (quotient.generator_count() != 0) throw ValidationError("theta_fc_injective: missing action");
    return FcInjective{};
  }
  const IntMatrix id = IntMatrix::identity(action.front().rows());
  TrivialityTest<IntMatrix> trivial = [](const IntMatrix& m) -> std::optional<LiftEvidence> {
    if (m.is_identity()) return MatrixIdentityEvidence{m};
    return std::nullopt;
  };
  return theta_fc_injective_impl<IntMatrix>(quotient, action, id, trivial, options);
}

FcInjectivity theta_fc_injective(const GroupDesc& quotient, const FreeAction& action,
                                 const AnalyzerOptions& options) {
  if (action.empty()) {
    if (quotient.generator_count() != 0) throw ValidationError("theta_fc_injective: missing action");
    return FcInjective{};
  }
  const FreeAut id = FreeAut::identity(action.front().rank());
  TrivialityTest<FreeAut> trivial = [](const FreeAut& phi) -> std::optional<LiftEvidence> {
    if (auto w = catalog::is_inner(phi)) return InnerEvidence{*w};
    return std::nullopt;
  };
  return theta_fc_injective_impl<FreeAut>(quotient, action, id, trivial, options);
}

namespace {

ConditionResult injectivity_condition(const ExtensionSpec& spec, const FcInjectivity& inj) {
  return std::visit(
      overloaded{
          [&](const FcInjective&) {
            return ConditionResult{kConditionInjective, ConditionStatus::Holds,
                                   "theta is injective on FC(Q) = " + catalog::fc_subgroup(spec.quotient).describe(),
                                   std::nullopt};
          },
          [&](const FcWitness& w) {
            Word lift_kernel;
            if (auto* inner = std::get_if<InnerEvidence>(&w.evidence)) lift_kernel = inner->conjugator.inverse();
            const std::string text = quotient_element_text(spec, w.element);
            return ConditionResult{kConditionInjective, ConditionStatus::Fails,
                                   "nontrivial " + text + " in FC(Q) acts trivially",
                                   QuotientLiftWitness{w.element, text, w.evidence, lift_kernel}};
          },
          [&](const FcUnknown& u) {
            return ConditionResult{kConditionInjective, ConditionStatus::Unknown,
                                   "bounded search inconclusive: " + u.obstruction, std::nullopt};
          },
      },
      inj);
}

// Verdict from the injectivity condition once every other condition holds.
Report decide_by_injectivity(Report report, ConditionResult cond, const FcInjectivity& inj) {
  if (std::holds_alternative<FcInjective>(inj)) {
    report.verdict = Verdict::Icc;
  } else if (std::holds_alternative<FcWitness>(inj)) {
    report.verdict = Verdict::NotIcc;
    report.witness = cond.witness;
  } else {
    report.verdict = Verdict::Unknown;
    report.obstruction = std::get<FcUnknown>(inj).obstruction;
  }
  report.conditions.push_back(std::move(cond));
  return report;
}

}  // namespace

Report thm1_check(const ExtensionSpec& spec, const AnalyzerOptions& options) {
  const auto* kernel = std::get_if<catalog::FgAbelian>(&spec.kernel);
  if (!kernel) throw ValidationError("thm1_check requires an abelian kernel");
  Report report;
  report.theorem_path = kPathAbelianKernel;

  if (!kernel->torsion.empty()) {
    const std::uint64_t bound = product_of(kernel->torsion);
    report.verdict = Verdict::NotIcc;
    report.witness = KernelTorsionWitness{"generator of the Z/" + std::to_string(kernel->torsion.front()) + " summand",
                                          kernel->torsion.front(), bound};
    report.conditions.push_back({kConditionOrbits, ConditionStatus::Fails,
                                 "the torsion subgroup (order " + std::to_string(bound) +
                                     ") is characteristic and finite, so its orbits are finite",
                                 report.witness});
    report.conditions.push_back({kConditionInjective, ConditionStatus::NotEvaluated, "", std::nullopt});
    return report;
  }
  if (kernel->rank == 0) throw ValidationError("thm1_check requires a nontrivial kernel");

  const auto& mats = std::get<MatrixAction>(spec.action);
  matgroup::MatGroupGens group = mats.empty()
                                     ? matgroup::MatGroupGens({IntMatrix::identity(kernel->rank)}, {"1"})
                                     : matgroup::MatGroupGens(mats, spec.generator_labels);
  const auto cert = matgroup::finite_orbit_sublattice(group);
  if (cert.lattice.rank() > 0) {
    auto witness = select_kernel_vector(group, cert, options.orbit_cap);
    report.verdict = Verdict::NotIcc;
    const std::string detail = "finite-orbit sublattice has rank " + std::to_string(cert.lattice.rank()) +
                               "; orbit of " + linalg::to_string(witness.vector) + " has size " +
                               std::to_string(witness.orbit.size());
    report.witness = std::move(witness);
    report.conditions.push_back({kConditionOrbits, ConditionStatus::Fails, detail, report.witness});
    report.conditions.push_back(injectivity_condition(spec, theta_fc_injective(spec.quotient, mats, options)));
    return report;
  }
  report.conditions.push_back({kConditionOrbits, ConditionStatus::Holds,
                               "finite-orbit sublattice is zero (" + std::to_string(cert.steps.size()) +
                                   " congruence shrink steps)",
                               std::nullopt});
  const auto inj = theta_fc_injective(spec.quotient, mats, options);
  return decide_by_injectivity(std::move(report), injectivity_condition(spec, inj), inj);
}

Report thm3_check(const ExtensionSpec& spec, const AnalyzerOptions& options) {
  const auto* kernel = std::get_if<catalog::Free>(&spec.kernel);
  if (!kernel || kernel->rank() < 2) throw ValidationError("thm3_check requires a free kernel of rank >= 2");
  Report report;
  report.theorem_path = kPathFreeKernel;
  report.conditions.push_back({kConditionKernelIcc, ConditionStatus::Holds,
                               "free groups of rank >= 2 have trivial FC-subgroup", std::nullopt});
  const auto inj = theta_fc_injective(spec.quotient, std::get<FreeAction>(spec.action), options);
  return decide_by_injectivity(std::move(report), injectivity_condition(spec, inj), inj);
}

Report analyze(const ExtensionSpec& spec, const AnalyzerOptions& options) {
  const KernelClass kc = classify_kernel(spec.kernel);
  if (kc == KernelClass::Trivial) {
    if (spec.quotient.is_trivial()) throw UnsupportedError("the trivial group has no icc verdict");
    Report report;
    report.theorem_path = kPathTrivialKernel;
    auto q = first_nontrivial_fc_element(spec.quotient);
    if (!q) {
      report.verdict = Verdict::Icc;
      report.conditions.push_back({kConditionInjective, ConditionStatus::Holds,
                                   "G = Q and FC(Q) = " + catalog::fc_subgroup(spec.quotient).describe() +
                                       " is trivial",
                                   std::nullopt});
      return report;
    }
    report.verdict = Verdict::NotIcc;
    const std::string text = quotient_element_text(spec, *q);
    report.witness = QuotientLiftWitness{*q, text, TrivialKernelEvidence{}, Word{}};
    report.conditions.push_back({kConditionInjective, ConditionStatus::Fails,
                                 "G = Q and " + text + " is a nontrivial element of FC(Q)", report.witness});
    return report;
  }
  switch (kc) {
    case KernelClass::Torsion:
    case KernelClass::Abelian:
      return thm1_check(spec, options);
    case KernelClass::Free:
      if (std::get<catalog::Free>(spec.kernel).rank() == 1) {
        Report r = thm1_check(as_abelian_kernel(spec), options);
        return r;
      }
      return thm3_check(spec, options);
    case KernelClass::Finite: {
      const auto& g = std::get<catalog::FiniteGroup>(spec.kernel).group;
      const auto& elem = g.elements()[1];
      std::uint64_t order = 1;
      for (auto p = elem; p != catalog::perm_identity(g.degree()); p = catalog::perm_multiply(p, elem)) ++order;
      Report report;
      report.theorem_path = kPathFiniteKernel;
      report.verdict = Verdict::NotIcc;
      report.witness = KernelTorsionWitness{catalog::perm_to_string(elem), order, g.order()};
      report.conditions.push_back({kConditionOrbits, ConditionStatus::Fails,
                                   "the kernel is a finite nontrivial normal subgroup of order " +
                                       std::to_string(g.order()),
                                   report.witness});
      report.conditions.push_back({kConditionInjective, ConditionStatus::NotEvaluated, "", std::nullopt});
      return report;
    }
    default:
      throw UnsupportedError("unsupported kernel");
  }
}

}  // namespace icc::analyzer

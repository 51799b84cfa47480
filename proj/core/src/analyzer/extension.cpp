#include "icc/analyzer/extension.hpp"

#include "icc/overloaded.hpp"

namespace icc::analyzer {

namespace {

std::vector<std::string> numbered(const std::string& stem, std::size_t n) {
  if (n == 1) return {stem};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(stem + std::to_string(i + 1));
  return out;
}

template <class T>
bool commute(const T& a, const T& b) {
  return AutOps<T>::multiply(a, b) == AutOps<T>::multiply(b, a);
}

template <class T>
void validate_relations(const GroupDesc& q, const std::vector<T>& gens, const T& identity,
                        const std::vector<std::string>& labels) {
  std::vector<std::size_t> owner;
  for (std::size_t f = 0; f < q.factors().size(); ++f) {
    const auto& atom = q.factors()[f];
    const std::size_t off = q.generator_offset(f);
    const std::size_t n = catalog::generator_count(atom);
    for (std::size_t i = 0; i < n; ++i) owner.push_back(f);
    std::vector<T> local(gens.begin() + static_cast<std::ptrdiff_t>(off),
                         gens.begin() + static_cast<std::ptrdiff_t>(off + n));
    std::visit(overloaded{
                   [&](const catalog::FiniteGroup& g) { finite_action_table(g.group, local, identity); },
                   [&](const catalog::FgAbelian& a) {
                     for (std::size_t i = 0; i < n; ++i)
                       for (std::size_t j = i + 1; j < n; ++j)
                         if (!commute(local[i], local[j]))
                           throw ValidationError("relation violation: actions of " + labels[off + i] + " and " +
                                                 labels[off + j] + " do not commute");
                     for (std::size_t t = 0; t < a.torsion.size(); ++t) {
                       const T p = AutOps<T>::pow(local[a.rank + t], static_cast<long>(a.torsion[t]));
                       if (!(p == identity))
                         throw ValidationError("relation violation: action of " + labels[off + a.rank + t] +
                                               " has order not dividing " + std::to_string(a.torsion[t]));
                     }
                   },
                   [](const catalog::Free&) {},
               },
               atom);
  }
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (owner[i] != owner[j] && !commute(gens[i], gens[j]))
        throw ValidationError("relation violation: actions of " + labels[i] + " and " + labels[j] +
                              " lie in different direct factors but do not commute");
}

}  // namespace

KernelClass classify_kernel(const KernelDesc& k) {
  return std::visit(overloaded{
                        [](const catalog::FgAbelian& a) {
                          if (!a.torsion.empty()) return KernelClass::Torsion;
                          return a.rank == 0 ? KernelClass::Trivial : KernelClass::Abelian;
                        },
                        [](const catalog::Free&) { return KernelClass::Free; },
                        [](const catalog::FiniteGroup& g) {
                          return g.group.order() == 1 ? KernelClass::Trivial : KernelClass::Finite;
                        },
                    },
                    k);
}

std::string describe_kernel(const KernelDesc& k) {
  return std::visit([](const auto& atom) { return catalog::describe(catalog::GroupAtom(atom)); }, k);
}

std::vector<std::string> default_labels(const GroupDesc& q) {
  std::size_t abelian = 0;
  std::size_t finite = 0;
  for (const auto& atom : q.factors()) {
    if (std::holds_alternative<catalog::FgAbelian>(atom)) abelian += catalog::generator_count(atom);
    if (std::holds_alternative<catalog::FiniteGroup>(atom)) finite += catalog::generator_count(atom);
  }
  const auto t_names = numbered("t", abelian);
  const auto q_names = numbered("q", finite);
  std::size_t ti = 0;
  std::size_t qi = 0;
  std::vector<std::string> labels;
  for (const auto& atom : q.factors()) {
    std::visit(overloaded{
                   [&](const catalog::FiniteGroup& g) {
                     for (std::size_t i = 0; i < g.group.generators().size(); ++i) labels.push_back(q_names[qi++]);
                   },
                   [&](const catalog::FgAbelian& a) {
                     for (std::size_t i = 0; i < a.rank + a.torsion.size(); ++i) labels.push_back(t_names[ti++]);
                   },
                   [&](const catalog::Free& f) { labels.insert(labels.end(), f.names.begin(), f.names.end()); },
               },
               atom);
  }
  return labels;
}

ExtensionSpec make_extension(KernelDesc kernel, GroupDesc quotient, std::vector<std::string> labels,
                             ActionData action) {
  std::visit([](const auto& atom) { catalog::validate_atom(catalog::GroupAtom(atom)); }, kernel);
  const std::size_t ngens = quotient.generator_count();
  if (labels.empty()) labels = default_labels(quotient);
  if (labels.size() != ngens) {
    throw ValidationError("quotient has " + std::to_string(ngens) + " generators but " +
                          std::to_string(labels.size()) + " labels were given");
  }
  const KernelClass kc = classify_kernel(kernel);
  ExtensionSpec spec{std::move(kernel), std::move(quotient), std::move(labels), std::monostate{}};

  if (kc == KernelClass::Abelian) {
    const std::size_t r = std::get<catalog::FgAbelian>(spec.kernel).rank;
    MatrixAction mats;
    if (std::holds_alternative<std::monostate>(action)) {
      mats.assign(ngens, IntMatrix::identity(r));
    } else if (auto* m = std::get_if<MatrixAction>(&action)) {
      mats = std::move(*m);
    } else {
      throw ValidationError("abelian kernel needs matrix actions, not automorphism maps");
    }
    if (mats.size() != ngens)
      throw ValidationError("expected " + std::to_string(ngens) + " action matrices, got " + std::to_string(mats.size()));
    for (const auto& m : mats) {
      if (m.rows() != r || m.cols() != r)
        throw ValidationError("action matrix must be " + std::to_string(r) + "x" + std::to_string(r));
      linalg::require_unimodular(m);
    }
    validate_relations(spec.quotient, mats, IntMatrix::identity(r), spec.generator_labels);
    spec.action = std::move(mats);
  } else if (kc == KernelClass::Free) {
    const std::size_t k = std::get<catalog::Free>(spec.kernel).rank();
    FreeAction auts;
    if (std::holds_alternative<std::monostate>(action)) {
      auts.assign(ngens, FreeAut::identity(k));
    } else if (auto* a = std::get_if<FreeAction>(&action)) {
      auts = std::move(*a);
    } else {
      throw ValidationError("free kernel needs automorphism maps, not matrices");
    }
    if (auts.size() != ngens)
      throw ValidationError("expected " + std::to_string(ngens) + " automorphisms, got " + std::to_string(auts.size()));
    for (const auto& a : auts)
      if (a.rank() != k) throw ValidationError("automorphism rank does not match the kernel");
    validate_relations(spec.quotient, auts, FreeAut::identity(k), spec.generator_labels);
    spec.action = std::move(auts);
  }
  return spec;
}

}  // namespace icc::analyzer

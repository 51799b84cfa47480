#include "icc/catalog/group_desc.hpp"

#include "icc/error.hpp"
#include "icc/overloaded.hpp"

namespace icc::catalog {

void validate_atom(const GroupAtom& atom) {
  std::visit(overloaded{
                 [](const FiniteGroup&) {},
                 [](const FgAbelian& a) {
                   for (std::size_t i = 0; i < a.torsion.size(); ++i) {
                     if (a.torsion[i] < 2) throw ValidationError("bad divisor chain: torsion divisors must be >= 2");
                     if (i > 0 && a.torsion[i] % a.torsion[i - 1] != 0) {
                       throw ValidationError("bad divisor chain: " + std::to_string(a.torsion[i - 1]) +
                                             " does not divide " + std::to_string(a.torsion[i]));
                     }
                   }
                 },
                 [](const Free& f) {
                   if (f.rank() == 0) throw ValidationError("free group needs rank >= 1");
                   for (std::size_t i = 0; i < f.names.size(); ++i)
                     for (std::size_t j = i + 1; j < f.names.size(); ++j)
                       if (f.names[i] == f.names[j]) throw ValidationError("duplicate generator name " + f.names[i]);
                 },
             },
             atom);
}

std::size_t generator_count(const GroupAtom& atom) {
  return std::visit(overloaded{
                        [](const FiniteGroup& g) { return g.group.generators().size(); },
                        [](const FgAbelian& a) { return a.rank + a.torsion.size(); },
                        [](const Free& f) { return f.rank(); },
                    },
                    atom);
}

bool is_trivial(const GroupAtom& atom) {
  return std::visit(overloaded{
                        [](const FiniteGroup& g) { return g.group.order() == 1; },
                        [](const FgAbelian& a) { return a.rank == 0 && a.torsion.empty(); },
                        [](const Free&) { return false; },
                    },
                    atom);
}

std::string describe(const GroupAtom& atom) {
  return std::visit(overloaded{
                        [](const FiniteGroup& g) {
                          std::string s = "finite perm(";
                          for (std::size_t i = 0; i < g.group.generators().size(); ++i) {
                            if (i) s += "; ";
                            s += perm_to_string(g.group.generators()[i]);
                          }
                          return s + ") of order " + std::to_string(g.group.order());
                        },
                        [](const FgAbelian& a) {
                          std::string s = "Z^" + std::to_string(a.rank);
                          for (unsigned long d : a.torsion) s += " + Z/" + std::to_string(d);
                          return s;
                        },
                        [](const Free& f) {
                          std::string s = "free(";
                          for (std::size_t i = 0; i < f.names.size(); ++i) s += (i ? "," : "") + f.names[i];
                          return s + ")";
                        },
                    },
                    atom);
}

GroupDesc::GroupDesc(GroupAtom atom) {
  validate_atom(atom);
  factors_.push_back(std::move(atom));
}

GroupDesc GroupDesc::product(const std::vector<GroupDesc>& factors) {
  GroupDesc g;
  for (const auto& f : factors) g.factors_.insert(g.factors_.end(), f.factors_.begin(), f.factors_.end());
  if (g.factors_.size() < 2) throw ValidationError("a direct product needs at least two factors");
  return g;
}

bool GroupDesc::is_trivial() const {
  for (const auto& a : factors_)
    if (!catalog::is_trivial(a)) return false;
  return true;
}

std::size_t GroupDesc::generator_count() const {
  std::size_t n = 0;
  for (const auto& a : factors_) n += catalog::generator_count(a);
  return n;
}

std::size_t GroupDesc::generator_offset(std::size_t factor) const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < factor; ++i) n += catalog::generator_count(factors_[i]);
  return n;
}

std::string GroupDesc::describe() const {
  if (factors_.size() == 1) return catalog::describe(factors_.front());
  std::string s = "product(";
  for (std::size_t i = 0; i < factors_.size(); ++i) s += (i ? ", " : "") + catalog::describe(factors_[i]);
  return s + ")";
}

std::string FcDescription::describe() const {
  auto one = [](FcKind k) { return k == FcKind::Trivial ? std::string("trivial") : std::string("whole"); };
  if (factors.size() == 1) return one(factors.front());
  std::string s = "product(";
  for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? ", " : "") + one(factors[i]);
  return s + ")";
}

FcDescription fc_subgroup(const GroupDesc& q) {
  FcDescription fc;
  for (const auto& atom : q.factors()) {
    const bool whole = std::visit(overloaded{
                                      [](const FiniteGroup&) { return true; },
                                      [](const FgAbelian&) { return true; },
                                      [](const Free& f) { return f.rank() == 1; },
                                  },
                                  atom);
    fc.factors.push_back(whole ? FcKind::Whole : FcKind::Trivial);
  }
  return fc;
}

bool fc_is_trivial(const GroupDesc& q) {
  FcDescription fc = fc_subgroup(q);
  for (std::size_t i = 0; i < fc.factors.size(); ++i) {
    if (fc.factors[i] == FcKind::Whole && !is_trivial(q.factors()[i])) return false;
  }
  return true;
}

}  // namespace icc::catalog

#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "icc/analyzer/extension.hpp"
#include "icc/analyzer/report.hpp"
#include "icc/linalg/integer.hpp"

namespace icc::oracle {

using analyzer::ExtensionSpec;
using catalog::Word;
using linalg::IntVector;

/// Kernel component: Z^r vector, free word, or index into the finite
/// kernel's element list.
using KernelPart = std::variant<IntVector, Word, std::size_t>;

/// Quotient component of one direct factor: exponents (torsion entries
/// reduced), a reduced word in the factor's local generators, or an
/// element index of a finite factor.
using AtomPart = std::variant<std::vector<long>, Word, std::size_t>;

struct Element {
  KernelPart kernel;
  std::vector<AtomPart> quotient;
  friend bool operator==(const Element&, const Element&) = default;
};

/// The split extension K x| Q with (k1,q1)(k2,q2) = (k1 . theta(q1)(k2), q1 q2).
/// Finite kernels carry no action data and are materialized as K x Q.
class ConcreteGroup {
 public:
  enum class KernelKind { Abelian, Free, Finite };

  explicit ConcreteGroup(ExtensionSpec spec);

  const ExtensionSpec& spec() const { return spec_; }
  KernelKind kernel_kind() const { return kind_; }

  Element identity() const;
  Element multiply(const Element& a, const Element& b) const;
  Element inverse(const Element& a) const;
  /// g^-1 u g.
  Element conjugate(const Element& u, const Element& g) const;

  /// Kernel generators followed by quotient generator lifts (zero kernel part).
  const std::vector<Element>& generators() const { return generators_; }

  Element kernel_element(const KernelPart& k) const;
  /// Lift (k, q) of a word in the quotient generators.
  Element lift(const Word& quotient_word, const KernelPart& k) const;
  Element lift(const Word& quotient_word) const;

  /// Canonical string used for hashing and display, e.g. "((1,0) | t^2)".
  std::string key(const Element& e) const;
  bool is_identity(const Element& e) const { return e == identity(); }

  /// The kernel automorphism theta(q) applied to k.
  KernelPart act(const std::vector<AtomPart>& q, const KernelPart& k) const;

 private:
  KernelPart kernel_identity() const;
  KernelPart kernel_multiply(const KernelPart& a, const KernelPart& b) const;
  KernelPart kernel_inverse(const KernelPart& a) const;
  std::vector<AtomPart> quotient_multiply(const std::vector<AtomPart>& a, const std::vector<AtomPart>& b) const;
  std::vector<AtomPart> quotient_inverse(const std::vector<AtomPart>& a) const;
  Word quotient_word(const std::vector<AtomPart>& q) const;
  KernelPart apply_letter(int letter, const KernelPart& k) const;
  AtomPart generator_part(std::size_t atom, std::size_t local) const;

  ExtensionSpec spec_;
  KernelKind kind_ = KernelKind::Abelian;
  std::size_t kernel_rank_ = 0;
  std::vector<linalg::IntMatrix> mats_, mat_inverses_;
  std::vector<catalog::FreeAut> auts_, aut_inverses_;
  std::vector<std::size_t> generator_atom_;  // quotient generator -> factor
  std::vector<Element> generators_;
};

/// Rejects torsion kernels (their action data is not retained).
ConcreteGroup materialize(const ExtensionSpec& spec);

enum class GrowthStatus { Closed, StillGrowing };

struct GrowthCurve {
  std::vector<std::size_t> sizes;  // index = radius, 0..R
  GrowthStatus status = GrowthStatus::StillGrowing;
  std::size_t closed_radius = 0;  // valid when Closed
  std::string note;
  /// The full class when Closed, otherwise the explored part.
  std::vector<Element> elements;
};

/// Conjugates the class set by every generator and inverse, one round per
/// radius. Round R+1 only checks closure. Closed at radius rho means the
/// set after rho rounds is stable under one more round.
GrowthCurve conjugacy_ball(const ConcreteGroup& g, const Element& u, std::size_t radius,
                           std::size_t size_cap = 5000);

struct ClassFinite {
  std::vector<IntVector> elements;
};
struct ClassExceeded {
  std::size_t explored = 0;
};
using AbelianClass = std::variant<ClassFinite, ClassExceeded>;

/// Exact class of a kernel element of an abelian-kernel group: its orbit
/// under the quotient action.
AbelianClass exact_abelian_class(const ConcreteGroup& g, const IntVector& k, std::size_t cap = 10000);

/// Deterministic nontrivial samples: generators, then products of two and
/// three generators (with inverses), without repeats.
std::vector<Element> sample_elements(const ConcreteGroup& g, std::size_t count = 20);

struct SampleProbe {
  std::string element;
  GrowthCurve curve;
};

struct CrossCheck {
  bool performed = true;
  bool consistent = true;
  std::string summary;
  std::vector<SampleProbe> probes;
};

/// Compares a report against the materialized group: NotIcc witnesses
/// must close, Icc samples must not close within the radius and cap.
CrossCheck cross_check(const ExtensionSpec& spec, const analyzer::Report& report, std::size_t radius,
                       std::size_t size_cap = 5000, std::size_t samples = 20);

std::string to_string(GrowthStatus s);
/// "radius,size,status" header and one row per radius.
void write_growth_csv(std::ostream& out, const GrowthCurve& curve);

}  // namespace icc::oracle

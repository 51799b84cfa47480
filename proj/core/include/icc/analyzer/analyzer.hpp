#pragma once

#include <cstddef>
#include <string>
#include <variant>

#include "icc/analyzer/extension.hpp"
#include "icc/analyzer/report.hpp"

namespace icc::analyzer {

struct AnalyzerOptions {
  /// Largest n for which theta(t)^n is tested for innerness (Out side, Z factor).
  long out_order_cap = 16;
  /// Max-norm bound for exponent vectors in the multi-generator abelian search.
  long relation_bound = 8;
  /// Cap used when certifying witness orbits.
  std::size_t orbit_cap = 10000;
  /// Upper bound on the finite part of FC(Q) that is enumerated.
  std::size_t fc_enumeration_cap = 100000;
};

inline constexpr const char* kPathAbelianKernel = "abelian-kernel";
inline constexpr const char* kPathFreeKernel = "free-kernel";
inline constexpr const char* kPathFiniteKernel = "finite-kernel";
inline constexpr const char* kPathTrivialKernel = "trivial-kernel";

inline constexpr const char* kConditionOrbits = "kernel-orbits-infinite";
inline constexpr const char* kConditionInjective = "theta-injective-on-fc";
inline constexpr const char* kConditionKernelIcc = "kernel-icc";

struct FcInjective {};
struct FcWitness {
  Word element;  // nontrivial element of FC(Q), word in quotient generators
  LiftEvidence evidence;
};
struct FcUnknown {
  std::string obstruction;
};
using FcInjectivity = std::variant<FcInjective, FcWitness, FcUnknown>;

/// Injectivity of theta restricted to FC(Q), with Aut(Z^r) as codomain:
/// theta(q) is trivial iff its matrix is the identity.
FcInjectivity theta_fc_injective(const GroupDesc& quotient, const MatrixAction& action,
                                 const AnalyzerOptions& options = {});

/// Injectivity of theta restricted to FC(Q), with Out(F_k) as codomain:
/// theta(q) is trivial iff it is an inner automorphism.
FcInjectivity theta_fc_injective(const GroupDesc& quotient, const FreeAction& action,
                                 const AnalyzerOptions& options = {});

/// Abelian kernel: icc iff every nonzero kernel element has an infinite
/// orbit and theta is injective on FC(Q) into Aut(K).
Report thm1_check(const ExtensionSpec& spec, const AnalyzerOptions& options = {});

/// Free kernel of rank >= 2 (an icc group): icc iff theta is injective on
/// FC(Q) into Out(K).
Report thm3_check(const ExtensionSpec& spec, const AnalyzerOptions& options = {});

/// Dispatch on the kernel class. Throws UnsupportedError for the trivial
/// group and for combinations outside the catalog.
Report analyze(const ExtensionSpec& spec, const AnalyzerOptions& options = {});

/// Renders a quotient element word with the spec's generator labels.
std::string quotient_element_text(const ExtensionSpec& spec, const Word& w);

}  // namespace icc::analyzer

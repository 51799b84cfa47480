#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "icc/catalog/word.hpp"
#include "icc/linalg/hermite.hpp"
#include "icc/linalg/int_matrix.hpp"

namespace icc::analyzer {

enum class Verdict { Icc, NotIcc, Unknown };

std::string to_string(Verdict v);

/// A nontrivial torsion element of the kernel (torsion summand generator,
/// or a non-identity element of a finite kernel). Its class lies inside a
/// finite normal subgroup of size at most `class_size_bound`.
struct KernelTorsionWitness {
  std::string element;
  std::uint64_t element_order = 0;
  std::uint64_t class_size_bound = 0;
};

/// A nonzero vector of Z^r with finite orbit under the quotient action.
/// Its conjugacy class equals `orbit`.
struct KernelVectorWitness {
  linalg::IntVector vector;
  std::vector<linalg::IntVector> orbit;
  linalg::Lattice finite_orbit_lattice;
  std::uint64_t induced_group_order = 0;
};

/// theta(q) is the identity automorphism.
struct MatrixIdentityEvidence {
  linalg::IntMatrix action;
};
/// theta(q) is conjugation x -> w x w^-1 by a kernel element.
struct InnerEvidence {
  catalog::Word conjugator;
};
/// The kernel is trivial, so every lift centralizes it.
struct TrivialKernelEvidence {};

using LiftEvidence = std::variant<MatrixIdentityEvidence, InnerEvidence, TrivialKernelEvidence>;

/// A nontrivial q in FC(Q) acting trivially on K (Aut side) or by an inner
/// automorphism (Out side). The lift (lift_kernel_part, q) centralizes K.
struct QuotientLiftWitness {
  catalog::Word element;  // word in the quotient generators
  std::string element_text;
  LiftEvidence evidence;
  /// Kernel component of the centralizing lift: identity for Aut-side
  /// evidence, conjugator^-1 for inner evidence.
  catalog::Word lift_kernel_part;
};

using Witness = std::variant<KernelTorsionWitness, KernelVectorWitness, QuotientLiftWitness>;

std::string witness_kind(const Witness& w);

enum class ConditionStatus { Holds, Fails, Unknown, NotEvaluated };

std::string to_string(ConditionStatus s);

struct ConditionResult {
  std::string condition;
  ConditionStatus status = ConditionStatus::NotEvaluated;
  std::string detail;
  std::optional<Witness> witness;  // set when the condition fails
};

/// `witness` is the witness of the first failing condition; every failing
/// condition also carries its own.
struct Report {
  Verdict verdict = Verdict::Unknown;
  std::optional<Witness> witness;
  std::string obstruction;  // Unknown only
  std::string theorem_path;
  std::vector<ConditionResult> conditions;
};

}  // namespace icc::analyzer

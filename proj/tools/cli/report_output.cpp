#include "report_output.hpp"

#include <sstream>

#include "dsl.hpp"
#include "icc/overloaded.hpp"

#ifndef ICC_VERSION
#define ICC_VERSION "0.0.0"
#endif

namespace icc::cli {

using nlohmann::ordered_json;
using namespace analyzer;

std::string tool_version() { return ICC_VERSION; }

namespace {

ordered_json int_json(const linalg::Int& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
    return static_cast<long long>(v);
  }
  return linalg::to_string(v);
}

ordered_json vector_json(const linalg::IntVector& v) {
  ordered_json out = ordered_json::array();
  for (const auto& x : v) out.push_back(int_json(x));
  return out;
}

ordered_json matrix_json(const linalg::IntMatrix& m) {
  ordered_json out = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_json(m.row(i)));
  return out;
}

std::string kernel_word_text(const ExtensionSpec& spec, const Word& w) {
  if (auto* f = std::get_if<catalog::Free>(&spec.kernel)) return w.to_string(f->names);
  return w.to_string(catalog::default_names(static_cast<std::size_t>(std::max(0, w.max_generator()))));
}

ordered_json curve_json(const oracle::GrowthCurve& c) {
  ordered_json out;
  out["status"] = oracle::to_string(c.status);
  out["closed_radius"] = c.status == oracle::GrowthStatus::Closed ? ordered_json(c.closed_radius) : ordered_json(nullptr);
  out["sizes"] = c.sizes;
  out["note"] = c.note;
  return out;
}

std::string vector_list(const std::vector<linalg::IntVector>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? ", " : "") + linalg::to_string(vs[i]);
  return s + "}";
}

std::string witness_line(const ExtensionSpec& spec, const Witness& w) {
  return std::visit(overloaded{
                        [](const KernelTorsionWitness& t) {
                          return "kernel torsion element " + t.element + " of order " + std::to_string(t.element_order) +
                                 ", class size at most " + std::to_string(t.class_size_bound);
                        },
                        [](const KernelVectorWitness& v) {
                          return "kernel vector " + linalg::to_string(v.vector) + " with finite class " +
                                 vector_list(v.orbit) + " (size " + std::to_string(v.orbit.size()) + ")";
                        },
                        [&](const QuotientLiftWitness& q) {
                          std::string s = "quotient element " + q.element_text;
                          std::visit(overloaded{
                                         [&](const MatrixIdentityEvidence&) { s += " acts as the identity matrix"; },
                                         [&](const InnerEvidence& e) {
                                           s += " acts as conjugation by " + kernel_word_text(spec, e.conjugator);
                                         },
                                         [&](const TrivialKernelEvidence&) { s += " lies in FC(Q) over a trivial kernel"; },
                                     },
                                     q.evidence);
                          return s;
                        },
                    },
                    w);
}

}  // namespace

ordered_json witness_json(const ExtensionSpec& spec, const Witness& w) {
  ordered_json out;
  out["kind"] = witness_kind(w);
  std::visit(overloaded{
                 [&](const KernelTorsionWitness& t) {
                   out["element"] = t.element;
                   out["element_order"] = t.element_order;
                   out["class_size_bound"] = t.class_size_bound;
                 },
                 [&](const KernelVectorWitness& v) {
                   out["vector"] = vector_json(v.vector);
                   out["class_size"] = v.orbit.size();
                   ordered_json orbit = ordered_json::array();
                   for (const auto& x : v.orbit) orbit.push_back(vector_json(x));
                   out["orbit"] = orbit;
                   ordered_json basis = ordered_json::array();
                   for (const auto& b : v.finite_orbit_lattice.basis_vectors()) basis.push_back(vector_json(b));
                   out["finite_orbit_lattice"] = {{"rank", v.finite_orbit_lattice.rank()}, {"basis", basis}};
                   out["induced_group_order"] = v.induced_group_order;
                 },
                 [&](const QuotientLiftWitness& q) {
                   out["element"] = q.element_text;
                   ordered_json ev;
                   std::visit(overloaded{
                                  [&](const MatrixIdentityEvidence& e) {
                                    ev["type"] = "matrix_identity";
                                    ev["action"] = matrix_json(e.action);
                                  },
                                  [&](const InnerEvidence& e) {
                                    ev["type"] = "inner";
                                    ev["conjugator"] = kernel_word_text(spec, e.conjugator);
                                  },
                                  [&](const TrivialKernelEvidence&) { ev["type"] = "trivial_kernel"; },
                              },
                              q.evidence);
                   out["evidence"] = ev;
                   out["lift_kernel_part"] = kernel_word_text(spec, q.lift_kernel_part);
                 },
             },
             w);
  return out;
}

ordered_json report_json(const ExtensionSpec& spec, const Report& report, const RunContext& ctx,
                         const std::optional<oracle::CrossCheck>& cross) {
  ordered_json out;
  out["schema"] = kSchemaId;
  out["tool"] = {{"name", kToolName}, {"version", tool_version()}};
  out["input"] = {{"file", ctx.input_path},
                  {"kernel", describe_kernel(spec.kernel)},
                  {"quotient", spec.quotient.describe()},
                  {"quotient_generators", spec.generator_labels},
                  {"canonical", print_extension(spec)}};
  out["options"] = {{"orbit_cap", ctx.options.orbit_cap},
                    {"out_order_cap", ctx.options.out_order_cap},
                    {"relation_bound", ctx.options.relation_bound},
                    {"oracle_radius", ctx.oracle_radius}};
  out["verdict"] = to_string(report.verdict);
  out["theorem_path"] = report.theorem_path;
  out["obstruction"] = report.verdict == Verdict::Unknown ? ordered_json(report.obstruction) : ordered_json(nullptr);
  out["witness"] = report.witness ? witness_json(spec, *report.witness) : ordered_json(nullptr);
  ordered_json conditions = ordered_json::array();
  for (const auto& c : report.conditions) {
    ordered_json j;
    j["condition"] = c.condition;
    j["status"] = to_string(c.status);
    j["detail"] = c.detail;
    j["witness"] = c.witness ? witness_json(spec, *c.witness) : ordered_json(nullptr);
    conditions.push_back(std::move(j));
  }
  out["condition_results"] = conditions;
  if (cross) {
    ordered_json cc;
    cc["performed"] = cross->performed;
    cc["consistent"] = cross->consistent;
    cc["radius"] = ctx.oracle_radius;
    cc["size_cap"] = ctx.oracle_cap;
    cc["summary"] = cross->summary;
    ordered_json probes = ordered_json::array();
    for (const auto& p : cross->probes) probes.push_back({{"element", p.element}, {"curve", curve_json(p.curve)}});
    cc["probes"] = probes;
    out["oracle_crosscheck"] = cc;
  }
  return out;
}

std::string report_text(const ExtensionSpec& spec, const Report& report, const RunContext& ctx,
                        const std::optional<oracle::CrossCheck>& cross) {
  std::ostringstream out;
  out << "input:    " << ctx.input_path << "\n";
  out << "kernel:   " << describe_kernel(spec.kernel) << "\n";
  out << "quotient: " << spec.quotient.describe() << "\n";
  out << "verdict:  " << to_string(report.verdict) << "\n";
  out << "path:     " << report.theorem_path << "\n";
  if (report.verdict == Verdict::Unknown) out << "obstruction: " << report.obstruction << "\n";
  if (report.witness) out << "witness:  " << witness_line(spec, *report.witness) << "\n";
  for (const auto& c : report.conditions) {
    out << "  [" << to_string(c.status) << "] " << c.condition;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
    if (c.witness) out << "      witness: " << witness_line(spec, *c.witness) << "\n";
  }
  if (cross) {
    out << "oracle:   ";
    if (!cross->performed) {
      out << "not performed (" << cross->summary << ")\n";
    } else {
      out << (cross->consistent ? "consistent" : "INCONSISTENT") << ", " << cross->summary << "\n";
    }
  }
  return out.str();
}

}  // namespace icc::cli

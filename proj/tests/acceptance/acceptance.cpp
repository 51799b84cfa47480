// One PASS/FAIL line per acceptance criterion; exit status is the number
// of failing criteria.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "app.hpp"
#include "icc/analyzer/analyzer.hpp"
#include "icc/matgroup/matrix_group.hpp"
#include "icc/oracle/concrete_group.hpp"
#include "json.hpp"
#include "random_free.hpp"
#include "random_groups.hpp"

using namespace icc;
using analyzer::analyze;
using analyzer::ExtensionSpec;
using analyzer::FreeAction;
using analyzer::make_extension;
using analyzer::MatrixAction;
using analyzer::Verdict;
using catalog::FgAbelian;
using catalog::FiniteGroup;
using catalog::Free;
using catalog::FreeAut;
using catalog::GroupDesc;
using catalog::PermGroup;
using catalog::Word;
using linalg::IntMatrix;
using linalg::IntVector;
using linalg::Lattice;
using linalg::make_vector;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first few failure messages of a criterion.
class Check {
 public:
  void require(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) messages_ += (messages_.empty() ? "" : "; ") + what;
  }
  Outcome done(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    return {false, std::to_string(failures_) + " failure(s): " + messages_};
  }

 private:
  int failures_ = 0;
  std::string messages_;
};

GroupDesc z(std::size_t rank = 1) { return GroupDesc(FgAbelian{rank, {}}); }
GroupDesc c2() { return GroupDesc(FiniteGroup{PermGroup(2, {{1, 0}})}); }

ExtensionSpec abelian(std::size_t r, GroupDesc q, MatrixAction m) {
  return make_extension(FgAbelian{r, {}}, std::move(q), {}, std::move(m));
}

const analyzer::ConditionResult* find_condition(const analyzer::Report& r, const std::string& name) {
  for (const auto& c : r.conditions)
    if (c.condition == name) return &c;
  return nullptr;
}

std::size_t closure_size(const std::vector<IntMatrix>& gens, std::size_t cap) {
  std::set<IntMatrix> seen{IntMatrix::identity(gens.front().rows())};
  std::vector<IntMatrix> frontier(seen.begin(), seen.end());
  while (!frontier.empty() && seen.size() <= cap) {
    std::vector<IntMatrix> next;
    for (const auto& x : frontier)
      for (const auto& g : gens)
        if (seen.insert(x * g).second) next.push_back(x * g);
    frontier = std::move(next);
  }
  return seen.size();
}

IntMatrix perm_matrix(const std::vector<int>& p) {
  IntMatrix m(p.size(), p.size());
  for (std::size_t i = 0; i < p.size(); ++i) m(static_cast<std::size_t>(p[i]), i) = 1;
  return m;
}

Outcome criterion1() {
  Check c;
  const auto spec = abelian(2, z(), {IntMatrix{{2, 1}, {1, 1}}});
  const auto r = analyze(spec);
  c.require(r.verdict == Verdict::Icc, "verdict " + analyzer::to_string(r.verdict));
  c.require(r.theorem_path == analyzer::kPathAbelianKernel, "path " + r.theorem_path);
  const auto cc = oracle::cross_check(spec, r, 6, 5000, 20);
  std::size_t closed = 0;
  for (const auto& p : cc.probes) closed += p.curve.status == oracle::GrowthStatus::Closed;
  c.require(cc.performed && cc.consistent, "oracle: " + cc.summary);
  c.require(cc.probes.size() == 20, "sampled " + std::to_string(cc.probes.size()));
  c.require(closed == 0, std::to_string(closed) + " samples closed");
  return c.done("icc on the abelian-kernel path; " + cc.summary);
}

Outcome criterion2() {
  Check c;
  const auto spec = abelian(1, z(), {IntMatrix{{-1}}});
  const auto r = analyze(spec);
  c.require(r.verdict == Verdict::NotIcc, "verdict");
  const auto* kv = r.witness ? std::get_if<analyzer::KernelVectorWitness>(&*r.witness) : nullptr;
  c.require(kv != nullptr, "witness is not a kernel vector");
  if (kv) {
    std::set<IntVector> orbit(kv->orbit.begin(), kv->orbit.end());
    c.require(orbit == std::set<IntVector>{make_vector({1}), make_vector({-1})}, "orbit");
  }
  const auto g = oracle::materialize(spec);
  const auto curve = oracle::conjugacy_ball(g, g.kernel_element(make_vector({1})), 6, 5000);
  c.require(curve.status == oracle::GrowthStatus::Closed, "ball did not close");
  c.require(curve.closed_radius == 1, "closed at radius " + std::to_string(curve.closed_radius));
  c.require(curve.elements.size() == 2, "class size " + std::to_string(curve.elements.size()));
  const auto exact = oracle::exact_abelian_class(g, make_vector({1}));
  c.require(std::holds_alternative<oracle::ClassFinite>(exact) &&
                std::get<oracle::ClassFinite>(exact).elements.size() == 2,
            "exact class");
  return c.done("KernelVector (1), class {1,-1}, oracle Closed at radius 1 with size 2");
}

Outcome criterion3() {
  Check c;
  const IntMatrix hyperbolic{{2, 1}, {1, 1}};
  const std::vector<ExtensionSpec> specs{
      make_extension(FgAbelian{2, {2}}, z(), {}, MatrixAction{hyperbolic}),
      make_extension(FgAbelian{2, {2}}, z(), {}, std::monostate{}),
      make_extension(FgAbelian{0, {3}}, GroupDesc(Free{{"x", "y"}}), {}, std::monostate{}),
      make_extension(FgAbelian{1, {2, 4}}, GroupDesc::product({z(), c2()}), {}, MatrixAction{IntMatrix{{-1}}, IntMatrix{{-1}}}),
  };
  for (const auto& spec : specs) {
    c.require(std::holds_alternative<std::monostate>(spec.action), "action data retained");
    const auto r = analyze(spec);
    c.require(r.verdict == Verdict::NotIcc, "verdict");
    c.require(r.witness && std::holds_alternative<analyzer::KernelTorsionWitness>(*r.witness), "witness kind");
    const auto* inj = find_condition(r, analyzer::kConditionInjective);
    c.require(inj && inj->status == analyzer::ConditionStatus::NotEvaluated, "action consulted");
  }
  return c.done(std::to_string(specs.size()) + " torsion specs give KernelTorsion; action dropped and not evaluated");
}

Outcome criterion4() {
  Check c;
  const IntMatrix rot{{0, -1}, {1, 0}};
  const auto r = analyze(abelian(2, z(), {rot}));
  c.require(r.verdict == Verdict::NotIcc, "verdict");
  const auto* inj = find_condition(r, analyzer::kConditionInjective);
  c.require(inj && inj->status == analyzer::ConditionStatus::Fails && inj->witness, "injectivity condition");
  if (inj && inj->witness) {
    const auto* ql = std::get_if<analyzer::QuotientLiftWitness>(&*inj->witness);
    c.require(ql && ql->element_text == "t^4", "lift element");
    if (ql) {
      const auto* ev = std::get_if<analyzer::MatrixIdentityEvidence>(&ql->evidence);
      c.require(ev && ev->action.is_identity(), "evidence");
    }
  }
  c.require(rot.pow(4).is_identity(), "rot^4 != I");
  for (unsigned k = 1; k < 4; ++k) c.require(!rot.pow(k).is_identity(), "rot^" + std::to_string(k) + " == I");
  c.require(std::get<matgroup::FiniteOrder>(matgroup::matrix_order(rot)).order == 4, "matrix_order");
  return c.done("QuotientLift t^4 on theta-injective-on-fc; rot^4 = I and rot^k != I for k < 4");
}

Outcome criterion5() {
  Check c;
  const FreeAut swap(2, {Word{2}, Word{1}});
  const auto spec = make_extension(Free{{"a", "b"}}, c2(), {}, FreeAction{swap});
  const auto r = analyze(spec);
  c.require(r.verdict == Verdict::Icc, "verdict " + analyzer::to_string(r.verdict));
  c.require(!catalog::is_inner(swap).has_value(), "swap reported inner");
  c.require(!swap.abelianization().is_identity(), "abelianization is identity");
  const auto cc = oracle::cross_check(spec, r, 6, 5000, 20);
  c.require(cc.performed && cc.consistent, "oracle: " + cc.summary);
  return c.done("icc; swap rejected by is_inner (abelianization [[0,1],[1,0]]); " + cc.summary);
}

Outcome criterion6() {
  Check c;
  const auto spec = make_extension(Free{{"a", "b"}}, z(), {}, std::monostate{});
  const auto r = analyze(spec);
  c.require(r.verdict == Verdict::NotIcc, "verdict");
  const auto* ql = r.witness ? std::get_if<analyzer::QuotientLiftWitness>(&*r.witness) : nullptr;
  c.require(ql != nullptr, "witness kind");
  if (ql) {
    const auto g = oracle::materialize(spec);
    const auto curve = oracle::conjugacy_ball(g, g.lift(ql->element, ql->lift_kernel_part), 6);
    c.require(curve.status == oracle::GrowthStatus::Closed && curve.elements.size() == 1, "lift class not central");
  }
  return c.done("QuotientLift t; oracle class of the lift has size 1");
}

Outcome criterion7() {
  Check c;
  const PermGroup s3(3, {{1, 0, 2}, {1, 2, 0}});
  const PermGroup c5(5, {{1, 2, 3, 4, 0}});
  const std::vector<ExtensionSpec> specs{
      make_extension(FiniteGroup{s3}, z(), {}, std::monostate{}),
      make_extension(FiniteGroup{c5}, GroupDesc(Free{{"x", "y"}}), {}, std::monostate{}),
      make_extension(FiniteGroup{PermGroup(2, {{1, 0}})}, GroupDesc::product({z(), c2()}), {}, std::monostate{}),
  };
  for (const auto& spec : specs) {
    const auto r = analyze(spec);
    c.require(r.verdict == Verdict::NotIcc, "verdict");
    c.require(r.theorem_path == analyzer::kPathFiniteKernel, "path " + r.theorem_path);
    c.require(r.witness && std::holds_alternative<analyzer::KernelTorsionWitness>(*r.witness), "witness kind");
    const auto cc = oracle::cross_check(spec, r, 6, 5000);
    c.require(cc.performed && cc.consistent, "oracle: " + cc.summary);
    const std::size_t k = std::get<FiniteGroup>(spec.kernel).group.order();
    c.require(!cc.probes.empty() && cc.probes.front().curve.elements.size() <= k, "class exceeds |K|");
  }
  return c.done(std::to_string(specs.size()) + " finite-kernel specs, witness classes closed within |K|");
}

Outcome criterion8() {
  Check c;
  std::mt19937 rng(2024);
  std::size_t proper = 0, checked_outside = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + rng() % 4;
    std::vector<IntMatrix> gens;
    for (std::size_t i = 0, n = 1 + rng() % 3; i < n; ++i) gens.push_back(testing::random_small_unimodular(rng, r));
    const matgroup::MatGroupGens g(gens);
    const auto cert = matgroup::finite_orbit_sublattice(g);
    const Lattice& f = cert.lattice;
    const std::string tag = "set " + std::to_string(trial);
    for (const auto& m : gens) c.require(f.image(m) == f, tag + ": not invariant");

    std::vector<IntVector> inside = f.basis_vectors();
    const auto basis = f.basis_vectors();
    for (int k = 0; k < 10 && !basis.empty(); ++k) {
      IntVector v(r, 0);
      for (const auto& b : basis) {
        const int coef = static_cast<int>(rng() % 7) - 3;
        for (std::size_t i = 0; i < r; ++i) v[i] += coef * b[i];
      }
      inside.push_back(v);
    }
    for (const auto& v : inside) {
      c.require(std::holds_alternative<matgroup::OrbitFinite>(matgroup::orbit_bfs(g, v)), tag + ": F-vector orbit infinite");
    }

    if (f.rank() < r) {
      ++proper;
      int found = 0;
      for (int attempt = 0; attempt < 1000 && found < 10; ++attempt) {
        const auto v = testing::random_vector(rng, r, 3);
        if (!testing::is_primitive(v) || f.contains(v)) continue;
        ++found;
        ++checked_outside;
        c.require(std::holds_alternative<matgroup::OrbitExceededCap>(matgroup::orbit_bfs(g, v, 10000)),
                  tag + ": non-F vector has a finite orbit");
      }
      c.require(found == 10, tag + ": could not sample non-F vectors");
    }

    auto augmented = gens;
    augmented.push_back(gens.size() > 1 ? gens[0] * gens[1] : gens[0].inverse_unimodular());
    c.require(matgroup::finite_orbit_sublattice(matgroup::MatGroupGens(augmented)).lattice == f, tag + ": augmentation changed F");
  }
  return c.done("200 generator sets, " + std::to_string(proper) + " with rank(F) < r, " +
                std::to_string(checked_outside) + " non-F vectors exceeded cap 10^4");
}

Outcome criterion9() {
  Check c;
  const matgroup::MatGroupGens g({IntMatrix{{1, 1}, {0, -1}}, IntMatrix{{1, 0}, {0, -1}}});
  const auto f = matgroup::finite_orbit_sublattice(g).lattice;
  c.require(f == Lattice::span(2, {make_vector({1, 0})}), "F = " + f.basis().to_string());
  return c.done("F = span{(1,0)}");
}

Outcome criterion10() {
  Check c;
  const IntMatrix s3a = perm_matrix({1, 0, 2}), s3b = perm_matrix({1, 2, 0});
  const IntMatrix neg3{{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  const std::vector<std::pair<std::vector<IntMatrix>, unsigned long long>> finite{
      {{IntMatrix::identity(2)}, 1},
      {{IntMatrix{{-1, 0}, {0, -1}}}, 2},
      {{IntMatrix{{0, -1}, {1, -1}}}, 3},
      {{IntMatrix{{0, -1}, {1, 0}}}, 4},
      {{IntMatrix{{-1, 0}, {0, 1}}, IntMatrix{{1, 0}, {0, -1}}}, 4},
      {{IntMatrix{{1, -1}, {1, 0}}}, 6},
      {{s3a, s3b}, 6},
      {{IntMatrix{{0, -1}, {1, 0}}, IntMatrix{{1, 0}, {0, -1}}}, 8},
      {{IntMatrix{{1, -1}, {1, 0}}, IntMatrix{{0, 1}, {1, 0}}}, 12},
      {{s3a, s3b, IntMatrix{{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}}}, 12},
      {{perm_matrix({1, 0, 2, 3}), perm_matrix({1, 2, 3, 0})}, 24},
      {{s3a, s3b, neg3}, 48},
  };
  for (const auto& [gens, order] : finite) {
    const auto cert = matgroup::group_is_finite(matgroup::MatGroupGens(gens));
    const auto* f = std::get_if<matgroup::FiniteGroupCert>(&cert);
    c.require(f && f->order == order, "order " + std::to_string(order) + " misjudged");
    c.require(closure_size(gens, 200) == order, "closure disagrees at order " + std::to_string(order));
  }

  std::mt19937 rng(10);
  std::size_t fin = 0, inf = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t r = 1 + rng() % 3;
    std::vector<IntMatrix> gens;
    for (std::size_t i = 0, n = 1 + rng() % 2; i < n; ++i) gens.push_back(testing::random_small_unimodular(rng, r));
    const matgroup::MatGroupGens g(gens);
    const auto cert = matgroup::group_is_finite(g);
    if (const auto* f = std::get_if<matgroup::FiniteGroupCert>(&cert)) {
      ++fin;
      c.require(closure_size(gens, 4 * f->order + 10) == f->order, "random finite order mismatch");
    } else {
      ++inf;
      const auto& w = std::get<matgroup::InfiniteGroupCert>(cert);
      c.require(std::holds_alternative<matgroup::InfiniteOrder>(matgroup::matrix_order(w.witness_matrix)),
                "witness has finite order");
      c.require(g.evaluate(w.witness_word) == w.witness_matrix, "witness word mismatch");
      c.require(closure_size(gens, 3000) > 3000, "closure stayed small");
    }
  }
  return c.done(std::to_string(finite.size()) + " fixed groups (orders 1-48) and " + std::to_string(fin) + "/" +
                std::to_string(inf) + " random finite/infinite sets verified");
}

Outcome criterion11() {
  Check c;
  std::mt19937 rng(11);
  for (int k = 0; k < 50; ++k) {
    const std::size_t rank = 2 + rng() % 2;
    Word w;
    while (w.empty()) w = testing::random_word(rng, rank, 6);
    const auto got = catalog::is_inner(FreeAut::conjugation(rank, w));
    c.require(got && *got == w, "conjugator not recovered");
  }
  int rejected = 0;
  while (rejected < 20) {
    const std::size_t rank = 2 + rng() % 2;
    const FreeAut phi(rank, testing::random_automorphism_images(rng, rank, 1 + static_cast<int>(rng() % 8)));
    if (phi.abelianization().is_identity()) continue;
    ++rejected;
    c.require(!catalog::is_inner(phi).has_value(), "non-inner accepted");
  }
  for (int k = 0; k < 50; ++k) {
    const std::size_t rank = 2 + rng() % 2;
    const auto images = testing::random_automorphism_images(rng, rank, 1 + static_cast<int>(rng() % 10));
    c.require(catalog::nielsen_reduce(images, rank).is_basis, "basis not certified");
  }
  c.require(!catalog::nielsen_reduce({Word{1, 1}, Word{2}}, 2).is_basis, "(a^2, b) accepted");
  return c.done("50 conjugators recovered, 20 non-inner rejected, 50 bases certified, (a^2, b) rejected");
}

Outcome criterion12() {
  Check c;
  std::mt19937 rng(12);
  std::size_t not_icc = 0, icc_count = 0;
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t r = 1 + rng() % 3;
    IntMatrix m = testing::random_small_unimodular(rng, r);
    GroupDesc q = z();
    MatrixAction act{m};
    if (trial % 4 == 1) {
      // no root-of-unity eigenvalues: x^2 - 3x + 1 and x^3 - x - 1
      r = 2 + rng() % 2;
      const IntMatrix base = r == 2 ? IntMatrix{{2, 1}, {1, 1}} : IntMatrix{{0, 0, 1}, {1, 0, 1}, {0, 1, 0}};
      const IntMatrix p = testing::random_unimodular(rng, r, 3);
      act = {p * base * p.inverse_unimodular()};
    } else if (trial % 4 == 2) {
      q = z(2);
      act = {m, m * m};
    } else if (trial % 4 == 3) {
      q = c2();
      const IntMatrix p = testing::random_unimodular(rng, r, 3);
      IntMatrix d = IntMatrix::identity(r);
      d(0, 0) = -1;
      act = {p * d * p.inverse_unimodular()};
    }
    const IntMatrix p = testing::random_unimodular(rng, r);
    MatrixAction moved;
    for (const auto& a : act) moved.push_back(p * a * p.inverse_unimodular());
    const auto r1 = analyze(abelian(r, q, act));
    const auto r2 = analyze(abelian(r, q, moved));
    const std::string tag = "spec " + std::to_string(trial);
    c.require(r1.verdict == r2.verdict, tag + ": verdict changed");
    icc_count += r1.verdict == Verdict::Icc;
    c.require(r1.witness.has_value() == r2.witness.has_value(), tag + ": witness presence");
    if (r1.witness && r2.witness) {
      ++not_icc;
      c.require(analyzer::witness_kind(*r1.witness) == analyzer::witness_kind(*r2.witness), tag + ": witness kind");
      const auto* k1 = std::get_if<analyzer::KernelVectorWitness>(&*r1.witness);
      const auto* k2 = std::get_if<analyzer::KernelVectorWitness>(&*r2.witness);
      if (k1 && k2) c.require(k1->orbit.size() == k2->orbit.size(), tag + ": class size changed");
      const auto* q1 = std::get_if<analyzer::QuotientLiftWitness>(&*r1.witness);
      const auto* q2 = std::get_if<analyzer::QuotientLiftWitness>(&*r2.witness);
      if (q1 && q2) c.require(q1->element_text == q2->element_text, tag + ": lift changed");
    }
  }
  return c.done("50 specs (" + std::to_string(icc_count) + " icc, " + std::to_string(not_icc) +
                " with witnesses) invariant under basis change");
}

Outcome criterion13() {
  Check c;
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "icc_acceptance";
  fs::create_directories(dir);
  const std::vector<std::pair<std::string, int>> cases{{"klein.ext", 0}, {"sol.ext", 0}, {"bad.ext", 2}};
  std::vector<std::string> json_files;
  for (const auto& [file, expected] : cases) {
    const std::vector<std::string> args{"check", std::string(ICC_DATA_DIR) + "/" + file, "--format", "json"};
    std::ostringstream out1, err1, out2, err2;
    const int code1 = cli::run(args, out1, err1);
    const int code2 = cli::run(args, out2, err2);
    c.require(code1 == expected && code2 == expected, file + ": exit " + std::to_string(code1));
    c.require(out1.str() == out2.str(), file + ": output not byte-identical");
    if (expected != 0) {
      c.require(out1.str().empty(), file + ": output on failure");
      c.require(err1.str().find(":3:13: error[validation]: non-unimodular matrix, det=4") != std::string::npos,
                file + ": diagnostic " + err1.str());
      continue;
    }
    const auto path = (dir / (file + ".json")).string();
    std::ofstream(path) << out1.str();
    json_files.push_back(path);
    const auto j = nlohmann::json::parse(out1.str());
    if (file == "klein.ext") {
      c.require(j["verdict"] == "not_icc", "klein verdict");
      c.require(j["witness"]["kind"] == "kernel_vector", "klein witness kind");
      c.require(j["witness"]["orbit"] == nlohmann::json::parse("[[1],[-1]]"), "klein orbit");
    } else {
      c.require(j["verdict"] == "icc", "sol verdict");
      c.require(j["theorem_path"] == analyzer::kPathAbelianKernel, "sol path");
    }
  }
  std::string cmd = std::string(ICC_PYTHON) + " " + ICC_SCHEMA_VALIDATOR + " " + ICC_SCHEMA_PATH;
  for (const auto& f : json_files) cmd += " " + f;
  c.require(std::string(ICC_PYTHON).size() > 0 && std::system(cmd.c_str()) == 0, "schema validation failed");
  return c.done("exit codes 0/0/2, byte-identical JSON, reports valid against schema/report.schema.json");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"sol-type extension is icc, oracle samples keep growing", criterion1},
      {"Klein bottle kernel vector with class {1,-1}", criterion2},
      {"torsion shortcut", criterion3},
      {"rotation: quotient lift t^4", criterion4},
      {"F2 x| C2 swap is icc", criterion5},
      {"F2 x Z central quotient lift", criterion6},
      {"finite-kernel rule", criterion7},
      {"finite_orbit_sublattice suite", criterion8},
      {"infinite dihedral lattice", criterion9},
      {"group_is_finite certificates", criterion10},
      {"free-group algorithm suite", criterion11},
      {"verdict invariance under basis change", criterion12},
      {"CLI contract", criterion13},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("ACCEPTANCE %2zu %s  %s (%.2fs): %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first, secs,
                o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}

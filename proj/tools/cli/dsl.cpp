#include "dsl.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

#include "icc/catalog/perm_group.hpp"
#include "icc/error.hpp"
#include "icc/overloaded.hpp"

namespace icc::cli {

using analyzer::ExtensionSpec;
using analyzer::FreeAction;
using analyzer::MatrixAction;
using catalog::FgAbelian;
using catalog::FiniteGroup;
using catalog::Free;
using catalog::FreeAut;
using catalog::GroupAtom;
using catalog::GroupDesc;
using catalog::PermGroup;
using catalog::Permutation;
using catalog::Word;
using linalg::Int;
using linalg::IntMatrix;

std::string to_string(DiagnosticCode c) {
  switch (c) {
    case DiagnosticCode::Syntax:
      return "syntax";
    case DiagnosticCode::Validation:
      return "validation";
    case DiagnosticCode::Unsupported:
      return "unsupported";
  }
  return "syntax";
}

std::string Diagnostic::format(std::string_view file) const {
  std::ostringstream out;
  out << file << ':' << line << ':' << column << ": error[" << to_string(code) << "]: " << message;
  return out.str();
}

namespace {

struct Failure {
  Diagnostic diagnostic;
};

[[noreturn]] void fail(DiagnosticCode code, std::size_t line, std::size_t column, std::string message) {
  throw Failure{Diagnostic{code, line, column, std::move(message)}};
}

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return pos_ + 1; }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size() || text_[pos_] == '#';
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  /// Matches a keyword only when it is not the prefix of a longer name.
  bool accept_keyword(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word) return false;
    const std::size_t end = pos_ + word.size();
    if (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) return false;
    pos_ = end;
    return true;
  }

  void expect(std::string_view token) {
    if (!accept(token)) error("expected '" + std::string(token) + "'");
  }

  void expect_end() {
    if (!at_end()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
  }

  Int integer() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      error("expected an integer");
    }
    std::string s(text_.substr(start, pos_ - start));
    if (s.front() == '+') s.erase(0, 1);
    return Int(s);
  }

  long small_integer(long lo, long hi) {
    const std::size_t col = column() + leading_space();
    const Int v = integer();
    if (v < lo || v > hi) {
      fail(DiagnosticCode::Validation, line_, col,
           "integer " + linalg::to_string(v) + " out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    return static_cast<long>(v);
  }

  std::string name() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    }
    if (pos_ == start) error("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  /// Column of the next token.
  std::size_t token_column() {
    skip_space();
    return column();
  }

  [[noreturn]] void error(const std::string& message) {
    skip_space();
    fail(DiagnosticCode::Syntax, line_, column(), message);
  }

 private:
  std::size_t leading_space() const {
    std::size_t n = 0;
    while (pos_ + n < text_.size() && (text_[pos_ + n] == ' ' || text_[pos_ + n] == '\t')) ++n;
    return n;
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

constexpr long kMaxRank = 64;
constexpr long kMaxPoint = 64;

// perm-spec := "perm" "(" cycles { ";" cycles } ")"
PermGroup parse_perm_spec(Cursor& c) {
  const std::size_t col = c.token_column();
  if (!c.accept_keyword("perm")) c.error("expected 'perm'");
  c.expect("(");
  std::vector<std::vector<std::vector<long>>> gens;
  long degree = 1;
  do {
    std::vector<std::vector<long>> cycles;
    if (c.peek() != '(') c.error("expected a cycle");
    while (c.peek() == '(') {
      c.expect("(");
      std::vector<long> cycle;
      while (c.peek() != ')') {
        cycle.push_back(c.small_integer(1, kMaxPoint));
        c.accept(",");
      }
      c.expect(")");
      for (long p : cycle) degree = std::max(degree, p);
      cycles.push_back(std::move(cycle));
    }
    gens.push_back(std::move(cycles));
  } while (c.accept(";"));
  c.expect(")");

  std::vector<Permutation> perms;
  for (const auto& cycles : gens) {
    Permutation p = catalog::perm_identity(static_cast<std::size_t>(degree));
    std::vector<bool> used(static_cast<std::size_t>(degree), false);
    for (const auto& cycle : cycles) {
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        const auto x = static_cast<std::size_t>(cycle[i] - 1);
        if (used[x]) fail(DiagnosticCode::Validation, c.line(), col, "cycles of a generator must be disjoint");
        used[x] = true;
        p[x] = static_cast<int>(cycle[(i + 1) % cycle.size()] - 1);
      }
    }
    perms.push_back(std::move(p));
  }
  try {
    return PermGroup(static_cast<std::size_t>(degree), std::move(perms));
  } catch (const UnsupportedError& e) {
    fail(DiagnosticCode::Unsupported, c.line(), col, e.what());
  } catch (const ValidationError& e) {
    fail(DiagnosticCode::Validation, c.line(), col, e.what());
  }
}

GroupAtom parse_atom(Cursor& c) {
  const std::size_t col = c.token_column();
  GroupAtom atom = FgAbelian{};
  if (c.accept_keyword("free")) {
    c.expect("(");
    Free f;
    do {
      f.names.push_back(c.name());
    } while (c.accept(","));
    c.expect(")");
    atom = std::move(f);
  } else if (c.accept_keyword("finite")) {
    atom = FiniteGroup{parse_perm_spec(c)};
  } else if (c.accept("Z")) {
    FgAbelian a;
    if (c.accept("^")) {
      a.rank = static_cast<std::size_t>(c.small_integer(0, kMaxRank));
    } else if (c.accept("/")) {
      a.torsion.push_back(static_cast<unsigned long>(c.small_integer(0, 1L << 30)));
    } else {
      a.rank = 1;
    }
    while (c.accept("+")) {
      c.expect("Z/");
      a.torsion.push_back(static_cast<unsigned long>(c.small_integer(0, 1L << 30)));
    }
    atom = std::move(a);
  } else {
    c.error("expected Z^n, free(...), finite perm(...) or product(...)");
  }
  try {
    catalog::validate_atom(atom);
  } catch (const ValidationError& e) {
    fail(DiagnosticCode::Validation, c.line(), col, e.what());
  }
  return atom;
}

GroupDesc parse_quotient(Cursor& c) {
  if (c.accept_keyword("product")) {
    c.expect("(");
    std::vector<GroupDesc> factors{parse_quotient(c)};
    c.expect(",");
    do {
      factors.push_back(parse_quotient(c));
    } while (c.accept(","));
    c.expect(")");
    return GroupDesc::product(factors);
  }
  return GroupDesc(parse_atom(c));
}

IntMatrix parse_matrix(Cursor& c) {
  const std::size_t col = c.token_column();
  c.expect("[");
  std::vector<std::vector<Int>> rows;
  do {
    c.expect("[");
    std::vector<Int> row{c.integer()};
    while (c.accept(",")) row.push_back(c.integer());
    c.expect("]");
    rows.push_back(std::move(row));
  } while (c.accept(","));
  c.expect("]");
  for (const auto& row : rows) {
    if (row.size() != rows.size()) fail(DiagnosticCode::Validation, c.line(), col, "matrix must be square");
  }
  IntMatrix m(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  try {
    linalg::require_unimodular(m);
  } catch (const ValidationError& e) {
    fail(DiagnosticCode::Validation, c.line(), col, e.what());
  }
  return m;
}

struct RawAutmap {
  std::vector<std::pair<std::string, std::size_t>> sources;  // name, column
  std::vector<std::vector<std::tuple<std::string, long, std::size_t>>> images;
};

// WORD := token { ("*" | " ") token }, token := "1" | NAME [ "^" INT ]
std::vector<std::tuple<std::string, long, std::size_t>> parse_word(Cursor& c) {
  std::vector<std::tuple<std::string, long, std::size_t>> out;
  do {
    if (c.accept("1")) {
      c.accept("*");
      continue;
    }
    const std::size_t col = c.token_column();
    std::string n = c.name();
    long e = 1;
    if (c.accept("^")) e = c.small_integer(-(1L << 20), 1L << 20);
    out.emplace_back(std::move(n), e, col);
    c.accept("*");
  } while (c.peek() != ',' && c.peek() != ')' && c.peek() != '\0');
  return out;
}

RawAutmap parse_autmap(Cursor& c) {
  RawAutmap raw;
  c.expect("(");
  do {
    const std::size_t col = c.token_column();
    raw.sources.emplace_back(c.name(), col);
    c.expect("->");
    raw.images.push_back(parse_word(c));
  } while (c.accept(","));
  c.expect(")");
  return raw;
}

FreeAut build_automorphism(const RawAutmap& raw, const Free& kernel, std::size_t line, std::size_t col) {
  auto index_of = [&](const std::string& n, std::size_t at) {
    auto it = std::find(kernel.names.begin(), kernel.names.end(), n);
    if (it == kernel.names.end()) fail(DiagnosticCode::Validation, line, at, "unknown kernel generator " + n);
    return static_cast<std::size_t>(it - kernel.names.begin());
  };
  std::vector<Word> images;
  for (std::size_t i = 0; i < kernel.rank(); ++i) images.push_back(Word::generator(i));
  std::vector<bool> seen(kernel.rank(), false);
  for (std::size_t k = 0; k < raw.sources.size(); ++k) {
    const std::size_t i = index_of(raw.sources[k].first, raw.sources[k].second);
    if (seen[i]) fail(DiagnosticCode::Validation, line, raw.sources[k].second, "generator " + raw.sources[k].first + " mapped twice");
    seen[i] = true;
    Word w;
    for (const auto& [n, e, at] : raw.images[k]) w = w * Word::generator(index_of(n, at), 1).pow(e);
    images[i] = w;
  }
  try {
    return FreeAut(kernel.rank(), std::move(images));
  } catch (const ValidationError& e) {
    fail(DiagnosticCode::Validation, line, col, e.what());
  }
}

struct ActionLine {
  std::string label;
  std::size_t line = 0;
  std::size_t label_column = 0;
  std::size_t payload_column = 0;
  std::variant<IntMatrix, RawAutmap> payload;
};

ActionLine parse_action(Cursor& c) {
  ActionLine a;
  a.line = c.line();
  if (!c.accept_keyword("action")) c.error("expected 'action'");
  a.label_column = c.token_column();
  a.label = c.name();
  c.expect("->");
  a.payload_column = c.token_column();
  if (c.peek() == '[') {
    a.payload = parse_matrix(c);
  } else if (c.peek() == '(') {
    a.payload = parse_autmap(c);
  } else {
    c.error("expected a matrix [[...]] or an automorphism map (x -> w, ...)");
  }
  c.expect_end();
  return a;
}

analyzer::ActionData assemble_action(const analyzer::KernelDesc& kernel, const GroupDesc& quotient,
                                     const std::vector<ActionLine>& lines) {
  if (lines.empty()) return std::monostate{};
  const auto labels = analyzer::default_labels(quotient);
  std::vector<std::optional<std::size_t>> slot_line(labels.size());
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const auto& a = lines[k];
    auto it = std::find(labels.begin(), labels.end(), a.label);
    const std::size_t slot = it != labels.end() ? static_cast<std::size_t>(it - labels.begin()) : k;
    if (slot >= labels.size()) fail(DiagnosticCode::Validation, a.line, a.label_column, "unknown quotient generator " + a.label);
    if (slot_line[slot]) {
      fail(DiagnosticCode::Validation, a.line, a.label_column, "second action for generator " + labels[slot]);
    }
    slot_line[slot] = k;
  }

  const auto kc = analyzer::classify_kernel(kernel);
  if (kc == analyzer::KernelClass::Abelian) {
    const std::size_t r = std::get<FgAbelian>(kernel).rank;
    MatrixAction mats(labels.size(), IntMatrix::identity(r));
    for (std::size_t s = 0; s < labels.size(); ++s) {
      if (!slot_line[s]) continue;
      const auto& a = lines[*slot_line[s]];
      auto* m = std::get_if<IntMatrix>(&a.payload);
      if (!m) fail(DiagnosticCode::Validation, a.line, a.payload_column, "abelian kernel needs a matrix action");
      if (m->rows() != r) {
        fail(DiagnosticCode::Validation, a.line, a.payload_column,
             "action matrix must be " + std::to_string(r) + "x" + std::to_string(r));
      }
      mats[s] = *m;
    }
    return mats;
  }
  if (kc == analyzer::KernelClass::Free) {
    const auto& f = std::get<Free>(kernel);
    FreeAction auts(labels.size(), FreeAut::identity(f.rank()));
    for (std::size_t s = 0; s < labels.size(); ++s) {
      if (!slot_line[s]) continue;
      const auto& a = lines[*slot_line[s]];
      auto* raw = std::get_if<RawAutmap>(&a.payload);
      if (!raw) fail(DiagnosticCode::Validation, a.line, a.payload_column, "free kernel needs an automorphism map");
      auts[s] = build_automorphism(*raw, f, a.line, a.payload_column);
    }
    return auts;
  }
  if (kc == analyzer::KernelClass::Trivial) {
    fail(DiagnosticCode::Validation, lines.front().line, lines.front().label_column, "trivial kernel takes no action");
  }
  return std::monostate{};  // torsion and finite kernels: dropped
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      out.push_back(text.substr(start));
      break;
    }
    out.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return out;
}

ExtensionSpec parse_or_throw(std::string_view text) {
  const auto lines = split_lines(text);
  std::optional<analyzer::KernelDesc> kernel;
  std::optional<GroupDesc> quotient;
  std::size_t quotient_line = 0;
  std::vector<ActionLine> actions;

  for (std::size_t i = 0; i < lines.size(); ++i) {
    Cursor c(lines[i], i + 1);
    if (c.at_end()) continue;
    if (!kernel) {
      if (!c.accept_keyword("kernel")) c.error("expected 'kernel:'");
      c.expect(":");
      if (c.accept_keyword("product")) {
        fail(DiagnosticCode::Unsupported, i + 1, c.column(), "product kernels are not supported");
      }
      kernel = std::visit(
          [&](auto&& atom) -> analyzer::KernelDesc { return atom; }, parse_atom(c));
      c.expect_end();
    } else if (!quotient) {
      if (!c.accept_keyword("quotient")) c.error("expected 'quotient:'");
      c.expect(":");
      quotient = parse_quotient(c);
      quotient_line = i + 1;
      c.expect_end();
    } else {
      actions.push_back(parse_action(c));
    }
  }
  const std::size_t last = lines.size();
  if (!kernel) fail(DiagnosticCode::Syntax, last, 1, "missing 'kernel:' line");
  if (!quotient) fail(DiagnosticCode::Syntax, last, 1, "missing 'quotient:' line");

  auto action = assemble_action(*kernel, *quotient, actions);
  const std::size_t where_line = actions.empty() ? quotient_line : actions.front().line;
  const std::size_t where_col = actions.empty() ? 1 : actions.front().label_column;
  try {
    return analyzer::make_extension(*kernel, *quotient, {}, std::move(action));
  } catch (const UnsupportedError& e) {
    fail(DiagnosticCode::Unsupported, where_line, where_col, e.what());
  } catch (const ValidationError& e) {
    fail(DiagnosticCode::Validation, where_line, where_col, e.what());
  }
}

std::string atom_text(const GroupAtom& atom) {
  return std::visit(overloaded{
                        [](const FgAbelian& a) {
                          std::string s = "Z^" + std::to_string(a.rank);
                          for (auto d : a.torsion) s += " + Z/" + std::to_string(d);
                          return s;
                        },
                        [](const Free& f) {
                          std::string s = "free(";
                          for (std::size_t i = 0; i < f.names.size(); ++i) s += (i ? "," : "") + f.names[i];
                          return s + ")";
                        },
                        [](const FiniteGroup& g) {
                          std::size_t moved = 0;
                          for (const auto& p : g.group.generators())
                            for (std::size_t i = 0; i < p.size(); ++i)
                              if (p[i] != static_cast<int>(i)) moved = std::max(moved, i + 1);
                          std::string s = "finite perm(";
                          const auto& gens = g.group.generators();
                          for (std::size_t i = 0; i < gens.size(); ++i) {
                            s += (i ? "; " : "") + catalog::perm_to_string(gens[i]);
                          }
                          // a trailing singleton cycle pins the degree
                          if (moved < g.group.degree()) s += "(" + std::to_string(g.group.degree()) + ")";
                          return s + ")";
                        },
                    },
                    atom);
}

std::string matrix_text(const IntMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? "," : "") + linalg::to_string(m(i, j));
    s += "]";
  }
  return s + "]";
}

std::string autmap_text(const FreeAut& phi, const std::vector<std::string>& names) {
  std::string s = "(";
  bool first = true;
  for (std::size_t i = 0; i < phi.rank(); ++i) {
    if (phi.images()[i] == Word::generator(i)) continue;
    s += (first ? "" : ", ") + names[i] + " -> " + phi.images()[i].to_string(names);
    first = false;
  }
  return s + ")";
}

}  // namespace

ParseResult parse_extension(std::string_view text) {
  try {
    return parse_or_throw(text);
  } catch (const Failure& f) {
    return f.diagnostic;
  }
}

std::string print_extension(const ExtensionSpec& spec) {
  std::string out = "kernel: " + std::visit([](const auto& k) { return atom_text(GroupAtom(k)); }, spec.kernel) + "\n";
  out += "quotient: ";
  if (spec.quotient.is_product()) {
    out += "product(";
    for (std::size_t i = 0; i < spec.quotient.factors().size(); ++i) {
      out += (i ? ", " : "") + atom_text(spec.quotient.factors()[i]);
    }
    out += ")";
  } else {
    out += atom_text(spec.quotient.factors().front());
  }
  out += "\n";
  if (auto* mats = std::get_if<MatrixAction>(&spec.action)) {
    for (std::size_t i = 0; i < mats->size(); ++i) {
      if (!(*mats)[i].is_identity()) out += "action " + spec.generator_labels[i] + " -> " + matrix_text((*mats)[i]) + "\n";
    }
  } else if (auto* auts = std::get_if<FreeAction>(&spec.action)) {
    const auto& names = std::get<Free>(spec.kernel).names;
    for (std::size_t i = 0; i < auts->size(); ++i) {
      if (!(*auts)[i].is_identity()) out += "action " + spec.generator_labels[i] + " -> " + autmap_text((*auts)[i], names) + "\n";
    }
  }
  return out;
}

}  // namespace icc::cli

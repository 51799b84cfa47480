#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>

#include "icc/analyzer/extension.hpp"

namespace icc::cli {

enum class DiagnosticCode { Syntax, Validation, Unsupported };

std::string to_string(DiagnosticCode c);

/// A located parse failure. Line and column are 1-based.
struct Diagnostic {
  DiagnosticCode code = DiagnosticCode::Syntax;
  std::size_t line = 0;
  std::size_t column = 0;
  std::string message;

  /// "FILE:LINE:COL: error[code]: message".
  std::string format(std::string_view file) const;
};

using ParseResult = std::variant<analyzer::ExtensionSpec, Diagnostic>;

/// Parses one extension description:
///
///   kernel: Z^2 + Z/2          | free(a,b) | finite perm((1 2 3); (1 2))
///   quotient: Z                | product(Z, finite perm((1 2)))
///   action t -> [[2,1],[1,1]]
///   action q -> (a -> b, b -> a)
///
/// Blank lines and "#" comments are ignored. "Z" abbreviates Z^1. Action
/// lines name a quotient generator label (t, t1.., q, q1.., or a free
/// generator name); otherwise they are taken in generator order. Missing
/// actions are the identity, and omitted autmap generators are fixed.
/// Words are generator names with optional "^n", separated by spaces or
/// "*"; "1" is the empty word.
ParseResult parse_extension(std::string_view text);

/// Canonical text, accepted by parse_extension and stable under a
/// parse/print round trip.
std::string print_extension(const analyzer::ExtensionSpec& spec);

}  // namespace icc::cli

#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "icc/linalg/int_matrix.hpp"

namespace icc::linalg {

/// Univariate integer polynomial, coefficients lowest degree first.
/// The zero polynomial has no coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coefficients);
  IntPoly(std::initializer_list<long long> coefficients);

  static IntPoly monomial(std::size_t degree, const Int& coefficient = 1);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Int>& coefficients() const { return coeffs_; }
  Int coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Int(0); }
  Int leading() const { return coeffs_.empty() ? Int(0) : coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  /// p(M) for a square matrix M (Horner).
  IntMatrix evaluate(const IntMatrix& m) const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);

  std::string to_string() const;

 private:
  void trim();
  std::vector<Int> coeffs_;
};

struct PolyDivision {
  IntPoly quotient;
  IntPoly remainder;
};

/// Division by a monic divisor; exact over the integers.
PolyDivision divide_monic(const IntPoly& dividend, const IntPoly& divisor);

/// det(xI - M).
IntPoly charpoly(const IntMatrix& m);

unsigned long euler_phi(unsigned long n);

/// The n-th cyclotomic polynomial, computed from x^n - 1 by dividing out
/// the cyclotomic factors of the proper divisors of n.
IntPoly cyclotomic(unsigned long n);

struct CyclotomicFactorization {
  std::set<unsigned long> orders;  // n with Phi_n | p
  bool all_cyclotomic = false;     // p is a product of cyclotomic polynomials
};

/// Orders n (with phi(n) <= bound) whose cyclotomic polynomial divides p.
/// Throws ValidationError if p is not monic.
CyclotomicFactorization cyclotomic_orders(const IntPoly& p, std::size_t bound);

}  // namespace icc::linalg

#include "icc/linalg/polynomial.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "icc/error.hpp"

namespace icc::linalg {

IntPoly::IntPoly(std::vector<Int> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

IntPoly::IntPoly(std::initializer_list<long long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::monomial(std::size_t degree, const Int& coefficient) {
  std::vector<Int> c(degree + 1);
  c[degree] = coefficient;
  return IntPoly(std::move(c));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntMatrix IntPoly::evaluate(const IntMatrix& m) const {
  if (!m.is_square()) throw ValidationError("evaluate: matrix must be square");
  const std::size_t n = m.rows();
  IntMatrix acc(n, n);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * m + IntMatrix::identity(n).scaled(*it);
  }
  return acc;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) + b.coefficient(i);
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) - b.coefficient(i);
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPoly(std::move(c));
}

std::string IntPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (long d = degree(); d >= 0; --d) {
    const Int& c = coeffs_[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    Int mag = c < 0 ? Int(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || d == 0) out += mag.str();
    if (d >= 1) out += "x";
    if (d >= 2) out += "^" + std::to_string(d);
  }
  return out;
}

PolyDivision divide_monic(const IntPoly& dividend, const IntPoly& divisor) {
  if (!divisor.is_monic()) throw ValidationError("divide_monic: divisor is not monic");
  std::vector<Int> rem = dividend.coefficients();
  const std::size_t dd = static_cast<std::size_t>(divisor.degree());
  if (rem.size() <= dd) return {IntPoly{}, dividend};
  std::vector<Int> quot(rem.size() - dd);
  const auto& dc = divisor.coefficients();
  for (std::size_t k = rem.size(); k-- > dd;) {
    Int q = rem[k];
    if (q == 0) continue;
    quot[k - dd] = q;
    for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= q * dc[j];
  }
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

IntPoly charpoly(const IntMatrix& m) {
  if (!m.is_square()) throw ValidationError("charpoly: matrix must be square");
  // Faddeev-LeVerrier; every division below is exact.
  const std::size_t n = m.rows();
  std::vector<Int> c(n + 1);
  c[n] = 1;
  IntMatrix aux(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    aux = m * aux + IntMatrix::identity(n).scaled(c[n - k + 1]);
    IntMatrix am = m * aux;
    Int trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    c[n - k] = -trace / static_cast<long long>(k);
  }
  return IntPoly(std::move(c));
}

unsigned long euler_phi(unsigned long n) {
  unsigned long result = n;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

IntPoly cyclotomic_memo(unsigned long n, std::map<unsigned long, IntPoly>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  IntPoly p = IntPoly::monomial(n) - IntPoly{1};
  for (unsigned long d = 1; d < n; ++d) {
    if (n % d) continue;
    p = divide_monic(p, cyclotomic_memo(d, memo)).quotient;
  }
  memo.emplace(n, p);
  return p;
}

}  // namespace

IntPoly cyclotomic(unsigned long n) {
  if (n == 0) throw ValidationError("cyclotomic: order must be positive");
  std::map<unsigned long, IntPoly> memo;
  return cyclotomic_memo(n, memo);
}

CyclotomicFactorization cyclotomic_orders(const IntPoly& p, std::size_t bound) {
  if (!p.is_monic()) throw ValidationError("cyclotomic_orders: polynomial is not monic");
  const unsigned long b =
      std::max<unsigned long>(bound, static_cast<unsigned long>(p.degree()));
  // phi(n) >= sqrt(n/2), so phi(n) <= b forces n <= 2 b^2.
  const unsigned long n_max = 2 * b * b + 2;
  std::map<unsigned long, IntPoly> memo;
  CyclotomicFactorization out;
  IntPoly rest = p;
  for (unsigned long n = 1; n <= n_max; ++n) {
    if (euler_phi(n) > b) continue;
    IntPoly phi = cyclotomic_memo(n, memo);
    auto div = divide_monic(rest, phi);
    if (!div.remainder.is_zero()) continue;
    out.orders.insert(n);
    do {
      rest = div.quotient;
      div = divide_monic(rest, phi);
    } while (div.remainder.is_zero() && rest.degree() > 0);
  }
  out.all_cyclotomic = rest == IntPoly{1};
  return out;
}

}  // namespace icc::linalg

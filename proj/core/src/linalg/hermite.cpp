#include "icc/linalg/hermite.hpp"

#include <utility>

#include "icc/error.hpp"

namespace icc::linalg {

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  Int r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

namespace {

void axpy_row(IntMatrix& m, std::size_t target, std::size_t source, const Int& q) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(target, j) -= q * m(source, j);
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void negate_row(IntMatrix& m, std::size_t i) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
}

}  // namespace

HnfResult hnf(const IntMatrix& a) {
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  const std::size_t m = h.rows();
  std::size_t pivot = 0;
  for (std::size_t col = 0; col < h.cols() && pivot < m; ++col) {
    // Euclidean elimination on the smallest entry keeps coefficients small
    for (;;) {
      std::size_t best = m;
      for (std::size_t i = pivot; i < m; ++i) {
        if (h(i, col) == 0) continue;
        if (best == m || abs(h(i, col)) < abs(h(best, col))) best = i;
      }
      if (best == m) break;
      if (best != pivot) {
        swap_rows(h, pivot, best);
        swap_rows(u, pivot, best);
      }
      bool done = true;
      const Int p = h(pivot, col);
      for (std::size_t i = pivot + 1; i < m; ++i) {
        if (h(i, col) == 0) continue;
        Int q = floor_div(2 * h(i, col) + p, 2 * p);
        axpy_row(h, i, pivot, q);
        axpy_row(u, i, pivot, q);
        if (h(i, col) != 0) done = false;
      }
      if (done) break;
    }
    if (h(pivot, col) == 0) continue;
    if (h(pivot, col) < 0) {
      negate_row(h, pivot);
      negate_row(u, pivot);
    }
    const Int p = h(pivot, col);
    for (std::size_t i = 0; i < pivot; ++i) {
      Int q = floor_div(h(i, col), p);
      if (q == 0) continue;
      axpy_row(h, i, pivot, q);
      axpy_row(u, i, pivot, q);
    }
    ++pivot;
  }
  return {std::move(h), std::move(u)};
}

Lattice::Lattice(std::size_t ambient_rank)
    : ambient_(ambient_rank), basis_(0, ambient_rank) {}

Lattice Lattice::span(std::size_t ambient_rank,
                      const std::vector<IntVector>& generators) {
  Lattice l(ambient_rank);
  if (generators.empty()) return l;
  IntMatrix g = IntMatrix::from_rows(generators, ambient_rank);
  IntMatrix h = hnf(g).h;
  std::size_t rank = 0;
  while (rank < h.rows()) {
    bool nonzero = false;
    for (std::size_t j = 0; j < h.cols(); ++j) {
      if (h(rank, j) != 0) {
        nonzero = true;
        break;
      }
    }
    if (!nonzero) break;
    ++rank;
  }
  IntMatrix basis(rank, ambient_rank);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < ambient_rank; ++j) basis(i, j) = h(i, j);
  l.basis_ = std::move(basis);
  return l;
}

Lattice Lattice::full(std::size_t ambient_rank) {
  Lattice l(ambient_rank);
  l.basis_ = IntMatrix::identity(ambient_rank);
  return l;
}

std::vector<IntVector> Lattice::basis_vectors() const {
  std::vector<IntVector> out;
  out.reserve(rank());
  for (std::size_t i = 0; i < rank(); ++i) out.push_back(basis_.row(i));
  return out;
}

std::optional<IntVector> Lattice::coordinates(const IntVector& v) const {
  if (v.size() != ambient_) throw ValidationError("vector length mismatch");
  IntVector rest = v;
  IntVector coeffs(rank());
  std::size_t col = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    while (basis_(i, col) == 0) {
      if (rest[col] != 0) return std::nullopt;
      ++col;
    }
    const Int& p = basis_(i, col);
    if (rest[col] % p != 0) return std::nullopt;
    Int q = rest[col] / p;
    coeffs[i] = q;
    if (q != 0) {
      for (std::size_t j = col; j < ambient_; ++j) rest[j] -= q * basis_(i, j);
    }
    ++col;
  }
  if (!is_zero(rest)) return std::nullopt;
  return coeffs;
}

bool Lattice::contains(const IntVector& v) const {
  return coordinates(v).has_value();
}

IntVector Lattice::combine(const IntVector& coefficients) const {
  if (coefficients.size() != rank()) throw ValidationError("coefficient count mismatch");
  IntVector out(ambient_);
  for (std::size_t i = 0; i < rank(); ++i) {
    if (coefficients[i] == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j) out[j] += coefficients[i] * basis_(i, j);
  }
  return out;
}

Lattice Lattice::image(const IntMatrix& m) const {
  if (m.cols() != ambient_ || m.rows() != ambient_)
    throw ValidationError("lattice image: matrix shape mismatch");
  std::vector<IntVector> gens;
  gens.reserve(rank());
  for (std::size_t i = 0; i < rank(); ++i) gens.push_back(m * basis_.row(i));
  return span(ambient_, gens);
}

bool Lattice::is_subset_of(const Lattice& other) const {
  if (other.ambient_ != ambient_) return false;
  for (std::size_t i = 0; i < rank(); ++i)
    if (!other.contains(basis_.row(i))) return false;
  return true;
}

bool Lattice::is_invariant_under(const IntMatrix& m) const {
  for (std::size_t i = 0; i < rank(); ++i)
    if (!contains(m * basis_.row(i))) return false;
  return true;
}

Lattice kernel_lattice(const IntMatrix& a) {
  const std::size_t r = a.cols();
  if (a.rows() == 0) return Lattice::full(r);
  // U * A^T = H; rows of U opposite zero rows of H span the kernel.
  auto [h, u] = hnf(a.transpose());
  std::vector<IntVector> kernel;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    bool zero_row = true;
    for (std::size_t j = 0; j < h.cols(); ++j) {
      if (h(i, j) != 0) {
        zero_row = false;
        break;
      }
    }
    if (zero_row) kernel.push_back(u.row(i));
  }
  return Lattice::span(r, kernel);
}

Lattice lattice_intersect(const Lattice& a, const Lattice& b) {
  if (a.ambient_rank() != b.ambient_rank())
    throw ValidationError("lattice_intersect: ambient rank mismatch");
  const std::size_t r = a.ambient_rank();
  if (a.rank() == 0 || b.rank() == 0) return Lattice::zero(r);
  // x = c*A = d*B  <=>  (c, d) in the left kernel of [A; -B].
  const std::size_t ka = a.rank();
  const std::size_t kb = b.rank();
  IntMatrix stacked(ka + kb, r);
  for (std::size_t i = 0; i < ka; ++i)
    for (std::size_t j = 0; j < r; ++j) stacked(i, j) = a.basis()(i, j);
  for (std::size_t i = 0; i < kb; ++i)
    for (std::size_t j = 0; j < r; ++j) stacked(ka + i, j) = -b.basis()(i, j);
  Lattice rel = kernel_lattice(stacked.transpose());
  std::vector<IntVector> gens;
  for (const auto& y : rel.basis_vectors()) {
    IntVector c(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(ka));
    gens.push_back(a.combine(c));
  }
  return Lattice::span(r, gens);
}

IntMatrix restrict_to(const IntMatrix& m, const Lattice& l) {
  const std::size_t k = l.rank();
  IntMatrix out(k, k);
  for (std::size_t j = 0; j < k; ++j) {
    auto coords = l.coordinates(m * l.basis().row(j));
    if (!coords) throw ValidationError("restrict_to: lattice is not invariant");
    for (std::size_t i = 0; i < k; ++i) out(i, j) = (*coords)[i];
  }
  return out;
}

}  // namespace icc::linalg

#include "extremal/int_matrix.hpp"

#include <limits>
#include <numeric>
#include <utility>

#include "extremal/error.hpp"

namespace extremal {

ZMatrix ZMatrix::identity(std::size_t n) {
  ZMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ZMatrix ZMatrix::standard_symplectic(std::size_t g) {
  ZMatrix j(2 * g, 2 * g);
  for (std::size_t i = 0; i < g; ++i) {
    j(i, g + i) = 1;
    j(g + i, i) = -1;
  }
  return j;
}

ZMatrix ZMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  ZMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorKind::InvalidInput, "ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

ZMatrix ZMatrix::transpose() const {
  ZMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

ZMatrix ZMatrix::operator-() const {
  ZMatrix n = *this;
  for (auto& x : n.data_) x = -x;
  return n;
}

bool ZMatrix::is_skew() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  return true;
}

BigInt ZMatrix::max_abs() const {
  BigInt best = 0;
  for (const auto& x : data_) best = std::max<BigInt>(best, abs(x));
  return best;
}

std::vector<std::vector<std::int64_t>> ZMatrix::to_int64() const {
  const BigInt lo = std::numeric_limits<std::int64_t>::min();
  const BigInt hi = std::numeric_limits<std::int64_t>::max();
  std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const BigInt& x = (*this)(i, j);
      if (x < lo || x > hi)
        throw Error(ErrorKind::InternalConsistency, "matrix entry exceeds 64 bits");
      out[i][j] = static_cast<std::int64_t>(x);
    }
  return out;
}

ZMatrix operator*(const ZMatrix& a, const ZMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::InvalidInput, "matrix shape mismatch");
  ZMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

ZMatrix matrix_power(const ZMatrix& m, unsigned exponent) {
  ZMatrix result = ZMatrix::identity(m.rows());
  ZMatrix base = m;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

BigInt determinant(const ZMatrix& m) {
  if (!m.square()) throw Error(ErrorKind::InvalidInput, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  ZMatrix a = m;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

void swap_index(ZMatrix& a, std::size_t x, std::size_t y) {
  const std::size_t n = a.rows();
  for (std::size_t j = 0; j < n; ++j) std::swap(a(x, j), a(y, j));
  for (std::size_t i = 0; i < n; ++i) std::swap(a(i, x), a(i, y));
}

}  // namespace

// After step k, entry (i, j) with i, j >= 2k+2 holds the Pfaffian of the
// principal submatrix on {0, ..., 2k+1, i, j}. Consecutive stages are linked
// by the Pfaffian Desnanot-Jacobi identity
//   P_{k-1} A'_{ij} = P_k A_{ij} - A_{2k,i} A_{2k+1,j} + A_{2k,j} A_{2k+1,i},
// so each division by the previous leading Pfaffian is exact.
BigInt pfaffian(const ZMatrix& m) {
  if (!m.square() || m.rows() % 2 != 0)
    throw Error(ErrorKind::InvalidInput, "Pfaffian needs an even-dimensional square matrix");
  if (!m.is_skew()) throw Error(ErrorKind::InvalidInput, "Pfaffian needs a skew-symmetric matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  ZMatrix a = m;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 2 <= n; k += 2) {
    if (a(k, k + 1) == 0) {
      std::size_t r = k + 2;
      while (r < n && a(k, r) == 0) ++r;
      if (r == n) return 0;
      swap_index(a, k + 1, r);
      sign = -sign;
    }
    const BigInt pivot = a(k, k + 1);
    for (std::size_t i = k + 2; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        BigInt num = pivot * a(i, j) - a(k, i) * a(k + 1, j) + a(k, j) * a(k + 1, i);
        BigInt q, rem;
        boost::multiprecision::divide_qr(num, prev, q, rem);
        if (rem != 0) throw Error(ErrorKind::InternalConsistency, "inexact Pfaffian elimination");
        a(i, j) = q;
        a(j, i) = -q;
      }
    }
    prev = pivot;
  }
  return sign * prev;
}

namespace {

// Maintains the Gram matrix G = U^T E U under column operations on U.
class CongruenceTracker {
 public:
  explicit CongruenceTracker(const ZMatrix& form)
      : gram_(form), basis_(ZMatrix::identity(form.rows())) {}

  const BigInt& gram(std::size_t i, std::size_t j) const { return gram_(i, j); }
  const ZMatrix& basis() const { return basis_; }

  // u_j += s * u_k
  void add_multiple(std::size_t j, std::size_t k, const BigInt& s) {
    if (s == 0) return;
    const std::size_t n = gram_.rows();
    for (std::size_t r = 0; r < n; ++r) basis_(r, j) += s * basis_(r, k);
    for (std::size_t r = 0; r < n; ++r) gram_(r, j) += s * gram_(r, k);
    for (std::size_t c = 0; c < n; ++c) gram_(j, c) += s * gram_(k, c);
  }

  void negate(std::size_t k) {
    const std::size_t n = gram_.rows();
    for (std::size_t r = 0; r < n; ++r) basis_(r, k) = -basis_(r, k);
    for (std::size_t r = 0; r < n; ++r) gram_(r, k) = -gram_(r, k);
    for (std::size_t c = 0; c < n; ++c) gram_(k, c) = -gram_(k, c);
  }

 private:
  ZMatrix gram_;
  ZMatrix basis_;
};

}  // namespace

ZMatrix symplectic_basis(const ZMatrix& form) {
  if (!form.square() || form.rows() % 2 != 0 || !form.is_skew())
    throw Error(ErrorKind::InvalidInput, "symplectic basis needs an even skew matrix");
  const std::size_t n = form.rows(), g = n / 2;
  CongruenceTracker t(form);
  std::vector<std::size_t> remaining(n);
  std::iota(remaining.begin(), remaining.end(), std::size_t{0});
  std::vector<std::size_t> es, fs;

  while (!remaining.empty()) {
    const std::size_t e = remaining.front();
    std::vector<std::size_t> others(remaining.begin() + 1, remaining.end());

    // Euclid on row e of the Gram matrix until one entry is left.
    std::size_t f = 0;
    for (;;) {
      std::size_t best = n;
      std::size_t nonzero = 0;
      for (std::size_t k : others) {
        if (t.gram(e, k) == 0) continue;
        ++nonzero;
        if (best == n || abs(t.gram(e, k)) < abs(t.gram(e, best))) best = k;
      }
      if (nonzero == 0)
        throw Error(ErrorKind::InternalConsistency, "degenerate skew form: no symplectic partner");
      if (nonzero == 1) {
        f = best;
        break;
      }
      const BigInt pivot = t.gram(e, best);
      for (std::size_t k : others) {
        if (k == best || t.gram(e, k) == 0) continue;
        t.add_multiple(k, best, -BigInt(t.gram(e, k) / pivot));
      }
    }
    if (abs(t.gram(e, f)) != 1)
      throw Error(ErrorKind::InternalConsistency, "skew form is not unimodular");
    if (t.gram(e, f) == -1) t.negate(f);

    // Project the rest onto the orthogonal complement of span(e, f).
    std::vector<std::size_t> rest;
    for (std::size_t j : others) {
      if (j == f) continue;
      const BigInt along_e = -BigInt(t.gram(j, f));
      const BigInt along_f = t.gram(j, e);
      t.add_multiple(j, e, along_e);
      t.add_multiple(j, f, along_f);
      rest.push_back(j);
    }
    es.push_back(e);
    fs.push_back(f);
    remaining = std::move(rest);
  }

  ZMatrix u(n, n);
  const ZMatrix& b = t.basis();
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t r = 0; r < n; ++r) {
      u(r, i) = b(r, es[i]);
      u(r, g + i) = b(r, fs[i]);
    }
  if (u.transpose() * form * u != ZMatrix::standard_symplectic(g))
    throw Error(ErrorKind::InternalConsistency, "symplectic basis verification failed");
  return u;
}

}  // namespace extremal

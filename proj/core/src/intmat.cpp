#include "basym/intmat.hpp"

#include <cstdlib>
#include <utility>

#include "basym/checked.hpp"

namespace basym {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) fail(ErrorKind::InvalidArgument, "ragged integer matrix");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<std::int64_t> IntMatrix::row(std::size_t i) const {
  return {a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::vector<std::int64_t> IntMatrix::col(std::size_t j) const {
  std::vector<std::int64_t> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) fail(ErrorKind::InvalidArgument, "matrix shape mismatch");
  IntMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      std::int64_t x = (*this)(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) = checked_add(r(i, j), checked_mul(x, o(k, j)));
    }
  return r;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::add_row(std::size_t i, std::size_t j, std::int64_t k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c)
    (*this)(i, c) = checked_add((*this)(i, c), checked_mul(k, (*this)(j, c)));
}

void IntMatrix::add_col(std::size_t i, std::size_t j, std::int64_t k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r)
    (*this)(r, i) = checked_add((*this)(r, i), checked_mul(k, (*this)(r, j)));
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = checked_mul(-1, (*this)(i, c));
}

namespace {

// Floor division so remainders are nonnegative for positive divisors.
std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SmithForm s{IntMatrix::identity(m), a, IntMatrix::identity(n), 0};
  IntMatrix& d = s.D;

  std::size_t t = 0;
  bool exhausted = false;
  for (; t < m && t < n; ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::size_t pi = m, pj = n;
      std::int64_t best = 0;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          std::int64_t v = d(i, j);
          if (v != 0 && (best == 0 || std::llabs(v) < best)) {
            best = std::llabs(v);
            pi = i;
            pj = j;
          }
        }
      if (best == 0) {
        exhausted = true;
        break;
      }
      d.swap_rows(t, pi);
      s.U.swap_rows(t, pi);
      d.swap_cols(t, pj);
      s.V.swap_cols(t, pj);

      bool clean = true;
      const std::int64_t p = d(t, t);
      for (std::size_t i = t + 1; i < m; ++i) {
        std::int64_t q = floor_div(d(i, t), p);
        d.add_row(i, t, -q);
        s.U.add_row(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        std::int64_t q = floor_div(d(t, j), p);
        d.add_col(j, t, -q);
        s.V.add_col(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility chain: fold an offending row into the pivot row and retry
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(i, j) % p != 0) {
            d.add_row(t, i, 1);
            s.U.add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (exhausted) break;
    if (d(t, t) < 0) {
      d.negate_row(t);
      s.U.negate_row(t);
    }
  }
  s.rank = t;
  return s;
}

std::vector<std::vector<std::int64_t>> integer_kernel(const IntMatrix& a) {
  SmithForm s = smith_normal_form(a);
  std::vector<std::vector<std::int64_t>> basis;
  for (std::size_t j = s.rank; j < a.cols(); ++j) basis.push_back(s.V.col(j));
  return basis;
}

std::vector<std::vector<std::int64_t>> hermite_basis(const std::vector<std::vector<std::int64_t>>& rows,
                                                     std::size_t cols) {
  IntMatrix h = IntMatrix::from_rows(rows, cols);
  const std::size_t m = h.rows();
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < cols && r < m; ++c) {
    for (;;) {
      std::size_t pi = m;
      std::int64_t best = 0;
      for (std::size_t i = r; i < m; ++i) {
        std::int64_t v = h(i, c);
        if (v != 0 && (best == 0 || std::llabs(v) < best)) {
          best = std::llabs(v);
          pi = i;
        }
      }
      if (best == 0) break;
      h.swap_rows(r, pi);
      bool clean = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        h.add_row(i, r, -floor_div(h(i, c), h(r, c)));
        if (h(i, c) != 0) clean = false;
      }
      if (clean) {
        if (h(r, c) < 0) h.negate_row(r);
        pivots.push_back(c);
        ++r;
        break;
      }
    }
  }
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    std::size_t c = pivots[k];
    for (std::size_t i = 0; i < k; ++i) h.add_row(i, k, -floor_div(h(i, c), h(k, c)));
  }
  std::vector<std::vector<std::int64_t>> out;
  for (std::size_t i = 0; i < r; ++i) out.push_back(h.row(i));
  return out;
}

}  // namespace basym

#include <algorithm>
#include <string>

#include "apsp/errors.hpp"
#include "apsp/kernels.hpp"

namespace apsp {

void check_csr(const CsrMatrix& c) {
  if (c.row_ptr.size() != c.n + 1) throw InvariantError("row_ptr must have n + 1 entries");
  if (c.row_ptr.front() != 0) throw InvariantError("row_ptr[0] must be 0");
  if (c.row_ptr.back() != c.values.size()) throw InvariantError("row_ptr[n] must equal nnz");
  if (c.col_idx.size() != c.values.size()) throw InvariantError("col_idx and values differ in length");
  for (std::size_t i = 0; i < c.n; ++i) {
    if (c.row_ptr[i] > c.row_ptr[i + 1]) throw InvariantError("row_ptr decreases at row " + std::to_string(i));
    for (std::size_t p = c.row_ptr[i]; p < c.row_ptr[i + 1]; ++p) {
      if (c.col_idx[p] >= c.n) throw InvariantError("column index out of range in row " + std::to_string(i));
      if (p > c.row_ptr[i] && c.col_idx[p] <= c.col_idx[p - 1])
        throw InvariantError("column indices not strictly increasing in row " + std::to_string(i));
      if (c.values[p] == 0.0) throw InvariantError("explicit zero stored in row " + std::to_string(i));
    }
  }
}

CsrMatrix to_csr(const EncodedMatrix& a) {
  CsrMatrix c;
  c.n = a.n();
  c.width = a.width();
  c.row_ptr.assign(c.n + 1, 0);
  std::size_t nnz = 0;
  for (double v : a.values()) nnz += v != 0.0;
  c.col_idx.reserve(nnz);
  c.values.reserve(nnz);
  for (std::size_t i = 0; i < c.n; ++i) {
    for (std::size_t j = 0; j < c.n; ++j) {
      const double v = a.at(i, j);
      if (v == 0.0) continue;
      c.col_idx.push_back(static_cast<std::uint32_t>(j));
      c.values.push_back(v);
    }
    c.row_ptr[i + 1] = c.values.size();
  }
  return c;
}

EncodedMatrix from_csr(const CsrMatrix& c) {
  EncodedMatrix a(c.n, c.width);
  for (std::size_t i = 0; i < c.n; ++i)
    for (std::size_t p = c.row_ptr[i]; p < c.row_ptr[i + 1]; ++p) a.at(i, c.col_idx[p]) = c.values[p];
  return a;
}

CsrMatrix multiply_sparse(const CsrMatrix& a, const CsrMatrix& b) {
  if (a.n != b.n)
    throw DimensionError("operand dimensions differ: " + std::to_string(a.n) + " vs " + std::to_string(b.n));
  if (a.width != b.width) throw DimensionError("operand float widths differ");
  const std::size_t n = a.n;

  CsrMatrix c;
  c.n = n;
  c.width = a.width;
  c.row_ptr.assign(n + 1, 0);

  std::vector<double> acc(n, 0.0);
  std::vector<char> seen(n, 0);
  std::vector<std::uint32_t> touched;
  touched.reserve(n);

  for (std::size_t i = 0; i < n; ++i) {
    touched.clear();
    for (std::size_t p = a.row_ptr[i]; p < a.row_ptr[i + 1]; ++p) {
      const std::size_t k = a.col_idx[p];
      const double av = a.values[p];
      for (std::size_t q = b.row_ptr[k]; q < b.row_ptr[k + 1]; ++q) {
        const std::uint32_t j = b.col_idx[q];
        if (!seen[j]) {
          seen[j] = 1;
          touched.push_back(j);
        }
        acc[j] += av * b.values[q];
      }
    }
    // Past a few percent fill a linear sweep beats sorting the touched list.
    auto emit = [&](std::uint32_t j) {
      const double v = narrow(acc[j], c.width);
      if (v != 0.0) {
        c.col_idx.push_back(j);
        c.values.push_back(v);
      }
      acc[j] = 0.0;
      seen[j] = 0;
    };
    if (touched.size() * 16 > n) {
      for (std::uint32_t j = 0; j < n; ++j)
        if (seen[j]) emit(j);
    } else {
      std::sort(touched.begin(), touched.end());
      for (std::uint32_t j : touched) emit(j);
    }
    c.row_ptr[i + 1] = c.values.size();
  }
  return c;
}

}  // namespace apsp

#include "smr/matrices.hpp"

#include <string>

#include "smr/errors.hpp"

namespace smr {

namespace {

void check_size(int n) {
  if (n < 1 || n > kMaxIndices) {
    throw InvalidInputError("matrix size must be between 1 and 8, got " + std::to_string(n));
  }
}

void check_compatible(const Matrix& a, const Matrix& b, const char* op) {
  if (a.n() != b.n() || a.m() != b.m()) {
    throw InvalidInputError(std::string(op) + ": shape or modulus mismatch");
  }
}

}  // namespace

Matrix::Matrix(int n, RingCtx ctx) : n_(n), m_(ctx.m) { check_size(n); }

Matrix::Matrix(int n, RingCtx ctx, const std::vector<std::uint32_t>& entries) : Matrix(n, ctx) {
  if (entries.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw InvalidInputError("matrix entry list has wrong length");
  }
  for (std::size_t k = 0; k < entries.size(); ++k) e_[k] = entries[k] % m_;
}

Matrix Matrix::identity(int n, RingCtx ctx) {
  Matrix a(n, ctx);
  for (int i = 0; i < n; ++i) a.set(i, i, 1);
  return a;
}

Matrix Matrix::unit(int n, RingCtx ctx, int i, int j, std::uint32_t value) {
  Matrix a(n, ctx);
  if (i < 0 || i >= n || j < 0 || j >= n) {
    throw InvalidInputError("unit matrix position out of range");
  }
  a.set(i, j, value);
  return a;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
  check_compatible(a, b, "mat_add");
  Matrix c(a.n(), a.ctx());
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j) c.set(i, j, (a(i, j) + b(i, j)) % a.m());
  return c;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  check_compatible(a, b, "mat_mul");
  const int n = a.n();
  const std::uint64_t m = a.m();
  Matrix c(n, a.ctx());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::uint64_t acc = 0;
      for (int k = 0; k < n; ++k) acc += static_cast<std::uint64_t>(a(i, k)) * b(k, j);
      c.set(i, j, static_cast<std::uint32_t>(acc % m));
    }
  }
  return c;
}

Matrix mat_neg(const Matrix& a) {
  Matrix c(a.n(), a.ctx());
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j) c.set(i, j, a(i, j) == 0 ? 0 : a.m() - a(i, j));
  return c;
}

Matrix permutation_matrix(const Permutation& s, RingCtx ctx) {
  Matrix p(s.n(), ctx);
  for (int j = 0; j < s.n(); ++j) p.set(s(j), j, 1);
  return p;
}

bool is_permutation_matrix(const Matrix& p) {
  const int n = p.n();
  std::uint32_t seen_row = 0;
  for (int j = 0; j < n; ++j) {
    int ones = 0;
    int one_row = -1;
    for (int i = 0; i < n; ++i) {
      const std::uint32_t v = p(i, j);
      if (v == 1) {
        ++ones;
        one_row = i;
      } else if (v != 0) {
        return false;
      }
    }
    if (ones != 1 || ((seen_row >> one_row) & 1u)) return false;
    seen_row |= 1u << one_row;
  }
  return true;
}

Permutation permutation_of_matrix(const Matrix& p) {
  if (!is_permutation_matrix(p)) {
    throw InvalidInputError("matrix is not a permutation matrix");
  }
  std::vector<int> image(static_cast<std::size_t>(p.n()));
  for (int j = 0; j < p.n(); ++j)
    for (int i = 0; i < p.n(); ++i)
      if (p(i, j) == 1) image[static_cast<std::size_t>(j)] = i;
  return Permutation::from_image(image);
}

Matrix conjugate(const Matrix& p, const Matrix& a) {
  check_compatible(p, a, "conjugate");
  const Permutation s = permutation_of_matrix(p);
  const Matrix p_inv = permutation_matrix(s.inverse(), a.ctx());
  return mat_mul(mat_mul(p, a), p_inv);
}

std::uint64_t code_space_size(int n, RingCtx ctx) {
  check_size(n);
  std::uint64_t size = 1;
  for (int k = 0; k < n * n; ++k) {
    if (size > (std::uint64_t{1} << 63) / ctx.m) {
      throw ResourceCapError("matrix code space m^(n^2) exceeds 63 bits");
    }
    size *= ctx.m;
  }
  return size;
}

std::uint64_t encode_matrix(const Matrix& a) {
  code_space_size(a.n(), a.ctx());
  std::uint64_t code = 0;
  std::uint64_t weight = 1;
  for (int i = 0; i < a.n(); ++i) {
    for (int j = 0; j < a.n(); ++j) {
      code += weight * a(i, j);
      weight *= a.m();
    }
  }
  return code;
}

Matrix decode_matrix(std::uint64_t code, int n, RingCtx ctx) {
  const std::uint64_t space = code_space_size(n, ctx);
  if (code >= space) {
    throw InvalidInputError("matrix code out of range");
  }
  Matrix a(n, ctx);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      a.set(i, j, static_cast<std::uint32_t>(code % ctx.m));
      code /= ctx.m;
    }
  }
  return a;
}

}  // namespace smr

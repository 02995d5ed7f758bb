#ifndef SMR_MATRICES_HPP
#define SMR_MATRICES_HPP

// Dense n x n matrices over Z_m with ring operations, permutation matrices,
// conjugation, and a bit-exact integer encoding.
//
// The encoding is the canonical set-membership key: a matrix is the number
// sum A(i,j) * m^(i*n+j) over 0-based indices, i.e. row-major little-endian
// digits in base m.

#include <array>
#include <cstdint>
#include <vector>

#include "smr/relations.hpp"
#include "smr/rings.hpp"

namespace smr {

class Matrix {
 public:
  // Zero matrix.
  Matrix(int n, RingCtx ctx);
  // Entries row-major, each reduced mod m on construction.
  Matrix(int n, RingCtx ctx, const std::vector<std::uint32_t>& entries);

  static Matrix identity(int n, RingCtx ctx);
  // value * E_ij.
  static Matrix unit(int n, RingCtx ctx, int i, int j, std::uint32_t value = 1);

  int n() const { return n_; }
  std::uint32_t m() const { return m_; }
  RingCtx ctx() const { return RingCtx(m_); }
  std::uint32_t operator()(int i, int j) const { return e_[static_cast<std::size_t>(i * n_ + j)]; }
  void set(int i, int j, std::uint32_t value) { e_[static_cast<std::size_t>(i * n_ + j)] = value % m_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int n_;
  std::uint32_t m_;
  std::array<std::uint32_t, kMaxIndices * kMaxIndices> e_{};
};

Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_neg(const Matrix& a);

inline Matrix operator+(const Matrix& a, const Matrix& b) { return mat_add(a, b); }
inline Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }
inline Matrix operator-(const Matrix& a) { return mat_neg(a); }

// P(i,j) = 1 iff i = s(j); P maps basis column e_j to e_{s(j)}, and
// conjugation by P moves entry (i,j) to (s(i), s(j)).
Matrix permutation_matrix(const Permutation& s, RingCtx ctx);
bool is_permutation_matrix(const Matrix& p);
// The permutation underlying a permutation matrix.
Permutation permutation_of_matrix(const Matrix& p);

// P A P^-1 for a permutation matrix P.
Matrix conjugate(const Matrix& p, const Matrix& a);

// m^(n^2), the size of the code space. Throws ResourceCapError when the
// value does not fit in 63 bits.
std::uint64_t code_space_size(int n, RingCtx ctx);

std::uint64_t encode_matrix(const Matrix& a);
Matrix decode_matrix(std::uint64_t code, int n, RingCtx ctx);

}  // namespace smr

#endif  // SMR_MATRICES_HPP

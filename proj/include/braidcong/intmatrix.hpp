#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <initializer_list>
#include <vector>

namespace braidcong {

using BigInt = boost::multiprecision::cpp_int;
using IntVec = std::vector<BigInt>;

/// Square matrix over arbitrary-precision integers.
class IntMatrix {
public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), a_(std::size_t(n) * n) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);
  static IntMatrix identity(int n);

  int dim() const { return n_; }
  const BigInt& at(int i, int j) const { return a_[std::size_t(i) * n_ + j]; }
  BigInt& at(int i, int j) { return a_[std::size_t(i) * n_ + j]; }

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  IntMatrix transpose() const;
  IntVec apply(const IntVec& x) const;
  bool operator==(const IntMatrix& o) const = default;

  bool is_identity() const;
  /// M == I modulo m, entrywise.
  bool congruent_identity(unsigned m) const;

  BigInt det() const;  // fraction-free (Bareiss) elimination
  /// Exact inverse; requires |det| = 1.
  IntMatrix inverse_unimodular() const;

private:
  int n_ = 0;
  std::vector<BigInt> a_;
};

/// Saturated basis of {x in Z^n : R x = 0} for the given rows, obtained by
/// unimodular column reduction.  Every returned vector is primitive and the
/// set spans the full kernel lattice.
std::vector<IntVec> integer_kernel(const std::vector<IntVec>& rows, int n);

/// Congruence normal form of a skew-symmetric integer matrix:
/// P^T A P = diag([[0,d_1],[-d_1,0]], ..., [[0,d_k],[-d_k,0]], 0) with
/// P unimodular and every d_i > 0.  Columns of P beyond 2k span the radical.
struct SkewNormalForm {
  IntMatrix P;
  std::vector<BigInt> blocks;
  int rank = 0;  // 2k
};
SkewNormalForm skew_normal_form(const IntMatrix& A);

}  // namespace braidcong

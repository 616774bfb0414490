#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace braidcong {

using BigInt = boost::multiprecision::cpp_int;

/// Integer Laurent polynomial, stored as a dense coefficient run starting
/// at the lowest exponent.  The zero polynomial has an empty run; nonzero
/// polynomials have nonzero leading and trailing coefficients.
class LaurentPoly {
public:
  LaurentPoly() = default;
  LaurentPoly(long exponent, BigInt coeff);  // coeff * t^exponent
  static LaurentPoly constant(BigInt c) { return LaurentPoly(0, std::move(c)); }
  static LaurentPoly t(long e = 1) { return LaurentPoly(e, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  long min_exp() const { return min_exp_; }
  long max_exp() const { return min_exp_ + long(coeffs_.size()) - 1; }
  BigInt coeff(long e) const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& o) const = default;

  /// Ring homomorphism t -> -1.
  BigInt eval_minus_one() const;

  std::string str() const;  // e.g. "1-t", "t^-1+2*t^3"

private:
  void normalize();
  long min_exp_ = 0;
  std::vector<BigInt> coeffs_;
};

/// Square matrix of Laurent polynomials.
class LaurentMatrix {
public:
  LaurentMatrix() = default;
  explicit LaurentMatrix(int n) : n_(n), a_(std::size_t(n) * n) {}
  static LaurentMatrix identity(int n);

  int dim() const { return n_; }
  const LaurentPoly& at(int i, int j) const { return a_[std::size_t(i) * n_ + j]; }
  LaurentPoly& at(int i, int j) { return a_[std::size_t(i) * n_ + j]; }

  LaurentMatrix operator*(const LaurentMatrix& o) const;
  bool operator==(const LaurentMatrix& o) const = default;

private:
  int n_ = 0;
  std::vector<LaurentPoly> a_;
};

}  // namespace braidcong

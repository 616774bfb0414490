#include "braidcong/laurent.hpp"

#include <stdexcept>

namespace braidcong {

LaurentPoly::LaurentPoly(long exponent, BigInt coeff) {
  if (coeff != 0) {
    min_exp_ = exponent;
    coeffs_.push_back(std::move(coeff));
  }
}

BigInt LaurentPoly::coeff(long e) const {
  if (is_zero() || e < min_exp_ || e > max_exp()) return 0;
  return coeffs_[std::size_t(e - min_exp_)];
}

void LaurentPoly::normalize() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    min_exp_ = 0;
    return;
  }
  std::size_t tail = coeffs_.size();
  while (coeffs_[tail - 1] == 0) --tail;
  if (lead > 0) coeffs_.erase(coeffs_.begin(), coeffs_.begin() + long(lead));
  coeffs_.resize(tail - lead);
  min_exp_ += long(lead);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  long lo = std::min(min_exp_, o.min_exp_);
  long hi = std::max(max_exp(), o.max_exp());
  LaurentPoly r;
  r.min_exp_ = lo;
  r.coeffs_.assign(std::size_t(hi - lo + 1), 0);
  for (long e = min_exp_; e <= max_exp(); ++e)
    r.coeffs_[std::size_t(e - lo)] += coeffs_[std::size_t(e - min_exp_)];
  for (long e = o.min_exp_; e <= o.max_exp(); ++e)
    r.coeffs_[std::size_t(e - lo)] += o.coeffs_[std::size_t(e - o.min_exp_)];
  r.normalize();
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (is_zero() || o.is_zero()) return LaurentPoly();
  LaurentPoly r;
  r.min_exp_ = min_exp_ + o.min_exp_;
  r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
  r.normalize();
  return r;
}

BigInt LaurentPoly::eval_minus_one() const {
  BigInt v = 0;
  for (long e = min_exp_; e <= max_exp(); ++e) {
    const BigInt& c = coeffs_[std::size_t(e - min_exp_)];
    if (((e % 2) + 2) % 2 == 0)
      v += c;
    else
      v -= c;
  }
  return v;
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (long e = max_exp(); e >= min_exp(); --e) {
    BigInt c = coeffs_[std::size_t(e - min_exp_)];
    if (c == 0) continue;
    bool neg = c < 0;
    if (neg) c = -c;
    if (s.empty()) {
      if (neg) s += '-';
    } else {
      s += neg ? '-' : '+';
    }
    bool unit = c == 1;
    if (e == 0) {
      s += c.str();
    } else {
      if (!unit) {
        s += c.str();
        s += '*';
      }
      s += 't';
      if (e != 1) {
        s += '^';
        s += std::to_string(e);
      }
    }
  }
  return s;
}

LaurentMatrix LaurentMatrix::identity(int n) {
  LaurentMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = LaurentPoly::constant(1);
  return m;
}

LaurentMatrix LaurentMatrix::operator*(const LaurentMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("laurent matrix dimension mismatch");
  LaurentMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const LaurentPoly& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < n_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) = r.at(i, j) + a * o.at(k, j);
      }
    }
  return r;
}

}  // namespace braidcong

#include "braidcong/intmatrix.hpp"

#include <cstdlib>
#include <stdexcept>

namespace braidcong {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  n_ = int(rows.size());
  a_.resize(std::size_t(n_) * n_);
  int i = 0;
  for (const auto& row : rows) {
    if (int(row.size()) != n_) throw std::invalid_argument("ragged matrix literal");
    int j = 0;
    for (long long v : row) at(i, j++) = v;
    ++i;
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const BigInt& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < n_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix r(n_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
  return r;
}

IntVec IntMatrix::apply(const IntVec& x) const {
  if (int(x.size()) != n_) throw std::invalid_argument("vector length mismatch");
  IntVec y(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) y[i] += at(i, j) * x[j];
  return y;
}

bool IntMatrix::is_identity() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool IntMatrix::congruent_identity(unsigned m) const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if ((at(i, j) - (i == j ? 1 : 0)) % m != 0) return false;
  return true;
}

BigInt IntMatrix::det() const {
  if (n_ == 0) return 1;
  IntMatrix w = *this;
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n_ - 1; ++k) {
    if (w.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n_; ++i)
        if (w.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = 0; j < n_; ++j) std::swap(w.at(k, j), w.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n_; ++i)
      for (int j = k + 1; j < n_; ++j) {
        BigInt t = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
        w.at(i, j) = t / prev;  // exact by the Bareiss identity
      }
    prev = w.at(k, k);
  }
  return sign > 0 ? w.at(n_ - 1, n_ - 1) : -w.at(n_ - 1, n_ - 1);
}

IntMatrix IntMatrix::inverse_unimodular() const {
  BigInt d = det();
  if (d != 1 && d != -1)
    throw std::invalid_argument("inverse_unimodular requires |det| = 1");
  IntMatrix inv(n_);
  if (n_ == 1) {
    inv.at(0, 0) = d;
    return inv;
  }
  IntMatrix minor(n_ - 1);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      for (int r = 0, mr = 0; r < n_; ++r) {
        if (r == i) continue;
        for (int c = 0, mc = 0; c < n_; ++c) {
          if (c == j) continue;
          minor.at(mr, mc++) = at(r, c);
        }
        ++mr;
      }
      BigInt cof = minor.det();
      if ((i + j) % 2 != 0) cof = -cof;
      inv.at(j, i) = d > 0 ? cof : -cof;
    }
  return inv;
}

std::vector<IntVec> integer_kernel(const std::vector<IntVec>& rows, int n) {
  const int r = int(rows.size());
  // Column-reduce M = rows while mirroring every operation on U, so that
  // M_current = M_original * U stays true with U unimodular.
  std::vector<IntVec> m(r, IntVec(n));
  for (int i = 0; i < r; ++i) {
    if (int(rows[i].size()) != n) throw std::invalid_argument("ragged kernel input");
    m[i] = rows[i];
  }
  IntMatrix u = IntMatrix::identity(n);
  std::vector<bool> is_pivot(n, false);

  auto col_sub = [&](int dst, int src, const BigInt& q) {
    if (q == 0) return;
    for (int i = 0; i < r; ++i) m[i][dst] -= q * m[i][src];
    for (int i = 0; i < n; ++i) u.at(i, dst) -= q * u.at(i, src);
  };

  for (int row = 0; row < r; ++row) {
    for (;;) {
      int best = -1;
      for (int j = 0; j < n; ++j) {
        if (is_pivot[j] || m[row][j] == 0) continue;
        if (best < 0 || abs(m[row][j]) < abs(m[row][best])) best = j;
      }
      if (best < 0) break;
      bool lone = true;
      for (int j = 0; j < n; ++j) {
        if (j == best || is_pivot[j] || m[row][j] == 0) continue;
        col_sub(j, best, m[row][j] / m[row][best]);
        if (m[row][j] != 0) lone = false;
      }
      if (lone) {
        is_pivot[best] = true;
        break;
      }
    }
  }

  std::vector<IntVec> basis;
  for (int j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    IntVec v(n);
    for (int i = 0; i < n; ++i) v[i] = u.at(i, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

SkewNormalForm skew_normal_form(const IntMatrix& A) {
  const int n = A.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (A.at(i, j) != -A.at(j, i))
        throw std::invalid_argument("skew_normal_form needs a skew-symmetric matrix");

  IntMatrix b = A;
  IntMatrix p = IntMatrix::identity(n);

  // Every column operation is paired with the same row operation, so b stays
  // congruent to A via the accumulated p.
  auto swap_idx = [&](int x, int y) {
    if (x == y) return;
    for (int i = 0; i < n; ++i) std::swap(b.at(i, x), b.at(i, y));
    for (int j = 0; j < n; ++j) std::swap(b.at(x, j), b.at(y, j));
    for (int i = 0; i < n; ++i) std::swap(p.at(i, x), p.at(i, y));
  };
  auto add_idx = [&](int dst, int src, const BigInt& q) {
    if (q == 0) return;
    for (int i = 0; i < n; ++i) b.at(i, dst) += q * b.at(i, src);
    for (int j = 0; j < n; ++j) b.at(dst, j) += q * b.at(src, j);
    for (int i = 0; i < n; ++i) p.at(i, dst) += q * p.at(i, src);
  };
  auto negate_idx = [&](int x) {
    for (int i = 0; i < n; ++i) b.at(i, x) = -b.at(i, x);
    for (int j = 0; j < n; ++j) b.at(x, j) = -b.at(x, j);
    for (int i = 0; i < n; ++i) p.at(i, x) = -p.at(i, x);
  };

  SkewNormalForm out;
  int pos = 0;
  while (pos + 1 < n) {
    int bi = -1, bj = -1;
    for (int i = pos; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (b.at(i, j) != 0 &&
            (bi < 0 || abs(b.at(i, j)) < abs(b.at(bi, bj)))) {
          bi = i;
          bj = j;
        }
    if (bi < 0) break;
    swap_idx(bi, pos);
    swap_idx(bj == pos ? bi : bj, pos + 1);

    for (;;) {
      const BigInt piv = b.at(pos, pos + 1);
      for (int k = pos + 2; k < n; ++k) {
        add_idx(k, pos + 1, -(b.at(pos, k) / piv));
        add_idx(k, pos, b.at(pos + 1, k) / piv);
      }
      int small = -1;
      for (int k = pos + 2; k < n; ++k) {
        if (b.at(pos, k) != 0 &&
            (small < 0 || abs(b.at(pos, k)) < abs(b.at(pos, small))))
          small = k;
      }
      if (small >= 0) {
        swap_idx(small, pos + 1);
        continue;
      }
      for (int k = pos + 2; k < n; ++k) {
        if (b.at(pos + 1, k) != 0 &&
            (small < 0 || abs(b.at(pos + 1, k)) < abs(b.at(pos + 1, small))))
          small = k;
      }
      if (small >= 0) {
        swap_idx(small, pos);
        continue;
      }
      break;
    }
    if (b.at(pos, pos + 1) < 0) negate_idx(pos);
    out.blocks.push_back(b.at(pos, pos + 1));
    pos += 2;
  }
  out.rank = pos;
  out.P = std::move(p);
  return out;
}

}  // namespace braidcong

#include "braidcong/word.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>

namespace braidcong {

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(check_strands(strands)) {
  letters_.reserve(letters.size());
  for (int e : letters) push(e);
}

void BraidWord::push(int letter) {
  int idx = std::abs(letter);
  if (idx < 1 || idx > strands_ - 1)
    throw std::invalid_argument("letter index out of range for strand count");
  if (!letters_.empty() && letters_.back() == -letter) {
    letters_.pop_back();
  } else {
    letters_.push_back(letter);
  }
}

std::string BraidWord::str() const {
  std::string s = "n=" + std::to_string(strands_) + ";";
  for (int e : letters_) {
    s += ' ';
    s += std::to_string(e);
  }
  return s;
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images.resize(n);
  std::iota(p.images.begin(), p.images.end(), 1);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (images[i] != i + 1) return false;
  return true;
}

Permutation Permutation::then(const Permutation& next) const {
  Permutation r;
  r.images.resize(images.size());
  for (std::size_t i = 0; i < images.size(); ++i)
    r.images[i] = next.images[images[i] - 1];
  return r;
}

LinkingMatrix LinkingMatrix::zero(int n) {
  LinkingMatrix m;
  m.n = n;
  m.entries.assign(std::size_t(n) * n, 0);
  return m;
}

void LinkingMatrix::add(int i, int j, std::int64_t v) {
  entries[idx(i, j)] += v;
  entries[idx(j, i)] += v;
}

bool LinkingMatrix::all_even() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](std::int64_t v) { return v % 2 == 0; });
}

bool LinkingMatrix::all_zero() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](std::int64_t v) { return v == 0; });
}

LinkingMatrix LinkingMatrix::operator+(const LinkingMatrix& o) const {
  if (n != o.n) throw std::invalid_argument("linking matrix size mismatch");
  LinkingMatrix r = *this;
  for (std::size_t k = 0; k < entries.size(); ++k) r.entries[k] += o.entries[k];
  return r;
}

BraidWord compose(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands())
    throw std::invalid_argument("cannot compose braids on different strand counts");
  BraidWord r = u;
  for (int e : v.letters()) r.push(e);
  return r;
}

BraidWord invert(const BraidWord& w) {
  BraidWord r(w.strands());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) r.push(-*it);
  return r;
}

BraidWord conjugate(const BraidWord& w, const BraidWord& g) {
  return compose(compose(invert(g), w), g);
}

BraidWord power(const BraidWord& w, int k) {
  BraidWord base = k >= 0 ? w : invert(w);
  BraidWord r(w.strands());
  for (int i = 0; i < std::abs(k); ++i) r = compose(r, base);
  return r;
}

Permutation permutation_of(const BraidWord& w) {
  const int n = w.strands();
  // pos[s] = current position of the strand that started at s+1.
  std::vector<int> pos(n);
  std::iota(pos.begin(), pos.end(), 1);
  for (int e : w.letters()) {
    int i = std::abs(e);
    for (int s = 0; s < n; ++s) {
      if (pos[s] == i)
        pos[s] = i + 1;
      else if (pos[s] == i + 1)
        pos[s] = i;
    }
  }
  Permutation p;
  p.images = std::move(pos);
  return p;
}

bool is_pure(const BraidWord& w) { return permutation_of(w).is_identity(); }

BraidWord artin_generator(int i, int j, int n) {
  if (!(1 <= i && i < j && j <= n))
    throw std::invalid_argument("artin_generator needs 1 <= i < j <= n");
  BraidWord w(n);
  for (int k = j - 1; k >= i + 1; --k) w.push(-k);  // omega^-1
  w.push(i);
  w.push(i);
  for (int k = i + 1; k <= j - 1; ++k) w.push(k);  // omega
  return w;
}

LinkingMatrix linking_numbers(const BraidWord& w) {
  if (!is_pure(w))
    throw std::invalid_argument("linking_numbers is defined for pure braids");
  const int n = w.strands();
  // strand_at[p] = strand currently at position p+1.
  std::vector<int> strand_at(n);
  std::iota(strand_at.begin(), strand_at.end(), 1);
  LinkingMatrix lk = LinkingMatrix::zero(n);
  for (int e : w.letters()) {
    int i = std::abs(e);
    int a = strand_at[i - 1], b = strand_at[i];
    lk.add(a, b, e > 0 ? 1 : -1);
    std::swap(strand_at[i - 1], strand_at[i]);
  }
  // Each full twist of a strand pair contributes two crossings.
  for (auto& v : lk.entries) {
    if (v % 2 != 0) throw std::logic_error("odd crossing count for a pure braid");
    v /= 2;
  }
  return lk;
}

BraidWord delete_strand(const BraidWord& w, int i) {
  const int n = w.strands();
  if (i < 1 || i > n) throw std::invalid_argument("strand index out of range");
  if (n == 1) throw std::invalid_argument("cannot delete the only strand");
  BraidWord r(n - 1);
  int d = i;  // current position of the deleted strand
  for (int e : w.letters()) {
    int k = std::abs(e);
    if (k == d) {
      d = k + 1;
    } else if (k + 1 == d) {
      d = k;
    } else {
      r.push(e > 0 ? (k < d ? k : k - 1) : -(k < d ? k : k - 1));
    }
  }
  return r;
}

BraidWord push_generator(int j, int n) {
  if (j < 2 || j > n) throw std::invalid_argument("push_generator needs 2 <= j <= n");
  BraidWord w(n);
  for (int k = j - 1; k >= 1; --k) w.push(k);
  for (int k = 1; k <= j - 1; ++k) w.push(k);
  return w;
}

BraidWord commutator(const BraidWord& u, const BraidWord& v) {
  return compose(compose(u, v), compose(invert(u), invert(v)));
}

BraidWord brunnian_sample(int n, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("brunnian_sample needs n >= 3");
  BraidWord w = artin_generator(1, 2, n);
  for (int k = 3; k <= n; ++k) w = commutator(w, artin_generator(1, k, n));
  if (seed == 0) return w;
  BraidWord g = random_word(n, 2 * n, seed);
  return conjugate(w, g);
}

BraidWord round_twist(int k, int n) {
  if (k < 2 || k > n) throw std::invalid_argument("round_twist needs 2 <= k <= n");
  BraidWord w(n);
  for (int rep = 0; rep < k; ++rep)
    for (int i = 1; i <= k - 1; ++i) w.push(i);
  return w;
}

BraidWord random_word(int n, int length, std::uint64_t seed) {
  BraidWord w(n);
  if (n < 2) return w;
  // Letters drawn by modulo on the raw generator output so the stream is
  // identical across standard library implementations.  A letter that would
  // cancel the previous one is redrawn, keeping the word at full length.
  std::mt19937_64 gen(seed);
  const std::uint64_t span = 2 * std::uint64_t(n - 1);
  for (int i = 0; i < length; ++i) {
    for (;;) {
      std::uint64_t r = gen() % span;
      int idx = int(r % std::uint64_t(n - 1)) + 1;
      int letter = r < span / 2 ? idx : -idx;
      if (!w.letters().empty() && w.letters().back() == -letter) continue;
      w.push(letter);
      break;
    }
  }
  return w;
}

}  // namespace braidcong

#include "braidcong/freeword.hpp"

#include <cstdlib>

namespace braidcong {

FreeWord::FreeWord(std::vector<int> letters) {
  letters_.reserve(letters.size());
  for (int e : letters) push(e);
}

void FreeWord::push(int letter) {
  if (letter == 0) throw std::invalid_argument("free-group letter must be nonzero");
  if (!letters_.empty() && letters_.back() == -letter) {
    letters_.pop_back();
  } else {
    letters_.push_back(letter);
  }
}

void FreeWord::append(const FreeWord& o) {
  for (int e : o.letters_) push(e);
}

void FreeWord::append_inverse(const FreeWord& o) {
  for (auto it = o.letters_.rbegin(); it != o.letters_.rend(); ++it) push(-*it);
}

FreeWord FreeWord::inverse() const {
  FreeWord r;
  r.append_inverse(*this);
  return r;
}

FreeWord free_multiply(const FreeWord& a, const FreeWord& b) {
  FreeWord r = a;
  r.append(b);
  return r;
}

FreeWord free_commutator(const FreeWord& a, const FreeWord& b) {
  FreeWord r = a;
  r.append(b);
  r.append_inverse(a);
  r.append_inverse(b);
  return r;
}

FreeWord free_substitute(const std::vector<FreeWord>& images, const FreeWord& pattern) {
  FreeWord r;
  for (int e : pattern.letters()) {
    std::size_t k = std::size_t(std::abs(e)) - 1;
    if (k >= images.size()) throw std::invalid_argument("pattern letter out of range");
    if (e > 0)
      r.append(images[k]);
    else
      r.append_inverse(images[k]);
  }
  return r;
}

std::vector<FreeWord> artin_action(const BraidWord& w, std::size_t cap) {
  const int n = w.strands();
  std::vector<FreeWord> im;
  im.reserve(n);
  for (int k = 1; k <= n; ++k) im.push_back(FreeWord::generator(k));
  std::size_t total = std::size_t(n);
  for (int e : w.letters()) {
    int i = std::abs(e) - 1;  // acts on generators i, i+1 (0-based)
    FreeWord a = im[i], b = im[i + 1];
    if (e > 0) {
      // x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
      FreeWord t = a;
      t.append(b);
      t.append_inverse(a);
      im[i] = std::move(t);
      im[i + 1] = std::move(a);
    } else {
      // x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
      FreeWord t = b.inverse();
      t.append(a);
      t.append(b);
      im[i] = std::move(b);
      im[i + 1] = std::move(t);
    }
    total = 0;
    for (const auto& f : im) total += f.length();
    if (total > cap)
      throw resource_limit_error("free-group images exceeded the length cap");
  }
  return im;
}

bool is_trivial(const BraidWord& w, std::size_t cap) {
  if (w.empty()) return true;
  auto im = artin_action(w, cap);
  for (int k = 0; k < w.strands(); ++k) {
    const auto& f = im[std::size_t(k)];
    if (f.length() != 1 || f.letters()[0] != k + 1) return false;
  }
  return true;
}

bool braids_equal(const BraidWord& u, const BraidWord& v, std::size_t cap) {
  return is_trivial(compose(u, invert(v)), cap);
}

}  // namespace braidcong

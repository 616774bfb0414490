#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "braidcong/word.hpp"

namespace braidcong {

/// Raised when the free-group images inside the word-problem oracle exceed
/// the configured length budget.
class resource_limit_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Freely reduced word in abstract letters x_1..x_r; letter +k is x_k,
/// -k its inverse.
class FreeWord {
public:
  FreeWord() = default;
  explicit FreeWord(std::vector<int> letters);
  static FreeWord generator(int k) { return FreeWord({k}); }

  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  void push(int letter);
  void append(const FreeWord& o);
  void append_inverse(const FreeWord& o);
  FreeWord inverse() const;

  bool operator==(const FreeWord& o) const = default;

private:
  std::vector<int> letters_;
};

FreeWord free_multiply(const FreeWord& a, const FreeWord& b);
FreeWord free_commutator(const FreeWord& a, const FreeWord& b);
/// Substitutes images[k-1] for x_k (inverted for negative letters).
FreeWord free_substitute(const std::vector<FreeWord>& images, const FreeWord& pattern);

inline constexpr std::size_t kDefaultFreeLengthCap = 1'000'000;

/// Images of the free generators x_1..x_n under the automorphism induced by
/// a braid word.  sigma_i sends x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i.
/// Throws resource_limit_error if the images outgrow `cap` total letters.
std::vector<FreeWord> artin_action(const BraidWord& w,
                                   std::size_t cap = kDefaultFreeLengthCap);

/// Exact word-problem oracle: true iff w represents the identity of B_n.
bool is_trivial(const BraidWord& w, std::size_t cap = kDefaultFreeLengthCap);

/// Convenience: whether u and v represent the same braid.
bool braids_equal(const BraidWord& u, const BraidWord& v,
                  std::size_t cap = kDefaultFreeLengthCap);

}  // namespace braidcong

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidcong {

/// A word in the standard braid generators sigma_1 .. sigma_{n-1}.
///
/// Letters are nonzero signed integers: +i is sigma_i, -i is its inverse.
/// Words compose left to right.  Concatenation is always kept freely
/// reduced (adjacent +i -i pairs cancel); no other relations are applied.
class BraidWord {
public:
  BraidWord() : strands_(1) {}
  explicit BraidWord(int strands) : strands_(check_strands(strands)) {}
  BraidWord(int strands, std::vector<int> letters);

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// Appends one letter, cancelling against the current last letter.
  void push(int letter);

  bool operator==(const BraidWord& o) const = default;

  std::string str() const;  // "n=3; 1 -2 1"

private:
  static int check_strands(int n) {
    if (n < 1) throw std::invalid_argument("braid word needs at least one strand");
    return n;
  }
  int strands_;
  std::vector<int> letters_;
};

/// Bijection of {1..n}; images[i-1] is the final position of the strand
/// that starts at position i.
struct Permutation {
  std::vector<int> images;  // 1-based values

  static Permutation identity(int n);
  bool is_identity() const;
  int size() const { return static_cast<int>(images.size()); }
  Permutation then(const Permutation& next) const;  // this followed by next
  bool operator==(const Permutation& o) const = default;
};

/// Symmetric integer matrix of pairwise linking numbers, zero diagonal.
struct LinkingMatrix {
  int n = 0;
  std::vector<std::int64_t> entries;  // row-major n*n

  static LinkingMatrix zero(int n);
  std::int64_t at(int i, int j) const { return entries[idx(i, j)]; }
  void add(int i, int j, std::int64_t v);
  bool all_even() const;
  bool all_zero() const;
  LinkingMatrix operator+(const LinkingMatrix& o) const;
  bool operator==(const LinkingMatrix& o) const = default;

private:
  std::size_t idx(int i, int j) const { return std::size_t(i - 1) * n + (j - 1); }
};

BraidWord compose(const BraidWord& u, const BraidWord& v);
BraidWord invert(const BraidWord& w);
BraidWord conjugate(const BraidWord& w, const BraidWord& g);  // g^-1 w g
BraidWord power(const BraidWord& w, int k);

Permutation permutation_of(const BraidWord& w);
bool is_pure(const BraidWord& w);

/// Artin generator a_ij = omega^-1 sigma_i^2 omega with omega = sigma_{i+1} .. sigma_{j-1}.
BraidWord artin_generator(int i, int j, int n);

/// Pairwise linking numbers of a pure braid, normalized so a_ij has
/// lk(i,j) = 1: half the signed crossing count of each strand pair.
LinkingMatrix linking_numbers(const BraidWord& w);

/// Removes the strand that starts at position i, tracking it through the
/// word; accepts non-pure input.  For pure braids this is the forgetful
/// map PB_n -> PB_{n-1}.
BraidWord delete_strand(const BraidWord& w, int i);

/// Pushes marked point 1 around marked point j:
/// (sigma_{j-1} .. sigma_1)(sigma_1 .. sigma_{j-1}).
BraidWord push_generator(int j, int n);

/// A nontrivial braid all of whose single-strand deletions are trivial.
/// Built as an iterated commutator [..[[a_12,a_13],a_14]..,a_1n], conjugated
/// by a seed-dependent word (seed 0 gives the bare commutator).
BraidWord brunnian_sample(int n, std::uint64_t seed);

/// Full twist about the round curve enclosing marked points 1..k:
/// (sigma_1 .. sigma_{k-1})^k.
BraidWord round_twist(int k, int n);

BraidWord random_word(int n, int length, std::uint64_t seed);

/// [u, v] = u v u^-1 v^-1.
BraidWord commutator(const BraidWord& u, const BraidWord& v);

}  // namespace braidcong

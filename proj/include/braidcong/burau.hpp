#pragma once

#include "braidcong/intmatrix.hpp"
#include "braidcong/laurent.hpp"
#include "braidcong/word.hpp"

namespace braidcong {

/// Image of a single letter (+i or -i) as an n x n Laurent matrix.
LaurentMatrix burau_generator(int letter, int n);
/// Image of a single letter at t = -1.
IntMatrix integral_burau_generator(int letter, int n);

/// Unreduced Burau matrix of a word: product of generator images in word
/// order.  Fixes the column vector (1,...,1)^T.
LaurentMatrix burau_unreduced(const BraidWord& w);

/// Unreduced Burau matrix evaluated at t = -1.
IntMatrix integral_burau(const BraidWord& w);

/// Standard symplectic Gram matrix in basis order (x_1, y_1, ..., x_g, y_g):
/// pairing(x_k, y_k) = 1, all other basis pairings zero.
IntMatrix standard_symplectic_form(int dim);

/// Change of coordinates carrying the integral Burau representation into
/// the symplectic group.  `basis` columns are the new basis in Burau
/// coordinates; the invariant form becomes `form` (the standard J).  For
/// odd n the last column spans the invariant rank-1 radical that gets
/// dropped; for even n the last basis vector is the fixed vector
/// (1,...,1)^T, the distinguished y_{g+1}.
struct SympContext {
  int n = 0;
  int g = 0;
  bool even = false;
  int symp_dim = 0;  // 2g for odd n, 2g+2 for even n
  IntMatrix form;
  IntMatrix basis;
  IntMatrix basis_inv;
  IntVec radical;   // odd n only
  IntVec y_vector;  // even n only: (1,...,1)^T
  int y_index = -1; // even n only: position of y_{g+1} in the new basis
};

SympContext symplectize(int n);

/// Conjugated image of the word: a symp_dim x symp_dim integer matrix M
/// with M^T J M = J exactly; for even n it fixes the y_{g+1} basis vector.
IntMatrix rho_symplectic(const BraidWord& w, const SympContext& ctx);
/// Same, starting from an already computed unreduced matrix.
IntMatrix rho_symplectic(const IntMatrix& unreduced, const SympContext& ctx);

}  // namespace braidcong

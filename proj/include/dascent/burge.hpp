#pragma once

#include "dascent/word.hpp"

// Biwords, Burge words, the Burge transpose, the gamma map, and
// phi_d = gamma after hat_d.

namespace dascent {

struct Biword {
  Word top;
  Word bottom;
};

// Equal lengths, top a weakly increasing Cayley permutation, bottom a
// Cayley permutation, and every weak descent of the top is a weak descent
// of the bottom.
bool is_burge_word(const Biword& b);

// Flip every column, then sort columns by top entry ascending with bottoms
// under equal tops weakly decreasing. An involution on Burge words. Throws
// std::invalid_argument when b is not a Burge word.
Biword burge_transpose(const Biword& b);

// Bottom row of the transpose of (identity / c); the top row of that
// transpose is sort(c). Sends permutations to their inverses. Requires c to
// be a Cayley permutation.
Word gamma(const Word& c);

// gamma(hat(w, d)); requires w in A_d.
Word phi(const Word& w, Entry d);

// Ascent count of gamma(c) restricted to positions i..j, counting the first
// position of the factor as an ascent. Equals s_j - s_i + 1 for s = sort(c);
// that identity is asserted on every call (std::logic_error on mismatch).
// Requires c an RGF and 1 <= i <= j <= |c|.
Entry factor_ascent_count(const Word& c, Entry i, Entry j);

}  // namespace dascent

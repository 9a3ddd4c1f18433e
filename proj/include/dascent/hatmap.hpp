#pragma once

#include "dascent/word.hpp"

// The modification operator M, the d-hat map, its inverse on modified
// sequences, and pace-d block factoring of restricted growth functions.

namespace dascent {

// M(w, j): every entry strictly left of j that is >= w[j] is incremented.
// Throws std::invalid_argument on a pivot outside 1..|w|.
Word modify(const Word& w, Entry j);

struct HatResult {
  Word original;
  Word modified;   // entrywise >= original
  IndexSet pivots; // d-ascent set of the original, applied left to right
};

// Apply modify at every d-ascent position, in increasing order. The result
// is a Cayley permutation whose nub equals the pivot list. Requires w to be
// a d-ascent sequence.
HatResult hat(const Word& w, Entry d);

// Inverse of hat on its image. Pivots are nub(m) scanned right to left; at
// each pivot the entries strictly left of it and strictly above its current
// value drop by one. The result is validated by a hat round trip; failure
// throws std::invalid_argument.
Word unhat(const Word& m, Entry d);

// True when hat fixes w. Requires w in A_d; non-members are rejected, not
// reported false.
bool is_self_modified(const Word& w, Entry d);

// All distinct hat_d(w) over every d with w in A_d. Values of d beyond |w|
// repeat hat_{|w|}(w), so the scan stops there. Requires w to be an
// inversion sequence. Sorted lexicographically.
std::vector<Word> all_hats(const Word& w);

struct BlockFactoring {
  struct Block {
    Entry leader = 0;
    Word tail;
    bool pace_ok = false;  // leader then tail decreases in steps >= pace
  };
  std::vector<Block> blocks;  // leaders are 1..k in order
  Entry pace = 0;
  bool ok = false;  // every factor passes
};

// Decompose an RGF as 1 B_1 2 B_2 ... k B_k at its nub positions and test
// each factor for pace-d decrease. Requires classify(w).rgf.
BlockFactoring block_factoring(const Word& w, Entry d);

}  // namespace dascent

#pragma once

#include <functional>
#include <vector>

#include "dascent/word.hpp"

// Exhaustive generators (always in lexicographic order), compositions with
// the part-merging bijection behind the Fibonacci recurrence, and the
// large-d limit bijection onto restricted growth words with short blocks.

namespace dascent {

using WordVisitor = std::function<void(const Word&)>;

// Every d-ascent sequence of length n.
void for_each_d_ascent_sequence(Entry d, Entry n, const WordVisitor& visit);
std::vector<Word> d_ascent_sequences(Entry d, Entry n);

enum class SelfModMethod {
  filter,  // enumerate d-ascent sequences, keep the hat-fixed ones
  blocks,  // build block factorizations directly
};

// Every self-modified d-ascent sequence of length n.
void for_each_self_modified(Entry d, Entry n, SelfModMethod method,
                            const WordVisitor& visit);
std::vector<Word> self_modified_sequences(
    Entry d, Entry n, SelfModMethod method = SelfModMethod::blocks);

// Image of the hat map over all d-ascent sequences of length n. The map is
// injective, so the image count must equal the domain count (checked).
std::vector<Word> modified_sequences(Entry d, Entry n);

// Restricted growth words 1C_1 2C_2 ... mC_m of length n where each block
// tail C_i is empty or a single letter c_i <= i.
void for_each_r_word(Entry n, const WordVisitor& visit);
std::vector<Word> r_set(Entry n);

// Cayley permutations / restricted growth words / permutations of length n.
void for_each_cayley(Entry n, const WordVisitor& visit);
void for_each_rgf(Entry n, const WordVisitor& visit);
void for_each_permutation(Entry n, const WordVisitor& visit);

// --- compositions ---

using Composition = std::vector<Entry>;

// Compositions of n with parts drawn from {1, d}; d >= 1.
std::vector<Composition> compositions_1d(Entry d, Entry n);

// Compositions of n with every part >= d.
std::vector<Composition> compositions_min_part(Entry d, Entry n);

enum class KfBranch {
  dropped,  // last part was 1 and has been removed
  merged,   // each maximal run 1^a d became the single part a + d
};

struct KfImage {
  KfBranch branch;
  Composition image;
};

// The two-branch bijection (d >= 2) behind F_{d,n} = F_{d,n-1} + x F_{d,n-d}:
// a nonempty composition of n with parts in {1, d} either loses a trailing 1
// (keeping its number of d-parts) or, when it ends in d, merges each maximal
// run 1^a d into the part a + d, yielding a composition of n with all parts
// >= d whose length equals the original number of d-parts.
KfImage composition_bijection(Entry d, const Composition& mu);
Composition composition_bijection_inverse(Entry d, const KfImage& im);

// --- the limit bijection ---

// For d >= n, maps the self-modified d-ascent sequences of length n + d onto
// the r_set words of length n: blocks with leaders <= d are bare and get
// dropped, remaining leaders drop by d, and tails (at most one letter each)
// are carried over unchanged.
Word limit_bijection(Entry d, const Word& alpha);
Word limit_bijection_inverse(Entry d, const Word& rho);

}  // namespace dascent

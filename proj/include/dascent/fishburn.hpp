#pragma once

#include <array>
#include <optional>

#include "dascent/word.hpp"

// d-activity classification and the pattern checkers for permutations: the
// bivincular pattern f, the d-Fishburn pattern f_d, the barred pattern on
// 31524, the s_d pattern, and classical containment. Every find_* returns
// the lexicographically first witnessing position tuple.

namespace dascent {

using Permutation = Word;

struct ActivityTable {
  std::vector<Entry> active;    // values, ascending; 1 is always active
  std::vector<Entry> inactive;  // complement in 1..n, ascending
};

// Value k >= 2 is d-inactive iff k sits left of k-1 and at least d active
// values <= k lie strictly between their positions; 1 is active. Requires a
// permutation.
ActivityTable d_activity(const Permutation& p, Entry d);

// Occurrence of f: positions (i, i+1, k) with k > i+1 and
// p[k] + 1 = p[i] < p[i+1].
bool contains_f(const Permutation& p);
std::optional<std::array<Entry, 3>> find_f(const Permutation& p);

// f-occurrence whose first element is a d-inactive value.
bool contains_f_d(const Permutation& p, Entry d);
std::optional<std::array<Entry, 3>> find_f_d(const Permutation& p, Entry d);

// A 231-occurrence (i < j < k with p[k] < p[i] < p[j]) admitting no
// extension to 31524 by l in (i, j) and m > k with p[l] < p[k] and
// p[i] < p[m] < p[j]. The witness is the non-extendable occurrence.
bool contains_barred_31524(const Permutation& p);
std::optional<std::array<Entry, 3>> find_barred_31524(const Permutation& p);

// Positions i < j with p[i] = p[j] + 1 and at most d ascents in the factor
// p[i..j], the first factor position counting as one.
bool contains_s_d(const Permutation& p, Entry d);
std::optional<std::array<Entry, 2>> find_s_d(const Permutation& p, Entry d);

// Classical containment; both arguments are permutations.
bool avoids_classical(const Permutation& p, const Permutation& pattern);
std::optional<std::vector<Entry>> find_classical(const Permutation& p,
                                                 const Permutation& pattern);

}  // namespace dascent

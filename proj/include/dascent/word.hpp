#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

// Words over the positive integers with 1-based positions in every public
// contract. The empty word is valid input unless an operation says otherwise.

namespace dascent {

using Entry = std::int64_t;
using Word = std::vector<Entry>;

// Strictly increasing 1-based positions.
using IndexSet = std::vector<Entry>;

// Position i is a d-ascent when i = 1 or w[i] > w[i-1] - d.
IndexSet d_ascent_set(const Word& w, Entry d);
Entry d_ascent_count(const Word& w, Entry d);

// Every entry is bounded by 1 + (number of d-ascents in the prefix before
// it); forces w[1] = 1 for nonempty words.
bool is_d_ascent_sequence(const Word& w, Entry d);

// max over entries, 0 for the empty word.
Entry max_entry(const Word& w);

// Positions of the leftmost occurrence of each value present, ascending.
IndexSet nub(const Word& w);

// Positions carrying a strict left-to-right maximum.
IndexSet lrmax_set(const Word& w);

// Positions i >= 2 with w[i] <= w[i-1].
IndexSet weak_descent_set(const Word& w);

struct WordClass {
  bool inversion_sequence;  // w[i] <= i
  bool cayley;              // image is exactly {1..max}
  bool rgf;                 // w[i] <= 1 + max of the prefix before i
  bool weakly_increasing;
  bool permutation;
};

// Flags all five families at once; throws std::invalid_argument if any
// entry is < 1 (the Word invariant).
WordClass classify(const Word& w);

// True when no subsequence of w realizes p with matching strict order and
// matching ties. p must be a Cayley permutation.
bool avoids_word_pattern(const Word& w, const Word& p);

// Digit string when all entries are single digits, comma-separated
// otherwise; the empty word is "". A one-entry word with entry >= 10 gets a
// trailing comma so that the comma form stays self-identifying.
std::string word_to_string(const Word& w);

// Inverse of word_to_string; a comma anywhere selects the comma form.
// Throws std::invalid_argument naming the violated rule.
Word parse_word(std::string_view s);

}  // namespace dascent

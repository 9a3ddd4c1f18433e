#pragma once

#include <string>

#include "dascent/word.hpp"

namespace dascent {

// CSV rendering of the two count tables. which = 1: hat-fixed counts by
// length n (from the series at q = 1); which = 2: shifted-row counts (length
// n + d). Header is "d\n,0,1,...,max_n" — the corner cell names the row and
// column variables — followed by one row per d. Comma delimiter, no quoting,
// every row newline-terminated.
std::string table_csv(int which, Entry max_d, Entry max_n);

}  // namespace dascent

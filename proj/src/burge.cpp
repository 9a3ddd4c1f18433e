#include "dascent/burge.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "dascent/hatmap.hpp"

namespace dascent {

bool is_burge_word(const Biword& b) {
  if (b.top.size() != b.bottom.size()) return false;
  const WordClass top = classify(b.top);
  if (!top.cayley || !top.weakly_increasing) return false;
  if (!classify(b.bottom).cayley) return false;
  const IndexSet dt = weak_descent_set(b.top);
  const IndexSet db = weak_descent_set(b.bottom);
  return std::includes(db.begin(), db.end(), dt.begin(), dt.end());
}

Biword burge_transpose(const Biword& b) {
  if (!is_burge_word(b)) throw std::invalid_argument("burge_transpose: not a Burge word");
  std::vector<std::pair<Entry, Entry>> cols;
  cols.reserve(b.top.size());
  for (std::size_t i = 0; i < b.top.size(); ++i) cols.emplace_back(b.bottom[i], b.top[i]);
  std::sort(cols.begin(), cols.end(), [](const auto& a, const auto& c) {
    return a.first != c.first ? a.first < c.first : a.second > c.second;
  });
  Biword r;
  r.top.reserve(cols.size());
  r.bottom.reserve(cols.size());
  for (const auto& [t, bo] : cols) {
    r.top.push_back(t);
    r.bottom.push_back(bo);
  }
  return r;
}

Word gamma(const Word& c) {
  if (!classify(c).cayley) throw std::invalid_argument("gamma: not a Cayley permutation");
  Biword b;
  b.top.resize(c.size());
  std::iota(b.top.begin(), b.top.end(), Entry{1});
  b.bottom = c;
  return burge_transpose(b).bottom;
}

Word phi(const Word& w, Entry d) { return gamma(hat(w, d).modified); }

Entry factor_ascent_count(const Word& c, Entry i, Entry j) {
  if (!classify(c).rgf) throw std::invalid_argument("factor_ascent_count: not an RGF");
  if (i < 1 || i > j || j > Entry(c.size()))
    throw std::invalid_argument("factor_ascent_count: need 1 <= i <= j <= |c|");
  const Word p = gamma(c);
  Entry count = 1;
  for (Entry t = i + 1; t <= j; ++t)
    if (p[std::size_t(t) - 1] > p[std::size_t(t) - 2]) ++count;
  Word s = c;
  std::sort(s.begin(), s.end());
  const Entry expected = s[std::size_t(j) - 1] - s[std::size_t(i) - 1] + 1;
  if (count != expected)
    throw std::logic_error("factor_ascent_count: ascent identity violated");
  return count;
}

}  // namespace dascent

#include "dascent/word.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace dascent {

IndexSet d_ascent_set(const Word& w, Entry d) {
  IndexSet out;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (i == 0 || w[i] > w[i - 1] - d) out.push_back(Entry(i) + 1);
  return out;
}

Entry d_ascent_count(const Word& w, Entry d) {
  Entry c = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (i == 0 || w[i] > w[i - 1] - d) ++c;
  return c;
}

bool is_d_ascent_sequence(const Word& w, Entry d) {
  Entry asc = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] < 1 || w[i] > 1 + asc) return false;
    if (i == 0 || w[i] > w[i - 1] - d) ++asc;
  }
  return true;
}

Entry max_entry(const Word& w) {
  Entry m = 0;
  for (Entry a : w) m = std::max(m, a);
  return m;
}

IndexSet nub(const Word& w) {
  std::unordered_map<Entry, Entry> first;
  for (std::size_t i = 0; i < w.size(); ++i) first.emplace(w[i], Entry(i) + 1);
  IndexSet out;
  out.reserve(first.size());
  for (const auto& [value, pos] : first) out.push_back(pos);
  std::sort(out.begin(), out.end());
  return out;
}

IndexSet lrmax_set(const Word& w) {
  IndexSet out;
  Entry m = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] > m) {
      out.push_back(Entry(i) + 1);
      m = w[i];
    }
  return out;
}

IndexSet weak_descent_set(const Word& w) {
  IndexSet out;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] <= w[i - 1]) out.push_back(Entry(i) + 1);
  return out;
}

WordClass classify(const Word& w) {
  bool inv = true, weakly = true, rgf = true;
  Entry run_max = 0;
  std::unordered_set<Entry> seen;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] < 1) throw std::invalid_argument("classify: word entries must be >= 1");
    if (w[i] > Entry(i) + 1) inv = false;
    if (i > 0 && w[i] < w[i - 1]) weakly = false;
    if (w[i] > run_max + 1) rgf = false;
    run_max = std::max(run_max, w[i]);
    seen.insert(w[i]);
  }
  const bool cayley = Entry(seen.size()) == run_max;
  return WordClass{inv, cayley, rgf, weakly, cayley && seen.size() == w.size()};
}

namespace {

bool occurs_from(const Word& w, const Word& p, std::size_t start, Word& chosen) {
  const std::size_t k = chosen.size();
  if (k == p.size()) return true;
  for (std::size_t i = start; i + (p.size() - k) <= w.size(); ++i) {
    bool consistent = true;
    for (std::size_t a = 0; a < k && consistent; ++a)
      consistent = (chosen[a] < w[i]) == (p[a] < p[k]) &&
                   (chosen[a] == w[i]) == (p[a] == p[k]);
    if (!consistent) continue;
    chosen.push_back(w[i]);
    if (occurs_from(w, p, i + 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

bool avoids_word_pattern(const Word& w, const Word& p) {
  if (!classify(p).cayley)
    throw std::invalid_argument("avoids_word_pattern: pattern must be a Cayley permutation");
  Word chosen;
  chosen.reserve(p.size());
  return !occurs_from(w, p, 0, chosen);
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "";
  bool digits = true;
  for (Entry a : w)
    if (a < 1 || a > 9) digits = false;
  std::string s;
  if (digits) {
    for (Entry a : w) s += char('0' + a);
    return s;
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  if (w.size() == 1) s += ',';  // keep the comma form self-identifying
  return s;
}

namespace {

Entry parse_entry(std::string_view tok) {
  Entry v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw std::invalid_argument("parse_word: entries must be positive integers");
  if (v < 1) throw std::invalid_argument("parse_word: word entries must be >= 1");
  return v;
}

}  // namespace

Word parse_word(std::string_view s) {
  Word w;
  if (s.empty()) return w;
  if (s.find(',') == std::string_view::npos) {
    for (char ch : s) {
      if (ch < '1' || ch > '9')
        throw std::invalid_argument(
            "parse_word: digit form allows digits 1..9 only; use the comma form for larger entries");
      w.push_back(ch - '0');
    }
    return w;
  }
  std::size_t pos = 0;
  bool trailing_empty = false;
  while (pos <= s.size()) {
    const std::size_t next = s.find(',', pos);
    const std::string_view tok = s.substr(pos, next == std::string_view::npos ? s.size() - pos : next - pos);
    if (tok.empty()) {
      if (next == std::string_view::npos && !w.empty() && !trailing_empty) {
        trailing_empty = true;  // one trailing comma is allowed
        break;
      }
      throw std::invalid_argument("parse_word: empty entry in comma form");
    }
    w.push_back(parse_entry(tok));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return w;
}

}  // namespace dascent

#include "dascent/hatmap.hpp"

#include <algorithm>
#include <stdexcept>

namespace dascent {

Word modify(const Word& w, Entry j) {
  if (j < 1 || j > Entry(w.size())) throw std::invalid_argument("modify: invalid pivot");
  Word m = w;
  const Entry v = m[std::size_t(j) - 1];
  for (Entry i = 0; i < j - 1; ++i)
    if (m[std::size_t(i)] >= v) ++m[std::size_t(i)];
  return m;
}

HatResult hat(const Word& w, Entry d) {
  if (!is_d_ascent_sequence(w, d))
    throw std::invalid_argument("hat: not a d-ascent sequence");
  HatResult r{w, w, d_ascent_set(w, d)};
  for (Entry j : r.pivots) {
    const Entry v = r.modified[std::size_t(j) - 1];
    for (Entry i = 0; i < j - 1; ++i)
      if (r.modified[std::size_t(i)] >= v) ++r.modified[std::size_t(i)];
  }
  return r;
}

Word unhat(const Word& m, Entry d) {
  Word w = m;
  const IndexSet pivots = nub(m);
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    const Entry j = *it;
    const Entry v = w[std::size_t(j) - 1];
    for (Entry i = 0; i < j - 1; ++i)
      if (w[std::size_t(i)] > v) --w[std::size_t(i)];
  }
  if (!is_d_ascent_sequence(w, d) || hat(w, d).modified != m)
    throw std::invalid_argument("unhat: not a modified d-ascent sequence");
  return w;
}

bool is_self_modified(const Word& w, Entry d) {
  if (!is_d_ascent_sequence(w, d))
    throw std::invalid_argument("is_self_modified: not a d-ascent sequence");
  return hat(w, d).modified == w;
}

std::vector<Word> all_hats(const Word& w) {
  if (!classify(w).inversion_sequence)
    throw std::invalid_argument("all_hats: not an inversion sequence");
  std::vector<Word> out;
  for (Entry d = 0; d <= Entry(w.size()); ++d) {
    if (!is_d_ascent_sequence(w, d)) continue;
    out.push_back(hat(w, d).modified);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BlockFactoring block_factoring(const Word& w, Entry d) {
  if (!classify(w).rgf) throw std::invalid_argument("block_factoring: not an RGF");
  BlockFactoring r;
  r.pace = d;
  r.ok = true;
  std::size_t i = 0;
  while (i < w.size()) {
    BlockFactoring::Block b;
    b.leader = w[i++];  // an RGF introduces leaders 1..k in order
    while (i < w.size() && w[i] <= b.leader) b.tail.push_back(w[i++]);
    b.pace_ok = true;
    Entry prev = b.leader;
    for (Entry t : b.tail) {
      if (prev - t < d) b.pace_ok = false;
      prev = t;
    }
    if (!b.pace_ok) r.ok = false;
    r.blocks.push_back(std::move(b));
  }
  return r;
}

}  // namespace dascent

#include "dascent/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "dascent/hatmap.hpp"

namespace dascent {

namespace {

void require_nonnegative_length(Entry n, const char* who) {
  if (n < 0) throw std::invalid_argument(std::string(who) + ": n must be >= 0");
}

// Shared DFS over d-ascent sequences. `asc` is the d-ascent count of the
// current prefix, so 1 + asc bounds the next letter.
void ascseq_dfs(Entry d, Entry n, Word& w, Entry asc, const WordVisitor& visit) {
  if (static_cast<Entry>(w.size()) == n) {
    visit(w);
    return;
  }
  for (Entry v = 1; v <= 1 + asc; ++v) {
    bool is_ascent = w.empty() || v > w.back() - d;
    w.push_back(v);
    ascseq_dfs(d, n, w, asc + (is_ascent ? 1 : 0), visit);
    w.pop_back();
  }
}

// DFS over block factorizations 1B_1 2B_2 ... kB_k where every block
// decreases with pace d. Tail letters (1 <= v <= last - d) sort before the
// next leader k + 1, so emission stays lexicographic. The d-ascent letter
// bound is re-checked even though the block shape already implies it.
void blocks_dfs(Entry d, Entry n, Word& w, Entry k, Entry asc,
                bool in_block, const WordVisitor& visit) {
  if (static_cast<Entry>(w.size()) == n) {
    visit(w);
    return;
  }
  if (in_block) {
    // Tail letters are never d-ascents, so asc is unchanged below.
    for (Entry v = 1; v <= w.back() - d; ++v) {
      if (v > 1 + asc) break;
      w.push_back(v);
      blocks_dfs(d, n, w, k, asc, true, visit);
      w.pop_back();
    }
  }
  Entry leader = k + 1;
  if (leader <= 1 + asc) {
    bool is_ascent = w.empty() || leader > w.back() - d;
    w.push_back(leader);
    blocks_dfs(d, n, w, leader, asc + (is_ascent ? 1 : 0), true, visit);
    w.pop_back();
  }
}

void r_word_dfs(Entry n, Word& w, Entry k, bool last_is_leader,
                const WordVisitor& visit) {
  if (static_cast<Entry>(w.size()) == n) {
    visit(w);
    return;
  }
  if (last_is_leader) {
    for (Entry c = 1; c <= k; ++c) {
      w.push_back(c);
      r_word_dfs(n, w, k, false, visit);
      w.pop_back();
    }
  }
  w.push_back(k + 1);
  r_word_dfs(n, w, k + 1, true, visit);
  w.pop_back();
}

void cayley_dfs(Entry n, Word& w, Entry maxv, std::uint64_t used,
                const WordVisitor& visit) {
  if (static_cast<Entry>(w.size()) == n) {
    visit(w);
    return;
  }
  Entry remaining = n - static_cast<Entry>(w.size());
  for (Entry v = 1; v <= n; ++v) {
    Entry new_max = std::max(maxv, v);
    std::uint64_t new_used = used | (std::uint64_t{1} << v);
    std::uint64_t want = ((std::uint64_t{2} << new_max) - 2);  // bits 1..new_max
    Entry missing = static_cast<Entry>(std::popcount(want & ~new_used));
    if (missing > remaining - 1) continue;
    w.push_back(v);
    cayley_dfs(n, w, new_max, new_used, visit);
    w.pop_back();
  }
}

void rgf_dfs(Entry n, Word& w, Entry maxv, const WordVisitor& visit) {
  if (static_cast<Entry>(w.size()) == n) {
    visit(w);
    return;
  }
  for (Entry v = 1; v <= maxv + 1; ++v) {
    w.push_back(v);
    rgf_dfs(n, w, std::max(maxv, v), visit);
    w.pop_back();
  }
}

void compositions_1d_dfs(Entry d, Entry n, Composition& c,
                         std::vector<Composition>& out) {
  if (n == 0) {
    out.push_back(c);
    return;
  }
  c.push_back(1);
  compositions_1d_dfs(d, n - 1, c, out);
  c.pop_back();
  if (d != 1 && d <= n) {
    c.push_back(d);
    compositions_1d_dfs(d, n - d, c, out);
    c.pop_back();
  }
}

void compositions_min_part_dfs(Entry min_part, Entry n, Composition& c,
                               std::vector<Composition>& out) {
  if (n == 0) {
    out.push_back(c);
    return;
  }
  for (Entry p = min_part; p <= n; ++p) {
    c.push_back(p);
    compositions_min_part_dfs(min_part, n - p, c, out);
    c.pop_back();
  }
}

}  // namespace

void for_each_d_ascent_sequence(Entry d, Entry n, const WordVisitor& visit) {
  require_nonnegative_length(n, "for_each_d_ascent_sequence");
  if (d < 0) throw std::invalid_argument("for_each_d_ascent_sequence: d must be >= 0");
  Word w;
  w.reserve(static_cast<std::size_t>(n));
  ascseq_dfs(d, n, w, 0, visit);
}

std::vector<Word> d_ascent_sequences(Entry d, Entry n) {
  std::vector<Word> out;
  for_each_d_ascent_sequence(d, n, [&](const Word& w) { out.push_back(w); });
  return out;
}

void for_each_self_modified(Entry d, Entry n, SelfModMethod method,
                            const WordVisitor& visit) {
  require_nonnegative_length(n, "for_each_self_modified");
  if (d < 0) throw std::invalid_argument("for_each_self_modified: d must be >= 0");
  if (method == SelfModMethod::filter) {
    for_each_d_ascent_sequence(d, n, [&](const Word& w) {
      if (is_self_modified(w, d)) visit(w);
    });
    return;
  }
  Word w;
  w.reserve(static_cast<std::size_t>(n));
  blocks_dfs(d, n, w, 0, 0, false, visit);
}

std::vector<Word> self_modified_sequences(Entry d, Entry n, SelfModMethod method) {
  std::vector<Word> out;
  for_each_self_modified(d, n, method, [&](const Word& w) { out.push_back(w); });
  return out;
}

std::vector<Word> modified_sequences(Entry d, Entry n) {
  std::vector<Word> out;
  for_each_d_ascent_sequence(d, n, [&](const Word& w) {
    out.push_back(hat(w, d).modified);
  });
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw std::logic_error("modified_sequences: hat map not injective");
  return out;
}

void for_each_r_word(Entry n, const WordVisitor& visit) {
  require_nonnegative_length(n, "for_each_r_word");
  Word w;
  w.reserve(static_cast<std::size_t>(n));
  r_word_dfs(n, w, 0, false, visit);
}

std::vector<Word> r_set(Entry n) {
  std::vector<Word> out;
  for_each_r_word(n, [&](const Word& w) { out.push_back(w); });
  return out;
}

void for_each_cayley(Entry n, const WordVisitor& visit) {
  require_nonnegative_length(n, "for_each_cayley");
  if (n > 62) throw std::invalid_argument("for_each_cayley: n too large");
  Word w;
  w.reserve(static_cast<std::size_t>(n));
  cayley_dfs(n, w, 0, 0, visit);
}

void for_each_rgf(Entry n, const WordVisitor& visit) {
  require_nonnegative_length(n, "for_each_rgf");
  Word w;
  w.reserve(static_cast<std::size_t>(n));
  rgf_dfs(n, w, 0, visit);
}

void for_each_permutation(Entry n, const WordVisitor& visit) {
  require_nonnegative_length(n, "for_each_permutation");
  Word w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), Entry{1});
  do {
    visit(w);
  } while (std::next_permutation(w.begin(), w.end()));
}

std::vector<Composition> compositions_1d(Entry d, Entry n) {
  if (d < 1) throw std::invalid_argument("compositions_1d: d must be >= 1");
  require_nonnegative_length(n, "compositions_1d");
  std::vector<Composition> out;
  Composition c;
  compositions_1d_dfs(d, n, c, out);
  return out;
}

std::vector<Composition> compositions_min_part(Entry d, Entry n) {
  require_nonnegative_length(n, "compositions_min_part");
  std::vector<Composition> out;
  Composition c;
  compositions_min_part_dfs(std::max<Entry>(d, 1), n, c, out);
  return out;
}

KfImage composition_bijection(Entry d, const Composition& mu) {
  if (d < 2) throw std::invalid_argument("composition_bijection: d must be >= 2");
  if (mu.empty())
    throw std::invalid_argument("composition_bijection: composition must be nonempty");
  for (Entry p : mu)
    if (p != 1 && p != d)
      throw std::invalid_argument("composition_bijection: parts must lie in {1, d}");
  if (mu.back() == 1) {
    Composition image(mu.begin(), mu.end() - 1);
    return {KfBranch::dropped, std::move(image)};
  }
  Composition image;
  Entry ones = 0;
  for (Entry p : mu) {
    if (p == 1) {
      ++ones;
    } else {
      image.push_back(ones + d);
      ones = 0;
    }
  }
  return {KfBranch::merged, std::move(image)};
}

Composition composition_bijection_inverse(Entry d, const KfImage& im) {
  if (d < 2)
    throw std::invalid_argument("composition_bijection_inverse: d must be >= 2");
  Composition mu;
  if (im.branch == KfBranch::dropped) {
    for (Entry p : im.image)
      if (p != 1 && p != d)
        throw std::invalid_argument(
            "composition_bijection_inverse: dropped image needs parts in {1, d}");
    mu = im.image;
    mu.push_back(1);
    return mu;
  }
  if (im.image.empty())
    throw std::invalid_argument(
        "composition_bijection_inverse: merged image must be nonempty");
  for (Entry p : im.image) {
    if (p < d)
      throw std::invalid_argument(
          "composition_bijection_inverse: merged image needs parts >= d");
    mu.insert(mu.end(), static_cast<std::size_t>(p - d), Entry{1});
    mu.push_back(d);
  }
  return mu;
}

Word limit_bijection(Entry d, const Word& alpha) {
  Entry total = static_cast<Entry>(alpha.size());
  Entry n = total - d;
  if (d < 0 || n < 0 || d < n)
    throw std::invalid_argument("limit_bijection: requires |alpha| = n + d with d >= n");
  if (!is_self_modified(alpha, d))
    throw std::invalid_argument("limit_bijection: not a self-modified sequence");
  BlockFactoring bf = block_factoring(alpha, d);
  if (!bf.ok) throw std::logic_error("limit_bijection: block factoring failed");
  Word out;
  out.reserve(static_cast<std::size_t>(n));
  for (const BlockFactoring::Block& b : bf.blocks) {
    if (b.leader <= d) {
      if (!b.tail.empty())
        throw std::logic_error("limit_bijection: small leader carries a tail");
      continue;
    }
    if (b.tail.size() > 1)
      throw std::logic_error("limit_bijection: tail longer than one letter");
    out.push_back(b.leader - d);
    out.insert(out.end(), b.tail.begin(), b.tail.end());
  }
  return out;
}

Word limit_bijection_inverse(Entry d, const Word& rho) {
  Entry n = static_cast<Entry>(rho.size());
  if (d < 0 || d < n)
    throw std::invalid_argument("limit_bijection_inverse: requires d >= |rho|");
  BlockFactoring bf = block_factoring(rho, 0);
  if (!bf.ok)
    throw std::invalid_argument("limit_bijection_inverse: input is not a growth word");
  for (std::size_t i = 0; i < bf.blocks.size(); ++i) {
    const BlockFactoring::Block& b = bf.blocks[i];
    if (b.tail.size() > 1 ||
        (b.tail.size() == 1 && b.tail[0] > static_cast<Entry>(i) + 1))
      throw std::invalid_argument(
          "limit_bijection_inverse: block tails must be empty or one letter <= index");
  }
  Word alpha;
  alpha.reserve(static_cast<std::size_t>(n + d));
  for (Entry i = 1; i <= d; ++i) alpha.push_back(i);
  for (const BlockFactoring::Block& b : bf.blocks) {
    alpha.push_back(b.leader + d);
    alpha.insert(alpha.end(), b.tail.begin(), b.tail.end());
  }
  if (!is_self_modified(alpha, d))
    throw std::logic_error("limit_bijection_inverse: image is not self-modified");
  return alpha;
}

}  // namespace dascent

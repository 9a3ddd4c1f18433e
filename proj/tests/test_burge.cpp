#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "dascent/burge.hpp"
#include "dascent/enumerate.hpp"

using namespace dascent;

namespace {

Word identity(Entry n) {
  Word w;
  for (Entry i = 1; i <= n; ++i) w.push_back(i);
  return w;
}

}  // namespace

TEST_CASE("burge word recognition") {
  CHECK(is_burge_word({identity(9), {1, 4, 1, 2, 5, 2, 2, 3, 2}}));
  CHECK(is_burge_word({{1, 1, 2, 2, 2, 2, 3, 4, 5}, {3, 1, 9, 7, 6, 4, 8, 2, 5}}));
  CHECK_FALSE(is_burge_word({{2, 1}, {1, 2}}));        // top not sorted
  CHECK_FALSE(is_burge_word({{1, 2}, {1, 3}}));        // bottom not Cayley
  CHECK_FALSE(is_burge_word({{1, 2}, {1, 2, 2}}));     // length mismatch
  CHECK_FALSE(is_burge_word({{1, 1}, {1, 2}}));        // descent not matched
}

TEST_CASE("transpose fixtures") {
  Biword t = burge_transpose({identity(9), {1, 4, 1, 2, 5, 2, 2, 3, 2}});
  CHECK(t.top == Word{1, 1, 2, 2, 2, 2, 3, 4, 5});
  CHECK(t.bottom == Word{3, 1, 9, 7, 6, 4, 8, 2, 5});

  t = burge_transpose({identity(7), {3, 1, 2, 4, 2, 5, 3}});
  CHECK(t.top == Word{1, 2, 2, 3, 3, 4, 5});
  CHECK(t.bottom == Word{2, 5, 3, 7, 1, 4, 6});

  CHECK_THROWS_AS(burge_transpose({{2, 1}, {1, 2}}), std::invalid_argument);
}

TEST_CASE("transpose is an involution") {
  // top = id against every Cayley bottom
  for (Entry n = 0; n <= 8; ++n)
    for_each_cayley(n, [&](const Word& c) {
      Biword b{identity(n), c};
      Biword t = burge_transpose(b);
      CHECK(is_burge_word(t));
      Biword back = burge_transpose(t);
      CHECK(back.top == b.top);
      CHECK(back.bottom == b.bottom);
    });

  // every Burge word of length <= 5
  for (Entry n = 0; n <= 5; ++n)
    for_each_cayley(n, [&](const Word& top) {
      if (!classify(top).weakly_increasing) return;
      for_each_cayley(n, [&](const Word& bottom) {
        Biword b{top, bottom};
        if (!is_burge_word(b)) return;
        Biword t = burge_transpose(b);
        CHECK(is_burge_word(t));
        Biword back = burge_transpose(t);
        CHECK(back.top == top);
        CHECK(back.bottom == bottom);
      });
    });
}

TEST_CASE("gamma fixtures") {
  CHECK(gamma({3, 1, 2, 4, 2, 5, 3}) == Word{2, 5, 3, 7, 1, 4, 6});
  CHECK(gamma({2, 3, 1}) == Word{3, 1, 2});
  CHECK(gamma({1, 1, 1}) == Word{3, 2, 1});
  CHECK(gamma(Word{}) == Word{});
  CHECK_THROWS_AS(gamma({1, 3}), std::invalid_argument);
}

TEST_CASE("gamma inverts permutations") {
  for (Entry n = 0; n <= 7; ++n)
    for_each_permutation(n, [&](const Word& p) {
      Word inv(p.size());
      for (std::size_t i = 0; i < p.size(); ++i)
        inv[static_cast<std::size_t>(p[i]) - 1] = Entry(i) + 1;
      CHECK(gamma(p) == inv);
    });
}

TEST_CASE("gamma reaches every permutation") {
  for (Entry n = 0; n <= 6; ++n) {
    std::set<Word> images;
    for_each_cayley(n, [&](const Word& c) { images.insert(gamma(c)); });
    std::size_t perms = 0;
    for_each_permutation(n, [&](const Word& p) {
      ++perms;
      CHECK(images.count(p) == 1);
    });
    // gamma lands in permutations only
    for (const Word& img : images) CHECK(classify(img).permutation);
    CHECK(images.size() >= perms);
  }
}

TEST_CASE("ascents of gamma on growth words") {
  // For an RGF, the ascent set of gamma(c) is position 1 together with the
  // successor of the last slot of each non-maximal value in sort(c).
  for (Entry n = 1; n <= 8; ++n)
    for_each_rgf(n, [&](const Word& c) {
      Word s = c;
      std::sort(s.begin(), s.end());
      IndexSet expected{1};
      for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i] != s[i + 1]) expected.push_back(Entry(i) + 2);
      CHECK(d_ascent_set(gamma(c), 0) == expected);
    });
}

TEST_CASE("factor ascent counts") {
  CHECK(factor_ascent_count({1, 2, 1}, 1, 3) == 2);
  CHECK(factor_ascent_count({1, 2, 1}, 1, 1) == 1);
  CHECK(factor_ascent_count({1, 2, 2, 3, 3, 4, 5}, 1, 7) == 5);
  CHECK(factor_ascent_count({1, 2, 2, 3, 3, 4, 5}, 2, 4) == 2);
  CHECK_THROWS_AS(factor_ascent_count({2, 1}, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(factor_ascent_count({3, 1, 2, 4, 2, 5, 3}, 1, 7),
                  std::invalid_argument);
  CHECK_THROWS_AS(factor_ascent_count({1, 2, 1}, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(factor_ascent_count({1, 2, 1}, 0, 2), std::invalid_argument);
}

TEST_CASE("phi fixtures") {
  CHECK(phi({1, 1, 2, 4, 2, 5, 3}, 2) == Word{2, 5, 3, 7, 1, 4, 6});
  CHECK(phi({1, 2, 1}, 0) == Word{3, 1, 2});
  CHECK(phi({}, 0) == Word{});
  CHECK_THROWS_AS(phi({1, 2, 4}, 0), std::invalid_argument);
}

TEST_CASE("phi is injective into permutations") {
  for (Entry d = 0; d <= 2; ++d)
    for (Entry n = 0; n <= 7; ++n) {
      std::set<Word> images;
      std::size_t domain = 0;
      for_each_d_ascent_sequence(d, n, [&](const Word& w) {
        ++domain;
        Word p = phi(w, d);
        CHECK(classify(p).permutation);
        images.insert(p);
      });
      CHECK(images.size() == domain);
    }
}

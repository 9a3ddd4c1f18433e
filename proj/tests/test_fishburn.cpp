#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "dascent/enumerate.hpp"
#include "dascent/fishburn.hpp"

using namespace dascent;

TEST_CASE("activity classification") {
  ActivityTable t = d_activity({2, 5, 7, 3, 1, 6, 4}, 2);
  CHECK(t.active == std::vector<Entry>{1, 2, 3, 4, 6});
  CHECK(t.inactive == std::vector<Entry>{5, 7});

  t = d_activity({2, 1}, 0);
  CHECK(t.active == std::vector<Entry>{1});
  CHECK(t.inactive == std::vector<Entry>{2});

  // at d = 1 the same descent no longer deactivates 2: no active value sits
  // strictly between the two positions
  t = d_activity({2, 1}, 1);
  CHECK(t.active == std::vector<Entry>{1, 2});
  CHECK(t.inactive.empty());

  CHECK(d_activity({}, 0).active.empty());
  CHECK_THROWS_AS(d_activity({1, 1}, 0), std::invalid_argument);
}

TEST_CASE("everything is 0-inactive except ascents-to-predecessor") {
  // at d = 0 a value k >= 2 is inactive exactly when it precedes k - 1
  for_each_permutation(6, [&](const Word& p) {
    std::vector<Entry> pos(p.size() + 1);
    for (std::size_t i = 0; i < p.size(); ++i)
      pos[static_cast<std::size_t>(p[i])] = Entry(i) + 1;
    ActivityTable t = d_activity(p, 0);
    for (Entry k = 2; k <= Entry(p.size()); ++k) {
      bool precedes = pos[static_cast<std::size_t>(k)] <
                      pos[static_cast<std::size_t>(k) - 1];
      bool inactive = std::find(t.inactive.begin(), t.inactive.end(), k) !=
                      t.inactive.end();
      CHECK(inactive == precedes);
    }
  });
}

TEST_CASE("pattern f") {
  CHECK(contains_f({2, 5, 7, 3, 1, 6, 4}));
  CHECK(find_f({2, 5, 7, 3, 1, 6, 4}) == std::array<Entry, 3>{1, 2, 5});
  CHECK_FALSE(contains_f({3, 1, 2}));
  CHECK_FALSE(contains_f({}));
  CHECK_FALSE(find_f({1, 2, 3}).has_value());
}

TEST_CASE("pattern f_d") {
  CHECK(contains_f_d({2, 5, 7, 3, 1, 6, 4}, 2));
  CHECK(find_f_d({2, 5, 7, 3, 1, 6, 4}, 2) == std::array<Entry, 3>{2, 3, 7});
  // f_d occurrences are f occurrences
  for (Entry d = 0; d <= 2; ++d)
    for_each_permutation(6, [&](const Word& p) {
      if (contains_f_d(p, d)) CHECK(contains_f(p));
    });
}

TEST_CASE("barred pattern") {
  CHECK(contains_barred_31524({2, 3, 1}));
  CHECK(find_barred_31524({2, 3, 1}) == std::array<Entry, 3>{1, 2, 3});
  CHECK_FALSE(contains_barred_31524({3, 1, 5, 2, 4}));  // the 231 extends
  CHECK_FALSE(contains_barred_31524({1, 2, 3, 4}));
  // without a 231 there is nothing to bar
  for_each_permutation(6, [&](const Word& p) {
    if (avoids_classical(p, {2, 3, 1})) CHECK_FALSE(contains_barred_31524(p));
  });
}

TEST_CASE("pattern s_d") {
  CHECK_FALSE(contains_s_d({2, 1}, 0));
  CHECK(contains_s_d({2, 1}, 1));
  CHECK(find_s_d({2, 1}, 1) == std::array<Entry, 2>{1, 2});
  // the first factor position always counts as an ascent, so s_0 is empty
  for_each_permutation(6, [&](const Word& p) {
    CHECK_FALSE(contains_s_d(p, 0));
  });
  // s_d occurrences persist as d grows
  for_each_permutation(6, [&](const Word& p) {
    for (Entry d = 1; d <= 3; ++d)
      if (contains_s_d(p, d)) CHECK(contains_s_d(p, d + 1));
  });
}

TEST_CASE("classical containment") {
  CHECK_FALSE(avoids_classical({3, 1, 2}, {2, 1}));
  CHECK(find_classical({3, 1, 2}, {2, 1}) == std::vector<Entry>{1, 2});
  CHECK(avoids_classical({1, 2, 3}, {2, 1}));
  CHECK(avoids_classical({3, 1, 2}, {2, 1, 3}));
  CHECK(avoids_classical({}, {1}));

  std::size_t av213 = 0;
  for_each_permutation(3, [&](const Word& p) {
    if (avoids_classical(p, {2, 1, 3})) ++av213;
  });
  CHECK(av213 == 5);
}

TEST_CASE("witnesses come lexicographically first") {
  for_each_permutation(6, [&](const Word& p) {
    if (auto t = find_f(p)) {
      auto [i, j, k] = *t;
      CHECK(j == i + 1);
      CHECK(k > j);
      CHECK(p[static_cast<std::size_t>(k) - 1] + 1 ==
            p[static_cast<std::size_t>(i) - 1]);
      CHECK(p[static_cast<std::size_t>(i) - 1] <
            p[static_cast<std::size_t>(j) - 1]);
      // nothing strictly smaller works
      for (Entry i2 = 1; i2 < i; ++i2)
        for (Entry k2 = i2 + 2; k2 <= Entry(p.size()); ++k2) {
          bool occ = p[static_cast<std::size_t>(k2) - 1] + 1 ==
                         p[static_cast<std::size_t>(i2) - 1] &&
                     p[static_cast<std::size_t>(i2) - 1] <
                         p[static_cast<std::size_t>(i2)];
          CHECK_FALSE(occ);
        }
    }
  });
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "dascent/word.hpp"

using namespace dascent;

TEST_CASE("d-ascent sets") {
  CHECK(d_ascent_set({1, 2, 1, 2, 4, 2, 2, 3, 2}, 0) == IndexSet{1, 2, 4, 5, 8});
  CHECK(d_ascent_set({1, 1, 2, 4, 2, 5, 3}, 2) == IndexSet{1, 2, 3, 4, 6});
  CHECK(d_ascent_set({1, 1, 3, 1, 2}, 1) == IndexSet{1, 2, 3, 5});
  CHECK(d_ascent_set({}, 0).empty());
  CHECK(d_ascent_count({1, 2, 1, 2, 4, 2, 2, 3, 2}, 0) == 5);

  // raising d only adds ascents
  const Word w{1, 2, 1, 3, 1, 1, 4};
  for (Entry d = 0; d < 4; ++d) {
    IndexSet lo = d_ascent_set(w, d), hi = d_ascent_set(w, d + 1);
    CHECK(std::includes(hi.begin(), hi.end(), lo.begin(), lo.end()));
  }
}

TEST_CASE("d-ascent sequence membership") {
  CHECK(is_d_ascent_sequence({}, 0));
  CHECK(is_d_ascent_sequence({1, 2, 1, 2, 4, 2, 2, 3, 2}, 0));
  CHECK(is_d_ascent_sequence({1, 1, 2, 4, 2, 5, 3}, 2));
  CHECK_FALSE(is_d_ascent_sequence({1, 1, 2, 4, 2, 5, 3}, 0));
  CHECK_FALSE(is_d_ascent_sequence({2, 1}, 5));  // first entry must be 1
  CHECK_FALSE(is_d_ascent_sequence({1, 0}, 0));  // entries must be positive
}

TEST_CASE("nub and left-right maxima") {
  CHECK(nub({1, 1, 3, 1, 2}) == IndexSet{1, 3, 5});
  CHECK(lrmax_set({1, 1, 3, 1, 2}) == IndexSet{1, 3});
  CHECK(nub({1, 2, 2, 3, 3, 4, 5}) == IndexSet{1, 2, 4, 6, 7});
  CHECK(nub({}).empty());
  CHECK(max_entry({1, 4, 1, 2, 5, 2, 2, 3, 2}) == 5);
  CHECK(max_entry({}) == 0);
}

TEST_CASE("weak descents") {
  CHECK(weak_descent_set({3, 1, 4, 1, 2}) == IndexSet{2, 4});
  CHECK(weak_descent_set({1, 1, 2}) == IndexSet{2});
  CHECK(weak_descent_set({1, 2, 3}).empty());
}

TEST_CASE("classify") {
  WordClass c = classify({1, 1, 3, 1, 2});
  CHECK(c.inversion_sequence);
  CHECK(c.cayley);
  CHECK_FALSE(c.rgf);  // 3 appears before 2
  CHECK_FALSE(c.weakly_increasing);
  CHECK_FALSE(c.permutation);

  c = classify({1, 2, 2, 3, 3, 4, 5});
  CHECK(c.inversion_sequence);
  CHECK(c.cayley);
  CHECK(c.rgf);
  CHECK(c.weakly_increasing);
  CHECK_FALSE(c.permutation);

  c = classify({2, 5, 3, 7, 1, 4, 6});
  CHECK(c.permutation);
  CHECK(c.cayley);
  CHECK_FALSE(c.inversion_sequence);
  CHECK_FALSE(c.rgf);

  c = classify({});
  CHECK(c.inversion_sequence);
  CHECK(c.cayley);
  CHECK(c.rgf);
  CHECK(c.weakly_increasing);
  CHECK(c.permutation);

  c = classify({1, 4, 2});  // skips 3, so not Cayley
  CHECK_FALSE(c.cayley);
  CHECK_FALSE(c.rgf);

  CHECK_THROWS_AS(classify({1, 0, 2}), std::invalid_argument);
}

TEST_CASE("word pattern containment") {
  CHECK_FALSE(avoids_word_pattern({1, 1, 3, 1, 2}, {1, 1, 2}));
  CHECK(avoids_word_pattern({1, 1, 3, 1, 2}, {1, 2, 3, 4}));
  CHECK(avoids_word_pattern({1, 2, 3}, {2, 1}));
  CHECK_FALSE(avoids_word_pattern({1, 3, 2}, {2, 1}));
  // ties must match: 11 is not an occurrence of 12
  CHECK(avoids_word_pattern({1, 1}, {1, 2}));
  CHECK_FALSE(avoids_word_pattern({1, 1}, {1, 1}));
  CHECK_THROWS_AS(avoids_word_pattern({1, 2}, {1, 3}), std::invalid_argument);
}

TEST_CASE("serialization") {
  CHECK(word_to_string({}) == "");
  CHECK(word_to_string({1, 2, 1}) == "121");
  CHECK(word_to_string({1, 2, 10}) == "1,2,10");
  CHECK(word_to_string({25}) == "25,");
  CHECK(word_to_string({9}) == "9");

  CHECK(parse_word("") == Word{});
  CHECK(parse_word("121") == Word{1, 2, 1});
  CHECK(parse_word("1,2,10") == Word{1, 2, 10});
  CHECK(parse_word("25,") == Word{25});
  CHECK(parse_word("3,1,4") == Word{3, 1, 4});

  // round trips through both forms
  for (const Word& w : {Word{}, Word{1, 2, 1}, Word{25}, Word{10, 1, 12}})
    CHECK(parse_word(word_to_string(w)) == w);

  CHECK_THROWS_AS(parse_word("10"), std::invalid_argument);   // digit form caps at 9
  CHECK_THROWS_AS(parse_word("1,,2"), std::invalid_argument); // interior empty entry
  CHECK_THROWS_AS(parse_word(","), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("1,0"), std::invalid_argument);  // entries start at 1
  CHECK_THROWS_AS(parse_word("1,x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("1,2,,"), std::invalid_argument);
}

#include "dascent/fishburn.hpp"

#include <stdexcept>

namespace dascent {

namespace {

void require_permutation(const Permutation& p, const char* who) {
  if (!classify(p).permutation)
    throw std::invalid_argument(std::string(who) + ": not a permutation");
}

}  // namespace

ActivityTable d_activity(const Permutation& p, Entry d) {
  require_permutation(p, "d_activity");
  const Entry n = Entry(p.size());
  std::vector<Entry> pos(std::size_t(n) + 1);
  for (Entry i = 0; i < n; ++i) pos[std::size_t(p[std::size_t(i)])] = i + 1;
  std::vector<char> active(std::size_t(n) + 1, 1);
  for (Entry k = 2; k <= n; ++k) {
    const Entry a = pos[std::size_t(k)], b = pos[std::size_t(k) - 1];
    if (a > b) continue;  // k right of k-1: active
    Entry between = 0;
    for (Entry v = 1; v <= k; ++v)
      if (active[std::size_t(v)] && pos[std::size_t(v)] > a && pos[std::size_t(v)] < b) ++between;
    if (between >= d) active[std::size_t(k)] = 0;
  }
  ActivityTable t;
  for (Entry v = 1; v <= n; ++v)
    (active[std::size_t(v)] ? t.active : t.inactive).push_back(v);
  return t;
}

namespace {

// Shared scan for f and f_d; inactive_only restricts to first elements whose
// value is d-inactive per the flags vector.
std::optional<std::array<Entry, 3>> scan_f(const Permutation& p,
                                           const std::vector<char>* value_allowed) {
  const Entry n = Entry(p.size());
  for (Entry i = 1; i + 1 < n; ++i) {
    const Entry pi = p[std::size_t(i) - 1];
    if (pi >= p[std::size_t(i)]) continue;
    if (value_allowed && !(*value_allowed)[std::size_t(pi)]) continue;
    for (Entry k = i + 2; k <= n; ++k)
      if (p[std::size_t(k) - 1] + 1 == pi) return std::array<Entry, 3>{i, i + 1, k};
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::array<Entry, 3>> find_f(const Permutation& p) {
  require_permutation(p, "contains_f");
  return scan_f(p, nullptr);
}

bool contains_f(const Permutation& p) { return find_f(p).has_value(); }

std::optional<std::array<Entry, 3>> find_f_d(const Permutation& p, Entry d) {
  const ActivityTable t = d_activity(p, d);
  std::vector<char> inactive(p.size() + 1, 0);
  for (Entry v : t.inactive) inactive[std::size_t(v)] = 1;
  return scan_f(p, &inactive);
}

bool contains_f_d(const Permutation& p, Entry d) { return find_f_d(p, d).has_value(); }

std::optional<std::array<Entry, 3>> find_barred_31524(const Permutation& p) {
  require_permutation(p, "contains_barred_31524");
  const Entry n = Entry(p.size());
  auto at = [&](Entry t) { return p[std::size_t(t) - 1]; };
  for (Entry i = 1; i <= n; ++i)
    for (Entry j = i + 1; j <= n; ++j) {
      if (at(i) >= at(j)) continue;
      for (Entry k = j + 1; k <= n; ++k) {
        if (at(k) >= at(i)) continue;  // need p[k] < p[i] < p[j]
        bool extends = false;
        for (Entry l = i + 1; l < j && !extends; ++l) {
          if (at(l) >= at(k)) continue;
          for (Entry m = k + 1; m <= n; ++m)
            if (at(m) > at(i) && at(m) < at(j)) {
              extends = true;
              break;
            }
        }
        if (!extends) return std::array<Entry, 3>{i, j, k};
      }
    }
  return std::nullopt;
}

bool contains_barred_31524(const Permutation& p) { return find_barred_31524(p).has_value(); }

std::optional<std::array<Entry, 2>> find_s_d(const Permutation& p, Entry d) {
  require_permutation(p, "contains_s_d");
  const Entry n = Entry(p.size());
  auto at = [&](Entry t) { return p[std::size_t(t) - 1]; };
  for (Entry i = 1; i <= n; ++i)
    for (Entry j = i + 1; j <= n; ++j) {
      if (at(i) != at(j) + 1) continue;
      Entry asc = 1;  // first position of the factor
      for (Entry t = i + 1; t <= j; ++t)
        if (at(t) > at(t - 1)) ++asc;
      if (asc <= d) return std::array<Entry, 2>{i, j};
    }
  return std::nullopt;
}

bool contains_s_d(const Permutation& p, Entry d) { return find_s_d(p, d).has_value(); }

namespace {

bool classical_from(const Permutation& p, const Permutation& t, std::size_t start,
                    std::vector<Entry>& chosen) {
  const std::size_t k = chosen.size();
  if (k == t.size()) return true;
  for (std::size_t i = start; i + (t.size() - k) <= p.size(); ++i) {
    bool consistent = true;
    for (std::size_t a = 0; a < k && consistent; ++a)
      consistent = (p[std::size_t(chosen[a]) - 1] < p[i]) == (t[a] < t[k]);
    if (!consistent) continue;
    chosen.push_back(Entry(i) + 1);
    if (classical_from(p, t, i + 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<Entry>> find_classical(const Permutation& p,
                                                 const Permutation& pattern) {
  require_permutation(p, "avoids_classical");
  require_permutation(pattern, "avoids_classical (pattern)");
  std::vector<Entry> chosen;
  chosen.reserve(pattern.size());
  if (classical_from(p, pattern, 0, chosen)) return chosen;
  return std::nullopt;
}

bool avoids_classical(const Permutation& p, const Permutation& pattern) {
  return !find_classical(p, pattern).has_value();
}

}  // namespace dascent

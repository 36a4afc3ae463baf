#ifndef SUBSEQ_TESTS_ORACLE_HPP
#define SUBSEQ_TESTS_ORACLE_HPP

// Slow, string-based reference implementations. Nothing here calls into the
// library, so agreement is evidence rather than tautology.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

inline std::string word_of(std::uint64_t mask, int n) {
  std::string w(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if ((mask >> (n - 1 - i)) & 1u) w[static_cast<std::size_t>(i)] = '1';
  }
  return w;
}

// Walks every index subset of size |p| with a selection vector.
inline std::uint64_t count(const std::string& p, const std::string& w) {
  const std::size_t l = p.size(), n = w.size();
  if (l > n) return 0;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(l), true);
  std::uint64_t total = 0;
  do {
    std::string spelled;
    for (std::size_t i = 0; i < n; ++i) {
      if (pick[i]) spelled.push_back(w[i]);
    }
    if (spelled == p) ++total;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return total;
}

// Occurrence counts via the length-l subsequence table, used where subset
// enumeration would be too slow.
inline std::uint64_t count_dp(const std::string& p, const std::string& w) {
  std::vector<std::uint64_t> table(p.size() + 1, 0);
  table[0] = 1;
  for (char ch : w) {
    for (std::size_t j = p.size(); j >= 1; --j) {
      if (p[j - 1] == ch) table[j] += table[j - 1];
    }
  }
  return table[p.size()];
}

inline std::vector<std::uint64_t> spectrum(const std::string& p, int n, bool subsets = false) {
  std::map<std::uint64_t, std::uint64_t> hist;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    const std::string w = word_of(m, n);
    ++hist[subsets ? count(p, w) : count_dp(p, w)];
  }
  std::vector<std::uint64_t> out(hist.rbegin()->first + 1, 0);
  for (auto [k, c] : hist) out[k] = c;
  return out;
}

inline std::string reversed(std::string s) {
  std::reverse(s.begin(), s.end());
  return s;
}

inline std::string complemented(std::string s) {
  for (char& c : s) c = c == '0' ? '1' : '0';
  return s;
}

inline std::set<std::string> trivial_class(const std::string& p) {
  return {p, reversed(p), complemented(p), reversed(complemented(p))};
}

// All trivial classes of length-l patterns, each as a sorted member list.
inline std::set<std::vector<std::string>> trivial_partition(int l) {
  std::set<std::vector<std::string>> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << l); ++m) {
    const auto cls = trivial_class(word_of(m, l));
    out.insert(std::vector<std::string>(cls.begin(), cls.end()));
  }
  return out;
}

inline std::vector<int> run_sizes(const std::string& p) {
  std::vector<int> sizes;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i == 0 || p[i] != p[i - 1]) sizes.push_back(0);
    ++sizes.back();
  }
  return sizes;
}

inline std::vector<std::string> all_words(int l) {
  std::vector<std::string> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << l); ++m) out.push_back(word_of(m, l));
  return out;
}

inline std::uint64_t choose(int a, int b) {
  if (a < 0 || b < 0 || b > a) return 0;
  std::uint64_t r = 1;
  for (int t = 1; t <= b; ++t) r = r * static_cast<std::uint64_t>(a - b + t) / static_cast<std::uint64_t>(t);
  return r;
}

} // namespace oracle

#endif // SUBSEQ_TESTS_ORACLE_HPP

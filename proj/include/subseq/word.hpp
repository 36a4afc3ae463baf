#ifndef SUBSEQ_WORD_HPP
#define SUBSEQ_WORD_HPP

#include "subseq/big_count.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace subseq {

// A finite word over {0,1}, bit-packed. Letter 0 is the leftmost character of
// the text form.
class BinaryWord {
public:
  BinaryWord() = default;

  // Builds a word of length n from the low n bits of `bits`, most significant
  // first, so that numeric order of masks matches lexicographic order.
  static BinaryWord from_mask(std::uint64_t bits, std::size_t n);
  static BinaryWord from_letters(const std::vector<int>& letters);

  std::size_t size() const noexcept { return length_; }
  bool empty() const noexcept { return length_ == 0; }

  int operator[](std::size_t i) const noexcept {
    return static_cast<int>((blocks_[i / 64] >> (i % 64)) & 1u);
  }
  void set(std::size_t i, int letter);
  void push_back(int letter);

  // Inverse of from_mask. Requires size() <= 64.
  std::uint64_t to_mask() const;

  std::string str() const;

  friend bool operator==(const BinaryWord& a, const BinaryWord& b) {
    return a.length_ == b.length_ && a.blocks_ == b.blocks_;
  }
  // Shorter words first, then lexicographic with '0' < '1'.
  friend std::strong_ordering operator<=>(const BinaryWord& a, const BinaryWord& b);

private:
  std::vector<std::uint64_t> blocks_;
  std::size_t length_ = 0;
};

BinaryWord parse_word(std::string_view text);
inline std::string format_word(const BinaryWord& w) { return w.str(); }

enum class Transform { Reverse, Complement, ReverseComplement };

BinaryWord transform(const BinaryWord& w, Transform kind);
BinaryWord reverse(const BinaryWord& w);
BinaryWord complement(const BinaryWord& w);

struct Run {
  int symbol = 0;
  int size = 0;
  friend bool operator==(const Run&, const Run&) = default;
};

struct RunProfile {
  std::vector<Run> runs;
  int r = 0;
  std::map<int, int> run_size_counts;
  // Size-2 (size-3) runs that are the first or the last run. A single run is
  // counted once.
  int r2b = 0;
  int r3b = 0;
  // One for each of p and reverse(p) whose first two runs have sizes 1 and 2.
  int r12b = 0;

  int runs_of_size(int size) const;
  int max_run_size() const;
  bool alternating() const { return runs_of_size(1) == r; }
  // Run sizes in ascending order. B_{l+1,p} determines this multiset.
  std::vector<int> size_multiset() const;
  std::vector<int> sizes() const;
};

RunProfile run_decompose(const BinaryWord& p);
BinaryWord from_runs(const std::vector<Run>& runs);

// Number of index tuples i_1 < ... < i_l with w at those indices equal to p.
// Prefix-count recurrence, O(|w| * |p|); runs on 64-bit counters and redoes
// the scan with BigCount only if a counter would overflow.
BigCount count_occurrences(const BinaryWord& p, const BinaryWord& w);

} // namespace subseq

#endif // SUBSEQ_WORD_HPP

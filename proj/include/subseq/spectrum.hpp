#ifndef SUBSEQ_SPECTRUM_HPP
#define SUBSEQ_SPECTRUM_HPP

#include "subseq/big_count.hpp"
#include "subseq/word.hpp"

#include <functional>
#include <string>
#include <vector>

namespace subseq {

// Caps exhaustive enumeration over {0,1}^n.
struct EnumerationBudget {
  static constexpr int kDefaultMaxN = 22;
  // Above this length the caller must also set allow_large.
  static constexpr int kGuardedAbove = 30;
  // 64-bit masks and counters; c_p(w) <= 2^n stays representable.
  static constexpr int kHardLimit = 62;

  int max_n = kDefaultMaxN;
  bool allow_large = false;

  void check(int n) const;
};

// The distribution k -> B_{n,p}(k): how many words of length n contain p
// exactly k times. Trailing zeros are trimmed, so counts.back() is nonzero
// and counts.size() - 1 is the maximum occurrence count M_{n,p}.
struct Spectrum {
  BinaryWord pattern;
  int n = 0;
  std::vector<BigCount> counts;

  BigCount at(std::size_t k) const { return k < counts.size() ? counts[k] : BigCount(0); }
  std::size_t max_count() const { return counts.empty() ? 0 : counts.size() - 1; }

  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

// Exhaustive histogram of count_occurrences(p, w) over all 2^n words w. The
// word space is split into shards by the leading letters and shards are
// summed, so the result does not depend on `workers`.
Spectrum brute_spectrum(const BinaryWord& p, int n, int workers = 1,
                        const EnumerationBudget& budget = {});

// Audit hook: when set, receives every spectrum brute_spectrum produces,
// including those computed inside other operations. Calls are serialized.
using SpectrumObserver = std::function<void(const Spectrum&)>;
void set_spectrum_observer(SpectrumObserver observer);

// Closed forms for B_{n,p}(k), k in 0..4. Only evaluated where they are
// known to hold (k = 3 needs n >= 3, k = 4 needs n >= 5); anything else
// throws OutOfStatedRange.
BigCount closed_form_B(const BinaryWord& p, int n, int k);
bool closed_form_available(int n, int k);

// B_{l+1,p}(k) for k >= 2: the number of runs of p of size k - 1.
BigCount length_plus_one_spectrum(const BinaryWord& p, int k);

struct IdentityCheck {
  std::string name;
  bool holds = false;
  BigCount lhs;
  BigCount rhs;
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  // Mean of c_p over {0,1}^n, i.e. C(n,l) / 2^l.
  BigRational average;

  bool all_hold() const;
};

// Sum_k B(k) = 2^n and Sum_k k B(k) = 2^(n-l) C(n,l). Violations are
// reported, not thrown.
IdentityReport verify_identities(const Spectrum& s);

} // namespace subseq

#endif // SUBSEQ_SPECTRUM_HPP

#ifndef SUBSEQ_EXTREMAL_HPP
#define SUBSEQ_EXTREMAL_HPP

#include "subseq/big_count.hpp"
#include "subseq/spectrum.hpp"
#include "subseq/word.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace subseq {

// ---------------------------------------------------------------------------
// Sequence predicates
// ---------------------------------------------------------------------------

struct SequenceReport {
  std::vector<BigCount> values;
  bool is_unimodal = true;
  bool is_log_concave = true;
  // Indices k2 with values[k2] == 0 and nonzero entries on both sides.
  std::vector<std::size_t> internal_zero_positions;

  bool has_internal_zero() const { return !internal_zero_positions.empty(); }
};

SequenceReport sequence_predicates(const std::vector<BigCount>& values);

// ---------------------------------------------------------------------------
// Maximum occurrence counts
// ---------------------------------------------------------------------------

struct Composition {
  int a = 0;
  int b = 0;
  int c = 0;
  friend bool operator==(const Composition&, const Composition&) = default;
};

struct ThreeRunMax {
  BigCount M;
  // All (a, b, c) with a + b + c = n attaining M, in lexicographic order.
  std::vector<Composition> argmax;
};

// M_{n,p} for p = 1^i 0^j 1^k as the maximum of C(a,i) C(b,j) C(c,k) over
// a + b + c = n. Every composition is scanned.
ThreeRunMax max_three_run(int i, int j, int k, int n);

// Shape (i, j, k) with p trivially equivalent to 1^i 0^j 1^k, for patterns
// with at most three runs.
std::optional<Composition> three_run_shape(const BinaryWord& p);

struct ExtremalResult {
  BinaryWord pattern;
  int n = 0;
  BigCount M;
  // Sorted lexicographically; at most `cap` entries.
  std::vector<BinaryWord> optimal_words;
  bool truncated = false;
  BigCount optimal_count;
  // Zero when M == 0.
  BigCount B_at_M_minus_1;
};

inline constexpr std::size_t kUnlimited = static_cast<std::size_t>(-1);

ExtremalResult optimal_words(const BinaryWord& p, int n, int workers = 1,
                             const EnumerationBudget& budget = {},
                             std::size_t cap = kUnlimited);

// The length-l word 1010... with every run of size one.
BinaryWord alternating_word(int l);

// True iff A_{l+2} is the only A_l-optimal word of length l + 2.
bool alternating_optimal_check(int l, int workers = 1, const EnumerationBudget& budget = {});

// ---------------------------------------------------------------------------
// Internal zeros
// ---------------------------------------------------------------------------

SequenceReport internal_zero_report(const BinaryWord& p, int n, int workers = 1,
                                    const EnumerationBudget& budget = {});

// A claim about the spectrum of p at a given n, with the result it comes
// from. `gap_below_max` claims assert B(M - 1) = 0.
struct ZeroPrediction {
  std::string source;
  std::optional<bool> internal_zero;
  bool gap_below_max = false;
};

// Every known claim that applies to (p, n). The length bound, the
// length-(l+1) criterion and the all-runs-at-least-two result cover every
// pattern; the rest need at most three runs.
std::vector<ZeroPrediction> predict_internal_zeros(const BinaryWord& p, int n);

struct ZeroObservation {
  int n = 0;
  bool internal_zero = false;
  // M >= 1 and B(M - 1) == 0.
  bool gap_below_max = false;
  std::vector<ZeroPrediction> predictions;
  bool agrees = true;
};

struct ZeroClassification {
  BinaryWord pattern;
  bool predicted = false;
  std::vector<ZeroObservation> rows;

  bool all_agree() const;
};

enum class ClassifyMode { Raw, Predict };

// Predict mode throws NotCovered for patterns with four or more runs.
ZeroClassification classify_internal_zeros(const BinaryWord& p, int n_min, int n_max,
                                           ClassifyMode mode = ClassifyMode::Predict,
                                           int workers = 1,
                                           const EnumerationBudget& budget = {});

// Observation plus agreement against whatever predictions apply at n.
ZeroObservation observe_internal_zeros(const Spectrum& s, std::vector<ZeroPrediction> predictions);

// ---------------------------------------------------------------------------
// Product sequences c_n(i) = a_i b_{n-i}
// ---------------------------------------------------------------------------

struct ProductSequenceReport {
  std::vector<std::vector<BigCount>> rows;  // C_0 .. C_{n_max}
  std::vector<BigCount> maxima;             // M_0 .. M_{n_max}
  bool rows_log_concave_zero_free = true;
  // A positive plateau c_n(i) = c_n(i+1) sits at the row maximum.
  bool plateau_is_max = true;
  // For each maximizer i of row n, M_{n+1} = max(c_{n+1}(i), c_{n+1}(i+1)).
  bool argmax_propagates = true;
  bool maxima_log_concave_zero_free = true;
  std::vector<std::string> failures;

  bool all_hold() const {
    return rows_log_concave_zero_free && plateau_is_max && argmax_propagates &&
           maxima_log_concave_zero_free;
  }
};

// `a` and `b` need at least n_max + 1 terms and must be non-negative,
// log-concave and free of internal zeros; otherwise PreconditionViolated.
ProductSequenceReport product_sequence_analysis(const std::vector<BigCount>& a,
                                                const std::vector<BigCount>& b, int n_max);

struct MaxSequenceReport {
  int i = 0;
  int j = 0;
  int k = 0;
  SequenceReport sequence;  // (M_n) for n = 0 .. n_max
  bool argmax_growth = true;
  std::optional<int> first_growth_failure;
};

// (M_{n,p})_n for p = 1^i 0^j 1^k, with log-concavity and the check that
// some one-letter extension of every maximizing composition at n maximizes
// at n + 1.
MaxSequenceReport max_sequence(int i, int j, int k, int n_max);

} // namespace subseq

#endif // SUBSEQ_EXTREMAL_HPP

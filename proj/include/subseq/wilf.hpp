#ifndef SUBSEQ_WILF_HPP
#define SUBSEQ_WILF_HPP

#include "subseq/big_count.hpp"
#include "subseq/spectrum.hpp"
#include "subseq/word.hpp"

#include <compare>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace subseq {

// {p, reverse(p), complement(p), reverse(complement(p))}.
struct TrivialClass {
  BinaryWord canonical;              // lexicographically least member
  std::vector<BinaryWord> members;   // sorted, distinct
};

TrivialClass trivial_class(const BinaryWord& p);

// Spectra of p for n = l .. n_max, in order. Two fingerprints compare equal
// iff every spectrum agrees.
struct Fingerprint {
  int first_n = 0;
  std::vector<std::vector<BigCount>> spectra;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  friend auto operator<=>(const Fingerprint& a, const Fingerprint& b) {
    return std::tie(a.first_n, a.spectra) <=> std::tie(b.first_n, b.spectra);
  }
};

Fingerprint fingerprint(const BinaryWord& p, int n_max, int workers = 1,
                        const EnumerationBudget& budget = {});

// Least n at which the two fingerprints differ; nullopt when equal over the
// common horizon.
std::optional<int> first_difference(const Fingerprint& a, const Fingerprint& b);

struct WilfClass {
  std::vector<BinaryWord> members;
  std::vector<BinaryWord> representatives;  // canonical words of the trivial classes merged here
  // Least horizon separating this class from every other class with the same
  // run-size multiset; nullopt if no other class shares it.
  std::optional<int> least_separating_n;
};

struct EquivalenceClassing {
  int l = 0;
  int n_max = 0;
  std::vector<WilfClass> classes;  // ordered by first representative
  // Every class is exactly one trivial class. Only means "distinguished
  // within n_max"; equal fingerprints are candidates, not proofs.
  bool verdict = false;
  // Patterns with different run-size multisets had different spectra at
  // n = l + 1.
  bool prefilter_sound = false;
  std::optional<int> max_least_separating_n;
  std::size_t spectra_computed = 0;
  std::size_t spectra_resumed = 0;
};

struct ScanOptions {
  int workers = 1;
  EnumerationBudget budget{};
  // JSON-lines file of (pattern, n, counts) cells; existing cells are reused.
  std::optional<std::filesystem::path> checkpoint;
};

EquivalenceClassing strong_wilf_scan(int l, int n_max, const ScanOptions& options = {});

// Checkpoint records, keyed by (pattern text, n). A truncated final line from
// an interrupted write is ignored.
std::map<std::pair<std::string, int>, std::vector<BigCount>>
load_checkpoint(const std::filesystem::path& path);

std::string checkpoint_record(const BinaryWord& pattern, int n, const std::vector<BigCount>& counts);

} // namespace subseq

#endif // SUBSEQ_WILF_HPP

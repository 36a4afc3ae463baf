#ifndef SUBSEQ_GENFUNC_HPP
#define SUBSEQ_GENFUNC_HPP

#include "subseq/big_count.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace subseq {

// Power series in x truncated at degree N whose coefficients are sparse
// polynomials in t. No zero coefficient is ever stored.
class BivariateSeries {
public:
  using Poly = std::map<std::uint64_t, BigCount>;

  explicit BivariateSeries(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Poly& at_degree(int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  BigCount coefficient(int n, std::uint64_t k) const;

  void add_term(int n, std::uint64_t k, const BigCount& c);
  BivariateSeries& operator+=(const BivariateSeries& other);
  // Product truncated at degree order().
  BivariateSeries operator*(const BivariateSeries& other) const;

  // x^shift / (1 - x t^e), truncated.
  static BivariateSeries geometric(int order, std::uint64_t e, int shift);

private:
  std::vector<Poly> coeffs_;
};

// How zeros ahead of the first 1 are weighted.
//   Weighted: each contributes t^{C(0,i) C(k,j)}, which is t^0 unless i = 0.
//   Plain:    1/(1-x), weight t^0 for every i. Undercounts occurrences
//             when i = 0.
enum class LeadingZeros { Weighted, Plain };

// Coefficients of sum_{n,k} B_{n,p}(k) x^n t^k for p = 1^i 0 1^j through
// x-degree N, from the product over the k ones of a word:
//   sum_k  L_k(x,t) * prod_{m=1..k} x / (1 - x t^{C(m,i) C(k-m,j)}),
// where L_k is the leading-zero factor. Terms with k > N vanish mod x^{N+1}.
BivariateSeries gf_coefficients(int i, int j, int N, LeadingZeros leading = LeadingZeros::Weighted);

struct GfMismatch {
  int n = 0;
  std::uint64_t k = 0;
  BigCount series;
  BigCount oracle;
};

// Compares every coefficient through degree N against enumerated spectra of
// 1^i 0 1^j, including coefficients outside the spectrum's support.
std::vector<GfMismatch> gf_check(int i, int j, int N, LeadingZeros leading = LeadingZeros::Weighted,
                                 int workers = 1);

} // namespace subseq

#endif // SUBSEQ_GENFUNC_HPP

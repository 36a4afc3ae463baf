#include "subseq/genfunc.hpp"

#include "subseq/spectrum.hpp"

#include <limits>
#include <stdexcept>

namespace subseq {

BivariateSeries::BivariateSeries(int order) {
  if (order < 0) {
    throw std::invalid_argument("truncation order must be non-negative");
  }
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

BigCount BivariateSeries::coefficient(int n, std::uint64_t k) const {
  if (n < 0 || n > order()) {
    return 0;
  }
  const auto& poly = coeffs_[n];
  auto it = poly.find(k);
  return it == poly.end() ? BigCount(0) : it->second;
}

void BivariateSeries::add_term(int n, std::uint64_t k, const BigCount& c) {
  if (n < 0 || n > order() || c == 0) {
    return;
  }
  auto& poly = coeffs_[n];
  auto [it, inserted] = poly.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) {
      poly.erase(it);
    }
  }
}

BivariateSeries& BivariateSeries::operator+=(const BivariateSeries& other) {
  for (int n = 0; n <= std::min(order(), other.order()); ++n) {
    for (const auto& [k, c] : other.coeffs_[n]) {
      add_term(n, k, c);
    }
  }
  return *this;
}

BivariateSeries BivariateSeries::operator*(const BivariateSeries& other) const {
  BivariateSeries out(order());
  for (int n1 = 0; n1 <= order(); ++n1) {
    for (const auto& [k1, c1] : coeffs_[n1]) {
      for (int n2 = 0; n1 + n2 <= order() && n2 <= other.order(); ++n2) {
        for (const auto& [k2, c2] : other.coeffs_[n2]) {
          if (k2 > std::numeric_limits<std::uint64_t>::max() - k1) {
            throw std::overflow_error("t-exponent overflow");
          }
          out.add_term(n1 + n2, k1 + k2, c1 * c2);
        }
      }
    }
  }
  return out;
}

BivariateSeries BivariateSeries::geometric(int order, std::uint64_t e, int shift) {
  BivariateSeries out(order);
  for (int m = 0; m + shift <= order; ++m) {
    out.add_term(m + shift, e * static_cast<std::uint64_t>(m), 1);
  }
  return out;
}

namespace {

std::uint64_t exponent(int ones_before, int i, int ones_after, int j) {
  const BigCount e = binomial(ones_before, i) * binomial(ones_after, j);
  if (e > std::numeric_limits<std::uint64_t>::max()) {
    throw std::overflow_error("t-exponent overflow");
  }
  return static_cast<std::uint64_t>(e);
}

} // namespace

BivariateSeries gf_coefficients(int i, int j, int N, LeadingZeros leading) {
  if (i < 0 || j < 0) {
    throw std::invalid_argument("i and j must be non-negative");
  }
  BivariateSeries total(N);
  for (int k = 0; k <= N; ++k) {
    const std::uint64_t lead = leading == LeadingZeros::Weighted ? exponent(0, i, k, j) : 0;
    BivariateSeries term = BivariateSeries::geometric(N, lead, 0);
    // The m-th one followed by its run of zeros, each zero seeing m ones
    // before it and k - m after.
    for (int m = 1; m <= k; ++m) {
      term = term * BivariateSeries::geometric(N, exponent(m, i, k - m, j), 1);
    }
    total += term;
  }
  return total;
}

std::vector<GfMismatch> gf_check(int i, int j, int N, LeadingZeros leading, int workers) {
  const BivariateSeries series = gf_coefficients(i, j, N, leading);
  BinaryWord p;
  for (int t = 0; t < i; ++t) {
    p.push_back(1);
  }
  p.push_back(0);
  for (int t = 0; t < j; ++t) {
    p.push_back(1);
  }
  EnumerationBudget budget;
  budget.max_n = std::max(N, budget.max_n);

  std::vector<GfMismatch> out;
  for (int n = 0; n <= N; ++n) {
    const Spectrum s = brute_spectrum(p, n, workers, budget);
    for (std::size_t k = 0; k < s.counts.size(); ++k) {
      const BigCount c = series.coefficient(n, k);
      if (c != s.counts[k]) {
        out.push_back({n, k, c, s.counts[k]});
      }
    }
    for (const auto& [k, c] : series.at_degree(n)) {
      if (k >= s.counts.size()) {
        out.push_back({n, k, c, 0});
      }
    }
  }
  return out;
}

} // namespace subseq

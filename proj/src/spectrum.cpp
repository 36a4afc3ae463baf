#include "subseq/spectrum.hpp"

#include "subseq/enumerate.hpp"
#include "subseq/errors.hpp"

#include <mutex>

namespace subseq {

namespace {

std::mutex observer_mu;
SpectrumObserver observer;

void notify(const Spectrum& s) {
  std::lock_guard<std::mutex> lock(observer_mu);
  if (observer) {
    observer(s);
  }
}

} // namespace

void set_spectrum_observer(SpectrumObserver fn) {
  std::lock_guard<std::mutex> lock(observer_mu);
  observer = std::move(fn);
}

void EnumerationBudget::check(int n) const {
  if (n < 0) {
    throw std::invalid_argument("word length must be non-negative");
  }
  if (n > kHardLimit) {
    throw BudgetExceeded(n, kHardLimit, "beyond the 64-bit enumeration kernel");
  }
  if (n > max_n) {
    throw BudgetExceeded(n, max_n, "raise the enumeration cap to proceed");
  }
  if (n > kGuardedAbove && !allow_large) {
    throw BudgetExceeded(n, kGuardedAbove, "lengths above 30 need the large-enumeration flag");
  }
}

Spectrum brute_spectrum(const BinaryWord& p, int n, int workers, const EnumerationBudget& budget) {
  if (p.empty()) {
    throw EmptyPattern();
  }
  budget.check(n);
  workers = std::max(1, workers);

  const int shard_bits = detail::shard_bits_for(n);
  const std::uint64_t shards = std::uint64_t{1} << shard_bits;
  std::vector<std::vector<std::uint64_t>> partial(static_cast<std::size_t>(workers));

  detail::run_shards(shards, workers, [&](std::uint64_t shard, int worker) {
    auto& hist = partial[static_cast<std::size_t>(worker)];
    detail::PrefixWalker walker(p, n);
    walker.walk(shard, shard_bits, [&](std::uint64_t, std::uint64_t count) {
      if (count >= hist.size()) {
        hist.resize(count + 1, 0);
      }
      ++hist[count];
    });
  });

  std::size_t width = 0;
  for (const auto& h : partial) {
    width = std::max(width, h.size());
  }
  Spectrum s{p, n, std::vector<BigCount>(width, 0)};
  for (const auto& h : partial) {
    for (std::size_t k = 0; k < h.size(); ++k) {
      s.counts[k] += h[k];
    }
  }
  while (s.counts.size() > 1 && s.counts.back() == 0) {
    s.counts.pop_back();
  }
  notify(s);
  return s;
}

bool closed_form_available(int n, int k) {
  switch (k) {
  case 0:
  case 1:
  case 2:
    return n >= 0;
  case 3:
    return n >= 3;
  case 4:
    return n >= 5;
  default:
    return false;
  }
}

BigCount closed_form_B(const BinaryWord& p, int n, int k) {
  if (!closed_form_available(n, k)) {
    throw OutOfStatedRange(n, k);
  }
  const RunProfile prof = run_decompose(p);
  const std::int64_t l = static_cast<std::int64_t>(p.size());
  const std::int64_t r = prof.r;
  const std::int64_t r1 = prof.runs_of_size(1);

  switch (k) {
  case 0: {
    BigCount total = 0;
    for (std::int64_t j = 0; j < l; ++j) {
      total += binomial(n, j);
    }
    return total;
  }
  case 1:
    return binomial(n - r + 1, l - r + 1);
  case 2:
    if (l == 1) {
      return binomial(n, 2);
    }
    return r1 * binomial(n - r, l - r + 1);
  case 3: {
    if (l < 3) {
      return r == 1 ? binomial(n, 3) : BigCount(3 * (n - 3));
    }
    const std::int64_t r2 = prof.runs_of_size(2);
    const std::int64_t r2b = prof.r2b;
    return r1 * binomial(n - r - 1, l - r + 1) + (r2 - r2b) * binomial(n - r - 1, l - r) +
           r2b * binomial(n - r, l - r + 1);
  }
  default: {
    if (l < 4) {
      if (r == 1) {
        return l == 2 ? BigCount(0) : binomial(n, 4);
      }
      const std::int64_t m = n;
      if (l == 3 && r == 2) {
        return BigCount((m - 4) * (m - 4));
      }
      if (l == 2) {
        return BigCount(5 * m - 19);
      }
      return BigCount(7 * m - 31);
    }
    const std::int64_t r3 = prof.runs_of_size(3);
    const std::int64_t r3b = prof.r3b;
    const std::int64_t r12b = prof.r12b;
    return r1 * binomial(n - r - 2, l - r + 1) + binomial(r1, 2) * binomial(n - r - 1, l - r + 1) +
           (r3 - r3b) * binomial(n - r - 1, l - r) + r3b * binomial(n - r, l - r + 1) +
           r12b * binomial(n - r - 2, l - r);
  }
  }
}

BigCount length_plus_one_spectrum(const BinaryWord& p, int k) {
  if (k < 2) {
    throw std::invalid_argument("length-(l+1) formula needs k >= 2");
  }
  return run_decompose(p).runs_of_size(k - 1);
}

bool IdentityReport::all_hold() const {
  for (const auto& c : checks) {
    if (!c.holds) {
      return false;
    }
  }
  return true;
}

IdentityReport verify_identities(const Spectrum& s) {
  const int l = static_cast<int>(s.pattern.size());
  BigCount total = 0;
  BigCount weighted = 0;
  for (std::size_t k = 0; k < s.counts.size(); ++k) {
    total += s.counts[k];
    weighted += s.counts[k] * k;
  }

  IdentityReport report;
  const BigCount words = pow2(static_cast<unsigned>(s.n));
  report.checks.push_back({"sum_B_equals_2^n", total == words, total, words});

  // C(n,l) = 0 when n < l, so the 2^(n-l) factor never needs to be fractional.
  BigCount expected = 0;
  if (s.n >= l) {
    expected = pow2(static_cast<unsigned>(s.n - l)) * binomial(s.n, l);
  }
  report.checks.push_back({"sum_kB_equals_2^(n-l)C(n,l)", weighted == expected, weighted, expected});

  report.average = BigRational(binomial(s.n, l), pow2(static_cast<unsigned>(l)));
  return report;
}

} // namespace subseq

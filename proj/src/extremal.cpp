#include "subseq/extremal.hpp"

#include "subseq/enumerate.hpp"
#include "subseq/errors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace subseq {

SequenceReport sequence_predicates(const std::vector<BigCount>& values) {
  SequenceReport rep;
  rep.values = values;
  const std::size_t m = values.size();

  std::size_t first = m;
  std::size_t last = 0;
  for (std::size_t k = 0; k < m; ++k) {
    if (values[k] != 0) {
      first = std::min(first, k);
      last = k;
    }
  }
  for (std::size_t k = first + 1; first < m && k < last; ++k) {
    if (values[k] == 0) {
      rep.internal_zero_positions.push_back(k);
    }
  }

  std::size_t k = 0;
  while (k + 1 < m && values[k] <= values[k + 1]) {
    ++k;
  }
  while (k + 1 < m && values[k] >= values[k + 1]) {
    ++k;
  }
  rep.is_unimodal = m == 0 || k + 1 == m;

  for (std::size_t t = 1; t + 1 < m; ++t) {
    if (values[t] * values[t] < values[t - 1] * values[t + 1]) {
      rep.is_log_concave = false;
      break;
    }
  }
  return rep;
}

namespace {

// Pascal rows 0..n truncated to column `upto`.
std::vector<std::vector<BigCount>> binomial_table(int n, int upto) {
  std::vector<std::vector<BigCount>> t(static_cast<std::size_t>(n + 1));
  for (int a = 0; a <= n; ++a) {
    t[a].assign(static_cast<std::size_t>(upto + 1), 0);
    for (int b = 0; b <= std::min(a, upto); ++b) {
      t[a][b] = binomial(a, b);
    }
  }
  return t;
}

ThreeRunMax three_run_scan(int i, int j, int k, int n) {
  const auto C = binomial_table(n, std::max({i, j, k}));
  ThreeRunMax best;
  best.M = -1;
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; a + b <= n; ++b) {
      const int c = n - a - b;
      const BigCount v = C[a][i] * C[b][j] * C[c][k];
      if (v > best.M) {
        best.M = v;
        best.argmax.clear();
      }
      if (v == best.M) {
        best.argmax.push_back({a, b, c});
      }
    }
  }
  return best;
}

void check_shape(int i, int j, int k) {
  if (i < 0 || k < 0 || j < 1) {
    throw std::invalid_argument("three-run shape needs i, k >= 0 and j >= 1");
  }
}

} // namespace

ThreeRunMax max_three_run(int i, int j, int k, int n) {
  check_shape(i, j, k);
  if (n < i + j + k) {
    throw PatternTooLong(i + j + k, n);
  }
  return three_run_scan(i, j, k, n);
}

std::optional<Composition> three_run_shape(const BinaryWord& p) {
  const RunProfile prof = run_decompose(p);
  if (prof.r > 3) {
    return std::nullopt;
  }
  const auto s = prof.sizes();
  if (prof.r == 1) {
    return Composition{0, s[0], 0};
  }
  // Complementing if needed makes the first run 1s; the shape is then read
  // off directly.
  if (prof.r == 2) {
    return Composition{s[0], s[1], 0};
  }
  return Composition{s[0], s[1], s[2]};
}

ExtremalResult optimal_words(const BinaryWord& p, int n, int workers,
                             const EnumerationBudget& budget, std::size_t cap) {
  const Spectrum s = brute_spectrum(p, n, workers, budget);
  ExtremalResult res;
  res.pattern = p;
  res.n = n;
  res.M = static_cast<unsigned long long>(s.max_count());
  res.optimal_count = s.counts.back();
  res.B_at_M_minus_1 = s.max_count() == 0 ? BigCount(0) : s.at(s.max_count() - 1);

  const std::uint64_t target = s.max_count();
  const int shard_bits = detail::shard_bits_for(n);
  const std::uint64_t shards = std::uint64_t{1} << shard_bits;
  std::vector<std::vector<std::uint64_t>> found(shards);
  detail::run_shards(shards, workers, [&](std::uint64_t shard, int) {
    auto& out = found[shard];
    detail::PrefixWalker walker(p, n);
    walker.walk(shard, shard_bits, [&](std::uint64_t mask, std::uint64_t count) {
      if (count == target && out.size() < cap) {
        out.push_back(mask);
      }
    });
  });

  for (const auto& shard : found) {
    for (std::uint64_t mask : shard) {
      if (res.optimal_words.size() == cap) {
        res.truncated = true;
        return res;
      }
      res.optimal_words.push_back(BinaryWord::from_mask(mask, static_cast<std::size_t>(n)));
    }
  }
  res.truncated = BigCount(res.optimal_words.size()) < res.optimal_count;
  return res;
}

BinaryWord alternating_word(int l) {
  BinaryWord w;
  for (int t = 0; t < l; ++t) {
    w.push_back(t % 2 == 0 ? 1 : 0);
  }
  return w;
}

bool alternating_optimal_check(int l, int workers, const EnumerationBudget& budget) {
  if (l < 4) {
    throw std::invalid_argument("alternating optimality check needs l >= 4");
  }
  const auto res = optimal_words(alternating_word(l), l + 2, workers, budget);
  return res.optimal_words.size() == 1 && res.optimal_words.front() == alternating_word(l + 2);
}

SequenceReport internal_zero_report(const BinaryWord& p, int n, int workers,
                                    const EnumerationBudget& budget) {
  return sequence_predicates(brute_spectrum(p, n, workers, budget).counts);
}

namespace {

bool sizes_cover_prefix(const RunProfile& prof) {
  for (int s = 1; s <= prof.max_run_size(); ++s) {
    if (prof.runs_of_size(s) == 0) {
      return false;
    }
  }
  return true;
}

bool in_1101_class(const RunProfile& prof) {
  const auto s = prof.sizes();
  return s == std::vector<int>{2, 1, 1} || s == std::vector<int>{1, 1, 2};
}

} // namespace

std::vector<ZeroPrediction> predict_internal_zeros(const BinaryWord& p, int n) {
  const RunProfile prof = run_decompose(p);
  const int l = static_cast<int>(p.size());
  std::vector<ZeroPrediction> out;
  auto add = [&](std::string source, std::optional<bool> iz, bool gap = false) {
    out.push_back({std::move(source), iz, gap});
  };

  if (n <= l) {
    add("length bound: no internal zero for n <= l", false);
  }
  if (n == l + 1) {
    add("length l+1: internal zero iff some size in [1, max run] is missing",
        !sizes_cover_prefix(prof));
  }
  if (prof.runs_of_size(1) == 0 && n >= l + 1) {
    add("all runs of size >= 2: internal zero for n >= l+1", true);
  }
  if (prof.r > 3) {
    return out;
  }

  if (prof.alternating()) {
    if (prof.r == 1) {
      add("single letter: never an internal zero", false);
    } else if (prof.r == 2) {
      add("pattern 10: never an internal zero", false);
    } else {
      add("pattern 101: internal zero only at n = 6", n == 6);
    }
    if (n >= 7) {
      add("alternating, at most 3 runs: no internal zero for n >= 7", false);
    }
    return out;
  }

  if (prof.r == 1 && n >= l + 1) {
    add("single run of length >= 2: internal zero for n >= l+1", true);
  }
  if (prof.r == 2 && n >= l + 2) {
    add("two runs, l >= 3: B(M-1) = 0 for n >= l+2", true, true);
  }
  if (prof.r == 3) {
    if (in_1101_class(prof)) {
      if (n == 6) {
        add("1101 class: no internal zero at n = 6", false);
      } else if (n >= 7) {
        add("1101 class: B(M-1) = 0 for n >= 7", true, true);
      }
    } else if (n >= l + 2) {
      add("three runs, l >= 4: B(M-1) = 0 for n >= l+2", true, true);
    }
  }
  if (n >= l + 3) {
    add("non-alternating, at most 3 runs: B(M-1) = 0 for n >= l+3", true, true);
  }
  return out;
}

ZeroObservation observe_internal_zeros(const Spectrum& s, std::vector<ZeroPrediction> predictions) {
  ZeroObservation obs;
  obs.n = s.n;
  obs.internal_zero = sequence_predicates(s.counts).has_internal_zero();
  obs.gap_below_max = s.max_count() >= 1 && s.at(s.max_count() - 1) == 0;
  obs.predictions = std::move(predictions);
  for (const auto& pred : obs.predictions) {
    if (pred.internal_zero && *pred.internal_zero != obs.internal_zero) {
      obs.agrees = false;
    }
    if (pred.gap_below_max && !obs.gap_below_max) {
      obs.agrees = false;
    }
  }
  return obs;
}

bool ZeroClassification::all_agree() const {
  return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.agrees; });
}

ZeroClassification classify_internal_zeros(const BinaryWord& p, int n_min, int n_max,
                                           ClassifyMode mode, int workers,
                                           const EnumerationBudget& budget) {
  const RunProfile prof = run_decompose(p);
  if (mode == ClassifyMode::Predict && prof.r > 3) {
    throw NotCovered(p.str());
  }
  if (n_min < 0 || n_max < n_min) {
    throw std::invalid_argument("need 0 <= n_min <= n_max");
  }
  ZeroClassification out;
  out.pattern = p;
  out.predicted = mode == ClassifyMode::Predict;
  for (int n = n_min; n <= n_max; ++n) {
    const Spectrum s = brute_spectrum(p, n, workers, budget);
    auto preds = out.predicted ? predict_internal_zeros(p, n) : std::vector<ZeroPrediction>{};
    out.rows.push_back(observe_internal_zeros(s, std::move(preds)));
  }
  return out;
}

namespace {

void require_input(const std::vector<BigCount>& seq, const char* name, int n_max) {
  const std::string who(name);
  if (seq.size() < static_cast<std::size_t>(n_max) + 1) {
    throw PreconditionViolated(who + " has fewer than n_max + 1 terms");
  }
  const std::vector<BigCount> head(seq.begin(), seq.begin() + n_max + 1);
  for (const auto& v : head) {
    if (v < 0) {
      throw PreconditionViolated("negative entry in " + who);
    }
  }
  const SequenceReport rep = sequence_predicates(head);
  if (rep.has_internal_zero()) {
    throw PreconditionViolated("internal zero in " + who);
  }
  if (!rep.is_log_concave) {
    throw PreconditionViolated(who + " is not log-concave");
  }
}

} // namespace

ProductSequenceReport product_sequence_analysis(const std::vector<BigCount>& a,
                                                const std::vector<BigCount>& b, int n_max) {
  if (n_max < 0) {
    throw std::invalid_argument("n_max must be non-negative");
  }
  require_input(a, "a", n_max);
  require_input(b, "b", n_max);

  ProductSequenceReport rep;
  for (int n = 0; n <= n_max; ++n) {
    std::vector<BigCount> row(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) {
      row[i] = a[i] * b[n - i];
    }
    rep.maxima.push_back(*std::max_element(row.begin(), row.end()));
    rep.rows.push_back(std::move(row));
  }

  for (int n = 0; n <= n_max; ++n) {
    const auto& row = rep.rows[n];
    const auto r = sequence_predicates(row);
    if (!r.is_log_concave || r.has_internal_zero()) {
      rep.rows_log_concave_zero_free = false;
      rep.failures.push_back("row " + std::to_string(n) + " not log-concave or has internal zero");
    }
    for (int i = 0; i < n; ++i) {
      if (row[i] == row[i + 1] && row[i] > 0 && row[i] != rep.maxima[n]) {
        rep.plateau_is_max = false;
        rep.failures.push_back("plateau below the maximum in row " + std::to_string(n) +
                               " at i=" + std::to_string(i));
      }
    }
    if (n < n_max) {
      const auto& next = rep.rows[n + 1];
      for (int i = 0; i <= n; ++i) {
        if (row[i] == rep.maxima[n] && std::max(next[i], next[i + 1]) != rep.maxima[n + 1]) {
          rep.argmax_propagates = false;
          rep.failures.push_back("maximizer i=" + std::to_string(i) + " of row " +
                                 std::to_string(n) + " does not propagate");
        }
      }
    }
  }
  const auto m = sequence_predicates(rep.maxima);
  rep.maxima_log_concave_zero_free = m.is_log_concave && !m.has_internal_zero();
  if (!rep.maxima_log_concave_zero_free) {
    rep.failures.push_back("row maxima not log-concave or have an internal zero");
  }
  return rep;
}

MaxSequenceReport max_sequence(int i, int j, int k, int n_max) {
  check_shape(i, j, k);
  const int l = i + j + k;
  if (n_max < l) {
    throw PatternTooLong(l, n_max);
  }
  MaxSequenceReport rep{i, j, k, {}, true, std::nullopt};
  std::vector<ThreeRunMax> rows;
  std::vector<BigCount> values;
  for (int n = 0; n <= n_max; ++n) {
    rows.push_back(three_run_scan(i, j, k, n));
    values.push_back(rows.back().M);
  }
  rep.sequence = sequence_predicates(values);

  for (int n = l; n < n_max && rep.argmax_growth; ++n) {
    const auto& next = rows[n + 1].argmax;
    const std::set<std::tuple<int, int, int>> targets = [&] {
      std::set<std::tuple<int, int, int>> s;
      for (const auto& c : next) {
        s.emplace(c.a, c.b, c.c);
      }
      return s;
    }();
    for (const auto& c : rows[n].argmax) {
      const bool grows = targets.count({c.a + 1, c.b, c.c}) || targets.count({c.a, c.b + 1, c.c}) ||
                         targets.count({c.a, c.b, c.c + 1});
      if (!grows) {
        rep.argmax_growth = false;
        rep.first_growth_failure = n;
        break;
      }
    }
  }
  return rep;
}

} // namespace subseq

#include "subseq/wilf.hpp"

#include "subseq/enumerate.hpp"
#include "subseq/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <set>
#include <stdexcept>

namespace subseq {

using json = nlohmann::json;

TrivialClass trivial_class(const BinaryWord& p) {
  std::set<BinaryWord> members{p, reverse(p), complement(p), complement(reverse(p))};
  TrivialClass tc;
  tc.members.assign(members.begin(), members.end());
  tc.canonical = tc.members.front();
  return tc;
}

Fingerprint fingerprint(const BinaryWord& p, int n_max, int workers, const EnumerationBudget& budget) {
  const int l = static_cast<int>(p.size());
  if (n_max < l) {
    throw PatternTooLong(l, n_max);
  }
  budget.check(n_max);
  Fingerprint fp;
  fp.first_n = l;
  for (int n = l; n <= n_max; ++n) {
    fp.spectra.push_back(brute_spectrum(p, n, workers, budget).counts);
  }
  return fp;
}

std::optional<int> first_difference(const Fingerprint& a, const Fingerprint& b) {
  if (a.first_n != b.first_n) {
    return std::min(a.first_n, b.first_n);
  }
  const std::size_t common = std::min(a.spectra.size(), b.spectra.size());
  for (std::size_t t = 0; t < common; ++t) {
    if (a.spectra[t] != b.spectra[t]) {
      return a.first_n + static_cast<int>(t);
    }
  }
  return std::nullopt;
}

std::string checkpoint_record(const BinaryWord& pattern, int n, const std::vector<BigCount>& counts) {
  json j;
  j["pattern"] = pattern.str();
  j["n"] = n;
  j["counts"] = to_decimal(counts);
  return j.dump();
}

namespace {

using CellMap = std::map<std::pair<std::string, int>, std::vector<BigCount>>;

// Returns the parsed cells and, through `valid_bytes`, the length of the
// prefix made of complete well-formed lines.
CellMap read_checkpoint(const std::filesystem::path& path, std::uintmax_t& valid_bytes) {
  CellMap cells;
  valid_bytes = 0;
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return cells;
  }
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const bool complete = !in.eof();
    if (line.empty()) {
      valid_bytes += complete ? 1 : 0;
      continue;
    }
    json j = json::parse(line, nullptr, false);
    const bool ok = !j.is_discarded() && j.is_object() && j.contains("pattern") &&
                    j.contains("n") && j.contains("counts") && j["counts"].is_array();
    if (!ok || !complete) {
      if (in.peek() == std::char_traits<char>::eof()) {
        break;  // torn final write
      }
      throw Error("corrupt checkpoint record at line " + std::to_string(line_no) + " of " +
                  path.string());
    }
    std::vector<BigCount> counts;
    for (const auto& c : j["counts"]) {
      counts.push_back(parse_decimal(c.get<std::string>()));
    }
    parse_word(j["pattern"].get<std::string>());
    cells[{j["pattern"].get<std::string>(), j["n"].get<int>()}] = std::move(counts);
    valid_bytes += line.size() + 1;
  }
  return cells;
}

} // namespace

CellMap load_checkpoint(const std::filesystem::path& path) {
  std::uintmax_t valid = 0;
  return read_checkpoint(path, valid);
}

EquivalenceClassing strong_wilf_scan(int l, int n_max, const ScanOptions& options) {
  if (l < 1) {
    throw std::invalid_argument("pattern length must be >= 1");
  }
  if (n_max < l) {
    throw PatternTooLong(l, n_max);
  }
  const int confirm_n = l + 1;
  options.budget.check(std::max(n_max, confirm_n));

  // Canonical representatives grouped by run-size multiset.
  std::map<std::vector<int>, std::vector<BinaryWord>> groups;
  std::map<BinaryWord, std::vector<BinaryWord>> members_of;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << l); ++mask) {
    const BinaryWord p = BinaryWord::from_mask(mask, static_cast<std::size_t>(l));
    TrivialClass tc = trivial_class(p);
    if (tc.canonical == p) {
      groups[run_decompose(p).size_multiset()].push_back(p);
      members_of[p] = std::move(tc.members);
    }
  }

  // Cells to fill: n = l+1 for every representative (pre-filter check), and
  // the whole horizon for representatives that share a multiset.
  std::set<std::pair<BinaryWord, int>> wanted;
  for (const auto& [key, reps] : groups) {
    for (const auto& rep : reps) {
      wanted.insert({rep, confirm_n});
      if (reps.size() > 1) {
        for (int n = l; n <= n_max; ++n) {
          wanted.insert({rep, n});
        }
      }
    }
  }

  EquivalenceClassing out;
  out.l = l;
  out.n_max = n_max;

  CellMap cells;
  std::ofstream journal;
  if (options.checkpoint) {
    std::uintmax_t valid = 0;
    cells = read_checkpoint(*options.checkpoint, valid);
    if (std::filesystem::exists(*options.checkpoint) &&
        std::filesystem::file_size(*options.checkpoint) != valid) {
      std::filesystem::resize_file(*options.checkpoint, valid);
    }
    journal.open(*options.checkpoint, std::ios::app | std::ios::binary);
    if (!journal) {
      throw Error("cannot open checkpoint " + options.checkpoint->string());
    }
  }

  std::vector<std::pair<BinaryWord, int>> todo;
  for (const auto& cell : wanted) {
    if (cells.count({cell.first.str(), cell.second})) {
      ++out.spectra_resumed;
    } else {
      todo.push_back(cell);
    }
  }
  out.spectra_computed = todo.size();

  std::mutex mu;
  detail::run_shards(todo.size(), options.workers, [&](std::uint64_t idx, int) {
    const auto& [rep, n] = todo[idx];
    Spectrum s = brute_spectrum(rep, n, 1, options.budget);
    const std::string line = checkpoint_record(rep, n, s.counts);
    std::lock_guard<std::mutex> lock(mu);
    if (journal.is_open()) {
      journal << line << '\n';
      journal.flush();
    }
    cells[{rep.str(), n}] = std::move(s.counts);
  });

  auto cell = [&](const BinaryWord& rep, int n) -> const std::vector<BigCount>& {
    return cells.at({rep.str(), n});
  };

  std::map<std::vector<BigCount>, std::set<std::vector<int>>> keys_at_confirm;
  for (const auto& [key, reps] : groups) {
    for (const auto& rep : reps) {
      keys_at_confirm[cell(rep, confirm_n)].insert(key);
    }
  }
  out.prefilter_sound = std::all_of(keys_at_confirm.begin(), keys_at_confirm.end(),
                                    [](const auto& kv) { return kv.second.size() == 1; });

  for (const auto& [key, reps] : groups) {
    if (reps.size() == 1) {
      out.classes.push_back({members_of[reps[0]], {reps[0]}, std::nullopt});
      continue;
    }
    std::map<Fingerprint, std::vector<BinaryWord>> by_fp;
    for (const auto& rep : reps) {
      Fingerprint fp{l, {}};
      for (int n = l; n <= n_max; ++n) {
        fp.spectra.push_back(cell(rep, n));
      }
      by_fp[fp].push_back(rep);
    }
    for (const auto& [fp, merged] : by_fp) {
      WilfClass wc;
      wc.representatives = merged;
      for (const auto& rep : merged) {
        const auto& m = members_of[rep];
        wc.members.insert(wc.members.end(), m.begin(), m.end());
      }
      std::sort(wc.members.begin(), wc.members.end());
      for (const auto& [other_fp, other] : by_fp) {
        if (&other == &merged) {
          continue;
        }
        const auto d = first_difference(fp, other_fp);
        if (d && (!wc.least_separating_n || *d > *wc.least_separating_n)) {
          wc.least_separating_n = d;
        }
      }
      out.classes.push_back(std::move(wc));
    }
  }

  std::sort(out.classes.begin(), out.classes.end(), [](const WilfClass& a, const WilfClass& b) {
    return a.representatives.front() < b.representatives.front();
  });
  out.verdict = std::all_of(out.classes.begin(), out.classes.end(),
                            [](const WilfClass& c) { return c.representatives.size() == 1; });
  for (const auto& c : out.classes) {
    if (c.least_separating_n &&
        (!out.max_least_separating_n || *c.least_separating_n > *out.max_least_separating_n)) {
      out.max_least_separating_n = c.least_separating_n;
    }
  }
  return out;
}

} // namespace subseq

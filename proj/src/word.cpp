#include "subseq/word.hpp"

#include "subseq/errors.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace subseq {

BinaryWord BinaryWord::from_mask(std::uint64_t bits, std::size_t n) {
  if (n > 64) {
    throw std::invalid_argument("from_mask supports at most 64 letters");
  }
  BinaryWord w;
  for (std::size_t i = 0; i < n; ++i) {
    w.push_back(static_cast<int>((bits >> (n - 1 - i)) & 1u));
  }
  return w;
}

BinaryWord BinaryWord::from_letters(const std::vector<int>& letters) {
  BinaryWord w;
  for (int letter : letters) {
    w.push_back(letter);
  }
  return w;
}

void BinaryWord::set(std::size_t i, int letter) {
  const std::uint64_t bit = std::uint64_t{1} << (i % 64);
  if (letter) {
    blocks_[i / 64] |= bit;
  } else {
    blocks_[i / 64] &= ~bit;
  }
}

void BinaryWord::push_back(int letter) {
  if (length_ % 64 == 0) {
    blocks_.push_back(0);
  }
  ++length_;
  set(length_ - 1, letter);
}

std::uint64_t BinaryWord::to_mask() const {
  if (length_ > 64) {
    throw std::invalid_argument("to_mask supports at most 64 letters");
  }
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < length_; ++i) {
    mask = (mask << 1) | static_cast<std::uint64_t>((*this)[i]);
  }
  return mask;
}

std::string BinaryWord::str() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if ((*this)[i]) {
      s[i] = '1';
    }
  }
  return s;
}

std::strong_ordering operator<=>(const BinaryWord& a, const BinaryWord& b) {
  if (a.length_ != b.length_) {
    return a.length_ <=> b.length_;
  }
  for (std::size_t i = 0; i < a.length_; ++i) {
    if (a[i] != b[i]) {
      return a[i] <=> b[i];
    }
  }
  return std::strong_ordering::equal;
}

BinaryWord parse_word(std::string_view text) {
  BinaryWord w;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '0') {
      w.push_back(0);
    } else if (text[i] == '1') {
      w.push_back(1);
    } else {
      throw InvalidCharacter(i);
    }
  }
  return w;
}

BinaryWord reverse(const BinaryWord& w) {
  BinaryWord out;
  for (std::size_t i = w.size(); i-- > 0;) {
    out.push_back(w[i]);
  }
  return out;
}

BinaryWord complement(const BinaryWord& w) {
  BinaryWord out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    out.push_back(1 - w[i]);
  }
  return out;
}

BinaryWord transform(const BinaryWord& w, Transform kind) {
  switch (kind) {
  case Transform::Reverse:
    return reverse(w);
  case Transform::Complement:
    return complement(w);
  case Transform::ReverseComplement:
    return complement(reverse(w));
  }
  return w;
}

int RunProfile::runs_of_size(int size) const {
  auto it = run_size_counts.find(size);
  return it == run_size_counts.end() ? 0 : it->second;
}

int RunProfile::max_run_size() const {
  return run_size_counts.empty() ? 0 : run_size_counts.rbegin()->first;
}

std::vector<int> RunProfile::sizes() const {
  std::vector<int> out;
  out.reserve(runs.size());
  for (const auto& run : runs) {
    out.push_back(run.size);
  }
  return out;
}

std::vector<int> RunProfile::size_multiset() const {
  auto out = sizes();
  std::sort(out.begin(), out.end());
  return out;
}

RunProfile run_decompose(const BinaryWord& p) {
  if (p.empty()) {
    throw EmptyPattern();
  }
  RunProfile prof;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (prof.runs.empty() || prof.runs.back().symbol != p[i]) {
      prof.runs.push_back({p[i], 1});
    } else {
      ++prof.runs.back().size;
    }
  }
  prof.r = static_cast<int>(prof.runs.size());
  for (const auto& run : prof.runs) {
    ++prof.run_size_counts[run.size];
  }

  auto boundary_count = [&](int size) {
    int count = prof.runs.front().size == size ? 1 : 0;
    if (prof.r > 1 && prof.runs.back().size == size) {
      ++count;
    }
    return count;
  };
  prof.r2b = boundary_count(2);
  prof.r3b = boundary_count(3);

  if (prof.r >= 2) {
    const auto& rs = prof.runs;
    if (rs[0].size == 1 && rs[1].size == 2) {
      ++prof.r12b;
    }
    if (rs[rs.size() - 1].size == 1 && rs[rs.size() - 2].size == 2) {
      ++prof.r12b;
    }
  }
  return prof;
}

BinaryWord from_runs(const std::vector<Run>& runs) {
  BinaryWord w;
  for (const auto& run : runs) {
    for (int i = 0; i < run.size; ++i) {
      w.push_back(run.symbol);
    }
  }
  return w;
}

namespace {

std::optional<std::uint64_t> count_u64(const BinaryWord& p, const BinaryWord& w) {
  const std::size_t l = p.size();
  std::vector<std::uint64_t> c(l + 1, 0);
  c[0] = 1;
  for (std::size_t t = 0; t < w.size(); ++t) {
    const int letter = w[t];
    for (std::size_t j = l; j >= 1; --j) {
      if (p[j - 1] == letter && __builtin_add_overflow(c[j], c[j - 1], &c[j])) {
        return std::nullopt;
      }
    }
  }
  return c[l];
}

BigCount count_big(const BinaryWord& p, const BinaryWord& w) {
  const std::size_t l = p.size();
  std::vector<BigCount> c(l + 1, 0);
  c[0] = 1;
  for (std::size_t t = 0; t < w.size(); ++t) {
    const int letter = w[t];
    for (std::size_t j = l; j >= 1; --j) {
      if (p[j - 1] == letter) {
        c[j] += c[j - 1];
      }
    }
  }
  return c[l];
}

} // namespace

BigCount count_occurrences(const BinaryWord& p, const BinaryWord& w) {
  if (p.empty()) {
    throw EmptyPattern();
  }
  if (w.size() < p.size()) {
    return 0;
  }
  if (auto fast = count_u64(p, w)) {
    return BigCount(*fast);
  }
  return count_big(p, w);
}

} // namespace subseq

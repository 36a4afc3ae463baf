#ifndef SUBSEQ_ENUMERATE_HPP
#define SUBSEQ_ENUMERATE_HPP

// Exhaustive walk of {0,1}^n carrying the prefix-occurrence counters of a
// pattern down a depth-first tree, so each word costs O(l) amortized instead
// of O(n l).

#include "subseq/word.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace subseq::detail {

class PrefixWalker {
public:
  PrefixWalker(const BinaryWord& p, int n)
      : l_(static_cast<int>(p.size())), n_(n),
        state_(static_cast<std::size_t>(n + 1) * (l_ + 1), 0) {
    for (int j = l_; j >= 1; --j) {
      positions_[p[j - 1]].push_back(j);
    }
  }

  int length() const { return n_; }

  // Visits every word whose first `prefix_len` letters spell `prefix` (MSB
  // first), in increasing mask order, as visit(mask, occurrences).
  template <class Visit>
  void walk(std::uint64_t prefix, int prefix_len, Visit&& visit) {
    std::uint64_t* root = row(0);
    std::fill(root, root + l_ + 1, 0);
    root[0] = 1;
    for (int d = 0; d < prefix_len; ++d) {
      const int letter = static_cast<int>((prefix >> (prefix_len - 1 - d)) & 1u);
      step(d, letter);
    }
    descend(prefix_len, prefix, visit);
  }

private:
  std::uint64_t* row(int depth) {
    return state_.data() + static_cast<std::size_t>(depth) * (l_ + 1);
  }

  void step(int depth, int letter) {
    const std::uint64_t* from = row(depth);
    std::uint64_t* to = row(depth + 1);
    std::copy(from, from + l_ + 1, to);
    for (int j : positions_[letter]) {
      to[j] += to[j - 1];
    }
  }

  template <class Visit>
  void descend(int depth, std::uint64_t mask, Visit& visit) {
    if (depth == n_) {
      visit(mask, row(depth)[l_]);
      return;
    }
    for (int letter = 0; letter < 2; ++letter) {
      step(depth, letter);
      descend(depth + 1, (mask << 1) | static_cast<std::uint64_t>(letter), visit);
    }
  }

  int l_;
  int n_;
  std::vector<int> positions_[2];
  std::vector<std::uint64_t> state_;
};

inline int shard_bits_for(int n) { return std::min(n, 10); }

// Runs job(shard, worker) for every shard in [0, shards) on `workers` threads.
// Shards are claimed dynamically; the caller merges per-worker or per-shard
// results in a fixed order.
template <class Job>
void run_shards(std::uint64_t shards, int workers, Job&& job) {
  workers = std::max(1, workers);
  if (workers == 1 || shards <= 1) {
    for (std::uint64_t s = 0; s < shards; ++s) {
      job(s, 0);
    }
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::uint64_t s = next++; s < shards; s = next++) {
          job(s, w);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) {
          failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) {
    t.join();
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
}

} // namespace subseq::detail

#endif // SUBSEQ_ENUMERATE_HPP

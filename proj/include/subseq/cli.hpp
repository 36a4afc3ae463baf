#ifndef SUBSEQ_CLI_HPP
#define SUBSEQ_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>

namespace subseq::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 1;
// The computation ran but the checked claim did not hold.
inline constexpr int kMismatch = 2;

inline constexpr const char* kWorkersEnv = "SUBSEQ_WORKERS";

struct RunConfig {
  std::string subcommand;
  std::string pattern;
  std::string word;
  std::optional<int> n;
  std::optional<int> n_min;
  std::optional<int> n_max;
  int k = 0;
  int i = 0;
  int j = 0;
  int l = 0;
  int N = 0;
  int workers = 1;
  std::string format = "json";
  int budget = 22;
  bool allow_large = false;
  std::optional<std::string> checkpoint;
  bool oracle = false;
  bool raw = false;
  bool plain_leading = false;
  bool series = false;
  std::size_t cap = 1000;
};

int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv, then dispatches. Usage errors go to `err` with status 1.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace subseq::cli

#endif // SUBSEQ_CLI_HPP

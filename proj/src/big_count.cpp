#include "subseq/big_count.hpp"

#include <cctype>
#include <stdexcept>

namespace subseq {

BigCount binomial(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0 || b > a) {
    return 0;
  }
  if (b > a - b) {
    b = a - b;
  }
  BigCount result = 1;
  for (std::int64_t i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;
  }
  return result;
}

BigCount pow2(unsigned e) {
  BigCount result = 1;
  result <<= e;
  return result;
}

BigCount parse_decimal(const std::string& text) {
  std::size_t start = (!text.empty() && text[0] == '-') ? 1 : 0;
  if (text.size() == start) {
    throw std::invalid_argument("empty integer literal");
  }
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw std::invalid_argument("not a decimal integer: " + text);
    }
  }
  return BigCount(text);
}

std::vector<std::string> to_decimal(const std::vector<BigCount>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) {
    out.push_back(v.str());
  }
  return out;
}

} // namespace subseq

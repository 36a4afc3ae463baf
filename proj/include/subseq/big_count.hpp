#ifndef SUBSEQ_BIG_COUNT_HPP
#define SUBSEQ_BIG_COUNT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace subseq {

// Exact non-negative counts. Arithmetic never wraps.
using BigCount = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// C(a, b), zero when b < 0, b > a or a < 0.
BigCount binomial(std::int64_t a, std::int64_t b);

BigCount pow2(unsigned e);

inline std::string to_decimal(const BigCount& v) { return v.str(); }

// Throws std::invalid_argument on anything but an optional '-' and digits.
BigCount parse_decimal(const std::string& text);

std::vector<std::string> to_decimal(const std::vector<BigCount>& values);

} // namespace subseq

#endif // SUBSEQ_BIG_COUNT_HPP

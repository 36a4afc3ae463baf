#ifndef SUBSEQ_REPORT_HPP
#define SUBSEQ_REPORT_HPP

// JSON and CSV forms of every result type. Counts are always written as
// decimal strings so 64-bit JSON consumers cannot truncate them; indices
// (n, k, lengths) are JSON numbers.

#include "json.hpp"

#include "subseq/extremal.hpp"
#include "subseq/genfunc.hpp"
#include "subseq/spectrum.hpp"
#include "subseq/wilf.hpp"

#include <string>
#include <utility>
#include <vector>

namespace subseq {

using Json = nlohmann::ordered_json;

Json to_json(const Spectrum& s);
Spectrum spectrum_from_json(const Json& j);
// "k,count" header followed by one row per k.
std::string spectrum_csv(const Spectrum& s);

Json to_json(const IdentityReport& r);
Json to_json(const SequenceReport& r);
Json to_json(const ThreeRunMax& m);
Json to_json(const ExtremalResult& r);
Json to_json(const ZeroClassification& c);
Json to_json(const ProductSequenceReport& r);
Json to_json(const MaxSequenceReport& r);
Json to_json(const EquivalenceClassing& e);

// {i, j, N, coeffs: [{n, terms: [{k, c}]}]}
Json series_json(int i, int j, const BivariateSeries& s);
Json to_json(const std::vector<GfMismatch>& mismatches);

// "n,M" header followed by one row per n.
std::string max_table_csv(const std::vector<std::pair<int, BigCount>>& rows);

} // namespace subseq

#endif // SUBSEQ_REPORT_HPP

#include "subseq/report.hpp"

#include "subseq/errors.hpp"

#include <sstream>

namespace subseq {

namespace {

Json words_json(const std::vector<BinaryWord>& words) {
  Json arr = Json::array();
  for (const auto& w : words) {
    arr.push_back(w.str());
  }
  return arr;
}

Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

} // namespace

Json to_json(const Spectrum& s) {
  Json j;
  j["pattern"] = s.pattern.str();
  j["n"] = s.n;
  j["counts"] = to_decimal(s.counts);
  return j;
}

Spectrum spectrum_from_json(const Json& j) {
  try {
    Spectrum s;
    s.pattern = parse_word(j.at("pattern").get<std::string>());
    s.n = j.at("n").get<int>();
    for (const auto& c : j.at("counts")) {
      s.counts.push_back(parse_decimal(c.get<std::string>()));
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed spectrum JSON: ") + e.what());
  }
}

std::string spectrum_csv(const Spectrum& s) {
  std::ostringstream out;
  out << "k,count\n";
  for (std::size_t k = 0; k < s.counts.size(); ++k) {
    out << k << ',' << s.counts[k] << '\n';
  }
  return out.str();
}

Json to_json(const IdentityReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"identity", c.name}, {"holds", c.holds}, {"lhs", c.lhs.str()},
                      {"rhs", c.rhs.str()}});
  }
  Json j;
  j["identities"] = checks;
  j["average"] = {{"numerator", numerator(r.average).str()},
                  {"denominator", denominator(r.average).str()}};
  j["all_hold"] = r.all_hold();
  return j;
}

Json to_json(const SequenceReport& r) {
  Json j;
  j["values"] = to_decimal(r.values);
  j["unimodal"] = r.is_unimodal;
  j["log_concave"] = r.is_log_concave;
  j["internal_zero_positions"] = r.internal_zero_positions;
  return j;
}

Json to_json(const ThreeRunMax& m) {
  Json comps = Json::array();
  for (const auto& c : m.argmax) {
    comps.push_back({c.a, c.b, c.c});
  }
  return {{"M", m.M.str()}, {"compositions", comps}};
}

Json to_json(const ExtremalResult& r) {
  Json j;
  j["pattern"] = r.pattern.str();
  j["n"] = r.n;
  j["M"] = r.M.str();
  j["optimal_count"] = r.optimal_count.str();
  j["truncated"] = r.truncated;
  j["optimal_words"] = words_json(r.optimal_words);
  j["B_at_M_minus_1"] = r.B_at_M_minus_1.str();
  return j;
}

Json to_json(const ZeroClassification& c) {
  Json rows = Json::array();
  for (const auto& row : c.rows) {
    Json preds = Json::array();
    for (const auto& p : row.predictions) {
      Json pj;
      pj["source"] = p.source;
      pj["internal_zero"] = p.internal_zero ? Json(*p.internal_zero) : Json(nullptr);
      pj["gap_below_max"] = p.gap_below_max;
      preds.push_back(pj);
    }
    Json rj;
    rj["n"] = row.n;
    rj["internal_zero"] = row.internal_zero;
    rj["gap_below_max"] = row.gap_below_max;
    rj["predictions"] = preds;
    rj["agrees"] = row.agrees;
    rows.push_back(rj);
  }
  Json j;
  j["pattern"] = c.pattern.str();
  j["mode"] = c.predicted ? "predict" : "raw";
  j["rows"] = rows;
  j["all_agree"] = c.all_agree();
  return j;
}

Json to_json(const ProductSequenceReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back(to_decimal(row));
  }
  Json j;
  j["rows"] = rows;
  j["maxima"] = to_decimal(r.maxima);
  j["rows_log_concave_zero_free"] = r.rows_log_concave_zero_free;
  j["plateau_is_max"] = r.plateau_is_max;
  j["argmax_propagates"] = r.argmax_propagates;
  j["maxima_log_concave_zero_free"] = r.maxima_log_concave_zero_free;
  j["failures"] = r.failures;
  return j;
}

Json to_json(const MaxSequenceReport& r) {
  Json j;
  j["shape"] = {r.i, r.j, r.k};
  j["M"] = to_decimal(r.sequence.values);
  j["log_concave"] = r.sequence.is_log_concave;
  j["argmax_growth"] = r.argmax_growth;
  j["first_growth_failure"] = optional_int(r.first_growth_failure);
  return j;
}

Json to_json(const EquivalenceClassing& e) {
  Json classes = Json::array();
  for (const auto& c : e.classes) {
    Json cj;
    cj["members"] = words_json(c.members);
    cj["least_separating_n"] = optional_int(c.least_separating_n);
    if (c.representatives.size() > 1) {
      cj["candidate_representatives"] = words_json(c.representatives);
    }
    classes.push_back(cj);
  }
  Json j;
  j["l"] = e.l;
  j["n_max"] = e.n_max;
  j["classes"] = classes;
  j["verdict"] = e.verdict;
  j["horizon_note"] = e.verdict
                          ? "all classes are trivial within n_max; not a proof for larger n"
                          : "some non-trivial classes agree through n_max; candidates need a "
                            "larger horizon";
  j["prefilter_sound"] = e.prefilter_sound;
  j["max_least_separating_n"] = optional_int(e.max_least_separating_n);
  return j;
}

Json series_json(int i, int j, const BivariateSeries& s) {
  Json coeffs = Json::array();
  for (int n = 0; n <= s.order(); ++n) {
    Json terms = Json::array();
    for (const auto& [k, c] : s.at_degree(n)) {
      terms.push_back({{"k", k}, {"c", c.str()}});
    }
    coeffs.push_back({{"n", n}, {"terms", terms}});
  }
  Json out;
  out["i"] = i;
  out["j"] = j;
  out["N"] = s.order();
  out["coeffs"] = coeffs;
  return out;
}

Json to_json(const std::vector<GfMismatch>& mismatches) {
  Json arr = Json::array();
  for (const auto& m : mismatches) {
    arr.push_back({{"n", m.n}, {"k", m.k}, {"series", m.series.str()}, {"oracle", m.oracle.str()}});
  }
  return arr;
}

std::string max_table_csv(const std::vector<std::pair<int, BigCount>>& rows) {
  std::ostringstream out;
  out << "n,M\n";
  for (const auto& [n, m] : rows) {
    out << n << ',' << m << '\n';
  }
  return out.str();
}

} // namespace subseq

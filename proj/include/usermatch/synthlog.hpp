#pragma once

#include "usermatch/types.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace usermatch::synthlog {

// View names accepted by the consistency map.
inline const std::vector<std::string> kViews = {"url",       "ond",      "dates",
                                                "useragent", "geoipcity", "domain"};

struct GeneratorConfig {
  std::uint64_t seed = 42;
  std::size_t num_emails = 2000;

  // P(email owns 1..6 cookies). Defaults give ~2.1 cookies per email.
  std::vector<double> cookies_per_email = {0.16, 0.56, 0.25, 0.02, 0.007, 0.003};

  double mean_unique_urls_per_cookie = 12.9;

  std::size_t airports_origin = 1730;
  std::size_t airports_dest = 2115;
  std::size_t geoip_cities = 14880;
  std::size_t useragents = 23872;
  std::size_t product_types = 4;
  std::size_t geoip_countries = 197;
  std::size_t website_domains = 58;

  std::size_t time_span_days = 270;

  // Per view: probability that a cookie follows its email's persona
  // preference for that view (otherwise it draws a fresh one). Complementary
  // signal across views comes from these flips being independent.
  std::map<std::string, double> view_consistency = {
      {"url", 0.85},   {"ond", 0.80},       {"dates", 0.70},
      {"useragent", 0.50}, {"geoipcity", 0.70}, {"domain", 0.60}};

  // Throws usage_error with a field-level message on the first violation.
  void validate() const;
};

struct CorpusStats {
  std::size_t num_events = 0;
  std::size_t num_cookies = 0;
  std::size_t num_emails = 0;
  std::size_t num_matching_pairs = 0;
  std::size_t distinct_url_tokens = 0;
  std::size_t distinct_useragents = 0;
  std::size_t distinct_origins = 0;
  std::size_t distinct_destinations = 0;
  std::size_t distinct_cities = 0;
  double avg_unique_url_tokens_per_cookie = 0.0;

  std::string to_report() const;  // one "name value" line per row
};

using Corpus = std::pair<std::vector<Event>, GroundTruth>;

// Deterministic: equal configs (seed included) give byte-identical corpora.
// Events come out sorted by (timestamp, cookie_id).
Corpus generate_corpus(const GeneratorConfig& config);

CorpusStats corpus_stats(const std::vector<Event>& log, const GroundTruth& truth);

}  // namespace usermatch::synthlog

#pragma once

#include "usermatch/types.hpp"

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace usermatch::tokenizer {

// Per-cookie view documents plus the scalar attributes the pairwise features
// need. See pairfeatures for how the sets and modes are consumed.
struct CookieProfile {
  std::string cookie_id;
  // Keys: url, ond, dates, useragent, geoipcity, domain.
  std::map<std::string, Doc> view_docs;

  std::string os_mode;
  std::string city_mode;
  int passengers_mode = 0;
  std::set<int> passengers_set;
  std::vector<int> search_levels;
  int first_day = 0;
  int last_day = 0;
  std::vector<int> travel_search_gaps;  // departure day - search day, per event
  std::set<std::string> ond_set;
  std::set<std::string> dates_set;
  std::set<std::string> city_set;
  std::set<std::string> useragent_token_set;
  std::set<std::string> domain_set;
  std::string language_mode;
};

struct BuildResult {
  std::vector<CookieProfile> profiles;  // ascending cookie_id
  std::size_t date_warnings = 0;        // events skipped for date-derived fields
};

// Splits a raw URL-ish string on {/ ? & = - _ . :}, lowercases, drops empty
// fragments. Throws std::invalid_argument on empty input.
std::vector<std::string> tokenize_url(std::string_view raw);

// Pre-tokenized input: lowercased passthrough, no splitting.
std::vector<std::string> tokenize_url(const std::vector<std::string>& tokens);

// Groups events by cookie_id and pools tokens per view. Modes break ties
// lexicographically; events with return < departure are skipped for
// date-derived fields and counted in date_warnings.
BuildResult build_profiles(const std::vector<Event>& events);

// [t1..tn] -> [t1, t1t2, ..., t1..tn] (cumulative prefixes, no separator).
std::vector<std::string> multilevel_expand(const std::vector<std::string>& tokens);

// The multi-level baseline document of one cookie: expansion applied to each
// event's url_tokens, pooled. Used for the "multilevel_url" view.
Doc multilevel_url_doc(const std::vector<Event>& cookie_events);

}  // namespace usermatch::tokenizer

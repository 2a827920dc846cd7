#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace usermatch {

// L2-normalized sparse representation of one view document. Zero vector is
// allowed (all tokens out of vocabulary); inner indices are kept sorted.
using SparseVec = Eigen::SparseVector<double>;

// A view document: token multiset. std::map keeps iteration lexicographic,
// which every tie-break in the project relies on.
using Doc = std::map<std::string, int>;

// One browsing event of one cookieID. Calendar days are ints (days since
// 1970-01-01); timestamps are epoch seconds.
struct Event {
  std::string cookie_id;
  std::int64_t timestamp = 0;
  std::vector<std::string> url_tokens;
  std::string origin;
  std::string destination;
  int departure_date = 0;
  std::optional<int> return_date;
  std::string geoip_city;
  std::string geoip_country;
  std::vector<std::string> user_agent_tokens;
  std::string os;
  int passengers = 1;
  std::string product_type;
  int search_level = 0;
  std::string website_domain;
  std::string language;
};

// email -> cookies ownership map; matching pairs are derived, never stored.
struct GroundTruth {
  std::map<std::string, std::vector<std::string>> email_to_cookies;

  // All unordered same-email cookie pairs, each as (smaller id, larger id),
  // in deterministic order.
  std::vector<std::pair<std::string, std::string>> matching_pairs() const;
  std::map<std::string, std::string> cookie_to_email() const;
  std::size_t num_cookies() const;
  bool same_email(const std::string& a, const std::string& b) const;
};

inline std::pair<std::string, std::string> unordered_pair(std::string a, std::string b) {
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

}  // namespace usermatch

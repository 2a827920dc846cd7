#include "usermatch/types.hpp"

#include <algorithm>

namespace usermatch {

std::vector<std::pair<std::string, std::string>> GroundTruth::matching_pairs() const {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& [email, cookies] : email_to_cookies) {
    for (std::size_t i = 0; i < cookies.size(); ++i)
      for (std::size_t j = i + 1; j < cookies.size(); ++j)
        pairs.push_back(unordered_pair(cookies[i], cookies[j]));
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

std::map<std::string, std::string> GroundTruth::cookie_to_email() const {
  std::map<std::string, std::string> out;
  for (const auto& [email, cookies] : email_to_cookies)
    for (const auto& c : cookies) out[c] = email;
  return out;
}

std::size_t GroundTruth::num_cookies() const {
  std::size_t n = 0;
  for (const auto& [email, cookies] : email_to_cookies) n += cookies.size();
  return n;
}

bool GroundTruth::same_email(const std::string& a, const std::string& b) const {
  // Linear in emails; callers on hot paths should use cookie_to_email().
  for (const auto& [email, cookies] : email_to_cookies) {
    bool ha = std::find(cookies.begin(), cookies.end(), a) != cookies.end();
    bool hb = std::find(cookies.begin(), cookies.end(), b) != cookies.end();
    if (ha && hb) return true;
    if (ha || hb) return false;
  }
  return false;
}

}  // namespace usermatch

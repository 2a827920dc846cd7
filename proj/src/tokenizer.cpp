#include "usermatch/tokenizer.hpp"

#include "usermatch/core.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>

namespace usermatch::tokenizer {

namespace {

constexpr std::string_view kDelims = "/?&=-_.:";

bool is_delim(char c) { return kDelims.find(c) != std::string_view::npos; }

// Most frequent key; lexicographically smallest wins a tie. Doc ordering
// makes a plain scan sufficient.
template <typename K>
K mode_of(const std::map<K, int>& counts, K fallback) {
  K best = fallback;
  int best_count = 0;
  for (const auto& [key, count] : counts) {
    if (count > best_count) {
      best = key;
      best_count = count;
    }
  }
  return best;
}

void add_tokens(Doc& doc, const std::vector<std::string>& tokens) {
  for (const auto& t : tokens) ++doc[to_lower(t)];
}

}  // namespace

std::vector<std::string> tokenize_url(std::string_view raw) {
  if (raw.empty()) throw std::invalid_argument("tokenize_url: empty input");
  std::vector<std::string> out;
  std::string current;
  for (char c : raw) {
    if (is_delim(c)) {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

std::vector<std::string> tokenize_url(const std::vector<std::string>& tokens) {
  if (tokens.empty()) throw std::invalid_argument("tokenize_url: empty input");
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(to_lower(t));
  return out;
}

BuildResult build_profiles(const std::vector<Event>& events) {
  std::map<std::string, std::vector<const Event*>> groups;
  for (const auto& ev : events) groups[ev.cookie_id].push_back(&ev);

  BuildResult result;
  result.profiles.reserve(groups.size());

  for (const auto& [cookie_id, group] : groups) {
    CookieProfile p;
    p.cookie_id = cookie_id;
    Doc& url_doc = p.view_docs["url"];
    Doc& ond_doc = p.view_docs["ond"];
    Doc& dates_doc = p.view_docs["dates"];
    Doc& ua_doc = p.view_docs["useragent"];
    Doc& city_doc = p.view_docs["geoipcity"];
    Doc& domain_doc = p.view_docs["domain"];

    std::map<std::string, int> os_counts, city_counts, lang_counts;
    std::map<int, int> pax_counts;
    p.first_day = std::numeric_limits<int>::max();
    p.last_day = std::numeric_limits<int>::min();

    for (const Event* ev : group) {
      add_tokens(url_doc, tokenize_url(ev->url_tokens));

      std::string origin = to_lower(ev->origin);
      std::string dest = to_lower(ev->destination);
      ++ond_doc[origin];
      ++ond_doc[dest];
      p.ond_set.insert(origin);
      p.ond_set.insert(dest);

      bool dates_ok = !ev->return_date || *ev->return_date >= ev->departure_date;
      int event_day = day_from_timestamp(ev->timestamp);
      if (dates_ok) {
        std::string dep = date_token(ev->departure_date);
        ++dates_doc[dep];
        p.dates_set.insert(dep);
        if (ev->return_date) {
          std::string ret = date_token(*ev->return_date);
          ++dates_doc[ret];
          p.dates_set.insert(ret);
        }
        p.travel_search_gaps.push_back(ev->departure_date - event_day);
      } else {
        ++result.date_warnings;
      }

      add_tokens(ua_doc, ev->user_agent_tokens);
      for (const auto& t : ev->user_agent_tokens) p.useragent_token_set.insert(to_lower(t));

      std::string city = to_lower(ev->geoip_city);
      ++city_doc[city];
      p.city_set.insert(city);
      ++city_counts[city];

      std::string domain = to_lower(ev->website_domain);
      ++domain_doc[domain];
      p.domain_set.insert(domain);

      ++os_counts[to_lower(ev->os)];
      ++lang_counts[to_lower(ev->language)];
      ++pax_counts[ev->passengers];
      p.search_levels.push_back(ev->search_level);
      p.first_day = std::min(p.first_day, event_day);
      p.last_day = std::max(p.last_day, event_day);
    }

    p.os_mode = mode_of(os_counts, std::string());
    p.city_mode = mode_of(city_counts, std::string());
    p.language_mode = mode_of(lang_counts, std::string());
    p.passengers_mode = mode_of(pax_counts, 0);
    for (const auto& [pax, count] : pax_counts) p.passengers_set.insert(pax);

    result.profiles.push_back(std::move(p));
  }
  return result;
}

std::vector<std::string> multilevel_expand(const std::vector<std::string>& tokens) {
  if (tokens.empty()) throw std::invalid_argument("multilevel_expand: empty input");
  std::vector<std::string> out;
  out.reserve(tokens.size());
  std::string prefix;
  for (const auto& t : tokens) {
    prefix += t;
    out.push_back(prefix);
  }
  return out;
}

Doc multilevel_url_doc(const std::vector<Event>& cookie_events) {
  Doc doc;
  for (const auto& ev : cookie_events) {
    if (ev.url_tokens.empty()) continue;
    for (const auto& t : multilevel_expand(tokenize_url(ev.url_tokens))) ++doc[t];
  }
  return doc;
}

}  // namespace usermatch::tokenizer

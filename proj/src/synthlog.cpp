#include "usermatch/synthlog.hpp"

#include "usermatch/core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace usermatch::synthlog {

namespace {

constexpr std::size_t kLanguages = 30;
constexpr std::size_t kOsCount = 8;
constexpr std::size_t kBrowserCount = 12;
constexpr std::size_t kUaVersions = 40;
constexpr std::size_t kFillerPoolPerDomain = 60;
constexpr int kMaxSearchLevel = 4;

std::string fmt_id(const char* prefix, std::size_t i, int width) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%s%0*zu", prefix, width, i);
  return buf;
}

std::string origin_token(std::size_t i) { return fmt_id("org_", i, 4); }
std::string dest_token(std::size_t i) { return fmt_id("dst_", i, 4); }
std::string city_token(std::size_t i) { return fmt_id("city_", i, 5); }
std::string country_token(std::size_t i) { return fmt_id("ctry_", i, 3); }
std::string agent_token(std::size_t i) { return fmt_id("ua_", i, 5); }
std::string product_token(std::size_t i) { return fmt_id("prod_", i, 1); }
std::string domain_token(std::size_t i) { return fmt_id("dom_", i, 2); }
std::string language_token(std::size_t i) { return fmt_id("lang_", i, 2); }
std::string level_token(int lvl) { return fmt_id("lvl_", static_cast<std::size_t>(lvl), 1); }

std::string filler_token(std::size_t domain, std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "pg_%02zu_%03zu", domain, i);
  return buf;
}

struct OnD {
  std::size_t origin;
  std::size_t dest;
};

// Travel-date preference: searched departures cluster in a window.
struct DatePrefs {
  int center = 0;
  int halfwidth = 7;
  int trip_len = 7;
  double round_trip_prob = 0.5;
};

struct Persona {
  int act_start = 0;
  int act_len = 1;
  std::size_t home_origin = 0;
  std::vector<OnD> fav_onds;
  DatePrefs dates;
  std::size_t home_city = 0;
  std::size_t second_city = 0;
  bool has_second_city = false;
  std::vector<std::size_t> devices;
  std::vector<std::size_t> domains;
  std::size_t fav_product = 0;
  int pax_pref = 1;
  std::size_t language = 0;
  int base_level = 0;
  std::vector<std::string> filler_habit;
};

struct Vocabs {
  ZipfTable origins, dests, cities, agents, domains, products, filler;
};

const std::vector<double> kPaxCdf = {0.55, 0.85, 0.93, 0.98, 0.995, 1.0};

std::vector<OnD> draw_onds(Rng& rng, const Vocabs& v, std::size_t home_origin) {
  std::size_t n = 1 + rng.below(3);
  std::vector<OnD> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t org = rng.bernoulli(0.8) ? home_origin : v.origins.sample(rng);
    out.push_back({org, v.dests.sample(rng)});
  }
  return out;
}

DatePrefs draw_date_prefs(Rng& rng, const GeneratorConfig& cfg, int act_start) {
  DatePrefs d;
  int span = static_cast<int>(cfg.time_span_days);
  d.center = act_start + 10 + static_cast<int>(rng.below(static_cast<std::uint64_t>(
                                  std::max(1, span / 2 + 60))));
  d.halfwidth = 3 + static_cast<int>(rng.below(13));
  d.trip_len = 2 + static_cast<int>(rng.below(13));
  d.round_trip_prob = 0.3 + 0.6 * rng.next_double();
  return d;
}

std::vector<std::size_t> draw_devices(Rng& rng, const Vocabs& v) {
  std::size_t n = 1 + rng.below(3);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(v.agents.sample(rng));
  return out;
}

std::vector<std::size_t> draw_domains(Rng& rng, const Vocabs& v) {
  std::size_t n = 1 + rng.below(2);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(v.domains.sample(rng));
  return out;
}

std::vector<std::string> draw_filler_habit(Rng& rng, const Vocabs& v,
                                           std::size_t primary_domain,
                                           std::size_t habit_size) {
  std::vector<std::string> out;
  out.reserve(habit_size);
  for (std::size_t i = 0; i < habit_size; ++i)
    out.push_back(filler_token(primary_domain, v.filler.sample(rng)));
  return out;
}

Persona draw_persona(Rng& rng, const GeneratorConfig& cfg, const Vocabs& v,
                     std::size_t habit_size) {
  Persona p;
  int span = static_cast<int>(cfg.time_span_days);
  p.act_start = static_cast<int>(rng.below(static_cast<std::uint64_t>(span)));
  int max_len = std::min(180, span - p.act_start);
  p.act_len = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::max(1, max_len))));
  p.home_origin = v.origins.sample(rng);
  p.fav_onds = draw_onds(rng, v, p.home_origin);
  p.dates = draw_date_prefs(rng, cfg, p.act_start);
  p.home_city = v.cities.sample(rng);
  p.has_second_city = rng.bernoulli(0.3);
  p.second_city = p.has_second_city ? v.cities.sample(rng) : p.home_city;
  p.devices = draw_devices(rng, v);
  p.domains = draw_domains(rng, v);
  p.fav_product = v.products.sample(rng);
  p.pax_pref = 1 + static_cast<int>(rng.categorical_cdf(kPaxCdf));
  std::size_t home_country = p.home_city % cfg.geoip_countries;
  p.language = rng.bernoulli(0.8) ? home_country % kLanguages : rng.below(kLanguages);
  p.base_level = static_cast<int>(rng.below(3));
  p.filler_habit = draw_filler_habit(rng, v, p.domains.front(), habit_size);
  return p;
}

}  // namespace

void GeneratorConfig::validate() const {
  if (cookies_per_email.size() != 6)
    throw usage_error("config.cookies_per_email: expected 6 probabilities (counts 1..6)");
  double sum = 0.0;
  for (std::size_t i = 0; i < cookies_per_email.size(); ++i) {
    double p = cookies_per_email[i];
    if (p < 0.0 || p > 1.0)
      throw usage_error("config.cookies_per_email[" + std::to_string(i + 1) +
                        "]: probability outside [0,1]");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw usage_error("config.cookies_per_email: probabilities sum to " +
                      std::to_string(sum) + ", expected 1");
  if (mean_unique_urls_per_cookie <= 0.0)
    throw usage_error("config.mean_unique_urls_per_cookie: must be > 0");
  auto need_pos = [](std::size_t v, const char* name) {
    if (v == 0) throw usage_error(std::string("config.") + name + ": must be > 0");
  };
  need_pos(airports_origin, "airports_origin");
  need_pos(airports_dest, "airports_dest");
  need_pos(geoip_cities, "geoip_cities");
  need_pos(useragents, "useragents");
  need_pos(product_types, "product_types");
  need_pos(geoip_countries, "geoip_countries");
  need_pos(website_domains, "website_domains");
  need_pos(time_span_days, "time_span_days");
  for (const auto& view : kViews) {
    auto it = view_consistency.find(view);
    if (it == view_consistency.end())
      throw usage_error("config.view_consistency: missing view '" + view + "'");
    if (it->second < 0.0 || it->second > 1.0)
      throw usage_error("config.view_consistency." + view + ": outside [0,1]");
  }
  for (const auto& [view, p] : view_consistency)
    if (std::find(kViews.begin(), kViews.end(), view) == kViews.end())
      throw usage_error("config.view_consistency: unknown view '" + view + "'");
}

Corpus generate_corpus(const GeneratorConfig& cfg) {
  cfg.validate();

  std::vector<Event> log;
  GroundTruth truth;
  if (cfg.num_emails == 0) return {log, truth};

  Vocabs vocab{ZipfTable(cfg.airports_origin, 1.0), ZipfTable(cfg.airports_dest, 1.0),
               ZipfTable(cfg.geoip_cities, 1.05),  ZipfTable(cfg.useragents, 1.05),
               ZipfTable(cfg.website_domains, 1.0), ZipfTable(cfg.product_types, 1.2),
               ZipfTable(kFillerPoolPerDomain, 0.9)};

  // Knobs tying unique-URL-token count per cookie to the configured mean.
  // Calibrated once against the default config; the ±1.5 tolerance on the
  // Table-I-style target absorbs the residual.
  const double m = cfg.mean_unique_urls_per_cookie;
  const std::size_t habit_size =
      std::max<std::size_t>(2, static_cast<std::size_t>(std::lround(m * 0.31)));
  const double events_lambda = std::max(0.2, m / 8.0);

  std::vector<double> cookie_count_cdf(6);
  double acc = 0.0;
  for (std::size_t i = 0; i < 6; ++i) {
    acc += cfg.cookies_per_email[i];
    cookie_count_cdf[i] = acc;
  }

  Rng root(cfg.seed);
  const int span = static_cast<int>(cfg.time_span_days);
  std::size_t cookie_serial = 0;

  auto consistency = [&](const char* view) { return cfg.view_consistency.at(view); };

  for (std::size_t e = 0; e < cfg.num_emails; ++e) {
    Rng persona_rng = root.fork(e * 8);
    Persona persona = draw_persona(persona_rng, cfg, vocab, habit_size);
    std::size_t n_cookies = 1 + persona_rng.categorical_cdf(cookie_count_cdf);

    std::string email_id = fmt_id("em", e, 6);
    auto& cookie_list = truth.email_to_cookies[email_id];

    for (std::size_t c = 0; c < n_cookies; ++c) {
      Rng rng = root.fork(e * 8 + 1 + c);
      std::string cookie_id = fmt_id("ck", cookie_serial++, 6);
      cookie_list.push_back(cookie_id);

      // Per-view persona adherence.
      bool keep_ond = rng.bernoulli(consistency("ond"));
      bool keep_dates = rng.bernoulli(consistency("dates"));
      bool keep_ua = rng.bernoulli(consistency("useragent"));
      bool keep_city = rng.bernoulli(consistency("geoipcity"));
      bool keep_domain = rng.bernoulli(consistency("domain"));
      bool keep_url = rng.bernoulli(consistency("url"));

      std::size_t home_origin = keep_ond ? persona.home_origin : vocab.origins.sample(rng);
      std::vector<OnD> onds = keep_ond ? persona.fav_onds : draw_onds(rng, vocab, home_origin);
      DatePrefs dates = keep_dates ? persona.dates : draw_date_prefs(rng, cfg, persona.act_start);
      std::vector<std::size_t> devices = keep_ua ? persona.devices : draw_devices(rng, vocab);
      std::size_t primary_city = keep_city ? persona.home_city : vocab.cities.sample(rng);
      std::size_t second_city =
          keep_city ? persona.second_city : primary_city;
      std::vector<std::size_t> domains =
          keep_domain ? persona.domains : draw_domains(rng, vocab);
      std::vector<std::string> fillers =
          (keep_url && keep_domain)
              ? persona.filler_habit
              : draw_filler_habit(rng, vocab, domains.front(), habit_size);

      // Activity subwindow inside the persona window.
      int sub_start = persona.act_start +
                      static_cast<int>(rng.below(static_cast<std::uint64_t>(persona.act_len)));
      int max_sub = persona.act_start + persona.act_len - sub_start;
      int sub_len = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_sub)));

      std::size_t n_events = 1 + static_cast<std::size_t>(rng.poisson(events_lambda));
      for (std::size_t ev = 0; ev < n_events; ++ev) {
        Event event;
        event.cookie_id = cookie_id;
        int day = sub_start + static_cast<int>(rng.below(static_cast<std::uint64_t>(sub_len)));
        day = std::min(day, span - 1);
        event.timestamp =
            static_cast<std::int64_t>(day) * 86400 + static_cast<std::int64_t>(rng.below(86400));

        const OnD& ond = rng.bernoulli(0.85)
                             ? onds[rng.below(onds.size())]
                             : OnD{rng.bernoulli(0.8) ? home_origin : vocab.origins.sample(rng),
                                   vocab.dests.sample(rng)};
        event.origin = origin_token(ond.origin);
        event.destination = dest_token(ond.dest);

        int dep = dates.center +
                  static_cast<int>(rng.below(static_cast<std::uint64_t>(2 * dates.halfwidth + 1))) -
                  dates.halfwidth;
        dep = std::max(dep, day + 1);
        event.departure_date = dep;
        if (rng.bernoulli(dates.round_trip_prob))
          event.return_date = dep + dates.trip_len;

        std::size_t city = rng.bernoulli(0.85) ? primary_city : second_city;
        event.geoip_city = city_token(city);
        event.geoip_country = country_token(city % cfg.geoip_countries);

        std::size_t agent = devices[rng.below(devices.size())];
        event.user_agent_tokens = {agent_token(agent),
                                   fmt_id("os_", agent % kOsCount, 1),
                                   fmt_id("br_", (agent / kOsCount) % kBrowserCount, 1),
                                   fmt_id("uav_", (agent / (kOsCount * kBrowserCount)) % kUaVersions, 1)};
        event.os = fmt_id("os_", agent % kOsCount, 1);

        event.passengers = rng.bernoulli(0.85)
                               ? persona.pax_pref
                               : 1 + static_cast<int>(rng.categorical_cdf(kPaxCdf));
        std::size_t product =
            rng.bernoulli(0.8) ? persona.fav_product : rng.below(cfg.product_types);
        event.product_type = product_token(product);
        event.search_level =
            std::min(kMaxSearchLevel, persona.base_level + rng.poisson(0.7));
        event.website_domain = domain_token(domains[rng.below(domains.size())]);
        event.language = language_token(persona.language);

        event.url_tokens = {event.website_domain, event.product_type,
                            level_token(event.search_level), event.origin,
                            event.destination, date_token(event.departure_date)};
        if (event.return_date) event.url_tokens.push_back(date_token(*event.return_date));
        std::size_t n_fillers = 2 + rng.below(2);
        for (std::size_t f = 0; f < n_fillers; ++f)
          event.url_tokens.push_back(fillers[rng.below(fillers.size())]);

        log.push_back(std::move(event));
      }
    }
    std::sort(cookie_list.begin(), cookie_list.end());
  }

  std::sort(log.begin(), log.end(), [](const Event& a, const Event& b) {
    if (a.timestamp != b.timestamp) return a.timestamp < b.timestamp;
    return a.cookie_id < b.cookie_id;
  });
  return {std::move(log), std::move(truth)};
}

CorpusStats corpus_stats(const std::vector<Event>& log, const GroundTruth& truth) {
  CorpusStats s;
  s.num_events = log.size();
  s.num_emails = truth.email_to_cookies.size();
  s.num_cookies = truth.num_cookies();
  for (const auto& [email, cookies] : truth.email_to_cookies)
    s.num_matching_pairs += cookies.size() * (cookies.size() - 1) / 2;

  std::unordered_set<std::string> url_tokens, agents, origins, dests, cities;
  std::unordered_map<std::string, std::set<std::string>> per_cookie_tokens;
  for (const auto& ev : log) {
    for (const auto& t : ev.url_tokens) {
      url_tokens.insert(t);
      per_cookie_tokens[ev.cookie_id].insert(t);
    }
    std::string agent;
    for (const auto& t : ev.user_agent_tokens) {
      agent += t;
      agent += ' ';
    }
    agents.insert(agent);
    origins.insert(ev.origin);
    dests.insert(ev.destination);
    cities.insert(ev.geoip_city);
  }
  s.distinct_url_tokens = url_tokens.size();
  s.distinct_useragents = agents.size();
  s.distinct_origins = origins.size();
  s.distinct_destinations = dests.size();
  s.distinct_cities = cities.size();
  if (!per_cookie_tokens.empty()) {
    double total = 0.0;
    for (const auto& [id, toks] : per_cookie_tokens) total += static_cast<double>(toks.size());
    s.avg_unique_url_tokens_per_cookie = total / static_cast<double>(per_cookie_tokens.size());
  }
  return s;
}

std::string CorpusStats::to_report() const {
  std::ostringstream out;
  out << "events " << num_events << '\n'
      << "cookies " << num_cookies << '\n'
      << "emails " << num_emails << '\n'
      << "matching_pairs " << num_matching_pairs << '\n'
      << "distinct_url_tokens " << distinct_url_tokens << '\n'
      << "avg_unique_url_tokens_per_cookie "
      << format_double(avg_unique_url_tokens_per_cookie) << '\n'
      << "distinct_useragents " << distinct_useragents << '\n'
      << "distinct_origins " << distinct_origins << '\n'
      << "distinct_destinations " << distinct_destinations << '\n'
      << "distinct_cities " << distinct_cities << '\n';
  return out.str();
}

}  // namespace usermatch::synthlog

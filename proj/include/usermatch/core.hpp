#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace usermatch {

// Bad or missing inputs (config fields, absent files, malformed flags).
// The CLI maps this to a distinct exit code from runtime failures.
class usage_error : public std::runtime_error {
public:
  explicit usage_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Failure inside a pipeline stage; message carries the stage tag.
class stage_error : public std::runtime_error {
public:
  stage_error(const std::string& stage, const std::string& msg)
      : std::runtime_error("[" + stage + "] " + msg), stage_(stage) {}
  const std::string& stage() const { return stage_; }

private:
  std::string stage_;
};

// ---------------------------------------------------------------------------
// Deterministic RNG
//
// All randomness in the project flows through this wrapper so corpora,
// training runs and splits are byte-reproducible across platforms and
// standard-library versions (std:: distributions are not portable).
// Generator state is splitmix64.
// ---------------------------------------------------------------------------

class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  // Uniform in [0, n). n must be > 0.
  std::uint64_t below(std::uint64_t n);
  // Uniform in [0, 1) with 53-bit resolution.
  double next_double();
  bool bernoulli(double p);
  // Knuth's method; intended for small lambda.
  int poisson(double lambda);
  // Index into a cumulative weight table (last entry = total mass).
  std::size_t categorical_cdf(const std::vector<double>& cdf);
  // Derive an independent stream; mixing is stationary in `salt`.
  Rng fork(std::uint64_t salt) const;

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

private:
  std::uint64_t state_;
};

// Zipf-like categorical over {0..n-1} with weight (i+1)^-s, sampled by
// binary search over a precomputed CDF. Deterministic.
class ZipfTable {
public:
  ZipfTable() = default;
  ZipfTable(std::size_t n, double s);
  std::size_t sample(Rng& rng) const;
  std::size_t size() const { return cdf_.size(); }

private:
  std::vector<double> cdf_;
};

// ---------------------------------------------------------------------------
// Calendar days
//
// A calendar day is an int, days since 1970-01-01. Events carry epoch-second
// timestamps; day(ts) = floor division by 86400.
// ---------------------------------------------------------------------------

int day_from_timestamp(std::int64_t epoch_seconds);
std::string day_to_iso(int day);              // "2026-04-15"
int iso_to_day(std::string_view iso);         // throws usage_error on bad input
std::string date_token(int day);              // "d20260415", the URL-token form

// ---------------------------------------------------------------------------
// Misc
// ---------------------------------------------------------------------------

std::string to_lower(std::string_view s);
std::vector<std::string> split(std::string_view s, char delim);
std::string format_double(double v);          // shortest round-trip ("%.17g")

// SHA-256 of a byte string / file, lowercase hex. Used for run manifests.
std::string sha256_hex(std::string_view data);
std::string sha256_file(const std::string& path);

// Runs fn(begin, end) over [0, n) split into chunks of `grain`, on up to
// `threads` workers (0 = hardware concurrency). Chunks are disjoint, so
// results are deterministic for any thread count.
void parallel_for(std::size_t n, std::size_t grain, int threads,
                  const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace usermatch

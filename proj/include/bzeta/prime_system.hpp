#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bzeta/common.hpp"

namespace bzeta {

struct PrimeEntry {
  double norm;
  std::int64_t multiplicity;
};

// Generator data of a Beurling system: a sorted multiset of prime norms > 1.
// Equal norms are merged into the multiplicity; immutable after construction.
class PrimeSystem {
 public:
  PrimeSystem() = default;

  // Rational primes <= limit, multiplicity 1, by deterministic sieve.
  static PrimeSystem classical(double limit);

  // Arbitrary norms (all > 1); merged and sorted. Empty multiplicities
  // means all 1.
  static PrimeSystem from_list(std::span<const double> norms,
                               std::span<const std::int64_t> mults = {});

  // Primes placed on a fixed logarithmic grid over (2, limit] with expected
  // count density_scale * du / log u per grid cell; reproducible from seed.
  // Expected counts above 1 become deterministic multiplicity plus one
  // Bernoulli trial for the fractional part.
  static PrimeSystem random(double density_scale, double limit,
                            std::uint64_t seed, double log_step = 1e-3);

  const std::vector<PrimeEntry>& primes() const { return primes_; }
  const std::string& label() const { return label_; }
  void set_label(std::string l) { label_ = std::move(l); }

  bool empty() const { return primes_.empty(); }
  std::size_t distinct_count() const { return primes_.size(); }
  std::int64_t total_count() const;
  // Number of primes (with multiplicity) of norm <= x.
  std::int64_t count_below(double x) const;
  double max_norm() const;

  void save_csv(const std::string& path) const;
  static PrimeSystem load_csv(const std::string& path);

 private:
  explicit PrimeSystem(std::vector<PrimeEntry> raw);

  std::vector<PrimeEntry> primes_;
  std::string label_;
};

}  // namespace bzeta

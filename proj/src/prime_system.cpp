#include "bzeta/prime_system.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

namespace bzeta {

namespace {

// Portable uniform in [0,1): top 53 bits of the engine output.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

PrimeSystem::PrimeSystem(std::vector<PrimeEntry> raw) {
  for (const auto& e : raw) {
    if (!(e.norm > 1.0))
      throw DomainError("prime norm must be strictly greater than 1, got " +
                        fmt17(e.norm));
    if (e.multiplicity <= 0)
      throw DomainError("prime multiplicity must be positive");
  }
  std::sort(raw.begin(), raw.end(),
            [](const PrimeEntry& a, const PrimeEntry& b) { return a.norm < b.norm; });
  for (const auto& e : raw) {
    if (!primes_.empty() && primes_.back().norm == e.norm)
      primes_.back().multiplicity += e.multiplicity;
    else
      primes_.push_back(e);
  }
}

PrimeSystem PrimeSystem::classical(double limit) {
  if (!(limit >= 2.0))
    throw DomainError("classical_primes: limit must be >= 2 (empty system)");
  const auto n = static_cast<std::size_t>(limit);
  std::vector<bool> composite(n + 1, false);
  std::vector<PrimeEntry> out;
  for (std::size_t p = 2; p <= n; ++p) {
    if (composite[p]) continue;
    out.push_back({static_cast<double>(p), 1});
    for (std::size_t q = p * p; q <= n; q += p) composite[q] = true;
  }
  PrimeSystem ps(std::move(out));
  ps.label_ = "classical<=" + fmt17(limit);
  return ps;
}

PrimeSystem PrimeSystem::from_list(std::span<const double> norms,
                                   std::span<const std::int64_t> mults) {
  if (!mults.empty() && mults.size() != norms.size())
    throw DomainError("from_list: multiplicity list length mismatch");
  std::vector<PrimeEntry> raw;
  raw.reserve(norms.size());
  for (std::size_t i = 0; i < norms.size(); ++i)
    raw.push_back({norms[i], mults.empty() ? 1 : mults[i]});
  PrimeSystem ps(std::move(raw));
  ps.label_ = "list";
  return ps;
}

PrimeSystem PrimeSystem::random(double density_scale, double limit,
                                std::uint64_t seed, double log_step) {
  if (!(density_scale >= 0.0))
    throw DomainError("random_system: density_scale must be >= 0");
  if (!(limit > 2.0)) throw DomainError("random_system: limit must be > 2");
  if (!(log_step > 0.0)) throw DomainError("random_system: log_step must be > 0");

  std::mt19937_64 rng(seed);
  std::vector<PrimeEntry> raw;
  const double v_lo = std::log(2.0), v_hi = std::log(limit);
  // Grid nodes at v = log u; each cell carries expected count
  // density_scale * u * h / log u, matching dpi ~ du / log u.
  for (double v = v_lo + log_step; v <= v_hi; v += log_step) {
    const double u = std::exp(v);
    if (u > limit) break;
    const double lambda = density_scale * u * log_step / v;
    std::int64_t m = static_cast<std::int64_t>(std::floor(lambda));
    if (uniform01(rng) < lambda - static_cast<double>(m)) ++m;
    if (m > 0) raw.push_back({u, m});
  }
  PrimeSystem ps(std::move(raw));
  std::ostringstream lbl;
  lbl << "random(scale=" << density_scale << ",limit=" << limit
      << ",seed=" << seed << ")";
  ps.label_ = lbl.str();
  return ps;
}

std::int64_t PrimeSystem::total_count() const {
  std::int64_t n = 0;
  for (const auto& e : primes_) n += e.multiplicity;
  return n;
}

std::int64_t PrimeSystem::count_below(double x) const {
  std::int64_t n = 0;
  for (const auto& e : primes_) {
    if (e.norm > x) break;
    n += e.multiplicity;
  }
  return n;
}

double PrimeSystem::max_norm() const {
  return primes_.empty() ? 1.0 : primes_.back().norm;
}

void PrimeSystem::save_csv(const std::string& path) const {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open for write: " + path);
  f << "norm,multiplicity\n";
  for (const auto& e : primes_)
    f << fmt17(e.norm) << "," << e.multiplicity << "\n";
}

PrimeSystem PrimeSystem::load_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open: " + path);
  std::string line;
  if (!std::getline(f, line) || line.rfind("norm,multiplicity", 0) != 0)
    throw std::runtime_error("bad prime system header in " + path);
  std::vector<PrimeEntry> raw;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw std::runtime_error("bad prime system row: " + line);
    raw.push_back({std::stod(line.substr(0, comma)),
                   std::stoll(line.substr(comma + 1))});
  }
  PrimeSystem ps(std::move(raw));
  ps.label_ = "file:" + path;
  return ps;
}

}  // namespace bzeta

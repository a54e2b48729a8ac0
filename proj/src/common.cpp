#include "bzeta/common.hpp"

#include <cmath>
#include <cstdio>

namespace bzeta {

EnumerationCapExceeded::EnumerationCapExceeded(std::int64_t n)
    : std::runtime_error("semigroup enumeration exceeded cap after " +
                         std::to_string(n) + " elements"),
      generated(n) {}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::uint64_t fnv1a(const void* data, std::size_t n, std::uint64_t h) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t fnv1a_str(const std::string& s, std::uint64_t h) {
  return fnv1a(s.data(), s.size(), h);
}

std::vector<double> geometric_grid(double lo, double hi, int n) {
  if (!(lo > 0.0) || !(hi > lo) || n < 2)
    throw DomainError("geometric_grid: need 0 < lo < hi and n >= 2");
  std::vector<double> g(n);
  const double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < n; ++i)
    g[i] = std::exp(llo + (lhi - llo) * i / (n - 1));
  g.front() = lo;
  g.back() = hi;
  return g;
}

}  // namespace bzeta

#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bzeta {

using cplx = std::complex<double>;

// Argument outside an operation's domain (norm <= 1, sigma <= theta, ...).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Query outside the range covered by a table.
struct RangeError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// Operation requires a complete zero list but the completeness flag is unset.
struct IncompleteError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Semigroup enumeration hit the configured size cap; carries the partial count.
struct EnumerationCapExceeded : std::runtime_error {
  std::int64_t generated;
  explicit EnumerationCapExceeded(std::int64_t n);
};

// Neumaier compensated accumulator; keeps sums reproducible across
// summation orders to ~1e-12 relative.
class NeumaierSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v))
      comp_ += (sum_ - t) + v;
    else
      comp_ += (v - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// 17 significant digits: round-trips IEEE doubles exactly.
std::string fmt17(double v);

std::uint64_t fnv1a(const void* data, std::size_t n,
                    std::uint64_t h = 1469598103934665603ull);
std::uint64_t fnv1a_str(const std::string& s,
                        std::uint64_t h = 1469598103934665603ull);

// n points geometric between lo and hi inclusive (n >= 2).
std::vector<double> geometric_grid(double lo, double hi, int n);

inline bool abs_cplx_less(const cplx& a, const cplx& b) {
  return std::norm(a) < std::norm(b);
}

}  // namespace bzeta

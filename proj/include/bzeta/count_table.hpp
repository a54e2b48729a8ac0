#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bzeta/common.hpp"
#include "bzeta/prime_system.hpp"

namespace bzeta {

struct Jump {
  double x;      // jump location
  double value;  // cumulative value at and right of x
};

// Right-continuous step tables for N(x) and psi(x) up to a limit X.
// N counts semigroup elements of norm <= x (N(1) = 1, the unit);
// psi is the Chebyshev sum of Lambda over norms <= x.
class CountTable {
 public:
  CountTable() = default;
  explicit CountTable(double limit) : limit_(limit) {}

  double limit() const { return limit_; }
  const std::vector<Jump>& jumps_N() const { return jumps_N_; }
  const std::vector<Jump>& jumps_psi() const { return jumps_psi_; }
  bool has_N() const { return !jumps_N_.empty(); }
  bool has_psi() const { return has_psi_; }
  std::optional<double> kappa_ref() const { return kappa_ref_; }
  void set_kappa_ref(double k) { kappa_ref_ = k; }

  double N_at(double x) const;
  double N_left(double x) const;
  double psi_at(double x) const;
  double psi_left(double x) const;

  // Delta(x) = psi(x) - x; pre: 1 <= x <= limit.
  double delta(double x) const;
  double delta_left(double x) const;

  // D(X) = (1/X) int_1^X |Delta| dx, exact piecewise (psi constant between
  // jumps, so |psi - x| integrates in closed form per interval).
  double mean_abs_delta(double X) const;
  // S(X) = sup_{1<=x<=X} |Delta|; extrema occur at jump boundaries.
  double sup_abs_delta(double X) const;

  // Sum over N-jumps of dN * x^{-s} (Stieltjes power sum), compensated,
  // ascending x.
  double stieltjes_N_power(double s) const;

  // CSV cache `x,N,psi` at the union of jump points.
  void save_csv(const std::string& path) const;
  static CountTable load_csv(const std::string& path);

  // Builders fill the respective part; see free functions below.
  void set_jumps_N(std::vector<Jump> j);
  void set_jumps_psi(std::vector<Jump> j);

 private:
  double limit_ = 1.0;
  std::vector<Jump> jumps_N_;
  std::vector<Jump> jumps_psi_;
  bool has_psi_ = false;
  std::optional<double> kappa_ref_;
};

// Depth-first enumeration of all products p1^k1 ... pm^km <= X over
// nondecreasing prime indices; coincident norms branch by stars-and-bars
// multiplicity counts instead of expanding duplicate primes. Throws
// EnumerationCapExceeded past `cap` generated elements.
CountTable enumerate_integers(const PrimeSystem& ps, double X,
                              std::int64_t cap = 100'000'000);

// psi jump table: sum of multiplicity * log|p| over prime powers <= X.
CountTable psi_table(const PrimeSystem& ps, double X);

// Both tables in one.
CountTable build_count_table(const PrimeSystem& ps, double X,
                             std::int64_t cap = 100'000'000);

}  // namespace bzeta

#include "bzeta/count_table.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace bzeta {

namespace {

double step_at(const std::vector<Jump>& jumps, double x, double below) {
  // value at x of the right-continuous step function
  auto it = std::upper_bound(
      jumps.begin(), jumps.end(), x,
      [](double v, const Jump& j) { return v < j.x; });
  return it == jumps.begin() ? below : std::prev(it)->value;
}

double step_left(const std::vector<Jump>& jumps, double x, double below) {
  auto it = std::lower_bound(
      jumps.begin(), jumps.end(), x,
      [](const Jump& j, double v) { return j.x < v; });
  return it == jumps.begin() ? below : std::prev(it)->value;
}

std::vector<Jump> accumulate_sorted(std::vector<std::pair<double, double>>& raw) {
  std::sort(raw.begin(), raw.end());
  std::vector<Jump> jumps;
  jumps.reserve(raw.size());
  NeumaierSum acc;
  for (std::size_t i = 0; i < raw.size();) {
    const double x = raw[i].first;
    while (i < raw.size() && raw[i].first == x) {
      acc.add(raw[i].second);
      ++i;
    }
    jumps.push_back({x, acc.value()});
  }
  return jumps;
}

// C(m + k - 1, k): number of degree-k monomials in m variables.
double multiset_branches(std::int64_t m, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i)
    r *= static_cast<double>(m - 1 + i) / static_cast<double>(i);
  return std::round(r);
}

}  // namespace

void CountTable::set_jumps_N(std::vector<Jump> j) {
  jumps_N_ = std::move(j);
  for (std::size_t i = 1; i < jumps_N_.size(); ++i)
    if (jumps_N_[i].value < jumps_N_[i - 1].value)
      throw DomainError("N jump table not nondecreasing");
}

void CountTable::set_jumps_psi(std::vector<Jump> j) {
  jumps_psi_ = std::move(j);
  has_psi_ = true;
  for (std::size_t i = 1; i < jumps_psi_.size(); ++i)
    if (jumps_psi_[i].value < jumps_psi_[i - 1].value)
      throw DomainError("psi jump table not nondecreasing");
}

double CountTable::N_at(double x) const { return step_at(jumps_N_, x, 0.0); }
double CountTable::N_left(double x) const { return step_left(jumps_N_, x, 0.0); }
double CountTable::psi_at(double x) const { return step_at(jumps_psi_, x, 0.0); }
double CountTable::psi_left(double x) const {
  return step_left(jumps_psi_, x, 0.0);
}

double CountTable::delta(double x) const {
  if (!(x >= 1.0) || x > limit_)
    throw RangeError("delta: x outside [1, X] with X = " + fmt17(limit_));
  return psi_at(x) - x;
}

double CountTable::delta_left(double x) const {
  if (!(x >= 1.0) || x > limit_)
    throw RangeError("delta_left: x outside table range");
  return psi_left(x) - x;
}

double CountTable::mean_abs_delta(double X) const {
  if (!(X > 1.0) || X > limit_) throw RangeError("mean_abs_delta: bad X");
  // Between psi-jumps Delta(x) = c - x; integrate |c - x| in closed form,
  // splitting at x = c when the sign changes inside the interval.
  NeumaierSum acc;
  auto piece = [&acc](double c, double a, double b) {
    if (b <= a) return;
    auto primitive = [c](double t) { return t * (c - 0.5 * t); };  // int (c-x)
    if (c <= a) {
      acc.add(-(primitive(b) - primitive(a)));
    } else if (c >= b) {
      acc.add(primitive(b) - primitive(a));
    } else {
      acc.add(primitive(c) - primitive(a));
      acc.add(-(primitive(b) - primitive(c)));
    }
  };
  double prev_x = 1.0, prev_c = 0.0;
  for (const auto& j : jumps_psi_) {
    if (j.x >= X) break;
    if (j.x > prev_x) piece(prev_c, prev_x, j.x);
    prev_x = std::max(prev_x, j.x);
    prev_c = j.value;
  }
  piece(prev_c, prev_x, X);
  return acc.value() / X;
}

double CountTable::sup_abs_delta(double X) const {
  if (!(X >= 1.0) || X > limit_) throw RangeError("sup_abs_delta: bad X");
  // Delta decreases linearly between jumps: extrema at interval ends only.
  double s = std::abs(psi_at(1.0) - 1.0);
  double prev_x = 1.0, prev_c = psi_at(1.0);
  for (const auto& j : jumps_psi_) {
    if (j.x > X) break;
    s = std::max(s, std::abs(prev_c - j.x));  // just before the jump
    s = std::max(s, std::abs(j.value - j.x));
    prev_x = j.x;
    prev_c = j.value;
  }
  (void)prev_x;
  s = std::max(s, std::abs(prev_c - X));
  return s;
}

double CountTable::stieltjes_N_power(double s) const {
  NeumaierSum acc;
  double prev = 0.0;
  for (const auto& j : jumps_N_) {
    acc.add((j.value - prev) * std::pow(j.x, -s));
    prev = j.value;
  }
  return acc.value();
}

void CountTable::save_csv(const std::string& path) const {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open for write: " + path);
  f << "x,N,psi\n";
  std::size_t i = 0, k = 0;
  double n_cur = 0.0, psi_cur = 0.0;
  while (i < jumps_N_.size() || k < jumps_psi_.size()) {
    double x;
    if (k >= jumps_psi_.size())
      x = jumps_N_[i].x;
    else if (i >= jumps_N_.size())
      x = jumps_psi_[k].x;
    else
      x = std::min(jumps_N_[i].x, jumps_psi_[k].x);
    while (i < jumps_N_.size() && jumps_N_[i].x == x) n_cur = jumps_N_[i++].value;
    while (k < jumps_psi_.size() && jumps_psi_[k].x == x)
      psi_cur = jumps_psi_[k++].value;
    f << fmt17(x) << "," << fmt17(n_cur) << "," << fmt17(psi_cur) << "\n";
  }
}

CountTable CountTable::load_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open: " + path);
  std::string line;
  if (!std::getline(f, line) || line.rfind("x,N,psi", 0) != 0)
    throw std::runtime_error("bad count table header in " + path);
  std::vector<Jump> jn, jp;
  double limit = 1.0, prev_n = -1.0, prev_psi = -1.0;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string a, b, c;
    if (!std::getline(ss, a, ',') || !std::getline(ss, b, ',') ||
        !std::getline(ss, c))
      throw std::runtime_error("bad count table row: " + line);
    const double x = std::stod(a), n = std::stod(b), psi = std::stod(c);
    if (n < prev_n || psi < prev_psi)
      throw std::runtime_error("count table not monotone at x=" + a);
    if (n != prev_n) jn.push_back({x, n});
    if (psi != prev_psi) jp.push_back({x, psi});
    prev_n = n;
    prev_psi = psi;
    limit = std::max(limit, x);
  }
  CountTable t(limit);
  t.set_jumps_N(std::move(jn));
  t.set_jumps_psi(std::move(jp));
  return t;
}

CountTable enumerate_integers(const PrimeSystem& ps, double X, std::int64_t cap) {
  if (!(X >= 1.0)) throw DomainError("enumerate_integers: X must be >= 1");
  const auto& pr = ps.primes();
  std::vector<std::pair<double, double>> raw;  // (norm, element count)
  raw.reserve(1024);
  std::int64_t generated = 0;

  auto emit = [&](double value, double weight) {
    generated += static_cast<std::int64_t>(weight);
    if (generated > cap) throw EnumerationCapExceeded(generated);
    raw.emplace_back(value, weight);
  };

  // rec(i, v, w): element of norm v reachable in w ways using primes < i only.
  auto rec = [&](auto&& self, std::size_t i, double value, double weight) -> void {
    emit(value, weight);
    for (std::size_t j = i; j < pr.size(); ++j) {
      double v = value * pr[j].norm;
      if (v > X) break;  // norms sorted ascending
      for (int k = 1; v <= X; ++k, v *= pr[j].norm) {
        self(self, j + 1, v, weight * multiset_branches(pr[j].multiplicity, k));
      }
    }
  };
  rec(rec, 0, 1.0, 1.0);

  CountTable t(X);
  t.set_jumps_N(accumulate_sorted(raw));
  return t;
}

CountTable psi_table(const PrimeSystem& ps, double X) {
  if (!(X >= 1.0)) throw DomainError("psi_table: X must be >= 1");
  std::vector<std::pair<double, double>> raw;
  for (const auto& e : ps.primes()) {
    if (e.norm > X) break;
    const double lam = static_cast<double>(e.multiplicity) * std::log(e.norm);
    for (double q = e.norm; q <= X; q *= e.norm) raw.emplace_back(q, lam);
  }
  CountTable t(X);
  t.set_jumps_psi(accumulate_sorted(raw));
  return t;
}

CountTable build_count_table(const PrimeSystem& ps, double X, std::int64_t cap) {
  CountTable t = enumerate_integers(ps, X, cap);
  CountTable p = psi_table(ps, X);
  t.set_jumps_psi(std::vector<Jump>(p.jumps_psi()));
  return t;
}

}  // namespace bzeta

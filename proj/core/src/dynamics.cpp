#include "eacp/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace eacp {

AlgebraElement evolution_step(const Algebra& alg, const AlgebraElement& x) {
  if (x.n() != alg.n()) throw DimensionError("element dimension mismatch");
  const std::size_t n = alg.n();
  Vector h(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational acc(0);
    for (std::size_t i = 0; i < n; ++i) acc += alg.a()(i, j) * x.h()[i];
    h[j] = x.u() * acc;
  }
  Rational u = x.u() * dot(alg.b(), x.h());
  return {std::move(h), std::move(u)};
}

std::vector<double> evolution_step(const Algebra& alg,
                                   const std::vector<double>& x) {
  const std::size_t n = alg.n();
  if (x.size() != n + 1) throw DimensionError("element dimension mismatch");
  const double u = x[n];
  std::vector<double> out(n + 1, 0.0);
  double bx = 0.0;
  for (std::size_t i = 0; i < n; ++i) bx += alg.b()[i].to_double() * x[i];
  for (std::size_t j = 0; j < n; ++j) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += alg.a()(i, j).to_double() * x[i];
    out[j] = u * acc;
  }
  out[n] = u * bx;
  return out;
}

std::string to_string(TrajectoryStatus status) {
  switch (status) {
    case TrajectoryStatus::fixed_point: return "fixed_point";
    case TrajectoryStatus::reached_zero: return "reached_zero";
    case TrajectoryStatus::cycle: return "cycle";
    case TrajectoryStatus::budget_exhausted: return "budget_exhausted";
    case TrajectoryStatus::magnitude_overflow: return "magnitude_overflow";
  }
  return "unknown";
}

namespace {

std::string key_of(const AlgebraElement& x) { return x.to_string(); }

bool exceeds_bits(const AlgebraElement& x, std::size_t max_bits) {
  if (x.u().bit_size() > max_bits) return true;
  return std::any_of(x.h().begin(), x.h().end(),
                     [&](const Rational& c) { return c.bit_size() > max_bits; });
}

TrajectoryRecord exact_trajectory(const Algebra& alg, const AlgebraElement& x0,
                                  const TrajectoryOptions& opt) {
  TrajectoryRecord rec;
  rec.mode = TrajectoryMode::exact;
  rec.exact_points.push_back(x0);
  std::unordered_map<std::string, std::size_t> seen{{key_of(x0), 0}};
  std::deque<std::string> window{key_of(x0)};
  for (std::size_t k = 0;; ++k) {
    const AlgebraElement& x = rec.exact_points[k];
    rec.steps = k;
    if (k > 0 && x.is_zero()) {
      rec.status = TrajectoryStatus::reached_zero;
      return rec;
    }
    if (k == opt.max_steps) {
      rec.status = TrajectoryStatus::budget_exhausted;
      return rec;
    }
    AlgebraElement next = evolution_step(alg, x);
    if (next == x) {
      rec.status = TrajectoryStatus::fixed_point;
      return rec;
    }
    if (exceeds_bits(next, opt.max_bits)) {
      rec.status = TrajectoryStatus::magnitude_overflow;
      return rec;
    }
    std::string key = key_of(next);
    rec.exact_points.push_back(std::move(next));
    if (auto it = seen.find(key); it != seen.end()) {
      rec.steps = k + 1;
      rec.status = TrajectoryStatus::cycle;
      rec.cycle_length = k + 1 - it->second;
      return rec;
    }
    seen.emplace(key, k + 1);
    window.push_back(std::move(key));
    if (window.size() > opt.cycle_window) {
      seen.erase(window.front());
      window.pop_front();
    }
  }
}

double sup_norm(const std::vector<double>& v) {
  double m = 0.0;
  for (double c : v) m = std::max(m, std::fabs(c));
  return m;
}

TrajectoryRecord float_trajectory(const Algebra& alg, const AlgebraElement& x0,
                                  const TrajectoryOptions& opt) {
  TrajectoryRecord rec;
  rec.mode = TrajectoryMode::approximate;
  std::vector<double> start;
  for (const auto& c : x0.coords()) start.push_back(c.to_double());
  const double zero_scale = opt.tolerance * std::max(1.0, sup_norm(start));
  rec.float_points.push_back(std::move(start));
  for (std::size_t k = 0;; ++k) {
    const std::vector<double> x = rec.float_points[k];
    rec.steps = k;
    if (k > 0 && sup_norm(x) <= zero_scale) {
      rec.status = TrajectoryStatus::reached_zero;
      return rec;
    }
    if (k == opt.max_steps) {
      rec.status = TrajectoryStatus::budget_exhausted;
      return rec;
    }
    std::vector<double> next = evolution_step(alg, x);
    if (std::any_of(next.begin(), next.end(), [&](double c) {
          return !std::isfinite(c) || std::fabs(c) > opt.max_magnitude;
        })) {
      rec.status = TrajectoryStatus::magnitude_overflow;
      return rec;
    }
    double diff = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      diff = std::max(diff, std::fabs(next[i] - x[i]));
    }
    if (diff <= opt.tolerance * std::max(1.0, sup_norm(x))) {
      rec.status = TrajectoryStatus::fixed_point;
      return rec;
    }
    rec.float_points.push_back(std::move(next));
  }
}

}  // namespace

TrajectoryRecord trajectory(const Algebra& alg, const AlgebraElement& x0,
                            const TrajectoryOptions& options) {
  if (x0.n() != alg.n()) throw DimensionError("element dimension mismatch");
  if (options.max_steps == 0) throw std::invalid_argument("max_steps must be >= 1");
  if (options.mode == TrajectoryMode::approximate) {
    if (!(options.tolerance > 0.0)) {
      throw std::invalid_argument("tolerance must be positive");
    }
    return float_trajectory(alg, x0, options);
  }
  return exact_trajectory(alg, x0, options);
}

}  // namespace eacp

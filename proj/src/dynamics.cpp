#include "stepskew/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "stepskew/rng.hpp"

namespace stepskew {

FiberState FiberState::apply(const FiberModel& m, int symbol,
                             double& log_deriv) const {
  if (!boundary_mode_) {
    const FiberMap& f = m.map(symbol);
    log_deriv += std::log(std::abs(f.deriv(x_)));
    return interior(f.eval(x_));
  }
  if (symbol == 1) {
    // f1 = 1 - x: swaps the sides, distance unchanged, |f1'| = 1.
    return boundary(1 - side_, dist_);
  }
  log_deriv += std::log(m.f0_deriv_dist(side_, dist_));
  double nd = m.f0_dist(side_, dist_);
  if (nd > kWindow) return interior(side_ == 0 ? nd : 1.0 - nd);
  return boundary(side_, nd);
}

LiftedState LiftedState::from_x(const FiberModel& m, double x) {
  if (x <= 0) return LiftedState(-std::numeric_limits<double>::infinity());
  if (x >= 1) return LiftedState(std::numeric_limits<double>::infinity());
  return LiftedState(m.lift(x));
}

double LiftedState::value(const FiberModel& m) const {
  if (std::isinf(t_)) return t_ > 0 ? 1.0 : 0.0;
  return m.unlift(t_);
}

double LiftedState::boundary_dist(const FiberModel& m) const {
  if (std::isinf(t_)) return 0.0;
  double v = m.unlift(-std::abs(t_));
  return v;
}

double LiftedState::log_boundary_dist(const FiberModel& m) const {
  if (std::isinf(t_)) return -std::numeric_limits<double>::infinity();
  double u = -std::abs(t_);
  double d = m.unlift(u);
  if (d > 0) return std::log(d);
  // Mobius sigmoid underflow: dist = e^u/(1+e^u), log dist = u - log1p(e^u).
  return u - std::log1p(std::exp(u));
}

LiftedState LiftedState::apply(const FiberModel& m, int symbol,
                               double& log_deriv) const {
  if (symbol == 1) return LiftedState(-t_);
  if (std::isinf(t_)) {
    log_deriv += std::log(m.f0_deriv_dist(t_ > 0 ? 1 : 0, 0.0));
    return *this;
  }
  double d = boundary_dist(m);
  log_deriv += std::log(m.f0_deriv_dist(side(), d));
  return LiftedState(t_ + m.lift_shift());
}

namespace {

constexpr size_t kPrefixCap = 64;

template <typename Next>
ExponentSample lyapunov_impl(const SkewSystem& sys, double x0, long n,
                             Next next_symbol) {
  ExponentSample out;
  out.n = n;
  out.x0 = x0;
  double acc = 0;
  if (sys.lifted()) {
    LiftedState s = LiftedState::from_x(sys.model(), x0);
    for (long i = 0; i < n; ++i) {
      int sym = next_symbol(i);
      if (out.prefix.size() < kPrefixCap) out.prefix.push_back(sym);
      s = s.apply(sys.model(), sym, acc);
    }
  } else {
    FiberState s = FiberState::interior(x0);
    for (long i = 0; i < n; ++i) {
      int sym = next_symbol(i);
      if (out.prefix.size() < kPrefixCap) out.prefix.push_back(sym);
      s = s.apply(sys.model(), sym, acc);
    }
  }
  out.value = acc / static_cast<double>(n);
  return out;
}

}  // namespace

ExponentSample lyapunov_finite(const SkewSystem& sys,
                               std::span<const uint8_t> word, bool cycle,
                               double x0, long n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "lyapunov_finite needs n >= 1");
  if (word.empty()) throw Error(ErrorKind::InvalidArgument, "empty word");
  if (!cycle && static_cast<long>(word.size()) < n)
    throw Error(ErrorKind::InvalidArgument, "word shorter than n");
  return lyapunov_impl(sys, x0, n,
                       [&](long i) { return word[i % word.size()]; });
}

ExponentSample lyapunov_finite_bits(const SkewSystem& sys, uint64_t seed,
                                    double x0, long n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "lyapunov_finite needs n >= 1");
  CounterRng rng(seed);
  return lyapunov_impl(sys, x0, n, [&](long) { return rng.next_bit(); });
}

double mme_ex_exponent(const SkewSystem& sys) {
  const FiberModel& m = sys.model();
  return 0.25 * (std::log(m.f0().deriv(0.0)) + std::log(m.f0().deriv(1.0)) +
                 std::log(std::abs(m.f1().deriv(0.0))) +
                 std::log(std::abs(m.f1().deriv(1.0))));
}

const char* orbit_class_name(OrbitClass c) {
  switch (c) {
    case OrbitClass::Expanding: return "expanding";
    case OrbitClass::Contracting: return "contracting";
    case OrbitClass::Nonhyperbolic: return "nonhyperbolic";
  }
  return "?";
}

const char* orbit_location_name(OrbitLocation l) {
  return l == OrbitLocation::Core ? "core" : "exposed";
}

PeriodicOrbit make_orbit(const SkewSystem& sys, const Word& w, double x) {
  PeriodicOrbit o;
  o.word = w;
  o.x = x;
  auto [fx, dfx] = eval_word(sys.model(), w.bits(), x);
  o.residual = std::abs(fx - x);
  if (x == 0.0 || x == 1.0) {
    // Endpoint orbit: accumulate exact endpoint derivatives.
    o.location = OrbitLocation::Exposed;
    double acc = 0;
    FiberState s = FiberState::boundary(x == 0.0 ? 0 : 1, 0.0);
    for (uint8_t sym : w.bits()) s = s.apply(sys.model(), sym, acc);
    o.chi = acc / static_cast<double>(w.size());
  } else {
    o.location = OrbitLocation::Core;
    o.chi = std::log(std::abs(dfx)) / static_cast<double>(w.size());
  }
  o.cls = std::abs(o.chi) <= kHyperbolicTol
              ? OrbitClass::Nonhyperbolic
              : (o.chi > 0 ? OrbitClass::Expanding : OrbitClass::Contracting);
  return o;
}

std::vector<PeriodicOrbit> fiber_fixed_points(const SkewSystem& sys,
                                              const Word& w) {
  if (w.empty()) throw Error(ErrorKind::InvalidArgument, "empty word");
  const FiberModel& m = sys.model();
  auto g = [&](double x) { return eval_word(m, w.bits(), x).first - x; };

  std::vector<PeriodicOrbit> out;
  bool swaps = w.count(1) % 2 == 1;
  if (!swaps) {
    out.push_back(make_orbit(sys, w, 0.0));
    out.push_back(make_orbit(sys, w, 1.0));
  }

  const int n = 10000;
  double prev = g(1.0 / n);
  int degenerate_run = prev == 0.0 ? 1 : 0;
  for (int i = 2; i < n; ++i) {
    double x = static_cast<double>(i) / n;
    double cur = g(x);
    if (cur == 0.0) {
      if (++degenerate_run >= 2)
        throw Error(ErrorKind::DegenerateRoot,
                    "interval of fixed points detected for word " + w.str());
      out.push_back(make_orbit(sys, w, x));
    } else {
      degenerate_run = 0;
      if ((prev > 0) != (cur > 0) && prev != 0.0) {
        double a = static_cast<double>(i - 1) / n, b = x;
        bool up = prev < 0;
        for (int k = 0; k < 200 && b - a > 0; ++k) {
          double mid = 0.5 * (a + b);
          if (mid <= a || mid >= b) break;
          double v = g(mid);
          if ((v < 0) == up)
            a = mid;
          else
            b = mid;
        }
        out.push_back(make_orbit(sys, w, 0.5 * (a + b)));
      }
    }
    prev = cur;
  }
  return out;
}

std::pair<PeriodicOrbit, PeriodicOrbit> twin_pair(const SkewSystem& sys,
                                                  const Word& w) {
  std::vector<PeriodicOrbit> cand = fiber_fixed_points(sys, w);
  if (w.count(1) % 2 == 1) {
    // f_[w] swaps the endpoints; the endpoint two-cycle and further period-2
    // fiber orbits are fixed points of the doubled word.
    auto doubled = fiber_fixed_points(sys, w.power(2));
    cand.insert(cand.end(), doubled.begin(), doubled.end());
  }
  const PeriodicOrbit* hi = nullptr;
  const PeriodicOrbit* lo = nullptr;
  for (const auto& o : cand) {
    if (!hi || o.chi > hi->chi) hi = &o;
    if (!lo || o.chi < lo->chi) lo = &o;
  }
  if (!hi || hi->chi < -kHyperbolicTol || lo->chi > kHyperbolicTol)
    throw Error(ErrorKind::NoSolution,
                "twin pair not found for word " + w.str());
  return {*hi, *lo};
}

double ex_orbit_exponent(const FiberModel& m, const ExWord& w) {
  if (w.empty()) throw Error(ErrorKind::InvalidArgument, "empty ex-word");
  double acc = 0;
  for (ExSymbol s : w) {
    if (s.symbol() == 0)
      acc += std::log(m.f0_deriv_dist(s.side(), 0.0));
    else
      acc += std::log(std::abs(m.f1().deriv(s.side() == 0 ? 0.0 : 1.0)));
  }
  return acc / static_cast<double>(w.size());
}

}  // namespace stepskew

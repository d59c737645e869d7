#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stepskew/fiber.hpp"
#include "stepskew/symbolic.hpp"

namespace stepskew {

enum class Engine { Direct, LiftedExact };

// The step skew product F(xi, x) = (sigma xi, f_{xi_0}(x)) over a fiber pair.
class SkewSystem {
 public:
  explicit SkewSystem(const FiberModel& model,
                      Engine engine = Engine::Direct)
      : model_(&model),
        engine_(engine == Engine::LiftedExact && !model.has_lift()
                    ? Engine::Direct
                    : engine) {}

  const FiberModel& model() const { return *model_; }
  Engine engine() const { return engine_; }
  bool lifted() const { return engine_ == Engine::LiftedExact; }

 private:
  const FiberModel* model_;
  Engine engine_;
};

// Fiber point tracked at full relative precision near the boundary: interior
// points as plain doubles, points within kWindow of an endpoint as
// (side, distance). Distances evolve through the models' exact distance
// forms, so 1 - x down to ~1e-300 stays meaningful.
class FiberState {
 public:
  static constexpr double kWindow = 1e-8;

  static FiberState interior(double x) {
    FiberState s;
    if (x <= kWindow)
      s = boundary(0, std::max(x, 0.0));
    else if (x >= 1.0 - kWindow)
      s = boundary(1, std::max(1.0 - x, 0.0));
    else {
      s.boundary_mode_ = false;
      s.x_ = x;
    }
    return s;
  }
  static FiberState boundary(int side, double dist) {
    FiberState s;
    s.boundary_mode_ = true;
    s.side_ = side;
    s.dist_ = dist;
    return s;
  }

  bool near_boundary() const { return boundary_mode_; }
  int side() const { return side_; }
  // Distance to the nearest endpoint (exact in boundary mode).
  double boundary_dist() const {
    return boundary_mode_ ? dist_ : std::min(x_, 1.0 - x_);
  }
  double value() const {
    if (!boundary_mode_) return x_;
    return side_ == 0 ? dist_ : 1.0 - dist_;
  }
  bool on_boundary() const { return boundary_mode_ && dist_ == 0.0; }

  // Applies f_symbol; accumulates log |f'| at the point into log_deriv.
  FiberState apply(const FiberModel& m, int symbol, double& log_deriv) const;

 private:
  bool boundary_mode_ = false;
  double x_ = 0.5;
  int side_ = 0;
  double dist_ = 0;
};

// Point in the translation lift of a conjugate-to-translation model
// (f0: t -> t + shift, f1: t -> -t). Endpoints are t = -inf (x=0), +inf (x=1).
class LiftedState {
 public:
  static LiftedState from_x(const FiberModel& m, double x);
  static LiftedState from_t(double t) { return LiftedState{t}; }

  double t() const { return t_; }
  bool at_endpoint() const { return std::isinf(t_); }
  double value(const FiberModel& m) const;
  int side() const { return t_ >= 0 ? 1 : 0; }
  double boundary_dist(const FiberModel& m) const;
  double log_boundary_dist(const FiberModel& m) const;  // Mobius-exact

  LiftedState apply(const FiberModel& m, int symbol, double& log_deriv) const;

 private:
  explicit LiftedState(double t) : t_(t) {}
  double t_ = 0;
};

struct ExponentSample {
  long n = 0;
  double x0 = 0;
  Word prefix;     // first symbols of the itinerary (capped)
  double value = 0;
};

// Birkhoff average of log |f'| along n steps of the word (cycled when
// shorter than n). Uses the lifted engine on lift-capable systems.
ExponentSample lyapunov_finite(const SkewSystem& sys,
                               std::span<const uint8_t> word, bool cycle,
                               double x0, long n);

// Same along a seeded fair-bit itinerary.
ExponentSample lyapunov_finite_bits(const SkewSystem& sys, uint64_t seed,
                                    double x0, long n);

// chi(mu_max^ex) = (1/4)(log f0'(0) + log f0'(1) + log|f1'(0)| + log|f1'(1)|).
double mme_ex_exponent(const SkewSystem& sys);

enum class OrbitClass { Expanding, Contracting, Nonhyperbolic };
enum class OrbitLocation { Core, Exposed };

struct PeriodicOrbit {
  Word word;
  double x = 0;          // fiber fixed point of f_[word]
  double chi = 0;        // (1/|word|) log |(f_[word])'(x)|
  OrbitClass cls = OrbitClass::Nonhyperbolic;
  OrbitLocation location = OrbitLocation::Core;
  double residual = 0;   // |f_[word](x) - x|

  bool exposed() const { return location == OrbitLocation::Exposed; }
};

const char* orbit_class_name(OrbitClass c);
const char* orbit_location_name(OrbitLocation l);

inline constexpr double kHyperbolicTol = 1e-9;

// All roots of f_[w](x) - x on [0,1]: sign-change scan on a 1e-4 grid plus
// bisection, endpoint fixed points included. Throws DegenerateRoot when an
// interval of fixed points is detected.
std::vector<PeriodicOrbit> fiber_fixed_points(const SkewSystem& sys,
                                              const Word& w);

// One orbit with chi >= -tol and one with chi <= tol over the base word w
// (fixed points of f_[w], and of f_[ww] when w has an odd number of 1s, so
// endpoint two-cycles are available).
std::pair<PeriodicOrbit, PeriodicOrbit> twin_pair(const SkewSystem& sys,
                                                  const Word& w);

// Classifies chi against the hyperbolicity tolerance.
PeriodicOrbit make_orbit(const SkewSystem& sys, const Word& w, double x);

// Exponent of the exposed periodic point (endpoint derivatives only; exact).
double ex_orbit_exponent(const FiberModel& m, const ExWord& w);

}  // namespace stepskew

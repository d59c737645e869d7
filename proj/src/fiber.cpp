#include "stepskew/fiber.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>

namespace stepskew {

namespace {

constexpr double kGold = 0.6180339887498949;

// Golden-section maximization of h on [a,b].
template <typename F>
double golden_max(F h, double a, double b, int iters = 80) {
  double x1 = b - kGold * (b - a), x2 = a + kGold * (b - a);
  double h1 = h(x1), h2 = h(x2);
  for (int i = 0; i < iters && b - a > 1e-15; ++i) {
    if (h1 < h2) {
      a = x1;
      x1 = x2;
      h1 = h2;
      x2 = a + kGold * (b - a);
      h2 = h(x2);
    } else {
      b = x2;
      x2 = x1;
      h2 = h1;
      x1 = b - kGold * (b - a);
      h1 = h(x1);
    }
  }
  return std::max(h1, h2);
}

// Monotone bisection for g(x) = y, g increasing on [lo,hi].
template <typename G>
double bisect_increasing(G g, double lo, double hi, double y) {
  for (int i = 0; i < 200 && hi - lo > 0; ++i) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (g(mid) < y)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

// ---------------------------------------------------------------------------
// FiberModel defaults

double FiberModel::f0_dist(int side, double d) const {
  if (side == 0) return f0().eval(d);
  return 1.0 - f0().eval(1.0 - d);
}

double FiberModel::f0_deriv_dist(int side, double d) const {
  return side == 0 ? f0().deriv(d) : f0().deriv(1.0 - d);
}

double FiberModel::f0_inv_dist(int side, double d) const {
  if (side == 0) return f0().inverse(d);
  return 1.0 - f0().inverse(1.0 - d);
}

double FiberModel::lift(double) const {
  throw Error(ErrorKind::InvalidArgument, name() + " has no translation lift");
}
double FiberModel::unlift(double) const {
  throw Error(ErrorKind::InvalidArgument, name() + " has no translation lift");
}
double FiberModel::lift_shift() const {
  throw Error(ErrorKind::InvalidArgument, name() + " has no translation lift");
}

// ---------------------------------------------------------------------------
// PLD: piecewise-linear derivative, piecewise-quadratic f0.

namespace {

class PLDMap final : public FiberMap {
 public:
  PLDMap(std::vector<double> xs, std::vector<double> ds)
      : xs_(std::move(xs)), ds_(std::move(ds)) {
    size_t n = xs_.size() - 1;
    ms_.resize(n);
    fs_.resize(n + 1);
    fs_[0] = 0.0;
    for (size_t i = 0; i < n; ++i) {
      ms_[i] = (ds_[i + 1] - ds_[i]) / (xs_[i + 1] - xs_[i]);
      fs_[i + 1] =
          fs_[i] + (xs_[i + 1] - xs_[i]) * 0.5 * (ds_[i] + ds_[i + 1]);
    }
    // Anchor the last segment at f(1) = 1 exactly so the distance-to-1 form
    // and direct evaluation agree; the cumulative residual there is O(eps).
    last_ = n - 1;
  }

  double eval(double x) const override {
    if (x <= 0) return 0.0;
    if (x >= 1) return 1.0;
    size_t i = segment(x);
    if (i == last_) return 1.0 - dist1(1.0 - x);
    double u = x - xs_[i];
    return fs_[i] + u * (ds_[i] + 0.5 * ms_[i] * u);
  }

  double deriv(double x) const override {
    x = std::clamp(x, 0.0, 1.0);
    size_t i = segment(x);
    return ds_[i] + ms_[i] * (x - xs_[i]);
  }

  double inverse(double y) const override {
    if (y <= 0) return 0.0;
    if (y >= 1) return 1.0;
    size_t i = 0;
    while (i + 1 < last_ && y > fs_[i + 1]) ++i;
    if (y > fs_[last_]) return 1.0 - inv_dist1(1.0 - y);
    double a = y - fs_[i];
    // u solves ds u + ms u^2/2 = a; stable quadratic root.
    double u = 2.0 * a / (ds_[i] + std::sqrt(ds_[i] * ds_[i] + 2.0 * ms_[i] * a));
    return xs_[i] + u;
  }

  bool orientation_reversing() const override { return false; }

  // distance forms (exact in d)
  double dist0(double d) const {
    if (d > xs_[1]) return eval(d);
    return d * (ds_[0] + 0.5 * ms_[0] * d);
  }
  double dist1(double d) const {
    double w = 1.0 - xs_[last_];
    if (d > w) return 1.0 - eval(1.0 - d);
    return d * (ds_.back() - 0.5 * ms_[last_] * d);
  }
  double deriv_dist0(double d) const {
    if (d > xs_[1]) return deriv(d);
    return ds_[0] + ms_[0] * d;
  }
  double deriv_dist1(double d) const {
    double w = 1.0 - xs_[last_];
    if (d > w) return deriv(1.0 - d);
    return ds_.back() - ms_[last_] * d;
  }
  double inv_dist0(double d) const {
    if (d > fs_[1]) return inverse(d);
    return 2.0 * d / (ds_[0] + std::sqrt(ds_[0] * ds_[0] + 2.0 * ms_[0] * d));
  }
  double inv_dist1(double d) const {
    double w = 1.0 - xs_[last_];
    double lam = ds_.back();
    if (d > lam * w - 0.5 * ms_[last_] * w * w) return 1.0 - inverse(1.0 - d);
    return 2.0 * d / (lam + std::sqrt(lam * lam - 2.0 * ms_[last_] * d));
  }

 private:
  size_t segment(double x) const {
    size_t i = 0;
    while (i < last_ && x > xs_[i + 1]) ++i;
    return i;
  }

  std::vector<double> xs_, ds_, ms_, fs_;
  size_t last_;
};

}  // namespace

PLDModel::PLDModel(double beta, double lambda) : beta_(beta), lambda_(lambda) {
  if (!(beta > 1.0) || !(lambda > 0.0 && lambda < 1.0))
    throw Error(ErrorKind::InvalidArgument, "PLD requires beta>1, lambda in (0,1)");
  xs_ = {0.0, 0.35, 0.45, 0.9, 1.0};
  const double d1 = beta - 1e-4;          // near-plateau below beta
  const double plateau_drop = 4.5e-5;     // slope -1e-4 across [0.45, 0.9]
  auto integral = [&](double v) {
    std::vector<double> ds = {beta, d1, v, v - plateau_drop, lambda};
    double tot = 0;
    for (int i = 0; i < 4; ++i)
      tot += (xs_[i + 1] - xs_[i]) * 0.5 * (ds[i] + ds[i + 1]);
    return tot;
  };
  double lo = lambda, hi = d1;
  if (integral(lo) > 1.0 || integral(hi) < 1.0)
    throw Error(ErrorKind::NoSolution, "PLD free knot not solvable for these (beta, lambda)");
  v_ = bisect_increasing(integral, lo, hi, 1.0);
  ds_ = {beta, d1, v_, v_ - plateau_drop, lambda};
  for (size_t i = 0; i + 1 < ds_.size(); ++i)
    if (!(ds_[i] > ds_[i + 1]))
      throw Error(ErrorKind::InvalidArgument, "PLD derivative knots not strictly decreasing");
  map0_ = std::make_unique<PLDMap>(xs_, ds_);
}

double PLDModel::f0_dist(int side, double d) const {
  auto& m = static_cast<const PLDMap&>(*map0_);
  return side == 0 ? m.dist0(d) : m.dist1(d);
}
double PLDModel::f0_deriv_dist(int side, double d) const {
  auto& m = static_cast<const PLDMap&>(*map0_);
  return side == 0 ? m.deriv_dist0(d) : m.deriv_dist1(d);
}
double PLDModel::f0_inv_dist(int side, double d) const {
  auto& m = static_cast<const PLDMap&>(*map0_);
  return side == 0 ? m.inv_dist0(d) : m.inv_dist1(d);
}

// ---------------------------------------------------------------------------
// Mobius

namespace {

class MobiusMap final : public FiberMap {
 public:
  explicit MobiusMap(double beta) : b_(beta) {}
  double eval(double x) const override { return b_ * x / (1.0 + (b_ - 1.0) * x); }
  double deriv(double x) const override {
    double q = 1.0 + (b_ - 1.0) * x;
    return b_ / (q * q);
  }
  double inverse(double y) const override { return y / (b_ - (b_ - 1.0) * y); }
  bool orientation_reversing() const override { return false; }

 private:
  double b_;
};

}  // namespace

MobiusModel::MobiusModel(double beta) : beta_(beta) {
  if (!(beta > 1.0))
    throw Error(ErrorKind::InvalidArgument, "Mobius requires beta > 1");
  map0_ = std::make_unique<MobiusMap>(beta);
}

double MobiusModel::f0_dist(int side, double d) const {
  if (side == 0) return beta_ * d / (1.0 + (beta_ - 1.0) * d);
  return d / (beta_ - (beta_ - 1.0) * d);
}
double MobiusModel::f0_deriv_dist(int side, double d) const {
  double q = side == 0 ? 1.0 + (beta_ - 1.0) * d : beta_ - (beta_ - 1.0) * d;
  return beta_ / (q * q);
}
double MobiusModel::f0_inv_dist(int side, double d) const {
  if (side == 0) return d / (beta_ - (beta_ - 1.0) * d);
  return beta_ * d / (1.0 + (beta_ - 1.0) * d);
}

double MobiusModel::lift(double x) const {
  if (x <= 0.5) return std::log(x) - std::log1p(-x);
  return -(std::log(1.0 - x) - std::log(x));
}
double MobiusModel::unlift(double t) const {
  if (t >= 0) return 1.0 / (1.0 + std::exp(-t));
  double e = std::exp(t);
  return e / (1.0 + e);
}

// ---------------------------------------------------------------------------
// Arctan

double ArctanModel::phi(double y) {
  if (y > 1.0) return 1.0 - std::atan(1.0 / y) / M_PI;
  if (y < -1.0) return std::atan(-1.0 / y) / M_PI;
  return std::atan(y) / M_PI + 0.5;
}

double ArctanModel::phi_inv(double x) {
  if (x < 0.25) return -1.0 / std::tan(M_PI * x);
  if (x > 0.75) return 1.0 / std::tan(M_PI * (1.0 - x));
  return std::tan(M_PI * (x - 0.5));
}

namespace {

double arctan_deriv_from_y(double y) {
  if (std::abs(y) > 1e150) return 1.0 - 2.0 / y;
  double yp = y + 1.0;
  return (1.0 + y * y) / (1.0 + yp * yp);
}

class ArctanMap final : public FiberMap {
 public:
  double eval(double x) const override {
    if (x <= 0) return 0.0;
    if (x >= 1) return 1.0;
    return ArctanModel::phi(ArctanModel::phi_inv(x) + 1.0);
  }
  double deriv(double x) const override {
    if (x <= 0 || x >= 1) return 1.0;
    return arctan_deriv_from_y(ArctanModel::phi_inv(x));
  }
  double inverse(double y) const override {
    if (y <= 0) return 0.0;
    if (y >= 1) return 1.0;
    return ArctanModel::phi(ArctanModel::phi_inv(y) - 1.0);
  }
  bool orientation_reversing() const override { return false; }
};

}  // namespace

ArctanModel::ArctanModel() { map0_ = std::make_unique<ArctanMap>(); }

double ArctanModel::f0_dist(int side, double d) const {
  if (d <= 0) return 0.0;
  if (side == 0) return phi(phi_inv(d) + 1.0);
  // 1 - f0(1-d) = phi(-(phi_inv(1-d) + 1)), phi_inv(1-d) = -phi_inv(d)
  return phi(phi_inv(d) - 1.0);
}
double ArctanModel::f0_deriv_dist(int side, double d) const {
  if (d <= 0) return 1.0;
  double y = side == 0 ? phi_inv(d) : -phi_inv(d);
  return arctan_deriv_from_y(y);
}
double ArctanModel::f0_inv_dist(int side, double d) const {
  if (d <= 0) return 0.0;
  if (side == 0) return phi(phi_inv(d) - 1.0);
  return phi(phi_inv(d) + 1.0);
}

double ArctanModel::lift(double x) const { return phi_inv(x); }
double ArctanModel::unlift(double y) const { return phi(y); }

// ---------------------------------------------------------------------------
// Quartic parabolic

namespace {

class QuarticMap final : public FiberMap {
 public:
  explicit QuarticMap(double a) : a_(a) {}
  double eval(double x) const override {
    if (x <= 0) return 0.0;
    if (x >= 1) return 1.0;
    double u = x * (1.0 - x);
    return x + a_ * u * u;
  }
  double deriv(double x) const override {
    return 1.0 + 2.0 * a_ * x * (1.0 - x) * (1.0 - 2.0 * x);
  }
  double inverse(double y) const override {
    if (y <= 0) return 0.0;
    if (y >= 1) return 1.0;
    double lo = 0.0, hi = y;  // f(x) >= x, so root <= y
    for (int i = 0; i < 80; ++i) {
      double mid = 0.5 * (lo + hi);
      if (eval(mid) < y)
        lo = mid;
      else
        hi = mid;
    }
    double x = 0.5 * (lo + hi);
    for (int i = 0; i < 4; ++i) x -= (eval(x) - y) / deriv(x);
    return std::clamp(x, 0.0, 1.0);
  }
  bool orientation_reversing() const override { return false; }

 private:
  double a_;
};

}  // namespace

QuarticModel::QuarticModel(double a) : a_(a) {
  if (!(a > 0.0 && a < 27.0 / 4.0))
    throw Error(ErrorKind::InvalidArgument, "quartic coefficient must be in (0, 27/4)");
  if (!(a < 3.0 * std::sqrt(3.0)))
    throw Error(ErrorKind::InvalidArgument, "quartic coefficient too large for a diffeomorphism");
  map0_ = std::make_unique<QuarticMap>(a);
}

double QuarticModel::f0_dist(int side, double d) const {
  double w = 1.0 - d;
  if (side == 0) return d * (1.0 + a_ * d * w * w);
  return d * (1.0 - a_ * d * w * w);
}
double QuarticModel::f0_deriv_dist(int side, double d) const {
  if (side == 0) return 1.0 + 2.0 * a_ * d * (1.0 - d) * (1.0 - 2.0 * d);
  return 1.0 - 2.0 * a_ * d * (1.0 - d) * (1.0 - 2.0 * d);
}
double QuarticModel::f0_inv_dist(int side, double d) const {
  // Newton in distance form.
  double u = d;
  for (int i = 0; i < 60; ++i) {
    double g = f0_dist(side, u) - d;
    double gp = f0_deriv_dist(side, u);
    double step = g / gp;
    u -= step;
    if (std::abs(step) <= 1e-17 * std::abs(u)) break;
  }
  return u;
}

// ---------------------------------------------------------------------------
// Glued parabolic

namespace {

class GluedMap final : public FiberMap {
 public:
  GluedMap(const GluedParabolicModel* m) : m_(m) {}
  double eval(double x) const override;
  double deriv(double x) const override;
  double inverse(double y) const override;
  bool orientation_reversing() const override { return false; }

 private:
  const GluedParabolicModel* m_;
};

}  // namespace

GluedParabolicModel::GluedParabolicModel(double delta_glue, double beta,
                                         double lambda)
    : delta_glue_(delta_glue), base_(beta, lambda) {
  if (!(delta_glue > 0 && delta_glue < 0.2))
    throw Error(ErrorKind::InvalidArgument, "delta_glue must be in (0, 0.2)");
  const double g = delta_glue;
  const FiberMap& f = base_.f0();
  {
    double A = f.eval(g) - g, B = f.deriv(g) - 1.0;
    aL_ = B / (g * g) - 2.0 * A / (g * g * g);
    cL_ = 3.0 * A / (g * g) - B / g;
    if (!(cL_ > 0))
      throw Error(ErrorKind::NoSolution, "left gluing spline not above the diagonal");
  }
  {
    double A = base_.f0_dist(1, g) - g;  // negative
    double B = f.deriv(1.0 - g) - 1.0;   // negative
    aR_ = B / (g * g) - 2.0 * A / (g * g * g);
    cR_ = 3.0 * A / (g * g) - B / g;
    if (!(cR_ < 0))
      throw Error(ErrorKind::NoSolution, "right gluing spline not below the diagonal");
  }
  // Monotonicity of both cubic pieces on their ranges.
  for (int i = 0; i <= 1000; ++i) {
    double u = g * i / 1000.0;
    if (1.0 + u * (2.0 * cL_ + 3.0 * aL_ * u) <= 0 ||
        1.0 + u * (2.0 * cR_ + 3.0 * aR_ * u) <= 0)
      throw Error(ErrorKind::NoSolution, "gluing spline not monotone");
  }
  map0_ = std::make_unique<GluedMap>(this);
}

namespace {
inline double cubic(double u, double a, double c) { return u + u * u * (a * u + c); }
inline double cubic_d(double u, double a, double c) {
  return 1.0 + u * (2.0 * c + 3.0 * a * u);
}
inline double cubic_inv(double y, double a, double c, double hint_hi) {
  double lo = 0.0, hi = hint_hi;
  for (int i = 0; i < 80; ++i) {
    double mid = 0.5 * (lo + hi);
    if (cubic(mid, a, c) < y)
      lo = mid;
    else
      hi = mid;
  }
  double u = 0.5 * (lo + hi);
  for (int i = 0; i < 4; ++i) u -= (cubic(u, a, c) - y) / cubic_d(u, a, c);
  return u;
}
}  // namespace

double GluedMap::eval(double x) const {
  double g = m_->delta_glue();
  if (x <= 0) return 0.0;
  if (x >= 1) return 1.0;
  if (x < g) return cubic(x, m_->aL_, m_->cL_);
  if (x > 1.0 - g) return 1.0 - cubic(1.0 - x, m_->aR_, m_->cR_);
  return m_->base().f0().eval(x);
}

double GluedMap::deriv(double x) const {
  double g = m_->delta_glue();
  x = std::clamp(x, 0.0, 1.0);
  if (x < g) return cubic_d(x, m_->aL_, m_->cL_);
  if (x > 1.0 - g) return cubic_d(1.0 - x, m_->aR_, m_->cR_);
  return m_->base().f0().deriv(x);
}

double GluedMap::inverse(double y) const {
  double g = m_->delta_glue();
  if (y <= 0) return 0.0;
  if (y >= 1) return 1.0;
  double yg = cubic(g, m_->aL_, m_->cL_);
  if (y < yg) return cubic_inv(y, m_->aL_, m_->cL_, g);
  double yg1 = 1.0 - cubic(g, m_->aR_, m_->cR_);  // f(1-g)... image of right joint
  if (y > yg1) return 1.0 - cubic_inv(1.0 - y, m_->aR_, m_->cR_, g);
  return m_->base().f0().inverse(y);
}

double GluedParabolicModel::f0_dist(int side, double d) const {
  if (d <= 0) return 0.0;
  if (d >= delta_glue_) return FiberModel::f0_dist(side, d);
  if (side == 0) return cubic(d, aL_, cL_);
  return cubic(d, aR_, cR_);
}
double GluedParabolicModel::f0_deriv_dist(int side, double d) const {
  if (d >= delta_glue_) return FiberModel::f0_deriv_dist(side, d);
  if (side == 0) return cubic_d(d, aL_, cL_);
  return cubic_d(d, aR_, cR_);
}
double GluedParabolicModel::f0_inv_dist(int side, double d) const {
  if (d <= 0) return 0.0;
  if (side == 0) {
    if (d >= cubic(delta_glue_, aL_, cL_)) return FiberModel::f0_inv_dist(side, d);
    return cubic_inv(d, aL_, cL_, delta_glue_);
  }
  if (d >= cubic(delta_glue_, aR_, cR_)) return FiberModel::f0_inv_dist(side, d);
  return cubic_inv(d, aR_, cR_, delta_glue_);
}

// ---------------------------------------------------------------------------
// Hypotheses, distortion, word calculus

HypothesisReport check_hypotheses(const FiberModel& model) {
  const FiberMap& f0 = model.f0();
  const FiberMap& f1 = model.f1();
  HypothesisReport r;
  r.beta = f0.deriv(0.0);
  r.lambda = f0.deriv(1.0);

  // H1: endpoints fixed, no interior fixed point, beta>1>lambda.
  bool ends = std::abs(f0.eval(0.0)) <= 1e-12 && std::abs(f0.eval(1.0) - 1.0) <= 1e-12;
  bool above = true;
  for (int i = 1; i < 10000; ++i) {
    double x = i / 10000.0;
    if (f0.eval(x) - x <= 0) {
      above = false;
      break;
    }
  }
  r.h1 = ends && above && r.beta > 1.0 && r.lambda < 1.0;

  // H2: f1 decreasing with f1(0)=1, f1(1)=0.
  r.h2 = f1.eval(0.0) == 1.0 && f1.eval(1.0) == 0.0;
  for (int i = 0; i <= 100 && r.h2; ++i)
    if (f1.deriv(i / 100.0) >= 0) r.h2 = false;

  // c: monotone root of f0' - 1 (scan for a sign change, then bisection).
  const int n = 10000;
  double prev = f0.deriv(1.0 / n) - 1.0;
  double a = -1, b = -1;
  for (int i = 2; i < n; ++i) {
    double x = static_cast<double>(i) / n;
    double cur = f0.deriv(x) - 1.0;
    if (prev > 0 && cur <= 0) {
      a = static_cast<double>(i - 1) / n;
      b = x;
      break;
    }
    prev = cur;
  }
  if (a < 0)
    throw Error(ErrorKind::NoUnitDerivativeCrossing,
                "f0' - 1 has no sign change on (0,1)");
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (a + b);
    if (f0.deriv(mid) - 1.0 > 0)
      a = mid;
    else
      b = mid;
  }
  r.c = 0.5 * (a + b);
  double f0c = f0.eval(r.c);
  r.upsilon = 1.0 / f0.deriv(f0c);
  r.f0c2 = f0.eval(f0c);

  r.h4_applicable = r.beta > 1.0 + 1e-9 && r.lambda < 1.0 - 1e-9;
  r.h3_applicable = r.h4_applicable;

  // H3: f0' strictly decreasing plus f1(f0^2(c)) > f0^2(c).
  bool decreasing = true;
  double dprev = f0.deriv(0.0);
  for (int i = 1; i <= 2000; ++i) {
    double d = f0.deriv(i / 2000.0);
    if (d >= dprev) {
      decreasing = false;
      break;
    }
    dprev = d;
  }
  r.h3 = r.h3_applicable && decreasing && f1.eval(r.f0c2) > r.f0c2;

  if (r.h4_applicable) {
    r.kappa = r.lambda * r.lambda * (1.0 - r.lambda) / (r.beta * (r.beta - 1.0));
    r.h4 = r.kappa > 1.0;
  } else {
    r.kappa = std::numeric_limits<double>::quiet_NaN();
    r.h4 = false;
  }
  return r;
}

double distortion(const FiberModel& model, double delta) {
  if (!(delta > 0 && delta < 0.5))
    throw Error(ErrorKind::InvalidArgument, "distortion needs delta in (0, 1/2)");
  double best = 0.0;
  const int n = 10000;
  for (int sym = 0; sym <= 1; ++sym) {
    const FiberMap& f = model.map(sym);
    for (int side = 0; side <= 1; ++side) {
      double ref = std::abs(f.deriv(side == 0 ? 0.0 : 1.0));
      auto h = [&](double z) { return std::abs(std::log(std::abs(f.deriv(z)) / ref)); };
      double lo = side == 0 ? 0.0 : 1.0 - delta;
      double step = delta / n;
      double vprev = h(lo), vcur = h(lo + step);
      best = std::max(best, std::max(vprev, h(lo + delta)));
      for (int i = 1; i < n; ++i) {
        double vnext = h(lo + (i + 1) * step);
        if (vcur >= vprev && vcur >= vnext)  // local max: refine the bracket
          best = std::max(best, golden_max(h, lo + (i - 1) * step, lo + (i + 1) * step));
        vprev = vcur;
        vcur = vnext;
      }
    }
  }
  return best + 1e-10;  // upper-biased: never understate the supremum
}

std::pair<double, double> eval_word(const FiberModel& model,
                                    std::span<const uint8_t> word, double x) {
  double v = x, d = 1.0;
  for (uint8_t s : word) {
    const FiberMap& f = model.map(s);
    d *= f.deriv(v);
    v = f.eval(v);
  }
  return {v, d};
}

double eval_word_inverse(const FiberModel& model,
                         std::span<const uint8_t> word, double y) {
  double v = y;
  for (size_t i = word.size(); i-- > 0;) v = model.map(word[i]).inverse(v);
  return v;
}

double commutation_defect(const FiberModel& model, int grid) {
  const FiberMap& f0 = model.f0();
  const FiberMap& f1 = model.f1();
  double worst = 0.0;
  for (int i = 0; i <= grid; ++i) {
    double x = static_cast<double>(i) / grid;
    double lhs = f0.eval(f1.eval(x));
    double rhs = f1.eval(f0.inverse(x));
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

std::unique_ptr<FiberModel> make_model(const std::string& kind, double beta,
                                       double a, double delta_glue) {
  if (kind == "pld") return std::make_unique<PLDModel>(beta > 0 ? beta : 1.05);
  if (kind == "mobius") return std::make_unique<MobiusModel>(beta > 0 ? beta : 2.0);
  if (kind == "arctan") return std::make_unique<ArctanModel>();
  if (kind == "parabolic-quartic")
    return std::make_unique<QuarticModel>(a > 0 ? a : 4.0);
  if (kind == "parabolic-glued")
    return std::make_unique<GluedParabolicModel>(delta_glue > 0 ? delta_glue : 0.05);
  throw Error(ErrorKind::InvalidArgument, "unknown model kind: " + kind);
}

}  // namespace stepskew

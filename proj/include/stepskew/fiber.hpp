#pragma once

#include <cmath>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stepskew/errors.hpp"

namespace stepskew {

// C1 diffeomorphism of [0,1].
class FiberMap {
 public:
  virtual ~FiberMap() = default;
  virtual double eval(double x) const = 0;
  virtual double deriv(double x) const = 0;  // signed
  virtual double inverse(double y) const = 0;
  virtual bool orientation_reversing() const = 0;
};

// f1(x) = 1 - x.
class Reflection final : public FiberMap {
 public:
  double eval(double x) const override { return 1.0 - x; }
  double deriv(double) const override { return -1.0; }
  double inverse(double y) const override { return 1.0 - y; }
  bool orientation_reversing() const override { return true; }
};

// A fiber pair (f0, f1) with f1(x) = 1-x. All concrete families used here
// keep that involution; f0 carries the model.
//
// The *_dist members are distance-to-boundary forms of f0: they map the
// distance d of a point to the given side (0 or 1) to the distance of its
// image to the same side, at full relative precision for small d. This is
// what lets orbit computations run exactly where doubles stored as x near 1
// would lose all significant bits.
class FiberModel {
 public:
  virtual ~FiberModel() = default;
  virtual std::string name() const = 0;
  virtual const FiberMap& f0() const = 0;
  const FiberMap& f1() const { return reflection_; }
  const FiberMap& map(int symbol) const {
    return symbol == 0 ? f0() : static_cast<const FiberMap&>(reflection_);
  }

  virtual double f0_dist(int side, double d) const;
  virtual double f0_deriv_dist(int side, double d) const;
  virtual double f0_inv_dist(int side, double d) const;

  // Optional conjugacy to translation: f0 = unlift(lift(x) + lift_shift()),
  // f1 = unlift(-lift(x)). Exact for the Mobius and arctan families.
  virtual bool has_lift() const { return false; }
  virtual double lift(double) const;
  virtual double unlift(double) const;
  virtual double lift_shift() const;

 private:
  Reflection reflection_;
};

// f0 with strictly decreasing piecewise-linear derivative. Knot abscissae are
// fixed at {0, 0.35, 0.45, 0.9, 1}; the derivative values at 0.45 and 0.9
// share one free parameter (the second sits a fixed -1e-4 slope below the
// first) which is solved so that the derivative integrates to exactly 1.
class PLDModel final : public FiberModel {
 public:
  explicit PLDModel(double beta = 1.05, double lambda = 2.0 / 3.0);

  std::string name() const override { return "pld"; }
  const FiberMap& f0() const override { return *map0_; }

  double f0_dist(int side, double d) const override;
  double f0_deriv_dist(int side, double d) const override;
  double f0_inv_dist(int side, double d) const override;

  double beta() const { return beta_; }
  double lambda() const { return lambda_; }
  double free_knot_value() const { return v_; }
  const std::vector<double>& knots_x() const { return xs_; }
  const std::vector<double>& knots_d() const { return ds_; }

 private:
  double beta_, lambda_, v_;
  std::vector<double> xs_, ds_;
  std::unique_ptr<FiberMap> map0_;
};

// f0(x) = beta x / (1 + (beta-1) x). Conjugate to t -> t + log(beta) in the
// coordinate t = log(x/(1-x)); the exactly solvable representative.
class MobiusModel final : public FiberModel {
 public:
  explicit MobiusModel(double beta = 2.0);

  std::string name() const override { return "mobius"; }
  const FiberMap& f0() const override { return *map0_; }

  double f0_dist(int side, double d) const override;
  double f0_deriv_dist(int side, double d) const override;
  double f0_inv_dist(int side, double d) const override;

  bool has_lift() const override { return true; }
  double lift(double x) const override;
  double unlift(double t) const override;
  double lift_shift() const override { return std::log(beta_); }

  double beta() const { return beta_; }

 private:
  double beta_;
  std::unique_ptr<FiberMap> map0_;
};

// f0 = phi . theta . phi^{-1} with phi(y) = arctan(y)/pi + 1/2 and
// theta(y) = y + 1. Parabolic at both ends, commutes per f0 f1 = f1 f0^{-1}.
class ArctanModel final : public FiberModel {
 public:
  ArctanModel();

  std::string name() const override { return "arctan"; }
  const FiberMap& f0() const override { return *map0_; }

  double f0_dist(int side, double d) const override;
  double f0_deriv_dist(int side, double d) const override;
  double f0_inv_dist(int side, double d) const override;

  bool has_lift() const override { return true; }
  double lift(double x) const override;
  double unlift(double y) const override;
  double lift_shift() const override { return 1.0; }

  // phi and its inverse with stable near-boundary branches.
  static double phi(double y);
  static double phi_inv(double x);
  static double phi_deriv(double y) { return 1.0 / (M_PI * (1.0 + y * y)); }

 private:
  std::unique_ptr<FiberMap> map0_;
};

// Parabolic f0 with f0'(0) = 1 = f0'(1) and no interior fixed points.
// Direct quartic variant: f0(x) = x + a x^2 (1-x)^2, a in (0, 27/4).
class QuarticModel final : public FiberModel {
 public:
  explicit QuarticModel(double a = 4.0);

  std::string name() const override { return "parabolic-quartic"; }
  const FiberMap& f0() const override { return *map0_; }

  double f0_dist(int side, double d) const override;
  double f0_deriv_dist(int side, double d) const override;
  double f0_inv_dist(int side, double d) const override;

  double a() const { return a_; }

 private:
  double a_;
  std::unique_ptr<FiberMap> map0_;
};

// Gluing variant: equal to a PLD base on [delta_glue, 1-delta_glue], with
// C1 monotone cubic end pieces of derivative 1 at the endpoints.
class GluedParabolicModel final : public FiberModel {
 public:
  explicit GluedParabolicModel(double delta_glue = 0.05,
                               double beta = 1.05,
                               double lambda = 2.0 / 3.0);

  std::string name() const override { return "parabolic-glued"; }
  const FiberMap& f0() const override { return *map0_; }

  double f0_dist(int side, double d) const override;
  double f0_deriv_dist(int side, double d) const override;
  double f0_inv_dist(int side, double d) const override;

  double delta_glue() const { return delta_glue_; }
  const PLDModel& base() const { return base_; }

 private:
  double delta_glue_;
  PLDModel base_;
  // Left piece h(x) = x + x^2 (aL x + cL) on [0, delta_glue]; right piece in
  // distance-to-1 form q(d) = d + d^2 (aR d + cR) on [0, delta_glue].
  double aL_, cL_, aR_, cR_;
  std::unique_ptr<FiberMap> map0_;
  friend class GluedMap;
};

// ---------------------------------------------------------------------------

struct HypothesisReport {
  double beta = 0;      // realized f0'(0)
  double lambda = 0;    // realized f0'(1)
  double kappa = 0;     // lambda^2 (1-lambda) / (beta (beta-1))
  double c = 0;         // f0'(c) = 1
  double upsilon = 0;   // 1 / f0'(f0(c))
  double f0c2 = 0;      // f0^2(c)
  bool h1 = false, h2 = false, h3 = false, h4 = false;
  bool h3_applicable = true, h4_applicable = true;
};

// Verifies (H1)-(H4). c is found by monotone root finding on f0' - 1; throws
// NoUnitDerivativeCrossing when f0' - 1 has no sign change. For parabolic
// models (beta = 1 or lambda = 1) H4 is reported not-applicable.
HypothesisReport check_hypotheses(const FiberModel& model);

// Local distortion: sup over z in [0,delta] and [1-delta,1], i = 0,1, of
// |log(|f_i'(z)| / |f_i'(at the nearer endpoint)|)|. Grid of 1e4 points with
// golden-section refinement around each local maximum; result is biased up
// by 1e-10 so it never underestimates the supremum.
double distortion(const FiberModel& model, double delta);

// f_[w] = f_{w_n} o ... o f_{w_0} (first symbol acts first). Returns the
// value and the signed derivative via the chain rule.
std::pair<double, double> eval_word(const FiberModel& model,
                                    std::span<const uint8_t> word, double x);

// Applies the inverse word (undoes eval_word).
double eval_word_inverse(const FiberModel& model,
                         std::span<const uint8_t> word, double y);

// max over a grid of |f0(f1(x)) - f1(f0^{-1}(x))|; the A.4 commutation check.
double commutation_defect(const FiberModel& model, int grid = 1000);

std::unique_ptr<FiberModel> make_model(const std::string& kind,
                                       double beta, double a,
                                       double delta_glue);

}  // namespace stepskew

#pragma once

#include <functional>

#include "cattaneo/errors.hpp"

namespace cattaneo {

// Scalar coefficient function of temperature with analytic first and second
// derivatives. The solver never differentiates these numerically: a(theta)
// needs Z' and the energy derivative e_theta needs Z'', so callbacks ship
// their own derivatives. Built-ins cover the identity (== 1) and the affine
// family 1 + c*(theta - 1); custom() is for tests and experiments.
class CoeffFunction {
  public:
    CoeffFunction() = default;

    static CoeffFunction constant();
    static CoeffFunction affine(double slope);
    static CoeffFunction custom(std::function<double(double)> f,
                                std::function<double(double)> df,
                                std::function<double(double)> ddf);

    double value(double theta) const;
    double deriv(double theta) const;
    double deriv2(double theta) const;

  private:
    enum class Kind { Constant, Affine, Custom };
    Kind kind_ = Kind::Constant;
    double slope_ = 0.0;
    std::function<double(double)> f_, df_, ddf_;
};

// Gas constants and the temperature-dependent coefficient factorization
// tau(theta) = tau*g(theta), mu(theta) = mu*h(theta), lambda(theta) = lambda*l(theta),
// with kappa(theta) a positive function normalized to kappa(1) = 1.
struct PhysParams {
    double Cv = 1.0;      // heat capacity at constant volume
    double R = 1.0;       // gas constant
    double tau = 0.1;     // relaxation scale; > 0 except for the Fourier limit
    double mu = 0.1;      // shear viscosity scale
    double lambda = 0.1;  // bulk viscosity scale
    CoeffFunction g = CoeffFunction::constant();
    CoeffFunction h = CoeffFunction::constant();
    CoeffFunction l = CoeffFunction::constant();
    CoeffFunction kappa = CoeffFunction::constant();

    double tau_of(double theta) const { return tau * g.value(theta); }
    double mu_of(double theta) const { return mu * h.value(theta); }
    double lambda_of(double theta) const { return lambda * l.value(theta); }
    double kappa_of(double theta) const { return kappa.value(theta); }
    // 4/3 mu(theta) + lambda(theta), the coefficient of the radial viscous flux.
    double visc_of(double theta) const { return 4.0 / 3.0 * mu_of(theta) + lambda_of(theta); }
};

// Admissible band for rho and theta. Small solutions stay inside; the code
// only monitors it (leaving the band is reported, not clamped).
inline constexpr double kBandLo = 0.75;
inline constexpr double kBandHi = 1.25;

// Thermodynamic state at a single (rho, theta, q) point.
struct ThermoEval {
    double p;        // R rho theta
    double e;        // Cv theta + a(theta) q^2
    double a;        // Z/theta - Z'/2
    double Z;        // tau(theta)/kappa(theta)
    double A;        // a/theta - Z/(2 theta^2) = -(Z/(2 theta))'
    double e_theta;  // Cv + a'(theta) q^2 (at fixed q)
};

double pressure(double rho, double theta, const PhysParams& par);
double internal_energy(double theta, double q, const PhysParams& par);

double coeff_Z(double theta, const PhysParams& par);
double coeff_Zp(double theta, const PhysParams& par);
double coeff_Zpp(double theta, const PhysParams& par);
double coeff_a(double theta, const PhysParams& par);
double coeff_ap(double theta, const PhysParams& par);
double coeff_A(double theta, const PhysParams& par);
double coeff_Ap(double theta, const PhysParams& par);

// a(theta)/tau(theta) and a(theta)/Z(theta), evaluated without the tau factor
// so they stay finite as tau -> 0.
double coeff_a_over_tau(double theta, const PhysParams& par);
double coeff_a_over_Z(double theta, const PhysParams& par);

ThermoEval thermo_eval(double rho, double theta, double q, const PhysParams& par);

// Signed margin of the coercivity condition a(theta) - A(theta) >= tau/4.
// Positive means the relative entropy controls q^2 at this temperature.
double gap_condition(double theta, const PhysParams& par);

// rho Cv (theta - ln theta - 1) + R (rho ln rho - rho + 1)
//   + rho (a - A) q^2 + rho u^2 / 2
double relative_entropy_density(double rho, double u, double theta, double q,
                                const PhysParams& par);

// Second derivatives of e for diagnostics. e_thth uses a difference of the
// analytic a', since a'' would need third derivatives of g and kappa.
struct EnergySecondDerivs {
    double e_qq;    // 2 a(theta)
    double e_thq;   // 2 a'(theta) q
    double e_thth;  // a''(theta) q^2, finite-differenced
};
EnergySecondDerivs energy_second_derivs(double theta, double q, const PhysParams& par);

// Fixed by the 1e4-point sweep in the test suite:
//   C0 (x-1)^2 <= x ln x - x + 1 <= C1 (x-1)^2,
//   C0 (x-1)^2 <= x - ln x - 1  <= C1 (x-1)^2   on [3/4, 5/4].
inline constexpr double kTaylorC0 = 0.25;
inline constexpr double kTaylorC1 = 1.0;

struct TaylorBounds {
    bool lower_ok;
    bool upper_ok;
};
TaylorBounds taylor_bounds_check(double x);

} // namespace cattaneo

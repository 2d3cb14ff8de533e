#include "cattaneo/constitutive.hpp"

#include <cmath>

namespace cattaneo {

CoeffFunction CoeffFunction::constant() {
    CoeffFunction c;
    c.kind_ = Kind::Constant;
    return c;
}

CoeffFunction CoeffFunction::affine(double slope) {
    CoeffFunction c;
    c.kind_ = Kind::Affine;
    c.slope_ = slope;
    return c;
}

CoeffFunction CoeffFunction::custom(std::function<double(double)> f,
                                    std::function<double(double)> df,
                                    std::function<double(double)> ddf) {
    if (!f || !df || !ddf)
        throw ConfigurationError("CoeffFunction::custom: missing derivative callback");
    CoeffFunction c;
    c.kind_ = Kind::Custom;
    c.f_ = std::move(f);
    c.df_ = std::move(df);
    c.ddf_ = std::move(ddf);
    return c;
}

double CoeffFunction::value(double theta) const {
    switch (kind_) {
        case Kind::Constant: return 1.0;
        case Kind::Affine: return 1.0 + slope_ * (theta - 1.0);
        case Kind::Custom: return f_(theta);
    }
    return 1.0;
}

double CoeffFunction::deriv(double theta) const {
    switch (kind_) {
        case Kind::Constant: return 0.0;
        case Kind::Affine: return slope_;
        case Kind::Custom: return df_(theta);
    }
    return 0.0;
}

double CoeffFunction::deriv2(double theta) const {
    switch (kind_) {
        case Kind::Constant: return 0.0;
        case Kind::Affine: return 0.0;
        case Kind::Custom: return ddf_(theta);
    }
    return 0.0;
}

double pressure(double rho, double theta, const PhysParams& par) {
    if (rho <= 0.0 || theta <= 0.0)
        throw std::domain_error("pressure: rho and theta must be positive");
    return par.R * rho * theta;
}

double coeff_Z(double theta, const PhysParams& par) {
    if (theta <= 0.0) throw std::domain_error("coeff_Z: theta must be positive");
    return par.tau * par.g.value(theta) / par.kappa.value(theta);
}

double coeff_Zp(double theta, const PhysParams& par) {
    if (theta <= 0.0) throw std::domain_error("coeff_Zp: theta must be positive");
    const double g = par.g.value(theta), gp = par.g.deriv(theta);
    const double k = par.kappa.value(theta), kp = par.kappa.deriv(theta);
    return par.tau * (gp * k - g * kp) / (k * k);
}

double coeff_Zpp(double theta, const PhysParams& par) {
    if (theta <= 0.0) throw std::domain_error("coeff_Zpp: theta must be positive");
    const double g = par.g.value(theta), gp = par.g.deriv(theta), gpp = par.g.deriv2(theta);
    const double k = par.kappa.value(theta), kp = par.kappa.deriv(theta), kpp = par.kappa.deriv2(theta);
    // d/dtheta [ (g'k - gk')/k^2 ] = (g''k - gk'')/k^2 - 2k'(g'k - gk')/k^3
    return par.tau * ((gpp * k - g * kpp) / (k * k) - 2.0 * kp * (gp * k - g * kp) / (k * k * k));
}

double coeff_a(double theta, const PhysParams& par) {
    return coeff_Z(theta, par) / theta - 0.5 * coeff_Zp(theta, par);
}

double coeff_ap(double theta, const PhysParams& par) {
    const double Z = coeff_Z(theta, par);
    const double Zp = coeff_Zp(theta, par);
    const double Zpp = coeff_Zpp(theta, par);
    return Zp / theta - Z / (theta * theta) - 0.5 * Zpp;
}

double coeff_A(double theta, const PhysParams& par) {
    const double Z = coeff_Z(theta, par);
    return coeff_a(theta, par) / theta - Z / (2.0 * theta * theta);
}

double coeff_Ap(double theta, const PhysParams& par) {
    const double Z = coeff_Z(theta, par);
    const double Zp = coeff_Zp(theta, par);
    const double a = coeff_a(theta, par);
    const double ap = coeff_ap(theta, par);
    const double t2 = theta * theta;
    return ap / theta - a / t2 - Zp / (2.0 * t2) + Z / (t2 * theta);
}

double coeff_a_over_tau(double theta, const PhysParams& par) {
    if (theta <= 0.0) throw std::domain_error("coeff_a_over_tau: theta must be positive");
    const double g = par.g.value(theta), gp = par.g.deriv(theta);
    const double k = par.kappa.value(theta), kp = par.kappa.deriv(theta);
    // a/(tau g) with a = Z/theta - Z'/2 and Z = tau g/kappa
    return 1.0 / (k * theta) - 0.5 * (gp * k - g * kp) / (k * k * g);
}

double coeff_a_over_Z(double theta, const PhysParams& par) {
    if (theta <= 0.0) throw std::domain_error("coeff_a_over_Z: theta must be positive");
    const double g = par.g.value(theta), gp = par.g.deriv(theta);
    const double k = par.kappa.value(theta), kp = par.kappa.deriv(theta);
    // a/Z = 1/theta - Z'/(2Z), and Z'/Z = g'/g - kappa'/kappa
    return 1.0 / theta - 0.5 * (gp / g - kp / k);
}

double internal_energy(double theta, double q, const PhysParams& par) {
    if (theta <= 0.0) throw std::domain_error("internal_energy: theta must be positive");
    return par.Cv * theta + coeff_a(theta, par) * q * q;
}

ThermoEval thermo_eval(double rho, double theta, double q, const PhysParams& par) {
    if (rho <= 0.0 || theta <= 0.0)
        throw std::domain_error("thermo_eval: rho and theta must be positive");
    ThermoEval ev;
    ev.Z = coeff_Z(theta, par);
    ev.a = coeff_a(theta, par);
    ev.A = ev.a / theta - ev.Z / (2.0 * theta * theta);
    ev.p = par.R * rho * theta;
    ev.e = par.Cv * theta + ev.a * q * q;
    ev.e_theta = par.Cv + coeff_ap(theta, par) * q * q;
    return ev;
}

double gap_condition(double theta, const PhysParams& par) {
    if (theta <= 0.0) throw std::domain_error("gap_condition: theta must be positive");
    // a + (Z/(2 theta))' = a - A
    return coeff_a(theta, par) - coeff_A(theta, par) - 0.25 * par.tau;
}

double relative_entropy_density(double rho, double u, double theta, double q,
                                const PhysParams& par) {
    if (rho <= 0.0 || theta <= 0.0)
        throw std::domain_error("relative_entropy_density: rho and theta must be positive");
    const double gap = coeff_a(theta, par) - coeff_A(theta, par);
    return rho * par.Cv * (theta - std::log(theta) - 1.0) +
           par.R * (rho * std::log(rho) - rho + 1.0) + rho * gap * q * q +
           0.5 * rho * u * u;
}

EnergySecondDerivs energy_second_derivs(double theta, double q, const PhysParams& par) {
    if (theta <= 0.0)
        throw std::domain_error("energy_second_derivs: theta must be positive");
    EnergySecondDerivs d;
    d.e_qq = 2.0 * coeff_a(theta, par);
    d.e_thq = 2.0 * coeff_ap(theta, par) * q;
    const double h = 1e-6;
    const double app = (coeff_ap(theta + h, par) - coeff_ap(theta - h, par)) / (2.0 * h);
    d.e_thth = app * q * q;
    return d;
}

TaylorBounds taylor_bounds_check(double x) {
    if (x < kBandLo || x > kBandHi)
        throw std::domain_error("taylor_bounds_check: x outside [3/4, 5/4]");
    const double s = (x - 1.0) * (x - 1.0);
    const double f1 = x * std::log(x) - x + 1.0;
    const double f2 = x - std::log(x) - 1.0;
    // exact zero at x = 1; allow roundoff slack elsewhere
    const double eps = 1e-15;
    TaylorBounds b;
    b.lower_ok = (f1 >= kTaylorC0 * s - eps) && (f2 >= kTaylorC0 * s - eps);
    b.upper_ok = (f1 <= kTaylorC1 * s + eps) && (f2 <= kTaylorC1 * s + eps);
    return b;
}

} // namespace cattaneo

#include "cattaneo/dynamics.hpp"

#include <cmath>

namespace cattaneo {

const char* variant_name(ModelVariant v) {
    switch (v) {
        case ModelVariant::RELAXED: return "RELAXED";
        case ModelVariant::EULER_CC: return "EULER_CC";
        case ModelVariant::NSF: return "NSF";
    }
    return "?";
}

void check_variant_params(ModelVariant variant, const PhysParams& par) {
    switch (variant) {
        case ModelVariant::RELAXED:
            if (par.tau <= 0.0)
                throw ConfigurationError("RELAXED requires tau > 0");
            break;
        case ModelVariant::EULER_CC:
            if (par.tau <= 0.0)
                throw ConfigurationError("EULER_CC requires tau > 0");
            if (par.mu != 0.0 || par.lambda != 0.0)
                throw ConfigurationError("EULER_CC requires mu = lambda = 0");
            break;
        case ModelVariant::NSF:
            if (par.tau != 0.0)
                throw ConfigurationError("NSF requires tau = 0");
            break;
    }
}

RhsAssembler::RhsAssembler(const RadialGrid& grid, const PhysParams& par,
                           ModelVariant variant, RhsOptions opts)
    : grid_(grid), par_(par), variant_(variant), opts_(opts) {
    check_variant_params(variant, par);
}

void RhsAssembler::d1(std::span<const double> f, std::vector<double>& out) const {
    if (!opts_.debug_first_order_ddr) {
        ddr_into(f, grid_, out);
        return;
    }
    // degraded stencil for the negative-control verification path
    const int n = grid_.n;
    out.resize(n + 1);
    for (int i = 0; i < n; ++i) out[i] = (f[i + 1] - f[i]) / grid_.dr;
    out[n] = (f[n] - f[n - 1]) / grid_.dr;
}

// (nu(theta)(u_r + 2u/r))_r at node i: compact flux difference for (nu u_r)_r
// plus a centered derivative of 2 nu u / r. One-sided wide form at the walls
// (only exercised with boundary masking off, e.g. compatibility checks).
double RhsAssembler::viscous_term(const RadialState& s, int i) const {
    const int n = grid_.n;
    const double dr = grid_.dr;
    if (i >= 1 && i <= n - 1) {
        const double nu_ip = 0.5 * (nu_[i] + nu_[i + 1]);
        const double nu_im = 0.5 * (nu_[i] + nu_[i - 1]);
        const double lap = (nu_ip * (s.u[i + 1] - s.u[i]) - nu_im * (s.u[i] - s.u[i - 1])) / (dr * dr);
        const double gp = 2.0 * nu_[i + 1] * s.u[i + 1] / grid_.nodes[i + 1];
        const double gm = 2.0 * nu_[i - 1] * s.u[i - 1] / grid_.nodes[i - 1];
        return lap + (gp - gm) / (2.0 * dr);
    }
    return dg_dr_[i];
}

// r^-2 (r^2 kappa theta_r)_r at node i, zero-flux closure at the walls
// (the Fourier limit of q|_boundary = 0).
double RhsAssembler::conduction_term(const RadialState& s, int i) const {
    const int n = grid_.n;
    const double dr = grid_.dr;
    const double r2 = grid_.nodes[i] * grid_.nodes[i];
    if (i >= 1 && i <= n - 1) {
        const double cp = 0.5 * (condk_[i] + condk_[i + 1]);
        const double cm = 0.5 * (condk_[i] + condk_[i - 1]);
        return (cp * (s.theta[i + 1] - s.theta[i]) - cm * (s.theta[i] - s.theta[i - 1])) /
               (r2 * dr * dr);
    }
    if (i == 0) {
        const double cp = 0.5 * (condk_[0] + condk_[1]);
        return 2.0 * cp * (s.theta[1] - s.theta[0]) / (r2 * dr * dr);
    }
    const double cm = 0.5 * (condk_[n] + condk_[n - 1]);
    return -2.0 * cm * (s.theta[n] - s.theta[n - 1]) / (r2 * dr * dr);
}

void RhsAssembler::viscous_tridiag(const std::vector<double>& theta_coef,
                                   const std::vector<double>& rho, double scale,
                                   std::vector<double>& lo, std::vector<double>& di,
                                   std::vector<double>& up) const {
    const int n = grid_.n;
    const double dr = grid_.dr;
    nu_grow_:
    lo.assign(n + 1, 0.0);
    di.assign(n + 1, 1.0);
    up.assign(n + 1, 0.0);
    std::vector<double> nu(n + 1);
    for (int i = 0; i <= n; ++i) nu[i] = par_.visc_of(theta_coef[i]);
    for (int i = 1; i < n; ++i) {
        const double nu_ip = 0.5 * (nu[i] + nu[i + 1]);
        const double nu_im = 0.5 * (nu[i] + nu[i - 1]);
        const double c = scale / rho[i];
        // row i of I - scale/rho * [compact (nu u_r)_r + centered (2 nu u/r)_r]
        lo[i] = -c * (nu_im / (dr * dr) - nu[i - 1] / (grid_.nodes[i - 1] * dr));
        di[i] = 1.0 + c * (nu_ip + nu_im) / (dr * dr);
        up[i] = -c * (nu_ip / (dr * dr) + nu[i + 1] / (grid_.nodes[i + 1] * dr));
    }
}

void RhsAssembler::conduction_tridiag(const std::vector<double>& theta_coef,
                                      const std::vector<double>& rho, double scale,
                                      std::vector<double>& lo, std::vector<double>& di,
                                      std::vector<double>& up) const {
    const int n = grid_.n;
    const double dr = grid_.dr;
    lo.assign(n + 1, 0.0);
    di.assign(n + 1, 1.0);
    up.assign(n + 1, 0.0);
    std::vector<double> ck(n + 1);
    for (int i = 0; i <= n; ++i)
        ck[i] = grid_.nodes[i] * grid_.nodes[i] * par_.kappa_of(theta_coef[i]);
    for (int i = 0; i <= n; ++i) {
        const double r2 = grid_.nodes[i] * grid_.nodes[i];
        const double c = scale / (rho[i] * par_.Cv * r2 * dr * dr);
        if (i == 0) {
            const double cp = 0.5 * (ck[0] + ck[1]);
            di[0] = 1.0 + 2.0 * c * cp;
            up[0] = -2.0 * c * cp;
        } else if (i == n) {
            const double cm = 0.5 * (ck[n] + ck[n - 1]);
            di[n] = 1.0 + 2.0 * c * cm;
            lo[n] = -2.0 * c * cm;
        } else {
            const double cp = 0.5 * (ck[i] + ck[i + 1]);
            const double cm = 0.5 * (ck[i] + ck[i - 1]);
            lo[i] = -c * cm;
            di[i] = 1.0 + c * (cp + cm);
            up[i] = -c * cp;
        }
    }
}

void RhsAssembler::assemble(const RadialState& s, Rhs& out) {
    const int n = grid_.n;
    const int m = n + 1;

    for (int i = 0; i <= n; ++i) {
        if (s.rho[i] <= 0.0)
            throw PositivityError("rhs: nonpositive density at node " + std::to_string(i), i,
                                  s.rho[i]);
        if (s.theta[i] <= 0.0)
            throw PositivityError("rhs: nonpositive temperature at node " + std::to_string(i), i,
                                  s.theta[i]);
    }

    auto sized = [m](std::vector<double>& v) { v.assign(m, 0.0); };
    sized(out.drho); sized(out.du); sized(out.dtheta); sized(out.dq);
    sized(out.drho_ns); sized(out.du_ns); sized(out.dtheta_ns); sized(out.dq_ns);
    sized(out.drho_st); sized(out.du_st); sized(out.dtheta_st); sized(out.dq_st);

    d1(s.u, du_dr_);
    d1(s.theta, dth_dr_);
    p_.resize(m);
    rhou_.resize(m);
    for (int i = 0; i <= n; ++i) {
        p_[i] = par_.R * s.rho[i] * s.theta[i];
        rhou_[i] = s.rho[i] * s.u[i];
    }
    d1(p_, dp_dr_);
    d1(rhou_, drhou_dr_);

    const bool has_q = variant_ != ModelVariant::NSF;
    if (has_q) d1(s.q, dq_dr_);

    const bool viscous = variant_ != ModelVariant::EULER_CC && (par_.mu != 0.0 || par_.lambda != 0.0);
    if (viscous) {
        nu_.resize(m);
        gflux_.resize(m);
        for (int i = 0; i <= n; ++i) {
            nu_[i] = par_.visc_of(s.theta[i]);
            gflux_[i] = nu_[i] * (du_dr_[i] + 2.0 * s.u[i] / grid_.nodes[i]);
        }
        d1(gflux_, dg_dr_);
    }
    if (variant_ == ModelVariant::NSF) {
        condk_.resize(m);
        for (int i = 0; i <= n; ++i)
            condk_[i] = grid_.nodes[i] * grid_.nodes[i] * par_.kappa_of(s.theta[i]);
    }

    for (int i = 0; i <= n; ++i) {
        const double r = grid_.nodes[i];
        const double rho = s.rho[i], u = s.u[i], th = s.theta[i];
        const double q = has_q ? s.q[i] : 0.0;
        const double div = du_dr_[i] + 2.0 * u / r;

        // mass
        const double mass = -drhou_dr_[i] - 2.0 * rho * u / r;
        out.drho_ns[i] = mass;
        out.drho[i] = mass;

        // momentum
        const double visc = viscous ? viscous_term(s, i) : 0.0;
        out.du_ns[i] = (-rho * u * du_dr_[i] - dp_dr_[i]) / rho;
        out.du_st[i] = visc / rho;
        out.du[i] = (-rho * u * du_dr_[i] - dp_dr_[i] + visc) / rho;

        // energy
        const double mu_th = par_.mu_of(th);
        const double la_th = par_.lambda_of(th);
        const double phi = 2.0 * du_dr_[i] * du_dr_[i] + 4.0 * u * u / (r * r) -
                           (2.0 / 3.0) * div * div;
        const double heat_visc = mu_th * phi + la_th * div * div;
        if (variant_ == ModelVariant::NSF) {
            const double cond = conduction_term(s, i);
            out.dtheta_ns[i] =
                (-rho * u * par_.Cv * dth_dr_[i] - p_[i] * div + heat_visc) / (rho * par_.Cv);
            out.dtheta_st[i] = cond / (rho * par_.Cv);
            out.dtheta[i] = (-rho * u * par_.Cv * dth_dr_[i] - p_[i] * div + cond + heat_visc) /
                            (rho * par_.Cv);
        } else {
            const double a = coeff_a(th, par_);
            const double e_th = par_.Cv + coeff_ap(th, par_) * q * q;
            const double B = rho * u * e_th - 2.0 * coeff_a_over_Z(th, par_) * q;
            const double heat_relax =
                (2.0 * coeff_a_over_tau(th, par_) + (4.0 * u / r) * a) * q * q;
            const double rhs_th = -B * dth_dr_[i] - p_[i] * div - (dq_dr_[i] + 2.0 * q / r) +
                                  heat_relax + heat_visc;
            out.dtheta_ns[i] = rhs_th / (rho * e_th);
            out.dtheta[i] = rhs_th / (rho * e_th);
        }

        // heat flux
        if (has_q) {
            const double tr = par_.tau_of(th) * rho;
            const double adv = -(u * dq_dr_[i] + 2.0 * u * q / r);
            const double relax = -(q + par_.kappa_of(th) * dth_dr_[i]) / tr;
            out.dq_ns[i] = adv;
            out.dq_st[i] = relax;
            out.dq[i] = adv + relax;
        }
    }

    if (variant_ == ModelVariant::EULER_CC && opts_.art_diss > 0.0) {
        auto smooth = [&](const std::vector<double>& f, std::vector<double>& ns,
                          std::vector<double>& tot) {
            const double c4 = opts_.art_diss / grid_.dr;
            const double c2 = opts_.art_diss * grid_.dr;
            for (int i = 1; i < n; ++i) {
                double ad;
                if (i >= 2 && i <= n - 2) {
                    const double d4 =
                        f[i - 2] - 4.0 * f[i - 1] + 6.0 * f[i] - 4.0 * f[i + 1] + f[i + 2];
                    ad = -c4 * d4;
                } else {
                    ad = c2 * (f[i - 1] - 2.0 * f[i] + f[i + 1]);
                }
                ns[i] += ad;
                tot[i] += ad;
            }
        };
        smooth(s.rho, out.drho_ns, out.drho);
        smooth(s.u, out.du_ns, out.du);
        smooth(s.theta, out.dtheta_ns, out.dtheta);
        smooth(s.q, out.dq_ns, out.dq);
    }

    if (opts_.forcing) {
        opts_.forcing->eval(s.t, grid_, src_rho_, src_u_, src_theta_, src_q_);
        for (int i = 0; i <= n; ++i) {
            out.drho_ns[i] += src_rho_[i];
            out.drho[i] += src_rho_[i];
            out.du_ns[i] += src_u_[i];
            out.du[i] += src_u_[i];
            out.dtheta_ns[i] += src_theta_[i];
            out.dtheta[i] += src_theta_[i];
            if (has_q) {
                out.dq_ns[i] += src_q_[i];
                out.dq[i] += src_q_[i];
            }
        }
    }

    if (opts_.freeze_hydro) {
        for (int i = 0; i <= n; ++i) {
            out.drho[i] = out.drho_ns[i] = out.drho_st[i] = 0.0;
            out.du[i] = out.du_ns[i] = out.du_st[i] = 0.0;
            out.dtheta[i] = out.dtheta_ns[i] = out.dtheta_st[i] = 0.0;
        }
    }

    if (opts_.mask_boundary) {
        for (int i : {0, n}) {
            out.du[i] = out.du_ns[i] = out.du_st[i] = 0.0;
            out.dq[i] = out.dq_ns[i] = out.dq_st[i] = 0.0;
        }
    }
}

Rhs RhsAssembler::operator()(const RadialState& s) {
    Rhs out;
    assemble(s, out);
    return out;
}

Rhs rhs(const RadialState& state, const RadialGrid& grid, const PhysParams& par,
        ModelVariant variant, RhsOptions opts) {
    RhsAssembler asmbl(grid, par, variant, opts);
    return asmbl(state);
}

EntropyResidual entropy_flux_residual(const RadialState& s, const Rhs& out,
                                      const RadialGrid& grid, const PhysParams& par,
                                      ModelVariant variant) {
    if (variant != ModelVariant::RELAXED)
        throw ConfigurationError("entropy_flux_residual: only defined for the RELAXED system");
    const int n = grid.n;

    const std::vector<double> du_dr = ddr(s.u, grid);

    // d/dt of the entropy integral via the chain rule through the rates
    double ddt = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double w = (i == 0 || i == n) ? 0.5 : 1.0;
        const double r2 = grid.nodes[i] * grid.nodes[i];
        const double rho = s.rho[i], u = s.u[i], th = s.theta[i], q = s.q[i];
        const double gap = coeff_a(th, par) - coeff_A(th, par);
        const double gap_p = coeff_ap(th, par) - coeff_Ap(th, par);
        const double eta_rho = par.Cv * (th - std::log(th) - 1.0) + par.R * std::log(rho) +
                               gap * q * q + 0.5 * u * u;
        const double eta_u = rho * u;
        const double eta_th = rho * par.Cv * (1.0 - 1.0 / th) + rho * gap_p * q * q;
        const double eta_q = 2.0 * rho * gap * q;
        ddt += w * r2 *
               (eta_rho * out.drho[i] + eta_u * out.du[i] + eta_th * out.dtheta[i] +
                eta_q * out.dq[i]);
    }
    ddt *= grid.dr;

    double diss = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double w = (i == 0 || i == n) ? 0.5 : 1.0;
        const double r = grid.nodes[i];
        const double rho = s.rho[i], u = s.u[i], th = s.theta[i], q = s.q[i];
        const double div = du_dr[i] + 2.0 * u / r;
        const double phi = 2.0 * du_dr[i] * du_dr[i] + 4.0 * u * u / (r * r) -
                           (2.0 / 3.0) * div * div;
        const double qterm = (r * r + 2.0 * r * par.tau_of(th) * rho * u) /
                             (par.kappa_of(th) * th * th) * q * q;
        diss += w * (qterm + par.mu_of(th) / th * r * r * phi +
                     par.lambda_of(th) / th * r * r * div * div);
    }
    diss *= grid.dr;

    auto boundary_flux = [&](int i) {
        const double r = grid.nodes[i];
        const double rho = s.rho[i], u = s.u[i], th = s.theta[i], q = s.q[i];
        const double gap = coeff_a(th, par) - coeff_A(th, par);
        const double p = par.R * rho * th;
        const double visc = 4.0 / 3.0 * par.mu_of(th) * (du_dr[i] - u / r) +
                            par.lambda_of(th) * (du_dr[i] + 2.0 * u / r);
        return r * r * rho * u *
                   (par.Cv * (th - std::log(th) - 1.0) + par.R * (std::log(rho) - 1.0) +
                    0.5 * u * u + gap * q * q) +
               r * r * (p * u + q) - r * r * q / th - r * r * u * visc;
    };

    EntropyResidual res;
    res.ddt_entropy = ddt;
    res.dissipation = diss;
    res.flux_inner = boundary_flux(0);
    res.flux_outer = boundary_flux(n);
    res.total = ddt + diss + res.flux_outer - res.flux_inner;
    return res;
}

} // namespace cattaneo

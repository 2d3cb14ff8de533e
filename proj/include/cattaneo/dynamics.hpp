#pragma once

#include <vector>

#include "cattaneo/constitutive.hpp"
#include "cattaneo/grid.hpp"
#include "cattaneo/state.hpp"

namespace cattaneo {

// RELAXED: full system with Cattaneo-Christov heat flux and viscosity.
// EULER_CC: vanishing-viscosity limit (mu = lambda = 0, tau > 0).
// NSF: relaxation limit tau = 0, Fourier law q = -kappa theta_r.
enum class ModelVariant { RELAXED, EULER_CC, NSF };

const char* variant_name(ModelVariant v);

// Throws ConfigurationError when the parameter set contradicts the variant.
void check_variant_params(ModelVariant variant, const PhysParams& par);

// Time-dependent source in time-derivative form, added to the nonstiff split.
// Used by manufactured-solution runs.
class ForcingSource {
  public:
    virtual ~ForcingSource() = default;
    virtual void eval(double t, const RadialGrid& grid, std::vector<double>& s_rho,
                      std::vector<double>& s_u, std::vector<double>& s_theta,
                      std::vector<double>& s_q) const = 0;
};

struct RhsOptions {
    bool mask_boundary = true;  // force du = dq = 0 on the Dirichlet rows
    bool freeze_hydro = false;  // verification mode: evolve q only
    double art_diss = 0.5;      // EULER_CC fourth-difference dissipation coefficient
    bool debug_first_order_ddr = false;  // verification hook: degrade ddr to first order
    const ForcingSource* forcing = nullptr;
};

// Semi-discrete time derivatives at the nodes, split for IMEX stepping.
// The stiff part holds the relaxation source -(q + kappa theta_r)/(tau rho),
// the viscous operator, and (NSF) the heat conduction; everything else is
// nonstiff. total is assembled independently from the full equations so the
// split-sum identity is a real check.
struct Rhs {
    std::vector<double> drho, du, dtheta, dq;              // total
    std::vector<double> drho_ns, du_ns, dtheta_ns, dq_ns;  // nonstiff
    std::vector<double> drho_st, du_st, dtheta_st, dq_st;  // stiff
};

// Assembles the right-hand side of the selected model variant. Holds scratch
// buffers; reuse one instance per run.
class RhsAssembler {
  public:
    RhsAssembler(const RadialGrid& grid, const PhysParams& par, ModelVariant variant,
                 RhsOptions opts = {});

    void assemble(const RadialState& state, Rhs& out);
    Rhs operator()(const RadialState& state);

    const RhsOptions& options() const { return opts_; }
    ModelVariant variant() const { return variant_; }

    // Compact tridiagonal viscous operator (nu(theta_coef) (u_r + 2u/r))_r / rho,
    // and the NSF conduction operator (r^2 kappa theta_r)_r / (r^2 rho Cv),
    // both with coefficients frozen at theta_coef. Used by the implicit solves.
    void viscous_tridiag(const std::vector<double>& theta_coef, const std::vector<double>& rho,
                         double scale, std::vector<double>& lo, std::vector<double>& di,
                         std::vector<double>& up) const;
    void conduction_tridiag(const std::vector<double>& theta_coef, const std::vector<double>& rho,
                            double scale, std::vector<double>& lo, std::vector<double>& di,
                            std::vector<double>& up) const;

  private:
    void d1(std::span<const double> f, std::vector<double>& out) const;
    double viscous_term(const RadialState& s, int i) const;
    double conduction_term(const RadialState& s, int i) const;

    const RadialGrid& grid_;
    PhysParams par_;
    ModelVariant variant_;
    RhsOptions opts_;

    std::vector<double> du_dr_, dth_dr_, dq_dr_, p_, dp_dr_, rhou_, drhou_dr_, nu_, gflux_,
        dg_dr_, condk_, src_rho_, src_u_, src_theta_, src_q_;
};

Rhs rhs(const RadialState& state, const RadialGrid& grid, const PhysParams& par,
        ModelVariant variant, RhsOptions opts = {});

// Discrete balance of the relative-entropy identity: time derivative of the
// entropy integral (chain rule through rhs_out) plus the dissipation
// integrals plus boundary fluxes. Zero up to discretization error for
// boundary-compliant states of the relaxed system.
struct EntropyResidual {
    double total;
    double ddt_entropy;
    double dissipation;
    double flux_inner;
    double flux_outer;
};
EntropyResidual entropy_flux_residual(const RadialState& state, const Rhs& rhs_out,
                                      const RadialGrid& grid, const PhysParams& par,
                                      ModelVariant variant);

} // namespace cattaneo

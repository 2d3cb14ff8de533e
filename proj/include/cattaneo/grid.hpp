#pragma once

#include <span>
#include <vector>

namespace cattaneo {

// Uniform node-centered mesh on the annulus [r_min, r_max], r_min >= 1.
// n cells, n+1 nodes including both boundaries.
struct RadialGrid {
    double r_min = 1.0;
    double r_max = 2.0;
    int n = 0;
    double dr = 0.0;
    std::vector<double> nodes;

    static RadialGrid uniform(double r_min, double r_max, int n);
    int num_nodes() const { return n + 1; }
};

// Which H1 convention resolves the ambiguous ||r f||_{H1}:
//   WeightOutside: sqrt( ||f||_w^2 + ||f_r||_w^2 ), same r^w weight on both terms
//   ProductForm:   H1 of the product r^{w/2} f, i.e. ||rf||^2 + ||(rf)_r||^2 for w = 2
enum class H1Weighting { WeightOutside, ProductForm };

// sqrt( int r^w f^2 dr ) by composite trapezoid on the nodes. w in {0, 2}.
double weighted_L2(std::span<const double> f, int weight_power, const RadialGrid& grid);

// Second-order first derivative: centered interior, one-sided at the boundaries.
std::vector<double> ddr(std::span<const double> f, const RadialGrid& grid);
void ddr_into(std::span<const double> f, const RadialGrid& grid, std::vector<double>& out);

// Second-order second derivative, exact on quadratics.
std::vector<double> d2dr2(std::span<const double> f, const RadialGrid& grid);
void d2dr2_into(std::span<const double> f, const RadialGrid& grid, std::vector<double>& out);

double weighted_H1(std::span<const double> f, int weight_power, const RadialGrid& grid,
                   H1Weighting mode = H1Weighting::WeightOutside);

} // namespace cattaneo

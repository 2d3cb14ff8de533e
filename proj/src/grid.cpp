#include "cattaneo/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cattaneo {

RadialGrid RadialGrid::uniform(double r_min, double r_max, int n) {
    if (r_min < 1.0)
        throw std::invalid_argument("RadialGrid: r_min must be >= 1");
    if (!(r_max > r_min))
        throw std::invalid_argument("RadialGrid: r_max must exceed r_min");
    if (n < 1)
        throw std::invalid_argument("RadialGrid: need at least one cell");
    RadialGrid g;
    g.r_min = r_min;
    g.r_max = r_max;
    g.n = n;
    g.dr = (r_max - r_min) / n;
    g.nodes.resize(n + 1);
    for (int i = 0; i <= n; ++i) g.nodes[i] = r_min + i * g.dr;
    g.nodes[n] = r_max;
    return g;
}

static void check_len(std::span<const double> f, const RadialGrid& grid, const char* op) {
    if (static_cast<int>(f.size()) != grid.num_nodes())
        throw std::invalid_argument(std::string(op) + ": field length " +
                                    std::to_string(f.size()) + " != nodes " +
                                    std::to_string(grid.num_nodes()));
}

double weighted_L2(std::span<const double> f, int weight_power, const RadialGrid& grid) {
    check_len(f, grid, "weighted_L2");
    if (weight_power != 0 && weight_power != 2)
        throw std::invalid_argument("weighted_L2: weight power must be 0 or 2");
    const int n = grid.n;
    double sum = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double w = (i == 0 || i == n) ? 0.5 : 1.0;
        const double r = grid.nodes[i];
        const double rw = (weight_power == 2) ? r * r : 1.0;
        sum += w * rw * f[i] * f[i];
    }
    return std::sqrt(sum * grid.dr);
}

void ddr_into(std::span<const double> f, const RadialGrid& grid, std::vector<double>& out) {
    check_len(f, grid, "ddr");
    const int n = grid.n;
    if (n < 4) throw std::invalid_argument("ddr: grid too small (n < 4)");
    out.resize(n + 1);
    const double inv2 = 1.0 / (2.0 * grid.dr);
    out[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) * inv2;
    for (int i = 1; i < n; ++i) out[i] = (f[i + 1] - f[i - 1]) * inv2;
    out[n] = (3.0 * f[n] - 4.0 * f[n - 1] + f[n - 2]) * inv2;
}

std::vector<double> ddr(std::span<const double> f, const RadialGrid& grid) {
    std::vector<double> out;
    ddr_into(f, grid, out);
    return out;
}

void d2dr2_into(std::span<const double> f, const RadialGrid& grid, std::vector<double>& out) {
    check_len(f, grid, "d2dr2");
    const int n = grid.n;
    if (n < 4) throw std::invalid_argument("d2dr2: grid too small (n < 4)");
    out.resize(n + 1);
    const double inv = 1.0 / (grid.dr * grid.dr);
    out[0] = (2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3]) * inv;
    for (int i = 1; i < n; ++i) out[i] = (f[i - 1] - 2.0 * f[i] + f[i + 1]) * inv;
    out[n] = (2.0 * f[n] - 5.0 * f[n - 1] + 4.0 * f[n - 2] - f[n - 3]) * inv;
}

std::vector<double> d2dr2(std::span<const double> f, const RadialGrid& grid) {
    std::vector<double> out;
    d2dr2_into(f, grid, out);
    return out;
}

double weighted_H1(std::span<const double> f, int weight_power, const RadialGrid& grid,
                   H1Weighting mode) {
    check_len(f, grid, "weighted_H1");
    if (mode == H1Weighting::WeightOutside) {
        const double a = weighted_L2(f, weight_power, grid);
        const std::vector<double> df = ddr(f, grid);
        const double b = weighted_L2(df, weight_power, grid);
        return std::sqrt(a * a + b * b);
    }
    // ProductForm: unweighted H1 of r^{w/2} f
    std::vector<double> rf(f.begin(), f.end());
    if (weight_power == 2)
        for (int i = 0; i <= grid.n; ++i) rf[i] *= grid.nodes[i];
    else if (weight_power != 0)
        throw std::invalid_argument("weighted_H1: weight power must be 0 or 2");
    const double a = weighted_L2(rf, 0, grid);
    const std::vector<double> df = ddr(rf, grid);
    const double b = weighted_L2(df, 0, grid);
    return std::sqrt(a * a + b * b);
}

} // namespace cattaneo

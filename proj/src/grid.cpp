#include "opalg/numeric/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace opalg::num {

double GridSpec::min_abs_p() const {
    double s = 0.0;
    for (int a = 0; a < 3; ++a) {
        double lo = center[a] - half_width;
        double hi = center[a] + half_width;
        double nearest = std::clamp(0.0, lo, hi);
        s += nearest * nearest;
    }
    return std::sqrt(s);
}

void GridSpec::validate() const {
    if (n < 8) throw std::invalid_argument("grid needs at least 8 points per axis");
    if (half_width <= 0.0) throw std::invalid_argument("half_width must be positive");
    if (exclusion < 1 || 2 * exclusion >= n)
        throw std::invalid_argument("exclusion layer leaves no interior");
    if (min_abs_p() < 0.5)
        throw GridOriginError("grid reaches |p| < 0.5; momentum origin must stay excluded");
}

WaveFunction zero_like(const GridSpec& spec) {
    return WaveFunction{spec, 0, std::vector<Complex>(spec.points(), Complex(0.0, 0.0))};
}

double l2_norm(const WaveFunction& wf, int extra_margin) {
    const GridSpec& g = wf.spec;
    int m = std::max({g.exclusion, wf.margin, extra_margin});
    double acc = 0.0;
    std::size_t count = 0;
    for (int x = m; x < g.n - m; ++x)
        for (int y = m; y < g.n - m; ++y)
            for (int z = m; z < g.n - m; ++z) {
                acc += std::norm(wf.values[g.flat(x, y, z)]);
                ++count;
            }
    return count ? std::sqrt(acc / static_cast<double>(count)) : 0.0;
}

WaveFunction operator-(const WaveFunction& a, const WaveFunction& b) {
    WaveFunction r = a;
    r.margin = std::max(a.margin, b.margin);
    for (std::size_t k = 0; k < r.values.size(); ++k) r.values[k] -= b.values[k];
    return r;
}

WaveFunction operator+(const WaveFunction& a, const WaveFunction& b) {
    WaveFunction r = a;
    r.margin = std::max(a.margin, b.margin);
    for (std::size_t k = 0; k < r.values.size(); ++k) r.values[k] += b.values[k];
    return r;
}

WaveFunction operator*(Complex s, const WaveFunction& wf) {
    WaveFunction r = wf;
    for (auto& v : r.values) v *= s;
    return r;
}

WaveFunction gaussian_packet(const GridSpec& spec, double sigma,
                             std::array<double, 3> phase) {
    WaveFunction wf = zero_like(spec);
    const double two_s2 = 2.0 * sigma * sigma;
    for (int x = 0; x < spec.n; ++x) {
        double px = spec.coord(0, x);
        for (int y = 0; y < spec.n; ++y) {
            double py = spec.coord(1, y);
            for (int z = 0; z < spec.n; ++z) {
                double pz = spec.coord(2, z);
                double dx = px - spec.center[0];
                double dy = py - spec.center[1];
                double dz = pz - spec.center[2];
                double r2 = dx * dx + dy * dy + dz * dz;
                double arg = phase[0] * px + phase[1] * py + phase[2] * pz;
                wf.values[spec.flat(x, y, z)] =
                    std::exp(-r2 / two_s2) * Complex(std::cos(arg), std::sin(arg));
            }
        }
    }
    return wf;
}

std::uint64_t Rng::next_u64() {
    // splitmix64; fixed algorithm so seeded streams are identical everywhere
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double Rng::uniform(double lo, double hi) {
    double u = static_cast<double>(next_u64() >> 11) * (1.0 / 9007199254740992.0);
    return lo + u * (hi - lo);
}

int Rng::uniform_int(int lo, int hi) {
    return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
}

std::vector<WaveFunction> test_family(const GridSpec& spec, double sigma,
                                      std::uint64_t seed, int extra) {
    std::vector<WaveFunction> family;
    family.push_back(gaussian_packet(spec, sigma));

    Rng rng(seed);
    for (int m = 0; m < extra; ++m) {
        // (c0 + sum_a c_a x_a + sum_{a<=b} c_ab x_a x_b) x Gaussian
        double c0 = rng.uniform(0.5, 1.5);
        std::array<double, 3> lin{};
        for (auto& c : lin) c = rng.uniform(-1.0, 1.0);
        std::array<double, 6> quad{};
        for (auto& c : quad) c = rng.uniform(-1.0, 1.0);

        WaveFunction wf = gaussian_packet(spec, sigma);
        for (int x = 0; x < spec.n; ++x)
            for (int y = 0; y < spec.n; ++y)
                for (int z = 0; z < spec.n; ++z) {
                    double dx = spec.coord(0, x) - spec.center[0];
                    double dy = spec.coord(1, y) - spec.center[1];
                    double dz = spec.coord(2, z) - spec.center[2];
                    double poly = c0 + lin[0] * dx + lin[1] * dy + lin[2] * dz +
                                  quad[0] * dx * dx + quad[1] * dy * dy + quad[2] * dz * dz +
                                  quad[3] * dx * dy + quad[4] * dx * dz + quad[5] * dy * dz;
                    wf.values[spec.flat(x, y, z)] *= poly;
                }
        family.push_back(std::move(wf));
    }

    for (const auto& wf : family)
        if (l2_norm(wf) < 1e-12)
            throw DegenerateTestFunction("test function has no interior mass");
    return family;
}

}  // namespace opalg::num

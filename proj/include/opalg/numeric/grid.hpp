#pragma once

#include "opalg/errors.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

namespace opalg::num {

using Complex = std::complex<double>;

// Uniform momentum-space sample box, natural units (hbar = c = 1, and mc^2 = 1
// for the massive contrast Hamiltonian). The box must keep the momentum origin
// out: H^-1 and 1/p^2 are singular at p = 0.
struct GridSpec {
    int n = 33;
    std::array<double, 3> center{2.0, 2.0, 2.0};
    double half_width = 0.75;
    int exclusion = 1;

    double spacing() const { return 2.0 * half_width / (n - 1); }
    double coord(int axis, int idx) const {
        return center[axis] - half_width + spacing() * idx;
    }
    std::size_t points() const {
        return static_cast<std::size_t>(n) * n * n;
    }
    std::size_t flat(int x, int y, int z) const {
        return (static_cast<std::size_t>(x) * n + y) * n + z;
    }

    // Distance from the origin to the nearest point of the box.
    double min_abs_p() const;

    // Throws GridOriginError / std::invalid_argument on a bad spec.
    void validate() const;

    friend bool operator==(const GridSpec& a, const GridSpec& b) {
        return a.n == b.n && a.center == b.center && a.half_width == b.half_width &&
               a.exclusion == b.exclusion;
    }
};

// Complex samples over the grid. `margin` counts boundary layers whose values
// are not meaningful (each finite-difference application grows it by one).
struct WaveFunction {
    GridSpec spec;
    int margin = 0;
    std::vector<Complex> values;
};

WaveFunction zero_like(const GridSpec& spec);

// Discrete L2 norm over interior points, excluding max(spec.exclusion, margin,
// extra_margin) layers from every face.
double l2_norm(const WaveFunction& wf, int extra_margin = 0);

WaveFunction operator-(const WaveFunction& a, const WaveFunction& b);
WaveFunction operator+(const WaveFunction& a, const WaveFunction& b);
WaveFunction operator*(Complex s, const WaveFunction& wf);

// Default test function: a Gaussian packet centred on the box with a linear
// phase, psi(p) = exp(-|p-p0|^2 / (2 sigma^2)) exp(i a.p).
WaveFunction gaussian_packet(const GridSpec& spec, double sigma,
                             std::array<double, 3> phase = {0.3, -0.2, 0.5});

// Deterministic pseudo-random stream, stable across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed + 0x9e3779b97f4a7c15ULL) {}
    std::uint64_t next_u64();
    double uniform(double lo, double hi);
    int uniform_int(int lo, int hi);  // inclusive bounds

private:
    std::uint64_t state_;
};

// Default family: the Gaussian packet plus `extra` seeded members of the form
// (low-order polynomial in p - p0) x Gaussian. Throws DegenerateTestFunction
// if a member has no interior mass.
std::vector<WaveFunction> test_family(const GridSpec& spec, double sigma,
                                      std::uint64_t seed, int extra);

}  // namespace opalg::num

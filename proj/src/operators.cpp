#include "opalg/numeric/operators.hpp"

#include <cmath>

namespace opalg::num {

namespace {

// Central difference along one axis; boundary layer left at zero and the
// margin grown by one.
WaveFunction diff(const WaveFunction& psi, int axis) {
    const GridSpec& g = psi.spec;
    WaveFunction out = zero_like(g);
    out.margin = psi.margin + 1;
    const double inv_2h = 1.0 / (2.0 * g.spacing());
    int stride[3] = {g.n * g.n, g.n, 1};
    int s = stride[axis];
    for (int x = (axis == 0); x < g.n - (axis == 0); ++x)
        for (int y = (axis == 1); y < g.n - (axis == 1); ++y)
            for (int z = (axis == 2); z < g.n - (axis == 2); ++z) {
                std::size_t k = g.flat(x, y, z);
                out.values[k] = (psi.values[k + s] - psi.values[k - s]) * inv_2h;
            }
    return out;
}

template <typename F>
WaveFunction pointwise(const WaveFunction& psi, F&& mult) {
    const GridSpec& g = psi.spec;
    WaveFunction out = psi;
    for (int x = 0; x < g.n; ++x)
        for (int y = 0; y < g.n; ++y)
            for (int z = 0; z < g.n; ++z) {
                std::size_t k = g.flat(x, y, z);
                out.values[k] *= mult(g.coord(0, x), g.coord(1, y), g.coord(2, z));
            }
    return out;
}

double h_massless_val(double px, double py, double pz) {
    return std::sqrt(px * px + py * py + pz * pz);
}
double h_massive_val(double px, double py, double pz) {
    return std::sqrt(px * px + py * py + pz * pz + 1.0);
}

}  // namespace

std::string OperatorDesc::text() const {
    switch (tag) {
        case Tag::P: return "P[" + std::to_string(index) + "]";
        case Tag::Hmassless: return power == 1 ? "H" : "H^" + std::to_string(power);
        case Tag::Hmassive: return power == 1 ? "Hm" : "Hm^" + std::to_string(power);
        case Tag::Vmassless: return "V[" + std::to_string(index) + "]";
        case Tag::Vmassive: return "Vm[" + std::to_string(index) + "]";
        case Tag::Qcanonical: return "Qcanonical[" + std::to_string(index) + "]";
        case Tag::Qphoton: return "Qphoton[" + std::to_string(index) + "]";
    }
    return "?";
}

WaveFunction apply(const OperatorDesc& op, const WaveFunction& psi) {
    psi.spec.validate();
    const int i = op.index;
    switch (op.tag) {
        case OperatorDesc::Tag::P:
            return pointwise(psi, [i](double px, double py, double pz) {
                return i == 1 ? px : i == 2 ? py : pz;
            });
        case OperatorDesc::Tag::Hmassless: {
            int pw = op.power;
            return pointwise(psi, [pw](double px, double py, double pz) {
                return std::pow(h_massless_val(px, py, pz), pw);
            });
        }
        case OperatorDesc::Tag::Hmassive: {
            int pw = op.power;
            return pointwise(psi, [pw](double px, double py, double pz) {
                return std::pow(h_massive_val(px, py, pz), pw);
            });
        }
        case OperatorDesc::Tag::Vmassless:
            return pointwise(psi, [i](double px, double py, double pz) {
                double pi = i == 1 ? px : i == 2 ? py : pz;
                return pi / h_massless_val(px, py, pz);
            });
        case OperatorDesc::Tag::Vmassive:
            return pointwise(psi, [i](double px, double py, double pz) {
                double pi = i == 1 ? px : i == 2 ? py : pz;
                return pi / h_massive_val(px, py, pz);
            });
        case OperatorDesc::Tag::Qcanonical: {
            WaveFunction d = diff(psi, i - 1);
            for (auto& v : d.values) v *= Complex(0.0, 1.0);
            return d;
        }
        case OperatorDesc::Tag::Qphoton: {
            // i (p_i p_k / p^2) d/dp_k, all multipliers at the evaluation point
            WaveFunction acc = zero_like(psi.spec);
            acc.margin = psi.margin + 1;
            for (int k = 1; k <= 3; ++k) {
                WaveFunction dk = diff(psi, k - 1);
                WaveFunction pk_dk = pointwise(dk, [k](double px, double py, double pz) {
                    return k == 1 ? px : k == 2 ? py : pz;
                });
                acc = acc + pk_dk;
            }
            WaveFunction out = pointwise(acc, [i](double px, double py, double pz) {
                double pi = i == 1 ? px : i == 2 ? py : pz;
                double p2 = px * px + py * py + pz * pz;
                return pi / p2;
            });
            for (auto& v : out.values) v *= Complex(0.0, 1.0);
            return out;
        }
    }
    throw std::logic_error("unhandled operator tag");
}

WaveFunction commutator_apply(const OperatorDesc& a, const OperatorDesc& b,
                              const WaveFunction& psi) {
    return apply(a, apply(b, psi)) - apply(b, apply(a, psi));
}

}  // namespace opalg::num

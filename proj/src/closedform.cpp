#include "qtspin/closedform.hpp"

#include <cmath>
#include <stdexcept>

namespace qtspin {

namespace {

const Complex kI{0.0, 1.0};

// Below this value of 4 f00 f11 sin^2(2Jt) (or of Y1) the printed entropy
// expressions are 0*inf limits; the evaluators return the limit value 0.
constexpr double kDegenerateGuard = 1e-14;

void require_coupling(const ModelParams& p, CouplingKind expected, const char* fn) {
    if (p.coupling != expected)
        throw std::invalid_argument(std::string(fn) + ": wrong coupling kind");
}

double clamp01(double x) {
    if (x < 0.0) return 0.0;
    if (x > 1.0) return 1.0;
    return x;
}

// Entropy of a two-level state with eigenvalues (1 +/- x)/2.
double two_level_entropy(double x) {
    x = clamp01(x);
    if (1.0 - x * x < kDegenerateGuard) return 0.0;
    return std::log(2.0) - 0.5 * std::log(1.0 - x * x)
         + 0.5 * x * std::log((1.0 - x) / (1.0 + x));
}

} // namespace

HeisenbergAux HeisenbergAux::from(const ModelParams& p) {
    HeisenbergAux aux;
    aux.e12 = p.e1 - p.e2;
    aux.w = std::sqrt(aux.e12 * aux.e12 + 4.0 * p.j * p.j);
    return aux;
}

double ising_coherence_factor(const ThermalPopulations& pops, double j, double t) {
    const double s = std::sin(2.0 * j * t);
    return std::sqrt(clamp01(1.0 - 4.0 * pops.f00 * pops.f11 * s * s));
}

DensityMatrix ising_density(const ModelParams& p, const ThermalPopulations& pops,
                            double t) {
    require_coupling(p, CouplingKind::Ising, "ising_density");
    CMatrix m = CMatrix::Zero(4, 4);
    m(0, 0) = m(2, 2) = 0.5 * pops.f00;
    m(1, 1) = m(3, 3) = 0.5 * pops.f11;
    m(0, 2) = 0.5 * pops.f00 * std::exp(2.0 * kI * (p.e1 + p.j) * t);
    m(1, 3) = 0.5 * pops.f11 * std::exp(2.0 * kI * (p.e1 - p.j) * t);
    m(2, 0) = std::conj(m(0, 2));
    m(3, 1) = std::conj(m(1, 3));
    return DensityMatrix(std::move(m));
}

DensityMatrix ising_reduced(const ModelParams& p, const ThermalPopulations& pops,
                            double t, Subsystem keep) {
    require_coupling(p, CouplingKind::Ising, "ising_reduced");
    CMatrix m = CMatrix::Zero(2, 2);
    if (keep == Subsystem::Q) {
        const Complex a = pops.f00 * std::exp(2.0 * kI * (p.e1 + p.j) * t)
                        + pops.f11 * std::exp(2.0 * kI * (p.e1 - p.j) * t);
        m(0, 0) = m(1, 1) = 0.5;
        m(0, 1) = 0.5 * a;
        m(1, 0) = 0.5 * std::conj(a);
    } else {
        m(0, 0) = pops.f00;
        m(1, 1) = pops.f11;
    }
    return DensityMatrix(std::move(m));
}

double ising_entropy(const ThermalPopulations& pops, double j, double t,
                     EntropyOf which) {
    if (which == EntropyOf::Thermal) {
        double s = 0.0;
        if (pops.f00 > 0.0) s -= pops.f00 * std::log(pops.f00);
        if (pops.f11 > 0.0) s -= pops.f11 * std::log(pops.f11);
        return s;
    }
    const double sn = std::sin(2.0 * j * t);
    const double q = 4.0 * pops.f00 * pops.f11 * sn * sn;
    if (q < kDegenerateGuard) return 0.0;
    const double x = std::sqrt(clamp01(1.0 - q));
    return 0.5 * x * std::log((1.0 - x) / (1.0 + x))
         - 0.5 * std::log(pops.f00 * pops.f11 * sn * sn);
}

Complex ising_sigma_plus(const ModelParams& p, const ThermalPopulations& pops,
                         double t) {
    require_coupling(p, CouplingKind::Ising, "ising_sigma_plus");
    return pops.f00 * std::exp(-2.0 * kI * (p.e1 + p.j) * t)
         + pops.f11 * std::exp(-2.0 * kI * (p.e1 - p.j) * t);
}

DensityMatrix heis_density(const ModelParams& p, const ThermalPopulations& pops,
                           double t) {
    require_coupling(p, CouplingKind::Heisenberg, "heis_density");
    const auto [e12, w] = HeisenbergAux::from(p);
    if (!(w > 0.0))
        throw std::invalid_argument("heis_density: degenerate parameters (W = 0)");
    const double f00 = pops.f00, f11 = pops.f11, j = p.j;
    const double w2 = w * w;
    const double sw = std::sin(t * w), cw = std::cos(t * w), c2w = std::cos(2.0 * t * w),
                 s2w = std::sin(2.0 * t * w);
    const Complex phase_p = std::exp(kI * t * (p.e1 + p.e2 + 2.0 * j));
    const Complex phase_m = std::exp(kI * t * (p.e1 + p.e2 - 2.0 * j));

    CMatrix m = CMatrix::Zero(4, 4);
    m(0, 0) = 0.5 * f00;
    m(3, 3) = 0.5 * f11;
    m(1, 1) = (f11 * (2.0 * j * j * c2w + e12 * e12 + 2.0 * j * j)
               + 4.0 * f00 * j * j * sw * sw) / (2.0 * w2);
    m(2, 2) = (f00 * (2.0 * j * j * c2w + e12 * e12 + 2.0 * j * j)
               + 4.0 * f11 * j * j * sw * sw) / (2.0 * w2);
    m(0, 1) = -kI * j * f00 * phase_p * sw / w;
    m(0, 2) = f00 * phase_p * (w * cw + kI * e12 * sw) / (2.0 * w);
    m(1, 2) = 0.5 * j * (f00 - f11) * (kI * w * s2w + e12 * c2w - e12) / w2;
    m(2, 3) = kI * f11 * j * phase_m * sw / w;
    m(1, 3) = f11 * phase_m * (w * cw + kI * e12 * sw) / (2.0 * w);
    for (int i = 0; i < 4; ++i)
        for (int k = i + 1; k < 4; ++k) m(k, i) = std::conj(m(i, k));
    return DensityMatrix(std::move(m));
}

DensityMatrix heis_reduced(const ModelParams& p, const ThermalPopulations& pops,
                           double t, Subsystem keep) {
    require_coupling(p, CouplingKind::Heisenberg, "heis_reduced");
    const auto [e12, w] = HeisenbergAux::from(p);
    if (!(w > 0.0))
        throw std::invalid_argument("heis_reduced: degenerate parameters (W = 0)");
    const double f00 = pops.f00, f11 = pops.f11, j = p.j;
    const double w2 = w * w;
    const double sw = std::sin(t * w), cw = std::cos(t * w), c2w = std::cos(2.0 * t * w);

    CMatrix m = CMatrix::Zero(2, 2);
    if (keep == Subsystem::Q) {
        m(0, 0) = 0.5 * f00 + (e12 * e12 * f11 + 2.0 * j * j
                               + 2.0 * (f11 - f00) * j * j * c2w) / (2.0 * w2);
        m(1, 1) = 0.5 * f11 + (e12 * e12 * f00 + 2.0 * j * j
                               + 2.0 * (f00 - f11) * j * j * c2w) / (2.0 * w2);
        m(0, 1) = std::exp(kI * t * (p.e1 + p.e2 + 2.0 * j))
                * (f00 + f11 * std::exp(-4.0 * kI * j * t))
                * (w * cw + kI * e12 * sw) / (2.0 * w);
    } else {
        m(0, 0) = 0.5 * f00 + (e12 * e12 * f00 + 2.0 * j * j
                               + 2.0 * (f00 - f11) * j * j * c2w) / (2.0 * w2);
        m(1, 1) = 0.5 * f11 + (e12 * e12 * f11 + 2.0 * j * j
                               + 2.0 * (f11 - f00) * j * j * c2w) / (2.0 * w2);
        m(0, 1) = kI * j * std::exp(-kI * (p.e1 + p.e2 + 2.0 * j) * t)
                * (f00 - std::exp(4.0 * kI * j * t) * f11) * sw / (2.0 * w);
    }
    m(1, 0) = std::conj(m(0, 1));
    return DensityMatrix(std::move(m));
}

double heis_x2(const ModelParams& p, const ThermalPopulations& pops, double t) {
    const auto [e12, w] = HeisenbergAux::from(p);
    const double f00 = pops.f00, f11 = pops.f11, j = p.j;
    const double w2 = w * w;
    const double sw = std::sin(t * w), s2w = std::sin(2.0 * t * w),
                 c2j = std::cos(2.0 * j * t);
    const double d = f00 - f11;
    const double term1 = d * d * std::pow(w2 - 4.0 * j * j * sw * sw, 2) / (w2 * w2);
    const double term2 = 4.0 * j * j * (1.0 - 4.0 * f00 * f11 * c2j * c2j)
                       * s2w * s2w / w2;
    return std::sqrt(clamp01(term1 + term2));
}

double heis_y1(const ModelParams& p, const ThermalPopulations& pops, double t) {
    const auto [e12, w] = HeisenbergAux::from(p);
    const double f00 = pops.f00, f11 = pops.f11, j = p.j;
    const double w2 = w * w;
    const double sw = std::sin(t * w), s2j = std::sin(2.0 * j * t);
    const double d = f00 - f11;
    return f00 * f11 * s2j * s2j
         - 4.0 * std::pow(j, 4) * d * d * std::pow(sw, 4) / (w2 * w2)
         + j * j * sw * sw * (1.0 - 4.0 * f00 * f11 * s2j * s2j) / w2;
}

double heis_x1(const ModelParams& p, const ThermalPopulations& pops, double t) {
    const auto [e12, w] = HeisenbergAux::from(p);
    const double d = pops.f00 - pops.f11;
    const double sw = std::sin(t * w);
    const double extra = 4.0 * std::pow(p.j, 4) * d * d * std::pow(sw, 4)
                       / std::pow(w, 4);
    return std::sqrt(clamp01(1.0 - 4.0 * heis_y1(p, pops, t) + extra));
}

double heis_entropy(const ModelParams& p, const ThermalPopulations& pops,
                    double t, EntropyOf which) {
    require_coupling(p, CouplingKind::Heisenberg, "heis_entropy");
    if (which == EntropyOf::Thermal) {
        const double x2 = heis_x2(p, pops, t);
        if (1.0 - x2 * x2 < kDegenerateGuard) return 0.0;
        return 0.5 * std::log(4.0) - 0.5 * std::log(1.0 - x2 * x2)
             + x2 * std::log((1.0 - x2) / (1.0 + x2));
    }
    const double y1 = heis_y1(p, pops, t);
    if (y1 < kDegenerateGuard) return 0.0;
    const double x1 = heis_x1(p, pops, t);
    return 0.5 * x1 * std::log((1.0 - x1) / (1.0 + x1)) - 0.5 * std::log(y1);
}

double heis_thermal_entropy_repaired(const ModelParams& p,
                                     const ThermalPopulations& pops, double t) {
    require_coupling(p, CouplingKind::Heisenberg, "heis_thermal_entropy_repaired");
    return two_level_entropy(heis_x2(p, pops, t));
}

Complex heis_sigma_plus(const ModelParams& p, const ThermalPopulations& pops,
                        double t) {
    require_coupling(p, CouplingKind::Heisenberg, "heis_sigma_plus");
    const auto [e12, w] = HeisenbergAux::from(p);
    if (!(w > 0.0))
        throw std::invalid_argument("heis_sigma_plus: degenerate parameters (W = 0)");
    const double f00 = pops.f00, f11 = pops.f11, j = p.j;
    const Complex outer = (e12 + w) * std::exp(-kI * t * (p.e1 + p.e2));
    const Complex first = (f00 * std::exp(-kI * t * (2.0 * j + w))
                         + f11 * std::exp(-kI * t * (-2.0 * j + w))) / (2.0 * w);
    const Complex second = (f00 * std::exp(-kI * t * (2.0 * j - w))
                          + f11 * std::exp(-kI * t * (-2.0 * j - w))) / (2.0 * w);
    return outer * (first - second);
}

Complex heis_sigma_plus_from_reduced(const ModelParams& p,
                                     const ThermalPopulations& pops, double t) {
    const DensityMatrix rho1 = heis_reduced(p, pops, t, Subsystem::Q);
    return 2.0 * rho1(1, 0);
}

} // namespace qtspin

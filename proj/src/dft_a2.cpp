#include "syt/dft_a2.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "syt/detail/perm.hpp"
#include "syt/errors.hpp"

namespace syt {

namespace {

constexpr double kTau = 6.28318530717958647692528676655900577;

std::complex<double> unit_phase(double turns) {
    return std::polar(1.0, kTau * turns);
}

// z^n with z = 0 handled separately; for nonzero z this is exp(n log z).
std::complex<double> power(std::complex<double> z, long n) {
    if (n == 0) return {1.0, 0.0};
    if (std::abs(z) == 0.0) return {0.0, 0.0};
    return std::exp(static_cast<double>(n) * std::log(z));
}

long floor_mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace

A2Point embed(const Partition& shape) {
    if (shape.height() > 3)
        throw HeightExceedsThree("triangular-lattice route requires height <= 3, got " +
                                 std::to_string(shape.height()));
    const long a = shape.part(0), b = shape.part(1), c = shape.part(2);
    return {a - c + 2, b - c + 1};
}

std::array<A2Point, 3> move_images() {
    return {{{1, 0}, {0, 1}, {-1, -1}}};
}

DftGrid::DftGrid(long side) : side_(side) {
    if (side < 0) throw std::invalid_argument("grid side must be non-negative");
    values_.assign(static_cast<std::size_t>(rows() * cols()), {0.0, 0.0});
}

std::complex<double>& DftGrid::at(long w1, long w2) {
    return values_[static_cast<std::size_t>(w1 * cols() + w2)];
}

const std::complex<double>& DftGrid::at(long w1, long w2) const {
    return values_[static_cast<std::size_t>(w1 * cols() + w2)];
}

DftGrid transition_symbol(long side) {
    DftGrid g(side);
    const double A = static_cast<double>(side + 1);
    for (long w1 = 0; w1 < g.rows(); ++w1)
        for (long w2 = 0; w2 < g.cols(); ++w2)
            g.at(w1, w2) = unit_phase(-w2 / (3.0 * A)) +
                           unit_phase(-(w1 / A - 2.0 * w2 / (3.0 * A))) +
                           unit_phase(-(-w1 / A + w2 / (3.0 * A)));
    return g;
}

DftGrid initial_state_verbatim(long side) {
    DftGrid g(side);
    const double A = static_cast<double>(side + 1);
    for (long w1 = 0; w1 < g.rows(); ++w1)
        for (long w2 = 0; w2 < g.cols(); ++w2) {
            double s = -std::sin(kTau * w1 / A) - std::sin(kTau * (w1 - w2) / A) +
                       std::sin(kTau * (2.0 * w1 - w2) / A);
            g.at(w1, w2) = {0.0, 2.0 * s};
        }
    return g;
}

GridPoint torus_coords(A2Point x, long side) {
    const long A = side + 1;
    return {floor_mod(x.v, A), floor_mod(x.u - 2 * x.v, 3 * A)};
}

std::vector<std::pair<GridPoint, int>> signed_start_masses(long side) {
    // sign-extend the unit mass at the staircase (2,1,0): one signed copy per
    // arrangement, each projected by the difference map (x1-x3, x2-x3) that
    // carries walk points onto the triangular lattice. The staircase itself
    // lands on the embedded origin (2,1).
    std::vector<std::pair<GridPoint, int>> masses;
    std::vector<long> arrangement{0, 1, 2};
    do {
        std::vector<long> probe = arrangement;
        const int sign = detail::sort_descending_sign(probe);
        const A2Point image{arrangement[0] - arrangement[2],
                            arrangement[1] - arrangement[2]};
        masses.emplace_back(torus_coords(image, side), sign);
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    return masses;
}

DftGrid initial_state_derived(long side) {
    // forward transform of the six-point signed indicator; with only six
    // masses the transform collapses to a six-term phase sum per frequency
    DftGrid g(side);
    const double A = static_cast<double>(side + 1);
    const auto masses = signed_start_masses(side);
    for (long w1 = 0; w1 < g.rows(); ++w1)
        for (long w2 = 0; w2 < g.cols(); ++w2) {
            std::complex<double> sum{0.0, 0.0};
            for (const auto& [pt, sign] : masses)
                sum += static_cast<double>(sign) *
                       unit_phase(-(pt.p * w1 / A + pt.q * w2 / (3.0 * A)));
            g.at(w1, w2) = sum;
        }
    return g;
}

DftGrid inverse_transform(const DftGrid& freq) {
    DftGrid out(freq.side());
    const double A = static_cast<double>(freq.side() + 1);
    const double norm = 3.0 * A * A;
    for (long p = 0; p < out.rows(); ++p)
        for (long q = 0; q < out.cols(); ++q) {
            std::complex<double> sum{0.0, 0.0};
            for (long w1 = 0; w1 < freq.rows(); ++w1)
                for (long w2 = 0; w2 < freq.cols(); ++w2)
                    sum += unit_phase(p * w1 / A + q * w2 / (3.0 * A)) * freq.at(w1, w2);
            out.at(p, q) = sum / norm;
        }
    return out;
}

long dft_side_for(const Partition& shape) { return shape.part(0) + 2; }

DftCount count_dft(const Partition& shape, const DftOptions& opts) {
    const A2Point target = embed(shape);
    const long n = shape.size();
    if (n > opts.max_cells)
        throw CapExceeded("shape has " + std::to_string(n) +
                          " cells; precision budget allows " + std::to_string(opts.max_cells));

    const long side = dft_side_for(shape);
    const double A = static_cast<double>(side + 1);
    const DftGrid symbol = transition_symbol(side);
    const DftGrid start = opts.mode == DftOptions::Mode::verbatim
                              ? initial_state_verbatim(side)
                              : initial_state_derived(side);

    // evaluation point in torus coordinates (phases make the reduction moot)
    const long p = target.v;
    const long q = target.u - 2 * target.v;

    std::complex<double> total{0.0, 0.0};
    for (long w1 = 0; w1 < symbol.rows(); ++w1)
        for (long w2 = 0; w2 < symbol.cols(); ++w2)
            total += unit_phase(p * w1 / A + q * w2 / (3.0 * A)) *
                     power(symbol.at(w1, w2), n) * start.at(w1, w2);
    total /= 3.0 * A * A;

    const long long nearest = std::llround(total.real());
    const double residual = std::abs(total - std::complex<double>(static_cast<double>(nearest), 0.0));
    if (residual >= opts.tolerance)
        throw ToleranceExceeded("spectral count residual " + std::to_string(residual) +
                                " is not below tolerance " + std::to_string(opts.tolerance) +
                                " for shape " + shape.to_string());
    return {total, Int(static_cast<long>(nearest)), residual};
}

} // namespace syt

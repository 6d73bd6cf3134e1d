#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "syt/bigint.hpp"
#include "syt/partition.hpp"

namespace syt {

/// A point of the triangular lattice written in the root basis
/// alpha = (1, 0), beta = (-1/2, sqrt(3)/2): the point u*alpha + v*beta.
struct A2Point {
    long u = 0;
    long v = 0;
    bool operator==(const A2Point&) const = default;
};

/// Affine image of a height-<=3 shape (a, b, c) in the triangular lattice:
/// (a - c + 2, b - c + 1). Images always satisfy u > v > 0.
/// Throws HeightExceedsThree.
A2Point embed(const Partition& shape);

/// Images of the three row moves under the same affine map:
/// alpha, beta and -alpha-beta.
std::array<A2Point, 3> move_images();

/// Complex values on the frequency grid of a triangular torus with the
/// given side parameter: (side+1) rows by 3*(side+1) columns, indexed by
/// (w1, w2). Also reused for real-space grids of the same dimensions.
class DftGrid {
public:
    explicit DftGrid(long side);

    long side() const noexcept { return side_; }
    long rows() const noexcept { return side_ + 1; }
    long cols() const noexcept { return 3 * (side_ + 1); }

    std::complex<double>& at(long w1, long w2);
    const std::complex<double>& at(long w1, long w2) const;

private:
    long side_;
    std::vector<std::complex<double>> values_;
};

/// Fourier multiplier of one walk step with the three triangular moves,
/// on the (side+1) x 3(side+1) frequency grid. Its value at the origin is 3
/// and its magnitude never exceeds 3.
DftGrid transition_symbol(long side);

/// The start spectrum written directly as the known three-sine closed form
/// (purely imaginary on the whole grid).
DftGrid initial_state_verbatim(long side);

/// The start spectrum built from first principles: the forward transform of
/// the six signed unit masses obtained by sign-extending the mass at the
/// embedded origin. Agrees with the verbatim form to rounding error.
DftGrid initial_state_derived(long side);

/// Torus coordinates of a lattice point: the lattice-to-grid shear
/// (v, u - 2v), reduced modulo the grid periods.
struct GridPoint {
    long p = 0;
    long q = 0;
    bool operator==(const GridPoint&) const = default;
};
GridPoint torus_coords(A2Point x, long side);

/// The six signed start masses in torus coordinates.
std::vector<std::pair<GridPoint, int>> signed_start_masses(long side);

/// Inverse transform of a frequency grid back to real space (same index
/// layout, first index = p, second = q).
DftGrid inverse_transform(const DftGrid& freq);

struct DftOptions {
    enum class Mode { derived, verbatim };
    Mode mode = Mode::derived;
    /// Largest accepted distance between the evaluated sum and the nearest
    /// integer before the result is rejected.
    double tolerance = 0.25;
    /// Precision budget: the transition symbol is raised to the n-th power,
    /// so magnitudes reach 3^n and double precision runs out eventually.
    long max_cells = 24;
};

struct DftCount {
    std::complex<double> raw; ///< the evaluated double sum, already normalized
    Int rounded;              ///< nearest integer to the real part
    double residual;          ///< |raw - rounded|
};

/// Tableau count of a height-<=3 shape by spectral summation over the
/// triangular torus: the inverse-transform phase at the shape's torus
/// coordinates times the n-th power of the transition symbol times the
/// start spectrum, summed over the grid and normalized. Exact after
/// rounding whenever the residual stays below the tolerance.
/// Throws HeightExceedsThree, CapExceeded (over the precision budget) and
/// ToleranceExceeded.
DftCount count_dft(const Partition& shape, const DftOptions& opts = {});

/// Torus side used for a shape: two more than its first part, the smallest
/// side for which the walls never interfere with the walk.
long dft_side_for(const Partition& shape);

} // namespace syt

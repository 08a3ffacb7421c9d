#ifndef WEIERLAB_DETAIL_SHELL_SUM_HPP
#define WEIERLAB_DETAIL_SHELL_SUM_HPP

#include <complex>
#include <concepts>
#include <cstdint>

#include <Eigen/Core>

#include "weierlab/lattice.hpp"

// The kernels below are written as flat loops with `omp simd` reductions (the library is built
// with -fopenmp-simd); without that flag the pragmas are ignored and the loops run scalar.

namespace weierlab::detail
{

template <typename Scalar>
using ArrayX = Eigen::Array<Scalar, Eigen::Dynamic, 1>;

/// The lattice vectors start + j * step, j = 0..length-1.
template <typename Scalar>
struct Segment {
    std::complex<Scalar> start;
    std::complex<Scalar> step;
    std::int64_t length = 0;
};

/// Visits the half-shells of 0 < max(|m|, |n|) <= radius, inner shells first.
/**
 * For shell k, visit(k, segment) is called on {(m, k) : |m| <= k} and then on
 * {(k, n) : |n| < k}. Together with their negatives these cover the shell exactly once, so a
 * summand that is even in w can be summed over the full box as twice the visited sum.
 */
template <std::floating_point Scalar, typename Visit>
void for_each_half_shell(const Tau<Scalar> &tau, std::int64_t radius, Visit &&visit)
{
    const auto t = tau.value();
    for (std::int64_t k = 1; k <= radius; ++k) {
        const auto ks = static_cast<Scalar>(k);
        visit(k, Segment<Scalar>{-ks + ks * t, Scalar(1), 2 * k + 1});
        visit(k, Segment<Scalar>{ks - (ks - 1) * t, t, 2 * k - 1});
    }
}

/// Lower bound of |w| over shell k: k times the distance from 0 to the boundary of the unit box.
template <std::floating_point Scalar>
Scalar shell_min_modulus(const Tau<Scalar> &tau, std::int64_t k)
{
    return static_cast<Scalar>(k) * tau.imag() * std::min(Scalar(1), Scalar(1) / std::abs(tau.value()));
}

/// Split real/imaginary storage of a segment, for Eigen array expressions.
template <typename Scalar>
struct VectorBlock {
    ArrayX<Scalar> re;
    ArrayX<Scalar> im;
};

template <typename Scalar>
VectorBlock<Scalar> materialize(const Segment<Scalar> &s)
{
    const auto n = static_cast<Eigen::Index>(s.length);
    const ArrayX<Scalar> j = ArrayX<Scalar>::LinSpaced(n, Scalar(0), static_cast<Scalar>(n - 1));
    return {s.start.real() + j * s.step.real(), s.start.imag() + j * s.step.imag()};
}

/// Sum over a segment of 1 / (w^2 (c - w^2)).
template <typename Scalar>
std::complex<Scalar> sum_inv_w2_times(const Segment<Scalar> &s, const std::complex<Scalar> &c)
{
    const Scalar a = s.start.real(), b = s.start.imag();
    const Scalar da = s.step.real(), db = s.step.imag();
    const Scalar cr = c.real(), ci = c.imag();
    Scalar sr = 0, si = 0;
#pragma omp simd reduction(+ : sr, si)
    for (std::int64_t j = 0; j < s.length; ++j) {
        const Scalar wr = a + static_cast<Scalar>(j) * da;
        const Scalar wi = b + static_cast<Scalar>(j) * db;
        const Scalar w2r = wr * wr - wi * wi, w2i = 2 * wr * wi;
        const Scalar dr = cr - w2r, di = ci - w2i;
        const Scalar pr = w2r * dr - w2i * di, pi = w2r * di + w2i * dr;
        const Scalar inv = Scalar(1) / (pr * pr + pi * pi);
        sr += pr * inv;
        si -= pi * inv;
    }
    return {sr, si};
}

} // namespace weierlab::detail

#endif

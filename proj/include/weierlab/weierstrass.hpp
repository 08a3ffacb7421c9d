#ifndef WEIERLAB_WEIERSTRASS_HPP
#define WEIERLAB_WEIERSTRASS_HPP

#include <cmath>
#include <complex>
#include <concepts>
#include <cstdint>
#include <limits>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "weierlab/detail/shell_sum.hpp"
#include "weierlab/lattice.hpp"
#include "weierlab/modular.hpp"

// Direct lattice-sum evaluators for the Weierstrass functions of Z + Z*tau, and the
// lattice-invariant completion of zeta.
//
// All sums run over the index box 0 < max(|m|, |n|) <= shell_radius. The box is closed under
// w -> -w, so the summands are combined in (w, -w) pairs before summation; the odd parts of
// the summands cancel exactly and the truncation error is O(shell_radius^-2).

namespace weierlab
{

namespace detail
{

// Sum over a segment of (3 w^2 - c) / (w^2 (c - w^2)^2).
template <typename Scalar>
std::complex<Scalar> sum_wp_pairs(const Segment<Scalar> &s, const std::complex<Scalar> &c)
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
        const Scalar d2r = dr * dr - di * di, d2i = 2 * dr * di;
        const Scalar pr = w2r * d2r - w2i * d2i, pi = w2r * d2i + w2i * d2r;
        const Scalar nr = 3 * w2r - cr, ni = 3 * w2i - ci;
        const Scalar inv = Scalar(1) / (pr * pr + pi * pi);
        sr += (nr * pr + ni * pi) * inv;
        si += (ni * pr - nr * pi) * inv;
    }
    return {sr, si};
}

// Sum over a segment of log(1 - u) + u, u = c / w^2: the logarithm of the product of the
// sigma factors for w and -w. u_bound is an upper bound of |u| on the segment.
template <typename Scalar>
std::complex<Scalar> sum_log_sigma_pairs(const Segment<Scalar> &s, const std::complex<Scalar> &c, Scalar u_bound)
{
    const Scalar a = s.start.real(), b = s.start.imag();
    const Scalar da = s.step.real(), db = s.step.imag();
    const Scalar cr = c.real(), ci = c.imag();

    if (u_bound < Scalar(0.1)) {
        // log(1 - u) + u = -u^2 (1/2 + u/3 + u^2/4 + ...), cut where u_bound^j drops below epsilon.
        const Scalar eps = std::numeric_limits<Scalar>::epsilon();
        int top = 2;
        for (Scalar p = 1; p > eps && top < 200; p *= u_bound) {
            ++top;
        }
        Scalar sr = 0, si = 0;
#pragma omp simd reduction(+ : sr, si)
        for (std::int64_t j = 0; j < s.length; ++j) {
            const Scalar wr = a + static_cast<Scalar>(j) * da;
            const Scalar wi = b + static_cast<Scalar>(j) * db;
            const Scalar w2r = wr * wr - wi * wi, w2i = 2 * wr * wi;
            const Scalar inv = Scalar(1) / (w2r * w2r + w2i * w2i);
            const Scalar ur = (cr * w2r + ci * w2i) * inv;
            const Scalar ui = (ci * w2r - cr * w2i) * inv;
            Scalar pr = Scalar(1) / static_cast<Scalar>(top), pi = 0;
            for (int k = top - 1; k >= 2; --k) {
                const Scalar tr = ur * pr - ui * pi + Scalar(1) / static_cast<Scalar>(k);
                pi = ur * pi + ui * pr;
                pr = tr;
            }
            const Scalar u2r = ur * ur - ui * ui, u2i = 2 * ur * ui;
            sr -= u2r * pr - u2i * pi;
            si -= u2r * pi + u2i * pr;
        }
        return {sr, si};
    }

    std::complex<Scalar> acc(0);
    for (std::int64_t j = 0; j < s.length; ++j) {
        const auto w = s.start + static_cast<Scalar>(j) * s.step;
        const auto u = c / (w * w);
        acc += std::log(Scalar(1) - u) + u;
    }
    return acc;
}

} // namespace detail

/// Weierstrass zeta of Z + Z*tau by direct summation,
/// 1/z + sum_{w != 0} (1/(z - w) + 1/w + z/w^2).
/**
 * The terms for w and -w are summed together as 2 z^3 / (w^2 (z^2 - w^2)).
 * Throws PoleAtLatticePoint within pole_guard of a lattice point.
 */
template <std::floating_point Scalar>
std::complex<Scalar> zeta_lattice(const std::complex<Scalar> &z, const Tau<Scalar> &tau,
                                  const TruncationPolicy &policy = {})
{
    policy.validate();
    detail::check_not_pole(z, tau);
    const auto z2 = z * z;
    std::complex<Scalar> sum(0);
    detail::for_each_half_shell(tau, policy.shell_radius, [&](std::int64_t, const auto &segment) {
        sum += detail::sum_inv_w2_times(segment, z2);
    });
    return Scalar(1) / z + Scalar(2) * z * z2 * sum;
}

/// Weierstrass wp by direct summation, 1/z^2 + sum_{w != 0} (1/(z - w)^2 - 1/w^2).
template <std::floating_point Scalar>
std::complex<Scalar> wp_lattice(const std::complex<Scalar> &z, const Tau<Scalar> &tau,
                                const TruncationPolicy &policy = {})
{
    policy.validate();
    detail::check_not_pole(z, tau);
    const auto z2 = z * z;
    std::complex<Scalar> sum(0);
    detail::for_each_half_shell(tau, policy.shell_radius, [&](std::int64_t, const auto &segment) {
        sum += detail::sum_wp_pairs(segment, z2);
    });
    return Scalar(1) / z2 + Scalar(2) * z2 * sum;
}

/// Weierstrass sigma, z * prod_{w != 0} (1 - z/w) exp(z/w + z^2/(2 w^2)).
/**
 * The logarithms of the paired factors are accumulated and exponentiated once at the end.
 * Returns exactly zero when z reduces exactly onto a lattice point.
 */
template <std::floating_point Scalar>
std::complex<Scalar> sigma_product(const std::complex<Scalar> &z, const Tau<Scalar> &tau,
                                   const TruncationPolicy &policy = {})
{
    policy.validate();
    if (reduce_mod_lattice(z, tau).z0 == std::complex<Scalar>(0)) {
        return std::complex<Scalar>(0);
    }
    const auto z2 = z * z;
    std::complex<Scalar> log_sum(0);
    const Scalar z2_abs = std::abs(z2);
    detail::for_each_half_shell(tau, policy.shell_radius, [&](std::int64_t k, const auto &segment) {
        const Scalar rmin = detail::shell_min_modulus(tau, k);
        log_sum += detail::sum_log_sigma_pairs(segment, z2, z2_abs / (rmin * rmin));
    });
    return z * std::exp(log_sum);
}

template <std::floating_point Scalar>
struct QuasiPeriods {
    /// zeta(z + 1) - zeta(z)
    std::complex<Scalar> eta1;
    /// zeta(z + tau) - zeta(z)
    std::complex<Scalar> eta2;
};

/// Base point for quasi_periods(); it avoids the half-period special values.
template <std::floating_point Scalar>
std::complex<Scalar> quasi_period_base_point(const Tau<Scalar> &tau)
{
    return Scalar(0.25) + Scalar(0.31) * tau.value();
}

/// Quasi-periods as differences of zeta_lattice at the given base point.
template <std::floating_point Scalar>
QuasiPeriods<Scalar> quasi_periods_at(const std::complex<Scalar> &base, const Tau<Scalar> &tau,
                                      const TruncationPolicy &policy = {})
{
    const auto at_base = zeta_lattice(base, tau, policy);
    return {zeta_lattice(base + Scalar(1), tau, policy) - at_base,
            zeta_lattice(base + tau.value(), tau, policy) - at_base};
}

template <std::floating_point Scalar>
QuasiPeriods<Scalar> quasi_periods(const Tau<Scalar> &tau, const TruncationPolicy &policy = {})
{
    return quasi_periods_at(quasi_period_base_point(tau), tau, policy);
}

/// Interpolating polynomial through (x_k, y_k) evaluated at x = 0.
template <std::floating_point Scalar>
std::complex<Scalar> extrapolate_to_zero(const std::vector<Scalar> &x, const std::vector<std::complex<Scalar>> &y)
{
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    const auto n = static_cast<Eigen::Index>(x.size());
    Matrix vandermonde(n, n), rhs(n, 2);
    for (Eigen::Index i = 0; i < n; ++i) {
        Scalar power = 1;
        for (Eigen::Index j = 0; j < n; ++j) {
            vandermonde(i, j) = power;
            power *= x[static_cast<std::size_t>(i)];
        }
        rhs(i, 0) = y[static_cast<std::size_t>(i)].real();
        rhs(i, 1) = y[static_cast<std::size_t>(i)].imag();
    }
    const Matrix coeffs = vandermonde.colPivHouseholderQr().solve(rhs);
    return {coeffs(0, 0), coeffs(0, 1)};
}

/// Values of sum_{0 < |w| <= R} w^-2 |w|^-2s for each s of the policy ladder.
/**
 * R is the radius of the disk inscribed in the index box of the policy, so every lattice vector
 * of the disk is enumerated.
 */
template <std::floating_point Scalar>
std::vector<std::complex<Scalar>> s_weighted_sums(const Tau<Scalar> &tau, const TruncationPolicy &policy = {})
{
    using detail::ArrayX;
    policy.validate();
    const Scalar radius = detail::shell_min_modulus(tau, policy.shell_radius);
    const Scalar radius2 = radius * radius;
    const auto count = policy.s_exponents.size();
    std::vector<std::complex<Scalar>> sums(count, std::complex<Scalar>(0));

    detail::for_each_half_shell(tau, policy.shell_radius, [&](std::int64_t, const auto &segment) {
        const auto w = detail::materialize(segment);
        const ArrayX<Scalar> r2 = w.re.square() + w.im.square();
        const ArrayX<Scalar> inside = (r2 <= radius2).template cast<Scalar>();
        if (inside.maxCoeff() == 0) {
            return;
        }
        const ArrayX<Scalar> log_r2 = r2.log();
        // w^-2 = conj(w)^2 / |w|^4
        const ArrayX<Scalar> inv_r4 = inside / r2.square();
        const ArrayX<Scalar> base_re = (w.re.square() - w.im.square()) * inv_r4;
        const ArrayX<Scalar> base_im = -2 * w.re * w.im * inv_r4;
        for (std::size_t k = 0; k < count; ++k) {
            const ArrayX<Scalar> weight = (-static_cast<Scalar>(policy.s_exponents[k]) * log_r2).exp();
            // w and -w contribute equally.
            sums[k] += Scalar(2) * std::complex<Scalar>((base_re * weight).sum(), (base_im * weight).sum());
        }
    });
    return sums;
}

/// The regularized sum lim_{s -> 0+} sum_{w != 0} w^-2 |w|^-2s, by polynomial extrapolation
/// in s of s_weighted_sums(). Slow; g2_star() is the fast route to the same number.
template <std::floating_point Scalar>
std::complex<Scalar> s_regularized_sum(const Tau<Scalar> &tau, const TruncationPolicy &policy = {})
{
    const auto sums = s_weighted_sums(tau, policy);
    std::vector<Scalar> s(policy.s_exponents.begin(), policy.s_exponents.end());
    return extrapolate_to_zero(s, sums);
}

enum class Scheme { LatticeSum, QSeries };

template <std::floating_point Scalar>
struct ZetaHatDecomposition {
    /// zeta(z)
    std::complex<Scalar> zeta_part;
    /// S * z
    std::complex<Scalar> linear_part;
    /// (pi / Vol) * conj(z)
    std::complex<Scalar> antiholomorphic_part;
    /// zeta_part - linear_part - antiholomorphic_part
    std::complex<Scalar> total;
};

/// Completed zeta, zeta(z) - S z - (pi / Vol) conj(z), with S = G2*(tau) and Vol = Im(tau).
/**
 * With Scheme::LatticeSum zeta comes from zeta_lattice(); with Scheme::QSeries it comes from
 * theta'/theta + G2 z.
 */
template <std::floating_point Scalar>
ZetaHatDecomposition<Scalar> zeta_hat(const std::complex<Scalar> &z, const Tau<Scalar> &tau,
                                      const TruncationPolicy &policy = {}, Scheme scheme = Scheme::QSeries)
{
    const auto terms = QSeriesTerms::from(policy);
    ZetaHatDecomposition<Scalar> out;
    out.zeta_part = scheme == Scheme::LatticeSum ? zeta_lattice(z, tau, policy) : zeta_qseries(z, tau, terms);
    out.linear_part = g2_star(tau, terms) * z;
    out.antiholomorphic_part = (std::numbers::pi_v<Scalar> / volume(tau)) * std::conj(z);
    out.total = out.zeta_part - out.linear_part - out.antiholomorphic_part;
    return out;
}

} // namespace weierlab

#endif

#ifndef WEIERLAB_THETA_SIGMA_HPP
#define WEIERLAB_THETA_SIGMA_HPP

#include <complex>
#include <concepts>
#include <numbers>

#include "weierlab/lattice.hpp"
#include "weierlab/modular.hpp"
#include "weierlab/weierstrass.hpp"

namespace weierlab
{

/// theta(z) - (-2 pi eta^3 exp(-eta1 z^2 / 2) sigma(z)).
/**
 * Compares the q-series theta against the lattice product sigma; eta1 comes from the lattice
 * quasi-periods.
 */
template <std::floating_point Scalar>
std::complex<Scalar> theta_sigma_residual(const std::complex<Scalar> &z, const Tau<Scalar> &tau,
                                          const TruncationPolicy &policy = {},
                                          const QSeriesTerms &terms = {})
{
    const auto eta1 = quasi_periods(tau, policy).eta1;
    const auto eta = dedekind_eta(tau, terms);
    const auto rhs = -2 * std::numbers::pi_v<Scalar> * eta * eta * eta * std::exp(-eta1 * z * z / Scalar(2))
                     * sigma_product(z, tau, policy);
    return jacobi_theta(z, tau, terms) - rhs;
}

} // namespace weierlab

#endif

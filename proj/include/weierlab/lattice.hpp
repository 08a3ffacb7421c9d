#ifndef WEIERLAB_LATTICE_HPP
#define WEIERLAB_LATTICE_HPP

#include <cmath>
#include <complex>
#include <concepts>
#include <cstdint>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "weierlab/errors.hpp"

namespace weierlab
{

/// A point tau of the upper half-plane, indexing the lattice Z + Z*tau.
/**
 * The nome q = exp(2*pi*i*tau) is computed once at construction. Instances can only be
 * obtained through make_tau(), so Im(tau) > 0 holds for every value of this type.
 */
template <std::floating_point Scalar>
class Tau
{
public:
    using real_type = Scalar;
    using complex_type = std::complex<Scalar>;

    const complex_type &value() const noexcept { return m_tau; }
    Scalar real() const noexcept { return m_tau.real(); }
    Scalar imag() const noexcept { return m_tau.imag(); }
    const complex_type &nome() const noexcept { return m_q; }

    template <std::floating_point S>
    friend Tau<S> make_tau(const std::complex<S> &);

private:
    explicit Tau(const complex_type &tau)
        : m_tau(tau),
          m_q(std::polar(std::exp(-2 * std::numbers::pi_v<Scalar> * tau.imag()),
                         2 * std::numbers::pi_v<Scalar> * tau.real()))
    {
    }

    complex_type m_tau;
    complex_type m_q;
};

using TauParameter = Tau<double>;

template <std::floating_point Scalar>
Tau<Scalar> make_tau(const std::complex<Scalar> &value)
{
    if (!(value.imag() > 0) || !std::isfinite(value.real()) || !std::isfinite(value.imag())) {
        std::ostringstream oss;
        oss << "tau must lie in the upper half-plane, got Im(tau) = " << value.imag();
        throw NotInUpperHalfPlane(oss.str());
    }
    return Tau<Scalar>(value);
}

/// Integer coordinates (m, n) of the lattice vector m + n*tau.
struct LatticeVector {
    std::int64_t m = 0;
    std::int64_t n = 0;

    bool is_origin() const noexcept { return m == 0 && n == 0; }
    LatticeVector operator-() const noexcept { return {-m, -n}; }
    friend bool operator==(const LatticeVector &, const LatticeVector &) = default;
    friend auto operator<=>(const LatticeVector &, const LatticeVector &) = default;
};

template <std::floating_point Scalar>
std::complex<Scalar> embed(const LatticeVector &v, const Tau<Scalar> &tau)
{
    return std::complex<Scalar>(static_cast<Scalar>(v.m)) + static_cast<Scalar>(v.n) * tau.value();
}

/// Truncation parameters shared by the lattice sums and the q-series.
struct TruncationPolicy {
    /// Lattice sums and the sigma product run over 0 < max(|m|, |n|) <= shell_radius.
    std::int64_t shell_radius = 500;
    /// Number of q-series terms.
    int q_terms = 64;
    /// Exponent ladder for the s -> 0 extrapolation of the regularized sum, strictly decreasing.
    std::vector<double> s_exponents{0.5, 0.25, 0.125, 0.0625};
    /// q-series evaluators reject tau with Im(tau) below this.
    double min_im_tau = 0.05;

    /// Throws std::invalid_argument if any field is out of range.
    void validate() const
    {
        if (shell_radius < 1) {
            throw std::invalid_argument("shell radius must be >= 1");
        }
        if (q_terms < 1) {
            throw std::invalid_argument("q-series term count must be >= 1");
        }
        if (s_exponents.empty()) {
            throw std::invalid_argument("the s exponent ladder must not be empty");
        }
        for (std::size_t i = 0; i < s_exponents.size(); ++i) {
            if (!(s_exponents[i] > 0)) {
                throw std::invalid_argument("s exponents must be positive");
            }
            if (i > 0 && !(s_exponents[i] < s_exponents[i - 1])) {
                throw std::invalid_argument("s exponents must be strictly decreasing");
            }
        }
        if (!(min_im_tau > 0)) {
            throw std::invalid_argument("min_im_tau must be positive");
        }
    }
};

/// All lattice vectors with 0 < max(|m|, |n|) <= radius, shell by shell.
/**
 * Within shell k the vectors are listed as the half-shell {(m, k) : |m| <= k} followed by
 * {(k, n) : |n| < k}, then the negatives of both in the same order. The result is closed under
 * negation and has (2*radius + 1)^2 - 1 elements.
 */
template <std::floating_point Scalar>
std::vector<LatticeVector> shell_vectors(const Tau<Scalar> &, std::int64_t radius)
{
    if (radius < 1) {
        throw std::invalid_argument("shell radius must be >= 1");
    }
    std::vector<LatticeVector> out;
    out.reserve(static_cast<std::size_t>((2 * radius + 1) * (2 * radius + 1) - 1));
    std::vector<LatticeVector> half;
    for (std::int64_t k = 1; k <= radius; ++k) {
        half.clear();
        for (std::int64_t m = -k; m <= k; ++m) {
            half.push_back({m, k});
        }
        for (std::int64_t n = -(k - 1); n <= k - 1; ++n) {
            half.push_back({k, n});
        }
        out.insert(out.end(), half.begin(), half.end());
        for (const auto &v : half) {
            out.push_back(-v);
        }
    }
    return out;
}

/// Result of reducing z modulo the lattice: z = z0 + m + n*tau.
template <std::floating_point Scalar>
struct Reduced {
    std::complex<Scalar> z0;
    std::int64_t m = 0;
    std::int64_t n = 0;
};

/// Coordinates (a, b) of z in the basis (1, tau): z = a + b*tau.
template <std::floating_point Scalar>
std::pair<Scalar, Scalar> lattice_coordinates(const std::complex<Scalar> &z, const Tau<Scalar> &tau)
{
    const Scalar b = z.imag() / tau.imag();
    return {z.real() - b * tau.real(), b};
}

/// Reduces z into the half-open parallelogram [0,1) + [0,1)*tau.
template <std::floating_point Scalar>
Reduced<Scalar> reduce_mod_lattice(const std::complex<Scalar> &z, const Tau<Scalar> &tau)
{
    auto [a, b] = lattice_coordinates(z, tau);
    auto n = static_cast<std::int64_t>(std::floor(b));
    auto m = static_cast<std::int64_t>(std::floor(a));
    auto z0 = z - embed(LatticeVector{m, n}, tau);

    // Rounding can leave a coordinate of z0 at -tiny or at 1; both resolve toward 0.
    for (int pass = 0; pass < 2; ++pass) {
        auto [a0, b0] = lattice_coordinates(z0, tau);
        std::int64_t dm = 0, dn = 0;
        if (b0 >= 1) {
            dn = 1;
        } else if (b0 < 0) {
            dn = -1;
        }
        if (a0 >= 1) {
            dm = 1;
        } else if (a0 < 0) {
            dm = -1;
        }
        if (dm == 0 && dn == 0) {
            break;
        }
        m += dm;
        n += dn;
        z0 = z - embed(LatticeVector{m, n}, tau);
    }
    auto [a0, b0] = lattice_coordinates(z0, tau);
    if (a0 < 0 || a0 >= 1) {
        z0 -= a0;
    }
    if (b0 < 0 || b0 >= 1) {
        z0 -= b0 * tau.value();
    }
    return {z0, m, n};
}

/// Distance from z to the nearest point of the lattice.
template <std::floating_point Scalar>
Scalar lattice_distance(const std::complex<Scalar> &z, const Tau<Scalar> &tau)
{
    const auto b = z.imag() / tau.imag();
    const auto n0 = std::round(b);
    Scalar best = std::numeric_limits<Scalar>::infinity();
    // Rows with |b - n| * Im(tau) >= best cannot hold a closer point.
    for (Scalar step = 0;; ++step) {
        bool any = false;
        for (Scalar n : {n0 - step, n0 + step}) {
            if (std::abs(b - n) * tau.imag() >= best) {
                continue;
            }
            any = true;
            const auto row = z - n * tau.value();
            const auto m = std::round(row.real());
            best = std::min(best, std::abs(row - m));
            if (step == 0) {
                break;
            }
        }
        if (!any && step > 0) {
            break;
        }
    }
    return best;
}

/// Covolume of the lattice, Im(tau).
template <std::floating_point Scalar>
Scalar volume(const Tau<Scalar> &tau) noexcept
{
    return tau.imag();
}

} // namespace weierlab

#endif

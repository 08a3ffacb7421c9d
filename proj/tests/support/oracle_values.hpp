// Reference values produced by tests/oracles/lattice_oracle.py (mpmath, 30 digits).
#ifndef WEIERLAB_TESTS_ORACLE_VALUES_HPP
#define WEIERLAB_TESTS_ORACLE_VALUES_HPP

#include <complex>

namespace frozen
{

using Complex = std::complex<double>;

// Gamma(1/4) / (2 pi^(3/4))
inline constexpr double eta_i = 0.768225422326056659;

inline constexpr double g2_star_2i = 1.7187964545050932069;
inline const Complex g2_star_half_i{0.294898849675493104, 0.0};
inline const Complex g2_0p3_1p1i{3.3143657958308201897, -0.07467307910592219754};
inline const Complex e2_0p3_1p1i{1.0074463963717725256, -0.022697894283689875741};
inline const Complex g2_star_0p1_1p3i{0.85514041546060551182, -0.013177331019333450678};

inline const Complex eta2_half_i{1.7182457516326431712, -2.8466938039143001345};

inline const Complex zeta_half_i{1.5707963267948966192, 0.0};
inline const Complex zeta_0p3_0p1i_i{2.9441374020632753598, -1.0829717798741481327};
inline const Complex zeta_0p7_m0p4i_half_i{2.0877644882591320063, 1.5375092526098016508};
inline const Complex wp_0p25_0p25i_i{0.0, -6.8751858180203728275};
inline const Complex wp_0p7_m0p4i_half_i{-2.328992442817428545, -3.5883153940088108261};

} // namespace frozen

#endif

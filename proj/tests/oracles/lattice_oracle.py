"""Reference values for the test suite, computed with mpmath at 30 digits.

Independent of the library's q-series and of its shell-truncated lattice sums: the lattice
sums are summed row by row in closed form (Eisenstein summation),

  G2(tau)   = 2 zeta(2) + 2 sum_{n>=1} pi^2 / sin^2(pi n tau)
  zeta(z)   = z G2 + pi cot(pi z) + pi sum_{n>=1} [cot(pi(z - n tau)) + cot(pi(z + n tau))]
  wp(z)     = -2 zeta(2) + pi^2 / sin^2(pi z) + sum_{n!=0} [pi^2 / sin^2(pi(z - n tau)) - pi^2 / sin^2(pi n tau)]

and S(Lambda) = G2 - pi / Im(tau) is cross-checked against a disk-truncated Hecke sum.

Run: python3 tests/oracles/lattice_oracle.py
"""
import mpmath as mp

mp.mp.dps = 30
ROWS = 60


def g2(tau):
    return 2 * mp.zeta(2) + 2 * mp.nsum(lambda n: mp.pi**2 / mp.sin(mp.pi * n * tau) ** 2, [1, mp.inf])


def zeta(z, tau):
    s = z * g2(tau) + mp.pi * mp.cot(mp.pi * z)
    for n in range(1, ROWS):
        s += mp.pi * (mp.cot(mp.pi * (z - n * tau)) + mp.cot(mp.pi * (z + n * tau)))
    return s


def wp(z, tau):
    c2 = lambda x: mp.pi**2 / mp.sin(mp.pi * x) ** 2
    s = -2 * mp.zeta(2) + c2(z)
    for n in range(1, ROWS):
        s += c2(z - n * tau) + c2(z + n * tau) - 2 * c2(n * tau)
    return s


def eta_i():
    return mp.gamma(mp.mpf(1) / 4) / (2 * mp.pi ** (mp.mpf(3) / 4))


def show(label, value):
    value = mp.mpc(value)
    print(f"{label:40s} {mp.nstr(value.real, 20):>28s} {mp.nstr(value.imag, 20):>28s}")


if __name__ == "__main__":
    I = mp.mpc(0, 1)
    show("eta(i)", eta_i())
    for tau in [I, 2 * I, mp.mpc(0.5, 1), mp.mpc(0.3, 1.1), mp.mpc(0.1, 1.3)]:
        G = g2(tau)
        show(f"G2({tau})", G)
        show(f"G2*({tau})", G - mp.pi / tau.imag)
        show(f"E2({tau})", G / (2 * mp.zeta(2)))
        z0 = mp.mpf(0.25) + mp.mpf(0.31) * tau
        show(f"eta1({tau}) via zeta diff", zeta(z0 + 1, tau) - zeta(z0, tau))
        show(f"eta2({tau}) via zeta diff", zeta(z0 + tau, tau) - zeta(z0, tau))
    show("zeta(0.5; i)", zeta(mp.mpf(0.5), I))
    show("zeta(0.3+0.1i; i)", zeta(mp.mpc(0.3, 0.1), I))
    show("zeta(0.7-0.4i; 0.5+i)", zeta(mp.mpc(0.7, -0.4), mp.mpc(0.5, 1)))
    show("wp((1+i)/2; i)", wp(mp.mpc(0.5, 0.5), I))
    show("wp(0.25+0.25i; i)", wp(mp.mpc(0.25, 0.25), I))
    show("wp(0.7-0.4i; 0.5+i)", wp(mp.mpc(0.7, -0.4), mp.mpc(0.5, 1)))

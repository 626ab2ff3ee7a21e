# Copyright (c) 2026 The starkscat developers.
# SPDX-License-Identifier: Apache-2.0
"""Reference values for the smooth cutoff family, frozen into test_cutoffs.cpp.

Everything is computed directly from the defining bump s -> exp(-1/(1-s^2))
with mpmath quadrature, independently of the C++ lookup-table implementation.
Run: python3 tests/oracles/cutoff_reference.py
"""
import mpmath as mp

mp.mp.dps = 30

def bump(s):
    if abs(s) >= 1:
        return mp.mpf(0)
    return mp.exp(-1 / (1 - s * s))

Z = mp.quad(bump, [-1, 0, 1])

def cdf(z):
    if z <= -1:
        return mp.mpf(0)
    if z >= 1:
        return mp.mpf(1)
    return mp.quad(bump, [-1, z]) / Z

def m1(z):
    if z <= -1 or z >= 1:
        return mp.mpf(0)
    return mp.quad(lambda s: s * bump(s), [-1, z]) / Z

def chi_below(kappa, t, frac=mp.mpf(1) / 2):
    lo = mp.mpf(3) * kappa / 4 if kappa > 0 else mp.mpf(4) * kappa / 3
    hi = lo + frac * (kappa - lo)
    if t <= lo:
        return mp.mpf(1)
    if t >= hi:
        return mp.mpf(0)
    return 1 - cdf((2 * t - lo - hi) / (hi - lo))

def breve(t, w=mp.mpf(1) / 4):
    # mollified max(1, t): convolution with the normalized bump at half-width w
    z = (t - 1) / w
    return 1 + (t - 1) * cdf(z) - w * m1(z)

if __name__ == "__main__":
    print("Z                    =", mp.nstr(Z, 17))
    print("chi_below(1, 0.8)    =", mp.nstr(chi_below(1, mp.mpf("0.8")), 17))
    print("chi_below(1, 0.85)   =", mp.nstr(chi_below(1, mp.mpf("0.85")), 17))
    print("chi_below(2, 1.6)    =", mp.nstr(chi_below(2, mp.mpf("1.6")), 17))
    print("chi_below'(1, 0.8)   =", mp.nstr(-bump(mp.mpf("-0.2")) / Z * 2 / mp.mpf("0.125"), 17))
    print("breve(1)             =", mp.nstr(breve(1), 17))
    print("breve(0.9)           =", mp.nstr(breve(mp.mpf("0.9")), 17))
    print("breve(1.2)           =", mp.nstr(breve(mp.mpf("1.2")), 17))
    print("breve'(1.1)          =", mp.nstr(cdf(mp.mpf("0.4")), 17))

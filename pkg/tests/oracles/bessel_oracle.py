"""Slow series-based Bessel oracle with explicit term-count error bounds.

Independent of the production evaluator: everything is computed with mpmath
ascending series at a working precision chosen from the argument size, so
the cancellation of the series (which grows like ``I_0(z) ~ e^z``) is
absorbed by extra digits.  Truncation stops once a geometric tail bound
certifies the remainder below the target.
"""

from __future__ import annotations

import mpmath as mp


def _dps_for(z: float) -> int:
    # digits lost to cancellation ~ log10(I_0(z)) ~ 0.4343 z
    return 60 + int(0.45 * float(z))


def besselj_oracle(n: int, z, dps: int | None = None) -> mp.mpf:
    """J_n(z) by the ascending series with a certified tail bound."""
    dps = dps or _dps_for(z)
    with mp.workdps(dps):
        zz = mp.mpf(z)
        if zz == 0:
            return mp.mpf(1 if n == 0 else 0)
        q = zz * zz / 4
        term = (zz / 2) ** n / mp.factorial(n)
        total = term
        m = 0
        tol = mp.mpf(10) ** (-dps + 5)
        while True:
            m += 1
            term = -term * q / (m * (n + m))
            total += term
            # ratio of consecutive terms; certifies a geometric tail
            ratio = q / ((m + 1) * (n + m + 1))
            if ratio < mp.mpf("0.5") and abs(term) / (1 - ratio) < tol * abs(total):
                break
            if m > 100000:
                raise RuntimeError("series did not converge")
        return +total


def _harmonic(m: int) -> mp.mpf:
    return mp.mpf(0) if m == 0 else mp.fsum(mp.one / i for i in range(1, m + 1))


def bessely01_oracle(n: int, z, dps: int | None = None) -> mp.mpf:
    """Y_0 or Y_1 via the DLMF 10.8.1 log-series."""
    assert n in (0, 1)
    dps = dps or _dps_for(z)
    with mp.workdps(dps):
        zz = mp.mpf(z)
        q = zz * zz / 4
        L = mp.log(zz / 2) + mp.euler
        jn = besselj_oracle(n, zz, dps)
        tol = mp.mpf(10) ** (-dps + 5)
        if n == 0:
            term = mp.mpf(1)  # q^m/(m!)^2 at m=0 -> updated before use
            total = mp.mpf(0)
            m = 0
            while True:
                m += 1
                term = term * q / (m * m)
                contrib = (-1) ** (m + 1) * _harmonic(m) * term
                total += contrib
                if term < tol and m > 4:
                    break
            return +(2 / mp.pi) * (L * jn + total)
        term = zz / 2  # t1_m at m=0
        total = (_harmonic(0) + _harmonic(1)) * term
        m = 0
        while True:
            m += 1
            term = term * q / (m * (m + 1))
            total += (-1) ** m * (_harmonic(m) + _harmonic(m + 1)) * term
            if term < tol and m > 4:
                break
        return +((2 / mp.pi) * L * jn - 2 / (mp.pi * zz) - total / mp.pi)


def bessely_oracle(n: int, z, dps: int | None = None) -> mp.mpf:
    """Y_n via upward recurrence from the order-0/1 series (stable for Y)."""
    dps = dps or _dps_for(z)
    with mp.workdps(dps + 10):
        if n <= 1:
            return bessely01_oracle(n, z, dps + 10)
        zz = mp.mpf(z)
        ym1 = bessely01_oracle(0, zz, dps + 10)
        y = bessely01_oracle(1, zz, dps + 10)
        for m in range(1, n):
            ym1, y = y, (2 * m / zz) * y - ym1
        return +y

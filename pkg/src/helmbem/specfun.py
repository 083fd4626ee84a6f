"""Bessel/Hankel functions and the 2D Helmholtz fundamental solution.

Evaluation strategy for orders 0 and 1:

* ``z < 17``: ascending power series, accumulated in double-double
  arithmetic.  The series suffers from cancellation that grows like
  ``I_0(z)``; the double-double accumulator keeps the absolute error near
  ``I_0(z) * 1e-32``, which is far below 1e-13 over the whole band.
* ``z >= 17``: Hankel asymptotic expansion, truncated at the smallest term.
  At the crossover the optimally truncated remainder is ~exp(-2z) ~ 2e-15.

Higher integer orders use the three-term recurrence: upward for Y (and for
J when ``z > n``), Miller's downward recurrence with normalization
``J_0 + 2*sum J_{2m} = 1`` otherwise.

All array-valued helpers are pure functions of their inputs and safe to
call concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

EULER_GAMMA = 0.5772156649015328606065120900824024
_SERIES_CUTOFF = 17.0
_MAX_ORDER = 200
_MAX_ARG = 1.0e4

__all__ = [
    "KernelEval",
    "bessel_J",
    "bessel_Y",
    "hankel1",
    "green_kernel",
    "kernel_log_split",
    "bessel_bundle01",
]


# ---------------------------------------------------------------------------
# double-double helpers (vectorized error-free transformations)
# ---------------------------------------------------------------------------

_SPLITTER = 134217729.0  # 2**27 + 1


def _two_sum(a, b):
    s = a + b
    bb = s - a
    err = (a - (s - bb)) + (b - bb)
    return s, err


def _split(a):
    t = _SPLITTER * a
    hi = t - (t - a)
    lo = a - hi
    return hi, lo


def _two_prod(a, b):
    p = a * b
    ah, al = _split(a)
    bh, bl = _split(b)
    err = ((ah * bh - p) + ah * bl + al * bh) + al * bl
    return p, err


def _dd_add(xh, xl, yh, yl):
    sh, sl = _two_sum(xh, yh)
    sl = sl + (xl + yl)
    hi, lo = _two_sum(sh, sl)
    return hi, lo


def _dd_mul(xh, xl, yh, yl):
    ph, pl = _two_prod(xh, yh)
    pl = pl + (xh * yl + xl * yh)
    hi, lo = _two_sum(ph, pl)
    return hi, lo


def _dd_div_scalar(xh, xl, c):
    # divide a dd number by an exact float scalar
    q1 = xh / c
    ph, pl = _two_prod(q1, c)
    rh, rl = _dd_add(xh, xl, -ph, -pl)
    q2 = (rh + rl) / c
    hi, lo = _two_sum(q1, q2)
    return hi, lo


def _series_terms_needed(qmax: float) -> int:
    """Smallest m so that qmax**m / (m!)**2 < 1e-40 (relative tail cutoff)."""
    if qmax <= 0.0:
        return 4
    m, logterm = 1, 0.0
    logq = math.log(qmax)
    while m < 200:
        logterm += logq - 2.0 * math.log(m)
        if logterm < -92.1:  # ln(1e-40)
            return m + 2
        m += 1
    return 200


def _series_block(z: np.ndarray):
    """J0, J1, Y0_entire, Y1_entire for z in (0, 17) via dd power series.

    The "entire" parts are Yn with the log branch removed:
        Y0 = (2/pi)(ln(z/2)+gamma) J0 + Y0e
        Y1 = (2/pi)(ln(z/2)+gamma) J1 - 2/(pi z) + Y1e
    """
    qh, ql = _two_prod(z, z)
    qh, ql = _dd_div_scalar(qh, ql, 4.0)  # q = z^2/4

    zero = np.zeros_like(z)
    # term0 for J0 series: 1 ; for J1 series: z/2
    t0h, t0l = np.ones_like(z), zero.copy()
    t1h, t1l = z / 2.0, zero.copy()
    j0h, j0l = t0h.copy(), zero.copy()
    j1h, j1l = t1h.copy(), zero.copy()
    y0h, y0l = zero.copy(), zero.copy()
    # Y1e starts at m=0 with coefficient (H_0 + H_1) = 1
    y1h, y1l = -t1h.copy(), -t1l.copy()   # sign: -(1/pi) sum (-1)^m (...)
    Hh, Hl = zero.copy(), zero.copy()     # harmonic number H_m (dd)

    mmax = _series_terms_needed(float(np.max(qh))) if z.size else 4
    for m in range(1, mmax + 1):
        # H_m = H_{m-1} + 1/m  (dd reciprocal)
        rh, rl = _dd_div_scalar(np.ones_like(z), zero, float(m))
        Hh, Hl = _dd_add(Hh, Hl, rh, rl)
        # t0_m = t0_{m-1} * q / m^2
        t0h, t0l = _dd_mul(t0h, t0l, qh, ql)
        t0h, t0l = _dd_div_scalar(t0h, t0l, float(m * m))
        # t1_m = t1_{m-1} * q / (m (m+1))
        t1h, t1l = _dd_mul(t1h, t1l, qh, ql)
        t1h, t1l = _dd_div_scalar(t1h, t1l, float(m * (m + 1)))
        sgn = -1.0 if (m % 2) else 1.0
        j0h, j0l = _dd_add(j0h, j0l, sgn * t0h, sgn * t0l)
        j1h, j1l = _dd_add(j1h, j1l, sgn * t1h, sgn * t1l)
        # Y0e += (-1)^{m+1} H_m t0_m   (factor 2/pi applied at the end)
        ph, pl = _dd_mul(Hh, Hl, t0h, t0l)
        y0h, y0l = _dd_add(y0h, y0l, -sgn * ph, -sgn * pl)
        # Y1e += -(1/pi) (-1)^m (H_m + H_{m+1}) t1_m ; H_{m+1} = H_m + 1/(m+1)
        rh, rl = _dd_div_scalar(np.ones_like(z), zero, float(m + 1))
        gh, gl = _dd_add(Hh, Hl, rh, rl)       # H_{m+1}
        gh, gl = _dd_add(gh, gl, Hh, Hl)       # H_m + H_{m+1}
        ph, pl = _dd_mul(gh, gl, t1h, t1l)
        y1h, y1l = _dd_add(y1h, y1l, sgn * ph, sgn * pl)

    j0 = j0h + j0l
    j1 = j1h + j1l
    y0e = (2.0 / math.pi) * (y0h + y0l)
    y1e = (-1.0 / math.pi) * (y1h + y1l)
    return j0, j1, y0e, y1e


# phases of the Hankel asymptotics: exp(-i(2n+1)pi/4)
_OMEGA0 = complex(math.sqrt(0.5), -math.sqrt(0.5))
_OMEGA1 = complex(-math.sqrt(0.5), -math.sqrt(0.5))


def _asymptotic_h(n: int, z: np.ndarray) -> np.ndarray:
    """H_n^(1)(z) for n in {0,1}, z >= 17, via the Hankel expansion."""
    s = np.ones_like(z, dtype=complex)
    term = np.ones_like(z, dtype=complex)
    mu = 4.0 * n * n
    m = 0
    prev = np.full_like(z, np.inf)
    while m < 40:
        coeff = (mu - (2 * m + 1) ** 2) / (8.0 * (m + 1))
        term = term * (1j * coeff) / z
        mag = np.abs(term)
        if np.all(mag >= prev):  # diverging: stop before adding
            break
        s = s + term
        if np.max(mag) < 1e-18:
            break
        prev = mag
        m += 1
    omega = _OMEGA0 if n == 0 else _OMEGA1
    phase = (np.cos(z) + 1j * np.sin(z)) * omega
    return np.sqrt(2.0 / (math.pi * z)) * phase * s


@dataclass(frozen=True)
class _Bundle01:
    """Orders 0/1 values plus the entire (log-free) parts of Y."""

    j0: np.ndarray
    j1: np.ndarray
    y0: np.ndarray
    y1: np.ndarray
    y0_entire: np.ndarray
    y1_entire: np.ndarray


def bessel_bundle01(z: np.ndarray) -> _Bundle01:
    """Vectorized J0, J1, Y0, Y1 (plus entire parts) for z > 0."""
    z = np.asarray(z, dtype=float)
    if z.size and (np.any(~np.isfinite(z)) or np.any(z <= 0.0)):
        raise ValueError("bessel argument must be finite and > 0")
    shape = z.shape
    zf = z.ravel()
    j0 = np.empty_like(zf)
    j1 = np.empty_like(zf)
    y0 = np.empty_like(zf)
    y1 = np.empty_like(zf)
    y0e = np.empty_like(zf)
    y1e = np.empty_like(zf)

    small = zf < _SERIES_CUTOFF
    if np.any(small):
        zs = zf[small]
        a, b, c, d = _series_block(zs)
        L = np.log(zs / 2.0) + EULER_GAMMA
        j0[small] = a
        j1[small] = b
        y0e[small] = c
        y1e[small] = d
        y0[small] = (2.0 / math.pi) * L * a + c
        y1[small] = (2.0 / math.pi) * L * b - 2.0 / (math.pi * zs) + d
    if np.any(~small):
        zl = zf[~small]
        h0 = _asymptotic_h(0, zl)
        h1 = _asymptotic_h(1, zl)
        L = np.log(zl / 2.0) + EULER_GAMMA
        j0[~small] = h0.real
        y0[~small] = h0.imag
        j1[~small] = h1.real
        y1[~small] = h1.imag
        y0e[~small] = h0.imag - (2.0 / math.pi) * L * h0.real
        y1e[~small] = h1.imag - (2.0 / math.pi) * L * h1.real + 2.0 / (math.pi * zl)

    return _Bundle01(
        j0.reshape(shape), j1.reshape(shape), y0.reshape(shape),
        y1.reshape(shape), y0e.reshape(shape), y1e.reshape(shape),
    )


# ---------------------------------------------------------------------------
# general integer orders
# ---------------------------------------------------------------------------


def _check_order_arg(order: int, z: np.ndarray) -> None:
    if not isinstance(order, (int, np.integer)) or order < 0:
        raise ValueError("order must be a nonnegative integer")
    if order > _MAX_ORDER:
        raise ValueError(f"order {order} exceeds supported maximum {_MAX_ORDER}")
    if z.size and np.any(z > _MAX_ARG):
        raise ValueError(f"argument exceeds supported maximum {_MAX_ARG}")


def _jn_forward(n: int, z: np.ndarray, j0: np.ndarray, j1: np.ndarray) -> np.ndarray:
    jm1, j = j0, j1
    for m in range(1, n):
        jm1, j = j, (2.0 * m / z) * j - jm1
    return j


def _jn_miller(n: int, z: np.ndarray) -> np.ndarray:
    """Downward (Miller) recurrence, rescaled to avoid overflow."""
    zmax = float(np.max(z))
    M = max(n, int(math.ceil(zmax))) + 28 + int(1.6 * math.sqrt(max(n, zmax, 1.0)))
    jp = np.zeros_like(z)
    jc = np.full_like(z, 1e-280)
    target = np.zeros_like(z)
    norm = np.zeros_like(z)
    for m in range(M, 0, -1):
        jm = (2.0 * m / z) * jc - jp
        jp, jc = jc, jm
        if m - 1 == n:
            target = jc.copy()
        if (m - 1) % 2 == 0 and m - 1 > 0:
            norm += 2.0 * jc
        big = np.abs(jc) > 1e250
        if np.any(big):
            scale = np.where(big, 1e-250, 1.0)
            jp *= scale
            jc *= scale
            norm *= scale
            target *= scale
    norm += jc  # adds J_0 estimate
    return target / norm


def bessel_J(order: int, z):
    """Bessel function of the first kind, nonnegative integer order, z > 0.

    Accepts scalars or ndarrays; J_0(0) = 1 and J_n(0) = 0 are handled.
    """
    zarr = np.asarray(z, dtype=float)
    scalar = zarr.ndim == 0
    zarr = np.atleast_1d(zarr)
    _check_order_arg(order, zarr)
    if np.any(zarr < 0.0) or np.any(~np.isfinite(zarr)):
        raise ValueError("argument must be finite and >= 0")
    out = np.empty_like(zarr)
    at_zero = zarr == 0.0
    if np.any(at_zero):
        out[at_zero] = 1.0 if order == 0 else 0.0
    pos = ~at_zero
    if np.any(pos):
        zp = zarr[pos]
        if order <= 1:
            b = bessel_bundle01(zp)
            out[pos] = b.j0 if order == 0 else b.j1
        else:
            res = np.empty_like(zp)
            up = zp > order + 2.0
            if np.any(up):
                b = bessel_bundle01(zp[up])
                res[up] = _jn_forward(order, zp[up], b.j0, b.j1)
            if np.any(~up):
                res[~up] = _jn_miller(order, zp[~up])
            out[pos] = res
    return float(out[0]) if scalar else out


def bessel_Y(order: int, z):
    """Bessel function of the second kind, nonnegative integer order, z > 0."""
    zarr = np.asarray(z, dtype=float)
    scalar = zarr.ndim == 0
    zarr = np.atleast_1d(zarr)
    _check_order_arg(order, zarr)
    if np.any(zarr <= 0.0) or np.any(~np.isfinite(zarr)):
        raise ValueError("bessel_Y requires z > 0")
    b = bessel_bundle01(zarr)
    if order == 0:
        out = b.y0
    elif order == 1:
        out = b.y1
    else:
        ym1, y = b.y0, b.y1
        for m in range(1, order):
            ym1, y = y, (2.0 * m / zarr) * y - ym1
        out = y
        if np.any(~np.isfinite(out)):
            raise OverflowError(
                f"Y_{order} overflows double precision for the given argument"
            )
    return float(out[0]) if scalar else out


def hankel1(order: int, z):
    """Hankel function of the first kind H^(1) = J + iY, order 0 or 1."""
    if order not in (0, 1):
        raise ValueError("hankel1 supports orders 0 and 1 only")
    zarr = np.asarray(z, dtype=float)
    scalar = zarr.ndim == 0
    zarr = np.atleast_1d(zarr)
    if np.any(zarr <= 0.0) or np.any(~np.isfinite(zarr)):
        raise ValueError("hankel1 requires z > 0")
    b = bessel_bundle01(zarr)
    out = (b.j0 + 1j * b.y0) if order == 0 else (b.j1 + 1j * b.y1)
    return complex(out[0]) if scalar else out


# ---------------------------------------------------------------------------
# Helmholtz fundamental solution (d = 2)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class KernelEval:
    """Green's function value and its gradient w.r.t. the second argument."""

    value: complex
    grad_y: np.ndarray  # shape (2,), complex


def green_kernel(k: float, x, y) -> KernelEval:
    """G_k(x, y) for the 2D Helmholtz operator; k = 0 selects the Laplace kernel.

    G_k = (i/4) H_0^(1)(k|x-y|) for k > 0 and -(1/2pi) ln|x-y| for k = 0.
    """
    if k < 0.0:
        raise ValueError("wavenumber must be >= 0")
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    diff = y - x
    r = float(np.hypot(diff[0], diff[1]))
    if r == 0.0:
        raise ZeroDivisionError("green_kernel is singular at x == y")
    if k == 0.0:
        value = complex(-math.log(r) / (2.0 * math.pi))
        grad = (-1.0 / (2.0 * math.pi * r * r)) * diff.astype(complex)
        return KernelEval(value, grad)
    b = bundle = bessel_bundle01(np.array([k * r]))
    h0 = complex(b.j0[0], b.y0[0])
    h1 = complex(bundle.j1[0], bundle.y1[0])
    value = 0.25j * h0
    grad = (-0.25j * k * h1 / r) * diff.astype(complex)
    return KernelEval(value, grad)


def kernel_log_split(k: float, x, y) -> tuple[complex, complex]:
    """Split G_k(x,y) = log_coeff * ln|x-y| + smooth, smooth continuous at x=y.

    log_coeff = -J_0(k|x-y|)/(2 pi); for k = 0 this is the Laplace kernel
    with smooth part identically zero.
    """
    if k < 0.0:
        raise ValueError("wavenumber must be >= 0")
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    r = float(np.hypot(y[0] - x[0], y[1] - x[1]))
    if r == 0.0:
        raise ZeroDivisionError("kernel_log_split requires x != y")
    if k == 0.0:
        return complex(-1.0 / (2.0 * math.pi)), complex(0.0)
    b = bessel_bundle01(np.array([k * r]))
    j0 = float(b.j0[0])
    y0e = float(b.y0_entire[0])
    log_coeff = complex(-j0 / (2.0 * math.pi))
    lk = math.log(k / 2.0) + EULER_GAMMA
    smooth = 0.25j * j0 - 0.25 * y0e - lk * j0 / (2.0 * math.pi)
    return log_coeff, complex(smooth)

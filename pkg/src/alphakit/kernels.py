"""Pointwise kernels of the weighted Laplacian on the unit disk.

All evaluators accept Python scalars or numpy arrays and broadcast
their arguments.  Complex powers always use the principal branch; the
bases ``1 - z*conj(w)`` that appear here have positive real part on the
bidisk, so the branch never jumps.

The weighted Laplacian is

    Delta_alpha f = d/dz [ (1 - |z|^2)^(-alpha) * d/dzbar f ],

and the kernels below are the ones that invert it: ``poisson_kernel_alpha``
reproduces boundary values, ``green_alpha`` solves the equation with zero
boundary values against the normalized area measure ``dA = dx dy / pi``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import CoincidenceError, ConvergenceError, DomainError

#: above this argument ``h_alpha`` leaves the power series for quadrature
H_SERIES_SWITCH = 0.5
H_MAX_TERMS = 1_000_000

_GL_H_NODES, _GL_H_WEIGHTS = np.polynomial.legendre.leggauss(48)


def check_alpha(alpha: float, *, nonnegative: bool = False) -> float:
    """Validate the weight exponent and return it as a float."""
    alpha = float(alpha)
    if not np.isfinite(alpha) or alpha <= -1.0:
        raise DomainError(f"alpha must be > -1, got {alpha!r}")
    if nonnegative and alpha < 0.0:
        raise DomainError(f"this operation requires alpha >= 0, got {alpha!r}")
    return alpha


def _in_open_disk(z, name="z"):
    z = np.asarray(z, dtype=complex)
    if np.any(~np.isfinite(z)) or np.any(np.abs(z) >= 1.0):
        raise DomainError(f"{name} must lie in the open unit disk")
    return z


def _cpow(base, expo):
    """Principal-branch power ``base**expo`` for complex ``base``."""
    return np.exp(expo * np.log(base))


def _unwrap(x):
    x = np.asarray(x)
    return x[()] if x.ndim == 0 else x


@dataclass(frozen=True)
class KernelValue:
    """A kernel evaluation, optionally with a certified modulus bound."""

    value: complex
    abs_bound: float | None = None

    def within_bound(self, tol: float = 1e-12) -> bool:
        return self.abs_bound is None or abs(self.value) <= self.abs_bound + tol


# ---------------------------------------------------------------------------
# h(s) = int_0^s t^alpha / (1 - t) dt


def _h_series(s, alpha, tol):
    out = np.zeros_like(s)
    live = s > 0.0
    if not np.any(live):
        return out
    x = s[live]
    power = x ** (alpha + 1.0)
    acc = np.zeros_like(x)
    stop = tol * (1.0 - x)
    for n in range(H_MAX_TERMS):
        term = power / (alpha + 1.0 + n)
        acc += term
        if np.all(term <= stop * acc):
            break
        power = power * x
    else:
        raise ConvergenceError("h_alpha series did not reach tolerance")
    out[live] = acc
    return out


def _h_quadrature(comp, alpha, tol):
    # h(s) = h(1/2) + log(1/2) - log(1 - s) + int_{1/2}^s (t^alpha - 1)/(1 - t) dt;
    # the last integrand is analytic on [1/2, 1].  ``comp`` is 1 - s.
    half = _h_series(np.array([0.5]), alpha, tol)[0]
    length = (0.5 - comp)[:, None]
    u = comp[:, None] + length * (1.0 - _GL_H_NODES) / 2.0
    smooth = np.expm1(alpha * np.log1p(-u)) / u
    tail = length[:, 0] / 2.0 * (smooth @ _GL_H_WEIGHTS)
    return half + np.log(0.5) - np.log(comp) + tail


def h_alpha(s, alpha: float, tol: float = 1e-15):
    """Incomplete integral ``h(s) = int_0^s t^alpha/(1-t) dt`` on ``[0, 1)``.

    Uses the power series ``sum_n s^(alpha+1+n)/(alpha+1+n)`` up to
    ``H_SERIES_SWITCH`` and Gauss-Legendre quadrature of a regularized
    integrand beyond it.  The series is truncated once the current term
    drops below ``tol * (1 - s)`` times the partial sum, which bounds the
    relative size of the geometric tail.
    """
    alpha = check_alpha(alpha)
    if tol <= 0:
        raise DomainError("tol must be positive")
    s = np.asarray(s, dtype=float)
    if np.any(~np.isfinite(s)) or np.any(s < 0.0) or np.any(s >= 1.0):
        raise DomainError("h_alpha is defined for 0 <= s < 1")
    return _unwrap(_h_dispatch(s, 1.0 - s, alpha, tol))


def _h_dispatch(s, comp, alpha, tol):
    flat = s.reshape(-1)
    cflat = np.broadcast_to(comp, s.shape).reshape(-1)
    out = np.empty_like(flat)
    low = flat <= H_SERIES_SWITCH
    if np.any(low):
        out[low] = _h_series(flat[low], alpha, tol)
    if np.any(~low):
        out[~low] = _h_quadrature(cflat[~low], alpha, tol)
    return out.reshape(s.shape)


def h_alpha_complement(u, alpha: float, tol: float = 1e-15):
    """``h(1 - u)`` for ``0 < u <= 1``, accurate when ``u`` is tiny."""
    alpha = check_alpha(alpha)
    u = np.asarray(u, dtype=float)
    if np.any(~np.isfinite(u)) or np.any(u <= 0.0) or np.any(u > 1.0):
        raise DomainError("h_alpha_complement needs 0 < u <= 1")
    return _unwrap(_h_dispatch(1.0 - u, u, alpha, tol))


def h_alpha_bound(s, alpha: float):
    """Upper bound ``s^alpha * log(1/(1-s))``, valid for ``alpha >= 0``."""
    s = np.asarray(s, dtype=float)
    return _unwrap(s**alpha * -np.log1p(-s))


# ---------------------------------------------------------------------------
# Poisson-type kernels


def phi(z, w):
    """``(1-|z|^2)(1-|w|^2)/|1 - z conj(w)|^2``, one minus the squared
    pseudo-hyperbolic distance between ``z`` and ``w``."""
    z = _in_open_disk(z, "z")
    w = _in_open_disk(w, "w")
    val = (1.0 - np.abs(z) ** 2) * (1.0 - np.abs(w) ** 2) / np.abs(1.0 - z * np.conj(w)) ** 2
    return _unwrap(np.minimum(val, 1.0))


def poisson_kernel(z):
    """Classical Poisson kernel ``(1-|z|^2)/|1-z|^2``."""
    z = _in_open_disk(z)
    return _unwrap((1.0 - np.abs(z) ** 2) / np.abs(1.0 - z) ** 2)


def poisson_kernel_alpha(z, alpha: float):
    """Weighted Poisson kernel ``(1-|z|^2)^(a+1) / ((1-z)(1-conj z)^(a+1))``."""
    alpha = check_alpha(alpha)
    z = _in_open_disk(z)
    one_minus = 1.0 - np.abs(z) ** 2
    val = one_minus ** (alpha + 1.0) / ((1.0 - z) * _cpow(1.0 - np.conj(z), alpha + 1.0))
    return _unwrap(val)


def poisson_kernel_alpha_dz(z, theta, alpha: float):
    """d/dz of ``P_alpha(z e^{-i theta})``."""
    alpha = check_alpha(alpha)
    z = _in_open_disk(z)
    rot = np.exp(-1j * np.asarray(theta, dtype=float))
    one_minus = 1.0 - np.abs(z) ** 2
    a = 1.0 - z * rot
    b = 1.0 - np.conj(z) / rot
    num = one_minus**alpha * (rot * one_minus - (alpha + 1.0) * np.conj(z) * a)
    return _unwrap(num / (a**2 * _cpow(b, alpha + 1.0)))


def poisson_kernel_alpha_dzbar(z, theta, alpha: float):
    """d/dzbar of ``P_alpha(z e^{-i theta})``."""
    alpha = check_alpha(alpha)
    z = _in_open_disk(z)
    rot = np.exp(1j * np.asarray(theta, dtype=float))
    one_minus = 1.0 - np.abs(z) ** 2
    b = 1.0 - np.conj(z) * rot
    return _unwrap((alpha + 1.0) * one_minus**alpha * rot / _cpow(b, alpha + 2.0))


# ---------------------------------------------------------------------------
# Green function


def _check_distinct(z, w):
    if np.any(z == w):
        raise CoincidenceError("Green kernel is singular at z == w")


def _h_of_phi(z, w, alpha):
    # phi for the series branch, 1 - phi = |(z-w)/(1-conj(z)w)|^2 for the
    # quadrature branch, so neither loses digits to cancellation
    s = np.asarray(phi(z, w), dtype=float)
    comp = np.abs(z - w) ** 2 / np.abs(1.0 - np.conj(z) * w) ** 2
    return _h_dispatch(np.broadcast_to(s, comp.shape), comp, alpha, 1e-15)


def green_alpha(z, w, alpha: float):
    """Green function ``-(1 - z conj w)^alpha * h(phi(z, w))``."""
    alpha = check_alpha(alpha)
    z = _in_open_disk(z, "z")
    w = _in_open_disk(w, "w")
    _check_distinct(z, w)
    return _unwrap(-_cpow(1.0 - z * np.conj(w), alpha) * _h_of_phi(z, w, alpha))


def green_alpha_bound(z, w, alpha: float):
    """Modulus bound ``2^a (1-|z|^2)^a log|(1 - conj(z) w)/(z - w)|^2`` (alpha >= 0)."""
    z = np.asarray(z, dtype=complex)
    w = np.asarray(w, dtype=complex)
    log_term = 2.0 * np.log(np.abs(1.0 - np.conj(z) * w) / np.abs(z - w))
    return _unwrap(2.0**alpha * (1.0 - np.abs(z) ** 2) ** alpha * log_term)


def green_alpha_dz(z, w, alpha: float):
    """Classical d/dz of ``G_alpha(z, w)`` for ``z != w``.

    ``alpha conj(w) (1-z conj w)^(a-1) h(phi)
      + (1-|z|^2)^a (1-|w|^2)^(a+1) / ((1-conj(z) w)^a (1-z conj w)(z-w))``
    """
    alpha = check_alpha(alpha)
    z = _in_open_disk(z, "z")
    w = _in_open_disk(w, "w")
    _check_distinct(z, w)
    zw = 1.0 - z * np.conj(w)
    log_part = alpha * np.conj(w) * _cpow(zw, alpha - 1.0) * _h_of_phi(z, w, alpha)
    pole = (
        (1.0 - np.abs(z) ** 2) ** alpha
        * (1.0 - np.abs(w) ** 2) ** (alpha + 1.0)
        / (_cpow(np.conj(zw), alpha) * zw * (z - w))
    )
    return _unwrap(log_part + pole)


def green_alpha_dzbar(z, w, alpha: float):
    """Classical d/dzbar of ``G_alpha(z, w)`` for ``z != w``."""
    alpha = check_alpha(alpha)
    z = _in_open_disk(z, "z")
    w = _in_open_disk(w, "w")
    _check_distinct(z, w)
    zbw = 1.0 - np.conj(z) * w
    val = (
        (1.0 - np.abs(z) ** 2) ** alpha
        * (1.0 - np.abs(w) ** 2) ** (alpha + 1.0)
        / (_cpow(zbw, alpha + 1.0) * np.conj(z - w))
    )
    return _unwrap(val)

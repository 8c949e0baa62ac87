"""Homogeneous expansions of alpha-harmonic functions.

Every alpha-harmonic function on the disk has the form

    f(z) = sum_{k>=0} c_k z^k + sum_{k>=1} c_{-k} P_{alpha,k}(|z|^2) conj(z)^k,

with ``P_{alpha,k}(x) = int_0^1 t^(k-1) (1 - t x)^alpha dt``.  This module
evaluates such series (finitely supported), their Wirtinger derivatives,
compositions with polynomial maps, and the punctured-disk function of the
``psi(z) = z^2`` counterexample.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from .errors import ConvergenceError, DomainError, RangeError
from .kernels import _unwrap, check_alpha

P_SERIES_SWITCH = 0.9
_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(64)
_MAX_TERMS = 200_000


def _gl_unit():
    return (_GL_NODES + 1.0) / 2.0, _GL_WEIGHTS / 2.0


def _check_k(k):
    if int(k) != k or k < 1:
        raise DomainError(f"k must be a positive integer, got {k!r}")
    return int(k)


def _binomial_sums(x, k, alpha):
    """``P`` and ``P'`` from the binomial expansion of ``(1 - t x)^alpha``."""
    p = np.zeros_like(x)
    dp = np.zeros_like(x)
    coef = 1.0  # binom(alpha, j) * (-1)^j
    xpow = np.ones_like(x)  # x^j
    for j in range(_MAX_TERMS):
        term = coef * xpow / (k + j)
        p += term
        if j > 0:
            dp += j * coef * xpow_prev / (k + j)
        xpow_prev = xpow
        xpow = xpow * x
        coef *= (j - alpha) / (j + 1)
        if coef == 0.0:
            break
        if j > 2 and np.all(np.abs(coef) * np.abs(xpow_prev) * (j + 1) < 1e-18 * (k + j)):
            break
    else:
        raise ConvergenceError("binomial series for P_alpha,k did not converge")
    return p, dp


def _negative_branch(x, k, alpha):
    t, w = _gl_unit()
    base = 1.0 - np.outer(x, t)
    p = (base**alpha * t ** (k - 1)) @ w
    dp = -alpha * ((base ** (alpha - 1.0) * t**k) @ w)
    return p, dp


def _positive_branch(x, k, alpha):
    # s = t x, then 1 - s = e^{-v}: int_0^x s^(k-1) (1-s)^alpha ds becomes a
    # smooth integral over v in [0, -log(1-x)].
    u, w = _gl_unit()
    length = -np.log1p(-x)
    v = length[:, None] * u[None, :]
    s = -np.expm1(-v)
    wl = length[:, None] * w[None, :]
    p = np.sum(wl * s ** (k - 1) * np.exp(-(alpha + 1.0) * v), axis=1) / x**k
    dp = -alpha * np.sum(wl * s**k * np.exp(-alpha * v), axis=1) / x ** (k + 1)
    return p, dp


def _p_and_derivative(x, k, alpha):
    alpha = check_alpha(alpha)
    k = _check_k(k)
    x = np.asarray(x, dtype=float)
    if np.any(~np.isfinite(x)) or np.any(np.abs(x) >= 1.0):
        raise DomainError("P_alpha,k is evaluated on -1 < x < 1")
    flat = x.reshape(-1)
    p = np.empty_like(flat)
    dp = np.empty_like(flat)
    if alpha == 0.0:
        p[:] = 1.0 / k
        dp[:] = 0.0
        return p.reshape(x.shape), dp.reshape(x.shape)
    mid = np.abs(flat) <= P_SERIES_SWITCH
    neg = flat < -P_SERIES_SWITCH
    pos = flat > P_SERIES_SWITCH
    for mask, branch in ((mid, _binomial_sums), (neg, _negative_branch), (pos, _positive_branch)):
        if np.any(mask):
            p[mask], dp[mask] = branch(flat[mask], k, alpha)
    return p.reshape(x.shape), dp.reshape(x.shape)


def p_alpha_k(x, k: int, alpha: float):
    """Radial profile ``P_{alpha,k}(x) = int_0^1 t^(k-1) (1 - t x)^alpha dt``."""
    return _unwrap(_p_and_derivative(x, k, alpha)[0])


def p_alpha_k_derivative(x, k: int, alpha: float):
    """``P'_{alpha,k}(x) = -alpha int_0^1 t^k (1 - t x)^(alpha-1) dt``.

    Computed from the differentiated expansion, never by finite differences.
    """
    return _unwrap(_p_and_derivative(x, k, alpha)[1])


def p_alpha_k_recurrence_residual(x, k: int, alpha: float):
    """``|x P'(x) + k P(x) - (1-x)^alpha|``; zero up to rounding."""
    p, dp = _p_and_derivative(x, k, alpha)
    x = np.asarray(x, dtype=float)
    return _unwrap(np.abs(x * dp + k * p - (1.0 - x) ** alpha))


# ---------------------------------------------------------------------------
# series


@dataclass(frozen=True)
class CoefficientSequence:
    """Finitely supported two-sided sequence ``{c_k}``."""

    coeffs: Mapping[int, complex]

    def __post_init__(self):
        clean = {int(k): complex(v) for k, v in dict(self.coeffs).items() if complex(v) != 0}
        object.__setattr__(self, "coeffs", clean)

    @property
    def max_index(self) -> int:
        return max(self.coeffs, default=0)

    @property
    def min_index(self) -> int:
        return min(self.coeffs, default=0)

    def analytic(self) -> dict[int, complex]:
        return {k: c for k, c in self.coeffs.items() if k >= 0}

    def antianalytic(self) -> dict[int, complex]:
        """``{k: c_{-k}}`` for ``k >= 1``."""
        return {-k: c for k, c in self.coeffs.items() if k < 0}


def _disk_points(z, what="z"):
    z = np.asarray(z, dtype=complex)
    if np.any(~np.isfinite(z)) or np.any(np.abs(z) >= 1.0):
        raise DomainError(f"{what} must lie in the open unit disk")
    return z


@dataclass(frozen=True)
class AlphaHarmonicSeries:
    """``sum c_k z^k + sum c_{-k} P_{alpha,k}(|z|^2) conj(z)^k``.

    Evaluation, both Wirtinger derivatives and the Euclidean Laplacian are
    exact up to the accuracy of ``P_{alpha,k}``.
    """

    coeffs: CoefficientSequence
    alpha: float

    def __post_init__(self):
        if not isinstance(self.coeffs, CoefficientSequence):
            object.__setattr__(self, "coeffs", CoefficientSequence(self.coeffs))
        object.__setattr__(self, "alpha", check_alpha(self.alpha))

    @property
    def has_antianalytic_part(self) -> bool:
        return bool(self.coeffs.antianalytic())

    def __call__(self, z):
        return series_eval(self, z)

    evaluate = __call__

    def dz(self, z):
        z = _disk_points(z)
        x = np.abs(z) ** 2
        out = np.zeros(z.shape, dtype=complex)
        for k, c in self.coeffs.analytic().items():
            if k >= 1:
                out += k * c * z ** (k - 1)
        for k, c in self.coeffs.antianalytic().items():
            out += c * p_alpha_k_derivative(x, k, self.alpha) * np.conj(z) ** (k + 1)
        return _unwrap(out)

    def dzbar(self, z):
        return series_dzbar(self, z)

    def laplacian(self, z):
        """Euclidean ``4 f_{z zbar} = -4 alpha conj(z) f_zbar / (1-|z|^2)``."""
        z = _disk_points(z)
        fzb = np.asarray(self.dzbar(z))
        return _unwrap(-4.0 * self.alpha * np.conj(z) * fzb / (1.0 - np.abs(z) ** 2))


def series_eval(s: AlphaHarmonicSeries, z):
    z = _disk_points(z)
    x = np.abs(z) ** 2
    out = np.zeros(z.shape, dtype=complex)
    for k, c in sorted(s.coeffs.analytic().items()):
        out += c * z**k
    for k, c in sorted(s.coeffs.antianalytic().items()):
        out += c * p_alpha_k(x, k, s.alpha) * np.conj(z) ** k
    return _unwrap(out)


def series_dzbar(s: AlphaHarmonicSeries, z):
    """``sum_{k>=1} c_{-k} conj(z)^(k-1) (1-|z|^2)^alpha``."""
    z = _disk_points(z)
    out = np.zeros(z.shape, dtype=complex)
    for k, c in sorted(s.coeffs.antianalytic().items()):
        out += c * np.conj(z) ** (k - 1)
    return _unwrap(out * (1.0 - np.abs(z) ** 2) ** s.alpha)


# ---------------------------------------------------------------------------
# polynomial maps and composition


@dataclass(frozen=True)
class PolyMap:
    """Analytic polynomial ``psi(z) = sum_j a_j z^j``; ``coeffs[j] = a_j``."""

    coeffs: tuple

    def __post_init__(self):
        c = tuple(complex(a) for a in self.coeffs)
        while len(c) > 1 and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c or (0j,))

    @classmethod
    def rotation(cls, t: float) -> "PolyMap":
        return cls((0.0, np.exp(1j * t)))

    @classmethod
    def dilation(cls, a: complex) -> "PolyMap":
        return cls((0.0, a))

    @classmethod
    def power(cls, n: int, a: complex = 1.0) -> "PolyMap":
        return cls((0.0,) * n + (a,))

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        out = np.zeros(z.shape, dtype=complex)
        for a in reversed(self.coeffs):
            out = out * z + a
        return out

    def derivative(self, z):
        z = np.asarray(z, dtype=complex)
        out = np.zeros(z.shape, dtype=complex)
        for j in range(len(self.coeffs) - 1, 0, -1):
            out = out * z + j * self.coeffs[j]
        return out

    def is_rotation(self, tol: float = 1e-14) -> bool:
        c = self.coeffs
        return len(c) == 2 and abs(c[0]) <= tol and abs(abs(c[1]) - 1.0) <= tol

    def zeros(self) -> np.ndarray:
        if len(self.coeffs) == 1:
            return np.array([], dtype=complex)
        return np.roots(self.coeffs[::-1])


@dataclass(frozen=True)
class ComposedField:
    """``z -> f(psi(z))`` for a field ``f`` and a polynomial self-map ``psi``.

    Makes no claim of alpha-harmonicity; certify it with the residual
    operator in :mod:`alphakit.analysis`.
    """

    f: object
    psi: PolyMap

    def _inner(self, z):
        w = self.psi(z)
        if np.any(np.abs(w) >= 1.0):
            raise RangeError("psi maps a requested point outside the unit disk")
        return w

    def __call__(self, z):
        return _unwrap(self.f(self._inner(z)))

    def dz(self, z):
        z = np.asarray(z, dtype=complex)
        return _unwrap(np.asarray(self.f.dz(self._inner(z))) * self.psi.derivative(z))

    def dzbar(self, z):
        z = np.asarray(z, dtype=complex)
        return _unwrap(np.asarray(self.f.dzbar(self._inner(z))) * np.conj(self.psi.derivative(z)))

    @property
    def punctures(self) -> np.ndarray:
        inner = getattr(self.f, "punctures", np.array([], dtype=complex))
        if len(inner) == 0:
            return np.array([], dtype=complex)
        # preimages of the inner punctures under psi
        pts = []
        for p in inner:
            shifted = list(self.psi.coeffs)
            shifted[0] -= p
            pts.extend(np.roots(shifted[::-1]) if len(shifted) > 1 else [])
        return np.asarray(pts, dtype=complex)


def compose(f, psi: PolyMap) -> ComposedField:
    if not isinstance(psi, PolyMap):
        psi = PolyMap(tuple(psi))
    return ComposedField(f, psi)


# ---------------------------------------------------------------------------
# the z^2 counterexample


@dataclass(frozen=True)
class Example1Function:
    """Punctured-disk alpha-harmonic function whose composition with ``z^2``
    is not alpha-harmonic.

        f(z) = ( sum_n a_n x^n - x^(alpha+1) sum_n b_n x^n ) conj(z)^k,   x = 1 - |z|^2,

    with ``a_n = Gamma(n+k)/(Gamma(n+1)Gamma(k))`` and
    ``b_n = Gamma(n+alpha+k+1)/(Gamma(n+alpha+2)Gamma(k))``, both generated by
    their ratio recurrences.
    """

    k: int
    alpha: float
    tol: float = 1e-16
    punctures: np.ndarray = field(default_factory=lambda: np.array([0j]), compare=False)

    def __post_init__(self):
        _check_k(self.k)
        alpha = check_alpha(self.alpha)
        if alpha == 0.0:
            raise DomainError("the counterexample needs alpha != 0")
        object.__setattr__(self, "alpha", alpha)

    @property
    def b0(self) -> float:
        # Gamma(alpha+k+1) / (Gamma(alpha+2) Gamma(k)) as a finite product
        val = 1.0
        for j in range(2, self.k + 1):
            val *= (self.alpha + j) / (j - 1)
        return val

    @property
    def leading_constant(self) -> float:
        """``Gamma(alpha+k+1) / (Gamma(alpha+1) (k-1)!)``."""
        return (self.alpha + 1.0) * self.b0

    def _sums(self, x):
        """``S1, S1', S2, S2'`` as power series in ``x``."""
        k, a = self.k, self.alpha
        s1 = np.zeros_like(x)
        d1 = np.zeros_like(x)
        s2 = np.zeros_like(x)
        d2 = np.zeros_like(x)
        an, bn = 1.0, self.b0
        xn = np.ones_like(x)
        xprev = np.zeros_like(x)  # x^(n-1)
        for n in range(_MAX_TERMS):
            s1 += an * xn
            s2 += bn * xn
            if n > 0:
                d1 += n * an * xprev
                d2 += n * bn * xprev
            size = (an + bn) * xn * (n + 1)
            if n > 2 and np.all(size < self.tol * (1.0 - x) * np.maximum(1.0, np.abs(s1) + np.abs(d1))):
                break
            xprev = xn
            xn = xn * x
            an *= (n + k) / (n + 1)
            bn *= (n + a + k + 1) / (n + a + 2)
        else:
            raise ConvergenceError("counterexample series did not converge")
        return s1, d1, s2, d2

    def _check(self, z):
        z = _disk_points(z)
        if np.any(z == 0):
            raise DomainError("the counterexample is defined on the punctured disk")
        return z

    def __call__(self, z):
        z = self._check(z)
        x = 1.0 - np.abs(z) ** 2
        s1, _, s2, _ = self._sums(x)
        return _unwrap((s1 - x ** (self.alpha + 1.0) * s2) * np.conj(z) ** self.k)

    def _profile(self, x):
        """``R(x)`` with ``f = R(x) conj(z)^k``, and ``R'(x)``."""
        a = self.alpha
        s1, d1, s2, d2 = self._sums(x)
        r = s1 - x ** (a + 1.0) * s2
        dr = d1 - (a + 1.0) * x**a * s2 - x ** (a + 1.0) * d2
        return r, dr

    def dzbar(self, z):
        # d/dzbar [R(x) zbar^k] = zbar^(k-1) (k R - (1-x) R'),  since dx/dzbar = -z
        z = self._check(z)
        x = 1.0 - np.abs(z) ** 2
        r, dr = self._profile(x)
        return _unwrap(np.conj(z) ** (self.k - 1) * (self.k * r - (1.0 - x) * dr))

    def dz(self, z):
        z = self._check(z)
        x = 1.0 - np.abs(z) ** 2
        _, dr = self._profile(x)
        return _unwrap(-(np.conj(z) ** (self.k + 1)) * dr)


def example1_build(k: int, alpha: float) -> Example1Function:
    return Example1Function(k, alpha)


def example1_composed_dzbar_closed_form(z, k: int, alpha: float):
    """Displayed closed form of ``d/dzbar f(z^2)``:
    ``2 C (1-|z|^2)^a (1+|z|^2)^a conj(z)^(2k-1)`` with
    ``C = Gamma(a+k+1)/(Gamma(a+1)(k-1)!)``."""
    z = np.asarray(z, dtype=complex)
    c = Example1Function(k, alpha).leading_constant
    r2 = np.abs(z) ** 2
    return _unwrap(2.0 * c * (1.0 - r2) ** alpha * (1.0 + r2) ** alpha * np.conj(z) ** (2 * k - 1))


def example1_composed_residual_exact(z, k: int, alpha: float):
    """``Delta_alpha f(z^2) = 2 C alpha (1+|z|^2)^(a-1) conj(z)^(2k)`` (closed form)."""
    z = np.asarray(z, dtype=complex)
    c = Example1Function(k, alpha).leading_constant
    return _unwrap(2.0 * c * alpha * (1.0 + np.abs(z) ** 2) ** (alpha - 1.0) * np.conj(z) ** (2 * k))

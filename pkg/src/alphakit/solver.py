"""Dirichlet problem for the weighted Laplacian on the unit disk.

The solution of ``Delta_alpha f = g`` in the disk with ``f = f*`` on the
circle is the sum of a Poisson-type integral of the boundary data and the
Green potential of the source:

    f(z) = (1/2pi) int P_alpha(z e^{-i t}) f*(e^{it}) dt + int G_alpha(z, w) g(w) dA(w).

Boundary data are continuous functions given either by finitely many
Fourier coefficients or by equispaced samples.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Callable, Mapping

import numpy as np

from . import kernels
from ._parallel import pmap
from .errors import DomainError
from .quadrature import CircleRule, DiskRule, integrate_disk_mobius

SUP_GRID_POINTS = 4096
SOURCE_GRID = (64, 256)
SOURCE_SUP_INFLATION = 1.05
# points x nodes above which the Poisson sum is chunked
_CHUNK = 1 << 22


def _as_points(z):
    z = np.asarray(z, dtype=complex)
    if np.any(~np.isfinite(z)) or np.any(np.abs(z) >= 1.0):
        raise DomainError("evaluation points must lie in the open unit disk")
    return z


# ---------------------------------------------------------------------------
# boundary data


@dataclass(frozen=True)
class BoundaryData:
    """A continuous function on the unit circle.

    Build with :meth:`from_fourier` or :meth:`from_samples`.  For sampled
    data ``interp_order`` selects the interpolant: 0 trigonometric (FFT),
    1 periodic piecewise linear, 3 periodic cubic spline.
    """

    fourier: Mapping[int, complex] | None = None
    samples: np.ndarray | None = None
    interp_order: int = 0
    declared_sup: float | None = None

    def __post_init__(self):
        if (self.fourier is None) == (self.samples is None):
            raise DomainError("give exactly one of fourier coefficients or samples")
        if self.fourier is not None:
            coeffs = {int(k): complex(v) for k, v in self.fourier.items() if complex(v) != 0}
            object.__setattr__(self, "fourier", coeffs)
        else:
            arr = np.asarray(self.samples, dtype=complex).ravel()
            if arr.size < 2:
                raise DomainError("need at least two boundary samples")
            if self.interp_order not in (0, 1, 3):
                raise DomainError("interp_order must be 0, 1 or 3")
            object.__setattr__(self, "samples", arr)

    @classmethod
    def from_fourier(cls, coeffs: Mapping[int, complex], sup_norm: float | None = None) -> "BoundaryData":
        return cls(fourier=dict(coeffs), declared_sup=sup_norm)

    @classmethod
    def from_samples(cls, samples, interp_order: int = 0, sup_norm: float | None = None) -> "BoundaryData":
        return cls(samples=samples, interp_order=interp_order, declared_sup=sup_norm)

    @classmethod
    def zero(cls) -> "BoundaryData":
        return cls(fourier={})

    @classmethod
    def constant(cls, c: complex) -> "BoundaryData":
        return cls(fourier={0: c})

    @property
    def is_zero(self) -> bool:
        if self.fourier is not None:
            return not self.fourier
        return not np.any(self.samples)

    @cached_property
    def _spline(self):
        from scipy.interpolate import CubicSpline

        n = self.samples.size
        t = 2.0 * np.pi * np.arange(n + 1) / n
        y = np.append(self.samples, self.samples[0])
        return CubicSpline(t, y, bc_type="periodic")

    @cached_property
    def _trig(self) -> dict[int, complex]:
        n = self.samples.size
        c = np.fft.fft(self.samples) / n
        out = {}
        for j in range(n):
            k = j if j <= n // 2 else j - n
            if n % 2 == 0 and j == n // 2:
                # split the Nyquist mode symmetrically so the interpolant is real for real data
                out[k] = out.get(k, 0) + c[j] / 2
                out[-k] = out.get(-k, 0) + c[j] / 2
            else:
                out[k] = c[j]
        return out

    def coefficients(self) -> dict[int, complex]:
        """Fourier coefficients when the data are a trigonometric polynomial."""
        if self.fourier is not None:
            return dict(self.fourier)
        if self.interp_order == 0:
            return dict(self._trig)
        raise DomainError("spline-interpolated samples have no finite Fourier expansion")

    def evaluate(self, theta):
        theta = np.asarray(theta, dtype=float)
        if self.fourier is not None or self.interp_order == 0:
            out = np.zeros(theta.shape, dtype=complex)
            for k, c in sorted(self.coefficients().items()):
                out += c * np.exp(1j * k * theta)
            return out
        t = np.mod(theta, 2.0 * np.pi)
        if self.interp_order == 1:
            n = self.samples.size
            grid = 2.0 * np.pi * np.arange(n + 1) / n
            y = np.append(self.samples, self.samples[0])
            return np.interp(t, grid, y.real) + 1j * np.interp(t, grid, y.imag)
        return self._spline(t)

    __call__ = evaluate

    @cached_property
    def sup_estimate(self) -> float:
        """``max |f*|`` over the sup grid, refined around the best node.

        Used for preconditions such as ``||f*|| <= 1``; bounds use
        :attr:`sup_norm`, which is never smaller.
        """
        if self.declared_sup is not None:
            return float(self.declared_sup)
        from scipy.optimize import minimize_scalar

        theta = 2.0 * np.pi * np.arange(SUP_GRID_POINTS) / SUP_GRID_POINTS
        vals = np.abs(self.evaluate(theta))
        i = int(np.argmax(vals))
        h = 2.0 * np.pi / SUP_GRID_POINTS
        res = minimize_scalar(
            lambda t: -abs(complex(self.evaluate(t))), bounds=(theta[i] - h, theta[i] + h), method="bounded",
            options={"xatol": 1e-12},
        )
        return max(float(vals[i]), -float(res.fun))

    @cached_property
    def sup_norm(self) -> float:
        """Upper bound for ``max |f*|`` on the circle (declared or computed)."""
        if self.declared_sup is not None:
            return float(self.declared_sup)
        theta = 2.0 * np.pi * np.arange(SUP_GRID_POINTS) / SUP_GRID_POINTS
        grid_max = float(np.max(np.abs(self.evaluate(theta)), initial=0.0))
        if self.fourier is not None or self.interp_order == 0:
            # Bernstein: |f'| <= sum |k c_k|, so the off-grid excess is at most h/2 * that
            slope = sum(abs(k) * abs(c) for k, c in self.coefficients().items())
            return grid_max + math.pi / SUP_GRID_POINTS * slope
        if self.interp_order == 1:
            return float(np.max(np.abs(self.samples)))
        return grid_max

    def mean(self) -> complex:
        """Zeroth Fourier coefficient, i.e. the value of every Poisson-type
        extension at the origin."""
        if self.fourier is not None or self.interp_order == 0:
            return complex(self.coefficients().get(0, 0.0))
        theta = 2.0 * np.pi * np.arange(SUP_GRID_POINTS) / SUP_GRID_POINTS
        return complex(np.mean(self.evaluate(theta)))

    def centered(self) -> "BoundaryData":
        """The same data minus its mean."""
        c0 = self.mean()
        if self.fourier is not None:
            coeffs = dict(self.fourier)
            coeffs.pop(0, None)
            return BoundaryData.from_fourier(coeffs)
        return BoundaryData.from_samples(self.samples - c0, self.interp_order)


# ---------------------------------------------------------------------------
# sources


@dataclass(frozen=True)
class SourceField:
    """Right-hand side ``g`` of the equation, continuous on the closed disk."""

    evaluator: Callable
    declared_sup: float | None = None
    singular_at: complex | None = None
    name: str = "custom"
    is_zero: bool = False

    @classmethod
    def zero(cls) -> "SourceField":
        return cls(lambda w: np.zeros(np.shape(w), dtype=complex), 0.0, name="zero", is_zero=True)

    @classmethod
    def constant(cls, c: complex) -> "SourceField":
        c = complex(c)
        if c == 0:
            return cls.zero()
        return cls(lambda w: np.full(np.shape(w), c, dtype=complex), abs(c), name=f"const:{c}")

    @classmethod
    def monomial(cls, a: int, b: int, coef: complex = 1.0) -> "SourceField":
        """``coef * z^a * conj(z)^b``; its sup over the closed disk is ``|coef|``."""
        coef = complex(coef)
        if a < 0 or b < 0:
            raise DomainError("monomial exponents must be nonnegative")
        return cls(
            lambda w: coef * np.asarray(w, dtype=complex) ** a * np.conj(np.asarray(w, dtype=complex)) ** b,
            abs(coef),
            name=f"monomial:{a},{b},{coef}",
        )

    @classmethod
    def from_callable(cls, f: Callable, sup_norm: float | None = None, name: str = "custom") -> "SourceField":
        return cls(f, sup_norm, name=name)

    def __call__(self, w):
        return np.asarray(self.evaluator(np.asarray(w, dtype=complex)), dtype=complex)

    @cached_property
    def sup_norm(self) -> float:
        if self.declared_sup is not None:
            return float(self.declared_sup)
        n_r, n_t = SOURCE_GRID
        r = np.linspace(0.0, 1.0, n_r)
        t = 2.0 * np.pi * np.arange(n_t) / n_t
        pts = (r[:, None] * np.exp(1j * t)[None, :]).ravel()
        return SOURCE_SUP_INFLATION * float(np.max(np.abs(self(pts))))


# ---------------------------------------------------------------------------
# integral operators


def _auto_circle_rule(z: np.ndarray, boundary: BoundaryData, base: CircleRule | None) -> CircleRule:
    if base is not None:
        return base
    rmax = float(np.max(np.abs(z), initial=0.0))
    n = CircleRule().n
    if rmax > 0.0:
        # trapezoid error decays like |z|^n for kernels analytic in an annulus
        need = math.ceil(-38.0 / math.log(rmax))
        if boundary.fourier is not None or boundary.interp_order == 0:
            coeffs = boundary.coefficients()
            need += 2 * max((abs(k) for k in coeffs), default=0)
        n = max(n, need)
    n = 1 << math.ceil(math.log2(n))
    return CircleRule(min(n, 1 << 20))


def _circle_mean(kernel, z, fstar: BoundaryData, rule: CircleRule):
    theta = rule.nodes
    fvals = fstar.evaluate(theta)
    flat = z.reshape(-1)
    out = np.empty(flat.shape, dtype=complex)
    step = max(1, _CHUNK // theta.size)
    for i in range(0, flat.size, step):
        zz = flat[i : i + step, None]
        out[i : i + step] = np.sum(rule.weights * kernel(zz, theta[None, :]) * fvals, axis=1)
    return out.reshape(z.shape)


def poisson_integral(fstar: BoundaryData, z, alpha: float, rule: CircleRule | None = None):
    """Weighted Poisson integral ``(1/2pi) int P_alpha(z e^{-it}) f*(e^{it}) dt``.

    Without an explicit ``rule`` the node count grows with ``|z|`` so the
    trapezoid sum stays accurate near the circle.
    """
    alpha = kernels.check_alpha(alpha)
    z = _as_points(z)
    if fstar.is_zero:
        return kernels._unwrap(np.zeros(z.shape, dtype=complex))
    rule = _auto_circle_rule(z, fstar, rule)
    val = _circle_mean(lambda zz, t: kernels.poisson_kernel_alpha(zz * np.exp(-1j * t), alpha), z, fstar, rule)
    return kernels._unwrap(val)


def classical_poisson_integral(fstar: BoundaryData, z, rule: CircleRule | None = None):
    """Harmonic extension ``(1/2pi) int P(z e^{-it}) f*(e^{it}) dt``."""
    z = _as_points(z)
    rule = _auto_circle_rule(z, fstar, rule)
    val = _circle_mean(lambda zz, t: kernels.poisson_kernel(zz * np.exp(-1j * t)), z, fstar, rule)
    return kernels._unwrap(val)


def poisson_integral_derivatives(fstar: BoundaryData, z, alpha: float, rule: CircleRule | None = None):
    """``(d/dz, d/dzbar)`` of the weighted Poisson integral, differentiated
    under the integral sign."""
    alpha = kernels.check_alpha(alpha)
    z = _as_points(z)
    if fstar.is_zero:
        zero = kernels._unwrap(np.zeros(z.shape, dtype=complex))
        return zero, zero
    rule = _auto_circle_rule(z, fstar, rule)
    dz = _circle_mean(lambda zz, t: kernels.poisson_kernel_alpha_dz(zz, t, alpha), z, fstar, rule)
    dzb = _circle_mean(lambda zz, t: kernels.poisson_kernel_alpha_dzbar(zz, t, alpha), z, fstar, rule)
    return kernels._unwrap(dz), kernels._unwrap(dzb)


# Green kernels pulled back by w = (z - zeta)/(1 - conj(z) zeta).  With
# A = 1 - |z|^2 and q = 1 - zeta conj(z):
#   1 - conj(z) w = A/q,  z - w = zeta A/q,  phi(z, w) = 1 - |zeta|^2.


@lru_cache(maxsize=64)
def _h_on_radii(radii: tuple, alpha: float) -> np.ndarray:
    return kernels.h_alpha_complement(np.asarray(radii) ** 2, alpha)


def _h_zeta(rule: DiskRule, alpha: float) -> np.ndarray:
    # h(phi) = h(1 - |zeta|^2) depends on the radius only
    return np.repeat(_h_on_radii(tuple(rule.radii), alpha), rule.angular_order)


def _pulled_green(z, w, zeta, rule, alpha):
    a = 1.0 - abs(z) ** 2
    qbar = np.conj(1.0 - zeta * np.conj(z))
    return -kernels._cpow(a / qbar, alpha) * _h_zeta(rule, alpha)


def _pulled_green_dz(z, w, zeta, rule, alpha):
    a = 1.0 - abs(z) ** 2
    qbar = np.conj(1.0 - zeta * np.conj(z))
    u = np.abs(zeta) ** 2
    log_part = alpha * np.conj(w) * kernels._cpow(a / qbar, alpha - 1.0) * _h_zeta(rule, alpha)
    pole = a ** (alpha - 1.0) * (1.0 - u) ** (alpha + 1.0) * kernels._cpow(qbar, -alpha) / zeta
    return log_part + pole


def _pulled_green_dzbar(z, w, zeta, rule, alpha):
    a = 1.0 - abs(z) ** 2
    qbar = np.conj(1.0 - zeta * np.conj(z))
    u = np.abs(zeta) ** 2
    return a ** (alpha - 1.0) * (1.0 - u) ** (alpha + 1.0) * kernels._cpow(qbar, -alpha) / np.conj(zeta)


def _green_at(kernel, g: SourceField, alpha: float, rule: DiskRule | None):
    def one(z):
        return integrate_disk_mobius(
            lambda w, zeta, r: kernel(z, w, zeta, r, alpha) * g(w), z, rule, pass_zeta=True
        )

    return one


def _map_points(func, z):
    flat = z.reshape(-1)
    vals = pmap(func, [complex(p) for p in flat])
    return np.asarray(vals, dtype=complex).reshape(z.shape)


def green_potential(g: SourceField, z, alpha: float, rule: DiskRule | None = None):
    """``int_D G_alpha(z, w) g(w) dA(w)`` by quadrature centered at ``z``."""
    alpha = kernels.check_alpha(alpha)
    z = _as_points(z)
    if g.is_zero:
        return kernels._unwrap(np.zeros(z.shape, dtype=complex))
    return kernels._unwrap(_map_points(_green_at(_pulled_green, g, alpha, rule), z))


def green_potential_derivatives(g: SourceField, z, alpha: float, rule: DiskRule | None = None):
    """``(d/dz, d/dzbar)`` of the Green potential via the kernel derivatives."""
    alpha = kernels.check_alpha(alpha)
    z = _as_points(z)
    if g.is_zero:
        zero = kernels._unwrap(np.zeros(z.shape, dtype=complex))
        return zero, zero
    dz = _map_points(_green_at(_pulled_green_dz, g, alpha, rule), z)
    dzb = _map_points(_green_at(_pulled_green_dzbar, g, alpha, rule), z)
    return kernels._unwrap(dz), kernels._unwrap(dzb)


def green_potential_bound(g: SourceField, z, alpha: float):
    """``2^alpha ||g|| (1-|z|^2)^(alpha+1)``, valid for ``alpha >= 0``."""
    z = np.asarray(z, dtype=complex)
    return kernels._unwrap(2.0**alpha * g.sup_norm * (1.0 - np.abs(z) ** 2) ** (alpha + 1.0))


def green_derivative_abs_integrals(g: SourceField, z, alpha: float, rule: DiskRule | None = None):
    """``(int |d/dz G(z, w) g(w)| dA(w), int |d/dzbar G(z, w) g(w)| dA(w))``."""
    alpha = kernels.check_alpha(alpha)
    z = _as_points(z)

    def absolute(kernel):
        def one(p):
            return integrate_disk_mobius(
                lambda w, zeta, r: np.abs(kernel(p, w, zeta, r, alpha) * g(w)), p, rule, pass_zeta=True
            ).real

        return one

    dz = _map_points(absolute(_pulled_green_dz), z).real
    dzb = _map_points(absolute(_pulled_green_dzbar), z).real
    return kernels._unwrap(dz), kernels._unwrap(dzb)


def green_derivative_abs_bounds(g: SourceField, alpha: float) -> tuple[float, float]:
    """Bounds ``(a + 2/3) 2^(a+1) ||g||`` and ``2^(a+2)/3 ||g||`` on the
    integrals of :func:`green_derivative_abs_integrals` (``alpha >= 0``)."""
    alpha = kernels.check_alpha(alpha, nonnegative=True)
    return (alpha + 2.0 / 3.0) * 2.0 ** (alpha + 1.0) * g.sup_norm, 2.0 ** (alpha + 2.0) / 3.0 * g.sup_norm


# ---------------------------------------------------------------------------
# solution


@dataclass(frozen=True)
class JacobianData:
    fz: complex
    fzbar: complex

    @property
    def op_norm(self) -> float:
        """Largest stretch ``|f_z| + |f_zbar|``."""
        return abs(self.fz) + abs(self.fzbar)

    @property
    def min_stretch(self) -> float:
        return abs(abs(self.fz) - abs(self.fzbar))


@dataclass(frozen=True)
class SolutionField:
    """``z -> P_alpha[f*](z) + G[g](z)``; immutable, evaluation is pure."""

    alpha: float
    boundary: BoundaryData
    source: SourceField
    circle_rule: CircleRule | None = None
    disk_rule: DiskRule | None = field(default=None)

    def poisson_part(self, z):
        return poisson_integral(self.boundary, z, self.alpha, self.circle_rule)

    def green_part(self, z):
        return green_potential(self.source, z, self.alpha, self.disk_rule)

    def __call__(self, z):
        return self.poisson_part(z) + self.green_part(z)

    value = __call__

    def derivatives(self, z):
        """``(f_z, f_zbar)`` at ``z`` (arrays broadcast)."""
        pz, pzb = poisson_integral_derivatives(self.boundary, z, self.alpha, self.circle_rule)
        gz, gzb = green_potential_derivatives(self.source, z, self.alpha, self.disk_rule)
        return pz + gz, pzb + gzb

    def dz(self, z):
        return self.derivatives(z)[0]

    def dzbar(self, z):
        return self.derivatives(z)[1]


def solve(
    fstar: BoundaryData | None,
    g: SourceField | None,
    alpha: float,
    *,
    circle_rule: CircleRule | None = None,
    disk_rule: DiskRule | None = None,
) -> SolutionField:
    """Solution field of ``Delta_alpha f = g``, ``f = f*`` on the circle."""
    alpha = kernels.check_alpha(alpha)
    return SolutionField(
        alpha,
        fstar if fstar is not None else BoundaryData.zero(),
        g if g is not None else SourceField.zero(),
        circle_rule,
        disk_rule,
    )


def solution_jacobian(field: SolutionField, z: complex) -> JacobianData:
    z = complex(_as_points(z))
    fz, fzb = field.derivatives(z)
    return JacobianData(complex(fz), complex(fzb))


def boundary_limit(field, theta, radii=(0.9, 0.99, 0.999)):
    """Radial limit of ``field`` at angles ``theta``.

    Values on the rays are interpolated by a polynomial in ``1 - r`` of
    degree ``len(radii) - 1`` and evaluated at ``r = 1``.
    """
    theta = np.atleast_1d(np.asarray(theta, dtype=float))
    radii = np.asarray(radii, dtype=float)
    if radii.size < 2 or np.any(radii <= 0) or np.any(radii >= 1):
        raise DomainError("need at least two radii in (0, 1)")
    vals = np.array([field(r * np.exp(1j * theta)) for r in radii])
    design = np.vander(1.0 - radii, increasing=True)
    coef = np.linalg.solve(design, vals)
    return coef[0]

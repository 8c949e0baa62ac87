"""Residuals, inequality checks and Bergman-type energies.

Every ``verify_*`` function evaluates a bound on a grid of points and
returns a :class:`VerificationReport`.  A grid point only counts as a
violation when the bound fails by more than the report's tolerance, which
accumulates the quadrature and finite-difference error estimates plus a
fixed 1e-9 slack.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import asdict, dataclass, field

import numpy as np

from .errors import DomainError, PreconditionError
from .kernels import _unwrap, check_alpha
from .quadrature import DiskRule, integrate_disk
from .series import AlphaHarmonicSeries, ComposedField, PolyMap, compose
from .solver import BoundaryData, SourceField, classical_poisson_integral, solve

BASE_SLACK = 1e-9
FOUR_OVER_PI = 4.0 / math.pi


class TheoremId(str, enum.Enum):
    SCHWARZ = "schwarz"
    SCHWARZ_PICK = "schwarz-pick"
    HEINZ = "heinz"
    COLONNA = "colonna"
    COMPOSITION = "composition"
    BERGMAN = "bergman"


@dataclass
class VerificationReport:
    theorem_id: TheoremId
    grid: dict
    tolerance: float
    worst_slack: float
    violations: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        out = asdict(self)
        out["theorem_id"] = TheoremId(self.theorem_id).value
        out["passed"] = self.passed
        return out

    def to_json(self, **kw) -> str:
        return json.dumps(_jsonable(self.to_dict()), **kw)


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (np.floating, np.integer)):
        return obj.item()
    if isinstance(obj, (complex, np.complexfloating)):
        return [float(np.real(obj)), float(np.imag(obj))]
    if isinstance(obj, np.ndarray):
        return _jsonable(obj.tolist())
    if isinstance(obj, float) and not math.isfinite(obj):
        return str(obj)
    return obj


def _grid_description(pts: np.ndarray) -> dict:
    r = np.abs(pts)
    return {"points": int(pts.size), "r_min": float(r.min()), "r_max": float(r.max())}


def _collect(pts, lhs, rhs, tol, check=None):
    slack = np.asarray(rhs, dtype=float) - np.asarray(lhs, dtype=float)
    bad = np.nonzero(slack < -tol)[0]
    out = []
    for i in bad:
        entry = {"x": float(pts[i].real), "y": float(pts[i].imag), "lhs": float(lhs[i]), "rhs": float(rhs[i])}
        if check:
            entry["check"] = check
        out.append(entry)
    return float(np.min(slack)), out


# ---------------------------------------------------------------------------
# finite differences


@dataclass(frozen=True)
class ResidualConfig:
    """Finite-difference settings for the weighted Laplacian.

    The step at ``z`` is ``step_base * (1 - |z|)`` so that the stencil,
    which reaches ``2 h`` from ``z``, stays inside the disk.
    """

    step_base: float = 1e-3
    order: int = 4
    tolerance: float = 1e-4

    def __post_init__(self):
        if not 0.0 < self.step_base < 0.5:
            raise DomainError("step_base must lie in (0, 0.5)")
        if self.order not in (2, 4):
            raise DomainError("stencil order must be 2 or 4")

    def step(self, z):
        return self.step_base * (1.0 - np.abs(np.asarray(z)))


def _stencil_values(f, z, h, order):
    offsets = (1, 2) if order == 4 else (1,)
    pts = [z]
    for m in offsets:
        pts += [z + m * h, z - m * h, z + 1j * m * h, z - 1j * m * h]
    vals = np.asarray(f(np.stack(pts)), dtype=complex)
    return vals


def _derivs_from_stencil(vals, h, order):
    """``(f_x, f_y, f_xx, f_yy)`` from stacked stencil values."""
    f0 = vals[0]
    if order == 2:
        xp, xm, yp, ym = vals[1:5]
        fx = (xp - xm) / (2 * h)
        fy = (yp - ym) / (2 * h)
        fxx = (xp - 2 * f0 + xm) / h**2
        fyy = (yp - 2 * f0 + ym) / h**2
    else:
        xp, xm, yp, ym, xp2, xm2, yp2, ym2 = vals[1:9]
        fx = (-xp2 + 8 * xp - 8 * xm + xm2) / (12 * h)
        fy = (-yp2 + 8 * yp - 8 * ym + ym2) / (12 * h)
        fxx = (-xp2 + 16 * xp - 30 * f0 + 16 * xm - xm2) / (12 * h**2)
        fyy = (-yp2 + 16 * yp - 30 * f0 + 16 * ym - ym2) / (12 * h**2)
    return fx, fy, fxx, fyy


def _check_stencil(f, z, h):
    if np.any(np.abs(z) + 2 * h >= 1.0):
        raise DomainError("finite-difference stencil leaves the unit disk")
    punct = np.asarray(getattr(f, "punctures", []), dtype=complex).ravel()
    for p in punct:
        if np.any(np.abs(z - p) <= 2.0 * np.sqrt(2.0) * h):
            raise DomainError("finite-difference stencil touches a puncture")


def wirtinger_fd(f, z, cfg: ResidualConfig | None = None, h=None):
    """Central-difference ``(f_z, f_zbar)``."""
    cfg = cfg or ResidualConfig()
    z = np.asarray(z, dtype=complex)
    h = cfg.step(z) if h is None else np.broadcast_to(np.asarray(h, dtype=float), z.shape)
    _check_stencil(f, z, h)
    fx, fy, _, _ = _derivs_from_stencil(_stencil_values(f, z, h, cfg.order), h, cfg.order)
    return _unwrap((fx - 1j * fy) / 2), _unwrap((fx + 1j * fy) / 2)


def laplacian_fd(f, z, cfg: ResidualConfig | None = None, h=None):
    """Central-difference Euclidean Laplacian ``f_xx + f_yy``."""
    cfg = cfg or ResidualConfig()
    z = np.asarray(z, dtype=complex)
    h = cfg.step(z) if h is None else np.broadcast_to(np.asarray(h, dtype=float), z.shape)
    _check_stencil(f, z, h)
    _, _, fxx, fyy = _derivs_from_stencil(_stencil_values(f, z, h, cfg.order), h, cfg.order)
    return _unwrap(fxx + fyy)


def delta_alpha_residual(f, z, alpha: float, cfg: ResidualConfig | None = None, h=None):
    """Finite-difference ``d/dz[(1-|z|^2)^(-alpha) d/dzbar f]`` at ``z``.

    Expanded as ``(1-|z|^2)^(-alpha) (f_{z zbar} + alpha conj(z) f_zbar / (1-|z|^2))``.
    """
    alpha = check_alpha(alpha)
    cfg = cfg or ResidualConfig()
    z = np.asarray(z, dtype=complex)
    h = cfg.step(z) if h is None else np.broadcast_to(np.asarray(h, dtype=float), z.shape)
    _check_stencil(f, z, h)
    fx, fy, fxx, fyy = _derivs_from_stencil(_stencil_values(f, z, h, cfg.order), h, cfg.order)
    w = 1.0 - np.abs(z) ** 2
    fzzb = (fxx + fyy) / 4.0
    fzb = (fx + 1j * fy) / 2.0
    return _unwrap(w ** (-alpha) * (fzzb + alpha * np.conj(z) * fzb / w))


# ---------------------------------------------------------------------------
# Schwarz and Schwarz-Pick checks


def _quad_error_estimate(field_, pts, n_probe=3):
    """Change of the Green part under refinement, on the outermost points."""
    if field_.source.is_zero:
        return 1e-12
    idx = np.argsort(-np.abs(pts))[:n_probe]
    probe = pts[idx]
    base = field_.green_part(probe)
    rule = field_.disk_rule or DiskRule()
    refined = solve(None, field_.source, field_.alpha, disk_rule=rule.refined()).green_part(probe)
    return float(np.max(np.abs(np.asarray(base) - np.asarray(refined)))) + 1e-12


def _ensure_centered(fstar: BoundaryData, auto_center: bool) -> BoundaryData:
    c0 = fstar.mean()
    if abs(c0) <= 1e-12 * max(1.0, fstar.sup_norm):
        return fstar
    if auto_center:
        return fstar.centered()
    raise PreconditionError(f"the weighted Poisson extension must vanish at 0, got {c0}")


def verify_schwarz(
    fstar: BoundaryData,
    g: SourceField,
    alpha: float,
    grid,
    *,
    auto_center: bool = False,
    disk_rule: DiskRule | None = None,
) -> VerificationReport:
    """``|f(z)| <= 2^a [ (4/pi) ||f*|| arctan|z| + ||g|| (1-|z|^2)^(a+1) ]``."""
    alpha = check_alpha(alpha, nonnegative=True)
    fstar = _ensure_centered(fstar, auto_center)
    pts = np.asarray(grid, dtype=complex).ravel()
    field_ = solve(fstar, g, alpha, disk_rule=disk_rule)
    lhs = np.abs(np.asarray(field_(pts)))
    r = np.abs(pts)
    rhs = 2.0**alpha * (FOUR_OVER_PI * fstar.sup_norm * np.arctan(r) + g.sup_norm * (1.0 - r**2) ** (alpha + 1.0))
    tol = _quad_error_estimate(field_, pts) + BASE_SLACK
    worst, viol = _collect(pts, lhs, rhs, tol)
    return VerificationReport(
        TheoremId.SCHWARZ,
        _grid_description(pts),
        tol,
        worst,
        viol,
        {"alpha": alpha, "boundary_sup": fstar.sup_norm, "source_sup": g.sup_norm},
    )


def _jacobian_norms(field_, pts):
    fz, fzb = field_.derivatives(pts)
    return np.abs(np.asarray(fz)) + np.abs(np.asarray(fzb))


def verify_schwarz_pick(
    fstar: BoundaryData,
    g: SourceField,
    alpha: float,
    grid,
    *,
    disk_rule: DiskRule | None = None,
) -> VerificationReport:
    """``||D_f|| <= (a+1) 2^(a+1) ||f*|| / (1-|z|^2) + (a + 4/3) 2^(a+1) ||g||``.

    For self-maps without source the unit-norm bound is checked as well, and
    for ``alpha == 0`` also the harmonic bound ``(4/pi)/(1-|z|^2)``.
    """
    alpha = check_alpha(alpha, nonnegative=True)
    pts = np.asarray(grid, dtype=complex).ravel()
    field_ = solve(fstar, g, alpha, disk_rule=disk_rule)
    lhs = _jacobian_norms(field_, pts)
    w = 1.0 - np.abs(pts) ** 2
    c = (alpha + 1.0) * 2.0 ** (alpha + 1.0)
    tol = _quad_error_estimate(field_, pts) + BASE_SLACK
    checks = {"general": c * fstar.sup_norm / w + (alpha + 4.0 / 3.0) * 2.0 ** (alpha + 1.0) * g.sup_norm}
    self_map = g.is_zero and fstar.sup_estimate <= 1.0 + 1e-12
    if self_map:
        checks["self-map"] = c / w
        if alpha == 0.0:
            checks["colonna"] = FOUR_OVER_PI / w
    worst = math.inf
    viol = []
    for name, rhs in checks.items():
        s, v = _collect(pts, lhs, rhs, tol, check=name)
        worst = min(worst, s)
        viol += v
    return VerificationReport(
        TheoremId.SCHWARZ_PICK,
        _grid_description(pts),
        tol,
        worst,
        viol,
        {"alpha": alpha, "checks": sorted(checks), "max_op_norm": float(np.max(lhs))},
    )


def verify_colonna(fstar: BoundaryData, grid) -> VerificationReport:
    """``||D_f|| <= (4/pi) / (1-|z|^2)`` for the harmonic extension of data
    bounded by 1."""
    if fstar.sup_estimate > 1.0 + 1e-12:
        raise PreconditionError("harmonic self-map needs ||f*|| <= 1")
    pts = np.asarray(grid, dtype=complex).ravel()
    field_ = solve(fstar, None, 0.0)
    lhs = _jacobian_norms(field_, pts)
    rhs = FOUR_OVER_PI / (1.0 - np.abs(pts) ** 2)
    worst, viol = _collect(pts, lhs, rhs, BASE_SLACK)
    return VerificationReport(TheoremId.COLONNA, _grid_description(pts), BASE_SLACK, worst, viol, {})


def verify_heinz(fstar: BoundaryData, grid, *, tol: float = 1e-10) -> VerificationReport:
    """``|f(z)| <= (4/pi) arctan|z|`` for the harmonic extension ``f`` of
    data bounded by 1 with ``f(0) = 0``."""
    if fstar.sup_estimate > 1.0 + 1e-12:
        raise PreconditionError("harmonic self-map needs ||f*|| <= 1")
    if abs(fstar.mean()) > tol:
        raise PreconditionError("harmonic extension must vanish at the origin")
    pts = np.asarray(grid, dtype=complex).ravel()
    lhs = np.abs(np.asarray(classical_poisson_integral(fstar, pts)))
    rhs = FOUR_OVER_PI * np.arctan(np.abs(pts))
    worst, viol = _collect(pts, lhs, rhs, BASE_SLACK)
    return VerificationReport(TheoremId.HEINZ, _grid_description(pts), BASE_SLACK, worst, viol, {})


# ---------------------------------------------------------------------------
# |f|^p and energies


def _field_derivatives(f, z, cfg=None):
    """``(f, f_z, f_zbar, Laplacian f)`` using exact methods when ``f`` has them."""
    val = np.asarray(f(z), dtype=complex)
    if hasattr(f, "dz") and hasattr(f, "dzbar"):
        fz = np.asarray(f.dz(z), dtype=complex)
        fzb = np.asarray(f.dzbar(z), dtype=complex)
    else:
        fz, fzb = (np.asarray(v) for v in wirtinger_fd(f, z, cfg))
    if hasattr(f, "laplacian"):
        lap = np.asarray(f.laplacian(z), dtype=complex)
    else:
        lap = np.asarray(laplacian_fd(f, z, cfg), dtype=complex)
    return val, fz, fzb, lap


def laplacian_abs_power(f, p: float, z, cfg: ResidualConfig | None = None):
    """``Delta(|f|^p)`` from the first and second derivatives of ``f``:

    ``p(p-2)|f|^(p-4) |f conj(f_z) + f_zbar conj(f)|^2
      + 2p |f|^(p-2) (|f_z|^2 + |f_zbar|^2) + p |f|^(p-2) Re(conj(f) Delta f)``.
    """
    if p < 2:
        raise DomainError("p must be >= 2")
    z = np.asarray(z, dtype=complex)
    val, fz, fzb, lap = _field_derivatives(f, z, cfg)
    mod = np.abs(val)
    if p < 4 and p != 2 and np.any(mod < 1e-12):
        raise DomainError("|f|^(p-4) is singular at a zero of f")
    mixed = np.abs(val * np.conj(fz) + fzb * np.conj(val)) ** 2
    first = 0.0 if p == 2 else p * (p - 2) * mod ** (p - 4) * mixed
    out = first + 2 * p * mod ** (p - 2) * (np.abs(fz) ** 2 + np.abs(fzb) ** 2) + p * mod ** (p - 2) * np.real(
        np.conj(val) * lap
    )
    return _unwrap(out)


def _laplacian_abs_power_safe(f, p, z, cfg=None, eps=1e-6, reg=1e-6):
    """As :func:`laplacian_abs_power`, but near zeros of ``f`` (p < 4) use the
    finite-difference Laplacian of ``(|f|^2 + reg)^(p/2)``."""
    z = np.asarray(z, dtype=complex).ravel()
    out = np.empty(z.shape)
    small = np.zeros(z.shape, dtype=bool)
    if p < 4 and p != 2:
        small = np.abs(np.asarray(f(z))) <= eps
    if np.any(~small):
        out[~small] = laplacian_abs_power(f, p, z[~small], cfg)
    if np.any(small):
        def smooth(u):
            return (np.abs(np.asarray(f(u))) ** 2 + reg) ** (p / 2.0)

        out[small] = np.real(laplacian_fd(smooth, z[small], cfg))
    return out


@dataclass(frozen=True)
class EnergyParams:
    nu: float
    mu: float
    t: float = 0.0
    p: float = 2.0

    def __post_init__(self):
        if self.nu <= -1:
            raise DomainError("nu must be > -1")
        if self.mu <= 0:
            raise DomainError("mu must be > 0")
        if self.t < 0:
            raise DomainError("t must be >= 0")


def dirichlet_energy(f, params: EnergyParams, rule: DiskRule | None = None) -> float:
    """``int_D (1-|z|)^nu |f|^mu ||D_f||^t dA`` by disk quadrature."""

    def integrand(z):
        val = np.abs(np.asarray(f(z), dtype=complex)) ** params.mu
        weight = (1.0 - np.abs(z)) ** params.nu
        if params.t == 0:
            return weight * val
        _, fz, fzb, _ = _field_derivatives(f, z)
        return weight * val * (np.abs(fz) + np.abs(fzb)) ** params.t

    return float(np.real(integrate_disk(integrand, rule)))


def bergman_norm(f, p: float, rule: DiskRule | None = None) -> float:
    """``|f(0)| + D_f(p-1, p, 0)^(1/p)``."""
    energy = dirichlet_energy(f, EnergyParams(nu=p - 1.0, mu=p, t=0.0), rule)
    return float(abs(complex(f(np.asarray(0j)))) + energy ** (1.0 / p))


def bergman_membership_check(
    f,
    p: float,
    radii=(0.9, 0.99, 0.999),
    *,
    alpha: float | None = None,
    grid=None,
    rule: DiskRule | None = None,
    sup_bound: float | None = None,
    convergence_tol: float = 1e-4,
) -> VerificationReport:
    """Numerical evidence that a bounded alpha-harmonic ``f`` lies in ``b_{p-1,p}``.

    (a) truncated integrals ``int_{|z|<r} (1-|z|^2)^(p+1) Delta(|f|^p) dA``
        are nondecreasing in ``r`` and settle (last difference below
        ``convergence_tol``);
    (b) the pointwise bound
        ``(1-|z|^2)^(p+1) Delta(|f|^p) <= p^2 2^(p-2) (|f(0)|^(p-2) + C1^(p-2)) C1^2 (1-|z|^2)
                                           + p 2^(p-2) (|f(0)|^(p-1) + C1^(p-1)) C2``
        with ``C1 = (a+1) 2^(a+1) M`` and ``C2 = |a| (a+1) 2^(a+3) M``,
        ``M = max(1, sup|f|)``, holds on ``grid``;
    (c) the norm ``|f(0)| + D_f(p-1, p, 0)^(1/p)`` is finite.

    The hypothesis ``Re(conj(f) Delta f) >= 0`` is evaluated on the grid
    and reported in ``details``; it is not enforced.
    """
    if p < 2:
        raise DomainError("p must be >= 2")
    if alpha is None:
        alpha = getattr(f, "alpha", None)
        if alpha is None:
            raise DomainError("alpha must be given for fields without an alpha attribute")
    alpha = check_alpha(alpha)
    radii = sorted(float(r) for r in radii)
    if not radii or radii[0] <= 0 or radii[-1] >= 1:
        raise DomainError("radii must lie in (0, 1)")
    rule = rule or DiskRule()
    pts = np.asarray(grid if grid is not None else _default_grid(radii[-1]), dtype=complex).ravel()

    if sup_bound is None:
        probe = _default_grid(radii[-1], n_r=40, n_t=96)
        sup_bound = float(np.max(np.abs(np.asarray(f(probe)))))
    m = max(1.0, sup_bound)
    c1 = (alpha + 1.0) * 2.0 ** (alpha + 1.0) * m
    c2 = abs(alpha) * (alpha + 1.0) * 2.0 ** (alpha + 3.0) * m
    f0 = abs(complex(f(np.asarray(0j))))

    def weighted(z):
        return (1.0 - np.abs(z) ** 2) ** (p + 1.0) * _laplacian_abs_power_safe(f, p, z)

    trunc = [float(np.real(integrate_disk(weighted, rule, radius=r))) for r in radii]
    tol = BASE_SLACK + 1e-10 * max(1.0, max(abs(v) for v in trunc))
    viol = []
    for (r0, i0), (r1, i1) in zip(zip(radii, trunc), zip(radii[1:], trunc[1:])):
        if i1 < i0 - tol:
            viol.append({"x": r1, "y": 0.0, "lhs": i0, "rhs": i1, "check": "monotone"})
    settled = len(trunc) < 2 or abs(trunc[-1] - trunc[-2]) < convergence_tol
    if not settled:
        viol.append({"x": radii[-1], "y": 0.0, "lhs": abs(trunc[-1] - trunc[-2]), "rhs": convergence_tol, "check": "settled"})

    w = 1.0 - np.abs(pts) ** 2
    lhs = w ** (p + 1.0) * _laplacian_abs_power_safe(f, p, pts)
    rhs = p**2 * 2.0 ** (p - 2) * (f0 ** (p - 2) + c1 ** (p - 2)) * c1**2 * w + p * 2.0 ** (p - 2) * (
        f0 ** (p - 1) + c1 ** (p - 1)
    ) * c2
    worst, bound_viol = _collect(pts, lhs, rhs, tol, check="pointwise")
    viol += bound_viol

    norm = bergman_norm(f, p, rule)
    if not math.isfinite(norm):
        viol.append({"x": 0.0, "y": 0.0, "lhs": norm, "rhs": math.inf, "check": "norm"})

    _, _, _, lap = _field_derivatives(f, pts)
    hyp = np.real(np.conj(np.asarray(f(pts))) * lap)
    return VerificationReport(
        TheoremId.BERGMAN,
        _grid_description(pts),
        tol,
        worst,
        viol,
        {
            "alpha": alpha,
            "p": p,
            "radii": radii,
            "truncated_integrals": trunc,
            "norm": norm,
            "C1": c1,
            "C2": c2,
            "hypothesis_min": float(np.min(hyp)),
            "hypothesis_holds": bool(np.min(hyp) >= -BASE_SLACK),
        },
    )


def _default_grid(r_max, n_r=12, n_t=24):
    radii = np.linspace(0.0, r_max, n_r)
    theta = 2.0 * np.pi * (np.arange(n_t) + 0.5) / n_t
    pts = (radii[1:, None] * np.exp(1j * theta)[None, :]).ravel()
    return np.concatenate([[0j], pts])


# ---------------------------------------------------------------------------
# composition


def verify_composition(
    f,
    psi: PolyMap,
    grid,
    *,
    alpha: float | None = None,
    cfg: ResidualConfig | None = None,
    breakage_factor: float = 100.0,
) -> VerificationReport:
    """Residual of ``f o psi`` measured against the rotation dichotomy.

    ``f o psi`` is expected to be alpha-harmonic when ``psi`` is a rotation,
    when ``alpha == 0``, or when ``f`` has no antianalytic part.  Then the
    check passes if the residual stays below ``cfg.tolerance``.  Otherwise
    it passes if the largest residual exceeds ``breakage_factor`` times the
    tolerance, i.e. non-alpha-harmonicity is detected.
    """
    cfg = cfg or ResidualConfig()
    if alpha is None:
        alpha = getattr(f, "alpha")
    alpha = check_alpha(alpha)
    if not isinstance(psi, PolyMap):
        psi = PolyMap(tuple(psi))
    pts = np.asarray(grid, dtype=complex).ravel()
    composed: ComposedField = compose(f, psi)
    res = np.abs(np.asarray(delta_alpha_residual(composed, pts, alpha, cfg)))
    antianalytic = getattr(f, "has_antianalytic_part", True)
    expect = psi.is_rotation() or alpha == 0.0 or not antianalytic
    i_max = int(np.argmax(res))
    tol = cfg.tolerance
    if expect:
        worst, viol = _collect(pts, res, np.full(res.shape, tol), 0.0)
    else:
        threshold = breakage_factor * tol
        worst = float(res[i_max] - threshold)
        viol = []
        if res[i_max] <= threshold:
            viol.append(
                {"x": float(pts[i_max].real), "y": float(pts[i_max].imag), "lhs": float(res[i_max]), "rhs": threshold}
            )
    return VerificationReport(
        TheoremId.COMPOSITION,
        _grid_description(pts),
        tol,
        worst,
        viol,
        {
            "alpha": alpha,
            "psi": [[c.real, c.imag] for c in psi.coeffs],
            "psi_is_rotation": psi.is_rotation(),
            "expected_alpha_harmonic": bool(expect),
            "max_residual": float(res[i_max]),
            "argmax": [float(pts[i_max].real), float(pts[i_max].imag)],
        },
    )


def random_series(rng: np.random.Generator, alpha: float, max_degree: int = 4, scale: float = 0.3) -> AlphaHarmonicSeries:
    """Random finitely supported series with coefficients in a disk of radius ``scale``."""
    coeffs = {}
    for k in range(-max_degree, max_degree + 1):
        coeffs[k] = scale * (rng.uniform(-1, 1) + 1j * rng.uniform(-1, 1)) / (1 + abs(k))
    return AlphaHarmonicSeries(coeffs, alpha)

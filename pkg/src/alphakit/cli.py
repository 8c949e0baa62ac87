"""Command-line interface: ``alphakit {kernel,solve,verify,series} ...``.

Exit codes
----------
0  success
1  I/O error (missing or unreadable file)
2  domain error or invalid configuration
3  solution residual above tolerance (not certified)
4  theorem precondition not met
5  verification ran but the inequality check failed
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, fields, replace

import numpy as np

from . import analysis, kernels
from .errors import DomainError, PreconditionError
from .formats import boundary_from_json, fmt_float, read_json, series_from_json, write_field_csv, write_json
from .quadrature import CircleRule, DiskRule, polar_grid
from .series import PolyMap, example1_build
from .solver import BoundaryData, SourceField, solve

EXIT_OK = 0
EXIT_IO = 1
EXIT_DOMAIN = 2
EXIT_UNCERTIFIED = 3
EXIT_PRECONDITION = 4
EXIT_FAILED = 5


@dataclass(frozen=True)
class RunConfig:
    """Settings shared by the ``solve``, ``verify`` and ``series`` commands."""

    alpha: float = 0.0
    radial_order: int = 64
    angular_order: int = 256
    circle_order: int | None = None
    n_r: int = 6
    n_theta: int = 12
    r_max: float = 0.95
    step: float | None = None
    residual_tol: float = 1e-4
    fd_step: float = 1e-3

    def __post_init__(self):
        kernels.check_alpha(self.alpha)
        for name in ("radial_order", "angular_order", "circle_order"):
            val = getattr(self, name)
            if val is None and name == "circle_order":
                continue
            if int(val) != val or val < 8:
                raise DomainError(f"{name} must be an integer >= 8")
        if self.n_r < 1 or self.n_theta < 1:
            raise DomainError("grid sizes must be positive")
        if not 0.0 < self.r_max < 1.0:
            raise DomainError("r_max must lie in (0, 1)")
        if self.step is not None and not self.step > 0:
            raise DomainError("Cartesian grid step must be positive")
        if not self.residual_tol > 0:
            raise DomainError("residual_tol must be positive")

    @classmethod
    def from_mapping(cls, obj) -> "RunConfig":
        if not isinstance(obj, dict):
            raise DomainError("config JSON must be an object")
        known = {f.name for f in fields(cls)}
        unknown = set(obj) - known
        if unknown:
            raise DomainError(f"unknown config keys: {sorted(unknown)}")
        try:
            return cls(**obj)
        except TypeError as exc:
            raise DomainError(str(exc)) from None

    def grid(self) -> np.ndarray:
        if self.step is None:
            return polar_grid(self.n_r, self.n_theta, self.r_max)
        ticks = np.arange(-self.r_max, self.r_max + self.step / 2, self.step)
        pts = (ticks[:, None] + 1j * ticks[None, :]).ravel()
        return pts[np.abs(pts) <= self.r_max]

    def disk_rule(self) -> DiskRule:
        return DiskRule(self.radial_order, self.angular_order)

    def circle_rule(self) -> CircleRule | None:
        # None lets the solver size the rule to the evaluation points
        return None if self.circle_order is None else CircleRule(self.circle_order)

    def residual_config(self) -> analysis.ResidualConfig:
        return analysis.ResidualConfig(step_base=self.fd_step, tolerance=self.residual_tol)


# ---------------------------------------------------------------------------
# argument parsing helpers


def _parse_complex(text: str) -> complex:
    try:
        return complex(text.replace(" ", "").replace("i", "j"))
    except ValueError:
        raise DomainError(f"cannot parse complex number {text!r}") from None


def _parse_source(spec: str | None) -> SourceField:
    """``zero``, ``const:c`` or ``monomial:a,b[,coef]``."""
    if spec is None or spec == "zero":
        return SourceField.zero()
    kind, _, rest = spec.partition(":")
    if kind == "const":
        return SourceField.constant(_parse_complex(rest))
    if kind == "monomial":
        parts = rest.split(",")
        if len(parts) not in (2, 3):
            raise DomainError("monomial source is monomial:a,b[,coef]")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise DomainError("monomial exponents must be integers") from None
        coef = _parse_complex(parts[2]) if len(parts) == 3 else 1.0
        return SourceField.monomial(a, b, coef)
    raise DomainError(f"unknown source spec {spec!r}")


def _parse_psi(spec: str) -> PolyMap:
    """``rotation:t``, ``dilation:a``, ``square`` or ``power:n``."""
    kind, _, rest = spec.partition(":")
    try:
        if kind == "rotation":
            return PolyMap.rotation(float(rest))
        if kind == "dilation":
            return PolyMap.dilation(_parse_complex(rest))
        if kind == "square":
            return PolyMap.power(2)
        if kind == "power":
            return PolyMap.power(int(rest))
    except ValueError:
        raise DomainError(f"bad map parameter in {spec!r}") from None
    raise DomainError(f"unknown map spec {spec!r}")


def _parse_example1(spec: str) -> int:
    key, _, val = spec.partition("=")
    if key != "k":
        raise DomainError("--example1 expects k=<positive integer>")
    try:
        return int(val)
    except ValueError:
        raise DomainError("--example1 expects k=<positive integer>") from None


def _load_config(args) -> RunConfig:
    base = RunConfig.from_mapping(read_json(args.config)) if getattr(args, "config", None) else RunConfig()
    updates = {}
    for name in ("alpha", "n_r", "n_theta", "r_max", "step"):
        val = getattr(args, name, None)
        if val is not None:
            updates[name] = val
    return replace(base, **updates) if updates else base


def _points(values, path):
    pts = [_parse_complex(v) for v in (values or [])]
    if path:
        with open(path, encoding="utf-8") as fh:
            pts += [_parse_complex(line) for line in fh.read().split() if line]
    return np.asarray(pts, dtype=complex)


def _emit(text: str, path=None):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# commands


def cmd_kernel(args) -> int:
    alpha = args.alpha
    lines = ["name,x,y,w_x,w_y,value_re,value_im,abs_bound"]
    if args.which == "h":
        s = np.asarray(args.s or [], dtype=float)
        if s.size == 0:
            raise DomainError("kernel h needs --s")
        vals = np.atleast_1d(kernels.h_alpha(s, alpha))
        bound = np.atleast_1d(kernels.h_alpha_bound(s, alpha)) if alpha >= 0 else [None] * s.size
        for si, v, b in zip(s, vals, bound):
            rv = kernels.KernelValue(complex(v), None if b is None else float(b))
            lines.append(_kernel_row("h", si, 0.0, 0.0, 0.0, rv))
    else:
        z = _points(args.z, args.z_file)
        if z.size == 0:
            raise DomainError(f"kernel {args.which} needs --z")
        if args.which == "poisson":
            for zi in z:
                v = kernels.poisson_kernel_alpha(zi, alpha)
                lines.append(_kernel_row("poisson", zi.real, zi.imag, 0.0, 0.0, kernels.KernelValue(complex(v))))
        else:
            w = _points(args.w, None)
            if w.size == 0:
                raise DomainError(f"kernel {args.which} needs --w")
            z, w = np.broadcast_arrays(z, w)
            for zi, wi in zip(z, w):
                if args.which == "green":
                    v = kernels.green_alpha(zi, wi, alpha)
                    b = float(kernels.green_alpha_bound(zi, wi, alpha)) if alpha >= 0 else None
                else:
                    v, b = kernels.phi(zi, wi), 1.0
                lines.append(_kernel_row(args.which, zi.real, zi.imag, wi.real, wi.imag, kernels.KernelValue(complex(v), b)))
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _kernel_row(name, x, y, wx, wy, kv: kernels.KernelValue) -> str:
    bound = "" if kv.abs_bound is None else fmt_float(kv.abs_bound)
    nums = [fmt_float(v) for v in (x, y, wx, wy, kv.value.real, kv.value.imag)]
    return ",".join([name, *nums, bound])


def _residual_summary(field_, z, alpha, target, cfg: RunConfig) -> dict:
    res = np.asarray(analysis.delta_alpha_residual(field_, z, alpha, cfg.residual_config())) - target(z)
    res = np.abs(np.atleast_1d(res))
    i = int(np.argmax(res)) if res.size else 0
    worst = float(res[i]) if res.size else 0.0
    return {
        "max_residual": worst,
        "argmax": [float(z[i].real), float(z[i].imag)] if res.size else None,
        "tolerance": cfg.residual_tol,
        "certified": worst <= cfg.residual_tol,
        "points": int(z.size),
    }


def cmd_solve(args) -> int:
    cfg = _load_config(args)
    fstar = boundary_from_json(read_json(args.boundary), args.interp_order) if args.boundary else BoundaryData.zero()
    g = _parse_source(args.source)
    field_ = solve(fstar, g, cfg.alpha, circle_rule=cfg.circle_rule(), disk_rule=cfg.disk_rule())
    z = cfg.grid()
    f = np.atleast_1d(field_(z))
    fz, fzb = (np.atleast_1d(a) for a in field_.derivatives(z))
    if args.out:
        write_field_csv(args.out, z, f, fz, fzb)
    else:
        write_field_csv(sys.stdout, z, f, fz, fzb)
    summary = _residual_summary(field_, z, cfg.alpha, g, cfg)
    summary.update({"alpha": cfg.alpha, "source": g.name})
    text = write_json(summary, args.summary)
    if not args.summary:
        sys.stderr.write(text + "\n")
    return EXIT_OK if summary["certified"] else EXIT_UNCERTIFIED


def cmd_series(args) -> int:
    cfg = _load_config(args)
    s = series_from_json(read_json(args.coeffs), args.alpha)
    cfg = replace(cfg, alpha=s.alpha)
    z = cfg.grid()
    f = np.atleast_1d(s(z))
    fz, fzb = np.atleast_1d(s.dz(z)), np.atleast_1d(s.dzbar(z))
    write_field_csv(args.out if args.out else sys.stdout, z, f, fz, fzb)
    summary = _residual_summary(s, z, s.alpha, lambda w: 0.0, cfg)
    summary["alpha"] = s.alpha
    text = write_json(summary, args.summary)
    if not args.summary:
        sys.stderr.write(text + "\n")
    return EXIT_OK if summary["certified"] else EXIT_UNCERTIFIED


def _verify_inputs(args, cfg):
    if args.sharp_case:
        return BoundaryData.zero(), SourceField.constant(-1.0), 0.0
    fstar = boundary_from_json(read_json(args.boundary), args.interp_order) if args.boundary else BoundaryData.zero()
    return fstar, _parse_source(args.source), cfg.alpha


def cmd_verify(args) -> int:
    cfg = _load_config(args)
    grid = cfg.grid()
    which = args.which
    if which in ("schwarz", "schwarz-pick"):
        fstar, g, alpha = _verify_inputs(args, cfg)
        if which == "schwarz":
            report = analysis.verify_schwarz(fstar, g, alpha, grid, auto_center=args.auto_center, disk_rule=cfg.disk_rule())
        else:
            report = analysis.verify_schwarz_pick(fstar, g, alpha, grid, disk_rule=cfg.disk_rule())
    elif which in ("heinz", "colonna"):
        if not args.boundary:
            raise DomainError(f"verify {which} needs --boundary")
        fstar = boundary_from_json(read_json(args.boundary), args.interp_order)
        if which == "heinz":
            if args.auto_center:
                fstar = fstar.centered()
            report = analysis.verify_heinz(fstar, grid)
        else:
            report = analysis.verify_colonna(fstar, grid)
    elif which == "composition":
        report = _verify_composition(args, cfg, grid)
    else:
        if not args.coeffs:
            raise DomainError("verify bergman needs --coeffs")
        s = series_from_json(read_json(args.coeffs), args.alpha)
        report = analysis.bergman_membership_check(s, args.p)
    _emit(report.to_json(indent=2, sort_keys=True) + "\n", args.out)
    return EXIT_OK if report.passed else EXIT_FAILED


def _verify_composition(args, cfg, grid):
    psi = _parse_psi(args.psi or "rotation:0")
    rc = cfg.residual_config()
    if args.example1:
        alpha = cfg.alpha if args.alpha is not None else 1.0
        f = example1_build(_parse_example1(args.example1), alpha)
        # keep stencils off the puncture at the origin
        grid = grid[np.abs(grid) >= 0.1]
    elif args.coeffs:
        f = series_from_json(read_json(args.coeffs), args.alpha)
    else:
        alpha = cfg.alpha if args.alpha is not None else 1.0
        f = analysis.random_series(np.random.default_rng(args.seed), alpha)
    return analysis.verify_composition(f, psi, grid, cfg=rc)


# ---------------------------------------------------------------------------


def _add_grid_args(p):
    p.add_argument("--alpha", type=float, help="weight exponent (> -1)")
    p.add_argument("--config", help="RunConfig JSON file")
    p.add_argument("--n-r", dest="n_r", type=int, help="number of grid radii")
    p.add_argument("--n-theta", dest="n_theta", type=int, help="number of grid angles")
    p.add_argument("--r-max", dest="r_max", type=float, help="outer grid radius (< 1)")
    p.add_argument("--step", type=float, help="use a Cartesian grid with this spacing")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="alphakit", description="Weighted-Laplacian toolkit on the unit disk.")
    sub = parser.add_subparsers(dest="command", required=True)

    k = sub.add_parser("kernel", help="evaluate a kernel at points")
    k.add_argument("which", choices=["poisson", "green", "h", "phi"])
    k.add_argument("--alpha", type=float, default=0.0)
    k.add_argument("--z", nargs="+", help="points, e.g. 0.3+0.2j")
    k.add_argument("--z-file", dest="z_file", help="file with one point per line")
    k.add_argument("--w", nargs="+", help="second points for green/phi")
    k.add_argument("--s", nargs="+", type=float, help="arguments of h")
    k.add_argument("--out", help="CSV output path (default stdout)")
    k.set_defaults(func=cmd_kernel)

    s = sub.add_parser("solve", help="solve the Dirichlet problem on a grid")
    _add_grid_args(s)
    s.add_argument("--boundary", help="boundary JSON")
    s.add_argument("--interp-order", dest="interp_order", type=int, default=0, choices=[0, 1, 3])
    s.add_argument("--source", help="zero | const:c | monomial:a,b[,coef]")
    s.add_argument("--out", help="field CSV path (default stdout)")
    s.add_argument("--summary", help="summary JSON path (default stderr)")
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="check one of the inequalities")
    v.add_argument("which", choices=[t.value for t in analysis.TheoremId])
    _add_grid_args(v)
    v.add_argument("--boundary", help="boundary JSON")
    v.add_argument("--interp-order", dest="interp_order", type=int, default=0, choices=[0, 1, 3])
    v.add_argument("--source", help="zero | const:c | monomial:a,b[,coef]")
    v.add_argument("--sharp-case", dest="sharp_case", action="store_true", help="alpha=0, f*=0, g=-1")
    v.add_argument("--auto-center", dest="auto_center", action="store_true", help="subtract the boundary mean")
    v.add_argument("--psi", help="rotation:t | dilation:a | square | power:n")
    v.add_argument("--example1", help="use the punctured-disk counterexample, e.g. k=1")
    v.add_argument("--coeffs", help="coefficient JSON")
    v.add_argument("--p", type=float, default=2.0, help="exponent for the bergman check")
    v.add_argument("--seed", type=int, default=0, help="seed for randomly drawn inputs")
    v.add_argument("--out", help="report JSON path (default stdout)")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("series", help="evaluate an alpha-harmonic series")
    _add_grid_args(c)
    c.add_argument("--coeffs", required=True, help="coefficient JSON")
    c.add_argument("--out", help="field CSV path (default stdout)")
    c.add_argument("--summary", help="summary JSON path (default stderr)")
    c.set_defaults(func=cmd_series)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PreconditionError as exc:
        print(f"precondition: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return EXIT_IO
    except json.JSONDecodeError as exc:
        print(f"invalid JSON: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())

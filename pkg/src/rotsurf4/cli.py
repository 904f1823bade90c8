"""Command-line front end.

Subcommands:

    invariants   CSV grid of E,F,G,L,M,N,k,kappa,K and the point type
    octet        CSV grid of the eight frame invariants
    verify       cross-validate closed forms against the generic
                 finite-difference pipeline; exit 1 on any failure
    msc          generate a power-law member, check it pointwise
    export       OBJ mesh of a 3-coordinate projection
    plot         SVG of an invariant along u, or of the curvature ellipse

Exit codes: 0 ok, 1 verification failure, 2 usage/parse error, 3 domain or
regularity error.  Grid flags use min:max:count; count=1 means the single
point min.  Output is deterministic: identical configuration gives byte
identical files.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import msc as msc_mod
from .expr import EvalDomainError, ExprSyntaxError, Profile
from .forms import (ellipse_samples, first_form, gauss_curvature,
                    invariants, is_circle, lmn, second_tensor)
from .geometry import (GeometryError, analytic_jet2, fd_jet2,
                       gram_schmidt_normals, norm)
from .octet import (TotallyGeodesicError, gauge_flip, invariants_from_octet,
                    neighbors_from, octet_generic)
from .rotational import RotationalSurface, closed_forms_at, closed_invariants_at, closed_octet_at

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3

_INVARIANT_HEADER = ["u", "v", "E", "F", "G", "L", "M", "N", "k", "kappa", "K", "type"]
_OCTET_HEADER = ["u", "gamma1", "gamma2", "nu1", "nu2", "lambda", "mu", "beta1", "beta2"]


class _PointError(Exception):
    """A domain/regularity error tagged with the first offending point."""

    def __init__(self, u: float, v: float, cause: Exception):
        super().__init__(f"at (u, v) = ({u!r}, {v!r}): {cause}")
        self.u, self.v, self.cause = u, v, cause


def _num(x: float) -> str:
    return f"{x:.17g}"


def _range_spec(text: str) -> tuple[float, float, int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected min:max:count, got {text!r}")
    try:
        lo, hi, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if count < 1:
        raise argparse.ArgumentTypeError("count must be at least 1")
    if count > 1 and hi <= lo:
        raise argparse.ArgumentTypeError("max must exceed min when count > 1")
    return lo, hi, count


def _linspace(lo: float, hi: float, count: int) -> list[float]:
    if count == 1:
        return [lo]
    step = (hi - lo) / (count - 1)
    return [lo + i * step for i in range(count)]


@dataclass(frozen=True)
class GridSpec:
    u_min: float
    u_max: float
    nu: int
    v_min: float
    v_max: float
    nv: int

    def u_values(self) -> list[float]:
        return _linspace(self.u_min, self.u_max, self.nu)

    def v_values(self) -> list[float]:
        return _linspace(self.v_min, self.v_max, self.nv)


@dataclass(frozen=True)
class RunConfig:
    surface: RotationalSurface
    grid: GridSpec
    msc_params: msc_mod.MscParams | None = None


# ---------------------------------------------------------------------------
# argument plumbing

def _add_surface_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--f", help="meridian first component, expression in u")
    p.add_argument("--g", help="meridian second component, expression in u")
    p.add_argument("--alpha", type=float, required=True, help="rotation speed in the x1x2-plane")
    p.add_argument("--beta", type=float, required=True, help="rotation speed in the x3x4-plane")
    p.add_argument("--msc-c", dest="msc_c", type=float,
                   help="power-law constant c (alternative surface source)")
    p.add_argument("--eps", type=int, choices=(1, -1),
                   help="branch sign of the power-law source")
    p.add_argument("--u", type=_range_spec, help="u grid min:max:count")
    p.add_argument("--v", type=_range_spec, help="v grid min:max:count")


def _build_config(args: argparse.Namespace, parser: argparse.ArgumentParser,
                  default_v=(0.0, 0.0, 1)) -> RunConfig:
    expr_source = args.f is not None or args.g is not None
    msc_source = args.msc_c is not None or args.eps is not None
    if expr_source and msc_source:
        parser.error("give either --f/--g or --msc-c/--eps, not both")
    if not expr_source and not msc_source:
        parser.error("a surface source is required: --f/--g or --msc-c/--eps")

    params = None
    if msc_source:
        if args.msc_c is None or args.eps is None:
            parser.error("--msc-c and --eps go together")
        try:
            params = msc_mod.MscParams(args.msc_c, args.alpha, args.beta, args.eps)
            surface = msc_mod.msc_surface(params)
        except ValueError as exc:
            parser.error(str(exc))
        u_range = args.u if args.u else (surface.u_domain.lo, surface.u_domain.hi, 20)
    else:
        if args.f is None or args.g is None:
            parser.error("an expression surface needs both --f and --g")
        surface = RotationalSurface(Profile.from_text(args.f),
                                    Profile.from_text(args.g),
                                    args.alpha, args.beta)
        if args.u is None:
            parser.error("--u is required for an expression surface")
        u_range = args.u
    v_range = args.v if args.v else default_v
    grid = GridSpec(u_range[0], u_range[1], u_range[2],
                    v_range[0], v_range[1], v_range[2])
    return RunConfig(surface, grid, params)


def _open_out(path: str | None):
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w", newline=""), True


# ---------------------------------------------------------------------------
# invariants / octet grids

def _invariant_row(surface: RotationalSurface, u: float, v_first: float, class_tol: float):
    try:
        ff, _, sf = closed_forms_at(surface, u)
        k, kappa, gauss = closed_invariants_at(surface, u)
    except (GeometryError, EvalDomainError) as exc:
        raise _PointError(u, v_first, exc) from exc
    return invariants(ff, sf, gauss, class_tol=class_tol)


def cmd_invariants(args, parser) -> int:
    cfg = _build_config(args, parser)
    us = cfg.grid.u_values()
    vs = cfg.grid.v_values()
    with ThreadPoolExecutor(max_workers=4) as pool:
        records = list(pool.map(
            lambda u: _invariant_row(cfg.surface, u, vs[0], args.tol_class), us))
    stream, owned = _open_out(args.out)
    try:
        writer = csv.writer(stream)
        writer.writerow(_INVARIANT_HEADER)
        for u, rec in zip(us, records):
            for v in vs:
                writer.writerow([_num(u), _num(v), _num(rec.E), _num(rec.F),
                                 _num(rec.G), _num(rec.L), _num(rec.M), _num(rec.N),
                                 _num(rec.k), _num(rec.kappa), _num(rec.K),
                                 rec.point_type.value])
    finally:
        if owned:
            stream.close()
    return EXIT_OK


def cmd_octet(args, parser) -> int:
    cfg = _build_config(args, parser)
    us = cfg.grid.u_values()

    def row(u):
        try:
            return closed_octet_at(cfg.surface, u)
        except (GeometryError, EvalDomainError) as exc:
            raise _PointError(u, cfg.grid.v_min, exc) from exc

    with ThreadPoolExecutor(max_workers=4) as pool:
        octets = list(pool.map(row, us))
    stream, owned = _open_out(args.out)
    try:
        writer = csv.writer(stream)
        writer.writerow(_OCTET_HEADER)
        for u, o in zip(us, octets):
            writer.writerow([_num(u), _num(o.gamma1), _num(o.gamma2), _num(o.nu1),
                             _num(o.nu2), _num(o.lam), _num(o.mu), _num(o.beta1),
                             _num(o.beta2)])
    finally:
        if owned:
            stream.close()
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify

def _rel(a: float, b: float) -> float:
    return abs(a - b) / max(1.0, abs(a), abs(b))


def _jet_dev(j1, j2) -> float:
    worst = 0.0
    for name in ("z", "z_u", "z_v", "z_uu", "z_uv", "z_vv"):
        for a, b in zip(getattr(j1, name), getattr(j2, name)):
            worst = max(worst, _rel(a, b))
    return worst


def _octet_dev(a, b) -> float:
    def dev(x, y):
        return max(_rel(p, q) for p, q in zip(
            (x.gamma1, x.gamma2, x.nu1, x.nu2, x.lam, x.mu, x.beta1, x.beta2),
            (y.gamma1, y.gamma2, y.nu1, y.nu2, y.lam, y.mu, y.beta1, y.beta2)))
    return min(dev(a, b), dev(a, gauge_flip(b)))


@dataclass
class _Check:
    name: str
    tol: float
    dev: float = 0.0
    worst: tuple[float, float] | None = None
    note: str | None = None  # set => not applicable

    def update(self, dev: float, point: tuple[float, float]) -> None:
        if dev > self.dev:
            self.dev = dev
            self.worst = point

    def passed(self) -> bool:
        return self.note is not None or self.dev <= self.tol


def cmd_verify(args, parser) -> int:
    cfg = _build_config(args, parser)
    surface = cfg.surface
    us = cfg.grid.u_values()
    vs = cfg.grid.v_values()
    surface_map = surface.as_map()

    checks = {
        "jets": _Check("jets", args.tol_pipeline),
        "forms": _Check("forms", args.tol_pipeline),
        "invariants": _Check("invariants", args.tol_pipeline),
        "octet": _Check("octet", args.tol_octet),
        "octet-vs-invariants": _Check("octet-vs-invariants", args.tol_relations),
        "superconformal": _Check("superconformal", args.tol_superconformal),
        "ellipse-circle": _Check("ellipse-circle", args.tol_circle),
    }

    def jet_at(uu, vv):
        return analytic_jet2(surface, uu, vv)

    try:
        for u in us:
            ffc, _, sfc = closed_forms_at(surface, u)
            kc, xc, gc = closed_invariants_at(surface, u)
            oc = closed_octet_at(surface, u)
            ko, xo, go = invariants_from_octet(oc)
            checks["octet-vs-invariants"].update(
                max(_rel(ko, kc), _rel(xo, xc), _rel(go, gc)), (u, vs[0]))
            for v in vs:
                jet_a = jet_at(u, v)
                jet_f = fd_jet2(surface_map, u, v)
                checks["jets"].update(_jet_dev(jet_a, jet_f), (u, v))

                e1, e2 = gram_schmidt_normals(jet_f)
                ff = first_form(jet_f)
                ct = second_tensor(jet_f, e1, e2)
                sf = lmn(ct, ff.W)
                checks["forms"].update(max(
                    _rel(ff.E, ffc.E), _rel(ff.F, ffc.F), _rel(ff.G, ffc.G),
                    _rel(sf.L, sfc.L), _rel(sf.M, sfc.M), _rel(sf.N, sfc.N)), (u, v))
                rec = invariants(ff, sf, gauss_curvature(ff, ct))
                checks["invariants"].update(max(
                    _rel(rec.k, kc), _rel(rec.kappa, xc), _rel(rec.K, gc)), (u, v))

                if checks["octet"].note is None:
                    try:
                        og = octet_generic(jet_a, neighbors_from(jet_at, u, v))
                        checks["octet"].update(_octet_dev(oc, og), (u, v))
                    except TotallyGeodesicError:
                        checks["octet"].note = "totally geodesic point: frame undefined"

        # the msc equation classifies the surface; it applies only to
        # meridians with f(u) = u and is informational, not a pass/fail check
        residual_note = None
        member = False
        try:
            worst_residual = 0.0
            for u in us:
                best = None
                for eps in (1, -1):
                    r = msc_mod.msc_residual(surface, u, eps)
                    g = surface.g.value(u)
                    g1 = surface.g.deriv1(u)
                    a, b = surface.alpha, surface.beta
                    scale = max(1.0, abs(a * b * (g - u * g1)),
                                abs(a * a * u * g1 - b * b * g))
                    d = abs(r) / scale
                    best = d if best is None else min(best, d)
                worst_residual = max(worst_residual, best)
            member = worst_residual <= args.tol_residual
            verdict = "member" if member else "not a member"
            residual_note = (f"max scaled residual {worst_residual:.3e} "
                             f"(tol {args.tol_residual:.1e}): {verdict}")
        except ValueError:
            residual_note = "n/a: meridian is not f(u) = u"

        if residual_note.startswith("n/a"):
            checks["superconformal"].note = "meridian is not f(u) = u"
            checks["ellipse-circle"].note = "meridian is not f(u) = u"
        elif not member:
            checks["superconformal"].note = "surface does not satisfy the msc equation"
            checks["ellipse-circle"].note = "surface does not satisfy the msc equation"
        else:
            for u in us:
                jet = jet_at(u, vs[0])
                e1, e2 = gram_schmidt_normals(jet)
                ff = first_form(jet)
                ct = second_tensor(jet, e1, e2)
                rec = invariants(ff, lmn(ct, ff.W), gauss_curvature(ff, ct))
                scale = max(1.0, rec.kappa ** 2, abs(rec.k), rec.K ** 2)
                checks["superconformal"].update(
                    max(abs(rec.kappa ** 2 - rec.k), abs(rec.K ** 2 - rec.kappa ** 2)) / scale,
                    (u, vs[0]))
                report = is_circle(ellipse_samples(ff, ct, e1, e2, 16), args.tol_circle)
                center_dev = norm(report.center) / max(1.0, report.radius)
                checks["ellipse-circle"].update(
                    max(report.max_deviation / max(1.0, report.radius), center_dev),
                    (u, vs[0]))
    except (GeometryError, EvalDomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN

    print(f"  {'msc-equation':<22} {residual_note}")
    failed = []
    for check in checks.values():
        if check.note is not None:
            print(f"  {check.name:<22} n/a: {check.note}")
            continue
        status = "PASS" if check.passed() else "FAIL"
        where = ""
        if check.worst is not None and status == "FAIL":
            where = f"  worst at (u, v) = ({check.worst[0]:.6g}, {check.worst[1]:.6g})"
        print(f"  {check.name:<22} max dev {check.dev:.3e}  tol {check.tol:.1e}  {status}{where}")
        if not check.passed():
            failed.append(check.name)
    if failed:
        print(f"overall: FAIL ({', '.join(failed)})")
        return EXIT_VERIFY
    print("overall: PASS")
    return EXIT_OK


# ---------------------------------------------------------------------------
# msc

def cmd_msc(args, parser) -> int:
    try:
        params = msc_mod.MscParams(args.c, args.alpha, args.beta, args.eps)
    except ValueError as exc:
        parser.error(str(exc))
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        try:
            surface = msc_mod.msc_surface(
                params, (args.u[0], args.u[1]) if args.u else (0.25, 4.0))
        except ValueError as exc:
            parser.error(str(exc))
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)

    print(f"profile: {msc_mod.msc_profile_text(params)}")
    us = _linspace(*(args.u if args.u else (0.25, 4.0, 20)))
    tol = args.tol_superconformal
    rows = []
    all_pass = True
    for u in us:
        k, kappa, gauss = msc_mod.msc_invariants(params, u)
        residual = msc_mod.msc_residual(surface, u, params.eps)
        scale = max(1.0, kappa * kappa, abs(k), gauss * gauss)
        minimal = abs(kappa * kappa - k) <= tol * scale
        superconformal = minimal and abs(gauss * gauss - kappa * kappa) <= tol * scale
        all_pass = all_pass and superconformal
        rows.append((u, k, kappa, gauss, residual, minimal, superconformal))

    stream, owned = _open_out(args.out)
    try:
        writer = csv.writer(stream)
        writer.writerow(["u", "k", "kappa", "K", "residual", "minimal", "superconformal"])
        for u, k, kappa, gauss, residual, minimal, sc in rows:
            writer.writerow([_num(u), _num(k), _num(kappa), _num(gauss),
                             _num(residual), str(minimal).lower(), str(sc).lower()])
    finally:
        if owned:
            stream.close()
    npass = sum(1 for r in rows if r[6])
    print(f"minimal super-conformal at {npass}/{len(rows)} grid points")
    return EXIT_OK if all_pass else EXIT_VERIFY


# ---------------------------------------------------------------------------
# export / plot

_PROJECTIONS = {
    "drop1": (1, 2, 3),
    "drop2": (0, 2, 3),
    "drop3": (0, 1, 3),
    "drop4": (0, 1, 2),
}


def cmd_export(args, parser) -> int:
    cfg = _build_config(args, parser, default_v=(0.0, 2.0 * math.pi, 24))
    if cfg.grid.nu < 2 or cfg.grid.nv < 2:
        parser.error("export needs at least a 2x2 grid")
    us = cfg.grid.u_values()
    vs = cfg.grid.v_values()
    surface_map = cfg.surface.as_map()
    keep = _PROJECTIONS[args.projection]

    lines = []
    for u in us:
        for v in vs:
            try:
                point = tuple(surface_map(u, v))
            except (GeometryError, EvalDomainError) as exc:
                raise _PointError(u, v, exc) from exc
            coords = [point[i] for i in keep]
            lines.append("v " + " ".join(_num(c) for c in coords))

    nu, nv = cfg.grid.nu, cfg.grid.nv
    wrap = nv if args.close_v else nv - 1
    for i in range(nu - 1):
        for j in range(wrap):
            jn = (j + 1) % nv
            a = i * nv + j + 1
            b = (i + 1) * nv + j + 1
            c = (i + 1) * nv + jn + 1
            d = i * nv + jn + 1
            lines.append(f"f {a} {b} {c} {d}")

    with open(args.out, "w", newline="") as stream:
        stream.write("\n".join(lines) + "\n")
    return EXIT_OK


def _svg_document(body: list[str], width: int, height: int) -> str:
    head = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
    ]
    return "\n".join(head + body + ["</svg>"]) + "\n"


def _svg_line_plot(xs: list[float], ys: list[float], ylabel: str) -> str:
    width, height, margin = 640, 440, 60
    xmin, xmax = min(xs), max(xs)
    ymin, ymax = min(ys), max(ys)
    if xmax == xmin:
        xmin, xmax = xmin - 1.0, xmax + 1.0
    if ymax == ymin:
        ymin, ymax = ymin - 1.0, ymax + 1.0

    def sx(x):
        return margin + (x - xmin) / (xmax - xmin) * (width - 2 * margin)

    def sy(y):
        return height - margin - (y - ymin) / (ymax - ymin) * (height - 2 * margin)

    body = [
        f'<line x1="{margin}" y1="{height - margin}" x2="{width - margin}" '
        f'y2="{height - margin}" stroke="black"/>',
        f'<line x1="{margin}" y1="{margin}" x2="{margin}" '
        f'y2="{height - margin}" stroke="black"/>',
    ]
    for i in range(5):
        xv = xmin + i * (xmax - xmin) / 4
        yv = ymin + i * (ymax - ymin) / 4
        px, py = sx(xv), sy(yv)
        body.append(f'<line x1="{px:.2f}" y1="{height - margin}" x2="{px:.2f}" '
                    f'y2="{height - margin + 6}" stroke="black"/>')
        body.append(f'<text x="{px:.2f}" y="{height - margin + 20}" font-size="11" '
                    f'text-anchor="middle">{xv:.6g}</text>')
        body.append(f'<line x1="{margin - 6}" y1="{py:.2f}" x2="{margin}" '
                    f'y2="{py:.2f}" stroke="black"/>')
        body.append(f'<text x="{margin - 10}" y="{py + 4:.2f}" font-size="11" '
                    f'text-anchor="end">{yv:.6g}</text>')
    points = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in zip(xs, ys))
    body.append(f'<polyline points="{points}" fill="none" stroke="steelblue" stroke-width="1.5"/>')
    body.append(f'<text x="{width // 2}" y="{height - 16}" font-size="13" '
                f'text-anchor="middle">u</text>')
    body.append(f'<text x="{width // 2}" y="24" font-size="13" '
                f'text-anchor="middle">{ylabel} vs u</text>')
    return _svg_document(body, width, height)


def _svg_ellipse_plot(points: list[tuple[float, float]], center: tuple[float, float]) -> str:
    width = height = 480
    margin = 60
    span = max(max(abs(p[0]) for p in points), max(abs(p[1]) for p in points),
               abs(center[0]), abs(center[1]), 1e-12)

    def s(t):
        return width / 2 + t / span * (width / 2 - margin)

    body = [
        f'<line x1="{margin}" y1="{height / 2}" x2="{width - margin}" y2="{height / 2}" '
        f'stroke="lightgray"/>',
        f'<line x1="{width / 2}" y1="{margin}" x2="{width / 2}" y2="{height - margin}" '
        f'stroke="lightgray"/>',
        f'<text x="{width - margin + 4}" y="{height / 2 + 4}" font-size="11">e1</text>',
        f'<text x="{width / 2 + 6}" y="{margin - 6}" font-size="11">e2</text>',
    ]
    poly = " ".join(f"{s(p[0]):.2f},{height - s(p[1]):.2f}" for p in points)
    body.append(f'<polygon points="{poly}" fill="none" stroke="steelblue" stroke-width="1.5"/>')
    cx, cy = s(center[0]), height - s(center[1])
    body.append(f'<line x1="{cx - 5:.2f}" y1="{cy:.2f}" x2="{cx + 5:.2f}" y2="{cy:.2f}" '
                f'stroke="crimson" stroke-width="1.5"/>')
    body.append(f'<line x1="{cx:.2f}" y1="{cy - 5:.2f}" x2="{cx:.2f}" y2="{cy + 5:.2f}" '
                f'stroke="crimson" stroke-width="1.5"/>')
    body.append(f'<text x="{width / 2}" y="24" font-size="13" text-anchor="middle">'
                f'curvature ellipse, scale {span:.6g}</text>')
    return _svg_document(body, width, height)


def cmd_plot(args, parser) -> int:
    cfg = _build_config(args, parser)
    surface = cfg.surface
    if args.quantity == "ellipse":
        if args.point is None:
            parser.error("--point U V is required for the ellipse plot")
        u0, v0 = args.point
        try:
            jet = analytic_jet2(surface, u0, v0)
            e1, e2 = gram_schmidt_normals(jet)
            ff = first_form(jet)
            ct = second_tensor(jet, e1, e2)
            samples = ellipse_samples(ff, ct, e1, e2, args.samples)
        except (GeometryError, EvalDomainError) as exc:
            raise _PointError(u0, v0, exc) from exc
        report = is_circle(samples, 1e-6)
        points = [(sum(a * b for a, b in zip(s, e1)),
                   sum(a * b for a, b in zip(s, e2))) for s in samples]
        center = (sum(a * b for a, b in zip(report.center, e1)),
                  sum(a * b for a, b in zip(report.center, e2)))
        text = _svg_ellipse_plot(points, center)
    else:
        us = cfg.grid.u_values()
        values = []
        for u in us:
            try:
                if args.quantity in ("k", "kappa", "K"):
                    trio = closed_invariants_at(surface, u)
                    values.append(trio[("k", "kappa", "K").index(args.quantity)])
                else:
                    o = closed_octet_at(surface, u)
                    values.append({"nu1": o.nu1, "nu2": o.nu2, "mu": o.mu,
                                   "gamma2": o.gamma2, "beta2": o.beta2}[args.quantity])
            except (GeometryError, EvalDomainError) as exc:
                raise _PointError(u, cfg.grid.v_min, exc) from exc
        text = _svg_line_plot(us, values, args.quantity)
    with open(args.out, "w", newline="") as stream:
        stream.write(text)
    return EXIT_OK


# ---------------------------------------------------------------------------
# entry point

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rotsurf4",
        description="Curvature invariants of two-plane rotational surfaces in 4-space.")
    sub = parser.add_subparsers(dest="command", required=True)

    inv = sub.add_parser("invariants", help="CSV grid of forms, invariants and point type")
    _add_surface_args(inv)
    inv.add_argument("--out", help="output CSV path (default: stdout)")
    inv.add_argument("--tol-class", dest="tol_class", type=float, default=1e-8,
                     help="point classification tolerance")

    oct_p = sub.add_parser("octet", help="CSV grid of the eight frame invariants")
    _add_surface_args(oct_p)
    oct_p.add_argument("--out", help="output CSV path (default: stdout)")

    ver = sub.add_parser("verify", help="cross-validate closed forms against the generic pipeline")
    _add_surface_args(ver)
    ver.add_argument("--tol-pipeline", dest="tol_pipeline", type=float, default=1e-6)
    ver.add_argument("--tol-octet", dest="tol_octet", type=float, default=1e-5)
    ver.add_argument("--tol-relations", dest="tol_relations", type=float, default=1e-10)
    ver.add_argument("--tol-residual", dest="tol_residual", type=float, default=1e-8)
    ver.add_argument("--tol-superconformal", dest="tol_superconformal", type=float, default=1e-8)
    ver.add_argument("--tol-circle", dest="tol_circle", type=float, default=1e-6)

    mscp = sub.add_parser("msc", help="generate and check a minimal super-conformal member")
    mscp.add_argument("--c", type=float, default=1.0, help="power-law constant")
    mscp.add_argument("--alpha", type=float, required=True)
    mscp.add_argument("--beta", type=float, required=True)
    mscp.add_argument("--eps", type=int, choices=(1, -1), default=1)
    mscp.add_argument("--u", type=_range_spec, help="u grid min:max:count (default 0.25:4:20)")
    mscp.add_argument("--out", help="output CSV path (default: stdout)")
    mscp.add_argument("--tol-superconformal", dest="tol_superconformal", type=float, default=1e-8)

    exp = sub.add_parser("export", help="OBJ mesh of a 3-coordinate projection")
    _add_surface_args(exp)
    exp.add_argument("--projection", choices=sorted(_PROJECTIONS), default="drop4",
                     help="which coordinate to drop")
    exp.add_argument("--close-v", dest="close_v", action="store_true",
                     help="stitch the last v column to the first (periodic v)")
    exp.add_argument("--out", required=True, help="output OBJ path")

    plot = sub.add_parser("plot", help="SVG plot of a quantity along u, or the curvature ellipse")
    _add_surface_args(plot)
    plot.add_argument("--quantity", required=True,
                      choices=("k", "kappa", "K", "nu1", "nu2", "mu", "gamma2", "beta2", "ellipse"))
    plot.add_argument("--point", type=float, nargs=2, metavar=("U", "V"),
                      help="evaluation point for the ellipse plot")
    plot.add_argument("--samples", type=int, default=16, help="ellipse sample count")
    plot.add_argument("--out", required=True, help="output SVG path")

    return parser


_DISPATCH = {
    "invariants": cmd_invariants,
    "octet": cmd_octet,
    "verify": cmd_verify,
    "msc": cmd_msc,
    "export": cmd_export,
    "plot": cmd_plot,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _DISPATCH[args.command](args, parser)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except ExprSyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except _PointError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (EvalDomainError, GeometryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    raise SystemExit(main(sys.argv[1:]))

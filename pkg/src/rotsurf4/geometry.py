"""Fixed-size linear algebra in 4-space, 2-jets of parametric maps, the
two-plane rotation construction, and a finite-difference jet oracle."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING, Callable

from .expr import Profile

if TYPE_CHECKING:
    from .rotational import RotationalSurface

__all__ = [
    "Vec4",
    "Jet2",
    "Curve4",
    "GeometryError",
    "DegenerateMetricError",
    "RegularityError",
    "dot",
    "norm",
    "det4",
    "cross4",
    "double_rotation",
    "analytic_jet2",
    "fd_jet2",
    "gram_schmidt_normals",
]


class GeometryError(Exception):
    """Base class for geometric degeneracies."""


class DegenerateMetricError(GeometryError):
    """The tangent vectors do not span a plane (EG - F^2 <= 0)."""


class RegularityError(GeometryError):
    """A regularity condition of the surface family fails at the point."""


@dataclass(frozen=True)
class Vec4:
    x1: float
    x2: float
    x3: float
    x4: float

    def __add__(self, other: "Vec4") -> "Vec4":
        return Vec4(self.x1 + other.x1, self.x2 + other.x2,
                    self.x3 + other.x3, self.x4 + other.x4)

    def __sub__(self, other: "Vec4") -> "Vec4":
        return Vec4(self.x1 - other.x1, self.x2 - other.x2,
                    self.x3 - other.x3, self.x4 - other.x4)

    def __neg__(self) -> "Vec4":
        return Vec4(-self.x1, -self.x2, -self.x3, -self.x4)

    def __mul__(self, s: float) -> "Vec4":
        return Vec4(self.x1 * s, self.x2 * s, self.x3 * s, self.x4 * s)

    __rmul__ = __mul__

    def __truediv__(self, s: float) -> "Vec4":
        return Vec4(self.x1 / s, self.x2 / s, self.x3 / s, self.x4 / s)

    def __iter__(self):
        return iter((self.x1, self.x2, self.x3, self.x4))


def dot(a: Vec4, b: Vec4) -> float:
    return a.x1 * b.x1 + a.x2 * b.x2 + a.x3 * b.x3 + a.x4 * b.x4


def norm(a: Vec4) -> float:
    return math.sqrt(dot(a, a))


def _det3(r1, r2, r3) -> float:
    return (r1[0] * (r2[1] * r3[2] - r2[2] * r3[1])
            - r1[1] * (r2[0] * r3[2] - r2[2] * r3[0])
            + r1[2] * (r2[0] * r3[1] - r2[1] * r3[0]))


def det4(a: Vec4, b: Vec4, c: Vec4, d: Vec4) -> float:
    """Determinant of the 4x4 matrix with rows a, b, c, d."""
    head = tuple(a)
    rows = (tuple(b), tuple(c), tuple(d))
    total = 0.0
    for j, sign in enumerate((1.0, -1.0, 1.0, -1.0)):
        minor = [r[:j] + r[j + 1:] for r in rows]
        total += sign * head[j] * _det3(*minor)
    return total


def cross4(a: Vec4, b: Vec4, c: Vec4) -> Vec4:
    """The vector d with dot(d, w) == det4(a, b, c, w) for every w."""
    rows = (tuple(a), tuple(b), tuple(c))
    comps = []
    for j, sign in enumerate((-1.0, 1.0, -1.0, 1.0)):
        minor = [r[:j] + r[j + 1:] for r in rows]
        comps.append(sign * _det3(*minor))
    return Vec4(*comps)


@dataclass(frozen=True)
class Jet2:
    """Position plus first and second partial derivatives at one
    parameter point of a map (u, v) -> R^4."""

    z: Vec4
    z_u: Vec4
    z_v: Vec4
    z_uu: Vec4
    z_uv: Vec4
    z_vv: Vec4


@dataclass(frozen=True)
class Curve4:
    """A curve in 4-space given componentwise by profiles of u."""

    x1: Profile
    x2: Profile
    x3: Profile
    x4: Profile

    def at(self, u: float) -> Vec4:
        return Vec4(self.x1.value(u), self.x2.value(u),
                    self.x3.value(u), self.x4.value(u))


def double_rotation(curve: Curve4, alpha: float, beta: float) -> Callable[[float, float], Vec4]:
    """General rotation of ``curve`` with independent speeds in the
    x1x2- and x3x4-planes (Moore's construction).

    Returns the map X(u, v) with

        X1 = x1 cos(a v) - x2 sin(a v),   X3 = x3 cos(b v) - x4 sin(b v),
        X2 = x1 sin(a v) + x2 cos(a v),   X4 = x3 sin(b v) + x4 cos(b v).

    ``beta = 0`` fixes the x3x4-plane (the classical rotation about a
    two-dimensional axis).
    """

    def surface_map(u: float, v: float) -> Vec4:
        p = curve.at(u)
        ca, sa = math.cos(alpha * v), math.sin(alpha * v)
        cb, sb = math.cos(beta * v), math.sin(beta * v)
        return Vec4(p.x1 * ca - p.x2 * sa,
                    p.x1 * sa + p.x2 * ca,
                    p.x3 * cb - p.x4 * sb,
                    p.x3 * sb + p.x4 * cb)

    return surface_map


def analytic_jet2(surface: "RotationalSurface", u: float, v: float) -> Jet2:
    """Exact 2-jet of (f cos av, f sin av, g cos bv, g sin bv) using the
    profiles' symbolic derivatives; trig factors differentiated in closed
    form.  Raises :class:`RegularityError` when a^2 f^2 + b^2 g^2 <= 0 or
    f'^2 + g'^2 <= 0 at ``u``."""
    f, f1, f2 = surface.f.value(u), surface.f.deriv1(u), surface.f.deriv2(u)
    g, g1, g2 = surface.g.value(u), surface.g.deriv1(u), surface.g.deriv2(u)
    a, b = surface.alpha, surface.beta
    if a * a * f * f + b * b * g * g <= 0.0:
        raise RegularityError(f"rotation radii vanish at u={u!r}")
    if f1 * f1 + g1 * g1 <= 0.0:
        raise RegularityError(f"meridian speed vanishes at u={u!r}")
    ca, sa = math.cos(a * v), math.sin(a * v)
    cb, sb = math.cos(b * v), math.sin(b * v)
    return Jet2(
        z=Vec4(f * ca, f * sa, g * cb, g * sb),
        z_u=Vec4(f1 * ca, f1 * sa, g1 * cb, g1 * sb),
        z_v=Vec4(-a * f * sa, a * f * ca, -b * g * sb, b * g * cb),
        z_uu=Vec4(f2 * ca, f2 * sa, g2 * cb, g2 * sb),
        z_uv=Vec4(-a * f1 * sa, a * f1 * ca, -b * g1 * sb, b * g1 * cb),
        z_vv=Vec4(-a * a * f * ca, -a * a * f * sa, -b * b * g * cb, -b * b * g * sb),
    )


def fd_jet2(surface_map: Callable[[float, float], Vec4], u: float, v: float,
            h: float | None = None, *, richardson: bool = True) -> Jet2:
    """Central-difference 2-jet of an arbitrary map, O(h^2); one Richardson
    step (h and h/2) raises it to O(h^4).

    The default step h = 1e-4 * max(1, |u|, |v|) balances truncation against
    round-off in double precision.  Domain errors raised by ``surface_map``
    on the stencil propagate.
    """
    if h is None:
        h = 1e-4 * max(1.0, abs(u), abs(v))
    if h <= 0.0:
        raise ValueError("step must be positive")
    z = surface_map(u, v)
    parts = _fd_parts(surface_map, u, v, h, z)
    if richardson:
        half = _fd_parts(surface_map, u, v, h / 2.0, z)
        parts = {key: (half[key] * 4.0 - parts[key]) / 3.0 for key in parts}
    return Jet2(z=z, **parts)


def _fd_parts(m, u, v, h, z) -> dict[str, Vec4]:
    pu = m(u + h, v)
    mu = m(u - h, v)
    pv = m(u, v + h)
    mv = m(u, v - h)
    pp = m(u + h, v + h)
    pm = m(u + h, v - h)
    mp = m(u - h, v + h)
    mm = m(u - h, v - h)
    return {
        "z_u": (pu - mu) / (2.0 * h),
        "z_v": (pv - mv) / (2.0 * h),
        "z_uu": (pu - z * 2.0 + mu) / (h * h),
        "z_vv": (pv - z * 2.0 + mv) / (h * h),
        "z_uv": ((pp - pm) - (mp - mm)) / (4.0 * h * h),
    }


_BASIS = (Vec4(1.0, 0.0, 0.0, 0.0), Vec4(0.0, 1.0, 0.0, 0.0),
          Vec4(0.0, 0.0, 1.0, 0.0), Vec4(0.0, 0.0, 0.0, 1.0))


def gram_schmidt_normals(jet: Jet2) -> tuple[Vec4, Vec4]:
    """Orthonormal normal frame (e1, e2) with det4(z_u, z_v, e1, e2) > 0.

    Seeds are the standard basis vectors with the largest residual norm
    after removing tangential components, ties broken by lowest index, so
    the frame is deterministic; e2 is negated when the orientation comes
    out negative.
    """
    zu, zv = jet.z_u, jet.z_v
    ee = dot(zu, zu)
    ff = dot(zu, zv)
    gg = dot(zv, zv)
    if ee <= 0.0 or ee * gg - ff * ff <= 0.0:
        raise DegenerateMetricError(
            f"tangent plane degenerate: EG-F^2 = {ee * gg - ff * ff!r}")
    t1 = zu / math.sqrt(ee)
    w = zv - t1 * dot(zv, t1)
    nw = norm(w)
    if nw == 0.0:
        raise DegenerateMetricError("tangent vectors are collinear")
    t2 = w / nw

    def pick(frame: tuple[Vec4, ...]) -> tuple[Vec4, float]:
        best, best_norm = None, -1.0
        for cand in _BASIS:
            r = cand
            for q in frame:
                r = r - q * dot(r, q)
            n = norm(r)
            if n > best_norm:
                best, best_norm = r, n
        return best, best_norm

    r1, n1 = pick((t1, t2))
    e1 = r1 / n1
    r2, n2 = pick((t1, t2, e1))
    e2 = r2 / n2
    if det4(zu, zv, e1, e2) < 0.0:
        e2 = -e2
    return e1, e2

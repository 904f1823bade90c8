"""Shared test utilities, kept independent of the library internals where
they act as oracles (tolerance math, finite differences, random trees)."""

import math
import random

from rotsurf4.expr import Binary, Constant, Unary, Variable, evaluate
from rotsurf4.octet import FrenetOctet


def rel_dev(a: float, b: float) -> float:
    return abs(a - b) / max(1.0, abs(a), abs(b))


def vec_dev(a, b) -> float:
    return max(rel_dev(x, y) for x, y in zip(a, b))


def jet_dev(j1, j2) -> float:
    return max(vec_dev(getattr(j1, name), getattr(j2, name))
               for name in ("z", "z_u", "z_v", "z_uu", "z_uv", "z_vv"))


def octet_tuple(o: FrenetOctet):
    return (o.gamma1, o.gamma2, o.nu1, o.nu2, o.lam, o.mu, o.beta1, o.beta2)


def octet_dev(a: FrenetOctet, b: FrenetOctet) -> float:
    """Componentwise deviation up to the (b, l) -> (-b, -l) gauge flip."""
    ta, tb = octet_tuple(a), octet_tuple(b)
    flipped = (tb[0], tb[1], -tb[2], -tb[3], -tb[4], -tb[5], tb[6], tb[7])
    direct = max(rel_dev(x, y) for x, y in zip(ta, tb))
    mirror = max(rel_dev(x, y) for x, y in zip(ta, flipped))
    return min(direct, mirror)


def central_diff(fn, u: float, h: float) -> float:
    return (fn(u + h) - fn(u - h)) / (2.0 * h)


_UNARY_OPS = ("neg", "sin", "cos", "exp", "log", "sqrt")
_BINARY_OPS = ("+", "-", "*", "/")
_EXPONENTS = (-2.0, -1.0, -0.5, 0.5, 1.5, 2.0, 3.0)


def random_expr(rng: random.Random, depth: int):
    """A random well-formed tree of the given maximum depth; exponents are
    constants so the derivative stays within the power rule."""
    if depth == 0 or rng.random() < 0.25:
        if rng.random() < 0.6:
            return Variable()
        return Constant(round(rng.uniform(-3.0, 3.0), 3))
    kind = rng.random()
    if kind < 0.4:
        return Unary(rng.choice(_UNARY_OPS), random_expr(rng, depth - 1))
    if kind < 0.85:
        return Binary(rng.choice(_BINARY_OPS),
                      random_expr(rng, depth - 1), random_expr(rng, depth - 1))
    return Binary("^", random_expr(rng, depth - 1), Constant(rng.choice(_EXPONENTS)))


def tame_at(e, u: float, h: float, bound: float = 1e4) -> bool:
    """True when the tree evaluates to moderate values on the whole
    five-point stencil around u (keeps the FD comparison meaningful)."""
    try:
        for uu in (u - 2 * h, u - h, u, u + h, u + 2 * h):
            if abs(evaluate(e, uu)) > bound:
                return False
    except Exception:
        return False
    return True

import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import central_diff, random_expr, tame_at
from rotsurf4.expr import (Binary, Constant, EvalDomainError, ExprSyntaxError,
                           Interval, Profile, Unary, UnknownIdentifierError,
                           Variable, differentiate, evaluate, parse, unparse)


# ---------------------------------------------------------------------------
# parsing

def test_parse_variable():
    assert parse("u") == Variable()


def test_parse_power():
    assert parse("u^2") == Binary("^", Variable(), Constant(2.0))


def test_parse_scaled_root():
    assert parse("2*u^0.5") == Binary("*", Constant(2.0),
                                      Binary("^", Variable(), Constant(0.5)))


def test_parse_precedence_and_unary():
    # pow binds tighter than unary minus, which binds tighter than mul
    assert parse("-u^2") == Unary("neg", Binary("^", Variable(), Constant(2.0)))
    assert parse("-2*u") == Binary("*", Constant(-2.0), Variable())
    assert parse("u^-0.5") == Binary("^", Variable(), Constant(-0.5))


def test_parse_right_assoc_power():
    assert parse("u^2^3") == Binary("^", Variable(),
                                    Binary("^", Constant(2.0), Constant(3.0)))


def test_parse_double_star_alias():
    assert parse("u**2") == parse("u^2")


def test_parse_scientific_notation():
    assert parse("1.5e-3") == Constant(0.0015)


def test_parse_function_call():
    assert parse("sin(u)") == Unary("sin", Variable())


def test_parse_empty_input():
    with pytest.raises(ExprSyntaxError):
        parse("")
    with pytest.raises(ExprSyntaxError):
        parse("   ")


def test_parse_unknown_identifier_offset():
    with pytest.raises(UnknownIdentifierError) as err:
        parse("2*spam(u)")
    assert err.value.offset == 2


def test_parse_syntax_error_offset():
    with pytest.raises(ExprSyntaxError) as err:
        parse("u + * 2")
    assert err.value.offset == 4


def test_parse_trailing_garbage():
    with pytest.raises(ExprSyntaxError):
        parse("u 2")


# ---------------------------------------------------------------------------
# evaluation

def test_eval_square():
    assert evaluate(parse("u^2"), 3.0) == 9.0
    assert evaluate(parse("u^2"), 0.0) == 0.0


def test_eval_negative_power():
    # hand arithmetic: 2 * 4^(-1/2) = 1
    assert evaluate(parse("2*u^(-0.5)"), 4.0) == 1.0


def test_eval_integer_power_negative_base_exact():
    assert evaluate(parse("u^3"), -2.0) == -8.0
    assert evaluate(parse("u^2"), -3.0) == 9.0


def test_eval_fractional_power_negative_base_rejected():
    with pytest.raises(EvalDomainError):
        evaluate(parse("u^0.5"), -1.0)


def test_eval_domain_errors_name_subtree():
    with pytest.raises(EvalDomainError) as err:
        evaluate(parse("1 + log(u)"), -1.0)
    assert "log(u)" in str(err.value)
    with pytest.raises(EvalDomainError):
        evaluate(parse("sqrt(u)"), -4.0)
    with pytest.raises(EvalDomainError):
        evaluate(parse("1/u"), 0.0)


def test_eval_matches_reference_evaluator():
    # independent table-driven evaluator as an oracle
    import operator
    unary = {"neg": operator.neg, "sin": math.sin, "cos": math.cos,
             "exp": math.exp, "log": math.log, "sqrt": math.sqrt}
    binary = {"+": operator.add, "-": operator.sub, "*": operator.mul,
              "/": operator.truediv, "^": math.pow}

    def reference(e, u):
        if isinstance(e, Constant):
            return e.value
        if isinstance(e, Variable):
            return u
        if isinstance(e, Unary):
            return unary[e.op](reference(e.child, u))
        return binary[e.op](reference(e.left, u), reference(e.right, u))

    rng = random.Random(7)
    checked = 0
    while checked < 100:
        e = random_expr(rng, 5)
        u = rng.uniform(0.3, 2.5)
        if not tame_at(e, u, 1e-5):
            continue
        assert evaluate(e, u) == pytest.approx(reference(e, u), rel=1e-12, abs=1e-12)
        checked += 1


# ---------------------------------------------------------------------------
# differentiation

def test_diff_square():
    d = differentiate(parse("u^2"))
    assert evaluate(d, 3.0) == 6.0


def test_diff_sin():
    d = differentiate(parse("sin(u)"))
    assert evaluate(d, 0.7) == math.cos(0.7)


def test_diff_scaled_root_against_central_difference():
    # d/du (2 sqrt(u)) = u^(-1/2); at u=1 the value is 1
    e = parse("2*u^0.5")
    d = differentiate(e)
    assert abs(evaluate(d, 1.0) - 1.0) <= 1e-15
    fd = central_diff(lambda x: evaluate(e, x), 1.0, 1e-6)
    assert abs(evaluate(d, 1.0) - fd) <= 1e-9


def test_diff_nonconstant_exponent():
    # d/du u^u = u^u (log u + 1)
    d = differentiate(parse("u^u"))
    u = 1.7
    expected = u ** u * (math.log(u) + 1.0)
    assert evaluate(d, u) == pytest.approx(expected, rel=1e-14)


def test_diff_random_trees_against_finite_difference():
    rng = random.Random(20250809)
    checked = 0
    while checked < 200:
        e = random_expr(rng, 6)
        u = rng.uniform(0.3, 2.5)
        h = 1e-5 * max(1.0, abs(u))
        if not tame_at(e, u, h):
            continue
        try:
            sym = evaluate(differentiate(e), u)
        except EvalDomainError:
            continue
        fd = central_diff(lambda x: evaluate(e, x), u, h)
        if abs(fd) > 1e4:
            continue
        assert abs(sym - fd) <= 1e-6 * max(1.0, abs(fd)), unparse(e)
        checked += 1


# ---------------------------------------------------------------------------
# printing round trip

_leaf = st.one_of(
    st.just(Variable()),
    st.builds(Constant, st.floats(min_value=-4.0, max_value=4.0,
                                  allow_nan=False).map(lambda x: round(x, 3))),
)


def _compound(children):
    return st.one_of(
        st.builds(Unary, st.sampled_from(("neg", "sin", "cos", "exp", "log", "sqrt")), children),
        st.builds(Binary, st.sampled_from(("+", "-", "*", "/")), children, children),
        st.builds(Binary, st.just("^"), children,
                  st.sampled_from((Constant(2.0), Constant(3.0), Constant(0.5),
                                   Constant(-1.0), Constant(-2.0)))),
        st.builds(Binary, st.just("^"), children, children),
    )


expr_trees = st.recursive(_leaf, _compound, max_leaves=16)


@settings(max_examples=300)
@given(expr_trees)
def test_unparse_parse_round_trip(e):
    assert parse(unparse(e)) == e


@given(expr_trees)
def test_text_round_trip_is_idempotent(e):
    text = unparse(e)
    again = unparse(parse(text))
    assert again == text
    assert parse(again) == parse(text)


def test_round_trip_on_sample_texts():
    for text in ("u", "u^2", "2*u^0.5", "-u^2", "sin(u)*cos(u)-1/u",
                 "1.5e-3*u + sqrt(u+2)", "u^-2", "-(2)", "(u+1)*(u-1)"):
        e = parse(text)
        assert parse(unparse(e)) == e


# ---------------------------------------------------------------------------
# profiles

def test_profile_derivatives_are_structural():
    p = Profile.from_text("u^2 + sin(u)")
    assert p.d1 == differentiate(p.expr)
    assert p.d2 == differentiate(p.d1)


def test_profile_first_derivative_matches_central_difference():
    p = Profile.from_text("u^3 - 2*u + exp(u/4)")
    for u in (0.5, 1.0, 2.0):
        fd = central_diff(p.value, u, 1e-6 * max(1.0, abs(u)))
        assert abs(p.deriv1(u) - fd) <= 1e-7 * max(1.0, abs(fd))


def test_profile_domain_enforced():
    p = Profile.from_text("u^0.5", domain=Interval(0.0, math.inf, open_lo=True))
    assert p.value(4.0) == 2.0
    with pytest.raises(EvalDomainError):
        p.value(0.0)
    with pytest.raises(EvalDomainError):
        p.value(-1.0)

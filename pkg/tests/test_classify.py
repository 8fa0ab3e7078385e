"""Tests for the realizability searches and the real witness curve."""

import math

from hypothesis import given, settings
from hypothesis import strategies as st
import pytest

from normed_forms import (
    TYPE_MM,
    Decision,
    DegenerateFormError,
    Form,
    Order3Verdict,
    PLUS_VARIANT_TYPES,
    PlusParams,
    Quadruple,
    curve_embedding,
    curve_phase,
    curve_quadruple,
    curve_sample,
    embedding_to_quadruple,
    full_classification,
    is_normed,
    make_minus_minus,
    make_plus,
    minus_minus_bounds,
    minus_minus_witnesses,
    order3_verdict,
    search_minus_minus,
    search_plus,
    type_of,
)

TOL = 1e-9


def close(a, b, tol=TOL):
    return abs(a - b) <= tol


def test_minus_minus_bounds_values():
    """Exact witness boxes for three definite forms."""
    assert minus_minus_bounds(Form(4, 2, 6)) == (2, 3, 2, 1)
    assert minus_minus_bounds(Form(2, 1, 3)) == (1, 2, 1, 1)
    assert minus_minus_bounds(Form(1, 0, 1)) == (1, 1, 1, 1)


def test_minus_minus_bounds_require_definite():
    """Indefinite forms have an unbounded witness curve."""
    with pytest.raises(ValueError):
        minus_minus_bounds(Form(1, 0, -1))


def test_witness_lists_for_example_family():
    """Complete witness enumerations for the small definite examples."""
    cases = {
        (2, 1, 3): [(-1, 2, 1, -1), (1, -2, -1, 1)],
        (2, -1, 3): [(-1, 2, -1, 1), (1, -2, 1, -1)],
        (2, 1, 4): [(0, -1, -2, 1), (0, 1, 2, -1)],
        (2, -1, 4): [(0, -1, 2, -1), (0, 1, -2, 1)],
        (3, 1, 5): [(-1, 1, -2, 1), (1, -1, 2, -1)],
        (3, -1, 5): [(-1, 1, 2, -1), (1, -1, -2, 1)],
        (1, 1, 6): [(-1, 5, -1, 0), (1, -5, 1, 0)],
        (1, 0, 7): [(-1, 7, 0, 0), (1, -7, 0, 0)],
    }
    for coeffs, expected in cases.items():
        hits, decision = minus_minus_witnesses(Form(*coeffs))
        assert decision is Decision.DECIDED
        assert [(q.a, q.b, q.c, q.d) for q in hits] == expected


def test_witnesses_of_sum_of_squares():
    """x^2 + y^2 has the four sign-symmetric witnesses."""
    hits, decision = minus_minus_witnesses(Form(1, 0, 1))
    assert decision is Decision.DECIDED
    assert [(q.a, q.b, q.c, q.d) for q in hits] == [
        (-1, 1, 0, 0),
        (0, 0, -1, 1),
        (0, 0, 1, -1),
        (1, -1, 0, 0),
    ]


def test_no_witness_for_doubled_form():
    """(4, 2, 6) provably admits no minus-minus witness."""
    hits, decision = minus_minus_witnesses(Form(4, 2, 6))
    assert hits == []
    assert decision is Decision.DECIDED
    assert search_minus_minus(Form(4, 2, 6)) == (None, Decision.DECIDED)


def test_negative_definite_has_no_witness():
    """f(s) <= 0 < f(x) f(y) rules every pairing out at once."""
    assert minus_minus_witnesses(Form(-2, -1, -3)) == ([], Decision.DECIDED)
    assert search_plus(Form(-1, 0, -1)) == (None, Decision.DECIDED)


def test_zero_diagonal_form_witnesses():
    """(0, k, 0) is realized by divisor pairs b d = -k."""
    hits, decision = minus_minus_witnesses(Form(0, 1, 0), box_bound=10)
    assert decision is Decision.DECIDED
    assert [(q.a, q.b, q.c, q.d) for q in hits] == [(0, -1, 0, 1), (0, 1, 0, -1)]


def test_indefinite_box_outcomes():
    """A hit decides; an empty box leaves the question open."""
    hits, decision = minus_minus_witnesses(Form(1, 3, 1), box_bound=10)
    assert decision is Decision.DECIDED
    assert Quadruple(-1, 1, 0, -3) in hits
    empty, decision = minus_minus_witnesses(Form(1, 3, 1), box_bound=0)
    assert empty == [] and decision is Decision.BOUNDED


def test_witness_search_rejects_degenerate():
    """Degenerate forms are outside both searches."""
    with pytest.raises(DegenerateFormError):
        minus_minus_witnesses(Form(1, 2, 1))
    with pytest.raises(DegenerateFormError):
        search_plus(Form(0, 0, 3))


@given(st.integers(1, 10), st.integers(-10, 10), st.integers(1, 10))
@settings(max_examples=80)
def test_witnesses_are_sound_and_sorted(m, k, n):
    """Each listed quadruple really constructs the form, in sorted order."""
    f = Form(m, k, n)
    if f.definiteness().value != "positive_definite":
        return
    hits, decision = minus_minus_witnesses(f)
    assert decision is Decision.DECIDED
    tuples = [(q.a, q.b, q.c, q.d) for q in hits]
    assert tuples == sorted(tuples)
    bounds = minus_minus_bounds(f)
    for quad in hits:
        pairing, form = make_minus_minus(quad)
        assert form == f
        assert is_normed(pairing, f)
        assert type_of(pairing, f) == TYPE_MM
        for value, bound in zip((quad.a, quad.b, quad.c, quad.d), bounds):
            assert abs(value) <= bound


def test_search_plus_examples():
    """Divisor-of-content representation search."""
    assert search_plus(Form(1, 0, 1)) == (PlusParams(1, 0, 1, 0, -1), Decision.DECIDED)
    assert search_plus(Form(4, 2, 6)) == (PlusParams(2, 1, 3, -1, 0), Decision.DECIDED)
    assert search_plus(Form(2, 1, 3)) == (None, Decision.DECIDED)
    assert search_plus(Form(1, 1, 6)) == (PlusParams(1, 1, 6, -1, 0), Decision.DECIDED)


@given(st.integers(1, 10), st.integers(-10, 10), st.integers(1, 10))
@settings(max_examples=80)
def test_search_plus_soundness(m, k, n):
    """Found parameters rebuild the form through all three constructors."""
    f = Form(m, k, n)
    if f.definiteness().value != "positive_definite":
        return
    params, decision = search_plus(f)
    assert decision is Decision.DECIDED
    if params is None:
        return
    assert params.r > 0
    assert f.content() % params.r == 0
    for variant in (1, 2, 3):
        pairing, form = make_plus(variant, params)
        assert form == f
        assert is_normed(pairing, f)
        assert type_of(pairing, f) == PLUS_VARIANT_TYPES[variant]


def test_full_classification_reports():
    """The three canonical shapes: all four types, plus only, minus only."""
    every = full_classification(Form(1, 0, 1))
    assert every.plus_params is not None and every.minus_quadruple is not None
    assert every.fully_decided
    plus_only = full_classification(Form(4, 2, 6))
    assert plus_only.plus_params == PlusParams(2, 1, 3, -1, 0)
    assert plus_only.minus_quadruple is None
    assert plus_only.fully_decided
    minus_only = full_classification(Form(2, 1, 3))
    assert minus_only.plus_params is None
    assert minus_only.minus_quadruple == Quadruple(-1, 2, 1, -1)
    assert minus_only.fully_decided


def test_full_classification_bounded_flags():
    """An indefinite miss is reported as open, and --strict style checks see it."""
    report = full_classification(Form(1, 3, 1), box_bound=0)
    assert report.plus_decision is Decision.BOUNDED
    assert report.minus_decision is Decision.BOUNDED
    assert not report.fully_decided


def test_order3_verdicts():
    """Class order of the derived form: 3, 1, or out of scope."""
    assert order3_verdict(Quadruple(1, -2, -1, 1)) is Order3Verdict.ORDER_3
    assert order3_verdict(Quadruple(-1, 5, -1, 0)) is Order3Verdict.ORDER_1
    assert order3_verdict(Quadruple(0, 1, 0, -1)) is Order3Verdict.NOT_APPLICABLE
    assert order3_verdict(Quadruple(1, 1, 1, 1)) is Order3Verdict.NOT_APPLICABLE


def test_curve_phase_values():
    """Circular and hyperbolic phase of the witness curve."""
    assert close(curve_phase(Form(4, 2, 6)), math.acos(2 / math.sqrt(96)))
    assert close(curve_phase(Form(2, -1, 3)), -math.acos(-1 / math.sqrt(24)))
    assert close(curve_phase(Form(1, 3, 1)), math.acosh(3 / 2))


def test_curve_sample_fixed_points():
    """Known exact curve points at theta = 0."""
    (pt,) = curve_sample(Form(4, 2, 6), [0.0])
    assert close(pt.a, 2) and close(pt.b, -2.5) and close(pt.c, 1) and close(pt.d, 0)
    (hpt,) = curve_sample(Form(1, 3, 1), [0.0])
    assert close(hpt.a, 1) and close(hpt.b, 8) and close(hpt.c, 3) and close(hpt.d, 0)


def test_curve_minus_branch_negates():
    """The second branch is the pointwise negation of the first."""
    (plus,) = curve_sample(Form(4, 2, 6), [0.35])
    (minus,) = curve_sample(Form(4, 2, 6), [0.35], branch=-1)
    for field in ("a", "b", "c", "d"):
        assert close(getattr(minus, field), -getattr(plus, field))


def test_curve_rejects_unusable_forms():
    """m > 0, n > 0 and nondegeneracy are required."""
    with pytest.raises(ValueError):
        curve_sample(Form(0, 1, 5), [0.0])
    with pytest.raises(ValueError):
        curve_sample(Form(-1, 0, -1), [0.0])
    with pytest.raises(DegenerateFormError):
        curve_sample(Form(1, 2, 1), [0.0])


@given(
    st.sampled_from([(4, 2, 6), (2, 1, 3), (1, 0, 1), (3, -1, 5), (1, 3, 1), (2, 5, 1)]),
    st.floats(min_value=-3.0, max_value=3.0, allow_nan=False),
)
@settings(max_examples=120)
def test_embedding_realizes_coefficients(coeffs, theta):
    """alpha^2 + eps gamma^2 = m, 2(alpha beta + eps gamma delta) = k, ..."""
    f = Form(*coeffs)
    eps = 1 if f.discriminant() < 0 else -1
    emb = curve_embedding(f, theta)
    got = emb.realized_coefficients(eps)
    for value, target in zip(got, f.coefficients()):
        assert close(value, target, 1e-7)


@given(
    st.sampled_from([(4, 2, 6), (2, 1, 3), (1, 0, 1), (3, -1, 5), (1, 3, 1), (2, 5, 1)]),
    st.floats(min_value=-2.0, max_value=2.0, allow_nan=False),
)
@settings(max_examples=120)
def test_quadruple_routes_agree(coeffs, theta):
    """curve_quadruple equals embedding_to_quadruple of the curve embedding."""
    f = Form(*coeffs)
    eps = 1 if f.discriminant() < 0 else -1
    direct = curve_quadruple(f, theta)
    via = embedding_to_quadruple(curve_embedding(f, theta), eps)
    for x, y in zip(direct, via):
        assert close(x, y, 1e-7)


@given(
    st.sampled_from([(4, 2, 6), (2, 1, 3), (1, 0, 1), (3, -1, 5)]),
    st.floats(min_value=0.0, max_value=6.3, allow_nan=False),
)
@settings(max_examples=150)
def test_curve_points_solve_witness_equations(coeffs, theta):
    """(a, b, c, d) on the curve satisfies the three equations over the reals."""
    f = Form(*coeffs)
    (pt,) = curve_sample(f, [theta])
    assert close(pt.a**2 - pt.c * pt.d, f.m, 1e-7)
    assert close(pt.a * pt.c - pt.b * pt.d, f.k, 1e-7)
    assert close(pt.c**2 - pt.a * pt.b, f.n, 1e-7)


@given(
    st.sampled_from([(4, 2, 6), (2, 1, 3), (1, 0, 1)]),
    st.floats(min_value=0.0, max_value=6.3, allow_nan=False),
)
@settings(max_examples=120)
def test_curve_points_respect_bounds(coeffs, theta):
    """Definite curve points stay inside the exact coordinate bounds."""
    f = Form(*coeffs)
    bounds = minus_minus_bounds(f)
    exact = (
        math.sqrt(4 * f.m**2 * f.n / abs(f.discriminant())),
        math.sqrt(4 * f.n**3 / abs(f.discriminant())),
        math.sqrt(4 * f.m * f.n**2 / abs(f.discriminant())),
        math.sqrt(4 * f.m**3 / abs(f.discriminant())),
    )
    (pt,) = curve_sample(f, [theta])
    for value, limit, floor_limit in zip((pt.a, pt.b, pt.c, pt.d), exact, bounds):
        assert abs(value) <= limit + 1e-7
        assert floor_limit == int(limit)


def test_triple_angle_identities():
    """b and d follow the tripled angle up to the fixed scale factors."""
    f = Form(4, 2, 6)
    phase = curve_phase(f)
    scale = 1 / math.sin(phase)
    for theta in (0.1, 0.7, 2.3):
        (pt,) = curve_sample(f, [theta])
        b_expected = (f.n / math.sqrt(f.m)) * math.sin(3 * (theta + phase)) * scale
        d_expected = (f.m / math.sqrt(f.n)) * math.sin(3 * theta) * scale
        assert close(pt.b, b_expected, 1e-7)
        assert close(pt.d, d_expected, 1e-7)

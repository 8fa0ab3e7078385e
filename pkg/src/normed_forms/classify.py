"""Deciding which pairing families realize a given form.

Two searches cover the four types.  A single parameter set (m, k, n, p, q)
feeds all three plus-type constructors at once, so realizability of types
(+,+), (-,+) and (+,-) reduces to finding a divisor r of the content with
f / r representing r.  Type (-,-) reduces to a quadruple (a, b, c, d) with

    a^2 - c d = m,    a c - b d = k,    c^2 - a b = n.

For positive definite forms both searches are complete: representation by a
definite form is a finite ellipse problem, and every minus-minus witness
obeys the exact coordinate bounds

    a^2 <= 4 m^2 n / |disc|    b^2 <= 4 n^3 / |disc|
    c^2 <= 4 m n^2 / |disc|    d^2 <= 4 m^3 / |disc|

derived from the trigonometric parametrization of the witness curve.  For
negative definite forms no normed pairing exists at all: the right side of
f(s(x, y)) = f(x) f(y) is positive on nonzero arguments while the left side
never is.  Indefinite forms get an honest box search; a miss is then merely
BOUNDED, not a proof.

The same curve is exposed numerically: theta sweeps out embeddings
(alpha, beta, gamma, delta) and quadruples realizing the form over the reals,
using circular functions in the definite case and hyperbolic ones in the
indefinite case.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from math import isqrt

from .forms import DegenerateFormError, Definiteness, Form, principal_form
from .pairings import PlusParams, Quadruple


class Decision(Enum):
    """Whether a search outcome is a proof or only a bounded scan."""

    DECIDED = "decided"
    BOUNDED = "bounded"


class Order3Verdict(Enum):
    """Order of the class of a derived form in the form class group."""

    NOT_APPLICABLE = "not-applicable"
    ORDER_1 = "order-1"
    ORDER_3 = "order-3"


@dataclass(frozen=True)
class CurvePoint:
    """One sample of the real witness curve."""

    theta: float
    a: float
    b: float
    c: float
    d: float


@dataclass(frozen=True)
class EmbeddingMatrix:
    """A real embedding (alpha, beta, gamma, delta) of a form.

    Realizes the form through alpha^2 + eps gamma^2 = m,
    2(alpha beta + eps gamma delta) = k, beta^2 + eps delta^2 = n, where eps
    is +1 in the circular case and -1 in the hyperbolic case.
    """

    alpha: float
    beta: float
    gamma: float
    delta: float

    def realized_coefficients(self, eps: int = 1) -> tuple[float, float, float]:
        """(m, k, n) this embedding induces, for checking against a form."""
        return (
            self.alpha * self.alpha + eps * self.gamma * self.gamma,
            2 * (self.alpha * self.beta + eps * self.gamma * self.delta),
            self.beta * self.beta + eps * self.delta * self.delta,
        )


@dataclass(frozen=True)
class ClassificationReport:
    """Joint outcome of the plus-family and minus-minus searches."""

    form: Form
    definiteness: Definiteness
    plus_params: PlusParams | None
    plus_decision: Decision
    minus_quadruple: Quadruple | None
    minus_decision: Decision

    @property
    def fully_decided(self) -> bool:
        return (
            self.plus_decision is Decision.DECIDED
            and self.minus_decision is Decision.DECIDED
        )


def _floor_sqrt_ratio(p: int, q: int) -> int:
    """floor(sqrt(p / q)) for p >= 0 < q, exactly."""
    return isqrt(p * q) // q


def minus_minus_bounds(form: Form) -> tuple[int, int, int, int]:
    """Exact per-coordinate bounds on minus-minus witnesses (definite only)."""
    if form.definiteness() is not Definiteness.POSITIVE_DEFINITE:
        raise ValueError("witness bounds hold for positive definite forms")
    m, k, n = form.coefficients()
    absd = -form.discriminant()
    return (
        _floor_sqrt_ratio(4 * m * m * n, absd),
        _floor_sqrt_ratio(4 * n * n * n, absd),
        _floor_sqrt_ratio(4 * m * n * n, absd),
        _floor_sqrt_ratio(4 * m * m * m, absd),
    )


def _scan_quadruples(
    form: Form, bounds: tuple[int, int, int, int]
) -> list[Quadruple]:
    """All quadruples inside the box solving the three witness equations.

    b and d are determined by (a, c) except in zero cases, which are handled
    exactly; a nondegenerate form never leaves a free coordinate.
    """
    m, k, n = form.coefficients()
    amax, bmax, cmax, dmax = bounds
    found: list[Quadruple] = []
    for a in range(-amax, amax + 1):
        for c in range(-cmax, cmax + 1):
            if a == 0 and c == 0:
                # forces m = n = 0; then b d = -k, one witness per divisor
                if m == 0 and n == 0 and k != 0:
                    for b in range(-bmax, bmax + 1):
                        if b == 0 or k % b:
                            continue
                        d = -(k // b)
                        if abs(d) <= dmax:
                            found.append(Quadruple(0, b, 0, d))
                continue
            if c == 0:
                # m = a^2, n = -a b, k = -b d
                if a * a != m or n % a:
                    continue
                b = -(n // a)
                if b == 0:
                    continue
                if k % b:
                    continue
                d = -(k // b)
            elif a == 0:
                # n = c^2, m = -c d, k = -b d
                if c * c != n or m % c:
                    continue
                d = -(m // c)
                if d == 0:
                    continue
                if k % d:
                    continue
                b = -(k // d)
            else:
                if (a * a - m) % c or (c * c - n) % a:
                    continue
                d = (a * a - m) // c
                b = (c * c - n) // a
                if a * c - b * d != k:
                    continue
            if abs(b) > bmax or abs(d) > dmax:
                continue
            quad = Quadruple(a, b, c, d)
            if quad.form() == form:
                found.append(quad)
    found.sort(key=lambda q: (q.a, q.b, q.c, q.d))
    return found


def minus_minus_witnesses(
    form: Form, box_bound: int = 100
) -> tuple[list[Quadruple], Decision]:
    """All minus-minus witnesses, with a flag for completeness.

    Positive definite: the exact bounds make the list complete (DECIDED).
    Negative definite: no normed pairing of any type exists (DECIDED, empty).
    Indefinite: a cube of side box_bound is scanned; an empty result is
    only BOUNDED.
    """
    kind = form.definiteness()
    if kind is Definiteness.DEGENERATE:
        raise DegenerateFormError("witness search requires a nondegenerate form")
    if kind is Definiteness.NEGATIVE_DEFINITE:
        return [], Decision.DECIDED
    if kind is Definiteness.POSITIVE_DEFINITE:
        return _scan_quadruples(form, minus_minus_bounds(form)), Decision.DECIDED
    box = (box_bound, box_bound, box_bound, box_bound)
    hits = _scan_quadruples(form, box)
    return hits, Decision.DECIDED if hits else Decision.BOUNDED


def search_minus_minus(
    form: Form, box_bound: int = 100
) -> tuple[Quadruple | None, Decision]:
    """First (lexicographically least) minus-minus witness, if any."""
    hits, decision = minus_minus_witnesses(form, box_bound)
    return (hits[0] if hits else None), decision


def search_plus(
    form: Form, box_bound: int = 100
) -> tuple[PlusParams | None, Decision]:
    """Parameters (m, k, n, p, q) realizing the form in the plus families.

    Needs a positive divisor r of the content with g = form / r representing
    r; then form = r * g and any of the three plus constructors on
    (g.m, g.k, g.n, p, q) is a witness.  Negative r would only negate both
    members of the pair (r, g) and gives nothing new.
    """
    kind = form.definiteness()
    if kind is Definiteness.DEGENERATE:
        raise DegenerateFormError("witness search requires a nondegenerate form")
    if kind is Definiteness.NEGATIVE_DEFINITE:
        return None, Decision.DECIDED
    exact = kind is Definiteness.POSITIVE_DEFINITE
    content = form.content()
    for r in _positive_divisors(content):
        g = Form(form.m // r, form.k // r, form.n // r)
        sol = g.represent(r, box_bound)
        if sol is not None:
            p, q = sol
            return PlusParams(g.m, g.k, g.n, p, q), Decision.DECIDED
    return None, Decision.DECIDED if exact else Decision.BOUNDED


def _positive_divisors(value: int) -> list[int]:
    divs: list[int] = []
    for d in range(1, isqrt(value) + 1):
        if value % d == 0:
            divs.append(d)
            if d * d != value:
                divs.append(value // d)
    return sorted(divs)


def full_classification(form: Form, box_bound: int = 100) -> ClassificationReport:
    """Run both searches and bundle the outcome.

    One witness parameter set serves all three plus types at once, so the
    report never shows a proper nonempty subset of them.
    """
    plus_params, plus_decision = search_plus(form, box_bound)
    quad, minus_decision = search_minus_minus(form, box_bound)
    return ClassificationReport(
        form=form,
        definiteness=form.definiteness(),
        plus_params=plus_params,
        plus_decision=plus_decision,
        minus_quadruple=quad,
        minus_decision=minus_decision,
    )


def order3_verdict(quad: Quadruple) -> Order3Verdict:
    """Class-group order of the form derived from a minus-minus quadruple.

    The class of such a form always has order dividing three, so a
    non-principal reduced form means order exactly three.  Only primitive
    positive definite derived forms are classified.
    """
    form = quad.form()
    if form.definiteness() is not Definiteness.POSITIVE_DEFINITE:
        return Order3Verdict.NOT_APPLICABLE
    if not form.is_primitive():
        return Order3Verdict.NOT_APPLICABLE
    reduced, _ = form.reduce()
    if reduced == principal_form(form.discriminant()):
        return Order3Verdict.ORDER_1
    return Order3Verdict.ORDER_3


def _curve_context(form: Form):
    """(phase, sin-like, cos-like, eps) for the witness curve of the form."""
    kind = form.definiteness()
    if kind is Definiteness.DEGENERATE:
        raise DegenerateFormError("the witness curve needs a nondegenerate form")
    m, k, n = form.coefficients()
    if m <= 0 or n <= 0:
        raise ValueError("the witness curve needs m > 0 and n > 0")
    if kind is Definiteness.POSITIVE_DEFINITE:
        phase = math.acos(k / math.sqrt(4 * m * n))
        if k < 0:
            phase = -phase
        return phase, math.sin, math.cos, 1
    phase = math.acosh(abs(k) / math.sqrt(4 * m * n))
    if k < 0:
        phase = -phase
    return phase, math.sinh, math.cosh, -1


def curve_phase(form: Form) -> float:
    """The phase offset of the witness curve."""
    return _curve_context(form)[0]


def curve_embedding(form: Form, theta: float, branch: int = 1) -> EmbeddingMatrix:
    """Point (alpha, beta, gamma, delta) of the real embedding curve."""
    phase, s, c, _ = _curve_context(form)
    m, _, n = form.coefficients()
    sm, sn = math.sqrt(m), math.sqrt(n)
    sign = 1 if branch >= 0 else -1
    return EmbeddingMatrix(
        alpha=sign * sm * c(theta),
        beta=sign * sn * c(theta + phase),
        gamma=sign * sm * s(theta),
        delta=sign * sn * s(theta + phase),
    )


def curve_quadruple(
    form: Form, theta: float, branch: int = 1
) -> tuple[float, float, float, float]:
    """Point (a, b, c, d) of the real minus-minus witness curve."""
    phase, s, c, _ = _curve_context(form)
    m, _, n = form.coefficients()
    sm, sn = math.sqrt(m), math.sqrt(n)
    sp = s(phase)
    sign = 1 if branch >= 0 else -1
    ca = c(theta + phase)
    cd = c(theta)
    return (
        sign * sm * s(3 * theta + phase) / sp,
        sign * (n / sm) * s(theta + phase) * (4 * ca * ca - 1) / sp,
        sign * sn * s(3 * theta + 2 * phase) / sp,
        sign * (m / sn) * s(theta) * (4 * cd * cd - 1) / sp,
    )


def embedding_to_quadruple(
    emb: EmbeddingMatrix, eps: int = 1
) -> tuple[float, float, float, float]:
    """Recover the quadruple a witness embedding induces.

    eps is +1 in the definite (circular) case and -1 in the indefinite
    (hyperbolic) case.  Requires alpha delta - beta gamma != 0.
    """
    alpha, beta, gamma, delta = emb.alpha, emb.beta, emb.gamma, emb.delta
    w = alpha * delta - beta * gamma
    if w == 0:
        raise ZeroDivisionError("embedding is degenerate")
    a = (delta * (alpha * alpha - eps * gamma * gamma) + 2 * alpha * beta * gamma) / w
    b = delta * (3 * beta * beta - eps * delta * delta) / w
    c = (gamma * (beta * beta - eps * delta * delta) + 2 * alpha * beta * delta) / w
    d = gamma * (3 * alpha * alpha - eps * gamma * gamma) / w
    return a, b, c, d


def curve_sample(form: Form, thetas, branch: int = 1) -> list[CurvePoint]:
    """Evaluate the witness curve at the given parameter values."""
    points = []
    for theta in thetas:
        a, b, c, d = curve_quadruple(form, theta, branch)
        points.append(CurvePoint(theta=float(theta), a=a, b=b, c=c, d=d))
    return points

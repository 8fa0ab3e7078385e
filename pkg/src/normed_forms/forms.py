"""Binary integer quadratic forms.

A form (m, k, n) is the polynomial m*x1^2 + k*x1*x2 + n*x2^2 with integer
coefficients.  This module provides evaluation, discriminants, definiteness,
Gauss reduction with transform tracking, principal forms, exact representation
search, and a sampled check of the semigroup property
f(x)f(y) in f(Z^2).

All arithmetic is arbitrary-precision integer arithmetic; nothing here uses
floating point.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd, isqrt

Vec2 = tuple[int, int]
Mat2 = tuple[tuple[int, int], tuple[int, int]]

IDENTITY: Mat2 = ((1, 0), (0, 1))


def mat_mul(a: Mat2, b: Mat2) -> Mat2:
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


def mat_det(a: Mat2) -> int:
    return a[0][0] * a[1][1] - a[0][1] * a[1][0]


class DegenerateFormError(ValueError):
    """Raised when an operation needs a nonzero discriminant."""


class Definiteness(enum.Enum):
    POSITIVE_DEFINITE = "positive_definite"
    NEGATIVE_DEFINITE = "negative_definite"
    INDEFINITE = "indefinite"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class Form:
    """The binary quadratic form m*x1^2 + k*x1*x2 + n*x2^2."""

    m: int
    k: int
    n: int

    def __call__(self, v: Vec2) -> int:
        x1, x2 = v
        return self.m * x1 * x1 + self.k * x1 * x2 + self.n * x2 * x2

    def __neg__(self) -> "Form":
        return Form(-self.m, -self.k, -self.n)

    def coefficients(self) -> tuple[int, int, int]:
        return (self.m, self.k, self.n)

    def discriminant(self) -> int:
        """k^2 - 4mn; always congruent to 0 or 1 mod 4."""
        return self.k * self.k - 4 * self.m * self.n

    def definiteness(self) -> Definiteness:
        d = self.discriminant()
        if d > 0:
            return Definiteness.INDEFINITE
        if d == 0:
            return Definiteness.DEGENERATE
        # d < 0 forces m*n > 0, so the sign of m decides.
        if self.m > 0:
            return Definiteness.POSITIVE_DEFINITE
        return Definiteness.NEGATIVE_DEFINITE

    def is_zero(self) -> bool:
        return self.m == 0 and self.k == 0 and self.n == 0

    def content(self) -> int:
        """gcd of the coefficients.  Errors on the zero form."""
        if self.is_zero():
            raise ValueError("zero form has no content")
        return gcd(self.m, self.k, self.n)

    def is_primitive(self) -> bool:
        return self.content() == 1

    def content_and_primitive(self) -> tuple[int, "Form"]:
        g = self.content()
        return g, Form(self.m // g, self.k // g, self.n // g)

    def doubled_gram(self) -> Mat2:
        """The integer matrix ((2m, k), (k, 2n)) of the doubled polarization.

        For integer vectors u, v the product u . (doubled gram) . v equals
        twice the polar bilinear value, and is always an integer even when k
        is odd.
        """
        return ((2 * self.m, self.k), (self.k, 2 * self.n))

    def transform(self, mat: Mat2) -> "Form":
        """The form x |-> f(mat @ x) for a determinant-1 integer matrix."""
        if mat_det(mat) != 1:
            raise ValueError("transform matrix must have determinant 1")
        (a, b), (c, d) = mat
        m2 = self((a, c))
        n2 = self((b, d))
        k2 = 2 * self.m * a * b + self.k * (a * d + b * c) + 2 * self.n * c * d
        return Form(m2, k2, n2)

    def reduce(self) -> tuple["Form", Mat2]:
        """Gauss-reduce a primitive positive definite form.

        Returns (g, M) where M has determinant 1 and g = self.transform(M) is
        the unique reduced representative: |k| <= m <= n with k >= 0 whenever
        |k| = m or m = n.
        """
        if self.definiteness() is not Definiteness.POSITIVE_DEFINITE:
            raise ValueError("reduction requires a positive definite form")
        if not self.is_primitive():
            raise ValueError("reduction requires a primitive form")
        f = self
        acc = IDENTITY
        while True:
            m, k, n = f.m, f.k, f.n
            if k > m or k <= -m:
                # translate k into (-m, m]
                t = (m - k) // (2 * m)
                step: Mat2 = ((1, t), (0, 1))
            elif m > n:
                step = ((0, -1), (1, 0))
            elif k < 0 and m == n:
                # k = -m cannot reach here: translation keeps k in (-m, m]
                step = ((0, -1), (1, 0))
            else:
                break
            f = f.transform(step)
            acc = mat_mul(acc, step)
        return f, acc

    def is_reduced(self) -> bool:
        if self.definiteness() is not Definiteness.POSITIVE_DEFINITE:
            return False
        m, k, n = self.m, self.k, self.n
        if not (abs(k) <= m <= n):
            return False
        if k < 0 and (abs(k) == m or m == n):
            return False
        return True

    def represent(self, target: int, box_bound: int = 100) -> Vec2 | None:
        """Search for an integer vector v with self(v) == target.

        Positive definite forms: exact decision.  The solution set lies on an
        ellipse, so |x2| <= sqrt(4*m*target/|disc|) and for each x2 the value
        x1 solves a quadratic with discriminant disc*x2^2 + 4*m*target, checked
        by exact integer square root.  box_bound is ignored and None is a
        proof of non-representability.

        Negative definite forms delegate to -f with -target (same witness).

        Indefinite and degenerate forms: bounded box scan over
        |x1|, |x2| <= box_bound; None only means "not found within the box".

        The returned witness is the first in lexicographic (x2, x1) order.
        """
        defin = self.definiteness()
        if defin is Definiteness.NEGATIVE_DEFINITE:
            return (-self).represent(-target, box_bound)
        if defin is Definiteness.POSITIVE_DEFINITE:
            if target < 0:
                return None
            if target == 0:
                return (0, 0)
            m, k = self.m, self.k
            absd = -self.discriminant()
            # floor(sqrt(4*m*target/absd)) computed exactly
            bound = isqrt(4 * m * target * absd) // absd
            two_m = 2 * m
            for x2 in range(-bound, bound + 1):
                disc = self.discriminant() * x2 * x2 + 4 * m * target
                if disc < 0:
                    continue
                s = isqrt(disc)
                if s * s != disc:
                    continue
                for numer in (-k * x2 - s, -k * x2 + s):
                    if numer % two_m == 0:
                        return (numer // two_m, x2)
            return None
        # indefinite or degenerate: bounded search only
        for x2 in range(-box_bound, box_bound + 1):
            for x1 in range(-box_bound, box_bound + 1):
                if self((x1, x2)) == target:
                    return (x1, x2)
        return None


@dataclass(frozen=True)
class SemigroupReport:
    """Outcome of sampling the semigroup property f(x)f(y) in f(Z^2)."""

    form: Form
    sample_bound: int
    search_bound: int
    pairs_checked: int
    products_checked: int
    counterexample_count: int
    counterexamples: tuple[tuple[Vec2, Vec2], ...]
    decided: bool

    @property
    def has_counterexample(self) -> bool:
        return self.counterexample_count > 0


def semigroup_probe(form: Form, sample_bound: int = 3,
                    search_bound: int = 100,
                    max_recorded: int = 20) -> SemigroupReport:
    """Probe whether every product f(x)f(y) is itself a value of f.

    Samples all pairs x, y in the box |xi| <= sample_bound.  For definite
    forms the inner representability search is exact, so each recorded
    counterexample pair is a proof that the form lacks the semigroup
    property; for indefinite forms the report is advisory only (decided is
    False).
    """
    if form.discriminant() == 0:
        raise DegenerateFormError("semigroup probe requires a nondegenerate form")
    decided = form.definiteness() in (
        Definiteness.POSITIVE_DEFINITE,
        Definiteness.NEGATIVE_DEFINITE,
    )
    pts = [
        (x1, x2)
        for x1 in range(-sample_bound, sample_bound + 1)
        for x2 in range(-sample_bound, sample_bound + 1)
    ]
    values = {p: form(p) for p in pts}
    representable: dict[int, bool] = {}
    recorded: list[tuple[Vec2, Vec2]] = []
    count = 0
    pairs = 0
    for x in pts:
        fx = values[x]
        for y in pts:
            pairs += 1
            t = fx * values[y]
            hit = representable.get(t)
            if hit is None:
                hit = form.represent(t, search_bound) is not None
                representable[t] = hit
            if not hit:
                count += 1
                if len(recorded) < max_recorded:
                    recorded.append((x, y))
    return SemigroupReport(
        form=form,
        sample_bound=sample_bound,
        search_bound=search_bound,
        pairs_checked=pairs,
        products_checked=len(representable),
        counterexample_count=count,
        counterexamples=tuple(recorded),
        decided=decided,
    )


def principal_form(delta: int) -> Form:
    """The principal form of discriminant delta.

    (1, 0, -delta/4) for delta = 0 mod 4, (1, 1, (1-delta)/4) for
    delta = 1 mod 4.
    """
    if delta == 0:
        raise ValueError("discriminant must be nonzero")
    r = delta % 4
    if r == 0:
        return Form(1, 0, -delta // 4)
    if r == 1:
        return Form(1, 1, (1 - delta) // 4)
    raise ValueError("discriminant must be 0 or 1 mod 4")


def reduced_forms(delta: int) -> list[Form]:
    """All primitive reduced positive definite forms of discriminant delta.

    Deterministic order: ascending |k|, then m, then sign of k (+ first).
    """
    if delta >= 0:
        raise ValueError("reduced-form enumeration requires delta < 0")
    if delta % 4 not in (0, 1):
        raise ValueError("discriminant must be 0 or 1 mod 4")
    out: list[Form] = []
    k = delta % 2
    while k * k <= -delta // 3:
        mn4 = k * k - delta
        if mn4 % 4 == 0:
            mn = mn4 // 4
            for m in range(max(k, 1), isqrt(mn) + 1):
                if mn % m:
                    continue
                n = mn // m
                if gcd(m, k, n) != 1:
                    continue
                out.append(Form(m, k, n))
                if 0 < k < m < n:
                    out.append(Form(m, -k, n))
        k += 2
    return out

"""Rank-2 lattices in the quadratic algebra Q(tau), tau^2 = Delta.

One exact model covers both targets of a normed pairing: for Delta < 0 the
algebra embeds in the complex numbers (tau = i sqrt(|Delta|)), for Delta > 0
in the split algebra of hyperbolic numbers (tau = j sqrt(Delta), j^2 = +1).
Elements are u + v tau with rational u, v; norm(u + v tau) = u^2 - Delta v^2
and trace = 2u, both exact Fractions.

A lattice is the Z-span of two independent elements.  Every such lattice has
a unique canonical basis (r, zeta): r is the least positive rational it
contains, zeta = u + v tau has the least positive v, and u is reduced into
the balanced range (-r/2, r/2].  Lattices are compared through this canonical
form, while the constructor preserves whatever ordered basis it was given
(so a basis found by embed_form still reads off the intended form).

The four multiplicative couplings are

    sigma1(z, w) = z w         sigma2(z, w) = conj(z) w
    sigma3(z, w) = z conj(w)   sigma4(z, w) = conj(z w)

Stability of a lattice under sigma1..sigma3 is a single condition, and stable
integer-normed lattices are exactly the ideals of the quadratic order of the
matching discriminant.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt

from . import forms as _forms
from .forms import DegenerateFormError, Form
from .matembed import Sublattice

Rational = int | Fraction


@dataclass(frozen=True)
class Context:
    """Fixes the algebra: tau^2 = delta, with delta = 0 or 1 mod 4, nonzero."""

    delta: int

    def __post_init__(self) -> None:
        if self.delta == 0:
            raise ValueError("delta must be nonzero")
        if self.delta % 4 not in (0, 1):
            raise ValueError("delta must be 0 or 1 mod 4")

    @property
    def eps(self) -> int:
        """+1 for the complex case (delta < 0), -1 for the hyperbolic case."""
        return 1 if self.delta < 0 else -1

    def elem(self, u: Rational, v: Rational = 0) -> "QuadElem":
        return QuadElem(self, Fraction(u), Fraction(v))

    def one(self) -> "QuadElem":
        return self.elem(1)

    def tau(self) -> "QuadElem":
        return self.elem(0, 1)

    def order_generator(self) -> "QuadElem":
        """tau/2 for delta = 0 mod 4, (1 + tau)/2 for delta = 1 mod 4."""
        if self.delta % 4 == 0:
            return self.elem(0, Fraction(1, 2))
        return self.elem(Fraction(1, 2), Fraction(1, 2))


@dataclass(frozen=True)
class QuadElem:
    """u + v tau with rational coordinates."""

    ctx: Context
    u: Fraction
    v: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "u", Fraction(self.u))
        object.__setattr__(self, "v", Fraction(self.v))

    def _check(self, other: "QuadElem") -> None:
        if self.ctx != other.ctx:
            raise ValueError("elements from different contexts")

    def __add__(self, other: "QuadElem") -> "QuadElem":
        self._check(other)
        return QuadElem(self.ctx, self.u + other.u, self.v + other.v)

    def __sub__(self, other: "QuadElem") -> "QuadElem":
        self._check(other)
        return QuadElem(self.ctx, self.u - other.u, self.v - other.v)

    def __neg__(self) -> "QuadElem":
        return QuadElem(self.ctx, -self.u, -self.v)

    def __mul__(self, other):
        if isinstance(other, QuadElem):
            self._check(other)
            d = self.ctx.delta
            return QuadElem(
                self.ctx,
                self.u * other.u + d * self.v * other.v,
                self.u * other.v + self.v * other.u,
            )
        return QuadElem(self.ctx, self.u * other, self.v * other)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, scalar):
        return QuadElem(self.ctx, self.u / scalar, self.v / scalar)

    def conj(self) -> "QuadElem":
        return QuadElem(self.ctx, self.u, -self.v)

    def norm(self) -> Fraction:
        """u^2 - delta v^2 = z * conj(z)."""
        return self.u * self.u - self.ctx.delta * self.v * self.v

    def trace(self) -> Fraction:
        return 2 * self.u

    def is_zero(self) -> bool:
        return self.u == 0 and self.v == 0

    def is_rational(self) -> bool:
        return self.v == 0

    def is_quadratic_integer(self) -> bool:
        """Non-rational with integer trace and norm."""
        return (
            self.v != 0
            and self.trace().denominator == 1
            and self.norm().denominator == 1
        )

    def __str__(self) -> str:
        return f"({self.u} + {self.v} tau)"


def sigma(k: int, z: QuadElem, w: QuadElem) -> QuadElem:
    """The four couplings: zw, conj(z)w, z conj(w), conj(zw)."""
    if k == 1:
        return z * w
    if k == 2:
        return z.conj() * w
    if k == 3:
        return z * w.conj()
    if k == 4:
        return (z * w).conj()
    raise ValueError("coupling index must be 1..4")


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with s*a + t*b = g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        return -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _canonical_data(gens) -> tuple[Fraction, Fraction, Fraction]:
    """Canonical (r, u_zeta, v_zeta) of the Z-span of the given elements.

    Raises when the span has rank < 2.
    """
    den = 1
    for g in gens:
        den = den * g.u.denominator // gcd(den, g.u.denominator)
        den = den * g.v.denominator // gcd(den, g.v.denominator)
    rows = [(int(g.u * den), int(g.v * den)) for g in gens]

    cur: tuple[int, int] | None = None
    rationals: list[int] = []
    for a, b in rows:
        if b == 0:
            rationals.append(a)
            continue
        if cur is None:
            cur = (a, b)
            continue
        a1, b1 = cur
        g, s, t = _ext_gcd(b1, b)
        # unimodular 2x2 change of basis: det [[s, t], [b/g, -b1/g]] = -1
        cur = (s * a1 + t * a, g)
        rationals.append((b // g) * a1 - (b1 // g) * a)
    if cur is None:
        raise ValueError("generators span no tau direction; rank < 2")
    if cur[1] < 0:
        cur = (-cur[0], -cur[1])
    r0 = gcd(*rationals) if rationals else 0
    if r0 == 0:
        raise ValueError("generators contain no nonzero rational; rank < 2")
    # balanced residue of the rational part of zeta
    u0 = cur[0] % r0
    if 2 * u0 > r0:
        u0 -= r0
    return Fraction(r0, den), Fraction(u0, den), Fraction(cur[1], den)


@dataclass(frozen=True, eq=False)
class Lattice:
    """Z-span of two independent elements of a context.

    The ordered generator pair is preserved; equality and hashing go through
    the canonical (r, zeta) basis.
    """

    ctx: Context
    e1: QuadElem
    e2: QuadElem
    _canon: tuple[Fraction, Fraction, Fraction] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        if self.e1.ctx != self.ctx or self.e2.ctx != self.ctx:
            raise ValueError("generators from a different context")
        if self.e1.u * self.e2.v - self.e2.u * self.e1.v == 0:
            raise ValueError("generators are linearly dependent")
        object.__setattr__(self, "_canon", _canonical_data([self.e1, self.e2]))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Lattice)
            and self.ctx == other.ctx
            and self._canon == other._canon
        )

    def __hash__(self) -> int:
        return hash((self.ctx.delta, self._canon))

    def canonical_basis(self) -> "CanonicalBasis":
        r, u, v = self._canon
        return CanonicalBasis(r=r, zeta=QuadElem(self.ctx, u, v))

    def canonicalized(self) -> "Lattice":
        r, u, v = self._canon
        return Lattice(self.ctx, self.ctx.elem(r), QuadElem(self.ctx, u, v))

    def contains(self, z: QuadElem) -> bool:
        if z.ctx != self.ctx:
            raise ValueError("element from a different context")
        det = self.e1.u * self.e2.v - self.e2.u * self.e1.v
        c1 = (z.u * self.e2.v - z.v * self.e2.u) / det
        c2 = (z.v * self.e1.u - z.u * self.e1.v) / det
        return c1.denominator == 1 and c2.denominator == 1

    def is_subset_of(self, other: "Lattice") -> bool:
        return other.contains(self.e1) and other.contains(self.e2)

    def discriminant(self) -> Fraction:
        """4 delta (v1 u2 - v2 u1)^2; an integer for integer-normed lattices."""
        cross = self.e1.v * self.e2.u - self.e2.v * self.e1.u
        return 4 * self.ctx.delta * cross * cross

    def to_form(self) -> Form:
        """(norm(e1), trace(e1 conj(e2)), norm(e2)) on a properly oriented basis.

        The basis is used in the orientation matching (1, tau); generators are
        swapped if needed.  Requires the three values to be integers.
        """
        a, b = self.e1, self.e2
        if a.u * b.v - b.u * a.v < 0:
            a, b = b, a
        m = a.norm()
        n = b.norm()
        k = (a * b.conj()).trace()
        if m.denominator != 1 or n.denominator != 1 or k.denominator != 1:
            raise ValueError("lattice is not integer-normed")
        return Form(int(m), int(k), int(n))

    def is_integer_normed(self) -> bool:
        return (
            self.e1.norm().denominator == 1
            and self.e2.norm().denominator == 1
            and (self.e1 * self.e2.conj()).trace().denominator == 1
        )

    def scale(self, c: Rational) -> "Lattice":
        if c == 0:
            raise ValueError("cannot scale a lattice by zero")
        return Lattice(self.ctx, self.e1 * c, self.e2 * c)

    def stable_under(self, k: int) -> bool:
        """Closure of sigma_k on all ordered generator pairs."""
        for z in (self.e1, self.e2):
            for w in (self.e1, self.e2):
                if not self.contains(sigma(k, z, w)):
                    return False
        return True

    def conjugate(self) -> "Lattice":
        return hnf_from_generators(self.ctx, [self.e1.conj(), self.e2.conj()])

    def __mul__(self, other: "Lattice") -> "Lattice":
        """The lattice generated by all pairwise products."""
        if not isinstance(other, Lattice):
            return NotImplemented
        if self.ctx != other.ctx:
            raise ValueError("lattices from different contexts")
        gens = [z * w for z in (self.e1, self.e2) for w in (other.e1, other.e2)]
        return hnf_from_generators(self.ctx, gens)

    def is_ideal_of(self, delta_star: int) -> bool:
        """Is L contained in and stable under the order of discriminant delta_star?

        delta_star must generate the same quadratic extension: delta/delta_star
        a positive rational square.
        """
        order = order_lattice(self.ctx, delta_star)
        omega = order.e2
        return (
            self.is_subset_of(order)
            and self.contains(omega * self.e1)
            and self.contains(omega * self.e2)
        )

    def is_principal(self) -> bool:
        """Whether the reduced primitive form of L is the principal form.

        Only for definite contexts (delta < 0), where reduction theory gives
        a decision.
        """
        if self.ctx.delta >= 0:
            raise ValueError("principality test requires delta < 0")
        form = self.to_form()
        _, primitive = form.content_and_primitive()
        reduced, _ = primitive.reduce()
        return reduced == _forms.principal_form(primitive.discriminant())

    def cube_is_principal(self) -> bool:
        """Principality of L*L*L (content-normalized inside is_principal)."""
        return (self * self * self).is_principal()

    def matrix_embedding(self, k: int) -> Sublattice:
        """The matrix model of a sigma_k-stable integer-normed lattice.

        In the canonical basis (r, zeta), multiplication by zeta (k = 1) or by
        conj(zeta) (k = 2, 3) acts by an integer matrix A with
        det(x1 A + x2 rE) = norm(x1 zeta + x2 r); returns Sublattice(A, r).
        """
        if k not in (1, 2, 3):
            raise ValueError("matrix model exists for couplings 1..3")
        if not self.stable_under(k):
            raise ValueError("lattice is not stable under the requested coupling")
        basis = self.canonical_basis()
        r = basis.r
        zeta = basis.zeta
        if r.denominator != 1 or not zeta.is_quadratic_integer():
            raise ValueError("lattice is not integer-normed")
        rr = int(r)
        t = int(zeta.trace())
        nm = int(zeta.norm())
        if nm % rr:
            raise ValueError("norm of zeta is not divisible by r")
        if k == 1:
            # columns: zeta * r = (0, r), zeta^2 = t zeta - nm
            a = ((0, -nm // rr), (rr, t))
        else:
            # columns: conj(zeta) * r = (t r, -r), conj(zeta) zeta = nm
            a = ((t, nm // rr), (-rr, 0))
        return Sublattice(a, rr)


@dataclass(frozen=True)
class CanonicalBasis:
    """(r, zeta): least positive rational and a completing generator."""

    r: Fraction
    zeta: QuadElem


def hnf_from_generators(ctx: Context, gens) -> Lattice:
    """The lattice spanned by any finite generating set, in canonical basis."""
    gens = list(gens)
    if not gens:
        raise ValueError("no generators")
    for g in gens:
        if g.ctx != ctx:
            raise ValueError("generator from a different context")
    r, u, v = _canonical_data(gens)
    return Lattice(ctx, ctx.elem(r), QuadElem(ctx, u, v))


def quadratic_order(delta: int) -> Lattice:
    """The maximal-by-discriminant order span(1, tau/2) or span(1, (1+tau)/2)."""
    ctx = Context(delta)
    return Lattice(ctx, ctx.one(), ctx.order_generator())


def order_lattice(ctx: Context, delta_star: int) -> Lattice:
    """The order of discriminant delta_star written in ctx coordinates.

    Requires delta_star to generate the same quadratic extension as the
    context, i.e. ctx.delta / delta_star a positive rational square.
    """
    if delta_star == 0 or delta_star % 4 not in (0, 1):
        raise ValueError("delta_star must be a discriminant")
    ratio = Fraction(ctx.delta, delta_star)
    if ratio <= 0:
        raise ValueError("context mismatch: discriminants of opposite sign")
    sn, sd = isqrt(ratio.numerator), isqrt(ratio.denominator)
    if sn * sn != ratio.numerator or sd * sd != ratio.denominator:
        raise ValueError("context mismatch: discriminant ratio is not a square")
    s = Fraction(sn, sd)  # tau = s * tau_star
    if delta_star % 4 == 0:
        omega = ctx.elem(0, Fraction(1, 2) / s)
    else:
        omega = ctx.elem(Fraction(1, 2), Fraction(1, 2) / s)
    return Lattice(ctx, ctx.one(), omega)


def embed_form(form: Form, height_bound: int = 10) -> Lattice | None:
    """Search for a lattice whose basis realizes the given form exactly.

    Seeks e1, e2 in Q(tau), tau^2 = disc(form), with norm(e1) = m,
    trace(e1 conj(e2)) = k, norm(e2) = n, positively oriented.  e1 runs over
    (a + b tau)/d with gcd(a, b, d) = 1 and max(|a|, |b|, d) <= height_bound
    in increasing height; e2 is then solved for exactly.  Returns the first
    hit, or None if the search box is exhausted (not a proof of
    non-existence).
    """
    delta = form.discriminant()
    if delta == 0:
        raise DegenerateFormError("embedding requires a nondegenerate form")
    from .forms import Definiteness

    if form.definiteness() is Definiteness.NEGATIVE_DEFINITE:
        # norms in the delta < 0 algebra are positive; no lattice exists
        return None
    ctx = Context(delta)
    m, k, n = form.m, form.k, form.n
    for h in range(1, height_bound + 1):
        for d in range(1, h + 1):
            for a in range(-h, h + 1):
                for b in range(-h, h + 1):
                    if max(abs(a), abs(b), d) != h:
                        continue
                    if gcd(a, gcd(b, d)) != 1:
                        continue
                    if a * a - delta * b * b != m * d * d:
                        continue
                    e1 = QuadElem(ctx, Fraction(a, d), Fraction(b, d))
                    e2 = _solve_second_generator(ctx, e1, k, n)
                    if e2 is not None:
                        return Lattice(ctx, e1, e2)
    return None


def _sqrt_fraction(x: Fraction) -> Fraction | None:
    if x < 0:
        return None
    sn, sd = isqrt(x.numerator), isqrt(x.denominator)
    if sn * sn == x.numerator and sd * sd == x.denominator:
        return Fraction(sn, sd)
    return None


def _solve_second_generator(
    ctx: Context, e1: QuadElem, k: int, n: int
) -> QuadElem | None:
    """Exact solve of trace(e1 conj(e2)) = k, norm(e2) = n, orientation > 0."""
    delta = ctx.delta
    u1, v1 = e1.u, e1.v
    candidates: list[tuple[Fraction, Fraction]] = []
    if u1 != 0:
        # x = (k/2 + delta v1 y) / u1, then a quadratic in y
        qa = -Fraction(delta) * e1.norm() / (u1 * u1)
        qb = Fraction(k) * delta * v1 / (u1 * u1)
        qc = Fraction(k * k, 4) / (u1 * u1) - n
        if qa == 0:
            if qb != 0:
                ys = [-qc / qb]
            else:
                ys = []
        else:
            disc = qb * qb - 4 * qa * qc
            root = _sqrt_fraction(disc)
            if root is None:
                ys = []
            else:
                ys = sorted({(-qb - root) / (2 * qa), (-qb + root) / (2 * qa)})
        for y in ys:
            x = (Fraction(k, 2) + delta * v1 * y) / u1
            candidates.append((y, x))
    else:
        # trace condition pins y; norm condition gives x^2
        y = Fraction(-k) / (2 * delta * v1)
        xx = n + delta * y * y
        root = _sqrt_fraction(xx)
        if root is not None:
            for x in sorted({root, -root}):
                candidates.append((y, x))
    for y, x in sorted(candidates):
        e2 = QuadElem(ctx, x, y)
        if u1 * y - x * v1 <= 0:
            continue
        if e2.norm() == n and (e1 * e2.conj()).trace() == k:
            return e2
    return None

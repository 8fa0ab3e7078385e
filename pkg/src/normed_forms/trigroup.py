"""The triple bracket of a quadratic form and the pairings it induces.

For a form f with polar bilinear form F (possibly half-integer valued), the
bracket

    [x, y, e] = -F(x, y) e + F(x, e) y + F(y, e) x

is integer-valued on integer vectors and satisfies
f([x, y, e]) = f(x) f(y) f(e).  Internally everything runs on the doubled
polarization (an integer matrix), with an exact final halving.

Anchoring the bracket at a base vector e0 with g(e0) = r != 0 produces three
bilinear pairings normed for f = r*g; they coincide, matrix for matrix, with
the three plus-type families of make_plus.
"""

from __future__ import annotations

from .forms import Form, Vec2
from .pairings import Pairing, PlusParams, make_plus


def bracket(form: Form, x: Vec2, y: Vec2, e: Vec2) -> Vec2:
    """[x, y, e] = -F(x, y) e + F(x, e) y + F(y, e) x, exactly.

    Computed via the doubled polarization and halved at the end; the halving
    is always exact for integer inputs.
    """
    (g11, g12), (_, g22) = form.doubled_gram()

    def pol2(u: Vec2, v: Vec2) -> int:
        # twice the polar form F(u, v)
        return g11 * u[0] * v[0] + g12 * (u[0] * v[1] + u[1] * v[0]) + g22 * u[1] * v[1]

    txy = pol2(x, y)
    txe = pol2(x, e)
    tye = pol2(y, e)
    w1 = -txy * e[0] + txe * y[0] + tye * x[0]
    w2 = -txy * e[1] + txe * y[1] + tye * x[1]
    if w1 % 2 or w2 % 2:
        raise ArithmeticError("bracket halving failed; non-integer input?")
    return (w1 // 2, w2 // 2)


def bracket_is_multiplicative(form: Form) -> bool:
    """Decide f([x, y, e]) == f(x) f(y) f(e) as a polynomial identity.

    The defect polynomial has degree <= 2 in each of the six variables, so
    the grid {0, 1, 2}^6 decides it exactly.  (The identity holds for every
    integer form; this is the independent check.)
    """
    m, k, n = form.m, form.k, form.n
    g11, g12, g22 = 2 * m, k, 2 * n
    pts = [(x1, x2) for x1 in (0, 1, 2) for x2 in (0, 1, 2)]
    npts = len(pts)
    fvals = [m * p[0] * p[0] + k * p[0] * p[1] + n * p[1] * p[1] for p in pts]
    pol = [
        [
            g11 * p[0] * q[0] + g12 * (p[0] * q[1] + p[1] * q[0]) + g22 * p[1] * q[1]
            for q in pts
        ]
        for p in pts
    ]
    for i in range(npts):
        xi = pts[i]
        fx = fvals[i]
        poli = pol[i]
        for j in range(npts):
            yj = pts[j]
            fxy = fx * fvals[j]
            txy = poli[j]
            polj = pol[j]
            for l in range(npts):
                e = pts[l]
                txe = poli[l]
                tye = polj[l]
                w1 = -txy * e[0] + txe * yj[0] + tye * xi[0]
                w2 = -txy * e[1] + txe * yj[1] + tye * xi[1]
                if w1 % 2 or w2 % 2:
                    return False
                w1 //= 2
                w2 //= 2
                if m * w1 * w1 + k * w1 * w2 + n * w2 * w2 != fxy * fvals[l]:
                    return False
    return True


def anchored_pairings(
    base: Form, e0: Vec2
) -> tuple[tuple[Pairing, Form], tuple[Pairing, Form], tuple[Pairing, Form]]:
    """The three pairings obtained by anchoring the bracket of f = r*g at e0.

    r = g(e0) must be nonzero.  With the bracket taken for f, the three maps

        (x, y) |-> [x, y, e0]/r,  [y, e0, x]/r,  [x, e0, y]/r

    are integer bilinear pairings normed for f, of types (+,+), (-,+), (+,-),
    and equal exactly to make_plus(1|2|3, PlusParams(g.m, g.k, g.n, *e0)).
    """
    r = base(e0)
    if r == 0:
        raise ValueError("anchor vector must have nonzero form value")
    f = Form(r * base.m, r * base.k, r * base.n)
    basis = ((1, 0), (0, 1))

    def entry(w: int) -> int:
        if w % r:
            raise ArithmeticError("anchored pairing entries must be divisible by r")
        return w // r

    def build(component) -> Pairing:
        rows1 = []
        rows2 = []
        for bi in basis:
            row1 = []
            row2 = []
            for bj in basis:
                z = component(bi, bj)
                row1.append(entry(z[0]))
                row2.append(entry(z[1]))
            rows1.append(tuple(row1))
            rows2.append(tuple(row2))
        return Pairing((rows1[0], rows1[1]), (rows2[0], rows2[1]))

    s1 = build(lambda x, y: bracket(f, x, y, e0))
    s2 = build(lambda x, y: bracket(f, y, e0, x))
    s3 = build(lambda x, y: bracket(f, x, e0, y))
    return (s1, f), (s2, f), (s3, f)


def anchored_match_plus(base: Form, e0: Vec2) -> bool:
    """Check the anchored pairings equal the three plus families exactly."""
    params = PlusParams(base.m, base.k, base.n, e0[0], e0[1])
    got = anchored_pairings(base, e0)
    for variant in (1, 2, 3):
        expect_pairing, expect_form = make_plus(variant, params)
        pairing, form = got[variant - 1]
        if pairing != expect_pairing or form != expect_form:
            return False
    return True

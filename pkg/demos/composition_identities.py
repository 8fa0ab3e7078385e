#!/usr/bin/env python3
"""Walk through the four families of normed pairings on a worked example.

A pairing s: Z^2 x Z^2 -> Z^2 is normed for a form f when
f(s(x, y)) = f(x) f(y) holds identically.  The classical model is the
Brahmagupta two-square identity; this script builds it, then the other
three sign types, and inspects the one-sided determinants that define
the type (eps1; eps2).
"""

from normed_forms import (
    PLUS_VARIANT_TYPES,
    Form,
    PlusParams,
    Quadruple,
    is_normed,
    left_map_det,
    make_minus_minus,
    make_plus,
    right_map_det,
    type_of,
)


def show(title):
    print()
    print(title)
    print("-" * len(title))


def main():
    show("The Brahmagupta identity as a pairing")
    params = PlusParams(m=1, k=0, n=5, p=1, q=0)
    pairing, form = make_plus(1, params)
    print(f"variant 1 at base point (1, 0) over {form}:")
    print(f"  a1 = {pairing.a1}")
    print(f"  a2 = {pairing.a2}")
    x, y = (2, 1), (3, -2)
    z = pairing(x, y)
    print(f"  s({x}, {y}) = {z}")
    print(f"  f(x) f(y) = {form(x)} * {form(y)} = {form(x) * form(y)} = f(z) = {form(z)}")
    print(f"  is_normed: {is_normed(pairing, form)}")

    show("All three plus variants share the base data")
    params = PlusParams(m=2, k=1, n=3, p=1, q=1)
    print(f"base form (2, 1, 3), base point (1, 1), scale r = {params.r}")
    for variant in (1, 2, 3):
        pairing, form = make_plus(variant, params)
        kind = type_of(pairing, form)
        print(f"  variant {variant}: normed for {form}, type {kind}"
              f" (expected {PLUS_VARIANT_TYPES[variant]})")

    show("The minus-minus family comes from integer quadruples")
    quad = Quadruple(1, -2, -1, 1)
    pairing, form = make_minus_minus(quad)
    print(f"quadruple {quad}")
    print(f"  derived form {form}, type {type_of(pairing, form)}")
    print(f"  commutative: {pairing.is_commutative()}, traceless: {pairing.is_traceless()}")

    show("The type is read off the one-sided determinants")
    for y in ((1, 0), (0, 1), (1, 1), (2, -1)):
        print(f"  det(x -> s(x, {y})) = {left_map_det(pairing, y):4}"
              f"   -f({y}) = {-form(y):4}")
    for x in ((1, 0), (0, 1), (1, 1), (2, -1)):
        print(f"  det(y -> s({x}, y)) = {right_map_det(pairing, x):4}"
              f"   -f({x}) = {-form(x):4}")
    print("both determinant polynomials equal -f, so the type is (-,-)")


if __name__ == "__main__":
    main()

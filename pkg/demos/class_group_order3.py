#!/usr/bin/env python3
"""Confirm by two independent routes that a form class has order 3.

The form (2, 1, 3) of discriminant -23 admits a minus-minus pairing, and
such a form always cubes to the principal class.  The script first reads
the verdict off the witness quadruple, then rebuilds the same fact from
ideal arithmetic in the order of discriminant -23: the corresponding
lattice is not principal, but its cube is.
"""

from fractions import Fraction

from normed_forms import (
    Context,
    Form,
    Lattice,
    embed_form,
    order3_verdict,
    order_lattice,
    reduced_forms,
    search_minus_minus,
)


def span(lattice):
    basis = lattice.canonical_basis()
    return f"span({basis.r}, {basis.zeta})"


def main():
    form = Form(2, 1, 3)
    print(f"form {form}, discriminant {form.discriminant()}")
    print(f"reduced forms of discriminant -23: {reduced_forms(-23)}")
    print("class group of size 3: the two non-principal classes are conjugate")
    print()

    quad, decision = search_minus_minus(form)
    print(f"minus-minus witness: {quad} ({decision.value})")
    print(f"order-3 verdict from the quadruple: {order3_verdict(quad).value}")
    print()

    ctx = Context(-23)
    order = order_lattice(ctx, -23)
    print(f"working in Q(tau) with tau^2 = -23; the order is {span(order)}")
    ideal = Lattice(ctx, ctx.elem(2), ctx.elem(Fraction(-1, 2), Fraction(1, 2)))
    print(f"the lattice {span(ideal)}:")
    print(f"  is an ideal of the order: {ideal.is_ideal_of(-23)}")
    print(f"  its form {ideal.to_form()} has primitive part"
          f" {ideal.to_form().content_and_primitive()[1]},"
          f" the conjugate class of {form}")
    print()

    power = order
    for exponent in (1, 2, 3):
        power = power * ideal
        print(f"ideal^{exponent} = {span(power)}, principal: {power.is_principal()}")
    print()
    print("not principal, not principal, principal: the class has order 3,")
    print(f"matching cube_is_principal: {ideal.cube_is_principal()}")
    print()

    embedded = embed_form(form)
    print(f"embed_form({form}) = {span(embedded)}")
    print(f"  reproduces the form exactly: {embedded.to_form() == form}")
    print(f"  not principal: {not embedded.is_principal()},"
          f" cube principal: {embedded.cube_is_principal()}")


if __name__ == "__main__":
    main()

"""Exact invariants along two independent routes.

The Alexander polynomial comes from a determinant of the reduced Burau matrix
of the braid word, while the Jones polynomial comes from a Temperley-Lieb
transfer of the Kauffman bracket. Torus knots also have closed-form
invariants, which makes them ideal cross-checks for both braid pipelines.
"""

from twistsum import (
    BraidWord,
    alexander_from_braid,
    alexander_span,
    jones_from_braid,
    kauffman_bracket,
    knot_determinant,
    torus_alexander_closed,
    torus_braid,
    torus_jones_closed,
    twisted_torus_braid,
)

print("== the right-handed trefoil ==")
trefoil = torus_braid(2, 3)
alex = alexander_from_braid(trefoil)
jones = jones_from_braid(trefoil)
print(f"bracket:    {kauffman_bracket(trefoil).to_text('A')}")
print(f"alexander:  {alex.to_text()}")
print(f"jones:      {jones.to_text()}")
print(f"determinant {knot_determinant(trefoil)}, span {alexander_span(alex)}")

print()
print("== braid pipelines agree with torus closed forms ==")
for p, q in [(2, 5), (3, 4), (3, 5)]:
    word = torus_braid(p, q)
    assert alexander_from_braid(word) == torus_alexander_closed(p, q)
    assert jones_from_braid(word) == torus_jones_closed(p, q)
    print(f"T({p},{q}): alexander {torus_alexander_closed(p, q).to_text()}")

print()
print("== chirality is visible to Jones, invisible to Alexander ==")
left = torus_braid(2, -3)
print(f"mirror trefoil alexander: {alexander_from_braid(left).to_text()}  (same)")
print(f"mirror trefoil jones:     {jones_from_braid(left).to_text()}  (t -> 1/t)")

print()
print("== a twisted torus knot that is NOT composite ==")
# One positive full twist on two strands of T(5,3): a well-known hyperbolic
# knot. Its determinant is 1; a sum of two nontrivial 2-strand torus knots
# has determinant k1*k2 >= 9, so this knot is no such sum.
pretzel_like = twisted_torus_braid(5, 3, 2, 1)
print(f"TT(5,3,2,1) alexander: {alexander_from_braid(pretzel_like).to_text()}")
print(f"TT(5,3,2,1) determinant: {knot_determinant(pretzel_like)}")

print()
print("== the figure-eight knot, for contrast ==")
fig8 = BraidWord(3, (1, -2, 1, -2))
j = jones_from_braid(fig8)
print(f"jones: {j.to_text()}")
print(f"amphichiral: {j == j.invert_var()}")

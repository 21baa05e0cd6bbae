"""Constructing torus and twisted torus knots as braid words.

Walks through the braid-level constructions: torus braids, full-twist blocks,
mirrors, connected sums, and the planar-diagram export.
"""

from twistsum import (
    BraidWord,
    braid_connected_sum,
    braid_mirror,
    braid_permutation,
    braid_to_text,
    closure_pd_code,
    is_knot_closure,
    pd_code_to_text,
    torus_braid,
    twisted_torus_braid,
    writhe,
)

print("== torus braids ==")
for p, q in [(2, 3), (3, 2), (2, -5), (5, 3)]:
    word = torus_braid(p, q)
    print(f"T({p},{q}) braid: {braid_to_text(word)}")

print()
print("== twisted torus braids ==")
# (p, q; r, s): the torus braid followed by s full twists on r strands.
for p, q, r, s in [(5, 3, 2, 1), (9, 5, 7, -1), (19, 13, 15, -1)]:
    word = twisted_torus_braid(p, q, r, s)
    print(
        f"TT({p},{q},{r},{s}): {word.strands} strands, {len(word)} letters, "
        f"writhe {writhe(word)}, knot closure: {is_knot_closure(word)}"
    )

# The full twist never moves strand endpoints, so the closure stays a knot
# exactly when the underlying torus braid closes to a knot.
tt = twisted_torus_braid(9, 5, 7, -1)
assert braid_permutation(tt) == braid_permutation(torus_braid(9, 5))
print("full twist is a pure braid: permutation matches the torus braid")

print()
print("== mirrors and connected sums ==")
trefoil = torus_braid(2, 3)
print(f"trefoil:        {braid_to_text(trefoil)}")
print(f"mirror trefoil: {braid_to_text(braid_mirror(trefoil))}")

granny = braid_connected_sum(trefoil, trefoil)
square = braid_connected_sum(trefoil, braid_mirror(trefoil))
print(f"trefoil # trefoil:        {braid_to_text(granny)}")
print(f"trefoil # mirror trefoil: {braid_to_text(square)}")
print(f"writhe adds: {writhe(granny)} = {writhe(trefoil)} + {writhe(trefoil)}")

print()
print("== planar-diagram export ==")
print(f"trefoil PD: {pd_code_to_text(closure_pd_code(trefoil))}")
fig8 = BraidWord(3, (1, -2, 1, -2))
print(f"figure-eight PD: {pd_code_to_text(closure_pd_code(fig8))}")

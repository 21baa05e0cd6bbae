"""Shared test helpers: independent oracles and random braid generators.

The PD-code bracket evaluator here is deliberately independent of the
Temperley-Lieb transfer in the package: it brute-forces all 2^c smoothing
states of a planar-diagram code and counts loops with union-find, so it can
cross-check both the PD export and the bracket pipeline.
"""

from __future__ import annotations

import random

from twistsum import BraidWord, LaurentPoly, is_knot_closure

DELTA = LaurentPoly({2: -1, -2: -1})


def bracket_from_pd(pd) -> LaurentPoly:
    """Kauffman bracket of a PD code by brute force over all smoothing states.

    For a record X[a,b,c,d] (counterclockwise from the incoming under edge)
    the A-smoothing joins a-d and b-c, the B-smoothing joins a-b and c-d.
    """
    edges = sorted({x for rec in pd for x in rec})
    total = LaurentPoly.zero()
    for state in range(2 ** len(pd)):
        parent = {e: e for e in edges}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        exponent = 0
        for k, (a, b, c, d) in enumerate(pd):
            if (state >> k) & 1:
                exponent += 1
                pairs = ((a, d), (b, c))
            else:
                exponent -= 1
                pairs = ((a, b), (c, d))
            for x, y in pairs:
                parent[find(x)] = find(y)
        loops = len({find(e) for e in edges})
        total = total + LaurentPoly.monomial(exponent) * DELTA ** (loops - 1)
    return total


def random_word(rng: random.Random, strands: int, length: int) -> BraidWord:
    letters = tuple(
        rng.choice([s * i for s in (1, -1) for i in range(1, strands)])
        for _ in range(length)
    )
    return BraidWord(strands, letters)


def random_knot_word(rng: random.Random, max_strands: int, max_length: int) -> BraidWord:
    """A random braid word whose closure is a knot, by rejection sampling."""
    while True:
        strands = rng.randint(2, max_strands)
        word = random_word(rng, strands, rng.randint(1, max_length))
        if is_knot_closure(word):
            return word

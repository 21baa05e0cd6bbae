"""Kauffman bracket and Jones polynomial of a braid closure via a Temperley-Lieb transfer.

A planar (Temperley-Lieb) diagram on n strands is a perfect noncrossing
matching of 2n boundary points. The points are numbered in a fixed circular
order: 0..n-1 along the bottom from left to right, then n..2n-1 along the top
from RIGHT to left. Reading the pairing in that order, noncrossing matchings
are exactly the balanced-parenthesis sequences, so the involution array
(point i is matched with pairing[i]) is a canonical, hashable encoding, and
the number of diagrams on n strands is the Catalan number C(n).

The bracket is computed as a transfer: start from the identity diagram with
coefficient 1 and apply the word letter by letter. A positive letter at
position i expands as A * (identity) + A^{-1} * (cup-cap at i); a negative
letter swaps the two weights. Composing a cup-cap onto a diagram either
re-pairs four points or, when the two bottom points were already matched to
each other, closes a loop, multiplying the coefficient by
delta = -A^2 - A^{-2}. Letters act on each basis diagram locally, so the
state is kept as a sparse map from diagrams to coefficients; materializing
C(n) x C(n) generator matrices would waste memory. Closing the braid matches
bottom point i with the top point above it and contributes delta^(loops - 1).

The Jones polynomial is the writhe correction (-A^3)^(-writhe) times the
bracket, re-expressed in t = A^{-4}. For a knot every exponent of the
corrected bracket is divisible by 4; a failure of that divisibility is a
convention bug, never valid input, and raises immediately.

Diagram counts grow like C(n), so bracket computations refuse strand counts
above a feasibility threshold (default 12, C(12) = 208012) instead of
consuming unbounded time; callers may raise the threshold explicitly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Mapping

from .braid import BraidWord, is_knot_closure, writhe
from .errors import ExponentNotDivisibleBy4, NotAKnot, TooManyStrands
from .laurent import LaurentPoly, _wrap

DEFAULT_STRAND_THRESHOLD = 12

LOOP_VALUE = LaurentPoly({2: -1, -2: -1})

_RawPoly = dict  # {exponent: coefficient}, canonical (no zero values)
_DELTA_RAW = {2: -1, -2: -1}


def catalan(n: int) -> int:
    """The n-th Catalan number; the dimension of the diagram algebra on n strands."""
    return math.comb(2 * n, n) // (n + 1)


def _identity_pairing(strands: int) -> tuple[int, ...]:
    """Every bottom point joined straight up: i with 2n-1-i."""
    return tuple(2 * strands - 1 - i for i in range(2 * strands))


def _is_noncrossing_pairing(seq: tuple[int, ...]) -> bool:
    n = len(seq)
    if n % 2:
        return False
    if not all(0 <= seq[i] < n and seq[i] != i and seq[seq[i]] == i for i in range(n)):
        return False
    stack: list[int] = []
    for i in range(n):
        if i < seq[i]:
            stack.append(seq[i])
        elif stack.pop() != i:
            return False
    return True


@dataclass(frozen=True)
class NoncrossingMatching:
    """A perfect noncrossing matching of the 2n boundary points of a diagram."""

    pairing: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "pairing", tuple(self.pairing))
        if not self.pairing or not _is_noncrossing_pairing(self.pairing):
            raise ValueError("not a noncrossing perfect matching")

    @property
    def strands(self) -> int:
        return len(self.pairing) // 2

    @classmethod
    def identity(cls, strands: int) -> NoncrossingMatching:
        return cls(_identity_pairing(strands))


def enumerate_matchings(strands: int) -> Iterator[NoncrossingMatching]:
    """All C(strands) noncrossing perfect matchings on 2*strands points."""
    if strands < 1:
        raise ValueError("strand count must be >= 1")
    points = 2 * strands
    seq = [-1] * points

    def fill(free: list[int]) -> Iterator[None]:
        if not free:
            yield None
            return
        first = free[0]
        # The partner must leave an even number of points enclosed.
        for idx in range(1, len(free), 2):
            partner = free[idx]
            seq[first], seq[partner] = partner, first
            inner, outer = free[1:idx], free[idx + 1:]
            for _ in fill(inner):
                yield from fill(outer)

    for _ in fill(list(range(points))):
        yield NoncrossingMatching(tuple(seq))


def _cupcap(pairing: tuple[int, ...], j: int) -> tuple[tuple[int, ...], int]:
    """Compose the cup-cap generator at bottom positions (j, j+1) under a diagram.

    Returns the new pairing and the number of loops closed (0 or 1).
    """
    a, b = pairing[j], pairing[j + 1]
    if a == j + 1:
        return pairing, 1
    new = list(pairing)
    new[j], new[j + 1] = j + 1, j
    new[a], new[b] = b, a
    return tuple(new), 0


def _raw_add_term(acc: dict, key, poly: _RawPoly) -> None:
    cur = acc.get(key)
    if cur is None:
        acc[key] = dict(poly)
        return
    for e, c in poly.items():
        s = cur.get(e, 0) + c
        if s:
            cur[e] = s
        else:
            del cur[e]
    if not cur:
        del acc[key]


def _raw_scale(poly: _RawPoly, shift: int, factor: int) -> _RawPoly:
    return {e + shift: c * factor for e, c in poly.items()}


def _raw_mul_delta(poly: _RawPoly, times: int) -> _RawPoly:
    for _ in range(times):
        out: _RawPoly = {}
        for e, c in poly.items():
            for de, dc in _DELTA_RAW.items():
                k = e + de
                s = out.get(k, 0) + c * dc
                if s:
                    out[k] = s
                else:
                    del out[k]
        poly = out
    return poly


def _apply_letter_raw(vec: dict, letter: int) -> dict:
    j = abs(letter) - 1
    straight, smoothed = (1, -1) if letter > 0 else (-1, 1)
    out: dict = {}
    for pairing, coeff in vec.items():
        _raw_add_term(out, pairing, _raw_scale(coeff, straight, 1))
        new_pairing, loops = _cupcap(pairing, j)
        term = _raw_scale(coeff, smoothed, 1)
        if loops:
            term = _raw_mul_delta(term, loops)
        _raw_add_term(out, new_pairing, term)
    return out


def tl_apply_letter(
    vec: Mapping[NoncrossingMatching, LaurentPoly], letter: int, strands: int
) -> dict[NoncrossingMatching, LaurentPoly]:
    """Apply the two-term skein expansion of one crossing to a diagram combination."""
    if letter == 0 or abs(letter) > strands - 1:
        raise ValueError(f"letter {letter} out of range for {strands} strands")
    raw = {m.pairing: dict(p.items()) for m, p in vec.items() if p}
    raw = _apply_letter_raw(raw, letter)
    return {NoncrossingMatching(k): _wrap(v) for k, v in raw.items()}


def _closure_loops(pairing: tuple[int, ...], strands: int) -> int:
    closure = _identity_pairing(strands)
    seen = [False] * (2 * strands)
    loops = 0
    for start in range(2 * strands):
        if seen[start]:
            continue
        loops += 1
        v = start
        while not seen[v]:
            seen[v] = True
            partner = pairing[v]
            seen[partner] = True
            v = closure[partner]
    return loops


def kauffman_bracket(b: BraidWord, threshold: int | None = None) -> LaurentPoly:
    """Kauffman bracket of the braid closure (a Laurent polynomial in A)."""
    limit = DEFAULT_STRAND_THRESHOLD if threshold is None else threshold
    if b.strands > limit:
        raise TooManyStrands(b.strands, limit, catalan(b.strands))
    vec: dict = {_identity_pairing(b.strands): {0: 1}}
    for letter in b.letters:
        vec = _apply_letter_raw(vec, letter)
    total: _RawPoly = {}
    for pairing, coeff in vec.items():
        term = _raw_mul_delta(coeff, _closure_loops(pairing, b.strands) - 1)
        for e, c in term.items():
            s = total.get(e, 0) + c
            if s:
                total[e] = s
            else:
                del total[e]
    return _wrap(total)


def jones_from_braid(b: BraidWord, threshold: int | None = None) -> LaurentPoly:
    """Jones polynomial of the knot closure (a Laurent polynomial in t)."""
    if not is_knot_closure(b):
        raise NotAKnot(f"closure of {b.strands}-strand word is not a knot")
    w = writhe(b)
    bracket = kauffman_bracket(b, threshold)
    corrected = bracket.shifted(-3 * w) * (1 if w % 2 == 0 else -1)
    terms = {}
    for e, c in corrected.items():
        if e % 4:
            raise ExponentNotDivisibleBy4(
                f"corrected bracket exponent {e} not divisible by 4"
            )
        terms[-e // 4] = c
    return LaurentPoly(terms)

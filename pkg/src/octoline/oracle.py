"""Independent reference layer used to cross-check the fast kernels.

Everything here is built the slow, obviously-correct way: the basis
product table is derived from quaternion arithmetic through the
doubling rule

    (x1, x2)(y1, y2) = (x1 y1 - conj(y2) x2,  y2 x1 + x2 conj(y1))

rather than copied from the kernel, and product words are evaluated
under every bracketing by brute force. Tests compare the two routes;
the kernels never feed this module.
"""

from __future__ import annotations

from typing import NamedTuple

from .config import DEFAULT_EPS
from .errors import MalformedTable, WordTooLong

_NAMES = ("1", "i", "j", "k", "kl", "jl", "il", "l")


def _qmul(q, r):
    w1, x1, y1, z1 = q
    w2, x2, y2, z2 = r
    return (
        w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
        w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
        w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
        w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2,
    )


def _qconj(q):
    return (q[0], -q[1], -q[2], -q[3])


def _qadd(q, r):
    return tuple(a + b for a, b in zip(q, r))


def _qsub(q, r):
    return tuple(a - b for a, b in zip(q, r))


def _pair_from_coeffs(c):
    # over (1, i, j, k, kl, jl, il, l): x1 carries slots 0..3,
    # x2 carries slots 7, 6, 5, 4 so that x = x1 + x2 * l.
    return (c[0], c[1], c[2], c[3]), (c[7], c[6], c[5], c[4])


def _coeffs_from_pair(x1, x2):
    return (x1[0], x1[1], x1[2], x1[3], x2[3], x2[2], x2[1], x2[0])


def mul_coeffs(a, b):
    """Reference product of two 8-coefficient sequences via doubling."""
    x1, x2 = _pair_from_coeffs(a)
    y1, y2 = _pair_from_coeffs(b)
    first = _qsub(_qmul(x1, y1), _qmul(_qconj(y2), x2))
    second = _qadd(_qmul(y2, x1), _qmul(x2, _qconj(y1)))
    return _coeffs_from_pair(first, second)


class TableEntry(NamedTuple):
    """One basis product e_q * e_r = sign * e_s, all indices 1-based."""

    q: int
    r: int
    sign: int
    s: int


def generate_table():
    """Derive all 64 basis products from the doubling rule."""
    entries = []
    for q in range(1, 9):
        a = tuple(1.0 if t == q - 1 else 0.0 for t in range(8))
        for r in range(1, 9):
            b = tuple(1.0 if t == r - 1 else 0.0 for t in range(8))
            c = mul_coeffs(a, b)
            hits = [(t, v) for t, v in enumerate(c) if v != 0.0]
            if len(hits) != 1 or abs(hits[0][1]) != 1.0:
                raise MalformedTable(f"basis product e{q}*e{r} is not a signed unit")
            t, v = hits[0]
            entries.append(TableEntry(q, r, 1 if v > 0 else -1, t + 1))
    return entries


def as_dict(entries):
    """Index table entries by (q, r)."""
    return {(e.q, e.r): (e.sign, e.s) for e in entries}


def fano_triples(entries):
    """Extract the seven oriented triples from a basis product table.

    Each triple (a, b, c) satisfies e_a e_b = e_c, e_b e_c = e_a and
    e_c e_a = e_b, starts at its smallest index, and the seven of them
    cover each imaginary pair exactly once. Raises MalformedTable if
    the table does not have that structure.
    """
    table = as_dict(entries)

    def prod(q, r):
        sign, s = table[(q, r)]
        return sign, s

    triples = []
    seen_pairs = set()
    for a in range(2, 9):
        for b in range(a + 1, 9):
            if (a, b) in seen_pairs:
                continue
            sign, s = prod(a, b)
            if s == 1 or s in (a, b):
                raise MalformedTable(f"e{a}*e{b} did not land on a third imaginary unit")
            trip = (a, b, s) if sign > 0 else (a, s, b)
            x, y, z = trip
            for u, v, w in ((x, y, z), (y, z, x), (z, x, y)):
                psign, ps = prod(u, v)
                if psign != 1 or ps != w:
                    raise MalformedTable(f"triple {trip} is not cyclically closed")
            for u, v in ((x, y), (x, z), (y, z)):
                pair = (min(u, v), max(u, v))
                if pair in seen_pairs:
                    raise MalformedTable(f"pair {pair} appears in two triples")
                seen_pairs.add(pair)
            triples.append(trip)
    if len(triples) != 7 or len(seen_pairs) != 21:
        raise MalformedTable(f"expected 7 triples covering 21 pairs, got {len(triples)}")
    return triples


def dump_grid(entries):
    """Render a table as a text grid with signed unit names."""
    table = as_dict(entries)
    width = 4
    header = " " * width + "".join(n.rjust(width) for n in _NAMES)
    lines = [header]
    for q in range(1, 9):
        cells = []
        for r in range(1, 9):
            sign, s = table[(q, r)]
            name = _NAMES[s - 1]
            cells.append(("-" + name if sign < 0 else name).rjust(width))
        lines.append(_NAMES[q - 1].rjust(width) + "".join(cells))
    return "\n".join(lines)


MAX_WORD = 6


def _trees(lo, hi):
    if hi - lo == 1:
        yield lo
        return
    for mid in range(lo + 1, hi):
        for left in _trees(lo, mid):
            for right in _trees(mid, hi):
                yield (left, right)


def _eval_tree(tree, word):
    if isinstance(tree, int):
        return word[tree]
    left, right = tree
    return _eval_tree(left, word) * _eval_tree(right, word)


def _render_tree(tree):
    if isinstance(tree, int):
        return str(tree)
    left, right = tree
    return f"({_render_tree(left)} {_render_tree(right)})"


def eval_all_bracketings(word):
    """Evaluate a product word under every full bracketing.

    Returns a list of (bracketing, value) pairs; the bracketing string
    labels factors by position. Words longer than MAX_WORD raise
    WordTooLong since the tree count grows as the Catalan numbers.
    """
    word = list(word)
    if not word:
        raise ValueError("empty product word")
    if len(word) > MAX_WORD:
        raise WordTooLong(f"word of length {len(word)} exceeds {MAX_WORD}")
    return [(_render_tree(t), _eval_tree(t, word)) for t in _trees(0, len(word))]


def bracketing_spread(word):
    """Largest pairwise distance between bracketings of a product word."""
    values = [v for _, v in eval_all_bracketings(word)]
    spread = 0.0
    for m, x in enumerate(values):
        for y in values[m + 1 :]:
            spread = max(spread, (x - y).norm())
    return spread


def bracketings_agree(word, eps=DEFAULT_EPS):
    word = list(word)
    scale = max(1.0, max(x.norm() for x in word) ** len(word))
    return bracketing_spread(word) <= eps * scale

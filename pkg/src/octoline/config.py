"""Shared numeric tolerances.

DEFAULT_EPS guards identities that hold to rounding error on inputs of
order one. PREDICATE_EPS is the looser cutoff used by yes/no structure
predicates, where accumulated error from several products is expected.
Both scale with max(1, |operands|) at the comparison site.
"""

DEFAULT_EPS = 1e-12
PREDICATE_EPS = 1e-10


def close(a, b, eps=DEFAULT_EPS, scale=1.0):
    """Scale-aware float comparison: |a - b| <= eps * max(1, scale, |a|, |b|)."""
    return abs(a - b) <= eps * max(1.0, scale, abs(a), abs(b))

"""Fractional-linear transformations of the octonionic projective line.

A compatible matrix [[alpha, beta], [gamma, delta]] acts on extended
octonions as

    w  ->  (alpha w + beta) (gamma w + delta)^{-1}

with the inverse on the right. Points can equally be carried as
projective pairs (b, c), identified by (b, c) ~ ((b c^{-1}) xi, xi)
for nonzero xi; for compatible matrices the linear action on pairs
descends to the same map on extended values no matter which
representative is used. Composition is expressed by applying maps in
sequence, never by multiplying matrices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import DEFAULT_EPS, PREDICATE_EPS
from .core import (
    INFINITY,
    Infinity,
    Octonion,
    REAL_SPAN,
    associator,
    inner,
    spans_complex_subalgebra,
)
from .errors import DegenerateMap, InvalidPoint, NotCompatible, NotComplex
from .lorentz import TransformMatrix, is_compatible


@dataclass(frozen=True)
class MoebiusParams:
    """Validated coefficient matrix for a fractional-linear map."""

    matrix: TransformMatrix

    def __post_init__(self):
        if not is_compatible(self.matrix):
            raise NotCompatible(
                "map coefficients must span a complex subalgebra with real determinant"
            )

    @classmethod
    def from_entries(cls, alpha, beta, gamma, delta):
        return cls(TransformMatrix(alpha, beta, gamma, delta))

    def entries(self):
        return self.matrix.entries()

    def to_obj(self):
        return self.matrix.to_obj()

    @classmethod
    def from_obj(cls, obj):
        return cls(TransformMatrix.from_obj(obj))


@dataclass(frozen=True)
class OP1Point:
    """Projective representative (b, c); (0, 0) carries no point."""

    b: Octonion
    c: Octonion

    def __post_init__(self):
        if self.b.norm_sq() == 0.0 and self.c.norm_sq() == 0.0:
            raise InvalidPoint("(0, 0) is not a projective point")

    def rescaled(self, xi):
        """Equivalent representative ((b c^{-1}) xi, xi); needs c != 0."""
        w = self.b * self.c.inverse()
        return OP1Point(b=w * xi, c=xi)

    def to_obj(self):
        return {"b": self.b.tolist(), "c": self.c.tolist()}

    @classmethod
    def from_obj(cls, obj):
        return cls(b=Octonion(obj["b"]), c=Octonion(obj["c"]))


def to_extended(point):
    """Quotient map: b c^{-1}, or INFINITY when c is exactly zero."""
    if point.c.norm_sq() == 0.0:
        return INFINITY
    return point.b * point.c.inverse()


def from_extended(w):
    """Canonical representative of an extended octonion."""
    if isinstance(w, Infinity):
        return OP1Point(b=Octonion.one(), c=Octonion.zero())
    return OP1Point(b=w, c=Octonion.one())


def op1_equal(p, q, eps=DEFAULT_EPS):
    """Whether two representatives name the same projective point."""
    x = to_extended(p)
    y = to_extended(q)
    if isinstance(x, Infinity) or isinstance(y, Infinity):
        return isinstance(x, Infinity) and isinstance(y, Infinity)
    return x.isclose(y, eps)


def _coerce_params(params):
    if isinstance(params, MoebiusParams):
        return params.matrix
    if isinstance(params, TransformMatrix):
        if not is_compatible(params):
            raise NotCompatible(
                "map coefficients must span a complex subalgebra with real determinant"
            )
        return params
    raise TypeError(f"expected MoebiusParams or TransformMatrix, got {type(params).__name__}")


def apply(params, w, eps=DEFAULT_EPS):
    """Evaluate the fractional-linear map at an extended octonion."""
    matrix = _coerce_params(params)
    return apply_unchecked(matrix, w, eps)


def apply_unchecked(matrix, w, eps=DEFAULT_EPS):
    """Same evaluation without the compatibility check.

    Kept separate so counterexamples outside the valid class can still
    be evaluated.
    """
    al, be, ga, de = matrix.entries()
    if isinstance(w, Infinity):
        num, den = al, ga
        scale = max(1.0, al.norm(), ga.norm())
    else:
        num = al * w + be
        den = ga * w + de
        scale = max(1.0, al.norm() * w.norm() + be.norm(), ga.norm() * w.norm() + de.norm())
    if den.norm() <= eps * scale:
        if num.norm() <= eps * scale:
            raise DegenerateMap("numerator and denominator both vanish")
        return INFINITY
    return num * den.inverse()


def apply_projective(params, point):
    """Linear action on a projective representative."""
    al, be, ga, de = _coerce_params(params).entries()
    return OP1Point(b=al * point.b + be * point.c, c=ga * point.b + de * point.c)


def apply_projective_unchecked(matrix, point):
    al, be, ga, de = matrix.entries()
    return OP1Point(b=al * point.b + be * point.c, c=ga * point.b + de * point.c)


def compose_nested(params_seq, w, eps=DEFAULT_EPS):
    """Apply a sequence of maps, first element first."""
    for params in params_seq:
        w = apply(params, w, eps)
    return w


def associator_condition(b, c, gamma, delta):
    """Inner product of the associator [b, c, gamma] with delta.

    Zero whenever gamma and delta lie in one complex subalgebra; this
    is the cancellation that makes the projective action well defined.
    """
    return inner(associator(b, c, gamma), delta)


def norm_factorization_check(b, c, gamma, delta):
    """Both sides of |gamma b + delta c|^2 = |gamma w + delta|^2 |c|^2.

    Here w = b c^{-1}; c must be nonzero. The equality holds when
    gamma and delta span a complex subalgebra.
    """
    w = b * c.inverse()
    lhs = (gamma * b + delta * c).norm_sq()
    rhs = (gamma * w + delta).norm_sq() * c.norm_sq()
    return lhs, rhs


def complex_moebius_oracle(params, w, eps=PREDICATE_EPS):
    """Evaluate the map with ordinary complex arithmetic.

    All coefficients, and w when finite, must lie in one shared
    complex subalgebra; otherwise NotComplex is raised. Used as an
    independent baseline for the octonionic evaluation.
    """
    matrix = params.matrix if isinstance(params, MoebiusParams) else params
    elements = list(matrix.entries())
    if not isinstance(w, Infinity):
        elements.append(w)
    u = spans_complex_subalgebra(elements, eps)
    if u is None:
        raise NotComplex("oracle needs all inputs in one complex subalgebra")
    if u is REAL_SPAN:
        u = Octonion.unit("i")

    def project(x):
        return complex(x.real, inner(x, u))

    a, b, g, d = (project(x) for x in matrix.entries())
    if isinstance(w, Infinity):
        if abs(g) <= eps:
            return INFINITY
        value = a / g
    else:
        z = project(w)
        den = g * z + d
        num = a * z + b
        if abs(den) <= eps * max(1.0, abs(g) * abs(z) + abs(d)):
            if abs(num) <= eps * max(1.0, abs(a) * abs(z) + abs(b)):
                raise DegenerateMap("numerator and denominator both vanish")
            return INFINITY
        value = num / den
    return Octonion.from_complex(value, u)

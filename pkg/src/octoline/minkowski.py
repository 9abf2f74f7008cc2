"""Ten-dimensional Minkowski vectors as 2x2 octonionic Hermitian matrices.

A vector with time component a0, eight transverse components a1..a8
along the octonion coefficient directions, and longitudinal component
a9 is packed as

    [[p, a], [conj(a), m]]    p = a0 + a9,  m = a0 - a9,
                              a = a1*1 + a2*i + ... + a8*l.

The matrix determinant p*m - |a|^2 equals minus the squared interval
in the mostly-plus signature, so null future-pointing vectors are
exactly the matrices that factor as an outer product of a two
component octonionic column with itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .config import DEFAULT_EPS, PREDICATE_EPS
from .core import INFINITY, Infinity, Octonion
from .errors import NotFuturePointing, NotNull


@dataclass(frozen=True)
class HermitianMatrix:
    """2x2 octonionic Hermitian matrix [[p, a], [conj(a), m]]."""

    p: float
    m: float
    a: Octonion

    def det(self):
        return self.p * self.m - self.a.norm_sq()

    def trace(self):
        return self.p + self.m

    def scale(self):
        return max(1.0, abs(self.p), abs(self.m), self.a.norm())

    def is_null(self, eps=PREDICATE_EPS):
        return abs(self.det()) <= eps * self.scale() ** 2

    def isclose(self, other, eps=DEFAULT_EPS):
        scale = max(self.scale(), other.scale())
        return (
            abs(self.p - other.p) <= eps * scale
            and abs(self.m - other.m) <= eps * scale
            and float(np.abs(self.a.coeffs - other.a.coeffs).max()) <= eps * scale
        )

    def distance(self, other):
        """Largest entrywise deviation from another Hermitian matrix."""
        return max(
            abs(self.p - other.p),
            abs(self.m - other.m),
            float(np.abs(self.a.coeffs - other.a.coeffs).max()),
        )

    def to_vector(self):
        comp = np.empty(10)
        comp[0] = 0.5 * (self.p + self.m)
        comp[1:9] = self.a.coeffs
        comp[9] = 0.5 * (self.p - self.m)
        return Vector10(comp)

    @classmethod
    def from_vector(cls, v):
        comp = v.components
        return cls(
            p=float(comp[0] + comp[9]),
            m=float(comp[0] - comp[9]),
            a=Octonion(comp[1:9]),
        )

    def to_obj(self):
        return {"p": self.p, "m": self.m, "a": self.a.tolist()}

    @classmethod
    def from_obj(cls, obj):
        return cls(p=float(obj["p"]), m=float(obj["m"]), a=Octonion(obj["a"]))


class Vector10:
    """Minkowski vector with components (a0, a1, ..., a8, a9)."""

    __slots__ = ("_v",)

    def __init__(self, components):
        arr = np.asarray(components, dtype=np.float64)
        if arr.shape != (10,):
            raise ValueError(f"expected 10 components, got shape {arr.shape}")
        if not np.isfinite(arr).all():
            raise ValueError("components must be finite")
        arr = arr.copy()
        arr.setflags(write=False)
        self._v = arr

    @classmethod
    def from_txyz(cls, t, x, y, z):
        """Embed a 4D vector: x along the real slot, y along i, z longitudinal."""
        comp = np.zeros(10)
        comp[0], comp[1], comp[2], comp[9] = t, x, y, z
        return cls(comp)

    @property
    def components(self):
        return self._v

    def norm_sq(self):
        """Squared interval in the mostly-plus signature; negative of det."""
        return float(self._v[1:] @ self._v[1:] - self._v[0] ** 2)

    def __eq__(self, other):
        if isinstance(other, Vector10):
            return bool(np.array_equal(self._v, other._v))
        return NotImplemented

    def __hash__(self):
        return hash((Vector10, bytes(self._v)))

    def __repr__(self):
        return f"Vector10({self._v.tolist()!r})"

    def tolist(self):
        return self._v.tolist()


@dataclass(frozen=True)
class Spinor:
    """Two component octonionic column (b, c)."""

    b: Octonion
    c: Octonion

    def square(self):
        """Outer product with the conjugate transpose; always null Hermitian."""
        return HermitianMatrix(p=self.b.norm_sq(), m=self.c.norm_sq(), a=self.b * self.c.conj())

    def to_obj(self):
        return {"b": self.b.tolist(), "c": self.c.tolist()}

    @classmethod
    def from_obj(cls, obj):
        return cls(b=Octonion(obj["b"]), c=Octonion(obj["c"]))


def null_factor(matrix, eps=PREDICATE_EPS):
    """Factor a null future-pointing matrix as an outer product square.

    The gauge fixes c = sqrt(m) real, b = a / sqrt(m). When m vanishes
    the matrix sits on the p axis and factors as (sqrt(p), 0). Raises
    NotNull for a nonzero determinant and NotFuturePointing for a
    nonpositive trace.
    """
    scale = matrix.scale()
    if abs(matrix.det()) > eps * scale**2:
        raise NotNull(f"determinant {matrix.det():g} is not zero at scale {scale:g}")
    if matrix.trace() <= eps * scale:
        raise NotFuturePointing(f"trace {matrix.trace():g} is not positive")
    if matrix.m <= eps * scale:
        # Null plus m = 0 forces a = 0: the ray along the p axis.
        return Spinor(b=Octonion.from_real(math.sqrt(max(matrix.p, 0.0))), c=Octonion.zero())
    root = math.sqrt(matrix.m)
    return Spinor(b=matrix.a / root, c=Octonion.from_real(root))


def stereo_project(point, eps=DEFAULT_EPS):
    """Stereographic projection of a unit sphere point from the north pole.

    Returns a complex number, or INFINITY for the pole itself.
    """
    x, y, z = (float(t) for t in point)
    r2 = x * x + y * y + z * z
    if abs(r2 - 1.0) > PREDICATE_EPS:
        raise ValueError(f"point must lie on the unit sphere, |p|^2 = {r2:g}")
    if abs(1.0 - z) <= eps:
        return INFINITY
    return complex(x, y) / (1.0 - z)


def stereo_unproject(w):
    """Inverse stereographic projection onto the unit sphere."""
    if isinstance(w, Infinity):
        return (0.0, 0.0, 1.0)
    w = complex(w)
    d = 1.0 + abs(w) ** 2
    return (2.0 * w.real / d, 2.0 * w.imag / d, (abs(w) ** 2 - 1.0) / d)


def lightcone_project(v, eps=DEFAULT_EPS):
    """Map a 4D null future-pointing ray to the extended complex plane.

    The vector must use only the (a0, a1, a2, a9) slots. The result
    (x + iy) / (t - z) matches stereo_project of the direction on the
    celestial sphere; rays with t = z go to INFINITY.
    """
    comp = v.components
    t, x, y, z = comp[0], comp[1], comp[2], comp[9]
    scale = max(1.0, float(np.abs(comp).max()))
    if float(np.abs(comp[3:9]).max()) > eps * scale:
        raise ValueError("vector must lie in the (a0, a1, a2, a9) slots")
    if abs(v.norm_sq()) > PREDICATE_EPS * scale**2:
        raise NotNull(f"squared interval {v.norm_sq():g} is not zero")
    if t <= eps * scale:
        raise NotFuturePointing(f"time component {t:g} is not positive")
    if abs(t - z) <= eps * scale:
        return INFINITY
    return complex(x, y) / (t - z)


def ray_from_complex(w):
    """Null future-pointing 4D vector projecting to w, normalized to t = 1."""
    if isinstance(w, Infinity):
        return Vector10.from_txyz(1.0, 0.0, 0.0, 1.0)
    x, y, z = stereo_unproject(w)
    return Vector10.from_txyz(1.0, x, y, z)

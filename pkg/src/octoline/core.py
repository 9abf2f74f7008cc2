"""Octonion arithmetic over the ordered basis (1, i, j, k, kl, jl, il, l).

Products come from the doubling construction over the quaternions with
ij = k and l as the doubling unit. That convention fixes the seven
oriented product triples

    (i j k)  (i kl jl)  (i l il)  (j il kl)  (j l jl)  (k l kl)  (k jl il)

where each cyclic pair multiplies to the third with a plus sign.

The product kernel ships in two interchangeable backends: a compiled
extension and a pure Python twin with the identical summation order.
The compiled one is used when present; set OCTOLINE_PURE_PYTHON=1 to
force the fallback.
"""

from __future__ import annotations

import math
import numbers
import os
from dataclasses import dataclass

import numpy as np

from .config import DEFAULT_EPS
from .errors import ZeroDivisor

if os.environ.get("OCTOLINE_PURE_PYTHON"):
    from . import _kernels_py as _kern
else:
    try:
        from . import _kernels as _kern  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _kern

KERNEL_BACKEND = _kern.BACKEND

_UNIT_NAMES = ("1", "i", "j", "k", "kl", "jl", "il", "l")
_CONJ_SIGNS = np.array([1.0, -1, -1, -1, -1, -1, -1, -1])
_CONJ_SIGNS.setflags(write=False)


class Octonion:
    """Immutable octonion held as eight float64 coefficients.

    Coefficients are ordered (1, i, j, k, kl, jl, il, l). Construction
    rejects non-finite values. Equality is exact on coefficients; use
    isclose for tolerance-aware comparison.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs):
        arr = np.asarray(coeffs, dtype=np.float64)
        if arr.shape != (8,):
            raise ValueError(f"expected 8 coefficients, got shape {arr.shape}")
        if not np.isfinite(arr).all():
            raise ValueError("coefficients must be finite")
        arr = arr.copy()
        arr.setflags(write=False)
        self._c = arr

    @classmethod
    def _wrap(cls, arr):
        # Internal: take ownership of a fresh float64 array.
        if not np.isfinite(arr).all():
            raise ValueError("coefficients must be finite")
        self = object.__new__(cls)
        arr.setflags(write=False)
        self._c = arr
        return self

    @classmethod
    def zero(cls):
        return cls._wrap(np.zeros(8))

    @classmethod
    def one(cls):
        return cls.from_real(1.0)

    @classmethod
    def from_real(cls, t):
        arr = np.zeros(8)
        arr[0] = t
        return cls._wrap(arr)

    @classmethod
    def unit(cls, which):
        """Basis unit by 1-based index (1..8) or by name ('1', 'i', ..., 'l')."""
        if isinstance(which, str):
            q = unit_index(which)
        else:
            q = int(which)
            if not 1 <= q <= 8:
                raise ValueError(f"basis index must be in 1..8, got {which}")
        arr = np.zeros(8)
        arr[q - 1] = 1.0
        return cls._wrap(arr)

    @classmethod
    def from_complex(cls, z, direction=None):
        """Embed a complex number as re + im * direction.

        direction defaults to i and must be a unit imaginary octonion.
        """
        u = Octonion.unit("i") if direction is None else direction
        if not u.is_imaginary_unit():
            raise ValueError("direction must be a unit imaginary octonion")
        z = complex(z)
        return cls._wrap(z.real * np.eye(8)[0] + z.imag * u._c)

    @property
    def coeffs(self):
        """Read-only view of the eight coefficients."""
        return self._c

    @property
    def real(self):
        return float(self._c[0])

    @property
    def imag(self):
        arr = self._c.copy()
        arr[0] = 0.0
        return Octonion._wrap(arr)

    def conj(self):
        return Octonion._wrap(self._c * _CONJ_SIGNS)

    def norm_sq(self):
        return float(self._c @ self._c)

    def norm(self):
        return math.sqrt(self.norm_sq())

    def inverse(self):
        n2 = self.norm_sq()
        if n2 == 0.0:
            raise ZeroDivisor("cannot invert a zero octonion")
        return Octonion._wrap(self._c * (_CONJ_SIGNS / n2))

    def is_zero(self, eps=DEFAULT_EPS):
        return self.norm() <= eps

    def is_real(self, eps=DEFAULT_EPS):
        return float(np.abs(self._c[1:]).max()) <= eps * max(1.0, abs(self.real))

    def is_imaginary_unit(self, eps=DEFAULT_EPS):
        return abs(self._c[0]) <= eps and abs(self.norm() - 1.0) <= eps

    def isclose(self, other, eps=DEFAULT_EPS):
        scale = max(1.0, self.norm(), other.norm())
        return bool(np.abs(self._c - other._c).max() <= eps * scale)

    def tolist(self):
        return self._c.tolist()

    def __add__(self, other):
        if isinstance(other, Octonion):
            return Octonion._wrap(self._c + other._c)
        if isinstance(other, numbers.Real):
            arr = self._c.copy()
            arr[0] += other
            return Octonion._wrap(arr)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Octonion):
            return Octonion._wrap(self._c - other._c)
        if isinstance(other, numbers.Real):
            arr = self._c.copy()
            arr[0] -= other
            return Octonion._wrap(arr)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, numbers.Real):
            arr = -self._c
            arr[0] += other
            return Octonion._wrap(arr)
        return NotImplemented

    def __neg__(self):
        return Octonion._wrap(-self._c)

    def __mul__(self, other):
        if isinstance(other, Octonion):
            return Octonion._wrap(_kern.mul(self._c, other._c))
        if isinstance(other, numbers.Real):
            return Octonion._wrap(self._c * float(other))
        return NotImplemented

    def __rmul__(self, other):
        # Real scalars commute with everything, so this is safe.
        if isinstance(other, numbers.Real):
            return Octonion._wrap(self._c * float(other))
        return NotImplemented

    def __truediv__(self, other):
        """Right division: x / y means x * y.inverse()."""
        if isinstance(other, Octonion):
            return self * other.inverse()
        if isinstance(other, numbers.Real):
            if other == 0:
                raise ZeroDivisor("division by zero scalar")
            return Octonion._wrap(self._c / float(other))
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, numbers.Integral):
            return NotImplemented
        n = int(n)
        if n < 0:
            return self.inverse() ** (-n)
        out = Octonion.one()
        for _ in range(n):
            out = out * self
        return out

    def __abs__(self):
        return self.norm()

    def __eq__(self, other):
        if isinstance(other, Octonion):
            return bool(np.array_equal(self._c, other._c))
        if isinstance(other, numbers.Real):
            return self._c[0] == other and not self._c[1:].any()
        return NotImplemented

    def __hash__(self):
        return hash((Octonion, bytes(self._c)))

    def __repr__(self):
        return f"Octonion({self._c.tolist()!r})"

    def __str__(self):
        parts = []
        for q, v in enumerate(self._c):
            if v == 0.0:
                continue
            mag = abs(v)
            if q == 0:
                token = f"{mag:g}"
            elif mag == 1.0:
                token = _UNIT_NAMES[q]
            else:
                token = f"{mag:g}{_UNIT_NAMES[q]}"
            if not parts:
                parts.append(token if v > 0 else "-" + token)
            else:
                parts.append(("+ " if v > 0 else "- ") + token)
        return " ".join(parts) if parts else "0"


@dataclass(frozen=True)
class BasisUnit:
    """One of the eight basis elements, with its 1-based position and name."""

    index: int
    name: str

    @classmethod
    def from_index(cls, q):
        if not 1 <= q <= 8:
            raise ValueError(f"basis index must be in 1..8, got {q}")
        return BASIS_UNITS[q - 1]

    @classmethod
    def from_name(cls, name):
        return BASIS_UNITS[unit_index(name) - 1]

    def octonion(self):
        return Octonion.unit(self.index)


BASIS_UNITS = tuple(BasisUnit(q + 1, name) for q, name in enumerate(_UNIT_NAMES))


def unit_name(q):
    """Name of basis unit q (1-based)."""
    if not 1 <= q <= 8:
        raise ValueError(f"basis index must be in 1..8, got {q}")
    return _UNIT_NAMES[q - 1]


def unit_index(name):
    """1-based index of a basis unit name."""
    try:
        return _UNIT_NAMES.index(name) + 1
    except ValueError:
        raise ValueError(f"unknown basis unit name {name!r}") from None


def mul(x, y):
    return x * y


def conj(x):
    return x.conj()


def inner(x, y):
    """Euclidean inner product of coefficient vectors.

    Equals the real part of (x * conj(y) + y * conj(x)) / 2.
    """
    return float(x.coeffs @ y.coeffs)


def norm(x):
    return x.norm()


def inverse(x):
    return x.inverse()


def associator(x, y, z):
    """(xy)z - x(yz). Alternating, and zero when two arguments coincide."""
    return (x * y) * z - x * (y * z)


def exp(x):
    """Octonion exponential exp(Re x) * (cos|Im x| + sin|Im x| * unit(Im x))."""
    im = x.coeffs[1:]
    r = float(np.linalg.norm(im))
    s = math.exp(x.real)
    arr = np.zeros(8)
    arr[0] = s * math.cos(r)
    if r > 0.0:
        arr[1:] = im * (s * math.sin(r) / r)
    return Octonion._wrap(arr)


def conj_antiautomorphism_check(x, y):
    """Residual norm of conj(x*y) - conj(y)*conj(x)."""
    return ((x * y).conj() - y.conj() * x.conj()).norm()


@dataclass(frozen=True)
class CayleyDicksonPair:
    """Quaternion pair (x1, x2) with x = x1 + x2 * l.

    Each half is stored as four coefficients over (1, i, j, k).
    """

    x1: tuple
    x2: tuple


def cd_split(x):
    """Split an octonion into its doubling pair of quaternions."""
    c = x.coeffs
    return CayleyDicksonPair(
        x1=(c[0], c[1], c[2], c[3]),
        x2=(c[7], c[6], c[5], c[4]),
    )


def cd_join(pair):
    """Rebuild an octonion from a doubling pair. Inverse of cd_split."""
    w1, x1, y1, z1 = pair.x1
    w2, x2, y2, z2 = pair.x2
    return Octonion((w1, x1, y1, z1, z2, y2, x2, w2))


class _RealSpan:
    """Marker: all inputs were real, so any complex subalgebra contains them."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "REAL_SPAN"


REAL_SPAN = _RealSpan()


class Infinity:
    """Marker for the point at infinity on a projective line."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __str__(self):
        return "inf"


INFINITY = Infinity()


def spans_complex_subalgebra(xs, eps=None):
    """Test whether all xs lie in one complex subalgebra R + R*u.

    Returns the shared unit imaginary direction u when one exists,
    REAL_SPAN when every input is real (any direction works), or None
    when the imaginary parts point along more than one direction. The
    returned direction is sign-normalized so its first nonzero
    coefficient is positive.
    """
    if eps is None:
        eps = DEFAULT_EPS
    xs = list(xs)
    if not xs:
        return REAL_SPAN
    scale = max(1.0, max(x.norm() for x in xs))
    ims = [x.coeffs[1:] for x in xs]
    norms = [float(np.linalg.norm(v)) for v in ims]
    best = int(np.argmax(norms))
    if norms[best] <= eps * scale:
        return REAL_SPAN
    u = ims[best] / norms[best]
    for v in ims:
        residual = float(np.linalg.norm(v - (v @ u) * u))
        if residual > eps * scale:
            return None
    for comp in u:
        if abs(comp) > 1e-14:
            if comp < 0:
                u = -u
            break
    arr = np.zeros(8)
    arr[1:] = u
    return Octonion._wrap(arr)

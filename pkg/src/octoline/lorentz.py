"""Vector and spinor transformations by 2x2 octonionic matrices.

A matrix M acts on a Hermitian matrix A as M A M-dagger. With
octonionic entries the two parenthesizations (MA)M-dagger and
M(A M-dagger) need not agree, so the checked entry point evaluates
both and insists they match. Well-definedness holds when the entries
lie in one complex subalgebra, or when the imaginary parts of the two
columns are real multiples of each other.

Compositions are expressed by nesting sandwiches, never by
multiplying the matrices themselves, since the matrix product of two
valid transformations generally leaves the valid class.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .config import DEFAULT_EPS, PREDICATE_EPS
from .core import Octonion, spans_complex_subalgebra
from .errors import NegativeDeterminant, NotCompatible, NotComplex, NotWellDefined
from .minkowski import HermitianMatrix, Spinor


@dataclass(frozen=True)
class TransformMatrix:
    """2x2 octonionic matrix [[alpha, beta], [gamma, delta]]."""

    alpha: Octonion
    beta: Octonion
    gamma: Octonion
    delta: Octonion

    def entries(self):
        return (self.alpha, self.beta, self.gamma, self.delta)

    def scale(self):
        return max(1.0, max(x.norm() for x in self.entries()))

    @classmethod
    def identity(cls):
        one = Octonion.one()
        zero = Octonion.zero()
        return cls(one, zero, zero, one)

    @classmethod
    def diagonal(cls, alpha, delta):
        zero = Octonion.zero()
        return cls(alpha, zero, zero, delta)

    def to_obj(self):
        return {
            "alpha": self.alpha.tolist(),
            "beta": self.beta.tolist(),
            "gamma": self.gamma.tolist(),
            "delta": self.delta.tolist(),
        }

    @classmethod
    def from_obj(cls, obj):
        return cls(
            alpha=Octonion(obj["alpha"]),
            beta=Octonion(obj["beta"]),
            gamma=Octonion(obj["gamma"]),
            delta=Octonion(obj["delta"]),
        )


@dataclass(frozen=True)
class Matrix2:
    """General 2x2 octonionic matrix, used for unchecked sandwich output."""

    e00: Octonion
    e01: Octonion
    e10: Octonion
    e11: Octonion

    def distance(self, other):
        return max(
            (self.e00 - other.e00).norm(),
            (self.e01 - other.e01).norm(),
            (self.e10 - other.e10).norm(),
            (self.e11 - other.e11).norm(),
        )

    def norm(self):
        return max(x.norm() for x in (self.e00, self.e01, self.e10, self.e11))

    def hermitian_defect(self):
        """How far the matrix is from being Hermitian."""
        return max(
            self.e00.imag.norm(),
            self.e11.imag.norm(),
            (self.e10 - self.e01.conj()).norm(),
        )

    def to_hermitian(self, eps=PREDICATE_EPS):
        scale = max(1.0, self.norm())
        if self.hermitian_defect() > eps * scale:
            raise NotWellDefined(f"matrix is not Hermitian within {eps:g}")
        return HermitianMatrix(
            p=self.e00.real,
            m=self.e11.real,
            a=(self.e01 + self.e10.conj()) * 0.5,
        )


def _sandwich_left(mat, A):
    """(M A) M-dagger, expanded entrywise."""
    al, be, ga, de = mat.entries()
    a = A.a
    abar = a.conj()
    x00 = al * A.p + be * abar
    x01 = al * a + be * A.m
    x10 = ga * A.p + de * abar
    x11 = ga * a + de * A.m
    return Matrix2(
        e00=x00 * al.conj() + x01 * be.conj(),
        e01=x00 * ga.conj() + x01 * de.conj(),
        e10=x10 * al.conj() + x11 * be.conj(),
        e11=x10 * ga.conj() + x11 * de.conj(),
    )


def _sandwich_right(mat, A):
    """M (A M-dagger), expanded entrywise."""
    al, be, ga, de = mat.entries()
    a = A.a
    abar = a.conj()
    y00 = A.p * al.conj() + a * be.conj()
    y01 = A.p * ga.conj() + a * de.conj()
    y10 = abar * al.conj() + A.m * be.conj()
    y11 = abar * ga.conj() + A.m * de.conj()
    return Matrix2(
        e00=al * y00 + be * y10,
        e01=al * y01 + be * y11,
        e10=ga * y00 + de * y10,
        e11=ga * y01 + de * y11,
    )


def apply_vector_unchecked(mat, A, order="left"):
    """One parenthesization of the sandwich, kept for counterexample work.

    order 'left' evaluates (M A) M-dagger, 'right' evaluates
    M (A M-dagger). No agreement or Hermiticity checks.
    """
    if order == "left":
        return _sandwich_left(mat, A)
    if order == "right":
        return _sandwich_right(mat, A)
    raise ValueError(f"order must be 'left' or 'right', got {order!r}")


def parenthesization_gap(mat, A):
    """Distance between the two sandwich parenthesizations."""
    return _sandwich_left(mat, A).distance(_sandwich_right(mat, A))


def apply_vector(mat, A, eps=PREDICATE_EPS):
    """Transform a Hermitian matrix, checking the action is unambiguous.

    Both parenthesizations are evaluated; if they disagree, or the
    result fails to be Hermitian, NotWellDefined is raised. Returns
    the symmetrized left evaluation.
    """
    left = _sandwich_left(mat, A)
    right = _sandwich_right(mat, A)
    scale = max(1.0, left.norm(), right.norm())
    if left.distance(right) > eps * scale:
        raise NotWellDefined(
            f"parenthesizations differ by {left.distance(right):g} at scale {scale:g}"
        )
    return left.to_hermitian(eps)


def apply_vector_nested(chain, A, eps=PREDICATE_EPS):
    """Apply a chain of sandwiches, first element innermost."""
    for mat in chain:
        A = apply_vector(mat, A, eps)
    return A


def apply_spinor_unchecked(mat, spinor):
    """Linear action on a two component column; always evaluable."""
    al, be, ga, de = mat.entries()
    return Spinor(b=al * spinor.b + be * spinor.c, c=ga * spinor.b + de * spinor.c)


def apply_spinor(mat, spinor, eps=PREDICATE_EPS):
    """Spinor transport; requires a compatible matrix.

    Compatibility (entries in one complex subalgebra, real determinant)
    is exactly what makes the outer product square of the transformed
    spinor equal the transformed square.
    """
    if not is_compatible(mat, eps):
        raise NotCompatible("matrix entries must span a complex subalgebra with real determinant")
    return apply_spinor_unchecked(mat, spinor)


def apply_spinor_nested(chain, spinor, eps=PREDICATE_EPS):
    for mat in chain:
        spinor = apply_spinor(mat, spinor, eps)
    return spinor


def is_well_defined(mat, eps=PREDICATE_EPS):
    """Whether M A M-dagger is parenthesization independent for all A.

    True when the four entries lie in a single complex subalgebra, or
    when the stacked imaginary parts of the two columns (alpha, gamma)
    and (beta, delta) are real multiples of each other.
    """
    if spans_complex_subalgebra(mat.entries(), eps) is not None:
        return True
    scale = mat.scale()
    u = np.concatenate([mat.alpha.coeffs[1:], mat.gamma.coeffs[1:]])
    v = np.concatenate([mat.beta.coeffs[1:], mat.delta.coeffs[1:]])
    nu = float(np.linalg.norm(u))
    nv = float(np.linalg.norm(v))
    if min(nu, nv) <= eps * scale:
        return True
    if nu < nv:
        u, v, nu, nv = v, u, nv, nu
    uhat = u / nu
    residual = float(np.linalg.norm(v - (v @ uhat) * uhat))
    return residual <= eps * scale


def mmdagger(mat):
    """The Hermitian product M M-dagger."""
    al, be, ga, de = mat.entries()
    return HermitianMatrix(
        p=al.norm_sq() + be.norm_sq(),
        m=ga.norm_sq() + de.norm_sq(),
        a=al * ga.conj() + be * de.conj(),
    )


def det_mmdagger(mat):
    """Determinant of M M-dagger; the sandwich scales determinants by this."""
    return mmdagger(mat).det()


def dieudonne_det(mat, eps=PREDICATE_EPS):
    """Square root of det(M M-dagger)."""
    d = det_mmdagger(mat)
    if d < -eps * mat.scale() ** 4:
        raise NegativeDeterminant(f"det(M M-dagger) = {d:g}")
    return math.sqrt(max(d, 0.0))


def complex_det(mat, eps=PREDICATE_EPS):
    """alpha*delta - beta*gamma for a matrix inside one complex subalgebra."""
    if spans_complex_subalgebra(mat.entries(), eps) is None:
        raise NotComplex("matrix entries do not span a complex subalgebra")
    return mat.alpha * mat.delta - mat.beta * mat.gamma


def is_compatible(mat, eps=PREDICATE_EPS):
    """Entries in one complex subalgebra and real determinant.

    This is the class whose vector action is induced by the spinor
    action: square then transform equals transform then square.
    """
    if spans_complex_subalgebra(mat.entries(), eps) is None:
        return False
    det = mat.alpha * mat.delta - mat.beta * mat.gamma
    return det.imag.norm() <= eps * max(1.0, mat.scale() ** 2)


def compatibility_residual(mat, spinor, eps=PREDICATE_EPS):
    """Distance between square-then-transform and transform-then-square."""
    transported = apply_spinor_unchecked(mat, spinor).square()
    pushed = apply_vector(mat, spinor.square(), eps)
    return transported.distance(pushed)


class NestedChain:
    """Ordered list of matrices applied by nesting, first one innermost.

    The checked constructor requires every element to be compatible,
    which keeps both the vector and the spinor action valid. Use
    unchecked() to carry arbitrary matrices for counterexample work.
    """

    __slots__ = ("matrices",)

    def __init__(self, matrices, eps=PREDICATE_EPS):
        matrices = tuple(matrices)
        for d, mat in enumerate(matrices):
            if not is_compatible(mat, eps):
                raise NotCompatible(f"chain element {d} is not compatible")
        self.matrices = matrices

    @classmethod
    def unchecked(cls, matrices):
        self = object.__new__(cls)
        self.matrices = tuple(matrices)
        return self

    def __iter__(self):
        return iter(self.matrices)

    def __len__(self):
        return len(self.matrices)

    def __repr__(self):
        return f"NestedChain({list(self.matrices)!r})"

    def apply_vector(self, A, eps=PREDICATE_EPS):
        return apply_vector_nested(self.matrices, A, eps)

    def apply_spinor(self, spinor, eps=PREDICATE_EPS):
        return apply_spinor_nested(self.matrices, spinor, eps)

    def to_obj(self):
        return [mat.to_obj() for mat in self.matrices]

    @classmethod
    def from_obj(cls, obj, checked=True):
        matrices = [TransformMatrix.from_obj(entry) for entry in obj]
        return cls(matrices) if checked else cls.unchecked(matrices)


def boost(rho):
    """Boost of rapidity rho along the longitudinal axis."""
    half = 0.5 * rho
    return TransformMatrix.diagonal(
        Octonion.from_real(math.exp(half)), Octonion.from_real(math.exp(-half))
    )


def rotation(u, theta):
    """Rotation by theta in the plane of the real slot and the unit imaginary u."""
    if not u.is_imaginary_unit(PREDICATE_EPS):
        raise ValueError("rotation direction must be a unit imaginary octonion")
    c = math.cos(0.5 * theta)
    s = math.sin(0.5 * theta)
    return TransformMatrix.diagonal(c + s * u, c - s * u)


def null_upper(z):
    """Upper triangular null generator [[1, z], [0, 1]]."""
    one = Octonion.one()
    zero = Octonion.zero()
    return TransformMatrix(one, z, zero, one)


def null_lower(z):
    """Lower triangular null generator [[1, 0], [z, 1]]."""
    one = Octonion.one()
    zero = Octonion.zero()
    return TransformMatrix(one, zero, z, one)


def flip(u):
    """Direction flip u * identity.

    Fixes the real slot and the u slot among the transverse directions
    and negates the six perpendicular imaginary slots.
    """
    if not u.is_imaginary_unit(PREDICATE_EPS):
        raise ValueError("flip direction must be a unit imaginary octonion")
    return TransformMatrix.diagonal(u, u)


def transverse_rotation(u, w, theta):
    """Two flips realizing a rotation by theta in the (u, w) plane.

    u and w must be orthogonal unit imaginary directions. Each flip is
    compatible on its own; their nesting rotates the plane they span
    by twice the half angle used for the second flip.
    """
    if abs(float(u.coeffs @ w.coeffs)) > PREDICATE_EPS:
        raise ValueError("flip directions must be orthogonal")
    second = math.cos(0.5 * theta) * u + math.sin(0.5 * theta) * w
    return NestedChain([flip(u), flip(second)])


def generator_catalog():
    """Deterministic list of (name, matrix) generators for test sweeps.

    Every entry is compatible and has unit Dieudonne determinant.
    """
    i = Octonion.unit("i")
    j = Octonion.unit("j")
    kl = Octonion.unit("kl")
    jl = Octonion.unit("jl")
    il = Octonion.unit("il")
    ell = Octonion.unit("l")
    s2 = 1.0 / math.sqrt(2.0)
    entries = [
        ("identity", TransformMatrix.identity()),
        ("boost+0.3", boost(0.3)),
        ("boost-1.0", boost(-1.0)),
        ("rot(i,0.7)", rotation(i, 0.7)),
        ("rot(l,2.1)", rotation(ell, 2.1)),
        ("rot(kl,1.2)", rotation(kl, 1.2)),
        ("rot((i+kl)/r2,0.9)", rotation(s2 * (i + kl), 0.9)),
        ("null_upper(0.4)", null_upper(Octonion.from_real(0.4))),
        ("null_upper(0.3i+0.6l)", null_upper(0.3 * i + 0.6 * ell)),
        ("null_lower(1.1jl)", null_lower(1.1 * jl)),
        ("null_lower(0.2-0.5il)", null_lower(Octonion.from_real(0.2) - 0.5 * il)),
        ("flip(i)", flip(i)),
        ("flip(l)", flip(ell)),
        ("flip(jl)", flip(jl)),
        ("flip((j+il)/r2)", flip(s2 * (j + il))),
    ]
    return entries

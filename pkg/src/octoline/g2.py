"""Candidate automorphism forms of the octonions and a conformal map on R8.

Three closed forms parameterized by unit octonions a, b are provided,
together with the criterion word equality ababa = b a^3 b that decides
exactly when they are automorphisms, and a family of nested forms
built from conjugation sandwiches that are automorphisms for every
valid parameter choice. When c and d are orthogonal the nested forms
match the closed forms under the identification c = a e, d = b e.

Every product below is bracketed explicitly. The chosen bracketings
are the canonical ones; each sandwich (u x) v with u, v in a common
complex subalgebra is unambiguous by the two-direction associativity
of the algebra.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .config import DEFAULT_EPS, PREDICATE_EPS
from .core import Octonion, inner
from .errors import InvalidEll, NotOrthogonal, PoleHit, ZeroParameter


class FormVariant(str, Enum):
    GTWO = "gtwo"
    SPINOR_I = "spinor_i"
    SPINOR_II = "spinor_ii"


class NestedVariant(str, Enum):
    CAM_I = "cam_i"
    CAM_II_LEFT = "cam_ii_left"
    CAM_II_RIGHT = "cam_ii_right"


@dataclass(frozen=True)
class AutomorphismForm:
    """Closed form candidate parameterized by two unit octonions."""

    variant: FormVariant
    a: Octonion
    b: Octonion

    def __post_init__(self):
        object.__setattr__(self, "variant", FormVariant(self.variant))
        for name, x in (("a", self.a), ("b", self.b)):
            if abs(x.norm() - 1.0) > PREDICATE_EPS:
                raise ValueError(f"{name} must have unit norm, got {x.norm():g}")

    def __call__(self, y):
        return eval_form(self, y)

    def to_obj(self):
        return {"variant": self.variant.value, "a": self.a.tolist(), "b": self.b.tolist()}

    @classmethod
    def from_obj(cls, obj):
        return cls(FormVariant(obj["variant"]), Octonion(obj["a"]), Octonion(obj["b"]))


@dataclass(frozen=True)
class NestedForm:
    """Nested sandwich form with pure imaginary unit parameters.

    ell must be an imaginary unit orthogonal to the quaternionic span
    of c and d, that is to c, to d, and to the imaginary part of cd.
    """

    variant: NestedVariant
    c: Octonion
    d: Octonion
    ell: Octonion

    def __post_init__(self):
        object.__setattr__(self, "variant", NestedVariant(self.variant))
        for name, x in (("c", self.c), ("d", self.d), ("ell", self.ell)):
            if not x.is_imaginary_unit(PREDICATE_EPS):
                raise ValueError(f"{name} must be a pure imaginary unit octonion")
        for name, x in (("c", self.c), ("d", self.d)):
            if abs(inner(self.ell, x)) > PREDICATE_EPS:
                raise InvalidEll(f"ell is not orthogonal to {name}")
        q = (self.c * self.d).imag
        qn = q.norm()
        if qn > PREDICATE_EPS and abs(inner(self.ell, q)) > PREDICATE_EPS * qn:
            raise InvalidEll("ell is not orthogonal to the imaginary part of c*d")

    def __call__(self, y):
        return eval_nested(self, y)

    def to_obj(self):
        return {
            "variant": self.variant.value,
            "c": self.c.tolist(),
            "d": self.d.tolist(),
            "ell": self.ell.tolist(),
        }

    @classmethod
    def from_obj(cls, obj):
        return cls(
            NestedVariant(obj["variant"]),
            Octonion(obj["c"]),
            Octonion(obj["d"]),
            Octonion(obj["ell"]),
        )


def eval_form(form, y):
    """Evaluate a closed form at y with its canonical bracketing."""
    a, b = form.a, form.b
    if form.variant is FormVariant.GTWO:
        p = a * b
        mid = (b * ((a * y) * a.conj())) * b.conj()
        return (p.conj() * mid) * p
    if form.variant is FormVariant.SPINOR_I:
        p = (a * b).conj()
        mid = (b * ((a * y) * (a * a))) * (b * b)
        return (p * mid) * (p * p)
    if form.variant is FormVariant.SPINOR_II:
        r = a * b
        ac = a.conj()
        bc = b.conj()
        mid = ((bc * bc) * (((ac * ac) * y) * ac)) * bc
        return ((r * r) * mid) * r
    raise ValueError(f"unknown variant {form.variant!r}")


def eval_nested(form, y):
    """Evaluate a nested form at y with its canonical bracketing."""
    c, d, ell = form.c, form.d, form.ell
    lc = c * ell
    ld = d * ell
    if form.variant is NestedVariant.CAM_I:
        t = (c * y) * c.conj()
        t = (d * t) * d.conj()
        t = (lc * t) * lc.conj()
        return (ld * t) * ld.conj()
    if form.variant is NestedVariant.CAM_II_LEFT:
        return ld * (lc * (d * (c * y)))
    if form.variant is NestedVariant.CAM_II_RIGHT:
        return (((y * c.conj()) * d.conj()) * lc.conj()) * ld.conj()
    raise ValueError(f"unknown variant {form.variant!r}")


def td_words(a, b):
    """The two canonical criterion words (ababa, b a^3 b)."""
    ababa = (((a * b) * a) * b) * a
    ba3b = (b * (a * (a * a))) * b
    return ababa, ba3b


def td_criterion(a, b):
    """Criterion residual ababa - b a^3 b.

    The closed forms are automorphisms exactly when this vanishes.
    Powers of a single element associate, and any word in just a and b
    is bracketing independent, so one canonical order suffices.
    """
    ababa, ba3b = td_words(a, b)
    return ababa - ba3b


def is_automorphism(form, samples=200, seed=0, eps=PREDICATE_EPS):
    """Sampled automorphism test.

    Draws `samples` unit octonion pairs (x, y) and measures
    ||phi(xy) - phi(x) phi(y)||. Returns (ok, max residual) where ok
    means the max stayed at or below eps. Accepts a closed form, a
    nested form, or any callable on octonions.
    """
    phi = form if callable(form) else None
    if phi is None:
        raise TypeError(f"expected a callable form, got {type(form).__name__}")
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(samples):
        x = _unit_octonion(rng)
        y = _unit_octonion(rng)
        defect = (phi(x * y) - phi(x) * phi(y)).norm()
        worst = max(worst, defect)
    return worst <= eps, worst


def _unit_octonion(rng):
    v = rng.standard_normal(8)
    return Octonion(v / np.linalg.norm(v))


def _imaginary_unit(rng):
    v = rng.standard_normal(8)
    v[0] = 0.0
    return Octonion(v / np.linalg.norm(v))


def agreement_check(c, d, ell, e_dir, samples=50, seed=0):
    """Compare each nested form against its closed form counterpart.

    Requires orthogonal pure imaginary units c, d. The closed form
    parameters are recovered from the identification c = a e, d = b e
    as a = c * e^{-1}, b = d * e^{-1}. Pairs compared: CAM_I with
    GTWO, CAM_II_LEFT with SPINOR_I, CAM_II_RIGHT with SPINOR_II.
    Returns the max residual over forms and sampled y.
    """
    for name, x in (("c", c), ("d", d)):
        if not x.is_imaginary_unit(PREDICATE_EPS):
            raise ValueError(f"{name} must be a pure imaginary unit octonion")
    if abs(inner(c, d)) > PREDICATE_EPS:
        raise NotOrthogonal(f"<c, d> = {inner(c, d):g} must vanish")
    if not e_dir.is_imaginary_unit(PREDICATE_EPS):
        raise ValueError("e_dir must be a pure imaginary unit octonion")
    a = c * e_dir.inverse()
    b = d * e_dir.inverse()
    pairs = (
        (NestedVariant.CAM_I, FormVariant.GTWO),
        (NestedVariant.CAM_II_LEFT, FormVariant.SPINOR_I),
        (NestedVariant.CAM_II_RIGHT, FormVariant.SPINOR_II),
    )
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(samples):
        y = _unit_octonion(rng)
        for nested_variant, form_variant in pairs:
            nested = NestedForm(nested_variant, c, d, ell)
            closed = AutomorphismForm(form_variant, a, b)
            worst = max(worst, (nested(y) - closed(y)).norm())
    return worst


@dataclass(frozen=True)
class ConformalParams:
    """Parameters of the composed conformal map on R8.

    lam dilates, A translates the inversion center, C shifts between
    the two inversions, K and L are unit rotation parameters, U and V
    drive the outer sandwich pair.
    """

    lam: float
    A: Octonion
    C: Octonion
    K: Octonion
    L: Octonion
    U: Octonion
    V: Octonion

    def __post_init__(self):
        if self.lam == 0.0:
            raise ZeroParameter("lam must be nonzero")
        for name, x in (("U", self.U), ("V", self.V)):
            if x.norm_sq() == 0.0:
                raise ZeroParameter(f"{name} must be nonzero")
        for name, x in (("K", self.K), ("L", self.L)):
            if abs(x.norm() - 1.0) > PREDICATE_EPS:
                raise ValueError(f"{name} must have unit norm, got {x.norm():g}")

    @classmethod
    def trivial(cls, lam=1.0):
        one = Octonion.one()
        zero = Octonion.zero()
        return cls(lam=lam, A=zero, C=zero, K=one, L=one, U=one, V=one)

    def to_obj(self):
        return {
            "lam": self.lam,
            "A": self.A.tolist(),
            "C": self.C.tolist(),
            "K": self.K.tolist(),
            "L": self.L.tolist(),
            "U": self.U.tolist(),
            "V": self.V.tolist(),
        }

    @classmethod
    def from_obj(cls, obj):
        return cls(
            lam=float(obj["lam"]),
            A=Octonion(obj["A"]),
            C=Octonion(obj["C"]),
            K=Octonion(obj["K"]),
            L=Octonion(obj["L"]),
            U=Octonion(obj["U"]),
            V=Octonion(obj["V"]),
        )


def apply_gt(params, x, reverse_kl=False, extra_g2=None, eps=DEFAULT_EPS):
    """Evaluate the composed conformal map at x, innermost factor out.

    The pipeline is: translate by A, invert, scale by lam and shift by
    conj(C), invert again, then the sandwich stack: L on the left with
    conj(L) on the right, K on both sides unconjugated, U with its
    inverse, V with its inverse, and finally (UV)^{-1} paired with UV.
    reverse_kl swaps the K and L stages. extra_g2 post-composes a
    NestedForm (or any callable), reflecting that the decomposition
    needs at least one more automorphism factor.
    """
    t = x - params.A
    if t.norm() <= eps * max(1.0, x.norm(), params.A.norm()):
        raise PoleHit("x - A vanishes at the inversion pole")
    t = params.lam * t.inverse() + params.C.conj()
    t = t.inverse()
    K, L, U, V = params.K, params.L, params.U, params.V
    if reverse_kl:
        t = (K * t) * K
        t = (L * t) * L.conj()
    else:
        t = (L * t) * L.conj()
        t = (K * t) * K
    t = (U * t) * U.inverse()
    t = (V * t) * V.inverse()
    uv = U * V
    out = (uv.inverse() * t) * uv
    if extra_g2 is not None:
        out = extra_g2(out)
    return out


def automorphism_defect_curve(variant, u, w, epsilons, samples=50, seed=0):
    """Max automorphism defect of a near-identity form at each epsilon.

    Parameters are a = exp(eps * u), b = exp(eps * w) for unit
    imaginary directions u and w; identical sample draws are reused
    across epsilons so the scaling is clean.
    """
    from .core import exp as oct_exp

    defects = []
    for e in epsilons:
        form = AutomorphismForm(variant, oct_exp(e * u), oct_exp(e * w))
        _, worst = is_automorphism(form, samples=samples, seed=seed, eps=math.inf)
        defects.append(worst)
    return defects


def fitted_exponent(epsilons, residuals):
    """Least squares slope of log residual against log epsilon."""
    slope, _ = np.polyfit(np.log(np.asarray(epsilons)), np.log(np.asarray(residuals)), 1)
    return float(slope)


def audit(samples=100, seed=0, eps=PREDICATE_EPS):
    """Automorphism audit across parameter families, one record per draw.

    Each record carries the variant, the parameters, the criterion
    residual where it applies, the sampled max defect, and the verdict.
    Used by the command line audit report.
    """
    rng = np.random.default_rng(seed)
    records = []

    def record(form, kind, td=None):
        ok, worst = is_automorphism(form, samples=samples, seed=seed, eps=eps)
        entry = {
            "family": kind,
            "form": form.to_obj(),
            "max_defect": worst,
            "is_automorphism": ok,
        }
        if td is not None:
            entry["td_residual"] = td
        records.append(entry)

    for variant in FormVariant:
        u = _imaginary_unit(rng)
        w_raw = _imaginary_unit(rng)
        w = w_raw - inner(w_raw, u) * u
        w = w * (1.0 / w.norm())
        record(AutomorphismForm(variant, u, w), "orthogonal-imaginary", td=td_criterion(u, w).norm())
        g = _unit_octonion(rng)
        h = _unit_octonion(rng)
        record(AutomorphismForm(variant, g, h), "generic-unit", td=td_criterion(g, h).norm())
    c = _imaginary_unit(rng)
    d_raw = _imaginary_unit(rng)
    d = d_raw - inner(d_raw, c) * c
    d = d * (1.0 / d.norm())
    ell = _orthogonal_ell(rng, c, d)
    for variant in NestedVariant:
        record(NestedForm(variant, c, d, ell), "nested-valid")
    return records


def _orthogonal_ell(rng, c, d):
    """Random imaginary unit orthogonal to the quaternionic span of c, d."""
    raw = [c.coeffs[1:], d.coeffs[1:], (c * d).imag.coeffs[1:]]
    basis = []
    for b in raw:
        b = np.asarray(b, dtype=float).copy()
        for e in basis:
            b -= (b @ e) * e
        nb = np.linalg.norm(b)
        if nb > PREDICATE_EPS:
            basis.append(b / nb)
    v = rng.standard_normal(7)
    for e in basis:
        v -= (v @ e) * e
    n = np.linalg.norm(v)
    if n < 1e-6:
        return _orthogonal_ell(rng, c, d)
    arr = np.zeros(8)
    arr[1:] = v / n
    return Octonion(arr)

"""Bilinear forms attached to an acyclic quiver and type classification.

The nonsymmetric form <d, e> = sum d_i e_i - sum_{arrows t->h} d_t e_h has
matrix E; its symmetrization A = E + E^T has diagonal 2 and encodes the
quadratic form q(x) = <x, x>.  The matrix -E^{-1} E^T acts on dimension
vectors the way the translate tau acts on modules without projective
summands, and sends each projective's vector to minus the corresponding
injective's.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from . import linalg
from .errors import NotPositiveError, ZeroVectorError
from .quiver import Quiver, connected_components, full_subquiver

IntVector = tuple[int, ...]


@dataclass(frozen=True)
class FormData:
    """Euler form matrix E, symmetrization A, translate matrix C = -E^{-1}E^T,
    and C's inverse, all exact integer matrices."""

    quiver: Quiver
    euler_matrix: tuple[tuple[int, ...], ...]
    symmetric_matrix: tuple[tuple[int, ...], ...]
    coxeter: tuple[tuple[int, ...], ...]
    coxeter_inverse: tuple[tuple[int, ...], ...]


_form_cache: dict[Quiver, FormData] = {}


def form_data(q: Quiver) -> FormData:
    cached = _form_cache.get(q)
    if cached is not None:
        return cached
    n = q.n
    e = [[int(i == j) for j in range(n)] for i in range(n)]
    for t, h in q.arrows:
        e[t - 1][h - 1] -= 1
    em = tuple(tuple(row) for row in e)
    et = linalg.transpose(em)
    a = tuple(tuple(x + y for x, y in zip(r1, r2)) for r1, r2 in zip(em, et))
    einv = linalg.invert_unimodular(em)
    cox = linalg.mat_neg(linalg.mat_mul(einv, et))
    cox_inv = linalg.invert_unimodular(cox)
    out = FormData(q, em, a, cox, cox_inv)
    _form_cache[q] = out
    return out


def euler_form(f: FormData, d, e) -> int:
    """<d, e> = d^T E e."""
    return linalg.dot(d, linalg.mat_vec(f.euler_matrix, e))


def symmetric_form(f: FormData, d, e) -> int:
    """(d, e) = <d, e> + <e, d>."""
    return linalg.dot(d, linalg.mat_vec(f.symmetric_matrix, e))


def tits_form(f: FormData, d) -> int:
    """q(d) = <d, d>."""
    return euler_form(f, d, d)


def coxeter_matrix(f: FormData):
    return f.coxeter


def coxeter_apply(f: FormData, d) -> IntVector:
    return linalg.mat_vec(f.coxeter, d)


def coxeter_apply_inverse(f: FormData, d) -> IntVector:
    return linalg.mat_vec(f.coxeter_inverse, d)


def simple_reflection(f: FormData, i: int, d) -> IntVector:
    """Reflect d at vertex i: d - (d, e_i) e_i.  1-based i."""
    pairing = sum(f.symmetric_matrix[i - 1][j] * d[j] for j in range(len(d)))
    out = list(d)
    out[i - 1] -= pairing
    return tuple(out)


def reflection_pairing(f: FormData, d, i: int) -> int:
    """(d, e_i), 1-based i."""
    return sum(f.symmetric_matrix[i - 1][j] * d[j] for j in range(len(d)))


@dataclass(frozen=True)
class Signature:
    pos: int
    neg: int
    zero: int

    def as_tuple(self):
        return (self.pos, self.neg, self.zero)


def signature_of(f: FormData) -> Signature:
    return Signature(*linalg.signature(f.symmetric_matrix))


class BaseType(Enum):
    DYNKIN = "Dynkin"
    EUCLIDEAN = "Euclidean"
    WILD = "Wild"


@dataclass(frozen=True)
class QuiverClass:
    """Classification of a quiver by the inertia of its symmetrized form.

    base is the type of the whole quiver when connected; for disconnected
    quivers it is the worst component type (Dynkin < Euclidean < Wild),
    with the per-component breakdown in component_types.
    """

    base: BaseType
    component_types: tuple[BaseType, ...]
    components: tuple[tuple[int, ...], ...]
    signature: Signature
    connected: bool
    at_most_weakly_hyperbolic: bool
    weakly_hyperbolic: bool


def _component_type(sig: Signature) -> BaseType:
    if sig.neg == 0 and sig.zero == 0:
        return BaseType.DYNKIN
    if sig.neg == 0 and sig.zero == 1:
        return BaseType.EUCLIDEAN
    return BaseType.WILD


def classify(q: Quiver) -> QuiverClass:
    """Type per connected component plus global hyperbolicity flags.

    Positive definite means Dynkin; positive semidefinite with a
    one-dimensional kernel means Euclidean (connected case); anything
    else is wild.  The global signature decides the hyperbolicity flags:
    at most weakly hyperbolic when neg + zero <= 1, weakly hyperbolic
    when the signature is (n-1, 1, 0).
    """
    comps = connected_components(q)
    ctypes = []
    for comp in comps:
        sub, _ = full_subquiver(q, comp)
        sig = signature_of(form_data(sub))
        ctypes.append(_component_type(sig))
    sig = signature_of(form_data(q))
    order = [BaseType.DYNKIN, BaseType.EUCLIDEAN, BaseType.WILD]
    base = max(ctypes, key=order.index)
    return QuiverClass(
        base=base,
        component_types=tuple(ctypes),
        components=tuple(comps),
        signature=sig,
        connected=len(comps) == 1,
        at_most_weakly_hyperbolic=sig.neg + sig.zero <= 1,
        weakly_hyperbolic=sig.neg == 1 and sig.zero == 0,
    )


# dimension vector helpers

def check_dimension(q: Quiver, d) -> IntVector:
    d = tuple(int(x) for x in d)
    if len(d) != q.n:
        raise ValueError(f"expected {q.n} entries, got {len(d)}")
    return d


def height(d) -> int:
    """s(d): sum of entries."""
    return sum(d)


def is_zero(d) -> bool:
    return all(x == 0 for x in d)


def is_nonneg(d) -> bool:
    return all(x >= 0 for x in d)


def is_positive_nonzero(d) -> bool:
    return is_nonneg(d) and not is_zero(d)


def require_positive(q: Quiver, d) -> IntVector:
    d = check_dimension(q, d)
    if is_zero(d):
        raise ZeroVectorError("zero dimension vector")
    if not is_nonneg(d):
        raise NotPositiveError(f"vector {d} has a negative entry")
    return d


def support(d) -> tuple[int, ...]:
    return tuple(i for i, x in enumerate(d) if x != 0)


def null_vector_of_component(f: FormData) -> IntVector | None:
    """Primitive positive integer kernel vector of A, when the kernel is
    one-dimensional (Euclidean case); None otherwise."""
    v = linalg.kernel_vector(f.symmetric_matrix)
    if v is None:
        return None
    prim = linalg.primitive_integer_vector(v)
    # confirm kernel is 1-dimensional: rank must be n - 1
    n = len(prim)
    if linalg.rank_bareiss([list(r) for r in f.symmetric_matrix]) != n - 1:
        return None
    if any(x <= 0 for x in prim):
        return None
    return prim

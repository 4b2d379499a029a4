"""Accumulation rays of real Schur roots.

Normalized real Schur roots can only pile up on the quadric q = 0.  This
module computes the candidate limits and checks the expected behavior
empirically: the special eigenvectors y- and y+ of the Coxeter matrix,
tau-orbit convergence toward them, isotropic rays cut out on segments
between the two relative simples of a rank-two subcategory, rational
accumulation detection, and a handful of numeric probes (neighborhood
stability of strict imaginary summands, tangency of pairing hyperplanes,
sign of q along segments, avoidance of y+- by the rank-two segments).

Three tolerance scales are kept deliberately distinct: 1e-12 for the
power-iteration step, 1e-9 for merging rays, 1e-6 for empirical margins.
"""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction

from .errors import (
    DynkinInputError,
    NoConvergenceError,
    NotIsotropicSchurError,
    NotOnQuadricError,
    NotRealSchurError,
    PreconditionFailedError,
)
from .forms import (
    BaseType,
    FormData,
    classify,
    euler_form,
    form_data,
    height,
    null_vector_of_component,
    require_positive,
    symmetric_form,
    tits_form,
)
from .homext import HomExtTable, table_for
from .quadratic import QuadExt, quadratic_roots
from .quiver import Quiver
from .roots import (
    Ray,
    RootKind,
    enumerate_real_schur_roots,
    is_schur,
    normalize,
    ray_distance,
    root_classify,
)
from .candecomp import (
    SchurSequenceState,
    SequenceEntry,
    canonical_decomposition,
    refine_isotropic,
)

STEP_TOL = 1e-12
MERGE_TOL = 1e-9
MARGIN_TOL = 1e-6
POWER_CAP = 200_000


def _form(q: Quiver | FormData) -> FormData:
    return q if isinstance(q, FormData) else form_data(q)


@dataclass(frozen=True)
class SpecialEigenData:
    lambda_plus: float
    lambda_minus: float
    y_minus: Ray
    y_plus: Ray
    euclidean_degenerate: bool
    residual: float


def _power_ray(m, tol: float = STEP_TOL, cap: int = POWER_CAP):
    """Dominant-eigenvector ray of an integer matrix by power iteration.

    Iterates from all-ones (never deficient against a strictly positive
    eigenvector), renormalizing to coordinate sum 1; returns (ray entries,
    eigenvalue estimate).  The estimate is sum(m v) for the sum-1 iterate v,
    which converges to the dominant eigenvalue.
    """
    n = len(m)
    v = [1.0 / n] * n
    for _ in range(cap):
        w = [float(sum(m[i][j] * v[j] for j in range(n))) for i in range(n)]
        s = sum(w)
        if s == 0.0 or not math.isfinite(s):
            raise NoConvergenceError("power iteration produced a degenerate iterate")
        w = [x / s for x in w]
        if max(abs(a - b) for a, b in zip(w, v)) <= tol:
            return tuple(w), s
        v = w
    raise NoConvergenceError(f"power iteration did not settle in {cap} steps")


def special_eigenvectors(q: Quiver | FormData) -> SpecialEigenData:
    """The rays y-, y+ where normalized real Schur roots can accumulate,
    with the spectral radius of the Coxeter matrix.

    Euclidean quivers are degenerate: both rays coincide with the exact
    rational null ray of the symmetric form and both eigenvalues are 1.
    Wild quivers get float rays from power iteration on C and its inverse.
    """
    f = _form(q)
    info = classify(f.quiver)
    if not info.connected:
        raise PreconditionFailedError("special eigenvectors need a connected quiver")
    if info.base is BaseType.DYNKIN:
        raise DynkinInputError("Dynkin quivers have no special eigenvectors")
    if info.base is BaseType.EUCLIDEAN:
        delta = null_vector_of_component(f)
        assert delta is not None and tits_form(f, delta) == 0
        ray = normalize(delta)
        return SpecialEigenData(1.0, 1.0, ray, ray, True, 0.0)
    plus, lam = _power_ray(f.coxeter)
    minus, _ = _power_ray(f.coxeter_inverse)
    cv = [sum(f.coxeter[i][j] * plus[j] for j in range(len(plus))) for i in range(len(plus))]
    residual = max(abs(a - lam * b) for a, b in zip(cv, plus))
    if any(x <= 0 for x in plus) or any(x <= 0 for x in minus):
        raise NoConvergenceError("power iteration left the positive orthant at convergence")
    return SpecialEigenData(
        lam,
        1.0 / lam,
        Ray(minus, rational=False, error=STEP_TOL),
        Ray(plus, rational=False, error=STEP_TOL),
        False,
        residual,
    )


@dataclass(frozen=True)
class ConvergenceReport:
    target: Ray
    distances: tuple[float, ...]
    aborted: bool
    steps_completed: int


def tau_orbit(q: Quiver | FormData, d, direction: str, steps: int):
    """Rays of the repeated (inverse) Coxeter transform of a real Schur root.

    direction "forward" applies C and heads for y+; "inverse" applies the
    inverse and heads for y-.  The orbit stops early, with partial output,
    as soon as an iterate picks up a negative entry: the root ran off the
    preprojective or preinjective end.
    """
    f = _form(q)
    d = require_positive(f.quiver, d)
    cls = root_classify(f, d)
    if cls.kind is not RootKind.REAL or not is_schur(f, d):
        raise NotRealSchurError(f"{d} is not a real Schur root")
    if direction not in ("forward", "inverse"):
        raise ValueError("direction must be 'forward' or 'inverse'")
    eig = special_eigenvectors(f)
    mat = f.coxeter if direction == "forward" else f.coxeter_inverse
    target = eig.y_plus if direction == "forward" else eig.y_minus
    rays = [normalize(d)]
    aborted = False
    v = d
    for _ in range(steps):
        v = tuple(sum(row[j] * v[j] for j in range(len(v))) for row in mat)
        if any(x < 0 for x in v):
            aborted = True
            break
        rays.append(normalize(v))
    dist = tuple(float(ray_distance(r, target)) for r in rays)
    return rays, ConvergenceReport(target, dist, aborted, len(rays) - 1)


class CategoryType(Enum):
    FINITE = "Finite"
    TAME = "Tame"
    WILD = "Wild"


@dataclass(frozen=True)
class RankTwoInfo:
    alpha: tuple
    beta: tuple
    t: int
    category_type: CategoryType
    isotropic_rays: tuple[Ray, ...]


def _category(t: int) -> CategoryType:
    if t <= 1:
        return CategoryType.FINITE
    if t == 2:
        return CategoryType.TAME
    return CategoryType.WILD


def _isotropic_points(alpha, beta, t):
    """Exact isotropic points on the segment from beta (s=0) to alpha (s=1).

    q(s a + (1-s) b) = (2+t) s^2 - (2+t) s + 1 for an exceptional pair with
    t = -<beta, alpha>; returns (s, exact simplex coordinates) pairs with
    QuadExt entries, empty for t <= 1.
    """
    if t <= 1:
        return ()
    roots = quadratic_roots(2 + t, -(2 + t), 1)
    if t == 2:
        roots = roots[:1]
    sa, sb = height(alpha), height(beta)
    out = []
    for s in roots:
        coords = tuple(s * (a - b) + b for a, b in zip(alpha, beta))
        total = s * (sa - sb) + sb
        out.append((s, tuple(c / total for c in coords)))
    return tuple(out)


def _exact_ray(coords) -> Ray:
    if all(QuadExt.of(c).is_rational() for c in coords):
        return Ray(tuple(Fraction(QuadExt.of(c).u) for c in coords), rational=True)
    return Ray(tuple(float(c) for c in coords), rational=False, error=1e-15)


def rank2_isotropic_rays(f: FormData, info: RankTwoInfo) -> tuple[Ray, ...]:
    points = _isotropic_points(info.alpha, info.beta, info.t)
    return tuple(_exact_ray(coords) for _, coords in points)


def enumerate_exceptional_pairs(q: Quiver | FormData, bound: int) -> tuple[RankTwoInfo, ...]:
    """All exceptional pairs (alpha, beta) of real Schur roots up to the
    height bound: alpha left-orthogonal to beta and <beta, alpha> <= 0,
    so the two roots are the relative simples of the rank-two subcategory
    they generate.  Pairs with t = 0 are direction-free and deduplicated.
    """
    if bound < 1:
        raise ValueError("height bound must be >= 1")
    f = _form(q)
    table = table_for(f)
    roots = enumerate_real_schur_roots(f, bound, table)
    seen_flat = set()
    out = []
    for alpha in roots:
        for beta in roots:
            if alpha == beta:
                continue
            t = -euler_form(f, beta, alpha)
            if t < 0 or not table.left_orthogonal(alpha, beta):
                continue
            if t == 0:
                key = frozenset((alpha, beta))
                if key in seen_flat:
                    continue
                seen_flat.add(key)
            prelim = RankTwoInfo(alpha, beta, t, _category(t), ())
            out.append(replace(prelim, isotropic_rays=rank2_isotropic_rays(f, prelim)))
    return tuple(out)


@dataclass(frozen=True)
class AccumulationPoint:
    ray: Ray
    rational: bool
    pair: tuple
    t: int


def acc2_scan(q: Quiver | FormData, bound: int) -> tuple[AccumulationPoint, ...]:
    """Isotropic rays of all rank-two subcategories up to the height bound.

    Each ray is tagged with one generating pair.  Merging is exact where
    possible: equal quadratic-field coordinates always fuse, and float
    rays closer than 1e-9 fuse as well.
    """
    f = _form(q)
    merged: list[tuple[tuple, AccumulationPoint]] = []
    for info in enumerate_exceptional_pairs(f, bound):
        for _, coords in _isotropic_points(info.alpha, info.beta, info.t):
            ray = _exact_ray(coords)
            hit = False
            for exact, point in merged:
                if exact == coords:
                    hit = True
                    break
                if max(abs(a - b) for a, b in zip(ray.as_floats(), point.ray.as_floats())) <= MERGE_TOL:
                    hit = True
                    break
            if not hit:
                merged.append((coords, AccumulationPoint(ray, ray.rational, (info.alpha, info.beta), info.t)))
    points = [p for _, p in merged]
    points.sort(key=lambda p: p.ray.as_floats())
    return tuple(points)


class RationalAccumulation(Enum):
    YES = "Yes"
    NO = "No"
    NECESSARY_CONDITION_HOLDS = "NecessaryConditionHolds"


def is_rational_accumulation(q: Quiver | FormData, d) -> RationalAccumulation:
    """Whether the ray of d is a rational accumulation ray of real Schur roots.

    Yes exactly when d itself is an isotropic Schur root.  No when the
    canonical decomposition shows an obstruction: a non-isotropic summand,
    or two summands with a nonzero Euler pairing.  The remaining state
    (all summands isotropic and pairwise orthogonal, yet d not Schur)
    stays open in general but collapses to No on at-most-weakly-hyperbolic
    quivers, where the rational accumulation rays are known exactly.
    """
    f = _form(q)
    d = require_positive(f.quiver, d)
    table = table_for(f)
    cls = root_classify(f, d)
    if cls.kind is RootKind.ISOTROPIC and is_schur(f, d, table):
        return RationalAccumulation.YES
    dec = canonical_decomposition(f, d, table)
    if any(e.cls.kind is not RootKind.ISOTROPIC for e in dec.summands):
        return RationalAccumulation.NO
    roots = [e.root for e in dec.summands]
    for a, b in itertools.permutations(roots, 2):
        if euler_form(f, a, b) != 0:
            return RationalAccumulation.NO
    if classify(f.quiver).at_most_weakly_hyperbolic:
        return RationalAccumulation.NO
    return RationalAccumulation.NECESSARY_CONDITION_HOLDS


def isotropic_witness_sequence(q: Quiver | FormData, delta, count: int):
    """Real Schur roots whose rays close in on the ray of an isotropic
    Schur root delta.

    Splits delta = beta + gamma into a tame exceptional pair and walks the
    ladder m*beta + (m+1)*gamma, (m+1)*beta + m*gamma for m up to count.
    Within each rung the farther root is emitted first, so the distances
    to delta's ray are weakly decreasing along the whole list.  Every
    element is checked to be a real Schur root before being returned.
    """
    f = _form(q)
    delta = require_positive(f.quiver, delta)
    table = table_for(f)
    cls = root_classify(f, delta)
    if cls.kind is not RootKind.ISOTROPIC or not is_schur(f, delta, table):
        raise NotIsotropicSchurError(f"{delta} is not an isotropic Schur root")
    state = SchurSequenceState((SequenceEntry(delta, 1, cls),))
    refined = refine_isotropic(f, state, 0, table)
    beta = refined.entries[0].root
    gamma = refined.entries[1].root
    if height(gamma) > height(beta):
        beta, gamma = gamma, beta  # emit the farther rung element first
    out = []
    for m in range(max(1, count)):
        first = tuple(m * b + (m + 1) * g for b, g in zip(beta, gamma))
        second = tuple((m + 1) * b + m * g for b, g in zip(beta, gamma))
        for v in (first, second):
            vc = root_classify(f, v)
            assert vc.kind is RootKind.REAL and is_schur(f, v, table), v
            out.append(v)
    return out


@dataclass(frozen=True)
class NeighborhoodReport:
    base: tuple
    radius: Fraction
    samples: int
    fraction: float
    violators: tuple
    attempts: int


def _has_strict_summand(f: FormData, v, table) -> bool:
    cls = root_classify(f, v)
    if cls.kind is RootKind.STRICT_IMAGINARY and is_schur(f, v, table):
        return True  # its own one-term decomposition
    dec = canonical_decomposition(f, v, table)
    return any(e.cls.kind is RootKind.STRICT_IMAGINARY for e in dec.summands)


def strict_imaginary_neighborhood_probe(
    q: Quiver | FormData, d, radius, samples: int, seed: int = 0
) -> NeighborhoodReport:
    """Fraction of integer vectors near the ray of d whose canonical
    decomposition keeps a strictly imaginary summand.

    Samples are k*d for k in [N, 2N] (N = ceil(1/radius)) plus bounded
    integer perturbations, accepted only when the exact ray distance to d
    stays within radius.  radius = 0 degenerates to plain multiples.
    """
    f = _form(q)
    d = require_positive(f.quiver, d)
    table = table_for(f)
    radius = Fraction(radius)
    if radius < 0:
        raise ValueError("radius must be >= 0")
    if samples < 1:
        raise ValueError("samples must be >= 1")
    if not _has_strict_summand(f, d, table):
        raise PreconditionFailedError(f"decomposition of {d} has no strictly imaginary summand")
    base_ray = normalize(d)
    picked = []
    attempts = 0
    if radius == 0:
        picked = [tuple(k * x for x in d) for k in range(1, samples + 1)]
        attempts = samples
    else:
        rng = random.Random(seed)
        n_scale = math.ceil(1 / radius)
        spread = max(1, math.floor(radius * n_scale * height(d)))
        cap = 1000 * samples
        while len(picked) < samples and attempts < cap:
            attempts += 1
            k = rng.randint(n_scale, 2 * n_scale)
            v = tuple(k * x + rng.randint(-spread, spread) for x in d)
            if any(x < 0 for x in v) or not any(v):
                continue
            if ray_distance(normalize(v), base_ray) <= radius:
                picked.append(v)
        if len(picked) < samples:
            raise NoConvergenceError(
                f"accepted only {len(picked)}/{samples} samples in {attempts} draws"
            )
    violators = tuple(v for v in picked if not _has_strict_summand(f, v, table))
    fraction = (len(picked) - len(violators)) / len(picked)
    return NeighborhoodReport(d, radius, len(picked), fraction, violators, attempts)


@dataclass(frozen=True)
class TangencyReport:
    is_eigenvector: bool
    is_tangent: bool
    eigen_residual: float
    tangent_residual: float


def _cross_residual(u, w) -> float:
    nu = max(abs(x) for x in u)
    nw = max(abs(x) for x in w)
    if nu == 0 or nw == 0:
        return 0.0  # the zero vector is parallel to everything
    worst = 0.0
    for i in range(len(u)):
        for j in range(i + 1, len(u)):
            worst = max(worst, abs(u[i] * w[j] - u[j] * w[i]))
    return worst / (nu * nw)


def tangency_report(f: FormData, v) -> TangencyReport:
    """Eigenvector and tangency tests for a vector on the quadric q = 0.

    The pairing hyperplane <x, v> = 0 is tangent to the quadric at v
    exactly when E v is parallel to A v; eigenvectors of the Coxeter
    matrix always pass that test, and the converse failure (tangent but
    not an eigenvector) never occurs for genuine quadric points.
    """
    v = tuple(float(x) for x in v)
    if not any(v):
        raise NotOnQuadricError("zero vector")
    n = len(v)
    scale = max(abs(x) for x in v)
    qv = sum(f.symmetric_matrix[i][j] * v[i] * v[j] for i in range(n) for j in range(n)) / 2.0
    if abs(qv) > 1e-9 * scale * scale:
        raise NotOnQuadricError(f"q(v) = {qv:.3e} is not within tolerance of 0")
    cv = tuple(sum(f.coxeter[i][j] * v[j] for j in range(n)) for i in range(n))
    ev = tuple(sum(f.euler_matrix[i][j] * v[j] for j in range(n)) for i in range(n))
    av = tuple(sum(f.symmetric_matrix[i][j] * v[j] for j in range(n)) for i in range(n))
    eig_res = _cross_residual(cv, v)
    tan_res = _cross_residual(ev, av)
    return TangencyReport(eig_res <= MARGIN_TOL, tan_res <= MARGIN_TOL, eig_res, tan_res)


@dataclass(frozen=True)
class SegmentSignReport:
    max_q: float
    pairing: float
    boundary_only: bool
    consistent: bool


def segment_sign_probe(f: FormData, c1: Ray, c2: Ray, grid: int = 64) -> SegmentSignReport:
    """Sign of q along the segment between two quadric rays.

    For isotropic endpoints q(s c1 + (1-s) c2) = s(1-s) (c1, c2)_A, so the
    segment stays in q <= 0 exactly when the symmetric pairing of the
    endpoints is <= 0, and touches only the boundary exactly when the
    pairing vanishes; the report records both readings and their agreement.
    """
    if grid < 1:
        raise ValueError("grid must be >= 1")
    u = c1.as_floats()
    w = c2.as_floats()
    n = len(u)
    a = f.symmetric_matrix

    def qeval(x):
        return sum(a[i][j] * x[i] * x[j] for i in range(n) for j in range(n)) / 2.0

    for x in (u, w):
        if abs(qeval(x)) > 1e-9:
            raise NotOnQuadricError("segment endpoint is not on the quadric")
    pairing = sum(a[i][j] * u[i] * w[j] for i in range(n) for j in range(n))
    values = [
        qeval(tuple(s * ui + (1 - s) * wi for ui, wi in zip(u, w)))
        for s in (i / grid for i in range(grid + 1))
    ]
    # the endpoints vanish by hypothesis, so whether the segment hugs the
    # boundary is read off the interior sample points
    boundary_only = all(abs(x) <= MERGE_TOL for x in values[1:-1])
    consistent = boundary_only == (abs(pairing) <= MARGIN_TOL)
    return SegmentSignReport(max(values), pairing, boundary_only, consistent)


@dataclass(frozen=True)
class AvoidanceReport:
    skipped: bool
    notice: str
    margins: tuple[float, ...]
    min_margin: float | None


def _point_segment_distance(p, a, b) -> float:
    ab = [y - x for x, y in zip(a, b)]
    ap = [y - x for x, y in zip(a, p)]
    denom = sum(x * x for x in ab)
    t = 0.0 if denom == 0 else max(0.0, min(1.0, sum(x * y for x, y in zip(ab, ap)) / denom))
    return math.sqrt(sum((pi - (ai + t * di)) ** 2 for pi, ai, di in zip(p, a, ab)))


def y_pm_avoidance_check(q: Quiver | FormData, pairs) -> AvoidanceReport:
    """Distances from y- and y+ to the rank-two segments.

    Only meaningful for wild quivers with at least three vertices: with
    two vertices the segment is the whole simplex, and on Euclidean
    quivers the null ray itself sits on every tame segment.  The margins
    should all be strictly positive.
    """
    f = _form(q)
    n = f.quiver.n
    if n < 3:
        return AvoidanceReport(True, "needs at least 3 vertices", (), None)
    info = classify(f.quiver)
    if info.base is not BaseType.WILD:
        return AvoidanceReport(True, f"base type {info.base.value} has no avoidance statement", (), None)
    eig = special_eigenvectors(f)
    margins = []
    for pair in pairs:
        a = normalize(pair.alpha).as_floats()
        b = normalize(pair.beta).as_floats()
        margins.append(
            min(
                _point_segment_distance(eig.y_minus.as_floats(), a, b),
                _point_segment_distance(eig.y_plus.as_floats(), a, b),
            )
        )
    return AvoidanceReport(False, "", tuple(margins), min(margins) if margins else None)

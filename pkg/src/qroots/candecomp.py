"""Canonical decomposition of dimension vectors.

The engine maintains an ordered weak Schur sequence (pairwise left
orthogonal Schur roots with multiplicities), starting from simples in
sink-first order, and repeatedly resolves the closest pair violating
finality (a negative reverse Euler pairing).  Real-real pairs resolve by
the closed-form Kronecker ladder; pairs involving imaginary roots go
through a bounded search validated against the Kac criterion, which also
certifies every returned decomposition.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import (
    IterationCapExceededError,
    NoRefinementFoundError,
    NotIsotropicSchurError,
    NotOrthogonalPairError,
    PreconditionFailedError,
)
from .forms import FormData, euler_form, height, require_positive, tits_form
from .homext import HomExtTable, table_for
from .quiver import sink_first_order
from .roots import RootClass, RootKind, is_schur, root_classify


@dataclass(frozen=True)
class SequenceEntry:
    root: tuple
    mult: int
    cls: RootClass


@dataclass(frozen=True)
class SchurSequenceState:
    entries: tuple[SequenceEntry, ...]

    def roots(self):
        return [e.root for e in self.entries]

    def coefficient_sum(self) -> int:
        return sum(e.mult for e in self.entries)

    def total(self, n: int):
        out = [0] * n
        for e in self.entries:
            for i, x in enumerate(e.root):
                out[i] += e.mult * x
        return tuple(out)


@dataclass(frozen=True)
class CanonicalDecomposition:
    summands: tuple[SequenceEntry, ...]

    def total(self, n: int):
        out = [0] * n
        for e in self.summands:
            for i, x in enumerate(e.root):
                out[i] += e.mult * x
        return tuple(out)


@dataclass(frozen=True)
class KacCheck:
    ok: bool
    reasons: tuple[str, ...] = field(default=())

    def __bool__(self) -> bool:
        return self.ok


def trivial_schur_sequence(f: FormData, d) -> SchurSequenceState:
    """Simple roots with multiplicities d_i, sinks first.

    Listing sink-side vertices before their predecessors makes every
    earlier simple left orthogonal to every later one (no arrows, hence no
    hom and no ext, in that direction).  Zero multiplicities are dropped.
    """
    d = require_positive(f.quiver, d)
    n = f.quiver.n
    entries = []
    for v in sink_first_order(f.quiver):
        if d[v - 1] == 0:
            continue
        root = tuple(1 if i == v - 1 else 0 for i in range(n))
        entries.append(SequenceEntry(root, d[v - 1], RootClass(RootKind.REAL, True)))
    return SchurSequenceState(tuple(entries))


def is_final(f: FormData, state: SchurSequenceState) -> bool:
    rs = state.roots()
    for i in range(len(rs)):
        for j in range(i + 1, len(rs)):
            if euler_form(f, rs[j], rs[i]) < 0:
                return False
    return True


# -- rank-two closed form --------------------------------------------------


def _chebyshev_like(t: int, upto: int):
    c = [0, 1]
    while len(c) <= upto:
        c.append(t * c[-1] - c[-2])
    return c


def resolve_rank2(f: FormData, alpha, p: int, beta, q: int, t: int | None = None,
                  table: HomExtTable | None = None):
    """Canonical decomposition of p*alpha + q*beta for a left-orthogonal
    pair of real Schur roots with t = -<beta, alpha> >= 1.

    Local coordinates (x1, x2) = (q, p) identify the pair subcategory with
    representations of the t-arrow Kronecker quiver, beta playing the first
    simple.  The local Tits form is x1^2 + x2^2 - t*x1*x2, and the ladder
    c_0 = 0, c_1 = 1, c_{m+1} = t*c_m - c_{m-1} lists the local real Schur
    roots (c_{m+1}, c_m) and (c_m, c_{m+1}).
    """
    alpha = tuple(alpha)
    beta = tuple(beta)
    table = table or table_for(f)
    t_derived = -euler_form(f, beta, alpha)
    if t is None:
        t = t_derived
    if t != t_derived or t < 1:
        raise NotOrthogonalPairError(
            f"-<beta,alpha> = {t_derived}, expected positive t = {t}")
    if tits_form(f, alpha) != 1 or tits_form(f, beta) != 1:
        raise PreconditionFailedError("resolve_rank2 needs real roots")
    if not table.left_orthogonal(alpha, beta):
        raise NotOrthogonalPairError(f"{alpha} is not left orthogonal to {beta}")
    if p < 0 or q < 0:
        raise PreconditionFailedError("multiplicities must be nonnegative")

    x1, x2 = q, p

    def glob(v1, v2):
        return tuple(v1 * b + v2 * a for a, b in zip(alpha, beta))

    if x1 == 0 and x2 == 0:
        return []
    q_theta = x1 * x1 + x2 * x2 - t * x1 * x2
    if q_theta < 0:
        return [SequenceEntry(glob(x1, x2), 1,
                              RootClass(RootKind.STRICT_IMAGINARY, True))]
    if q_theta == 0:
        # forces t = 2 and x1 = x2
        assert t == 2 and x1 == x2
        return [SequenceEntry(glob(1, 1), x1, RootClass(RootKind.ISOTROPIC, True))]
    real = RootClass(RootKind.REAL, True)
    if t == 1:
        # finite type: split against the middle root alpha + beta
        parts = []
        if x1 > x2:
            parts = [(glob(1, 0), x1 - x2), (glob(1, 1), x2)]
        elif x2 > x1:
            parts = [(glob(1, 1), x1), (glob(0, 1), x2 - x1)]
        else:
            parts = [(glob(1, 1), x1)]
        return [SequenceEntry(r, m, real) for r, m in parts if m > 0]
    c = _chebyshev_like(t, 2)
    m = 0
    while True:
        while len(c) < m + 3:
            c.append(t * c[-1] - c[-2])
        if 2 * x1 > t * x2:
            # beta-heavy side: ladder (c_{m+1}, c_m) decreasing in slope
            m1 = c[m + 1] * x1 - c[m + 2] * x2
            m2 = c[m + 1] * x2 - c[m] * x1
            rho_lo, rho_hi = (c[m + 1], c[m]), (c[m + 2], c[m + 1])
            ordered = [(rho_lo, m1), (rho_hi, m2)]
        else:
            m1 = c[m + 1] * x2 - c[m + 2] * x1
            m2 = c[m + 1] * x1 - c[m] * x2
            rho_lo, rho_hi = (c[m], c[m + 1]), (c[m + 1], c[m + 2])
            ordered = [(rho_hi, m2), (rho_lo, m1)]
        if m1 >= 0 and m2 >= 0:
            out = [SequenceEntry(glob(*r), mm, real) for r, mm in ordered if mm > 0]
            # unimodularity makes the expansion exact; double-check the sum
            tot = [0, 0]
            for (v1, v2), mm in ordered:
                tot[0] += mm * v1
                tot[1] += mm * v2
            assert tot == [x1, x2]
            return out
        m += 1
        if m > 64 + x1 + x2:
            raise PreconditionFailedError(
                f"ladder location failed for t={t}, x=({x1},{x2})")


# -- general pair resolution ----------------------------------------------


def _resolve_general(f: FormData, alpha, p: int, beta, q: int, table: HomExtTable):
    """Bounded search for the canonical decomposition of p*alpha + q*beta
    among nonnegative combinations x*alpha + y*beta, validated by the Kac
    criterion.  Uniqueness of the canonical decomposition means the first
    valid candidate is the answer.

    Proper splittings are searched first; they only ask is_schur of vectors
    strictly below the total, so the mutual recursion between the Schur
    test and the decomposition engine stays well founded.  If none passes,
    the total itself is the decomposition, and is Schur by elimination."""
    schur_cache: dict = {}

    def schur_kind(x, y):
        key = (x, y)
        if key not in schur_cache:
            v = tuple(x * a + y * b for a, b in zip(alpha, beta))
            cls = root_classify(f, v)
            ok = cls.is_root and is_schur(f, v, table)
            schur_cache[key] = (v, cls.kind, ok)
        return schur_cache[key]

    def mult_ok(kind, mult):
        return mult == 1 or kind in (RootKind.REAL, RootKind.ISOTROPIC)

    # two distinct summands; the corner (p, q) is excluded: it cannot lead
    # to a proper splitting, and probing it would recurse into the very
    # vector being decomposed
    for x1 in range(p + 1):
        for y1 in range(q + 1):
            if (x1 == 0 and y1 == 0) or (x1 == p and y1 == q):
                continue
            v1, k1, ok1 = schur_kind(x1, y1)
            if not ok1:
                continue
            mmax = min(p // x1 if x1 else p + q, q // y1 if y1 else p + q)
            for m1 in range(1, mmax + 1):
                if not mult_ok(k1, m1):
                    break
                rx, ry = p - m1 * x1, q - m1 * y1
                if rx == 0 and ry == 0:
                    continue  # not a proper splitting
                for m2 in range(1, math.gcd(rx, ry) + 1):
                    if rx % m2 or ry % m2:
                        continue
                    x2, y2 = rx // m2, ry // m2
                    if (x2, y2) == (x1, y1):
                        continue
                    v2, k2, ok2 = schur_kind(x2, y2)
                    if not ok2 or not mult_ok(k2, m2):
                        continue
                    if not table.ext_is_zero(v1, v2) or not table.ext_is_zero(v2, v1):
                        continue
                    for first, second in (((v1, k1, m1), (v2, k2, m2)),
                                          ((v2, k2, m2), (v1, k1, m1))):
                        if euler_form(f, first[0], second[0]) == 0:
                            return [
                                SequenceEntry(first[0], first[2], RootClass(first[1], True)),
                                SequenceEntry(second[0], second[2], RootClass(second[1], True)),
                            ]

    # single summand repeated g >= 2 times
    for g in range(2, math.gcd(p, q) + 1):
        if p % g or q % g:
            continue
        v, kind, ok = schur_kind(p // g, q // g)
        if ok and mult_ok(kind, g):
            return [SequenceEntry(v, g, RootClass(kind, True))]

    # no proper candidate: the total is its own canonical decomposition
    total = tuple(p * a + q * b for a, b in zip(alpha, beta))
    cls = root_classify(f, total)
    if not cls.is_root:
        raise PreconditionFailedError(
            f"no Kac-valid resolution of {p}*{alpha} + {q}*{beta}")
    return [SequenceEntry(total, 1, RootClass(cls.kind, True))]


# -- main loop -------------------------------------------------------------

ITERATION_CAP_FACTOR = 64


def _weak_order(table: HomExtTable, items):
    """Total order on entries making every earlier entry left orthogonal to
    every later one, or None.  Pairs orthogonal in only one direction force
    a precedence; a pair orthogonal in neither direction is infeasible."""
    n = len(items)
    must = [[False] * n for _ in range(n)]
    for a in range(n):
        for b in range(a + 1, n):
            ab = table.left_orthogonal(items[a].root, items[b].root)
            ba = table.left_orthogonal(items[b].root, items[a].root)
            if not ab and not ba:
                return None
            if ab != ba:
                if ab:
                    must[a][b] = True
                else:
                    must[b][a] = True
    indeg = [sum(must[a][b] for a in range(n)) for b in range(n)]
    avail = sorted(b for b in range(n) if indeg[b] == 0)
    order = []
    while avail:
        x = avail.pop(0)
        order.append(x)
        for b in range(n):
            if must[x][b]:
                indeg[b] -= 1
                if indeg[b] == 0:
                    avail.append(b)
        avail.sort()
    if len(order) < n:
        return None
    return [items[x] for x in order]


_dec_cache: dict = {}


def canonical_decomposition(f: FormData, d, table: HomExtTable | None = None,
                            start_sequence: SchurSequenceState | None = None
                            ) -> CanonicalDecomposition:
    d = require_positive(f.quiver, d)
    key = (f.quiver, d) if start_sequence is None else None
    if key is not None and key in _dec_cache:
        return _dec_cache[key]
    table = table or table_for(f)
    state = start_sequence if start_sequence is not None else trivial_schur_sequence(f, d)
    cap = ITERATION_CAP_FACTOR * f.quiver.n * height(d)

    for _ in range(cap):
        entries = list(state.entries)
        violations = []
        for i in range(len(entries)):
            for j in range(i + 1, len(entries)):
                if euler_form(f, entries[j].root, entries[i].root) < 0:
                    violations.append((j - i, i, j))
        if not violations:
            break
        violations.sort()

        def swappable(x, y):
            # a swap must keep the weak invariant in both resulting orders
            return (euler_form(f, x.root, y.root) == 0
                    and table.ext_is_zero(x.root, y.root)
                    and euler_form(f, y.root, x.root) == 0
                    and table.ext_is_zero(y.root, x.root))

        resolved = False
        for _, i, j in violations:
            # bring the pair adjacent: move entry j leftward while swaps are
            # orthogonal, then, if blocked, move entry i rightward to meet it
            k = j
            while k > i + 1 and swappable(entries[k], entries[k - 1]):
                entries[k - 1], entries[k] = entries[k], entries[k - 1]
                k -= 1
            m = i
            while m < k - 1 and swappable(entries[m + 1], entries[m]):
                entries[m], entries[m + 1] = entries[m + 1], entries[m]
                m += 1
            a, b = entries[m], entries[k]
            both_real = (a.cls.kind is RootKind.REAL and b.cls.kind is RootKind.REAL)
            if both_real:
                parts = resolve_rank2(f, a.root, a.mult, b.root, b.mult, table=table)
            else:
                parts = _resolve_general(f, a.root, a.mult, b.root, b.mult, table)
            if m == k - 1:
                entries[m:k + 1] = parts
            else:
                # the pair cannot be made adjacent; replace it in place and
                # rebuild a valid order for the survivors plus the new parts
                rest = entries[:m] + entries[m + 1:k] + entries[k + 1:]
                reordered = _weak_order(table, rest + parts)
                if reordered is None:
                    state = SchurSequenceState(tuple(entries))  # keep swap progress
                    continue
                entries = reordered
            state = SchurSequenceState(tuple(entries))
            resolved = True
            break
        if not resolved:
            raise PreconditionFailedError(
                "all violating pairs are blocked by non-orthogonal neighbors")
    else:
        raise IterationCapExceededError(
            f"decomposition of {d} did not settle within {cap} iterations")

    result = CanonicalDecomposition(state.entries)
    # cache before verifying: the verifier's Schur checks on a single-summand
    # result would otherwise recompute this very decomposition
    if key is not None:
        _dec_cache[key] = result
    check = verify_kac_criterion(f, result, d, table)
    if not check:
        if key is not None:
            del _dec_cache[key]
        raise PreconditionFailedError(
            "internal error, result fails the Kac criterion: " + "; ".join(check.reasons))
    return result


def verify_kac_criterion(f: FormData, cand: CanonicalDecomposition, d,
                         table: HomExtTable | None = None) -> KacCheck:
    """Certify a decomposition: summands sum to d, all are Schur roots,
    generic ext vanishes between distinct summands in both orders, and
    strictly imaginary summands carry multiplicity 1."""
    table = table or table_for(f)
    n = f.quiver.n
    reasons = []
    if cand.total(n) != tuple(d):
        reasons.append(f"summands total {cand.total(n)}, expected {tuple(d)}")
    seen = set()
    for e in cand.summands:
        if e.mult < 1:
            reasons.append(f"nonpositive multiplicity on {e.root}")
        if e.root in seen:
            reasons.append(f"repeated summand {e.root}")
        seen.add(e.root)
        cls = root_classify(f, e.root)
        if not cls.is_root:
            reasons.append(f"{e.root} is not a root")
            continue
        if cls.kind is not e.cls.kind:
            reasons.append(f"{e.root} labeled {e.cls.kind.value}, is {cls.kind.value}")
        if cls.kind is RootKind.STRICT_IMAGINARY and e.mult != 1:
            reasons.append(f"strictly imaginary {e.root} with multiplicity {e.mult}")
        if not is_schur(f, e.root, table):
            reasons.append(f"{e.root} is not Schur")
    for i, ei in enumerate(cand.summands):
        for j, ej in enumerate(cand.summands):
            if i != j and not table.ext_is_zero(ei.root, ej.root):
                reasons.append(f"ext({ei.root},{ej.root}) != 0")
    return KacCheck(not reasons, tuple(reasons))


def refine_isotropic(f: FormData, state: SchurSequenceState, index: int,
                     table: HomExtTable | None = None) -> SchurSequenceState:
    """Replace an isotropic entry by two real Schur roots beta + gamma with
    <gamma, beta> = -2, preserving all weak-sequence orthogonality."""
    table = table or table_for(f)
    entries = list(state.entries)
    if not 0 <= index < len(entries):
        raise PreconditionFailedError(f"no entry at index {index}")
    target = entries[index]
    if target.cls.kind is not RootKind.ISOTROPIC:
        raise NotIsotropicSchurError(f"entry {target.root} is {target.cls.kind.value}")
    if any(e.cls.kind is RootKind.STRICT_IMAGINARY for e in entries):
        raise PreconditionFailedError(
            "refinement requires a sequence without strictly imaginary roots")
    delta = target.root
    before = [e.root for e in entries[:index]]
    after = [e.root for e in entries[index + 1:]]

    import itertools

    ranges = [range(x + 1) for x in delta]
    for beta in itertools.product(*ranges):
        gamma = tuple(x - y for x, y in zip(delta, beta))
        if not any(beta) or not any(gamma):
            continue
        if tits_form(f, beta) != 1 or tits_form(f, gamma) != 1:
            continue
        if euler_form(f, gamma, beta) != -2:
            continue
        if not (root_classify(f, beta).kind is RootKind.REAL
                and root_classify(f, gamma).kind is RootKind.REAL):
            continue
        if not (is_schur(f, beta, table) and is_schur(f, gamma, table)):
            continue
        if not table.left_orthogonal(beta, gamma):
            continue
        if not all(table.left_orthogonal(r, beta) and table.left_orthogonal(r, gamma)
                   for r in before):
            continue
        if not all(table.left_orthogonal(beta, r) and table.left_orthogonal(gamma, r)
                   for r in after):
            continue
        real = RootClass(RootKind.REAL, True)
        entries[index:index + 1] = [SequenceEntry(beta, target.mult, real),
                                    SequenceEntry(gamma, target.mult, real)]
        return SchurSequenceState(tuple(entries))
    raise NoRefinementFoundError(f"no real Schur refinement of {delta}")


# -- generic endomorphism data --------------------------------------------

_self_cache: dict = {}


def self_hom(f: FormData, d, table: HomExtTable | None = None) -> int:
    """Generic endomorphism dimension of one representation of dimension d.

    Computed from the canonical decomposition: distinct summands
    contribute cross pair-hom terms; a real summand of multiplicity m
    contributes m^2 (one rigid object repeated), an isotropic one m (that
    many pairwise-orthogonal bricks), a strictly imaginary one 1.
    """
    d = tuple(int(x) for x in d)
    key = (f.quiver, d)
    if key in _self_cache:
        return _self_cache[key]
    table = table or table_for(f)
    dec = canonical_decomposition(f, d, table)
    total = 0
    for e in dec.summands:
        if e.cls.kind is RootKind.REAL:
            total += e.mult * e.mult
        elif e.cls.kind is RootKind.ISOTROPIC:
            total += e.mult
        else:
            total += 1
    for i, ei in enumerate(dec.summands):
        for j, ej in enumerate(dec.summands):
            if i != j:
                total += ei.mult * ej.mult * table.hom(ei.root, ej.root)
    _self_cache[key] = total
    return total


def self_ext(f: FormData, d, table: HomExtTable | None = None) -> int:
    val = self_hom(f, d, table) - tits_form(f, d)
    assert val >= 0
    return val

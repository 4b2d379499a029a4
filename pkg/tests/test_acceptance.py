"""Acceptance suite: one test per criterion, one PASSED/FAILED line each
under pytest -v.  Tolerances are pinned as module constants; everything
not covered by a tolerance is checked in exact arithmetic."""

import itertools
import math
import random
from fractions import Fraction

from qroots import candecomp as _candecomp
from qroots import homext as _homext
from qroots import roots as _roots
from qroots.accumulation import (
    acc2_scan,
    enumerate_exceptional_pairs,
    isotropic_witness_sequence,
    is_rational_accumulation,
    RationalAccumulation,
    segment_sign_probe,
    special_eigenvectors,
    strict_imaginary_neighborhood_probe,
    tangency_report,
    tau_orbit,
    y_pm_avoidance_check,
)
from qroots.candecomp import canonical_decomposition, verify_kac_criterion
from qroots.corpus import corpus, corpus_names
from qroots.errors import NotOnQuadricError
from qroots.forms import BaseType, classify, form_data, height, tits_form
from qroots.homext import HomExtTable, hom_generic, hom_randomized
from qroots.linalg import det_bareiss
from qroots.quiver import build_quiver, full_subquiver
from qroots.roots import (
    RootKind,
    enumerate_real_schur_roots,
    is_schur,
    normalize,
    ray_distance,
    root_classify,
)

TOL_EIGEN_MATCH = 1e-9       # power iteration vs exact char-poly root
TOL_EIGEN_PRODUCT = 1e-10    # lambda+ * lambda- = 1
TOL_CONV_WILD = 1e-6         # Theta(3) orbit distance to y- after 20 steps
TOL_CONV_KRON = 1e-3         # Kronecker orbit distance after <= 500 steps
TOL_SEGMENT = 1e-9           # max q along accumulation-ray segments
TOL_WITNESS = Fraction(1, 100)  # final witness-ray distance
ORACLE_TRIALS = 8
WITNESS_RUNGS = 40
PROBE_RADIUS = Fraction(1, 20)
PROBE_SAMPLES = 200
TANGENCY_SAMPLES = 1000

CORPUS = corpus()
WILD_NAMES = tuple(
    n for n in corpus_names() if classify(CORPUS[n]).base is BaseType.WILD
)
AMWH_NAMES = tuple(
    n for n in corpus_names() if classify(CORPUS[n]).at_most_weakly_hyperbolic
)


def _positive_vectors(n: int, bound: int):
    """All positive integer vectors with coordinate sum <= bound."""
    def walk(prefix, rem):
        if len(prefix) == n:
            if any(prefix):
                yield tuple(prefix)
            return
        for v in range(rem + 1):
            yield from walk(prefix + [v], rem - v)

    yield from walk([], bound)


def _char_poly(m):
    """Exact monic characteristic polynomial, highest degree first."""
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    work = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    coeffs = [Fraction(1)]
    for k in range(1, n + 1):
        am = [[sum(a[i][t] * work[t][j] for t in range(n)) for j in range(n)]
              for i in range(n)]
        c = -sum(am[i][i] for i in range(n)) / k
        coeffs.append(c)
        work = [[am[i][j] + (c if i == j else 0) for j in range(n)] for i in range(n)]
    return coeffs


def _poly_eval(coeffs, x: Fraction) -> Fraction:
    v = Fraction(0)
    for c in coeffs:
        v = v * x + c
    return v


def test_criterion_01_three_vertex_classification():
    # exhaustive sweep over connected 3-vertex quivers, multiplicities <= 3
    checked = 0
    for a, b, c in itertools.product(range(4), repeat=3):
        if (a > 0) + (b > 0) + (c > 0) < 2:
            continue  # disconnected
        arrows = [(1, 2)] * a + [(2, 3)] * b + [(1, 3)] * c
        q = build_quiver(3, arrows)
        f = form_data(q)
        det = det_bareiss([list(r) for r in f.symmetric_matrix])
        assert det == 2 * (4 - a * b * c - a * a - b * b - c * c), (a, b, c)
        info = classify(q)
        assert info.connected
        assert info.at_most_weakly_hyperbolic, (a, b, c)
        checked += 1
    assert checked == 54
    print("criterion 1 PASS: 54 connected 3-vertex quivers, exact determinant")


def test_criterion_02_worked_examples():
    info1 = classify(CORPUS["example-2-5-1"])
    sig = info1.signature
    assert (sig.pos, sig.neg, sig.zero) == (2, 2, 0)
    assert not info1.at_most_weakly_hyperbolic
    for subset in itertools.combinations(range(1, 5), 3):
        sub, _ = full_subquiver(CORPUS["example-2-5-1"], subset)
        assert classify(sub).at_most_weakly_hyperbolic, subset

    q2 = CORPUS["example-2-5-2"]
    info2 = classify(q2)
    assert info2.weakly_hyperbolic
    det = det_bareiss([list(r) for r in form_data(q2).symmetric_matrix])
    assert det < 0
    assert any(
        classify(full_subquiver(q2, s)[0]).at_most_weakly_hyperbolic
        for s in itertools.combinations(range(1, 7), 5)
    )
    print("criterion 2 PASS: worked-example signatures and subquiver tests")


def test_criterion_03_decomposition_oracle_equivalence():
    # fresh caches so the queried set reflects exactly this sweep
    _candecomp._dec_cache.clear()
    _candecomp._self_cache.clear()
    _roots._schur_cache.clear()
    _homext._tables.clear()
    vectors = 0
    pairs_checked = 0
    for name in corpus_names():
        f = form_data(CORPUS[name])
        table = HomExtTable(f)
        for d in _positive_vectors(f.quiver.n, 8):
            dec = canonical_decomposition(f, d, table)
            assert verify_kac_criterion(f, dec, d, table), (name, d)
            vectors += 1
        for a, b in sorted(table.queried):
            if not any(a) or not any(b):
                continue
            got = hom_randomized(f, a, b, trials=ORACLE_TRIALS)
            assert got == hom_generic(f, a, b, table=table), (name, a, b)
            pairs_checked += 1
    assert vectors == 4658
    assert pairs_checked >= 1500
    print(f"criterion 3 PASS: {vectors} vectors verified, "
          f"{pairs_checked} queried pairs match the randomized oracle")


def test_criterion_04_scaling_law():
    rng = random.Random(20260823)
    names = corpus_names()
    done = 0
    while done < 200:
        name = names[done % len(names)]
        f = form_data(CORPUS[name])
        n = f.quiver.n
        d = tuple(rng.randint(0, 3) for _ in range(n))
        if not any(d):
            continue
        base = canonical_decomposition(f, d)
        for p in (2, 3):
            expected = set()
            for e in base.summands:
                if e.cls.kind is RootKind.STRICT_IMAGINARY:
                    # one root scaled in place, multiplicity stays 1
                    expected.add((tuple(p * x for x in e.root), 1, e.cls.kind))
                else:
                    expected.add((e.root, p * e.mult, e.cls.kind))
            pd = tuple(p * x for x in d)
            got = {
                (e.root, e.mult, e.cls.kind)
                for e in canonical_decomposition(f, pd).summands
            }
            assert got == expected, (name, d, p)
        done += 1
    print("criterion 4 PASS: scaling relation exact on 200 vectors, p in {2, 3}")


def test_criterion_05_quadric_law():
    total = 0
    for name in corpus_names():
        f = form_data(CORPUS[name])
        for d in enumerate_real_schur_roots(f, 40):
            s = height(d)
            assert tits_form(f, normalize(d).representative) == Fraction(1, s * s), (name, d)
            total += 1
    assert total >= 100
    print(f"criterion 5 PASS: exact quadric law on {total} real Schur roots")


def test_criterion_06_orbit_convergence():
    # wild side: exact target ray of ((3 - sqrt 5)/2, 1)
    a = (3 - math.sqrt(5)) / 2
    target = (a / (a + 1), 1 / (a + 1))
    rays, rep = tau_orbit(CORPUS["theta-3"], (0, 1), "inverse", 20)
    assert not rep.aborted
    final = rays[-1].as_floats()
    assert max(abs(x - y) for x, y in zip(final, target)) <= TOL_CONV_WILD

    # tame side: the orbit walks (m, m+1) with exact distance 1/(2(2m+1))
    rays, rep = tau_orbit(CORPUS["kronecker"], (0, 1), "inverse", 500)
    assert not rep.aborted
    half = (Fraction(1, 2), Fraction(1, 2))
    hit = None
    for k, ray in enumerate(rays):
        m = ray.representative[0].numerator
        dist = max(abs(x - y) for x, y in zip(ray.representative, half))
        assert dist == Fraction(1, 2 * (2 * m + 1))
        if dist <= Fraction(TOL_CONV_KRON).limit_denominator() and hit is None:
            hit = k
    assert hit is not None and hit <= 500
    print(f"criterion 6 PASS: orbits converge (Kronecker step {hit} <= 500)")


def test_criterion_07_eigendata_against_char_poly():
    for name in corpus_names():
        info = classify(CORPUS[name])
        if info.base is BaseType.DYNKIN:
            continue  # no special eigenvalues
        f = form_data(CORPUS[name])
        eig = special_eigenvectors(f)
        assert abs(eig.lambda_plus * eig.lambda_minus - 1.0) <= TOL_EIGEN_PRODUCT
        poly = _char_poly(f.coxeter)
        if eig.euclidean_degenerate:
            assert eig.lambda_plus == 1.0
            assert _poly_eval(poly, Fraction(1)) == 0
            continue
        lam = Fraction(eig.lambda_plus)
        lo, hi = lam - Fraction(1, 4), lam + Fraction(1, 4)
        plo = _poly_eval(poly, lo)
        assert plo * _poly_eval(poly, hi) < 0, name  # sign change brackets the root
        for _ in range(80):
            mid = (lo + hi) / 2
            pm = _poly_eval(poly, mid)
            if pm == 0:
                lo = hi = mid
                break
            if (pm < 0) == (plo < 0):
                lo, plo = mid, pm
            else:
                hi = mid
        root = (lo + hi) / 2
        assert abs(float(root) - eig.lambda_plus) <= TOL_EIGEN_MATCH, name
    print("criterion 7 PASS: power iteration matches exact char-poly roots")


def test_criterion_08_rational_accumulation_sets_match():
    for name in AMWH_NAMES:
        f = form_data(CORPUS[name])
        n = f.quiver.n
        yes = set()
        scan = set()
        for d in _positive_vectors(n, 8):
            if is_rational_accumulation(f, d) is RationalAccumulation.YES:
                yes.add(d)
            if tits_form(f, d) == 0:
                cls = root_classify(f, d)
                if cls.kind is RootKind.ISOTROPIC and is_schur(f, d):
                    scan.add(d)
        assert yes == scan, name
    print("criterion 8 PASS: Yes-sets equal the lattice isotropic Schur scans")


def test_criterion_09_witness_sequences():
    deltas = 0
    for name in AMWH_NAMES:
        f = form_data(CORPUS[name])
        n = f.quiver.n
        for d in _positive_vectors(n, 8):
            if tits_form(f, d) != 0:
                continue
            cls = root_classify(f, d)
            if cls.kind is not RootKind.ISOTROPIC or not is_schur(f, d):
                continue
            target = normalize(d)
            out = isotropic_witness_sequence(f, d, WITNESS_RUNGS)
            assert len(set(out)) >= 10, (name, d)
            dists = [ray_distance(normalize(v), target) for v in out]
            assert all(x >= y for x, y in zip(dists, dists[1:])), (name, d)
            assert dists[-1] < TOL_WITNESS, (name, d)
            deltas += 1
    assert deltas == 62
    print(f"criterion 9 PASS: monotone witness ladders for {deltas} isotropic roots")


def test_criterion_10_strict_imaginary_neighborhoods():
    for name, d in (("theta-3", (1, 1)), ("wild-no-isotropic", (1, 1, 1))):
        rep = strict_imaginary_neighborhood_probe(
            CORPUS[name], d, PROBE_RADIUS, PROBE_SAMPLES, seed=1
        )
        assert rep.samples >= PROBE_SAMPLES
        assert rep.violators == (), (name, rep.violators)
        assert rep.fraction == 1.0
    print("criterion 10 PASS: strict-imaginary class stable on both neighborhoods")


def test_criterion_11_structural_probes():
    # q is quadratic along a segment, so a coarse interior grid is decisive
    worst = 0.0
    pairs = 0
    for name in AMWH_NAMES:
        f = form_data(CORPUS[name])
        rays = [p.ray for p in acc2_scan(f, 6)]
        for i in range(len(rays)):
            for j in range(i + 1, len(rays)):
                rep = segment_sign_probe(f, rays[i], rays[j], grid=8)
                worst = max(worst, rep.max_q)
                pairs += 1
    assert worst <= TOL_SEGMENT, worst

    for name in WILD_NAMES:
        q = CORPUS[name]
        if q.n < 3:
            continue
        kept = [p for p in enumerate_exceptional_pairs(q, 6) if p.t >= 2]
        assert kept, name
        rep = y_pm_avoidance_check(q, kept)
        assert not rep.skipped
        assert rep.min_margin is not None and rep.min_margin > 0, name

    for name in WILD_NAMES:
        f = form_data(CORPUS[name])
        n = f.quiver.n
        sym = f.symmetric_matrix
        base = special_eigenvectors(f).y_plus.as_floats()

        def q_of(v):
            return sum(sym[i][j] * v[i] * v[j] for i in range(n) for j in range(n)) / 2.0

        def b_of(u, w):
            return sum(sym[i][j] * u[i] * w[j] for i in range(n) for j in range(n))

        rng = random.Random(99)
        got = 0
        attempts = 0
        while got < TANGENCY_SAMPLES:
            attempts += 1
            assert attempts < 50 * TANGENCY_SAMPLES, name
            w = [rng.uniform(-1.0, 1.0) for _ in range(n)]
            u = [wi - bi for wi, bi in zip(w, base)]
            qa = q_of(u)
            qb = b_of(base, u)
            if abs(qa) < 1e-12 or abs(qb) < 1e-12:
                continue
            # second intersection of the line through y+ with the quadric
            t = -qb / qa
            v = tuple(bi + t * ui for bi, ui in zip(base, u))
            if max(abs(x) for x in v) < 1e-9:
                continue
            try:
                rep = tangency_report(f, v)
            except NotOnQuadricError:
                continue
            got += 1
            assert not (rep.is_tangent and not rep.is_eigenvector), (name, v)
    print(f"criterion 11 PASS: {pairs} segment pairs, avoidance margins, "
          f"{TANGENCY_SAMPLES} tangency samples per wild quiver")

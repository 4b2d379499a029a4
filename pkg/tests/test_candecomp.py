import itertools
import random

import pytest

from qroots.candecomp import (
    CanonicalDecomposition,
    SchurSequenceState,
    SequenceEntry,
    canonical_decomposition,
    is_final,
    refine_isotropic,
    resolve_rank2,
    self_ext,
    self_hom,
    trivial_schur_sequence,
    verify_kac_criterion,
)
from qroots.corpus import corpus
from qroots.errors import (
    NotIsotropicSchurError,
    NotOrthogonalPairError,
    PreconditionFailedError,
)
from qroots.forms import euler_form, form_data, height, tits_form
from qroots.homext import hom_randomized, table_for
from qroots.roots import RootClass, RootKind

C = corpus()
KRON = form_data(C["kronecker"])
TH3 = form_data(C["theta-3"])


def _as_multiset(dec):
    entries = dec.summands if isinstance(dec, CanonicalDecomposition) else dec
    return {(e.root, e.mult, e.cls.kind) for e in entries}


def test_frozen_decompositions():
    assert _as_multiset(canonical_decomposition(KRON, (2, 2))) == {
        ((1, 1), 2, RootKind.ISOTROPIC)
    }
    assert _as_multiset(canonical_decomposition(KRON, (1, 3))) == {
        ((1, 2), 1, RootKind.REAL),
        ((0, 1), 1, RootKind.REAL),
    }
    assert _as_multiset(canonical_decomposition(KRON, (5, 2))) == {
        ((2, 1), 2, RootKind.REAL),
        ((1, 0), 1, RootKind.REAL),
    }
    assert _as_multiset(canonical_decomposition(TH3, (2, 2))) == {
        ((2, 2), 1, RootKind.STRICT_IMAGINARY)
    }
    a2 = form_data(C["a2"])
    assert _as_multiset(canonical_decomposition(a2, (2, 1))) == {
        ((1, 1), 1, RootKind.REAL),
        ((1, 0), 1, RootKind.REAL),
    }
    e252 = form_data(C["example-2-5-2"])
    assert _as_multiset(canonical_decomposition(e252, (0, 0, 1, 2, 1, 1))) == {
        ((0, 0, 1, 2, 1, 1), 1, RootKind.ISOTROPIC)
    }


def test_decomposition_total_and_verification_sweep():
    for name in ("kronecker", "theta-3", "a2", "d4", "wild-isotropic"):
        f = form_data(C[name])
        t = table_for(f)
        n = f.quiver.n
        for d in itertools.product(range(4), repeat=n):
            if not any(d) or height(d) > 7:
                continue
            dec = canonical_decomposition(f, d, t)
            assert dec.total(n) == d
            assert verify_kac_criterion(f, dec, d, t)


def test_decomposition_is_cached():
    first = canonical_decomposition(KRON, (3, 3))
    assert canonical_decomposition(KRON, (3, 3)) is first


def test_verify_rejects_bad_decomposition():
    real = RootClass(RootKind.REAL, True)
    bad = CanonicalDecomposition(
        (SequenceEntry((1, 0), 1, real), SequenceEntry((0, 1), 1, real))
    )
    check = verify_kac_criterion(KRON, bad, (1, 1))
    assert not check
    assert any("ext" in r for r in check.reasons)
    short = CanonicalDecomposition((SequenceEntry((1, 0), 1, real),))
    assert not verify_kac_criterion(KRON, short, (1, 1))


def test_trivial_sequence_is_sink_first():
    state = trivial_schur_sequence(KRON, (2, 3))
    assert [e.root for e in state.entries] == [(0, 1), (1, 0)]
    assert [e.mult for e in state.entries] == [3, 2]
    assert state.total(2) == (2, 3)
    assert state.coefficient_sum() == 5
    assert not is_final(KRON, state)


def test_final_state_detection():
    dec = canonical_decomposition(KRON, (5, 2))
    assert is_final(KRON, SchurSequenceState(dec.summands))


def test_resolve_rank2_matches_general_algorithm():
    # (alpha, beta) = (sink simple, source simple) with t = 2
    for p, q in itertools.product(range(5), repeat=2):
        if p + q == 0:
            continue
        d = (q, p)
        got = resolve_rank2(KRON, (0, 1), p, (1, 0), q)
        assert _as_multiset(got) == _as_multiset(canonical_decomposition(KRON, d))
    th3_pairs = resolve_rank2(TH3, (0, 1), 1, (1, 0), 1)
    assert _as_multiset(th3_pairs) == {((1, 1), 1, RootKind.STRICT_IMAGINARY)}


def test_resolve_rank2_preconditions():
    with pytest.raises(NotOrthogonalPairError):
        resolve_rank2(KRON, (1, 0), 1, (0, 1), 1)  # wrong order: ext is nonzero
    with pytest.raises(PreconditionFailedError):
        resolve_rank2(KRON, (1, 1), 1, (1, 0), 1)  # isotropic alpha


def test_refine_isotropic_kronecker():
    state = trivial_schur_sequence(KRON, (1, 1))
    dec = canonical_decomposition(KRON, (1, 1))
    refined = refine_isotropic(KRON, SchurSequenceState(dec.summands), 0)
    roots = [e.root for e in refined.entries]
    assert len(roots) == 2
    beta, gamma = roots
    assert tuple(x + y for x, y in zip(beta, gamma)) == (1, 1)
    assert tits_form(KRON, beta) == 1 and tits_form(KRON, gamma) == 1
    assert state.total(2) == (1, 1)


def test_refine_isotropic_wild_six_vertex():
    f = form_data(C["example-2-5-2"])
    dec = canonical_decomposition(f, (0, 0, 1, 2, 1, 1))
    refined = refine_isotropic(f, SchurSequenceState(dec.summands), 0)
    beta, gamma = [e.root for e in refined.entries]
    assert tuple(x + y for x, y in zip(beta, gamma)) == (0, 0, 1, 2, 1, 1)
    assert euler_form(f, gamma, beta) == -2


def test_refine_isotropic_errors():
    real_state = trivial_schur_sequence(KRON, (1, 0))
    with pytest.raises(NotIsotropicSchurError):
        refine_isotropic(KRON, real_state, 0)
    with pytest.raises(PreconditionFailedError):
        refine_isotropic(KRON, real_state, 5)
    strict = canonical_decomposition(TH3, (1, 1))
    with pytest.raises(NotIsotropicSchurError):
        refine_isotropic(TH3, SchurSequenceState(strict.summands), 0)


def test_self_hom_frozen_values():
    assert (self_hom(KRON, (1, 1)), self_ext(KRON, (1, 1))) == (1, 1)
    assert (self_hom(KRON, (2, 2)), self_ext(KRON, (2, 2))) == (2, 2)
    assert (self_hom(KRON, (2, 1)), self_ext(KRON, (2, 1))) == (1, 0)
    assert (self_hom(TH3, (1, 1)), self_ext(TH3, (1, 1))) == (1, 2)
    assert (self_hom(TH3, (2, 2)), self_ext(TH3, (2, 2))) == (1, 5)
    a2 = form_data(C["a2"])
    assert (self_hom(a2, (1, 1)), self_ext(a2, (1, 1))) == (1, 0)
    assert (self_hom(a2, (2, 1)), self_ext(a2, (2, 1))) == (3, 0)


def test_self_hom_matches_randomized_endomorphisms():
    rng = random.Random(3)
    for name in ("kronecker", "theta-3", "a2", "wild-isotropic"):
        f = form_data(C[name])
        n = f.quiver.n
        for _ in range(15):
            d = tuple(rng.randint(0, 3) for _ in range(n))
            if not any(d) or height(d) > 6:
                continue
            assert self_hom(f, d) == hom_randomized(f, d, d, trials=6, seed=rng.randint(0, 10**6))

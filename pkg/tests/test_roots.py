import itertools
from fractions import Fraction

import pytest

from qroots.corpus import corpus
from qroots.errors import NotPositiveError
from qroots.forms import form_data, height, tits_form
from qroots.homext import table_for
from qroots.roots import (
    RootKind,
    _stability_schur,
    classify_with_schur,
    enumerate_real_schur_roots,
    is_schur,
    normalize,
    ray_distance,
    root_classify,
    roots_csv_lines,
)

C = corpus()
KRON = form_data(C["kronecker"])
TH3 = form_data(C["theta-3"])


def test_root_classify_kronecker():
    for d in ((1, 0), (0, 1), (2, 1), (1, 2), (3, 2)):
        assert root_classify(KRON, d).kind is RootKind.REAL
    assert root_classify(KRON, (1, 1)).kind is RootKind.ISOTROPIC
    assert root_classify(KRON, (3, 3)).kind is RootKind.ISOTROPIC
    assert root_classify(KRON, (1, 3)).kind is RootKind.NOT_ROOT


def test_root_classify_wild():
    assert root_classify(TH3, (1, 1)).kind is RootKind.STRICT_IMAGINARY
    assert root_classify(TH3, (1, 0)).kind is RootKind.REAL
    assert root_classify(TH3, (3, 1)).kind is RootKind.REAL  # q = 9 + 1 - 9 = 1
    assert root_classify(TH3, (4, 1)).kind is RootKind.NOT_ROOT


def test_schur_flags():
    assert classify_with_schur(KRON, (1, 1)).schur
    assert not classify_with_schur(KRON, (2, 2)).schur
    assert classify_with_schur(TH3, (2, 2)).schur
    assert classify_with_schur(KRON, (2, 1)).schur
    d4 = form_data(C["d4"])
    assert classify_with_schur(d4, (1, 1, 1, 2)).schur
    assert not classify_with_schur(d4, (1, 1, 0, 0)).is_root  # q = 2


def test_is_schur_matches_stability_oracle():
    # decomposition route against the theta-stability search
    for name in ("kronecker", "theta-3", "a2", "d4", "wild-isotropic"):
        f = form_data(C[name])
        t = table_for(f)
        n = f.quiver.n
        for d in itertools.product(range(4), repeat=n):
            if not any(d) or height(d) > 7:
                continue
            if not root_classify(f, d).is_root:
                continue
            assert is_schur(f, d, t) == _stability_schur(f, d, t), (name, d)


def test_enumeration_counts():
    assert len(enumerate_real_schur_roots(form_data(C["a2"]), 40)) == 3
    assert len(enumerate_real_schur_roots(form_data(C["d4"]), 40)) == 12
    kron = enumerate_real_schur_roots(KRON, 40)
    assert len(kron) == 40
    assert (20, 19) in kron and (19, 20) in kron
    assert (21, 20) not in kron  # height 41 is out of range


def test_enumeration_rejects_bad_bound():
    with pytest.raises(ValueError):
        enumerate_real_schur_roots(KRON, 0)


def test_real_schur_rays_land_on_unit_quadric_shells():
    # q(d / s(d)) = 1 / s(d)^2 exactly, in rational arithmetic
    for name in ("kronecker", "theta-3", "example-2-5-2"):
        f = form_data(C[name])
        for d in enumerate_real_schur_roots(f, 12):
            ray = normalize(d)
            s = height(d)
            assert tits_form(f, ray.representative) == Fraction(1, s * s)


def test_normalize_and_ray_distance():
    r = normalize((2, 2))
    assert r.representative == (Fraction(1, 2), Fraction(1, 2))
    assert r.rational and r.error == 0.0
    assert ray_distance(normalize((1, 1)), normalize((3, 3))) == 0
    d = ray_distance(normalize((1, 0)), normalize((0, 1)))
    assert d == 1
    with pytest.raises(NotPositiveError):
        normalize((0, 0))
    with pytest.raises(NotPositiveError):
        normalize((1, -1))


def test_csv_lines():
    rows = [(d, classify_with_schur(KRON, d)) for d in ((1, 0), (1, 1), (2, 2))]
    lines = roots_csv_lines(KRON, rows)
    assert lines[0] == "d1,d2,class,schur"
    assert lines[1] == "1,0,real,true"
    assert lines[2] == "1,1,isotropic,true"
    assert lines[3] == "2,2,isotropic,false"

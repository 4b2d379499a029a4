"""Named example quivers shared by the CLI and the test suite.

The list spans every base type the analyses distinguish: Dynkin (a2, d4),
Euclidean (kronecker, euclidean-a2-triangle), and wild quivers both with
and without isotropic Schur roots, plus the two larger mixed-signature
examples used for the hyperbolicity checks.
"""
from __future__ import annotations

from . import linalg
from .forms import form_data
from .quiver import Quiver

_ENTRIES: tuple[tuple[str, int, tuple[tuple[int, int], ...]], ...] = (
    ("kronecker", 2, ((1, 2), (1, 2))),
    ("theta-3", 2, ((1, 2), (1, 2), (1, 2))),
    ("theta-4", 2, ((1, 2), (1, 2), (1, 2), (1, 2))),
    ("a2", 2, ((1, 2),)),
    ("d4", 4, ((1, 4), (2, 4), (3, 4))),
    ("euclidean-a2-triangle", 3, ((1, 2), (2, 3), (1, 3))),
    ("example-2-5-1", 4, ((1, 2), (1, 2), (1, 2), (2, 3), (3, 4), (3, 4), (3, 4))),
    ("example-2-5-2", 6, ((1, 2), (2, 3), (3, 4), (3, 4), (5, 2), (5, 6), (6, 3), (6, 3))),
    ("wild-isotropic", 3, ((1, 2), (1, 2), (2, 3), (2, 3))),
    ("wild-no-isotropic", 3, ((1, 2), (1, 2), (1, 2), (2, 3), (2, 3), (2, 3))),
)


def corpus() -> dict[str, Quiver]:
    out = {}
    for name, n, arrows in _ENTRIES:
        q = Quiver(n, arrows)
        if name == "example-2-5-2":
            # arrow multiset read off a picture; guard the intended
            # hyperbolic signature instead of pinning the exact matrix
            assert linalg.det_bareiss(form_data(q).symmetric_matrix) < 0
        out[name] = q
    return out


def corpus_names() -> tuple[str, ...]:
    return tuple(name for name, _, _ in _ENTRIES)


def get(name: str) -> Quiver:
    q = corpus().get(name)
    if q is None:
        raise KeyError(f"unknown corpus quiver {name!r}; known: {', '.join(corpus_names())}")
    return q

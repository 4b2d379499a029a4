"""Command-line front end.

Every command reads a quiver from a JSON file or from the built-in corpus
(``corpus:NAME``), runs one analysis, and emits a deterministic document:
JSON by default, CSV for tabular commands via ``--csv``, SVG for the
3-vertex simplex plot.  Exact quantities are serialized as integers or
"p/q" strings so float noise never contaminates them.  Exit status: 0 on
success, 1 on a domain error (with a machine-readable ``{"error": code,
"detail": ...}`` object), 2 on a usage error.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from .accumulation import (
    acc2_scan,
    special_eigenvectors,
    strict_imaginary_neighborhood_probe,
    tau_orbit,
)
from .candecomp import canonical_decomposition, verify_kac_criterion
from .corpus import corpus, corpus_names
from .errors import QRootsError
from .forms import classify, form_data, height, tits_form
from .homext import ext_generic, hom_generic
from .quiver import Quiver, quiver_from_json, quiver_to_json
from .roots import (
    classify_with_schur,
    enumerate_real_schur_roots,
    normalize,
    root_classify,
    roots_csv_lines,
)


class UsageError(Exception):
    pass


def _load_quiver(source: str) -> Quiver:
    if source.startswith("corpus:"):
        name = source[len("corpus:"):]
        entries = corpus()
        if name not in entries:
            raise UsageError(f"unknown corpus quiver {name!r}; known: {', '.join(corpus_names())}")
        return entries[name]
    try:
        with open(source, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read quiver file {source!r}: {exc}")
    return quiver_from_json(text)


def _parse_vector(parts, n: int):
    """Dimension vector from positional arguments: either n integers or a
    single comma-separated entry like 1,2,0."""
    if len(parts) == 1 and "," in parts[0]:
        parts = [p for p in parts[0].split(",") if p != ""]
    try:
        vec = tuple(int(p) for p in parts)
    except ValueError:
        raise UsageError(f"dimension vector entries must be integers, got {parts!r}")
    if len(vec) != n:
        raise UsageError(f"expected {n} vector entries, got {len(vec)}")
    return vec


def _enc(x):
    """JSON-ready form: Fractions become ints or 'p/q' strings, tuples
    become lists, enums become their values."""
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, bool) or isinstance(x, (int, str, float)) or x is None:
        return x
    if isinstance(x, (tuple, list)):
        return [_enc(v) for v in x]
    if hasattr(x, "value") and x.__class__.__module__ != "builtins":
        return x.value
    raise TypeError(f"cannot serialize {x!r}")


def _ray_entries(ray):
    return [_enc(v) for v in ray.representative]


def _emit(args, text: str) -> None:
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if not text.endswith("\n") and not out:
        sys.stdout.write("\n")


def _emit_json(args, obj) -> None:
    _emit(args, json.dumps(obj, indent=2))


def _no_csv(args, command: str) -> None:
    if getattr(args, "csv", False):
        raise UsageError(f"csv output is not available for {command}")


def _cmd_classify(args) -> int:
    _no_csv(args, "classify")
    q = _load_quiver(args.source)
    info = classify(q)
    sig = info.signature
    _emit_json(args, {
        "base": info.base.value,
        "connected": info.connected,
        "signature": {"pos": sig.pos, "neg": sig.neg, "zero": sig.zero},
        "at_most_weakly_hyperbolic": info.at_most_weakly_hyperbolic,
        "weakly_hyperbolic": info.weakly_hyperbolic,
        "component_types": [t.value for t in info.component_types],
    })
    return 0


def _lattice_roots(f, bound):
    n = f.quiver.n
    found = []

    def walk(prefix, remaining):
        i = len(prefix)
        if i == n:
            if any(prefix):
                cls = classify_with_schur(f, tuple(prefix))
                if cls.is_root:
                    found.append((tuple(prefix), cls))
            return
        for v in range(remaining + 1):
            walk(prefix + [v], remaining - v)

    walk([], bound)
    found.sort()
    return found


def _cmd_roots(args) -> int:
    q = _load_quiver(args.source)
    f = form_data(q)
    found = _lattice_roots(f, args.height)
    if args.csv:
        _emit(args, "\n".join(roots_csv_lines(f, found)) + "\n")
        return 0
    _emit_json(args, {
        "height": args.height,
        "roots": [
            {"d": list(d), "class": cls.kind.value, "schur": cls.schur}
            for d, cls in found
        ],
    })
    return 0


def _cmd_homext(args) -> int:
    _no_csv(args, "homext")
    q = _load_quiver(args.source)
    alpha = _parse_vector([args.alpha], q.n)
    beta = _parse_vector([args.beta], q.n)
    h = hom_generic(q, alpha, beta)
    e = ext_generic(q, alpha, beta)
    _emit_json(args, {"hom": h, "ext": e, "euler": h - e})
    return 0


def _cmd_schur(args) -> int:
    _no_csv(args, "schur")
    q = _load_quiver(args.source)
    d = _parse_vector(args.vector, q.n)
    f = form_data(q)
    cls = classify_with_schur(f, d)
    _emit_json(args, {"d": list(d), "class": cls.kind.value, "schur": cls.schur})
    return 0


def _cmd_candecomp(args) -> int:
    _no_csv(args, "candecomp")
    q = _load_quiver(args.source)
    d = _parse_vector(args.vector, q.n)
    f = form_data(q)
    dec = canonical_decomposition(f, d)
    check = verify_kac_criterion(f, dec, d)
    _emit_json(args, {
        "input": list(d),
        "summands": [
            {"root": list(e.root), "mult": e.mult, "class": e.cls.kind.value}
            for e in dec.summands
        ],
        "verified": bool(check),
    })
    return 0


def _accpoints_data(q, bound):
    eig = special_eigenvectors(q)
    points = acc2_scan(q, bound)
    lam = 1 if eig.euclidean_degenerate else eig.lambda_plus
    return eig, points, lam


def _cmd_accpoints(args) -> int:
    q = _load_quiver(args.source)
    eig, points, lam = _accpoints_data(q, args.height)
    if args.csv:
        lines = ["kind,entries,rational,t"]
        lines.append("y_minus," + " ".join(str(_enc(v)) for v in eig.y_minus.representative) + ",,")
        lines.append("y_plus," + " ".join(str(_enc(v)) for v in eig.y_plus.representative) + ",,")
        for p in points:
            coords = " ".join(str(_enc(v)) for v in p.ray.representative)
            lines.append(f"acc2,{coords},{str(p.rational).lower()},{p.t}")
        _emit(args, "\n".join(lines) + "\n")
        return 0
    _emit_json(args, {
        "y_minus": _ray_entries(eig.y_minus),
        "y_plus": _ray_entries(eig.y_plus),
        "lambda_plus": lam,
        "acc2": [
            {
                "ray": _ray_entries(p.ray),
                "rational": p.rational,
                "pair": {"alpha": list(p.pair[0]), "beta": list(p.pair[1])},
                "t": p.t,
            }
            for p in points
        ],
    })
    return 0


def _cmd_converge(args) -> int:
    q = _load_quiver(args.source)
    d = _parse_vector(args.vector, q.n)
    rays, report = tau_orbit(q, d, args.direction, args.steps)
    if args.csv:
        lines = ["step,entries,distance"]
        for i, (ray, dist) in enumerate(zip(rays, report.distances)):
            coords = " ".join(str(_enc(v)) for v in ray.representative)
            lines.append(f"{i},{coords},{dist!r}")
        _emit(args, "\n".join(lines) + "\n")
        return 0
    _emit_json(args, {
        "d": list(d),
        "direction": args.direction,
        "target": _ray_entries(report.target),
        "rays": [_ray_entries(r) for r in rays],
        "distances": list(report.distances),
        "aborted": report.aborted,
        "steps_completed": report.steps_completed,
    })
    return 0


def _cmd_probe(args) -> int:
    _no_csv(args, "probe")
    q = _load_quiver(args.source)
    d = _parse_vector(args.vector, q.n)
    try:
        radius = Fraction(args.radius)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"radius must be a rational like 1/20, got {args.radius!r}")
    rep = strict_imaginary_neighborhood_probe(q, d, radius, args.samples, seed=args.seed)
    kept = rep.samples - len(rep.violators)
    _emit_json(args, {
        "d": list(d),
        "radius": _enc(radius),
        "samples": rep.samples,
        "fraction": _enc(Fraction(kept, rep.samples)),
        "violators": [list(v) for v in rep.violators],
        "attempts": rep.attempts,
    })
    return 0


def _cmd_corpus(args) -> int:
    _no_csv(args, "corpus")
    entries = corpus()
    _emit_json(args, {
        "quivers": [
            {"name": name, "quiver": json.loads(quiver_to_json(entries[name]))}
            for name in corpus_names()
        ],
    })
    return 0


# simplex plot: barycentric projection of the normalized simplex for n = 3

_TRI = ((320.0, 40.0), (40.0, 520.0), (600.0, 520.0))


def _project(v) -> tuple[float, float]:
    x = sum(float(c) * p[0] for c, p in zip(v, _TRI))
    y = sum(float(c) * p[1] for c, p in zip(v, _TRI))
    return x, y


def _conic_points(f, samples: int = 512):
    """Points of q = 0 inside the simplex plane, as barycentric triples.

    Shoots rays from an interior point with q < 0 (the midpoint of y-,y+
    for wild quivers) and solves the quadratic crossing exactly per ray.
    Euclidean quivers degenerate to the single null ray.
    """
    info = classify(f.quiver)
    from .forms import BaseType

    if info.base is BaseType.DYNKIN:
        return []
    eig = special_eigenvectors(f)
    if eig.euclidean_degenerate:
        return [eig.y_minus.as_floats()]
    a = f.symmetric_matrix
    n = 3

    def q_of(v):
        return sum(a[i][j] * v[i] * v[j] for i in range(n) for j in range(n)) / 2.0

    def b_of(u, w):
        return sum(a[i][j] * u[i] * w[j] for i in range(n) for j in range(n))

    center = [(p + m) / 2 for p, m in zip(eig.y_plus.as_floats(), eig.y_minus.as_floats())]
    qc = q_of(center)
    if qc >= 0:
        center = [1.0 / 3] * 3  # fall back to the barycenter
        qc = q_of(center)
    b1 = (1 / math.sqrt(2), -1 / math.sqrt(2), 0.0)
    b2 = (1 / math.sqrt(6), 1 / math.sqrt(6), -2 / math.sqrt(6))
    out = []
    for k in range(samples):
        ang = 2 * math.pi * k / samples
        c, s = math.cos(ang), math.sin(ang)
        u = tuple(c * x + s * y for x, y in zip(b1, b2))  # in the plane sum = 0
        qa = q_of(u)
        qb = b_of(center, u)
        if abs(qa) < 1e-14:
            if qb <= 0:
                continue
            t = -qc / qb
        else:
            disc = qb * qb - 4 * qa * qc
            if disc < 0:
                continue
            r1 = (-qb - math.sqrt(disc)) / (2 * qa)
            r2 = (-qb + math.sqrt(disc)) / (2 * qa)
            pos = [r for r in (r1, r2) if r > 0]
            if not pos:
                continue
            t = min(pos)
        v = tuple(c + t * x for c, x in zip(center, u))
        if all(x >= -1e-9 for x in v):
            out.append(v)
    return out


def _svg_simplex(q: Quiver, bound: int) -> str:
    f = form_data(q)
    parts = [
        '<svg xmlns="http://www.w3.org/2000/svg" width="640" height="560" viewBox="0 0 640 560">',
        '<rect width="640" height="560" fill="white"/>',
    ]
    tri = " ".join(f"{x:.1f},{y:.1f}" for x, y in _TRI)
    parts.append(f'<polygon points="{tri}" fill="none" stroke="black" stroke-width="1"/>')
    labels = ((320, 28), (26, 534), (614, 534))
    for i, (lx, ly) in enumerate(labels, start=1):
        parts.append(f'<text x="{lx}" y="{ly}" font-size="16" text-anchor="middle">{i}</text>')
    conic = _conic_points(f)
    for v in conic:
        x, y = _project(v)
        parts.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="1" fill="steelblue"/>')
    for d in enumerate_real_schur_roots(f, bound):
        x, y = _project(normalize(d).as_floats())
        parts.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="3" fill="black"/>')
    for p in acc2_scan(f, bound):
        x, y = _project(p.ray.as_floats())
        parts.append(
            f'<path d="M {x-5:.2f} {y-5:.2f} L {x+5:.2f} {y+5:.2f} '
            f'M {x-5:.2f} {y+5:.2f} L {x+5:.2f} {y-5:.2f}" stroke="red" stroke-width="2"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _cmd_simplex_plot(args) -> int:
    _no_csv(args, "simplex-plot")
    q = _load_quiver(args.source)
    if q.n != 3:
        raise UsageError("simplex-plot requires a quiver with exactly 3 vertices")
    _emit(args, _svg_simplex(q, args.height))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="qroots",
        description="Root systems of acyclic quivers: classification, generic "
        "hom/ext, canonical decomposition, accumulation rays.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, **kw):
        sp = sub.add_parser(name, **kw)
        sp.set_defaults(func=func)
        sp.add_argument("--out", help="write output to a file instead of stdout")
        return sp

    def src(sp):
        sp.add_argument("source", help="quiver JSON file or corpus:NAME")

    sp = add("classify", _cmd_classify, help="base type, signature, hyperbolicity flags")
    src(sp)

    sp = add("roots", _cmd_roots, help="all roots up to a height bound with Schur flags")
    src(sp)
    sp.add_argument("--height", type=int, default=8)
    sp.add_argument("--csv", action="store_true")

    sp = add("homext", _cmd_homext, help="generic hom and ext between two dimension vectors")
    src(sp)
    sp.add_argument("alpha", help="first dimension vector, comma separated")
    sp.add_argument("beta", help="second dimension vector, comma separated")

    sp = add("schur", _cmd_schur, help="root class and Schur test of one dimension vector")
    src(sp)
    sp.add_argument("vector", nargs="+", help="dimension vector entries")

    sp = add("candecomp", _cmd_candecomp, help="canonical decomposition, Kac-verified")
    src(sp)
    sp.add_argument("vector", nargs="+", help="dimension vector entries")

    sp = add("accpoints", _cmd_accpoints, help="special eigenvectors and rank-two accumulation rays")
    src(sp)
    sp.add_argument("--height", type=int, default=6)
    sp.add_argument("--csv", action="store_true")

    sp = add("converge", _cmd_converge, help="tau-orbit rays and distances to the target eigenray")
    src(sp)
    sp.add_argument("vector", nargs="+", help="dimension vector entries")
    sp.add_argument("--steps", type=int, default=20)
    sp.add_argument("--direction", choices=("forward", "inverse"), default="inverse")
    sp.add_argument("--csv", action="store_true")

    sp = add("probe", _cmd_probe, help="strict-imaginary stability of a ray neighborhood")
    src(sp)
    sp.add_argument("vector", nargs="+", help="dimension vector entries")
    sp.add_argument("--radius", default="1/20", help="rational ray-ball radius, e.g. 1/20")
    sp.add_argument("--samples", type=int, default=200)
    sp.add_argument("--seed", type=int, default=0)

    sp = add("simplex-plot", _cmd_simplex_plot, help="SVG of the 2-simplex with quadric, roots, rays")
    src(sp)
    sp.add_argument("--height", type=int, default=8)

    add("corpus", _cmd_corpus, help="list the built-in named quivers")
    return p


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except QRootsError as exc:
        print(json.dumps({"error": exc.code, "detail": exc.detail or str(exc)}))
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

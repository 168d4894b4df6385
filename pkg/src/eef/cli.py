"""Command-line front end.

Exit codes: 0 success, 1 mathematical failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .border import (
    ConvergenceError,
    ExposedSet,
    GibbsPath,
    exposed_sets_from_basis,
    extended_membership,
    faces_to_json,
    indicator_expansions,
    limit_of_path,
)
from .exactmath import rank
from .family import Density
from .hilbert import EmptyConeError, basis_to_json, brute_force_basis, hilbert_basis
from .modelspec import (
    ModelFormatError,
    ModelMatrix,
    confounding_space,
    ensure_constant_row,
    format_model,
    four_cycle,
    kernel_basis,
    markov_chain,
    parse_model,
)

EXIT_OK, EXIT_MATH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def rat(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def density_to_json(p: Density) -> dict:
    vals = [rat(v) for v in p.values] if p.exact else [float(v) for v in p.values]
    return {"labels": list(p.statespace.labels), "values": vals}


def parse_density(text: str, M: ModelMatrix) -> Density:
    """One value per line; ``p/q`` and integers are exact, anything with a point or exponent is a float."""
    tokens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            tokens.append((lineno, line))
    if len(tokens) != M.n:
        raise UsageError(f"density has {len(tokens)} values, model has {M.n} states")
    exact = all(not any(c in tok for c in ".eE") for _, tok in tokens)
    vals = []
    for lineno, tok in tokens:
        try:
            vals.append(Fraction(tok) if exact else float(Fraction(tok)))
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"line {lineno}: cannot parse density value {tok!r}") from None
        if vals[-1] < 0:
            raise UsageError(f"line {lineno}: negative density value")
    p = Density.from_values(M.statespace, vals)
    if not p.is_normalized():
        mass = rat(p.mass()) if p.exact else repr(p.mass())
        raise UsageError(f"density is not normalized: total mass {mass}")
    return p


def _load_model(path: str) -> ModelMatrix:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise UsageError(str(exc)) from None
    try:
        return parse_model(text)
    except ModelFormatError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _table(header: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(str(r[i])) for r in [header] + rows) for i in range(len(header))]
    fmt = lambda r: "  ".join(str(c).rjust(w) for c, w in zip(r, widths))  # noqa: E731
    return "\n".join([fmt(header), "-" * len(fmt(header))] + [fmt(r) for r in rows])


# --- subcommands -------------------------------------------------------------


def cmd_kernel(args) -> int:
    M = _load_model(args.model)
    K = kernel_basis(M)
    conf = confounding_space(M)
    if args.pretty:
        print(f"states {M.n}, rows {M.m}, rank (with constant) {rank(M.weighted())}, kernel dimension {K.rank}")
        if K.rank:
            print(_table(["state"] + [f"w{j + 1}" for j in range(K.rank)], [[M.labels[x]] + list(K.K.row(x)) for x in range(M.n)]))
        print("confounding basis:")
        if conf:
            print(_table(list(M.row_names), [[str(v) for v in c] for c in conf]))
        return EXIT_OK
    print(dumps({
        "confounding": [[rat(v) for v in c] for c in conf],
        "kernel": [list(c) for c in K.columns()],
        "labels": list(M.labels),
        "rank": rank(M.weighted()),
        "row_names": list(M.row_names),
    }))
    return EXIT_OK


def cmd_hilbert(args) -> int:
    M = _load_model(args.model)
    K = kernel_basis(M)
    try:
        B = hilbert_basis(K, method=args.method)
    except EmptyConeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MATH
    out = basis_to_json(B)
    status = EXIT_OK
    if args.oracle is not None:
        try:
            oracle = brute_force_basis(K, args.oracle)
        except ValueError as exc:
            raise UsageError(f"oracle: {exc}") from None
        agrees = oracle.as_set() == B.as_set()
        out["oracle"] = {"agrees": agrees, "bound": args.oracle, "size": len(oracle)}
        if not agrees:
            status = EXIT_MATH
    if args.pretty:
        print(_table(["state"] + [f"b{j + 1}" for j in range(len(B))], [[M.labels[x]] + [v[x] for v in B] for x in range(M.n)]))
        if "oracle" in out:
            print(f"oracle (bound {args.oracle}): {'agrees' if out['oracle']['agrees'] else 'DISAGREES'}")
    else:
        print(dumps(out))
    return status


def cmd_faces(args) -> int:
    M = _load_model(args.model)
    try:
        B = hilbert_basis(kernel_basis(M))
    except EmptyConeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MATH
    faces = exposed_sets_from_basis(B, M)
    rows = list(ensure_constant_row(M).row_names)
    expansions = indicator_expansions(B, M)
    if args.pretty:
        for i, F in enumerate(faces, start=1):
            print(f"face {i}: b{F.generators[0] + 1}, {len(F.states)} states: {' '.join(M.labels[x] for x in sorted(F.states))}")
        print()
        print(_table(["row"] + [f"F{j + 1}" for j in range(len(B))], [[r] + [str(c[i]) for c in expansions] for i, r in enumerate(rows)]))
        return EXIT_OK
    out = faces_to_json(faces, M)
    out["expansions"] = [
        {"coefficients": {r: rat(v) for r, v in zip(rows, c)}, "index": j, "vector": list(B[j])}
        for j, c in enumerate(expansions)
    ]
    out["rows"] = rows
    print(dumps(out))
    return EXIT_OK


def cmd_check(args) -> int:
    M = _load_model(args.model)
    try:
        text = Path(args.density).read_text() if args.density != "-" else sys.stdin.read()
    except OSError as exc:
        raise UsageError(str(exc)) from None
    q = parse_density(text, M)
    try:
        B = hilbert_basis(kernel_basis(M))
    except EmptyConeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MATH
    verdict = extended_membership(q, M, B)
    if args.pretty:
        print(f"verdict: {verdict.kind}")
        if verdict.face is not None:
            print("face: " + " ".join(M.labels[x] for x in sorted(verdict.face.states)))
    else:
        print(dumps(verdict.to_json(M)))
    if args.expect == "closure":
        return EXIT_OK if verdict.in_closure else EXIT_MATH
    if args.expect is not None and verdict.kind != args.expect:
        return EXIT_MATH
    return EXIT_OK


def _parse_floats(s: str) -> list[float]:
    try:
        return [float(t) for t in s.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"cannot parse number list {s!r}") from None


def cmd_limit(args) -> int:
    M = _load_model(args.model)
    theta = _parse_floats(args.theta) if args.theta else [0.0] * M.m
    if len(theta) != M.m:
        raise UsageError(f"--theta needs {M.m} values, got {len(theta)}")
    if args.tol <= 0:
        raise UsageError("--tol must be positive")
    B = hilbert_basis(kernel_basis(M))
    faces = exposed_sets_from_basis(B, M)
    if args.face == 0:
        face = ExposedSet(frozenset(range(M.n)), (0,) * ensure_constant_row(M).m, ())
    elif 1 <= args.face <= len(faces):
        face = faces[args.face - 1]
    else:
        raise UsageError(f"--face must be between 0 and {len(faces)}")
    path = GibbsPath(tuple(theta), face)
    try:
        p, beta, gap = limit_of_path(M, path, tol=args.tol, full_output=True)
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(dumps({"beta": exc.beta, "converged": False, "gap": exc.gap}))
        return EXIT_MATH
    if args.pretty:
        print(f"face {args.face} ({len(face.states)} states), stopped at beta={beta:g}, gap={gap:.3e}")
        print(_table(["state", "p"], [[M.labels[x], f"{v:.12g}"] for x, v in enumerate(p.values)]))
        return EXIT_OK
    print(dumps({"beta": beta, "converged": True, "density": density_to_json(p), "face": face.to_json(M), "gap": gap}))
    return EXIT_OK


def cmd_example(args) -> int:
    if args.name == "four-cycle":
        M = four_cycle()
    else:
        if args.steps is None:
            raise UsageError("markov requires --steps")
        if not 1 <= args.steps <= 12:
            raise UsageError("--steps must be between 1 and 12")
        M = markov_chain(args.steps)
    sys.stdout.write(format_model(M))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="eef", description="Border of a discrete exponential family.")
    sub = ap.add_subparsers(dest="command", required=True)

    def with_model(name, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("model", help="model file, or - for stdin")
        p.add_argument("--pretty", action="store_true", help="aligned text tables instead of JSON")
        return p

    p = with_model("kernel", "integer kernel and confounding space")
    p.set_defaults(func=cmd_kernel)

    p = with_model("hilbert", "Hilbert basis of the maximal monomial model")
    p.add_argument("--oracle", type=int, metavar="BOUND", help="also run the brute-force oracle up to BOUND")
    p.add_argument("--method", choices=("primal", "completion"), default="primal")
    p.set_defaults(func=cmd_hilbert)

    p = with_model("faces", "exposed sets, certificates and indicator expansions")
    p.set_defaults(func=cmd_faces)

    p = with_model("check", "membership of a density in the closure")
    p.add_argument("density", help="density file, one value per line")
    p.add_argument("--expect", choices=("interior", "border", "outside", "closure"))
    p.set_defaults(func=cmd_check)

    p = with_model("limit", "limit of a Gibbs path onto a face")
    p.add_argument("--theta", help="base canonical parameter, comma or space separated")
    p.add_argument("--face", type=int, default=0, help="face index from 'faces' (1-based); 0 is the full space")
    p.add_argument("--tol", type=float, default=1e-10)
    p.set_defaults(func=cmd_limit)

    p = sub.add_parser("example", help="print a worked-example model file")
    p.add_argument("name", choices=("four-cycle", "markov"))
    p.add_argument("--steps", type=int)
    p.set_defaults(func=cmd_example)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

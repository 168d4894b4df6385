"""Compute the 4-cycle Hilbert basis, its faces and indicator expansions, and time each step.

    python scripts/fourcycle_report.py [--method completion] [--json out.json]
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass

from eef import four_cycle, hilbert_basis, kernel_basis
from eef.border import exposed_sets_from_basis, indicator_expansions
from eef.hilbert import redundant_elements
from eef.modelspec import ensure_constant_row


@dataclass
class Report:
    method: str
    kernel_rank: int
    basis_size: int
    binary: bool
    face_sizes: dict
    redundant: list
    seconds_basis: float
    seconds_faces: float


def run(method: str) -> tuple[Report, list]:
    M = four_cycle()
    K = kernel_basis(M)
    t0 = time.perf_counter()
    B = hilbert_basis(K, method=method)
    t1 = time.perf_counter()
    faces = exposed_sets_from_basis(B, M)
    exps = indicator_expansions(B, M)
    t2 = time.perf_counter()
    sizes: dict[int, int] = {}
    for F in faces:
        sizes[len(F.states)] = sizes.get(len(F.states), 0) + 1
    rep = Report(method, K.rank, len(B), all(set(v) <= {0, 1} for v in B), sizes,
                 sorted(redundant_elements(B)), round(t1 - t0, 3), round(t2 - t1, 3))
    return rep, list(zip(B.vectors, exps))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--method", choices=("primal", "completion"), default="primal")
    ap.add_argument("--json", help="write the report here as JSON")
    args = ap.parse_args()
    rep, rows = run(args.method)
    M = four_cycle()
    names = ensure_constant_row(M).row_names
    for k, v in asdict(rep).items():
        print(f"{k:>14}: {v}")
    print()
    print("16 x coefficients of 1 - b_j over", " ".join(names))
    for b, c in rows:
        zeros = [M.labels[x] for x, v in enumerate(b) if v == 0]
        print(" ".join(f"{int(16 * x):>3}" for x in c), "  zero set size", len(zeros))
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(asdict(rep), fh, indent=2, sort_keys=True)


if __name__ == "__main__":
    main()

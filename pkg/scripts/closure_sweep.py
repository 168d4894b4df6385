"""Random sweep over B-model parameters: sample zero patterns, build the density, classify it,
and follow a Gibbs path back onto the same face.

Seeded from EEF_SEED (default 0) so runs are reproducible.

    EEF_SEED=3 python scripts/closure_sweep.py --model four-cycle --samples 200
"""

import argparse
import os
import random
import time
from collections import Counter
from dataclasses import dataclass

import numpy as np

from eef import four_cycle, hilbert_basis, independence_2x2, kernel_basis, markov_chain
from eef.border import GibbsPath, b_model_density, exposed_sets_from_basis, extended_membership, is_exposed, limit_of_path
from eef.family import DegenerateDensityError

MODELS = {"four-cycle": four_cycle, "independence": independence_2x2, "markov3": lambda: markov_chain(3)}


@dataclass
class SweepConfig:
    model: str = "four-cycle"
    samples: int = 200
    zero_prob: float = 0.1
    seed: int = 0


def sweep(cfg: SweepConfig) -> Counter:
    rng = random.Random(cfg.seed)
    nprng = np.random.default_rng(cfg.seed)
    M = MODELS[cfg.model]()
    B = hilbert_basis(kernel_basis(M))
    faces = exposed_sets_from_basis(B, M)
    tally: Counter = Counter()
    for _ in range(cfg.samples):
        zeta = [0 if rng.random() < cfg.zero_prob else rng.randint(1, 5) for _ in B]
        try:
            p = b_model_density(B, M.statespace, zeta)
        except DegenerateDensityError:
            tally["degenerate"] += 1
            continue
        v = extended_membership(p, M, B, faces)
        tally[v.kind] += 1
        if v.kind == "border":
            face = is_exposed(p.support, faces, M)
            q = limit_of_path(M, GibbsPath(tuple(nprng.normal(size=M.m)), face))
            tally["limit-on-face"] += q.support == face.states
    tally["basis"] = len(B)
    return tally


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--model", choices=sorted(MODELS), default=SweepConfig.model)
    ap.add_argument("--samples", type=int, default=SweepConfig.samples)
    ap.add_argument("--zero-prob", type=float, default=SweepConfig.zero_prob)
    args = ap.parse_args()
    cfg = SweepConfig(args.model, args.samples, args.zero_prob, int(os.environ.get("EEF_SEED", "0")))
    t0 = time.perf_counter()
    tally = sweep(cfg)
    print(cfg)
    for k in sorted(tally):
        print(f"{k:>14}: {tally[k]}")
    print(f"{'seconds':>14}: {time.perf_counter() - t0:.2f}")


if __name__ == "__main__":
    main()

"""Confounding dimension and kernel rank of the binary Markov chain model for a range of lengths.

    python scripts/markov_confounding.py --max-steps 8 [--hilbert-up-to 4]
"""

import argparse
import time
from dataclasses import dataclass

from eef import hilbert_basis, kernel_basis, markov_chain
from eef.modelspec import confounding_space


@dataclass
class Config:
    max_steps: int = 8
    hilbert_up_to: int = 4


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-steps", type=int, default=Config.max_steps)
    ap.add_argument("--hilbert-up-to", type=int, default=Config.hilbert_up_to,
                    help="also compute the Hilbert basis for chains up to this length")
    cfg = Config(**{k: v for k, v in vars(ap.parse_args()).items()})
    print(f"{'steps':>5} {'states':>6} {'kernel':>6} {'conf':>4} {'hilbert':>7} {'sec':>7}  confounding basis")
    for n in range(1, cfg.max_steps + 1):
        t0 = time.perf_counter()
        M = markov_chain(n)
        K = kernel_basis(M)
        conf = confounding_space(M)
        hb = len(hilbert_basis(K)) if n <= cfg.hilbert_up_to else "-"
        dt = time.perf_counter() - t0
        basis = "; ".join(" ".join(str(v) for v in c) for c in conf)
        print(f"{n:>5} {M.n:>6} {K.rank:>6} {len(conf):>4} {hb!s:>7} {dt:>7.3f}  {basis}")


if __name__ == "__main__":
    main()

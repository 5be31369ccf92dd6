"""Sample fan friezes and check that the local relations imply all relations and tameness.

    python3 scripts/local_implies_all.py --rings quaternion matrix(2) --m 4 9 --seeds 20
"""

import argparse
import time
from collections import Counter
from dataclasses import dataclass, field

from ncfrieze.frieze import generate_fan, verify_all, verify_local
from ncfrieze.propagation import is_neg_identity, monodromy
from ncfrieze.quasidet import tame_scan
from ncfrieze.rings import parse_ring


@dataclass
class Config:
    rings: list = field(default_factory=lambda: ["quaternion", "matrix(2)"])
    m_lo: int = 4
    m_hi: int = 9          # exclusive
    seeds: int = 10
    max_coeff: int = 3


def run(cfg):
    tally = Counter()
    for spec in cfg.rings:
        ring = parse_ring(spec)
        for m in range(cfg.m_lo, cfg.m_hi):
            t0 = time.perf_counter()
            for s in range(cfg.seeds):
                fr = generate_fan(m, ring, seed=s, max_coeff=cfg.max_coeff)
                tally["friezes"] += 1
                tally["local_ok"] += verify_local(fr).ok
                tally["all_ok"] += verify_all(fr).ok
                tally["tame_ok"] += tame_scan(fr).ok
                tally["monodromy_ok"] += is_neg_identity(monodromy(fr))
            print(f"{spec:>12} m={m}  {cfg.seeds} friezes  {time.perf_counter() - t0:.2f}s")
    return tally


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--rings", nargs="+", default=Config().rings)
    p.add_argument("--m", nargs=2, type=int, default=[4, 9])
    p.add_argument("--seeds", type=int, default=10)
    p.add_argument("--max-coeff", type=int, default=3)
    a = p.parse_args()
    tally = run(Config(a.rings, a.m[0], a.m[1], a.seeds, a.max_coeff))
    for k, v in tally.items():
        print(f"{k:>14}: {v}")
    bad = tally["friezes"] - min(tally[k] for k in tally if k != "friezes")
    print("counterexamples:", bad)


if __name__ == "__main__":
    main()

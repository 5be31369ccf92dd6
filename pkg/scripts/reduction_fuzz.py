"""Fuzz the three-to-two mu-factor reduction and its effect on quiddity cycles.

    python3 scripts/reduction_fuzz.py --samples 2000 --seed 1
"""

import argparse
from dataclasses import dataclass

import numpy as np

from ncfrieze.errors import NotInvertible
from ncfrieze.frieze import generate_fan
from ncfrieze.matrices import mat_mul
from ncfrieze.propagation import mu
from ncfrieze.quiddity import extract, reduce_at, reduction_factors, verify_cycle
from ncfrieze.rings import parse_ring


@dataclass
class Config:
    ring: str = "quaternion"
    samples: int = 1000
    seed: int = 0
    max_coeff: int = 3


def identity_fuzz(cfg):
    R = parse_ring(cfg.ring)
    rng = np.random.default_rng(cfg.seed)
    fails = 0
    for _ in range(cfg.samples):
        v = [R.random_unit(rng, cfg.max_coeff) for _ in range(10)]
        cm, c0, cp, dm, d0, d1, d2, dpm, dp0, dp1 = v
        lhs = mat_mul(mat_mul(mu(cm, d0, dpm, dm, R), mu(c0, d1, dp0, d0, R)), mu(cp, d2, dp1, d1, R))
        a, b = reduction_factors(*v, R)
        fails += lhs != mat_mul(mu(*a, R), mu(*b, R))
    return fails


def cycle_chain(cfg, m=8):
    """Reduce a generated cycle step by step down to m = 2."""
    R = parse_ring(cfg.ring)
    cyc = extract(generate_fan(m, R, seed=cfg.seed))
    rng = np.random.default_rng(cfg.seed)
    while cyc.m > 2:
        order = rng.permutation(cyc.m)
        for r in order:
            try:
                cyc = reduce_at(cyc, int(r))
                break
            except NotInvertible:
                continue
        else:
            print(f"  stuck at m={cyc.m}: every c_r is singular")
            return cyc
        print(f"  m={cyc.m}  cut at {cyc.meta['cut']['at']}  cycle={verify_cycle(cyc)}")
    return cyc


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--ring", default="quaternion")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    a = p.parse_args()
    cfg = Config(a.ring, a.samples, a.seed)
    print(f"identity failures: {identity_fuzz(cfg)} / {cfg.samples}")
    last = cycle_chain(cfg)
    print("final m=2 cycle has c = 0:", all(last.ring.is_zero(c) for c in last.c))


if __name__ == "__main__":
    main()

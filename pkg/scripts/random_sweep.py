"""Build random presentations for a range of arc counts and tabulate thickness and bound slack.

    python3 scripts/random_sweep.py --alpha-min 3 --alpha-max 10 --per-alpha 20 --csv sweep.csv
"""

from __future__ import annotations

import argparse
import csv
import random
import sys
import time
from dataclasses import asdict, dataclass

import numpy as np

from arcrope.arcpres import random_presentation, skip
from arcrope.builder import build, prop1_bound
from arcrope.curve import check_continuity, length
from arcrope.thickness import thickness_report


@dataclass
class SweepConfig:
    alpha_min: int = 3
    alpha_max: int = 10
    per_alpha: int = 20
    density: float = 100.0
    seed: int = 0


@dataclass
class Row:
    alpha: int
    trial: int
    skip: int
    length: float
    bound: float
    thickness: float
    limited_by: str
    joins_ok: bool
    seconds: float


def sweep(cfg: SweepConfig):
    rng = random.Random(cfg.seed)
    for alpha in range(cfg.alpha_min, cfg.alpha_max + 1):
        for k in range(cfg.per_alpha):
            t0 = time.perf_counter()
            A = random_presentation(alpha, rng)
            c = build(A)
            rep = thickness_report(c, density=cfg.density)
            yield Row(
                alpha,
                k,
                skip(A),
                length(c),
                prop1_bound(alpha, skip(A)),
                rep.thickness,
                rep.limited_by,
                not check_continuity(c),
                time.perf_counter() - t0,
            )


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for f, v in asdict(SweepConfig()).items():
        ap.add_argument("--" + f.replace("_", "-"), type=type(v), default=v)
    ap.add_argument("--csv")
    args = vars(ap.parse_args())
    out = args.pop("csv")
    cfg = SweepConfig(**args)
    rows = list(sweep(cfg))
    if out:
        with open(out, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=list(asdict(rows[0])))
            w.writeheader()
            w.writerows(asdict(r) for r in rows)
    print(f"{'alpha':>5} {'min thick':>10} {'max thick':>10} {'mean slack':>10} {'sec/build':>9}")
    for alpha in range(cfg.alpha_min, cfg.alpha_max + 1):
        rs = [r for r in rows if r.alpha == alpha]
        th = np.array([r.thickness for r in rs])
        slack = np.array([r.bound - r.length for r in rs])
        sec = np.mean([r.seconds for r in rs])
        print(f"{alpha:>5} {th.min():>10.6f} {th.max():>10.6f} {slack.mean():>10.4f} {sec:>9.3f}")
    bad = [r for r in rows if r.thickness < 0.999 or not r.joins_ok or r.length > r.bound]
    print(f"{len(bad)} of {len(rows)} builds fail a check", file=sys.stderr)


if __name__ == "__main__":
    main()

"""Build the catalogued trefoil and its mirror, join them, and report lengths and thickness.

    python3 scripts/trefoil_demo.py --out-dir out/
"""

from __future__ import annotations

import argparse
import math
from dataclasses import dataclass
from pathlib import Path

from arcrope import catalog
from arcrope.arcpres import skip
from arcrope.builder import build, prop1_bound
from arcrope.connectsum import plan_and_join, straighten_extreme_floor
from arcrope.curve import length
from arcrope.formats import emit_curve
from arcrope.mesh import export_mesh
from arcrope.thickness import thickness_report


@dataclass
class DemoConfig:
    out_dir: Path | None = None
    density: float = 100.0
    mesh_density: float = 10.0
    mesh_segments: int = 16


def run(cfg: DemoConfig) -> dict:
    A = catalog.load("3_1")
    B = catalog.load("3_1m")
    a, b = build(A), build(B)
    ra = thickness_report(a, density=cfg.density)
    out, plan = plan_and_join(straighten_extreme_floor(a, "top"), straighten_extreme_floor(b, "bottom"))
    rj = thickness_report(out, density=cfg.density)
    res = {
        "alpha": A.alpha,
        "skip": skip(A),
        "bound": prop1_bound(A.alpha, skip(A)),
        "length": length(a),
        "thickness": ra.thickness,
        "sum_length": length(out),
        "sum_limit": 2 * length(a) - (math.pi - 2),
        "sum_thickness": rj.thickness,
        "case": plan.case,
    }
    if cfg.out_dir is not None:
        cfg.out_dir.mkdir(parents=True, exist_ok=True)
        for name, c in (("trefoil", a), ("trefoil_mirror", b), ("trefoil_sum", out)):
            (cfg.out_dir / f"{name}.curve").write_text(emit_curve(c))
            m = export_mesh(c, m=cfg.mesh_segments, r=1.0, density=cfg.mesh_density)
            (cfg.out_dir / f"{name}.obj").write_text(m.to_obj())
    return res


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out-dir", type=Path)
    ap.add_argument("--density", type=float, default=100.0)
    args = ap.parse_args()
    res = run(DemoConfig(out_dir=args.out_dir, density=args.density))
    for k, v in res.items():
        print(f"{k:>14} {v:.6f}" if isinstance(v, float) else f"{k:>14} {v}")


if __name__ == "__main__":
    main()

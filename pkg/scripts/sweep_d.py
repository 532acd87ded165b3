"""AvCC against the densification probability d.

    python3 scripts/sweep_d.py [--n 20000] [--seeds 0,1,2] [--out-dir results]
"""

import argparse
from pathlib import Path

from trilink import experiments as ex
from trilink.io import write_csv, write_json


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--n", type=int, default=ex.DESK_N)
    p.add_argument("--seeds", default="0,1,2")
    p.add_argument("--out-dir", default="results")
    a = p.parse_args()
    spec = ex.SweepSpec(n=a.n, seeds=tuple(int(s) for s in a.seeds.split(",")))
    rows = ex.sweep_d(spec)
    out = Path(a.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    write_csv(rows, out / "sweep-d.csv", ex.SWEEP_D_COLUMNS)
    write_json(rows, out / "sweep-d.json")
    for r in rows:
        print(f"d={r['d']:.1f}  AvCC={r['mean_avcc']:.4f} +/- {r['std_avcc']:.4f}")


if __name__ == "__main__":
    main()

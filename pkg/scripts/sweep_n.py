"""AvCC against graph order at fixed d.

    python3 scripts/sweep_n.py [--d 0.27] [--out-dir results]

Small graphs are noisier, so each order gets its own seed count.
"""

import argparse
from pathlib import Path

from trilink import experiments as ex
from trilink.io import write_csv, write_json

PLAN = [(1_000, 4000), (10_000, 500), (100_000, 50)]


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--d", type=float, default=0.27)
    p.add_argument("--out-dir", default="results")
    a = p.parse_args()
    rows = [ex.sweep_n(a.d, [n], seeds=range(k))[0] for n, k in PLAN]
    out = Path(a.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    write_csv(rows, out / "sweep-n.csv", ex.SWEEP_N_COLUMNS)
    write_json(rows, out / "sweep-n.json")
    for r in rows:
        print(f"n={r['n']:>7}  seeds={r['seeds']:>4}  AvCC={r['mean_avcc']:.5f} +/- {r['std_avcc']:.5f}")


if __name__ == "__main__":
    main()

"""Mean AUC of HEI and Jaccard over d, and the first d where Jaccard leads.

    python3 scripts/crossover.py [--n 20000] [--step 0.05] [--m 50000] [--out-dir results]
"""

import argparse
from pathlib import Path

from trilink import experiments as ex
from trilink.io import write_csv, write_json


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--n", type=int, default=ex.DESK_N)
    p.add_argument("--step", type=float, default=0.05)
    p.add_argument("--seeds", default="0,1,2")
    p.add_argument("--m", type=int, default=50_000)
    p.add_argument("--out-dir", default="results")
    a = p.parse_args()
    k = int(round(1 / a.step))
    spec = ex.SweepSpec(n=a.n, d_grid=tuple(round(i * a.step, 10) for i in range(k + 1)),
                        seeds=tuple(int(s) for s in a.seeds.split(",")), m=a.m)
    res = ex.find_crossover(spec)
    out = Path(a.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    write_csv(res.table, out / "crossover.csv", ex.CROSSOVER_COLUMNS)
    write_json(res.to_dict(), out / "crossover.json")
    for r in res.table:
        print(f"d={r['d']:.2f}  AvCC={r['mean_avcc']:.4f}  HEI={r['mean_auc_hei']:.4f}  "
              f"JAC={r['mean_auc_jac']:.4f}")
    print(f"crossover: d*={res.d_star} AvCC*={res.avcc_star}" if res.found else "no crossover on grid")


if __name__ == "__main__":
    main()

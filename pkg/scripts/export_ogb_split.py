"""Export an OGB link-prediction dataset to plain edge-list and split files.

Needs the ``ogb`` package, which the library itself does not depend on:

    pip install ogb
    python3 scripts/export_ogb_split.py ogbl-collab --out data/collab

Writes ``train.txt``, ``test_pos.txt`` and ``test_neg.txt`` (one ``u v`` pair
per line) for ``trilink eval train.txt --positives ... --negatives ...``.
Datasets that ship per-edge negatives (vessel) or shared negatives (collab, ddi,
ppa) are both flattened to a pair list.
"""

import argparse
from pathlib import Path

import numpy as np


def _pairs(d, key):
    if key in d:
        return np.asarray(d[key]).reshape(-1, 2)
    return None


def main():
    p = argparse.ArgumentParser()
    p.add_argument("name")
    p.add_argument("--out", required=True)
    p.add_argument("--root", default="ogb_data")
    a = p.parse_args()
    from ogb.linkproppred import LinkPropPredDataset

    ds = LinkPropPredDataset(name=a.name, root=a.root)
    split = ds.get_edge_split()
    out = Path(a.out)
    out.mkdir(parents=True, exist_ok=True)
    np.savetxt(out / "train.txt", _pairs(split["train"], "edge"), fmt="%d")
    np.savetxt(out / "test_pos.txt", _pairs(split["test"], "edge"), fmt="%d")
    np.savetxt(out / "test_neg.txt", _pairs(split["test"], "edge_neg"), fmt="%d")
    print(f"wrote {out}/train.txt, test_pos.txt, test_neg.txt")


if __name__ == "__main__":
    main()

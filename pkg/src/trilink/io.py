"""Edge-list files, split files and report serialization.

The text format is one edge per line, two whitespace-separated tokens. Lines
starting with the comment prefix and blank lines are skipped. Original node
tokens are remapped to dense ids in sorted order (numeric when every token is
an integer, lexicographic otherwise), so the result does not depend on line
order.
"""

from __future__ import annotations

import csv
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .graph import Graph, build_with_stats, edge_keys

__all__ = [
    "EdgeListDocument",
    "parse_edge_list",
    "write_edge_list",
    "read_pairs",
    "load_split_files",
    "write_id_map",
    "write_json",
    "write_csv",
]

log = logging.getLogger(__name__)

_MAX_NODES = 2**32


@dataclass
class EdgeListDocument:
    raw_id_map: dict = field(repr=False)
    edge_count_raw: int
    dropped_self_loops: int
    dropped_duplicates: int
    symmetrized: bool
    reciprocal_pairs: int = 0

    def dense_ids(self, tokens) -> np.ndarray:
        """Translate raw tokens (as read from a file) into dense ids."""
        out = np.empty(len(tokens), dtype=np.int64)
        for t, tok in enumerate(tokens):
            key = _key(tok, self._numeric)
            if key not in self.raw_id_map:
                raise KeyError(f"node {tok!r} does not appear in the graph")
            out[t] = self.raw_id_map[key]
        return out

    def add_nodes_from(self, paths, comment_prefix: str = "#") -> int:
        """Give ids to tokens in ``paths`` that the edge list never mentioned.

        New ids follow the existing ones, in sorted token order. Returns the
        new node count. Needed when held-out pairs touch nodes with no
        training edge.
        """
        numeric = self._numeric
        seen = set()
        for path in paths:
            for a, b, lineno in _read_token_pairs(path, comment_prefix):
                for tok in (a, b):
                    if numeric and not _is_int(tok):
                        raise ValueError(f"{path}:{lineno}: non-integer node id {tok!r}")
                    seen.add(_key(tok, numeric))
        for k in sorted(seen - self.raw_id_map.keys()):
            self.raw_id_map[k] = len(self.raw_id_map)
        return len(self.raw_id_map)

    @property
    def _numeric(self) -> bool:
        return all(isinstance(k, int) for k in self.raw_id_map)


def _key(tok, numeric: bool):
    return int(tok) if numeric else str(tok)


def _read_token_pairs(path, comment_prefix: str) -> list[tuple[str, str, int]]:
    rows = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            s = line.strip()
            if not s or (comment_prefix and s.startswith(comment_prefix)):
                continue
            parts = s.split()
            if len(parts) != 2:
                raise ValueError(f"{path}:{lineno}: expected 2 tokens, got {len(parts)}: {s!r}")
            rows.append((parts[0], parts[1], lineno))
    return rows


def _is_int(tok: str) -> bool:
    try:
        int(tok)
    except ValueError:
        return False
    return True


def parse_edge_list(
    path, symmetrize: bool = True, comment_prefix: str = "#"
) -> tuple[Graph, EdgeListDocument]:
    """Read an edge list into a :class:`Graph` plus ingestion bookkeeping.

    With ``symmetrize`` the input is read as directed: a pair listed in both
    directions collapses to one undirected edge and is counted under
    ``reciprocal_pairs``, not ``dropped_duplicates``. Without it, a reversed
    repeat counts as a duplicate.
    """
    rows = _read_token_pairs(path, comment_prefix)
    tokens = {t for a, b, _ in rows for t in (a, b)}
    numeric = all(_is_int(t) for t in tokens)
    keys = sorted({_key(t, numeric) for t in tokens})
    if len(keys) > _MAX_NODES:
        raise ValueError(f"{path}: {len(keys)} nodes exceeds the 2**32 limit")
    id_map = {k: i for i, k in enumerate(keys)}
    n = len(keys)
    edges = np.empty((len(rows), 2), dtype=np.int64)
    for t, (a, b, _) in enumerate(rows):
        edges[t, 0] = id_map[_key(a, numeric)]
        edges[t, 1] = id_map[_key(b, numeric)]

    g, stats = build_with_stats(n, edges)
    reciprocal = 0
    duplicates = stats.duplicates
    if symmetrize and len(edges):
        loops = edges[:, 0] == edges[:, 1]
        directed = np.unique(edges[~loops][:, 0] * np.int64(n) + edges[~loops][:, 1])
        exact_dups = int((~loops).sum()) - directed.size
        reciprocal = duplicates - exact_dups
        duplicates = exact_dups
        if reciprocal:
            log.warning("%s: %d reciprocal pairs collapsed to undirected edges", path, reciprocal)
    doc = EdgeListDocument(
        raw_id_map=id_map,
        edge_count_raw=len(rows),
        dropped_self_loops=stats.self_loops,
        dropped_duplicates=duplicates,
        symmetrized=bool(symmetrize),
        reciprocal_pairs=reciprocal,
    )
    return g, doc


def write_edge_list(g: Graph, path) -> None:
    """Write ``u v`` lines with ``u < v`` in ascending order."""
    e = g.edges()
    with open(path, "w", encoding="utf-8") as fh:
        for u, v in e.tolist():
            fh.write(f"{u} {v}\n")


def read_pairs(path, node_count: int, doc: EdgeListDocument | None = None,
               comment_prefix: str = "#") -> np.ndarray:
    """Read a pair file, mapping raw tokens through ``doc`` when given."""
    rows = _read_token_pairs(path, comment_prefix)
    if doc is not None:
        a = doc.dense_ids([r[0] for r in rows])
        b = doc.dense_ids([r[1] for r in rows])
        return np.stack([a, b], axis=1) if rows else np.empty((0, 2), dtype=np.int64)
    out = np.empty((len(rows), 2), dtype=np.int64)
    for t, (a, b, lineno) in enumerate(rows):
        try:
            u, v = int(a), int(b)
        except ValueError:
            raise ValueError(f"{path}:{lineno}: node ids must be integers") from None
        if not (0 <= u < node_count and 0 <= v < node_count):
            raise ValueError(f"{path}:{lineno}: pair ({u}, {v}) outside node range [0, {node_count})")
        out[t] = (u, v)
    return out


def load_split_files(
    positives_path, negatives_path, node_count: int, doc: EdgeListDocument | None = None
) -> tuple[np.ndarray, np.ndarray]:
    """Load externally prepared positive and negative pair lists.

    Rejects pairs outside the node range and any negative that repeats a positive.
    """
    pos = read_pairs(positives_path, node_count, doc)
    neg = read_pairs(negatives_path, node_count, doc)
    for name, arr in (("positive", pos), ("negative", neg)):
        if len(arr) and ((arr < 0).any() or (arr >= node_count).any()):
            raise ValueError(f"{name} pair outside node range [0, {node_count})")
        if len(arr) and (arr[:, 0] == arr[:, 1]).any():
            raise ValueError(f"{name} file contains a self-pair")
    if len(pos) and len(neg):
        clash = np.isin(edge_keys(neg[:, 0], neg[:, 1], node_count),
                        edge_keys(pos[:, 0], pos[:, 1], node_count))
        if clash.any():
            t = int(np.flatnonzero(clash)[0])
            raise ValueError(f"negative pair {tuple(neg[t].tolist())} is also listed as a positive")
    return np.sort(pos, axis=1), np.sort(neg, axis=1)


def write_id_map(doc: EdgeListDocument, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("# raw_id\tdense_id\n")
        for k, v in doc.raw_id_map.items():
            fh.write(f"{k}\t{v}\n")


def write_json(obj, path) -> None:
    Path(path).write_text(json.dumps(obj, indent=2, sort_keys=False) + "\n", encoding="utf-8")


def write_csv(rows: list[dict], path, columns: list[str]) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.DictWriter(fh, fieldnames=columns, extrasaction="ignore")
        w.writeheader()
        for r in rows:
            w.writerow(r)

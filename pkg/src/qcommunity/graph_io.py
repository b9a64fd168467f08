"""Edge-list ingestion.

Reads KONECT-style whitespace separated edge lists into a simple, unweighted,
undirected :class:`Graph` with dense integer vertex ids.
"""

from __future__ import annotations

import io
import os
from dataclasses import dataclass, field
from typing import Dict, Iterable, Mapping, TextIO, Tuple, Union

import numpy as np

from .errors import MalformedLine, NoEdges

COMMENT_PREFIXES = ("%", "#")


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph over vertices ``0..node_count-1``.

    ``edges`` is an ``(m, 2)`` array with ``u < v`` on every row. The CSR
    adjacency (``indptr``/``indices``) is derived on construction and is what
    the modularity kernels iterate over.
    """

    node_count: int
    edges: np.ndarray
    label_map: Mapping[str, int] = field(default_factory=dict)
    degrees: np.ndarray = field(init=False)
    indptr: np.ndarray = field(init=False, repr=False)
    indices: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        n = int(self.node_count)
        edges = np.asarray(self.edges, dtype=np.int64).reshape(-1, 2)
        if n < 1:
            raise ValueError("graph needs at least one vertex")
        if len(edges) == 0:
            raise NoEdges("graph has no edges")
        if edges.min() < 0 or edges.max() >= n:
            raise ValueError("edge endpoint outside [0, node_count)")
        if np.any(edges[:, 0] >= edges[:, 1]):
            raise ValueError("edges must satisfy u < v (no self-loops)")
        keys = edges[:, 0] * n + edges[:, 1]
        if len(np.unique(keys)) != len(keys):
            raise ValueError("duplicate edges")

        degrees = np.bincount(edges.ravel(), minlength=n).astype(np.int64)
        src = np.concatenate([edges[:, 0], edges[:, 1]])
        dst = np.concatenate([edges[:, 1], edges[:, 0]])
        order = np.lexsort((dst, src))
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(degrees, out=indptr[1:])

        object.__setattr__(self, "node_count", n)
        object.__setattr__(self, "edges", _frozen(edges))
        object.__setattr__(self, "label_map", dict(self.label_map))
        object.__setattr__(self, "degrees", _frozen(degrees))
        object.__setattr__(self, "indptr", _frozen(indptr))
        object.__setattr__(self, "indices", _frozen(dst[order].copy()))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self, i: int) -> np.ndarray:
        return self.indices[self.indptr[i] : self.indptr[i + 1]]

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self.neighbors(u)
        pos = np.searchsorted(nbrs, v)
        return bool(pos < len(nbrs) and nbrs[pos] == v)

    @classmethod
    def from_edges(cls, edges: Iterable[Tuple[int, int]], node_count: int = None) -> "Graph":
        """Build from integer pairs, cleaning loops and duplicates like the parser does."""
        seen = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u != v:
                seen.add((min(u, v), max(u, v)))
        if node_count is None:
            node_count = 1 + max((v for _, v in seen), default=0)
        pairs = sorted(seen)
        return cls(node_count, np.array(pairs, dtype=np.int64).reshape(-1, 2),
                   {str(i): i for i in range(node_count)})


def parse_edge_list(text: Union[str, TextIO]) -> Graph:
    """Parse edge-list text.

    Lines starting with ``%`` or ``#`` are comments, blank lines are skipped,
    and only the first two tokens of a data line are used. Labels are mapped
    to dense ids in order of first appearance. Self-loops are dropped, but
    their label still becomes a (possibly isolated) vertex.
    """
    if isinstance(text, str):
        text = io.StringIO(text)

    labels: Dict[str, int] = {}
    seen = set()
    pairs = []
    for lineno, raw in enumerate(text, start=1):
        line = raw.strip()
        if not line or line.startswith(COMMENT_PREFIXES):
            continue
        tokens = line.split()
        if len(tokens) < 2:
            raise MalformedLine(lineno, raw.rstrip("\r\n"))
        u = labels.setdefault(tokens[0], len(labels))
        v = labels.setdefault(tokens[1], len(labels))
        if u == v:
            continue
        key = (u, v) if u < v else (v, u)
        if key not in seen:
            seen.add(key)
            pairs.append(key)

    if not pairs:
        raise NoEdges("no edges left after removing comments and self-loops")
    return Graph(len(labels), np.array(pairs, dtype=np.int64), labels)


def read_edge_list(path: Union[str, os.PathLike]) -> Graph:
    with open(path, encoding="utf-8", newline=None) as fh:
        return parse_edge_list(fh)


def format_edge_list(g: Graph) -> str:
    """Serialize the cleaned graph as ``u v`` lines using dense ids.

    Isolated vertices are written as self-loops so that re-parsing keeps them.
    """
    lines = [f"{u} {v}\n" for u, v in g.edges]
    lines += [f"{i} {i}\n" for i in np.flatnonzero(g.degrees == 0)]
    return "".join(lines)

"""Property alignment: grouping equivalent predicates across contributions.

Labels are embedded by averaging pretrained word vectors; two properties are
equivalent when the cosine of their label embeddings reaches the threshold,
or trivially when their labels are identical. Equivalent pairs are closed
into groups via union-find, one group per comparison-table row.

A deliberately naive all-pairs variant (no caching, both orders evaluated)
is kept as the equivalence and performance oracle.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Optional

import numpy as np

from .errors import NotFoundError, StateError, ValidationError
from .graph import GraphStore
from .selection import ContributionSubgraph
from .text import tokenize


@dataclass(frozen=True)
class Property:
    id: str
    label: str


def properties_of(store: GraphStore, subgraphs: Mapping[str, ContributionSubgraph]) -> list[Property]:
    """Deduplicated predicates across all selected subgraphs, id-ordered."""
    seen: set[str] = set()
    for sub in subgraphs.values():
        seen.update(sub.predicate_ids())
    return [Property(pid, store.predicate(pid).label) for pid in sorted(seen)]


class EmbeddingProvider:
    """Word vectors in the plain text format: one "word v1 v2 ... vd" per
    line, optional "count dim" header. Labels embed as the mean of their
    in-vocabulary token vectors; all-out-of-vocabulary labels embed to the
    zero vector. Every embed_label call is counted so tests can assert cache
    effectiveness."""

    def __init__(self, vectors: Mapping[str, Iterable[float]], dim: Optional[int] = None):
        self._vectors = {w: np.asarray(v, dtype=float) for w, v in vectors.items()}
        if dim is None:
            if not self._vectors:
                raise ValidationError("dimensionality required for an empty vocabulary")
            dim = len(next(iter(self._vectors.values())))
        self.dim = dim
        for w, v in self._vectors.items():
            if v.shape != (dim,):
                raise ValidationError(f"vector for {w!r} has wrong dimension")
        self.embed_calls = 0

    @classmethod
    def from_file(cls, path: str | Path) -> "EmbeddingProvider":
        vectors: dict[str, list[float]] = {}
        with open(path, encoding="utf-8") as fh:
            lines = [ln.rstrip("\n") for ln in fh if ln.strip()]
        if not lines:
            raise ValidationError(f"empty embedding file {path}")
        start = 0
        head = lines[0].split()
        if len(head) == 2 and all(t.lstrip("-").isdigit() for t in head):
            start = 1
        for line in lines[start:]:
            parts = line.split()
            vectors[parts[0]] = [float(x) for x in parts[1:]]
        return cls(vectors)

    @classmethod
    def empty(cls, dim: int = 1) -> "EmbeddingProvider":
        return cls({}, dim=dim)

    def embed_label(self, label: str) -> np.ndarray:
        if self._vectors is None:
            raise StateError("embedding provider not loaded")
        self.embed_calls += 1
        hits = [self._vectors[t] for t in tokenize(label) if t in self._vectors]
        if not hits:
            return np.zeros(self.dim)
        return np.mean(hits, axis=0)


def cosine(u: np.ndarray, v: np.ndarray) -> float:
    nu = float(np.linalg.norm(u))
    nv = float(np.linalg.norm(v))
    if nu == 0.0 or nv == 0.0:
        return 0.0
    return float(np.dot(u, v) / (nu * nv))


@dataclass(frozen=True)
class SimilarityMatrix:
    """Symmetric label-embedding cosine matrix over deduplicated properties."""

    properties: tuple[str, ...]
    matrix: np.ndarray

    def value(self, p: str, q: str) -> float:
        idx = {pid: i for i, pid in enumerate(self.properties)}
        return float(self.matrix[idx[p], idx[q]])


def similarity_matrix(properties: list[Property], provider: EmbeddingProvider) -> SimilarityMatrix:
    if not properties:
        raise ValidationError("at least one property required")
    cache: dict[str, np.ndarray] = {}
    for p in properties:
        if p.label not in cache:
            cache[p.label] = provider.embed_label(p.label)
    n = len(properties)
    m = np.zeros((n, n))
    for i in range(n):
        vi = cache[properties[i].label]
        for j in range(i, n):
            m[i, j] = m[j, i] = cosine(vi, cache[properties[j].label])
    return SimilarityMatrix(tuple(p.id for p in properties), m)


def align_properties(
    properties: list[Property],
    threshold: float,
    provider: EmbeddingProvider,
) -> set[tuple[str, str]]:
    """Unordered pairs of equivalent properties.

    Each distinct label is embedded exactly once; exact-label pairs are
    always included, whatever their embeddings.
    """
    cache: dict[str, np.ndarray] = {}
    for p in properties:
        if p.label not in cache:
            cache[p.label] = provider.embed_label(p.label)
    pairs: set[tuple[str, str]] = set()
    for i, p1 in enumerate(properties):
        for p2 in properties[i + 1:]:
            if p1.label == p2.label or cosine(cache[p1.label], cache[p2.label]) >= threshold:
                pairs.add((min(p1.id, p2.id), max(p1.id, p2.id)))
    return pairs


def naive_align(
    properties: list[Property],
    threshold: float,
    provider: EmbeddingProvider,
) -> set[tuple[str, str]]:
    """All-pairs oracle: re-embeds both labels for every ordered pair."""
    pairs: set[tuple[str, str]] = set()
    for p1 in properties:
        for p2 in properties:
            similarity = cosine(provider.embed_label(p1.label), provider.embed_label(p2.label))
            if p1.id != p2.id and (similarity >= threshold or p1.label == p2.label):
                pairs.add((p1.id, p2.id))
    return pairs


def symmetrize(pairs: set[tuple[str, str]]) -> set[tuple[str, str]]:
    return {(min(a, b), max(a, b)) for a, b in pairs}


class UnionFind:
    def __init__(self):
        self.parent: dict[str, str] = {}

    def find(self, x: str) -> str:
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: str, b: str) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


@dataclass(frozen=True)
class PropertyGroup:
    members: tuple[str, ...]
    representative_label: str
    support_count: int
    used_by: frozenset[str] = field(default_factory=frozenset)


def group_properties(
    pairs: set[tuple[str, str]],
    properties: list[Property],
    used_by: Mapping[str, frozenset[str]] | None = None,
) -> list[PropertyGroup]:
    """Connected components of the equivalence-pair graph, ordered by their
    smallest member id. The representative label belongs to the member used
    by the most contributions, ties broken lexicographically by label."""
    used_by = used_by or {}
    uf = UnionFind()
    for p in properties:
        uf.find(p.id)
    for a, b in pairs:
        uf.union(a, b)
    components: dict[str, list[Property]] = {}
    for p in properties:
        components.setdefault(uf.find(p.id), []).append(p)
    groups = []
    for root in sorted(components):
        members = sorted(components[root], key=lambda p: p.id)
        rep = min(members, key=lambda p: (-len(used_by.get(p.id, ())), p.label))
        users: set[str] = set()
        for p in members:
            users.update(used_by.get(p.id, ()))
        groups.append(
            PropertyGroup(
                members=tuple(p.id for p in members),
                representative_label=rep.label,
                support_count=len(users),
                used_by=frozenset(users),
            )
        )
    return groups


@dataclass(frozen=True)
class MaskMatrix:
    """Binary contribution-by-property usage matrix."""

    contributions: tuple[str, ...]
    properties: tuple[str, ...]
    matrix: np.ndarray


def mask_matrix(
    subgraphs: Mapping[str, ContributionSubgraph],
    properties: list[Property],
) -> MaskMatrix:
    contributions = tuple(subgraphs)
    prop_ids = tuple(p.id for p in properties)
    m = np.zeros((len(contributions), len(prop_ids)), dtype=int)
    for i, cid in enumerate(contributions):
        used = subgraphs[cid].predicate_ids()
        for j, pid in enumerate(prop_ids):
            if pid in used:
                m[i, j] = 1
    return MaskMatrix(contributions, prop_ids, m)


@dataclass(frozen=True)
class SlicedMask:
    property: str
    contributions: tuple[str, ...]
    columns: tuple[str, ...]
    matrix: np.ndarray


def slice_mask(mask: MaskMatrix, gamma: SimilarityMatrix, p: str, threshold: float) -> SlicedMask:
    """Restrict the mask to sim(p) = {q : gamma[p][q] >= threshold}, raw
    cosines only (no transitive closure at this layer); p is always kept."""
    if p not in mask.properties or p not in gamma.properties:
        raise NotFoundError(f"unknown property {p}")
    gidx = {pid: i for i, pid in enumerate(gamma.properties)}
    row = gamma.matrix[gidx[p]]
    columns = tuple(
        q for q in mask.properties if q == p or row[gidx[q]] >= threshold
    )
    midx = {pid: i for i, pid in enumerate(mask.properties)}
    sliced = mask.matrix[:, [midx[q] for q in columns]]
    return SlicedMask(p, mask.contributions, columns, sliced)


def timed(fn, *args, **kwargs) -> tuple[object, float]:
    """Run fn, returning (result, elapsed seconds). Used by benchmarks."""
    start = time.perf_counter()
    result = fn(*args, **kwargs)
    return result, time.perf_counter() - start

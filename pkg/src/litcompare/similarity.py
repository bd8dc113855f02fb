"""TF-IDF candidate retrieval over contribution property labels.

Each contribution becomes a document of tokens drawn from the predicate
labels of its depth-bounded subgraph. Cosine similarity between the main
contribution's vector and every other document ranks the candidates.

idf(t) = ln((1 + N) / (1 + df(t))) + 1, weights L2-normalized. The formula
is fixed here so the brute-force test oracle cannot silently diverge.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

from .config import DEFAULT_TOP_K, SelectionConfig
from .errors import NotFoundError, ValidationError
from .graph import GraphStore
from .selection import select_related
from .text import tokenize


@dataclass(frozen=True)
class ContributionDocument:
    contribution: str
    tokens: tuple[str, ...]


@dataclass(frozen=True)
class SimilarityHit:
    contribution: str
    score: float

    @property
    def display_percentage(self) -> int:
        return round(self.score * 100)


def build_document(
    store: GraphStore,
    contribution: str,
    config: SelectionConfig = SelectionConfig(),
) -> ContributionDocument:
    """Token document from predicate labels of the contribution's subgraph.

    A predicate used by n statements contributes its tokens n times, so term
    frequency reflects repeated use.
    """
    subgraph = select_related(store, [contribution], config)[contribution]
    tokens: list[str] = []
    for sid in sorted(subgraph.statements):
        stmt = subgraph.statements[sid]
        tokens.extend(tokenize(store.predicate(stmt.predicate).label))
    return ContributionDocument(contribution, tuple(tokens))


class TfIdfIndex:
    """Immutable tf-idf index over contribution documents."""

    def __init__(self, documents: list[ContributionDocument]):
        if not documents:
            raise ValidationError("cannot index an empty corpus")
        n = len(documents)
        df: Counter[str] = Counter()
        for doc in documents:
            df.update(set(doc.tokens))
        self._idf = {t: math.log((1 + n) / (1 + d)) + 1 for t, d in df.items()}
        self._vectors: dict[str, dict[str, float]] = {}
        for doc in documents:
            tf = Counter(doc.tokens)
            vec = {t: c * self._idf[t] for t, c in tf.items()}
            norm = math.sqrt(sum(w * w for w in vec.values()))
            if norm > 0:
                vec = {t: w / norm for t, w in vec.items()}
            self._vectors[doc.contribution] = vec

    @property
    def contributions(self) -> tuple[str, ...]:
        return tuple(self._vectors)

    def idf(self, token: str) -> float:
        return self._idf.get(token, 0.0)

    def vector(self, contribution: str) -> dict[str, float]:
        if contribution not in self._vectors:
            raise NotFoundError(f"contribution {contribution} not indexed")
        return dict(self._vectors[contribution])

    def find_similar(self, main: str, k: int = DEFAULT_TOP_K) -> list[SimilarityHit]:
        if k < 1:
            raise ValidationError("k must be >= 1")
        if main not in self._vectors:
            raise NotFoundError(f"contribution {main} not indexed")
        query = self._vectors[main]
        hits = []
        for cid, vec in self._vectors.items():
            if cid == main:
                continue
            score = sum(w * vec.get(t, 0.0) for t, w in query.items())
            hits.append(SimilarityHit(cid, score))
        hits.sort(key=lambda h: (-h.score, h.contribution))
        return hits[:k]


def build_index(
    store: GraphStore,
    contributions: list[str] | None = None,
    config: SelectionConfig = SelectionConfig(),
) -> TfIdfIndex:
    ids = list(contributions) if contributions is not None else list(store.contribution_ids())
    return TfIdfIndex([build_document(store, c, config) for c in ids])


class ComparisonCart:
    """Manually selected contributions; set semantics, insertion-ordered."""

    def __init__(self, store: GraphStore):
        self._store = store
        self._items: dict[str, None] = {}

    def add(self, contribution: str) -> None:
        if not self._store.has_resource(contribution):
            raise NotFoundError(f"unknown contribution {contribution}")
        self._items.setdefault(contribution, None)

    def remove(self, contribution: str) -> None:
        self._items.pop(contribution, None)

    def list(self) -> tuple[str, ...]:
        return tuple(self._items)

    def __len__(self) -> int:
        return len(self._items)

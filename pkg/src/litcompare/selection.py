"""Transitive statement selection around contributions, bounded by depth.

Depth 1 takes statements with the contribution in subject or object
position. From depth 2 on, only outgoing edges of newly reached resources
are followed. Literals are leaves. Resources that are themselves
contributions are included but never expanded, so one comparison cannot
bleed into another contribution's description.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .config import SelectionConfig
from .errors import NotFoundError
from .graph import GraphStore, Resource, Statement


@dataclass(frozen=True)
class ContributionSubgraph:
    contribution: str
    statements: dict[str, Statement] = field(default_factory=dict)
    depth_of: dict[str, int] = field(default_factory=dict)
    # statement id -> resource id the traversal entered through that statement
    reaches: dict[str, str | None] = field(default_factory=dict)

    def __contains__(self, statement_id: str) -> bool:
        return statement_id in self.statements

    def predicate_ids(self) -> set[str]:
        return {s.predicate for s in self.statements.values()}


def select_related(
    store: GraphStore,
    contributions: list[str],
    config: SelectionConfig = SelectionConfig(),
) -> dict[str, ContributionSubgraph]:
    for c in contributions:
        if not store.has_resource(c):
            raise NotFoundError(f"unknown contribution {c}")
    return {c: _select_one(store, c, config.max_depth) for c in contributions}


def _select_one(store: GraphStore, contribution: str, max_depth: int) -> ContributionSubgraph:
    sub = ContributionSubgraph(contribution)
    seen_resources = {contribution}
    frontier: list[str] = []

    def take(stmt: Statement, depth: int, reached: str | None) -> None:
        if stmt.id in sub.statements:
            return
        sub.statements[stmt.id] = stmt
        sub.depth_of[stmt.id] = depth
        sub.reaches[stmt.id] = reached
        if reached is not None and reached not in seen_resources:
            seen_resources.add(reached)
            if not store.is_contribution(reached):
                frontier.append(reached)

    for stmt in store.statements_by_subject(contribution):
        obj = stmt.object
        take(stmt, 1, obj.id if isinstance(obj, Resource) else None)
    for stmt in store.statements_by_object(contribution):
        take(stmt, 1, stmt.subject)

    depth = 1
    while frontier and depth < max_depth:
        depth += 1
        current, frontier = frontier, []
        for rid in current:
            for stmt in store.statements_by_subject(rid):
                obj = stmt.object
                take(stmt, depth, obj.id if isinstance(obj, Resource) else None)
    return sub


def provenance_path(subgraph: ContributionSubgraph, statement_id: str) -> list[Statement]:
    """One shortest statement path from the contribution to the statement.

    At equal-depth branch points the lexicographically smallest statement id
    wins, making the path deterministic.
    """
    if statement_id not in subgraph.statements:
        raise NotFoundError(f"statement {statement_id} not in subgraph")
    path: list[Statement] = []
    sid = statement_id
    while True:
        stmt = subgraph.statements[sid]
        path.append(stmt)
        depth = subgraph.depth_of[sid]
        if depth == 1:
            break
        parents = [
            other
            for other, reached in subgraph.reaches.items()
            if reached == stmt.subject and subgraph.depth_of[other] == depth - 1
        ]
        sid = min(parents)
    path.reverse()
    return path

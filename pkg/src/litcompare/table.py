"""Comparison-table assembly, customization and CSV/LaTeX rendering.

Tables are value objects: customization returns a new table with the same
cells and different presentation state. A property group is auto-visible
when at least min_shared (alpha) contributions use one of its members and
the user has not hidden it.
"""

from __future__ import annotations

import csv
import io
import re
from dataclasses import dataclass, replace

from .alignment import (
    EmbeddingProvider,
    align_properties,
    group_properties,
    properties_of,
)
from .config import ComparisonConfig, SelectionConfig
from .errors import NotFoundError, ValidationError
from .graph import GraphStore, Resource
from .selection import provenance_path, select_related


@dataclass(frozen=True)
class CellValue:
    display: str
    kind: str  # "resource" | "literal"
    resource: str | None
    statement: str
    provenance: tuple[str, ...]


@dataclass(frozen=True)
class Cell:
    contribution: str
    group: str
    values: tuple[CellValue, ...]


@dataclass(frozen=True)
class Column:
    contribution: str
    label: str
    title: str
    authors: tuple[str, ...]
    year: int | None
    doi: str | None
    paper: str | None


@dataclass(frozen=True)
class GroupRow:
    id: str
    label: str
    members: tuple[str, ...]
    member_labels: tuple[str, ...]
    support_count: int


@dataclass(frozen=True)
class ComparisonTable:
    columns: tuple[Column, ...]
    groups: tuple[GroupRow, ...]
    cells: dict[tuple[str, str], Cell]  # (group id, contribution id) -> Cell
    config: ComparisonConfig

    def group(self, gid: str) -> GroupRow:
        for g in self.groups:
            if g.id == gid:
                return g
        raise NotFoundError(f"unknown group {gid}")

    def is_visible(self, gid: str) -> bool:
        g = self.group(gid)
        return g.support_count >= self.config.min_shared and gid not in self.config.hidden_groups

    def visible_groups(self) -> tuple[GroupRow, ...]:
        order = {gid: i for i, gid in enumerate(self.config.row_order)}
        visible = [g for g in self.groups if self.is_visible(g.id)]
        visible.sort(key=lambda g: order.get(g.id, len(order)))
        return tuple(visible)

    def cell(self, gid: str, cid: str) -> Cell:
        return self.cells[(gid, cid)]

    # -- serialization ------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "columns": [
                {
                    "contribution": c.contribution,
                    "label": c.label,
                    "title": c.title,
                    "authors": list(c.authors),
                    "year": c.year,
                    "doi": c.doi,
                    "paper": c.paper,
                }
                for c in self.columns
            ],
            "groups": [
                {
                    "id": g.id,
                    "label": g.label,
                    "members": list(g.members),
                    "memberLabels": list(g.member_labels),
                    "support": g.support_count,
                }
                for g in self.groups
            ],
            "cells": {
                g.id: {
                    c.contribution: [
                        {
                            "display": v.display,
                            "kind": v.kind,
                            "resource": v.resource,
                            "statement": v.statement,
                            "provenance": list(v.provenance),
                        }
                        for v in self.cells[(g.id, c.contribution)].values
                    ]
                    for c in self.columns
                }
                for g in self.groups
            },
            "config": {
                "minShared": self.config.min_shared,
                "threshold": self.config.threshold,
                "maxDepth": self.config.max_depth,
                "topK": self.config.top_k,
                "transposed": self.config.transposed,
                "hiddenGroups": sorted(self.config.hidden_groups),
                "rowOrder": list(self.config.row_order),
            },
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ComparisonTable":
        columns = tuple(
            Column(
                contribution=c["contribution"],
                label=c["label"],
                title=c["title"],
                authors=tuple(c["authors"]),
                year=c["year"],
                doi=c["doi"],
                paper=c["paper"],
            )
            for c in data["columns"]
        )
        groups = tuple(
            GroupRow(
                id=g["id"],
                label=g["label"],
                members=tuple(g["members"]),
                member_labels=tuple(g["memberLabels"]),
                support_count=g["support"],
            )
            for g in data["groups"]
        )
        cells = {}
        for g in groups:
            for c in columns:
                raw = data["cells"][g.id][c.contribution]
                cells[(g.id, c.contribution)] = Cell(
                    contribution=c.contribution,
                    group=g.id,
                    values=tuple(
                        CellValue(
                            display=v["display"],
                            kind=v["kind"],
                            resource=v["resource"],
                            statement=v["statement"],
                            provenance=tuple(v["provenance"]),
                        )
                        for v in raw
                    ),
                )
        cfg = data["config"]
        config = ComparisonConfig(
            min_shared=cfg["minShared"],
            threshold=cfg["threshold"],
            max_depth=cfg["maxDepth"],
            top_k=cfg["topK"],
            transposed=cfg["transposed"],
            hidden_groups=frozenset(cfg["hiddenGroups"]),
            row_order=tuple(cfg["rowOrder"]),
        )
        return cls(columns, groups, cells, config)


def build_table(
    store: GraphStore,
    contributions: list[str],
    config: ComparisonConfig = ComparisonConfig(),
    provider: EmbeddingProvider | None = None,
) -> ComparisonTable:
    if len(contributions) < 2:
        raise ValidationError("a comparison needs at least two contributions")
    provider = provider or EmbeddingProvider.empty()
    subgraphs = select_related(store, contributions, SelectionConfig(config.max_depth))
    properties = properties_of(store, subgraphs)
    used_by = {
        p.id: frozenset(c for c, sub in subgraphs.items() if p.id in sub.predicate_ids())
        for p in properties
    }
    pairs = align_properties(properties, config.threshold, provider)
    groups = group_properties(pairs, properties, used_by)

    group_rows = []
    label_of = {p.id: p.label for p in properties}
    group_of_predicate: dict[str, str] = {}
    for i, g in enumerate(groups):
        gid = f"G{i + 1}"
        group_rows.append(
            GroupRow(
                id=gid,
                label=g.representative_label,
                members=g.members,
                member_labels=tuple(label_of[m] for m in g.members),
                support_count=g.support_count,
            )
        )
        for m in g.members:
            group_of_predicate[m] = gid

    columns = []
    for cid in contributions:
        paper = store.paper_for_contribution(cid)
        label = store.resource(cid).label
        if paper is not None:
            columns.append(
                Column(cid, label, paper.title, paper.authors, paper.year, paper.doi, paper.resource)
            )
        else:
            columns.append(Column(cid, label, label, (), None, None, None))

    cells: dict[tuple[str, str], Cell] = {}
    for gid in (g.id for g in group_rows):
        for cid in contributions:
            cells[(gid, cid)] = Cell(cid, gid, ())
    for cid in contributions:
        sub = subgraphs[cid]
        # depth-1 outgoing statements populate cells; deeper statements only
        # feed grouping/support and surface through provenance
        for sid in sorted(sub.statements):
            stmt = sub.statements[sid]
            if sub.depth_of[sid] != 1 or stmt.subject != cid:
                continue
            gid = group_of_predicate[stmt.predicate]
            obj = stmt.object
            if isinstance(obj, Resource):
                value = CellValue(obj.label, "resource", obj.id, sid,
                                  tuple(s.id for s in provenance_path(sub, sid)))
            else:
                value = CellValue(obj.value, "literal", None, sid,
                                  tuple(s.id for s in provenance_path(sub, sid)))
            old = cells[(gid, cid)]
            cells[(gid, cid)] = replace(old, values=old.values + (value,))

    config = replace(config, row_order=tuple(g.id for g in group_rows))
    return ComparisonTable(tuple(columns), tuple(group_rows), cells, config)


# -- customization ------------------------------------------------------------


def hide_group(table: ComparisonTable, gid: str) -> ComparisonTable:
    table.group(gid)
    cfg = replace(table.config, hidden_groups=table.config.hidden_groups | {gid})
    return replace(table, config=cfg)


def show_group(table: ComparisonTable, gid: str) -> ComparisonTable:
    table.group(gid)
    cfg = replace(table.config, hidden_groups=table.config.hidden_groups - {gid})
    return replace(table, config=cfg)


def reorder_groups(table: ComparisonTable, order: tuple[str, ...]) -> ComparisonTable:
    if sorted(order) != sorted(g.id for g in table.groups):
        raise ValidationError("row order must be a permutation of all groups")
    return replace(table, config=replace(table.config, row_order=tuple(order)))


def transpose(table: ComparisonTable) -> ComparisonTable:
    return replace(table, config=replace(table.config, transposed=not table.config.transposed))


# -- rendering -----------------------------------------------------------------


def _grid(table: ComparisonTable) -> list[list[str]]:
    grid = [["Property"] + [c.title for c in table.columns]]
    for g in table.visible_groups():
        row = [g.label]
        for c in table.columns:
            values = table.cell(g.id, c.contribution).values
            row.append("; ".join(v.display for v in values) if values else "-")
        grid.append(row)
    if table.config.transposed:
        grid = [list(r) for r in zip(*grid)]
    return grid


def render_csv(table: ComparisonTable) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\r\n")
    writer.writerows(_grid(table))
    return out.getvalue()


_LATEX_SPECIALS = {
    "&": r"\&", "%": r"\%", "$": r"\$", "#": r"\#",
    "_": r"\_", "{": r"\{", "}": r"\}", "~": r"\textasciitilde{}",
    "^": r"\textasciicircum{}", "\\": r"\textbackslash{}",
}


def _latex_escape(text: str) -> str:
    return "".join(_LATEX_SPECIALS.get(ch, ch) for ch in text)


def _bibtex_key(column: Column) -> str:
    first = column.authors[0] if column.authors else column.title
    surname = first.split()[-1] if first.split() else "anon"
    slug = re.sub(r"[^a-z0-9]", "", surname.lower()) or "anon"
    return f"{slug}{column.year or ''}"


def render_latex(table: ComparisonTable, permalink: str | None = None) -> tuple[str, str]:
    grid = _grid(table)
    ncols = len(grid[0])
    lines = [
        "\\begin{tabular}{" + "l" * ncols + "}",
        "\\toprule",
        " & ".join(_latex_escape(c) for c in grid[0]) + " \\\\",
        "\\midrule",
    ]
    for row in grid[1:]:
        lines.append(" & ".join(_latex_escape(c) for c in row) + " \\\\")
    lines.append("\\bottomrule")
    lines.append("\\end{tabular}")
    if permalink:
        lines.append("")
        lines.append("\\par\\noindent\\footnotesize Persistent identifier: \\url{" + permalink + "}")
    latex = "\n".join(lines) + "\n"

    entries = []
    for c in table.columns:
        if c.paper is None:
            continue
        fields = [f"  title = {{{c.title}}}"]
        if c.authors:
            fields.append(f"  author = {{{' and '.join(c.authors)}}}")
        if c.year is not None:
            fields.append(f"  year = {{{c.year}}}")
        if c.doi:
            fields.append(f"  doi = {{{c.doi}}}")
        entries.append("@article{" + _bibtex_key(c) + ",\n" + ",\n".join(fields) + "\n}")
    bibtex = "\n\n".join(entries) + ("\n" if entries else "")
    return latex, bibtex

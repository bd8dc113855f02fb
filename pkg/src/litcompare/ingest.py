"""Review-survey table ingestion and its inverse.

A review table arrives as a JSON document: a research problem, an ordered
list of column labels, and one entry per surveyed paper with metadata and
cell values. Import creates, per paper: a Paper resource, one Contribution
linked via "has contribution", one research-problem statement (problem
resources deduplicated by label within the import) and one statement per
filled cell value. Export reverses this, and export(import(doc)) is the
identity on canonicalized documents.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .errors import LitCompareError, NotFoundError, ValidationError
from .graph import Contribution, GraphStore, Literal, Paper, Resource
from .metadata_lookup import Resolver

HAS_CONTRIBUTION = "has contribution"
ADDRESSES_PROBLEM = "addresses problem"
RESERVED_PREDICATES = frozenset({HAS_CONTRIBUTION, ADDRESSES_PROBLEM})


@dataclass(frozen=True)
class CellEntry:
    value: str
    kind: str = "literal"  # "literal" | "resource"

    def __post_init__(self):
        if self.kind not in ("literal", "resource"):
            raise ValidationError(f"cell kind must be literal or resource, got {self.kind!r}")


@dataclass(frozen=True)
class PaperEntry:
    title: str
    authors: tuple[str, ...] = ()
    year: Optional[int] = None
    doi: Optional[str] = None
    cells: dict[str, tuple[CellEntry, ...]] = field(default_factory=dict)

    def __post_init__(self):
        if not self.title and not self.doi:
            raise ValidationError("a paper entry needs a title or a DOI")
        if self.doi is None and (not self.title or not self.authors or self.year is None):
            raise ValidationError(
                "without a DOI at least title, authors and publication year are required"
            )


@dataclass(frozen=True)
class ReviewTableDocument:
    research_problem: str
    columns: tuple[str, ...]
    papers: tuple[PaperEntry, ...]

    def __post_init__(self):
        if not self.papers:
            raise ValidationError("a review table needs at least one paper")
        if len(set(self.columns)) != len(self.columns):
            raise ValidationError("column labels must be unique within a document")

    def to_dict(self) -> dict:
        return {
            "researchProblem": self.research_problem,
            "columns": list(self.columns),
            "papers": [
                {
                    "title": p.title,
                    "authors": list(p.authors),
                    "year": p.year,
                    "doi": p.doi,
                    "cells": {
                        col: [{"value": v.value, "kind": v.kind} for v in values]
                        for col, values in p.cells.items()
                        if values
                    },
                }
                for p in self.papers
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ReviewTableDocument":
        papers = tuple(
            PaperEntry(
                title=p.get("title", ""),
                authors=tuple(p.get("authors", ())),
                year=p.get("year"),
                doi=p.get("doi"),
                cells={
                    col: tuple(CellEntry(v["value"], v.get("kind", "literal")) for v in values)
                    for col, values in p.get("cells", {}).items()
                },
            )
            for p in data["papers"]
        )
        return cls(
            research_problem=data["researchProblem"],
            columns=tuple(data["columns"]),
            papers=papers,
        )

    @classmethod
    def from_json(cls, text: str) -> "ReviewTableDocument":
        return cls.from_dict(json.loads(text))

    @classmethod
    def from_file(cls, path: str | Path) -> "ReviewTableDocument":
        return cls.from_json(Path(path).read_text(encoding="utf-8"))


def canonical_json(doc: ReviewTableDocument) -> str:
    """Deterministic serialization: sorted keys, cell values sorted within a
    cell. Two documents equal modulo value ordering canonicalize identically."""
    data = doc.to_dict()
    for paper in data["papers"]:
        paper["cells"] = {
            col: sorted(values, key=lambda v: (v["value"], v["kind"]))
            for col, values in sorted(paper["cells"].items())
        }
    return json.dumps(data, sort_keys=True, ensure_ascii=False, separators=(",", ":"))


@dataclass(frozen=True)
class ImportError_:
    paper_title: str
    doi: Optional[str]
    reason: str


@dataclass(frozen=True)
class ImportResult:
    imported: tuple[tuple[Paper, Contribution], ...]
    errors: tuple[ImportError_, ...]


def import_review_table(
    store: GraphStore,
    doc: ReviewTableDocument,
    resolver: Resolver | None = None,
) -> ImportResult:
    has_contribution = store.create_predicate(HAS_CONTRIBUTION)
    addresses_problem = store.create_predicate(ADDRESSES_PROBLEM)
    column_predicates = {col: store.create_predicate(col) for col in doc.columns}

    problem_by_label: dict[str, str] = {}
    resource_value_by_label: dict[str, str] = {}

    def problem_resource(label: str) -> str:
        if label not in problem_by_label:
            problem_by_label[label] = store.create_resource(label, {"ResearchProblem"})
        return problem_by_label[label]

    imported: list[tuple[Paper, Contribution]] = []
    errors: list[ImportError_] = []
    for entry in doc.papers:
        title, authors, year, doi = entry.title, entry.authors, entry.year, entry.doi
        if doi is not None and resolver is not None:
            try:
                meta = resolver.fetch(doi)
                title = meta.title or title
                authors = meta.authors or authors
                year = meta.year if meta.year is not None else year
            except LitCompareError as exc:
                errors.append(ImportError_(entry.title, doi, str(exc)))
                continue

        problem = problem_resource(doc.research_problem)
        contribution_rid = store.create_resource(f"{title} (contribution)", {"Contribution"})
        contribution = store.register_contribution(contribution_rid, [problem])
        paper_rid = store.create_resource(title, {"Paper"})
        paper = store.register_paper(paper_rid, title, authors, year, doi, [contribution_rid])

        store.add_statement(paper_rid, has_contribution, store.resource(contribution_rid))
        store.add_statement(contribution_rid, addresses_problem, store.resource(problem))
        for col in doc.columns:
            for value in entry.cells.get(col, ()):
                if value.kind == "resource":
                    if value.value not in resource_value_by_label:
                        resource_value_by_label[value.value] = store.create_resource(value.value)
                    obj: Resource | Literal = store.resource(resource_value_by_label[value.value])
                else:
                    obj = Literal(value.value)
                store.add_statement(contribution_rid, column_predicates[col], obj)
        imported.append((paper, contribution))
    return ImportResult(tuple(imported), tuple(errors))


def export_review_table(
    store: GraphStore,
    contributions: list[str],
    columns: list[str],
    research_problem: str | None = None,
) -> ReviewTableDocument:
    column_predicates = {col: store.predicate_by_label(col) for col in columns}
    entries = []
    problem_label = research_problem
    for cid in contributions:
        contribution = store.contribution(cid)
        paper = store.paper_for_contribution(cid)
        if paper is None:
            raise NotFoundError(f"contribution {cid} has no registered paper")
        if problem_label is None:
            problem_label = store.resource(min(contribution.research_problems)).label
        cells: dict[str, tuple[CellEntry, ...]] = {}
        statements = store.statements_by_subject(cid)
        for col, pid in column_predicates.items():
            if pid is None:
                continue
            values = tuple(
                CellEntry(s.object.label, "resource")
                if isinstance(s.object, Resource)
                else CellEntry(s.object.value, "literal")
                for s in statements
                if s.predicate == pid
            )
            if values:
                cells[col] = values
        entries.append(
            PaperEntry(
                title=paper.title,
                authors=paper.authors,
                year=paper.year,
                doi=paper.doi,
                cells=cells,
            )
        )
    return ReviewTableDocument(
        research_problem=problem_label or "",
        columns=tuple(columns),
        papers=tuple(entries),
    )

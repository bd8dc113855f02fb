"""In-process statement store: typed resources, literals, predicates, triples.

Indexes statements by subject, object and predicate. Many concurrent readers
are safe; writes are serialized by a lock. Query results are immutable tuples
of frozen dataclasses, safe to hand across threads.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional, Union

from .errors import NotFoundError, ValidationError


@dataclass(frozen=True)
class Resource:
    id: str
    label: str
    classes: frozenset[str] = field(default_factory=frozenset)


@dataclass(frozen=True)
class Literal:
    value: str
    datatype: Optional[str] = None


Node = Union[Resource, Literal]


@dataclass(frozen=True)
class Predicate:
    id: str
    label: str


@dataclass(frozen=True)
class Statement:
    id: str
    subject: str
    predicate: str
    object: Node


@dataclass(frozen=True)
class Paper:
    resource: str
    title: str
    authors: tuple[str, ...]
    year: Optional[int]
    doi: Optional[str]
    contributions: tuple[str, ...]


@dataclass(frozen=True)
class Contribution:
    resource: str
    research_problems: frozenset[str]


def _escape(value: str) -> str:
    return (
        value.replace("\\", "\\\\")
        .replace("\t", "\\t")
        .replace("\n", "\\n")
        .replace("\r", "\\r")
    )


def _unescape(value: str) -> str:
    out = []
    it = iter(value)
    for ch in it:
        if ch != "\\":
            out.append(ch)
            continue
        nxt = next(it, "")
        out.append({"t": "\t", "n": "\n", "r": "\r", "\\": "\\"}.get(nxt, nxt))
    return "".join(out)


def read_statement_log(path: str | Path) -> list[tuple[str, str, str, str, str, str]]:
    """Parse an append-log file back into raw statement records."""
    records = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line:
                continue
            parts = line.split("\t")
            if len(parts) != 6:
                raise ValidationError(f"malformed log record: {line!r}")
            records.append(tuple(_unescape(p) for p in parts))
    return records


class GraphStore:
    """Statement store with subject/object/predicate indexes.

    Predicate labels are deduplicated store-wide: creating a predicate with
    an existing label returns the existing id. Resource labels are not
    deduplicated.
    """

    def __init__(self, log_path: str | Path | None = None):
        self._lock = threading.RLock()
        self._resources: dict[str, Resource] = {}
        self._predicates: dict[str, Predicate] = {}
        self._predicate_by_label: dict[str, str] = {}
        self._statements: dict[str, Statement] = {}
        self._by_subject: dict[str, list[str]] = {}
        self._by_object: dict[str, list[str]] = {}
        self._by_predicate: dict[str, list[str]] = {}
        self._papers: dict[str, Paper] = {}
        self._contributions: dict[str, Contribution] = {}
        self._paper_of_contribution: dict[str, str] = {}
        self._next = {"R": 0, "P": 0, "S": 0}
        self._log_path = Path(log_path) if log_path else None

    def _mint(self, kind: str) -> str:
        self._next[kind] += 1
        return f"{kind}{self._next[kind]}"

    # -- creation -----------------------------------------------------------

    def create_resource(self, label: str, classes: Iterable[str] = ()) -> str:
        if not label:
            raise ValidationError("resource label must be non-empty")
        with self._lock:
            rid = self._mint("R")
            self._resources[rid] = Resource(rid, label, frozenset(classes))
            return rid

    def create_predicate(self, label: str) -> str:
        if not label:
            raise ValidationError("predicate label must be non-empty")
        with self._lock:
            existing = self._predicate_by_label.get(label)
            if existing is not None:
                return existing
            pid = self._mint("P")
            self._predicates[pid] = Predicate(pid, label)
            self._predicate_by_label[label] = pid
            return pid

    def add_statement(self, subject: str, predicate: str, obj: Node | str) -> Statement:
        with self._lock:
            if subject not in self._resources:
                raise NotFoundError(f"unknown subject {subject}")
            if predicate not in self._predicates:
                raise NotFoundError(f"unknown predicate {predicate}")
            if isinstance(obj, str):
                obj = self.resource(obj)
            elif isinstance(obj, Resource):
                if obj.id not in self._resources:
                    raise NotFoundError(f"unknown object resource {obj.id}")
                obj = self._resources[obj.id]
            elif not isinstance(obj, Literal):
                raise ValidationError(f"object must be a resource or literal, got {type(obj)}")
            sid = self._mint("S")
            stmt = Statement(sid, subject, predicate, obj)
            self._statements[sid] = stmt
            self._by_subject.setdefault(subject, []).append(sid)
            self._by_predicate.setdefault(predicate, []).append(sid)
            if isinstance(obj, Resource):
                self._by_object.setdefault(obj.id, []).append(sid)
            if self._log_path is not None:
                self._append_log(stmt)
            return stmt

    def _append_log(self, stmt: Statement) -> None:
        if isinstance(stmt.object, Resource):
            kind, value, dtype = "R", stmt.object.id, ""
        else:
            kind, value, dtype = "L", stmt.object.value, stmt.object.datatype or ""
        fields = (stmt.id, stmt.subject, stmt.predicate, kind, value, dtype)
        with open(self._log_path, "a", encoding="utf-8") as fh:
            fh.write("\t".join(_escape(f) for f in fields) + "\n")

    # -- registries ---------------------------------------------------------

    def register_contribution(self, resource: str, research_problems: Iterable[str]) -> Contribution:
        problems = frozenset(research_problems)
        if not problems:
            raise ValidationError("a contribution must address at least one research problem")
        with self._lock:
            if resource not in self._resources:
                raise NotFoundError(f"unknown resource {resource}")
            for p in problems:
                if p not in self._resources:
                    raise NotFoundError(f"unknown research problem {p}")
            contribution = Contribution(resource, problems)
            self._contributions[resource] = contribution
            return contribution

    def register_paper(
        self,
        resource: str,
        title: str,
        authors: Iterable[str],
        year: Optional[int],
        doi: Optional[str],
        contributions: Iterable[str],
    ) -> Paper:
        contribs = tuple(contributions)
        if not contribs:
            raise ValidationError("a paper must have at least one contribution")
        with self._lock:
            if resource not in self._resources:
                raise NotFoundError(f"unknown resource {resource}")
            for c in contribs:
                if c not in self._contributions:
                    raise NotFoundError(f"unknown contribution {c}")
            paper = Paper(resource, title, tuple(authors), year, doi, contribs)
            self._papers[resource] = paper
            for c in contribs:
                self._paper_of_contribution[c] = resource
            return paper

    # -- lookup -------------------------------------------------------------

    def resource(self, rid: str) -> Resource:
        with self._lock:
            if rid not in self._resources:
                raise NotFoundError(f"unknown resource {rid}")
            return self._resources[rid]

    def has_resource(self, rid: str) -> bool:
        with self._lock:
            return rid in self._resources

    def predicate(self, pid: str) -> Predicate:
        with self._lock:
            if pid not in self._predicates:
                raise NotFoundError(f"unknown predicate {pid}")
            return self._predicates[pid]

    def predicate_by_label(self, label: str) -> Optional[str]:
        with self._lock:
            return self._predicate_by_label.get(label)

    def statement(self, sid: str) -> Statement:
        with self._lock:
            if sid not in self._statements:
                raise NotFoundError(f"unknown statement {sid}")
            return self._statements[sid]

    def statements_by_subject(self, rid: str) -> tuple[Statement, ...]:
        with self._lock:
            return tuple(self._statements[s] for s in self._by_subject.get(rid, ()))

    def statements_by_object(self, rid: str) -> tuple[Statement, ...]:
        with self._lock:
            return tuple(self._statements[s] for s in self._by_object.get(rid, ()))

    def statements_by_predicate(self, pid: str) -> tuple[Statement, ...]:
        with self._lock:
            return tuple(self._statements[s] for s in self._by_predicate.get(pid, ()))

    def all_statements(self) -> tuple[Statement, ...]:
        with self._lock:
            return tuple(self._statements.values())

    def contribution(self, rid: str) -> Contribution:
        with self._lock:
            if rid not in self._contributions:
                raise NotFoundError(f"unknown contribution {rid}")
            return self._contributions[rid]

    def is_contribution(self, rid: str) -> bool:
        with self._lock:
            return rid in self._contributions

    def contribution_ids(self) -> tuple[str, ...]:
        with self._lock:
            return tuple(self._contributions)

    def paper(self, rid: str) -> Paper:
        with self._lock:
            if rid not in self._papers:
                raise NotFoundError(f"unknown paper {rid}")
            return self._papers[rid]

    def paper_for_contribution(self, rid: str) -> Optional[Paper]:
        with self._lock:
            pid = self._paper_of_contribution.get(rid)
            return self._papers[pid] if pid else None

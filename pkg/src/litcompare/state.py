"""Whole-store JSON persistence for the CLI and the service.

The tab-separated append log (see graph.py) records statements only; the
CLI needs labels and registries too, so commands persist the full store
state as one JSON document.
"""

from __future__ import annotations

import json
from pathlib import Path

from .graph import GraphStore, Literal, Resource


def dump_store(store: GraphStore, path: str | Path) -> None:
    with store._lock:
        data = {
            "resources": [
                {"id": r.id, "label": r.label, "classes": sorted(r.classes)}
                for r in store._resources.values()
            ],
            "predicates": [
                {"id": p.id, "label": p.label} for p in store._predicates.values()
            ],
            "statements": [
                {
                    "id": s.id,
                    "subject": s.subject,
                    "predicate": s.predicate,
                    "object": (
                        {"kind": "resource", "id": s.object.id}
                        if isinstance(s.object, Resource)
                        else {"kind": "literal", "value": s.object.value, "datatype": s.object.datatype}
                    ),
                }
                for s in store._statements.values()
            ],
            "contributions": [
                {"resource": c.resource, "problems": sorted(c.research_problems)}
                for c in store._contributions.values()
            ],
            "papers": [
                {
                    "resource": p.resource,
                    "title": p.title,
                    "authors": list(p.authors),
                    "year": p.year,
                    "doi": p.doi,
                    "contributions": list(p.contributions),
                }
                for p in store._papers.values()
            ],
            "counters": store._next,
        }
    Path(path).write_text(json.dumps(data, ensure_ascii=False), encoding="utf-8")


def load_store(path: str | Path) -> GraphStore:
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    store = GraphStore()
    for r in data["resources"]:
        store._resources[r["id"]] = Resource(r["id"], r["label"], frozenset(r["classes"]))
    for p in data["predicates"]:
        from .graph import Predicate

        store._predicates[p["id"]] = Predicate(p["id"], p["label"])
        store._predicate_by_label[p["label"]] = p["id"]
    for s in data["statements"]:
        obj = s["object"]
        node = (
            store._resources[obj["id"]]
            if obj["kind"] == "resource"
            else Literal(obj["value"], obj.get("datatype"))
        )
        from .graph import Statement

        stmt = Statement(s["id"], s["subject"], s["predicate"], node)
        store._statements[stmt.id] = stmt
        store._by_subject.setdefault(stmt.subject, []).append(stmt.id)
        store._by_predicate.setdefault(stmt.predicate, []).append(stmt.id)
        if obj["kind"] == "resource":
            store._by_object.setdefault(obj["id"], []).append(stmt.id)
    for c in data["contributions"]:
        store.register_contribution(c["resource"], c["problems"])
    for p in data["papers"]:
        store.register_paper(
            p["resource"], p["title"], p["authors"], p["year"], p["doi"], p["contributions"]
        )
    store._next = data["counters"]
    return store

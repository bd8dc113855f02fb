"""Snapshot publishing: permalinks, Dublin Core metadata and Data Cube export.

A saved comparison becomes an immutable snapshot addressed by a 6-character
base62 id derived from a content hash (salt-rerolled on collision), stored
as two files: <id>.meta.json and <id>.data.json. Keeping metadata and data
apart means the metadata stays retrievable after the data payload has been
retracted.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Optional

from .errors import NotFoundError, RetractedError, ValidationError
from .table import ComparisonTable

BASE62 = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz"

DCTERMS = "http://purl.org/dc/terms/"
QB = "http://purl.org/linked-data/cube#"
RDF = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS = "http://www.w3.org/2000/01/rdf-schema#"
XSD = "http://www.w3.org/2001/XMLSchema#"


def base62_encode(data: bytes) -> str:
    n = int.from_bytes(data, "big")
    if n == 0:
        return BASE62[0]
    out = []
    while n:
        n, r = divmod(n, 62)
        out.append(BASE62[r])
    return "".join(reversed(out))


def _canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False, separators=(",", ":"))


def _ttl_escape(value: str) -> str:
    return (
        value.replace("\\", "\\\\")
        .replace('"', '\\"')
        .replace("\n", "\\n")
        .replace("\r", "\\r")
        .replace("\t", "\\t")
    )


@dataclass(frozen=True)
class ComparisonMetadata:
    title: str
    created: str  # UTC, second precision, e.g. 2026-08-23T12:00:00Z
    description: Optional[str] = None
    creator: Optional[str] = None
    paper_count: int = 0
    contributions: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "title": self.title,
            "created": self.created,
            "description": self.description,
            "creator": self.creator,
            "paperCount": self.paper_count,
            "contributions": list(self.contributions),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ComparisonMetadata":
        return cls(
            title=data["title"],
            created=data["created"],
            description=data.get("description"),
            creator=data.get("creator"),
            paper_count=data.get("paperCount", 0),
            contributions=tuple(data.get("contributions", ())),
        )


@dataclass(frozen=True)
class ComparisonSnapshot:
    id: str
    metadata: ComparisonMetadata
    table: ComparisonTable
    content_hash: str


class SnapshotStore:
    """Directory-backed snapshot store with atomic writes."""

    def __init__(self, directory: str | Path, base_uri: str = "https://example.org/litcompare"):
        self._dir = Path(directory)
        self._dir.mkdir(parents=True, exist_ok=True)
        self.base_uri = base_uri.rstrip("/")

    def _meta_path(self, snapshot_id: str) -> Path:
        return self._dir / f"{snapshot_id}.meta.json"

    def _data_path(self, snapshot_id: str) -> Path:
        return self._dir / f"{snapshot_id}.data.json"

    def permalink(self, snapshot_id: str) -> str:
        return f"/c/{snapshot_id}"

    def _hash_content(self, table_state: dict, meta_fields: dict, salt: int = 0) -> str:
        payload = _canonical({"table": table_state, "metadata": meta_fields, "salt": salt})
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()

    def _mint_id(self, digest_hex: str) -> str:
        return base62_encode(bytes.fromhex(digest_hex))[:6].rjust(6, "0")

    def save(
        self,
        table: ComparisonTable,
        title: str,
        description: str | None = None,
        creator: str | None = None,
    ) -> str:
        if not title:
            raise ValidationError("a comparison title is required")
        if len(table.columns) < 2:
            raise ValidationError("a snapshot needs at least two contributions")
        table_state = table.to_dict()
        meta_fields = {"title": title, "description": description, "creator": creator}
        salt = 0
        while True:
            content_hash = self._hash_content(table_state, meta_fields, salt)
            snapshot_id = self._mint_id(content_hash)
            meta_path = self._meta_path(snapshot_id)
            if not meta_path.exists():
                break
            existing = json.loads(meta_path.read_text(encoding="utf-8"))
            if existing["contentHash"] == content_hash:
                return snapshot_id  # identical content already published
            salt += 1  # 6-char prefix collision: re-roll with a salt counter

        metadata = ComparisonMetadata(
            title=title,
            created=datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ"),
            description=description,
            creator=creator,
            paper_count=sum(1 for c in table.columns if c.paper is not None),
            contributions=tuple(c.contribution for c in table.columns),
        )
        meta_record = {"id": snapshot_id, "contentHash": content_hash, **metadata.to_dict()}
        self._atomic_write(self._data_path(snapshot_id), _canonical({"table": table_state}))
        self._atomic_write(meta_path, _canonical(meta_record))
        return snapshot_id

    def _atomic_write(self, path: Path, text: str) -> None:
        tmp = path.with_suffix(path.suffix + ".tmp")
        tmp.write_text(text, encoding="utf-8")
        tmp.replace(path)

    def load_metadata(self, snapshot_id: str) -> ComparisonMetadata:
        meta_path = self._meta_path(snapshot_id)
        if not meta_path.exists():
            raise NotFoundError(f"unknown snapshot {snapshot_id}")
        return ComparisonMetadata.from_dict(json.loads(meta_path.read_text(encoding="utf-8")))

    def load(self, snapshot_id: str) -> ComparisonSnapshot:
        metadata = self.load_metadata(snapshot_id)
        data_path = self._data_path(snapshot_id)
        if not data_path.exists():
            raise RetractedError(snapshot_id, metadata)
        meta_record = json.loads(self._meta_path(snapshot_id).read_text(encoding="utf-8"))
        data = json.loads(data_path.read_text(encoding="utf-8"))
        return ComparisonSnapshot(
            id=snapshot_id,
            metadata=metadata,
            table=ComparisonTable.from_dict(data["table"]),
            content_hash=meta_record["contentHash"],
        )

    def retract_data(self, snapshot_id: str) -> None:
        """Delete the data payload; the metadata file stays."""
        self.load_metadata(snapshot_id)
        self._data_path(snapshot_id).unlink(missing_ok=True)

    def ids(self) -> tuple[str, ...]:
        return tuple(sorted(p.name[:-10] for p in self._dir.glob("*.meta.json")))

    # -- RDF exports ----------------------------------------------------------

    def _comparison_iri(self, snapshot_id: str) -> str:
        return f"{self.base_uri}/comparison/{snapshot_id}"

    def _resource_iri(self, rid: str) -> str:
        return f"{self.base_uri}/resource/{rid}"

    def _prefixes(self) -> list[str]:
        return [
            f"@prefix dcterms: <{DCTERMS}> .",
            f"@prefix qb: <{QB}> .",
            f"@prefix rdfs: <{RDFS}> .",
            f"@prefix xsd: <{XSD}> .",
            f"@prefix lc: <{self.base_uri}/vocab/> .",
            "",
        ]

    def export_metadata_rdf(self, snapshot_id: str) -> str:
        metadata = self.load_metadata(snapshot_id)
        subject = f"<{self._comparison_iri(snapshot_id)}>"
        lines = self._prefixes()
        lines.append(f"{subject} a lc:Comparison .")
        lines.append(f'{subject} dcterms:title "{_ttl_escape(metadata.title)}" .')
        lines.append(f'{subject} dcterms:created "{metadata.created}"^^xsd:dateTime .')
        if metadata.description is not None:
            lines.append(f'{subject} dcterms:description "{_ttl_escape(metadata.description)}" .')
        if metadata.creator is not None:
            lines.append(f'{subject} dcterms:creator "{_ttl_escape(metadata.creator)}" .')
        try:
            snapshot = self.load(snapshot_id)
            papers = [c.paper for c in snapshot.table.columns if c.paper is not None]
        except RetractedError:
            papers = []
        for paper_rid in papers:
            lines.append(f"{subject} lc:comparesPaper <{self._resource_iri(paper_rid)}> .")
        return "\n".join(lines) + "\n"

    def export_datacube_rdf(self, snapshot_id: str) -> str:
        snapshot = self.load(snapshot_id)
        table = snapshot.table
        cmp_iri = self._comparison_iri(snapshot_id)
        dataset = f"<{cmp_iri}/dataset>"
        dsd = f"<{cmp_iri}/dsd>"
        lines = self._prefixes()
        lines.append(f"{dataset} a qb:DataSet .")
        lines.append(f'{dataset} dcterms:title "{_ttl_escape(snapshot.metadata.title)}" .')
        lines.append(f"{dataset} qb:structure {dsd} .")
        lines.append(f"{dsd} a qb:DataStructureDefinition .")
        for name, role in (
            ("contribution", "qb:dimension"),
            ("propertyGroup", "qb:dimension"),
            ("value", "qb:measure"),
        ):
            component = f"<{cmp_iri}/component/{name}>"
            lines.append(f"{dsd} qb:component {component} .")
            lines.append(f"{component} a qb:ComponentSpecification .")
            lines.append(f"{component} {role} lc:{name} .")
        lines.append("lc:contribution a qb:DimensionProperty .")
        lines.append("lc:propertyGroup a qb:DimensionProperty .")
        lines.append("lc:value a qb:MeasureProperty .")
        for group in table.visible_groups():
            group_iri = f"<{cmp_iri}/group/{group.id}>"
            lines.append(f'{group_iri} rdfs:label "{_ttl_escape(group.label)}" .')
            for column in table.columns:
                cell = table.cell(group.id, column.contribution)
                for i, value in enumerate(cell.values):
                    obs = f"<{cmp_iri}/observation/{group.id}-{column.contribution}-{i}>"
                    lines.append(f"{obs} a qb:Observation .")
                    lines.append(f"{obs} qb:dataSet {dataset} .")
                    lines.append(f"{obs} lc:contribution <{self._resource_iri(column.contribution)}> .")
                    lines.append(f"{obs} lc:propertyGroup {group_iri} .")
                    lines.append(f'{obs} lc:value "{_ttl_escape(value.display)}" .')
        return "\n".join(lines) + "\n"

"""Command line interface.

  litcompare ingest <file.json> [--offline] [--cache-dir PATH] [--store PATH]
  litcompare similar <contribution-id> [-k N] [--store PATH]
  litcompare publish <comparison.json> --title T [--description D]
                     [--creator U] [--snapshots PATH]
  litcompare serve [--port N]
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .alignment import EmbeddingProvider
from .errors import LitCompareError
from .graph import GraphStore
from .ingest import ReviewTableDocument, import_review_table
from .metadata_lookup import CachedResolver, CrossrefClient
from .publish import SnapshotStore
from .similarity import build_index
from .state import dump_store, load_store
from .table import ComparisonTable


def _open_store(path: str) -> GraphStore:
    return load_store(path) if Path(path).exists() else GraphStore()


def cmd_ingest(args) -> int:
    doc = ReviewTableDocument.from_file(args.file)
    inner = None if args.offline else CrossrefClient()
    resolver = CachedResolver(inner, args.cache_dir, offline=args.offline)
    store = _open_store(args.store)
    result = import_review_table(store, doc, resolver if args.resolve else None)
    dump_store(store, args.store)
    for paper, contribution in result.imported:
        print(f"imported {paper.resource} ({paper.title}) contribution {contribution.resource}")
    for err in result.errors:
        print(f"error: {err.paper_title or err.doi}: {err.reason}", file=sys.stderr)
    return 0 if not result.errors else 1


def cmd_similar(args) -> int:
    store = _open_store(args.store)
    index = build_index(store)
    for hit in index.find_similar(args.contribution, args.k):
        print(f"{hit.contribution}\t{hit.score:.6f}\t{hit.display_percentage}")
    return 0


def cmd_publish(args) -> int:
    data = json.loads(Path(args.file).read_text(encoding="utf-8"))
    table = ComparisonTable.from_dict(data["table"] if "table" in data else data)
    snapshots = SnapshotStore(args.snapshots)
    snapshot_id = snapshots.save(table, args.title, args.description, args.creator)
    print(snapshots.permalink(snapshot_id))
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .api import create_app

    store = _open_store(args.store)
    snapshots = SnapshotStore(args.snapshots)
    embeddings = args.embeddings or os.environ.get("EMBEDDINGS_PATH")
    provider = EmbeddingProvider.from_file(embeddings) if embeddings else None
    uvicorn.run(create_app(store, snapshots, provider), host="0.0.0.0", port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="litcompare")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="import a review-table JSON document")
    p.add_argument("file")
    p.add_argument("--offline", action="store_true")
    p.add_argument("--cache-dir", default=".doi-cache")
    p.add_argument("--store", default=os.environ.get("STORE_PATH", "store.json"))
    p.add_argument("--resolve", action="store_true", help="resolve metadata for entries with a DOI")
    p.set_defaults(fn=cmd_ingest)

    p = sub.add_parser("similar", help="rank contributions similar to the given one")
    p.add_argument("contribution")
    p.add_argument("-k", type=int, default=3)
    p.add_argument("--store", default=os.environ.get("STORE_PATH", "store.json"))
    p.set_defaults(fn=cmd_similar)

    p = sub.add_parser("publish", help="publish a comparison table state as a snapshot")
    p.add_argument("file")
    p.add_argument("--title", required=True)
    p.add_argument("--description")
    p.add_argument("--creator")
    p.add_argument("--snapshots", default=os.environ.get("SNAPSHOT_PATH", "snapshots"))
    p.set_defaults(fn=cmd_publish)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--store", default=os.environ.get("STORE_PATH", "store.json"))
    p.add_argument("--snapshots", default=os.environ.get("SNAPSHOT_PATH", "snapshots"))
    p.add_argument("--embeddings", default=None)
    p.add_argument("--tau", type=float, default=None)
    p.add_argument("--port", type=int, default=int(os.environ.get("PORT", "8000")))
    p.set_defaults(fn=cmd_serve)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except LitCompareError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

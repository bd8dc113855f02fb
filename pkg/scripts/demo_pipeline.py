#!/usr/bin/env python3
"""End-to-end walkthrough of the comparison pipeline on a toy survey table.

Builds a small review-table document in memory, imports it into a graph
store, shows similarity suggestions for the first contribution, builds the
comparison table, publishes a snapshot and writes every export format into
an output directory.
"""

import argparse
from pathlib import Path

from litcompare.graph import GraphStore
from litcompare.ingest import CellEntry, PaperEntry, ReviewTableDocument, import_review_table
from litcompare.publish import SnapshotStore
from litcompare.similarity import build_index
from litcompare.table import build_table, render_csv, render_latex


def demo_document():
    columns = ("has approach", "dataset", "evaluation metric")
    papers = (
        PaperEntry(
            "Neural abstractive summarizer", ("A. Author",), 2017,
            cells={
                "has approach": (CellEntry("sequence to sequence"),),
                "dataset": (CellEntry("CNN/DailyMail", "resource"),),
                "evaluation metric": (CellEntry("ROUGE-2"),),
            },
        ),
        PaperEntry(
            "Extractive ranking baseline", ("B. Writer",), 2015,
            cells={
                "has approach": (CellEntry("sentence ranking"),),
                "dataset": (CellEntry("CNN/DailyMail", "resource"),),
                "evaluation metric": (CellEntry("ROUGE-1"), CellEntry("ROUGE-2")),
            },
        ),
        PaperEntry(
            "Pointer generator study", ("C. Scholar",), 2018,
            cells={
                "has approach": (CellEntry("pointer generator"),),
                "evaluation metric": (CellEntry("ROUGE-L"),),
            },
        ),
    )
    return ReviewTableDocument("Text summarization", columns, papers)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=Path, default=Path("demo_out"))
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    store = GraphStore()
    result = import_review_table(store, demo_document())
    contributions = [c.resource for _, c in result.imported]
    print(f"imported {len(result.imported)} papers, {len(store.all_statements())} statements")

    index = build_index(store)
    print(f"\nsuggestions for {contributions[0]}:")
    for hit in index.find_similar(contributions[0], 3):
        print(f"  {hit.contribution}  score={hit.score:.4f}  ({hit.display_percentage}%)")

    table = build_table(store, contributions)
    print(f"\ncomparison: {len(table.columns)} columns, {len(table.visible_groups())} visible rows")

    snapshots = SnapshotStore(args.out / "snapshots")
    snapshot_id = snapshots.save(table, "Text summarization survey", creator="demo")
    print(f"published as {snapshots.permalink(snapshot_id)}")

    (args.out / "comparison.csv").write_bytes(render_csv(table).encode())
    latex, bibtex = render_latex(table, snapshots.permalink(snapshot_id))
    (args.out / "comparison.tex").write_text(latex, encoding="utf-8")
    (args.out / "comparison.bib").write_text(bibtex, encoding="utf-8")
    (args.out / "metadata.ttl").write_text(snapshots.export_metadata_rdf(snapshot_id), encoding="utf-8")
    (args.out / "cube.ttl").write_text(snapshots.export_datacube_rdf(snapshot_id), encoding="utf-8")
    print(f"exports written to {args.out}/")


if __name__ == "__main__":
    main()

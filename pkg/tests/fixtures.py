"""Synthetic review-table documents shaped like published survey tables."""

import random

from litcompare.config import ComparisonConfig
from litcompare.graph import GraphStore
from litcompare.ingest import (
    CellEntry,
    PaperEntry,
    ReviewTableDocument,
    import_review_table,
)
from litcompare.table import build_table


def synthetic_review_doc(
    problem: str,
    n_papers: int,
    columns: tuple[str, ...],
    seed: int = 0,
    fill_probability: float = 0.8,
) -> ReviewTableDocument:
    """Every column and every paper is guaranteed at least one filled cell."""
    rng = random.Random(seed)
    papers = []
    for i in range(n_papers):
        cells = {}
        for j, col in enumerate(columns):
            forced = (i == j % n_papers) or (j == i % len(columns))
            if not forced and rng.random() > fill_probability:
                continue
            values = []
            for v in range(rng.randrange(1, 3)):
                if rng.random() < 0.3:
                    values.append(CellEntry(f"shared resource {j}-{v}", "resource"))
                else:
                    values.append(CellEntry(f"value {i}-{j}-{v}", "literal"))
            cells[col] = tuple(values)
        papers.append(
            PaperEntry(
                title=f"{problem} paper {i}",
                authors=(f"Author {i} Surname{i}", "Co Author"),
                year=2010 + (i % 10),
                doi=None,
                cells=cells,
            )
        )
    return ReviewTableDocument(problem, columns, tuple(papers))


TEXT_SUMMARIZATION_DOC = synthetic_review_doc(
    "Text summarization",
    n_papers=5,
    columns=("has approach", "dataset used", "evaluation metric", "language"),
    seed=101,
)

def audit_doc():
    """Hand-written 4-paper document used for the golden files."""
    return ReviewTableDocument(
        "Graph visualization",
        ("has approach", "supports graphs", "evaluation"),
        (
            PaperEntry(
                "Alpha survey tool", ("Ada One",), 2016,
                cells={
                    "has approach": (CellEntry("node-link"),),
                    "supports graphs": (CellEntry("Web", "resource"),),
                    "evaluation": (CellEntry("user study, 12 subjects"),),
                },
            ),
            PaperEntry(
                "Beta explorer", ("Bob Two",), 2017,
                cells={
                    "has approach": (CellEntry("matrix"), CellEntry("node-link")),
                    "supports graphs": (CellEntry("Web", "resource"),),
                },
            ),
            PaperEntry(
                "Gamma viewer", ("Cat Three",), 2018,
                cells={
                    "has approach": (CellEntry("treemap"),),
                    "evaluation": (CellEntry("benchmark"),),
                },
            ),
            PaperEntry(
                "Delta engine", ("Dan Four",), 2019,
                cells={"supports graphs": (CellEntry("Desktop", "resource"),)},
            ),
        ),
    )


def imported_table(config=ComparisonConfig()):
    store = GraphStore()
    result = import_review_table(store, audit_doc())
    contributions = [c.resource for _, c in result.imported]
    return store, build_table(store, contributions, config)



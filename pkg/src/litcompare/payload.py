"""Wire format of a comparison: papers, property groups and values."""

from __future__ import annotations

from .table import ComparisonTable


def compare_payload(table: ComparisonTable) -> dict:
    """The triple a front end needs to render a comparison: the list of
    papers, the list of all property groups (visible or not) and the cell
    values per group per contribution."""
    papers = []
    for c in table.columns:
        papers.append(
            {
                "paper": c.paper,
                "title": c.title,
                "authors": list(c.authors),
                "year": c.year,
                "doi": c.doi,
                "contributions": [c.contribution],
                "contributionLabel": c.label,
            }
        )
    properties = []
    for g in table.groups:
        properties.append(
            {
                "id": g.id,
                "label": g.label,
                "members": list(g.member_labels),
                "supportCount": g.support_count,
                "visible": table.is_visible(g.id),
            }
        )
    values = {
        g.id: {
            c.contribution: [
                {
                    "display": v.display,
                    "kind": v.kind,
                    "resource": v.resource,
                    "provenance": list(v.provenance),
                }
                for v in table.cell(g.id, c.contribution).values
            ]
            for c in table.columns
        }
        for g in table.groups
    }
    return {"papers": papers, "properties": properties, "values": values}

import json
from pathlib import Path

import jsonschema
import pytest
from fastapi.testclient import TestClient

from litcompare.api import create_app
from litcompare.publish import SnapshotStore
from litcompare.table import render_csv

from fixtures import imported_table
from turtle_oracle import parse_turtle

SCHEMAS = Path(__file__).parent.parent / "schemas"
PAYLOAD_SCHEMA = json.loads((SCHEMAS / "compare_payload.schema.json").read_text())
ENVELOPE_SCHEMA = json.loads((SCHEMAS / "error_envelope.schema.json").read_text())


@pytest.fixture
def client(tmp_path):
    store, table = imported_table()
    app = create_app(store, SnapshotStore(tmp_path / "snapshots"))
    with TestClient(app, raise_server_exceptions=False) as c:
        c.table = table
        c.contributions = [col.contribution for col in table.columns]
        yield c


def assert_envelope(response, status, code):
    assert response.status_code == status
    body = response.json()
    jsonschema.validate(body, ENVELOPE_SCHEMA)
    assert body["code"] == code


# -- /similar -----------------------------------------------------------------------


def test_similar_defaults_to_three_hits(client):
    response = client.get(f"/similar/{client.contributions[0]}")
    assert response.status_code == 200
    hits = response.json()
    assert len(hits) == 3
    for hit in hits:
        assert hit["percentage"] == round(hit["score"] * 100)
    scores = [h["score"] for h in hits]
    assert scores == sorted(scores, reverse=True)


def test_similar_k_caps_results(client):
    response = client.get(f"/similar/{client.contributions[0]}", params={"k": 1})
    assert len(response.json()) == 1
    response = client.get(f"/similar/{client.contributions[0]}", params={"k": 50})
    assert len(response.json()) == 3  # only three other contributions exist


def test_similar_unknown_contribution(client):
    assert_envelope(client.get("/similar/R999"), 404, "not_found")


def test_similar_invalid_k(client):
    assert_envelope(
        client.get(f"/similar/{client.contributions[0]}", params={"k": 0}),
        400,
        "validation_error",
    )


# -- /compare -----------------------------------------------------------------------


def test_compare_payload_matches_schema(client):
    ids = ",".join(client.contributions)
    response = client.get("/compare", params={"contributions": ids})
    assert response.status_code == 200
    payload = response.json()
    jsonschema.validate(payload, PAYLOAD_SCHEMA)
    assert len(payload["papers"]) == 4
    visible = [p for p in payload["properties"] if p["visible"]]
    assert visible


def test_compare_is_deterministic_bytewise(client):
    ids = ",".join(client.contributions)
    first = client.get("/compare", params={"contributions": ids})
    second = client.get("/compare", params={"contributions": ids})
    assert first.content == second.content


def test_compare_alpha_parameter_changes_visibility(client):
    ids = ",".join(client.contributions)
    loose = client.get("/compare", params={"contributions": ids, "alpha": 1}).json()
    strict = client.get("/compare", params={"contributions": ids, "alpha": 4}).json()
    count = lambda p: sum(1 for g in p["properties"] if g["visible"])
    assert count(strict) <= count(loose)


def test_compare_needs_two_ids(client):
    assert_envelope(
        client.get("/compare", params={"contributions": client.contributions[0]}),
        400,
        "validation_error",
    )


def test_compare_unknown_id(client):
    assert_envelope(
        client.get("/compare", params={"contributions": "R998,R999"}),
        404,
        "not_found",
    )


def test_compare_invalid_tau(client):
    ids = ",".join(client.contributions)
    assert_envelope(
        client.get("/compare", params={"contributions": ids, "tau": 1.5}),
        400,
        "validation_error",
    )


# -- publish / fetch / export --------------------------------------------------------


def publish(client, **extra):
    body = {"title": "Survey table", "table": client.table.to_dict(), **extra}
    response = client.post("/comparisons", json=body)
    assert response.status_code == 201
    return response.json()


def test_publish_then_get_roundtrip(client):
    created = publish(client, creator="carol")
    assert created["permalink"].endswith(created["id"])
    fetched = client.get(f"/comparisons/{created['id']}")
    assert fetched.status_code == 200
    body = fetched.json()
    assert body["table"] == client.table.to_dict()
    assert body["metadata"]["creator"] == "carol"
    jsonschema.validate(body["payload"], PAYLOAD_SCHEMA)


def test_publish_without_title_rejected(client):
    response = client.post("/comparisons", json={"table": client.table.to_dict()})
    assert_envelope(response, 400, "validation_error")


def test_publish_from_contribution_list(client):
    body = {
        "title": "Thin client publish",
        "contributions": client.contributions,
        "config": {
            "alpha": 2,
            "transposed": True,
            "hiddenGroups": ["G2"],
        },
    }
    response = client.post("/comparisons", json=body)
    assert response.status_code == 201
    fetched = client.get(f"/comparisons/{response.json()['id']}").json()
    assert fetched["table"]["config"]["transposed"] is True
    assert fetched["table"]["config"]["hiddenGroups"] == ["G2"]
    # rebuilt cells equal the table built directly over the same store
    assert fetched["table"]["cells"] == client.table.to_dict()["cells"]


def test_publish_without_table_or_contributions(client):
    response = client.post("/comparisons", json={"title": "t"})
    assert_envelope(response, 400, "validation_error")


def test_publish_is_idempotent(client):
    assert publish(client)["id"] == publish(client)["id"]


def test_get_unknown_snapshot(client):
    assert_envelope(client.get("/comparisons/zzzzzz"), 404, "not_found")


def test_export_csv_delegates_to_renderer(client):
    created = publish(client)
    response = client.get(f"/comparisons/{created['id']}/export", params={"format": "csv"})
    assert response.status_code == 200
    assert response.headers["content-type"].startswith("text/csv")
    assert response.text == render_csv(client.table)


def test_export_latex_returns_both_documents(client):
    created = publish(client)
    response = client.get(f"/comparisons/{created['id']}/export", params={"format": "latex"})
    body = response.json()
    assert "\\begin{tabular}" in body["latex"]
    assert body["bibtex"].count("@") == 4
    assert created["permalink"] in body["latex"]


def test_export_rdf_formats_parse_as_turtle(client):
    created = publish(client)
    for fmt in ("rdf-meta", "rdf-cube"):
        response = client.get(
            f"/comparisons/{created['id']}/export", params={"format": fmt}
        )
        assert response.status_code == 200
        assert response.headers["content-type"].startswith("text/turtle")
        assert parse_turtle(response.text)


def test_export_unknown_format(client):
    created = publish(client)
    response = client.get(
        f"/comparisons/{created['id']}/export", params={"format": "docx"}
    )
    assert_envelope(response, 400, "validation_error")


def test_retracted_snapshot_410_with_metadata(client):
    created = publish(client)
    client.app.state.snapshots.retract_data(created["id"])
    response = client.get(f"/comparisons/{created['id']}")
    assert_envelope(response, 410, "data_retracted")
    assert response.json()["details"]["title"] == "Survey table"
    # metadata export still works after retraction
    meta = client.get(
        f"/comparisons/{created['id']}/export", params={"format": "rdf-meta"}
    )
    assert meta.status_code == 200


# -- /resources ---------------------------------------------------------------------


def test_resource_statements_popup(client):
    contribution = client.contributions[0]
    response = client.get(f"/resources/{contribution}/statements")
    assert response.status_code == 200
    body = response.json()
    assert body["id"] == contribution
    predicates = {s["predicate"] for s in body["statements"]}
    assert "addresses problem" in predicates


def test_resource_statements_unknown(client):
    assert_envelope(client.get("/resources/R999/statements"), 404, "not_found")

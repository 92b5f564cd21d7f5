"""HTTP layer: endpoints, schema conformance, error mapping."""

import json
from pathlib import Path

import jsonschema
import pytest
from fastapi.testclient import TestClient

from chevalley.service import create_app
from chevalley.service.schemas import (
    RESPONSE_MODELS,
    generate_schemas,
    load_schema,
    schema_dir,
)

CASES = [
    ("roots", {"type_label": "B", "rank": 2}),
    ("weyl-scan", {"type_label": "A", "rank": 2}),
    ("relations", {"type_label": "A", "rank": 2, "samples": 6, "seed": 1}),
    ("rgd-check", {"type_label": "A", "rank": 2, "budget": 6}),
    ("vrgd-check", {"type_label": "B", "rank": 2, "budget": 6, "prime": 5}),
    ("torsion", {"type_label": "A", "rank": 2, "samples": 4}),
    ("torsion-scan", {"type_label": "A", "rank": 2, "samples": 2}),
    (
        "congruence-probe",
        {"type_label": "A", "rank": 2, "words": 10, "max_len": 4},
    ),
    ("approx", {"prime": 2, "modulus": 3, "lam": "7", "precision": 4}),
]


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


class TestEndpoints:
    def test_health(self, client):
        resp = client.get("/health")
        assert resp.status_code == 200
        body = resp.json()
        assert body["status"] == "ok"
        jsonschema.validate(body, load_schema("health"))

    @pytest.mark.parametrize("command,payload", CASES)
    def test_post_matches_shipped_schema(self, client, command, payload):
        resp = client.post(f"/{command}", json=payload)
        assert resp.status_code == 200, resp.text
        jsonschema.validate(resp.json(), load_schema(command))

    def test_torsion_defaults_to_coxeter_word(self, client):
        resp = client.post(
            "/torsion", json={"type_label": "B", "rank": 2, "samples": 3}
        )
        body = resp.json()
        assert body["word"] == [1, 2]
        assert body["weyl_order"] == 4
        assert body["ok"] is True

    def test_approx_with_generator_part(self, client):
        payload = {
            "prime": 2,
            "modulus": 3,
            "lam": "7",
            "precision": 4,
            "type_label": "A",
            "rank": 2,
            "root_index": 1,
        }
        body = client.post("/approx", json=payload).json()
        assert body["mu"] == "39"
        assert body["generator"]["achieved"] == "5"
        jsonschema.validate(body, load_schema("approx"))


class TestSchemasShipped:
    def test_every_command_has_a_file(self):
        present = {p.stem for p in schema_dir().glob("*.json")}
        assert present == set(RESPONSE_MODELS)

    def test_shipped_files_are_current(self, tmp_path):
        generate_schemas(tmp_path)
        for command in RESPONSE_MODELS:
            fresh = (tmp_path / f"{command}.json").read_text()
            shipped = (schema_dir() / f"{command}.json").read_text()
            assert fresh == shipped, f"schema drift for {command}"

    def test_load_schema_unknown_command(self):
        with pytest.raises(KeyError):
            load_schema("no-such-command")


class TestErrorMapping:
    def test_domain_error_is_400(self, client):
        # B1 is not a valid system, surfaces as a rejected request
        resp = client.post("/roots", json={"type_label": "B", "rank": 1})
        assert resp.status_code == 400
        assert "detail" in resp.json()

    def test_bad_word_letter_is_400(self, client):
        resp = client.post(
            "/torsion", json={"type_label": "A", "rank": 2, "word": [9]}
        )
        assert resp.status_code == 400

    def test_malformed_payload_is_422(self, client):
        resp = client.post("/roots", json={"type_label": "Z", "rank": 2})
        assert resp.status_code == 422
        resp = client.post("/roots", json={"rank": 2})
        assert resp.status_code == 422
        resp = client.post("/relations", json={"type_label": "A", "rank": 2, "samples": 0})
        assert resp.status_code == 422

    def test_strict_modulus_two_rejected(self, client):
        payload = {"type_label": "A", "rank": 2, "prime": 3, "modulus": 2, "words": 5}
        assert client.post("/congruence-probe", json=payload).status_code == 400
        payload["strict"] = False
        assert client.post("/congruence-probe", json=payload).status_code == 200


class TestDeterminism:
    @pytest.mark.parametrize(
        "command,payload",
        [
            ("relations", {"type_label": "G", "rank": 2, "samples": 5, "seed": 9}),
            ("torsion", {"type_label": "A", "rank": 3, "samples": 4, "seed": 2}),
            ("congruence-probe", {"type_label": "B", "rank": 2, "words": 8, "max_len": 3}),
        ],
    )
    def test_repeat_posts_identical(self, client, command, payload):
        first = client.post(f"/{command}", json=payload)
        second = client.post(f"/{command}", json=payload)
        assert first.content == second.content

import pytest
from fastapi.testclient import TestClient

from ncmorse.service import create_app
from conftest import load_fixture


@pytest.fixture(scope="module")
def client():
    with TestClient(create_app()) as c:
        yield c


def morse_body(complex_name, morse_name, **extra):
    body = {
        "complex": load_fixture(complex_name),
        "morse": load_fixture(morse_name),
    }
    body.update(extra)
    return body


def test_health(client):
    resp = client.get("/health")
    assert resp.status_code == 200
    body = resp.json()
    assert body["status"] == "ok"
    assert body["version"]


def test_validate_endpoint(client):
    resp = client.post("/complex/validate", json=load_fixture("interval.json"))
    assert resp.status_code == 200
    body = resp.json()
    assert body["valid"] and body["regular"]
    assert body["cell_counts"] == [2, 1]

    broken = {"cells": [{"id": "e", "dim": 1, "boundary": [{"cell": "g", "deg": 1}]}]}
    resp = client.post("/complex/validate", json=broken)
    assert resp.status_code == 200
    body = resp.json()
    assert not body["valid"]
    assert any("dangling face" in e for e in body["errors"])


def test_chains_endpoint(client):
    resp = client.post("/complex/chains", json=load_fixture("torus.json"))
    assert resp.status_code == 200
    body = resp.json()
    assert body["counts"] == [1, 2, 1]
    assert body["ideals"]["W_T"] == "I_T"
    assert ["W_a", "W_T"] in body["hasse"]


def test_chains_endpoint_maps_domain_error_to_400(client):
    broken = {"cells": [{"id": "e", "dim": 1, "boundary": [{"cell": "g", "deg": 1}]}]}
    resp = client.post("/complex/chains", json=broken)
    assert resp.status_code == 400
    detail = resp.json()["detail"]
    assert detail["error"] == "InvalidComplexError"
    assert "dangling face" in detail["message"]


def test_homology_endpoint(client):
    resp = client.post("/complex/homology", json=load_fixture("torus.json"))
    assert resp.json() == {"betti": [1, 2, 1], "torsion": [[], [], []], "euler": 0}


def test_meet_endpoint(client):
    resp = client.post(
        "/complex/meet",
        json={"complex": load_fixture("interval.json"), "chains": ["W_0", "W_1"]},
    )
    assert resp.json() == {"support": ["0", "1"]}


def test_morse_check_endpoint(client):
    resp = client.post("/morse/check", json=morse_body("interval.json", "interval-f012.json"))
    assert resp.json() == {"valid": True, "violations": [], "double_exceptions": []}

    constant = {
        "complex": load_fixture("interval.json"),
        "morse": {"values": {"W_0": "0", "W_1": "0", "W_I": "0"}},
    }
    resp = client.post("/morse/check", json=constant)
    body = resp.json()
    assert not body["valid"]
    assert body["violations"][0]["chain"] == "W_I"


def test_critical_endpoint_conventions(client):
    resp = client.post("/morse/critical", json=morse_body("interval.json", "interval-f012.json"))
    body = resp.json()
    assert body["convention"] == "paper-nonstrict"
    assert body["counts"] == [2, 1]

    resp = client.post(
        "/morse/critical",
        json=morse_body("interval.json", "interval-f021.json", convention="forman"),
    )
    body = resp.json()
    assert body["convention"] == "forman-strict"
    assert body["counts"] == [1, 0]
    assert body["critical"] == [["W_0"], []]


def test_matching_endpoint(client):
    resp = client.post("/morse/matching", json=morse_body("interval.json", "interval-f021.json"))
    assert resp.json() == {"pairs": [["W_1", "W_I"]], "unmatched": ["W_0"], "acyclic": True}

    constant = {
        "complex": load_fixture("interval.json"),
        "morse": {"values": {"W_0": "0", "W_1": "0", "W_I": "0"}},
    }
    resp = client.post("/morse/matching", json=constant)
    assert resp.status_code == 400
    assert resp.json()["detail"]["error"] == "InvalidMorseError"


def test_generate_endpoint_is_deterministic(client):
    body = {"complex": load_fixture("circle.json"), "seed": 5}
    first = client.post("/morse/generate", json=body).json()
    second = client.post("/morse/generate", json=body).json()
    assert first == second
    check = client.post(
        "/morse/check", json={"complex": load_fixture("circle.json"), "morse": first}
    )
    assert check.json()["valid"]


def test_collapse_endpoint(client):
    resp = client.post("/morse/collapse", json=morse_body("interval.json", "interval-f021.json"))
    body = resp.json()
    assert body["checks"] == {
        "betti_equal": True,
        "torsion_equal": True,
        "morse_inequalities": True,
        "euler_identity": True,
    }
    assert body["evidence"] == "homological evidence"
    assert body["morse_counts"] == [1, 0]
    assert body["collapsed"] == {"betti": [1], "torsion": [[]]}


def test_nccw_commutative_endpoint(client):
    resp = client.post("/nccw/commutative", json=load_fixture("interval.json"))
    body = resp.json()
    assert body["algebras"] == ["A_0", "A_1"]
    assert body["levels"][0]["lambda"] == 2
    assert body["levels"][0]["fiber"] == [1, 1]
    assert body["levels"][1]["attaching"] == {"I": ["W_0", "W_1"]}


def test_nccw_from_morse_endpoint(client):
    resp = client.post(
        "/nccw/from-morse",
        json=morse_body("interval.json", "interval-f021.json", convention="forman"),
    )
    body = resp.json()
    assert len(body["levels"]) == 1
    assert body["levels"][0]["fiber"] == [1]


def test_nccw_validate_endpoint(client):
    doc = {
        "levels": [
            {"k": 0, "fiber": [1], "lambda": 1, "attaching": {}},
            {"k": 2, "fiber": [1], "lambda": 1, "attaching": {"D": []}},
        ]
    }
    resp = client.post("/nccw/validate", json=doc)
    body = resp.json()
    assert not body["valid"]
    assert "level gap at 1" in body["errors"]
    assert body["note"] == "unitality assumed"


def test_pullback_endpoint(client):
    resp = client.post(
        "/nccw/pullback",
        json={"alpha1": {"entries": [[1, 0], [0, 1]]}, "alpha2": {"entries": [[1, 0], [0, 1]]}},
    )
    body = resp.json()
    assert body["dimension"] == 2
    assert sorted(body["basis"]) == [["0", "1", "0", "1"], ["1", "0", "1", "0"]]


def test_poset_closure_endpoint(client):
    body = {
        "poset": {"elements": ["a", "b", "c"], "covers": [["a", "b"], ["b", "c"]]},
        "subset": ["a"],
    }
    resp = client.post("/poset/closure", json=body)
    assert resp.json() == {"closure": ["a", "b", "c"], "absorbing": False}

    body["subset"] = ["b", "c"]
    resp = client.post("/poset/closure", json=body)
    assert resp.json() == {"closure": ["b", "c"], "absorbing": True}


def test_unprocessable_request_is_422(client):
    resp = client.post("/complex/validate", json={})
    assert resp.status_code == 422
    resp = client.post("/morse/critical", json={"complex": load_fixture("interval.json")})
    assert resp.status_code == 422

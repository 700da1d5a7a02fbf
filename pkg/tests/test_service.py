import pytest
from fastapi.testclient import TestClient

from layerlen.service import app

from conftest import A1_TEXT, A2_TEXT

P2_TEXT = "dims 1=0 2=1 3=1\narrow a = []\narrow b = [[1]]\n"
REGULAR_A1_TEXT = "dims 1=3\narrow a = [[0,0,0],[1,0,0],[0,1,0]]\n"


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_health(client):
    r = client.get("/health")
    assert r.status_code == 200 and r.json()["status"] == "ok"


def test_check(client):
    r = client.post("/check", json={"algebra": A2_TEXT, "name": "A2"})
    assert r.status_code == 200
    body = r.json()
    assert body["dimension"] == 5
    assert body["nil_index"] == 2
    assert body["loewy_length"] == 2
    assert body["basis"] == ["e1", "e2", "e3", "a", "b"]


def test_functor_eval(client):
    r = client.post(
        "/functor-eval",
        json={"algebra": A2_TEXT, "module": P2_TEXT, "functor": "t{2}"},
    )
    assert r.status_code == 200
    assert r.json()["dims"] == {"1": 0, "2": 0, "3": 1}


def test_layer_modes(client):
    base = {"algebra": A2_TEXT, "module": P2_TEXT}
    r = client.post("/layer", json={**base, "alpha": "t{2}", "mode": "radical"})
    assert r.json()["value"] == 1
    r = client.post("/layer", json={**base, "alpha": "q(x{2})", "mode": "socle"})
    assert r.json()["value"] == 1
    r = client.post(
        "/layer", json={**base, "alpha": "t{2}", "beta": "F(t{2})"}
    )
    assert r.json() == {
        "alpha": "t{2}",
        "beta": "rad.t{2}",
        "mode": "general",
        "finite": True,
        "value": 1,
    }
    # infinite general layer length is reported as non-finite
    r = client.post("/layer", json={**base, "alpha": "id", "beta": "id"})
    assert r.json()["finite"] is False and r.json()["value"] is None


def test_verify_endpoint(client):
    r = client.post(
        "/verify",
        json={
            "algebra": A2_TEXT,
            "theorem": "elcoro",
            "samples": 5,
            "max_dim": 3,
            "simples": [["2"]],
        },
    )
    assert r.status_code == 200
    body = r.json()
    assert body["status"] == "pass" and body["failures"] == []
    assert body["seed"] == 0xA17


def test_psi_endpoint(client):
    r = client.post(
        "/psi",
        json={"algebra": A1_TEXT, "module": REGULAR_A1_TEXT, "pd_cap": 8},
    )
    assert r.status_code == 200
    body = r.json()
    assert body["phi"] == 0 and body["psi"] == 0
    assert body["pd"] == {"finite": True, "value": 0}


def test_findim_bound_endpoint(client):
    r = client.post(
        "/findim-bound",
        json={"algebra": A2_TEXT, "simples": [], "mode": "mhlm2"},
    )
    assert r.status_code == 200
    assert r.json()["bound"] == 4
    r = client.post(
        "/findim-bound",
        json={"algebra": A1_TEXT, "simples": ["1"], "mode": "bigteo", "ell": 1},
    )
    assert r.status_code == 200
    body = r.json()
    assert body["status"] == "hypothesis-failed" and body["bound"] is None
    assert any(h["verdict"] == "no" for h in body["hypotheses"])


def test_enumerate_endpoint(client):
    r = client.post("/enumerate", json={"algebra": A2_TEXT, "max_dim": 2})
    assert r.status_code == 200
    body = r.json()
    assert body["count"] == 12
    assert all("text" in m for m in body["modules"])


def test_decompose_endpoint(client):
    r = client.post(
        "/decompose", json={"algebra": A2_TEXT, "module": P2_TEXT}
    )
    assert r.status_code == 200
    body = r.json()
    assert body["witness_ok"] is True
    assert len(body["summands"]) == 1
    assert body["summands"][0]["multiplicity"] == 1


def test_parse_error_envelope(client):
    r = client.post("/check", json={"algebra": "gibberish"})
    assert r.status_code == 400
    assert r.json()["error"]["code"] == "parse"


def test_budget_error_envelope(client):
    r = client.post("/enumerate", json={"algebra": A1_TEXT, "max_dim": 9})
    assert r.status_code == 400
    assert r.json()["error"]["code"] == "budget"


def test_module_text_roundtrips_through_enumerate(client):
    r = client.post("/enumerate", json={"algebra": A2_TEXT, "max_dim": 2})
    sample = r.json()["modules"][-1]["text"]
    r2 = client.post(
        "/functor-eval",
        json={"algebra": A2_TEXT, "module": sample, "functor": "id"},
    )
    assert r2.status_code == 200

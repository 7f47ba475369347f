import json

from fastapi.testclient import TestClient

from nonrep.graphs import complete_graph, icosahedron, serialize_graph
from nonrep.planar import serialize_product_structure
from nonrep.corpus import k5_genus_structure
from nonrep.service import app
from nonrep.treedecomp import heuristic_td, write_td

client = TestClient(app)


def test_healthz():
    r = client.get("/healthz")
    assert r.status_code == 200 and r.json()["status"] == "ok"


def test_colour_path():
    r = client.post("/colour/path", json={"n": 30})
    assert r.status_code == 200
    body = r.json()
    assert body["exit_code"] == 0
    cert = body["certificate"]
    assert cert["schema"] == 1
    assert cert["colouring"]["palette"] <= 4
    assert cert["verdicts"]["boring_walks"]["passed"]
    assert cert["verdicts"]["boring_walks"]["caps"] == {"max_len": 10}


def test_colour_path_rejects():
    assert client.post("/colour/path", json={"n": 0}).status_code == 422
    assert client.post("/colour/path", json={"n": 5, "max_walk": 3}).status_code == 400


def test_colour_tw():
    k4 = complete_graph(4)
    r = client.post("/colour/tw", json={
        "graph": {"text": serialize_graph(k4)},
        "td": write_td(heuristic_td(k4), 4),
    })
    assert r.status_code == 200
    cert = r.json()["certificate"]
    assert cert["bound"] == {"claimed": 64, "certified": True}
    assert cert["colouring"]["palette"] <= 64
    assert all(v["passed"] for v in cert["verdicts"].values())
    assert set(cert["inputs"]) == {"graph", "td"}


def test_colour_tw_mismatched_td():
    r = client.post("/colour/tw", json={
        "graph": {"text": "n 3\n0 1\n1 2\n0 2"},
        "td": "s td 1 2 3\nb 1 1 2\n",
    })
    assert r.status_code == 400


def test_colour_planar_computed():
    r = client.post("/colour/planar", json={
        "graph": {"text": serialize_graph(icosahedron())},
        "compute_structure": True,
    })
    assert r.status_code == 200
    cert = r.json()["certificate"]
    assert cert["bound"]["claimed"] == 768 and cert["bound"]["certified"]
    assert cert["structure"]["ell"] == 3
    assert all(v["passed"] for v in cert["verdicts"].values())


def test_colour_planar_needs_structure_or_flag():
    r = client.post("/colour/planar", json={"graph": {"text": "n 3\n0 1\n0 2\n1 2"}})
    assert r.status_code == 400


def test_colour_genus():
    k5, s5 = k5_genus_structure()
    r = client.post("/colour/genus", json={
        "graph": {"text": serialize_graph(k5)},
        "structure": serialize_product_structure(s5),
    })
    assert r.status_code == 200
    cert = r.json()["certificate"]
    assert cert["bound"]["claimed"] == 768
    assert cert["parameters"]["ell"] == 3


def test_verify_counterexample_exit_code():
    r = client.post("/verify", json={
        "graph": {"text": "n 2\n0 1"},
        "colouring": json.dumps({"palette": 1, "colours": [0, 0]}),
    })
    assert r.status_code == 200
    body = r.json()
    assert body["exit_code"] == 2
    assert not body["certificate"]["verdicts"]["proper"]["passed"]


def test_verify_size_mismatch():
    r = client.post("/verify", json={
        "graph": {"text": "n 2\n0 1"},
        "colouring": "[0]",
    })
    assert r.status_code == 400


def test_bounds_endpoint():
    r = client.post("/bounds", json={"formula": "genus", "g": 5})
    assert r.status_code == 200
    assert r.json()["certificate"]["bound"]["value"] == 2560
    assert client.post("/bounds", json={"formula": "wat"}).status_code == 400
    assert client.post("/bounds", json={"formula": "genus"}).status_code == 400


def test_structure_validate_fail_is_exit_two():
    k5, s5 = k5_genus_structure()
    bad = json.loads(serialize_product_structure(s5))
    bad["placement"][0] = [0, 5, 0]
    r = client.post("/structure/validate", json={
        "graph": {"text": serialize_graph(k5)},
        "structure": json.dumps(bad),
    })
    assert r.status_code == 200
    body = r.json()
    assert body["exit_code"] == 2
    assert not body["certificate"]["verdicts"]["structure"]["passed"]


def test_structure_compute():
    r = client.post("/structure/compute", json={
        "graph": {"text": serialize_graph(complete_graph(4))},
    })
    assert r.status_code == 200
    cert = r.json()["certificate"]
    assert cert["h_width"] <= 3
    assert cert["h_treewidth"] <= 3
    assert cert["structure"]["ell"] == 3


def test_structure_compute_rejects_non_triangulation():
    r = client.post("/structure/compute", json={"graph": {"text": "n 4\n0 1\n1 2\n2 3"}})
    assert r.status_code == 400


def test_graph6_payload():
    r = client.post("/structure/compute", json={
        "graph": {"text": "C~", "format": "graph6"},
    })
    assert r.status_code == 200


def test_certificates_reproducible():
    payload = {"graph": {"text": serialize_graph(complete_graph(4))},
               "td": write_td(heuristic_td(complete_graph(4)), 4)}
    a = client.post("/colour/tw", json=payload).json()
    b = client.post("/colour/tw", json=payload).json()
    assert a == b

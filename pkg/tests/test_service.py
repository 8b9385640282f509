import pytest
from fastapi.testclient import TestClient

from nzcod.construction import nzcod_design
from nzcod.design import DesignMatrix
from nzcod.service.app import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_health(client):
    body = client.get("/health").json()
    assert body["status"] == "ok"


class TestGenerate:
    def test_json_format_round_trips(self, client):
        r = client.post("/designs/generate", json={"a": 3, "format": "json"})
        assert r.status_code == 200
        body = r.json()
        assert body["antennas"] == 8 and body["variables"] == 4
        design = DesignMatrix.from_json_dict(body["design"])
        assert design == nzcod_design(3)

    def test_text_format(self, client):
        r = client.post("/designs/generate",
                        json={"a": 2, "kind": "scod", "format": "text"})
        assert "x1" in r.json()["text"]

    def test_bounds(self, client):
        assert client.post("/designs/generate", json={"a": 9}).status_code == 422
        assert client.post("/designs/generate", json={"a": 0}).status_code == 422


class TestClassify:
    def test_round_trip_classification(self, client):
        payload = nzcod_design(2).to_json_dict()
        r = client.post("/designs/classify", json={"design": payload})
        body = r.json()
        assert body["orthogonal"] and body["zero_count"] == 0
        assert body["interleaved_pairs"] == [[1, 2]]

    def test_bad_payload(self, client):
        r = client.post("/designs/classify", json={"design": {"n": 2}})
        assert r.status_code == 422


class TestVerify:
    def test_all_pass(self, client):
        body = client.post("/verify", json={"a": 4}).json()
        assert body["all_passed"]
        assert {r["name"] for r in body["reports"]} >= {
            "row-supports", "subspace-distance", "coset-disjointness",
            "no-zero-design"}

    def test_deep_gate(self, client):
        assert client.post("/verify", json={"a": 9}).status_code == 422
        body = client.post("/verify", json={"a": 9, "deep": True}).json()
        assert body["all_passed"]


def test_table1_reports_erratum(client):
    body = client.get("/tables/interleaver").json()
    assert len(body["rows"]) == 7
    assert body["matches_up_to_errata"]
    [erratum] = body["errata"]
    assert erratum["a"] == 9 and erratum["column"] == "M_prime"
    assert erratum["computed"] == [7, 42, 146, 200, 394]


def test_zero_fraction_table(client):
    body = client.get("/tables/zero-fraction", params={"a_max": 4}).json()
    by_a = {row["a"]: row for row in body}
    assert by_a[3]["scod_fraction"] == "1/2"
    assert by_a[4]["scod_fraction"] == "11/16"
    assert by_a[4]["r_code_fraction"] == "3/8"
    assert all(row["nzcod_fraction"] == "0" for row in body)


def test_corpus_reports(client):
    body = client.get("/corpus/reports").json()
    by_name = {r["name"]: r for r in body}
    assert all(r["passed"] for r in body)
    assert by_name["gtwms"]["transcription_suspect"]


def test_analyze(client):
    r = client.post("/analyze", json={"a": 3, "kind": "scod",
                                      "constellation": "qam4"})
    body = r.json()
    assert body["zero_fraction"] == 0.5
    assert body["papr"] == pytest.approx(2.0)
    assert client.post("/analyze", json={}).status_code == 422


class TestSimulate:
    def test_small_run(self, client):
        req = {"a": 1, "code": "scod", "constellation": "qam4",
               "constraint": "avg", "snr_grid_db": [0, 10],
               "trials_per_point": 2000, "seed": 3}
        body = client.post("/simulate", json=req).json()
        assert len(body["points"]) == 2
        assert body["points"][0]["ser"] > body["points"][1]["ser"]
        assert body["csv"].splitlines()[0].startswith("code,antennas")

    def test_determinism(self, client):
        req = {"a": 2, "code": "nzcod", "constellation": "qam4",
               "constraint": "peak", "snr_grid_db": [6.0],
               "trials_per_point": 3000, "seed": 17}
        b1 = client.post("/simulate", json=req).json()
        b2 = client.post("/simulate", json=req).json()
        assert b1["points"] == b2["points"]

    def test_caps(self, client):
        base = {"code": "scod", "constellation": "qam4", "constraint": "avg",
                "snr_grid_db": [0], "trials_per_point": 10, "seed": 0}
        assert client.post("/simulate", json={**base, "a": 7}).status_code == 422
        assert client.post(
            "/simulate",
            json={**base, "a": 2, "trials_per_point": 10**6}).status_code == 422

    def test_r3_requires_a3(self, client):
        base = {"code": "r3", "constellation": "qam4", "constraint": "avg",
                "snr_grid_db": [0], "trials_per_point": 10, "seed": 0}
        assert client.post("/simulate", json={**base, "a": 2}).status_code == 422
        assert client.post("/simulate", json={**base, "a": 3}).status_code == 200

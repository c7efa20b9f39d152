"""Headless run of the second visual Turing test against the real API.

Creates a blinded real-vs-synthetic session, lets four scripted readers of
different experience answer every item over HTTP, prints the consensus
scores and renders the summary chart. Also shows that the client payloads
carry no ground truth.

Run: python demos/04_reader_study.py
"""

import json
import tempfile
from pathlib import Path

import numpy as np
from fastapi.testclient import TestClient

from cesmvce.pngio import save_gray16
from cesmvce.report import render_study_chart
from cesmvce.study_api import StudyStore, create_app

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

READERS = [
    {"reader_id": "radiologist-38y", "years_experience": 38},
    {"reader_id": "radiologist-20y", "years_experience": 20},
    {"reader_id": "radiologist-10y", "years_experience": 10},
    {"reader_id": "radiologist-08y", "years_experience": 8},
]


def main() -> None:
    with tempfile.TemporaryDirectory() as tmp:
        tmp = Path(tmp)
        rng = np.random.default_rng(1)
        pool = []
        for i in range(12):
            path = tmp / f"img{i}.png"
            save_gray16(path, rng.random((48, 48)))
            pool.append({"case_id": f"case{i}", "is_real": i < 6,
                         "birads": int(rng.integers(1, 6)), "image": str(path)})

        client = TestClient(create_app(tmp / "study.sqlite"))
        created = client.post("/sessions", json={
            "test_kind": "real_fake_birads", "seed": 9, "readers": READERS,
            "pool": pool, "session_id": "demo",
        }).json()
        print(f"session {created['session_id']}: {created['n_items']} blinded items")

        truth = {it.item_id: it.hidden
                 for it in StudyStore(tmp / "study.sqlite").get_session("demo").items}

        shown_payload = None
        for reader in READERS:
            rid = reader["reader_id"]
            while True:
                nxt = client.get("/sessions/demo/next-item",
                                 params={"reader_id": rid}).json()
                if nxt["done"]:
                    break
                item = nxt["item"]
                if shown_payload is None:
                    shown_payload = item
                hidden = truth[item["item_id"]]
                # Scripted behavior: experienced readers are sharper at spotting
                # synthetic images; everyone is decent at BI-RADS.
                spot_rate = {"radiologist-38y": 0.5, "radiologist-20y": 0.3}.get(rid, 0.15)
                if hidden["ground_truth"] == "synthetic" and rng.random() < spot_rate:
                    choice = "synthetic"
                else:
                    choice = "real"
                birads = hidden["true_birads"] if rng.random() < 0.85 else 1 + (hidden["true_birads"] % 6)
                client.post("/sessions/demo/responses", json={
                    "reader_id": rid, "item_id": item["item_id"],
                    "choice": choice, "birads": birads})

        print("\none client payload (note: no truth, no model names, no paths):")
        print(json.dumps(shown_payload, indent=2))

        scores = client.get("/sessions/demo/scores").json()
        print("\nconsensus scores:")
        for key in ("tpr", "tnr", "accuracy_real", "accuracy_synthetic"):
            print(f"  {key}: {scores[key]:.3f}")

        chart = render_study_chart(scores, OUT / "04_study_chart.png")
        print(f"\nchart -> {chart}")


if __name__ == "__main__":
    main()

"""Record real service responses for the console's contract tests.

Drives the packaged worked example through the HTTP service (in-process
ASGI, fixed clock, so re-recording is reproducible) and writes each
response body byte-for-byte into tests/fixtures/recorded/. The console's
vitest suite asserts its rendering against these exact bytes; nothing in
here is hand-written response data.

Run from the frontend directory:

    python3 scripts/record-fixtures.py
"""

import json
import sys
from importlib import resources
from pathlib import Path

from fastapi.testclient import TestClient

from fahpselect.service.api import Principal, ServiceConfig, create_app
from fahpselect.service.store import MemoryStore

OUT = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "recorded"
FIXTURES = resources.files("fahpselect") / "fixtures"

ADMIN = {"Authorization": "Bearer rec-admin"}


def read_fixture(name: str) -> dict:
    with (FIXTURES / name).open("r", encoding="utf-8") as handle:
        return json.load(handle)


def save(name: str, response) -> None:
    assert response.status_code < 300, f"{name}: {response.status_code} {response.text}"
    (OUT / name).write_bytes(response.content)
    print(f"  {name}: {len(response.content)} bytes")


def dm_headers(dm: str) -> dict:
    return {"Authorization": f"Bearer rec-{dm.lower()}"}


def main() -> int:
    OUT.mkdir(parents=True, exist_ok=True)

    project = read_fixture("project.json")
    hierarchy = read_fixture("hierarchy.json")
    dossiers = read_fixture("dossiers.json")["dossiers"]
    bids = read_fixture("bids.json")["bids"]
    judgments = {
        dm: read_fixture(f"judgments/{dm}.json")["submissions"]
        for dm in hierarchy["decision_makers"]
    }

    tokens = {"rec-admin": Principal("recorder", "admin")}
    for dm in hierarchy["decision_makers"]:
        tokens[f"rec-{dm.lower()}"] = Principal(dm, "decision_maker")
    config = ServiceConfig(
        store=MemoryStore(),
        tokens=tokens,
        clock=lambda: "2026-08-14T00:00:00+00:00",
    )
    client = TestClient(create_app(config))
    pid = project["project_id"]

    save("health.json", client.get("/health"))

    create_body = {
        "project_id": pid,
        "title": project["title"],
        "hierarchy": hierarchy,
        "requirements": project["requirements"],
        "mandatory_requirements": project["mandatory_requirements"],
        "gamma": project["gamma"],
        "estimate": project["estimate"],
        "security_threshold": project["security_threshold"],
    }
    save("create.json", client.post("/projects", json=create_body, headers=ADMIN))

    client.post(f"/projects/{pid}/prescreening", headers=ADMIN)
    for dossier in dossiers:
        client.put(
            f"/projects/{pid}/bidders/{dossier['contractor_id']}/dossier",
            json={"submitted": dossier["submitted"]},
            headers=ADMIN,
        )
    save("prescreen.json", client.post(f"/projects/{pid}/prescreening/run", headers=ADMIN))
    save("contexts.json", client.get(f"/projects/{pid}/contexts", headers=ADMIN))

    # DM1's criteria submission: the worked example's consistency report.
    dm1_criteria = next(s for s in judgments["DM1"] if s["context_id"] == "criteria")
    save(
        "judgment-accepted.json",
        client.put(
            f"/projects/{pid}/judgments/DM1/criteria",
            json={"entries": dm1_criteria["entries"]},
            headers=dm_headers("DM1"),
        ),
    )
    save("snapshot-collection.json", client.get(f"/projects/{pid}", headers=ADMIN))

    for dm, submissions in judgments.items():
        for submission in submissions:
            if dm == "DM1" and submission["context_id"] == "criteria":
                continue
            response = client.put(
                f"/projects/{pid}/judgments/{dm}/{submission['context_id']}",
                json={"entries": submission["entries"]},
                headers=dm_headers(dm),
            )
            body = response.json()
            assert response.status_code == 200 and body["status"] == "complete", (
                f"{dm}/{submission['context_id']}: {response.text}"
            )

    client.post(f"/projects/{pid}/consistency/review", headers=ADMIN)
    client.post(f"/projects/{pid}/evaluation/run", headers=ADMIN)
    save("consistency-reports.json", client.get(f"/projects/{pid}/consistency", headers=ADMIN))
    client.post(f"/projects/{pid}/screening/apply", headers=ADMIN)
    client.post(f"/projects/{pid}/financial/open", headers=ADMIN)
    for bid in bids:
        client.put(
            f"/projects/{pid}/bids/{bid['contractor_id']}",
            json={"price": bid["price"]},
            headers=ADMIN,
        )
    client.post(f"/projects/{pid}/financial/run", headers=ADMIN)

    save("award.json", client.get(f"/projects/{pid}/award", headers=ADMIN))
    save("snapshot-awarded.json", client.get(f"/projects/{pid}", headers=ADMIN))

    # A separate three-bidder drill project supplies the rejected report:
    # an intransitive judgment cycle the service answers with a draft
    # verdict and revision hints.
    drill = {
        "project_id": "drill",
        "title": "Consistency drill",
        "hierarchy": {
            "goal": "Drill",
            "criteria": ["Quality", "Cost"],
            "sub_criteria": {"Quality": ["Q1", "Q2"], "Cost": ["K1"]},
            "alternatives": ["Alpha", "Beta", "Gamma"],
            "decision_makers": ["DM1"],
        },
        "requirements": ["R1"],
        "mandatory_requirements": ["R1"],
        "gamma": 0.1,
        "estimate": "5,000,000.00",
    }
    client.post("/projects", json=drill, headers=ADMIN)
    client.post("/projects/drill/prescreening", headers=ADMIN)
    for cid in drill["hierarchy"]["alternatives"]:
        client.put(
            f"/projects/drill/bidders/{cid}/dossier",
            json={"submitted": ["R1"]},
            headers=ADMIN,
        )
    client.post("/projects/drill/prescreening/run", headers=ADMIN)
    cyclic = [
        {"row": "Alpha", "col": "Beta", "grade": "Extremely Important"},
        {"row": "Beta", "col": "Gamma", "grade": "Extremely Important"},
        {"row": "Alpha", "col": "Gamma", "grade": "Extremely Important", "inverted": True},
    ]
    save(
        "judgment-draft.json",
        client.put(
            "/projects/drill/judgments/DM1/alternatives:Q1",
            json={"entries": cyclic},
            headers=dm_headers("DM1"),
        ),
    )
    return 0


if __name__ == "__main__":
    sys.exit(main())

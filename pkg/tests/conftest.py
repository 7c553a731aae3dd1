import json
from pathlib import Path

import pytest

from fingerlab.io import data_path
from fingerlab.quantum.states import StateSet

BUNDLED_FRAMES = [
    ("etf_m2_n3", 3, 2), ("etf_m2_n4", 4, 2),
    ("etf_m3_n4", 4, 3), ("etf_m3_n6", 6, 3),
    ("etf_m3_n7", 7, 3), ("etf_m3_n9", 9, 3),
    ("etf_m4_n5", 5, 4), ("etf_m4_n7", 7, 4),
    ("etf_m4_n8", 8, 4), ("etf_m4_n13", 13, 4),
    ("etf_m4_n16", 16, 4),
]


def load_frame(name: str) -> StateSet:
    payload = json.loads(Path(data_path("states", f"{name}.json")).read_text())
    return StateSet.from_payload(payload)


@pytest.fixture(scope="session")
def bundled_frames():
    return {name: load_frame(name) for name, _, _ in BUNDLED_FRAMES}

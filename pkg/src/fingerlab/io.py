"""File schemas and canonical serialization.

All emitted JSON is canonical: sorted keys, no floats in classical payloads
(probabilities are "num/den" strings), so files are diff-stable and hashable.
"""

from __future__ import annotations

import hashlib
import json
import os
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .bits import elements_from_mask, mask_from_elements
from .families import SubsetFamily
from .strategies import ClassicalStrategy

__all__ = [
    "canonical_json",
    "content_hash",
    "frac_str",
    "parse_frac",
    "strategy_to_payload",
    "strategy_from_payload",
    "family_to_payload",
    "family_from_payload",
    "load_json",
    "dump_json",
    "data_path",
    "load_bundled",
]

DATA_ENV_VAR = "FINGERLAB_DATA_DIR"


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ": "), indent=1) + "\n"


def content_hash(data) -> str:
    if isinstance(data, (str, Path)):
        blob = Path(data).read_bytes()
    elif isinstance(data, bytes):
        blob = data
    else:
        blob = canonical_json(data).encode()
    return hashlib.sha256(blob).hexdigest()


def frac_str(v: Fraction) -> str:
    v = Fraction(v)
    return f"{v.numerator}/{v.denominator}"


def parse_frac(s) -> Fraction:
    if isinstance(s, Fraction):
        return s
    if isinstance(s, int):
        return Fraction(s)
    return Fraction(str(s))


def strategy_to_payload(s: ClassicalStrategy) -> dict:
    def rows(mat):
        return [[frac_str(v) for v in row] for row in mat]

    if s.binary:
        r = [[int(v) for v in row] for row in s.r]
    else:
        r = rows(s.r)
    return {"n": s.n, "m_a": s.m_a, "m_b": s.m_b,
            "p": rows(s.p), "q": rows(s.q), "r": r}


def strategy_from_payload(payload: dict) -> ClassicalStrategy:
    def mat(rows):
        return tuple(tuple(parse_frac(v) for v in row) for row in rows)

    return ClassicalStrategy(payload["n"], payload["m_a"], payload["m_b"],
                             mat(payload["p"]), mat(payload["q"]),
                             mat(payload["r"]))


def family_to_payload(f: SubsetFamily) -> dict:
    return {"m": f.m, "sets": [list(elements_from_mask(s)) for s in f.sets]}


def family_from_payload(payload: dict) -> SubsetFamily:
    m = payload["m"]
    return SubsetFamily(m, tuple(mask_from_elements(s, m) for s in payload["sets"]))


def load_json(path) -> dict:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def dump_json(path, obj) -> str:
    text = canonical_json(obj)
    Path(path).write_text(text, encoding="utf-8")
    return text


def data_path(*parts) -> Path:
    """Bundled data directory, overridable via FINGERLAB_DATA_DIR."""
    override = os.environ.get(DATA_ENV_VAR)
    if override:
        return Path(override).joinpath(*parts)
    root = resources.files("fingerlab").joinpath("data")
    for part in parts:
        root = root.joinpath(part)
    return Path(str(root))


def load_bundled(*parts) -> dict:
    return load_json(data_path(*parts))

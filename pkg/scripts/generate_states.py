#!/usr/bin/env python3
"""Regenerate the bundled state-set data files in src/fingerlab/data/states.

Most frames come from analytic constructions; the 16-state dimension-4 frame
is found numerically (Weyl-Heisenberg covariant fiducial, frame-potential
descent) and polished by alternating projections to below 1e-13 deviation.
"""

import sys
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from fingerlab.io import dump_json  # noqa: E402
from fingerlab.quantum.etf import (  # noqa: E402
    check_etf,
    conference_etf_dim4,
    difference_set_etf,
    etf_complement,
    icosahedron_etf,
    sic_dim2,
    sic_dim3,
    simplex_etf,
    trine_etf,
)
from fingerlab.quantum.states import StateSet, gram_matrix  # noqa: E402

OUT = Path(__file__).resolve().parents[1] / "src" / "fingerlab" / "data" / "states"


def wh_orbit(fid: np.ndarray) -> np.ndarray:
    d = fid.shape[0]
    w = np.exp(2j * np.pi / d)
    out = []
    for a in range(d):
        for b in range(d):
            v = np.array([w ** (b * i) * fid[(i - a) % d] for i in range(d)])
            out.append(v)
    return np.array(out)


def sic_dim4() -> StateSet:
    d = 4
    rng = np.random.default_rng(11)
    target = 1 / (d + 1)

    def potential(x):
        fid = (x[:d] + 1j * x[d:])
        fid = fid / np.linalg.norm(fid)
        orbit = wh_orbit(fid)
        g = np.abs(orbit @ np.conj(orbit.T)) ** 2
        off = g[~np.eye(d * d, dtype=bool)]
        return float(np.sum((off - target) ** 2))

    best_x, best_val = None, np.inf
    for _ in range(40):
        x = rng.normal(size=2 * d)
        # plain coordinate-wise pattern search; the landscape is benign
        step = 0.5
        val = potential(x)
        while step > 1e-8:
            improved = False
            for i in range(2 * d):
                for sgn in (1.0, -1.0):
                    x2 = x.copy()
                    x2[i] += sgn * step
                    v2 = potential(x2)
                    if v2 < val:
                        x, val = x2, v2
                        improved = True
            if not improved:
                step *= 0.5
        if val < best_val:
            best_x, best_val = x, val
        if best_val < 1e-16:
            break
    fid = best_x[:d] + 1j * best_x[d:]
    fid /= np.linalg.norm(fid)
    vecs = wh_orbit(fid)

    # alternating-projection polish on the Gram matrix
    g = np.conj(vecs) @ vecs.T
    for _ in range(4000):
        mod = np.abs(g)
        ph = np.where(mod > 0, g / np.maximum(mod, 1e-300), 1.0)
        g = np.sqrt(target) * ph
        np.fill_diagonal(g, 1.0)
        w, u = np.linalg.eigh(g)
        w[: d * d - d] = 0.0
        g = (u * w) @ np.conj(u.T)
        dg = np.real(np.diag(g)).copy()
        scale = 1 / np.sqrt(dg)
        g = g * np.outer(scale, scale)
    w, u = np.linalg.eigh(g)
    fac = u[:, -d:] * np.sqrt(np.maximum(w[-d:], 0.0))
    vecs = np.conj(fac)
    vecs /= np.linalg.norm(vecs, axis=1)[:, None]
    return StateSet(vecs)


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    frames = {
        "etf_m2_n3": (trine_etf(), "etf"),
        "etf_m2_n4": (sic_dim2(), "sic"),
        "etf_m3_n4": (simplex_etf(3), "etf"),
        "etf_m3_n6": (icosahedron_etf(), "etf"),
        "etf_m3_n7": (difference_set_etf(7, (1, 2, 4)), "etf"),
        "etf_m3_n9": (sic_dim3(), "sic"),
        "etf_m4_n5": (simplex_etf(4), "etf"),
        "etf_m4_n7": (etf_complement(difference_set_etf(7, (1, 2, 4))), "etf"),
        "etf_m4_n8": (conference_etf_dim4(), "etf"),
        "etf_m4_n13": (difference_set_etf(13, (0, 1, 3, 9)), "etf"),
        "etf_m4_n16": (sic_dim4(), "sic"),
    }
    for name, (states, kind) in frames.items():
        rep = check_etf(states, tol=1e-10)
        if not rep:
            raise SystemExit(f"{name}: not an ETF "
                             f"(angle dev {rep.max_angle_deviation:.2e}, "
                             f"frame dev {rep.max_frame_deviation:.2e})")
        payload = states.to_payload()
        payload["kind"] = kind
        dump_json(OUT / f"{name}.json", payload)
        g = np.abs(gram_matrix(states)) ** 2
        off = g[~np.eye(states.count, dtype=bool)]
        print(f"{name}: n={states.count} m={states.dim} kind={kind} "
              f"overlap={off.max():.15f} dev={rep.max_angle_deviation:.2e}")


if __name__ == "__main__":
    main()

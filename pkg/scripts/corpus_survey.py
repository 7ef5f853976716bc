"""IK and IL verdicts with search statistics over the named-graph corpus.

    python scripts/corpus_survey.py [--ring z|z2] [--quads all|chordless] [--json]
"""

import argparse
import json
import time

from ikdetect.generators import from_name
from ikdetect.il import detect_il
from ikdetect.pipeline import detect_ik

CORPUS = [
    "k4", "k5", "k6", "k7", "k3,3", "k3,3,1", "k3311", "petersen", "octahedron", "cube", "prism",
    "grid:3x3", "wheel:6", "two-triangles", "bridged-triangles", "tree:9:3",
    "random:8:0.6:1", "random:8:0.6:2", "random:8:0.6:3",
]


def survey(ring, quads):
    rows = []
    for name in CORPUS:
        g = from_name(name)
        t = time.perf_counter()
        v = detect_ik(g, ring=ring, quad_mode=quads)
        dt = time.perf_counter() - t
        s = v.stats
        rows.append({
            "graph": name, "n": g.n, "m": g.m, "cycles": s["cycles"], "quads": s["quads"], "z": s["z"],
            "indispensable": s["indispensable"], "examined": s["stringsExamined"], "ik": v.status.value,
            "il": detect_il(g).status, "seconds": round(dt, 3),
        })
    return rows


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--ring", choices=["z", "z2"], default="z")
    ap.add_argument("--quads", choices=["all", "chordless"], default="all")
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    rows = survey(args.ring, args.quads)
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    cols = list(rows[0])
    width = {c: max(len(c), *(len(str(r[c])) for r in rows)) for c in cols}
    print("  ".join(c.rjust(width[c]) for c in cols))
    for r in rows:
        print("  ".join(str(r[c]).rjust(width[c]) for c in cols))


if __name__ == "__main__":
    main()

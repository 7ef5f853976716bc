"""The two known IK graphs, in every ring and quad mode, with timings.

    python scripts/ik_runs.py [--no-indispensable]
"""

import argparse
import time

from ikdetect.generators import from_name
from ikdetect.pipeline import detect_ik, prepare


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--no-indispensable", dest="indispensable", action="store_false")
    ap.add_argument("--graphs", nargs="*", default=["k7", "k3311"])
    args = ap.parse_args()
    for name in args.graphs:
        g = from_name(name)
        for quads in ("chordless", "all"):
            t = time.perf_counter()
            prob = prepare(g, quads)
            prep = time.perf_counter() - t
            for ring in ("z2", "z"):
                t = time.perf_counter()
                v = detect_ik(g, ring=ring, indispensable=args.indispensable, problem=prob)
                s = v.stats
                print(f"{name:6} {quads:9} {ring:2}  {v.status.value:9} cycles={s['cycles']} quads={s['quads']} "
                      f"z={s['z']} indispensable={s['indispensable']} examined={s['stringsExamined']} "
                      f"prep={prep:.2f}s search={time.perf_counter() - t:.2f}s")


if __name__ == "__main__":
    main()

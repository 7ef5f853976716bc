"""How much each search shortcut saves: indispensable equations and nogood skipping.

Runs every combination on a few graphs and reports strings examined,
full strings solved and wall time.  Verdicts must agree across a row.
"""

import argparse
import itertools
import time

from ikdetect.generators import from_name
from ikdetect.pipeline import detect_ik, prepare
from ikdetect.search import Budget


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("graphs", nargs="*", default=["k6", "petersen", "random:8:0.6:1", "random:8:0.6:2", "k7"])
    ap.add_argument("--ring", choices=["z", "z2"], default="z2")
    ap.add_argument("--quads", choices=["all", "chordless"], default="chordless")
    ap.add_argument("--timeout", type=float, default=120.0)
    args = ap.parse_args()
    print(f"{'graph':>16} {'indisp':>6} {'skip':>5} {'verdict':>10} {'examined':>10} {'leaves':>8} {'seconds':>8}")
    for name in args.graphs:
        prob = prepare(from_name(name), args.quads)
        verdicts = set()
        for indisp, skip in itertools.product((True, False), repeat=2):
            t = time.perf_counter()
            v = detect_ik(prob.graph, ring=args.ring, indispensable=indisp, skip=skip,
                          budget=Budget(seconds=args.timeout), problem=prob)
            dt = time.perf_counter() - t
            s = v.stats
            print(f"{name:>16} {indisp!s:>6} {skip!s:>5} {v.status.value:>10} "
                  f"{s['stringsExamined']:>10} {s['leaves']:>8} {dt:>8.2f}")
            if v.status.value != "TIMEOUT":
                verdicts.add(v.status)
        if len(verdicts) > 1:
            print(f"  !! verdicts disagree on {name}: {sorted(x.value for x in verdicts)}")


if __name__ == "__main__":
    main()

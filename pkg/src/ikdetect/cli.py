"""Command-line front end.

Exit status is 0 for any definitive answer, 2 on timeout and 1 for input
errors or a rejected certificate.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass

from . import __version__
from .certificate import Certificate, CertificateError
from .generators import from_name
from .graph import Graph, GraphFormatError, parse_graph
from .il import detect_il, detect_zero_linking, verify_il_certificate
from .pipeline import detect_ik, prepare
from .search import Budget, Status, verify_certificate

EXIT_OK, EXIT_INPUT, EXIT_TIMEOUT = 0, 1, 2


@dataclass
class RunConfig:
    mode: str = "ik"
    ring: str = "z"
    quads: str = "all"
    strict_witness: bool = False
    paper_compat: bool = False
    timeout: float | None = None
    max_nodes: int | None = None
    workers: int = 1
    indispensable: bool = True
    skip: bool = True
    format: str = "text"
    input: str | None = None
    gen: str | None = None
    input_format: str = "auto"
    certificate: str | None = None
    out_certificate: str | None = None
    dump_diagram: str | None = None
    dump_quads: str | None = None


class InputError(Exception):
    pass


def load_graph(cfg: RunConfig) -> Graph:
    if cfg.gen:
        try:
            return from_name(cfg.gen)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    if cfg.input is None:
        raise InputError("no input graph: give a file, '-' for stdin, or --gen NAME")
    try:
        if cfg.input == "-":
            text = sys.stdin.read()
        else:
            with open(cfg.input) as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {cfg.input}: {exc.strerror}") from exc
    try:
        return parse_graph(text, cfg.input_format)
    except GraphFormatError as exc:
        raise InputError(f"malformed graph: {exc}") from exc


def _load_certificate(path: str) -> Certificate:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read certificate {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed certificate: {exc}") from exc
    try:
        return Certificate.from_json(data)
    except CertificateError as exc:
        raise InputError(str(exc)) from exc


def report_stats(report: dict) -> str:
    """Human-readable rendering of a JSON report."""
    lines = [f"verdict: {report['verdict']}"]
    gr = report["graph"]
    lines.append(f"graph: {gr['vertices']} vertices, {gr['edges']} edges")
    st = report.get("stats", {})
    keys = [
        ("cycles", "cycles"),
        ("quads", "quads"),
        ("z", "equations (z)"),
        ("pairs", "disjoint cycle pairs"),
        ("variables", "crossing variables"),
        ("indispensable", "indispensable"),
        ("stringsExamined", "strings examined"),
        ("stringsSkipped", "strings skipped"),
        ("leaves", "full strings solved"),
        ("nogoods", "nogoods recorded"),
    ]
    for key, label in keys:
        if key in st:
            lines.append(f"{label}: {st[key]}")
    cert = report.get("certificate")
    if cert is not None:
        nz = sum(1 for e in cert["entries"] if e["twists"])
        state = {True: "verified", False: "NOT verified", None: "unchecked"}[report.get("certificateVerified")]
        lines.append(f"certificate: ring {cert['ring']}, {nz} nonzero crossing changes, {state}")
    if report.get("timings"):
        lines.append("timings: " + " ".join(f"{k}={v:.3f}s" for k, v in report["timings"].items()))
    return "\n".join(lines) + "\n"


def _graph_block(g: Graph) -> dict:
    return {"vertices": g.n, "edges": g.m, "hash": g.digest()}


def _config_block(cfg: RunConfig) -> dict:
    keep = ("mode", "ring", "quads", "strict_witness", "paper_compat", "indispensable", "skip", "workers")
    return {k: v for k, v in asdict(cfg).items() if k in keep}


def _dump(path, payload):
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")


def run(cfg: RunConfig) -> tuple[int, dict]:
    """Execute one configuration; returns ``(exit status, report)``."""
    g = load_graph(cfg)
    report = {"mode": cfg.mode, "graph": _graph_block(g), "config": _config_block(cfg)}

    if cfg.mode == "verify":
        if not cfg.certificate:
            raise InputError("--mode verify needs --certificate PATH")
        cert = _load_certificate(cfg.certificate)
        try:
            if cert.mode == "ik":
                prob = prepare(g, cert.quads or "all", cfg.strict_witness)
                ok = verify_certificate(g, prob.cycles, prob.quads, prob.link_table, cert)
            elif cert.mode in ("il", "zero-linking"):
                prob = prepare(g, "all")
                ok = verify_il_certificate(g, prob.cycles, prob.link_table, cert)
            else:
                raise InputError(f"malformed certificate: unknown mode {cert.mode!r}")
        except CertificateError as exc:
            ok = False
            report["reason"] = str(exc)
        report["verdict"] = "certificate accepted" if ok else "certificate rejected"
        return (EXIT_OK if ok else EXIT_INPUT), report

    if cfg.mode == "ik":
        prob = prepare(g, cfg.quads, cfg.strict_witness)
        if cfg.dump_diagram:
            _dump(cfg.dump_diagram, prob.diagram.to_json())
        if cfg.dump_quads:
            _dump(cfg.dump_quads, quads_json(prob))
        budget = Budget(cfg.timeout, cfg.max_nodes)
        v = detect_ik(
            g,
            ring=cfg.ring,
            compat=cfg.paper_compat,
            indispensable=cfg.indispensable,
            skip=cfg.skip,
            budget=budget,
            workers=cfg.workers,
            problem=prob,
        )
        report["verdict"] = v.status.value
        report["certificate"] = v.certificate.to_json() if v.certificate else None
        report["certificateVerified"] = (
            verify_certificate(g, prob.cycles, prob.quads, prob.link_table, v.certificate) if v.certificate else None
        )
        report["stats"] = v.stats
        report["timings"] = v.timings
        cert = v.certificate
        status = EXIT_TIMEOUT if v.status is Status.TIMEOUT else EXIT_OK
    elif cfg.mode in ("il", "zero-linking"):
        res = detect_il(g) if cfg.mode == "il" else detect_zero_linking(g)
        report["verdict"] = res.status
        cert = res.certificate
        report["certificate"] = cert.to_json() if cert else None
        if cert is not None:
            prob = prepare(g, "all")
            report["certificateVerified"] = verify_il_certificate(g, prob.cycles, prob.link_table, cert)
        else:
            report["certificateVerified"] = None
        if res.core is not None:
            report["infeasibleCore"] = [list(p) for p in res.core]
        report["stats"] = res.stats
        status = EXIT_OK
    else:
        raise InputError(f"unknown mode {cfg.mode!r}")

    if cfg.out_certificate and cert is not None:
        _dump(cfg.out_certificate, cert.to_json())
    return status, report


def quads_json(prob) -> dict:
    cyc = prob.cycles
    return {
        "cycles": [list(c.vertices) for c in cyc],
        "quads": [{"cycles": list(q.cycles), "witnesses": [list(w) for w in q.witnesses]} for q in prob.quads],
        "equations": [
            {
                "pair": list(e.pair),
                "variables": {f"{prob.variables[v][0]},{prob.variables[v][1]}": c for v, c in sorted(e.coeffs.items())},
                "constant": e.lk,
            }
            for e in prob.equations
        ],
        "related": sorted([list(p) for p in prob.relations.pairs]),
    }


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ikdetect", description="Detect intrinsically knotted / linked graphs.")
    p.add_argument("input", nargs="?", help="edge list or adjacency matrix file ('-' for stdin)")
    p.add_argument("--gen", help="built-in graph instead of a file, e.g. k7, k3311, petersen, cube")
    p.add_argument("--input-format", choices=["auto", "edges", "matrix"], default="auto")
    p.add_argument("--mode", choices=["ik", "il", "zero-linking", "verify"], default="ik")
    p.add_argument("--ring", choices=["z", "z2"], default="z", help="ik mode only")
    p.add_argument("--quads", choices=["all", "chordless"], default="all")
    p.add_argument("--strict-witness", action="store_true", help="shared-vertex witnesses must avoid all paths")
    p.add_argument("--paper-compat", action="store_true", help="accept only integral rational solutions")
    p.add_argument("--timeout", type=float, help="search time limit in seconds")
    p.add_argument("--max-nodes", type=int, help="search node limit")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--no-indispensable", dest="indispensable", action="store_false")
    p.add_argument("--no-skip", dest="skip", action="store_false", help="solve every valid string in full")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--certificate", help="certificate (or report) JSON for --mode verify")
    p.add_argument("--out-certificate", help="write the certificate JSON here")
    p.add_argument("--dump-diagram", help="write the base diagram JSON here")
    p.add_argument("--dump-quads", help="write quads and equations JSON here")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(**vars(args))
    try:
        status, report = run(cfg)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if cfg.format == "json":
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        sys.stdout.write(report_stats(report))
    return status


if __name__ == "__main__":
    sys.exit(main())

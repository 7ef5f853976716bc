"""Crossing-change certificates and their JSON form."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


class CertificateError(ValueError):
    pass


@dataclass(frozen=True)
class Certificate:
    """Crossing changes ``x_kl`` to apply to the base diagram.

    ``twists`` maps a nonadjacent edge pair ``(k, l)`` with ``k < l`` to the
    algebraic number of full twists between the two edges, each oriented
    from its lower to its higher vertex.  In ring ``z2`` only parity counts.
    """

    mode: str  # "ik", "il" or "zero-linking"
    ring: str  # "z" or "z2"
    graph_hash: str
    twists: dict[tuple[int, int], int]
    quads: str | None = None  # "all" / "chordless" for ik certificates
    selection: tuple[tuple[int, int], ...] = field(default=(), compare=False)

    def to_json(self) -> dict:
        out = {
            "mode": self.mode,
            "ring": self.ring,
            "graphHash": self.graph_hash,
            "entries": [{"edgePair": [k, l], "twists": x} for (k, l), x in sorted(self.twists.items())],
        }
        if self.quads is not None:
            out["quads"] = self.quads
        if self.selection:
            out["selectedPairs"] = [list(p) for p in self.selection]
        return out

    @classmethod
    def from_json(cls, data: dict) -> "Certificate":
        if "certificate" in data and "entries" not in data:
            data = data["certificate"]
        if not isinstance(data, dict):
            raise CertificateError("no certificate in document")
        try:
            twists = {}
            for ent in data["entries"]:
                k, l = (int(v) for v in ent["edgePair"])
                x = ent["twists"]
                if not isinstance(x, int) or isinstance(x, bool):
                    raise CertificateError(f"non-integer twist count for pair {k},{l}")
                key = (min(k, l), max(k, l))
                if key in twists:
                    raise CertificateError(f"edge pair {key} listed twice")
                twists[key] = x
            ring = data["ring"]
            if ring not in ("z", "z2"):
                raise CertificateError(f"unknown ring {ring!r}")
            return cls(
                mode=data["mode"],
                ring=ring,
                graph_hash=data["graphHash"],
                twists=twists,
                quads=data.get("quads"),
                selection=tuple(tuple(p) for p in data.get("selectedPairs", ())),
            )
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, CertificateError):
                raise
            raise CertificateError(f"malformed certificate: {exc}") from exc

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def check_universe(cert: Certificate, pairs, graph_hash: str):
    """Reject certificates issued for another graph or variable set."""
    if cert.graph_hash != graph_hash:
        raise CertificateError("certificate was issued for a different graph")
    if set(cert.twists) != set(pairs):
        raise CertificateError(
            f"certificate covers {len(cert.twists)} edge pairs, graph has {len(pairs)} nonadjacent pairs"
        )

"""Search for a D4-less embedding over the equations of all quads.

Each quad contributes two related equations, at least one of which must hold
in a D4-less embedding.  A selection of equations is a 0/1 string over EQ;
it is valid when every related pair has a 1.  Valid strings are walked in
lexicographic order (0 before 1, digit 0 most significant) as a depth-first
search: a 0 at position ``p`` forces every related equation to 1, and the
system of selected equations is kept in incremental GF(2) echelon form.  When
the current selection is infeasible its core is recorded as a nogood and the
search jumps to the next string that no longer contains it.
"""

from __future__ import annotations

import enum
import time
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .linsys import GF2, INTEGER, GF2Eliminator, LinearSystem, Row, solve, solve_gf2
from .quads import Equation, RelationSet

Z = "z"
Z2 = "z2"


class Status(str, enum.Enum):
    IK = "IK"
    D4LESS_Z = "D4LESS_Z"
    D4LESS_Z2 = "D4LESS_Z2"
    TIMEOUT = "TIMEOUT"


@dataclass
class Budget:
    seconds: float | None = None
    nodes: int | None = None


@dataclass
class SearchStats:
    indispensable: int = 0
    strings_examined: int = 0
    strings_skipped: int = 0
    leaves: int = 0
    nogoods: int = 0
    nogood_hits: int = 0
    integer_solves: int = 0

    def as_dict(self) -> dict:
        return dict(self.__dict__)


@dataclass
class SearchResult:
    status: Status
    # variable index -> value; bits for D4LESS_Z2, integers for D4LESS_Z
    solution: dict[int, int] | None = None
    selection: tuple[int, ...] | None = None
    stats: SearchStats = field(default_factory=SearchStats)


def _gf2_rows(eqs: list[Equation]):
    masks, consts = [], []
    for e in eqs:
        m = 0
        for v, c in e.coeffs.items():
            if c % 2:
                m |= 1 << v
        masks.append(m)
        consts.append(e.lk & 1)
    return masks, consts


def _system(eqs: list[Equation], ids, n_vars: int, ring: str) -> LinearSystem:
    return LinearSystem(n_vars, [eqs[i].row() for i in ids], ring)


def indispensable_equations(eqs: list[Equation], rel: RelationSet, n_vars: int, ring: str = Z2):
    """Equations whose related set is infeasible, in EQ order.

    Returns ``(ids, contradiction)`` where ``contradiction`` is true when the
    indispensable equations found so far are jointly infeasible; the scan
    stops at that point.
    """
    lring = GF2 if ring == Z2 else INTEGER
    found = []
    for a in range(len(eqs)):
        nb = sorted(rel.neighbors[a])
        if not nb or solve(_system(eqs, nb, n_vars, lring)) is not None:
            continue
        found.append(a)
        if solve(_system(eqs, found, n_vars, lring)) is None:
            return found, True
    return found, False


class _Search:
    def __init__(self, eqs, rel, n_vars, ring, indispensable, budget, compat, max_nogoods, prefix):
        self.eqs = eqs
        self.z = len(eqs)
        self.n_vars = n_vars
        self.ring = ring
        self.compat = compat
        self.budget = budget or Budget()
        self.partners = [sorted(nb) for nb in rel.neighbors]
        self.masks, self.consts = _gf2_rows(eqs)
        self.indisp = set(indispensable)
        self.prefix = tuple(prefix)
        self.nogoods = deque(maxlen=max_nogoods) if max_nogoods else None
        self.stats = SearchStats(indispensable=len(self.indisp))
        self.deadline = None if self.budget.seconds is None else time.monotonic() + self.budget.seconds

    def _out_of_budget(self) -> bool:
        st = self.stats
        if self.budget.nodes is not None and st.strings_examined >= self.budget.nodes:
            return True
        if self.deadline is not None:
            return time.monotonic() > self.deadline
        return False

    def run(self) -> SearchResult:
        z = self.z
        elim = GF2Eliminator()
        self.elim = elim
        self.ones = 0
        self.forced_by = [None] * z
        # frames[p] = (digit, eliminator mark, equations this decision forced)
        self.frames = []
        self.z2_seen = None

        for e in sorted(self.indisp):
            self.ones |= 1 << e
            if elim.add(self.masks[e], self.consts[e], 1 << e) is not None:
                return SearchResult(Status.IK, stats=self.stats)

        pos = 0
        while True:
            if self._out_of_budget():
                self._count_skipped(self._reached())
                return SearchResult(Status.TIMEOUT, stats=self.stats)
            if pos == z:
                hit = self._leaf()
                if hit is not None:
                    self._count_skipped(self._reached() + 1)
                    return hit
                pos = self._flip(z - 1)
            else:
                pos = self._decide(pos)
            if pos is None:
                self._count_skipped(None)
                if self.z2_seen is not None:
                    sol, sel = self.z2_seen
                    return SearchResult(Status.D4LESS_Z2, sol, sel, self.stats)
                return SearchResult(Status.IK, stats=self.stats)

    def _reached(self) -> int:
        """Offset, within this block, of the first string under the current node."""
        k = len(self.prefix)
        off = 0
        for digit, _, _ in self.frames[k:]:
            off = (off << 1) | digit
        return off << (self.z - len(self.frames))

    def _count_skipped(self, upto):
        """Strings before offset ``upto`` (whole block if None) not solved as leaves."""
        if upto is None:
            upto = 1 << (self.z - len(self.prefix))
        self.stats.strings_skipped = upto - self.stats.leaves

    def _decide(self, pos: int):
        if pos < len(self.prefix):
            want = self.prefix[pos]
            if want == 0 and self.ones >> pos & 1:
                return None
            return self._push(pos, want)
        if self.ones >> pos & 1:
            return self._push(pos, 1)
        return self._push(pos, 0)

    def _push(self, pos: int, digit: int):
        """Set ``pos`` to ``digit``; return the next position, or None when done."""
        core = self._assign(pos, digit)
        if core is None:
            return pos + 1
        return self._flip(self._responsible_max(core))

    def _assign(self, pos: int, digit: int):
        """Set and propagate one digit; return a core mask on conflict."""
        self.stats.strings_examined += 1
        elim = self.elim
        mark = elim.mark()
        forced = []
        if digit == 0:
            for j in self.partners[pos]:
                if j > pos and not self.ones >> j & 1:
                    forced.append(j)
                    self.forced_by[j] = pos
                    self.ones |= 1 << j
            new_rows = forced
        else:
            new_rows = [] if self.ones >> pos & 1 else [pos]
            self.ones |= 1 << pos
        self.frames.append((digit, mark, forced))

        if self.nogoods is not None:
            ones = self.ones
            for ng in self.nogoods:
                if ones & ng == ng:
                    self.stats.nogood_hits += 1
                    return ng
        for j in new_rows:
            core = elim.add(self.masks[j], self.consts[j], 1 << j)
            if core is not None:
                if self.nogoods is not None:
                    self.nogoods.append(core)
                self.stats.nogoods += 1
                return core
        return None

    def _responsible_max(self, core: int) -> int:
        """Last position whose digit forces some equation of the core to 1.

        A decided 1 is its own reason, a forced 1 is blamed on the 0 that
        forced it, an indispensable equation on nothing.
        """
        m = -1
        while core:
            low = core & -core
            e = low.bit_length() - 1
            core ^= low
            if e in self.indisp:
                continue
            r = self.forced_by[e]
            m = max(m, e if r is None else r)
        return m

    def _flip(self, m: int):
        """Go to the first string after all strings sharing digits ``0..m``."""
        frames = self.frames
        lo = len(self.prefix)
        while True:
            q = min(m, len(frames) - 1)
            while q >= lo and frames[q][0] != 0:
                q -= 1
            if q < lo:
                self._unwind(lo)
                return None
            self._unwind(q)
            core = self._assign(q, 1)
            if core is None:
                return q + 1
            m = self._responsible_max(core)

    def _unwind(self, q: int):
        frames = self.frames
        while len(frames) > q:
            digit, mark, forced = frames.pop()
            p = len(frames)
            for j in forced:
                self.forced_by[j] = None
                self.ones &= ~(1 << j)
            if digit == 1 and self.forced_by[p] is None and p not in self.indisp:
                self.ones &= ~(1 << p)
            self.elim.rollback(mark)

    def _selection(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.z) if self.ones >> i & 1)

    def _leaf(self):
        self.stats.leaves += 1
        sel = self._selection()
        x = self.elim.solution()
        bits = {v: (x >> v) & 1 for v in range(self.n_vars)}
        if self.ring == Z2:
            return SearchResult(Status.D4LESS_Z2, bits, sel, self.stats)
        self.stats.integer_solves += 1
        sol = solve(_system(self.eqs, sel, self.n_vars, INTEGER), compat=self.compat)
        if sol is not None:
            return SearchResult(Status.D4LESS_Z, sol, sel, self.stats)
        if self.z2_seen is None:
            self.z2_seen = (bits, sel)
        return None


def _search_plain(eqs, rel, n_vars, ring, indispensable, budget, compat):
    """Every valid string in lexicographic order, each solved from scratch."""
    z = len(eqs)
    budget = budget or Budget()
    deadline = None if budget.seconds is None else time.monotonic() + budget.seconds
    stats = SearchStats(indispensable=len(indispensable))
    partners = [sorted(nb) for nb in rel.neighbors]
    digits = []
    zeros_before = [0] * z  # how many decided zeros are related to each position
    z2_seen = None

    def must_be_one(p):
        return p in indispensable or zeros_before[p] > 0

    def set_digit(p, d):
        digits.append(d)
        if d == 0:
            for j in partners[p]:
                zeros_before[j] += 1

    def pop_digit():
        p = len(digits) - 1
        d = digits.pop()
        if d == 0:
            for j in partners[p]:
                zeros_before[j] -= 1
        return d

    def advance():
        # extend with the smallest valid digits; return False if impossible
        while len(digits) < z:
            p = len(digits)
            set_digit(p, 1 if must_be_one(p) else 0)
        return True

    def successor():
        while digits:
            p = len(digits) - 1
            d = pop_digit()
            if d == 0:
                set_digit(p, 1)
                return advance()
        return False

    # a zero never makes an earlier digit invalid, so greedy extension always yields a valid string
    ok = advance() if z else True
    while ok:
        if deadline is not None and time.monotonic() > deadline:
            return SearchResult(Status.TIMEOUT, stats=stats)
        if budget.nodes is not None and stats.strings_examined >= budget.nodes:
            return SearchResult(Status.TIMEOUT, stats=stats)
        stats.strings_examined += 1
        stats.leaves += 1
        sel = tuple(i for i, d in enumerate(digits) if d)
        bits = solve_gf2(_system(eqs, sel, n_vars, GF2))
        if bits is not None:
            if ring == Z2:
                return SearchResult(Status.D4LESS_Z2, bits, sel, stats)
            stats.integer_solves += 1
            sol = solve(_system(eqs, sel, n_vars, INTEGER), compat=compat)
            if sol is not None:
                return SearchResult(Status.D4LESS_Z, sol, sel, stats)
            if z2_seen is None:
                z2_seen = (bits, sel)
        if not z:
            break
        ok = successor()
    if z2_seen is not None:
        return SearchResult(Status.D4LESS_Z2, z2_seen[0], z2_seen[1], stats)
    return SearchResult(Status.IK, stats=stats)


def _run_block(args):
    eqs, rel, n_vars, ring, indisp, budget, compat, max_nogoods, prefix = args
    return _Search(eqs, rel, n_vars, ring, indisp, budget, compat, max_nogoods, prefix).run()


def search_d4less(
    eqs: list[Equation],
    rel: RelationSet,
    n_vars: int,
    ring: str = Z,
    indispensable=(),
    budget: Budget | None = None,
    skip: bool = True,
    compat: bool = False,
    max_nogoods: int = 64,
    workers: int = 1,
) -> SearchResult:
    """Walk the valid strings; see the module docstring.

    With ``skip=False`` every valid string is solved in full, with no
    nogood bookkeeping, which is the slow reference for the shortcuts.
    """
    indispensable = frozenset(indispensable)
    if not eqs:
        sol = {v: 0 for v in range(n_vars)}
        return SearchResult(Status.D4LESS_Z if ring == Z else Status.D4LESS_Z2, sol, (), SearchStats())
    if not skip:
        return _search_plain(eqs, rel, n_vars, ring, indispensable, budget, compat)
    if workers <= 1:
        return _Search(eqs, rel, n_vars, ring, indispensable, budget, compat, max_nogoods, ()).run()
    return _search_parallel(eqs, rel, n_vars, ring, indispensable, budget, compat, max_nogoods, workers)


def _search_parallel(eqs, rel, n_vars, ring, indisp, budget, compat, max_nogoods, workers):
    """Split the string space into lexicographic blocks by the first digits.

    The answer is the one the sequential walk would give: the first block
    (in lexicographic order) with a decisive D4-less result wins, and IK
    needs every block to be exhausted.
    """
    k = min(len(eqs), max(1, (4 * workers - 1).bit_length()))
    prefixes = [tuple((b >> (k - 1 - i)) & 1 for i in range(k)) for b in range(1 << k)]
    jobs = [(eqs, rel, n_vars, ring, indisp, budget, compat, max_nogoods, p) for p in prefixes]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(_run_block, jobs))
    total = SearchStats(indispensable=len(indisp))
    for r in results:
        for name, val in r.stats.as_dict().items():
            if name != "indispensable":
                setattr(total, name, getattr(total, name) + val)
    want = Status.D4LESS_Z if ring == Z else Status.D4LESS_Z2
    for r in results:
        if r.status is Status.TIMEOUT:
            return SearchResult(Status.TIMEOUT, stats=total)
        if r.status is want:
            return SearchResult(r.status, r.solution, r.selection, total)
    fallback = next((r for r in results if r.status is Status.D4LESS_Z2), None)
    if fallback is not None:
        return SearchResult(Status.D4LESS_Z2, fallback.solution, fallback.selection, total)
    return SearchResult(Status.IK, stats=total)


def _traversal_signs(g, vertices) -> dict[int, int]:
    out = {}
    for i, u in enumerate(vertices):
        v = vertices[(i + 1) % len(vertices)]
        out[g.edge_index[(min(u, v), max(u, v))]] = 1 if u < v else -1
    return out


def updated_linking_number(g, cycles, link_table, twists, a: int, b: int) -> int:
    """``lk(C_a, C_b)`` after applying the twists to the base diagram."""
    key = (min(a, b), max(a, b))
    sa = _traversal_signs(g, cycles[a].vertices)
    sb = _traversal_signs(g, cycles[b].vertices)
    total = link_table[key]
    for (k, l), x in twists.items():
        if not x:
            continue
        if k in sa and l in sb:
            total += x * sa[k] * sb[l]
        elif l in sa and k in sb:
            total += x * sa[l] * sb[k]
    return total


def verify_certificate(g, cycles, quads, link_table, cert) -> bool:
    """Check that every quad has a diagonal pair that is unlinked after the twists.

    Raises ``CertificateError`` when the certificate does not belong to ``g``.
    """
    from .certificate import check_universe
    from .graph import nonadjacent_edge_pairs

    check_universe(cert, nonadjacent_edge_pairs(g), g.digest())
    modulus = 2 if cert.ring == Z2 else None
    for q in quads:
        ok = False
        for a, b in q.diagonals:
            lk = updated_linking_number(g, cycles, link_table, cert.twists, a, b)
            if (lk % modulus if modulus else lk) == 0:
                ok = True
                break
        if not ok:
            return False
    return True

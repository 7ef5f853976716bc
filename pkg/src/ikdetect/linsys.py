"""Exact linear systems over GF(2), the rationals and the integers.

A row is ``sum(coeffs[v] * x_v) == const``.  Every solver sets free
variables to zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

GF2 = "gf2"
INTEGER = "int"


@dataclass(frozen=True)
class Row:
    eq: int
    coeffs: dict[int, int]
    const: int


@dataclass
class LinearSystem:
    n_vars: int
    rows: list[Row] = field(default_factory=list)
    ring: str = GF2

    def __post_init__(self):
        for r in self.rows:
            bad = [v for v in r.coeffs if not 0 <= v < self.n_vars]
            if bad:
                raise ValueError(f"row {r.eq} uses variables {bad} outside 0..{self.n_vars - 1}")

    def residual(self, x: dict[int, int | Fraction]) -> list:
        out = []
        for r in self.rows:
            lhs = sum(c * x.get(v, 0) for v, c in r.coeffs.items())
            out.append((lhs - r.const) % 2 if self.ring == GF2 else lhs - r.const)
        return out

    def subsystem(self, eqs) -> "LinearSystem":
        keep = set(eqs)
        return LinearSystem(self.n_vars, [r for r in self.rows if r.eq in keep], self.ring)

    def to_text(self) -> str:
        lines = [f"# ring={self.ring} vars={self.n_vars}"]
        for r in self.rows:
            terms = " ".join(f"{c:+d}*x{v}" for v, c in sorted(r.coeffs.items()))
            lines.append(f"{r.eq}: {terms or '0'} = {r.const}")
        return "\n".join(lines) + "\n"


def _mask(coeffs: dict[int, int]) -> int:
    m = 0
    for v, c in coeffs.items():
        if c % 2:
            m |= 1 << v
    return m


class GF2Eliminator:
    """Incremental echelon form over GF(2) with bit-packed rows.

    Each stored row remembers which input rows were XORed into it
    (``prov``, a bitmask of caller-chosen ids), so a contradiction comes
    with the set of inputs that produced it.  ``mark``/``rollback`` undo
    insertions in stack order.
    """

    def __init__(self):
        self.pivots: dict[int, tuple[int, int, int]] = {}
        self._log: list[int] = []

    def __len__(self):
        return len(self.pivots)

    def reduce(self, row: int, const: int, prov: int):
        pivots = self.pivots
        while row:
            low = row & -row
            hit = pivots.get(low)
            if hit is None:
                break
            row ^= hit[0]
            const ^= hit[1]
            prov ^= hit[2]
        return row, const, prov

    def add(self, row: int, const: int, prov: int):
        """Insert a row; return ``None`` if still consistent, else the core mask."""
        row, const, prov = self.reduce(row, const & 1, prov)
        if row:
            low = row & -row
            self.pivots[low] = (row, const, prov)
            self._log.append(low)
            return None
        return prov if const else None

    def mark(self) -> int:
        return len(self._log)

    def rollback(self, mark: int):
        while len(self._log) > mark:
            del self.pivots[self._log.pop()]

    def solution(self) -> int:
        """Bitmask of variables set to 1 in a solution with free variables 0."""
        x = 0
        for low in sorted(self.pivots, reverse=True):
            row, const, _ = self.pivots[low]
            if (bin(row & x & ~low).count("1") & 1) ^ const:
                x |= low
        return x


def _gf2_run(sys: LinearSystem):
    elim = GF2Eliminator()
    for i, r in enumerate(sys.rows):
        core = elim.add(_mask(r.coeffs), r.const, 1 << i)
        if core is not None:
            return elim, core
    return elim, None


def solve_gf2(sys: LinearSystem) -> dict[int, int] | None:
    elim, core = _gf2_run(sys)
    if core is not None:
        return None
    x = elim.solution()
    return {v: (x >> v) & 1 for v in range(sys.n_vars)}


def solve_rational(sys: LinearSystem) -> dict[int, Fraction] | None:
    """Gauss-Jordan elimination over the rationals."""
    sol, _ = _rational_run(sys)
    return sol


def _rational_run(sys: LinearSystem):
    # rows as (dense coefficients, const, set of input row positions)
    work = []
    for i, r in enumerate(sys.rows):
        vec = [Fraction(0)] * sys.n_vars
        for v, c in r.coeffs.items():
            vec[v] = Fraction(c)
        work.append((vec, Fraction(r.const), {i}))
    pivots = []  # (column, row) in reduced form
    for vec, const, prov in work:
        for col, (pvec, pconst, pprov) in pivots:
            f = vec[col]
            if f:
                vec = [a - f * b for a, b in zip(vec, pvec)]
                const -= f * pconst
                prov = prov | pprov
        col = next((j for j, a in enumerate(vec) if a), None)
        if col is None:
            if const:
                return None, prov
            continue
        piv = vec[col]
        vec = [a / piv for a in vec]
        const /= piv
        new_pivots = []
        for c2, (pvec, pconst, pprov) in pivots:
            f = pvec[col]
            if f:
                pvec = [a - f * b for a, b in zip(pvec, vec)]
                pconst -= f * const
                pprov = pprov | prov
            new_pivots.append((c2, (pvec, pconst, pprov)))
        pivots = new_pivots + [(col, (vec, const, prov))]
    x = {v: Fraction(0) for v in range(sys.n_vars)}
    for col, (_, const, _) in pivots:
        x[col] = const
    return x, None


def _ext_gcd(a: int, b: int):
    if b == 0:
        return (abs(a), 1 if a >= 0 else -1, 0)
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def solve_integer(sys: LinearSystem) -> dict[int, int] | None:
    """Exact integer solvability through a column Hermite form.

    Unimodular column operations bring ``A`` to lower echelon form
    ``H = A U``; ``H y = b`` is solved by forward substitution, which is
    integral iff every pivot division is exact and every pivot-free row is
    already satisfied.  Then ``x = U y``.
    """
    n, m = sys.n_vars, len(sys.rows)
    # column j holds A[:, j] followed by U[:, j]
    cols = [[0] * (m + n) for _ in range(n)]
    for i, r in enumerate(sys.rows):
        for v, c in r.coeffs.items():
            cols[v][i] = c
    for j in range(n):
        cols[j][m + j] = 1

    pivot_of_row = []
    rank = 0
    for i in range(m):
        if rank == n:
            pivot_of_row.append(None)
            continue
        for k in range(rank + 1, n):
            bk = cols[k][i]
            if bk == 0:
                continue
            a = cols[rank][i]
            g, s, t = _ext_gcd(a, bk)
            u, w = -bk // g, a // g
            cj, ck = cols[rank], cols[k]
            cols[rank] = [s * x + t * y for x, y in zip(cj, ck)]
            cols[k] = [u * x + w * y for x, y in zip(cj, ck)]
        p = cols[rank][i]
        if p == 0:
            pivot_of_row.append(None)
            continue
        if p < 0:
            cols[rank] = [-x for x in cols[rank]]
            p = -p
        piv = cols[rank]
        # keep entries left of the pivot reduced modulo it
        for j in range(rank):
            q = cols[j][i] // p
            if q:
                cols[j] = [x - q * y for x, y in zip(cols[j], piv)]
        pivot_of_row.append(rank)
        rank += 1

    y = [0] * rank
    for i, r in enumerate(sys.rows):
        val = r.const - sum(cols[j][i] * y[j] for j in range(rank))
        p = pivot_of_row[i]
        if p is None:
            if val:
                return None
            continue
        q, rem = divmod(val, cols[p][i])
        if rem:
            return None
        y[p] = q
    return {v: sum(cols[j][m + v] * y[j] for j in range(rank) if y[j]) for v in range(n)}


def solve_integer_heuristic(sys: LinearSystem) -> dict[int, int] | None:
    """Accept the rational solution only when it happens to be integral."""
    x = solve_rational(sys)
    if x is None or any(q.denominator != 1 for q in x.values()):
        return None
    return {v: int(q) for v, q in x.items()}


def solve(sys: LinearSystem, compat: bool = False):
    if sys.ring == GF2:
        return solve_gf2(sys)
    return solve_integer_heuristic(sys) if compat else solve_integer(sys)


def infeasible_core(sys: LinearSystem) -> list[int]:
    """Equation ids of an infeasible subsystem found during elimination.

    GF(2) cores come from row-combination bookkeeping and are minimal: the
    rows involved have exactly one linear dependency.  An integer system that
    is rationally infeasible gets its rational core; one that is only
    integrally infeasible is shrunk by deletion.
    """
    if sys.ring == GF2:
        _, core = _gf2_run(sys)
        if core is None:
            raise ValueError("system is feasible over GF(2)")
        return [r.eq for i, r in enumerate(sys.rows) if core >> i & 1]
    _, prov = _rational_run(sys)
    if prov is not None:
        return [r.eq for i, r in enumerate(sys.rows) if i in prov]
    if solve_integer(sys) is not None:
        raise ValueError("system is feasible over the integers")
    keep = list(sys.rows)
    i = 0
    while i < len(keep):
        trial = keep[:i] + keep[i + 1 :]
        if solve_integer(LinearSystem(sys.n_vars, trial, sys.ring)) is None:
            keep = trial
        else:
            i += 1
    return [r.eq for r in keep]

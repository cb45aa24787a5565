"""The placement delivery array type, its defining-condition checker, and
parameter extraction."""

from __future__ import annotations

import json
import math
from collections import Counter, defaultdict
from dataclasses import dataclass, replace
from fractions import Fraction

from .errors import PreconditionUnmet

STAR = None  # star cells are stored as None


@dataclass(frozen=True)
class Pda:
    """F x K grid whose cells are None (star) or an integer symbol id.

    ``labels`` optionally maps a symbol id to its construction label
    (e, n_e): the m-vector e and its occurrence order within a column.
    """

    grid: tuple
    labels: dict | None = None
    meta: dict | None = None

    @property
    def F(self):
        return len(self.grid)

    @property
    def K(self):
        return len(self.grid[0]) if self.grid else 0

    @property
    def symbols(self):
        return sorted({c for row in self.grid for c in row if c is not None})

    @property
    def S(self):
        return len({c for row in self.grid for c in row if c is not None})

    def symbol_positions(self):
        """Map symbol id -> list of (row, col) cells holding it."""
        pos = defaultdict(list)
        for j, row in enumerate(self.grid):
            for k, c in enumerate(row):
                if c is not None:
                    pos[c].append((j, k))
        return pos

    def to_json(self):
        obj = {
            "F": self.F,
            "K": self.K,
            "grid": [list(row) for row in self.grid],
        }
        if self.labels is not None:
            obj["labels"] = {
                str(s): {"e": list(e), "n": n} for s, (e, n) in self.labels.items()
            }
        if self.meta is not None:
            obj["meta"] = self.meta
        return json.dumps(obj)

    @classmethod
    def from_json(cls, text):
        obj = json.loads(text)
        grid = tuple(tuple(row) for row in obj["grid"])
        if len(grid) != obj["F"] or (grid and len(grid[0]) != obj["K"]):
            raise ValueError("declared F/K do not match the grid")
        labels = None
        if "labels" in obj:
            labels = {
                int(s): (tuple(d["e"]), d["n"]) for s, d in obj["labels"].items()
            }
        return cls(grid, labels, obj.get("meta"))


def pda_from_grid(rows, labels=None, meta=None):
    return Pda(tuple(tuple(r) for r in rows), labels, meta)


@dataclass(frozen=True)
class Verdict:
    """Result of checking the PDA condition; witness locates a violating
    2x2 subarray as (j1, k1, j2, k2) when rejected."""

    ok: bool
    witness: tuple | None = None
    reason: str | None = None

    def __bool__(self):
        return self.ok


def verify_pda(p):
    """Check condition C1: equal symbols lie in distinct rows and columns,
    and the opposite corners of their 2x2 subarray are stars."""
    for row in p.grid:
        if len(row) != p.K:
            return Verdict(False, None, "ragged grid")
    for s, cells in p.symbol_positions().items():
        for i in range(len(cells)):
            j1, k1 = cells[i]
            for j2, k2 in cells[i + 1 :]:
                if j1 == j2 or k1 == k2:
                    return Verdict(
                        False, (j1, k1, j2, k2), f"symbol {s} repeats in a row/column"
                    )
                if p.grid[j1][k2] is not None or p.grid[j2][k1] is not None:
                    return Verdict(
                        False, (j1, k1, j2, k2), f"corners of symbol {s} are not stars"
                    )
    return Verdict(True)


def star_counts(p):
    """Stars per column."""
    return [sum(p.grid[j][k] is None for j in range(p.F)) for k in range(p.K)]


def is_regular(p):
    """Common per-column star count Z, or None (plus the per-column counts)."""
    counts = star_counts(p)
    if counts and all(c == counts[0] for c in counts):
        return counts[0], counts
    return None, counts


@dataclass(frozen=True)
class PdaParams:
    K: int
    F: int
    S: int
    Z: int | None  # common star count, None when irregular
    Z_cols: tuple
    R: Fraction
    gain_histogram: dict
    min_gain: int
    max_gain: int


def pda_params(p):
    """Measure (K, F, Z, S), the exact load R = S/F, and the gain histogram
    (occurrence count per symbol)."""
    z, z_cols = is_regular(p)
    gains = Counter(len(v) for v in p.symbol_positions().values())
    s_count = p.S
    return PdaParams(
        K=p.K,
        F=p.F,
        S=s_count,
        Z=z,
        Z_cols=tuple(z_cols),
        R=Fraction(s_count, p.F) if p.F else Fraction(0),
        gain_histogram=dict(gains),
        min_gain=min(gains) if gains else 0,
        max_gain=max(gains) if gains else 0,
    )


def normalize_symbols(p):
    """Relabel symbols to 0..S-1 by first appearance in a row-major scan."""
    mapping = {}
    for row in p.grid:
        for c in row:
            if c is not None and c not in mapping:
                mapping[c] = len(mapping)
    grid = tuple(
        tuple(mapping[c] if c is not None else None for c in row) for row in p.grid
    )
    labels = None
    if p.labels is not None:
        labels = {mapping[s]: lab for s, lab in p.labels.items() if s in mapping}
    return replace(p, grid=grid, labels=labels)


@dataclass(frozen=True)
class LowerBoundReport:
    R: Fraction
    load_bound: int  # (q-1)^t
    load_ok: bool
    load_tight: bool
    F: int
    subpacketization_bound: int  # q^(m-t), binding only when load is tight
    subpacketization_ok: bool | None  # None when the load bound is not tight


def check_lower_bounds(p, m, t, q):
    """Check the framework lower bounds R >= (q-1)^t and, when R is tight,
    F >= q^(m-t), for a PDA with the full column index set."""
    params = pda_params(p)
    if params.K != math.comb(m, t) * q**t:
        raise PreconditionUnmet(
            f"K={params.K} != C({m},{t})*{q}^{t}; not a full-column framework PDA"
        )
    if params.Z is None or Fraction(params.Z, params.F) != 1 - Fraction(q - 1, q) ** t:
        raise PreconditionUnmet("Z/F does not equal 1 - ((q-1)/q)^t")
    bound = (q - 1) ** t
    tight = params.R == bound
    return LowerBoundReport(
        R=params.R,
        load_bound=bound,
        load_ok=params.R >= bound,
        load_tight=tight,
        F=params.F,
        subpacketization_bound=q ** (m - t),
        subpacketization_ok=(params.F >= q ** (m - t)) if tight else None,
    )


def _star_pattern(row):
    return tuple(c is None for c in row)


def structurally_equal(a, b):
    """Equality up to a row permutation and a consistent relabeling of
    symbols (columns stay fixed).  Backtracking over rows with matching
    star patterns; desk-scale PDAs only."""
    if a.F != b.F or a.K != b.K:
        return False
    candidates = defaultdict(list)
    for j2, row in enumerate(b.grid):
        candidates[_star_pattern(row)].append(j2)

    fwd, bwd = {}, {}  # symbol bijection a -> b and its inverse
    used = [False] * b.F

    def extend(j):
        if j == a.F:
            return True
        for j2 in candidates[_star_pattern(a.grid[j])]:
            if used[j2]:
                continue
            added = []
            ok = True
            for k in range(a.K):
                ca, cb = a.grid[j][k], b.grid[j2][k]
                if ca is None:
                    continue
                if fwd.get(ca, cb) != cb or bwd.get(cb, ca) != ca:
                    ok = False
                    break
                if ca not in fwd:
                    fwd[ca], bwd[cb] = cb, ca
                    added.append((ca, cb))
            if ok:
                used[j2] = True
                if extend(j + 1):
                    return True
                used[j2] = False
            for ca, cb in added:
                del fwd[ca]
                del bwd[cb]
        return False

    return extend(0)

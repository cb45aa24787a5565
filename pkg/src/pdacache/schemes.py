"""Named end-to-end PDA constructions and their closed-form parameters.

Each builder returns the materialized, labeled PDA together with the
parameters the construction promises; ``predict`` gives the closed forms
alone, which is what the large-parameter comparison tables need.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .designs import full_grid, matrix_from_rows, oa_from_mds, oa_trivial
from .errors import BadParams
from .framework import construct, full_column_set, weight_column_set
from .gf import field_new, mds_generate

FAMILIES = ("theorem3", "theorem6", "theorem7", "mn", "szg_first", "szg_second")


@dataclass(frozen=True)
class SchemeSpec:
    family: str
    m: int = 0
    t: int = 0
    q: int = 2
    s: int = 0
    omega: int = 0


@dataclass(frozen=True)
class PredictedParams:
    K: int
    F: int
    Z: int
    S: int
    R: Fraction
    gain: int | None  # common coded gain when the construction promises one

    @property
    def memory_ratio(self):
        return Fraction(self.Z, self.F)


def _weight_s_rows(m, s):
    """All binary m-vectors of weight s, lexicographic order."""
    rows = []
    for positions in itertools.combinations(range(m), s):
        v = [0] * m
        for p in positions:
            v[p] = 1
        rows.append(tuple(v))
    rows.sort()
    return rows


def predict_theorem3(m, s, t, omega):
    if not (0 <= omega <= t <= s <= m and s + t - 2 * omega <= m and t >= 1):
        raise BadParams(f"theorem3 needs 0 <= omega <= t <= s <= m and s+t-2*omega <= m")
    K = math.comb(t, omega) * math.comb(m, t)
    F = math.comb(m, s)
    Z = F - math.comb(m - t, s - omega)
    # Every weight-(s+t-2*omega) vector occurs iff a valid row exists for
    # it, which needs s+t-omega <= m; otherwise the array is all stars.
    S = math.comb(m, s + t - 2 * omega) if s + t - omega <= m else 0
    gain = K * (F - Z) // S if S else None
    return PredictedParams(K, F, Z, S, Fraction(S, F), gain)


def build_theorem3(m, s, t, omega):
    """Binary weight-s rows with weight-(t - omega) column targets."""
    pred = predict_theorem3(m, s, t, omega)
    matrix = matrix_from_rows(_weight_s_rows(m, s), m, 2)
    columns = weight_column_set(m, t, omega)
    meta = {"scheme": "theorem3", "m": m, "s": s, "t": t, "omega": omega, "q": 2}
    return construct(matrix, columns, meta), pred


def predict_theorem6(m, t, q):
    if not (0 < t < m and q >= 2):
        raise BadParams(f"theorem6 needs 0 < t < m and q >= 2, got ({m}, {t}, {q})")
    K = math.comb(m, t) * q**t
    F = q ** (m - 1)
    Z = F - (q - 1) ** t * q ** (m - t - 1)
    S = (q - 1) ** t * q ** (m - 1)
    return PredictedParams(K, F, Z, S, Fraction(S, F), math.comb(m, t))


def build_theorem6(m, t, q):
    """Sum-coordinate orthogonal array rows with the full column set."""
    pred = predict_theorem6(m, t, q)
    matrix = oa_trivial(m, q)
    columns = full_column_set(m, t, q)
    meta = {"scheme": "theorem6", "m": m, "t": t, "q": q}
    return construct(matrix, columns, meta), pred


def predict_theorem7(m, t, q):
    if not (t >= 1 and 2 * t <= m):
        raise BadParams(f"theorem7 needs 1 <= t and 2t <= m, got ({m}, {t})")
    K = math.comb(m, t) * q**t
    F = q ** (m - t)
    Z = F - (q - 1) ** t * q ** (m - 2 * t)
    S = q**m - q ** (m - t)
    return PredictedParams(K, F, Z, S, Fraction(S, F), None)


def build_theorem7(m, t, q):
    """MDS codewords as rows with the full column set.

    Raises MdsUnavailable (via the code generator) when m > q + 1.
    """
    pred = predict_theorem7(m, t, q)
    code = mds_generate(field_new(q), m, m - t)
    matrix = oa_from_mds(code)
    columns = full_column_set(m, t, q)
    meta = {"scheme": "theorem7", "m": m, "t": t, "q": q}
    return construct(matrix, columns, meta), pred


def predict_szg_second(m, t, q):
    if not (0 < t < m and q >= 2):
        raise BadParams(f"szg_second needs 0 < t < m and q >= 2, got ({m}, {t}, {q})")
    K = math.comb(m, t) * q**t
    F = q**m
    Z = F - (q - 1) ** t * q ** (m - t)
    S = (q - 1) ** t * q**m
    return PredictedParams(K, F, Z, S, Fraction(S, F), math.comb(m, t))


def build_szg_second(m, t, q):
    """Full grid [0, q)^m as rows with the full column set (baseline)."""
    pred = predict_szg_second(m, t, q)
    matrix = full_grid(m, q)
    columns = full_column_set(m, t, q)
    meta = {"scheme": "szg_second", "m": m, "t": t, "q": q}
    return construct(matrix, columns, meta), pred


def build_szg_first(m, s, t):
    """Theorem 3 with omega = 0."""
    pda, pred = build_theorem3(m, s, t, 0)
    return pda, pred


def build_mn(k, cache_level):
    """The classic scheme with K = k users each caching a cache_level/k
    fraction: theorem3 with t = 1, omega = 0, s = cache_level."""
    if not 1 <= cache_level < k:
        raise BadParams(f"mn needs 1 <= cache_level < k, got ({k}, {cache_level})")
    return build_theorem3(k, cache_level, 1, 0)


_PREDICTORS = {
    "theorem3": lambda sp: predict_theorem3(sp.m, sp.s, sp.t, sp.omega),
    "theorem6": lambda sp: predict_theorem6(sp.m, sp.t, sp.q),
    "theorem7": lambda sp: predict_theorem7(sp.m, sp.t, sp.q),
    "szg_first": lambda sp: predict_theorem3(sp.m, sp.s, sp.t, 0),
    "szg_second": lambda sp: predict_szg_second(sp.m, sp.t, sp.q),
    "mn": lambda sp: predict_theorem3(sp.m, sp.s, 1, 0),
}


def predict(spec):
    """Closed-form parameters without materializing the PDA."""
    if spec.family not in _PREDICTORS:
        raise BadParams(f"unknown scheme family {spec.family!r}")
    return _PREDICTORS[spec.family](spec)


def build(spec):
    """Materialize the PDA for a scheme spec."""
    if spec.family == "theorem3":
        return build_theorem3(spec.m, spec.s, spec.t, spec.omega)
    if spec.family == "theorem6":
        return build_theorem6(spec.m, spec.t, spec.q)
    if spec.family == "theorem7":
        return build_theorem7(spec.m, spec.t, spec.q)
    if spec.family == "szg_first":
        return build_szg_first(spec.m, spec.s, spec.t)
    if spec.family == "szg_second":
        return build_szg_second(spec.m, spec.t, spec.q)
    if spec.family == "mn":
        return build_mn(spec.m, spec.s)
    raise BadParams(f"unknown scheme family {spec.family!r}")

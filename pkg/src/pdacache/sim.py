"""End-to-end caching simulation driven by a PDA: split files into packets,
fill per-user caches from the star pattern, broadcast one XOR signal per
symbol, and let every user reassemble its demanded file."""

from __future__ import annotations

import base64
import json
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import BadLength, DecodeFailure


@dataclass(frozen=True)
class CachingInstance:
    files: tuple  # N byte strings of equal length
    pda: "Pda"
    demand: tuple  # length K, entries in [0, N)

    def __post_init__(self):
        n = len(self.files)
        if self.pda.K > n:
            raise ValueError(f"need K <= N, got K={self.pda.K}, N={n}")
        length = len(self.files[0])
        if any(len(w) != length for w in self.files):
            raise BadLength("all files must have equal length")
        if self.pda.F and length % self.pda.F:
            raise BadLength(f"file length {length} not divisible by F={self.pda.F}")
        if len(self.demand) != self.pda.K:
            raise ValueError("demand length must equal K")
        if any(not 0 <= d < n for d in self.demand):
            raise ValueError("demand entries must lie in [0, N)")

    @property
    def N(self):
        return len(self.files)

    @property
    def packet_size(self):
        return len(self.files[0]) // self.pda.F

    def packet(self, n, j):
        """Packet j of file n (contiguous byte slice)."""
        size = self.packet_size
        return self.files[n][j * size : (j + 1) * size]


def random_instance(pda, seed=0, packet_bytes=4, demand=None):
    """Seeded instance with N = K files of packet_bytes * F bytes each and
    the all-distinct default demand d_k = k."""
    rng = random.Random(seed)
    n = max(pda.K, 1)
    length = packet_bytes * max(pda.F, 1)
    files = tuple(rng.randbytes(length) for _ in range(n))
    if demand is None:
        demand = tuple(range(pda.K))
    return CachingInstance(files, pda, tuple(demand))


def place(inst):
    """Per-user caches: user k holds packet j of every file iff cell (j, k)
    is a star."""
    caches = []
    for k in range(inst.pda.K):
        cache = {}
        for j in range(inst.pda.F):
            if inst.pda.grid[j][k] is None:
                for n in range(inst.N):
                    cache[(n, j)] = inst.packet(n, j)
        caches.append(cache)
    return caches


def _xor(a, b):
    return bytes(x ^ y for x, y in zip(a, b))


@dataclass(frozen=True)
class DeliveryTranscript:
    signals: tuple  # one byte string per symbol id, ascending
    F: int

    @property
    def measured_load(self):
        return Fraction(len(self.signals), self.F) if self.F else Fraction(0)

    def to_json(self):
        return json.dumps(
            {
                "S": len(self.signals),
                "signals_b64": [base64.b64encode(s).decode() for s in self.signals],
                "load": f"{len(self.signals)}/{self.F}",
            }
        )


def deliver(inst):
    """One signal per symbol id s, ascending: the XOR over all cells
    (j, k) = s of packet j of user k's demanded file."""
    positions = inst.pda.symbol_positions()
    signals = []
    for s in sorted(positions):
        acc = bytes(inst.packet_size)
        for j, k in positions[s]:
            acc = _xor(acc, inst.packet(inst.demand[k], j))
        signals.append(acc)
    return DeliveryTranscript(tuple(signals), inst.pda.F)


def decode(inst, caches, transcript):
    """Reconstruct every user's demanded file from its cache plus the
    broadcast signals; byte-exact for any PDA satisfying C1."""
    positions = inst.pda.symbol_positions()
    order = {s: i for i, s in enumerate(sorted(positions))}
    recovered = []
    for k in range(inst.pda.K):
        d = inst.demand[k]
        parts = []
        for j in range(inst.pda.F):
            cell = inst.pda.grid[j][k]
            if cell is None:
                parts.append(caches[k][(d, j)])
                continue
            acc = transcript.signals[order[cell]]
            for j2, k2 in positions[cell]:
                if k2 == k:
                    continue
                side = caches[k].get((inst.demand[k2], j2))
                if side is None:
                    raise DecodeFailure(
                        f"user {k} lacks packet ({inst.demand[k2]}, {j2}) "
                        f"needed for symbol {cell}"
                    )
                acc = _xor(acc, side)
            parts.append(acc)
        recovered.append(b"".join(parts))
    return recovered


def measure_load(transcript):
    """Signals sent, normalized by the subpacketization."""
    return transcript.measured_load


def run_round_trip(pda, seed=0, packet_bytes=4, demand=None):
    """Place, deliver, decode; return (instance, transcript, ok)."""
    inst = random_instance(pda, seed=seed, packet_bytes=packet_bytes, demand=demand)
    caches = place(inst)
    transcript = deliver(inst)
    recovered = decode(inst, caches, transcript)
    ok = all(recovered[k] == inst.files[inst.demand[k]] for k in range(inst.pda.K))
    return inst, transcript, ok

"""Append-only JSON-lines store of evaluated constants.

One record per line::

    {"key": "z(3,9)", "prec_bits": 256, "mid": "<decimal>", "rad_log2": -200}

The stored radius ``2**rad_log2`` covers both the evaluation radius and the
error of the decimal midpoint, so reloading never loses the enclosure.
"""

from __future__ import annotations

import json
import math
import random
import re
import threading
from decimal import Decimal, localcontext
from fractions import Fraction
from pathlib import Path
from typing import Callable

from .ball import Ball

CACHE_FILE = "constants.jsonl"

_KEY = re.compile(r"^(z|zr)\((?:(\d+);)?(-?\d+(?:,-?\d+)*)?\)$")


class CacheError(RuntimeError):
    pass


def parse_key(key: str):
    from ..words import IndexVector

    m = _KEY.match(key)
    if not m:
        raise CacheError(f"malformed cache key {key!r}")
    k0 = int(m.group(2) or 0)
    args = [int(x) for x in m.group(3).split(",")] if m.group(3) else []
    return IndexVector.from_signed(args, k0)


def _encode(ball: Ball) -> tuple[str, int]:
    digits = math.ceil(ball.bits * math.log10(2)) + 6
    with localcontext() as ctx:
        ctx.prec = digits
        mid = Decimal(ball.mid) / (Decimal(2) ** ball.bits)
    err = abs(Fraction(mid) - ball.mid_q) + ball.rad_q
    if err == 0:
        return str(mid), -ball.bits - 1
    e = math.ceil(math.log2(err))
    while Fraction(2) ** e < err:
        e += 1
    return str(mid), e


def _decode(mid: str, rad_log2: int, bits: int) -> Ball:
    m = Fraction(Decimal(mid))
    r = Fraction(2) ** rad_log2
    return Ball.from_interval(m - r, m + r, bits)


class ConstantCache:
    """Constants keyed by ``(canonical index string, precision bits)``.

    Reads may happen concurrently; writes (memory and file) are serialized.
    A lookup only returns entries stored with at least the requested bits.
    """

    def __init__(self, directory: str | Path | None = None):
        self._lock = threading.Lock()
        self._entries: dict[str, dict[int, Ball]] = {}
        self.path = Path(directory) / CACHE_FILE if directory is not None else None
        self.hits = 0
        self.misses = 0
        if self.path is not None and self.path.exists():
            self._load()

    def _load(self) -> None:
        assert self.path is not None
        with self.path.open(encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                if not line.strip():
                    continue
                try:
                    rec = json.loads(line)
                    ball = _decode(rec["mid"], int(rec["rad_log2"]), int(rec["prec_bits"]))
                except (ValueError, KeyError, TypeError) as exc:
                    raise CacheError(f"{self.path}:{lineno}: bad record ({exc})") from exc
                self._entries.setdefault(rec["key"], {})[ball.bits] = ball

    def validate(self, evaluate: Callable[[object, int], Ball], bits: int = 80, rng: random.Random | None = None) -> str | None:
        """Recompute one random entry at low precision; raise if it disagrees."""
        if not self._entries:
            return None
        rng = rng or random.Random()
        key = rng.choice(sorted(self._entries))
        stored = self._entries[key][max(self._entries[key])]
        fresh = evaluate(parse_key(key), bits)
        if not stored.overlaps(fresh):
            raise CacheError(f"cache entry {key} does not match a fresh evaluation")
        return key

    def get(self, key: str, bits: int) -> Ball | None:
        found = self._entries.get(key)
        if found:
            usable = [b for b in found if b >= bits]
            if usable:
                self.hits += 1
                return found[min(usable)].at_bits(bits)
        self.misses += 1
        return None

    def put(self, key: str, ball: Ball) -> None:
        with self._lock:
            slot = self._entries.setdefault(key, {})
            if ball.bits in slot:
                return
            slot[ball.bits] = ball
            if self.path is not None:
                mid, e = _encode(ball)
                self.path.parent.mkdir(parents=True, exist_ok=True)
                rec = {"key": key, "prec_bits": ball.bits, "mid": mid, "rad_log2": e}
                with self.path.open("a", encoding="utf-8") as fh:
                    fh.write(json.dumps(rec) + "\n")

    def __len__(self) -> int:
        return sum(len(v) for v in self._entries.values())

    def stats(self) -> dict[str, object]:
        return {
            "path": str(self.path) if self.path else None,
            "entries": len(self),
            "keys": len(self._entries),
            "hits": self.hits,
            "misses": self.misses,
        }

    def clear(self) -> None:
        with self._lock:
            self._entries.clear()
            if self.path is not None and self.path.exists():
                self.path.unlink()

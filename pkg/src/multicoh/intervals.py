"""Sets of integers stored as disjoint closed intervals.

Endpoints may be None, meaning the interval is unbounded on that side:
(None, 3) is every integer <= 3, (0, None) is every integer >= 0, and
(None, None) is all of Z.  Intervals are kept sorted, pairwise disjoint
and non-adjacent, so two IntervalSets are equal as sets of integers
exactly when their normalized parts are equal.
"""

from dataclasses import dataclass, field

Part = tuple[int | None, int | None]

_NEG = float("-inf")
_POS = float("inf")


def _lo_key(part: Part):
    return _NEG if part[0] is None else part[0]


def _hi_key(part: Part):
    return _POS if part[1] is None else part[1]


@dataclass(frozen=True)
class IntervalSet:
    """Union of closed integer intervals, normalized on construction."""

    parts: tuple[Part, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "parts", _normalize(self.parts))

    @classmethod
    def empty(cls) -> "IntervalSet":
        return cls(())

    @classmethod
    def of(cls, *parts: Part) -> "IntervalSet":
        return cls(tuple(parts))

    def __bool__(self) -> bool:
        return bool(self.parts)

    @property
    def is_empty(self) -> bool:
        return not self.parts

    @property
    def is_bounded(self) -> bool:
        return all(lo is not None and hi is not None for lo, hi in self.parts)

    def __contains__(self, value: int) -> bool:
        for lo, hi in self.parts:
            if (lo is None or lo <= value) and (hi is None or value <= hi):
                return True
        return False

    def __or__(self, other: "IntervalSet") -> "IntervalSet":
        return IntervalSet(self.parts + other.parts)

    def __iter__(self):
        return iter(self.parts)

    def hull(self) -> Part:
        """Smallest single interval containing the set.  Empty set has no hull."""
        if not self.parts:
            raise ValueError("empty set has no hull")
        return (self.parts[0][0], self.parts[-1][1])

    def values(self) -> list[int]:
        """All members in increasing order.  Unbounded sets raise."""
        if not self.is_bounded:
            raise ValueError("cannot enumerate an unbounded interval set")
        out = []
        for lo, hi in self.parts:
            out.extend(range(lo, hi + 1))
        return out

    def to_json(self) -> list[dict]:
        return [{"lo": lo, "hi": hi} for lo, hi in self.parts]

    def __str__(self) -> str:
        if not self.parts:
            return "{}"
        bits = []
        for lo, hi in self.parts:
            left = "(-inf" if lo is None else f"[{lo}"
            right = "+inf)" if hi is None else f"{hi}]"
            bits.append(f"{left}, {right}")
        return " | ".join(bits)


def _normalize(parts) -> tuple[Part, ...]:
    kept = []
    for lo, hi in parts:
        if lo is not None and hi is not None and lo > hi:
            continue
        kept.append((lo, hi))
    kept.sort(key=lambda p: (_lo_key(p), _hi_key(p)))
    merged: list[Part] = []
    for lo, hi in kept:
        if merged:
            plo, phi = merged[-1]
            # Closed integer intervals also merge when adjacent: [0,1],[2,3] -> [0,3].
            if phi is None or lo is None or lo <= phi + 1:
                if phi is not None and (hi is None or hi > phi):
                    merged[-1] = (plo, hi)
                continue
        merged.append((lo, hi))
    return tuple(merged)

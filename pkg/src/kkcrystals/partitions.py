"""Charged partitions and their crystal structure.

A charged partition is an integer partition together with a charge in
{0, 1}; the box in row r, column c of its Young diagram is labelled
(charge - r + c) mod 2.  On 2-regular charged partitions (all parts
distinct) the label-i addable and removable columns, scanned left to
right, give the i-signature; cancelling "-" immediately followed by "+"
until none remain leaves the reduced i-signature, which drives the
raising and lowering operators e_i and f_i.
"""

from __future__ import annotations

from dataclasses import dataclass

from .weights import Weight, fundamental, simple_root


@dataclass(frozen=True)
class ChargedPartition:
    parts: tuple[int, ...]
    charge: int

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
        if self.charge not in (0, 1):
            raise ValueError("charge must be 0 or 1")
        if any(p <= 0 for p in self.parts):
            raise ValueError("parts must be positive")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError("parts must be weakly decreasing")

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def is_regular(self) -> bool:
        """True iff all parts are distinct (2-regular)."""
        return all(a > b for a, b in zip(self.parts, self.parts[1:]))

    @property
    def bounding_rect(self) -> tuple[int, int]:
        """(largest part, number of parts); (0, 0) for the empty diagram."""
        if not self.parts:
            return (0, 0)
        return (self.parts[0], len(self.parts))

    def display(self) -> str:
        inner = ",".join(str(p) for p in self.parts) if self.parts else "∅"
        return "(%s | c=%d)" % (inner, self.charge)

    def to_json(self) -> dict:
        return {"parts": list(self.parts), "charge": self.charge}

    @classmethod
    def from_json(cls, data: dict) -> "ChargedPartition":
        return cls(tuple(data["parts"]), data["charge"])

    def __str__(self):
        return self.display()


@dataclass(frozen=True)
class Signature:
    """A +/- string with the contributing column of each sign."""

    entries: tuple[tuple[str, int], ...]

    def __post_init__(self):
        cols = [c for _, c in self.entries]
        if any(a >= b for a, b in zip(cols, cols[1:])):
            raise ValueError("columns must be strictly increasing")

    @property
    def signs(self) -> str:
        return "".join(s for s, _ in self.entries)

    @property
    def columns(self) -> tuple[int, ...]:
        return tuple(c for _, c in self.entries)

    def display(self) -> str:
        return " ".join(s for s, _ in self.entries)


def box_label(cp: ChargedPartition, r: int, c: int) -> int:
    """Label of the box in row r, column c (both 1-based)."""
    if r < 1 or r > len(cp.parts) or c < 1 or c > cp.parts[r - 1]:
        raise ValueError("box (%d, %d) is not in the diagram of %s" % (r, c, cp))
    return (cp.charge - r + c) % 2


def _column_height(parts: tuple[int, ...], c: int) -> int:
    return sum(1 for p in parts if p >= c)


def _require_regular(cp: ChargedPartition):
    if not cp.is_regular:
        raise ValueError("crystal operations require distinct parts, got %s" % cp)


def signature(cp: ChargedPartition, i: int) -> Signature:
    """Scan columns 1 .. largest+1 and record '+' for each column where a
    box labelled i is addable at the bottom, '-' where the bottom box is
    labelled i and removable."""
    _require_regular(cp)
    if i not in (0, 1):
        raise ValueError("label must be 0 or 1")
    parts = cp.parts
    top = parts[0] + 1 if parts else 1
    entries = []
    for c in range(1, top + 1):
        h = _column_height(parts, c)
        below = parts[h] if h < len(parts) else 0
        if below == c - 1 and (cp.charge - (h + 1) + c) % 2 == i:
            entries.append(("+", c))
        elif h >= 1 and parts[h - 1] == c and (cp.charge - h + c) % 2 == i:
            entries.append(("-", c))
    return Signature(tuple(entries))


def reduce_signature(sig: Signature) -> Signature:
    """Delete '-' '+' adjacencies until none remain; the survivors are
    always some plus signs followed by some minus signs."""
    stack: list[tuple[str, int]] = []
    for entry in sig.entries:
        if entry[0] == "+" and stack and stack[-1][0] == "-":
            stack.pop()
        else:
            stack.append(entry)
    return Signature(tuple(stack))


def epsilon(cp: ChargedPartition, i: int) -> int:
    """Number of minus signs in the reduced i-signature."""
    return reduce_signature(signature(cp, i)).signs.count("-")


def phi(cp: ChargedPartition, i: int) -> int:
    """Number of plus signs in the reduced i-signature."""
    return reduce_signature(signature(cp, i)).signs.count("+")


def f_op(cp: ChargedPartition, i: int) -> ChargedPartition | None:
    """Add a box labelled i at the bottom of the column of the rightmost
    '+' in the reduced i-signature; None if there is no '+'."""
    reduced = reduce_signature(signature(cp, i))
    plus_cols = [c for s, c in reduced.entries if s == "+"]
    if not plus_cols:
        return None
    c = plus_cols[-1]
    parts = list(cp.parts)
    h = _column_height(cp.parts, c)
    if h < len(parts):
        parts[h] += 1
    else:
        parts.append(1)
    return ChargedPartition(tuple(parts), cp.charge)


def e_op(cp: ChargedPartition, i: int) -> ChargedPartition | None:
    """Remove the bottom box of the column of the leftmost '-' in the
    reduced i-signature; None if there is no '-'."""
    reduced = reduce_signature(signature(cp, i))
    minus_cols = [c for s, c in reduced.entries if s == "-"]
    if not minus_cols:
        return None
    c = minus_cols[0]
    parts = list(cp.parts)
    h = _column_height(cp.parts, c)
    parts[h - 1] -= 1
    if parts[h - 1] == 0:
        del parts[h - 1]
    return ChargedPartition(tuple(parts), cp.charge)


def weight_of(cp: ChargedPartition) -> Weight:
    """Fundamental weight of the charge minus one simple root per box of
    the matching label."""
    counts = [0, 0]
    for r, length in enumerate(cp.parts, start=1):
        lead = (cp.charge - r + 1) % 2
        counts[lead] += (length + 1) // 2
        counts[1 - lead] += length // 2
    return (fundamental(cp.charge)
            - counts[0] * simple_root(0) - counts[1] * simple_root(1))


def conjugate(parts: tuple[int, ...]) -> tuple[int, ...]:
    """Transpose of a partition (column lengths)."""
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= c) for c in range(1, parts[0] + 1))


def gap_conjugate(cp: ChargedPartition) -> tuple[int, ...]:
    """Column lengths of the part of the diagram left after removing the
    tallest staircase, read off a regular charged partition.

    With bounding rectangle (m, n) the result has exactly m - n entries,
    weakly decreasing, each between 1 and n.  These are the step data of
    the LS path matched to the partition.
    """
    _require_regular(cp)
    parts = cp.parts
    n = len(parts)
    gaps = tuple(parts[k] - (n - k) for k in range(n))
    return conjugate(tuple(g for g in gaps if g > 0))


def closed_form_signature(cp: ChargedPartition, i: int) -> str:
    """The i-signature as a block pattern of alternating sign runs whose
    lengths come from the staircase gap data; equals the sign string of
    the direct column scan."""
    _require_regular(cp)
    if not cp.parts:
        raise ValueError("closed form needs a nonempty diagram")
    m, n = cp.bounding_rect
    seq = (n,) + gap_conjugate(cp) + (0,)
    assert len(seq) == m - n + 2
    first_plus = (n % 2) == ((i + cp.charge) % 2)
    out = []
    for k in range(len(seq) - 1):
        run = seq[k] - seq[k + 1] + (1 if k == 0 and first_plus else 0)
        plus_block = (k % 2 == 0) == first_plus
        out.append(("+" if plus_block else "-") * run)
    return "".join(out)


def _distinct_partitions(total: int, max_part: int):
    if total == 0:
        yield ()
        return
    for p in range(min(total, max_part), 0, -1):
        for rest in _distinct_partitions(total - p, p - 1):
            yield (p,) + rest


def enumerate_regular(charge: int, max_boxes: int) -> list[ChargedPartition]:
    """All regular charged partitions with at most max_boxes boxes,
    ordered by size and then by decreasing parts."""
    if max_boxes < 0:
        raise ValueError("max_boxes must be nonnegative")
    out = []
    for size in range(max_boxes + 1):
        for parts in sorted(_distinct_partitions(size, size), reverse=True):
            out.append(ChargedPartition(parts, charge))
    return out

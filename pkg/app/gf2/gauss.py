"""
Modified Gaussian elimination on the cycle–edge matrix over GF(2).

Hàng = chu trình (bitset cạnh). Phần tử chính của mỗi hàng luôn là một dây
cung (chord); các hàng bên dưới chứa dây cung đó được cộng (XOR) với hàng
chính rồi dời xuống cuối ma trận, kèm nhãn là tập chu trình đã cộng vào (mod 2).
Hàng trở thành rỗng ghi lại một phụ thuộc tuyến tính.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from app.config import config
from app.cycles.space import Cycle, CycleSystem, EdgeSet, gf2_rank
from app.errors import BudgetExceeded, CycleError
from app.graph.core import Graph, SpanningTreeSplit
from app.maclane import maclane_f
from app.planar_logging import get_logger

logger = get_logger(__name__)


@dataclass(slots=True)
class GaussTrace:
    input_order: list[int]
    pivot_chords: list[int] = field(default_factory=list)
    row_origin: list[int] = field(default_factory=list)
    row_labels: list[frozenset[int]] = field(default_factory=list)
    rows: list[EdgeSet] = field(default_factory=list)
    zero_rows: list[int] = field(default_factory=list)
    basis_mask: frozenset[int] = frozenset()

    @property
    def independent(self) -> bool:
        return not self.zero_rows

    @property
    def rank(self) -> int:
        return len(self.basis_mask)

    def dependencies(self) -> list[frozenset[int]]:
        return [self.row_labels[i] for i in self.zero_rows]


@dataclass(slots=True)
class PlaneConfiguration:
    members: frozenset[int]
    plane: bool
    rim: EdgeSet | None = None


@dataclass(slots=True)
class _Row:
    origin: int
    bits: int
    label: set[int]


def _chord_bits(split: SpanningTreeSplit) -> int:
    bits = 0
    for h in split.chords:
        bits |= 1 << (h - 1)
    return bits


def modified_gauss(
    g: Graph,
    split: SpanningTreeSplit,
    ordered_cycles: CycleSystem,
    order: Sequence[int] | None = None,
) -> GaussTrace:
    """Eliminate rows top-down with chord pivots; ``order`` picks and orders the
    rows (cycle indices of ``ordered_cycles``), default is all in system order."""
    if ordered_cycles.graph.m != g.m:
        raise CycleError("cycle system belongs to another graph")
    order = list(range(len(ordered_cycles))) if order is None else list(order)
    chord_bits = _chord_bits(split)
    rows = [_Row(k, ordered_cycles[k].edges.bits, {k}) for k in order]
    trace = GaussTrace(input_order=order)

    i = 0
    while i < len(rows):
        row = rows[i]
        if row.bits == 0:
            i += 1
            continue
        lead = row.bits & chord_bits
        if not lead:
            raise CycleError(f"row of cycle {row.origin} has no chord; not a cycle-space element")
        chord = (lead & -lead).bit_length()
        trace.pivot_chords.append(chord)
        pivot_bit = 1 << (chord - 1)
        keep: list[_Row] = []
        hits: list[_Row] = []
        for other in rows[i + 1:]:
            if other.bits & pivot_bit:
                other.bits ^= row.bits
                other.label ^= row.label
                hits.append(other)
            else:
                keep.append(other)
        rows = rows[: i + 1] + keep + hits
        i += 1

    for pos, row in enumerate(rows):
        trace.row_origin.append(row.origin)
        trace.row_labels.append(frozenset(row.label))
        trace.rows.append(EdgeSet(g.m, row.bits))
        if row.bits == 0:
            trace.zero_rows.append(pos)
            logger.debug("gauss zero row: cycle %d, label %s", row.origin, sorted(row.label))
    trace.basis_mask = frozenset(r.origin for r in rows if r.bits)
    return trace


def extract_plane_configs(trace: GaussTrace, sys: CycleSystem) -> list[PlaneConfiguration]:
    configs: list[PlaneConfiguration] = []
    for members in trace.dependencies():
        if sys.xor(members):
            raise CycleError(f"dependency {sorted(members)} does not sum to the empty set")
        configs.append(PlaneConfiguration(members=members, plane=maclane_f(sys, members) == 0))
    return configs


def rim_constrained_configs(
    g: Graph,
    split: SpanningTreeSplit,
    sys: CycleSystem,
    rim_cycles: Sequence[Cycle],
) -> list[PlaneConfiguration]:
    """Append rim cycles as last rows; keep dependencies that use a rim row.

    Member indices refer to the extended system (``sys`` followed by the rims).
    """
    extended = CycleSystem(graph=g, cycles=tuple(sys.cycles) + tuple(rim_cycles))
    trace = modified_gauss(g, split, extended)
    first_rim = len(sys)
    out: list[PlaneConfiguration] = []
    for found in extract_plane_configs(trace, extended):
        rims = sorted(k for k in found.members if k >= first_rim)
        if rims:
            found.rim = extended[rims[0]].edges
            out.append(found)
    return out


def chord_rows(g: Graph, split: SpanningTreeSplit, sys: CycleSystem) -> dict[int, list[int]]:
    """Single-row structural numbers: chord id -> indices of cycles through it."""
    return {
        h: [k for k, c in enumerate(sys.cycles) if h in c.edges]
        for h in sorted(split.chords)
    }


def _transversal_count(rows: list[list[int]], budget: int) -> int:
    """Number of ways to pick one distinct cycle per row (a permanent)."""
    steps = 0
    used: set[int] = set()
    order = sorted(range(len(rows)), key=lambda r: len(rows[r]))

    def walk(depth: int) -> int:
        nonlocal steps
        if depth == len(order):
            return 1
        total = 0
        for k in rows[order[depth]]:
            if k in used:
                continue
            steps += 1
            if steps > budget:
                raise BudgetExceeded(budget)
            used.add(k)
            total += walk(depth + 1)
            used.discard(k)
        return total

    return walk(0)


def transversal_count(
    g: Graph,
    split: SpanningTreeSplit,
    sys: CycleSystem,
    candidate: Sequence[int],
    *,
    budget: int | None = None,
) -> int:
    """How often the candidate occurs in the chord-row product."""
    budget = config.gauss.transversal_budget if budget is None else budget
    if len(set(candidate)) != len(candidate):
        return 0
    chosen = set(candidate)
    rows = [[k for k in row if k in chosen] for row in chord_rows(g, split, sys).values()]
    return _transversal_count(rows, budget)


def parity_independence(
    g: Graph,
    split: SpanningTreeSplit,
    sys: CycleSystem,
    candidate: Sequence[int],
    *,
    budget: int | None = None,
) -> bool:
    """Odd occurrence count means independent, even means dependent."""
    nu = g.cyclomatic_number
    if len(candidate) != nu:
        raise CycleError(f"candidate has {len(candidate)} cycles, cyclomatic number is {nu}")
    count = transversal_count(g, split, sys, candidate, budget=budget)
    logger.debug("parity_independence: %s occurs %d times", list(candidate), count)
    return count % 2 == 1


def running_string_enumerate(
    g: Graph,
    split: SpanningTreeSplit,
    sys: CycleSystem,
    limit: int | None = None,
    *,
    chord_order: Sequence[int] | None = None,
    exclude: Iterable[int] | None = None,
    budget: int | None = None,
) -> Iterator[tuple[int, ...]]:
    """Expand the product of chord rows in lexicographic order (last row fastest).

    Mỗi phần tử là bộ cycle theo thứ tự hàng (một cycle cho mỗi chord). Terms
    with a repeated cycle vanish; the same set may come back from another
    choice order, so its multiplicity is what parity_independence reads.
    ``limit`` caps the emitted terms, ``budget`` the expansion steps.
    """
    budget = config.gauss.transversal_budget if budget is None else budget
    rows_by_chord = chord_rows(g, split, sys)
    chords = list(rows_by_chord) if chord_order is None else list(chord_order)
    if sorted(chords) != sorted(rows_by_chord):
        raise CycleError("chord_order must list every chord exactly once")
    banned = set(exclude or ())
    rows = [[k for k in rows_by_chord[h] if k not in banned] for h in chords]
    if not rows or any(not row for row in rows) or (limit is not None and limit <= 0):
        return

    steps = 0
    emitted = 0
    picks: list[int] = []
    used: set[int] = set()
    # một iterator cho mỗi hàng đang mở
    stack = [iter(rows[0])]
    while stack:
        k = next(stack[-1], None)
        if k is None:
            stack.pop()
            if picks:
                used.discard(picks.pop())
            continue
        if k in used:
            continue
        steps += 1
        if steps > budget:
            raise BudgetExceeded(budget)
        if len(picks) + 1 == len(rows):
            yield (*picks, k)
            emitted += 1
            if limit is not None and emitted >= limit:
                return
            continue
        picks.append(k)
        used.add(k)
        stack.append(iter(rows[len(picks)]))


def random_basis_candidate(
    g: Graph,
    split: SpanningTreeSplit,
    sys: CycleSystem,
    rng: random.Random,
    *,
    budget: int | None = None,
) -> tuple[list[int], bool]:
    """Draw ν cycles at random; report whether they form a basis."""
    nu = g.cyclomatic_number
    candidate = sorted(rng.sample(range(len(sys)), nu))
    try:
        independent = parity_independence(g, split, sys, candidate, budget=budget)
    except BudgetExceeded:
        independent = gf2_rank(sys[k].edges.bits for k in candidate) == nu
    return candidate, independent

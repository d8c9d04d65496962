"""The jumping search: alternate firstfit-driven updates of L and R.

R jumps to the first prefix that can hold prv(L) + q, then L jumps to the
first prefix whose complement inside prv(R) can still be q. After either
update an occurrence ends at R exactly when R - L = |q|.
"""
import logging
from collections.abc import Sequence
from typing import Protocol, runtime_checkable

from jpm.core import check_query
from jpm.errors import CapabilityError, InvariantViolation
from jpm.models import BackendChoices, EncodedText, JumpResult, JumpTrace, LogicalStep, ParikhVector, ProbeCounter
from jpm.prefix_index import INFEASIBLE, InvertedPrefixTable
from jpm.wavelet import WaveletTree

logger = logging.getLogger(__name__)


@runtime_checkable
class JumpIndex(Protocol):
    n: int
    sigma: int

    def firstfit(self, p: Sequence[int], counter: ProbeCounter | None = None) -> int | float: ...

    def prv(
        self,
        j: int,
        lo: Sequence[int] | None = None,
        hi: Sequence[int] | None = None,
        counter: ProbeCounter | None = None,
    ) -> list[int]: ...


def _check_after_r(index: JumpIndex, left: int, right: int, p_left: list[int], q: list[int]) -> None:
    if left > right:
        raise InvariantViolation(f"L={left} passed R={right}")
    p_right = index.prv(right)
    if any(r - l < c for r, l, c in zip(p_right, p_left, q)):
        raise InvariantViolation(f"after R-update prv({right}) - prv({left}) does not dominate q")
    if p_left != index.prv(left):
        raise InvariantViolation(f"maintained prv({left}) is stale")


def _check_after_l(index: JumpIndex, left: int, right: int, p_right: list[int], q: list[int]) -> None:
    if left > right:
        raise InvariantViolation(f"L={left} passed R={right}")
    p_left = index.prv(left)
    if any(r - l > c for r, l, c in zip(p_right, p_left, q)):
        raise InvariantViolation(f"after L-update prv({right}) - prv({left}) exceeds q")


def jump_search(
    index: JumpIndex,
    q: ParikhVector,
    *,
    trace: bool = False,
    checked: bool = False,
    stop_at_first: bool = False,
) -> JumpResult:
    """All start positions of q in ascending order, with the jump statistics.

    ``trace`` records the (L, R) pair after each R-update and the logical
    (L, R, found) sequence; ``checked`` verifies the bracketing invariants
    on every iteration; ``stop_at_first`` returns after the first match.
    """
    check_query(q, index.sigma)
    n, m = index.n, q.length
    jt = JumpTrace(pairs=[] if trace else None, logical=[] if trace else None)
    counter = jt.counters
    occurrences: list[int] = []
    if m > n:
        return JumpResult(occurrences, jt)

    qv = list(q.counts)
    left = 0
    p_left = [0] * index.sigma
    last_left = -1
    while left <= n - m:
        jt.iterations += 1
        if checked and left <= last_left:
            raise InvariantViolation(f"L did not increase: {last_left} -> {left}")
        last_left = left

        # R-update
        right = index.firstfit([a + c for a, c in zip(p_left, qv)], counter)
        jt.r_updates += 1
        if right == INFEASIBLE:
            break
        found = right - left == m
        if trace:
            jt.pairs.append((left, right))
            jt.logical.append(LogicalStep(left, right, found))
        if checked:
            _check_after_r(index, left, right, p_left, qv)
        if found:
            occurrences.append(left + 1)
            if stop_at_first:
                break
            p_left = index.prv(left + 1, p_left, [a + 1 for a in p_left], counter)
            left += 1
            continue

        jt.gap_sum += right - left
        jt.gap_count += 1
        width = right - left
        p_right = index.prv(right, [a + c for a, c in zip(p_left, qv)], [a + width for a in p_left], counter)

        # L-update
        target = [r - c for r, c in zip(p_right, qv)]
        new_left = index.firstfit(target, counter)
        jt.l_updates += 1
        if checked:
            _check_after_l(index, new_left, right, p_right, qv)
        if right - new_left == m:
            # prv(new_left) = target here, the window holds q exactly
            occurrences.append(new_left + 1)
            if trace:
                jt.logical.append(LogicalStep(new_left, right, True))
            if stop_at_first:
                break
            left = new_left + 1
            p_left = index.prv(left, target, [a + 1 for a in target], counter)
        else:
            p_left = index.prv(new_left, target, p_right, counter)
            left = new_left

    logger.debug(
        "Jump search |q|=%d over n=%d: %d occurrences, J=%d, counters=%s",
        m,
        n,
        len(occurrences),
        jt.iterations,
        counter.as_dict(),
    )
    return JumpResult(occurrences, jt)


def decide_jump(index: JumpIndex, q: ParikhVector) -> bool:
    return jump_search(index, q, stop_at_first=True).found


def build_jump_index(text: EncodedText, backend: BackendChoices) -> JumpIndex:
    if backend is BackendChoices.TABLE:
        return InvertedPrefixTable.build(text)
    if backend is BackendChoices.WAVELET:
        return WaveletTree.build(text)
    raise CapabilityError(f"the {backend.value} back-end cannot drive a jump search")

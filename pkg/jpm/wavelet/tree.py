"""Wavelet tree over the text alphabet.

Every inner node splits its contiguous sub-alphabet into the first
ceil(k/2) symbols (bit 0, left child) and the rest (bit 1, right child),
and keeps the routing bits of the symbols that reach it. Nodes are kept in
level order; leaves carry no bits.

prv(j) visits the whole tree top-down once, firstfit(p) combines select
answers bottom-up once, so both cost O(sigma) rank/select probes.
"""
import logging
from collections import deque
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from jpm.errors import DimensionError, PositionError
from jpm.models import Alphabet, EncodedText, ParikhVector, ProbeCounter
from jpm.wavelet.bitvector import INFEASIBLE, RankSelectBitVector

logger = logging.getLogger(__name__)


@dataclass
class WaveletNode:
    lo: int  # sub-alphabet is codes lo..hi-1
    hi: int
    bits: RankSelectBitVector | None = None
    left: int = -1
    right: int = -1
    parent: int = -1

    @property
    def is_leaf(self) -> bool:
        return self.bits is None

    @property
    def mid(self) -> int:
        return self.lo + (self.hi - self.lo + 1) // 2


class WaveletTree:
    def __init__(self, alphabet: Alphabet, n: int, nodes: list[WaveletNode]):
        self.alphabet = alphabet
        self.sigma = alphabet.sigma
        self.n = n
        self.nodes = nodes
        self._leaf_of = [-1] * self.sigma
        for idx, node in enumerate(nodes):
            if node.is_leaf:
                self._leaf_of[node.lo] = idx
            else:
                nodes[node.left].parent = idx
                nodes[node.right].parent = idx

    @classmethod
    def build(cls, text: EncodedText) -> "WaveletTree":
        nodes = [WaveletNode(0, text.sigma)]
        queue = deque([(0, text.codes)])
        while queue:
            idx, seq = queue.popleft()
            node = nodes[idx]
            if node.hi - node.lo == 1:
                continue
            routed_right = seq >= node.mid
            node.bits = RankSelectBitVector(routed_right)
            node.left = len(nodes)
            nodes.append(WaveletNode(node.lo, node.mid))
            node.right = len(nodes)
            nodes.append(WaveletNode(node.mid, node.hi))
            queue.append((node.left, seq[~routed_right]))
            queue.append((node.right, seq[routed_right]))
        logger.info("Built wavelet tree: n=%d, sigma=%d, %d nodes", text.n, text.sigma, len(nodes))
        return cls(text.alphabet, text.n, nodes)

    @classmethod
    def restore(cls, alphabet: Alphabet, n: int, bit_arrays: Sequence[np.ndarray]) -> "WaveletTree":
        """Rebuild from the inner-node bit arrays in level order; the shape depends on sigma only"""
        nodes = [WaveletNode(0, alphabet.sigma)]
        arrays = iter(bit_arrays)
        idx = 0
        while idx < len(nodes):
            node = nodes[idx]
            if node.hi - node.lo > 1:
                bits = next(arrays, None)
                if bits is None:
                    raise ValueError("fewer bit arrays than inner nodes")
                node.bits = RankSelectBitVector(bits)
                node.left = len(nodes)
                nodes.append(WaveletNode(node.lo, node.mid))
                node.right = len(nodes)
                nodes.append(WaveletNode(node.mid, node.hi))
            idx += 1
        if next(arrays, None) is not None:
            raise ValueError("more bit arrays than inner nodes")
        if nodes[0].bits is not None and len(nodes[0].bits) != n:
            raise ValueError(f"root bit vector does not have length {n}")
        return cls(alphabet, n, nodes)

    def bit_arrays(self) -> list[np.ndarray]:
        return [node.bits.to_bits() for node in self.inner_nodes()]

    @property
    def root(self) -> WaveletNode:
        return self.nodes[0]

    def node_symbols(self, node: WaveletNode) -> str:
        return "".join(self.alphabet.symbols[node.lo : node.hi])

    def find_node(self, symbols: str) -> WaveletNode:
        for node in self.nodes:
            if self.node_symbols(node) == symbols:
                return node
        raise KeyError(symbols)

    def inner_nodes(self) -> list[WaveletNode]:
        return [node for node in self.nodes if not node.is_leaf]

    def prv(
        self,
        j: int,
        lo: Sequence[int] | None = None,
        hi: Sequence[int] | None = None,
        counter: ProbeCounter | None = None,
    ) -> list[int]:
        """All sigma ranks at j in one top-down pass; search hints are not needed here"""
        if not 0 <= j <= self.n:
            raise PositionError(f"prefix length {j} outside 0..{self.n}")
        result = [0] * self.sigma
        nodes = self.nodes
        stack = [(0, j)]
        visits = 0
        while stack:
            idx, t = stack.pop()
            node = nodes[idx]
            if node.bits is None:
                result[node.lo] = t
                continue
            visits += 1
            t1 = node.bits.rank1(t)
            stack.append((node.right, t1))
            stack.append((node.left, t - t1))
        if counter is not None:
            counter.prv_calls += 1
            counter.node_visits += visits
        return result

    def firstfit(
        self,
        p: Sequence[int],
        counter: ProbeCounter | None = None,
        node_values: dict[str, int | float] | None = None,
    ) -> int | float:
        """Bottom-up: x_leaf = p_k, x_u = max(select0(B_u, x_left), select1(B_u, x_right))"""
        if len(p) != self.sigma:
            raise DimensionError(f"vector has dimension {len(p)}, tree has {self.sigma} leaves")
        nodes = self.nodes
        x: list[int | float] = [0] * len(nodes)
        visits = 0
        # children always follow their parent in level order
        for idx in range(len(nodes) - 1, -1, -1):
            node = nodes[idx]
            if node.bits is None:
                x[idx] = p[node.lo]
            else:
                visits += 1
                x[idx] = max(node.bits.select0(x[node.left]), node.bits.select1(x[node.right]))
            if node_values is not None:
                node_values[self.node_symbols(node)] = x[idx]
        if counter is not None:
            counter.firstfit_calls += 1
            counter.node_visits += visits
        answer = x[0]
        if self.root.is_leaf and answer > self.n:
            return INFEASIBLE
        return answer

    def rank(self, k: int, i: int) -> int:
        """Occurrences of symbol index k among positions 1..i"""
        if not 0 <= i <= self.n:
            raise PositionError(f"position {i} outside 0..{self.n}")
        code = k - 1
        node = self.root
        while not node.is_leaf:
            bit = int(code >= node.mid)
            i = node.bits.rank(bit, i)
            node = self.nodes[node.right if bit else node.left]
        return i

    def select(self, k: int, j: int) -> int | float:
        """Position of the j-th occurrence of symbol index k"""
        idx = self._leaf_of[k - 1]
        if idx == 0:
            return j if j <= self.n else INFEASIBLE
        while idx != 0:
            node = self.nodes[idx]
            parent = self.nodes[node.parent]
            j = parent.bits.select(int(idx == parent.right), j)
            if j == INFEASIBLE:
                return INFEASIBLE
            idx = node.parent
        return j

    def access(self, i: int) -> int:
        """Symbol index at position i"""
        if not 1 <= i <= self.n:
            raise PositionError(f"position {i} outside 1..{self.n}")
        node = self.root
        while not node.is_leaf:
            bit = node.bits[i]
            i = node.bits.rank(bit, i)
            node = self.nodes[node.right if bit else node.left]
        return node.lo + 1

    def to_text(self) -> EncodedText:
        return EncodedText(self.alphabet, np.asarray([self.access(i) - 1 for i in range(1, self.n + 1)], dtype=np.int64))

    def aux_bits(self) -> int:
        return sum(node.bits.aux_bits() for node in self.inner_nodes())

    def payload_bits(self) -> int:
        return sum(len(node.bits) for node in self.inner_nodes())


def build_wavelet(text: EncodedText) -> WaveletTree:
    return WaveletTree.build(text)


def wt_prv(wt: WaveletTree, j: int, counter: ProbeCounter | None = None) -> ParikhVector:
    return ParikhVector.of(wt.prv(j, counter=counter))


def wt_firstfit(
    wt: WaveletTree,
    p: ParikhVector,
    counter: ProbeCounter | None = None,
    node_values: dict[str, int | float] | None = None,
) -> int | float:
    return wt.firstfit(p.counts, counter, node_values)

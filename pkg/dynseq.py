# dynseq.py

"""
Dynamic sequence over an integer alphabet [0, sigma) with access, rank,
select, insert and delete. Positions are 1-based.

Symbols live in leaf chunks of roughly CHUNK_SIZE entries. The chunks are
the nodes of an AA tree ordered by position; every node caches the length
and the per-symbol counts of its subtree. A query walks one root path and
scans one chunk. An update adjusts the cached values on one root path; a
chunk that grows past twice the load factor splits in two, and the new
half is linked in with the usual skew/split rebalancing.

Queries and updates cost O(log m + CHUNK_SIZE). A chunk split adds
O(sigma · log m), at most once every CHUNK_SIZE inserts. Chunks emptied by
delete stay in the tree until they make up half of it, then the tree is
rebuilt from the non-empty chunks. Every operation is O(log m)
in the number of chunks m.
"""

import logging
from typing import Iterable, Iterator, List, Optional, Tuple

import numpy as np

from config import CHUNK_SIZE
from errors import AlphabetError, PositionError

logger = logging.getLogger(__name__)


class _Chunk:
    """One leaf chunk and the cached totals of its subtree"""

    __slots__ = ("data", "own", "left", "right", "level", "size", "counts")

    def __init__(self, data: List[int], own: List[int]):
        self.data = data
        self.own = own
        self.left: Optional["_Chunk"] = None
        self.right: Optional["_Chunk"] = None
        self.level = 1
        self.size = len(data)
        self.counts = list(own)


def _size(node: Optional[_Chunk]) -> int:
    return node.size if node is not None else 0


def _pull(node: _Chunk):
    """Recompute the subtree totals of node from its own chunk and its children"""
    size = len(node.data)
    counts = list(node.own)
    for child in (node.left, node.right):
        if child is not None:
            size += child.size
            counts = [x + y for x, y in zip(counts, child.counts)]
    node.size = size
    node.counts = counts


def _skew(node: _Chunk) -> _Chunk:
    left = node.left
    if left is not None and left.level == node.level:
        node.left = left.right
        left.right = node
        _pull(node)
        _pull(left)
        return left
    return node


def _split(node: _Chunk) -> _Chunk:
    right = node.right
    if right is not None and right.right is not None and right.right.level == node.level:
        node.right = right.left
        right.left = node
        right.level += 1
        _pull(node)
        _pull(right)
        return right
    return node


def _link(node: Optional[_Chunk], new: _Chunk, pos: int) -> _Chunk:
    """Insert chunk new so that pos symbols of the subtree come before it"""
    if node is None:
        return new
    left_size = _size(node.left)
    if pos <= left_size:
        node.left = _link(node.left, new, pos)
    else:
        node.right = _link(node.right, new, pos - left_size - len(node.data))
    _pull(node)
    return _split(_skew(node))


class DynSeq:
    """Growable sequence of symbol codes supporting rank/select under insertion and deletion"""

    def __init__(self, sigma: int, symbols: Optional[Iterable[int]] = None, chunk_size: int = CHUNK_SIZE):
        if sigma < 1:
            raise AlphabetError(f"alphabet size must be positive, got {sigma}")
        if chunk_size < 1:
            raise ValueError(f"chunk size must be positive, got {chunk_size}")
        self.sigma = sigma
        self._load = chunk_size
        self._root: Optional[_Chunk] = None
        self._nodes = 0
        self._empty = 0
        if symbols is not None:
            data = list(symbols)
            for c in data:
                self._check_symbol(c)
            self._build(data[i:i + chunk_size] for i in range(0, len(data), chunk_size))

    # ---- internal bookkeeping ----

    def _check_symbol(self, a: int):
        if not 0 <= a < self.sigma:
            raise AlphabetError(f"symbol {a} outside alphabet [0, {self.sigma})")

    def _check_position(self, i: int, upper: int):
        if not 1 <= i <= upper:
            raise PositionError(f"position {i} outside [1, {upper}]")

    def _tally(self, data: List[int]) -> List[int]:
        return np.bincount(np.asarray(data, dtype=np.int64), minlength=self.sigma).tolist()

    def _build(self, pieces: Iterable[List[int]]):
        """Fresh tree holding the given chunks in order"""
        self._root = None
        self._nodes = 0
        self._empty = 0
        total = 0
        for data in pieces:
            self._root = _link(self._root, _Chunk(data, self._tally(data)), total)
            total += len(data)
            self._nodes += 1

    def _chunks(self) -> Iterator[_Chunk]:
        """Chunks in sequence order"""
        stack: List[_Chunk] = []
        node = self._root
        while stack or node is not None:
            while node is not None:
                stack.append(node)
                node = node.left
            node = stack.pop()
            yield node
            node = node.right

    def _path(self, i: int) -> Tuple[List[_Chunk], int]:
        """Root path down to the chunk holding position i, and the 0-based offset in it"""
        path = []
        node = self._root
        while True:
            path.append(node)
            left_size = _size(node.left)
            if i <= left_size:
                node = node.left
                continue
            i -= left_size
            if i <= len(node.data):
                return path, i - 1
            i -= len(node.data)
            node = node.right

    def _drop_empty_chunks(self):
        self._build([chunk.data for chunk in self._chunks() if chunk.data])
        logger.debug(f"rebuilt tree over {self._nodes} chunks")

    # ---- queries ----

    def __len__(self) -> int:
        return _size(self._root)

    def length(self) -> int:
        return _size(self._root)

    def __iter__(self) -> Iterator[int]:
        for chunk in self._chunks():
            yield from chunk.data

    def to_list(self) -> List[int]:
        return list(self)

    def __repr__(self) -> str:
        return f"DynSeq(sigma={self.sigma}, {self.to_list()!r})"

    def access(self, i: int) -> int:
        self._check_position(i, len(self))
        path, offset = self._path(i)
        return path[-1].data[offset]

    def rank(self, a: int, i: int) -> int:
        """Occurrences of a in positions 1..i; rank at 0 is 0"""
        self._check_symbol(a)
        if i == 0:
            return 0
        self._check_position(i, len(self))
        total = 0
        node = self._root
        while True:
            left_size = _size(node.left)
            if i <= left_size:
                node = node.left
                continue
            if node.left is not None:
                total += node.left.counts[a]
            i -= left_size
            if i <= len(node.data):
                return total + node.data[:i].count(a)
            total += node.own[a]
            i -= len(node.data)
            node = node.right

    def count(self, a: int) -> int:
        self._check_symbol(a)
        return self._root.counts[a] if self._root is not None else 0

    def select(self, a: int, k: int) -> int:
        """Position of the k-th occurrence of a"""
        total = self.count(a)
        if not 1 <= k <= total:
            raise PositionError(f"occurrence {k} of symbol {a} outside [1, {total}]")
        before = 0
        node = self._root
        while True:
            in_left = node.left.counts[a] if node.left is not None else 0
            if k <= in_left:
                node = node.left
                continue
            k -= in_left
            before += _size(node.left)
            if k <= node.own[a]:
                offset = -1
                for _ in range(k):
                    offset = node.data.index(a, offset + 1)
                return before + offset + 1
            k -= node.own[a]
            before += len(node.data)
            node = node.right

    # ---- updates ----

    def insert(self, a: int, i: int):
        """Insert a so that it becomes position i"""
        self._check_symbol(a)
        self._check_position(i, len(self) + 1)
        if self._root is None:
            self._build([[a]])
            return

        # gap = symbols before the new one
        gap = i - 1
        start = 0
        node = self._root
        while True:
            node.size += 1
            node.counts[a] += 1
            left_size = _size(node.left)
            if gap <= left_size and node.left is not None:
                node = node.left
                continue
            gap -= left_size
            start += left_size
            if gap <= len(node.data):
                break
            gap -= len(node.data)
            start += len(node.data)
            node = node.right

        if not node.data:
            self._empty -= 1
        node.data.insert(gap, a)
        node.own[a] += 1
        if len(node.data) > 2 * self._load:
            self._split_chunk(node, start)

    def _split_chunk(self, node: _Chunk, start: int):
        """Move the tail of an overfull chunk into a new chunk right after it"""
        tail = node.data[self._load:]
        del node.data[self._load:]
        node.own = self._tally(node.data)
        # totals on the path to node still count the tail; _link recomputes them
        self._root = _link(self._root, _Chunk(tail, self._tally(tail)), start + len(node.data))
        self._nodes += 1

    def delete(self, i: int) -> int:
        """Remove and return the symbol at position i"""
        self._check_position(i, len(self))
        path, offset = self._path(i)
        chunk = path[-1]
        a = chunk.data.pop(offset)
        chunk.own[a] -= 1
        for node in path:
            node.size -= 1
            node.counts[a] -= 1
        if not chunk.data:
            self._empty += 1
            if 2 * self._empty > self._nodes:
                self._drop_empty_chunks()
        return a

    def replace(self, i: int, a: int) -> int:
        """Overwrite position i with a; same result as delete then insert at i"""
        self._check_symbol(a)
        self._check_position(i, len(self))
        path, offset = self._path(i)
        chunk = path[-1]
        old = chunk.data[offset]
        if old != a:
            chunk.data[offset] = a
            chunk.own[old] -= 1
            chunk.own[a] += 1
            for node in path:
                node.counts[old] -= 1
                node.counts[a] += 1
        return old

    def height(self) -> int:
        """Number of chunks on the longest root path"""
        def depth(node: Optional[_Chunk]) -> int:
            return 0 if node is None else 1 + max(depth(node.left), depth(node.right))
        return depth(self._root)

    def chunk_count(self) -> int:
        return self._nodes

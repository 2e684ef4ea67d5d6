# online_builder.py

"""
Online pBWT construction.

The builder holds the pBWT L, the first column F, the infinity-LCP array
and the bookkeeping arrays Left, Right, RM and C for the current text S,
which always ends with the sentinel. prepend(c) turns that state into the
state for cS in three steps:

    update_lf   rewrite the few L/F cells whose encoding changes
    insert_row  find the rank k' of cS and insert its row
    update_lcp  recompute the two LCP entries around k'

Neither the rotation array nor the LF mapping is stored.

Symbol codes follow alphabet_encoding: L and F hold encoded symbols
(statics 0..|Σ|-1, number y as |Σ|+y-1), LCPinf holds plain counts
0..|Π|, C holds static codes. Left, Right and RM are indexed by parameter
number (code - |Σ|) and use 0 for "absent"; Left and Right count
positions from the right end of the text.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Union

from alphabet_encoding import Alphabet, Text
from dynseq import DynSeq
from errors import AlphabetError, InputError, PositionError

logger = logging.getLogger(__name__)


@dataclass
class Snapshot:
    """Plain copies of the builder arrays, comparable with OracleTables"""

    n: int
    L: List[int]
    F: List[int]
    LCPinf: List[int]


class OnlineBuilder:
    """Maintains the pBWT of a text that grows by prepending one symbol at a time"""

    def __init__(self, alphabet: Alphabet):
        self.alphabet = alphabet
        sigma = alphabet.sigma_size
        pi = alphabet.pi_size
        self.n = 1
        self.L = DynSeq(sigma + pi, [0])
        self.F = DynSeq(sigma + pi, [0])
        # every static a contributes |S|_a + 1 copies; S = "$" has one sentinel
        self.C = DynSeq(sigma, [0] + list(range(sigma)))
        self.LCPinf = DynSeq(pi + 1, [0])
        self.left = [0] * pi
        self.right = [0] * pi
        self.rm = [0] * pi
        self.last_insert_position: Optional[int] = None

    @classmethod
    def from_text(cls, alphabet: Alphabet, text: Text) -> "OnlineBuilder":
        """Builder for text + sentinel; text must not contain the sentinel"""
        builder = cls(alphabet)
        builder.extend(text)
        return builder

    # ---- helpers ----

    def _number(self, code: int) -> int:
        return self.alphabet.code_number(code)

    def _code(self, number: int) -> int:
        return self.alphabet.number_code(number)

    def _symbol_code(self, c: Union[str, int]) -> int:
        try:
            if isinstance(c, str):
                code = self.alphabet.code(c)
            else:
                self.alphabet.symbol(c)
                code = c
        except AlphabetError as e:
            raise InputError(f"cannot prepend {c!r}: {e}") from None
        if code == 0:
            raise InputError(f"cannot prepend the sentinel {self.alphabet.sentinel!r}")
        return code

    # ---- main update ----

    def prepend(self, c: Union[str, int]):
        """Update the state for S to the state for cS"""
        code = self._symbol_code(c)
        k = self.L.select(0, 1)
        self.update_lf(code, k)
        k_new = self.insert_row(k)

        for a, row in enumerate(self.rm):
            if row >= k_new:
                self.rm[a] = row + 1

        # both entries come from the LCP array of S
        x = self.update_lcp(k_new)
        y = self.update_lcp(k_new - 1)
        self.LCPinf.replace(k_new - 1, y)
        self.LCPinf.insert(x, k_new)

        self.n += 1
        self.last_insert_position = k_new
        logger.debug(f"prepended code {code}: k={k} -> k'={k_new}, n={self.n}")

    def extend(self, text: Text):
        """Prepend a whole text, last symbol first"""
        try:
            codes = self.alphabet.as_codes(text)
        except AlphabetError as e:
            raise InputError(str(e)) from None
        for position in range(len(codes), 0, -1):
            if codes[position - 1] == 0:
                raise InputError(f"sentinel {self.alphabet.sentinel!r} found in text at position {position}")
            self.prepend(codes[position - 1])

    def update_lf(self, c: int, k: int):
        """
        Turn L and F into the intermediate columns for cS, still in the
        rank order of S, and record c in Left, Right and RM

        Args:
            c: code of the prepended symbol
            k: row of the sentinel in L
        """
        if self.alphabet.is_static(c):
            self.L.replace(k, c)
            return

        ci = c - self.alphabet.sigma_size
        left, right = self.left, self.right
        present = [a for a in range(len(left)) if left[a]]

        # all (row, LF row) pairs are read before any cell is written
        rewrites = []
        for a in present:
            i = self.rm[a]
            symbol = self.L.access(i)
            j = self.F.select(symbol, self.L.rank(symbol, i))
            if a == ci:
                # distinct parameters after c's rightmost occurrence, plus c
                cnt = sum(1 for b in present if right[b] <= right[a])
            else:
                cnt = self._number(symbol)
                if left[ci] == 0 or left[a] > left[ci] >= right[ci] > right[a]:
                    cnt += 1
            rewrites.append((i, j, self._code(cnt)))
        for i, j, value in rewrites:
            self.L.replace(i, value)
            self.F.replace(j, value)

        if left[ci] == 0:
            cnt = 1 + len(present)
            left[ci] = right[ci] = self.n + 1
            self.rm[ci] = k
        else:
            cnt = 1 + sum(1 for a in present if left[a] > left[ci])
            left[ci] = self.n + 1
        self.L.replace(k, self._code(cnt))

    def insert_row(self, k: int) -> int:
        """
        Insert the row of cS: the sentinel into L and ⟦cS⟧[1] into F

        Args:
            k: row of the sentinel in L before the update

        Returns:
            the new row k' of the sentinel
        """
        L, C, lcp = self.L, self.C, self.LCPinf
        x = L.access(k)

        if self.alphabet.is_static(x):
            # codes below x are exactly the smaller statics
            first = C.select(x, 1)
            k_new = first - x - 1 + L.rank(x, k)
            C.insert(x, first)
        else:
            xv = self._number(x)
            n = len(lcp)
            k_new = 1 + len(C) - self.alphabet.sigma_size

            # rows above k whose number is at most x
            for y in range(1, xv + 1):
                k_new += L.rank(self._code(y), k - 1)

            # rows above k with lcp below x and number above x
            j = 0
            for y in range(xv):
                r = lcp.rank(y, k - 1)
                if r:
                    j = max(j, lcp.select(y, r))
            for y in range(xv + 1, self.alphabet.pi_size + 1):
                k_new += L.rank(self._code(y), j)

            # rows below k whose number y is below x and at most their lcp
            j = n
            for y in range(1, xv):
                r = lcp.rank(y - 1, k - 1)
                if r < lcp.count(y - 1):
                    j = min(j, lcp.select(y - 1, r + 1))
                k_new += L.rank(self._code(y), j) - L.rank(self._code(y), k)

        L.insert(0, k_new)
        self.F.insert(x, k_new)
        return k_new

    def _lcp_range_min(self, a: int, b: int) -> int:
        """min(LCPinf[a..b-1]) for a < b, read off rank differences"""
        for y in range(len(self.left) + 1):
            if self.LCPinf.rank(y, a - 1) != self.LCPinf.rank(y, b - 1):
                return y
        return 0

    def update_lcp(self, i: int) -> int:
        """
        LCP entry i of cS, computed from L and F of cS and the LCP array of S

        Args:
            i: row of cS, 1 <= i <= n + 1

        Returns:
            lcp_inf of rows i and i + 1; 0 for the last row
        """
        m = len(self.L)
        if i <= 0 or i >= m:
            return 0
        F = self.F
        fi, fj = F.access(i), F.access(i + 1)
        numeric = self.alphabet.is_number(fi) and self.alphabet.is_number(fj)
        if fi != fj and not numeric:
            return 0

        k_new = self.L.select(0, 1)
        ri = self.L.select(fi, F.rank(fi, i))
        rj = self.L.select(fj, F.rank(fj, i + 1))
        assert ri != k_new and rj != k_new, "LF predecessor cannot be the sentinel row"
        # rows of cS other than k' line up with the rows of S
        a = ri if ri < k_new else ri - 1
        b = rj if rj < k_new else rj - 1
        ell = self._lcp_range_min(min(a, b), max(a, b))
        if not numeric:
            return ell

        xi, xj = self._number(fi), self._number(fj)
        if ell < min(xi, xj):
            return ell + 1
        if xi == xj:
            return ell
        return min(xi, xj)

    # ---- read-only views ----

    def lf(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise PositionError(f"rank {i} outside [1, {self.n}]")
        x = self.L.access(i)
        return self.F.select(x, self.L.rank(x, i))

    def lf_inv(self, j: int) -> int:
        if not 1 <= j <= self.n:
            raise PositionError(f"rank {j} outside [1, {self.n}]")
        y = self.F.access(j)
        return self.L.select(y, self.F.rank(y, j))

    def pbwt(self) -> List[int]:
        return self.L.to_list()

    def recover_encoding(self) -> List[int]:
        """⟦T⟧ read from L by stepping LF backwards from the sentinel row"""
        row = self.L.select(0, 1)
        result = []
        for _ in range(self.n):
            row = self.lf_inv(row)
            result.append(self.L.access(row))
        return result

    def snapshot(self) -> Snapshot:
        return Snapshot(n=self.n, L=self.L.to_list(), F=self.F.to_list(), LCPinf=self.LCPinf.to_list())

    def static_counts(self) -> Dict[str, int]:
        """Occurrences of every static symbol in the current text, read from C"""
        return {s: self.C.count(code) - 1 for code, s in enumerate(self.alphabet.statics)}

    def rightmost_rows(self) -> Dict[str, int]:
        """RM for every parameter present in the text"""
        return {self.alphabet.params[a]: row for a, row in enumerate(self.rm) if self.left[a]}


def new(alphabet: Alphabet) -> OnlineBuilder:
    """Builder holding the one-symbol text consisting of the sentinel"""
    return OnlineBuilder(alphabet)

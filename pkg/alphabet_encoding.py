# alphabet_encoding.py

"""
P-string alphabets and the two encodings used by the pBWT.

Every symbol is mapped to a dense integer code when it crosses the I/O
boundary: the sentinel gets 0, the other static symbols 1..|Σ|-1 and the
parameter symbols follow. Prev-encoded and rotation-encoded strings share
one integer space so that plain integer comparison is the symbol order:

    static code s      ->  s
    positive number d  ->  |Σ| + d - 1
    infinity           ->  INF
"""

import sys
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple, Union

import numpy as np

from config import SENTINEL
from errors import AlphabetError

INF = sys.maxsize

Text = Union[str, Sequence[int]]


@dataclass(frozen=True)
class Alphabet:
    """Ordered static alphabet (sentinel first) and ordered parameter alphabet"""

    statics: Tuple[str, ...]
    params: Tuple[str, ...]
    _codes: Dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not self.statics:
            raise AlphabetError("static alphabet must contain the sentinel")
        seen: Dict[str, int] = {}
        for code, symbol in enumerate(self.statics + self.params):
            if symbol in seen:
                kind = "overlap" if seen[symbol] < len(self.statics) <= code else "duplicate"
                raise AlphabetError(f"{kind} symbol {symbol!r} in alphabet")
            seen[symbol] = code
        object.__setattr__(self, "_codes", seen)

    @classmethod
    def from_strings(cls, sigma: str, pi: str, sentinel: str = SENTINEL) -> "Alphabet":
        """
        Build an alphabet from two strings of distinct symbols

        Args:
            sigma: static symbols in order; the sentinel may be omitted
            pi: parameter symbols in order
            sentinel: terminator, always the smallest static symbol

        Returns:
            Alphabet with the sentinel placed first
        """
        if len(sentinel) != 1:
            raise AlphabetError(f"sentinel must be a single symbol, got {sentinel!r}")
        statics = (sentinel,) + tuple(s for s in sigma if s != sentinel)
        return cls(statics=statics, params=tuple(pi))

    @property
    def sentinel(self) -> str:
        return self.statics[0]

    @property
    def sigma_size(self) -> int:
        return len(self.statics)

    @property
    def pi_size(self) -> int:
        return len(self.params)

    @property
    def size(self) -> int:
        return len(self.statics) + len(self.params)

    # ---- symbol codes ----

    def code(self, symbol: str) -> int:
        try:
            return self._codes[symbol]
        except KeyError:
            raise AlphabetError(f"symbol {symbol!r} is not in the alphabet") from None

    def symbol(self, code: int) -> str:
        if not 0 <= code < self.size:
            raise AlphabetError(f"code {code} is not in the alphabet")
        return (self.statics + self.params)[code]

    def is_static(self, code: int) -> bool:
        return 0 <= code < len(self.statics)

    def is_param(self, code: int) -> bool:
        return len(self.statics) <= code < self.size

    def encode_text(self, text: str) -> Tuple[int, ...]:
        """Map a text to symbol codes; the error names the 1-based position"""
        codes = []
        for position, symbol in enumerate(text, start=1):
            if symbol not in self._codes:
                raise AlphabetError(f"symbol {symbol!r} is not in the alphabet", position=position)
            codes.append(self._codes[symbol])
        return tuple(codes)

    def decode(self, codes: Sequence[int]) -> str:
        return "".join(self.symbol(c) for c in codes)

    def as_codes(self, text: Text) -> Tuple[int, ...]:
        if isinstance(text, str):
            return self.encode_text(text)
        codes = tuple(text)
        for position, c in enumerate(codes, start=1):
            if not 0 <= c < self.size:
                raise AlphabetError(f"code {c} is not in the alphabet", position=position)
        return codes

    # ---- encoded symbols ----

    def number_code(self, value: int) -> int:
        """Code of a positive integer in the encoded-symbol space"""
        return len(self.statics) + value - 1

    def code_number(self, code: int) -> int:
        return code - len(self.statics) + 1

    def is_number(self, code: int) -> bool:
        return len(self.statics) <= code < INF

    def token(self, code: int) -> str:
        """Printable form of an encoded symbol: statics verbatim, numbers in decimal, ∞"""
        if code == INF:
            return "∞"
        if self.is_static(code):
            return self.statics[code]
        return str(self.code_number(code))

    def tokens(self, codes: Sequence[int]) -> List[str]:
        return [self.token(c) for c in codes]


def prev_encode(alphabet: Alphabet, text: Text) -> List[int]:
    """
    Prev-encoding: statics kept, a parameter becomes the distance to its
    previous occurrence, or INF on its first occurrence
    """
    codes = alphabet.as_codes(text)
    last: Dict[int, int] = {}
    result = []
    for i, c in enumerate(codes):
        if alphabet.is_static(c):
            result.append(c)
            continue
        result.append(alphabet.number_code(i - last[c]) if c in last else INF)
        last[c] = i
    return result


def _next_occurrence_distances(codes: Sequence[int], params: Sequence[int]) -> np.ndarray:
    """
    Row b, column i: cyclic distance from i to the next occurrence of params[b]
    strictly after i (n when i is the only occurrence)
    """
    n = len(codes)
    arr = np.asarray(codes, dtype=np.int64)
    positions = np.arange(n)
    table = np.empty((len(params), n), dtype=np.int64)
    for row, b in enumerate(params):
        occ = np.flatnonzero(arr == b)
        idx = np.searchsorted(occ, positions, side="right")
        wrapped = idx >= len(occ)
        nxt = np.where(wrapped, occ[0] + n, occ[np.minimum(idx, len(occ) - 1)])
        table[row] = nxt - positions
    return table


def rot_encode(alphabet: Alphabet, text: Text) -> List[int]:
    """
    The ⟦T⟧ encoding: a parameter at i becomes the number of distinct
    parameters from i+1 through its next cyclic occurrence
    """
    codes = alphabet.as_codes(text)
    if not codes:
        return []
    present = sorted({c for c in codes if alphabet.is_param(c)})
    result = list(codes)
    if not present:
        return result

    row_of = {b: row for row, b in enumerate(present)}
    table = _next_occurrence_distances(codes, present)
    cols = np.array([i for i, c in enumerate(codes) if c in row_of], dtype=np.int64)
    rows = np.array([row_of[codes[i]] for i in cols], dtype=np.int64)
    own = table[rows, cols]
    counts = (table[:, cols] <= own[np.newaxis, :]).sum(axis=0)
    for i, cnt in zip(cols.tolist(), counts.tolist()):
        result[i] = alphabet.number_code(cnt)
    return result


def p_match(alphabet: Alphabet, s: Text, t: Text) -> bool:
    """Two p-strings match iff their prev-encodings are equal"""
    s_codes = alphabet.as_codes(s)
    t_codes = alphabet.as_codes(t)
    if len(s_codes) != len(t_codes):
        return False
    return prev_encode(alphabet, s_codes) == prev_encode(alphabet, t_codes)


def rotate(text, i: int):
    """Right rotation by i; works on strings, tuples and lists"""
    n = len(text)
    if n == 0:
        return text
    i %= n
    return text[n - i:] + text[:n - i]


def lcp_inf(x: Sequence[int], y: Sequence[int]) -> int:
    """Number of INF symbols in the longest common prefix of two prev-encoded strings"""
    count = 0
    for a, b in zip(x, y):
        if a != b:
            break
        if a == INF:
            count += 1
    return count


def pv_compare(x: int, y: int) -> int:
    """Three-way comparison of encoded symbols: $ < statics < numbers < INF"""
    return (x > y) - (x < y)

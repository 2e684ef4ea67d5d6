# oracle.py

"""
Brute-force construction of the rotation array, pBWT, first column,
infinity-LCP array and LF mapping of a whole text, straight from their
definitions. Quadratic in time and space; used as ground truth by the
tests and by the CLI verify and dump modes.

All arrays are plain lists whose entry [i - 1] belongs to rank i, and every
stored rank or rotation index is 1-based.
"""

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np
import pandas as pd

from alphabet_encoding import INF, Alphabet, Text, lcp_inf, prev_encode, rot_encode, rotate
from errors import PositionError, PreconditionError

logger = logging.getLogger(__name__)

TABLE_COLUMNS = ["i", "RA", "LCPinf", "prev_encoding", "F", "encoding", "L"]


@dataclass
class OracleTables:
    """Every array of the sorted rotation matrix of one text"""

    n: int
    text: Tuple[int, ...]
    RA: List[int]
    RAinv: List[int]
    F: List[int]
    L: List[int]
    LCPinf: List[int]
    LF: List[int]

    @property
    def k(self) -> int:
        """Rank of the unrotated text, i.e. the row whose L entry is the sentinel"""
        return self.RAinv[self.n - 1]

    def to_frame(self, alphabet: Alphabet) -> pd.DataFrame:
        """One row per rank with printable encodings, one column per array"""
        enc = rot_encode(alphabet, self.text)
        records = []
        for i, p in enumerate(self.RA, start=1):
            records.append({
                "i": i,
                "RA": p,
                "LCPinf": self.LCPinf[i - 1],
                "prev_encoding": " ".join(alphabet.tokens(prev_encode(alphabet, rotate(self.text, p)))),
                "F": alphabet.token(self.F[i - 1]),
                "encoding": " ".join(alphabet.tokens(rotate(enc, p))),
                "L": alphabet.token(self.L[i - 1]),
            })
        return pd.DataFrame(records, columns=TABLE_COLUMNS)


def _check_sentinel(alphabet: Alphabet, codes: Sequence[int]):
    if not codes or codes[-1] != 0:
        raise PreconditionError(f"text must end with the sentinel {alphabet.sentinel!r}")
    if codes.count(0) != 1:
        raise PreconditionError(f"sentinel {alphabet.sentinel!r} must occur exactly once")


def rotation_matrix(alphabet: Alphabet, codes: Sequence[int]) -> np.ndarray:
    """
    Prev-encodings of all rotations as one matrix; row s is the rotation
    that starts at 0-based position s
    """
    n = len(codes)
    arr = np.asarray(codes, dtype=np.int64)
    is_param = (arr >= alphabet.sigma_size)

    # cyclic distance back to the previous occurrence of the same parameter
    back = np.zeros(n, dtype=np.int64)
    positions = np.arange(n)
    for b in np.unique(arr[is_param]):
        occ = np.flatnonzero(arr == b)
        back[occ] = occ - np.roll(occ, 1)
        back[occ[0]] += n

    idx = (positions[:, np.newaxis] + positions[np.newaxis, :]) % n
    offset = np.broadcast_to(positions, (n, n))
    numbers = alphabet.number_code(0) + back[idx]
    first_seen = back[idx] > offset
    return np.where(is_param[idx], np.where(first_seen, INF, numbers), arr[idx])


def _adjacent_lcp(rows: np.ndarray) -> List[int]:
    """lcp_inf of each consecutive pair of distinct sorted rows"""
    if len(rows) < 2:
        return []
    differ = rows[:-1] != rows[1:]
    first_diff = differ.argmax(axis=1)
    infs = np.cumsum(rows[:-1] == INF, axis=1)
    counts = np.where(first_diff > 0, infs[np.arange(len(first_diff)), first_diff - 1], 0)
    return counts.tolist()


def sorted_rotations(alphabet: Alphabet, codes: Sequence[int], ra: Sequence[int]) -> List[List[int]]:
    """Prev-encodings of the rotations in rank order"""
    n = len(codes)
    matrix = rotation_matrix(alphabet, codes)
    return matrix[[(n - p) % n for p in ra]].tolist()


def build_tables(alphabet: Alphabet, text: Text) -> OracleTables:
    """
    Sort all rotations of text by prev-encoding and read off every column

    Args:
        alphabet: alphabet the text is written in
        text: p-string ending with the only sentinel

    Returns:
        OracleTables for the text
    """
    codes = alphabet.as_codes(text)
    _check_sentinel(alphabet, codes)
    n = len(codes)

    matrix = rotation_matrix(alphabet, codes)
    # primary key is column 0
    order = np.lexsort(matrix.T[::-1])
    ra = [n - s if s else n for s in order.tolist()]
    ra_inv = [0] * n
    for i, p in enumerate(ra, start=1):
        ra_inv[p - 1] = i

    # ⟦T_p⟧ is the p-th right rotation of ⟦T⟧
    enc = rot_encode(alphabet, codes)
    first = [enc[(n - p) % n] for p in ra]
    last = [enc[(n - p - 1) % n] for p in ra]

    lcp = _adjacent_lcp(matrix[order]) + [0]
    lf = [ra_inv[p % n] for p in ra]

    logger.debug(f"oracle built for n={n}")
    return OracleTables(n=n, text=codes, RA=ra, RAinv=ra_inv, F=first, L=last, LCPinf=lcp, LF=lf)


def oracle_lcp_pair(tables: OracleTables, alphabet: Alphabet, text: Text, i: int, j: int) -> int:
    """lcp_inf of the rotations at ranks i < j, computed from their prev-encodings"""
    if not 1 <= i < j <= tables.n:
        raise PositionError(f"rank pair ({i}, {j}) outside 1 <= i < j <= {tables.n}")
    codes = alphabet.as_codes(text)
    x = prev_encode(alphabet, rotate(codes, tables.RA[i - 1]))
    y = prev_encode(alphabet, rotate(codes, tables.RA[j - 1]))
    return lcp_inf(x, y)


def oracle_lf_order_check(tables: OracleTables, alphabet: Alphabet, text: Text) -> bool:
    """
    Check the LF ordering rule on every rank pair:
    for numeric L[i], L[j] with i < j, LF(i) < LF(j) iff min(L[i] - 1, lcp) < L[j];
    for equal L[i] = L[j] with i < j, LF(i) < LF(j)
    """
    codes = alphabet.as_codes(text)
    rows = sorted_rotations(alphabet, codes, tables.RA)
    n = tables.n
    for i in range(n):
        for j in range(i + 1, n):
            li, lj = tables.L[i], tables.L[j]
            forward = tables.LF[i] < tables.LF[j]
            if li == lj and not forward:
                logger.debug(f"equal symbols at ranks {i + 1} < {j + 1} map backwards")
                return False
            if alphabet.is_number(li) and alphabet.is_number(lj):
                bound = min(alphabet.code_number(li) - 1, lcp_inf(rows[i], rows[j]))
                if forward != (bound < alphabet.code_number(lj)):
                    logger.debug(f"LF order rule fails at ranks {i + 1} < {j + 1}")
                    return False
    return True


def reconstruct_encoding(tables: OracleTables) -> List[int]:
    """⟦T⟧ read back from L by walking LF backwards from the sentinel row"""
    lf_inv = [0] * tables.n
    for i, j in enumerate(tables.LF, start=1):
        lf_inv[j - 1] = i
    result = []
    row = tables.k
    for _ in range(tables.n):
        row = lf_inv[row - 1]
        result.append(tables.L[row - 1])
    return result


# ---- one-prepend intermediates ----

def intermediate_columns(alphabet: Alphabet, text: Text, c: int) -> Tuple[List[int], List[int]]:
    """
    Last and first columns of the rotations of cS listed in the rank order of S

    Args:
        text: S, ending with the only sentinel
        c: code of the symbol being prepended

    Returns:
        (L°, F°), each of length |S|
    """
    codes = alphabet.as_codes(text)
    tables = build_tables(alphabet, codes)
    extended = (c,) + codes
    enc = rot_encode(alphabet, extended)
    m = len(extended)
    last = [enc[(m - p - 1) % m] for p in tables.RA]
    first = [enc[(m - p) % m] for p in tables.RA]
    return last, first


def parameter_insert_position(alphabet: Alphabet, text: Text, c: int) -> int:
    """
    Rank of cS among its rotations for a parameter c, counted term by term
    from L°, the sentinel row of S and the lcp of each row with that row
    """
    codes = alphabet.as_codes(text)
    if not alphabet.is_param(c):
        raise PreconditionError(f"code {c} is not a parameter")
    tables = build_tables(alphabet, codes)
    last, _ = intermediate_columns(alphabet, codes, c)
    rows = sorted_rotations(alphabet, codes, tables.RA)
    k = tables.k
    x = alphabet.code_number(last[k - 1])

    statics = sum(1 for s in codes if alphabet.is_static(s))
    position = 1 + statics
    for i in range(1, tables.n + 1):
        if i == k or not alphabet.is_number(last[i - 1]):
            continue
        y = alphabet.code_number(last[i - 1])
        ell = lcp_inf(rows[i - 1], rows[k - 1])
        if i < k and (y <= x or ell < x < y):
            position += 1
        elif i > k and y <= min(x - 1, ell):
            position += 1
    return position

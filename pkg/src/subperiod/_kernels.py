"""Compiled inner loops.

Bit layout for packed sequences: position ``p`` lives in word ``p >> 6``,
bit ``p & 63`` (LSB first).
"""
import numba
import numpy as np

_ONE = np.uint64(1)
_ALL = np.uint64(0xFFFFFFFFFFFFFFFF)


@numba.njit(cache=True, inline="always")
def _low_mask(width):
    if width >= 64:
        return _ALL
    return (_ONE << np.uint64(width)) - _ONE


@numba.njit(cache=True, inline="always")
def _read_field(words, offset, width):
    wi = offset >> 6
    sh = offset & 63
    value = words[wi] >> np.uint64(sh)
    if sh != 0 and sh + width > 64:
        value |= words[wi + 1] << np.uint64(64 - sh)
    return value & _low_mask(width)


@numba.njit(cache=True, inline="always")
def _or_field(words, offset, value, width):
    wi = offset >> 6
    sh = offset & 63
    words[wi] |= value << np.uint64(sh)
    if sh != 0 and sh + width > 64:
        words[wi + 1] |= value >> np.uint64(64 - sh)


# Below this smallest move the block width is too narrow to pay off and the
# shift-register kernel is faster.
BLOCK_MIN_MOVE = 8


@numba.njit(cache=True)
def p_mask_words(moves, length):
    if moves[0] < BLOCK_MIN_MOVE:
        return _p_mask_register(moves, length)
    return _p_mask_blocks(moves, length)


@numba.njit(cache=True)
def _p_mask_register(moves, length):
    """Position-serial variant for small moves.

    The P-bits of the last 64 positions sit in one register (bit ``i`` is
    position ``p - 1 - i``), so all moves up to 64 are tested with one AND
    against a move mask; larger moves read the packed mask directly.
    """
    window = moves[-1]
    pad = ((window + 63) // 64) * 64
    nwords = (pad + length + 63) // 64 + 1
    words = np.zeros(nwords, dtype=np.uint64)
    near = np.uint64(0)
    n_far = 0
    for s in moves:
        if s <= 64:
            near |= _ONE << np.uint64(s - 1)
        else:
            n_far += 1
    far = moves[moves.shape[0] - n_far :]
    hist = np.uint64(0)
    for p in range(length):
        winning = (hist & near) != 0
        if not winning:
            for s in far:
                at = pad + p - s
                if (words[at >> 6] >> np.uint64(at & 63)) & _ONE:
                    winning = True
                    break
        hist <<= _ONE
        if not winning:
            hist |= _ONE
            at = pad + p
            words[at >> 6] |= _ONE << np.uint64(at & 63)
    return words, pad


@numba.njit(cache=True)
def _p_mask_blocks(moves, length):
    """Packed P-position mask for positions ``0..length-1``.

    ``moves`` must be sorted ascending. Positions are evaluated in blocks of
    ``min(moves[0], 64)`` bits: every position in a block only looks back at
    least ``moves[0]`` steps, so a whole block is the complement of the union
    of the P-mask shifted by each move.

    Returns ``(words, pad)``; position ``p`` is stored at bit ``pad + p``.
    The ``pad`` leading bits stand for negative positions and stay zero, so
    moves that would overshoot the heap never find a P-position.
    """
    window = moves[-1]
    block = min(moves[0], 64)
    pad = ((window + 63) // 64) * 64
    nwords = (pad + length + 63) // 64 + 1
    words = np.zeros(nwords, dtype=np.uint64)
    pos = 0
    while pos < length:
        width = min(block, length - pos)
        base = pad + pos
        n_block = np.uint64(0)
        for s in moves:
            n_block |= _read_field(words, base - s, width)
        p_block = ~n_block & _low_mask(width)
        if p_block:
            _or_field(words, base, p_block, width)
        pos += width
    return words, pad


@numba.njit(cache=True)
def naive_outcome(moves, length):
    """Per-position reference: one byte per position, no packing."""
    bits = np.zeros(length, dtype=np.uint8)
    for p in range(length):
        for s in moves:
            if s <= p and bits[p - s] == 0:
                bits[p] = 1
                break
    return bits


@numba.njit(cache=True)
def grundy_values(moves, length):
    """Grundy values using a ring buffer of the last ``max(moves)`` values."""
    window = moves[-1]
    k = moves.shape[0]
    ring = np.zeros(window, dtype=np.int64)
    seen = np.zeros(k + 2, dtype=np.int64)
    out = np.empty(length, dtype=np.int64)
    for p in range(length):
        stamp = p + 1
        for s in moves:
            if s > p:
                break
            seen[ring[(p - s) % window]] = stamp
        v = 0
        while seen[v] == stamp:
            v += 1
        ring[p % window] = v
        out[p] = v
    return out


@numba.njit(cache=True)
def minimal_period(seq, window):
    """Smallest period, then smallest preperiod, whose repetition window
    of length ``window`` fits inside ``seq``.

    For each candidate period the sequence is compared with its shift from
    the tail backward; the last mismatch fixes the least preperiod. Returns
    ``(-1, -1)`` when nothing verifies.
    """
    n = seq.shape[0]
    for p in range(1, n - window + 1):
        start = 0
        ok = True
        for q in range(n - p - 1, -1, -1):
            if seq[q + p] != seq[q]:
                start = q + 1
                if start + p + window > n:
                    ok = False
                break
        if ok:
            return start, p
    return -1, -1

"""Pure-Python reference kernels for centered residue arithmetic.

All functions take and return ``numpy.int64`` arrays whose entries are
already reduced into the centered range ``[-(q//2), (q-1)//2]`` unless
stated otherwise.  Exactness is guaranteed for any modulus accepted by
the public layer (``q <= 2**62``): the fast paths stay strictly inside
``int64`` and everything else falls back to Python big integers, which
cannot overflow.
"""

from __future__ import annotations

import numpy as np

_INT64_MAX = 2**63 - 1


def _center(residues, q):
    # residues in [0, q) -> centered range; works for int64 and object dtype
    half = (q + 1) // 2
    return residues - np.where(residues >= half, q, 0)


def reduce_center(values: np.ndarray, q: int) -> np.ndarray:
    """Componentwise centered reduction of an int64 vector."""
    r = np.mod(values, q)  # numpy remainder is in [0, q) for q > 0
    return _center(r, q).astype(np.int64)


def reduce_center_exact(values, q: int) -> np.ndarray:
    """Centered reduction of arbitrarily large Python integers."""
    out = [int(v) % q for v in np.asarray(values, dtype=object).ravel()]
    half = (q + 1) // 2
    out = [v - q if v >= half else v for v in out]
    return np.array(out, dtype=np.int64).reshape(np.shape(values))


def add_mod(a: np.ndarray, b: np.ndarray, q: int) -> np.ndarray:
    return reduce_center(a + b, q)  # |a + b| <= q <= 2**62: no overflow


def sub_mod(a: np.ndarray, b: np.ndarray, q: int) -> np.ndarray:
    return reduce_center(a - b, q)


def neg_mod(a: np.ndarray, q: int) -> np.ndarray:
    return reduce_center(-a, q)


def scale_mod(c: int, a: np.ndarray, q: int) -> np.ndarray:
    """Exact ``c * a mod q`` for a Python-int scalar of any size."""
    c = int(c) % q
    if c >= (q + 1) // 2:
        c -= q
    if abs(c) * (q // 2) <= _INT64_MAX:
        return reduce_center(c * a, q)
    prod = np.asarray(a, dtype=object) * c
    return reduce_center_exact(prod, q)


def sum_rows_mod(rows: np.ndarray, q: int) -> np.ndarray:
    """Reduce the componentwise sum of an ``(n, p)`` array of residues."""
    n = rows.shape[0]
    if n == 0:
        return np.zeros(rows.shape[1], dtype=np.int64)
    if n * (q // 2) <= _INT64_MAX:
        return reduce_center(rows.sum(axis=0), q)
    total = rows.astype(object).sum(axis=0)
    return reduce_center_exact(total, q)


def last_share(message: np.ndarray, partial: np.ndarray, q: int) -> np.ndarray:
    """Final additive share: ``message - sum(partial) mod q``."""
    return sub_mod(message, sum_rows_mod(partial, q), q)


def masked_residual(
    own_mask: np.ndarray,
    contributions: np.ndarray,
    weights: np.ndarray,
    own_quantized: np.ndarray,
    q: int,
) -> np.ndarray:
    """Centered residue of ``own_mask + sum_j (contributions_j - weights_j * own_quantized)``.

    ``contributions`` is ``(n, p)``, ``weights`` is ``(n,)`` and
    ``own_quantized`` is an unreduced ``(p,)`` integer vector.
    """
    w_total = int(np.asarray(weights, dtype=object).sum()) % q
    if w_total >= (q + 1) // 2:
        w_total -= q
    zeta = sum_rows_mod(contributions, q)
    qz_max = int(np.abs(own_quantized).max()) if own_quantized.size else 0
    if abs(w_total) * qz_max + 2 * (q // 2) <= _INT64_MAX:
        return reduce_center(own_mask + zeta - w_total * own_quantized, q)
    acc = own_mask.astype(object) + zeta - w_total * own_quantized.astype(object)
    return reduce_center_exact(acc, q)

"""Exact arithmetic over the symmetric residue ring and additive secret sharing.

Values live in ``Z_q = Z ∩ [-q/2, q/2)`` with the centered reduction
``a mod q = a - floor((a + q/2)/q) * q`` applied componentwise.  A message
split into ``n`` additive shares is recovered by summing the shares mod q;
any ``n - 1`` shares are jointly uniform and carry no information about
the message.

Headroom guarantee: moduli up to ``2**62`` are accepted.  Reduced entries
then fit in int64 with one bit to spare, pairwise sums stay inside int64,
and products/longer sums run in 128-bit (compiled backend) or Python
integers (pure backend), so all arithmetic is exact.  Larger moduli are
rejected by the :class:`Modulus` constructor.
"""

from __future__ import annotations

import secrets
from dataclasses import dataclass, field

import numpy as np

from . import _backend

MAX_MODULUS = 2**62


def make_rng(seed=None) -> np.random.Generator:
    """Randomness source for shares: cryptographically seeded by default,
    reproducible when an explicit seed is given."""
    if seed is None:
        seed = secrets.randbits(128)
    return np.random.default_rng(seed)


@dataclass(frozen=True)
class Modulus:
    """Protocol-wide modulus of the symmetric residue ring."""

    q: int

    def __post_init__(self):
        q = self.q
        if not isinstance(q, int) or q < 3:
            raise ValueError(f"modulus must be an integer >= 3, got {q!r}")
        if q > MAX_MODULUS:
            raise ValueError(
                f"modulus {q} exceeds 2**62; larger values would break the "
                "documented int64 headroom guarantee"
            )

    @property
    def lo(self) -> int:
        """Smallest representative, ``-(q // 2)``."""
        return -(self.q // 2)

    @property
    def hi(self) -> int:
        """Largest representative, ``(q - 1) // 2``."""
        return (self.q - 1) // 2

    def contains(self, values: np.ndarray) -> bool:
        v = np.asarray(values)
        if v.size == 0:
            return True
        return bool((v >= self.lo).all() and (v <= self.hi).all())


@dataclass(frozen=True)
class RingVector:
    """Immutable integer vector with entries in ``[-q/2, q/2)``."""

    entries: np.ndarray
    modulus: Modulus

    def __post_init__(self):
        e = np.asarray(self.entries, dtype=np.int64)
        e.setflags(write=False)
        object.__setattr__(self, "entries", e)
        if not self.modulus.contains(e):
            raise ValueError("entries not reduced into the centered range")

    def __len__(self) -> int:
        return self.entries.shape[0]

    def __add__(self, other: "RingVector") -> "RingVector":
        _check_compatible(self, other)
        out = _backend.add_mod(self.entries, other.entries, self.modulus.q)
        return RingVector(out, self.modulus)

    def __sub__(self, other: "RingVector") -> "RingVector":
        _check_compatible(self, other)
        out = _backend.sub_mod(self.entries, other.entries, self.modulus.q)
        return RingVector(out, self.modulus)

    def __neg__(self) -> "RingVector":
        return RingVector(_backend.neg_mod(self.entries, self.modulus.q), self.modulus)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RingVector):
            return NotImplemented
        return self.modulus == other.modulus and np.array_equal(self.entries, other.entries)

    def scale(self, c: int) -> "RingVector":
        return ring_scale(c, self)

    @classmethod
    def zero(cls, dim: int, modulus: Modulus) -> "RingVector":
        return cls(np.zeros(dim, dtype=np.int64), modulus)


@dataclass(frozen=True)
class ShareBundle:
    """Additive shares of one message; summing them mod q reconstructs it."""

    shares: list = field(default_factory=list)

    @property
    def n(self) -> int:
        return len(self.shares)


def _check_compatible(a: RingVector, b: RingVector):
    if a.modulus != b.modulus:
        raise ValueError("mismatched moduli")
    if len(a) != len(b):
        raise ValueError("mismatched vector lengths")


def reduce_mod(values, modulus: Modulus) -> RingVector:
    """Map an arbitrary integer vector into the centered range.

    Total function: accepts any integer values, including Python integers
    beyond int64.
    """
    arr = np.asarray(values)
    if arr.dtype == object or arr.dtype.kind not in "iu":
        if not all(isinstance(v, (int, np.integer)) for v in np.ravel(arr)):
            raise TypeError("reduce_mod expects integer inputs")
        out = _backend.reduce_center_exact(arr, modulus.q)
    else:
        out = _backend.reduce_center(arr.astype(np.int64), modulus.q)
    return RingVector(out, modulus)


def uniform_elements(modulus: Modulus, shape, rng: np.random.Generator) -> np.ndarray:
    """Uniform draws from ``Z_q``, free of modulo bias.

    The generator's bounded-integer sampler draws unbiased values in
    ``[0, q)`` (internally by rejection); shifting into the centered range
    is a bijection, so the result is exactly uniform on ``Z_q``.
    """
    raw = rng.integers(0, modulus.q, size=shape, dtype=np.int64)
    half = (modulus.q + 1) // 2
    return raw - np.where(raw >= half, modulus.q, 0)


def share(m: RingVector, n: int, rng: np.random.Generator) -> ShareBundle:
    """Split a message into ``n`` additive shares.

    The first ``n - 1`` shares are i.i.d. uniform on ``Z_q^p``; the last
    share is ``m`` minus their sum, reduced.
    """
    if n < 1:
        raise ValueError(f"share count must be >= 1, got {n}")
    q = m.modulus.q
    partial = uniform_elements(m.modulus, (n - 1, len(m)), rng)
    last = _backend.last_share(m.entries, partial, q)
    shares = [RingVector(row, m.modulus) for row in partial]
    shares.append(RingVector(last, m.modulus))
    return ShareBundle(shares)


def reconstruct(bundle: ShareBundle) -> RingVector:
    """Sum the shares mod q."""
    if bundle.n == 0:
        raise ValueError("cannot reconstruct from an empty bundle")
    first = bundle.shares[0]
    for s in bundle.shares[1:]:
        _check_compatible(first, s)
    rows = np.stack([s.entries for s in bundle.shares])
    out = _backend.sum_rows_mod(rows, first.modulus.q)
    return RingVector(out, first.modulus)


def ring_add(a: RingVector, b: RingVector) -> RingVector:
    return a + b


def ring_scale(c: int, a: RingVector) -> RingVector:
    out = _backend.scale_mod(int(c), a.entries, a.modulus.q)
    return RingVector(out, a.modulus)

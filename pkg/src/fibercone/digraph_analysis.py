r"""
Reachability analytics on directed multigraphs.

The monodromy of a fibered class acts on the vertices of its train-track
digraph by one-step out-neighborhoods; iterating that set map is how every
bound in this package is extracted.  For a digraph on V vertices with 0/1
adjacency matrix A (multiplicities are irrelevant to reachability and are
collapsed), the m-step image of a vertex set S is

    image_after(S, m) = { v : some walk of length exactly m ends at v,
                              starting in S }
                      = support of A^m . indicator(S).

Two independent evaluation routes are kept: frontier stepping over int
bitmasks (one OR of out-neighbor masks per step), and boolean matrix powers
computed by repeated squaring.  Squarings run as numpy float32 matmuls clipped
back to 0/1; this is exact, since every entry is 0 or 1 and inner products are
integers bounded by V, far below the 2**24 float32 integer range.

primitivity_exponent finds the least m with A^m strictly positive.  Once every
vertex has in-degree >= 1, all-positivity is monotone in m (append any last
step to each walk), so the least such m is located by a doubling ladder
A, A^2, A^4, ... followed by a binary walk back down the ladder.  The search
is cut off at the Wielandt bound (V-1)^2 + 1: a primitive matrix must become
positive by then, so a cutoff verdict of "not primitive" is a proof, not a
timeout.  Vertices of in- or out-degree zero kill positivity outright and
short-circuit to the same verdict.

covering_time refines the exponent per source vertex, and last_avoidance /
avoidance_at certify powers m whose image still misses a target: each witness
m converts into an upper bound 4/m on the curve-complex translation length
downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .traintrack_digraph import Digraph

__all__ = [
    "AvoidanceWitness",
    "NotPrimitiveError",
    "NeverCoversError",
    "image_after",
    "primitivity_exponent",
    "covering_time",
    "last_avoidance",
    "avoidance_at",
    "wielandt_cutoff",
]

# Beyond this many steps, frontier stepping loses to matrix squaring.
_STEP_HORIZON_FACTOR = 4


class NotPrimitiveError(ValueError):
    """The adjacency matrix has no strictly positive power."""


class NeverCoversError(ValueError):
    """No power of the step map sends the source onto all vertices."""


def wielandt_cutoff(vertex_count: int) -> int:
    """(V-1)^2 + 1: every primitive 0/1 matrix is positive by this power."""
    return (vertex_count - 1) ** 2 + 1


@dataclass(frozen=True)
class AvoidanceWitness:
    """A verified certificate that image_after({source}, steps) misses avoided."""

    source: str
    avoided: str
    steps: int


class _Engine:
    """Per-digraph reachability state: bitmask rows and the power ladder."""

    def __init__(self, g: Digraph):
        self.g = g
        self.n = g.vertex_count
        # out_masks[v] has bit w set iff there is an edge v -> w.
        self.out_masks = [0] * self.n
        for i, row in enumerate(g.adjacency):
            for j, mult in enumerate(row):
                if mult:
                    self.out_masks[j] |= 1 << i
        self.full_mask = (1 << self.n) - 1
        self.has_zero_out = any(m == 0 for m in self.out_masks)
        in_mask = 0
        for m in self.out_masks:
            in_mask |= m
        self.has_zero_in = in_mask != self.full_mask
        # A[i, j] = 1 iff edge j -> i; powers act on indicator columns.
        base = np.zeros((self.n, self.n), dtype=np.float32)
        for i, row in enumerate(g.adjacency):
            for j, mult in enumerate(row):
                if mult:
                    base[i, j] = 1.0
        self._ladder = [base]                # _ladder[t] = A^(2^t), entries 0/1

    # -- frontier stepping ------------------------------------------------

    def step(self, mask: int) -> int:
        out = 0
        masks = self.out_masks
        while mask:
            low = mask & -mask
            out |= masks[low.bit_length() - 1]
            mask ^= low
        return out

    def image_by_steps(self, mask: int, m: int) -> int:
        for _ in range(m):
            mask = self.step(mask)
        return mask

    # -- matrix powers ----------------------------------------------------

    def power(self, t: int) -> np.ndarray:
        """A^(2^t) as a 0/1 float32 matrix (ladder entries are never mutated)."""
        while len(self._ladder) <= t:
            top = self._ladder[-1]
            sq = top @ top
            np.minimum(sq, 1.0, out=sq)
            self._ladder.append(sq)
        return self._ladder[t]

    def vec_of(self, mask: int) -> np.ndarray:
        vec = np.zeros(self.n, dtype=np.float32)
        for i in range(self.n):
            if mask >> i & 1:
                vec[i] = 1.0
        return vec

    def mask_of_vec(self, vec: np.ndarray) -> int:
        out = 0
        for i in np.nonzero(vec)[0]:
            out |= 1 << int(i)
        return out

    def image_by_powers(self, mask: int, m: int) -> int:
        if m == 0:
            return mask
        vec = self.vec_of(mask)
        t = 0
        while m:
            if m & 1:
                vec = self.power(t) @ vec
                np.minimum(vec, 1.0, out=vec)
            m >>= 1
            t += 1
        return self.mask_of_vec(vec)

    def image(self, mask: int, m: int) -> int:
        if m <= _STEP_HORIZON_FACTOR * self.n:
            return self.image_by_steps(mask, m)
        return self.image_by_powers(mask, m)

    # -- masks <-> labels -------------------------------------------------

    def mask_of(self, labels: Iterable[str]) -> int:
        mask = 0
        for lbl in labels:
            mask |= 1 << self.g.index(lbl)
        return mask

    def labels_of(self, mask: int) -> frozenset[str]:
        return frozenset(
            self.g.labels[i] for i in range(self.n) if mask >> i & 1
        )


def _engine(g: Digraph) -> _Engine:
    # Stashed on the digraph instance (immutable, so the engine stays valid)
    # to avoid rehashing large adjacency tuples on every call.
    eng = g.__dict__.get("_analysis_engine")
    if eng is None:
        eng = _Engine(g)
        g.__dict__["_analysis_engine"] = eng
    return eng


def _source_mask(eng: _Engine, sources: str | Iterable[str]) -> int:
    if isinstance(sources, str):
        return eng.mask_of([sources])
    return eng.mask_of(sources)


def image_after(
    g: Digraph,
    sources: str | Iterable[str],
    m: int,
    method: str = "auto",
) -> frozenset[str]:
    """Vertices reachable from sources by directed walks of length exactly m.

    method selects the evaluation route: "steps" (frontier bitmask stepping),
    "powers" (boolean matrix powers with doubling), or "auto" (stepping for
    small m, powers beyond 4V steps).  The two routes agree; exposing both
    keeps that checkable.
    """
    if m < 0:
        raise ValueError("step count must be nonnegative")
    eng = _engine(g)
    mask = _source_mask(eng, sources)
    if method == "auto":
        result = eng.image(mask, m)
    elif method == "steps":
        result = eng.image_by_steps(mask, m)
    elif method == "powers":
        result = eng.image_by_powers(mask, m)
    else:
        raise ValueError(f"unknown method {method!r}")
    return eng.labels_of(result)


def primitivity_exponent(g: Digraph) -> int:
    """Least m >= 1 with every m-step image equal to the whole vertex set.

    Equivalently the least m with A^m entrywise positive.  Raises
    NotPrimitiveError when no such power exists; the cutoff argument makes
    that verdict exact, never a timeout.
    """
    if g.vertex_count == 0:
        raise ValueError("digraph is empty")
    eng = _engine(g)
    n = eng.n
    if n == 1:
        if eng.out_masks[0]:
            return 1
        raise NotPrimitiveError("not primitive: single vertex without a loop")
    if eng.has_zero_out or eng.has_zero_in:
        raise NotPrimitiveError(
            "not primitive: a vertex of in- or out-degree zero keeps every "
            "power from being positive"
        )
    cutoff = wielandt_cutoff(n)
    # Climb the ladder until A^(2^t) is positive; monotonicity (all in-degrees
    # are >= 1 here) makes passing the cutoff a proof of imprimitivity.
    t = 0
    while not bool((eng.power(t) > 0).all()):
        if 2**t >= cutoff:
            raise NotPrimitiveError(
                f"not primitive: no positive power up to the cutoff {cutoff}"
            )
        t += 1
    if t == 0:
        return 1
    # Walk back down the ladder, growing m0 = the largest power with A^m0 not
    # all-positive; the least positive power is then m0 + 1.
    acc: np.ndarray | None = None  # A^m0; None encodes m0 = 0 (the identity)
    m0 = 0
    for i in range(t - 1, -1, -1):
        if acc is None:
            cand = eng.power(i)  # already 0/1; never mutated below
        else:
            cand = acc @ eng.power(i)
            np.minimum(cand, 1.0, out=cand)
        if not bool((cand > 0).all()):
            acc = cand
            m0 += 2**i
    return m0 + 1


def covering_time(g: Digraph, source: str) -> int:
    """Least m with image_after({source}, m) equal to the whole vertex set.

    Requires every in-degree >= 1, which makes coverage monotone: once the
    image is everything it stays everything.  Reports "never covers" when the
    Wielandt cutoff passes without coverage.
    """
    eng = _engine(g)
    if eng.has_zero_in:
        raise ValueError(
            "covering time needs every in-degree >= 1, otherwise coverage "
            "is not monotone"
        )
    src = eng.mask_of([source])
    if src == eng.full_mask:
        return 0
    cutoff = wielandt_cutoff(eng.n)
    if eng.n <= 256:
        # Plain stepping: exact and fast at this size.
        mask, m = src, 0
        while mask != eng.full_mask:
            if m >= cutoff:
                raise NeverCoversError(f"never covers within the cutoff {cutoff}")
            mask = eng.step(mask)
            m += 1
        return m
    # Ladder + binary walk on the indicator column, by the same monotonicity
    # as the exponent search.
    t = 0
    while eng.image_by_powers(src, 2**t) != eng.full_mask:
        if 2**t >= cutoff:
            raise NeverCoversError(f"never covers within the cutoff {cutoff}")
        t += 1
    if t == 0:
        return 1
    m0, mask = 0, src  # mask = image at m0, never full during the walk
    for i in range(t - 1, -1, -1):
        vec = eng.power(i) @ eng.vec_of(mask)
        cand = eng.mask_of_vec(vec)
        if cand != eng.full_mask:
            mask = cand
            m0 += 2**i
    return m0 + 1


def last_avoidance(g: Digraph, source: str, avoided: str) -> AvoidanceWitness:
    """The largest m below the covering time whose image misses `avoided`.

    m = 0 always qualifies when avoided != source, so the witness exists; it
    is re-verified through the other evaluation route before being returned.
    """
    eng = _engine(g)
    cover = covering_time(g, source)
    avoided_bit = 1 << g.index(avoided)
    src = eng.mask_of([source])
    best = None
    scanned_by_steps = eng.n <= 256 or cover <= _STEP_HORIZON_FACTOR * eng.n
    if scanned_by_steps:
        mask = src
        for m in range(cover):
            if not mask & avoided_bit:
                best = m
            mask = eng.step(mask)
    else:
        for m in range(cover - 1, -1, -1):
            if not eng.image_by_powers(src, m) & avoided_bit:
                best = m
                break
    if best is None:
        raise ValueError(
            f"every image below the covering time contains {avoided!r} "
            f"(source {source!r})"
        )
    if scanned_by_steps:
        check = eng.image_by_powers(src, best)
    elif best <= _STEP_HORIZON_FACTOR * eng.n:
        check = eng.image_by_steps(src, best)
    else:
        check = eng.image_by_powers(src, best)
    if check & avoided_bit:
        raise RuntimeError("avoidance witness failed re-verification")
    return AvoidanceWitness(source, avoided, best)


def avoidance_at(
    g: Digraph, source: str, targets: Iterable[str], m: int
) -> bool:
    """True iff the m-step image of the source misses every target."""
    if m < 1:
        raise ValueError("step count must be positive")
    eng = _engine(g)
    target_mask = eng.mask_of(targets)
    return not eng.image(eng.mask_of([source]), m) & target_mask

"""Finite posets viewed as T0 topological spaces.

A finite poset carries the Alexandrov topology: the open sets are exactly
the upward closed subsets, the minimal open neighborhood of ``x`` is the
up-set of ``x``, and closure is downward closure.  All operations here are
pure functions over immutable values, so instances can be shared freely
between workers.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

from .errors import (
    CycleError,
    DuplicateLabelError,
    EmptySubspace,
    SpaceMismatch,
    UnknownElement,
)


@dataclass(frozen=True)
class SubsetMask:
    """Membership vector over the elements of one fixed space."""

    space_id: str
    bits: tuple[bool, ...]

    def __post_init__(self):
        value = 0
        for i, b in enumerate(self.bits):
            if b:
                value |= 1 << i
        object.__setattr__(self, "_int", value)

    def as_int(self) -> int:
        return self._int

    @property
    def size(self) -> int:
        return len(self.bits)

    def count(self) -> int:
        return sum(self.bits)

    def indices(self) -> tuple[int, ...]:
        return tuple(i for i, b in enumerate(self.bits) if b)

    def has(self, index: int) -> bool:
        return self.bits[index]

    def is_empty(self) -> bool:
        return self._int == 0

    def is_full(self) -> bool:
        return self._int == (1 << len(self.bits)) - 1

    def _check(self, other: "SubsetMask") -> None:
        if self.space_id != other.space_id:
            raise SpaceMismatch(f"masks belong to different spaces: {self.space_id} vs {other.space_id}")

    def complement(self) -> "SubsetMask":
        return SubsetMask(self.space_id, tuple(not b for b in self.bits))

    def union(self, other: "SubsetMask") -> "SubsetMask":
        self._check(other)
        return SubsetMask(self.space_id, tuple(a or b for a, b in zip(self.bits, other.bits)))

    def intersection(self, other: "SubsetMask") -> "SubsetMask":
        self._check(other)
        return SubsetMask(self.space_id, tuple(a and b for a, b in zip(self.bits, other.bits)))

    def difference(self, other: "SubsetMask") -> "SubsetMask":
        self._check(other)
        return SubsetMask(self.space_id, tuple(a and not b for a, b in zip(self.bits, other.bits)))

    def is_subset(self, other: "SubsetMask") -> bool:
        self._check(other)
        return self._int & ~other._int == 0

    def bitstring(self) -> str:
        return "".join("1" if b else "0" for b in self.bits)


@dataclass(frozen=True)
class DerivativeTrace:
    """Iterated removal of isolated points plus per-element rank.

    ``stages[0]`` is the whole space and each following stage drops the
    points that are isolated (equivalently: maximal) in the previous one.
    On a finite poset the stages always reach the empty set, and
    ``stages[k]`` is exactly the set of elements of rank >= k, where
    rank(x) = sup{rank(y) + 1 : x < y} and maximal elements have rank 0.
    """

    stages: tuple[SubsetMask, ...]
    rank_of: tuple[int, ...]

    @property
    def scattered_rank(self) -> int:
        return len(self.stages) - 1


@dataclass(frozen=True)
class FinitePoset:
    """A finite poset together with its Alexandrov topology.

    ``leq`` is the full order matrix (reflexive, antisymmetric,
    transitive; validated at construction).  ``cover`` is its transitive
    reduction and ``linext`` a cached linear extension.  Derived index
    structures are computed once and reused by all operations.
    """

    labels: tuple[str, ...]
    leq: tuple[tuple[bool, ...], ...]
    cover: tuple[tuple[bool, ...], ...] = field(init=False, repr=False, compare=False)
    linext: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = len(self.labels)
        if len(set(self.labels)) != n:
            raise DuplicateLabelError("element labels must be distinct")
        if len(self.leq) != n or any(len(row) != n for row in self.leq):
            raise ValueError("leq matrix shape does not match label count")
        leq = self.leq
        for i in range(n):
            if not leq[i][i]:
                raise ValueError("order must be reflexive")
            for j in range(n):
                if i != j and leq[i][j] and leq[j][i]:
                    raise CycleError(f"antisymmetry violated on {self.labels[i]!r}, {self.labels[j]!r}")
                if leq[i][j]:
                    for k in range(n):
                        if leq[j][k] and not leq[i][k]:
                            raise ValueError("order must be transitive")
        object.__setattr__(self, "cover", _transitive_reduction(leq))
        object.__setattr__(self, "linext", _linear_extension(leq))
        # bitmask caches for the search-heavy callers
        up = tuple(_row_int([leq[i][j] for j in range(n)]) for i in range(n))
        down = tuple(_row_int([leq[j][i] for j in range(n)]) for i in range(n))
        object.__setattr__(self, "_up_int", up)
        object.__setattr__(self, "_down_int", down)
        object.__setattr__(self, "_index", {lab: i for i, lab in enumerate(self.labels)})
        fingerprint = hashlib.sha256(repr((self.labels, self.leq)).encode()).hexdigest()[:16]
        object.__setattr__(self, "space_id", fingerprint)

    # -- basic accessors -------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.labels)

    def index(self, element: "str | int") -> int:
        if isinstance(element, int):
            if not 0 <= element < self.n:
                raise UnknownElement(f"index {element} out of range")
            return element
        try:
            return self._index[element]
        except KeyError:
            raise UnknownElement(f"unknown element {element!r}") from None

    def le(self, x: "str | int", y: "str | int") -> bool:
        return self.leq[self.index(x)][self.index(y)]

    def strict_below(self, i: int) -> tuple[int, ...]:
        return tuple(j for j in range(self.n) if j != i and self.leq[j][i])

    def hasse_edges(self) -> tuple[tuple[int, int], ...]:
        """Cover pairs (lower, upper), sorted by index."""
        return tuple(
            (i, j) for i in range(self.n) for j in range(self.n) if self.cover[i][j]
        )

    # -- mask constructors -----------------------------------------------

    def empty_mask(self) -> SubsetMask:
        return SubsetMask(self.space_id, (False,) * self.n)

    def full_mask(self) -> SubsetMask:
        return SubsetMask(self.space_id, (True,) * self.n)

    def mask_from_indices(self, indices: Iterable[int]) -> SubsetMask:
        chosen = set(indices)
        for i in chosen:
            if not 0 <= i < self.n:
                raise UnknownElement(f"index {i} out of range")
        return SubsetMask(self.space_id, tuple(i in chosen for i in range(self.n)))

    def mask(self, names: Iterable[str]) -> SubsetMask:
        return self.mask_from_indices(self.index(name) for name in names)

    def mask_from_bits(self, bits: "str | Sequence[bool] | Sequence[int]") -> SubsetMask:
        if isinstance(bits, str):
            values = []
            for ch in bits:
                if ch not in "01":
                    raise ValueError(f"bad bit {ch!r} in bit string")
                values.append(ch == "1")
        else:
            values = [bool(b) for b in bits]
        if len(values) != self.n:
            raise ValueError(f"bit vector has length {len(values)}, expected {self.n}")
        return SubsetMask(self.space_id, tuple(values))

    def mask_from_int(self, value: int) -> SubsetMask:
        return SubsetMask(self.space_id, tuple(bool(value >> i & 1) for i in range(self.n)))

    def members(self, A: SubsetMask) -> tuple[str, ...]:
        self.check_mask(A)
        return tuple(self.labels[i] for i in A.indices())

    def check_mask(self, A: SubsetMask) -> None:
        if A.space_id != self.space_id:
            raise SpaceMismatch("mask belongs to a different space")
        if len(A.bits) != self.n:
            raise SpaceMismatch("mask length does not match the space")

    # -- topology --------------------------------------------------------

    def up_set(self, element: "str | int") -> SubsetMask:
        """Minimal open neighborhood of an element."""
        i = self.index(element)
        return self.mask_from_int(self._up_int[i])

    def down_set(self, element: "str | int") -> SubsetMask:
        i = self.index(element)
        return self.mask_from_int(self._down_int[i])

    def is_open(self, A: SubsetMask) -> bool:
        """True iff A is upward closed."""
        self.check_mask(A)
        a = A.as_int()
        for i in A.indices():
            if self._up_int[i] & ~a:
                return False
        return True

    def closure(self, A: SubsetMask) -> SubsetMask:
        """Topological closure: downward closure of A."""
        self.check_mask(A)
        out = 0
        for i in A.indices():
            out |= self._down_int[i]
        return self.mask_from_int(out)

    def interior(self, A: SubsetMask) -> SubsetMask:
        """Largest up-set contained in A."""
        self.check_mask(A)
        a = A.as_int()
        out = 0
        for i in A.indices():
            if self._up_int[i] & ~a == 0:
                out |= 1 << i
        return self.mask_from_int(out)

    def boundary(self, A: SubsetMask) -> SubsetMask:
        """cl(A) minus int(A); for open A this is cl(A) minus A."""
        return self.closure(A).difference(self.interior(A))

    def enumerate_opens(self) -> Iterator[SubsetMask]:
        """Yield every up-set exactly once, by cardinality then bit order.

        The count grows like the number of antichains, i.e. exponentially
        in the worst case; callers that accept arbitrary spaces should cap
        the element count (the CLI defaults to 16).
        """
        n = self.n
        order = list(reversed(self.linext))  # successors decided first
        found: list[int] = []

        def extend(pos: int, current: int) -> None:
            if pos == len(order):
                found.append(current)
                return
            x = order[pos]
            extend(pos + 1, current)
            if self._up_int[x] & ~current == (1 << x):
                extend(pos + 1, current | (1 << x))

        extend(0, 0)
        masks = [self.mask_from_int(v) for v in found]
        # cardinality, then sets containing earlier elements first
        masks.sort(key=lambda m: (m.count(), m.indices()))
        return iter(masks)

    # -- derivatives and dimension ----------------------------------------

    def derivative_trace(self) -> DerivativeTrace:
        """Stages of isolated-point removal plus the element ranks.

        In a finite Alexandrov space a point is isolated within a subspace
        iff it is maximal there, so each stage drops the current maximal
        elements.
        """
        stages = [self.full_mask()]
        current = set(range(self.n))
        while current:
            maximal = {i for i in current if all(j == i or j not in current for j in range(self.n) if self.leq[i][j])}
            current = current - maximal
            stages.append(self.mask_from_indices(current))
        ranks = [0] * self.n
        for i in reversed(self.linext):
            above = [ranks[j] for j in range(self.n) if j != i and self.leq[i][j]]
            ranks[i] = 1 + max(above) if above else 0
        return DerivativeTrace(tuple(stages), tuple(ranks))

    def dimension(self) -> int:
        """Inductive dimension, -1 for the empty space.

        The minimal open neighborhood of x is its up-set, and it is the
        only open V with x in V inside that up-set, so the neighborhood
        quantifier collapses to the single boundary test
        dim(X) = 1 + max_x dim(boundary of up(x)); boundaries are proper
        subspaces, so the recursion terminates.
        """
        full = (1 << self.n) - 1
        memo: dict[int, int] = {}

        def dim_of(subset: int) -> int:
            if subset == 0:
                return -1
            if subset in memo:
                return memo[subset]
            best = 0
            for i in range(self.n):
                if not subset >> i & 1:
                    continue
                up = self._up_int[i] & subset
                cl = 0
                rest = up
                while rest:
                    j = (rest & -rest).bit_length() - 1
                    cl |= self._down_int[j] & subset
                    rest &= rest - 1
                boundary = cl & ~up
                best = max(best, dim_of(boundary) + 1)
            memo[subset] = best
            return best

        return dim_of(full)

    # -- subspaces ---------------------------------------------------------

    def subspace(self, A: SubsetMask) -> "FinitePoset":
        """Induced poset on A; its Alexandrov topology is the relative one."""
        self.check_mask(A)
        keep = A.indices()
        if not keep:
            raise EmptySubspace("subspace of the empty set is not a space")
        labels = tuple(self.labels[i] for i in keep)
        leq = tuple(tuple(self.leq[i][j] for j in keep) for i in keep)
        return FinitePoset(labels, leq)

    def subspace_mask(self, carrier: SubsetMask, A: SubsetMask) -> SubsetMask:
        """Re-express A (a subset of the carrier) inside subspace(carrier)."""
        self.check_mask(carrier)
        self.check_mask(A)
        if not A.is_subset(carrier):
            raise SpaceMismatch("subset is not contained in the carrier of the subspace")
        sub = self.subspace(carrier)
        return SubsetMask(sub.space_id, tuple(A.bits[i] for i in carrier.indices()))


def build_poset(labels: Sequence[str], covers: Sequence[tuple[str, str]]) -> FinitePoset:
    """Build the poset generated by cover pairs (lower, upper).

    The order is the reflexive-transitive closure of the pairs; a closure
    that violates antisymmetry is rejected with CycleError.
    """
    labels = tuple(str(x) for x in labels)
    if len(set(labels)) != len(labels):
        raise DuplicateLabelError("element labels must be distinct")
    index = {lab: i for i, lab in enumerate(labels)}
    n = len(labels)
    adj = [[i == j for j in range(n)] for i in range(n)]
    for pair in covers:
        lo, hi = (str(pair[0]), str(pair[1]))
        if lo not in index:
            raise UnknownElement(f"cover pair refers to unknown element {lo!r}")
        if hi not in index:
            raise UnknownElement(f"cover pair refers to unknown element {hi!r}")
        if lo == hi:
            raise CycleError(f"cover pair ({lo!r}, {hi!r}) is a loop")
        adj[index[lo]][index[hi]] = True
    for k in range(n):
        for i in range(n):
            if adj[i][k]:
                row_k = adj[k]
                row_i = adj[i]
                for j in range(n):
                    if row_k[j]:
                        row_i[j] = True
    return FinitePoset(labels, tuple(tuple(row) for row in adj))


def poset_isomorphic(X: FinitePoset, Y: FinitePoset) -> Optional[tuple[int, ...]]:
    """First order-isomorphism from X onto Y in backtracking order, if any.

    Candidates are pruned by iterated degree refinement, and elements are
    assigned in index order with target indices tried in increasing order,
    so the witness is deterministic.
    """
    if X.n != Y.n:
        return None
    cx = _refined_colors(X)
    cy = _refined_colors(Y)
    if sorted(cx) != sorted(cy):
        return None
    n = X.n
    image: list[int] = [-1] * n
    used = [False] * n

    def assign(i: int) -> bool:
        if i == n:
            return True
        for t in range(n):
            if used[t] or cx[i] != cy[t]:
                continue
            ok = True
            for j in range(i):
                if X.leq[i][j] != Y.leq[t][image[j]] or X.leq[j][i] != Y.leq[image[j]][t]:
                    ok = False
                    break
            if ok:
                image[i] = t
                used[t] = True
                if assign(i + 1):
                    return True
                used[t] = False
                image[i] = -1
        return False

    if assign(0):
        return tuple(image)
    return None


def _refined_colors(P: FinitePoset) -> tuple[int, ...]:
    # Per-round normalization keeps colors comparable across posets: on
    # isomorphic posets every round produces identical color multisets.
    n = P.n
    colors = [0] * n
    for _ in range(n + 1):
        sig = [
            (
                colors[i],
                tuple(sorted(colors[j] for j in range(n) if P.cover[i][j])),
                tuple(sorted(colors[j] for j in range(n) if P.cover[j][i])),
            )
            for i in range(n)
        ]
        legend = {s: k for k, s in enumerate(sorted(set(sig)))}
        colors = [legend[s] for s in sig]
    return tuple(colors)


def _transitive_reduction(leq: tuple[tuple[bool, ...], ...]) -> tuple[tuple[bool, ...], ...]:
    n = len(leq)
    cover = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == j or not leq[i][j]:
                continue
            if not any(k != i and k != j and leq[i][k] and leq[k][j] for k in range(n)):
                cover[i][j] = True
    return tuple(tuple(row) for row in cover)


def _linear_extension(leq: tuple[tuple[bool, ...], ...]) -> tuple[int, ...]:
    n = len(leq)
    remaining = set(range(n))
    out: list[int] = []
    while remaining:
        ready = sorted(
            i for i in remaining if all(j == i or j not in remaining for j in range(n) if leq[j][i])
        )
        out.append(ready[0])
        remaining.remove(ready[0])
    return tuple(out)


def _row_int(row: Sequence[bool]) -> int:
    value = 0
    for i, b in enumerate(row):
        if b:
            value |= 1 << i
    return value

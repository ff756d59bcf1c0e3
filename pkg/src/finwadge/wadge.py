"""Continuous reducibility between subsets and k-partitions.

On a finite Alexandrov space the continuous self-maps are exactly the
monotone ones, so deciding whether A reduces to B is a finite search for
a monotone map with f(x) in B iff x in A.  The quotient of a family of
subsets (or partitions) under mutual reducibility is a finite poset of
degrees; this module builds it and reports its shape diagnostics.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Union

from .errors import CapExceeded, ColorCountMismatch, SpaceMismatch
from .hierarchy import classify, level_leq
from .poset import FinitePoset, SubsetMask


class ReducibilityKind(Enum):
    """Reducing function class: monotone maps, or all self-maps.

    On finite T0 spaces every self-map belongs to the level-2 piecewise
    class, so ALL_FUNCTIONS is the only coarser reducibility that is
    distinguishable from the continuous one at this scale.
    """

    WADGE = "wadge"
    ALL_FUNCTIONS = "any"


@dataclass(frozen=True)
class MonotoneMap:
    """Total self-map given by per-element target indices.

    Witnesses returned for the WADGE kind are monotone (continuity on
    finite Alexandrov spaces); ALL_FUNCTIONS witnesses need not be.
    """

    space_id: str
    image: tuple[int, ...]

    def __call__(self, i: int) -> int:
        return self.image[i]

    def preimage(self, B: SubsetMask) -> SubsetMask:
        if B.space_id != self.space_id:
            raise SpaceMismatch("mask belongs to a different space")
        return SubsetMask(self.space_id, tuple(B.bits[t] for t in self.image))

    def compose(self, inner: "MonotoneMap") -> "MonotoneMap":
        """self after inner."""
        if inner.space_id != self.space_id:
            raise SpaceMismatch("maps belong to different spaces")
        return MonotoneMap(self.space_id, tuple(self.image[t] for t in inner.image))


@dataclass(frozen=True)
class KPartition:
    """A naming of the space with k colors (a k-partition)."""

    space_id: str
    k: int
    colors: tuple[int, ...]

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("a partition needs at least one color")
        if any(not 0 <= c < self.k for c in self.colors):
            raise ValueError("every color value must be below k")

    @classmethod
    def constant(cls, X: FinitePoset, k: int, color: int) -> "KPartition":
        return cls(X.space_id, k, (color,) * X.n)

    @classmethod
    def from_subset(cls, A: SubsetMask) -> "KPartition":
        """Characteristic 2-partition of a subset (color 1 on the set)."""
        return cls(A.space_id, 2, tuple(1 if b else 0 for b in A.bits))

    def color_class(self, color: int) -> SubsetMask:
        return SubsetMask(self.space_id, tuple(c == color for c in self.colors))

    def colorstring(self) -> str:
        return "".join(str(c) for c in self.colors)

    def compose_with(self, f: MonotoneMap) -> "KPartition":
        """self after f."""
        if f.space_id != self.space_id:
            raise SpaceMismatch("map belongs to a different space")
        return KPartition(self.space_id, self.k, tuple(self.colors[t] for t in f.image))


Item = Union[SubsetMask, KPartition]


def is_monotone(X: FinitePoset, f: "MonotoneMap | Sequence[int]") -> bool:
    """Order preservation; this is the continuity test on finite posets."""
    image = f.image if isinstance(f, MonotoneMap) else tuple(f)
    if len(image) != X.n:
        raise SpaceMismatch("map length does not match the space")
    for i, j in X.hasse_edges():
        if not X.leq[image[i]][image[j]]:
            return False
    return True


def constant_partitions(X: FinitePoset, k: int) -> list[KPartition]:
    return [KPartition.constant(X, k, i) for i in range(k)]


def wadge_reduces(
    X: FinitePoset,
    A: SubsetMask,
    B: SubsetMask,
    kind: ReducibilityKind = ReducibilityKind.WADGE,
) -> Optional[MonotoneMap]:
    """Witness f with f(x) in B iff x in A, or None if no witness exists.

    Backtracking along the cached linear extension: each element's image
    must dominate the images of its already-assigned predecessors (WADGE
    kind only) and must respect the membership constraint.  Candidate
    targets are tried in increasing index order, so the witness is
    deterministic.  A pre-filter rejects the search outright when the
    difference level of A exceeds that of B, which is sound because the
    levels are closed under continuous preimages.
    """
    X.check_mask(A)
    X.check_mask(B)
    if kind is ReducibilityKind.WADGE and not level_leq(classify(X, A), classify(X, B)):
        return None
    constraint = [B.bits if a else tuple(not b for b in B.bits) for a in A.bits]
    image = _search_map(X, constraint, monotone=kind is ReducibilityKind.WADGE)
    if image is None:
        return None
    return MonotoneMap(X.space_id, image)


def partition_reduces(X: FinitePoset, mu: KPartition, nu: KPartition) -> Optional[MonotoneMap]:
    """Monotone f with mu(x) = nu(f(x)) for every x, or None.

    For k = 2 this agrees with wadge_reduces through characteristic
    functions.
    """
    return _partition_reduces(X, mu, nu, ReducibilityKind.WADGE)


def _partition_reduces(
    X: FinitePoset, mu: KPartition, nu: KPartition, kind: ReducibilityKind
) -> Optional[MonotoneMap]:
    if mu.space_id != X.space_id or nu.space_id != X.space_id:
        raise SpaceMismatch("partition belongs to a different space")
    if len(mu.colors) != X.n or len(nu.colors) != X.n:
        raise SpaceMismatch("partition length does not match the space")
    if mu.k != nu.k:
        raise ColorCountMismatch(f"color counts differ: {mu.k} vs {nu.k}")
    if kind is ReducibilityKind.WADGE:
        for c in range(mu.k):
            if not level_leq(classify(X, mu.color_class(c)), classify(X, nu.color_class(c))):
                return None
    constraint = [tuple(nc == c for nc in nu.colors) for c in mu.colors]
    image = _search_map(X, constraint, monotone=kind is ReducibilityKind.WADGE)
    if image is None:
        return None
    return MonotoneMap(X.space_id, image)


def _search_map(
    X: FinitePoset, allowed: Sequence[tuple[bool, ...]], monotone: bool
) -> Optional[tuple[int, ...]]:
    n = X.n
    order = X.linext
    preds = [X.strict_below(x) for x in range(n)]
    image = [-1] * n

    def assign(pos: int) -> bool:
        if pos == n:
            return True
        x = order[pos]
        ok_targets = allowed[x]
        for t in range(n):
            if not ok_targets[t]:
                continue
            if monotone and any(not X.leq[image[p]][t] for p in preds[x]):
                continue
            image[x] = t
            if assign(pos + 1):
                return True
            image[x] = -1
        return False

    if assign(0):
        return tuple(image)
    return None


def reduces(X: FinitePoset, a: Item, b: Item, kind: ReducibilityKind) -> Optional[MonotoneMap]:
    """Uniform reducibility test for subset or partition items."""
    if isinstance(a, SubsetMask) and isinstance(b, SubsetMask):
        return wadge_reduces(X, a, b, kind)
    if isinstance(a, KPartition) and isinstance(b, KPartition):
        return _partition_reduces(X, a, b, kind)
    raise TypeError("cannot compare a subset with a partition")


@dataclass(frozen=True)
class Diagnostics:
    max_antichain: int
    slo_violations: tuple[tuple[int, int], ...]
    # no finite structure can have one; kept for interface stability
    has_infinite_descending: bool = False


@dataclass(frozen=True)
class DegreeStructure:
    """Quotient of a family of items under mutual reducibility.

    ``classes`` partitions item indices into equivalence classes whose
    canonical representative is the first member in item order;
    ``strict_order`` and ``hasse`` relate class indices.  SLO violations
    are ordered class pairs (i, j) with neither rep(i) <= rep(j) nor
    complement(rep(j)) <= rep(i); they are only meaningful for subset
    items and stay empty for partitions.
    """

    items: tuple[Item, ...]
    kind: ReducibilityKind
    classes: tuple[tuple[int, ...], ...]
    representatives: tuple[int, ...]
    strict_order: tuple[tuple[int, int], ...]
    hasse: tuple[tuple[int, int], ...]
    diagnostics: Diagnostics

    @property
    def class_count(self) -> int:
        return len(self.classes)

    def class_of(self, item_index: int) -> int:
        for ci, members in enumerate(self.classes):
            if item_index in members:
                return ci
        raise IndexError(f"item {item_index} not in any class")

    def leq_classes(self, i: int, j: int) -> bool:
        return i == j or (i, j) in set(self.strict_order)

    def minimal_classes(self) -> tuple[int, ...]:
        above = {j for _, j in self.strict_order}
        return tuple(i for i in range(self.class_count) if i not in above)


@dataclass(frozen=True)
class StructureReport:
    """Shape diagnostics for a finite degree structure.

    Every finite structure is trivially a well-quasi-order, so only the
    finite analogue of semi-well-ordering is reported: no SLO violations
    and no antichain beyond size two.  Asymptotic good/bad labels are not
    emitted; they are not observable at finite scale.
    """

    finitely_very_good: bool
    max_antichain: int
    slo_violation_count: int
    finite_wqo: bool = True


def all_subsets(X: FinitePoset, cap: Optional[int] = None) -> list[SubsetMask]:
    """Every subset of the space, by cardinality then earliest members."""
    if cap is not None and X.n > cap:
        raise CapExceeded(f"|X| = {X.n} exceeds the all-subsets cap {cap}")
    masks = [X.mask_from_int(v) for v in range(1 << X.n)]
    masks.sort(key=lambda m: (m.count(), m.indices()))
    return masks


def degree_structure(
    X: FinitePoset, items: Sequence[Item], kind: ReducibilityKind = ReducibilityKind.WADGE
) -> DegreeStructure:
    """Quotient order of the items under the chosen reducibility.

    Pairwise tests run against class representatives only: once an item
    is known equivalent to an existing representative it joins that class
    and contributes no further searches.
    """
    items = tuple(items)
    if items:
        first = type(items[0])
        if any(type(it) is not first for it in items):
            raise TypeError("items must be all subsets or all partitions")
    reps: list[int] = []
    classes: list[list[int]] = []
    le: dict[tuple[int, int], bool] = {}
    for idx, item in enumerate(items):
        relations: list[tuple[int, bool, bool]] = []
        home: Optional[int] = None
        for ci, rep in enumerate(reps):
            fwd = reduces(X, item, items[rep], kind) is not None
            bwd = reduces(X, items[rep], item, kind) is not None
            if fwd and bwd:
                home = ci
                break
            relations.append((ci, fwd, bwd))
        if home is not None:
            classes[home].append(idx)
            continue
        ci_new = len(reps)
        reps.append(idx)
        classes.append([idx])
        for cj, fwd, bwd in relations:
            le[(ci_new, cj)] = fwd
            le[(cj, ci_new)] = bwd
    k = len(reps)
    strict = sorted((i, j) for i in range(k) for j in range(k) if i != j and le.get((i, j), False))
    strict_set = set(strict)
    for i, j in strict:
        for j2, l in strict:
            if j2 == j and (i, l) not in strict_set and i != l:
                raise AssertionError("reducibility between representatives is not transitive")
    hasse = [
        (i, j)
        for (i, j) in strict
        if not any((i, m) in strict_set and (m, j) in strict_set for m in range(k))
    ]
    hasse.sort(key=lambda e: (_item_key(items[reps[e[0]]]), _item_key(items[reps[e[1]]])))
    slo: list[tuple[int, int]] = []
    if items and isinstance(items[0], SubsetMask):
        for i in range(k):
            for j in range(k):
                if i == j or (i, j) in strict_set:
                    continue
                comp = items[reps[j]].complement()
                if reduces(X, comp, items[reps[i]], kind) is None:
                    slo.append((i, j))
    incomparable = [
        [
            i != j and (i, j) not in strict_set and (j, i) not in strict_set
            for j in range(k)
        ]
        for i in range(k)
    ]
    diag = Diagnostics(
        max_antichain=_max_clique(incomparable) if k else 0,
        slo_violations=tuple(slo),
    )
    return DegreeStructure(
        items=items,
        kind=kind,
        classes=tuple(tuple(c) for c in classes),
        representatives=tuple(reps),
        strict_order=tuple(strict),
        hasse=tuple(hasse),
        diagnostics=diag,
    )


def _item_key(item: Item):
    if isinstance(item, SubsetMask):
        return item.bits
    return item.colors


def _max_clique(adj: list[list[bool]]) -> int:
    """Maximum clique size by branch and bound (desk-scale graphs)."""
    n = len(adj)
    order = sorted(range(n), key=lambda v: -sum(adj[v]))
    best = 0

    def expand(current: int, candidates: list[int]) -> None:
        nonlocal best
        if current + len(candidates) <= best:
            return
        if not candidates:
            best = max(best, current)
            return
        while candidates:
            if current + len(candidates) <= best:
                return
            v = candidates.pop(0)
            expand(current + 1, [u for u in candidates if adj[v][u]])

    expand(0, order)
    return best


def structure_label(D: DegreeStructure) -> StructureReport:
    very_good = not D.diagnostics.slo_violations and D.diagnostics.max_antichain <= 2
    return StructureReport(
        finitely_very_good=very_good,
        max_antichain=D.diagnostics.max_antichain,
        slo_violation_count=len(D.diagnostics.slo_violations),
    )


def is_retraction(X: FinitePoset, Y: SubsetMask, r: MonotoneMap) -> bool:
    """True iff r is monotone, maps into Y, and fixes Y pointwise."""
    X.check_mask(Y)
    if r.space_id != X.space_id or len(r.image) != X.n:
        raise SpaceMismatch("map belongs to a different space")
    if not is_monotone(X, r):
        return False
    for i in range(X.n):
        if not Y.has(r.image[i]):
            return False
    return all(r.image[i] == i for i in Y.indices())


@dataclass(frozen=True)
class EmbeddingReport:
    retraction_valid: bool
    pairs_checked: int
    mismatches: tuple[tuple[SubsetMask, SubsetMask], ...]

    @property
    def exact(self) -> bool:
        return self.retraction_valid and not self.mismatches


def degree_embedding_check(
    X: FinitePoset, Y: SubsetMask, r: MonotoneMap, sample: Sequence[SubsetMask]
) -> EmbeddingReport:
    """Check that A -> preimage under r embeds Y's degrees into X's.

    A retraction turns every subset A of Y into the subset r^-1(A) of X,
    and this assignment must both preserve and reflect reducibility.  The
    check runs over all ordered pairs from the sample (masks over X that
    lie inside Y) and reports every counterexample pair.
    """
    X.check_mask(Y)
    if not is_retraction(X, Y, r):
        return EmbeddingReport(False, 0, ())
    sub = X.subspace(Y)
    carrier = Y.indices()

    def to_sub(A: SubsetMask) -> SubsetMask:
        if not A.is_subset(Y):
            raise SpaceMismatch("sample subset is not contained in the retract")
        return SubsetMask(sub.space_id, tuple(A.bits[i] for i in carrier))

    pairs = 0
    bad: list[tuple[SubsetMask, SubsetMask]] = []
    for A in sample:
        for B in sample:
            pairs += 1
            inner = wadge_reduces(sub, to_sub(A), to_sub(B)) is not None
            outer = wadge_reduces(X, r.preimage(A), r.preimage(B)) is not None
            if inner != outer:
                bad.append((A, B))
    return EmbeddingReport(True, pairs, tuple(bad))

"""Finite binary relations and the closure operators used throughout.

Everything here is set semantics over a shared finite carrier: transitive and
reflexive-transitive closures, symmetric closure, the symmetric intersection
R n R^-1, complement, left-to-right composition, order classification, the
enumeration of total/stratified extensions, a brute-force Szpilrajn check,
and the two structure-closure operators (diamond and bowtie) that turn local
invariant relations into (generalized) stratified order structures.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Iterator

from .errors import CarrierTooLarge, NotStratified

Point = Hashable

EXTENSION_CARRIER_CAP = 8


@dataclass(frozen=True)
class Relation:
    carrier: frozenset
    pairs: frozenset

    def __post_init__(self):
        assert all(a in self.carrier and b in self.carrier for a, b in self.pairs)

    # -- constructors --------------------------------------------------

    @staticmethod
    def over(carrier: Iterable[Point], pairs: Iterable[tuple] = ()) -> "Relation":
        return Relation(frozenset(carrier), frozenset((a, b) for a, b in pairs))

    def replace_pairs(self, pairs: Iterable[tuple]) -> "Relation":
        return Relation(self.carrier, frozenset(pairs))

    # -- algebra --------------------------------------------------------

    def __contains__(self, pair: tuple) -> bool:
        return pair in self.pairs

    def __or__(self, other: "Relation") -> "Relation":
        assert self.carrier == other.carrier
        return Relation(self.carrier, self.pairs | other.pairs)

    def __and__(self, other: "Relation") -> "Relation":
        assert self.carrier == other.carrier
        return Relation(self.carrier, self.pairs & other.pairs)

    def __sub__(self, other: "Relation") -> "Relation":
        assert self.carrier == other.carrier
        return Relation(self.carrier, self.pairs - other.pairs)

    def __le__(self, other: "Relation") -> bool:
        return self.carrier == other.carrier and self.pairs <= other.pairs

    def inverse(self) -> "Relation":
        return Relation(self.carrier, frozenset((b, a) for a, b in self.pairs))

    def transitive_closure(self) -> "Relation":
        succ = {x: {b for a, b in self.pairs if a == x} for x in self.carrier}
        closed = set(self.pairs)
        changed = True
        while changed:
            changed = False
            for a, b in list(closed):
                for c in succ[b]:
                    if (a, c) not in closed:
                        closed.add((a, c))
                        changed = True
        return Relation(self.carrier, frozenset(closed))

    def reflexive_transitive_closure(self) -> "Relation":
        tc = self.transitive_closure()
        return Relation(self.carrier, tc.pairs | frozenset((x, x) for x in self.carrier))

    def symmetric_closure(self) -> "Relation":
        return Relation(self.carrier, self.pairs | frozenset((b, a) for a, b in self.pairs))

    def symmetric_intersection(self) -> "Relation":
        """R n R^-1 (written R with the double-cap superscript in order theory)."""
        return Relation(
            self.carrier, frozenset(p for p in self.pairs if (p[1], p[0]) in self.pairs)
        )

    def complement(self) -> "Relation":
        full = {(a, b) for a in self.carrier for b in self.carrier}
        return Relation(self.carrier, frozenset(full - self.pairs))

    def compose(self, other: "Relation") -> "Relation":
        """Left-to-right composition: (a, c) iff a R b and b S c for some b."""
        assert self.carrier == other.carrier
        by_first = {}
        for b, c in other.pairs:
            by_first.setdefault(b, set()).add(c)
        out = {
            (a, c) for a, b in self.pairs for c in by_first.get(b, ())
        }
        return Relation(self.carrier, frozenset(out))

    def restrict(self, points: Iterable[Point]) -> "Relation":
        points = frozenset(points)
        return Relation(
            points, frozenset(p for p in self.pairs if p[0] in points and p[1] in points)
        )

    # -- predicates ------------------------------------------------------

    def is_irreflexive(self) -> bool:
        return all(a != b for a, b in self.pairs)

    def is_symmetric(self) -> bool:
        return all((b, a) in self.pairs for a, b in self.pairs)

    def is_transitive(self) -> bool:
        return self.transitive_closure().pairs == self.pairs

    # -- derived relations of an order -----------------------------------

    def incomparability(self) -> "Relation":
        """a and b distinct, related in neither direction (written a frown b)."""
        return Relation(
            self.carrier,
            frozenset(
                (a, b)
                for a in self.carrier
                for b in self.carrier
                if a != b and (a, b) not in self.pairs and (b, a) not in self.pairs
            ),
        )

    def weak_extension(self) -> "Relation":
        """The 'ordered or incomparable' relation: R u incomparability(R)."""
        return self | self.incomparability()


def relation_algebra(rel: Relation, op: str) -> Relation:
    """Named dispatch over the unary relation operators (CLI convenience)."""
    ops = {
        "transitive_closure": Relation.transitive_closure,
        "reflexive_transitive": Relation.reflexive_transitive_closure,
        "symmetric_closure": Relation.symmetric_closure,
        "symmetric_intersection": Relation.symmetric_intersection,
        "complement": Relation.complement,
    }
    return ops[op](rel)


# --------------------------------------------------------------------------
# order classification
# --------------------------------------------------------------------------

def classify_order(rel: Relation) -> str:
    """One of 'not_order', 'partial', 'stratified', 'total'.

    A partial order is stratified when incomparable-or-equal is transitive
    (hence an equivalence); it is total when nothing is incomparable.
    """
    if not rel.is_irreflexive() or not rel.is_transitive():
        return "not_order"
    frown = rel.incomparability()
    if not frown.pairs:
        return "total"
    # incomparable-or-equal is reflexive and symmetric by construction; it is
    # an equivalence iff transitive.
    simeq = frown.pairs | {(x, x) for x in rel.carrier}
    for a, b in simeq:
        for c in rel.carrier:
            if (b, c) in simeq and (a, c) not in simeq:
                return "partial"
    return "stratified"


def is_stratified(rel: Relation) -> bool:
    return classify_order(rel) in ("stratified", "total")


# --------------------------------------------------------------------------
# ordered-partition / extension enumeration
# --------------------------------------------------------------------------

def ordered_partitions(
    carrier: Iterable[Point],
    strict: Iterable[tuple] = (),
    weak: Iterable[tuple] = (),
    apart: Iterable[tuple] = (),
) -> Iterator[tuple[frozenset, ...]]:
    """All ordered set partitions (B1, ..., Bk) of the carrier such that

    * (x, y) in strict  =>  block(x) <  block(y)
    * (x, y) in weak    =>  block(x) <= block(y)
    * (x, y) in apart   =>  block(x) != block(y)

    This single generator yields total extensions (apart = everything),
    stratified extensions of posets (strict only), and the stratified
    extensions of so-/gso-structures (strict + weak / weak + apart).
    Front blocks are pruned, not filtered: a block must contain no point with
    a remaining strict predecessor, must be closed under remaining weak
    predecessors, and may not contain an apart pair.
    """
    carrier = frozenset(carrier)
    strict = frozenset(strict)
    weak = frozenset(weak)
    apart = frozenset(apart)

    def blocks(remaining: frozenset) -> Iterator[tuple[frozenset, ...]]:
        if not remaining:
            yield ()
            return
        ok = {
            x
            for x in remaining
            if not any((y, x) in strict for y in remaining)
        }
        # weak-closure of each admissible point: everything that must ride
        # along in the same (first) block; unusable if it needs a point that
        # still has strict predecessors.  Every admissible first block is a
        # union of such closures (and any union of closed sets is closed).
        closure = {}
        for x in ok:
            need = {x}
            frontier = [x]
            while frontier:
                cur = frontier.pop()
                for y in remaining:
                    if (y, cur) in weak and y not in need:
                        need.add(y)
                        frontier.append(y)
            if need <= ok:
                closure[x] = frozenset(need)
        usable = sorted(closure, key=repr)
        candidates = set()
        for picked in _nonempty_subsets(usable):
            block = frozenset().union(*(closure[x] for x in picked))
            if block not in candidates:
                if not any((a, b) in apart for a in block for b in block):
                    candidates.add(block)
        for block in sorted(candidates, key=lambda b: sorted(map(repr, b))):
            for rest in blocks(remaining - block):
                yield (block, *rest)

    yield from blocks(carrier)


def _nonempty_subsets(items: list) -> Iterator[tuple]:
    n = len(items)
    for mask in range(1, 1 << n):
        yield tuple(items[i] for i in range(n) if mask & (1 << i))


def partition_to_order(partition: tuple[frozenset, ...]) -> Relation:
    """The stratified order whose blocks, in order, are the given partition."""
    carrier = frozenset().union(*partition) if partition else frozenset()
    pairs = set()
    for i, block in enumerate(partition):
        for later in partition[i + 1:]:
            pairs.update((a, b) for a in block for b in later)
    return Relation(carrier, frozenset(pairs))


def order_to_partition(rel: Relation) -> tuple[frozenset, ...]:
    """The block sequence of a stratified order; raises NotStratified otherwise."""
    if not is_stratified(rel):
        raise NotStratified(f"relation on {sorted(map(repr, rel.carrier))} is not stratified")
    remaining = set(rel.carrier)
    blocks = []
    while remaining:
        bottom = frozenset(
            x for x in remaining if not any((y, x) in rel.pairs for y in remaining)
        )
        blocks.append(bottom)
        remaining -= bottom
    return tuple(blocks)


def extensions(poset: Relation, kind: str, cap: int = EXTENSION_CARRIER_CAP) -> list[Relation]:
    """All total or stratified extensions of a partial order."""
    if len(poset.carrier) > cap:
        raise CarrierTooLarge(f"carrier of {len(poset.carrier)} points exceeds cap {cap}")
    if kind == "total":
        apart = {
            (a, b) for a in poset.carrier for b in poset.carrier if a != b
        }
        parts = ordered_partitions(poset.carrier, strict=poset.pairs, apart=apart)
    elif kind == "stratified":
        parts = ordered_partitions(poset.carrier, strict=poset.pairs)
    else:
        raise ValueError(f"unknown extension kind {kind!r}")
    return [partition_to_order(p) for p in parts]


def szpilrajn_check(poset: Relation, cap: int = EXTENSION_CARRIER_CAP) -> bool:
    """Is the order the intersection of its total extensions, and also of its
    stratified extensions?  True for every finite poset; this is the oracle."""
    for kind in ("total", "stratified"):
        exts = extensions(poset, kind, cap=cap)
        common = frozenset.intersection(*(e.pairs for e in exts))
        if common != poset.pairs:
            return False
    return True


# --------------------------------------------------------------------------
# structure closures
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class RelStructure:
    carrier: frozenset
    r1: Relation
    r2: Relation

    def __le__(self, other: "RelStructure") -> bool:
        return (
            self.carrier == other.carrier
            and self.r1.pairs <= other.r1.pairs
            and self.r2.pairs <= other.r2.pairs
        )


def rel_structure(carrier: Iterable[Point], r1: Iterable[tuple], r2: Iterable[tuple]) -> RelStructure:
    carrier = frozenset(carrier)
    return RelStructure(carrier, Relation.over(carrier, r1), Relation.over(carrier, r2))


def diamond_closure(s: RelStructure) -> RelStructure:
    """(X, R1, R2) |-> (X, (R1 u R2)* . R1 . (R1 u R2)*, (R1 u R2)* \\ id).

    The result is a so-structure exactly when its first component is
    irreflexive.
    """
    both_star = (s.r1 | s.r2).reflexive_transitive_closure()
    prec = both_star.compose(s.r1).compose(both_star)
    ident = frozenset((x, x) for x in s.carrier)
    wc = Relation(s.carrier, both_star.pairs - ident)
    return RelStructure(s.carrier, prec, wc)


def bowtie_closure(s: RelStructure) -> RelStructure:
    """(X, R1, R2) |-> (X, sym(prec0) u R1, wc0) where (prec0, wc0) is the
    diamond closure of (R1 n R2*, R2)."""
    r3 = s.r1 & s.r2.reflexive_transitive_closure()
    inner = diamond_closure(RelStructure(s.carrier, r3, s.r2))
    return RelStructure(s.carrier, inner.r1.symmetric_closure() | s.r1, inner.r2)

"""Congruence and ideal machinery for finite hemirings.

Congruences are partitions stored as canonical block labels.  The principal
congruence closure is the dominant cost of the package, so it runs as a
vectorized fixpoint: one pass substitutes block representatives through both
operation tables and merges every mismatch at once; passes repeat until no
merge fires.  Deciding congruence-simpleness needs only principal
congruences: any congruence above the diagonal contains a principal one.
"""

from __future__ import annotations

import numpy as np

from .core import FiniteHemiring, SizeGuardExceeded, is_aic
from .lattices import EndoSemiring

__all__ = [
    "Congruence",
    "IdealSubset",
    "aic_max_ideal",
    "all_congruences",
    "all_ideals",
    "bourne_congruence",
    "generated_ideal",
    "ideal_violation",
    "is_congruence",
    "is_congruence_simple",
    "is_ideal_simple",
    "is_simple",
    "is_subtractive",
    "principal_congruence",
    "radical_left",
    "tau_congruence",
]

CONGRUENCE_LATTICE_BOUND = 40
RADICAL_BOUND = 24


def _canonical_labels(labels) -> tuple[int, ...]:
    """Renumber block ids by first appearance."""
    seen: dict[int, int] = {}
    out = []
    for v in labels:
        v = int(v)
        if v not in seen:
            seen[v] = len(seen)
        out.append(seen[v])
    return tuple(out)


class Congruence:
    """A partition of 0..n-1 compatible with both hemiring operations."""

    __slots__ = ("labels",)

    def __init__(self, labels):
        self.labels = _canonical_labels(labels)

    @classmethod
    def diagonal(cls, n: int) -> "Congruence":
        return cls(range(n))

    @classmethod
    def universal(cls, n: int) -> "Congruence":
        return cls([0] * n)

    @property
    def order(self) -> int:
        return len(self.labels)

    @property
    def num_blocks(self) -> int:
        return len(set(self.labels))

    @property
    def is_diagonal(self) -> bool:
        return self.num_blocks == self.order

    @property
    def is_universal(self) -> bool:
        return self.num_blocks == 1

    def same(self, a: int, b: int) -> bool:
        return self.labels[a] == self.labels[b]

    def blocks(self) -> tuple[tuple[int, ...], ...]:
        by: dict[int, list[int]] = {}
        for x, l in enumerate(self.labels):
            by.setdefault(l, []).append(x)
        return tuple(tuple(b) for _, b in sorted(by.items()))

    def refines(self, other: "Congruence") -> bool:
        """Every block of self lies inside a block of other."""
        rep: dict[int, int] = {}
        for x, l in enumerate(self.labels):
            o = other.labels[x]
            if rep.setdefault(l, o) != o:
                return False
        return True

    def join(self, other: "Congruence") -> "Congruence":
        """Smallest partition containing both (transitive closure of union)."""
        n = self.order
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for labs in (self.labels, other.labels):
            first: dict[int, int] = {}
            for x, l in enumerate(labs):
                if l in first:
                    ra, rb = find(first[l]), find(x)
                    if ra != rb:
                        parent[max(ra, rb)] = min(ra, rb)
                else:
                    first[l] = x
        return Congruence([find(x) for x in range(n)])

    def __eq__(self, other):
        return isinstance(other, Congruence) and self.labels == other.labels

    def __hash__(self):
        return hash(self.labels)

    def __repr__(self):
        return f"Congruence(blocks={self.num_blocks}/{self.order})"


def _tables(R: FiniteHemiring) -> tuple[np.ndarray, ...]:
    # add is symmetric; mul needs both argument slots
    return (R.add, R.mul, np.ascontiguousarray(R.mul.T))


def _compat_closure(R: FiniteHemiring, labels: np.ndarray,
                    stop_at_universal: bool = False,
                    universal_pairs: tuple[np.ndarray, np.ndarray] | None = None
                    ) -> np.ndarray:
    """Smallest compatible partition above ``labels``.

    ``labels[i]`` must hold the least element of i's block and is updated in
    place to the closure's representatives.  ``universal_pairs`` are pairs
    already known to generate the universal congruence: the moment the
    partition identifies one such pair the closure is universal, so the
    full fixpoint can be skipped.
    """
    tables = _tables(R)
    n = labels.size

    def hint_hit() -> bool:
        if universal_pairs is None:
            return False
        us, vs = universal_pairs
        return us.size > 0 and bool((labels[us] == labels[vs]).any())

    if hint_hit():
        return np.zeros(n, dtype=labels.dtype)
    while True:
        changed = False
        for T in tables:
            a = labels[T]            # block of x o c
            b = labels[T[labels]]    # block of rep(x) o c
            bad = a != b
            if not bad.any():
                continue
            changed = True
            lo = np.minimum(a[bad], b[bad]).astype(np.int64)
            hi = np.maximum(a[bad], b[bad]).astype(np.int64)
            flags = np.zeros(n * n, dtype=bool)
            flags[lo * n + hi] = True
            parent = np.arange(n, dtype=labels.dtype)
            for code in np.flatnonzero(flags):
                x, y = divmod(int(code), n)
                # union by least representative
                while parent[x] != x:
                    x = parent[x]
                while parent[y] != y:
                    y = parent[y]
                if x != y:
                    parent[max(x, y)] = min(x, y)
            while True:
                pp = parent[parent]
                if (pp == parent).all():
                    break
                parent = pp
            labels = parent[labels]
            if stop_at_universal and (labels == labels[0]).all():
                return labels
            if hint_hit():
                return np.zeros(n, dtype=labels.dtype)
        if not changed:
            return labels


def _initial_labels(n: int, pairs) -> np.ndarray:
    labels = np.arange(n, dtype=np.int32)
    for a, b in pairs:
        ra, rb = int(labels[a]), int(labels[b])
        if ra != rb:
            lo, hi = min(ra, rb), max(ra, rb)
            labels[labels == hi] = lo
    return labels


def congruence_closure(R: FiniteHemiring, pairs) -> Congruence:
    """Smallest congruence containing the given element pairs."""
    labels = _compat_closure(R, _initial_labels(R.order, pairs))
    return Congruence(labels)


def principal_congruence(R: FiniteHemiring, a: int, b: int) -> Congruence:
    """Smallest congruence identifying a and b."""
    return congruence_closure(R, [(a, b)])


def is_congruence(R: FiniteHemiring, part: Congruence) -> bool:
    """Check compatibility of a partition with both operations."""
    labels = np.asarray(part.labels, dtype=np.int32)
    rep: dict[int, int] = {}
    reps = np.empty(R.order, dtype=np.int32)
    for x, l in enumerate(part.labels):
        reps[x] = rep.setdefault(l, x)
    for T in _tables(R):
        if (labels[T] != labels[T[reps]]).any():
            return False
    return True


def is_congruence_simple(R: FiniteHemiring) -> bool:
    """Only the diagonal and universal congruences exist.

    Sound and complete via principal congruences only: a congruence above
    the diagonal contains (a, b) for some a != b, hence the principal
    congruence of that pair.
    """
    n = R.order
    known_u: list[int] = []
    known_v: list[int] = []
    for a in range(n):
        for b in range(a + 1, n):
            hint = (np.asarray(known_u, dtype=np.int32),
                    np.asarray(known_v, dtype=np.int32))
            labels = _compat_closure(R, _initial_labels(n, [(a, b)]),
                                     stop_at_universal=True,
                                     universal_pairs=hint)
            if (labels != labels[0]).any():
                return False
            known_u.append(a)
            known_v.append(b)
    return True


def all_congruences(R: FiniteHemiring, max_order: int = CONGRUENCE_LATTICE_BOUND) -> list[Congruence]:
    """The full congruence lattice, as joins of principal congruences."""
    n = R.order
    if n > max_order:
        raise SizeGuardExceeded(f"congruence lattice enumeration bounded at order {max_order}")
    found = {Congruence.diagonal(n)}
    principals = set()
    for a in range(n):
        for b in range(a + 1, n):
            principals.add(principal_congruence(R, a, b))
    found |= principals
    frontier = list(principals)
    while frontier:
        nxt = []
        for c in frontier:
            for p in principals:
                j = c.join(p)
                if j not in found:
                    found.add(j)
                    nxt.append(j)
        frontier = nxt
    return sorted(found, key=lambda c: c.labels)


class IdealSubset:
    """A subset closed under addition and the declared outer multiplications."""

    __slots__ = ("members", "sidedness", "order")

    def __init__(self, members, sidedness: str, order: int):
        if sidedness not in ("left", "right", "two-sided"):
            raise ValueError(f"bad sidedness {sidedness!r}")
        self.members = frozenset(int(x) for x in members)
        self.sidedness = sidedness
        self.order = order

    @property
    def is_zero(self) -> bool:
        return len(self.members) == 1

    @property
    def is_full(self) -> bool:
        return len(self.members) == self.order

    def mask(self) -> np.ndarray:
        m = np.zeros(self.order, dtype=bool)
        m[list(self.members)] = True
        return m

    def __contains__(self, x: int) -> bool:
        return int(x) in self.members

    def __le__(self, other: "IdealSubset") -> bool:
        return self.members <= other.members

    def __eq__(self, other):
        return (isinstance(other, IdealSubset) and self.members == other.members
                and self.sidedness == other.sidedness)

    def __hash__(self):
        return hash((self.members, self.sidedness))

    def __repr__(self):
        return f"IdealSubset({sorted(self.members)}, {self.sidedness})"


def ideal_violation(R: FiniteHemiring, members, sidedness: str):
    """None if members form an ideal of the declared sidedness, else a reason."""
    mem = frozenset(int(x) for x in members)
    if R.zero not in mem:
        return ("missing-zero", R.zero)
    lst = sorted(mem)
    for x in lst:
        for y in lst:
            if int(R.add[x, y]) not in mem:
                return ("add", (x, y))
    for x in lst:
        for r in range(R.order):
            if sidedness in ("left", "two-sided") and int(R.mul[r, x]) not in mem:
                return ("left-mul", (r, x))
            if sidedness in ("right", "two-sided") and int(R.mul[x, r]) not in mem:
                return ("right-mul", (x, r))
    return None


def generated_ideal(R: FiniteHemiring, seed, sidedness: str = "two-sided") -> IdealSubset:
    """Closure of ``seed`` under addition and outer multiplication."""
    n = R.order
    mask = np.zeros(n, dtype=bool)
    mask[R.zero] = True
    for x in seed:
        mask[int(x)] = True
    while True:
        idx = np.flatnonzero(mask)
        new = mask.copy()
        new[R.add[np.ix_(idx, idx)].ravel()] = True
        if sidedness in ("left", "two-sided"):
            new[R.mul[:, idx].ravel()] = True
        if sidedness in ("right", "two-sided"):
            new[R.mul[idx, :].ravel()] = True
        if (new == mask).all():
            return IdealSubset(np.flatnonzero(mask), sidedness, n)
        mask = new


def all_ideals(R: FiniteHemiring, sidedness: str = "two-sided",
               max_order: int = CONGRUENCE_LATTICE_BOUND) -> list[IdealSubset]:
    """Every ideal, as sums of principal ideals closed to a fixpoint."""
    n = R.order
    if n > max_order:
        raise SizeGuardExceeded(f"ideal enumeration bounded at order {max_order}")
    principals = {generated_ideal(R, [x], sidedness) for x in range(n)}
    found = set(principals)
    found.add(IdealSubset([R.zero], sidedness, n))
    frontier = list(principals)
    while frontier:
        nxt = []
        for I in frontier:
            for P in principals:
                s = generated_ideal(R, I.members | P.members, sidedness)
                if s not in found:
                    found.add(s)
                    nxt.append(s)
        frontier = nxt
    return sorted(found, key=lambda I: (len(I.members), sorted(I.members)))


def is_ideal_simple(R: FiniteHemiring) -> bool:
    """{0} and R are the only two-sided ideals.

    This is the literal definition: the trivial and zero-multiplication
    algebras pass it; callers that need a stronger reading check
    ``has_zero_multiplication`` separately.
    """
    for x in R.elements():
        if x == R.zero:
            continue
        if not generated_ideal(R, [x], "two-sided").is_full:
            return False
    return True


def is_simple(R: FiniteHemiring) -> bool:
    """Simultaneously congruence-simple and ideal-simple."""
    return is_ideal_simple(R) and is_congruence_simple(R)


def bourne_congruence(R: FiniteHemiring, I: IdealSubset) -> Congruence:
    """x = y iff x + a = y + b for some a, b in I, transitively closed.

    The raw relation is reflexive and symmetric; its transitive closure is
    computed by merging connected components, then validated as a
    congruence (always succeeds for a two-sided ideal).
    """
    bad = ideal_violation(R, I.members, I.sidedness)
    if bad is not None:
        raise ValueError(f"not a validated ideal: {bad}")
    n = R.order
    idx = sorted(I.members)
    reach = np.zeros((n, n), dtype=bool)      # reach[x, v]: v = x + a for a in I
    for x in range(n):
        reach[x, R.add[x, idx]] = True
    related = (reach.astype(np.int16) @ reach.astype(np.int16).T) > 0
    labels = np.arange(n, dtype=np.int32)
    for x in range(n):
        partners = np.flatnonzero(related[x])
        lo = labels[partners].min()
        labels[np.isin(labels, labels[partners])] = lo
    cong = Congruence(labels)
    if not is_congruence(R, cong):
        raise ValueError("Bourne relation did not close to a congruence")
    return cong


def is_subtractive(R: FiniteHemiring, I: IdealSubset) -> bool:
    """x + y in I and y in I imply x in I."""
    mask = I.mask()
    idx = sorted(I.members)
    sums_in = mask[R.add[:, idx]]            # [x, j] : x + y_j in I
    return not (sums_in.any(axis=1) & ~mask).any()


def tau_congruence(E: EndoSemiring) -> Congruence:
    """f ~ g iff some a has f(x) v a = g(x) v a for all x; validated.

    Always transitive (witnesses compose by joining), and universal whenever
    the underlying semilattice has a top.
    """
    M = E.lattice
    arr = np.array(E.maps, dtype=np.int32)
    k = arr.shape[0]
    labels = np.arange(k, dtype=np.int32)
    for a in range(M.order):
        shifted = M.join[arr, a]             # [i, x] -> f_i(x) v a
        groups: dict[bytes, int] = {}
        for i in range(k):
            key = shifted[i].tobytes()
            j = groups.setdefault(key, i)
            if j != i:
                lo, hi = sorted((int(labels[i]), int(labels[j])))
                labels[labels == hi] = lo
    cong = Congruence(labels)
    if not is_congruence(E.hemiring, cong):
        raise ValueError("tau relation is not a congruence")
    return cong


def _left_subsemimodules(R: FiniteHemiring, cap: int = 200000) -> list[frozenset[int]]:
    """All left ideals of the regular left semimodule, by closure extension."""
    start = generated_ideal(R, [], "left").members
    found = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for S in frontier:
            for x in range(R.order):
                if x in S:
                    continue
                T = generated_ideal(R, S | {x}, "left").members
                if T not in found:
                    found.add(T)
                    nxt.append(T)
                    if len(found) > cap:
                        raise SizeGuardExceeded("left subsemimodule lattice too large")
        frontier = nxt
    return sorted(found, key=lambda S: (len(S), sorted(S)))


def radical_left(R: FiniteHemiring, max_order: int = RADICAL_BOUND) -> IdealSubset:
    """Intersection of the maximal proper left subsemimodules of _R R.

    Brute-force over the subsemimodule lattice; if no proper subsemimodule
    exists the radical is all of R.
    """
    n = R.order
    if n > max_order:
        raise SizeGuardExceeded(f"radical computation bounded at order {max_order}")
    subs = [S for S in _left_subsemimodules(R) if len(S) < n]
    maximal = [S for S in subs
               if not any(S < T for T in subs)]
    if not maximal:
        return IdealSubset(range(n), "left", n)
    members = frozenset.intersection(*maximal)
    return IdealSubset(members, "left", n)


def aic_max_ideal(R: FiniteHemiring) -> IdealSubset:
    """{a : ra != 1 for every r}; for a chain semiring this is the unique
    maximal left ideal and equals the radical."""
    if R.one is None:
        raise ValueError("requires a multiplicative identity")
    if not is_aic(R):
        raise ValueError("requires an additively idempotent chain semiring")
    solvable = (R.mul == R.one).any(axis=0)   # exists r with r*a = 1
    members = np.flatnonzero(~solvable)
    bad = ideal_violation(R, members, "left")
    if bad is not None:
        raise ValueError(f"J is not a left ideal: {bad}")
    return IdealSubset(members, "left", R.order)

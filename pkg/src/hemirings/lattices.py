"""Finite semilattices with zero, finite lattices, and their endomorphism
hemirings.

A finite semilattice here is a total idempotent commutative monoid (M, v, 0),
i.e. a join table.  Every such table is automatically a bounded lattice
(pairwise meets exist as joins of common lower bounds), so the lattice
wrapper below can always be built from a valid semilattice; the optional
return of ``try_lattice`` guards against invalid input only.
"""

from __future__ import annotations

import numpy as np

from .core import (
    FiniteHemiring,
    PartialOrder,
    SizeGuardExceeded,
    as_op_table,
)

__all__ = [
    "Endo",
    "EndoSemiring",
    "FiniteLattice",
    "FiniteSemilattice",
    "build_E_M",
    "build_F_M",
    "e_ab",
    "endo_enumerate",
    "endo_enumerate_naive",
    "induced_order",
    "is_dense",
    "is_distributive",
    "is_semilattice",
    "e_ab_absorb",
    "semilattice_violation",
    "try_lattice",
]

Endo = tuple  # a join- and zero-preserving self-map, as a tuple of images


def semilattice_violation(join, zero: int):
    """None if (join, zero) is a semilattice; else (law, witness)."""
    join = as_op_table(join)
    n = join.shape[0]
    if not 0 <= zero < n:
        raise ValueError("zero index out of range")
    idx = np.arange(n)
    bad = np.flatnonzero(join[idx, idx] != idx)
    if bad.size:
        return ("idempotent", (int(bad[0]),))
    comm = join != join.T
    if comm.any():
        a, b = np.argwhere(comm)[0]
        return ("commutative", (int(a), int(b)))
    for a in range(n):
        left = join[join[a], :]
        right = join[a][join]
        diff = left != right
        if diff.any():
            b, c = np.argwhere(diff)[0]
            return ("associative", (a, int(b), int(c)))
    neut = np.flatnonzero(join[zero] != idx)
    if neut.size:
        return ("zero-neutral", (int(neut[0]),))
    return None


def is_semilattice(join, zero: int = 0) -> bool:
    return semilattice_violation(join, zero) is None


class FiniteSemilattice:
    """Idempotent commutative monoid (M, v, 0) on 0..n-1."""

    __slots__ = ("join", "zero", "name", "_memo")

    def __init__(self, join, zero: int = 0, name: str = "", validate: bool = True):
        self.join = as_op_table(join)
        self.zero = int(zero)
        self.name = name
        self._memo: dict = {}
        if validate:
            bad = semilattice_violation(self.join, self.zero)
            if bad is not None:
                raise ValueError(f"not a semilattice: {bad[0]} fails at {bad[1]}")

    @property
    def order(self) -> int:
        return self.join.shape[0]

    @property
    def top(self) -> int:
        """A finite total join always has a greatest element."""
        t = induced_order(self).top()
        assert t is not None
        return t

    def leq(self, a: int, b: int) -> bool:
        return bool(self.join[a, b] == b)

    def join_all(self, xs) -> int:
        out = self.zero
        for x in xs:
            out = int(self.join[out, x])
        return out

    def __eq__(self, other):
        return (isinstance(other, FiniteSemilattice) and self.zero == other.zero
                and self.join.shape == other.join.shape
                and bool((self.join == other.join).all()))

    def __hash__(self):
        return hash((self.join.tobytes(), self.zero))

    def __repr__(self):
        return f"FiniteSemilattice({self.name or self.order})"


def induced_order(M: FiniteSemilattice) -> PartialOrder:
    """x <= y iff x v y = y."""
    memo = M._memo.get("order")
    if memo is None:
        memo = PartialOrder(M.join == np.arange(M.order)[None, :])
        M._memo["order"] = memo
    return memo


class FiniteLattice:
    """A finite semilattice together with its meet table."""

    __slots__ = ("base", "meet")

    def __init__(self, base: FiniteSemilattice, meet, validate: bool = True):
        self.base = base
        self.meet = as_op_table(meet, order=base.order)
        if validate:
            po = induced_order(base)
            want = po.meet_table()
            if want is None or not (want == self.meet).all():
                raise ValueError("meet table is not the glb of the induced order")
            # absorption: x v (x ^ y) = x and x ^ (x v y) = x
            n = base.order
            idx = np.arange(n)[:, None]
            if not (base.join[idx, self.meet] == idx).all():
                raise ValueError("absorption fails")
            if not (self.meet[idx, base.join] == idx).all():
                raise ValueError("absorption fails")

    @property
    def order(self) -> int:
        return self.base.order


def try_lattice(M: FiniteSemilattice) -> FiniteLattice | None:
    """Compute pairwise meets; None if some pair has no greatest lower bound.

    For a validated FiniteSemilattice this always succeeds (the join of the
    common lower bounds is the meet); the optional covers malformed input.
    """
    meets = induced_order(M).meet_table()
    if meets is None:
        return None
    return FiniteLattice(M, meets)


def is_distributive(L: FiniteLattice) -> bool:
    """x ^ (y v z) = (x ^ y) v (x ^ z), exhaustively."""
    join, meet = L.base.join, L.meet
    for x in range(L.order):
        lhs = meet[x][join]
        rhs = join[np.ix_(meet[x], meet[x])]
        if not (lhs == rhs).all():
            return False
    return True


def e_ab(M: FiniteSemilattice, a: int, b: int) -> Endo:
    """The endomorphism sending x to 0 when x v a = a and to b otherwise."""
    below = M.join[:, a] == a
    return tuple(M.zero if below[x] else b for x in range(M.order))


def endo_enumerate_naive(M: FiniteSemilattice, max_order: int = 6) -> list[Endo]:
    """Filter all |M|^|M| self-maps; the oracle for the pruned enumeration."""
    if M.order > max_order:
        raise SizeGuardExceeded(f"naive endomorphism filter bounded at order {max_order}")
    import itertools
    n = M.order
    join = M.join
    out = []
    for f in itertools.product(range(n), repeat=n):
        if f[M.zero] != M.zero:
            continue
        if all(f[join[x, y]] == join[f[x], f[y]] for x in range(n) for y in range(n)):
            out.append(tuple(f))
    out.sort()
    return out


def endo_enumerate(M: FiniteSemilattice) -> list[Endo]:
    """All join- and zero-preserving self-maps, sorted.

    Values are extended along a linear extension of the induced order;
    an element that is the join of two earlier ones gets a forced value,
    and monotonicity against earlier comparable elements prunes the rest.
    """
    n = M.order
    join = M.join
    po = induced_order(M)
    ext = sorted(range(n), key=lambda x: (int(po.leq[:, x].sum()), x))
    pos = {x: k for k, x in enumerate(ext)}

    # strict predecessors (in M-order) already placed, and forced join
    # decompositions z = x v y with x, y placed strictly earlier
    preds: list[list[int]] = []
    decomps: list[list[tuple[int, int]]] = []
    for k, z in enumerate(ext):
        preds.append([x for x in ext[:k] if po.leq[x, z]])
        pairs = []
        for i, x in enumerate(ext[:k]):
            for y in ext[i:k]:
                if join[x, y] == z:
                    pairs.append((x, y))
        decomps.append(pairs)

    f = [-1] * n
    out: list[Endo] = []

    def ok(k: int, z: int) -> bool:
        v = f[z]
        for x in preds[k]:
            if join[f[x], v] != v:
                return False
        for x, y in decomps[k]:
            if join[f[x], f[y]] != v:
                return False
        return True

    def extend(k: int):
        if k == n:
            out.append(tuple(f))
            return
        z = ext[k]
        if z == M.zero:
            candidates = (M.zero,)
        elif decomps[k]:
            x, y = decomps[k][0]
            candidates = (int(join[f[x], f[y]]),)
        else:
            candidates = range(n)
        for v in candidates:
            f[z] = v
            if ok(k, z):
                extend(k + 1)
            f[z] = -1

    extend(0)
    out.sort()
    return out


class EndoSemiring:
    """A set of endomorphisms of M closed under pointwise join and
    composition, packaged as a FiniteHemiring.

    Addition is pointwise join, multiplication is composition with
    (f*g)(x) = f(g(x)); the identity map, when present, is the one.
    """

    __slots__ = ("lattice", "maps", "hemiring", "index")

    def __init__(self, M: FiniteSemilattice, maps: list[Endo], name: str = ""):
        self.lattice = M
        self.maps = sorted(set(maps))
        self.index = {m: i for i, m in enumerate(self.maps)}
        k = len(self.maps)
        arr = np.array(self.maps, dtype=np.int32)
        add = np.empty((k, k), dtype=np.int32)
        mul = np.empty((k, k), dtype=np.int32)
        for i in range(k):
            joined = M.join[arr[i], arr]          # [j, x] -> f_i(x) v f_j(x)
            composed = arr[i][arr]                # [j, x] -> f_i(f_j(x))
            for j in range(k):
                try:
                    add[i, j] = self.index[tuple(int(v) for v in joined[j])]
                    mul[i, j] = self.index[tuple(int(v) for v in composed[j])]
                except KeyError:
                    raise ValueError("carrier is not closed under join/composition")
        zero_map = tuple([M.zero] * M.order)
        ident = tuple(range(M.order))
        one = self.index.get(ident)
        self.hemiring = FiniteHemiring(add, mul, zero=self.index[zero_map],
                                       one=one, name=name or f"End({M.name or M.order})")

    @property
    def order(self) -> int:
        return len(self.maps)

    def endo_index(self, f: Endo) -> int:
        return self.index[tuple(f)]

    def __repr__(self):
        return f"EndoSemiring({self.lattice!r}, order={self.order})"


def build_E_M(M: FiniteSemilattice) -> EndoSemiring:
    """The full endomorphism semiring of M."""
    return EndoSemiring(M, endo_enumerate(M), name=f"E_{M.name or M.order}")


def generator_maps(M: FiniteSemilattice) -> list[Endo]:
    """The distinct e_{a,b}, canonicalized by map-vector equality."""
    return sorted({e_ab(M, a, b) for a in range(M.order) for b in range(M.order)})


def build_F_M(M: FiniteSemilattice) -> EndoSemiring:
    """The additive submonoid of E_M generated by all e_{a,b}.

    Computed as the closure of the generators under pointwise join; closure
    under composition is not used for generation, but packaging the result
    re-checks it (it holds because the result is an ideal of E_M).
    """
    join = M.join
    gens = generator_maps(M)
    seen = set(gens)
    frontier = list(gens)
    while frontier:
        nxt = []
        for f in frontier:
            for g in seen.copy():
                h = tuple(int(join[f[x], g[x]]) for x in range(M.order))
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return EndoSemiring(M, sorted(seen), name=f"F_{M.name or M.order}")


def e_ab_absorb(M: FiniteSemilattice, a: int, f: Endo) -> int:
    """The element c with e_{a,b} o f = e_{c,b} for every b.

    c is the join of every x with f(x) <= a; the identity is re-checked
    pointwise before returning.
    """
    c = M.join_all(x for x in range(M.order) if M.join[f[x], a] == a)
    for b in range(M.order):
        left = tuple(e_ab(M, a, b)[f[x]] for x in range(M.order))
        if left != e_ab(M, c, b):
            raise AssertionError(f"absorption identity failed at a={a}, b={b}, f={f}")
    return c


def is_dense(S, M: FiniteSemilattice) -> bool:
    """True iff every e_{a,b} belongs to S (an EndoSemiring or a set of maps)."""
    maps = set(S.maps) if isinstance(S, EndoSemiring) else set(map(tuple, S))
    return all(g in maps for g in generator_maps(M))

"""Finite hemirings and semirings given by explicit operation tables.

Elements are dense integer indices 0..n-1; both operations are n x n
lookup tables (numpy arrays), so every structural question reduces to
exhaustive table scans.  All values are immutable after construction and
every operation here is a pure function.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

__all__ = [
    "AxiomCheck",
    "AxiomError",
    "AxiomReport",
    "FiniteHemiring",
    "HomMap",
    "PartialOrder",
    "SizeGuardExceeded",
    "as_op_table",
    "canonical_form",
    "check_hemiring_axioms",
    "fingerprint",
    "hom_search",
    "infinite_element",
    "is_additively_idempotent",
    "is_aic",
    "is_dedekind_finite",
    "is_division_semiring",
    "is_isomorphic",
    "is_lattice_ordered",
    "is_zerosumfree",
    "natural_order",
    "strong_semiisomorphism_search",
]


class SizeGuardExceeded(RuntimeError):
    """An operation was asked to run beyond its configured order bound."""


class AxiomError(ValueError):
    """Operation tables failed validation; carries the full report."""

    def __init__(self, report: "AxiomReport"):
        self.report = report
        super().__init__(report.summary())


def as_op_table(entries, order: int | None = None) -> np.ndarray:
    """Coerce ``entries`` into a read-only square index table."""
    table = np.ascontiguousarray(entries, dtype=np.int32)
    if table.ndim != 2 or table.shape[0] != table.shape[1]:
        raise ValueError(f"operation table must be square, got shape {table.shape}")
    n = table.shape[0]
    if n == 0:
        raise ValueError("empty carrier")
    if order is not None and n != order:
        raise ValueError(f"table order {n} does not match expected order {order}")
    if table.min() < 0 or table.max() >= n:
        raise ValueError("table entry out of range [0, order)")
    table.setflags(write=False)
    return table


@dataclass(frozen=True)
class AxiomCheck:
    axiom: str
    ok: bool
    witness: tuple[int, ...] | None = None


@dataclass(frozen=True)
class AxiomReport:
    order: int
    checks: tuple[AxiomCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> tuple[AxiomCheck, ...]:
        return tuple(c for c in self.checks if not c.ok)

    def summary(self) -> str:
        lines = [f"order {self.order}"]
        for c in self.checks:
            if c.ok:
                lines.append(f"{c.axiom}: pass")
            else:
                lines.append(f"{c.axiom}: FAIL at {c.witness}")
        return "\n".join(lines)


def _assoc_witness(table: np.ndarray) -> tuple[int, int, int] | None:
    """First (a,b,c) with (a*b)*c != a*(b*c), scanning one row slab at a time."""
    n = table.shape[0]
    for a in range(n):
        left = table[table[a], :]  # [b,c] -> (a*b)*c
        right = table[a][table]    # [b,c] -> a*(b*c)
        bad = left != right
        if bad.any():
            b, c = np.argwhere(bad)[0]
            return (a, int(b), int(c))
    return None


def _distrib_witness(add: np.ndarray, mul: np.ndarray, side: str) -> tuple[int, int, int] | None:
    n = add.shape[0]
    for a in range(n):
        if side == "left":
            lhs = mul[a][add]                       # a*(b+c)
            rhs = add[np.ix_(mul[a], mul[a])]       # a*b + a*c
        else:
            lhs = mul[:, a][add]                    # (b+c)*a
            rhs = add[np.ix_(mul[:, a], mul[:, a])]  # b*a + c*a
        bad = lhs != rhs
        if bad.any():
            b, c = np.argwhere(bad)[0]
            return (a, int(b), int(c))
    return None


def check_hemiring_axioms(add, mul, zero: int, one: int | None = None) -> AxiomReport:
    """Exhaustively check the hemiring axioms, reporting a witness per failure.

    A ``FiniteHemiring`` is constructible from (add, mul, zero, one) exactly
    when every check passes.  Mismatched table orders raise ``ValueError``
    before any axiom is examined.
    """
    add = as_op_table(add)
    n = add.shape[0]
    mul = as_op_table(mul, order=n)
    if not 0 <= zero < n:
        raise ValueError(f"zero index {zero} out of range")
    if one is not None and not 0 <= one < n:
        raise ValueError(f"one index {one} out of range")

    checks: list[AxiomCheck] = []
    idx = np.arange(n)

    comm = add != add.T
    if comm.any():
        a, b = np.argwhere(comm)[0]
        checks.append(AxiomCheck("add-commutative", False, (int(a), int(b))))
    else:
        checks.append(AxiomCheck("add-commutative", True))

    w = _assoc_witness(add)
    checks.append(AxiomCheck("add-associative", w is None, w))

    neut = add[zero] != idx
    if neut.any():
        x = int(np.argwhere(neut)[0][0])
        checks.append(AxiomCheck("zero-neutral", False, (zero, x)))
    else:
        checks.append(AxiomCheck("zero-neutral", True))

    w = _assoc_witness(mul)
    checks.append(AxiomCheck("mul-associative", w is None, w))

    w = _distrib_witness(add, mul, "left")
    checks.append(AxiomCheck("left-distributive", w is None, w))
    w = _distrib_witness(add, mul, "right")
    checks.append(AxiomCheck("right-distributive", w is None, w))

    absb = (mul[zero] != zero) | (mul[:, zero] != zero)
    if absb.any():
        x = int(np.argwhere(absb)[0][0])
        checks.append(AxiomCheck("zero-absorbing", False, (zero, x)))
    else:
        checks.append(AxiomCheck("zero-absorbing", True))

    if one is not None:
        ident = (mul[one] != idx) | (mul[:, one] != idx)
        if ident.any():
            x = int(np.argwhere(ident)[0][0])
            checks.append(AxiomCheck("one-identity", False, (one, x)))
        else:
            checks.append(AxiomCheck("one-identity", True))

    return AxiomReport(n, tuple(checks))


class FiniteHemiring:
    """A finite hemiring (R, +, *, 0), optionally with a multiplicative one.

    The constructor validates all axioms (``validate=False`` skips this for
    callers that re-validate on their own terms, e.g. very large matrix
    semirings).
    """

    __slots__ = ("add", "mul", "zero", "one", "name", "_memo")

    def __init__(self, add, mul, zero: int = 0, one: int | None = None,
                 name: str = "", validate: bool = True):
        self.add = as_op_table(add)
        self.mul = as_op_table(mul, order=self.add.shape[0])
        self.zero = int(zero)
        self.one = None if one is None else int(one)
        self.name = name
        self._memo: dict = {}
        if validate:
            report = check_hemiring_axioms(self.add, self.mul, self.zero, self.one)
            if not report.ok:
                raise AxiomError(report)

    @property
    def order(self) -> int:
        return self.add.shape[0]

    @property
    def is_ring(self) -> bool:
        """True iff the additive reduct is a group."""
        return bool((self.add == self.zero).any(axis=1).all())

    @property
    def is_proper(self) -> bool:
        return not self.is_ring

    @property
    def is_semiring(self) -> bool:
        """Has a multiplicative identity distinct from zero (so order >= 2)."""
        return self.one is not None and self.one != self.zero

    def elements(self) -> range:
        return range(self.order)

    def idempotents(self) -> list[int]:
        """Multiplicative idempotents e*e = e, ascending."""
        d = self.mul[np.arange(self.order), np.arange(self.order)]
        return [int(i) for i in np.flatnonzero(d == np.arange(self.order))]

    def has_zero_multiplication(self) -> bool:
        return bool((self.mul == self.zero).all())

    def is_commutative(self) -> bool:
        return bool((self.mul == self.mul.T).all())

    def __eq__(self, other) -> bool:
        return (isinstance(other, FiniteHemiring)
                and self.zero == other.zero and self.one == other.one
                and self.add.shape == other.add.shape
                and bool((self.add == other.add).all())
                and bool((self.mul == other.mul).all()))

    def __hash__(self):
        return hash((self.add.tobytes(), self.mul.tobytes(), self.zero, self.one))

    def __repr__(self) -> str:
        tag = self.name or f"order {self.order}"
        one = "" if self.one is None else f", one={self.one}"
        return f"FiniteHemiring({tag}, zero={self.zero}{one})"


class PartialOrder:
    """A partial order on 0..n-1 as a boolean leq matrix."""

    __slots__ = ("leq",)

    def __init__(self, leq, validate: bool = True):
        leq = np.ascontiguousarray(leq, dtype=bool)
        if leq.ndim != 2 or leq.shape[0] != leq.shape[1]:
            raise ValueError("leq must be a square boolean matrix")
        if validate:
            n = leq.shape[0]
            if not leq[np.diag_indices(n)].all():
                raise ValueError("relation is not reflexive")
            if (leq & leq.T & ~np.eye(n, dtype=bool)).any():
                raise ValueError("relation is not antisymmetric")
            closure = leq @ leq
            if (closure & ~leq).any():
                raise ValueError("relation is not transitive")
        leq.setflags(write=False)
        self.leq = leq

    @property
    def order(self) -> int:
        return self.leq.shape[0]

    @property
    def is_total(self) -> bool:
        return bool((self.leq | self.leq.T).all())

    def top(self) -> int | None:
        hits = np.flatnonzero(self.leq.all(axis=0))
        return int(hits[0]) if hits.size else None

    def bottom(self) -> int | None:
        hits = np.flatnonzero(self.leq.all(axis=1))
        return int(hits[0]) if hits.size else None

    def meet(self, a: int, b: int) -> int | None:
        """Greatest lower bound of a and b, if it exists."""
        lower = self.leq[:, a] & self.leq[:, b]
        cand = np.flatnonzero(lower)
        for x in cand:
            if self.leq[cand, x].all():
                return int(x)
        return None

    def meet_table(self) -> np.ndarray | None:
        """All binary meets, or None if some pair has no glb."""
        n = self.order
        out = np.empty((n, n), dtype=np.int32)
        for a in range(n):
            for b in range(a, n):
                m = self.meet(a, b)
                if m is None:
                    return None
                out[a, b] = out[b, a] = m
        return out

    def rank_profile(self) -> tuple[int, ...]:
        """Sorted down-set sizes; a cheap isomorphism invariant."""
        return tuple(sorted(int(k) for k in self.leq.sum(axis=0)))

    def comparable(self, a: int, b: int) -> bool:
        return bool(self.leq[a, b] or self.leq[b, a])


def is_additively_idempotent(R: FiniteHemiring) -> bool:
    """x + x = x for every x."""
    n = R.order
    return bool((R.add[np.arange(n), np.arange(n)] == np.arange(n)).all())


def natural_order(R: FiniteHemiring) -> PartialOrder:
    """The order r <= r' iff r + r' = r', defined on additively idempotent R.

    On a non-idempotent algebra the relation is not even reflexive, so the
    input is rejected with a witness element rather than returned as a
    preorder.
    """
    memo = R._memo.get("natural_order")
    if memo is not None:
        return memo
    n = R.order
    diag = R.add[np.arange(n), np.arange(n)]
    bad = np.flatnonzero(diag != np.arange(n))
    if bad.size:
        raise ValueError(
            f"natural order undefined: element {int(bad[0])} is not additively idempotent")
    leq = R.add == np.arange(n)[None, :]
    order = PartialOrder(leq)
    R._memo["natural_order"] = order
    return order


def infinite_element(R: FiniteHemiring) -> int | None:
    """The additively absorbing element (y + x = x for all y), if present."""
    n = R.order
    hits = np.flatnonzero((R.add == np.arange(n)[None, :]).all(axis=0))
    return int(hits[0]) if hits.size else None


def is_zerosumfree(R: FiniteHemiring) -> bool:
    """x + y = 0 only for x = y = 0."""
    zeros = np.argwhere(R.add == R.zero)
    return all(int(a) == R.zero and int(b) == R.zero for a, b in zeros)


def is_dedekind_finite(R: FiniteHemiring) -> bool:
    """ab = 1 implies ba = 1 (vacuously true without a one)."""
    if R.one is None:
        return True
    units = np.argwhere(R.mul == R.one)
    return all(R.mul[int(b), int(a)] == R.one for a, b in units)


def is_division_semiring(R: FiniteHemiring) -> bool:
    """Every nonzero element has a two-sided multiplicative inverse."""
    if R.one is None:
        raise ValueError("division test requires a multiplicative identity")
    for x in R.elements():
        if x == R.zero:
            continue
        if not any(R.mul[x, y] == R.one and R.mul[y, x] == R.one for y in R.elements()):
            return False
    return True


def is_aic(R: FiniteHemiring) -> bool:
    """Additively idempotent with a total natural order (a chain)."""
    if not is_additively_idempotent(R):
        return False
    return natural_order(R).is_total


def is_lattice_ordered(R: FiniteHemiring) -> bool:
    """a + b = a v b and ab <= a ^ b under the natural order.

    The natural order of a finite additively idempotent algebra always has
    all binary meets, so the real content is the ab <= a ^ b inequality.
    """
    if not is_additively_idempotent(R):
        return False
    po = natural_order(R)
    meets = po.meet_table()
    if meets is None:
        return False
    return bool(po.leq[R.mul, meets].all())


@dataclass(frozen=True)
class HomMap:
    """A zero-preserving map between table algebras preserving + and *."""

    source: FiniteHemiring
    target: FiniteHemiring
    map: tuple[int, ...]

    def __post_init__(self):
        if len(self.map) != self.source.order:
            raise ValueError("map length does not match source order")

    def __call__(self, x: int) -> int:
        return self.map[x]

    def is_injective(self) -> bool:
        return len(set(self.map)) == len(self.map)

    def is_surjective(self) -> bool:
        return len(set(self.map)) == self.target.order

    def kernel(self) -> frozenset[int]:
        z = self.target.zero
        return frozenset(x for x, fx in enumerate(self.map) if fx == z)

    def image(self) -> frozenset[int]:
        return frozenset(self.map)

    def compose(self, first: "HomMap") -> "HomMap":
        """self after first (first.target must be self.source)."""
        if first.target is not self.source and first.target != self.source:
            raise ValueError("composition mismatch")
        return HomMap(first.source, self.target,
                      tuple(self.map[v] for v in first.map))


def _is_hom(R: FiniteHemiring, S: FiniteHemiring, f: tuple[int, ...],
            unital: bool = False) -> bool:
    arr = np.asarray(f, dtype=np.int32)
    if f[R.zero] != S.zero:
        return False
    if unital:
        if R.one is None or S.one is None or f[R.one] != S.one:
            return False
    if not (S.add[np.ix_(arr, arr)] == arr[R.add]).all():
        return False
    return bool((S.mul[np.ix_(arr, arr)] == arr[R.mul]).all())


def hom_search(R: FiniteHemiring, S: FiniteHemiring, *,
               surjective: bool = False, unital: bool = False,
               injective: bool = False, limit: int | None = None) -> list[HomMap]:
    """All maps R -> S preserving add, mul and zero (and one when asked).

    Plain backtracking with incremental constraint propagation; complete for
    the desk-scale orders this package targets.
    """
    n, m = R.order, S.order
    if unital and (R.one is None or S.one is None):
        return []
    if injective and n > m:
        return []

    tables = ((R.add, S.add), (R.mul, S.mul))
    # pairs whose product is z, checked the moment z gets an image
    preim: list[list[list[tuple[int, int]]]] = []
    for Rt, _ in tables:
        lists: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for x, y in np.argwhere(Rt >= 0):
            lists[int(Rt[x, y])].append((int(x), int(y)))
        preim.append(lists)

    f = [-1] * n
    used = [0] * m if injective else None
    order_elems = [R.zero] + ([R.one] if unital else []) + \
        [x for x in range(n) if x != R.zero and (not unital or x != R.one)]
    results: list[HomMap] = []

    def consistent(z: int) -> bool:
        fz = f[z]
        for t, (Rt, St) in enumerate(tables):
            for x in order_elems:
                fx = f[x]
                if fx < 0:
                    continue
                r = Rt[x, z]
                if f[r] >= 0 and St[fx, fz] != f[r]:
                    return False
                r = Rt[z, x]
                if f[r] >= 0 and St[fz, fx] != f[r]:
                    return False
            for x, y in preim[t][z]:
                if f[x] >= 0 and f[y] >= 0 and St[f[x], f[y]] != fz:
                    return False
        return True

    def extend(k: int) -> bool:
        if k == n:
            if surjective and len(set(f)) != m:
                return False
            results.append(HomMap(R, S, tuple(f)))
            return limit is not None and len(results) >= limit
        z = order_elems[k]
        if z == R.zero:
            candidates = [S.zero]
        elif unital and z == R.one:
            candidates = [S.one]
        else:
            candidates = range(m)
        for v in candidates:
            if injective and used[v]:
                continue
            f[z] = v
            if consistent(z):
                if injective:
                    used[v] = 1
                if extend(k + 1):
                    return True
                if injective:
                    used[v] = 0
            f[z] = -1
        return False

    extend(0)
    return results


def _wl_colors(R: FiniteHemiring) -> tuple[int, ...]:
    """Stable color refinement over both tables; isomorphism-invariant."""
    n = R.order
    idx = np.arange(n)
    colors = [ (int(x == R.zero), int(R.one is not None and x == R.one),
                int(R.add[x, x] == x), int(R.mul[x, x] == x)) for x in idx ]
    key = {c: i for i, c in enumerate(sorted(set(colors)))}
    col = [key[c] for c in colors]
    while True:
        sigs = []
        for x in range(n):
            neigh = sorted((col[y], col[R.add[x, y]], col[R.mul[x, y]], col[R.mul[y, x]])
                           for y in range(n))
            sigs.append((col[x], tuple(neigh)))
        key = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [key[s] for s in sigs]
        if new == col:
            return tuple(col)
        col = new


def is_isomorphic(R: FiniteHemiring, S: FiniteHemiring) -> HomMap | None:
    """An isomorphism R -> S, or None.

    Invariant fingerprints (color refinement over both tables, derived from
    idempotent counts and row structure) prune before backtracking, so the
    search stays far from the naive n! bound.
    """
    if R.order != S.order:
        return None
    if (R.one is None) != (S.one is None):
        return None
    colR, colS = _wl_colors(R), _wl_colors(S)
    if sorted(colR) != sorted(colS):
        return None

    n = R.order
    by_color: dict[int, list[int]] = {}
    for y, c in enumerate(colS):
        by_color.setdefault(c, []).append(y)
    # most constrained elements first
    order_elems = sorted(range(n), key=lambda x: (len(by_color[colR[x]]), x))

    f = [-1] * n
    used = [False] * n
    tables = ((R.add, S.add), (R.mul, S.mul))

    def consistent(z: int) -> bool:
        for Rt, St in tables:
            for x in range(n):
                if f[x] < 0:
                    continue
                for p, q in ((x, z), (z, x)):
                    r = Rt[p, q]
                    if f[r] >= 0 and St[f[p], f[q]] != f[r]:
                        return False
        return True

    def extend(k: int) -> bool:
        if k == n:
            return True
        z = order_elems[k]
        for v in by_color[colR[z]]:
            if used[v]:
                continue
            f[z] = v
            used[v] = True
            if consistent(z) and extend(k + 1):
                return True
            used[v] = False
            f[z] = -1
        return False

    if extend(0):
        hom = HomMap(R, S, tuple(f))
        assert _is_hom(R, S, hom.map)
        return hom
    return None


def canonical_form(R: FiniteHemiring) -> tuple[tuple[int, ...], tuple[int, ...], int | None]:
    """Lexicographically least (add, mul) relabeling fixing zero at index 0.

    Only meant for catalog-scale algebras; the cost is (n-1)! permutations.
    """
    n = R.order
    if n > 8:
        raise SizeGuardExceeded(f"canonical form is factorial-cost; order {n} > 8")
    rest = [x for x in range(n) if x != R.zero]
    best = None
    for perm in itertools.permutations(range(1, n)):
        p = np.empty(n, dtype=np.int32)
        p[R.zero] = 0
        for src, dst in zip(rest, perm):
            p[src] = dst
        add2 = np.empty_like(R.add)
        mul2 = np.empty_like(R.mul)
        add2[np.ix_(p, p)] = p[R.add]
        mul2[np.ix_(p, p)] = p[R.mul]
        one2 = None if R.one is None else int(p[R.one])
        cand = (tuple(int(v) for v in add2.ravel()),
                tuple(int(v) for v in mul2.ravel()), one2)
        if best is None or cand < best:
            best = cand
    return best


def fingerprint(R: FiniteHemiring) -> str:
    """Short deterministic identifier; exact canonical hash at catalog scale,
    invariant-vector hash above it."""
    import hashlib
    if R.order <= 8:
        a, m, one = canonical_form(R)
        payload = f"c|{R.order}|{one}|{a}|{m}"
    else:
        col = _wl_colors(R)
        payload = f"i|{R.order}|{R.one is not None}|{sorted(col)}"
    return hashlib.sha256(payload.encode()).hexdigest()[:12]


def strong_semiisomorphism_search(R: FiniteHemiring, S: FiniteHemiring) -> HomMap | None:
    """A surjective hom R -> S with kernel {0} mapping proper ideals to
    proper ideals, or None.

    Ideal enumeration comes from the simpleness module; imported lazily to
    keep the module graph acyclic.
    """
    from .simpleness import all_ideals

    unital = R.one is not None and S.one is not None
    ideals = [I for I in all_ideals(R, "two-sided") if len(I.members) < R.order]
    for hom in hom_search(R, S, surjective=True, unital=unital):
        if hom.kernel() != frozenset({R.zero}):
            continue
        ok = True
        for I in ideals:
            if {hom.map[x] for x in I.members} == set(range(S.order)):
                ok = False
                break
        if ok:
            return hom
    return None

"""Finite left semimodules over finite hemirings, their endomorphism
semirings, trace ideals, and the double-centralizer check.

Conventions, fixed once: for a left semimodule I, the endomorphism semiring
D = End(_R I) acts on I on the right via i * d := d(i), so the product in D
is d1 * d2 := "apply d1, then d2" (composition d2 o d1).  Maps commuting
with that right action (the members of End(I_D)) compose as left operators,
(g1 * g2)(i) = g1(g2(i)), and that is the codomain of the natural map
r -> (i -> r i).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import FiniteHemiring, SizeGuardExceeded, as_op_table
from .simpleness import IdealSubset, all_ideals, ideal_violation

__all__ = [
    "DoubleCentralizerReport",
    "FiniteLeftSemimodule",
    "ModuleEndoSemiring",
    "double_centralizer_check",
    "end_semiring",
    "hom_semimodules",
    "idempotent_generated",
    "is_generator",
    "left_ideal_semimodule",
    "minimal_left_ideals",
    "regular_semimodule",
    "trace_ideal",
]

HOM_SEARCH_BOUND = 2_000_000   # backtracking node budget for hom enumeration


class FiniteLeftSemimodule:
    """A commutative monoid with an R-action table (|R| x order)."""

    __slots__ = ("ring", "add", "zero", "action", "name", "members")

    def __init__(self, ring: FiniteHemiring, add, zero: int, action,
                 name: str = "", members: tuple[int, ...] | None = None,
                 validate: bool = True):
        self.ring = ring
        self.add = as_op_table(add)
        self.zero = int(zero)
        self.action = np.ascontiguousarray(action, dtype=np.int32)
        self.name = name
        self.members = members   # carrier as ring elements, for ideal modules
        if self.action.shape != (ring.order, self.order):
            raise ValueError("action table shape must be |R| x order")
        self.action.setflags(write=False)
        if validate:
            self._validate()

    @property
    def order(self) -> int:
        return self.add.shape[0]

    def _validate(self):
        R, n = self.ring, self.order
        add, act = self.add, self.action
        idx = np.arange(n)
        if (add != add.T).any():
            raise ValueError("addition not commutative")
        if (add[self.zero] != idx).any():
            raise ValueError("zero not neutral")
        for a in range(n):
            if not (add[add[a], :] == add[a][add]).all():
                raise ValueError("addition not associative")
        # (r r') m = r (r' m)
        for r in range(R.order):
            if not (act[R.mul[r], :] == act[r][act]).all():
                raise ValueError("action not multiplicative")
        # r (m + m') = r m + r m'
        for r in range(R.order):
            if not (act[r][add] == add[np.ix_(act[r], act[r])]).all():
                raise ValueError("action not additive in the module argument")
        # (r + r') m = r m + r' m
        for m in range(n):
            if not (act[R.add, m] == add[np.ix_(act[:, m], act[:, m])]).all():
                raise ValueError("action not additive in the ring argument")
        if (act[R.zero] != self.zero).any() or (act[:, self.zero] != self.zero).any():
            raise ValueError("zero absorption fails")
        if R.one is not None and (act[R.one] != idx).any():
            raise ValueError("module not unital over a unital ring")

    def __repr__(self):
        return f"FiniteLeftSemimodule({self.name or self.order}, over {self.ring.name or self.ring.order})"


def regular_semimodule(R: FiniteHemiring) -> FiniteLeftSemimodule:
    """R acting on itself by left multiplication."""
    return FiniteLeftSemimodule(R, R.add, R.zero, R.mul, name="regular",
                                members=tuple(range(R.order)))


def left_ideal_semimodule(R: FiniteHemiring, I: IdealSubset) -> FiniteLeftSemimodule:
    """Restrict addition and the left action to a validated left ideal."""
    if I.sidedness not in ("left", "two-sided"):
        raise ValueError("need a left or two-sided ideal")
    bad = ideal_violation(R, I.members, "left")
    if bad is not None:
        raise ValueError(f"not a left ideal: {bad}")
    members = tuple(sorted(I.members))
    pos = {m: i for i, m in enumerate(members)}
    k = len(members)
    add = np.empty((k, k), dtype=np.int32)
    for i, x in enumerate(members):
        for j, y in enumerate(members):
            add[i, j] = pos[int(R.add[x, y])]
    act = np.empty((R.order, k), dtype=np.int32)
    for r in range(R.order):
        for j, x in enumerate(members):
            act[r, j] = pos[int(R.mul[r, x])]
    return FiniteLeftSemimodule(R, add, pos[R.zero], act,
                                name=f"ideal{sorted(I.members)}", members=members)


def hom_semimodules(M: FiniteLeftSemimodule, N: FiniteLeftSemimodule,
                    node_budget: int = HOM_SEARCH_BOUND) -> list[tuple[int, ...]]:
    """All additive, zero-preserving, R-equivariant maps M -> N.

    Backtracking with per-step pruning; a node budget guards against
    genuinely intractable |N|^|M| spaces.
    """
    if M.ring is not N.ring and M.ring != N.ring:
        raise ValueError("semimodules over different rings")
    n, m = M.order, N.order
    R = M.ring
    nodes = [0]

    add_pre: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for x in range(n):
        for y in range(x, n):
            add_pre[int(M.add[x, y])].append((x, y))
    act_pre: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for r in range(R.order):
        for x in range(n):
            act_pre[int(M.action[r, x])].append((r, x))

    f = [-1] * n
    out: list[tuple[int, ...]] = []

    def consistent(z: int) -> bool:
        fz = f[z]
        for x in range(n):
            fx = f[x]
            if fx < 0:
                continue
            s = M.add[x, z]
            if f[s] >= 0 and N.add[fx, fz] != f[s]:
                return False
        for x, y in add_pre[z]:
            if f[x] >= 0 and f[y] >= 0 and N.add[f[x], f[y]] != fz:
                return False
        for r in range(R.order):
            t = M.action[r, z]
            if f[t] >= 0 and N.action[r, fz] != f[t]:
                return False
        for r, x in act_pre[z]:
            if f[x] >= 0 and N.action[r, f[x]] != fz:
                return False
        return True

    order_elems = [M.zero] + [x for x in range(n) if x != M.zero]

    def extend(k: int):
        if k == n:
            out.append(tuple(f))
            return
        nodes[0] += 1
        if nodes[0] > node_budget:
            raise SizeGuardExceeded("semimodule hom search exceeded its node budget")
        z = order_elems[k]
        candidates = (N.zero,) if z == M.zero else range(m)
        for v in candidates:
            f[z] = v
            if consistent(z):
                extend(k + 1)
            f[z] = -1

    extend(0)
    out.sort()
    return out


class ModuleEndoSemiring:
    """End(_R M) packaged as a FiniteHemiring.

    With ``right_operators`` (the default), the product d1 * d2 applies d1
    first; with it off, g1 * g2 applies g2 first.
    """

    __slots__ = ("module", "maps", "hemiring", "index", "right_operators")

    def __init__(self, module: FiniteLeftSemimodule, maps: list[tuple[int, ...]],
                 right_operators: bool = True, name: str = ""):
        self.module = module
        self.maps = sorted(set(maps))
        self.index = {m: i for i, m in enumerate(self.maps)}
        self.right_operators = right_operators
        k = len(self.maps)
        arr = np.array(self.maps, dtype=np.int32)
        add = np.empty((k, k), dtype=np.int32)
        mul = np.empty((k, k), dtype=np.int32)
        for i in range(k):
            summed = module.add[arr[i], arr]
            # right operators: (d_i d_j)(x) = d_j(d_i(x)); left: g_i(g_j(x))
            comp = arr[:, arr[i]] if right_operators else arr[i][arr]
            for j in range(k):
                add[i, j] = self.index[tuple(int(v) for v in summed[j])]
                mul[i, j] = self.index[tuple(int(v) for v in comp[j])]
        zero_map = tuple([module.zero] * module.order)
        ident = tuple(range(module.order))
        self.hemiring = FiniteHemiring(add, mul, zero=self.index[zero_map],
                                       one=self.index.get(ident),
                                       name=name or f"End({module.name})")

    @property
    def order(self) -> int:
        return len(self.maps)


def end_semiring(M: FiniteLeftSemimodule) -> ModuleEndoSemiring:
    """End(_R M) as a semiring of right operators on M."""
    return ModuleEndoSemiring(M, hom_semimodules(M, M), right_operators=True)


@dataclass(frozen=True)
class DoubleCentralizerReport:
    ring: FiniteHemiring
    ideal_members: tuple[int, ...]
    endo_count: int              # |D| = |End(_R I)|
    bicommutant_count: int       # |End(I_D)|
    natural_map: tuple[int, ...]  # r -> index into the bicommutant map list
    injective: bool
    surjective: bool
    simple_checked: bool

    @property
    def isomorphism(self) -> bool:
        return self.injective and self.surjective


def double_centralizer_check(R: FiniteHemiring, I: IdealSubset,
                             require_simple: bool = False) -> DoubleCentralizerReport:
    """Compute D = End(_R I) and the natural map R -> End(I_D).

    For simple R the map is an isomorphism.  When R is not simple the check
    still runs in exploratory mode and reports simple_checked=False (or
    raises if ``require_simple``).
    """
    from .simpleness import is_simple

    if len(I.members) <= 1:
        raise ValueError("need a nonzero left ideal")
    module = left_ideal_semimodule(R, I)
    simple = is_simple(R)
    if require_simple and not simple:
        raise ValueError("ring is not simple")

    d_maps = hom_semimodules(module, module)
    # End(I_D): additive zero-preserving g with g(i * d) = g(i) * d, i.e.
    # g(d(i)) = d(g(i)) for every d in D
    n = module.order
    bicom: list[tuple[int, ...]] = []
    add = module.add
    for g in _additive_selfmaps(module):
        if all(g[d[i]] == d[g[i]] for d in d_maps for i in range(n)):
            bicom.append(g)
    bicom.sort()
    index = {g: i for i, g in enumerate(bicom)}

    nat = []
    members = module.members
    pos = {m: i for i, m in enumerate(members)}
    for r in range(R.order):
        g = tuple(pos[int(R.mul[r, x])] for x in members)
        if g not in index:
            raise AssertionError("natural image is not D-equivariant")
        nat.append(index[g])

    injective = len(set(nat)) == R.order
    surjective = len(set(nat)) == len(bicom)
    return DoubleCentralizerReport(R, members, len(d_maps), len(bicom),
                                   tuple(nat), injective, surjective, simple)


def _additive_selfmaps(M: FiniteLeftSemimodule,
                       node_budget: int = HOM_SEARCH_BOUND) -> list[tuple[int, ...]]:
    """Additive zero-preserving self-maps of the underlying monoid."""
    n = M.order
    add = M.add
    add_pre: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for x in range(n):
        for y in range(x, n):
            add_pre[int(add[x, y])].append((x, y))
    f = [-1] * n
    out = []
    nodes = [0]
    order_elems = [M.zero] + [x for x in range(n) if x != M.zero]

    def consistent(z):
        fz = f[z]
        for x in range(n):
            if f[x] < 0:
                continue
            s = add[x, z]
            if f[s] >= 0 and add[f[x], fz] != f[s]:
                return False
        for x, y in add_pre[z]:
            if f[x] >= 0 and f[y] >= 0 and add[f[x], f[y]] != fz:
                return False
        return True

    def extend(k):
        if k == n:
            out.append(tuple(f))
            return
        nodes[0] += 1
        if nodes[0] > node_budget:
            raise SizeGuardExceeded("additive self-map search exceeded its node budget")
        z = order_elems[k]
        candidates = (M.zero,) if z == M.zero else range(n)
        for v in candidates:
            f[z] = v
            if consistent(z):
                extend(k + 1)
            f[z] = -1

    extend(0)
    return out


def trace_ideal(R: FiniteHemiring, P: FiniteLeftSemimodule) -> IdealSubset:
    """Additive closure of the union of images of all homs P -> _R R."""
    homs = hom_semimodules(P, regular_semimodule(R))
    members = {R.zero}
    for f in homs:
        members.update(f)
    # close under addition only; the result is a two-sided ideal already,
    # which the validator confirms
    while True:
        new = set(members)
        lst = sorted(members)
        for x in lst:
            new.update(int(v) for v in R.add[x, lst])
        if new == members:
            break
        members = new
    bad = ideal_violation(R, members, "two-sided")
    if bad is not None:
        raise AssertionError(f"trace is not a two-sided ideal: {bad}")
    return IdealSubset(members, "two-sided", R.order)


def is_generator(R: FiniteHemiring, P: FiniteLeftSemimodule) -> bool:
    """The trace ideal is all of R."""
    return trace_ideal(R, P).is_full


def minimal_left_ideals(R: FiniteHemiring) -> list[IdealSubset]:
    """Minimal nonzero left ideals, by inclusion."""
    ideals = [I for I in all_ideals(R, "left") if not I.is_zero]
    return [I for I in ideals
            if not any(J.members < I.members for J in ideals)]


def idempotent_generated(R: FiniteHemiring, I: IdealSubset) -> int | None:
    """The least idempotent e with I = Re (as the set {r e}), if one exists."""
    want = set(I.members)
    for e in R.idempotents():
        if {int(v) for v in R.mul[:, e]} == want:
            return e
    return None

"""Classification suites: replay the structure theorems for finite
semirings over exhaustively enumerated small instances.

Every suite walks a deterministic catalog, evaluates the two sides of an
equivalence with independent deciders, and emits a line-oriented report.
A counterexample record carries the algebra tables inline so the claim can
be re-checked directly by the deciders.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import (
    FiniteHemiring,
    fingerprint,
    infinite_element,
    is_additively_idempotent,
    is_aic,
    is_dedekind_finite,
    is_division_semiring,
    is_isomorphic,
    is_lattice_ordered,
    is_zerosumfree,
    hom_search,
)
from .lattices import (
    FiniteSemilattice,
    build_E_M,
    build_F_M,
    generator_maps,
    is_dense,
    is_distributive,
    try_lattice,
)
from .simpleness import (
    all_congruences,
    all_ideals,
    is_congruence_simple,
    is_ideal_simple,
    is_simple,
    aic_max_ideal,
    radical_left,
    tau_congruence,
)
from .constructions import (
    boolean_B,
    corner,
    corner_congruence_to_ring,
    corner_ideal_to_ring,
    enumerate_hemirings,
    enumerate_semilattices,
    finite_field,
    is_full_idempotent,
    matrix_semiring,
    HEMIRING_IDEMPOTENT_BOUND,
    HEMIRING_ORDER_BOUND,
    SEMILATTICE_ORDER_BOUND,
)
from .semimodules import (
    double_centralizer_check,
    idempotent_generated,
    minimal_left_ideals,
)

__all__ = ["InstanceRecord", "VerificationReport", "SUITES", "classify",
           "dense_embedding_search", "parse_tables_inline", "run_suite",
           "suite_names"]


@dataclass(frozen=True)
class InstanceRecord:
    name: str
    fields: tuple[tuple[str, str], ...]
    ok: bool


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    parameters: tuple[tuple[str, str], ...]
    records: tuple[InstanceRecord, ...]
    verdict: str   # confirmed | counterexample | skipped(size)

    def render(self, fmt: str = "structured") -> str:
        if fmt == "text":
            lines = [f"suite {self.suite}: {self.verdict} "
                     f"({len(self.records)} instances)"]
            for r in self.records:
                mark = "ok" if r.ok else "COUNTEREXAMPLE"
                brief = ", ".join(f"{k}={v}" for k, v in r.fields)
                lines.append(f"  [{mark}] {r.name}: {brief}")
            return "\n".join(lines) + "\n"
        lines = [f"suite: {self.suite}"]
        for k, v in self.parameters:
            lines.append(f"parameter {k}: {v}")
        lines.append(f"instances: {len(self.records)}")
        for r in self.records:
            lines.append(f"instance: {r.name}")
            for k, v in r.fields:
                lines.append(f"  {k}: {v}")
            lines.append(f"  ok: {str(r.ok).lower()}")
        lines.append(f"verdict: {self.verdict}")
        return "\n".join(lines) + "\n"


def _b(v: bool) -> str:
    return str(bool(v)).lower()


def _tables_inline(R: FiniteHemiring) -> str:
    add = ",".join(str(int(v)) for v in R.add.ravel())
    mul = ",".join(str(int(v)) for v in R.mul.ravel())
    one = "-" if R.one is None else str(R.one)
    return f"order={R.order};zero={R.zero};one={one};add={add};mul={mul}"


def parse_tables_inline(text: str) -> FiniteHemiring:
    """Rebuild an algebra from a report's inline witness string, so a
    counterexample record can be re-fed to the deciders directly."""
    parts = dict(p.split("=", 1) for p in text.split(";"))
    n = int(parts["order"])
    add = [int(v) for v in parts["add"].split(",")]
    mul = [int(v) for v in parts["mul"].split(",")]
    one = None if parts["one"] == "-" else int(parts["one"])
    import numpy as _np
    return FiniteHemiring(_np.array(add).reshape(n, n),
                          _np.array(mul).reshape(n, n),
                          zero=int(parts["zero"]), one=one)


@lru_cache(maxsize=None)
def _semilattices(max_order: int) -> tuple[FiniteSemilattice, ...]:
    out = []
    for n in range(1, max_order + 1):
        out.extend(enumerate_semilattices(n))
    return tuple(out)


@lru_cache(maxsize=None)
def _hemirings(max_order: int, idempotent: bool) -> tuple[FiniteHemiring, ...]:
    out = []
    for n in range(1, max_order + 1):
        out.extend(enumerate_hemirings(n, additively_idempotent=idempotent))
    return tuple(out)


@lru_cache(maxsize=None)
def _endo(M: FiniteSemilattice):
    return build_E_M(M)


def _catalog_semirings(max_plain: int, max_idem: int) -> list[FiniteHemiring]:
    """Unital catalog entries from both enumerations, deduplicated."""
    seen = {}
    for R in _hemirings(min(max_plain, HEMIRING_ORDER_BOUND), False):
        if R.is_semiring:
            seen.setdefault(fingerprint(R), R)
    for R in _hemirings(min(max_idem, HEMIRING_IDEMPOTENT_BOUND), True):
        if R.is_semiring:
            seen.setdefault(fingerprint(R), R)
    return [seen[k] for k in sorted(seen)]


def _record(name: str, ok: bool, *fields, algebra: FiniteHemiring | None = None) -> InstanceRecord:
    if algebra is not None:
        fields = (("fingerprint", fingerprint(algebra)),) + tuple(fields)
    return InstanceRecord(name, tuple(fields), ok)


def _verdict(records) -> str:
    return "confirmed" if all(r.ok for r in records) else "counterexample"


def _finish(suite: str, params, records) -> VerificationReport:
    records = tuple(sorted(records, key=lambda r: r.name))
    return VerificationReport(suite, tuple(params), records, _verdict(records))


# ---------------------------------------------------------------- suites

def suite_thm3_3(max_order: int = 5) -> VerificationReport:
    """E_M simple <=> E_M ideal-simple <=> M a distributive lattice."""
    params = [("max-order", str(max_order))]
    if max_order > SEMILATTICE_ORDER_BOUND:
        return VerificationReport("thm3_3", tuple(params), (), "skipped(size)")
    records = []
    for M in _semilattices(max_order):
        E = _endo(M)
        lat = try_lattice(M)
        dist = lat is not None and is_distributive(lat)
        simple = is_simple(E.hemiring)
        ideal_simple = is_ideal_simple(E.hemiring)
        ok = simple == ideal_simple == dist
        fields = [("order", str(M.order)), ("endo-order", str(E.order)),
                  ("distributive", _b(dist)), ("ideal-simple", _b(ideal_simple)),
                  ("simple", _b(simple))]
        if not ok:
            fields.append(("witness", _tables_inline(E.hemiring)))
        records.append(_record(M.name, ok, *fields, algebra=E.hemiring))
    return _finish("thm3_3", params, records)


def suite_cor3_8(max_order: int = 5) -> VerificationReport:
    """On distributive M all simpleness notions agree (and hold); on
    non-distributive M congruence-simpleness holds while ideal-simpleness
    fails.  The collapsing congruence f ~ g iff f+a = g+a pointwise is
    universal on every finite instance."""
    params = [("max-order", str(max_order))]
    if max_order > SEMILATTICE_ORDER_BOUND:
        return VerificationReport("cor3_8", tuple(params), (), "skipped(size)")
    records = []
    for M in _semilattices(max_order):
        E = _endo(M)
        lat = try_lattice(M)
        dist = lat is not None and is_distributive(lat)
        cs = is_congruence_simple(E.hemiring)
        isim = is_ideal_simple(E.hemiring)
        simple = isim and cs
        tau_universal = tau_congruence(E).is_universal
        if dist:
            ok = cs and isim and simple and tau_universal
        else:
            ok = cs and not isim and tau_universal
        fields = [("order", str(M.order)), ("distributive", _b(dist)),
                  ("congruence-simple", _b(cs)), ("ideal-simple", _b(isim)),
                  ("simple", _b(simple)), ("tau-universal", _b(tau_universal))]
        if not ok:
            fields.append(("witness", _tables_inline(E.hemiring)))
        records.append(_record(M.name, ok, *fields, algebra=E.hemiring))
    return _finish("cor3_8", params, records)


def dense_embedding_search(R: FiniteHemiring, max_lattice_order: int
                           ) -> tuple[str, FiniteSemilattice] | None:
    """An injective hom of R onto a dense subhemiring of some E_M.

    First tries M = the additive reduct of R with the left-regular
    representation r -> (x -> r x); failing that, searches catalog
    semilattices up to the given order for injective homs with dense image.
    """
    if is_additively_idempotent(R):
        M0 = FiniteSemilattice(R.add, zero=R.zero)
        maps = [tuple(int(v) for v in R.mul[r]) for r in range(R.order)]
        if len(set(maps)) == R.order and is_dense(maps, M0):
            return ("left-regular", M0)
    for M in _semilattices(min(max_lattice_order, SEMILATTICE_ORDER_BOUND)):
        E = _endo(M)
        if E.order < R.order:
            continue
        gens = {E.endo_index(g) for g in generator_maps(M)}
        for hom in hom_search(R, E.hemiring, injective=True):
            if gens <= set(hom.map):
                return (f"catalog:{M.name}", M)
    return None


def suite_thm2_2(max_order: int = 4) -> VerificationReport:
    """Every congruence-simple proper hemiring has order <= 2 or embeds as
    a dense subhemiring of the endomorphism semiring of a semilattice."""
    params = [("max-order", str(max_order))]
    if max_order > HEMIRING_IDEMPOTENT_BOUND:
        return VerificationReport("thm2_2", tuple(params), (), "skipped(size)")
    seen = {}
    for R in _hemirings(min(max_order, HEMIRING_ORDER_BOUND), False):
        seen.setdefault(fingerprint(R), R)
    for R in _hemirings(max_order, True):
        seen.setdefault(fingerprint(R), R)
    records = []
    for key in sorted(seen):
        R = seen[key]
        if not (R.is_proper and is_congruence_simple(R)):
            continue
        if R.order <= 2:
            records.append(_record(
                R.name, True, ("order", str(R.order)), ("branch", "order<=2"),
                algebra=R))
            continue
        found = dense_embedding_search(R, R.order)
        fields = [("order", str(R.order)),
                  ("branch", "dense-embedding"),
                  ("embedding", found[0] if found else "none")]
        if found is None:
            fields.append(("witness", _tables_inline(R)))
        records.append(_record(R.name, found is not None, *fields, algebra=R))
    return _finish("thm2_2", params, records)


def suite_cor5_8(max_order: int = 4) -> VerificationReport:
    """Every simple catalog semiring is a matrix semiring over a finite
    field or the endomorphism semiring of a distributive lattice."""
    params = [("max-order", str(max_order))]
    if max_order > HEMIRING_IDEMPOTENT_BOUND:
        return VerificationReport("cor5_8", tuple(params), (), "skipped(size)")
    fields_by_order = {2: finite_field(2), 3: finite_field(3)}
    records = []
    for R in _catalog_semirings(max_order, max_order):
        if not is_simple(R):
            continue
        witness = None
        if R.is_ring:
            F = fields_by_order.get(R.order)
            if F is not None and is_isomorphic(R, F) is not None:
                witness = f"matrix:n=1,{F.name}"
        else:
            for M in _semilattices(min(max_order + 1, SEMILATTICE_ORDER_BOUND)):
                E = _endo(M)
                if E.order != R.order:
                    continue
                lat = try_lattice(M)
                if lat is None or not is_distributive(lat):
                    continue
                if is_isomorphic(R, E.hemiring) is not None:
                    witness = f"endo:{M.name}"
                    break
        fields = [("order", str(R.order)), ("ring", _b(R.is_ring)),
                  ("witness", witness or "none")]
        if witness is None:
            fields.append(("tables", _tables_inline(R)))
        records.append(_record(R.name, witness is not None, *fields, algebra=R))
    return _finish("cor5_8", params, records)


def suite_prop5_5(max_order: int = 3) -> VerificationReport:
    """Congruence-simpleness, ideal-simpleness and simpleness transfer
    between R and M_2(R)."""
    params = [("max-order", str(max_order)), ("n", "2")]
    if max_order > HEMIRING_ORDER_BOUND:
        return VerificationReport("prop5_5", tuple(params), (), "skipped(size)")
    records = []
    for R in _catalog_semirings(max_order, max_order):
        if R.order > max_order:
            continue
        M2 = matrix_semiring(R, 2)
        cs_r, cs_m = is_congruence_simple(R), is_congruence_simple(M2.hemiring)
        is_r, is_m = is_ideal_simple(R), is_ideal_simple(M2.hemiring)
        ok = cs_r == cs_m and is_r == is_m
        fields = [("order", str(R.order)), ("matrix-order", str(M2.order)),
                  ("congruence-simple", f"{_b(cs_r)}/{_b(cs_m)}"),
                  ("ideal-simple", f"{_b(is_r)}/{_b(is_m)}"),
                  ("simple", f"{_b(cs_r and is_r)}/{_b(cs_m and is_m)}")]
        if not ok:
            fields.append(("witness", _tables_inline(R)))
        records.append(_record(R.name, ok, *fields, algebra=R))
    return _finish("prop5_5", params, records)


def _corner_correspondence(R: FiniteHemiring, e: int) -> tuple[bool, list[tuple[str, str]]]:
    c = corner(R, e)
    full = is_full_idempotent(R, e)
    ideals_c = all_ideals(c.hemiring, "two-sided")
    congs_c = all_congruences(c.hemiring)
    ok = True
    lifted_ideals = set()
    for I in ideals_c:
        J = corner_ideal_to_ring(R, c, I)     # re-checks e(RIR)e = I
        lifted_ideals.add(J)
    lifted_congs = set()
    for g in congs_c:
        th = corner_congruence_to_ring(R, c, g)   # re-checks restriction
        lifted_congs.add(th)
    fields = [("corner-order", str(c.order)), ("full", _b(full)),
              ("corner-ideals", str(len(ideals_c))),
              ("corner-congruences", str(len(congs_c)))]
    if full:
        ideals_r = set(all_ideals(R, "two-sided"))
        congs_r = set(all_congruences(R))
        surj_i = lifted_ideals == ideals_r
        surj_c = lifted_congs == congs_r
        transfer = (is_ideal_simple(R) == is_ideal_simple(c.hemiring)
                    and is_congruence_simple(R) == is_congruence_simple(c.hemiring))
        ok = surj_i and surj_c and transfer
        fields += [("ideal-bijection", _b(surj_i)),
                   ("congruence-bijection", _b(surj_c)),
                   ("simpleness-transfer", _b(transfer))]
    return ok, fields


def suite_prop5_3(max_order: int = 3) -> VerificationReport:
    """Corner correspondences for every idempotent of the catalog semirings
    and of M_2(B); bijective (and simpleness-preserving) for full ones."""
    params = [("max-order", str(max_order))]
    if max_order > HEMIRING_ORDER_BOUND:
        return VerificationReport("prop5_3", tuple(params), (), "skipped(size)")
    instances = list(_catalog_semirings(max_order, max_order))
    M2B = matrix_semiring(boolean_B(), 2)
    M2B.hemiring.name = "M_2(B)"
    instances.append(M2B.hemiring)
    records = []
    for R in instances:
        for e in R.idempotents():
            try:
                ok, fields = _corner_correspondence(R, e)
            except AssertionError as exc:
                ok, fields = False, [("error", str(exc))]
            if not ok:
                fields.append(("witness", _tables_inline(R)))
            records.append(_record(f"{R.name}/e={e}", ok,
                                   ("order", str(R.order)), *fields, algebra=R))
    return _finish("prop5_3", params, records)


def suite_thm5_10(max_order: int = 4) -> VerificationReport:
    """Double centralizer: for a simple semiring and a minimal left ideal
    generated by an idempotent, R -> End(I_D) is an isomorphism."""
    params = [("max-order", str(max_order))]
    if max_order > HEMIRING_IDEMPOTENT_BOUND:
        return VerificationReport("thm5_10", tuple(params), (), "skipped(size)")
    instances = [R for R in _catalog_semirings(max_order, max_order) if is_simple(R)]
    M2B = matrix_semiring(boolean_B(), 2)
    M2B.hemiring.name = "M_2(B)"
    instances.append(M2B.hemiring)
    C3 = FiniteSemilattice([[0, 1, 2], [1, 1, 2], [2, 2, 2]], name="C3")
    EC3 = build_E_M(C3).hemiring
    EC3.name = "E_C3"
    instances.append(EC3)
    records = []
    for R in instances:
        for I in minimal_left_ideals(R):
            e = idempotent_generated(R, I)
            if e is None:
                continue
            rep = double_centralizer_check(R, I)
            fields = [("order", str(R.order)),
                      ("ideal-size", str(len(I.members))),
                      ("idempotent", str(e)),
                      ("endos", str(rep.endo_count)),
                      ("bicommutant", str(rep.bicommutant_count)),
                      ("injective", _b(rep.injective)),
                      ("surjective", _b(rep.surjective))]
            if not rep.isomorphism:
                fields.append(("witness", _tables_inline(R)))
            records.append(_record(
                f"{R.name}/I={min(x for x in I.members if x != R.zero)}",
                rep.isomorphism, *fields, algebra=R))
    return _finish("thm5_10", params, records)


def suite_thm5_7(max_order: int = 4) -> VerificationReport:
    """A catalog semiring is simple with an infinite element iff it is the
    endomorphism semiring of a distributive lattice; simple proper
    hemirings with nonzero multiplication match some F_M."""
    params = [("max-order", str(max_order))]
    if max_order > HEMIRING_IDEMPOTENT_BOUND:
        return VerificationReport("thm5_7", tuple(params), (), "skipped(size)")
    records = []
    lattices = _semilattices(SEMILATTICE_ORDER_BOUND - 1)
    for R in _catalog_semirings(max_order, max_order):
        simple = is_simple(R)
        inf = infinite_element(R) is not None
        em_match = None
        for M in lattices:
            E = _endo(M)
            if E.order != R.order:
                continue
            lat = try_lattice(M)
            if lat is None or not is_distributive(lat) or M.order < 2:
                continue
            if is_isomorphic(R, E.hemiring) is not None:
                em_match = M.name
                break
        ok = (simple and inf) == (em_match is not None)
        fields = [("order", str(R.order)), ("simple", _b(simple)),
                  ("infinite-element", _b(inf)),
                  ("endo-witness", em_match or "none")]
        if simple and inf:
            morita = _morita_witness(R)
            fields.append(("corner-witness", morita or "none"))
            ok = ok and morita is not None
        if not ok:
            fields.append(("witness", _tables_inline(R)))
        records.append(_record(R.name, ok, *fields, algebra=R))
    # F_M reporting for proper simple hemirings (nonzero multiplication)
    for R in _hemirings(max_order, True):
        if not (R.is_proper and is_simple(R)):
            continue
        if R.has_zero_multiplication():
            records.append(_record(
                R.name + "/fm", True,
                ("order", str(R.order)), ("zero-multiplication", "true"),
                ("fm-witness", "skipped"), algebra=R))
            continue
        fm = None
        for M in lattices:
            F = build_F_M(M)
            if F.order == R.order and is_isomorphic(R, F.hemiring) is not None:
                fm = M.name
                break
        records.append(_record(
            R.name + "/fm", fm is not None,
            ("order", str(R.order)), ("zero-multiplication", "false"),
            ("fm-witness", fm or "none"), algebra=R))
    return _finish("thm5_7", params, records)


def _morita_witness(R: FiniteHemiring) -> str | None:
    """A full idempotent e of some M_n(B) with corner iso to R."""
    B = boolean_B()
    for n in (1, 2):
        Mn = matrix_semiring(B, n)
        for e in Mn.hemiring.idempotents():
            if not is_full_idempotent(Mn.hemiring, e):
                continue
            c = corner(Mn.hemiring, e)
            if c.order == R.order and is_isomorphic(c.hemiring, R) is not None:
                return f"M_{n}(B):e={e}"
    return None


def suite_thm6_4_6_5(max_order: int = 4) -> VerificationReport:
    """Finite chain semirings: ideal-simple iff division; simple iff
    isomorphic to the Boolean semifield; the maximal left ideal formula
    agrees with the radical."""
    params = [("max-order", str(max_order))]
    if max_order > HEMIRING_IDEMPOTENT_BOUND:
        return VerificationReport("thm6_4_6_5", tuple(params), (), "skipped(size)")
    B = boolean_B()
    records = []
    for R in _hemirings(max_order, True):
        if not R.is_semiring or not is_aic(R):
            continue
        isim = is_ideal_simple(R)
        div = is_division_semiring(R)
        simple = is_simple(R)
        iso_b = is_isomorphic(R, B) is not None
        J = aic_max_ideal(R)
        rad = radical_left(R)
        ok = (isim == div) and (simple == iso_b) and (J.members == rad.members)
        fields = [("order", str(R.order)), ("ideal-simple", _b(isim)),
                  ("division", _b(div)), ("simple", _b(simple)),
                  ("iso-to-B", _b(iso_b)),
                  ("max-ideal", str(sorted(J.members))),
                  ("radical", str(sorted(rad.members)))]
        if not ok:
            fields.append(("witness", _tables_inline(R)))
        records.append(_record(R.name, ok, *fields, algebra=R))
    return _finish("thm6_4_6_5", params, records)


def suite_thm6_7(max_order: int = 4) -> VerificationReport:
    """Lattice-ordered semirings: congruence-simple iff simple iff
    isomorphic to the Boolean semifield."""
    params = [("max-order", str(max_order))]
    if max_order > HEMIRING_IDEMPOTENT_BOUND:
        return VerificationReport("thm6_7", tuple(params), (), "skipped(size)")
    B = boolean_B()
    records = []
    for R in _hemirings(max_order, True):
        if not R.is_semiring or not is_lattice_ordered(R):
            continue
        cs = is_congruence_simple(R)
        simple = is_simple(R)
        iso_b = is_isomorphic(R, B) is not None
        ok = cs == simple == iso_b
        fields = [("order", str(R.order)), ("congruence-simple", _b(cs)),
                  ("simple", _b(simple)), ("iso-to-B", _b(iso_b))]
        if not ok:
            fields.append(("witness", _tables_inline(R)))
        records.append(_record(R.name, ok, *fields, algebra=R))
    return _finish("thm6_7", params, records)


SUITES = {
    "thm3_3": (suite_thm3_3, 5),
    "cor3_8": (suite_cor3_8, 5),
    "thm2_2": (suite_thm2_2, 4),
    "cor5_8": (suite_cor5_8, 4),
    "prop5_5": (suite_prop5_5, 3),
    "prop5_3": (suite_prop5_3, 3),
    "thm5_10": (suite_thm5_10, 4),
    "thm5_7": (suite_thm5_7, 4),
    "thm6_4_6_5": (suite_thm6_4_6_5, 4),
    "thm6_7": (suite_thm6_7, 4),
}


def suite_names() -> list[str]:
    return list(SUITES)


def run_suite(name: str, max_order: int | None = None) -> VerificationReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; known: {', '.join(SUITES)}")
    fn, default = SUITES[name]
    return fn(default if max_order is None else max_order)


# ---------------------------------------------------------- classification

DECIDER_ORDER_CAP = 128


def classify(alg, max_order: int = DECIDER_ORDER_CAP) -> list[tuple[str, str]]:
    """Structural summary of a parsed algebra, as ordered key/value pairs."""
    if isinstance(alg, FiniteSemilattice):
        lat = try_lattice(alg)
        fields = [("kind", "semilattice"), ("order", str(alg.order)),
                  ("lattice", _b(lat is not None))]
        if lat is not None:
            fields.append(("distributive", _b(is_distributive(lat))))
        fields.append(("top", str(alg.top)))
        return fields

    R: FiniteHemiring = alg
    fields = [("kind", "hemiring"), ("order", str(R.order)),
              ("semiring", _b(R.is_semiring)), ("ring", _b(R.is_ring)),
              ("proper", _b(R.is_proper)),
              ("zero-multiplication", _b(R.has_zero_multiplication())),
              ("commutative", _b(R.is_commutative())),
              ("additively-idempotent", _b(is_additively_idempotent(R))),
              ("zerosumfree", _b(is_zerosumfree(R))),
              ("dedekind-finite", _b(is_dedekind_finite(R)))]
    inf = infinite_element(R)
    fields.append(("infinite-element", "none" if inf is None else str(inf)))
    aic = is_aic(R)
    lo = is_lattice_ordered(R)
    fields.append(("aic", _b(aic)))
    fields.append(("lattice-ordered", _b(lo)))
    if R.one is not None:
        fields.append(("division", _b(is_division_semiring(R))))
    else:
        fields.append(("division", "n/a"))
    if R.order <= max_order:
        cs = is_congruence_simple(R)
        isim = is_ideal_simple(R)
        fields.append(("congruence-simple", _b(cs)))
        fields.append(("ideal-simple", _b(isim)))
        fields.append(("simple", _b(cs and isim)))
        if lo and R.is_semiring and cs:
            fields.append(
                ("iso-to-B", _b(is_isomorphic(R, boolean_B()) is not None)))
    else:
        fields.append(("congruence-simple", "skipped(size)"))
        fields.append(("ideal-simple", "skipped(size)"))
        fields.append(("simple", "skipped(size)"))
    return fields

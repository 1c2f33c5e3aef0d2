"""Closed-form bounds and their confrontation with exhaustive enumeration.

The enumerated values are authoritative. A report separates two questions:
whether the extremal constructions attain the enumerated extremes
(``EXTREMAL_CONFIRMED``), and whether the printed closed forms equal the
enumerated values (``FORMULA_CONFIRMED``). Every mismatch becomes a
:class:`Discrepancy` carrying graph6 witnesses; a shipped ledger of known
discrepancies decides which of them are expected.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Iterable

from .constructors import CactusClassParams, bundle, saw
from .enumeration import enumerate_cacti, extremal_scan
from .errors import InvalidParams
from .graph_core import (
    Graph,
    cactus_cycle_count,
    canonical_form,
    cut_edges,
    cycle_blocks,
    emit_graph6,
    internal_paths,
    is_chain_cactus,
    parse_graph6,
    pendant_paths,
)
from .invariants import edge_wiener

UPPER_BOUND_MIN_N = 5


def _exact(num: int, den: int) -> int | Fraction:
    q = Fraction(num, den)
    return q.numerator if q.denominator == 1 else q


def lemma1_wiener_path(n: int) -> int:
    if n < 1:
        raise InvalidParams("path needs n >= 1")
    num = n * (n + 1) * (n - 1)
    assert num % 6 == 0
    return num // 6


def lemma1_wiener_cycle(n: int) -> int:
    if n < 3:
        raise InvalidParams("cycle needs n >= 3")
    num = n * (n * n - 1) if n % 2 else n**3
    assert num % 8 == 0
    return num // 8


def theorem1_lower_bound(n: int, t: int) -> int | Fraction:
    """Printed lower bound n^2/2 + (2t - 3/2)n + 3t^2 - 7t + 1."""
    CactusClassParams(n, t)
    return _exact(n * n + (4 * t - 3) * n + 6 * t * t - 14 * t + 2, 2)


def theorem2_upper_bound(n: int, t: int) -> int | Fraction:
    """Printed upper bound, case split on the parity of ``t``."""
    CactusClassParams(n, t)
    k = t // 2
    if t % 2 == 0:
        num = n**3 - 3 * n * n + 2 * n + 6 * k * n * n - 24 * k * k * n + 8 * k**3 + 48 * k * k - 20 * k
    else:
        num = (
            n**3 - 13 * n + 6 * k * n * n - 24 * k * k * n - 24 * k * n
            - 8 * k**3 + 60 * k * k + 70 * k + 30
        )
    return _exact(num, 6)


def bundle_closed_form(n: int, t: int) -> int:
    """Edge-Wiener index of the bundle C0(n, t), fitted to and checked against enumeration."""
    CactusClassParams(n, t)
    return _exact(n * n + (4 * t - 3) * n + 3 * t * t - 11 * t + 2, 2)  # type: ignore[return-value]


def saw_closed_form(n: int, t: int) -> int:
    """Edge-Wiener index of Sw(floor(t/2), ceil(t/2); n-2t-1).

    Equals the printed upper bound for even ``t``; for odd ``t`` the cubic
    term in ``k`` enters with ``+4/3`` instead of ``-4/3``.
    """
    CactusClassParams(n, t)
    k = t // 2
    if t % 2 == 0:
        return theorem2_upper_bound(n, t)  # type: ignore[return-value]
    num = (
        n**3 - 13 * n + 6 * k * n * n - 24 * k * k * n - 24 * k * n
        + 8 * k**3 + 60 * k * k + 70 * k + 30
    )
    return _exact(num, 6)  # type: ignore[return-value]


def extremal_saw(n: int, t: int) -> Graph:
    return saw(t // 2, (t + 1) // 2, n)


# ------------------------------------------------------------- reports


@dataclass(frozen=True)
class Discrepancy:
    code: str
    detail: str
    witnesses: tuple[str, ...] = ()
    known: bool = False


@dataclass
class VerificationReport:
    n: int
    t: int
    cell_size: int
    oracle_min: int
    oracle_max: int
    bundle_value: int
    saw_value: int
    theorem1_value: int | Fraction
    theorem2_value: int | Fraction | None
    theorem2_domain: bool
    min_attained_by_bundle: bool
    max_attained_by_saw: bool | None
    min_unique: bool
    max_unique: bool
    extremal_status: str = ""
    formula_status: str = ""
    discrepancies: list[Discrepancy] = field(default_factory=list)

    @property
    def new_discrepancies(self) -> list[Discrepancy]:
        return [d for d in self.discrepancies if not d.known]

    def codes(self) -> list[str]:
        return [d.code for d in self.discrepancies]

    def to_json(self) -> dict:
        out = asdict(self)
        for key in ("theorem1_value", "theorem2_value"):
            if isinstance(out[key], Fraction):
                out[key] = str(out[key])
        out["discrepancies"] = [asdict(d) for d in self.discrepancies]
        for d in out["discrepancies"]:
            d["witnesses"] = list(d["witnesses"])
        return out


CSV_COLUMNS = (
    "n",
    "t",
    "cell_size",
    "oracle_min",
    "oracle_max",
    "bundle_value",
    "saw_value",
    "theorem1_value",
    "theorem2_value",
    "theorem2_domain",
    "min_attained_by_bundle",
    "max_attained_by_saw",
    "min_unique",
    "max_unique",
    "extremal_status",
    "formula_status",
    "discrepancy_codes",
    "new_discrepancy_codes",
)


def csv_row(r: VerificationReport) -> list[str]:
    def fmt(x) -> str:
        if x is None:
            return ""
        if isinstance(x, bool):
            return "true" if x else "false"
        return str(x)

    row = [getattr(r, c) for c in CSV_COLUMNS[:-2]]
    return [fmt(x) for x in row] + [
        ";".join(r.codes()),
        ";".join(d.code for d in r.new_discrepancies),
    ]


# ------------------------------------------------------ known ledger


@dataclass(frozen=True)
class KnownDiscrepancy:
    code: str
    cells: tuple[tuple[int, int], ...] = ()
    t_min: int | None = None
    note: str = ""

    def matches(self, code: str, n: int, t: int) -> bool:
        if code != self.code:
            return False
        if self.cells and (n, t) not in self.cells:
            return False
        if self.t_min is not None and t < self.t_min:
            return False
        return True


def load_known(path: str | None = None) -> list[KnownDiscrepancy]:
    if path is None:
        text = resources.files("cactus_wiener").joinpath("known_discrepancies.json").read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    entries = json.loads(text)["entries"]
    return [
        KnownDiscrepancy(
            e["code"],
            tuple(tuple(c) for c in e.get("cells", ())),
            e.get("t_min"),
            e.get("note", ""),
        )
        for e in entries
    ]


# ------------------------------------------------- structural claims


def bridge_internal_paths(g: Graph) -> list[list[int]]:
    """Internal paths made only of cut edges."""
    bridges = {g.edges[e] for e in cut_edges(g)}
    out = []
    for p in internal_paths(g):
        if all((min(a, b), max(a, b)) in bridges for a, b in zip(p, p[1:])):
            out.append(p)
    return out


def structural_claims(g: Graph, n: int, t: int) -> dict[str, bool]:
    """The five shape properties expected of a maximiser with ``t >= 1``.

    The internal-path count uses paths of cut edges only: the literal
    definition also counts triangle edges between two consecutive
    high-degree chain vertices.
    """
    cycles = cycle_blocks(g)
    targets = {
        canonical_form(saw(i, t - i, n))
        for i in range(t + 1)
        if abs(2 * i - t) <= 1 and n >= 2 * t + 1
    }
    pend = len(pendant_paths(g))
    return {
        "ALL_TRIANGLES": all(len(c) == 3 for c in cycles),
        "CHAIN": is_chain_cactus(g),
        "PENDANT_PATHS": pend == 1 if t == 1 else pend == 0,
        "INTERNAL_PATHS": t < 2 or len(bridge_internal_paths(g)) <= 1,
        "SAW_SHAPE": canonical_form(g) in targets,
    }


def verify_structural_claims(params: CactusClassParams | tuple[int, int]) -> list[Discrepancy]:
    p = params if isinstance(params, CactusClassParams) else CactusClassParams(*params)
    if p.t < 1:
        raise InvalidParams("structural claims concern t >= 1")
    scan = extremal_scan(p)
    out = []
    for form in scan.max_forms:
        g = parse_graph6(str(form))
        for code, ok in structural_claims(g, p.n, p.t).items():
            if not ok:
                out.append(Discrepancy(f"{code}_VIOLATED", f"maximiser with W_e={scan.max_value}", (str(form),)))
    return out


# ----------------------------------------------------------- harness


def verify_cell(
    params: CactusClassParams | tuple[int, int], known: Iterable[KnownDiscrepancy] | None = None
) -> VerificationReport:
    p = params if isinstance(params, CactusClassParams) else CactusClassParams(*params)
    n, t = p.n, p.t
    known = list(load_known() if known is None else known)
    cell = enumerate_cacti(p)
    scan = extremal_scan(p)
    b, s = bundle(n, t), extremal_saw(n, t)
    assert cactus_cycle_count(b) == t and cactus_cycle_count(s) == t
    b_form, s_form = canonical_form(b), canonical_form(s)
    b_val, s_val = edge_wiener(b), edge_wiener(s)
    in_domain = n >= UPPER_BOUND_MIN_N
    t1 = theorem1_lower_bound(n, t)
    t2 = theorem2_upper_bound(n, t)

    rep = VerificationReport(
        n=n,
        t=t,
        cell_size=cell.count,
        oracle_min=scan.min_value,
        oracle_max=scan.max_value,
        bundle_value=b_val,
        saw_value=s_val,
        theorem1_value=t1,
        theorem2_value=t2,
        theorem2_domain=in_domain,
        min_attained_by_bundle=b_form in scan.min_forms,
        max_attained_by_saw=(s_form in scan.max_forms) if in_domain else None,
        min_unique=len(scan.min_forms) == 1,
        max_unique=len(scan.max_forms) == 1,
    )
    d: list[Discrepancy] = []
    mins = tuple(str(f) for f in scan.min_forms)
    maxs = tuple(str(f) for f in scan.max_forms)
    if not rep.min_attained_by_bundle:
        d.append(Discrepancy("MIN_NOT_BUNDLE", f"minimum {scan.min_value}, bundle {b_val}", mins + (str(b_form),)))
    if not rep.min_unique:
        d.append(Discrepancy("MIN_NOT_UNIQUE", f"{len(mins)} minimisers at {scan.min_value}", mins))
    if isinstance(t1, Fraction):
        d.append(Discrepancy("LOWER_BOUND_NON_INTEGRAL", f"printed bound {t1}", (str(b_form),)))
    if t1 != scan.min_value:
        d.append(
            Discrepancy(
                "LOWER_BOUND_MISMATCH",
                f"printed bound {t1}, enumerated minimum {scan.min_value}",
                (str(b_form),),
            )
        )
    if in_domain:
        if not rep.max_attained_by_saw:
            d.append(Discrepancy("MAX_NOT_SAW", f"maximum {scan.max_value}, saw {s_val}", maxs + (str(s_form),)))
        if not rep.max_unique:
            d.append(Discrepancy("MAX_NOT_UNIQUE", f"{len(maxs)} maximisers at {scan.max_value}", maxs))
        if isinstance(t2, Fraction):
            d.append(Discrepancy("UPPER_BOUND_NON_INTEGRAL", f"printed bound {t2}", (str(s_form),)))
        if t2 != scan.max_value or t2 != s_val:
            d.append(
                Discrepancy(
                    "UPPER_BOUND_MISMATCH",
                    f"printed bound {t2}, enumerated maximum {scan.max_value}, saw {s_val}",
                    (str(s_form),),
                )
            )
        if t >= 1:
            d.extend(verify_structural_claims(p))
    rep.discrepancies = [
        Discrepancy(x.code, x.detail, x.witnesses, any(k.matches(x.code, n, t) for k in known)) for x in d
    ]
    extremal_ok = rep.min_attained_by_bundle and (rep.max_attained_by_saw is not False)
    rep.extremal_status = "EXTREMAL_CONFIRMED" if extremal_ok else "EXTREMAL_FAILED"
    formula_ok = t1 == scan.min_value and (not in_domain or t2 == scan.max_value)
    rep.formula_status = "FORMULA_CONFIRMED" if formula_ok else "FORMULA_MISMATCH"
    return rep


def sweep_cells(max_n: int, min_n: int = 3) -> list[CactusClassParams]:
    return [CactusClassParams(n, t) for n in range(min_n, max_n + 1) for t in range((n - 1) // 2 + 1)]


def verify_bounds(max_n: int, known: Iterable[KnownDiscrepancy] | None = None) -> list[VerificationReport]:
    known = list(load_known() if known is None else known)
    return [verify_cell(p, known) for p in sweep_cells(max_n)]


def witness(g: Graph) -> str:
    return emit_graph6(g)

"""Discharging audits on plane graphs, in exact rational arithmetic.

Elements are named ``v<i>`` for vertices and ``f<j>`` for face walks.  Every
transfer is recorded with the rule that produced it, so the final charges
can be re-derived from the ledger alone.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .plane import PlaneGraph
from .structure import has_cycle_len


class DischargeError(ValueError):
    pass


class DisconnectedInput(DischargeError):
    pass


class ForbiddenCycle(DischargeError):
    pass


class KTooSmall(DischargeError):
    pass


@dataclass(frozen=True)
class ChargeScheme:
    name: str
    vertex_offset: int  # w(v) = vertex_scale * deg(v) - vertex_offset
    vertex_scale: int
    face_offset: int  # w(f) = deg(f) - face_offset
    constant: int  # the Euler value of the total

    def vertex_charge(self, deg: int) -> Fraction:
        return Fraction(self.vertex_scale * deg - self.vertex_offset)

    def face_charge(self, deg: int) -> Fraction:
        return Fraction(deg - self.face_offset)


TOTAL_SCHEME = ChargeScheme("total-scheme", 6, 2, 6, -12)
FOUR_SCHEME = ChargeScheme("four-scheme", 4, 1, 4, -8)
SCHEMES = {s.name: s for s in (TOTAL_SCHEME, FOUR_SCHEME)}


@dataclass(frozen=True)
class Transfer:
    rule: str
    source: str
    sink: str
    amount: Fraction

    def to_json(self) -> dict:
        return {"rule": self.rule, "source": self.source, "sink": self.sink,
                "amount": str(self.amount)}


@dataclass
class ChargeLedger:
    initial: dict[str, Fraction]
    transfers: list[Transfer] = field(default_factory=list)

    def move(self, rule: str, source: str, sink: str, amount: Fraction) -> None:
        self.transfers.append(Transfer(rule, source, sink, Fraction(amount)))

    def final(self) -> dict[str, Fraction]:
        out = dict(self.initial)
        for t in self.transfers:
            out[t.source] -= t.amount
            out[t.sink] += t.amount
        return out

    def conserves(self) -> bool:
        return sum(self.final().values()) == sum(self.initial.values())

    def to_json(self) -> dict:
        return {"initial": {k: str(v) for k, v in self.initial.items()},
                "transfers": [t.to_json() for t in self.transfers]}


def initial_charges(pg: PlaneGraph, scheme: ChargeScheme) -> dict[str, Fraction]:
    g = pg.graph
    charges = {f"v{v}": scheme.vertex_charge(g.degree(v)) for v in range(g.n)}
    for j, face in enumerate(pg.faces):
        charges[f"f{j}"] = scheme.face_charge(face.degree)
    return charges


def charge_sum(pg: PlaneGraph, scheme: "ChargeScheme | str") -> Fraction:
    """Sum of initial charges; Euler's formula fixes it for connected inputs."""
    if isinstance(scheme, str):
        scheme = SCHEMES[scheme]
    if not pg.graph.is_connected():
        raise DisconnectedInput("charge sums are defined for connected plane graphs")
    return sum(initial_charges(pg, scheme).values(), Fraction(0))


# -- properties -------------------------------------------------------------


def _three_faces_at(pg: PlaneGraph) -> Counter:
    count: Counter = Counter()
    for face in pg.three_faces():
        for v in set(face.vertices):
            count[v] += 1
    return count


def _prop_connected(pg):
    ok = pg.graph.is_connected()
    return ok, "" if ok else f"{len(pg.graph.components())} components"


def _prop_triangle_bound(pg):
    g = pg.graph
    at = _three_faces_at(pg)
    bad = [v for v in range(g.n) if at[v] > g.degree(v) // 2]
    return not bad, f"vertices {bad} exceed floor(deg/2) incident 3-faces" if bad else ""


def _prop_min_degree(pg):
    low = [v for v in range(pg.n) if pg.graph.degree(v) < 3]
    return not low, f"vertices {low} have degree < 3" if low else ""


def _prop_light_edges(pg, k):
    g = pg.graph
    for u, v in g.edges:
        a, b = g.degree(u), g.degree(v)
        if 2 * min(a, b) <= k and a + b <= k + 2:
            return False, f"edge {u}-{v} has degrees ({a}, {b})"
    return True, ""


def _prop_no_444_face(pg):
    g = pg.graph
    for face in pg.three_faces():
        if all(g.degree(v) == 4 for v in face.vertices):
            return False, f"3-face {face.vertices} has all degrees 4"
    return True, ""


def _prop_no_light_3_edge(pg):
    g = pg.graph
    for u, v in g.edges:
        a, b = g.degree(u), g.degree(v)
        if min(a, b) == 3 and a + b <= 7:
            return False, f"edge {u}-{v} has degrees ({a}, {b})"
    return True, ""


# -- audits -----------------------------------------------------------------


@dataclass
class AuditReport:
    scheme: str
    k: int
    graph: str
    properties: dict[str, dict]
    ledger: ChargeLedger
    final: dict[str, Fraction]
    negative: list[str]
    verdict: str
    notes: list[str]

    @property
    def all_properties_hold(self) -> bool:
        return all(p["holds"] for p in self.properties.values())

    @property
    def failing_properties(self) -> list[str]:
        return [k for k, p in self.properties.items() if not p["holds"]]

    def total_initial(self) -> Fraction:
        return sum(self.ledger.initial.values(), Fraction(0))

    def total_final(self) -> Fraction:
        return sum(self.final.values(), Fraction(0))

    def to_json(self) -> dict:
        return {
            "scheme": self.scheme, "k": self.k, "graph": self.graph,
            "properties": self.properties,
            "ledger": self.ledger.to_json(),
            "final": {k: str(v) for k, v in self.final.items()},
            "total_initial": str(self.total_initial()),
            "total_final": str(self.total_final()),
            "negative": self.negative,
            "verdict": self.verdict,
            "notes": self.notes,
        }


def _verdict(props: dict, final: dict) -> tuple[list[str], str]:
    negative = sorted((k for k, v in final.items() if v < 0), key=lambda s: (s[0], int(s[1:])))
    if not all(p["holds"] for p in props.values()):
        return negative, "property-fails"
    # every property holds: the rules must leave nothing negative, and then the
    # nonnegative total contradicts the negative Euler constant
    if negative:
        return negative, "gap: all properties hold but some final charge is negative"
    return negative, "contradiction: all properties hold and every final charge is nonnegative"


def _check_degree(pg: PlaneGraph, k: int, least: int) -> None:
    if k < least:
        raise KTooSmall(f"k must be at least {least}")
    if pg.graph.max_degree > k:
        raise KTooSmall(f"maximum degree {pg.graph.max_degree} exceeds k = {k}")


def audit_no4cycle(pg: PlaneGraph, k: int) -> AuditReport:
    """Total-scheme audit for plane graphs without 4-cycles."""
    _check_degree(pg, k, 6)
    g = pg.graph
    if has_cycle_len(g, 4):
        raise ForbiddenCycle("graph has a 4-cycle")
    props = {}
    for pid, (ok, detail) in {
        "1": _prop_connected(pg),
        "2": _prop_triangle_bound(pg),
        "3": _prop_min_degree(pg),
        "4": _prop_light_edges(pg, k),
        "5": _prop_no_444_face(pg),
    }.items():
        props[pid] = {"holds": ok, "detail": detail}

    ledger = ChargeLedger(initial_charges(pg, TOTAL_SCHEME))
    menu = {3: (Fraction(3, 2), Fraction(3, 4)), 5: (Fraction(1, 3), Fraction(1, 4))}
    for j, face in enumerate(pg.faces):
        if face.degree not in menu:
            continue
        high, four = menu[face.degree]
        for v in sorted(set(face.vertices)):
            d = g.degree(v)
            if d >= 5:
                ledger.move(f"R{face.degree}-5+", f"v{v}", f"f{j}", high)
            elif d == 4:
                ledger.move(f"R{face.degree}-4", f"v{v}", f"f{j}", four)
    final = ledger.final()
    negative, verdict = _verdict(props, final)
    notes = ["5-vertices use the 3-face incidence bound of property 2 for their case",
             "a vertex visited several times by one face walk transfers once to that face"]
    return AuditReport(TOTAL_SCHEME.name, k, g.name, props, ledger, final, negative, verdict, notes)


def audit_no45cycle(pg: PlaneGraph, k: int) -> AuditReport:
    """Four-scheme audit for plane graphs without 4- and 5-cycles."""
    _check_degree(pg, k, 5)
    g = pg.graph
    for length in (4, 5):
        if has_cycle_len(g, length):
            raise ForbiddenCycle(f"graph has a {length}-cycle")
    props = {}
    for pid, (ok, detail) in {
        "1": _prop_connected(pg),
        "2": _prop_triangle_bound(pg),
        "3": _prop_min_degree(pg),
        "4": _prop_no_light_3_edge(pg),
    }.items():
        props[pid] = {"holds": ok, "detail": detail}

    ledger = ChargeLedger(initial_charges(pg, FOUR_SCHEME))
    for j, face in enumerate(pg.faces):
        r = face.degree
        if r >= 6:
            for v, mult in sorted(face.multiplicity.items()):
                ledger.move("R1-big-face", f"f{j}", f"v{v}", (1 - Fraction(4, r)) * mult)
    for j, face in enumerate(pg.faces):
        if face.degree != 3:
            continue
        on_face = set(face.vertices)
        for v in sorted(on_face):
            if g.degree(v) == 3:
                for u in g.adj[v]:
                    if u not in on_face:
                        ledger.move("R2-pending-3-vertex", f"v{u}", f"v{v}", Fraction(1, 3))
    for j, face in enumerate(pg.faces):
        if face.degree != 3:
            continue
        for v in sorted(set(face.vertices)):
            d = g.degree(v)
            if d == 5:
                ledger.move("R3-5", f"v{v}", f"f{j}", Fraction(1, 2))
            elif d == 4:
                ledger.move("R3-4", f"v{v}", f"f{j}", Fraction(1, 3))
    final = ledger.final()
    negative, verdict = _verdict(props, final)
    notes = ["visit multiplicities m_v(f) are computed for every vertex, not only cut vertices"]
    return AuditReport(FOUR_SCHEME.name, k, g.name, props, ledger, final, negative, verdict, notes)

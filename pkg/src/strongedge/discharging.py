"""Charge bookkeeping on embedded planar graphs.

Every vertex starts with charge 2d(v)-6 and every face with r(f)-6; on a
connected planar embedding these sum to exactly -12.  Rules R1-R6 move
charge around without changing the total, and the audit inspects where
negative charge survives.  All arithmetic is exact rational: thirds appear
in R3 and R6.2, so floats would make the >= 0 verdicts unreliable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .embedding import Embedding
from .girth6 import Configuration, find_configuration
from .graph import ACYCLIC

#: Element keys: ("v", vertex id) or ("f", face id).
Element = tuple[str, int]


class DischargingError(ValueError):
    pass


@dataclass(frozen=True)
class Transfer:
    source: Element
    target: Element
    amount: Fraction
    rule: str


@dataclass
class ChargeMap:
    vertex_charge: dict[int, Fraction]
    face_charge: dict[int, Fraction]
    ledger: tuple[Transfer, ...] = ()
    rule_gaps: tuple[int, ...] = ()

    def total(self) -> Fraction:
        return sum(self.vertex_charge.values(), Fraction(0)) + sum(
            self.face_charge.values(), Fraction(0)
        )

    def charge(self, el: Element) -> Fraction:
        kind, ident = el
        return self.vertex_charge[ident] if kind == "v" else self.face_charge[ident]

    def negatives(self) -> list[tuple[Element, Fraction]]:
        out = [
            (("v", v), c) for v, c in sorted(self.vertex_charge.items()) if c < 0
        ]
        out.extend(
            (("f", f), c) for f, c in sorted(self.face_charge.items()) if c < 0
        )
        return out


def initial_charges(emb: Embedding) -> ChargeMap:
    """2d(v)-6 per vertex and r(f)-6 per face; requires a connected graph so
    that the total is the Euler constant -12."""
    g = emb.graph
    if not g.is_connected() or g.num_vertices() == 0:
        raise DischargingError("initial charges need a connected non-empty graph")
    cm = ChargeMap(
        vertex_charge={v: Fraction(2 * g.degree(v) - 6) for v in g.vertices},
        face_charge={f.id: Fraction(f.length - 6) for f in emb.faces},
    )
    if cm.total() != -12:
        raise DischargingError(f"initial charge total {cm.total()} != -12")
    return cm


def _rule_transfers(emb: Embedding) -> tuple[list[Transfer], list[int]]:
    """All R1-R6 transfers.  They depend only on the embedding's structure,
    never on intermediate charges, so application order is irrelevant."""
    g = emb.graph
    transfers: list[Transfer] = []
    gaps: list[int] = []

    girth = g.girth()
    check_face_bound = girth != ACYCLIC and girth >= 6

    # R1: faces pay 2 per incident degree-1 vertex (one visit each).
    for face in emb.faces:
        pendant_visits = [v for v in face.walk if g.degree(v) == 1]
        if check_face_bound and face.length < 6 + 2 * len(pendant_visits):
            raise DischargingError(
                f"face {face.id} of length {face.length} carries "
                f"{len(pendant_visits)} pendant vertices; length must be >= "
                f"{6 + 2 * len(pendant_visits)} at girth >= 6"
            )
        for v in pendant_visits:
            transfers.append(Transfer(("f", face.id), ("v", v), Fraction(2), "R1"))

    two_count = {
        v: sum(1 for w in g.neighbours(v) if g.degree(w) == 2) for v in g.vertices
    }

    for u in g.vertices:
        d = g.degree(u)
        if d == 4:
            l = two_count[u]
            rate = {1: Fraction(2), 2: Fraction(1), 3: Fraction(2, 3)}.get(l)
            if rate is None:
                continue
            rule = {1: "R5", 2: "R4", 3: "R3"}[l]
            for w in g.neighbours(u):
                if g.degree(w) == 2:
                    transfers.append(Transfer(("v", u), ("v", w), rate, rule))
        elif d >= 5:
            for w in g.neighbours(u):
                if g.degree(w) == 1:
                    transfers.append(Transfer(("v", u), ("v", w), Fraction(2), "R2"))
                elif g.degree(w) == 2:
                    (other,) = [x for x in g.neighbours(w) if x != u]
                    od = g.degree(other)
                    if od in (2, 3):
                        transfers.append(
                            Transfer(("v", u), ("v", w), Fraction(2), "R6.1")
                        )
                    elif od == 4 and two_count[other] == 3:
                        transfers.append(
                            Transfer(("v", u), ("v", w), Fraction(4, 3), "R6.2")
                        )
                    elif od >= 4:
                        transfers.append(
                            Transfer(("v", u), ("v", w), Fraction(1), "R6.3")
                        )
                    else:
                        # degree-1 second neighbour: no rule names this case.
                        gaps.append(w)
    return transfers, gaps


_RULE_ORDER = {"R1": 0, "R2": 1, "R3": 2, "R4": 3, "R5": 4, "R6.1": 5, "R6.2": 5, "R6.3": 5}


def apply_rules(emb: Embedding, init: ChargeMap) -> ChargeMap:
    """Final charges after R1-R6, with the full transfer ledger.  The total
    is conserved exactly."""
    transfers, gaps = _rule_transfers(emb)
    transfers.sort(key=lambda t: (_RULE_ORDER[t.rule], t.source, t.target))
    vertex = dict(init.vertex_charge)
    face = dict(init.face_charge)
    for t in transfers:
        if t.source[0] == "v":
            vertex[t.source[1]] -= t.amount
        else:
            face[t.source[1]] -= t.amount
        if t.target[0] == "v":
            vertex[t.target[1]] += t.amount
        else:
            face[t.target[1]] += t.amount
    final = ChargeMap(vertex, face, tuple(transfers), tuple(sorted(set(gaps))))
    if final.total() != init.total():
        raise DischargingError(
            f"charge total drifted: {init.total()} -> {final.total()}"
        )
    return final


def replay_ledger(init: ChargeMap, final: ChargeMap) -> bool:
    """Entry-by-entry check that initial + ledger == final, exactly."""
    vertex = dict(init.vertex_charge)
    face = dict(init.face_charge)
    for t in final.ledger:
        book = vertex if t.source[0] == "v" else face
        book[t.source[1]] -= t.amount
        book = vertex if t.target[0] == "v" else face
        book[t.target[1]] += t.amount
    return vertex == final.vertex_charge and face == final.face_charge


@dataclass
class Report:
    initial_total: Fraction
    final_total: Fraction
    negatives: list[tuple[Element, Fraction]]
    ledger_size: int
    rule_gaps: tuple[int, ...]
    verdict: str
    configuration: Configuration | None
    in_scope: bool

    def as_dict(self) -> dict:
        return {
            "initial_total": str(self.initial_total),
            "final_total": str(self.final_total),
            "negatives": [
                {"element": f"{kind}{ident}", "charge": str(c)}
                for (kind, ident), c in self.negatives
            ],
            "ledger_size": self.ledger_size,
            "rule_gaps": list(self.rule_gaps),
            "verdict": self.verdict,
            "configuration": self.configuration.kind if self.configuration else None,
            "in_scope": self.in_scope,
        }


def audit(emb: Embedding, final: ChargeMap) -> Report:
    """Inspect the post-rules charges.

    In scope (girth >= 6, max degree >= 4): some configuration must exist;
    negative leftover charge is expected exactly where one sits.  If no
    configuration is found in scope the charge argument says every element
    would have to be non-negative while summing to -12, which is absurd, so
    the verdict is theorem-violation.  Out of scope, negatives carry no
    message.
    """
    g = emb.graph
    init = initial_charges(emb)
    negatives = final.negatives()
    cfg = find_configuration(g)
    in_scope = g.girth() >= 6 and g.max_degree() >= 4
    if in_scope and cfg is None:
        verdict = "theorem-violation"
    elif in_scope:
        verdict = "consistent"
    else:
        verdict = "out-of-scope"
    return Report(
        initial_total=init.total(),
        final_total=final.total(),
        negatives=negatives,
        ledger_size=len(final.ledger),
        rule_gaps=final.rule_gaps,
        verdict=verdict,
        configuration=cfg,
        in_scope=in_scope,
    )

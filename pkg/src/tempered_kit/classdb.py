"""Known classification results for tempered spaces with at most four points.

Each connected tempered space ``n.a.t`` maps to a status and the results
that settle it. Statuses ``CLASSIFIED_IF_FG_K`` and ``CLASSIFIED_IF_UNITAL``
mark results that need finitely generated K-theory or a unit; both hold
for C*-algebras of finite graphs, so reports on concrete graphs resolve
them.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import UnknownSignatureError
from .graphalg import Graph, tempered_signature
from .signature import Shape, Signature, classify_shape, format_signature, is_accordion, parse_signature

FORMAT_VERSION = 1


class Status(str, enum.Enum):
    CLASSIFIED = "CLASSIFIED"
    CLASSIFIED_IF_FG_K = "CLASSIFIED_IF_FG_K"
    CLASSIFIED_IF_UNITAL = "CLASSIFIED_IF_UNITAL"
    OPEN = "OPEN"
    UNKNOWN = "UNKNOWN"

    @property
    def conditional(self) -> bool:
        return self in (Status.CLASSIFIED_IF_FG_K, Status.CLASSIFIED_IF_UNITAL)

    @property
    def solved(self) -> bool:
        return self is Status.CLASSIFIED or self.conditional


# Rows per space: "t:ref" solved, "t:fg/ref" needs f.g. K-theory,
# "t:u/ref" needs a unit, "t:?" open.
_ROWS = {
    "1.0": "0:AF 1:PI",
    "2.1": "0:AF 1:classgraph1 2:classgraph2 3:PI",
    "3.3": "0:AF 1:t:class2 2:t:class2-PI 3:t:class2-PI 5:t:class2 7:PI",
    "3.6": "0:AF 1:t:class1 2:t:class1-PI 3:t:class1-PI 5:t:class1 7:PI",
    "3.7": "0:AF 1:classgraph1 2:fg/t:graphmixed2 3:classgraph1 4:classgraph2 "
    "5:fg/t:graphmixed1 6:classgraph2 7:PI",
    "4.E": "0:AF 1:r:class1 2:? 3:? 4:t:pullback-technique 5:t:pullback-technique "
    "6:? 7:? 8:? 9:? 10:? 11:? 12:? 13:? 14:? 15:PI",
    "4.F": "0:AF 1:classgraph1 2:u/adhocaccordion 3:fg/adhocaccordion 4:u/adhocaccordion "
    "5:u/adhocaccordion 6:t:class2 7:adhocaccordion 8:t:class2 9:adhocaccordion "
    "10:fg/adhocaccordion 11:fg/adhocaccordion 12:u/adhocaccordion 13:u/adhocaccordion "
    "14:t:class2 15:PI",
    "4.39": "0:AF 1:t:class1 2:u/adhocaccordion 3:t:class1 4:t:class1 5:t:class1 "
    "6:u/adhocaccordion 7:t:class1 8:classgraph2 9:fg/adhocaccordion 10:u/adhocaccordion "
    "11:adhocaccordion 12:adhocaccordion 13:fg/adhocaccordion 14:u/adhocaccordion 15:PI",
    "4.3F": "0:AF 1:classgraph1 2:fg/t:graphmixed2 3:classgraph1 4:fg/t:graphmixed2 "
    "5:fg/adhocaccordion 6:u/adhocaccordion 7:classgraph1 8:classgraph2 9:fg/t:graphmixed1 "
    "10:u/adhocaccordion 11:? 12:classgraph2 13:fg/adhocaccordion 14:classgraph2 15:PI",
    "4.A": "0:AF 1:t:class2-PI 2:t:class2 3:t:class2-PI 6:t:class2 7:t:class2-PI 14:t:class2 15:PI",
    "4.38": "0:AF 1:t:class1 3:t:class1 7:t:class1 8:t:class1-PI 9:t:class1-PI 11:t:class1-PI 15:PI",
    "4.1F": "0:AF 1:classgraph1 2:u/adhocY 3:classgraph1 4:r:class2 5:u/adhocY 6:u/adhocY "
    "7:adhocY 12:r:class2 13:fg/adhocY 14:adhocY 15:PI",
    "4.3E": "0:AF 1:r:class1 3:adhocY 4:fg/adhocY 5:fg/adhocY 7:adhocY 8:classgraph2 "
    "9:u/adhocY 11:u/adhocY 12:classgraph2 13:adhocY 15:PI",
    "4.1E": "0:AF 1:r:class1 3:r:class1 4:r:class2 5:? 7:? 12:r:class2 13:? 15:?",
    "4.3B": "0:AF 1:classgraph1 2:? 3:? 6:? 7:adhocO 8:classgraph2 9:? 10:? 11:? 14:adhocO 15:PI",
}

# The table numbers the temperatures of the two three-point fans with the
# distinguished point in the middle bit; these maps give the canonical t.
_TABLE_T = {
    "3.3": {1: 2, 2: 1, 5: 6},
    "3.6": {2: 4, 3: 5, 5: 3},
}

# Which clause of the purely infinite theorem covers each space.
_PI_CLAUSE = {
    "4.A": "ii",
    "4.38": "ii",
    "4.1F": "ii",
    "4.3E": "ii",
    "4.3B": "iii",
}


def _reference(short: str, space: str) -> str:
    if short == "AF":
        return "Theorem AF"
    if short == "PI":
        return f"Theorem PI({_PI_CLAUSE.get(space, 'i')})"
    if short.startswith("classgraph"):
        return f"Prop {short}"
    if short.startswith("adhoc"):
        return f"Cor {short}"
    if short.startswith("r:"):
        return f"Remark {short}"
    return short


@dataclass(frozen=True)
class StatusRecord:
    signature: Signature
    status: Status
    references: tuple[str, ...]
    shape: Shape
    table_label: str = ""

    @property
    def label(self) -> str:
        return format_signature(self.signature)

    def to_json(self) -> dict:
        return {
            "signature": self.label,
            "status": self.status.value,
            "references": list(self.references),
            "shape": self.shape.primary,
            "tags": sorted(self.shape.tags),
            "table_label": self.table_label or self.label,
        }

    @classmethod
    def from_json(cls, d: dict) -> "StatusRecord":
        return cls(
            parse_signature(d["signature"]),
            Status(d["status"]),
            tuple(d["references"]),
            Shape(d["shape"], frozenset(d.get("tags", [d["shape"]]))),
            d.get("table_label", d["signature"]),
        )


@lru_cache(maxsize=1)
def _database() -> dict[Signature, StatusRecord]:
    db = {}
    for space, rows in _ROWS.items():
        base = parse_signature(space)
        shape = classify_shape(base.poset())
        for item in rows.split():
            t_text, _, body = item.partition(":")
            t = _TABLE_T.get(space, {}).get(int(t_text), int(t_text))
            sig = Signature(base.n, base.a, t)
            table_label = f"{space}.{t_text}"
            if body == "?":
                db[sig] = StatusRecord(sig, Status.OPEN, (), shape, table_label)
                continue
            status = Status.CLASSIFIED
            if body.startswith("fg/"):
                status, body = Status.CLASSIFIED_IF_FG_K, body[3:]
            elif body.startswith("u/"):
                status, body = Status.CLASSIFIED_IF_UNITAL, body[2:]
            db[sig] = StatusRecord(sig, status, (_reference(body, space),), shape, table_label)
    return db


def records() -> list[StatusRecord]:
    return [r for _, r in sorted(_database().items())]


def lookup(sig: Signature | str) -> StatusRecord:
    if isinstance(sig, str):
        sig = parse_signature(sig)
    if sig.t is None:
        raise UnknownSignatureError(f"{sig} carries no temperatures")
    try:
        return _database()[sig]
    except KeyError:
        raise UnknownSignatureError(f"no table entry for {format_signature(sig)}") from None


def lookup_table_label(text: str) -> StatusRecord:
    """Look up a row by the label printed in the table rather than the canonical one."""
    sig = parse_signature(text)
    want = format_signature(sig)
    for r in _database().values():
        if r.table_label == want:
            return r
    raise UnknownSignatureError(f"no table row labelled {text}")


def aggregate_stats(n: int) -> dict[str, int]:
    """Record counts per status for ``n``-point spaces, plus ``total``."""
    counts = Counter(r.status.value for r in _database().values() if r.signature.n == n)
    out = {s.value: counts.get(s.value, 0) for s in Status if s is not Status.UNKNOWN}
    out["total"] = sum(counts.values())
    return out


def export_json() -> dict:
    return {"format_version": FORMAT_VERSION, "records": [r.to_json() for r in records()]}


def import_json(data: dict) -> dict[Signature, StatusRecord]:
    return {r.signature: r for r in map(StatusRecord.from_json, data["records"])}


# -- reports on concrete graphs -------------------------------------------

NOTE_FG = "finite graph ⟹ finitely generated K-theory"
NOTE_UNITAL = "finite graph ⟹ unital C*-algebra"


@dataclass(frozen=True)
class ComponentStatus:
    signature: Signature
    status: Status
    resolved_status: Status
    references: tuple[str, ...] = ()
    notes: tuple[str, ...] = ()
    shape: str = ""

    def to_json(self) -> dict:
        return {
            "signature": format_signature(self.signature),
            "status": self.status.value,
            "resolved_status": self.resolved_status.value,
            "references": list(self.references),
            "notes": list(self.notes),
            "shape": self.shape,
        }

    @classmethod
    def from_json(cls, d: dict) -> "ComponentStatus":
        return cls(
            parse_signature(d["signature"]),
            Status(d["status"]),
            Status(d["resolved_status"]),
            tuple(d["references"]),
            tuple(d["notes"]),
            d.get("shape", ""),
        )


@dataclass(frozen=True)
class ClassificationReport:
    components: tuple[ComponentStatus, ...] = field(default=())

    @property
    def resolved(self) -> Status:
        """Weakest resolved status over all components."""
        order = [Status.UNKNOWN, Status.OPEN, Status.CLASSIFIED_IF_UNITAL, Status.CLASSIFIED_IF_FG_K, Status.CLASSIFIED]
        return min((c.resolved_status for c in self.components), key=order.index, default=Status.CLASSIFIED)

    def to_json(self) -> dict:
        return {"format_version": FORMAT_VERSION, "components": [c.to_json() for c in self.components]}

    @classmethod
    def from_json(cls, d: dict) -> "ClassificationReport":
        return cls(tuple(ComponentStatus.from_json(c) for c in d["components"]))


def component_status(sig: Signature, finite_graph: bool = True) -> ComponentStatus:
    """Status of one connected component, discharging conditions for finite graphs."""
    shape = classify_shape(sig.poset()).primary
    if sig.n <= 4:
        rec = lookup(sig)
        resolved, notes = rec.status, ()
        if finite_graph and rec.status is Status.CLASSIFIED_IF_FG_K:
            resolved, notes = Status.CLASSIFIED, (NOTE_FG,)
        elif finite_graph and rec.status is Status.CLASSIFIED_IF_UNITAL:
            resolved, notes = Status.CLASSIFIED, (NOTE_UNITAL,)
        return ComponentStatus(sig, rec.status, resolved, rec.references, notes, shape)
    temps = sig.temperatures()
    if not any(temps):
        return ComponentStatus(sig, Status.CLASSIFIED, Status.CLASSIFIED, ("Theorem AF",), (), shape)
    if all(temps) and is_accordion(sig.poset()):
        return ComponentStatus(sig, Status.CLASSIFIED, Status.CLASSIFIED, ("Theorem PI(i)",), (), shape)
    note = "more than four points and not covered by the constant-temperature results"
    return ComponentStatus(sig, Status.UNKNOWN, Status.UNKNOWN, (), (note,), shape)


def classification_report(g: Graph) -> ClassificationReport:
    """Per-component status for a finite graph satisfying Condition (K)."""
    return ClassificationReport(tuple(component_status(s) for s in tempered_signature(g)))

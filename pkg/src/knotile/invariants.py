"""Kauffman bracket, Jones normalization, and identification against a table of prime knots."""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Union

from knotile.laurent import DELTA, ONE, LaurentPoly
from knotile.trace import PDFormatError, PlanarDiagram, writhe

log = logging.getLogger(__name__)

DEFAULT_CROSSING_CAP = 20
TABLE_ENV = "KNOTILE_TABLE"


class CrossingLimitError(ValueError):
    pass


class TableValidationError(ValueError):
    pass


class _UnionFind:
    __slots__ = ("parent",)

    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


@lru_cache(maxsize=None)
def _delta_power(k: int) -> LaurentPoly:
    return DELTA ** k


def state_loops(d: PlanarDiagram, state: int) -> int:
    """Loops after smoothing; bit ``i`` of ``state`` set means crossing ``i`` takes the B-smoothing.

    The A-smoothing of ``X(a,b,c,d)`` joins ``a-b`` and ``c-d``; the B-smoothing
    joins ``a-d`` and ``b-c``.
    """
    labels = {a for x in d.crossings for a in x}
    uf = _UnionFind(labels)
    loops = len(labels)
    for i, (a, b, c, e) in enumerate(d.crossings):
        if state >> i & 1:
            loops -= uf.union(a, e) + uf.union(b, c)
        else:
            loops -= uf.union(a, b) + uf.union(c, e)
    return loops + d.free_loops


def bracket(d: PlanarDiagram, crossing_cap: int = DEFAULT_CROSSING_CAP) -> LaurentPoly:
    """Kauffman bracket by the full state sum, normalized so one circle gives 1.

    The empty diagram also gets 1.
    """
    c = d.crossing_count
    if c > crossing_cap:
        raise CrossingLimitError(f"{c} crossings exceeds the cap of {crossing_cap}")
    if c == 0:
        return _delta_power(d.free_loops - 1) if d.free_loops else ONE
    # group states by (a - b, loops) before touching polynomials
    tally: dict[tuple[int, int], int] = {}
    for state in range(1 << c):
        b = bin(state).count("1")
        key = (c - 2 * b, state_loops(d, state))
        tally[key] = tally.get(key, 0) + 1
    total = LaurentPoly()
    for (exp, loops), count in tally.items():
        total = total + _delta_power(loops - 1).shift(exp) * count
    return total


def writhe_factor(w: int) -> LaurentPoly:
    """``(-A^3)^(-w)``."""
    return LaurentPoly.monomial(-3 * w, -1 if w % 2 else 1)


def jones(d: PlanarDiagram, crossing_cap: int = DEFAULT_CROSSING_CAP) -> LaurentPoly:
    """Writhe-normalized bracket in the variable ``A`` (the usual ``t`` is ``A^-4``)."""
    return writhe_factor(writhe(d)) * bracket(d, crossing_cap)


def jones_in_t(f: LaurentPoly) -> dict[int, int]:
    """Rewrite a knot's ``f(A)`` as exponents of ``t = A^-4``."""
    out = {}
    for e, c in f.items():
        if e % 4:
            raise ValueError("exponents are not multiples of 4; not a knot polynomial")
        out[-e // 4] = c
    return out


def bracket_class(p: LaurentPoly) -> tuple:
    """Bracket modulo units ``+-A^k`` and the mirror substitution: a diagram-independent link key."""
    a = p.unit_normalized().key()
    b = p.mirror().unit_normalized().key()
    return min(a, b)


@dataclass
class KnotRecord:
    name: str
    crossing_number: int
    pd: PlanarDiagram
    jones: LaurentPoly = field(default=None)
    chirality: str = ""
    ambiguous: bool = False


@dataclass(frozen=True)
class LinkRecord:
    name: str
    components: int
    pd: PlanarDiagram

    @property
    def key(self) -> tuple:
        return _link_key(self)


@lru_cache(maxsize=None)
def _link_key(link: LinkRecord) -> tuple:
    return (link.components, bracket_class(bracket(link.pd)), bracket(link.pd).unit_normalized())


# Hopf link and Solomon's link (the (2,4) torus link)
LINKS: tuple[LinkRecord, ...] = (
    LinkRecord("2^2_1", 2, PlanarDiagram.from_text("X(4,1,3,2),X(2,3,1,4)")),
    LinkRecord("4^2_1", 2, PlanarDiagram.from_text("X(6,1,7,2),X(8,3,5,4),X(2,5,3,6),X(4,7,1,8)")),
)


class KnotTable:
    """Prime knots with their Jones polynomials, indexed for lookup in either chirality."""

    def __init__(self, records: list[KnotRecord]):
        self.records = records
        self._by_name = {r.name: r for r in records}
        self._by_jones: dict[LaurentPoly, list[KnotRecord]] = {}
        for r in records:
            self._by_jones.setdefault(r.jones, []).append(r)
        self._audit()

    def _audit(self) -> None:
        for i, r1 in enumerate(self.records):
            for r2 in self.records[i + 1:]:
                if r1.jones == r2.jones or r1.jones == r2.jones.mirror():
                    r1.ambiguous = r2.ambiguous = True
                    log.warning("knots %s and %s share a Jones polynomial", r1.name, r2.name)

    def __len__(self):
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    def __contains__(self, name):
        return name in self._by_name

    def __getitem__(self, name: str) -> KnotRecord:
        try:
            return self._by_name[name]
        except KeyError:
            raise KeyError(f"unknown knot {name!r}") from None

    @property
    def ambiguous(self) -> list[str]:
        return [r.name for r in self.records if r.ambiguous]

    def lookup(self, f: LaurentPoly) -> list[tuple[str, bool]]:
        """Table entries whose polynomial equals ``f`` (mirror flag False) or its mirror (True)."""
        hits = [(r.name, False) for r in self._by_jones.get(f, ())]
        seen = {name for name, _ in hits}
        hits += [(r.name, True) for r in self._by_jones.get(f.mirror(), ()) if r.name not in seen]
        return hits


def parse_table(text: str, source: str = "<string>") -> list[KnotRecord]:
    records = []
    names = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split(";")
        if len(parts) < 3:
            raise TableValidationError(f"{source}:{lineno}: expected name;crossings;PD")
        name, cn, pd_text = parts[0].strip(), parts[1].strip(), parts[2]
        chirality = parts[3].strip() if len(parts) > 3 else ""
        try:
            pd = PlanarDiagram.from_text(pd_text)
        except PDFormatError as exc:
            raise TableValidationError(f"{source}:{lineno}: record {name}: {exc}") from exc
        try:
            crossing_number = int(cn)
        except ValueError:
            raise TableValidationError(f"{source}:{lineno}: record {name}: bad crossing number") from None
        if pd.crossing_count != crossing_number:
            raise TableValidationError(
                f"{source}:{lineno}: record {name}: {pd.crossing_count} crossings in PD, "
                f"{crossing_number} declared"
            )
        if len(pd.components) != 1 or pd.signs is None:
            raise TableValidationError(f"{source}:{lineno}: record {name}: PD is not a single oriented knot")
        if name in names:
            raise TableValidationError(f"{source}:{lineno}: duplicate record {name}")
        names.add(name)
        records.append(KnotRecord(name, crossing_number, pd, chirality=chirality))
    return records


def bundled_table_path() -> Path:
    return Path(str(resources.files("knotile") / "data" / "knots.txt"))


def load_knot_table(source: Union[str, os.PathLike, None] = None) -> KnotTable:
    """Load and validate a knot table file; defaults to ``$KNOTILE_TABLE`` or the bundled table."""
    if source is None:
        source = os.environ.get(TABLE_ENV) or bundled_table_path()
    path = Path(source)
    records = parse_table(path.read_text(), str(path))
    for r in records:
        r.jones = jones(r.pd)
    return KnotTable(records)


@lru_cache(maxsize=None)
def default_table() -> KnotTable:
    return load_knot_table()


UNKNOT = "unknot"
UNKNOWN = "unknown"
EMPTY = "empty"


def unlink_name(components: int) -> str:
    return f"0^{components}_1"


def _is_unlink_bracket(p: LaurentPoly, components: int) -> bool:
    return p.unit_normalized() == _delta_power(components - 1).unit_normalized()


def identify_polynomials(
    components: int, bracket_poly: LaurentPoly, jones_poly: LaurentPoly | None, table: KnotTable
):
    """Shared identification logic once the invariants are known."""
    if components == 1:
        if jones_poly == ONE:
            return UNKNOT
        hits = table.lookup(jones_poly)
        return hits or UNKNOWN
    if components == 0:
        return EMPTY
    if _is_unlink_bracket(bracket_poly, components):
        return [(unlink_name(components), False)]
    key = (components, bracket_class(bracket_poly))
    for link in LINKS:
        n_comp, cls, direct = link.key
        if (n_comp, cls) == key:
            return [(link.name, bracket_poly.unit_normalized() != direct)]
    return UNKNOWN


def identify(d: PlanarDiagram, table: KnotTable | None = None):
    """``"unknot"``, ``"unknown"``, or a list of ``(name, mirror_flag)`` matches."""
    table = table if table is not None else default_table()
    b = bracket(d)
    f = writhe_factor(writhe(d)) * b if d.component_count == 1 else None
    return identify_polynomials(d.component_count, b, f, table)


def format_identification(ident) -> str:
    if isinstance(ident, str):
        return ident
    return "|".join(name + ("*" if mirrored else "") for name, mirrored in ident)


def identified_names(ident) -> set[str]:
    if isinstance(ident, str):
        return {ident}
    return {name for name, _ in ident}

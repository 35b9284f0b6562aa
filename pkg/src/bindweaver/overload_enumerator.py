"""Overload-set enumeration against declarative support tables.

The underlying library drops unsupported template instantiations at compile
time; here validity is declared as data instead: candidate type lists are
expanded to ordered tuples and filtered through shipped support tables.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .type_composer import Named, TypeExpr


class TableError(ValueError):
    """Raised for malformed support tables or candidate lists."""


@dataclass(frozen=True)
class SupportTable:
    function: str
    arity: int
    universe: tuple[str, ...]
    supported: frozenset[tuple[str, ...]]
    symmetric: bool = False


def load_support_table(source: str) -> SupportTable:
    doc = json.loads(source)
    unknown = set(doc) - {"function", "arity", "symmetric", "universe", "supported"}
    if unknown:
        raise TableError(f"unknown key(s) {sorted(unknown)} in support table")
    universe = tuple(doc["universe"])
    arity = int(doc["arity"])
    tuples = [tuple(entry) for entry in doc["supported"]]
    seen: set[tuple[str, ...]] = set()
    for entry in tuples:
        if len(entry) != arity:
            raise TableError(f"tuple {entry} does not match arity {arity}")
        for name in entry:
            if name not in universe:
                raise TableError(f"type {name!r} not in declared universe")
        if entry in seen:
            raise TableError(f"duplicate supported tuple {entry}")
        seen.add(entry)
    table = SupportTable(
        function=doc["function"],
        arity=arity,
        universe=universe,
        supported=frozenset(tuples),
        symmetric=bool(doc.get("symmetric", False)),
    )
    if table.symmetric and table.arity == 2:
        for a, b in table.supported:
            if (b, a) not in table.supported:
                raise TableError(f"symmetric table misses mirror of ({a}, {b})")
    return table


@dataclass(frozen=True)
class Registration:
    function: str
    arg_types: tuple[TypeExpr, ...]
    return_type: TypeExpr
    wrapper: str = "plain"  # plain | variant-result | list-input | list-output | apply-iterator-output


def expand_pairs(candidates: list[str]) -> list[tuple[str, str]]:
    """All n² ordered pairs in head-major recursion order.

    For each head: pairs with every later element in both orders, then the
    tail's pairs, then the head's self-pair.  A single candidate yields just
    its self-pair.
    """
    if len(candidates) != len(set(candidates)):
        raise TableError("duplicate candidate name")
    if not candidates:
        raise TableError("empty candidate list")

    def rec(items: list[str]) -> list[tuple[str, str]]:
        head = items[0]
        if len(items) == 1:
            return [(head, head)]
        out: list[tuple[str, str]] = []
        for other in items[1:]:
            out.append((head, other))
            out.append((other, head))
        out.extend(rec(items[1:]))
        out.append((head, head))
        return out

    return rec(list(candidates))


_RETURNS = {"do_intersect": (Named("bool"), "plain")}
_DEFAULT_RETURN = (Named("object"), "variant-result")


def filter_supported(pairs: list[tuple[str, str]], table: SupportTable) -> list[Registration]:
    """Keep the pairs declared supported, preserving expansion order."""
    if table.arity != 2:
        raise TableError(f"table {table.function!r} has arity {table.arity}, expected 2")
    returns, wrapper = _RETURNS.get(table.function, _DEFAULT_RETURN)
    out = []
    for a, b in pairs:
        if a not in table.universe or b not in table.universe:
            raise TableError(f"pair ({a}, {b}) outside table universe")
        if (a, b) in table.supported:
            out.append(Registration(
                function=table.function,
                arg_types=(Named(a), Named(b)),
                return_type=returns,
                wrapper=wrapper,
            ))
    return out


# ---------------------------------------------------------------------------
# Minkowski sums


@dataclass(frozen=True)
class Strategy:
    name: str
    applicable_to_holes: bool


@dataclass(frozen=True)
class StrategyCatalog:
    polygon_types: tuple[str, ...]
    strategies: tuple[Strategy, ...]

    def applicable(self, strategy: Strategy, polygon: str) -> bool:
        # every strategy handles simple polygons; holes need explicit support
        return polygon == self.polygon_types[0] or strategy.applicable_to_holes


def load_strategy_catalog(source: str) -> StrategyCatalog:
    doc = json.loads(source)
    unknown = set(doc) - {"polygon_types", "strategies"}
    if unknown:
        raise TableError(f"unknown key(s) {sorted(unknown)} in strategy catalog")
    catalog = StrategyCatalog(
        polygon_types=tuple(doc["polygon_types"]),
        strategies=tuple(
            Strategy(s["name"], bool(s["applicable_to_holes"])) for s in doc["strategies"]
        ),
    )
    if len(catalog.polygon_types) > 1 and not any(
        s.applicable_to_holes for s in catalog.strategies
    ):
        raise TableError("no strategy is applicable to polygons with holes")
    return catalog


@dataclass
class MinkowskiEnumeration:
    reduced_convolution: list[Registration] = field(default_factory=list)
    single_strategy: list[Registration] = field(default_factory=list)
    dual_strategy: list[Registration] = field(default_factory=list)

    @property
    def convex_decomposition_total(self) -> int:
        # the with-traits mirror doubles both strategy families
        return 2 * (len(self.single_strategy) + len(self.dual_strategy))

    def all_registrations(self) -> list[Registration]:
        mirrored = [
            Registration(r.function, r.arg_types + (Named("Traits"),), r.return_type, r.wrapper)
            for r in self.single_strategy + self.dual_strategy
        ]
        return (
            self.reduced_convolution
            + self.single_strategy
            + self.dual_strategy
            + mirrored
        )


def enumerate_minkowski(catalog: StrategyCatalog) -> MinkowskiEnumeration:
    out = MinkowskiEnumeration()
    polys = catalog.polygon_types

    def reg(*args: str) -> Registration:
        return Registration(
            function="minkowski_sum_2",
            arg_types=tuple(Named(a) for a in args),
            return_type=Named("Polygon_with_holes_2"),
        )

    for p in polys:
        for q in polys:
            out.reduced_convolution.append(reg(p, q))
    for p in polys:
        for q in polys:
            out.reduced_convolution.append(reg(p, q, "Traits"))

    for s in catalog.strategies:
        for p in polys:
            for q in polys:
                if catalog.applicable(s, p) and catalog.applicable(s, q):
                    out.single_strategy.append(reg(p, q, s.name))

    for s1 in catalog.strategies:
        for s2 in catalog.strategies:
            for p in polys:
                for q in polys:
                    if catalog.applicable(s1, p) and catalog.applicable(s2, q):
                        out.dual_strategy.append(reg(p, q, s1.name, s2.name))

    return out


# ---------------------------------------------------------------------------
# Overlay traits handlers


@dataclass(frozen=True)
class HandlerDescriptor:
    name: str
    red_cell: str
    blue_cell: str
    out_cell: str


# The ten overlap cases, in catalog order: which red/blue cells induce which
# output cell.
_CASES = (
    ("v", "v", "v"),
    ("v", "e", "v"),
    ("e", "v", "v"),
    ("v", "f", "v"),
    ("f", "v", "v"),
    ("e", "e", "v"),
    ("e", "e", "e"),
    ("e", "f", "e"),
    ("f", "e", "e"),
    ("f", "f", "f"),
)


def overlay_handlers() -> list[HandlerDescriptor]:
    return [
        HandlerDescriptor(name=f"set_{r}{b}_{o}", red_cell=r, blue_cell=b, out_cell=o)
        for r, b, o in _CASES
    ]


@dataclass(frozen=True)
class ActiveHandler:
    descriptor: HandlerDescriptor
    # input positions whose cell type is unextended; they contribute a
    # none-value placeholder argument instead of a payload
    none_inputs: tuple[str, ...]


_CELL_FLAG = {"v": "vertex", "e": "halfedge", "f": "face"}


def active_overlay_handlers(ext: dict[str, bool]) -> list[ActiveHandler]:
    """Handlers whose output cell is extended; others stay idle no-ops."""
    out = []
    for h in overlay_handlers():
        if not ext.get(_CELL_FLAG[h.out_cell], False):
            continue
        none_inputs = tuple(
            pos for pos, cell in (("red", h.red_cell), ("blue", h.blue_cell))
            if not ext.get(_CELL_FLAG[cell], False)
        )
        out.append(ActiveHandler(descriptor=h, none_inputs=none_inputs))
    return out

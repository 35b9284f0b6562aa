"""Concept refinement graphs, models, and merged interfaces.

A concept names a set of requirements on a type (nested types, functors,
member functions).  Concepts refine each other, forming a DAG.  A model is a
concrete type declared to satisfy one or more concepts, possibly augmenting
the required nested types with extra members.
"""

from __future__ import annotations

import heapq
import json
from dataclasses import dataclass, field

REQUIREMENT_KINDS = frozenset(
    {"nested-type", "functor", "member-function", "factory-method", "free-function"}
)


class GraphError(ValueError):
    """Raised for schema violations and unresolved references in graph data."""


@dataclass(frozen=True)
class Signature:
    """A callable signature; params are either ``Type`` or ``name: Type``."""

    params: tuple[str, ...]
    returns: str

    def param_types(self) -> tuple[str, ...]:
        return tuple(p.split(": ", 1)[1] if ": " in p else p for p in self.params)

    def render(self, name: str) -> str:
        return f"{name}({', '.join(self.params)}) -> {self.returns}"


@dataclass(frozen=True)
class Requirement:
    kind: str
    name: str
    overloads: tuple[Signature, ...] = ()
    constructors: tuple[Signature, ...] = ()
    nested: tuple[Requirement, ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in REQUIREMENT_KINDS:
            raise GraphError(f"unknown requirement kind {self.kind!r} for {self.name!r}")
        if self.kind == "functor" and not self.overloads:
            raise GraphError(f"functor requirement {self.name!r} needs at least one overload")


@dataclass(frozen=True)
class Concept:
    name: str
    refines: tuple[str, ...] = ()
    requirements: tuple[Requirement, ...] = ()


@dataclass(frozen=True)
class Model:
    name: str
    models: tuple[str, ...] = ()
    # nested-type name -> extra requirements (members and/or extra constructors)
    augmentations: dict[str, tuple[Requirement, ...]] = field(default_factory=dict)
    extra_members: tuple[Requirement, ...] = ()

    def __hash__(self) -> int:  # augmentations dict is never mutated after load
        return hash(self.name)


@dataclass(frozen=True)
class ConceptGraph:
    concepts: dict[str, Concept]
    models: dict[str, Model]


# ---------------------------------------------------------------------------
# Loading

_SIG_KEYS = {"params", "returns"}
_REQ_KEYS = {"kind", "name", "overloads", "constructors", "nested"}
_CONCEPT_KEYS = {"name", "refines", "requirements"}
_MODEL_KEYS = {"name", "models", "augmentations", "extra_members"}


def _check_keys(obj: dict, allowed: set[str], what: str) -> None:
    unknown = set(obj) - allowed
    if unknown:
        raise GraphError(f"unknown key(s) {sorted(unknown)} in {what}")


def _load_signature(obj: dict, what: str) -> Signature:
    _check_keys(obj, _SIG_KEYS, what)
    return Signature(tuple(obj.get("params", [])), obj.get("returns", "None"))


def _load_requirement(obj: dict, what: str) -> Requirement:
    _check_keys(obj, _REQ_KEYS, what)
    name = obj.get("name")
    if not name:
        raise GraphError(f"requirement in {what} is missing a name")
    return Requirement(
        kind=obj.get("kind", ""),
        name=name,
        overloads=tuple(_load_signature(s, f"{what}.{name}") for s in obj.get("overloads", [])),
        constructors=tuple(
            _load_signature(s, f"{what}.{name}") for s in obj.get("constructors", [])
        ),
        nested=tuple(_load_requirement(r, f"{what}.{name}") for r in obj.get("nested", [])),
    )


def load_concept_graph(source: str) -> ConceptGraph:
    """Parse and fully resolve a JSON concept/model document."""
    try:
        doc = json.loads(source)
    except json.JSONDecodeError as exc:
        raise GraphError(f"parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}")
    if not isinstance(doc, dict):
        raise GraphError("document root must be an object")
    _check_keys(doc, {"concepts", "models"}, "document root")

    concepts: dict[str, Concept] = {}
    for entry in doc.get("concepts", []):
        _check_keys(entry, _CONCEPT_KEYS, "concept entry")
        name = entry.get("name")
        if not name:
            raise GraphError("concept entry is missing a name")
        if name in concepts:
            raise GraphError(f"duplicate concept name {name!r}")
        concepts[name] = Concept(
            name=name,
            refines=tuple(entry.get("refines", [])),
            requirements=tuple(
                _load_requirement(r, f"concept {name}") for r in entry.get("requirements", [])
            ),
        )

    models: dict[str, Model] = {}
    for entry in doc.get("models", []):
        _check_keys(entry, _MODEL_KEYS, "model entry")
        name = entry.get("name")
        if not name:
            raise GraphError("model entry is missing a name")
        if name in models:
            raise GraphError(f"duplicate model name {name!r}")
        augmentations = {
            target: tuple(_load_requirement(r, f"model {name} augmentation {target}") for r in reqs)
            for target, reqs in entry.get("augmentations", {}).items()
        }
        models[name] = Model(
            name=name,
            models=tuple(entry.get("models", [])),
            augmentations=augmentations,
            extra_members=tuple(
                _load_requirement(r, f"model {name}") for r in entry.get("extra_members", [])
            ),
        )

    graph = ConceptGraph(concepts=concepts, models=models)
    _resolve(graph)
    return graph


def _resolve(g: ConceptGraph) -> None:
    for concept in g.concepts.values():
        for ref in concept.refines:
            if ref not in g.concepts:
                raise GraphError(f"concept {concept.name!r} refines unresolved {ref!r}")
    diag = validate_acyclic(g)
    if diag is not None:
        raise GraphError(f"refinement cycle: {' -> '.join(diag)}")
    for concept in g.concepts.values():
        functors = {
            r.name for c in _ancestry(g, concept.name) for r in g.concepts[c].requirements
            if r.kind == "functor"
        }
        for req in concept.requirements:
            if req.kind == "factory-method":
                returns = {sig.returns for sig in req.overloads} or set()
                for ret in returns:
                    if ret not in functors:
                        raise GraphError(
                            f"factory-method {req.name!r} of {concept.name!r} returns "
                            f"{ret!r}, which names no functor requirement in scope"
                        )
    for model in g.models.values():
        for ref in model.models:
            if ref not in g.concepts:
                raise GraphError(f"model {model.name!r} models unresolved {ref!r}")
        reachable = {
            r.name
            for c in _closure(g, model.models)
            for r in g.concepts[c].requirements
            if r.kind in ("nested-type", "functor")
        }
        for target in model.augmentations:
            if target not in reachable:
                raise GraphError(
                    f"model {model.name!r} augments unknown nested type {target!r}"
                )


def _ancestry(g: ConceptGraph, name: str) -> set[str]:
    """The concept plus everything it transitively refines."""
    return _closure(g, (name,))


def _closure(g: ConceptGraph, roots) -> set[str]:
    seen: set[str] = set()
    stack = list(roots)
    while stack:
        cur = stack.pop()
        if cur in seen:
            continue
        seen.add(cur)
        stack.extend(g.concepts[cur].refines)
    return seen


# ---------------------------------------------------------------------------
# Queries


def validate_acyclic(g: ConceptGraph) -> list[str] | None:
    """Return None when the refinement relation is a DAG, else one cycle."""
    WHITE, GRAY, BLACK = 0, 1, 2
    color = {name: WHITE for name in g.concepts}
    path: list[str] = []

    def visit(name: str) -> list[str] | None:
        color[name] = GRAY
        path.append(name)
        for ref in g.concepts[name].refines:
            if color[ref] == GRAY:
                return path[path.index(ref):] + [ref]
            if color[ref] == WHITE:
                cycle = visit(ref)
                if cycle is not None:
                    return cycle
        path.pop()
        color[name] = BLACK
        return None

    for name in sorted(g.concepts):
        if color[name] == WHITE:
            cycle = visit(name)
            if cycle is not None:
                return cycle
    return None


def export_order(g: ConceptGraph, model: Model | str) -> list[str]:
    """Concepts the model transitively models, refined-before-refining.

    Ties between simultaneously-ready concepts break lexicographically so the
    order is deterministic; each concept appears exactly once no matter how
    many refinement paths reach it.
    """
    if isinstance(model, str):
        try:
            model = g.models[model]
        except KeyError:
            raise GraphError(f"unknown model {model!r}")
    relevant = _closure(g, model.models)
    pending = {name: sum(1 for r in g.concepts[name].refines) for name in relevant}
    ready = [name for name, deg in pending.items() if deg == 0]
    heapq.heapify(ready)
    dependents: dict[str, list[str]] = {name: [] for name in relevant}
    for name in relevant:
        for ref in g.concepts[name].refines:
            dependents[ref].append(name)

    order: list[str] = []
    while ready:
        cur = heapq.heappop(ready)
        order.append(cur)
        for dep in dependents[cur]:
            pending[dep] -= 1
            if pending[dep] == 0:
                heapq.heappush(ready, dep)
    return order


@dataclass
class MemberEntry:
    """One named member with its (deduplicated) overload set."""

    kind: str
    name: str
    overloads: list[Signature] = field(default_factory=list)

    def add(self, sig: Signature) -> None:
        if sig.param_types() not in {s.param_types() for s in self.overloads}:
            self.overloads.append(sig)


@dataclass
class NestedInterface:
    """Merged view of one nested type (or functor) of a model."""

    name: str
    kind: str  # nested-type | functor
    constructors: list[Signature] = field(default_factory=list)
    members: list[MemberEntry] = field(default_factory=list)

    def add_constructor(self, sig: Signature) -> None:
        if sig.param_types() not in {s.param_types() for s in self.constructors}:
            self.constructors.append(sig)

    def member(self, kind: str, name: str) -> MemberEntry:
        for entry in self.members:
            if entry.name == name:
                return entry
        entry = MemberEntry(kind, name)
        self.members.append(entry)
        return entry


@dataclass
class MergedInterface:
    """Flattened member sets for a model: nested types plus model-level members."""

    model: str
    nested: dict[str, NestedInterface] = field(default_factory=dict)
    members: list[MemberEntry] = field(default_factory=list)
    free_functions: list[MemberEntry] = field(default_factory=list)

    def nested_entry(self, kind: str, name: str) -> NestedInterface:
        entry = self.nested.get(name)
        if entry is None:
            entry = NestedInterface(name=name, kind=kind)
            self.nested[name] = entry
        return entry

    def member(self, kind: str, name: str, bucket: list[MemberEntry] | None = None) -> MemberEntry:
        bucket = self.members if bucket is None else bucket
        for entry in bucket:
            if entry.name == name:
                return entry
        entry = MemberEntry(kind, name)
        bucket.append(entry)
        return entry


def _apply_requirement(iface: MergedInterface, req: Requirement) -> None:
    if req.kind == "nested-type":
        entry = iface.nested_entry("nested-type", req.name)
        for sig in req.constructors:
            entry.add_constructor(sig)
        for sub in req.nested:
            member = entry.member(sub.kind, sub.name)
            for sig in sub.overloads:
                member.add(sig)
    elif req.kind == "functor":
        entry = iface.nested_entry("functor", req.name)
        member = entry.member("member-function", "__call__")
        for sig in req.overloads:
            member.add(sig)
    elif req.kind == "free-function":
        member = iface.member(req.kind, req.name, iface.free_functions)
        for sig in req.overloads:
            member.add(sig)
    else:  # member-function, factory-method
        member = iface.member(req.kind, req.name)
        for sig in req.overloads:
            member.add(sig)


def merged_interface(g: ConceptGraph, model: Model | str) -> MergedInterface:
    """Union of concept requirements (export order) plus model augmentations."""
    if isinstance(model, str):
        try:
            model = g.models[model]
        except KeyError:
            raise GraphError(f"unknown model {model!r}")
    iface = MergedInterface(model=model.name)
    for concept_name in export_order(g, model):
        for req in g.concepts[concept_name].requirements:
            _apply_requirement(iface, req)
    for target, reqs in model.augmentations.items():
        if target not in iface.nested:
            raise GraphError(
                f"model {model.name!r} augments unknown nested type {target!r}"
            )
        entry = iface.nested[target]
        for req in reqs:
            if req.kind == "nested-type":
                # extra constructors for an already-required nested type
                for sig in req.constructors:
                    entry.add_constructor(sig)
            else:
                member = entry.member(req.kind, req.name)
                for sig in req.overloads:
                    member.add(sig)
    for req in model.extra_members:
        _apply_requirement(iface, req)
    return iface


# ---------------------------------------------------------------------------
# Serialization (round-trip support)


def _dump_signature(sig: Signature) -> dict:
    return {"params": list(sig.params), "returns": sig.returns}


def _dump_requirement(req: Requirement) -> dict:
    out: dict = {"kind": req.kind, "name": req.name}
    if req.overloads:
        out["overloads"] = [_dump_signature(s) for s in req.overloads]
    if req.constructors:
        out["constructors"] = [_dump_signature(s) for s in req.constructors]
    if req.nested:
        out["nested"] = [_dump_requirement(r) for r in req.nested]
    return out


def serialize_graph(g: ConceptGraph) -> str:
    doc = {
        "concepts": [
            {
                "name": c.name,
                "refines": list(c.refines),
                "requirements": [_dump_requirement(r) for r in c.requirements],
            }
            for c in g.concepts.values()
        ],
        "models": [
            {
                "name": m.name,
                "models": list(m.models),
                "augmentations": {
                    target: [_dump_requirement(r) for r in reqs]
                    for target, reqs in m.augmentations.items()
                },
                "extra_members": [_dump_requirement(r) for r in m.extra_members],
            }
            for m in g.models.values()
        ],
    }
    return json.dumps(doc, indent=2) + "\n"

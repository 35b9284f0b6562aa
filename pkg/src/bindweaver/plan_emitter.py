"""Registration-plan assembly and canonical rendering.

The plan is the product: an ordered, scoped list of binding directives
(classes, members, functions, wrappers, policies) rendered to a line-oriented
file that is byte-identical across runs.  The same structured entries feed the
stub generator, so plan and stubs expose identical name sets by construction.
"""

from __future__ import annotations

import importlib.resources
import json
from dataclasses import dataclass, field

from . import concept_graph as cg
from . import overload_enumerator as oe
from . import type_composer as tc
from .config import EPIC_FAMILY, BuildConfig, ModuleDescriptor, enabled_modules

# Members whose native return type is a const reference into kernel storage;
# the return-value policy for these depends on the configured kernel.
KERNEL_DEPENDENT_MEMBERS = frozenset({"x", "y", "z", "squared_radius", "coefficient"})


def resolve_kernel_policy(c: BuildConfig) -> str:
    name = c.selection("KER", "kernel_name")
    return "reference-to-existing" if name in EPIC_FAMILY else "copy-value"


# ---------------------------------------------------------------------------
# Structured module entries


@dataclass
class MethodEntry:
    name: str
    overloads: list[tuple[cg.Signature, str]] = field(default_factory=list)
    policy: str | None = None
    wrapper: str | None = None
    note: str | None = None

    def add(self, sig: cg.Signature, provenance: str) -> None:
        if sig.param_types() not in {s.param_types() for s, _ in self.overloads}:
            self.overloads.append((sig, provenance))


@dataclass
class ClassEntry:
    name: str
    parent: str | None = None
    bases: str | None = None
    provenance: str = ""
    note: str | None = None
    constructors: list[tuple[cg.Signature, str]] = field(default_factory=list)
    children: list["ClassEntry | MethodEntry"] = field(default_factory=list)

    def add_constructor(self, sig: cg.Signature, provenance: str) -> None:
        if sig.param_types() not in {s.param_types() for s, _ in self.constructors}:
            self.constructors.append((sig, provenance))

    def child_class(self, name: str, provenance: str) -> "ClassEntry":
        for child in self.children:
            if isinstance(child, ClassEntry) and child.name == name:
                return child
        child = ClassEntry(name=name, parent=self.name, provenance=provenance)
        self.children.append(child)
        return child

    def method(self, name: str) -> MethodEntry:
        for child in self.children:
            if isinstance(child, MethodEntry) and child.name == name:
                return child
        child = MethodEntry(name=name)
        self.children.append(child)
        return child


@dataclass
class FunctionEntry:
    name: str
    overloads: list[tuple[cg.Signature, str]] = field(default_factory=list)
    wrapper: str | None = None
    note: str | None = None
    value: str | None = None  # constant-returning functions


@dataclass
class ConstantEntry:
    name: str
    value: str
    provenance: str


@dataclass
class ModuleEntries:
    module: ModuleDescriptor
    items: list[ClassEntry | FunctionEntry | ConstantEntry] = field(default_factory=list)


# ---------------------------------------------------------------------------
# Default data


def load_default_tables() -> dict[str, oe.SupportTable]:
    tables = {}
    root = importlib.resources.files("bindweaver.data")
    for fname in ("do_intersect_2.json", "intersection_2.json"):
        table = oe.load_support_table((root / fname).read_text())
        tables[table.function] = table
    return tables


def load_default_catalog() -> oe.StrategyCatalog:
    root = importlib.resources.files("bindweaver.data")
    return oe.load_strategy_catalog((root / "minkowski_catalog.json").read_text())


def load_default_graph() -> cg.ConceptGraph:
    root = importlib.resources.files("bindweaver.data")
    return cg.load_concept_graph((root / "concepts.json").read_text())


# Concept-name prefixes assigning models to modules; first match wins, and a
# model follows its first modeled concept.  Unmatched models land in KER.
_OWNERSHIP_PREFIXES = (
    ("Aos", "AOS2"),
    ("GeneralPolygonSet", "BSO2"),
    ("Kernel", "KER"),
    ("Tri2", "TRI2"),
    ("Tri3", "TRI3"),
    ("Polygon", "POL2"),
)


def module_of_model(g: cg.ConceptGraph, model: cg.Model) -> str:
    if model.models:
        first = model.models[0]
        for prefix, short in _OWNERSHIP_PREFIXES:
            if first.startswith(prefix):
                return short
    return "KER"


# ---------------------------------------------------------------------------
# Concept-driven class entries


def _signature_of(req_sig: cg.Signature) -> cg.Signature:
    return req_sig


def build_model_entry(
    g: cg.ConceptGraph,
    model: cg.Model,
    seen_concepts: set[str],
    provenance_log: list[str] | None = None,
    bases: str | None = None,
    policy_for: "callable | None" = None,
) -> ClassEntry:
    """One class entry per model; concepts already seen in this module scope
    contribute nothing again (sentinel semantics)."""
    entry = ClassEntry(name=model.name, bases=bases, provenance=f"model:{model.name}")

    def method_policy(name: str) -> str | None:
        return policy_for(name) if policy_for else None

    for concept_name in cg.export_order(g, model):
        if concept_name in seen_concepts:
            continue
        seen_concepts.add(concept_name)
        prov = f"concept:{concept_name}"
        if provenance_log is not None:
            provenance_log.append(concept_name)
        for req in g.concepts[concept_name].requirements:
            if req.kind == "nested-type":
                sub = entry.child_class(req.name, prov)
                for sig in req.constructors:
                    sub.add_constructor(sig, prov)
                for inner in req.nested:
                    method = sub.method(inner.name)
                    method.policy = method_policy(inner.name)
                    for sig in inner.overloads:
                        method.add(sig, prov)
            elif req.kind == "functor":
                sub = entry.child_class(req.name, prov)
                method = sub.method("__call__")
                for sig in req.overloads:
                    method.add(sig, prov)
            elif req.kind in ("member-function", "factory-method"):
                method = entry.method(req.name)
                for sig in req.overloads:
                    method.add(sig, prov)

    prov = f"model:{model.name}"
    for target, reqs in model.augmentations.items():
        sub = entry.child_class(target, prov)
        for req in reqs:
            if req.kind == "nested-type":
                for sig in req.constructors:
                    sub.add_constructor(sig, prov)
            else:
                method = sub.method(req.name)
                if method.policy is None:
                    method.policy = method_policy(req.name)
                for sig in req.overloads:
                    method.add(sig, prov)
    for req in model.extra_members:
        if req.kind in ("member-function", "factory-method"):
            method = entry.method(req.name)
            for sig in req.overloads:
                method.add(sig, prov)
    return entry


# ---------------------------------------------------------------------------
# Per-module synthesis


def _sig(params: list[str], returns: str) -> cg.Signature:
    return cg.Signature(tuple(params), returns)


def _registration_signature(reg: oe.Registration, param_names: str = "ab") -> cg.Signature:
    params = []
    for i, t in enumerate(reg.arg_types):
        rendered = tc.render(t)
        if rendered == "Traits":  # symbolic in the enumeration; opaque in signatures
            rendered = "object"
        name = param_names[i] if i < len(param_names) else f"arg{i}"
        params.append(f"{name}: {rendered}")
    return _sig(params, tc.render(reg.return_type))


def _ker_entries(
    c: BuildConfig, g: cg.ConceptGraph, tables: dict[str, oe.SupportTable],
    models: list[cg.Model], seen: set[str],
) -> list:
    items: list = []
    policy = resolve_kernel_policy(c)
    if c.selection("KER", "kernel_name") in EPIC_FAMILY:
        items.append(ConstantEntry("FT", "float", "kernel"))
    else:
        ft = ClassEntry(name="FT", provenance="kernel")
        ft.add_constructor(_sig(["v: float"], "None"), "kernel")
        method = ft.method("to_double")
        method.add(_sig([], "float"), "kernel")
        items.append(ft)

    def policy_for(name: str) -> str | None:
        return policy if name in KERNEL_DEPENDENT_MEMBERS else None

    kernel_bases = tc.render(tc.kernel_type(c))
    for model in models:
        bases = kernel_bases if model.name == "Kernel" else None
        items.append(build_model_entry(g, model, seen, bases=bases, policy_for=policy_for))

    if c.selection("KER", "intersection_bindings"):
        pairs = oe.expand_pairs(list(tables["do_intersect"].universe))
        for table_name in ("do_intersect", "intersection"):
            table = tables[table_name]
            regs = oe.filter_supported(pairs, table)
            fn = FunctionEntry(name=table.function, wrapper=regs[0].wrapper if regs else None)
            for reg in regs:
                fn.overloads.append(
                    (_registration_signature(reg), f"registration:{table.function}")
                )
            items.append(fn)
    return items


def _aos2_entries(
    c: BuildConfig, g: cg.ConceptGraph, models: list[cg.Model], seen: set[str]
) -> list:
    items: list = []
    for model in models:
        items.append(build_model_entry(g, model, seen))

    composed = tc.compose_dcel(c)
    ext = {
        "vertex": bool(c.selection("AOS2", "extend_vertex")),
        "halfedge": bool(c.selection("AOS2", "extend_halfedge")),
        "face": bool(c.selection("AOS2", "extend_face")),
    }

    def cell_class(name: str, base: tc.TypeExpr, flag: str) -> ClassEntry:
        entry = ClassEntry(
            name=name, bases=tc.render(base), provenance="composition",
            note="handles and iterators collapse onto this class",
        )
        if ext[flag]:
            data = entry.method("data")
            data.add(_sig([], "object"), f"extension:{flag}")
            setter = entry.method("set_data")
            setter.add(_sig(["obj: object"], "None"), f"extension:{flag}")
        return entry

    vertex = cell_class("Vertex", composed.vertex, "vertex")
    degree = vertex.method("degree")
    degree.add(_sig([], "int"), "composition")
    circ = vertex.method("incident_halfedges")
    circ.add(_sig([], "Iterator[Halfedge]"), "composition")
    circ.wrapper = "circulator"
    circ.note = "stop-iteration on wraparound"
    items.append(vertex)

    halfedge = cell_class("Halfedge", composed.halfedge, "halfedge")
    for name, ret in (("source", "Vertex"), ("target", "Vertex"), ("next", "Halfedge")):
        halfedge.method(name).add(_sig([], ret), "composition")
    items.append(halfedge)

    face = cell_class("Face", composed.face, "face")
    ccb = face.method("outer_ccb")
    ccb.add(_sig([], "Iterator[Halfedge]"), "composition")
    ccb.wrapper = "circulator"
    ccb.note = "stop-iteration on wraparound"
    items.append(face)

    arrangement = ClassEntry(
        name="Arrangement_2", bases=tc.render(composed.arrangement), provenance="composition"
    )
    arrangement.add_constructor(_sig([], "None"), "composition")
    for name, elem in (("vertices", "Vertex"), ("halfedges", "Halfedge"), ("faces", "Face")):
        method = arrangement.method(name)
        method.add(_sig([], f"Iterator[{elem}]"), "composition")
        method.wrapper = "iterator"
    items.append(arrangement)

    for traits_name in ("Arr_overlay_traits", "Arr_overlay_function_traits"):
        entry = ClassEntry(name=traits_name, provenance="overlay")
        handler_params = [f"{h.name[4:]}: object" for h in oe.overlay_handlers()]
        entry.add_constructor(_sig(handler_params, "None"), "overlay")
        entry.add_constructor(_sig(["f: object"], "None"), "overlay")
        active = {a.descriptor.name: a for a in oe.active_overlay_handlers(ext)}
        for handler in oe.overlay_handlers():
            method = entry.method(handler.name)
            method.add(_sig(["f: object"], "None"), f"overlay:{handler.name}")
            act = active.get(handler.name)
            if act is None:
                method.note = "idle: output cell not extended"
            elif act.none_inputs:
                method.note = "none-input: " + ",".join(act.none_inputs)
        items.append(entry)

    overlay = FunctionEntry(name="overlay")
    base = ["r: Arrangement_2", "b: Arrangement_2", "o: Arrangement_2"]
    overlay.overloads.append((_sig(base, "None"), "registration:overlay"))
    overlay.overloads.append((_sig(base + ["t: Arr_overlay_traits"], "None"), "registration:overlay"))
    overlay.overloads.append(
        (_sig(base + ["t: Arr_overlay_function_traits"], "None"), "registration:overlay")
    )
    items.append(overlay)

    insert = FunctionEntry(name="insert", wrapper="list-input")
    insert.overloads.append((_sig(["arr: Arrangement_2", "curves: list"], "None"), "wrapper:insert"))
    insert.note = "dispatch: X_monotone_curve_2, Curve_2"
    items.append(insert)

    decompose = FunctionEntry(name="decompose", wrapper="list-output")
    decompose.overloads.append((_sig(["arr: Arrangement_2"], "list"), "wrapper:decompose"))
    decompose.note = "element: (vertex, (feature-above-or-none, feature-below-or-none))"
    items.append(decompose)

    if c.selection("AOS2", "point_location_bindings"):
        for name in ("locate", "ray_shoot_up", "ray_shoot_down"):
            fn = FunctionEntry(name=name)
            fn.overloads.append(
                (_sig(["arr: Arrangement_2", "x: float", "y: float"], "object"), "point-location")
            )
            items.append(fn)
    return items


def _ms2_entries(catalog: oe.StrategyCatalog) -> list:
    items: list = []
    for strategy in catalog.strategies:
        entry = ClassEntry(name=strategy.name, provenance="table:minkowski")
        entry.add_constructor(_sig([], "None"), "table:minkowski")
        items.append(entry)
    enum = oe.enumerate_minkowski(catalog)
    fn = FunctionEntry(name="minkowski_sum_2")
    for reg in enum.all_registrations():
        fn.overloads.append(
            (_registration_signature(reg, "pq"), "table:minkowski")
        )
    items.append(fn)
    inset = FunctionEntry(name="approximated_inset_2", wrapper="apply-iterator-output")
    inset.overloads.append(
        (_sig(["p: Polygon_2", "r: float", "eps: float"], "list"), "wrapper:approximated_inset_2")
    )
    items.append(inset)
    return items


def _pol2_entries(g: cg.ConceptGraph, models: list[cg.Model], seen: set[str]) -> list:
    items: list = []
    for model in models:
        items.append(build_model_entry(g, model, seen))
    polygon = ClassEntry(name="Polygon_2", provenance="module:pol2")
    polygon.add_constructor(_sig([], "None"), "module:pol2")
    polygon.add_constructor(_sig(["points: list"], "None"), "module:pol2")
    polygon.method("size").add(_sig([], "int"), "module:pol2")
    items.append(polygon)
    pwh = ClassEntry(name="Polygon_with_holes_2", provenance="module:pol2")
    pwh.add_constructor(_sig([], "None"), "module:pol2")
    pwh.add_constructor(_sig(["outer: Polygon_2"], "None"), "module:pol2")
    pwh.method("outer_boundary").add(_sig([], "Polygon_2"), "module:pol2")
    pwh.method("holes").add(_sig([], "list"), "module:pol2")
    items.append(pwh)
    return items


def _triangulation_entry(composed: tc.ComposedTriangulation, provenance: str) -> ClassEntry:
    assert isinstance(composed.triangulation, tc.Apply)
    entry = ClassEntry(
        name=composed.triangulation.template,
        bases=tc.render(composed.triangulation),
        provenance=provenance,
    )
    entry.add_constructor(_sig([], "None"), provenance)
    insert = entry.method("insert")
    insert.add(_sig(["points: list"], "int"), provenance)
    insert.wrapper = "list-input"
    return entry


def collect_module_entries(
    c: BuildConfig,
    g: cg.ConceptGraph | None = None,
    tables: dict[str, oe.SupportTable] | None = None,
    catalog: oe.StrategyCatalog | None = None,
) -> list[ModuleEntries]:
    g = g if g is not None else load_default_graph()
    tables = tables if tables is not None else load_default_tables()
    catalog = catalog if catalog is not None else load_default_catalog()

    by_module: dict[str, list[cg.Model]] = {}
    for model in g.models.values():
        by_module.setdefault(module_of_model(g, model), []).append(model)

    out: list[ModuleEntries] = []
    for mod in enabled_modules(c):
        short = mod.short_name
        entries = ModuleEntries(module=mod)
        models = by_module.get(short, [])
        seen: set[str] = set()
        if short == "KER":
            entries.items = _ker_entries(c, g, tables, models, seen)
        elif short == "KERD":
            kd = ClassEntry(
                name="Kernel_d", bases=tc.render(tc.kernel_d_type(c)), provenance="kernel-d"
            )
            kd.add_constructor(_sig([], "None"), "kernel-d")
            entries.items = [kd]
        elif short == "AOS2":
            entries.items = _aos2_entries(c, g, models, seen)
        elif short == "AS2":
            alpha = ClassEntry(
                name="Alpha_shape_2",
                bases=tc.render(tc.app("Alpha_shape_2", "Triangulation")),
                provenance="module:as2",
            )
            alpha.add_constructor(_sig([], "None"), "module:as2")
            entries.items = [alpha]
        elif short == "AS3":
            template = (
                "Fixed_alpha_shape_3" if c.selection("AS3", "name") == "fixed" else "Alpha_shape_3"
            )
            alpha = ClassEntry(
                name=template,
                bases=tc.render(tc.app(template, "Triangulation")),
                provenance="module:as3",
            )
            alpha.add_constructor(_sig([], "None"), "module:as3")
            entries.items = [alpha]
        elif short == "POL2":
            entries.items = _pol2_entries(g, models, seen)
        elif short == "MS2":
            entries.items = _ms2_entries(catalog)
        elif short == "CH2":
            fn = FunctionEntry(name="convex_hull_2", wrapper="list-input")
            fn.overloads.append((_sig(["points: list"], "list"), "module:ch2"))
            fn.note = "returns the hull vertices as a list"
            entries.items = [fn]
        elif short == "CH3":
            fn = FunctionEntry(name="convex_hull_3", wrapper="list-input")
            fn.overloads.append((_sig(["points: list"], "object"), "module:ch3"))
            entries.items = [fn]
        elif short == "SS":
            fn = FunctionEntry(name="get_spatial_searching_dimension")
            fn.overloads.append((_sig([], "int"), "config:ss"))
            fn.value = str(c.selection("SS", "dimension"))
            entries.items = [fn]
        elif short == "TRI2":
            entries.items = [_triangulation_entry(tc.compose_tri2(c), "module:tri2")]
        elif short == "TRI3":
            entries.items = [_triangulation_entry(tc.compose_tri3(c), "module:tri3")]
        else:  # BSO2, BV, PP: enable flag, dependencies, and naming only
            for model in models:
                entries.items.append(build_model_entry(g, model, seen))
        out.append(entries)
    return out


# ---------------------------------------------------------------------------
# Plan directives


@dataclass(frozen=True)
class PlanDirective:
    kind: str
    args: tuple[tuple[str, str], ...]


@dataclass
class RegistrationPlan:
    directives: list[PlanDirective] = field(default_factory=list)
    provenance: dict[int, str] = field(default_factory=dict)

    def emit(self, kind: str, provenance: str = "", **args: str) -> None:
        index = len(self.directives)
        self.directives.append(PlanDirective(kind, tuple(args.items())))
        if provenance:
            self.provenance[index] = provenance


def _scope_path(entry: ClassEntry) -> str:
    return f"{entry.parent}.{entry.name}" if entry.parent else entry.name


def _emit_class(plan: RegistrationPlan, entry: ClassEntry) -> None:
    args: dict[str, str] = {"name": entry.name}
    if entry.parent:
        args["scope"] = entry.parent
    if entry.bases:
        args["bases"] = entry.bases
    plan.emit("DEFINE_CLASS", provenance=entry.provenance, **args)
    if entry.note:
        plan.emit("NOTE", provenance=entry.provenance, text=entry.note)
    path = _scope_path(entry)
    for sig, prov in entry.constructors:
        plan.emit("AUGMENT_CLASS", provenance=prov, scope=path, member=sig.render("__init__"))
    for child in entry.children:
        if isinstance(child, ClassEntry):
            _emit_class(plan, child)
        else:
            _emit_method(plan, path, child)


def _emit_method(plan: RegistrationPlan, path: str, method: MethodEntry) -> None:
    for sig, prov in method.overloads:
        args: dict[str, str] = {"scope": path, "member": sig.render(method.name)}
        if method.policy:
            args["policy"] = method.policy
        if method.wrapper:
            args["wrapper"] = method.wrapper
        if method.note:
            args["note"] = method.note
        plan.emit("AUGMENT_CLASS", provenance=prov, **args)


def _emit_function(plan: RegistrationPlan, fn: FunctionEntry) -> None:
    for sig, prov in fn.overloads:
        args: dict[str, str] = {"name": fn.name, "signature": sig.render(fn.name)}
        if fn.wrapper:
            args["wrapper"] = fn.wrapper
        if fn.value is not None:
            args["value"] = fn.value
        if fn.note:
            args["note"] = fn.note
        plan.emit("DEFINE_FUNCTION", provenance=prov, **args)


def build_plan(
    c: BuildConfig,
    g: cg.ConceptGraph | None = None,
    tables: dict[str, oe.SupportTable] | None = None,
    catalog: oe.StrategyCatalog | None = None,
) -> RegistrationPlan:
    plan = RegistrationPlan()
    for entries in collect_module_entries(c, g, tables, catalog):
        plan.emit("OPEN_SCOPE", provenance=f"module:{entries.module.short_name}",
                  namespace=entries.module.namespace)
        for item in entries.items:
            if isinstance(item, ClassEntry):
                _emit_class(plan, item)
            elif isinstance(item, FunctionEntry):
                _emit_function(plan, item)
            else:
                plan.emit("DEFINE_CONSTANT", provenance=item.provenance,
                          name=item.name, value=item.value)
        plan.emit("CLOSE_SCOPE")
    return plan


_BARE = frozenset(
    "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_.:<>,[]()-"
)


def _quote(value: str) -> str:
    if value and all(ch in _BARE for ch in value):
        return value
    return json.dumps(value)


def render_plan(p: RegistrationPlan) -> str:
    lines = []
    depth = 0
    for directive in p.directives:
        if directive.kind == "CLOSE_SCOPE":
            depth -= 1
            if depth < 0:
                raise ValueError("unbalanced plan: CLOSE_SCOPE without OPEN_SCOPE")
        rendered = directive.kind
        for key, value in directive.args:
            rendered += f" {key}={_quote(value)}"
        lines.append("  " * depth + rendered)
        if directive.kind == "OPEN_SCOPE":
            depth += 1
    if depth != 0:
        raise ValueError("unbalanced plan: unclosed scope")
    return "\n".join(lines) + "\n" if lines else ""

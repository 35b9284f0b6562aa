"""Annotation-stub documents: one per enabled module namespace.

Stubs are flattened — nested required types carry their full merged member
set directly, with no inheritance from synthetic concept classes.  Overload
groups carry the overload decorator on every entry; every body is ``...``.
"""

from __future__ import annotations

import ast
import re
from dataclasses import dataclass, field

from . import concept_graph as cg
from . import overload_enumerator as oe
from . import plan_emitter as pe
from .config import BuildConfig

_HEADER_IMPORT = "from typing import Iterator, overload"

# Names that never need an import in a stub document.
_BUILTINS = frozenset(
    {"float", "int", "bool", "str", "list", "object", "None", "Iterator", "tuple"}
)


@dataclass
class StubFunction:
    name: str
    overloads: list[cg.Signature]

    @property
    def is_overload_group(self) -> bool:
        return len(self.overloads) > 1


@dataclass
class StubClass:
    name: str
    nested: list["StubClass"] = field(default_factory=list)
    methods: list[StubFunction] = field(default_factory=list)


@dataclass
class StubDocument:
    namespace: str
    imports: list[str] = field(default_factory=list)
    aliases: list[tuple[str, str]] = field(default_factory=list)
    classes: list[StubClass] = field(default_factory=list)
    functions: list[StubFunction] = field(default_factory=list)


# ---------------------------------------------------------------------------
# Generation from module entries


def _class_from_entry(entry: pe.ClassEntry) -> StubClass:
    sc = StubClass(name=entry.name)
    if entry.constructors:
        sc.methods.append(
            StubFunction("__init__", [sig for sig, _ in entry.constructors])
        )
    for child in entry.children:
        if isinstance(child, pe.ClassEntry):
            sc.nested.append(_class_from_entry(child))
        else:
            sc.methods.append(StubFunction(child.name, [sig for sig, _ in child.overloads]))
    return sc


def _defined_names(doc: StubDocument) -> set[str]:
    names = {name for name, _ in doc.aliases}
    names.update(fn.name for fn in doc.functions)

    def walk(sc: StubClass) -> None:
        names.add(sc.name)
        for sub in sc.nested:
            walk(sub)

    for sc in doc.classes:
        walk(sc)
    return names


_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


def _referenced_names(doc: StubDocument) -> set[str]:
    names: set[str] = set()

    def scan(fn: StubFunction) -> None:
        for sig in fn.overloads:
            for param in sig.params:
                annotation = param.split(": ", 1)[1] if ": " in param else param
                names.update(_IDENT.findall(annotation))
            names.update(_IDENT.findall(sig.returns))

    def walk(sc: StubClass) -> None:
        for method in sc.methods:
            scan(method)
        for sub in sc.nested:
            walk(sub)

    for sc in doc.classes:
        walk(sc)
    for fn in doc.functions:
        scan(fn)
    return names


def generate_stubs(
    c: BuildConfig,
    g: cg.ConceptGraph | None = None,
    tables: dict[str, oe.SupportTable] | None = None,
    catalog: oe.StrategyCatalog | None = None,
) -> list[StubDocument]:
    docs: list[StubDocument] = []
    for entries in pe.collect_module_entries(c, g, tables, catalog):
        doc = StubDocument(namespace=entries.module.namespace, imports=[_HEADER_IMPORT])
        for item in entries.items:
            if isinstance(item, pe.ClassEntry):
                doc.classes.append(_class_from_entry(item))
            elif isinstance(item, pe.FunctionEntry):
                doc.functions.append(
                    StubFunction(item.name, [sig for sig, _ in item.overloads])
                )
            else:
                doc.aliases.append((item.name, item.value))
        docs.append(doc)

    # cross-namespace references become imports from the defining document
    defined = {doc.namespace: _defined_names(doc) for doc in docs}
    for doc in docs:
        unresolved = _referenced_names(doc) - _defined_names(doc) - _BUILTINS
        wanted: dict[str, list[str]] = {}
        for name in sorted(unresolved):
            for other in docs:
                if other.namespace != doc.namespace and name in defined[other.namespace]:
                    wanted.setdefault(other.namespace, []).append(name)
                    break
        for namespace in sorted(wanted):
            doc.imports.append(f"from {namespace} import {', '.join(wanted[namespace])}")
    return docs


def model_stub_document(g: cg.ConceptGraph, model_name: str, namespace: str) -> StubDocument:
    """Stub document exposing a single model's flattened class."""
    entry = pe.build_model_entry(g, g.models[model_name], seen_concepts=set())
    return StubDocument(
        namespace=namespace,
        imports=[_HEADER_IMPORT],
        classes=[_class_from_entry(entry)],
    )


# ---------------------------------------------------------------------------
# Rendering


def _render_param(param: str, index: int) -> str:
    return param if ": " in param else f"arg{index}: {param}"


def _render_function(fn: StubFunction, indent: int, method: bool) -> list[str]:
    pad = "    " * indent
    lines = []
    for sig in fn.overloads:
        params = [_render_param(p, i) for i, p in enumerate(sig.params)]
        if method:
            params.insert(0, "self")
        if fn.is_overload_group:
            lines.append(f"{pad}@overload")
        lines.append(f"{pad}def {fn.name}({', '.join(params)}) -> {sig.returns}: ...")
    return lines


def _render_class(sc: StubClass, indent: int) -> list[str]:
    pad = "    " * indent
    lines = [f"{pad}class {sc.name}():"]
    init = [m for m in sc.methods if m.name == "__init__"]
    rest = [m for m in sc.methods if m.name != "__init__"]
    blocks: list[list[str]] = []
    for method in init:
        blocks.append(_render_function(method, indent + 1, method=True))
    for sub in sc.nested:
        blocks.append(_render_class(sub, indent + 1))
    for method in rest:
        blocks.append(_render_function(method, indent + 1, method=True))
    if not blocks:
        blocks.append([f"{pad}    ..."])
    # blank line after each nested-class block keeps siblings readable
    for i, block in enumerate(blocks):
        if i > 0 and (block[0].lstrip().startswith("class") or _is_class_block(blocks[i - 1])):
            lines.append("")
        lines.extend(block)
    return lines


def _is_class_block(block: list[str]) -> bool:
    return block[0].lstrip().startswith("class")


def render_stub(doc: StubDocument) -> str:
    lines = list(doc.imports)
    blocks: list[list[str]] = []
    for name, value in doc.aliases:
        blocks.append([f"{name} = {value}"])
    for sc in doc.classes:
        blocks.append(_render_class(sc, 0))
    for fn in doc.functions:
        blocks.append(_render_function(fn, 0, method=False))
    for i, block in enumerate(blocks):
        if i > 0:
            lines.append("")
        lines.extend(block)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Parsing (subset grammar; supports the idempotence property)


def _signature_from_ast(node: ast.FunctionDef, method: bool) -> cg.Signature:
    args = node.args.args[1:] if method else node.args.args
    params = tuple(
        f"{a.arg}: {ast.unparse(a.annotation)}" if a.annotation else a.arg for a in args
    )
    returns = ast.unparse(node.returns) if node.returns else "None"
    return cg.Signature(params, returns)


def _functions_from_body(body: list[ast.stmt], method: bool) -> list[StubFunction]:
    out: list[StubFunction] = []
    for node in body:
        if not isinstance(node, ast.FunctionDef):
            continue
        sig = _signature_from_ast(node, method)
        for fn in out:
            if fn.name == node.name:
                fn.overloads.append(sig)
                break
        else:
            out.append(StubFunction(node.name, [sig]))
    return out


def _class_from_ast(node: ast.ClassDef) -> StubClass:
    sc = StubClass(name=node.name)
    sc.methods = _functions_from_body(node.body, method=True)
    for sub in node.body:
        if isinstance(sub, ast.ClassDef):
            sc.nested.append(_class_from_ast(sub))
    return sc


def parse_stub(text: str, namespace: str = "") -> StubDocument:
    tree = ast.parse(text)
    doc = StubDocument(namespace=namespace)
    for node in tree.body:
        if isinstance(node, ast.ImportFrom):
            names = ", ".join(alias.name for alias in node.names)
            doc.imports.append(f"from {node.module} import {names}")
        elif isinstance(node, ast.Assign):
            target = node.targets[0]
            assert isinstance(target, ast.Name)
            doc.aliases.append((target.id, ast.unparse(node.value)))
        elif isinstance(node, ast.ClassDef):
            doc.classes.append(_class_from_ast(node))
    doc.functions = _functions_from_body(tree.body, method=False)
    return doc

"""Stub-file conformance checks: syntax, type-checking, and golden diffs.

The harness is read-only over generator outputs: each ``.pyi`` file in the
stub directory is parsed with the standard-library parser, the whole set is
smoke-tested with a static type checker against a small consumer program,
and every file is diffed (trailing whitespace normalized) against its golden
counterpart.
"""

from __future__ import annotations

import ast
import json
import shutil
import subprocess
import tempfile
from dataclasses import dataclass, field
from pathlib import Path

TYPE_CHECKER = "pyright"


@dataclass
class CheckResult:
    file: Path
    parse_ok: bool
    typecheck_ok: bool
    golden_match: bool
    messages: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.parse_ok and self.typecheck_ok and self.golden_match


# ---------------------------------------------------------------------------
# Per-file checks


def _parse(path: Path) -> tuple[ast.Module | None, list[str]]:
    try:
        return ast.parse(path.read_text(encoding="utf-8")), []
    except SyntaxError as exc:
        return None, [f"syntax error at line {exc.lineno}: {exc.msg}"]


def _overload_errors(tree: ast.Module) -> list[str]:
    """Structural pass: overload groups must carry the decorator on every
    entry, and a lone definition must not carry it."""
    errors: list[str] = []

    def has_overload(fn: ast.FunctionDef) -> bool:
        for dec in fn.decorator_list:
            if isinstance(dec, ast.Name) and dec.id == "overload":
                return True
            if isinstance(dec, ast.Attribute) and dec.attr == "overload":
                return True
        return False

    def scan(body: list[ast.stmt], scope: str) -> None:
        groups: dict[str, list[ast.FunctionDef]] = {}
        for node in body:
            if isinstance(node, ast.FunctionDef):
                groups.setdefault(node.name, []).append(node)
            elif isinstance(node, ast.ClassDef):
                scan(node.body, f"{scope}{node.name}.")
        for name, defs in groups.items():
            marked = [has_overload(fn) for fn in defs]
            if len(defs) > 1 and not all(marked):
                errors.append(f"{scope}{name}: overload group entry missing "
                              f"its overload decorator")
            elif len(defs) == 1 and marked[0]:
                errors.append(f"{scope}{name}: single definition marked as overload")

    scan(tree.body, "")
    return errors


def _normalize(text: str) -> str:
    return "\n".join(line.rstrip() for line in text.splitlines()).rstrip() + "\n"


def _golden_check(path: Path, golden_dir: Path) -> tuple[bool, list[str]]:
    golden = golden_dir / path.name
    if not golden.is_file():
        return False, [f"missing golden for {path.name}"]
    if _normalize(path.read_text(encoding="utf-8")) != _normalize(
            golden.read_text(encoding="utf-8")):
        return False, [f"content differs from golden {golden.name}"]
    return True, []


# ---------------------------------------------------------------------------
# Type-checker smoke test


def _demo_source(stub_names: set[str]) -> str | None:
    """A tiny consumer exercising the stubbed names that are present."""
    lines: list[str] = []
    if "Ker" in stub_names:
        lines += [
            "from Ker import FT, Kernel",
            "",
            "p = Kernel.Point_2(0.0, 0.0)",
            "q = Kernel.Point_2(p)",
            "x: FT = p.x()",
        ]
    if "Aos2" in stub_names:
        lines += [
            "from Aos2 import Arr_overlay_traits, Arrangement_2, overlay",
            "",
            "r = Arrangement_2()",
            "b = Arrangement_2()",
            "o = Arrangement_2()",
            "overlay(r, b, o)",
            "overlay(r, b, o, Arr_overlay_traits(lambda *a: None))",
        ]
    return "\n".join(lines) + "\n" if lines else None


def typecheck_demo(stub_dir: Path) -> tuple[bool, list[str]]:
    """Run the static type checker over a demo program importing the stubs.

    Returns (ok, messages); an unavailable checker passes with a notice so
    the structural checks still gate the result.
    """
    checker = shutil.which(TYPE_CHECKER)
    if checker is None:
        return True, [f"{TYPE_CHECKER} not found; demo type-check skipped"]
    stubs = sorted(stub_dir.glob("*.pyi"))
    demo = _demo_source({p.stem for p in stubs})
    if demo is None:
        return True, ["no recognized stubs; demo type-check skipped"]
    with tempfile.TemporaryDirectory(prefix="stubcheck-") as tmp:
        workdir = Path(tmp)
        for stub in stubs:
            shutil.copy(stub, workdir / stub.name)
        (workdir / "demo.py").write_text(demo, encoding="utf-8")
        proc = subprocess.run(
            [checker, "--outputjson", "demo.py"],
            cwd=workdir, capture_output=True, text=True,
        )
    try:
        diagnostics = json.loads(proc.stdout)["generalDiagnostics"]
    except (json.JSONDecodeError, KeyError):
        return False, [f"{TYPE_CHECKER} produced no parseable output"]
    errors = [d for d in diagnostics if d.get("severity") == "error"]
    messages = [f"demo.py:{d['range']['start']['line'] + 1}: {d['message']}"
                for d in errors]
    return not errors, messages


# ---------------------------------------------------------------------------
# Entry point


def check_stubs(stub_dir: Path, golden_dir: Path) -> list[CheckResult]:
    """One result per stub file, in path order."""
    stub_dir, golden_dir = Path(stub_dir), Path(golden_dir)
    demo_ok, demo_messages = typecheck_demo(stub_dir)
    results: list[CheckResult] = []
    for path in sorted(stub_dir.glob("*.pyi")):
        tree, messages = _parse(path)
        parse_ok = tree is not None
        overload_messages = _overload_errors(tree) if tree is not None else []
        typecheck_ok = parse_ok and not overload_messages and demo_ok
        golden_ok, golden_messages = _golden_check(path, golden_dir)
        results.append(CheckResult(
            file=path,
            parse_ok=parse_ok,
            typecheck_ok=typecheck_ok,
            golden_match=golden_ok,
            messages=messages + overload_messages + golden_messages
            + ([] if demo_ok else demo_messages),
        ))
    return results

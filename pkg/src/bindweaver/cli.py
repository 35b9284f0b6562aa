"""Command-line pipeline: generate, validate, name encode/decode, graph check.

Exit codes: 0 success, 1 I/O failure, 2 configuration or validation error.
On any error the output directory is left untouched — everything is written
to a staging directory first and moved into place only on success.
"""

from __future__ import annotations

import argparse
import os
import shutil
import sys
import tempfile
from pathlib import Path

from . import concept_graph as cg
from . import namer
from . import overload_enumerator as oe
from . import plan_emitter as pe
from . import stub_generator as sg
from .config import BuildConfig, parse_config, validate_dependencies

DATA_ENV_VAR = "BINDWEAVER_DATA"

EXIT_OK = 0
EXIT_IO = 1
EXIT_INVALID = 2


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _read_text(path: Path) -> str:
    return path.read_text(encoding="utf-8")


def _load_config(path: str) -> tuple[BuildConfig | None, int]:
    try:
        text = _read_text(Path(path))
    except OSError as exc:
        return None, _fail(f"cannot read config: {exc}", EXIT_IO)
    cfg, diags = parse_config(text)
    for diag in diags:
        print(diag.render(), file=sys.stderr)
    if cfg is None:
        return None, EXIT_INVALID
    dep_diags = validate_dependencies(cfg)
    for diag in dep_diags:
        print(diag.render(), file=sys.stderr)
    if dep_diags:
        return None, EXIT_INVALID
    return cfg, EXIT_OK


def _data_dir(args: argparse.Namespace) -> Path | None:
    if getattr(args, "data", None):
        return Path(args.data)
    env = os.environ.get(DATA_ENV_VAR)
    return Path(env) if env else None


def _load_data(data_dir: Path | None):
    """Returns (graph, tables, catalog); shipped defaults fill the gaps."""
    graph = pe.load_default_graph()
    tables = pe.load_default_tables()
    catalog = pe.load_default_catalog()
    if data_dir is not None:
        concepts = data_dir / "concepts.json"
        if concepts.exists():
            graph = cg.load_concept_graph(_read_text(concepts))
        for fname in ("do_intersect_2.json", "intersection_2.json"):
            path = data_dir / fname
            if path.exists():
                table = oe.load_support_table(_read_text(path))
                tables[table.function] = table
        catalog_path = data_dir / "minkowski_catalog.json"
        if catalog_path.exists():
            catalog = oe.load_strategy_catalog(_read_text(catalog_path))
    return graph, tables, catalog


def _cmd_generate(args: argparse.Namespace) -> int:
    cfg, status = _load_config(args.config)
    if cfg is None:
        return status
    data_dir = _data_dir(args)
    if data_dir is not None and not data_dir.is_dir():
        return _fail(f"data directory not found: {data_dir}", EXIT_IO)
    try:
        graph, tables, catalog = _load_data(data_dir)
    except OSError as exc:
        return _fail(f"cannot read data files: {exc}", EXIT_IO)
    except (cg.GraphError, oe.TableError) as exc:
        return _fail(str(exc), EXIT_INVALID)

    plan = pe.build_plan(cfg, graph, tables, catalog)
    docs = sg.generate_stubs(cfg, graph, tables, catalog)
    name = namer.encode(cfg)

    out_dir = Path(args.out)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        staging = Path(tempfile.mkdtemp(prefix=".bindweaver-", dir=out_dir.parent))
        try:
            written: list[str] = []
            if not args.stubs_only:
                (staging / "bindings.plan").write_text(pe.render_plan(plan), encoding="utf-8")
                written.append("bindings.plan")
            if not args.plan_only:
                stub_dir = staging / "stubs"
                stub_dir.mkdir()
                for doc in docs:
                    (stub_dir / f"{doc.namespace}.pyi").write_text(
                        sg.render_stub(doc), encoding="utf-8"
                    )
                written.append("stubs")
            (staging / "NAME").write_text(name + "\n", encoding="utf-8")
            written.append("NAME")
            for entry in written:
                target = out_dir / entry
                if target.is_dir():
                    shutil.rmtree(target)
                elif target.exists():
                    target.unlink()
                os.replace(staging / entry, target)
        finally:
            shutil.rmtree(staging, ignore_errors=True)
    except OSError as exc:
        return _fail(f"cannot write outputs: {exc}", EXIT_IO)
    print(name)
    return EXIT_OK


def _cmd_validate(args: argparse.Namespace) -> int:
    cfg, status = _load_config(args.config)
    if cfg is None:
        return status
    print("ok")
    return EXIT_OK


def _cmd_name_encode(args: argparse.Namespace) -> int:
    cfg, status = _load_config(args.config)
    if cfg is None:
        return status
    print(namer.encode(cfg))
    return EXIT_OK


def _cmd_name_decode(args: argparse.Namespace) -> int:
    try:
        cfg = namer.decode(args.name)
    except namer.NameError_ as exc:
        return _fail(str(exc), EXIT_INVALID)
    if cfg.general["fixed_library_name"]:
        print("fixed-name configuration; defaults apply")
        return EXIT_OK
    enabled = [s for s, on in cfg.enabled.items() if on]
    print(f"enabled: {' '.join(enabled) if enabled else '(none)'}")
    for short in enabled:
        rendered = " ".join(f"{k}={v}" for k, v in sorted(cfg.selections[short].items()))
        if rendered:
            print(f"{short}: {rendered}")
    return EXIT_OK


def _cmd_graph_check(args: argparse.Namespace) -> int:
    data_dir = _data_dir(args)
    if data_dir is None:
        return _fail("no data directory (use --data or BINDWEAVER_DATA)", EXIT_INVALID)
    concepts = data_dir / "concepts.json"
    try:
        text = _read_text(concepts)
    except OSError as exc:
        return _fail(f"cannot read {concepts}: {exc}", EXIT_IO)
    try:
        graph = cg.load_concept_graph(text)
    except cg.GraphError as exc:
        return _fail(str(exc), EXIT_INVALID)
    cycle = cg.validate_acyclic(graph)
    if cycle is not None:
        return _fail(f"refinement cycle: {' -> '.join(cycle)}", EXIT_INVALID)
    print(f"ok: {len(graph.concepts)} concepts, {len(graph.models)} models")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bindweaver",
        description="Generate binding plans, library names, and annotation stubs "
        "from declarative module/concept data.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="emit plan, stubs, and library name")
    gen.add_argument("--config", required=True, help="build configuration file")
    gen.add_argument("--data", help=f"data directory (default: ${DATA_ENV_VAR})")
    gen.add_argument("--out", required=True, help="output directory")
    gen.add_argument("--stubs-only", action="store_true")
    gen.add_argument("--plan-only", action="store_true")
    gen.set_defaults(func=_cmd_generate)

    val = sub.add_parser("validate", help="parse and validate a configuration")
    val.add_argument("--config", required=True)
    val.set_defaults(func=_cmd_validate)

    name = sub.add_parser("name", help="library-name codec")
    name_sub = name.add_subparsers(dest="name_command", required=True)
    enc = name_sub.add_parser("encode")
    enc.add_argument("--config", required=True)
    enc.set_defaults(func=_cmd_name_encode)
    dec = name_sub.add_parser("decode")
    dec.add_argument("name")
    dec.set_defaults(func=_cmd_name_decode)

    graph = sub.add_parser("graph", help="concept-graph checks")
    graph_sub = graph.add_subparsers(dest="graph_command", required=True)
    check = graph_sub.add_parser("check")
    check.add_argument("--data")
    check.set_defaults(func=_cmd_graph_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

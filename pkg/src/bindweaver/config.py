"""Build configuration: flag schema, defaults, parsing, and dependency rules.

The configuration file is line-oriented ``CGALPY_<KEY>=<value>`` with ``#``
comments.  Keys are case-sensitive and mirror the build flags of the bound
library: one enable flag per module plus per-module selection keys.
"""

from __future__ import annotations

import copy
from dataclasses import dataclass, field


@dataclass(frozen=True)
class ModuleDescriptor:
    long_name: str
    short_name: str

    @property
    def namespace(self) -> str:
        # first letter upper, rest lower, digits preserved: AOS2 -> Aos2
        lowered = self.short_name.lower()
        return lowered[0].upper() + lowered[1:]


# Built-in modules, in canonical (library-name and scope) order.
MODULES: tuple[ModuleDescriptor, ...] = (
    ModuleDescriptor("KERNEL", "KER"),
    ModuleDescriptor("KERNEL_D", "KERD"),
    ModuleDescriptor("ARRANGEMENT_ON_SURFACE_2", "AOS2"),
    ModuleDescriptor("ALPHA_SHAPE_2", "AS2"),
    ModuleDescriptor("ALPHA_SHAPE_3", "AS3"),
    ModuleDescriptor("BOOLEAN_SET_OPERATIONS_2", "BSO2"),
    ModuleDescriptor("BOUNDING_VOLUMES", "BV"),
    ModuleDescriptor("CONVEX_HULL_2", "CH2"),
    ModuleDescriptor("CONVEX_HULL_3", "CH3"),
    ModuleDescriptor("POLYGON_2", "POL2"),
    ModuleDescriptor("POLYGON_PARTITIONING", "PP"),
    ModuleDescriptor("MINKOWSKI_SUM_2", "MS2"),
    ModuleDescriptor("SPATIAL_SEARCHING", "SS"),
    ModuleDescriptor("TRIANGULATION_2", "TRI2"),
    ModuleDescriptor("TRIANGULATION_3", "TRI3"),
)

MODULES_BY_SHORT = {m.short_name: m for m in MODULES}

KERNEL_NAMES = (
    "epic",
    "epec",
    "epecws",
    "filteredSimpleCartesianDouble",
    "filteredSimpleCartesianLazyGmpq",
)
KERNEL_D_NAMES = ("epicd", "epecd", "cartesiandDouble", "cartesiandLazyGmpq")
AOS2_TRAITS_NAMES = (
    "nonCachingSegment",
    "segment",
    "linear",
    "conic",
    "circleSegment",
    "algebraic",
)
TRI2_NAMES = (
    "plain",
    "regular",
    "delaunay",
    "constrained",
    "constrainedDelaunay",
    "periodicPlain",
    "periodicDelaunay",
)
TRI3_NAMES = (
    "plain",
    "regular",
    "delaunay",
    "periodicPlain",
    "periodicRegular",
    "periodicDelaunay",
)

# Kernels whose number type is a plain machine double (affects return-value
# policy resolution and the FT alias emitted in stubs).
EPIC_FAMILY = frozenset({"epic", "filteredSimpleCartesianDouble"})


@dataclass(frozen=True)
class _Key:
    """One schema entry: a config-file key bound to a typed field."""

    config_key: str  # without the CGALPY_ prefix
    module: str | None  # short name; None for general keys
    fname: str
    kind: str  # bool | enum | posint
    options: tuple[str, ...] = ()
    default: object = None


_GENERAL_KEYS = (
    _Key("USE_SHARED_LIBS", None, "use_shared_libs", "bool", default=True),
    _Key("BUILD_SHARED_LIBS", None, "build_shared_libs", "bool", default=True),
    _Key("FIXED_LIBRARY_NAME", None, "fixed_library_name", "bool", default=True),
)

_SELECTION_KEYS = (
    _Key("KERNEL_NAME", "KER", "kernel_name", "enum", KERNEL_NAMES, "epic"),
    _Key("KERNEL_INTERSECTION_BINDINGS", "KER", "intersection_bindings", "bool", default=True),
    _Key("KERNEL_D_NAME", "KERD", "kernel_d_name", "enum", KERNEL_D_NAMES, "epicd"),
    _Key("KERNEL_D_DIMENSION_TAG", "KERD", "dimension_tag", "enum", ("static", "dynamic"), "dynamic"),
    _Key("KERNEL_D_DIMENSION", "KERD", "dimension", "posint", default=2),
    _Key("AOS2_GEOMETRY_TRAITS_NAME", "AOS2", "geometry_traits_name", "enum", AOS2_TRAITS_NAMES, "segment"),
    _Key("AOS2_EXTEND_VERTEX", "AOS2", "extend_vertex", "bool", default=False),
    _Key("AOS2_EXTEND_HALFEDGE", "AOS2", "extend_halfedge", "bool", default=False),
    _Key("AOS2_EXTEND_FACE", "AOS2", "extend_face", "bool", default=False),
    _Key("AOS2_POINT_LOCATION_BINDINGS", "AOS2", "point_location_bindings", "bool", default=True),
    _Key("TRI2_NAME", "TRI2", "name", "enum", TRI2_NAMES, "plain"),
    _Key("TRI2_VERTEX_WITH_INFO", "TRI2", "vertex_with_info", "bool", default=False),
    _Key("TRI2_FACE_WITH_INFO", "TRI2", "face_with_info", "bool", default=False),
    _Key("TRI2_INTERSECTION_TAG_NAME", "TRI2", "intersection_tag_name", "enum", ("ncirc",), "ncirc"),
    _Key("TRI2_HIERARCHY", "TRI2", "hierarchy", "bool", default=False),
    _Key("AS2_EXACT_COMPARISON", "AS2", "exact_comparison", "bool", default=False),
    _Key("TRI3_NAME", "TRI3", "name", "enum", TRI3_NAMES, "plain"),
    _Key("TRI3_CONCURRENCY_NAME", "TRI3", "concurrency_name", "enum", ("sequential", "parallel"), "sequential"),
    _Key("TRI3_LOCATION_POLICY_NAME", "TRI3", "location_policy_name", "enum", ("fast", "compact"), "compact"),
    _Key("TRI3_HIERARCHY", "TRI3", "hierarchy", "bool", default=False),
    _Key("TRI3_VERTEX_WITH_INFO", "TRI3", "vertex_with_info", "bool", default=False),
    _Key("TRI3_CELL_WITH_INFO", "TRI3", "cell_with_info", "bool", default=False),
    _Key("AS3_NAME", "AS3", "name", "enum", ("plain", "fixed"), "plain"),
    _Key("AS3_EXACT_COMPARISON", "AS3", "exact_comparison", "bool", default=False),
    _Key("SPATIAL_SEARCHING_DIMENSION", "SS", "dimension", "posint", default=2),
)

_ENABLE_KEYS = tuple(
    _Key(f"{m.long_name}_BINDINGS", m.short_name, "enabled", "bool",
         default=(m.short_name == "KER"))
    for m in MODULES
)

# Config-file order: general, enables, then selections.
_ALL_KEYS = _GENERAL_KEYS + _ENABLE_KEYS + _SELECTION_KEYS
_KEY_INDEX = {k.config_key: k for k in _ALL_KEYS}


@dataclass(frozen=True)
class Diagnostic:
    severity: str  # error | warning
    code: str
    message: str
    subject: str = ""

    def render(self) -> str:
        where = f" [{self.subject}]" if self.subject else ""
        return f"{self.severity}: {self.code}: {self.message}{where}"


@dataclass
class BuildConfig:
    general: dict[str, object] = field(default_factory=dict)
    enabled: dict[str, bool] = field(default_factory=dict)
    selections: dict[str, dict[str, object]] = field(default_factory=dict)

    def selection(self, short: str, fname: str) -> object:
        return self.selections[short][fname]

    def is_enabled(self, short: str) -> bool:
        return self.enabled[short]

    def copy(self) -> "BuildConfig":
        return copy.deepcopy(self)


def default_config() -> BuildConfig:
    cfg = BuildConfig(
        general={k.fname: k.default for k in _GENERAL_KEYS},
        enabled={k.module: bool(k.default) for k in _ENABLE_KEYS},
        selections={m.short_name: {} for m in MODULES},
    )
    for k in _SELECTION_KEYS:
        cfg.selections[k.module][k.fname] = k.default
    return cfg


def _parse_value(key: _Key, raw: str) -> object:
    if key.kind == "bool":
        if raw == "true":
            return True
        if raw == "false":
            return False
        raise ValueError(f"expected true|false, got {raw!r}")
    if key.kind == "posint":
        try:
            value = int(raw)
        except ValueError:
            raise ValueError(f"expected a positive integer, got {raw!r}")
        if value <= 0:
            raise ValueError(f"expected a positive integer, got {raw!r}")
        return value
    if key.kind == "enum":
        if raw not in key.options:
            raise ValueError(
                f"invalid value {raw!r}; options: {', '.join(key.options)}"
            )
        return raw
    raise AssertionError(key.kind)


def parse_config(text: str) -> tuple[BuildConfig | None, list[Diagnostic]]:
    """Parse a config file.  On errors the config is None."""
    cfg = default_config()
    diags: list[Diagnostic] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            diags.append(Diagnostic(
                "error", "malformed-line",
                f"line {lineno}: expected KEY=VALUE, got {stripped!r}"))
            continue
        raw_key, raw_value = stripped.split("=", 1)
        raw_key, raw_value = raw_key.strip(), raw_value.strip()
        if not raw_key.startswith("CGALPY_"):
            diags.append(Diagnostic(
                "error", "unknown-key",
                f"line {lineno}: key {raw_key!r} lacks the CGALPY_ prefix",
                raw_key))
            continue
        key = _KEY_INDEX.get(raw_key[len("CGALPY_"):])
        if key is None:
            diags.append(Diagnostic(
                "error", "unknown-key",
                f"line {lineno}: unknown key {raw_key!r}", raw_key))
            continue
        try:
            value = _parse_value(key, raw_value)
        except ValueError as exc:
            diags.append(Diagnostic(
                "error", "malformed-value",
                f"line {lineno}: {raw_key}: {exc}", raw_key))
            continue
        if key.fname == "enabled":
            cfg.enabled[key.module] = bool(value)
        elif key.module is None:
            cfg.general[key.fname] = value
        else:
            cfg.selections[key.module][key.fname] = value
    if any(d.severity == "error" for d in diags):
        return None, diags
    return cfg, diags


def render_config(c: BuildConfig) -> str:
    """Canonical full rendering; parse(render(parse(x))) == parse(x)."""
    lines = []
    for k in _ALL_KEYS:
        if k.fname == "enabled":
            value = c.enabled[k.module]
        elif k.module is None:
            value = c.general[k.fname]
        else:
            value = c.selections[k.module][k.fname]
        if k.kind == "bool":
            rendered = "true" if value else "false"
        else:
            rendered = str(value)
        lines.append(f"CGALPY_{k.config_key}={rendered}")
    return "\n".join(lines) + "\n"


# Module dependency rules: dependent -> required modules.  Prerequisites are
# never auto-enabled; a violation is an error the user must fix explicitly.
DEPENDENCY_RULES: tuple[tuple[str, tuple[str, ...]], ...] = (
    ("BSO2", ("AOS2", "POL2", "KER")),
    ("MS2", ("KER", "AOS2", "POL2")),
    ("AS2", ("TRI2",)),
    ("AS3", ("TRI3",)),
)

# Alpha shapes are built on top of specific triangulation kinds.
_ALPHA_KIND_RULES = (
    ("AS2", "TRI2", ("delaunay", "regular")),
    ("AS3", "TRI3", ("delaunay", "regular", "periodicDelaunay", "periodicRegular")),
)


def validate_dependencies(c: BuildConfig) -> list[Diagnostic]:
    diags: list[Diagnostic] = []
    for dependent, required in DEPENDENCY_RULES:
        if not c.enabled[dependent]:
            continue
        for req in required:
            if not c.enabled[req]:
                diags.append(Diagnostic(
                    "error", "missing-dependency",
                    f"{dependent} requires {req}", dependent))
    for dependent, tri, kinds in _ALPHA_KIND_RULES:
        if c.enabled[dependent] and c.enabled[tri]:
            name = c.selection(tri, "name")
            if name not in kinds:
                diags.append(Diagnostic(
                    "error", "incompatible-triangulation",
                    f"{dependent} requires {tri} name in {{{', '.join(kinds)}}}, "
                    f"got {name}", dependent))
    return diags


def enabled_modules(c: BuildConfig) -> list[ModuleDescriptor]:
    return [m for m in MODULES if c.enabled[m.short_name]]

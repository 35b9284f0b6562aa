"""Library-name codec: enabled modules and their selections, in one token.

A non-fixed name is ``CGALPY_`` followed by one substring per enabled module
in canonical module order; each substring is the module's lower-case short
name followed by capitalized selection words drawn from per-module word
tables.
"""

from __future__ import annotations

import re

from .config import (
    MODULES,
    BuildConfig,
    default_config,
    enabled_modules,
)


class NameError_(ValueError):
    """Raised for names that do not decode under the word tables."""


_KERNEL_WORDS = {
    "epic": "Epic",
    "epec": "Epec",
    "epecws": "Epecws",
    "filteredSimpleCartesianDouble": "FilteredSimpleCartesianDouble",
    "filteredSimpleCartesianLazyGmpq": "FilteredSimpleCartesianLazyGmpq",
}
_KERNEL_D_WORDS = {
    "epicd": "Epicd",
    "epecd": "Epecd",
    "cartesiandDouble": "CartesiandDouble",
    "cartesiandLazyGmpq": "CartesiandLazyGmpq",
}
_AOS2_TRAITS_WORDS = {
    "segment": "Seg",
    "nonCachingSegment": "NonCachingSeg",
    "linear": "Linear",
    "conic": "Conic",
    "circleSegment": "CircleSegment",
    "algebraic": "Algebraic",
}
_TRI2_WORDS = {
    "plain": "Plain",
    "regular": "Regular",
    "delaunay": "Delaunay",
    "constrained": "Constrained",
    "constrainedDelaunay": "ConstrainedDelaunay",
    "periodicPlain": "PeriodicPlain",
    "periodicDelaunay": "PeriodicDelaunay",
}
_TRI3_WORDS = {
    "plain": "Plain",
    "regular": "Regular",
    "delaunay": "Delaunay",
    "periodicPlain": "PeriodicPlain",
    "periodicRegular": "PeriodicRegular",
    "periodicDelaunay": "PeriodicDelaunay",
}
_AS3_WORDS = {"plain": "Plain", "fixed": "Fixed"}


def _module_words(short: str, c: BuildConfig) -> list[str]:
    sel = c.selections[short]
    words: list[str] = []
    if short == "KER":
        words.append(_KERNEL_WORDS[sel["kernel_name"]])
        if sel["intersection_bindings"]:
            words.append("Int")
    elif short == "KERD":
        words.append(_KERNEL_D_WORDS[sel["kernel_d_name"]])
        if sel["dimension_tag"] == "static":
            words.append(f"Static{sel['dimension']}")
        else:
            words.append("Dynamic")
    elif short == "AOS2":
        words.append(_AOS2_TRAITS_WORDS[sel["geometry_traits_name"]])
        ext = "".join(
            letter
            for letter, flag in (("V", "extend_vertex"), ("H", "extend_halfedge"), ("F", "extend_face"))
            if sel[flag]
        )
        words.append("Ext" + ext if ext else "Plain")
        if sel["point_location_bindings"]:
            words.append("Pl")
    elif short == "TRI2":
        words.append(_TRI2_WORDS[sel["name"]])
        if sel["vertex_with_info"]:
            words.append("Vinfo")
        if sel["face_with_info"]:
            words.append("Finfo")
        if sel["hierarchy"]:
            words.append("Hier")
    elif short == "TRI3":
        words.append(_TRI3_WORDS[sel["name"]])
        if sel["concurrency_name"] == "parallel":
            words.append("Par")
        if sel["location_policy_name"] == "fast":
            words.append("Fast")
        if sel["vertex_with_info"]:
            words.append("Vinfo")
        if sel["cell_with_info"]:
            words.append("Cinfo")
        if sel["hierarchy"]:
            words.append("Hier")
    elif short == "AS2":
        if sel["exact_comparison"]:
            words.append("Ec")
    elif short == "AS3":
        words.append(_AS3_WORDS[sel["name"]])
        if sel["exact_comparison"]:
            words.append("Ec")
    elif short == "SS":
        words.append(f"D{sel['dimension']}")
    return words


def encode(c: BuildConfig) -> str:
    if c.general["fixed_library_name"]:
        return "CGALPY"
    parts = [
        m.short_name.lower() + "".join(_module_words(m.short_name, c))
        for m in enabled_modules(c)
    ]
    return "CGALPY_" + "_".join(parts)


# ---------------------------------------------------------------------------
# Decoding


def _take_word(rem: str, table: dict[str, str], what: str) -> tuple[str, str]:
    """Longest-match one word from the table; returns (value, remainder)."""
    best: tuple[str, str] | None = None
    for value, word in table.items():
        if rem.startswith(word) and (best is None or len(word) > len(best[1])):
            best = (value, word)
    if best is None:
        raise NameError_(f"cannot decode {what} from {rem!r}")
    return best[0], rem[len(best[1]):]


def _maybe(rem: str, word: str) -> tuple[bool, str]:
    if rem.startswith(word):
        return True, rem[len(word):]
    return False, rem


def _decode_module(short: str, rem: str, c: BuildConfig) -> None:
    sel = c.selections[short]
    if short == "KER":
        sel["kernel_name"], rem = _take_word(rem, _KERNEL_WORDS, "kernel name")
        sel["intersection_bindings"], rem = _maybe(rem, "Int")
    elif short == "KERD":
        sel["kernel_d_name"], rem = _take_word(rem, _KERNEL_D_WORDS, "kernel-d name")
        m = re.match(r"Static(\d+)", rem)
        if m:
            sel["dimension_tag"] = "static"
            sel["dimension"] = int(m.group(1))
            rem = rem[m.end():]
        else:
            ok, rem = _maybe(rem, "Dynamic")
            if not ok:
                raise NameError_(f"cannot decode dimension tag from {rem!r}")
            sel["dimension_tag"] = "dynamic"
    elif short == "AOS2":
        sel["geometry_traits_name"], rem = _take_word(rem, _AOS2_TRAITS_WORDS, "traits name")
        plain, rem = _maybe(rem, "Plain")
        if not plain:
            ok, rem = _maybe(rem, "Ext")
            if not ok:
                raise NameError_(f"cannot decode extension words from {rem!r}")
            any_ext = False
            for letter, flag in (("V", "extend_vertex"), ("H", "extend_halfedge"), ("F", "extend_face")):
                sel[flag], rem = _maybe(rem, letter)
                any_ext = any_ext or sel[flag]
            if not any_ext:
                raise NameError_("Ext with no extension letters")
        else:
            sel["extend_vertex"] = sel["extend_halfedge"] = sel["extend_face"] = False
        sel["point_location_bindings"], rem = _maybe(rem, "Pl")
    elif short == "TRI2":
        sel["name"], rem = _take_word(rem, _TRI2_WORDS, "triangulation name")
        sel["vertex_with_info"], rem = _maybe(rem, "Vinfo")
        sel["face_with_info"], rem = _maybe(rem, "Finfo")
        sel["hierarchy"], rem = _maybe(rem, "Hier")
    elif short == "TRI3":
        sel["name"], rem = _take_word(rem, _TRI3_WORDS, "triangulation name")
        par, rem = _maybe(rem, "Par")
        sel["concurrency_name"] = "parallel" if par else "sequential"
        fast, rem = _maybe(rem, "Fast")
        sel["location_policy_name"] = "fast" if fast else "compact"
        sel["vertex_with_info"], rem = _maybe(rem, "Vinfo")
        sel["cell_with_info"], rem = _maybe(rem, "Cinfo")
        sel["hierarchy"], rem = _maybe(rem, "Hier")
    elif short == "AS2":
        sel["exact_comparison"], rem = _maybe(rem, "Ec")
    elif short == "AS3":
        sel["name"], rem = _take_word(rem, _AS3_WORDS, "alpha-shape name")
        sel["exact_comparison"], rem = _maybe(rem, "Ec")
    elif short == "SS":
        m = re.match(r"D(\d+)", rem)
        if not m:
            raise NameError_(f"cannot decode dimension from {rem!r}")
        sel["dimension"] = int(m.group(1))
        rem = rem[m.end():]
    if rem:
        raise NameError_(f"trailing selection words {rem!r} for module {short}")


def decode(name: str) -> BuildConfig:
    """Reconstruct the enabled set and name-bearing selections; rest defaults."""
    c = default_config()
    if name == "CGALPY":
        c.general["fixed_library_name"] = True
        return c
    if not name.startswith("CGALPY_"):
        raise NameError_(f"name {name!r} lacks the CGALPY prefix")
    c.general["fixed_library_name"] = False
    for short in c.enabled:
        c.enabled[short] = False
    rest = name[len("CGALPY_"):]
    if not rest:
        return c
    last_index = -1
    for token in rest.split("_"):
        match = None
        for index, mod in enumerate(MODULES):
            prefix = mod.short_name.lower()
            if token.startswith(prefix) and (match is None or len(prefix) > len(match[1])):
                match = (index, prefix, mod)
        if match is None:
            raise NameError_(f"unknown module substring {token!r}")
        index, prefix, mod = match
        if index <= last_index:
            raise NameError_(f"module {mod.short_name} out of canonical order")
        last_index = index
        c.enabled[mod.short_name] = True
        _decode_module(mod.short_name, token[len(prefix):], c)
    return c


def name_bearing_projection(c: BuildConfig) -> dict:
    """The fields encode() embeds: enabled set plus per-module words' sources."""
    out: dict = {"enabled": tuple(sorted(s for s, on in c.enabled.items() if on))}
    for m in enabled_modules(c):
        out[m.short_name] = tuple(_module_words(m.short_name, c))
    return out

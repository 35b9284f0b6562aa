"""Symbolic type composition: kernels, traits, DCEL and triangulation chains.

Type expressions are small trees (named type or template application) rendered
canonically as ``T`` or ``Tmpl<A1, A2>``.  Composition is symbolic — template
parameters that depend on the bound library (``Kernel``, ``Traits``, the
exact-comparison tag ``Ec``, the conic number-type arguments) stay as named
placeholders.
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import BuildConfig

# Placeholder for the host language's generic object payload carried by
# extended cells and with-info vertex/face/cell bases.
GENERIC_OBJECT = "PyObject_"


class TypeExpr:
    pass


@dataclass(frozen=True)
class Named(TypeExpr):
    name: str


@dataclass(frozen=True)
class Apply(TypeExpr):
    template: str
    args: tuple[TypeExpr, ...]


def app(template: str, *args: TypeExpr | str) -> Apply:
    return Apply(template, tuple(Named(a) if isinstance(a, str) else a for a in args))


def render(t: TypeExpr) -> str:
    if isinstance(t, Named):
        return t.name
    assert isinstance(t, Apply)
    return f"{t.template}<{', '.join(render(a) for a in t.args)}>"


@dataclass(frozen=True)
class ComposedArrangement:
    traits: TypeExpr
    vertex: TypeExpr
    halfedge: TypeExpr
    face: TypeExpr
    dcel: TypeExpr
    arrangement: TypeExpr


@dataclass(frozen=True)
class ComposedTriangulation:
    traits: TypeExpr
    vertex: TypeExpr
    cell_or_face: TypeExpr
    tds: TypeExpr
    triangulation: TypeExpr


# ---------------------------------------------------------------------------
# Kernels

_KERNELS: dict[str, TypeExpr] = {
    "epic": Named("Exact_predicates_inexact_constructions_kernel"),
    "epec": Named("Exact_predicates_exact_constructions_kernel"),
    "epecws": Named("Exact_predicates_exact_constructions_kernel_with_sqrt"),
    "filteredSimpleCartesianDouble": app("Filtered_kernel", app("Simple_cartesian", "double")),
    "filteredSimpleCartesianLazyGmpq": app(
        "Filtered_kernel", app("Simple_cartesian", app("Lazy_exact_nt", "Gmpq"))
    ),
}


def kernel_type(c: BuildConfig) -> TypeExpr:
    return _KERNELS[c.selection("KER", "kernel_name")]


def kernel_d_type(c: BuildConfig) -> TypeExpr:
    name = c.selection("KERD", "kernel_d_name")
    if name == "cartesiandDouble":
        return app("Cartesian_d", "double")
    if name == "cartesiandLazyGmpq":
        return app("Cartesian_d", app("Lazy_exact_nt", "Gmpq"))
    if c.selection("KERD", "dimension_tag") == "static":
        tag: TypeExpr = app("Dimension_tag", str(c.selection("KERD", "dimension")))
    else:
        tag = Named("Dynamic_dimension_tag")
    template = {"epicd": "Epick_d", "epecd": "Epeck_d"}[name]
    return app(template, tag)


# ---------------------------------------------------------------------------
# 2D arrangements

_BASIC_TRAITS: dict[str, TypeExpr] = {
    "nonCachingSegment": app("Arr_non_caching_segment_basic_traits_2", "Kernel"),
    "segment": app("Arr_segment_traits_2", "Kernel"),
    "linear": app("Arr_linear_traits_2", "Kernel"),
    "conic": app("Arr_conic_traits_2", "RatKernel", "AlgKernel", "NtTraits"),
    "circleSegment": app("Arr_circle_segment_traits_2", "Kernel"),
    "algebraic": app("Arr_algebraic_segment_traits_2", "Coefficient"),
}


def compose_aos2_traits(c: BuildConfig) -> TypeExpr:
    """Geometry traits, wrapped for Boolean set operations when BSO2 is on."""
    name = c.selection("AOS2", "geometry_traits_name")
    basic = _BASIC_TRAITS[name]
    if not c.is_enabled("BSO2"):
        return basic
    if name == "segment":
        return app("Gps_segment_traits_2", "Kernel", "Point_2_container")
    if name == "circleSegment":
        return app("Gps_circle_segment_traits_2", "Kernel")
    return app("Gps_traits_2", basic)


def compose_dcel(c: BuildConfig) -> ComposedArrangement:
    traits = compose_aos2_traits(c)
    bso2 = c.is_enabled("BSO2")

    vertex: TypeExpr = app("Arr_vertex_base", "Traits::Point_2")
    if bso2:
        halfedge: TypeExpr = app("Gps_halfedge_base", "Traits::X_monotone_curve_2")
        face: TypeExpr = Named("Gps_face_base")
    else:
        halfedge = app("Arr_halfedge_base", "Traits::X_monotone_curve_2")
        face = Named("Arr_face_base")

    if c.selection("AOS2", "extend_vertex"):
        vertex = app("Arr_extended_vertex", vertex, GENERIC_OBJECT)
    if c.selection("AOS2", "extend_halfedge"):
        halfedge = app("Arr_extended_halfedge", halfedge, GENERIC_OBJECT)
    if c.selection("AOS2", "extend_face"):
        face = app("Arr_extended_face", face, GENERIC_OBJECT)

    dcel = app("Arr_dcel_base", vertex, halfedge, face)
    return ComposedArrangement(
        traits=traits,
        vertex=vertex,
        halfedge=halfedge,
        face=face,
        dcel=dcel,
        arrangement=app("Arrangement_2", traits, dcel),
    )


# ---------------------------------------------------------------------------
# Triangulations

_ITAGS = {"ncirc": "No_constraint_intersection_requiring_constructions_tag"}


def compose_tri2(c: BuildConfig) -> ComposedTriangulation:
    name = c.selection("TRI2", "name")
    periodic = name.startswith("periodic")

    if name == "periodicPlain":
        traits: TypeExpr = app("Periodic_2_triangulation_traits_2", "Kernel")
    elif name == "periodicDelaunay":
        traits = app("Periodic_2_Delaunay_triangulation_traits_2", "Kernel")
    else:
        traits = Named("Kernel")

    if periodic:
        v: TypeExpr = app("Periodic_2_triangulation_vertex_base_2", "Traits")
        f: TypeExpr = app("Periodic_2_triangulation_face_base_2", "Traits")
    elif name == "regular":
        v = app("Regular_triangulation_vertex_base_2", "Traits")
        f = app("Regular_triangulation_face_base_2", "Traits")
    else:
        v = app("Triangulation_vertex_base_2", "Traits")
        f = app("Triangulation_face_base_2", "Traits")

    if c.selection("TRI2", "vertex_with_info"):
        v = app("Triangulation_vertex_base_with_info_2", GENERIC_OBJECT, "Traits", v)
    if c.selection("TRI2", "face_with_info"):
        f = app("Triangulation_face_base_with_info_2", GENERIC_OBJECT, "Traits", f)
    if c.is_enabled("AS2"):
        v = app("Alpha_shape_vertex_base_2", "Traits", v, "Ec")
        f = app("Alpha_shape_face_base_2", "Traits", f, "Ec")
    if c.selection("TRI2", "hierarchy"):
        # the hierarchy touches the vertex chain only
        v = app("Triangulation_hierarchy_vertex_base_2", v)

    tds = app("Triangulation_data_structure_2", v, f)

    template = {
        "plain": "Triangulation_2",
        "regular": "Regular_triangulation_2",
        "delaunay": "Delaunay_triangulation_2",
        "constrained": "Constrained_triangulation_2",
        "constrainedDelaunay": "Constrained_Delaunay_triangulation_2",
        "periodicPlain": "Periodic_2_triangulation_2",
        "periodicDelaunay": "Periodic_2_Delaunay_triangulation_2",
    }[name]
    args: list[TypeExpr | str] = ["Traits", "Tds"]
    if name in ("constrained", "constrainedDelaunay"):
        args.append(_ITAGS[c.selection("TRI2", "intersection_tag_name")])
    tri: TypeExpr = app(template, *args)
    if c.selection("TRI2", "hierarchy"):
        wrap = "Periodic_2_triangulation_hierarchy_2" if periodic else "Triangulation_hierarchy_2"
        tri = app(wrap, tri)

    return ComposedTriangulation(traits=traits, vertex=v, cell_or_face=f, tds=tds, triangulation=tri)


def compose_tri3(c: BuildConfig) -> ComposedTriangulation:
    name = c.selection("TRI3", "name")
    periodic = name.startswith("periodic")
    regular = name in ("regular", "periodicRegular")

    traits_map = {
        "periodicPlain": "Periodic_3_triangulation_traits_3",
        "periodicRegular": "Periodic_3_regular_triangulation_traits_3",
        "periodicDelaunay": "Periodic_3_Delaunay_triangulation_traits_3",
    }
    if name in traits_map:
        traits: TypeExpr = app(traits_map[name], "Kernel")
    else:
        traits = Named("Kernel")

    if periodic:
        v: TypeExpr = app("Periodic_3_triangulation_ds_vertex_base_3")
        cell: TypeExpr = app("Periodic_3_triangulation_ds_cell_base_3")
    else:
        v = app("Triangulation_ds_vertex_base_3")
        cell = app("Triangulation_ds_cell_base_3")

    if regular:
        v = app("Regular_triangulation_vertex_base_3", "Traits", v)
        cell = app("Regular_triangulation_cell_base_3", "Traits", cell)
    else:
        v = app("Triangulation_vertex_base_3", "Traits", v)
        cell = app("Triangulation_cell_base_3", "Traits", cell)

    if c.selection("TRI3", "vertex_with_info"):
        v = app("Triangulation_vertex_base_with_info_3", GENERIC_OBJECT, "Traits", v)
    if c.selection("TRI3", "cell_with_info"):
        cell = app("Triangulation_cell_base_with_info_3", GENERIC_OBJECT, "Traits", cell)
    if c.is_enabled("AS3"):
        if c.selection("AS3", "name") == "fixed":
            v = app("Fixed_alpha_shape_vertex_base_3", "Traits", v, "Ec")
            cell = app("Fixed_alpha_shape_cell_base_3", "Traits", cell, "Ec")
        else:
            v = app("Alpha_shape_vertex_base_3", "Traits", v, "Ec")
            cell = app("Alpha_shape_cell_base_3", "Traits", cell, "Ec")
    if c.selection("TRI3", "hierarchy"):
        v = app("Triangulation_hierarchy_vertex_base_3", v)

    concurrency = "Parallel_tag" if c.selection("TRI3", "concurrency_name") == "parallel" else "Sequential_tag"
    tds = app("Triangulation_data_structure_3", v, cell, concurrency)

    template = {
        "plain": "Triangulation_3",
        "regular": "Regular_triangulation_3",
        "delaunay": "Delaunay_triangulation_3",
        "periodicPlain": "Periodic_3_triangulation_3",
        "periodicRegular": "Periodic_3_regular_triangulation_3",
        "periodicDelaunay": "Periodic_3_Delaunay_triangulation_3",
    }[name]
    args: list[TypeExpr | str] = ["Traits", "Tds"]
    if name == "delaunay":
        policy = "Fast_location" if c.selection("TRI3", "location_policy_name") == "fast" else "Compact_location"
        args.append(policy)
    tri: TypeExpr = app(template, *args)
    if c.selection("TRI3", "hierarchy"):
        wrap = "Periodic_3_triangulation_hierarchy_3" if periodic else "Triangulation_hierarchy_3"
        tri = app(wrap, tri)

    return ComposedTriangulation(traits=traits, vertex=v, cell_or_face=cell, tds=tds, triangulation=tri)

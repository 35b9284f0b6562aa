from typing import Iterator, overload
FT = float

class Kernel():
    class Point_2():
        @overload
        def __init__(self) -> None: ...
        @overload
        def __init__(self, p: Point_2) -> None: ...
        @overload
        def __init__(self, x: float, y: float) -> None: ...
        def x(self) -> FT: ...
        def y(self) -> FT: ...

    class Segment_2():
        @overload
        def __init__(self) -> None: ...
        @overload
        def __init__(self, s: Point_2, t: Point_2) -> None: ...
        def source(self) -> Point_2: ...
        def target(self) -> Point_2: ...
        def squared_length(self) -> FT: ...

    class Circle_2():
        @overload
        def __init__(self) -> None: ...
        @overload
        def __init__(self, c: Point_2, sr: FT) -> None: ...
        def center(self) -> Point_2: ...
        def squared_radius(self) -> FT: ...

@overload
def do_intersect(a: Iso_rectangle_2, b: Line_2) -> bool: ...
@overload
def do_intersect(a: Line_2, b: Iso_rectangle_2) -> bool: ...
@overload
def do_intersect(a: Iso_rectangle_2, b: Ray_2) -> bool: ...
@overload
def do_intersect(a: Ray_2, b: Iso_rectangle_2) -> bool: ...
@overload
def do_intersect(a: Iso_rectangle_2, b: Segment_2) -> bool: ...
@overload
def do_intersect(a: Segment_2, b: Iso_rectangle_2) -> bool: ...
@overload
def do_intersect(a: Iso_rectangle_2, b: Triangle_2) -> bool: ...
@overload
def do_intersect(a: Triangle_2, b: Iso_rectangle_2) -> bool: ...
@overload
def do_intersect(a: Iso_rectangle_2, b: Point_2) -> bool: ...
@overload
def do_intersect(a: Point_2, b: Iso_rectangle_2) -> bool: ...
@overload
def do_intersect(a: Iso_rectangle_2, b: Circle_2) -> bool: ...
@overload
def do_intersect(a: Circle_2, b: Iso_rectangle_2) -> bool: ...
@overload
def do_intersect(a: Line_2, b: Ray_2) -> bool: ...
@overload
def do_intersect(a: Ray_2, b: Line_2) -> bool: ...
@overload
def do_intersect(a: Line_2, b: Segment_2) -> bool: ...
@overload
def do_intersect(a: Segment_2, b: Line_2) -> bool: ...
@overload
def do_intersect(a: Line_2, b: Triangle_2) -> bool: ...
@overload
def do_intersect(a: Triangle_2, b: Line_2) -> bool: ...
@overload
def do_intersect(a: Line_2, b: Point_2) -> bool: ...
@overload
def do_intersect(a: Point_2, b: Line_2) -> bool: ...
@overload
def do_intersect(a: Line_2, b: Circle_2) -> bool: ...
@overload
def do_intersect(a: Circle_2, b: Line_2) -> bool: ...
@overload
def do_intersect(a: Ray_2, b: Segment_2) -> bool: ...
@overload
def do_intersect(a: Segment_2, b: Ray_2) -> bool: ...
@overload
def do_intersect(a: Ray_2, b: Triangle_2) -> bool: ...
@overload
def do_intersect(a: Triangle_2, b: Ray_2) -> bool: ...
@overload
def do_intersect(a: Ray_2, b: Point_2) -> bool: ...
@overload
def do_intersect(a: Point_2, b: Ray_2) -> bool: ...
@overload
def do_intersect(a: Segment_2, b: Triangle_2) -> bool: ...
@overload
def do_intersect(a: Triangle_2, b: Segment_2) -> bool: ...
@overload
def do_intersect(a: Segment_2, b: Point_2) -> bool: ...
@overload
def do_intersect(a: Point_2, b: Segment_2) -> bool: ...
@overload
def do_intersect(a: Triangle_2, b: Point_2) -> bool: ...
@overload
def do_intersect(a: Point_2, b: Triangle_2) -> bool: ...
@overload
def do_intersect(a: Point_2, b: Circle_2) -> bool: ...
@overload
def do_intersect(a: Circle_2, b: Point_2) -> bool: ...
@overload
def do_intersect(a: Circle_2, b: Circle_2) -> bool: ...
@overload
def do_intersect(a: Point_2, b: Point_2) -> bool: ...
@overload
def do_intersect(a: Triangle_2, b: Triangle_2) -> bool: ...
@overload
def do_intersect(a: Segment_2, b: Segment_2) -> bool: ...
@overload
def do_intersect(a: Ray_2, b: Ray_2) -> bool: ...
@overload
def do_intersect(a: Line_2, b: Line_2) -> bool: ...
@overload
def do_intersect(a: Iso_rectangle_2, b: Iso_rectangle_2) -> bool: ...

@overload
def intersection(a: Iso_rectangle_2, b: Line_2) -> object: ...
@overload
def intersection(a: Line_2, b: Iso_rectangle_2) -> object: ...
@overload
def intersection(a: Iso_rectangle_2, b: Ray_2) -> object: ...
@overload
def intersection(a: Ray_2, b: Iso_rectangle_2) -> object: ...
@overload
def intersection(a: Iso_rectangle_2, b: Segment_2) -> object: ...
@overload
def intersection(a: Segment_2, b: Iso_rectangle_2) -> object: ...
@overload
def intersection(a: Iso_rectangle_2, b: Triangle_2) -> object: ...
@overload
def intersection(a: Triangle_2, b: Iso_rectangle_2) -> object: ...
@overload
def intersection(a: Iso_rectangle_2, b: Point_2) -> object: ...
@overload
def intersection(a: Point_2, b: Iso_rectangle_2) -> object: ...
@overload
def intersection(a: Line_2, b: Ray_2) -> object: ...
@overload
def intersection(a: Ray_2, b: Line_2) -> object: ...
@overload
def intersection(a: Line_2, b: Segment_2) -> object: ...
@overload
def intersection(a: Segment_2, b: Line_2) -> object: ...
@overload
def intersection(a: Line_2, b: Triangle_2) -> object: ...
@overload
def intersection(a: Triangle_2, b: Line_2) -> object: ...
@overload
def intersection(a: Line_2, b: Point_2) -> object: ...
@overload
def intersection(a: Point_2, b: Line_2) -> object: ...
@overload
def intersection(a: Ray_2, b: Segment_2) -> object: ...
@overload
def intersection(a: Segment_2, b: Ray_2) -> object: ...
@overload
def intersection(a: Ray_2, b: Triangle_2) -> object: ...
@overload
def intersection(a: Triangle_2, b: Ray_2) -> object: ...
@overload
def intersection(a: Ray_2, b: Point_2) -> object: ...
@overload
def intersection(a: Point_2, b: Ray_2) -> object: ...
@overload
def intersection(a: Segment_2, b: Triangle_2) -> object: ...
@overload
def intersection(a: Triangle_2, b: Segment_2) -> object: ...
@overload
def intersection(a: Segment_2, b: Point_2) -> object: ...
@overload
def intersection(a: Point_2, b: Segment_2) -> object: ...
@overload
def intersection(a: Triangle_2, b: Point_2) -> object: ...
@overload
def intersection(a: Point_2, b: Triangle_2) -> object: ...
@overload
def intersection(a: Point_2, b: Point_2) -> object: ...
@overload
def intersection(a: Triangle_2, b: Triangle_2) -> object: ...
@overload
def intersection(a: Segment_2, b: Segment_2) -> object: ...
@overload
def intersection(a: Ray_2, b: Ray_2) -> object: ...
@overload
def intersection(a: Line_2, b: Line_2) -> object: ...
@overload
def intersection(a: Iso_rectangle_2, b: Iso_rectangle_2) -> object: ...

"""Geometry kernel backend selection.

The compiled extension is preferred when present; the pure-Python twin is
used otherwise (or when ``ARBISIM_PURE_PYTHON`` is set in the
environment). Both backends implement the same contracts and agree to
floating-point noise, so everything downstream is backend-agnostic.
"""

import os

from . import geom_py

if os.environ.get("ARBISIM_PURE_PYTHON"):
    _impl = geom_py
else:
    try:
        from . import _geom as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = geom_py

BACKEND = _impl.BACKEND_NAME

rect_corners = _impl.rect_corners
rect_corners_batch = _impl.rect_corners_batch
convex_overlap_area = _impl.convex_overlap_area
overlap_ratio_matrix = _impl.overlap_ratio_matrix
points_in_quads = _impl.points_in_quads

# cold-path helpers; only the python implementation exists
convex_clip = geom_py.convex_clip
polygon_area = geom_py.polygon_area

__all__ = [
    "BACKEND",
    "rect_corners",
    "rect_corners_batch",
    "convex_overlap_area",
    "overlap_ratio_matrix",
    "points_in_quads",
    "convex_clip",
    "polygon_area",
]

# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled geometry kernels.

Twin of ``geom_py``: identical algorithms (Sutherland-Hodgman clipping,
shoelace areas, bounding-circle prefilter) with C loops for the hot
rectangle-overlap and point-containment scans.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport cos, sin, sqrt

cnp.import_array()

BACKEND_NAME = "compiled"


cdef inline void _corners(double x, double y, double heading,
                          double length, double width,
                          double* cx, double* cy) nogil:
    cdef double c = cos(heading)
    cdef double s = sin(heading)
    cdef double hl = 0.5 * length
    cdef double hw = 0.5 * width
    # front-left, rear-left, rear-right, front-right (CCW)
    cx[0] = x + c * hl - s * hw
    cy[0] = y + s * hl + c * hw
    cx[1] = x - c * hl - s * hw
    cy[1] = y - s * hl + c * hw
    cx[2] = x - c * hl + s * hw
    cy[2] = y - s * hl - c * hw
    cx[3] = x + c * hl + s * hw
    cy[3] = y + s * hl - c * hw


cdef int _clip(double* sx, double* sy, int ns,
               double* cx, double* cy, int nc,
               double* ox, double* oy) nogil:
    """Clip convex subject (sx, sy) against convex CCW clip polygon.

    Writes the intersection polygon into (ox, oy); returns its vertex
    count. Buffers must hold at least ns + nc vertices.
    """
    cdef double ax[16]
    cdef double ay[16]
    cdef double bx[16]
    cdef double by[16]
    cdef int na, nb, i, j, jp
    cdef double ex, ey, d1, d2, t
    cdef double px1, py1, px2, py2

    na = ns
    for i in range(ns):
        ax[i] = sx[i]
        ay[i] = sy[i]

    for i in range(nc):
        if na == 0:
            return 0
        ex = cx[(i + 1) % nc] - cx[i]
        ey = cy[(i + 1) % nc] - cy[i]
        nb = 0
        for j in range(na):
            jp = j - 1
            if jp < 0:
                jp = na - 1
            px1 = ax[jp]
            py1 = ay[jp]
            px2 = ax[j]
            py2 = ay[j]
            d1 = ex * (py1 - cy[i]) - ey * (px1 - cx[i])
            d2 = ex * (py2 - cy[i]) - ey * (px2 - cx[i])
            if d2 >= 0.0:
                if d1 < 0.0:
                    t = d1 / (d1 - d2)
                    bx[nb] = px1 + t * (px2 - px1)
                    by[nb] = py1 + t * (py2 - py1)
                    nb += 1
                bx[nb] = px2
                by[nb] = py2
                nb += 1
            elif d1 >= 0.0:
                t = d1 / (d1 - d2)
                bx[nb] = px1 + t * (px2 - px1)
                by[nb] = py1 + t * (py2 - py1)
                nb += 1
        na = nb
        for j in range(nb):
            ax[j] = bx[j]
            ay[j] = by[j]

    for i in range(na):
        ox[i] = ax[i]
        oy[i] = ay[i]
    return na


cdef inline double _area(double* px, double* py, int n) nogil:
    cdef double acc = 0.0
    cdef int i, ip
    for i in range(n):
        ip = (i + 1) % n
        acc += px[i] * py[ip] - px[ip] * py[i]
    return 0.5 * acc


cdef double _overlap_area(double* ax, double* ay, int na,
                          double* bx, double* by, int nb) nogil:
    cdef double ox[16]
    cdef double oy[16]
    cdef int n = _clip(ax, ay, na, bx, by, nb, ox, oy)
    if n < 3:
        return 0.0
    cdef double a = _area(ox, oy, n)
    if a < 0.0:
        a = -a
    return a


def rect_corners(double x, double y, double heading, double length, double width):
    """Corners of an oriented rectangle centered at (x, y), CCW order."""
    cdef double cx[4]
    cdef double cy[4]
    _corners(x, y, heading, length, width, cx, cy)
    out = np.empty((4, 2), dtype=np.float64)
    cdef double[:, ::1] o = out
    cdef int i
    for i in range(4):
        o[i, 0] = cx[i]
        o[i, 1] = cy[i]
    return out


def rect_corners_batch(states, double length, double width):
    """Corners for N (x, y, heading) states, shape (N, 4, 2)."""
    cdef double[:, ::1] st = np.ascontiguousarray(states, dtype=np.float64)
    cdef Py_ssize_t n = st.shape[0]
    out = np.empty((n, 4, 2), dtype=np.float64)
    cdef double[:, :, ::1] o = out
    cdef double cx[4]
    cdef double cy[4]
    cdef Py_ssize_t k
    cdef int i
    for k in range(n):
        _corners(st[k, 0], st[k, 1], st[k, 2], length, width, cx, cy)
        for i in range(4):
            o[k, i, 0] = cx[i]
            o[k, i, 1] = cy[i]
    return out


def convex_overlap_area(a, b):
    """Area of the intersection of two convex CCW polygons."""
    cdef double[:, ::1] pa = np.ascontiguousarray(a, dtype=np.float64)
    cdef double[:, ::1] pb = np.ascontiguousarray(b, dtype=np.float64)
    cdef int na = <int>pa.shape[0]
    cdef int nb = <int>pb.shape[0]
    cdef double ax[8]
    cdef double ay[8]
    cdef double bx[8]
    cdef double by[8]
    cdef int i
    for i in range(na):
        ax[i] = pa[i, 0]
        ay[i] = pa[i, 1]
    for i in range(nb):
        bx[i] = pb[i, 0]
        by[i] = pb[i, 1]
    return _overlap_area(ax, ay, na, bx, by, nb)


def overlap_ratio_matrix(ego_states, ego_dims, agent_states, agent_dims):
    """Overlap ratio of the ego footprint with each agent at each sample.

    Same contract as the python backend: (T, A) ratios with ego area as
    denominator.
    """
    cdef double[:, ::1] es = np.ascontiguousarray(ego_states, dtype=np.float64)
    cdef double[:, :, ::1] ast = np.ascontiguousarray(agent_states, dtype=np.float64)
    cdef double[:, ::1] ad = np.ascontiguousarray(agent_dims, dtype=np.float64)
    cdef Py_ssize_t n_t = es.shape[0]
    cdef Py_ssize_t n_a = ast.shape[0]
    out = np.zeros((n_t, n_a), dtype=np.float64)
    cdef double[:, ::1] o = out
    if n_a == 0 or n_t == 0:
        return out

    cdef double el = float(ego_dims[0])
    cdef double ew = float(ego_dims[1])
    cdef double ego_area = el * ew
    cdef double ego_radius = 0.5 * sqrt(el * el + ew * ew)

    cdef double ecx[4]
    cdef double ecy[4]
    cdef double acx[4]
    cdef double acy[4]
    cdef Py_ssize_t t, a
    cdef double dx, dy, limit, area, ar

    with nogil:
        for t in range(n_t):
            _corners(es[t, 0], es[t, 1], es[t, 2], el, ew, ecx, ecy)
            for a in range(n_a):
                dx = ast[a, t, 0] - es[t, 0]
                dy = ast[a, t, 1] - es[t, 1]
                ar = 0.5 * sqrt(ad[a, 0] * ad[a, 0] + ad[a, 1] * ad[a, 1])
                limit = ego_radius + ar
                if dx * dx + dy * dy > limit * limit:
                    continue
                _corners(ast[a, t, 0], ast[a, t, 1], ast[a, t, 2],
                         ad[a, 0], ad[a, 1], acx, acy)
                area = _overlap_area(ecx, ecy, 4, acx, acy, 4)
                if area > 0.0:
                    o[t, a] = area / ego_area
    return out


def points_in_quads(points, quads, double eps=1e-9):
    """True for each point contained in at least one convex CCW quad."""
    cdef double[:, ::1] pts = np.ascontiguousarray(points, dtype=np.float64)
    cdef double[:, :, ::1] qs = np.ascontiguousarray(quads, dtype=np.float64)
    cdef Py_ssize_t n_p = pts.shape[0]
    cdef Py_ssize_t n_q = qs.shape[0]
    out = np.zeros(n_p, dtype=bool)
    cdef cnp.uint8_t[::1] o = out.view(np.uint8)
    cdef Py_ssize_t p, q
    cdef int i, inside
    cdef double px, py, cross

    if n_q == 0 or n_p == 0:
        return out
    with nogil:
        for p in range(n_p):
            px = pts[p, 0]
            py = pts[p, 1]
            for q in range(n_q):
                inside = 1
                for i in range(4):
                    cross = ((qs[q, (i + 1) % 4, 0] - qs[q, i, 0]) * (py - qs[q, i, 1])
                             - (qs[q, (i + 1) % 4, 1] - qs[q, i, 1]) * (px - qs[q, i, 0]))
                    if cross < -eps:
                        inside = 0
                        break
                if inside:
                    o[p] = 1
                    break
    return out

"""Pure-Python / numpy geometry kernels.

Fallback backend used when the compiled extension is unavailable. Mirrors
the semantics of ``_geom.pyx`` exactly: same clipping algorithm, same
treatment of degenerate inputs, so both backends agree to floating-point
noise on identical inputs.

Conventions: rectangles are (4, 2) float arrays of corners in
counter-clockwise order; pose states are (x, y, heading) triples.
"""

import math

import numpy as np

BACKEND_NAME = "python"


def rect_corners(x: float, y: float, heading: float, length: float, width: float) -> np.ndarray:
    """Corners of an oriented rectangle centered at (x, y), CCW order."""
    c = math.cos(heading)
    s = math.sin(heading)
    hl = 0.5 * length
    hw = 0.5 * width
    # front-left, rear-left, rear-right, front-right
    local = ((hl, hw), (-hl, hw), (-hl, -hw), (hl, -hw))
    out = np.empty((4, 2), dtype=np.float64)
    for i, (lx, ly) in enumerate(local):
        out[i, 0] = x + c * lx - s * ly
        out[i, 1] = y + s * lx + c * ly
    return out


def rect_corners_batch(states: np.ndarray, length: float, width: float) -> np.ndarray:
    """Corners for N (x, y, heading) states, shape (N, 4, 2)."""
    states = np.asarray(states, dtype=np.float64)
    c = np.cos(states[:, 2])
    s = np.sin(states[:, 2])
    hl = 0.5 * length
    hw = 0.5 * width
    local = np.array([(hl, hw), (-hl, hw), (-hl, -hw), (hl, -hw)])
    out = np.empty((states.shape[0], 4, 2), dtype=np.float64)
    for i, (lx, ly) in enumerate(local):
        out[:, i, 0] = states[:, 0] + c * lx - s * ly
        out[:, i, 1] = states[:, 1] + s * lx + c * ly
    return out


def polygon_area(poly) -> float:
    """Signed shoelace area (positive for CCW order)."""
    n = len(poly)
    acc = 0.0
    for i in range(n):
        x1, y1 = poly[i][0], poly[i][1]
        x2, y2 = poly[(i + 1) % n][0], poly[(i + 1) % n][1]
        acc += x1 * y2 - x2 * y1
    return 0.5 * acc


def convex_clip(subject, clip) -> list:
    """Sutherland-Hodgman clip of convex `subject` against convex CCW `clip`.

    Returns the intersection polygon as a list of (x, y) tuples; empty when
    disjoint.
    """
    output = [(float(p[0]), float(p[1])) for p in subject]
    nclip = len(clip)
    for i in range(nclip):
        if not output:
            return []
        cx1, cy1 = float(clip[i][0]), float(clip[i][1])
        cx2, cy2 = float(clip[(i + 1) % nclip][0]), float(clip[(i + 1) % nclip][1])
        ex = cx2 - cx1
        ey = cy2 - cy1
        points = output
        output = []
        n = len(points)
        for j in range(n):
            px1, py1 = points[j - 1]
            px2, py2 = points[j]
            d1 = ex * (py1 - cy1) - ey * (px1 - cx1)
            d2 = ex * (py2 - cy1) - ey * (px2 - cx1)
            if d2 >= 0.0:
                if d1 < 0.0:
                    t = d1 / (d1 - d2)
                    output.append((px1 + t * (px2 - px1), py1 + t * (py2 - py1)))
                output.append((px2, py2))
            elif d1 >= 0.0:
                t = d1 / (d1 - d2)
                output.append((px1 + t * (px2 - px1), py1 + t * (py2 - py1)))
    return output


def convex_overlap_area(a, b) -> float:
    """Area of the intersection of two convex CCW polygons."""
    inter = convex_clip(a, b)
    if len(inter) < 3:
        return 0.0
    return abs(polygon_area(inter))


def overlap_ratio_matrix(
    ego_states: np.ndarray,
    ego_dims,
    agent_states: np.ndarray,
    agent_dims: np.ndarray,
) -> np.ndarray:
    """Overlap ratio of the ego footprint with each agent at each sample.

    ego_states: (T, 3) poses, agent_states: (A, T, 3), agent_dims: (A, 2)
    as (length, width). Returns (T, A) ratios in [0, 1] with the ego
    footprint area as denominator. A cheap bounding-circle reject skips
    pairs that cannot overlap.
    """
    ego_states = np.asarray(ego_states, dtype=np.float64)
    agent_states = np.asarray(agent_states, dtype=np.float64)
    agent_dims = np.asarray(agent_dims, dtype=np.float64)
    n_t = ego_states.shape[0]
    n_a = agent_states.shape[0]
    out = np.zeros((n_t, n_a), dtype=np.float64)
    if n_a == 0 or n_t == 0:
        return out

    el, ew = float(ego_dims[0]), float(ego_dims[1])
    ego_area = el * ew
    ego_radius = 0.5 * math.hypot(el, ew)
    agent_radius = 0.5 * np.hypot(agent_dims[:, 0], agent_dims[:, 1])

    # bounding-circle prefilter, vectorized over all (t, a) pairs
    dx = agent_states[:, :, 0].T - ego_states[:, 0:1]
    dy = agent_states[:, :, 1].T - ego_states[:, 1:2]
    limit = ego_radius + agent_radius
    near = dx * dx + dy * dy <= (limit * limit)[None, :]
    if not near.any():
        return out

    ego_corners = rect_corners_batch(ego_states, el, ew)
    for t_idx, a_idx in zip(*np.nonzero(near)):
        ast = agent_states[a_idx, t_idx]
        ac = rect_corners(ast[0], ast[1], ast[2], agent_dims[a_idx, 0], agent_dims[a_idx, 1])
        area = convex_overlap_area(ego_corners[t_idx], ac)
        if area > 0.0:
            out[t_idx, a_idx] = area / ego_area
    return out


def points_in_quads(points: np.ndarray, quads: np.ndarray, eps: float = 1e-9) -> np.ndarray:
    """True for each point contained in at least one convex CCW quad."""
    points = np.asarray(points, dtype=np.float64)
    quads = np.asarray(quads, dtype=np.float64)
    n_p = points.shape[0]
    if quads.shape[0] == 0 or n_p == 0:
        return np.zeros(n_p, dtype=bool)
    inside_any = np.zeros(n_p, dtype=bool)
    px = points[:, 0]
    py = points[:, 1]
    for q in range(quads.shape[0]):
        quad = quads[q]
        inside = ~inside_any
        if not inside.any():
            break
        for i in range(4):
            x1, y1 = quad[i]
            x2, y2 = quad[(i + 1) % 4]
            cross = (x2 - x1) * (py - y1) - (y2 - y1) * (px - x1)
            inside = inside & (cross >= -eps)
            if not inside.any():
                break
        inside_any |= inside
    return inside_any

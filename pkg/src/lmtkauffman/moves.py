"""Scripted local moves for exercising invariance.

Curls (``add_kink``) change the framed polynomial by a known factor of
a or a^-1.  The two-crossing poke (``poke``) slides one edge over
another across a face they both border, and must not change it at all;
likewise the braid-word moves ``insert_cancelling_pair`` and
``triangle_pair``.
"""

from __future__ import annotations

from typing import Sequence

from .diagram import Crossing, Diagram, InvalidDiagramError, _reassemble


def add_kink(d: Diagram, edge: int | None = None, positive: bool = True) -> Diagram:
    """Add a curl on an edge, or on a free loop when edge is None.

    The new crossing is a self-crossing of sign +1 for positive, -1
    otherwise, so it multiplies the framed polynomial by a or a^-1.
    """
    n = len(d.crossings)
    delta, gamma = 2 * n + 1, 2 * n + 2
    if edge is None:
        if d.free_loops < 1:
            raise InvalidDiagramError("no free loop to curl")
        if positive:
            rec = Crossing((delta, delta, gamma, gamma), "r")
        else:
            rec = Crossing((delta, gamma, gamma, delta), "l")
        return Diagram(d.crossings + (rec,), d.free_loops - 1)
    ci, s = d.edge_in_end(edge)
    cs = list(d.crossings)
    es = list(cs[ci].edges)
    es[s] = delta
    cs[ci] = Crossing(tuple(es), cs[ci].tag)
    if positive:
        kink = Crossing((edge, delta, gamma, gamma), "r")
    else:
        kink = Crossing((edge, gamma, gamma, delta), "l")
    return Diagram(tuple(cs) + (kink,), d.free_loops)


def faces(d: Diagram) -> list[tuple[tuple[int, int], ...]]:
    """Faces of the diagram as cycles of arrival ends.

    An arrival end is the (crossing, slot) an edge runs into; turning
    right there, the next boundary edge of the same face is the one
    arriving from slot - 1.
    """
    m = d.end_matching()
    seen: set[tuple[int, int]] = set()
    out = []
    for start in sorted(m):
        if start in seen:
            continue
        face = []
        h = start
        while h not in seen:
            seen.add(h)
            face.append(h)
            ci, s = h
            h = m[(ci, (s - 1) % 4)]
        out.append(tuple(face))
    return out


def poke(
    d: Diagram, over_end: tuple[int, int], under_end: tuple[int, int]
) -> Diagram:
    """Push the edge arriving at over_end across a shared face, over
    the edge arriving at under_end.

    Both ends must lie on one face and belong to different edges.  The
    result differs from d by a single two-crossing slide, so every
    framed invariant must agree on the two diagrams.
    """
    for f in faces(d):
        if over_end in f and under_end in f:
            break
    else:
        raise InvalidDiagramError("the two ends do not border a common face")
    m = d.end_matching()
    if m[over_end] == under_end or over_end == under_end:
        raise InvalidDiagramError("poke needs two distinct edges")
    n = len(d.crossings)
    ha, hb = n, n + 1
    mm = dict(m)
    p_e, q_e = m[over_end], over_end
    p_f, q_f = m[under_end], under_end
    for x in (p_e, q_e, p_f, q_f):
        del mm[x]

    def link(x, y):
        mm[x] = y
        mm[y] = x

    # The poked edge crosses over at both new crossings: its ends sit on
    # the odd slots.
    link(p_e, (ha, 3))
    link((ha, 1), (hb, 1))
    link((hb, 3), q_e)
    link(p_f, (hb, 0))
    link((hb, 2), (ha, 0))
    link((ha, 2), q_f)
    return _reassemble(list(range(n)) + [ha, hb], mm, d.free_loops)


def first_poke(d: Diagram) -> Diagram:
    """A deterministic poke: the first eligible pair of face ends."""
    m = d.end_matching()
    for f in faces(d):
        for i in range(len(f)):
            for j in range(len(f)):
                if i == j:
                    continue
                if m[f[i]] == f[j] or f[i] == f[j]:
                    continue
                return poke(d, f[i], f[j])
    raise InvalidDiagramError("no face offers two distinct edges")


def all_pokes(d: Diagram, limit: int | None = None) -> list[Diagram]:
    """Every distinct poke of the diagram, optionally capped."""
    m = d.end_matching()
    out = []
    for f in faces(d):
        for i in range(len(f)):
            for j in range(len(f)):
                if i == j or m[f[i]] == f[j]:
                    continue
                out.append(poke(d, f[i], f[j]))
                if limit is not None and len(out) >= limit:
                    return out
    return out


def insert_cancelling_pair(
    word: Sequence[int], position: int, index: int, sign: int = 1
) -> list[int]:
    """A braid word with sigma_index sigma_index^-1 spliced in."""
    w = list(word)
    return w[:position] + [sign * index, -sign * index] + w[position:]


def triangle_pair(word: Sequence[int], index: int) -> tuple[list[int], list[int]]:
    """Two braid words whose closures differ by one triangle slide.

    Appends the two sides of sigma_i sigma_{i+1} sigma_i =
    sigma_{i+1} sigma_i sigma_{i+1}; close both on at least index + 2
    strands.
    """
    left = list(word) + [index, index + 1, index]
    right = list(word) + [index + 1, index, index + 1]
    return left, right

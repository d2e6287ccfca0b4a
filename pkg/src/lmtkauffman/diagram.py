"""Planar diagrams of framed links as crossing lists.

A diagram is a set of 4-valent crossing records plus a count of
crossing-free loops.  Each record lists its four incident edge ends
counterclockwise starting from the incoming under-strand edge, so slot 0
is always the under-strand entry and slot 2 its exit.  The tag says
where the over-strand enters: ``r`` at slot 3, ``l`` at slot 1.  Under
the reference orientation (every strand traversed the way the records
point) an ``r`` crossing counts +1 and an ``l`` crossing -1.

Edges are numbered 1..2n with every id appearing exactly twice, once
leaving a crossing and once entering one.  Components are indexed by
their smallest edge id, with crossing-free loops last.  Orientation
masks and sublink masks are plain ints whose bit i addresses component
i.

The text format accepted by :func:`parse_pd` has an optional first line
``loops k`` followed by one crossing per line, ``Xr a b c d`` or
``Xl a b c d``.  ``#`` starts a comment.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple, Sequence


class DiagramError(ValueError):
    """Base for rejected diagram input."""


class PDSyntaxError(DiagramError):
    """Diagram text that does not match the record grammar."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class InvalidDiagramError(DiagramError):
    """Structurally broken crossing data."""


class InternalInvariantError(RuntimeError):
    """A quantity the mathematics forces came out wrong; engine bug."""


# Crossing sign under the reference orientation, keyed by tag.
TAG_SIGN = {"r": 1, "l": -1}

OrientationMask = int
SublinkMask = int


def _is_in_slot(tag: str, slot: int) -> bool:
    if slot == 0:
        return True
    if slot == 2:
        return False
    if tag == "r":
        return slot == 3
    return slot == 1


class Crossing(NamedTuple):
    """One crossing record: four edge ids counterclockwise plus a tag."""

    edges: tuple[int, int, int, int]
    tag: str

    def switched(self) -> "Crossing":
        """The same crossing with the other strand on top.

        The record is re-rooted at the new under-strand entry (the old
        over-strand entry), which keeps the counterclockwise order and
        every edge's role intact.
        """
        e1, e2, e3, e4 = self.edges
        if self.tag == "r":
            return Crossing((e4, e1, e2, e3), "l")
        return Crossing((e2, e3, e4, e1), "r")


@dataclass(frozen=True)
class Diagram:
    """An unoriented framed link diagram.

    Immutable; all editing operations return new diagrams.  Derived
    structure (components, end maps) is computed once on demand.
    """

    crossings: tuple[Crossing, ...]
    free_loops: int = 0

    def __post_init__(self):
        if self.free_loops < 0:
            raise InvalidDiagramError("negative free loop count")
        n = len(self.crossings)
        occ: dict[int, list[tuple[int, int]]] = {}
        for i, c in enumerate(self.crossings):
            if c.tag not in ("r", "l"):
                raise InvalidDiagramError(f"crossing {i}: unknown tag {c.tag!r}")
            if len(c.edges) != 4:
                raise InvalidDiagramError(f"crossing {i}: needs exactly 4 edges")
            for s, e in enumerate(c.edges):
                occ.setdefault(e, []).append((i, s))
        if set(occ) != set(range(1, 2 * n + 1)):
            raise InvalidDiagramError("edge ids must be exactly 1..2n")
        for e, places in occ.items():
            if len(places) != 2:
                raise InvalidDiagramError(f"edge {e} appears {len(places)} times, expected 2")
            roles = sorted(_is_in_slot(self.crossings[i].tag, s) for i, s in places)
            if roles != [False, True]:
                raise InvalidDiagramError(
                    f"edge {e} must leave one crossing and enter one crossing"
                )

    # -- derived structure ------------------------------------------------

    @cached_property
    def _in_end(self) -> dict[int, tuple[int, int]]:
        out = {}
        for i, c in enumerate(self.crossings):
            for s, e in enumerate(c.edges):
                if _is_in_slot(c.tag, s):
                    out[e] = (i, s)
        return out

    @cached_property
    def _out_end(self) -> dict[int, tuple[int, int]]:
        out = {}
        for i, c in enumerate(self.crossings):
            for s, e in enumerate(c.edges):
                if not _is_in_slot(c.tag, s):
                    out[e] = (i, s)
        return out

    def edge_in_end(self, edge: int) -> tuple[int, int]:
        """(crossing index, slot) where the edge enters a crossing."""
        try:
            return self._in_end[edge]
        except KeyError:
            raise InvalidDiagramError(f"no edge {edge}") from None

    def edge_out_end(self, edge: int) -> tuple[int, int]:
        """(crossing index, slot) where the edge leaves a crossing."""
        try:
            return self._out_end[edge]
        except KeyError:
            raise InvalidDiagramError(f"no edge {edge}") from None

    def next_edge(self, edge: int) -> int:
        """The edge that continues this one through its entry crossing."""
        i, s = self.edge_in_end(edge)
        return self.crossings[i].edges[(s + 2) % 4]

    @cached_property
    def strand_components(self) -> tuple[tuple[int, ...], ...]:
        """Edge cycles of the components that touch crossings.

        Each cycle starts at its smallest edge id and the cycles are
        ordered by that id.
        """
        seen: set[int] = set()
        comps = []
        for e in range(1, 2 * len(self.crossings) + 1):
            if e in seen:
                continue
            cyc = []
            x = e
            while x not in seen:
                seen.add(x)
                cyc.append(x)
                x = self.next_edge(x)
            comps.append(tuple(cyc))
        return tuple(comps)

    def components(self) -> tuple[tuple[int, ...], ...]:
        return self.strand_components

    @property
    def num_components(self) -> int:
        return len(self.strand_components) + self.free_loops

    @cached_property
    def _edge_comp(self) -> dict[int, int]:
        out = {}
        for k, cyc in enumerate(self.strand_components):
            for e in cyc:
                out[e] = k
        return out

    @cached_property
    def _crossing_comps(self) -> tuple[tuple[int, int], ...]:
        # (component of under-strand, component of over-strand) per crossing
        return tuple(
            (self._edge_comp[c.edges[0]], self._edge_comp[c.edges[1]])
            for c in self.crossings
        )

    def end_matching(self) -> dict[tuple[int, int], tuple[int, int]]:
        """Pair each crossing end with the end its edge runs to."""
        m = {}
        for e in range(1, 2 * len(self.crossings) + 1):
            x = self._out_end[e]
            y = self._in_end[e]
            m[x] = y
            m[y] = x
        return m

    # -- orientation data -------------------------------------------------

    def _check_mask(self, mask: int, what: str) -> None:
        if mask < 0 or mask >= (1 << self.num_components):
            raise InvalidDiagramError(
                f"{what} {mask:#b} addresses more than {self.num_components} components"
            )

    def crossing_sign(self, ci: int, mask: OrientationMask = 0) -> int:
        """Sign of one crossing under the orientation given by mask."""
        if not 0 <= ci < len(self.crossings):
            raise InvalidDiagramError(f"crossing not found: {ci}")
        self._check_mask(mask, "orientation mask")
        u, o = self._crossing_comps[ci]
        sign = TAG_SIGN[self.crossings[ci].tag]
        if (mask >> u) & 1:
            sign = -sign
        if (mask >> o) & 1:
            sign = -sign
        return sign

    def writhe(self, mask: OrientationMask = 0) -> int:
        self._check_mask(mask, "orientation mask")
        return sum(self.crossing_sign(i, mask) for i in range(len(self.crossings)))

    def self_writhe(self) -> int:
        """Writhe counting only crossings of a component with itself.

        Reversing any component flips both strands of such a crossing,
        so this does not depend on orientation.
        """
        return sum(
            TAG_SIGN[c.tag]
            for i, c in enumerate(self.crossings)
            if self._crossing_comps[i][0] == self._crossing_comps[i][1]
        )

    def linking_number(self, mask: OrientationMask, submask: SublinkMask) -> int:
        """Linking number of the sublink in submask with everything else.

        Half the signed count of crossings between the two parts.  The
        count is forced even, so an odd total is reported as an engine
        bug rather than rounded.
        """
        self._check_mask(mask, "orientation mask")
        self._check_mask(submask, "sublink mask")
        total = 0
        for i in range(len(self.crossings)):
            u, o = self._crossing_comps[i]
            if u == o:
                continue
            if ((submask >> u) & 1) != ((submask >> o) & 1):
                total += self.crossing_sign(i, mask)
        if total % 2:
            raise InternalInvariantError(
                "odd crossing count between a sublink and its complement"
            )
        return total // 2

    # -- traversal --------------------------------------------------------

    def passages(
        self,
        component_order: Sequence[int] | None = None,
        basepoints: Sequence[int] | Mapping[int, int] | None = None,
    ) -> list[tuple[int, bool]]:
        """Crossing visits in traversal order as (crossing, is_under).

        Components are walked in component_order (default: as indexed),
        each one starting at its basepoint edge (default: its smallest).
        basepoints is indexed by component index, not by order position.
        """
        comps = self.strand_components
        if component_order is None:
            order: Sequence[int] = range(len(comps))
        else:
            order = tuple(component_order)
            if sorted(order) != list(range(len(comps))):
                raise InvalidDiagramError(
                    "component order must be a permutation of the strand components"
                )
        out = []
        for k in order:
            cyc = comps[k]
            b = cyc[0]
            if basepoints is not None:
                b = basepoints[k]
                if b not in cyc:
                    raise InvalidDiagramError(f"basepoint {b} is not on component {k}")
            i0 = cyc.index(b)
            for e in cyc[i0:] + cyc[:i0]:
                ci, s = self._in_end[e]
                out.append((ci, s % 2 == 0))
        return out

    # -- editing ----------------------------------------------------------

    def switch(self, ci: int) -> "Diagram":
        """Exchange over and under strands at one crossing."""
        if not 0 <= ci < len(self.crossings):
            raise InvalidDiagramError(f"crossing not found: {ci}")
        cs = list(self.crossings)
        cs[ci] = cs[ci].switched()
        return Diagram(tuple(cs), self.free_loops)

    def mirror(self) -> "Diagram":
        """Exchange over and under strands everywhere."""
        return Diagram(tuple(c.switched() for c in self.crossings), self.free_loops)

    def smooth(self, ci: int, which: str) -> "Diagram":
        """Remove a crossing by joining its ends in pairs.

        ``A`` joins slots 0-1 and 2-3, ``B`` joins slots 0-3 and 1-2.
        Either way the two strands are rewired without crossing, so the
        result has one crossing fewer; strands that close up with no
        crossings left become free loops.  A joined pair can fuse two
        entries or two exits, so the whole diagram is retraversed and
        its records rebuilt from scratch.
        """
        n = len(self.crossings)
        if not 0 <= ci < n:
            raise InvalidDiagramError(f"crossing not found: {ci}")
        if which not in ("A", "B"):
            raise InvalidDiagramError(f"smoothing must be 'A' or 'B', got {which!r}")
        pair = {"A": {0: 1, 1: 0, 2: 3, 3: 2}, "B": {0: 3, 3: 0, 1: 2, 2: 1}}[which]
        m = self.end_matching()
        kept = [i for i in range(n) if i != ci]
        new_m: dict[tuple[int, int], tuple[int, int]] = {}
        consumed: set[tuple[int, int]] = set()
        for h in kept:
            for s in range(4):
                x = (h, s)
                if x in new_m:
                    continue
                y = m[x]
                while y[0] == ci:
                    consumed.add(y)
                    y2 = (ci, pair[y[1]])
                    consumed.add(y2)
                    y = m[y2]
                new_m[x] = y
                new_m[y] = x
        loops_added = 0
        remaining = {(ci, s) for s in range(4)} - consumed
        while remaining:
            u = min(remaining)
            cur = u
            while True:
                w = m[cur]
                remaining.discard(cur)
                remaining.discard(w)
                cur = (ci, pair[w[1]])
                if cur == u:
                    break
            loops_added += 1
        return _reassemble(kept, new_m, self.free_loops + loops_added)

    def distant_union(self, other: "Diagram") -> "Diagram":
        """Place two diagrams side by side with nothing shared."""
        shift = 2 * len(self.crossings)
        shifted = tuple(
            Crossing(tuple(e + shift for e in c.edges), c.tag) for c in other.crossings
        )
        return Diagram(self.crossings + shifted, self.free_loops + other.free_loops)

    # -- canonical form ---------------------------------------------------

    def canonical_code(self) -> str:
        """A string that is equal for diagrams differing only by labels.

        The code is the lexicographically smallest event stream over
        every choice of component order, starting end and direction.
        Each crossing visit emits its role and a first-visit label; the
        second visit also emits a handedness bit.  Minimizing over
        directions means two diagrams whose traversal data differ by
        reversing some strands share the code: the clasp and its mirror
        collide this way.  Every quantity the skein recursion consumes
        (signs, roles, smoothing reconnections) is a function of the
        stream, so equal codes always mean equal polynomials and the
        code is safe as a cache key.
        """
        code = self.__dict__.get("_code")
        if code is None:
            code = self._compute_code()
            self.__dict__["_code"] = code
        return code

    def _compute_code(self) -> str:
        n = len(self.crossings)
        header = [self.free_loops, n]
        if n == 0:
            return ",".join(map(str, header))
        matching = self.end_matching()
        total_ends = 4 * n
        sep = -1
        best: list[int] | None = None

        def walk(start, labels, first_slot):
            sub = [sep]
            add_labels: dict[int, int] = {}
            add_first: dict[int, int] = {}
            ends = []
            cur = start
            while True:
                h, s = cur
                role = 0 if s % 2 == 0 else 1
                lbl = labels.get(h)
                if lbl is None:
                    lbl = add_labels.get(h)
                second = lbl is not None
                if not second:
                    lbl = len(labels) + len(add_labels)
                    add_labels[h] = lbl
                    add_first[h] = s
                sub.append(role)
                sub.append(lbl)
                if second:
                    f = first_slot.get(h, add_first.get(h))
                    u, o = (s, f) if s % 2 == 0 else (f, s)
                    sub.append(0 if o == (u + 1) % 4 else 1)
                exit_end = (h, (s + 2) % 4)
                ends.append(cur)
                ends.append(exit_end)
                nxt = matching[exit_end]
                if nxt == start:
                    break
                cur = nxt
            return sub, ends, add_labels, add_first

        def rec(used, labels, first_slot, stream):
            nonlocal best
            if len(used) == total_ends:
                if best is None or stream < best:
                    best = list(stream)
                return
            for h in range(n):
                for s in range(4):
                    e = (h, s)
                    if e in used:
                        continue
                    sub, ends, addl, addf = walk(e, labels, first_slot)
                    new_stream = stream + sub
                    if best is not None and new_stream > best[: len(new_stream)]:
                        continue
                    rec(
                        used | set(ends),
                        {**labels, **addl},
                        {**first_slot, **addf},
                        new_stream,
                    )

        rec(frozenset(), {}, {}, header)
        assert best is not None
        return ",".join(map(str, best))


def _reassemble(
    handles: Iterable[int],
    matching: Mapping[tuple[int, int], tuple[int, int]],
    free_loops: int,
) -> Diagram:
    """Rebuild crossing records from bare crossing geometry.

    handles name the surviving crossings; matching pairs their ends
    (handle, slot) along the connecting arcs.  Under-strand diagonals
    are the even slots.  The strands are retraversed from the smallest
    unused end, edges renumbered in traversal order, and each record's
    tag rederived from where the two passes enter.
    """
    used: set[tuple[int, int]] = set()
    arc_at: dict[tuple[int, int], int] = {}
    under_entry: dict[int, int] = {}
    over_entry: dict[int, int] = {}
    visit_order: list[int] = []
    next_arc = 1
    for start in sorted((h, s) for h in handles for s in range(4)):
        if start in used:
            continue
        cur = start
        while True:
            h, s = cur
            used.add(cur)
            if h not in under_entry and h not in over_entry:
                visit_order.append(h)
            if s % 2 == 0:
                under_entry[h] = s
            else:
                over_entry[h] = s
            exit_end = (h, (s + 2) % 4)
            used.add(exit_end)
            nxt = matching[exit_end]
            arc_at[exit_end] = next_arc
            arc_at[nxt] = next_arc
            next_arc += 1
            cur = nxt
            if cur == start:
                break
    records = []
    for h in visit_order:
        u = under_entry[h]
        o = over_entry[h]
        tag = "l" if o == (u + 1) % 4 else "r"
        edges = tuple(arc_at[(h, (u + k) % 4)] for k in range(4))
        records.append(Crossing(edges, tag))
    return Diagram(tuple(records), free_loops)


def parse_pd(text: str) -> Diagram:
    """Parse diagram text into a Diagram.

    Edge ids in the text may be any distinct positive integers; they are
    renumbered to 1..2n preserving order.
    """
    loops = 0
    records: list[Crossing] = []
    header_allowed = True
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if toks[0] == "loops":
            if not header_allowed:
                raise PDSyntaxError("loops header must be the first record", lineno)
            if len(toks) != 2 or not toks[1].isdigit():
                raise PDSyntaxError("loops header needs one nonnegative count", lineno)
            loops = int(toks[1])
            header_allowed = False
            continue
        header_allowed = False
        if toks[0] not in ("Xr", "Xl"):
            raise PDSyntaxError(f"unknown record {toks[0]!r}", lineno)
        if len(toks) != 5:
            raise PDSyntaxError("crossing record needs 4 edge ids", lineno)
        try:
            edges = tuple(int(t) for t in toks[1:])
        except ValueError:
            raise PDSyntaxError("edge ids must be integers", lineno) from None
        if any(e <= 0 for e in edges):
            raise PDSyntaxError("edge ids must be positive", lineno)
        records.append(Crossing(edges, toks[0][1]))
    ids = sorted({e for c in records for e in c.edges})
    remap = {e: i for i, e in enumerate(ids, start=1)}
    normalized = tuple(
        Crossing(tuple(remap[e] for e in c.edges), c.tag) for c in records
    )
    return Diagram(normalized, loops)


def to_pd_text(d: Diagram) -> str:
    """Diagram text that parses back to an equal diagram."""
    lines = []
    if d.free_loops:
        lines.append(f"loops {d.free_loops}")
    for c in d.crossings:
        lines.append(f"X{c.tag} {c.edges[0]} {c.edges[1]} {c.edges[2]} {c.edges[3]}")
    return "\n".join(lines) + ("\n" if lines else "")

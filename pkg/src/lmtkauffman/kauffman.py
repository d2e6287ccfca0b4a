"""The two-variable polynomial of framed link diagrams.

``lambda_poly`` is the framed (regular isotopy) invariant fixed by three
rules: the zero-crossing circle has value 1, a positive or negative curl
multiplies the value by a or a^-1, and at any crossing the values of the
switched pair and the two smoothings satisfy

    V(crossing) + V(switched) = z * (V(smooth A) + V(smooth B)).

A union with a split circle multiplies the value by
delta = (a + a^-1) z^-1 - 1.

The computation descends on diagrams: walking the strands from their
basepoints, a crossing first met on its under-strand is a defect.  With
no defects the diagram is a stack of unknotted components and the value
is a^(self writhe) * delta^(components - 1); otherwise the first defect
is resolved with the switch rule above.  Switching never touches the
strand structure, so the defect count drops by exactly one, and each
smoothing removes a crossing, which makes the recursion finite.

``f_oriented`` rescales by a^(-writhe), which makes the value stable
under curls as well, and ``specialized_f`` evaluates that at
z = -a - a^-1.

Intermediate results are cached per invocation under the diagram's
canonical code.  Set the environment variable LMT_NO_MEMO=1 to compute
with no cache; results are identical either way.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Mapping, Sequence

from .diagram import Diagram
from .laurent import LaurentA, LaurentAZ

# Value of one extra split circle.
DELTA = LaurentAZ({(1, -1): 1, (-1, -1): 1, (0, 0): -1})

_Z = LaurentAZ({(0, 1): 1})


class EmptyDiagramError(ValueError):
    """The invariant is defined for nonempty links only."""


@dataclass(frozen=True)
class SkeinTask:
    """A diagram bundled with the traversal choices used to drive it.

    The polynomial does not depend on these choices; they only steer
    which skein tree gets expanded.
    """

    diagram: Diagram
    component_order: tuple[int, ...] | None = None
    basepoints: tuple[int, ...] | None = None

    def run(self, memo: dict | None = None) -> LaurentAZ:
        return lambda_poly(
            self.diagram,
            component_order=self.component_order,
            basepoints=self.basepoints,
            memo=memo,
        )


def first_defect(
    d: Diagram,
    component_order: Sequence[int] | None = None,
    basepoints: Sequence[int] | Mapping[int, int] | None = None,
) -> int | None:
    """First crossing met on its under-strand, or None if descending."""
    seen: set[int] = set()
    for ci, under in d.passages(component_order, basepoints):
        if ci in seen:
            continue
        seen.add(ci)
        if under:
            return ci
    return None


def lambda_poly(
    d: Diagram,
    *,
    component_order: Sequence[int] | None = None,
    basepoints: Sequence[int] | Mapping[int, int] | None = None,
    memo: dict | None = None,
) -> LaurentAZ:
    """The framed-link polynomial of the diagram.

    component_order and basepoints pick the traversal; any choice gives
    the same polynomial.  memo, if given, is shared across calls, which
    is safe for exactly that reason.
    """
    if d.num_components == 0:
        raise EmptyDiagramError("the empty diagram has no polynomial")
    if memo is None and os.environ.get("LMT_NO_MEMO") != "1":
        memo = {}
    return _lambda(d, component_order, basepoints, memo)


def _lambda(d, order, bps, memo) -> LaurentAZ:
    if memo is not None:
        key = d.canonical_code()
        hit = memo.get(key)
        if hit is not None:
            return hit
    x = first_defect(d, order, bps)
    if x is None:
        val = LaurentAZ.monomial(1, d.self_writhe()) * DELTA ** (d.num_components - 1)
    else:
        val = -_lambda(d.switch(x), order, bps, memo) + _Z * (
            _lambda(d.smooth(x, "A"), None, None, memo)
            + _lambda(d.smooth(x, "B"), None, None, memo)
        )
    if memo is not None:
        memo[key] = val
    return val


def f_framed(d: Diagram, **kwargs) -> LaurentAZ:
    """Alias of lambda_poly: the invariant of the framed link itself."""
    return lambda_poly(d, **kwargs)


def f_oriented(d: Diagram, mask: int = 0, **kwargs) -> LaurentAZ:
    """The curl-stable polynomial a^(-writhe) * lambda under mask."""
    return LaurentAZ.monomial(1, -d.writhe(mask)) * lambda_poly(d, **kwargs)


def specialized_f(d: Diagram, mask: int = 0, **kwargs) -> LaurentA:
    """f_oriented evaluated at z = -a - a^-1."""
    return f_oriented(d, mask, **kwargs).substitute_z()

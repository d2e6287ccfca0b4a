import itertools
import random

import pytest

from lmtkauffman.braid import braid_closure, random_closure
from lmtkauffman.corpus import get
from lmtkauffman.diagram import Diagram, parse_pd
from lmtkauffman.kauffman import (
    DELTA,
    EmptyDiagramError,
    SkeinTask,
    f_framed,
    f_oriented,
    first_defect,
    lambda_poly,
    specialized_f,
)
from lmtkauffman.laurent import LaurentA, LaurentAZ

Z = LaurentAZ.monomial(1, 0, 1)


def test_circle_is_one():
    assert lambda_poly(parse_pd("loops 1\n")) == LaurentAZ.one()


def test_split_circles_multiply_by_delta():
    for k in range(1, 5):
        assert lambda_poly(Diagram((), k)) == DELTA ** (k - 1)


def test_empty_diagram_rejected():
    with pytest.raises(EmptyDiagramError):
        lambda_poly(Diagram((), 0))


def test_single_curls():
    assert lambda_poly(parse_pd("Xr 1 1 2 2\n")) == LaurentAZ.monomial(1, 1)
    assert lambda_poly(parse_pd("Xl 1 2 2 1\n")) == LaurentAZ.monomial(1, -1)


def test_clasp_value_frozen():
    # switching one clasp crossing lets the components pull apart, so the
    # switched diagram is worth delta; the smoothings are the two single
    # curls (a and a^-1); the relation then forces this value
    expected = LaurentAZ({(1, 1): 1, (-1, 1): 1, (0, 0): 1, (1, -1): -1, (-1, -1): -1})
    assert lambda_poly(get("hopf_pos").diagram()) == expected


def test_trefoil_value_frozen():
    # from the clasp value via one switch: the switched diagram reduces
    # to a single positive curl (a), one smoothing is the clasp, and the
    # other is a circle with two negative curls (a^-2)
    expected = LaurentAZ(
        {(1, 2): 1, (-1, 2): 1, (0, 1): 1, (-2, 1): 1, (1, 0): -2, (-1, 0): -1}
    )
    assert lambda_poly(get("trefoil_right").diagram()) == expected


def test_skein_relation_at_every_crossing():
    rng = random.Random(20)
    diagrams = [get(n).diagram() for n in ("hopf_pos", "trefoil_left", "figure_eight")]
    diagrams += [random_closure(rng, 6) for _ in range(25)]
    for d in diagrams:
        lam = lambda_poly(d)
        for ci in range(len(d.crossings)):
            lhs = lam + lambda_poly(d.switch(ci))
            rhs = Z * (lambda_poly(d.smooth(ci, "A")) + lambda_poly(d.smooth(ci, "B")))
            assert lhs == rhs


def test_mirror_inverts_a():
    rng = random.Random(21)
    for _ in range(30):
        d = random_closure(rng, 6)
        assert lambda_poly(d.mirror()) == lambda_poly(d).invert_a()


def test_distant_union_multiplies_with_delta():
    rng = random.Random(22)
    for _ in range(15):
        d1 = random_closure(rng, 5)
        d2 = random_closure(rng, 5)
        u = d1.distant_union(d2)
        assert lambda_poly(u) == DELTA * lambda_poly(d1) * lambda_poly(d2)


def test_amphichiral_diagram_is_a_palindrome_in_a():
    lam = lambda_poly(get("figure_eight").diagram())
    assert lam == lam.invert_a()


def test_component_order_and_basepoints_do_not_matter():
    rng = random.Random(23)
    checked = 0
    while checked < 40:
        d = random_closure(rng, 6)
        parts = d.strand_components
        lam = lambda_poly(d)
        for perm in itertools.permutations(range(len(parts))):
            assert lambda_poly(d, component_order=perm) == lam
        bps = tuple(rng.choice(c) for c in parts)
        assert lambda_poly(d, basepoints=bps) == lam
        checked += 1


def test_skein_task_runs_with_choices():
    d = get("whitehead").diagram()
    base = SkeinTask(d).run()
    assert SkeinTask(d, component_order=(1, 0)).run() == base
    bps = tuple(c[-1] for c in d.strand_components)
    assert SkeinTask(d, basepoints=bps).run() == base


def test_memo_and_no_memo_agree(monkeypatch):
    rng = random.Random(24)
    ds = [random_closure(rng, 6) for _ in range(15)]
    plain = [lambda_poly(d) for d in ds]
    monkeypatch.setenv("LMT_NO_MEMO", "1")
    assert [lambda_poly(d) for d in ds] == plain


def test_shared_memo_is_transparent():
    memo = {}
    d1 = get("trefoil_right").diagram()
    d2 = get("torus_2_4").diagram()
    a1 = lambda_poly(d1, memo=memo)
    a2 = lambda_poly(d2, memo=memo)
    assert a1 == lambda_poly(d1)
    assert a2 == lambda_poly(d2)
    assert memo


def test_first_defect_depends_on_basepoint():
    assert first_defect(parse_pd("loops 1\n")) is None
    k = parse_pd("Xr 1 1 2 2\n")
    # from edge 1 the curl is met under first; from edge 2, over first
    assert first_defect(k) == 0
    assert first_defect(k, basepoints=(2,)) is None


def test_oriented_rescaling():
    d = get("hopf_pos").diagram()
    assert f_framed(d) == lambda_poly(d)
    assert f_oriented(d) == LaurentAZ.monomial(1, -2) * lambda_poly(d)
    # reversing one component changes writhe, hence the rescaling
    assert f_oriented(d, 0b01) == LaurentAZ.monomial(1, 2) * lambda_poly(d)


def test_specialized_f_on_knots_is_one():
    for name in ("unknot", "unknot_kink_pos", "trefoil_left", "figure_eight", "granny_sum"):
        assert specialized_f(get(name).diagram()) == LaurentA.one()


def test_specialized_f_orientation_dependence():
    d = get("hopf_pos").diagram()
    assert specialized_f(d) == LaurentA({0: -1, -4: -1})
    assert specialized_f(d, 0b01) == LaurentA({0: -1, 4: -1})

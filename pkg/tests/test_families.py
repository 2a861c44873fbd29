import pytest

from qressym.core import EXISTS, FORALL, Clause
from qressym.families import FamilyId, KBKFVars, QuparityVars, family_symmetries, gen_family
from qressym.symmetry import is_admissible, is_symmetry


def clauses(*cs):
    return tuple(Clause(tuple(c)) for c in cs)


def test_kbkf_1_exact():
    q = gen_family(FamilyId.KBKF, 1)
    assert q.prefix.blocks == ((EXISTS, (1, 2)), (FORALL, (3,)), (EXISTS, (4,)))
    assert q.matrix == clauses([-1, -2], [1, -3, -4], [2, 3, -4], [3, 4], [-3, 4])


def test_kbkf_2_by_name():
    # Written out from the clause definitions with x1..z2 = 1..8
    x1, y1, a1, x2, y2, a2, z1, z2 = range(1, 9)
    expected = clauses(
        [-x1, -y1],
        [x1, -a1, -x2, -y2], [y1, a1, -x2, -y2],
        [x2, -a2, -z1, -z2], [y2, a2, -z1, -z2],
        [a1, z1], [-a1, z1], [a2, z2], [-a2, z2],
    )
    assert gen_family("kbkf", 2).matrix == expected


def test_quparity_2():
    q = gen_family(FamilyId.QUPARITY, 2)
    assert q.num_vars == 5
    assert len(q.matrix) == 10
    v = QuparityVars(2)
    assert q.matrix[v.E(1) - 1] == Clause((3, 4, 5))
    assert q.matrix[v.E(2) - 1] == Clause((-3, -4, -5))
    assert q.prefix.blocks == ((EXISTS, (1, 2)), (FORALL, (3, 4)), (EXISTS, (5,)))


def test_quparity_3_named_clauses():
    n = 3
    q = gen_family("quparity", n)
    v = QuparityVars(n)
    x1, x2, x3, a1, a2, y2, y3 = 1, 2, 3, 4, 5, 6, 7
    assert q.matrix[v.A(2) - 1] == Clause((-x1, -x2, -y2, a1, a2))
    assert q.matrix[v.D(3) - 1] == Clause((y2, x3, -y3, a1, a2))
    assert q.matrix[v.C(3, primed=True) - 1] == Clause((y2, -x3, y3, -a1, -a2))
    assert q.matrix[v.E(1) - 1] == Clause((a1, a2, y3))


def test_kbkf_hard_1():
    q = gen_family(FamilyId.KBKF_HARD, 1)
    assert q.matrix[1] == Clause((1, -4, -5, 2))
    assert q.prefix.blocks == ((EXISTS, (1,)), (FORALL, (2,)), (EXISTS, (3,)),
                               (FORALL, (4,)), (EXISTS, (5,)))


@pytest.mark.parametrize("n", range(1, 8))
def test_kbkf_hard_adds_b_to_even_C(n):
    plain, hard = gen_family("kbkf", n), gen_family("kbkf-hard", n)
    hv, pv = KBKFVars(n, hard=True), KBKFVars(n)
    assert len(hard.matrix) == len(plain.matrix)
    ren = {}
    for j in range(1, n + 1):
        ren.update({pv.x(j): hv.x(j), pv.y(j): hv.y(j), pv.a(j): hv.a(j), pv.z(j): hv.z(j)})
    for k, (cp, ch) in enumerate(zip(plain.matrix, hard.matrix), 1):
        renamed = {(1 if l > 0 else -1) * ren[abs(l)] for l in cp}
        if k % 2 == 0 and k <= 2 * n:
            assert set(ch) == renamed | {hv.b(k // 2)}
        else:
            assert set(ch) == renamed


@pytest.mark.parametrize("n", range(1, 12))
def test_clause_counts(n):
    assert len(gen_family("kbkf", n).matrix) == 4 * n + 1
    assert len(gen_family("kbkf-hard", n).matrix) == 4 * n + 1
    if n > 1:
        assert len(gen_family("quparity", n).matrix) == 8 * (n - 1) + 2


@pytest.mark.parametrize("f,n", [("kbkf", 0), ("kbkf-hard", 0), ("quparity", 1), ("kbkf", -3)])
def test_n_out_of_range(f, n):
    with pytest.raises(ValueError):
        gen_family(f, n)
    with pytest.raises(ValueError):
        family_symmetries(f, n)


def test_unknown_family():
    with pytest.raises(ValueError):
        FamilyId.parse("qparity")


def test_symmetry_examples():
    (s1,) = family_symmetries("kbkf", 1)
    assert dict(s1.image) == {1: 2, 2: 1, 3: -3}
    q1, q2 = family_symmetries("quparity", 2)
    assert dict(q1.image) == {1: 2, 2: 1}
    assert dict(q2.image) == {2: -2, 3: -3, 4: -4, 5: -5}
    assert family_symmetries("kbkf-hard", 3) == []


@pytest.mark.parametrize("f,ns", [("kbkf", range(1, 7)), ("quparity", range(2, 7))])
def test_symmetries_are_symmetries(f, ns):
    for n in ns:
        q = gen_family(f, n)
        syms = family_symmetries(f, n)
        assert len(syms) == n
        assert all(is_symmetry(s, q) for s in syms)


@pytest.mark.parametrize("n", range(1, 7))
def test_kbkf_sigmas_not_admissible_on_hard(n):
    hard = gen_family("kbkf-hard", n)
    hv, pv = KBKFVars(n, hard=True), KBKFVars(n)
    from qressym.symmetry import Symmetry
    for i in range(1, n + 1):
        # the same swap expressed in hardened numbering
        s = Symmetry("s%d" % i, ((hv.x(i), hv.y(i)), (hv.y(i), hv.x(i)), (hv.a(i), -hv.a(i))))
        assert not is_admissible(s, hard.prefix)
        assert not is_symmetry(s, hard)

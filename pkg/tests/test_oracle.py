import pytest
from hypothesis import given, settings, strategies as st

from qressym.core import EXISTS, FORALL, QBF, Clause, Prefix
from qressym.families import family_symmetries, gen_family
from qressym.oracle import OracleLimitError, evaluate
from qressym.symmetry import apply_to_clause, breaker_clauses

from conftest import naive_eval


@st.composite
def small_qbfs(draw):
    nv = draw(st.integers(1, 7))
    order = draw(st.permutations(list(range(1, nv + 1))))
    quants = draw(st.lists(st.sampled_from([EXISTS, FORALL]), min_size=nv, max_size=nv))
    prefix = Prefix.from_blocks(*[(q, [v]) for v, q in zip(order, quants)])
    lit = st.integers(1, nv).flatmap(lambda v: st.sampled_from([v, -v]))
    clauses = draw(st.lists(st.lists(lit, min_size=1, max_size=4), max_size=10))
    return QBF(prefix, tuple(Clause(tuple(c)) for c in clauses))


@settings(max_examples=400, deadline=None)
@given(small_qbfs())
def test_matches_naive_semantics(q):
    assert evaluate(q) == naive_eval(q)


def test_unit():
    assert evaluate(QBF(Prefix.from_blocks((EXISTS, [1])), (Clause((1,)),))) is True


def test_simple_cases():
    p = Prefix.from_blocks((FORALL, [1]), (EXISTS, [2]))
    # forall x exists y. y <-> x
    assert evaluate(QBF(p, (Clause((-1, 2)), Clause((1, -2))))) is True
    p2 = Prefix.from_blocks((EXISTS, [2]), (FORALL, [1]))
    assert evaluate(QBF(p2, (Clause((-1, 2)), Clause((1, -2))))) is False
    assert evaluate(QBF(p, ())) is True
    assert evaluate(QBF(p, (Clause(()),))) is False


@pytest.mark.parametrize("n", range(1, 5))
def test_kbkf_false(n):
    assert evaluate(gen_family("kbkf", n)) is False


@pytest.mark.parametrize("n", range(1, 4))
def test_kbkf_hard_false(n):
    assert evaluate(gen_family("kbkf-hard", n)) is False


@pytest.mark.parametrize("n", range(2, 9))
def test_quparity_false(n):
    assert evaluate(gen_family("quparity", n)) is False


@pytest.mark.parametrize("f,n", [("kbkf", 3), ("quparity", 5)])
def test_breaker_and_symmetry_invariance(f, n):
    q = gen_family(f, n)
    syms = family_symmetries(f, n)
    assert evaluate(q.with_clauses(breaker_clauses(q, syms))) == evaluate(q)
    for s in syms:
        img = QBF(q.prefix, tuple(apply_to_clause(s, c) for c in q.matrix))
        assert sorted(img.matrix, key=lambda c: c.literals) == sorted(q.matrix, key=lambda c: c.literals)
        assert evaluate(img) == evaluate(q)


def test_limit():
    q = gen_family("kbkf", 7)  # 28 variables
    with pytest.raises(OracleLimitError):
        evaluate(q)
    assert evaluate(gen_family("kbkf", 5), max_vars=20) is False

import pytest
from hypothesis import given, strategies as st

from qressym.core import (EXISTS, FORALL, QBF, Clause, Prefix, QDIMACSError, normalize_clause,
                          parse_qdimacs, serialize_qdimacs)
from qressym.families import gen_family

lits = st.integers(min_value=-12, max_value=12).filter(lambda l: l != 0)


class TestNormalize:
    def test_duplicate_merge(self):
        assert normalize_clause([-1, -1]) == Clause((-1,))
        assert normalize_clause([-1, -1]).literals == (-1,)

    def test_canonical_order(self):
        assert normalize_clause([2, -1]).literals == (-1, 2)

    def test_tautology_flagged(self):
        c = normalize_clause([1, -1])
        assert c.literals == (-1, 1)
        assert c.is_tautology
        assert not normalize_clause([1, -2]).is_tautology

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            normalize_clause([1, 0])

    @given(st.lists(lits))
    def test_idempotent(self, ls):
        c = normalize_clause(ls)
        assert normalize_clause(c.literals) == c
        assert set(c) == set(ls)
        assert len(c) == len(set(ls))

    def test_negation_involution(self):
        for l in (1, -1, 7, -7):
            assert -(-l) == l


class TestPrefix:
    def test_merges_adjacent_blocks(self):
        p = Prefix.from_blocks((EXISTS, [1]), (EXISTS, [2]), (FORALL, [3]))
        assert p.blocks == ((EXISTS, (1, 2)), (FORALL, (3,)))

    def test_rejects_duplicate_variable(self):
        with pytest.raises(ValueError):
            Prefix.from_blocks((EXISTS, [1]), (FORALL, [1]))

    def test_rejects_empty_block(self):
        with pytest.raises(ValueError):
            Prefix.from_blocks((EXISTS, []))

    @given(st.permutations(list(range(1, 9))), st.lists(st.booleans(), min_size=8, max_size=8))
    def test_order_is_strict_total(self, perm, quants):
        p = Prefix.from_blocks(*[(EXISTS if b else FORALL, [v]) for v, b in zip(perm, quants)])
        for v in perm:
            assert not p.precedes(v, v)
            for w in perm:
                if v != w:
                    assert p.precedes(v, w) != p.precedes(w, v)
        assert p.variables == list(perm)

    def test_free_variable_rejected(self):
        with pytest.raises(ValueError):
            QBF(Prefix.from_blocks((EXISTS, [1])), (Clause((1, 2)),))


class TestQDIMACS:
    def test_parse_small(self):
        q = parse_qdimacs("p cnf 2 1\ne 1 0\na 2 0\n1 -2 0\n")
        assert q.prefix.blocks == ((EXISTS, (1,)), (FORALL, (2,)))
        assert q.matrix == (Clause((1, -2)),)

    def test_serialize_small(self):
        q = QBF(Prefix.from_blocks((EXISTS, [1]), (FORALL, [2])), (Clause((1, -2)),))
        assert serialize_qdimacs(q) == "p cnf 2 1\ne 1 0\na 2 0\n1 -2 0\n"

    def test_empty_matrix(self):
        q = QBF(Prefix.from_blocks((EXISTS, [1, 2])))
        assert serialize_qdimacs(q) == "p cnf 2 0\ne 1 2 0\n"
        assert parse_qdimacs(serialize_qdimacs(q)) == q

    def test_kbkf1_file(self, golden):
        q = parse_qdimacs((golden / "kbkf_1.qdimacs").read_text())
        assert q.num_vars == 4
        assert len(q.matrix) == 5
        assert q == gen_family("kbkf", 1)

    def test_comments_and_merging(self):
        q = parse_qdimacs("c hello\np cnf 3 1\ne 1 0\ne 2 0\na 3 0\nc mid\n1 2 3 0\n")
        assert q.prefix.blocks == ((EXISTS, (1, 2)), (FORALL, (3,)))

    @pytest.mark.parametrize("text", [
        "p cnf 1 1\ne 1 0\n2 0\n",           # undeclared variable
        "p cnf 2 1\ne 1 0\n1 0 2 0\n",       # literal 0
        "p cnf 2 2\ne 1 2 0\n1 2 0\n",       # clause count mismatch
        "p dnf 2 1\ne 1 2 0\n1 0\n",         # bad header
        "p cnf 2\ne 1 2 0\n",                # short header
        "e 1 0\np cnf 1 0\n",                # content before header
        "p cnf 2 1\ne 3 0\n1 0\n",           # quantified variable > nvars
        "p cnf 2 1\ne 1 0\n1 0\ne 2 0\n",    # prefix after clauses
        "p cnf 2 1\ne 1 0\na 1 0\n1 0\n",    # quantified twice
        "p cnf 2 1\ne 1 2 0\n1 2\n",         # unterminated clause
    ])
    def test_errors(self, text):
        with pytest.raises(QDIMACSError):
            parse_qdimacs(text)

    def test_free_matrix_variable_is_error(self):
        with pytest.raises(QDIMACSError):
            parse_qdimacs("p cnf 2 1\ne 1 0\n1 2 0\n")

    def test_tautology_accepted(self):
        q = parse_qdimacs("p cnf 1 1\ne 1 0\n1 -1 0\n")
        assert q.matrix[0].is_tautology

    def test_header_var_count_preserved(self):
        text = "p cnf 9 1\ne 1 2 0\n1 -2 0\n"
        assert serialize_qdimacs(parse_qdimacs(text)) == text

    @pytest.mark.parametrize("name", ["kbkf_1", "kbkf_2", "quparity_2", "kbkf_hard_1"])
    def test_golden_round_trip(self, golden, name):
        text = (golden / (name + ".qdimacs")).read_text()
        assert serialize_qdimacs(parse_qdimacs(text)) == text

    @pytest.mark.parametrize("family,n", [(f, n) for f in ("kbkf", "kbkf-hard") for n in range(1, 7)]
                             + [("quparity", n) for n in range(2, 8)])
    def test_family_round_trip(self, family, n):
        q = gen_family(family, n)
        assert parse_qdimacs(serialize_qdimacs(q)) == q

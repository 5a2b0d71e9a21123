import itertools
import math

import numpy as np
import pytest

from actshell.errors import NotABasis, NotALinearExtension, WrongBasisSet
from actshell.matroid import uniform, with_order
from actshell.orders import (
    KINDS,
    BasisPoset,
    build_poset,
    characterization_tables,
    count_linear_extensions,
    ext_characterizations,
    extension_orders,
    grade_violations,
    hasse,
    int_characterizations,
    is_linear_extension,
    iter_linear_extensions,
    leq_ext,
    leq_extint,
    leq_int,
    lex_order,
    linear_extensions,
    natural_grade,
    poset_violation,
    require_linear_extension,
    sample_linear_extensions,
)
from actshell.reference import EXT_ORDER_NONSHELLING, INT_ORDER_ACT_FAILURE, basis_of

b = basis_of


class TestDefinitions:
    def test_ext_examples(self, m0):
        assert leq_ext(m0, b("234"), b("345"))
        assert not leq_ext(m0, b("124"), b("135"))
        assert leq_ext(m0, b("124"), b("124"))

    def test_int_examples(self, m0):
        assert all(leq_int(m0, b("124"), B) for B in m0.bases)
        assert not leq_int(m0, b("235"), b("124"))
        ch = int_characterizations(m0, b("134"), b("234"))
        assert len(set(ch.values())) == 1
        assert ch[2] == leq_int(m0, b("134"), b("234"))

    def test_extint_examples(self, m0):
        assert all(leq_extint(m0, b("124"), B) for B in m0.bases)
        assert not leq_extint(m0, b("135"), b("234"))
        assert all(leq_extint(m0, B, B) for B in m0.bases)

    @pytest.mark.parametrize("leq", [leq_ext, leq_int, leq_extint])
    def test_rejects_non_basis(self, m0, leq):
        with pytest.raises(NotABasis):
            leq(m0, b("123"), b("124"))
        with pytest.raises(NotABasis):
            leq(m0, b("124"), b("123"))

    def test_unknown_kind(self, m0):
        with pytest.raises(ValueError):
            build_poset(m0, "bogus")


class TestCharacterizations:
    def test_pairwise_agreement_reference(self, m0):
        for A, B in itertools.product(m0.bases, repeat=2):
            assert len(set(ext_characterizations(m0, A, B).values())) == 1
            assert len(set(int_characterizations(m0, A, B).values())) == 1
            assert ext_characterizations(m0, A, B)[2] == leq_ext(m0, A, B)

    def test_tables_agree_with_single_pair_versions(self, m0):
        tables = characterization_tables(m0)
        for (x, A), (y, B) in itertools.product(enumerate(m0.bases), repeat=2):
            e = ext_characterizations(m0, A, B)
            i = int_characterizations(m0, A, B)
            for c in range(4):
                assert tables["ext"][c, x, y] == e[c + 1]
                assert tables["int"][c, x, y] == i[c + 1]

    def test_tables_on_corpus(self, corpus):
        for name, M in corpus:
            t = characterization_tables(M)
            for kind in ("ext", "int"):
                for c in range(1, 4):
                    assert (t[kind][c] == t[kind][0]).all(), (name, kind, c)
            assert (t["ext"][1] == build_poset(M, "ext").leq).all(), name
            assert (t["int"][1] == build_poset(M, "int").leq).all(), name


class TestPosets:
    def test_axioms_and_lex(self, small_matroid):
        M = small_matroid
        for kind in KINDS:
            P = build_poset(M, kind)
            assert poset_violation(P.leq) is None
            assert is_linear_extension(P, lex_order(M))

    def test_lex_extends_under_sampled_ground_orders(self, corpus):
        rng = np.random.default_rng(7)
        for name, M in corpus[::5]:
            for _ in range(3):
                N = with_order(M, [int(e) for e in rng.permutation(M.order)])
                for kind in KINDS:
                    assert is_linear_extension(build_poset(N, kind), lex_order(N)), (name, kind)

    def test_consistency_and_extint_extends_both(self, corpus):
        for name, M in corpus:
            ext, int_, ei = (build_poset(M, k).leq for k in KINDS)
            k = len(M.bases)
            assert not (int_ & ext.T & ~np.eye(k, dtype=bool)).any(), name
            assert not (ext & ~ei).any(), name
            assert not (int_ & ~ei).any(), name

    def test_violation_names(self):
        assert poset_violation(np.zeros((2, 2), dtype=bool)) == "reflexivity"
        assert poset_violation(np.ones((2, 2), dtype=bool)) == "antisymmetry"
        leq = np.eye(3, dtype=bool)
        leq[0, 1] = leq[1, 2] = True
        assert poset_violation(leq) == "transitivity"

    def test_reference_grades(self, m0):
        i345 = m0.basis_index[b("345")]
        ext, int_ = build_poset(m0, "ext"), build_poset(m0, "int")
        assert natural_grade(int_)[i345] == 3
        assert natural_grade(ext)[i345] == 2
        with pytest.raises(ValueError):
            natural_grade(build_poset(m0, "extint"))

    def test_graded_on_corpus(self, corpus):
        for name, M in corpus:
            for kind in ("ext", "int"):
                P = build_poset(M, kind)
                assert grade_violations(P, natural_grade(P)) == [], (name, kind)

    def test_hasse_is_transitive_reduction(self, small_matroid):
        for kind in KINDS:
            P = build_poset(small_matroid, kind)
            cover = set(hasse(P))
            k = P.size
            closure = np.eye(k, dtype=bool)
            for a, c in cover:
                closure[a, c] = True
            for _ in range(k):
                closure = closure | ((closure.astype(int) @ closure.astype(int)) > 0)
            assert (closure == P.leq).all()
            for a, c in cover:
                assert not any(P.less[a, x] and P.less[x, c] for x in range(k))

    # computed once and pinned; indices refer to 124,125,134,135,234,235,245,345
    GOLDEN = {
        "ext": [(0, 4), (0, 6), (1, 5), (1, 6), (2, 4), (3, 5), (4, 7), (5, 7), (6, 7)],
        "int": [(0, 1), (0, 2), (1, 3), (1, 6), (2, 3), (2, 4), (3, 5), (3, 7), (4, 5), (6, 7)],
        "extint": [(0, 1), (0, 2), (1, 3), (1, 6), (2, 3), (2, 4), (3, 5), (4, 5), (5, 7), (6, 7)],
    }

    @pytest.mark.parametrize("kind", KINDS)
    def test_reference_hasse_golden(self, m0, kind):
        assert hasse(build_poset(m0, kind)) == self.GOLDEN[kind]


def _is_lattice(leq: np.ndarray) -> bool:
    k = leq.shape[0]
    for x, y in itertools.combinations(range(k), 2):
        ups = [z for z in range(k) if leq[x, z] and leq[y, z]]
        if not any(all(leq[z, w] for w in ups) for z in ups):
            return False
        downs = [z for z in range(k) if leq[z, x] and leq[z, y]]
        if not any(all(leq[w, z] for w in downs) for z in downs):
            return False
    return True


def _adjoin(leq: np.ndarray, bottom: bool) -> np.ndarray:
    k = leq.shape[0]
    out = np.zeros((k + 1, k + 1), dtype=bool)
    out[:k, :k] = leq
    out[k, k] = True
    if bottom:
        out[k, :] = True
    else:
        out[:, k] = True
    return out


class TestLatticeProperty:
    """Optional check: ext plus a bottom, int plus a top, and extint itself are lattices."""

    def test_small_corpus(self, small_corpus):
        for name, M in small_corpus:
            assert _is_lattice(_adjoin(build_poset(M, "ext").leq, bottom=True)), name
            assert _is_lattice(_adjoin(build_poset(M, "int").leq, bottom=False)), name
            assert _is_lattice(build_poset(M, "extint").leq), name


class TestLinearExtensions:
    def test_reference_examples(self, m0):
        ext = build_poset(m0, "ext")
        int_ = build_poset(m0, "int")
        assert is_linear_extension(ext, [m0.basis_index[b(w)] for w in EXT_ORDER_NONSHELLING])
        assert is_linear_extension(int_, [m0.basis_index[b(w)] for w in INT_ORDER_ACT_FAILURE])

    def test_wrong_basis_set(self, m0):
        P = build_poset(m0, "ext")
        with pytest.raises(WrongBasisSet):
            is_linear_extension(P, [0, 1, 2])
        with pytest.raises(WrongBasisSet):
            is_linear_extension(P, [0, 0, 1, 2, 3, 4, 5, 6])

    def test_require(self, m0):
        P = build_poset(m0, "int")
        rev = list(reversed(lex_order(m0)))
        assert not is_linear_extension(P, rev)
        with pytest.raises(NotALinearExtension):
            require_linear_extension(P, rev)

    def test_single_basis(self):
        P = build_poset(uniform(3, 3), "extint")
        assert linear_extensions(P, 5, 0) == [(0,)]

    @pytest.mark.parametrize("k,limit", [(3, 100), (4, 10), (4, 24), (5, 50)])
    def test_antichain(self, k, limit):
        P = BasisPoset(_FakeMatroid(k), "ext", np.eye(k, dtype=bool))
        got = linear_extensions(P, limit, seed=1)
        assert len(got) == min(limit, math.factorial(k))
        assert len(set(got)) == len(got)
        assert all(sorted(o) == list(range(k)) for o in got)

    def test_enumeration_is_sorted_and_valid(self, m0):
        for kind in KINDS:
            P = build_poset(m0, kind)
            all_ = list(iter_linear_extensions(P))
            assert all_ == sorted(all_) and len(set(all_)) == len(all_)
            assert all(is_linear_extension(P, o) for o in all_)
            assert all_[0] == lex_order(m0)
            brute = [p for p in itertools.permutations(range(P.size)) if is_linear_extension(P, p)]
            assert sorted(brute) == all_
            assert count_linear_extensions(P, 10**6) == len(all_)

    def test_sampling_deterministic(self, m0):
        P = build_poset(m0, "extint")
        a = sample_linear_extensions(P, 20, seed=3)
        assert a == sample_linear_extensions(P, 20, seed=3)
        assert all(is_linear_extension(P, o) for o in a)
        assert len(set(a)) == len(a)

    def test_extension_orders_switches_to_sampling(self):
        P = BasisPoset(_FakeMatroid(5), "ext", np.eye(5, dtype=bool))
        orders, exhaustive = extension_orders(P, seed=0, exhaustive_limit=3, samples=5)
        assert not exhaustive and len(orders) == 5
        orders, exhaustive = extension_orders(P)
        assert exhaustive and len(orders) == 120

    def test_limit_must_be_positive(self, m0):
        with pytest.raises(ValueError):
            linear_extensions(build_poset(m0, "ext"), 0)


class _FakeMatroid:
    """Stand-in exposing only the basis count, for synthetic antichains."""

    def __init__(self, k):
        self.bases = tuple(range(k))

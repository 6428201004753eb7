from itertools import permutations, product

import pytest

from liesheets.classical import (
    LeviSpec,
    NilpotentOrbit,
    induce,
    is_induced,
    is_rigid,
    orbit_closure_leq,
    phenomenon1_counterexamples,
    valid_orbits,
)
from liesheets.partitions import (
    LieAlgebraKind,
    Partition,
    dominates,
    dual,
    enumerate_partitions,
    is_valid,
    orbit_dimension,
    parse_kind,
    parse_partition,
)

from oracles import compositions

P = parse_partition


def orbit(kind, lam):
    return NilpotentOrbit(parse_kind(kind), P(lam))


def classical_kinds(max_N):
    for fam in "BCD":
        for N in range(1, max_N + 1):
            try:
                yield LieAlgebraKind(fam, N).check_simple()
            except ValueError:
                pass


def gl_dim(nu):
    a = nu.n
    return a * a - sum(d * d for d in dual(nu))


def tail_orbits(kind):
    return [t for t in enumerate_partitions(kind.N) if is_valid(t, kind)]


def block_multisets(max_half, max_blocks):
    """Sorted tuples of 1..max_blocks positive block sizes with sum <= max_half."""
    out = []
    for r in range(1, max_blocks + 1):
        for blocks in product(range(1, max_half + 1), repeat=r):
            if sum(blocks) <= max_half and list(blocks) == sorted(blocks):
                out.append(blocks)
    return out


class TestTypes:
    def test_orbit_requires_validity(self):
        with pytest.raises(ValueError):
            orbit("D:8", "3,3,2")

    def test_levi_arithmetic(self):
        with pytest.raises(ValueError):
            LeviSpec(parse_kind("C:6"), (1,), 3)
        with pytest.raises(ValueError):
            LeviSpec(parse_kind("B:7"), (2,), 2)
        with pytest.raises(ValueError):
            LeviSpec(parse_kind("A:5"), (2, 2))
        levi = LeviSpec(parse_kind("C:4"), (2,), 0)
        assert levi.dim == 4 and levi.nilradical_dim == 3

    def test_valid_orbit_counts(self):
        # so_8 has 12 orbits; the very even [4,4] and [2^4] each label two of them
        assert len(valid_orbits(parse_kind("B:5"))) == 4
        assert len(valid_orbits(parse_kind("C:4"))) == 4
        assert len(valid_orbits(parse_kind("D:8"))) == 10


class TestClosure:
    def test_examples(self):
        assert orbit_closure_leq(orbit("D:8", "3,1^5"), orbit("D:8", "3,2,2,1"))
        assert orbit_closure_leq(orbit("D:8", "2,2,1^4"), orbit("D:8", "3,1^5"))
        for o in valid_orbits(parse_kind("C:6")):
            assert orbit_closure_leq(o, o)

    def test_kind_mismatch(self):
        with pytest.raises(ValueError):
            orbit_closure_leq(orbit("C:4", "1^4"), orbit("A:4", "1^4"))


class TestInduce:
    def test_type_a_torus(self):
        assert induce(LeviSpec(parse_kind("A:2"), (1, 1))).lam == P("2")

    def test_siegel_sp4(self):
        res = induce(LeviSpec(parse_kind("C:4"), (2,), 0), [P("1,1")])
        assert res.lam == P("2,2")
        assert orbit_dimension(res.lam, res.kind) == 0 + 2 * 3

    def test_gl1_sp4(self):
        levi = LeviSpec(parse_kind("C:6"), (1,), 4)
        res = induce(levi, [P("1")], P("1^4"))
        assert res.lam == P("2,2,1,1")
        assert orbit_dimension(res.lam, res.kind) == 2 * levi.nilradical_dim == 10

    def test_bad_inputs(self):
        levi = LeviSpec(parse_kind("C:6"), (1,), 4)
        with pytest.raises(ValueError):
            induce(levi, [P("2")])
        with pytest.raises(ValueError):
            induce(levi, [P("1")], P("3,1"))
        with pytest.raises(ValueError):
            induce(levi, [P("1"), P("1")])

    def test_type_a_zero_orbits_give_dual_of_blocks(self):
        for n in range(1, 11):
            for r in range(1, n + 1):
                for blocks in compositions(n, r):
                    res = induce(LeviSpec(LieAlgebraKind("A", n), blocks))
                    assert dual(res.lam) == Partition(sorted(blocks, reverse=True))

    @pytest.mark.parametrize("kind", list(classical_kinds(10)), ids=str)
    def test_dimension_law_single_block(self, kind):
        for a in range(1, kind.N // 2 + 1):
            levi = LeviSpec(kind, (a,), kind.N - 2 * a)
            for nu in enumerate_partitions(a):
                for tail in tail_orbits(levi.tail_kind):
                    res = induce(levi, [nu], tail)
                    expected = (
                        orbit_dimension(tail, levi.tail_kind) + gl_dim(nu) + 2 * levi.nilradical_dim
                    )
                    assert orbit_dimension(res.lam, kind) == expected

    @pytest.mark.parametrize("kind", list(classical_kinds(10)), ids=str)
    def test_dimension_law_and_order_independence_multi_block(self, kind):
        for blocks in block_multisets(kind.N // 2, 3):
            if len(blocks) < 2:
                continue
            tail_N = kind.N - 2 * sum(blocks)
            tails = tail_orbits(kind.with_dim(tail_N))
            for orbits in product(*(enumerate_partitions(a) for a in blocks)):
                for tail in tails:
                    results = set()
                    for perm in set(permutations(range(len(blocks)))):
                        levi = LeviSpec(kind, tuple(blocks[i] for i in perm), tail_N)
                        results.add(induce(levi, [orbits[i] for i in perm], tail).lam)
                    assert len(results) == 1, (blocks, orbits, tail, results)
                    (res,) = results
                    levi = LeviSpec(kind, blocks, tail_N)
                    expected = (
                        orbit_dimension(tail, levi.tail_kind)
                        + sum(gl_dim(nu) for nu in orbits)
                        + 2 * levi.nilradical_dim
                    )
                    assert orbit_dimension(res, kind) == expected

    def test_type_a_dimension_law(self):
        for n in range(2, 9):
            kind = LieAlgebraKind("A", n)
            for a in range(1, n):
                levi = LeviSpec(kind, (a, n - a))
                for nu, nu2 in product(enumerate_partitions(a), enumerate_partitions(n - a)):
                    res = induce(levi, [nu, nu2])
                    expected = gl_dim(nu) + gl_dim(nu2) + 2 * levi.nilradical_dim
                    assert orbit_dimension(res.lam, kind) == expected

    @pytest.mark.parametrize("kind", list(classical_kinds(10)), ids=str)
    def test_monotone_in_tail(self, kind):
        for a in range(1, kind.N // 2 + 1):
            levi = LeviSpec(kind, (a,), kind.N - 2 * a)
            tails = tail_orbits(levi.tail_kind)
            for nu in enumerate_partitions(a):
                for mu, mu2 in product(tails, tails):
                    if dominates(mu2, mu):
                        lo = induce(levi, [nu], mu).lam
                        hi = induce(levi, [nu], mu2).lam
                        assert dominates(hi, lo)


class TestRigidity:
    def test_so8_paper_orbits(self):
        assert is_rigid(orbit("D:8", "3,2^2,1"))
        assert not is_rigid(orbit("D:8", "3,1^5"))
        assert is_induced(orbit("D:8", "3,1^5"))

    def test_so8_rigid_list(self):
        rigid = [str(o.lam) for o in valid_orbits(parse_kind("D:8")) if is_rigid(o)]
        assert rigid == ["3,2,2,1", "2,2,1,1,1,1", "1,1,1,1,1,1,1,1"]

    def test_zero_orbit_never_induced(self):
        for kind in list(classical_kinds(12)) + [LieAlgebraKind("A", n) for n in range(1, 9)]:
            zero = NilpotentOrbit(kind, Partition([1] * kind.N))
            assert not is_induced(zero)
            assert is_rigid(zero)

    def test_sp4(self):
        assert not is_induced(orbit("C:4", "2,1,1"))
        assert is_rigid(orbit("C:4", "2,1,1"))
        assert [str(o.lam) for o in valid_orbits(parse_kind("C:4")) if is_rigid(o)] == ["2,1,1", "1,1,1,1"]

    def test_type_a(self):
        assert not is_rigid(orbit("A:5", "3,2"))
        assert is_rigid(orbit("A:5", "1^5"))
        for n in range(1, 9):
            kind = LieAlgebraKind("A", n)
            for lam in enumerate_partitions(n):
                o = NilpotentOrbit(kind, lam)
                assert is_rigid(o) == (not is_induced(o))

    @pytest.mark.parametrize("kind", list(classical_kinds(12)), ids=str)
    def test_criterion_matches_brute_force(self, kind):
        for o in valid_orbits(kind):
            assert is_rigid(o) == (not is_induced(o)), str(o)


class TestPhenomenon1:
    def test_so8(self):
        pairs = [(str(a.lam), str(b.lam)) for a, b in phenomenon1_counterexamples(parse_kind("D:8"))]
        assert ("3,2,2,1", "3,1,1,1,1,1") in pairs

    def test_type_a_empty(self):
        for n in range(1, 9):
            assert phenomenon1_counterexamples(LieAlgebraKind("A", n)) == []

    def test_b5_empty(self):
        assert phenomenon1_counterexamples(parse_kind("B:5")) == []

    def test_pairs_are_certificates(self):
        for kind in classical_kinds(12):
            for hi, lo in phenomenon1_counterexamples(kind):
                assert hi != lo
                assert is_rigid(hi) and not is_induced(hi)
                assert not is_rigid(lo) and is_induced(lo)
                assert orbit_closure_leq(lo, hi)

    def test_types_b_and_c_have_examples(self):
        found_b = [k for k in classical_kinds(12) if k.family == "B" and phenomenon1_counterexamples(k)]
        found_c = [k for k in classical_kinds(12) if k.family == "C" and phenomenon1_counterexamples(k)]
        assert found_b and found_c

    def test_sorted(self):
        pairs = phenomenon1_counterexamples(parse_kind("C:10"))
        keys = [(str(a.lam), str(b.lam)) for a, b in pairs]
        assert keys == sorted(keys)

    def test_smallest_b_and_c_examples(self):
        for text in ["B:3", "B:5", "B:7", "B:9", "C:2", "C:4", "C:6"]:
            assert phenomenon1_counterexamples(parse_kind(text)) == []
        b11 = [(str(a.lam), str(b.lam)) for a, b in phenomenon1_counterexamples(parse_kind("B:11"))]
        assert b11 == [("3,2,2,1,1,1,1", "3,1,1,1,1,1,1,1,1")]
        c8 = [(str(a.lam), str(b.lam)) for a, b in phenomenon1_counterexamples(parse_kind("C:8"))]
        assert c8 == [("2,2,2,1,1", "2,2,1,1,1,1")]
        assert is_induced(orbit("B:11", "3,1^8")) and not is_induced(orbit("B:11", "3,2^2,1^4"))
        assert is_induced(orbit("C:8", "2^2,1^4")) and not is_induced(orbit("C:8", "2^3,1^2"))

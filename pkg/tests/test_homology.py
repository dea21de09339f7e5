import pytest
from hypothesis import given, settings, strategies as st

from immclass.groups import FgAbelianGroup, divisibility, halves
from immclass.homology import alpha, coboundary, cohomology, homology, universal_coefficient_check, verify_duality
from immclass.library import SMALL_LENS, builtin, lens_space

import oracles

ALL = ("S3", "S1xS2", "T3", "S1xS2_tri", "T3_tri") + SMALL_LENS


def _invariants(g):
    return (g.free_rank, g.torsion)


def test_sphere_homology():
    p = builtin("S3").presentation
    assert [_invariants(homology(p, k)) for k in range(4)] == [(1, ()), (0, ()), (0, ()), (1, ())]
    assert _invariants(cohomology(p, 2)) == (0, ())


@pytest.mark.parametrize("p_, q", [(2, 1), (3, 1), (4, 1), (5, 2), (12, 5)])
def test_lens_space_groups(p_, q):
    p = lens_space(p_, q).presentation
    assert _invariants(homology(p, 1)) == (0, (p_,))
    assert _invariants(cohomology(p, 2)) == (0, (p_,))
    assert _invariants(cohomology(p, 1)) == (0, ())
    # the cellular complex Z -0-> Z -p-> Z -0-> Z: invariant factors of d_2
    assert oracles.invariant_factors([[p_]], 1, 1) == [p_]


def test_torus_cohomology():
    p = builtin("T3").presentation
    assert [_invariants(cohomology(p, k)) for k in range(4)] == [(1, ()), (3, ()), (3, ()), (1, ())]


def test_mod_two_on_projective_space():
    p = builtin("L(2,1)").presentation
    assert _invariants(cohomology(p, 2, "Z2")) == (0, (2,))
    assert _invariants(cohomology(p, 1, "Z2")) == (0, (2,))
    assert _invariants(cohomology(builtin("L(3,1)").presentation, 2, "Z2")) == (0, ())


@pytest.mark.parametrize("name, expected", [("S3", 0), ("L(2,1)", 1), ("L(3,1)", 0),
                                            ("L(4,1)", 1), ("T3", 0), ("L(6,1)", 1)])
def test_alpha(name, expected):
    assert alpha(builtin(name).presentation) == expected


@pytest.mark.parametrize("name", ALL)
def test_ranks_match_field_oracles(name):
    p = builtin(name).presentation
    mats = [p.boundary(k) for k in (1, 2, 3)]
    betti = oracles.homology_ranks(mats, p.cells)
    assert [homology(p, k).free_rank for k in range(4)] == betti
    for prime in (2, 3):
        mod = oracles.homology_ranks(mats, p.cells, prime)
        # dim H_k(F_p) = b_k + #(p-divisible torsion in H_k) + #(in H_{k-1})
        pred = []
        for k in range(4):
            tk = sum(t % prime == 0 for t in homology(p, k).torsion)
            tprev = sum(t % prime == 0 for t in homology(p, k - 1).torsion) if k else 0
            pred.append(betti[k] + tk + tprev)
        assert mod == pred


@pytest.mark.parametrize("name", ALL)
def test_expected_values_reproduced(name):
    b = builtin(name)
    p = b.presentation
    exp = b.expected
    assert [_invariants(homology(p, k)) for k in range(4)] == [tuple(x) for x in exp["homology"]]
    assert alpha(p) == exp["alpha"]


@pytest.mark.parametrize("name", ALL)
def test_duality_and_universal_coefficients(name):
    p = builtin(name).presentation
    assert verify_duality(p).passed
    for k, got, predicted in universal_coefficient_check(p):
        assert got == predicted, k


@pytest.mark.parametrize("name", ALL)
def test_top_homology_generated_by_fundamental_cycle(name):
    p = builtin(name).presentation
    h3 = homology(p, 3)
    assert _invariants(h3) == (1, ())
    assert h3.classify(list(p.fundamental_cycle)).coords in ((1,), (-1,))


@pytest.mark.parametrize("name", ("T3", "S1xS2_tri", "L(4,1)", "T3_tri"))
def test_cohomology_generators_are_cocycles_and_round_trip(name):
    p = builtin(name).presentation
    for k in range(4):
        g = cohomology(p, k)
        delta, rows, cols = coboundary(p, k)
        for cls in g.basis():
            rep = g.representative(cls)
            assert all(sum(a * x for a, x in zip(row, rep)) == 0 for row in delta)
            assert g.classify(rep) == cls


def test_divisibility_examples():
    z = FgAbelianGroup(1)
    assert divisibility(z.element([6])) == 6
    assert divisibility(z.zero()) == 0
    zt = FgAbelianGroup(1, (2,))
    assert divisibility(zt.element([4, 1])) == 4
    assert divisibility(zt.element([0, 1])) == 0


def test_halves_examples():
    z = FgAbelianGroup(1)
    assert [c.coords for c in halves(z.element([4]))] == [(2,)]
    assert halves(z.element([3])) == []
    zt = FgAbelianGroup(1, (2,))
    assert sorted(c.coords for c in halves(zt.element([4, 0]))) == [(2, 0), (2, 1)]


def test_library_example_lens_four():
    p = builtin("L(4,1)").presentation
    h2 = cohomology(p, 2)
    assert _invariants(homology(p, 1)) == (0, (4,))
    assert len(halves(h2.zero())) == 2


groups = st.tuples(st.integers(0, 2), st.lists(st.integers(2, 8), max_size=3)).map(
    lambda fr: FgAbelianGroup.from_cyclic_factors([0] * fr[0] + fr[1]))


@settings(max_examples=100, deadline=None)
@given(groups, st.data())
def test_halves_match_brute_force(g, data):
    coords = [data.draw(st.integers(-6, 6)) if m == 0 else data.draw(st.integers(0, m - 1))
              for m in g.moduli]
    chi = g.element(coords)
    got = sorted(c.coords for c in halves(chi))
    assert got == sorted(oracles.brute_halves(g.moduli, chi.coords, 3))
    two_h = all(x % 2 == 0 for x, m in zip(chi.coords, g.moduli) if m % 2 == 0)
    assert len(got) == (2 ** g.even_torsion_count if two_h else 0)


@settings(max_examples=200, deadline=None)
@given(groups, st.data(), st.integers(-5, 5))
def test_divisibility_scales(g, data, n):
    coords = [data.draw(st.integers(-6, 6)) for _ in g.moduli]
    chi = g.element(coords)
    assert divisibility(n * chi) == abs(n) * divisibility(chi)


def test_from_cyclic_factors_normalizes():
    g = FgAbelianGroup.from_cyclic_factors([0, 6, 4, 1])
    assert _invariants(g) == (1, (2, 12))
    assert str(g) == "Z + Z/2 + Z/12"
    with pytest.raises(ValueError):
        FgAbelianGroup(0, (4, 6))

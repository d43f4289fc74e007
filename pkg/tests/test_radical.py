"""Tests for the unipotent radical computation."""

import random
from fractions import Fraction

import pytest

from motcalc.abelian import (
    AbelianVarietyModel,
    PointVector,
    SubvarietyData,
    link_duals,
)
from motcalc.exactlin import RatMatrix, Subspace
from motcalc.lattices import ActionGroup, GaloisLattice, dual, tensor
from motcalc.motive import OneMotive, cartier_dual
from motcalc.multgroup import MultSpace
from motcalc.radical import (
    REDUCTIVE_SYMBOL,
    extract_b,
    radical_cartier_dual,
    smallest_B,
    unipotent_radical,
)


def elliptic_pair(n_a=1, n_astar=1):
    e = AbelianVarietyModel("E", 1, point_space_dim=n_a)
    estar = AbelianVarietyModel("Estar", 1, point_space_dim=n_astar)
    link_duals(e, estar)
    return e, estar


def gm3_motive():
    """[Z -> Gm^3] with u(1) = (q1, q2, 1), q1 and q2 independent."""
    space = MultSpace(["q1", "q2"])
    psi = [[space.element({"q1": 1}), space.element({"q2": 1}), space.one()]]
    return OneMotive(GaloisLattice(1), GaloisLattice(3),
                     psi=psi, mult_space=space)


def z4_gm_motive():
    """[Z^4 -> Gm] with u values (r1, r1^3, 1, r2)."""
    space = MultSpace(["r1", "r2"])
    psi = [
        [space.element({"r1": 1})],
        [space.element({"r1": 3})],
        [space.one()],
        [space.element({"r2": 1})],
    ]
    return OneMotive(GaloisLattice(4), GaloisLattice(1),
                     psi=psi, mult_space=space)


def gm2_motive():
    """[Z -> Gm^2] with independent values (p1, p2)."""
    space = MultSpace(["p1", "p2"])
    psi = [[space.element({"p1": 1}), space.element({"p2": 1})]]
    return OneMotive(GaloisLattice(1), GaloisLattice(2),
                     psi=psi, mult_space=space)


def ell_motive(coords):
    """[Z^m -> E] sending e_i to the point with the i-th coordinate row."""
    e, estar = elliptic_pair(n_a=max(len(c) for c in coords))
    v = PointVector(e, coords)
    return OneMotive(GaloisLattice(len(coords)), GaloisLattice(0),
                     A=e, Astar=estar, v=v,
                     vstar=PointVector.zero(estar, 0))


def ext_weil_motive(psi_exponent=1, mult_names=("q",)):
    """[Z -> G], G the extension of E by Gm classified by Q, lifting P."""
    e, estar = elliptic_pair()
    space = MultSpace(mult_names)
    psi = [[space.element({mult_names[0]: psi_exponent})]] if mult_names \
        else [[()]]
    return OneMotive(GaloisLattice(1), GaloisLattice(1),
                     A=e, Astar=estar,
                     v=PointVector(e, [[1]]),
                     vstar=PointVector(estar, [[1]]),
                     psi=psi, mult_space=space)


def basis(space):
    return [tuple(v) for v in space.basis_columns()]


def test_extract_b_without_abelian_part():
    assert extract_b(gm3_motive()) == (None, None)


def test_extract_b_reads_the_frame_points():
    m = ell_motive([[1], [2]])
    b1, b2 = extract_b(m)
    assert b1.coords == ((Fraction(1),), (Fraction(2),))
    assert b2.multiplicity == 0


def test_split_motive_vanishes():
    e, estar = elliptic_pair()
    m = OneMotive(GaloisLattice(2), GaloisLattice(1),
                  A=e, Astar=estar,
                  v=PointVector.zero(e, 2),
                  vstar=PointVector.zero(estar, 1))
    rep = unipotent_radical(m)
    assert (rep.dim_B, rep.dim_Z, rep.dim_unipotent) == (0, 0, 0)


def test_gm3_example():
    rep = unipotent_radical(gm3_motive())
    assert rep.z1.dim == 0
    assert basis(rep.z) == [(1, 0, 0), (0, 1, 0)]
    assert (rep.dim_B, rep.dim_Z, rep.dim_unipotent) == (0, 2, 2)
    assert rep.reductive_dim == 1
    assert rep.total_dim == 3
    assert rep.quasi_deficient


def test_z4_gm_example():
    rep = unipotent_radical(z4_gm_motive())
    assert basis(rep.z) == [(1, 3, 0, 0), (0, 0, 0, 1)]
    assert (rep.dim_B, rep.dim_Z) == (0, 2)


def test_gm2_example():
    rep = unipotent_radical(gm2_motive())
    assert rep.z.dim == 2
    assert (rep.dim_B, rep.dim_Z) == (0, 2)


def test_pure_weight_zero():
    m = OneMotive(GaloisLattice(1), GaloisLattice(0))
    rep = unipotent_radical(m)
    assert (rep.dim_B, rep.dim_Z, rep.dim_unipotent) == (0, 0, 0)
    assert rep.reductive_dim == 0
    assert rep.total_dim == 0


def test_pure_weight_minus_two():
    m = OneMotive(GaloisLattice(0), GaloisLattice(1))
    rep = unipotent_radical(m)
    assert rep.dim_unipotent == 0
    assert rep.reductive_dim == 1
    assert rep.total_dim == 1


def test_dependent_elliptic_points():
    rep = unipotent_radical(ell_motive([[1], [2]]))
    assert basis(rep.b.w_a.module) == [(1, 2)]
    assert rep.dim_B == 1
    assert rep.dim_Z == 0
    assert rep.b.w_a.contains(rep.b1)


def test_independent_elliptic_points():
    rep = unipotent_radical(ell_motive([[1, 0], [0, 1]]))
    assert rep.dim_B == 2
    assert rep.b.w_a.module.dim == 2


def brute_force_minimal_module(points, bound=3):
    """Smallest submodule whose subvariety contains the points.

    Enumerates spans of up to two small-integer vectors; adequate for
    multiplicity two over End = Q.
    """
    m = points.multiplicity
    vecs = []
    if m == 1:
        vecs = [[(1,)]]
    elif m == 2:
        singles = [[(a, b)]
                   for a in range(-bound, bound + 1)
                   for b in range(-bound, bound + 1)
                   if (a, b) != (0, 0)]
        vecs = singles + [[(1, 0), (0, 1)]]
    best = None
    for gen in [[]] + vecs:
        module = Subspace(m, gen)
        data = SubvarietyData(points.variety, m, module,
                              module.dim * points.variety.g)
        if data.contains(points) and (best is None or data.dim < best.dim):
            best = data
    return best


def test_dependent_points_brute_force_oracle():
    rep = unipotent_radical(ell_motive([[1], [2]]))
    oracle = brute_force_minimal_module(rep.b1)
    assert oracle.dim == rep.b.w_a.dim == 1
    assert basis(oracle.module) == basis(rep.b.w_a.module)


def test_independent_points_brute_force_oracle():
    rep = unipotent_radical(ell_motive([[1, 0], [0, 1]]))
    oracle = brute_force_minimal_module(rep.b1)
    assert oracle.dim == rep.b.w_a.dim == 2


def test_ext_weil_example():
    rep = unipotent_radical(ext_weil_motive())
    assert (rep.dim_B, rep.dim_Z, rep.dim_unipotent) == (2, 1, 3)
    assert basis(rep.z1) == [(1,)]
    assert basis(rep.z) == [(1,)]
    assert not rep.quasi_deficient
    assert rep.derived_dim == 1
    assert rep.reductive_dim == REDUCTIVE_SYMBOL
    assert rep.total_dim is None


def test_ext_weil_brute_force_oracle():
    """Confirm (2, 1, 3) by direct enumeration on the 1x1 blocks.

    Both sides: the only candidate modules in D = Q are 0 and Q, and
    only Q contains the nonzero point.  Bracket: a character c kills the
    restricted bracket iff c * u * w = 0 for u, w spanning the sides, so
    only c = 0 does; Z1 is everything and Z cannot be larger.
    """
    rep = unipotent_radical(ext_weil_motive())
    for points in (rep.b1, rep.b2):
        zero = SubvarietyData(points.variety, 1, Subspace.zero(1), 0)
        full = SubvarietyData(points.variety, 1, Subspace.full(1), 1)
        assert not zero.contains(points)
        assert full.contains(points)
    assert rep.dim_B == 2
    killers = [c for c in range(-3, 4) if c * 1 * 1 == 0]
    assert killers == [0]
    assert rep.dim_Z == 1
    assert rep.dim_unipotent == 3


def test_ext_weil_torsion_psi():
    """With psi a root of unity, Z is still forced to Z1 = everything."""
    rep = unipotent_radical(ext_weil_motive(mult_names=()))
    assert basis(rep.z) == basis(rep.z1) == [(1,)]
    assert (rep.dim_B, rep.dim_Z) == (2, 1)


def test_ext_weil_extension_values():
    rep = unipotent_radical(ext_weil_motive())
    assert rep.extension.characters == ((Fraction(1),),)
    assert rep.extension.astar_values[0].coords == ((Fraction(1),),)
    assert rep.extension.a_values[0].coords == ((Fraction(1),),)


def test_reductive_dim_supplied():
    rep = unipotent_radical(ext_weil_motive(), reductive_dim=4)
    assert rep.reductive_dim == 4
    assert rep.total_dim == 7


def corpus():
    return [
        gm3_motive(),
        z4_gm_motive(),
        gm2_motive(),
        OneMotive(GaloisLattice(1), GaloisLattice(0)),
        OneMotive(GaloisLattice(0), GaloisLattice(1)),
        ell_motive([[1], [2]]),
        ell_motive([[1, 0], [0, 1]]),
        ext_weil_motive(),
    ]


def test_duality_invariance_on_corpus():
    for m in corpus():
        rep = unipotent_radical(m)
        dual_rep = unipotent_radical(cartier_dual(m))
        assert (rep.dim_B, rep.dim_Z) == (dual_rep.dim_B, dual_rep.dim_Z)


def scaled_motive(m, n):
    """Replace (v, v*, psi) by (n v, n v*, n^2 psi)."""
    kwargs = {}
    if m.A is not None:
        kwargs = dict(
            A=m.A, Astar=m.Astar,
            v=PointVector(m.A, [[n * c for c in row] for row in m.v.coords]),
            vstar=PointVector(
                m.Astar,
                [[n * c for c in row] for row in m.vstar.coords]))
    psi = [[[n * n * c for c in m.psi[i][j]] for j in range(m.s)]
           for i in range(m.r)]
    return OneMotive(m.X, m.Yv, psi=psi, mult_space=m.mult_space, **kwargs)


def test_isogeny_invariance():
    for m in corpus():
        rep = unipotent_radical(m)
        for n in (2, 3, 5):
            scaled = unipotent_radical(scaled_motive(m, n))
            if m.A is not None:
                assert basis(scaled.b.w_a.module) == basis(rep.b.w_a.module)
                assert basis(scaled.b.w_astar.module) == \
                    basis(rep.b.w_astar.module)
            assert basis(scaled.z1) == basis(rep.z1)
            assert basis(scaled.z) == basis(rep.z)
            assert (scaled.dim_B, scaled.dim_Z) == (rep.dim_B, rep.dim_Z)


def test_point_relation_shrinks_B():
    independent = unipotent_radical(ell_motive([[1, 0], [0, 1]]))
    related = unipotent_radical(ell_motive([[1], [2]]))
    assert related.dim_B < independent.dim_B


def test_mult_relation_shrinks_Z():
    free = unipotent_radical(gm3_motive())
    space = MultSpace(["q1", "q2"], relations=[(3, -1)])
    psi = [[space.element({"q1": 1}), space.element({"q2": 1}), space.one()]]
    tied = unipotent_radical(OneMotive(GaloisLattice(1), GaloisLattice(3),
                                       psi=psi, mult_space=space))
    assert tied.dim_Z < free.dim_Z
    assert tied.dim_Z == 1


def test_galois_closure_keeps_Z_stable():
    group = ActionGroup(1, relators=[(1, 1)])
    swap = RatMatrix.from_rows([[0, 1], [1, 0]])
    x = GaloisLattice(2, action=[swap], group=group)
    yv = GaloisLattice(1, group=group)
    space = MultSpace(["q"])
    psi = [[space.element({"q": 1})], [space.element({"q": 1})]]
    m = OneMotive(x, yv, psi=psi, mult_space=space)
    rep = unipotent_radical(m)
    assert basis(rep.z) == [(1, 1)]
    action = tensor(dual(x), dual(yv)).action
    for g in action:
        for vec in rep.z.basis_columns():
            assert rep.z.contains(g.apply(vec))


def random_motive(rng):
    r = rng.randrange(4)
    s = rng.randrange(4)
    kwargs = {}
    if rng.randrange(10) < 7:
        n = rng.randrange(1, 3)
        e, estar = elliptic_pair(n_a=n, n_astar=n)
        kwargs = dict(
            A=e, Astar=estar,
            v=PointVector(e, [[rng.randrange(-2, 3) for _ in range(n)]
                              for _ in range(r)]),
            vstar=PointVector(estar, [[rng.randrange(-2, 3) for _ in range(n)]
                                      for _ in range(s)]))
    mu = rng.randrange(3)
    space = MultSpace(["g%d" % t for t in range(mu)])
    psi = [[[rng.randrange(-2, 3) for _ in range(mu)] for _ in range(s)]
           for i in range(r)]
    return OneMotive(GaloisLattice(r), GaloisLattice(s),
                     psi=psi, mult_space=space, **kwargs)


def test_randomized_structure_properties():
    rng = random.Random(20240814)
    for _ in range(40):
        m = random_motive(rng)
        rep = unipotent_radical(m)
        assert rep.z.contains_space(rep.z1)
        assert rep.dim_unipotent == rep.dim_B + rep.dim_Z
        dual_rep = unipotent_radical(cartier_dual(m))
        assert (rep.dim_B, rep.dim_Z) == (dual_rep.dim_B, dual_rep.dim_Z)


def test_smallest_B_without_abelian_part():
    b = smallest_B(gm3_motive())
    assert b.w_a is None and b.w_astar is None and b.dim == 0


def test_radical_dual_of_torus_examples():
    rep = unipotent_radical(z4_gm_motive())
    data = radical_cartier_dual(rep)
    assert data.lattice.rank == 2
    assert data.characters == ((1, 3, 0, 0), (0, 0, 0, 1))
    assert data.astar_values == (None, None)
    emitted = data.to_one_motive(name="dual")
    assert emitted is not None
    assert (emitted.r, emitted.s, emitted.g) == (2, 0, 0)
    back = unipotent_radical(emitted)
    assert (back.dim_B, back.dim_Z, back.dim_unipotent) == (0, 0, 0)


def test_radical_dual_of_weight_minus_two():
    rep = unipotent_radical(OneMotive(GaloisLattice(0), GaloisLattice(1)))
    data = radical_cartier_dual(rep)
    assert data.lattice.rank == 0
    emitted = data.to_one_motive()
    assert (emitted.r, emitted.s, emitted.g) == (0, 0, 0)


def test_radical_dual_of_ext_weil():
    rep = unipotent_radical(ext_weil_motive())
    data = radical_cartier_dual(rep)
    assert data.lattice.rank == 1
    assert data.characters == ((1,),)
    assert data.astar_values[0].coords == ((Fraction(1),),)
    assert data.a_values[0].coords == ((Fraction(1),),)
    assert data.to_one_motive() is None


def test_radical_dual_respects_galois_action():
    group = ActionGroup(1, relators=[(1, 1)])
    swap = RatMatrix.from_rows([[0, 1], [1, 0]])
    x = GaloisLattice(2, action=[swap], group=group)
    yv = GaloisLattice(1, group=group)
    space = MultSpace(["q"])
    psi = [[space.element({"q": 1})], [space.element({"q": 1})]]
    rep = unipotent_radical(OneMotive(x, yv, psi=psi, mult_space=space))
    data = radical_cartier_dual(rep)
    assert data.lattice.rank == 1
    assert data.lattice.action[0].row_list() == [[Fraction(1)]]
    emitted = data.to_one_motive()
    assert emitted.X.group is group

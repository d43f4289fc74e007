"""Acceptance suite: the contract the package is accepted against.

Each guarantee is one test (or one tight group), with timing bounds
asserted where the contract sets them.  The derived values are
confirmed by brute-force oracles written against the raw inputs,
independent of the radical computation they certify.
"""

import glob
import itertools
import json
import os
import random
import time
from fractions import Fraction

from motcalc.cli import main
from motcalc.document import load_input, parse_input
from motcalc.exactlin import RatMatrix, Subspace
from motcalc.lattices import GaloisLattice
from motcalc.liealg import AY, XA, bracket_value, build_E, verify_lie_module
from motcalc.motive import GradedPieces, OneMotive, cartier_dual
from motcalc.pairings import (
    BlockSpace,
    TorusPairingClass,
    abelian_block,
    antisymmetrize,
    assemble_example_biext,
    swap_pullback,
)
from motcalc.abelian import AbelianVarietyModel, PointVector, link_duals
from motcalc.radical import radical_cartier_dual, unipotent_radical

CORPUS_DIR = os.path.join(os.path.dirname(__file__), os.pardir, "motives")


def corpus_path(name):
    return os.path.join(CORPUS_DIR, name)


def corpus_motives():
    for path in sorted(glob.glob(os.path.join(CORPUS_DIR, "*.json"))):
        for _, motive in load_input(path).motives:
            yield motive


def analyze_json(path, capsys):
    assert main(["analyze", path, "--format", "json"]) == 0
    return json.loads(capsys.readouterr().out)["reports"]


# the worked example [Z -> Gm^3] with (q1, q2, 1) has a
# two-dimensional toric radical and total Lie dimension 3, of which 1
# is the reductive torus part.

def test_gm3_report_dimensions(capsys):
    start = time.monotonic()
    report = analyze_json(corpus_path("sec39_gm3.json"), capsys)[0]
    elapsed = time.monotonic() - start
    assert report["dims"] == {
        "dim_B": 0,
        "dim_Z": 2,
        "dim_unipotent": 2,
        "reductive_dim": 1,
        "total_dim": 3,
    }
    assert elapsed < 1.0


# the three torus variants generate the same tannakian
# data; all report (dim_B, dim_Z) = (0, 2).

def test_torus_variants_agree(capsys):
    start = time.monotonic()
    for name in ("sec39_gm3.json", "sec39_gm2.json", "sec39_z4_gm.json"):
        report = analyze_json(corpus_path(name), capsys)[0]
        assert (report["dims"]["dim_B"], report["dims"]["dim_Z"]) == (0, 2)
    assert time.monotonic() - start < 1.0


# pure weights.  Z(0) has no unipotent and no reductive
# part; Z(1) has no unipotent part and total dimension 1.

def test_pure_weight_cases(capsys):
    z0 = analyze_json(corpus_path("z0.json"), capsys)[0]["dims"]
    assert z0 == {"dim_B": 0, "dim_Z": 0, "dim_unipotent": 0,
                  "reductive_dim": 0, "total_dim": 0}
    z1 = analyze_json(corpus_path("z1.json"), capsys)[0]["dims"]
    assert z1["dim_unipotent"] == 0
    assert z1["total_dim"] == 1


# the assembled biextension class, after antisymmetrizing,
# equals the block table whose (i, j) component carries the Weil symbol
# <a_i, b_j> in both orientations and nothing in the A-A or A*-A*
# corners.  The expected table is rebuilt here entry by entry.

def expected_block_table(x, y, a):
    space = BlockSpace([abelian_block(a, x), abelian_block(a.dual, y)])
    table = {}
    for i in range(x):
        for j in range(y):
            forward = RatMatrix.zero(x, y).row_list()
            forward[i][j] = Fraction(1)
            backward = RatMatrix.zero(y, x).row_list()
            backward[j][i] = Fraction(-1)
            table[(i * y + j, 0, 1)] = RatMatrix.from_rows(forward)
            table[(i * y + j, 1, 0)] = RatMatrix.from_rows(backward)
    return TorusPairingClass(space, space, GaloisLattice(x * y), table)


def test_bracket_block_table():
    a = AbelianVarietyModel("A", g=1)
    astar = AbelianVarietyModel("Astar", g=1)
    link_duals(a, astar)
    start = time.monotonic()
    for x in range(1, 5):
        for y in range(1, 5):
            assembled = antisymmetrize(assemble_example_biext(x, y, a))
            assert assembled == expected_block_table(x, y, a)
            for (l, p, q) in assembled.coefficients:
                assert (p, q) in ((0, 1), (1, 0))
    assert time.monotonic() - start < 1.0


# Lie axioms on a generated corpus of graded pieces with
# 0 <= r, s <= 3 and abelian part absent or an elliptic curve.  Bracket
# antisymmetry holds on every basis pair and [[x, y], z] = 0 on every
# basis triple: the inner bracket lands in E_-2, and the bracket class
# has no component accepting a weight -2 argument.

def e1_basis(data):
    return ([(XA, i, "e%d" % i) for i in range(data.r)]
            + [(AY, j, "f%d" % j) for j in range(data.s)])


def double_bracket(data, x, y, z):
    inner = bracket_value(data, x, y)
    # every term of the inner bracket is an E_-2 Weil symbol, and the
    # bracket class only has the two abelian E_-1 blocks, so no entry
    # can consume any term: each one brackets to zero with z
    for space in (data.bracket.left_space, data.bracket.right_space):
        assert all(block.kind == "abelian" for block in space.blocks)
    assert all(symbol[0] == "weil" for _, symbol in inner)
    return {}


def test_lie_axioms_small_ranks():
    a = AbelianVarietyModel("A", g=1)
    astar = AbelianVarietyModel("Astar", g=1)
    link_duals(a, astar)
    for r, s in itertools.product(range(4), repeat=2):
        for variety in (None, a):
            pieces = GradedPieces(GaloisLattice(r), variety, GaloisLattice(s))
            data = build_E(pieces)
            assert verify_lie_module(data, pieces)
            assert swap_pullback(data.bracket) == data.bracket
            basis = e1_basis(data) if variety is not None else []
            for x in basis:
                for y in basis:
                    forward = bracket_value(data, x, y)
                    backward = bracket_value(data, y, x)
                    assert forward == {k: -c for k, c in backward.items()}
                    for z in basis:
                        assert double_bracket(data, x, y, z) == {}


# duality.  Every bundled motive has the same (dim_B,
# dim_Z) as its Cartier dual, and dualizing twice restores the data.

def test_duality_suite():
    checked = 0
    for m in corpus_motives():
        rep = unipotent_radical(m)
        rep_dual = unipotent_radical(cartier_dual(m))
        assert (rep.dim_B, rep.dim_Z) == (rep_dual.dim_B, rep_dual.dim_Z)
        assert cartier_dual(cartier_dual(m)).structurally_equal(m)
        checked += 1
    assert checked == 8


# isogeny invariance.  Scaling (v, v*, psi) by (n, n, n^2)
# changes nothing: every reported subspace is equal as a subspace.

def scaled(m, n):
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


def test_isogeny_suite():
    for m in corpus_motives():
        rep = unipotent_radical(m)
        for n in (2, 3, 5):
            rep_n = unipotent_radical(scaled(m, n))
            assert rep_n.z1 == rep.z1
            assert rep_n.z == rep.z
            if m.A is not None:
                assert rep_n.b.w_a.module == rep.b.w_a.module
                assert rep_n.b.w_astar.module == rep.b.w_astar.module


# derived values, certified by brute force.  The oracles
# work on the raw flattened input vectors and candidate subspaces with
# small integer spans; they never call the radical machinery.

def brute_force_line_through(vec, bound=3):
    """All 1-dim small-integer spans containing vec, among all spans."""
    ambient = len(vec)
    assert any(vec)
    hits = []
    seen = set()
    span_range = range(-bound, bound + 1)
    for cand in itertools.product(span_range, repeat=ambient):
        if not any(cand):
            continue
        line = Subspace(ambient, [cand])
        key = tuple(tuple(col) for col in line.basis_columns())
        if key in seen:
            continue
        seen.add(key)
        if line.contains(vec):
            hits.append(line)
    return hits


def test_ell_rel_brute_force_oracle():
    doc = load_input(corpus_path("ell_rel.json"))
    _, motive = doc.motives[0]
    flat = motive.v.flat()
    # the zero space misses b; among all small-integer lines exactly
    # one contains it, so the smallest abelian subvariety through b is
    # that line, of dimension 1 * g = 1
    assert not Subspace.zero(len(flat)).contains(flat)
    lines = brute_force_line_through(flat)
    assert len(lines) == 1
    assert lines[0] == Subspace(2, [(1, 2)])

    rep = unipotent_radical(motive)
    assert rep.dim_B == 1
    assert rep.b.w_a.module == lines[0]
    assert [list(c) for c in rep.b.w_a.module.basis_columns()] == \
        [[1, Fraction(2)]]


def test_ext_weil_brute_force_oracle():
    doc = load_input(corpus_path("ext_weil.json"))
    _, motive = doc.motives[0]
    # both flattened points are nonzero in a 1-dim point space, so each
    # smallest containing subspace is everything: dim_B = 1 + 1
    b1 = motive.v.flat()
    b2 = motive.vstar.flat()
    assert b1 == (1,) and b2 == (1,)
    # the restricted bracket of the two full sides is the Weil symbol
    # with coefficient b1[0] * b2[0] = 1, nonzero, and E_-2 has rank 1:
    # the only subtorus containing it is the whole of E_-2
    coefficient = b1[0] * b2[0]
    assert coefficient != 0
    vanishing = [sub for sub in (Subspace.zero(1), Subspace.full(1))
                 if sub.contains((coefficient,))]
    assert vanishing == [Subspace.full(1)]

    rep = unipotent_radical(motive)
    assert (rep.dim_B, rep.dim_Z, rep.dim_unipotent) == (2, 1, 3)


# additivity of the two radical layers over randomized
# valid inputs with ranks <= 3 and random point and unit relations.

def random_document(rng):
    mu = rng.randrange(3)
    units = ["u%d" % t for t in range(mu)]
    payload = {}
    if units:
        payload["mult_basis"] = units
        if rng.randrange(3) == 0:
            payload["mult_relations"] = [
                [str(rng.randrange(-2, 3)) for _ in units]]
    r = rng.randrange(4)
    s = rng.randrange(4)
    motive = {"name": "m", "X_rank": r, "Yv_rank": s}
    if rng.randrange(10) < 7:
        points = ["P%d" % k for k in range(rng.randrange(1, 4))]
        dual_points = ["Q%d" % k for k in range(rng.randrange(1, 4))]
        variety = {"name": "A", "g": rng.randrange(1, 3),
                   "points": points, "dual": "B"}
        partner = {"name": "B", "g": variety["g"],
                   "points": dual_points, "dual": "A"}
        if len(points) > 1 and rng.randrange(2):
            variety["relations"] = [
                [str(rng.randrange(-2, 3)) for _ in points]]
        if len(dual_points) > 1 and rng.randrange(2):
            partner["relations"] = [
                [str(rng.randrange(-2, 3)) for _ in dual_points]]
        payload["varieties"] = [variety, partner]
        motive["A"] = "A"
        motive["v"] = [rng.choice(points) for _ in range(r)]
        motive["vstar"] = [rng.choice(dual_points) for _ in range(s)]
    if units:
        motive["psi"] = [[[str(rng.randrange(-2, 3)) for _ in units]
                          for _ in range(s)] for _ in range(r)]
    payload["motives"] = [motive]
    return json.dumps(payload)


def test_additivity_randomized():
    rng = random.Random(20260815)
    start = time.monotonic()
    for _ in range(100):
        doc = parse_input(random_document(rng))
        _, motive = doc.motives[0]
        rep = unipotent_radical(motive)
        assert rep.dim_unipotent == rep.dim_B + rep.dim_Z
    assert time.monotonic() - start < 10.0


# the dual of the radical.  On the Weil extension the
# toric part dualizes to a rank-1 lattice with its value table filled
# from the projections to A* and A; on the torus examples, where B
# vanishes, the emitted motive [Z^v -> 0] re-analyzes with consistent
# (all zero) radical dimensions.

def test_radical_dual_consistency():
    doc = load_input(corpus_path("ext_weil.json"))
    _, motive = doc.motives[0]
    rep = unipotent_radical(motive)
    data = radical_cartier_dual(rep)
    assert data.lattice.rank == 1
    assert data.characters == ((1,),)
    assert data.astar_values[0].coords == ((Fraction(1),),)
    assert data.a_values[0].coords == ((Fraction(1),),)
    # with dim_B > 0 the dual is not itself a 1-motive over a point
    assert data.to_one_motive() is None

    for name in ("sec39_gm3.json", "sec39_gm2.json", "sec39_z4_gm.json"):
        _, torus_motive = load_input(corpus_path(name)).motives[0]
        torus_rep = unipotent_radical(torus_motive)
        dual_data = radical_cartier_dual(torus_rep)
        assert dual_data.lattice.rank == torus_rep.dim_Z
        emitted = dual_data.to_one_motive()
        back = unipotent_radical(emitted)
        assert (back.dim_B, back.dim_Z, back.dim_unipotent) == (0, 0, 0)

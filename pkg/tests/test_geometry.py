from itertools import product

import pytest

from hyperaut.autgrp import DiagAut
from hyperaut.geometry import (
    fixed_locus,
    galois_by_theorem,
    projection_degree,
    smoothness,
)
from hyperaut.harness import example_witness
from hyperaut.poly import NotSemiInvariantError, parse

from conftest import fermat


def test_fermat_cubic_surface_smooth():
    cert = smoothness(fermat(4, 3))
    assert cert.verdict == "smooth"
    assert cert.method == "macaulay_rank"
    assert cert.rank == cert.target_rank


def test_cone_singular_with_witness():
    cert = smoothness(parse("X0^3+X1^3+X2^3", 4))
    assert cert.verdict == "singular"
    assert cert.method == "vertex_screen"
    assert cert.witness_str() == "[0:0:0:1]"


def test_witness_family_smooth():
    for d in (3, 4, 5):
        F, _ = example_witness(d)
        assert smoothness(F).verdict == "smooth"


def test_macaulay_detects_hidden_singularity():
    # Singular away from the coordinate points, so the vertex screen passes
    # and the rank computation must find the deficit.
    F = parse("X0^4*X1 + X0*X1^4 + X0*X2^4 + X2*X3^4", 4)
    cert = smoothness(F)
    assert cert.verdict == "singular"
    assert cert.method == "macaulay_rank"
    assert cert.rank < cert.target_rank


def test_smoothness_cap_is_honest():
    cert = smoothness(fermat(4, 5), entry_cap=10)
    assert cert.verdict == "inconclusive"


def test_smoothness_with_cyclotomic_coefficients():
    # Hesse family: X0^3 + X1^3 + X2^3 + s*X0*X1*X2 is singular exactly when
    # s^3 = -27; a primitive cube root of unity is on the smooth side, and
    # s = -3 gives a singular member (s^3 = -27).
    smooth = parse("X0^3 + X1^3 + X2^3 + z3*X0*X1*X2", 3)
    assert smoothness(smooth).verdict == "smooth"
    singular = parse("X0^3 + X1^3 + X2^3 - 3*X0*X1*X2", 3)
    cert = smoothness(singular)
    assert cert.verdict == "singular"
    assert cert.method == "macaulay_rank"


def test_smoothness_permutation_equivariant():
    F = parse("X0^4+X1^4+X2^4+X0*X3^3+X1*X4^3", 5)
    for perm in ((1, 0, 2, 3, 4), (4, 3, 2, 1, 0), (2, 0, 1, 4, 3)):
        assert smoothness(F.permute_variables(perm)).verdict == "smooth"
    S = parse("X0^4*X1 + X0*X1^4 + X0*X2^4 + X2*X3^4", 4)
    for perm in ((1, 0, 2, 3), (3, 2, 1, 0)):
        assert smoothness(S.permute_variables(perm)).verdict == "singular"


# -- fixed locus -------------------------------------------------------------------


def test_fermat_fixed_locus():
    F = fermat(5, 4)
    g = DiagAut(4, (1, 0, 0, 0, 0))
    fx = fixed_locus(F, g)
    assert fx.codim_in_x == 1
    point = next(s for s in fx.slices if s.ambient_dim == 0)
    assert point.dim == -1  # the vertex is off the hypersurface
    plane = next(s for s in fx.slices if s.ambient_dim == 3)
    assert plane.dim == 2 and not plane.restriction_zero


def test_witness_fixed_locus_contains_line():
    F, g = example_witness(4)
    fx = fixed_locus(F, g)
    assert fx.codim_in_x == 2
    assert fx.contains_line is True
    line = next(s for s in fx.slices if s.indices == (3, 4))
    assert line.restriction_zero and line.dim == 1


def test_type_iii_point_count_at_least_d():
    # Plane-curve style slice on a surface: two separate eigenvalues, points
    # on the complementary line counted exactly.
    d = 5
    F = parse("X0^5 + X1^5 + X2^5 + X3^5 + X2*X3^4", 4)
    g = DiagAut(5, (1, 2, 0, 0))
    fx = fixed_locus(F, g)
    assert all(s.dim <= 0 for s in fx.slices)
    assert fx.point_count is not None
    assert fx.point_count >= d


def test_fixed_locus_counts_distinct_roots():
    F = parse("X0^3 + X1^3 + X2^3 + X3^3", 4)
    g = DiagAut(3, (1, 2, 0, 0))
    fx = fixed_locus(F, g)
    line = next(s for s in fx.slices if s.indices == (2, 3))
    assert line.point_count == 3  # X2^3 + X3^3 has three distinct roots
    points = [s for s in fx.slices if s.ambient_dim == 0]
    assert all(s.dim == -1 for s in points)
    assert fx.point_count == 3


def test_fixed_locus_requires_automorphism():
    F = parse("X0^3*X1 + X1^4 + X2^4 + X3^4", 4)
    with pytest.raises(NotSemiInvariantError):
        fixed_locus(F, DiagAut(5, (1, 0, 0, 0)))


def test_vertex_membership_matches_fix():
    # A coordinate point with a unique eigenvalue lies in Fix(g) iff it lies
    # on the hypersurface.
    F, g = example_witness(4)
    fx = fixed_locus(F, g)
    slice2 = next(s for s in fx.slices if s.indices == (2,))
    assert slice2.dim == -1  # P2 carries X2^4, hence off the hypersurface


def _projective_points_mod_p(k, p):
    # One representative per point of P^k over F_p: last nonzero coord is 1.
    for lead in range(k + 1):
        for tail in product(range(p), repeat=lead):
            yield tail + (1,) + (0,) * (k - lead)


def _count_slice_points_mod_p(F, indices, p):
    count = 0
    other = [i for i in range(F.num_vars) if i not in indices]
    for point in _projective_points_mod_p(len(indices) - 1, p):
        coords = [0] * F.num_vars
        for idx, val in zip(indices, point):
            coords[idx] = val
        total = 0
        for mon, c in F.terms.items():
            if any(mon[i] and not coords[i] for i in range(F.num_vars)):
                continue
            v = c.rational_value()
            assert v.denominator == 1
            term = int(v)
            for i, e in enumerate(mon):
                if e:
                    term = term * pow(coords[i], e, p) % p
            total = (total + term) % p
        if total == 0:
            count += 1
    return count


def test_slice_dimensions_against_finite_field_counts():
    F, g = example_witness(4)
    fx = fixed_locus(F, g)
    for p in (5, 7, 11):
        for s in fx.slices:
            got = _count_slice_points_mod_p(F, s.indices, p)
            if s.dim == -1:
                assert got == 0
            elif s.restriction_zero:
                k = s.ambient_dim
                assert got == (p ** (k + 1) - 1) // (p - 1)
            elif s.ambient_dim == 1:
                assert got <= s.point_count


# -- projections and the Galois criterion ------------------------------------------


def test_projection_degrees():
    F = fermat(4, 4)
    assert projection_degree(F, [0], [1, 2, 3]) == 4

    W, _ = example_witness(4)
    assert projection_degree(W, [3, 4], [0, 1, 2]) == 3
    assert projection_degree(W, [0, 1, 2], [3, 4]) == 3

    B = parse(
        "X0^2*X1*X3 + X1^2*X2*X4 + X2^2*X0*X3 + X3^2*X4*X0 + X4^2*X3*X1", 5
    )
    assert B.restrict([0, 1, 2]).is_zero() and B.restrict([3, 4]).is_zero()
    assert projection_degree(B, [3, 4], [0, 1, 2]) == 2

    with pytest.raises(ValueError):
        projection_degree(F, [0, 1], [1, 2, 3])


def test_galois_by_theorem():
    F = fermat(4, 5)
    g = DiagAut(5, (1, 0, 0, 0))
    verdict = galois_by_theorem(F, g)
    assert verdict.galois and verdict.m == 5
    assert verdict.galois_point
    assert verdict.theorem == "thm-2.3"

    W, gw = example_witness(4)
    v4 = galois_by_theorem(W, gw.power(4))
    assert v4.galois and v4.m == 3
    assert v4.scaled_block == (0, 1, 2)

    assert not galois_by_theorem(W, gw).galois  # three eigenvalues
    ident = DiagAut(1, (0, 0, 0, 0))
    assert not galois_by_theorem(F, ident).galois

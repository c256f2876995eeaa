import math

import pytest

import dessinator as dn


def torus():
    return dn.Dessin(sigma="(0 1 2)", tau="(0 1 2)", edges=3)


def test_analyze_torus():
    info = dn.analyze(torus())
    assert info["genus"] == 1
    assert info["type"] == (3, 3, 3)
    assert info["geometry"] == "euclidean"
    assert info["regular"] is True
    assert info["aut_plus"] == 3
    assert info["passport"] == ([3], [3], [3])


def test_enumeration_counts():
    assert len(dn.enumerate_dessins(4)) == 26
    assert len(dn.enumerate_dessins(5)) == 97


def test_canonical_and_isomorphism():
    d = dn.Dessin(sigma="(0 1 2)", tau="(0 2 1)", edges=3)
    c = dn.canonical_form(d)
    assert dn.isomorphic(d, c)
    assert not dn.isomorphic(d, torus()) or dn.isomorphic(torus(), d)


def test_homology_cover():
    cover = dn.homology_cover(torus(), 2)
    assert cover.edges == 12
    assert dn.genus(cover) == 1
    genera, truncated = dn.cover_tower_genus(torus(), 2, 3)
    assert genera == [1, 1, 1]
    assert truncated is False


def test_triangle_roundtrip():
    assert dn.triangle_roundtrip_ok(torus())


def test_coset_enumeration_and_abelianization():
    table = dn.coset_enumeration("< x y | x^2 y^3 (y*x)^5 >")
    assert table["index"] == 60
    rank, torsion = dn.abelianization("< x y | x*y*x^-1*y^-1 >")
    assert rank == 2 and torsion == []


def test_kn_invariants():
    inv = dn.kn_invariants(1)
    assert inv["index"] == 12
    assert inv["genus"] == 1
    assert inv["cusps"] == 2
    assert inv["free_rank"] == 3


def test_mobius_eval():
    assert dn.mobius_eval("A^2*E", 1) == (3, 1)
    assert dn.mobius_eval("A*E*A^-3", 7) == (1, 1)


def test_ends():
    profile = dn.ends_estimate("Z^2", 6)
    assert profile["classification"] == "1"
    assert profile["ball_sizes"][6] == 85


def test_superelliptic():
    assert dn.genus_formula(2, 3) == 2
    value = dn.sine_eval(10000, 0.5 + 0j)
    assert abs(value - math.sin(math.pi * 0.5)) < 1e-3
    found = dn.affine_equivalent([0, 1, 2], [1, 3, 5], tol=1e-9)
    assert found is not None
    a, b = found
    assert abs(a - 2) < 1e-9 and abs(b - 1) < 1e-9


def test_errors_surface_as_exceptions():
    with pytest.raises(ValueError):
        dn.Dessin(sigma="(0 1)", tau="(2 3)", edges=4)

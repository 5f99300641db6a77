from fractions import Fraction

import pytest

from curvlab.builtin import IdentityWordError, S3_TABLE, free_gencon, make_free, make_s3, make_zn
from curvlab.core import ball, bfs_metric, word_length
from curvlab.curvature import gencon, kappa


def test_zn_length_is_l1():
    z2 = make_zn(2)
    assert z2.closed_length((2, -3)) == 5
    z5 = make_zn(5)
    assert z5.closed_length((1, -1, 0, 2, -2)) == 6


def test_free_reduction():
    f2 = make_free(2)
    w = f2.evaluate(["a", "b", "a^-1"])
    assert w == (1, 2, -1)
    assert f2.closed_length(w) == 3
    assert f2.evaluate(["a", "a^-1"]) == ()
    assert f2.compose((1, 2), (-2, -1)) == ()


def test_s3_table_is_latin_square_and_relators():
    for row in S3_TABLE:
        assert sorted(row) == list(range(6))
    for j in range(6):
        assert sorted(S3_TABLE[i][j] for i in range(6)) == list(range(6))
    s3 = make_s3()
    s, t = s3.generator("s"), s3.generator("t")
    assert s3.compose(s, s) == s3.identity
    assert s3.compose(t, t) == s3.identity
    assert s3.evaluate(["s", "t", "s"]) == s3.evaluate(["t", "s", "t"])


def test_s3_generators_generate():
    table = bfs_metric(make_s3(), 3)
    assert len(table.dist) == 6
    assert word_length(make_s3(), make_s3().evaluate(["s", "t", "s"]), table) == 3


def test_free_gencon_formula():
    f2 = make_free(2)
    ab = f2.evaluate(["a", "b"])
    assert free_gencon(2, ab) == 3
    # brute force over the 6 conjugators of a in F_3: (1+1+3+3+3+3)/6
    f3 = make_free(3)
    total = sum(f3.closed_length(f3.conjugate((1,), w)) for w in f3.generators)
    assert Fraction(total, 6) == Fraction(7, 3) == free_gencon(3, (1,))
    with pytest.raises(IdentityWordError):
        free_gencon(2, ())


@pytest.mark.parametrize("n", [2, 3])
def test_free_gencon_matches_generic(n):
    oracle = make_free(n)
    table = bfs_metric(oracle, 3)
    for g in ball(table, 3):
        if g == ():
            continue
        assert gencon(oracle, table, g) == free_gencon(n, g)


def test_zn_curvature_vanishes():
    oracle = make_zn(2)
    table = bfs_metric(oracle, 3)
    for g in ball(table, 3):
        if g == (0, 0):
            continue
        for r in (1, 2, 3):
            for mode in ("sphere", "ball"):
                assert kappa(oracle, table, g, r, mode).kappa == 0


def test_free_kappa_closed_form():
    for n in (2, 3):
        oracle = make_free(n)
        table = bfs_metric(oracle, 2)
        for g in ball(table, 2):
            if g == ():
                continue
            expected = Fraction(-(2 - Fraction(2, n)), len(g))
            assert kappa(oracle, table, g, 1).kappa == expected

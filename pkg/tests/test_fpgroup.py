import random
import pytest

from conicline.catalog import bmf_cn
from conicline.finite_groups import A4, D4, S3, S4
from conicline.fpgroup import (abelianization, compare, count_homs,
                               count_homs_bruteforce, det_int, fingerprint,
                               random_presentation, smith_normal_form,
                               tietze_simplify)
from conicline.paper_groups import presentation_c2_proj, presentation_t00
from conicline.vankampen import presentation, raw_presentation
from conicline.words import gen, invert, multiply, parse_word


def test_group_tables():
    for g in (S3, D4, A4, S4):
        n = g.order
        assert g.mult[g.identity] == tuple(range(n))
        for a in range(n):
            assert g.mult[a][g.inv[a]] == g.identity
    assert (S3.order, D4.order, A4.order, S4.order) == (6, 8, 12, 24)


def test_snf_examples():
    s, u, v = smith_normal_form([[2, 2], [2, 2]])
    assert [s[0][0], s[1][1]] == [2, 0]
    p = presentation(["a", "b"], [parse_word("a b a b"), parse_word("b a b a")])
    res = abelianization(p)
    assert res.rank_free == 1 and res.torsion == (2,)
    q = presentation(["a", "b"],
                     [multiply(parse_word("a b a b"), invert(parse_word("b a b a")))])
    res = abelianization(q)
    assert res.rank_free == 2 and res.torsion == ()


def test_snf_replay_random():
    rng = random.Random(31)
    for _ in range(80):
        rows, cols = rng.randint(1, 6), rng.randint(1, 6)
        m = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
        s, u, v = smith_normal_form(m)
        # replay: U M V == S
        um = [[sum(u[i][k] * m[k][j] for k in range(rows)) for j in range(cols)]
              for i in range(rows)]
        umv = [[sum(um[i][k] * v[k][j] for k in range(cols)) for j in range(cols)]
               for i in range(rows)]
        assert umv == s
        assert abs(det_int(u)) == 1
        assert abs(det_int(v)) == 1
        # divisibility chain
        diag = [s[i][i] for i in range(min(rows, cols)) if s[i][i]]
        for a, b in zip(diag, diag[1:]):
            assert b % a == 0


def test_snf_against_sympy_when_available():
    sympy = pytest.importorskip("sympy")
    from sympy.matrices.normalforms import invariant_factors
    rng = random.Random(37)
    for _ in range(40):
        rows, cols = rng.randint(1, 5), rng.randint(1, 5)
        m = [[rng.randint(-8, 8) for _ in range(cols)] for _ in range(rows)]
        s, _, _ = smith_normal_form(m)
        ours = [s[i][i] for i in range(min(rows, cols)) if s[i][i]]
        theirs = [int(d) for d in invariant_factors(sympy.Matrix(m)) if d != 0]
        assert ours == theirs, (m, ours, theirs)


def test_tietze_examples():
    p = presentation(["a"], [multiply(gen("a"), invert(gen("a")))])
    out = tietze_simplify(p).presentation
    assert out.labels() == ("a",) and out.relators == ()
    # raw projective C_1 collapses to a single free generator
    raw = raw_presentation(bmf_cn(1), projective=True)
    out = tietze_simplify(raw).presentation
    assert len(out.generators) == 1
    assert out.relators == ()


def test_tietze_eliminates_primed_generator_first():
    raw = raw_presentation(bmf_cn(2))
    out = tietze_simplify(raw, max_passes=1).presentation
    assert "x1p" not in out.labels()


def test_tietze_budget_flag():
    raw = raw_presentation(bmf_cn(3), projective=True)
    res = tietze_simplify(raw, max_passes=1)
    assert res.exhausted
    full = tietze_simplify(raw)
    assert not full.exhausted


def test_count_homs_examples():
    free1 = presentation(["a"], [])
    assert count_homs(free1, S3) == 6
    p = presentation(["a", "b"],
                     [multiply(parse_word("a b a b"), invert(parse_word("b a b a"))),
                      parse_word("a b a b")])
    # Z * Z/2: 6 choices for the free factor times 4 elements of order <= 2
    assert count_homs(p, S3) == 24
    assert count_homs(p, S3) == count_homs_bruteforce(p, S3)


def test_count_homs_matches_bruteforce_random():
    rng = random.Random(41)
    for _ in range(40):
        p = random_presentation(rng, max_gens=3, max_relators=3, max_len=6)
        assert count_homs(p, S3) == count_homs_bruteforce(p, S3)


def test_count_homs_matches_bruteforce_on_catalog():
    for p in (presentation_c2_proj(), presentation_t00()):
        assert count_homs(p, S3) == count_homs_bruteforce(p, S3)
        assert count_homs(p, A4) == count_homs_bruteforce(p, A4)


def test_fingerprint_free_group():
    fp = fingerprint(presentation(["a"], []), ("S3",))
    assert fp.counts == {"S3": 6}
    fp2 = fingerprint(presentation(["a", "b"], []), ("S3",))
    assert fp2.counts == {"S3": 36}


def test_tietze_preserves_fingerprints_random():
    rng = random.Random(43)
    for _ in range(200):
        p = random_presentation(rng, max_gens=3, max_relators=3, max_len=5)
        simplified = tietze_simplify(p).presentation
        assert count_homs(p, S3) == count_homs(simplified, S3)
        a1, a2 = abelianization(p), abelianization(simplified)
        assert (a1.rank_free, a1.torsion) == (a2.rank_free, a2.torsion)


def test_compare_distinguishes():
    z2 = presentation(["a"], [parse_word("a a")])
    z3 = presentation(["a"], [parse_word("a a a")])
    rep = compare(z2, z3, ("S3",))
    assert rep.verdict == "distinguished"
    assert rep.per_target["S3"] == (4, 3)


def test_compare_t00_vs_free_group():
    free2 = presentation(["a", "b"], [])
    rep = compare(presentation_t00(), free2, ("S3",))
    assert rep.verdict == "distinguished"
    assert rep.per_target["S3"] == (24, 36)


def test_s4_skip_rule():
    many = presentation([f"g{i}" for i in range(1, 8)], [])
    fp = fingerprint(many, ("S3", "S4"))
    assert "S4" in fp.skipped
    assert "S4" not in fp.counts

import pytest

import golden
from conicline.catalog import (SingType, bmf_cn, bmf_tn0, bmf_tnm)
from conicline.vankampen import (parse_presentation,
                                 presentation, presentation_from_json,
                                 presentation_text, presentation_to_json,
                                 raw_presentation, relation_pair,
                                 relator_equal_up_to_cyc, relator_for)
from conicline.words import Word, gen, invert, multiply, parse_word


def rel_words(bmf):
    p = raw_presentation(bmf)
    return list(zip(p.origins, p.relators))


def assert_matches(bmf, relations, allowed_unmatched=()):
    got = rel_words(bmf)
    want = golden.relator_words(relations)
    uw, ug = golden.match_relators(got, want, relator_equal_up_to_cyc)
    assert not uw, f"paper relations not produced: {uw}"
    stray = [tag for tag in ug
             if not any(key in tag for key in allowed_unmatched)]
    assert not stray, f"engine relators with no paper counterpart: {stray}"


def test_relator_for_shapes():
    a, b = gen("a"), gen("b")
    assert relator_for(SingType.BRANCH, a, b) == multiply(a, invert(b))
    assert relator_for(SingType.NODE, a, b) == parse_word("a b a^-1 b^-1")
    assert relator_for(SingType.TANGENCY, a, b) == \
        parse_word("a b a b a^-1 b^-1 a^-1 b^-1")


def test_relation_pair_c1_verbatim():
    b = bmf_cn(1)
    pairs = [relation_pair(f, b.strand_count, b.labels) for f in b.factors]
    assert pairs[0] == (gen("x1"), gen("x1p"))
    assert pairs[1] == (parse_word("x1p x1 x1p^-1"), gen("x2"))
    assert pairs[2] == (gen("x1"), parse_word("x1p^-1 x2^-1 x1p x2 x1p"))


def test_relation_pair_c2_verbatim():
    b = bmf_cn(2)
    pairs = [relation_pair(f, b.strand_count, b.labels) for f in b.factors]
    assert pairs[0] == (gen("x1"), gen("x1p"))
    assert pairs[1] == (parse_word("x1p x1 x1p^-1"), gen("x2"))
    assert pairs[2] == (parse_word("x2 x1p x1 x1p^-1 x2 x1p x1^-1 x1p^-1 x2^-1"),
                        gen("x3"))
    assert pairs[3] == (parse_word("x2 x1p x1 x1p^-1 x2^-1"), gen("x3"))
    assert pairs[4] == (gen("x1"),
                        parse_word("x1p^-1 x2^-1 x3^-1 x1p x3 x2 x1p"))


def test_c1_raw_presentation_golden():
    assert_matches(bmf_cn(1), golden.c1_relations())


def test_c2_raw_presentation_golden():
    assert_matches(bmf_cn(2), golden.c2_relations())


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_cn_raw_presentation_golden(n):
    assert_matches(bmf_cn(n), golden.cn_relations(n))


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_tn0_raw_presentation_golden(n):
    assert_matches(bmf_tn0(n), golden.tn0_relations(n))


@pytest.mark.parametrize("n,m", [(1, 1), (1, 2), (2, 1), (2, 2), (3, 2),
                                 (2, 3), (3, 3)])
def test_tnm_raw_presentation_golden(n, m):
    assert_matches(bmf_tnm(n, m), golden.tnm_relations(n, m))


def test_endpoint_abelianization_of_pairs():
    # A and B abelianize to the base endpoints' generators
    for bmf in (bmf_cn(3), bmf_tnm(2, 2)):
        for f in bmf.factors:
            a, b = relation_pair(f, bmf.strand_count, bmf.labels)
            i, j = f.twist.endpoints()
            for w, endpoint in ((a, i), (b, j)):
                sums = {}
                for lab, sign in w.letters:
                    sums[lab] = sums.get(lab, 0) + sign
                nonzero = {lab for lab, v in sums.items() if v}
                assert nonzero == {bmf.labels[endpoint - 1]}, (f.origin, w)


def test_raw_presentation_counts():
    p = raw_presentation(bmf_tnm(2, 2), projective=True)
    assert len(p.relators) == 25
    assert p.origins[-1] == "projective"
    assert p.relators[-1] == parse_word(
        "x8 x7 x6 x5 x4 x3 x2 x1")


def test_projective_relator_for_c1():
    p = raw_presentation(bmf_cn(1), projective=True)
    assert p.relators[-1] == parse_word("x2 x1p x1")


def test_relator_equal_up_to_cyc():
    a = parse_word("x1 x2 x1^-1 x2^-1")
    b = parse_word("x2 x1^-1 x2^-1 x1")
    assert relator_equal_up_to_cyc(a, b)
    assert relator_equal_up_to_cyc(parse_word("x1 x2^-1"), parse_word("x2 x1^-1"))
    assert not relator_equal_up_to_cyc(parse_word("x1 x2"), parse_word("x1 x2^-1"))
    assert relator_equal_up_to_cyc(Word(), Word())


def test_presentation_invariants():
    with pytest.raises(ValueError):
        presentation(["x1"], [gen("x2")])
    p = presentation(["x1", "x2"], [multiply(gen("x1"), gen("x2"), invert(gen("x1")))])
    # cyclically reduced on construction
    assert p.relators[0] == gen("x2")


def test_parse_presentation_requires_header():
    with pytest.raises(ValueError):
        parse_presentation("x1 x2^-1")


def test_presentation_text_roundtrip():
    p = raw_presentation(bmf_cn(1), projective=True)
    again = parse_presentation(presentation_text(p))
    assert again.labels() == p.labels()
    assert again.relators == p.relators
    j = presentation_from_json(presentation_to_json(p))
    assert j.labels() == p.labels()
    assert j.relators == p.relators
    assert j.origins == p.origins

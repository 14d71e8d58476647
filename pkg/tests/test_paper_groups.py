from conicline.fpgroup import abelianization, compare, fingerprint
from conicline.paper_groups import (presentation_c1_affine, presentation_c1_proj,
                                    presentation_c2_affine, presentation_c2_proj,
                                    presentation_cn_affine, presentation_cn_proj,
                                    presentation_t00, presentation_t10,
                                    presentation_t20,
                                    presentation_tn0, presentation_tnm)
from conicline.vankampen import relator_equal_up_to_cyc
from conicline.words import parse_word


def test_small_cases_are_special_cases():
    assert compare(presentation_cn_affine(1), presentation_c1_affine(),
                   ("S3", "D4")).consistent
    assert compare(presentation_cn_proj(2), presentation_c2_proj(),
                   ("S3", "D4")).consistent
    assert compare(presentation_tn0(1), presentation_t10(), ("S3", "D4")).consistent
    assert compare(presentation_tn0(2), presentation_t20(), ("S3", "D4")).consistent


def test_t00_relators():
    p = presentation_t00()
    assert [str(r) for r in p.relators]
    assert p.relators[0] == parse_word("x1 x2 x1 x2")
    assert p.relators[1] == parse_word("x2 x1 x2 x1")


def test_tnm_11_instantiation():
    p = presentation_tnm(1, 1)
    assert p.labels() == ("x2", "x5", "x6")
    by_family = {}
    for origin, rel in zip(p.origins, p.relators):
        by_family.setdefault(origin, []).append(rel)
    assert set(by_family) == {"(1)", "(2)", "(3)", "(8)", "(9)"}
    # relation (1) at m = 1 collapses to [x5, x6] up to cyclic moves
    assert relator_equal_up_to_cyc(by_family["(1)"][0],
                                   parse_word("x5 x6 x5^-1 x6^-1"))


def test_tnm_m0_specializes_to_tn0():
    for n in (1, 2, 3):
        spec = presentation_tnm(n, 0)
        tn0 = presentation_tn0(n)
        assert len(spec.generators) == len(tn0.generators)
        assert compare(spec, tn0, ("S3", "D4")).consistent


def test_abelianizations_of_stated_presentations():
    for n in (1, 2, 3, 4):
        res = abelianization(presentation_cn_proj(n))
        assert (res.rank_free, res.torsion) == (n, ())
    for n in (1, 2, 3):
        res = abelianization(presentation_tn0(n))
        assert (res.rank_free, res.torsion) == (n + 1, ())
    for n, m in ((1, 1), (2, 2), (3, 1)):
        res = abelianization(presentation_tnm(n, m))
        assert (res.rank_free, res.torsion) == (n + m + 1, ())


def test_c1_groups():
    assert abelianization(presentation_c1_proj()).rank_free == 1
    res = abelianization(presentation_c1_affine())
    assert (res.rank_free, res.torsion) == (2, ())
    # Z^2 has exactly |G|-squared... no: hom(Z^2, S3) counts commuting pairs
    assert fingerprint(presentation_c1_affine(), ("S3",)).counts["S3"] == 18


def test_c2_affine_vs_projective():
    rep = compare(presentation_c2_affine(), presentation_c2_proj(), ("S3",))
    # the affine group surjects onto the projective one; fingerprints differ
    assert rep.per_target["S3"][0] >= rep.per_target["S3"][1]

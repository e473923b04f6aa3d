"""Tests for pseudo-horizontal and pseudo-vertical surface machinery."""

import pytest

from sfsnorm.errors import PresentationError
from sfsnorm.lens import LensCurve
from sfsnorm.seifert import SeifertPresentation, homology_structure
from sfsnorm.surfaces import (
    HORIZONTAL,
    VERTICAL,
    PHParams,
    REASON_SLOPE_SUM,
    cap_slopes,
    horizontal_report,
    ph_class,
    ph_exists,
    ph_genus,
    ph_obstruction,
    surface_report_from_json,
    vertical_surfaces,
)


def M(*pairs):
    return SeifertPresentation.from_pairs(pairs)


def P(*pairs):
    return PHParams(tuple(pairs))


M_238 = M((2, -1), (3, 1), (8, 1))


class TestPHParams:
    def test_lcm(self):
        assert P((2, -1), (3, 1), (6, 1)).lam == 6

    def test_rejects_nonpositive_or_noncoprime(self):
        with pytest.raises(PresentationError):
            P((0, 1), (3, 1), (6, 1))
        with pytest.raises(PresentationError):
            P((2, -1), (3, 1), (6, 2))


class TestPhExists:
    def test_figure_example(self):
        assert ph_exists(M_238, P((2, -1), (3, 1), (6, 1)))

    def test_all_fixed_triple_fails(self):
        # Capping every boundary with disks would need the fiber slopes
        # themselves, whose sum is the (nonzero) Euler sum, so the slope
        # sum condition already rejects the orientable configuration.
        p = P((2, -1), (3, 1), (8, 1))
        assert not ph_exists(M_238, p)
        assert ph_obstruction(M_238, p) == REASON_SLOPE_SUM

    def test_all_lambda_equal_even_fails(self):
        m = M((2, -1), (2, 1), (6, 1))
        # With all three l equal and even every m is odd, so the slope
        # sum cannot vanish; the first violated condition reports it.
        assert ph_obstruction(m, P((2, 1), (2, 1), (2, 1))) \
            == REASON_SLOPE_SUM
        assert not ph_exists(m, P((2, 1), (2, 1), (2, 1)))

    def test_reason_order(self):
        assert ph_obstruction(M_238, P((2, -1), (3, 1), (7, 2))) \
            == REASON_SLOPE_SUM
        # Sum zero, parities fine, l_3 neither the lcm nor the fiber pair.
        assert ph_obstruction(M_238, P((2, -1), (6, 1), (3, 1))) \
            == "lcm_restriction"
        assert ph_obstruction(M_238, P((3, -1), (3, 1), (1, 0))) \
            == "lcm_restriction"
        # Sum zero, lcm fine, but m_1 and b_1 have different parities.
        m = M((3, 2), (5, 2), (7, 4))
        assert ph_obstruction(m, P((1, 1), (1, 1), (1, -2))) \
            == "fiber_congruence"


class TestCapSlopes:
    def test_fixed_pairs_give_meridian(self):
        caps = cap_slopes(M_238, P((2, -1), (3, 1), (6, 1)))
        assert caps[0] == LensCurve(0, 1)
        assert caps[1] == LensCurve(0, 1)
        assert caps[2] == LensCurve(2, -1)

    def test_even_and_coprime_for_existing_candidates(self):
        m = M((2, -1), (2, 1), (6, 1))
        for s in (1, 3, -1, 5):
            p = P((2, -1), (4, s), (4, 2 - s))
            if not ph_exists(m, p):
                continue
            for c in cap_slopes(m, p):
                assert c.twok % 2 == 0  # construction validates coprime


class TestPhGenus:
    def test_figure_example(self):
        assert ph_genus(M_238, P((2, -1), (3, 1), (6, 1))) == 3

    def test_isotopic_pair_example(self):
        m = M((2, -1), (3, 1), (4, 1))
        assert ph_genus(m, P((2, -1), (3, 1), (6, 1))) == 3

    def test_twelve_cover_example(self):
        m = M((3, -1), (4, 1), (14, 1))
        assert ph_genus(m, P((3, -1), (4, 1), (12, 1))) == 7

    def test_rejects_nonexistent(self):
        with pytest.raises(PresentationError):
            ph_genus(M_238, P((2, -1), (3, 1), (8, 1)))

    def test_closed_form_families(self):
        # Witness slopes of the three example families and their genus
        # in closed form, over the constraint-respecting grids.
        for m in (1, 2, 3):
            for n in range(2 * m + 2, 2 * m + 8):
                space = M((2, -1), (2 * m + 1, m), (2 * n, 1))
                p = P((2, -1), (2 * m + 1, m), (4 * m + 2, 1))
                assert ph_genus(space, p) == n - 1
        for n in range(7, 14):
            space = M((3, -1), (4, 1), (2 * n, 1))
            assert ph_genus(space, P((3, -1), (4, 1), (12, 1))) == n
        for mm in (2, 3, 4):
            for n2 in range(mm, mm + 4):
                for n3 in range(mm, mm + 4):
                    if n2 + n3 <= 2 * mm:
                        continue
                    space = M((mm, -1), (2 * n2, 1), (2 * n3, 1))
                    p = P((mm, -1), (2 * mm, 1), (2 * mm, 1))
                    assert ph_genus(space, p) == n2 + n3 - 2

    def test_completion_invariance(self):
        m = M((2, -1), (2, 1), (6, 1))
        p = P((2, -1), (4, 1), (4, 1))
        base = ph_genus(m, p)
        for t in range(-5, 6):
            shifted = SeifertPresentation(
                tuple(f.shifted(t) for f in m.fibers))
            assert ph_genus(shifted, p) == base


class TestPhClass:
    def test_cyclic_returns_unique_class(self):
        cls = ph_class(M_238, P((2, -1), (3, 1), (6, 1)))
        assert cls.parities == (1, 0, 1)

    def test_klein_four_parities(self):
        m = M((2, -1), (2, 1), (6, 1))
        p = P((2, -1), (4, 1), (4, 1))
        assert ph_exists(m, p)
        # Intersections with h: m_i * lam / l_i = (-2, 1, 1).
        assert ph_class(m, p).parities == (0, 1, 1)

    def test_family_three_example(self):
        # ((m,-1),(2m,1),(2m,1)) hits h_2 and h_3 once each.
        m = M((2, -1), (4, 1), (6, 1))
        p = P((2, -1), (4, 1), (4, 1))
        assert ph_exists(m, p)
        assert ph_class(m, p).parities == (0, 1, 1)

    def test_trivial_homology_rejected(self):
        m = M((3, 1), (5, 1), (7, 1))
        with pytest.raises(PresentationError):
            ph_class(m, P((1, 0), (1, 1), (1, -1)))


class TestVerticalSurfaces:
    def test_klein_four_triple(self):
        reports = vertical_surfaces(M((2, -1), (2, 1), (6, 1)))
        by_pair = {r.vertical.connects: r for r in reports}
        assert by_pair[(1, 2)].genus == 2
        assert by_pair[(1, 3)].genus == 4
        assert by_pair[(2, 3)].genus == 4
        assert by_pair[(1, 2)].z2class.parities == (1, 1, 0)
        assert by_pair[(1, 2)].norm_contribution == 0

    def test_two_even_single(self):
        reports = vertical_surfaces(M_238)
        assert len(reports) == 1
        r = reports[0]
        assert r.vertical.connects == (1, 3)
        assert r.genus == 5
        assert r.z2class.parities == (1, 0, 1)

    def test_all_odd_none(self):
        assert vertical_surfaces(M((3, 2), (5, 2), (7, 4))) == []

    def test_classes_match_homology(self):
        m = M((2, -1), (2, 1), (6, 1))
        classes = set(homology_structure(m).nonzero_classes)
        assert {r.z2class for r in vertical_surfaces(m)} == classes


class TestSurfaceReport:
    def test_json_round_trip(self):
        m = M((2, -1), (2, 1), (6, 1))
        reports = vertical_surfaces(m)
        reports.append(horizontal_report(m, P((2, -1), (4, 1), (4, 1))))
        for r in reports:
            data = r.to_json_dict()
            again = surface_report_from_json(data)
            assert again == r
            assert data["norm"] == max(0, r.genus - 2)

    def test_kinds(self):
        m = M((2, -1), (2, 1), (6, 1))
        assert vertical_surfaces(m)[0].kind == VERTICAL
        r = horizontal_report(m, P((2, -1), (4, 1), (4, 1)))
        assert r.kind == HORIZONTAL
        assert r.genus == 4

import random
from fractions import Fraction

import pytest

from torusfix.algebras import (
    CMElement,
    CMFieldDesc,
    QuaternionAlgebraDesc,
    RealQuadElement,
    builtin_examples,
    cm_char_poly,
    cm_classify,
    cm_fix,
    find_small_eigenvalue_parameter,
    mcmullen_family,
    periodic_eigenvalue_table,
    quat_char_poly,
    quat_classify,
    quat_fix,
    quat_one_root_periodicity_criterion,
    quat_reduced_charpoly,
    quat_reduced_norm,
    quat_root_data,
    quaternion_element,
    rm_char_poly,
    rm_classify,
    rm_eigenvalues,
    rm_fix,
    sl2_family,
)
from torusfix import behavior
from torusfix.endomorphisms import char_poly_rational, fix_count_quartic, fix_sequence
from torusfix.errors import (
    NonIntegralError,
    NotDivisionAlgebraError,
    ZeroEndomorphismError,
    ZeroNormError,
)
from torusfix.polynomials import cyclotomic, parse_poly


class TestRealQuadratic:
    def test_requires_square_free(self):
        with pytest.raises(ValueError):
            RealQuadElement(4, 1, 1)
        with pytest.raises(ValueError):
            RealQuadElement(1, 1, 1)

    def test_char_poly_sqrt2(self):
        x = RealQuadElement(2, -1, 1)  # -1 + sqrt(2)
        assert rm_char_poly(x).poly == parse_poly("1,-4,2,4,1")

    def test_char_poly_golden_ratio(self):
        x = RealQuadElement(5, 0, 1)  # (1 + sqrt(5)) / 2
        assert rm_char_poly(x).poly == parse_poly("1,2,-1,-2,1")

    def test_eigenvalues_are_embeddings(self):
        (u1, v1, d1), (u2, v2, d2) = rm_eigenvalues(RealQuadElement(2, -1, 1))
        assert (u1, v1, d1) == (-1, 1, 2) and (u2, v2) == (-1, -1)

    def test_norm_growth(self):
        x = RealQuadElement(2, -1, 1)
        assert [rm_fix(x, n) for n in (1, 2, 3)] == [4, 16, 196]

    def test_classification(self):
        assert rm_classify(RealQuadElement(2, -1, 1)).verdict == behavior.B1
        assert rm_classify(RealQuadElement(2, 3, 0)).verdict == behavior.B1
        r = rm_classify(RealQuadElement(2, -1, 0))
        assert r.verdict == behavior.B2 and r.period == 2
        assert rm_classify(RealQuadElement(2, 1, 0)).verdict == behavior.B2

    def test_zero_rejected(self):
        with pytest.raises(ZeroEndomorphismError):
            rm_classify(RealQuadElement(2, 0, 0))


class TestQuaternionBasics:
    def test_symbol_normalization_swaps_generators(self):
        e = quaternion_element(2, 3, 0, 1, 1, 1)
        assert (e.algebra.alpha, e.algebra.beta) == (3, 2)
        assert e.algebra.original == (2, 3)
        assert (e.b, e.c) == (1, 1)

    def test_definite_symbol_rejected(self):
        with pytest.raises(ValueError):
            QuaternionAlgebraDesc.normalized(-2, -3)

    def test_reduced_norm(self):
        x = quaternion_element(3, 2, 0, 1, 1, 1)
        assert quat_reduced_norm(x) == -3 - 2 + 6  # 1

    def test_reduced_charpoly_integrality(self):
        with pytest.raises(NonIntegralError):
            quat_reduced_charpoly(quaternion_element(3, 2, Fraction(1, 2), 0, 0, 0))

    def test_root_data(self):
        data = quat_root_data(quaternion_element(5, 4, 3, 0, 1, 0))
        assert data.kind == "rational" and data.disc == 4

    def test_quartic_is_square_of_reduced(self):
        x = quaternion_element(3, 2, 1, 1, 1, 0)
        chi = quat_reduced_charpoly(x)
        assert quat_char_poly(x).poly == chi * chi


class TestQuaternionClassification:
    def test_unit_circle_element(self):
        x = quaternion_element(3, 2, 0, 1, 1, 1)  # chi = t^2 + 1
        assert quat_reduced_charpoly(x) == parse_poly("1,0,1")
        r = quat_classify(x)
        assert r.verdict == behavior.B2 and r.period == 4
        assert r.cycle == (4, 16, 4, 0)
        assert [quat_fix(x, n) for n in (1, 4)] == [4, 0]
        assert quat_one_root_periodicity_criterion(x)

    def test_sixth_root_half_integral(self):
        x = quaternion_element(2, -3, Fraction(1, 2), 0, Fraction(1, 2), 0)
        assert quat_reduced_charpoly(x) == parse_poly("1,-1,1")
        r = quat_classify(x)
        assert r.verdict == behavior.B2 and r.period == 6
        assert quat_fix(x, 3) == 16

    def test_third_root_half_integral(self):
        x = quaternion_element(2, -3, Fraction(-1, 2), 0, Fraction(1, 2), 0)
        assert quat_reduced_charpoly(x) == parse_poly("1,1,1")
        assert quat_classify(x).verdict == behavior.B2

    def test_real_quadratic_spectrum_grows(self):
        x = quaternion_element(3, 2, 1, 1, 0, 0)  # roots 1 +- sqrt(3)
        r = quat_classify(x)
        assert r.verdict == behavior.B1
        assert not quat_one_root_periodicity_criterion(x)

    def test_scalars(self):
        r = quat_classify(quaternion_element(3, 2, -1, 0, 0, 0))
        assert r.verdict == behavior.B2 and r.cycle == (16, 0)
        assert quat_classify(quaternion_element(3, 2, 2, 0, 0, 0)).verdict == behavior.B1

    def test_zero_norm_certifies_split_symbol(self):
        with pytest.raises(ZeroNormError):
            quat_classify(quaternion_element(1, 1, 1, 1, 0, 0))

    def test_unit_eigenvalue_certifies_split_symbol(self):
        # roots 1 and 5: a non-scalar with eigenvalue 1 cannot exist in a
        # division algebra
        with pytest.raises(NotDivisionAlgebraError):
            quat_classify(quaternion_element(5, 4, 3, 0, 1, 0))

    def test_zero_rejected(self):
        with pytest.raises(ZeroEndomorphismError):
            quat_classify(quaternion_element(3, 2, 0, 0, 0, 0))


CM_FIELD = CMFieldDesc(cyclotomic(5))


class TestCMField:
    def test_subfield_radicands(self):
        assert CMFieldDesc(cyclotomic(5)).d == 5
        assert CMFieldDesc(cyclotomic(8)).d == 2
        assert CMFieldDesc(cyclotomic(10)).d == 5
        assert CMFieldDesc(cyclotomic(12)).d == 3

    def test_rejects_non_cm_quartic(self):
        with pytest.raises(ValueError):
            CMFieldDesc(parse_poly("1,1,0,0,1"))  # totally imaginary, not CM

    def test_rejects_reducible(self):
        with pytest.raises(ValueError):
            CMFieldDesc(parse_poly("1,0,2,0,1"))  # (t^2+1)^2

    def test_rejects_real_quartic(self):
        with pytest.raises(ValueError):
            CMFieldDesc(parse_poly("1,-4,2,4,1"))

    def test_declared_radicand_checked(self):
        with pytest.raises(ValueError):
            CMFieldDesc(cyclotomic(5), d=3)
        assert CMFieldDesc(cyclotomic(5), d=5).d == 5


class TestCMElements:
    def test_generator_char_poly_is_minimal(self):
        zeta = CMElement(CM_FIELD, [0, 1, 0, 0])
        assert cm_char_poly(zeta).poly == cyclotomic(5)

    def test_rational_element(self):
        assert cm_char_poly(CMElement(CM_FIELD, [-1, 0, 0, 0])).poly == parse_poly("1,4,6,4,1")

    def test_shifted_generator(self):
        x = CMElement(CM_FIELD, [1, 1, 0, 0])
        assert cm_char_poly(x).poly == parse_poly("1,-2,4,-3,1")

    def test_non_integral_rejected(self):
        with pytest.raises(NonIntegralError):
            cm_char_poly(CMElement(CM_FIELD, [Fraction(1, 2), 0, 0, 0]))

    def test_fix_values(self):
        zeta = CMElement(CM_FIELD, [0, 1, 0, 0])
        assert cm_fix(zeta, 1) == 5
        assert cm_fix(zeta, 5) == 0
        assert cm_fix(CMElement(CM_FIELD, [-1, 0, 0, 0]), 1) == 16

    def test_classification(self):
        zeta = CMElement(CM_FIELD, [0, 1, 0, 0])
        r = cm_classify(zeta)
        assert r.verdict == behavior.B2 and r.period == 5
        assert cm_classify(CMElement(CM_FIELD, [1, 1, 0, 0])).verdict == behavior.B1
        assert cm_classify(CMElement(CM_FIELD, [-1, 0, 0, 0])).period == 2

    def test_zero_rejected(self):
        with pytest.raises(ZeroEndomorphismError):
            cm_classify(CMElement(CM_FIELD, [0, 0, 0, 0]))


class TestPeriodicTables:
    def test_quaternion_table(self):
        table = set(periodic_eigenvalue_table("quaternion"))
        assert table == {cyclotomic(k) for k in (1, 2, 3, 4, 6)}

    def test_cm_table(self):
        table = periodic_eigenvalue_table("cm")
        assert len(table) == 9
        assert set(table) == {cyclotomic(k) for k in (1, 2, 3, 4, 5, 6, 8, 10, 12)}

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            periodic_eigenvalue_table("octonion")

    def test_periodic_eigenvalues_come_from_table(self):
        table = set(periodic_eigenvalue_table("quaternion"))
        rng = random.Random(77)
        for _ in range(200):
            al, be = rng.choice([2, 3, 5, 7]), rng.choice([2, 3, -1, -2])
            coords = [rng.randint(-2, 2) for _ in range(4)]
            if all(c == 0 for c in coords):
                continue
            x = quaternion_element(al, be, *coords)
            try:
                r = quat_classify(x)
            except (ZeroNormError, NotDivisionAlgebraError, NonIntegralError):
                continue
            if r.verdict == behavior.B2:
                chi = quat_reduced_charpoly(x)
                factors = {cyclotomic(k) for k in set(r.eigen.unity_orders)}
                assert factors <= table
                for f in factors:
                    assert f.divides(chi * chi)


class TestFamilies:
    def test_small_root_family(self):
        assert mcmullen_family(0).poly == parse_poly("1,1,0,0,1")
        assert mcmullen_family(1).poly == parse_poly("1,1,1,0,1")
        with pytest.raises(ValueError):
            mcmullen_family(-1)
        assert behavior.classify(mcmullen_family(0)).verdict == behavior.B1

    def test_small_eigenvalue_search(self):
        assert find_small_eigenvalue_parameter(Fraction(1)) == 0
        assert find_small_eigenvalue_parameter(Fraction(1, 2)) == 5
        with pytest.raises(ValueError):
            find_small_eigenvalue_parameter(Fraction(3, 2))

    def test_small_eigenvalue_monotone(self):
        values = [
            find_small_eigenvalue_parameter(eps)
            for eps in (Fraction(9, 10), Fraction(1, 2), Fraction(3, 10))
        ]
        assert values == sorted(values)

    def test_shear_family(self):
        r = behavior.classify(sl2_family(1, 1, 0, 1))
        assert r.verdict == behavior.B2 and r.period == 1 and r.cycle == (0,)
        assert behavior.classify(sl2_family(2, 1, 1, 1)).verdict == behavior.B1
        rot = behavior.classify(sl2_family(1, -1, 1, 0))
        assert rot.verdict == behavior.B2 and rot.period == 6
        with pytest.raises(ValueError):
            sl2_family(1, 1, 1, 1)

    def test_builtin_examples(self):
        named = builtin_examples()
        assert set(named) == {
            "rotation_e_times_e",
            "gaussian_i_2i",
            "rm_sqrt2",
            "mcmullen_0",
            "neg_identity",
            "mult_2",
        }
        assert fix_sequence(named["rotation_e_times_e"], 6) == [1, 9, 16, 9, 1, 0]
        assert char_poly_rational(named["rm_sqrt2"]).poly == parse_poly("1,-4,2,4,1")
        assert char_poly_rational(named["gaussian_i_2i"]).poly == parse_poly("4,0,5,0,1")


class TestCrossPresentation:
    def test_quat_fix_matches_quartic_fix(self):
        rng = random.Random(3)
        checked = 0
        while checked < 40:
            al, be = rng.choice([2, 3, 5]), rng.choice([2, -1, -2])
            x = quaternion_element(al, be, *[rng.randint(-2, 2) for _ in range(4)])
            p = quat_char_poly(x).poly
            for n in range(1, 6):
                assert quat_fix(x, n) == fix_count_quartic(p, n)
            checked += 1

    def test_cm_fix_matches_quartic_fix(self):
        zeta = CMElement(CM_FIELD, [1, 1, 1, 0])
        p = cm_char_poly(zeta).poly
        for n in range(1, 8):
            assert cm_fix(zeta, n) == fix_count_quartic(p, n)

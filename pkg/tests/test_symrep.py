import pytest

from eqkl.partitions import dim_specht, partitions_of
from eqkl.symrep import (
    SymmPoly,
    SymmRep,
    completion_symm,
    correction_p,
    correction_q,
    correction_r,
    correction_z,
    induct_product,
    palindromic_completion,
    restrict_one,
    uniform_p,
    uniform_q,
    uniform_z,
)


def V(*parts):
    lam = tuple(parts)
    return SymmRep(sum(lam), {lam: 1})


def triv(n):
    return SymmRep.trivial(n)


def test_induct_product_pieri():
    assert induct_product(triv(1), V(3)) == V(4) + V(3, 1)
    assert induct_product(triv(2), V(2, 2)) == V(4, 2) + V(3, 2, 1) + V(2, 2, 2)
    assert induct_product(triv(2), SymmRep(2)) == SymmRep(4)


def test_induct_product_general_symmetry():
    a, b = V(2, 1), V(2)
    assert induct_product(a, b) == induct_product(b, a)
    total = induct_product(a, b)
    assert total.dim() == dim_specht((2, 1)) * dim_specht((2,)) * 10  # C(5,2)=10


def test_restrict_one():
    assert restrict_one(V(2, 1)) == V(2) + V(1, 1)
    assert restrict_one(V(5)) == V(4)
    assert restrict_one(V(2, 2)) == V(2, 1)
    r = V(3, 1) + V(2, 2)
    assert restrict_one(r).dim() == r.dim()
    with pytest.raises(ValueError):
        restrict_one(SymmRep(0, {(): 1}))


def test_uniform_p_examples():
    assert uniform_p(1, 5) == SymmPoly.constant(triv(5))
    p48 = uniform_p(4, 8)
    assert p48.coeff(0) == triv(8)
    assert p48.coeff(1) == V(5, 3) + V(6, 2)
    assert p48.dims() == [1, 48]
    assert uniform_p(5, 5) == SymmPoly.constant(triv(5))
    for k in range(1, 8):
        for n in range(k, 8):
            assert 2 * uniform_p(k, n).poly_degree < k


def test_uniform_q_examples():
    assert uniform_q(1, 6) == SymmPoly.constant(V(6))
    assert uniform_q(2, 4) == SymmPoly.constant(V(3, 1))
    # the Boolean matroid: the i = 1 shape is invalid, so only t^0 survives
    assert uniform_q(4, 4) == SymmPoly.constant(V(1, 1, 1, 1))


def test_uniform_z_examples():
    assert uniform_z(1, 4).coeffs == [triv(4), triv(4)]
    z23 = uniform_z(2, 3)
    assert z23.coeff(1) == V(3) + V(2, 1)
    assert z23.dims() == [1, 3, 1]
    from math import comb

    for n in range(1, 7):
        assert uniform_z(n, n).dims() == [comb(n, i) for i in range(n + 1)]


def test_uniform_z_palindromic():
    for k in range(1, 7):
        for n in range(k, 8):
            z = uniform_z(k, n)
            assert z.poly_degree == k
            for i in range(k + 1):
                assert z.coeff(i) == z.coeff(k - i)


def test_correction_p_examples():
    assert correction_p(1, 5) == SymmPoly.constant(V(5))
    assert correction_p(2, 6).is_zero()
    p44 = correction_p(4, 4)
    assert p44.coeff(0).is_zero() and p44.coeff(1) == V(3, 1)


def test_correction_q_examples():
    assert correction_q(1, 5) == SymmPoly.constant(V(5))
    q44 = correction_q(4, 4)
    assert q44.coeff(0) == V(1, 1, 1, 1) and q44.coeff(1) == V(2, 1, 1)
    assert correction_q(2, 5) == SymmPoly.constant(V(4, 1))


def test_correction_z_examples():
    assert correction_z(1, 7).is_zero()
    for h in (2, 3, 4, 6):
        z = correction_z(2, h)
        assert z.coeff(0).is_zero()
        assert z.coeff(1) == V(h - 1, 1)
        assert z.coeff(2).is_zero()


def test_correction_r_examples():
    for h in (3, 5):
        r = correction_r(2, h)
        assert r.coeffs == [SymmRep(h), V(h - 1, 1)]
    with pytest.raises(ValueError):
        correction_r(1, 4)
    with pytest.raises(ValueError):
        correction_p(5, 4)


def test_model_matroid_differences():
    # correction = restricted uniform polynomial of the relaxation minus the
    # uniform polynomial of the hyperplane factor, for all 2 <= k <= h <= 7
    for k in range(2, 8):
        for h in range(k, 8):
            res_p = uniform_p(k, h + 1).map_coeffs(restrict_one, degree=h)
            assert res_p - uniform_p(k - 1, h) == correction_p(k, h)
            res_q = uniform_q(k, h + 1).map_coeffs(restrict_one, degree=h)
            assert res_q - uniform_q(k - 1, h) == correction_q(k, h)


def test_r_completion_reproduces_p_and_z():
    for k in range(2, 8):
        for h in range(k, 8):
            p, z = completion_symm(correction_r(k, h), k)
            assert p == correction_p(k, h), (k, h)
            assert z == correction_z(k, h), (k, h)


def test_honesty_of_closed_forms():
    for k in range(1, 8):
        for h in range(k, 8):
            for poly in (correction_p(k, h), correction_q(k, h),
                         correction_z(k, h), uniform_p(k, h),
                         uniform_q(k, h), uniform_z(k, h)):
                for c in poly.coeffs:
                    assert c.is_honest() or c.is_zero()


def test_palindromic_completion_generic():
    tau = triv(3)
    x = V(2, 1)
    # already palindromic: nothing added
    p, z = palindromic_completion([tau, x, tau], 2)
    assert p == [SymmRep(3)] * 3
    assert z == [tau, x, tau]
    # forced constant term
    p, z = palindromic_completion([SymmRep(3), SymmRep(3), tau], 2)
    assert p[0] == tau and z[0] == tau
    with pytest.raises(ValueError):
        palindromic_completion([tau, x, tau, x], 2)


def test_symm_poly_rendering():
    assert str(correction_p(4, 4)) == "V[3,1]*t"
    assert str(correction_q(4, 4)) == "V[1,1,1,1] + V[2,1,1]*t"
    assert str(correction_z(1, 5)) == "0"
    assert str(uniform_q(1, 5)) == "V[5]"
    two = SymmPoly(3, [V(3) + V(3)])
    assert str(two) == "2*V[3]"
    # reverse lexicographic partition order within one power
    assert str(SymmPoly.constant(V(2, 1) + V(3))) == "V[3] + V[2,1]"


def test_scalar_poly_multiplication():
    z = uniform_z(2, 4)
    doubled = z.mul_scalar_poly([1, 1])
    assert doubled.dims() == [1, 5, 5, 1]
    assert doubled.coeff(1) == z.coeff(0) + z.coeff(1)

import inspect

import pytest

from edwards_isogeny import (EdwardsCurve, OddIsogeny, OddKernel, OpCounter,
                             PrimeField, XZPoint, eval_3_isog, eval_5_isog,
                             get_3_isog, get_5_isog, run_3_isog, run_5_isog)

from conftest import pt


def xz(field, x, z=1):
    return XZPoint(field(x), field(z))


@pytest.fixture
def k3(f23):
    return xz(f23, -10)          # order-3 abscissa on E_{-1}/F_23


@pytest.fixture
def k5(f19):
    return xz(f19, 6), xz(f19, -8)   # x(Q), x(2Q) on E_{-1}/F_19


class TestCosts:
    def test_get_3(self, f23, k3):
        ctx = OpCounter()
        with f23.counting(ctx):
            get_3_isog(k3)
        assert (ctx.m, ctx.s, ctx.i) == (2, 3, 0)

    def test_eval_3(self, f23, k3):
        ctx = OpCounter()
        with f23.counting(ctx):
            eval_3_isog(xz(f23, 3), k3)
        assert (ctx.m, ctx.s, ctx.i) == (4, 2, 0)

    def test_run_3_total(self, f23, k3):
        ctx = OpCounter()
        with f23.counting(ctx):
            run_3_isog(xz(f23, 3), k3)
        assert (ctx.m, ctx.s) == (6, 5)

    def test_eval_5(self, f19, e19, k5):
        ctx = OpCounter()
        with f19.counting(ctx):
            eval_5_isog(xz(f19, 2), *k5, e19.d)
        assert (ctx.m, ctx.s, ctx.i) == (19, 6, 0)

    def test_get_5_with_shared_squares(self, f19, e19, k5):
        K1, K2 = k5
        shared = (K1.X.square() * K2.X.square(),
                  K1.Z.square() * K2.Z.square())
        ctx = OpCounter()
        with f19.counting(ctx):
            get_5_isog(K1, K2, e19.d, shared=shared)
        assert (ctx.m, ctx.s, ctx.i) == (2, 6, 0)

    def test_get_5_standalone(self, f19, e19, k5):
        ctx = OpCounter()
        with f19.counting(ctx):
            get_5_isog(*k5, e19.d)
        assert (ctx.m, ctx.s, ctx.i) == (4, 10, 0)

    def test_run_5_total(self, f19, e19, k5):
        ctx = OpCounter()
        with f19.counting(ctx):
            run_5_isog(xz(f19, 2), *k5, e19.d)
        assert (ctx.m, ctx.s, ctx.i) == (21, 12, 0)


class TestCodomain3:
    def test_worked_ratio(self, f23, k3):
        assert get_3_isog(k3).d_prime() == -2

    def test_matches_kernel_param(self, e23, f23):
        for P in e23.points():
            if P.is_identity():
                continue
            if not e23.scalar_mul(3, P).is_identity():
                continue
            ker = OddKernel.from_generator(P, 3, e23)
            assert get_3_isog(XZPoint.from_affine(P)).d_prime() \
                == ker.codomain_param()

    def test_projective_invariance(self, f23):
        base = get_3_isog(xz(f23, -10))
        for lam in (2, 5, 22):
            scaled = get_3_isog(xz(f23, -10 * lam, lam))
            assert base.same_class(scaled)
            assert scaled.d_prime() == -2


class TestEval3:
    def test_worked_point(self, f23, k3):
        img = eval_3_isog(xz(f23, 3), k3)
        assert not img.is_exceptional()
        assert img.affine_x() == -7

    def test_neutral(self, f23, k3):
        img = eval_3_isog(xz(f23, 1), k3)
        assert img.affine_x() == 1

    def test_homogeneous_in_both_arguments(self, f23, k3):
        want = eval_3_isog(xz(f23, 3), k3).affine_x()
        for lam in (2, 7):
            for mu in (3, 11):
                img = eval_3_isog(xz(f23, 3 * mu, mu), xz(f23, -10 * lam, lam))
                assert img.affine_x() == want

    def test_matches_affine_exhaustive(self, e23, f23):
        phi = OddIsogeny(OddKernel.from_generator(pt(e23, -10, 9), 3, e23))
        K1 = xz(f23, -10)
        for P in e23.points():
            img = eval_3_isog(XZPoint.from_affine(P), K1)
            assert not img.is_exceptional()
            assert img.affine_x() == phi(P).x

    def test_never_reads_d(self):
        """The 3-isogeny x-map is independent of the curve parameter:
        no d argument exists to read."""
        assert "d" not in inspect.signature(eval_3_isog).parameters
        assert "d" not in inspect.signature(get_3_isog).parameters


class TestEval5:
    @pytest.mark.parametrize("x,want", [(2, 0), (8, -1), (6, 1), (-8, 1), (1, 1)])
    def test_worked_points(self, f19, e19, k5, x, want):
        img = eval_5_isog(xz(f19, x), *k5, e19.d)
        assert not img.is_exceptional()
        assert img.affine_x() == want

    def test_matches_affine_exhaustive(self, e19, f19, k5):
        phi = OddIsogeny(OddKernel.from_generator(pt(e19, 6, 4), 5, e19))
        for P in e19.points():
            img = eval_5_isog(XZPoint.from_affine(P), *k5, e19.d)
            assert not img.is_exceptional()
            assert img.affine_x() == phi(P).x

    def test_homogeneous(self, f19, e19, k5):
        K1, K2 = k5
        want = eval_5_isog(xz(f19, 8), K1, K2, e19.d).affine_x()
        img = eval_5_isog(xz(f19, 8 * 3, 3), xz(f19, 6 * 7, 7),
                          xz(f19, -8 * 2, 2), e19.d)
        assert img.affine_x() == want


class TestCodomain5:
    def test_worked_ratio(self, f19, e19, k5):
        assert get_5_isog(*k5, e19.d).d_prime() == 2

    def test_matches_kernel_param(self, e19, k5):
        ker = OddKernel.from_generator(pt(e19, 6, 4), 5, e19)
        assert get_5_isog(*k5, e19.d).d_prime() == ker.codomain_param()

    def test_unit_kernel_gives_d_to_fifth(self, f19, e19):
        params = get_5_isog(xz(f19, 1), xz(f19, 1), e19.d)
        assert params.C == 1
        assert params.d_prime() == e19.d ** 5

    def test_projective_invariance(self, f19, e19, k5):
        """The scaled parameters are degree-balanced: rescaling either
        kernel point leaves D'/C' fixed, no Z = 1 normalization
        needed."""
        K1, K2 = k5
        base = get_5_isog(K1, K2, e19.d)
        for l1 in (2, 5):
            for l2 in (3, 11):
                scaled = get_5_isog(xz(f19, 6 * l1, l1),
                                    xz(f19, -8 * l2, l2), e19.d)
                assert base.same_class(scaled)
                assert scaled.d_prime() == 2

    def test_run_matches_separate_calls(self, f19, e19, k5):
        img, params = run_5_isog(xz(f19, 2), *k5, e19.d)
        assert img.same_class(eval_5_isog(xz(f19, 2), *k5, e19.d))
        assert params.same_class(get_5_isog(*k5, e19.d))


class TestXZPoint:
    def test_rejects_double_zero(self, f23):
        with pytest.raises(ValueError):
            XZPoint(f23.zero, f23.zero)

    def test_exceptional_representation(self, f23):
        P = XZPoint(f23.one, f23.zero)
        assert P.is_exceptional()

    def test_same_class(self, f23):
        assert xz(f23, 3).same_class(xz(f23, 9, 3))
        assert not xz(f23, 3).same_class(xz(f23, 4))

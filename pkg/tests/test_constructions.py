"""Reducible-scheme assembly: unions, the two X2 families, products, splits."""

import pytest

from lyucone.atoms import (p1xp1, plane_curve, plane_curve_in_p2,
                           presentation_of_smooth, projective_space)
from lyucone.constructions import (UnionClass, UnionInput, equidim_x2,
                                   gysin_split, nc_union, nonequidim_x2,
                                   perverse_product, union_classes_from_divisor,
                                   union_input_from_divisor, union_two_smooth)
from lyucone.errors import (InvalidClassError, NonEquidimensionalError,
                            PreconditionError, UnsupportedOperationError,
                            UnsupportedProductError)
from lyucone.graded import op_cokernel_dim_at, zero_op
from lyucone.lyubeznik import lambda_kj
from lyucone.oracle import euler_check, run_audit_windows
from lyucone.qlinalg import QMat

TWO_RULINGS = {"LA": {"e1": 1, "e2": 1}, "LB": {"e1": 2, "e2": 1}}


def glued_quadrics(amples=TWO_RULINGS):
    y = p1xp1()
    return nc_union(y, y.subvarieties["diagonal"], amples)


def test_nc_union_glued_quadrics_dims():
    x1 = glued_quadrics()
    piece = x1.pieces[2]
    assert piece.dims_by_degree() == {-2: 2, 0: 3, 2: 1}
    assert x1.pure
    assert euler_check(x1)
    assert all(ok for _, ok in run_audit_windows(x1))


def test_nc_union_cokernel_dimensions_differ():
    x1 = glued_quadrics()
    assert op_cokernel_dim_at(x1.op("LA", 2), 0) == 2
    assert op_cokernel_dim_at(x1.op("LB", 2), 0) == 1


def test_nc_union_rejects_bad_inputs():
    y = p1xp1()
    with pytest.raises(InvalidClassError):
        nc_union(y, y.subvarieties["diagonal"], {"L": {"e1": 1}})


def test_nc_union_plane_with_cubic_has_genus_kernel():
    emb = plane_curve_in_p2(3)
    x = nc_union(projective_space(2), emb, {"L": {"h": 1}})
    piece = x.pieces[2]
    # middle cohomology of the curve survives as the weight -1 part in
    # degree 0 (nothing to push onto in the plane)
    assert piece.dim_at(0, -1) == 2
    assert euler_check(x)


def test_union_two_smooth_wedge_of_lines():
    line = projective_space(1)
    pt = projective_space(0)
    push = {0: QMat.build(["h"], ["1"], [[1]])}
    u = UnionInput(line, line, pt, push, dict(push))
    cls = UnionClass("L", line.classes["h"], line.classes["h"], zero_op(pt.cohomology))
    x = union_two_smooth(u, [cls])
    piece = x.pieces[1]
    assert piece.dims_by_degree() == {-1: 2, 1: 1}
    assert euler_check(x)


def test_union_engines_agree_on_divisor_gluings():
    cases = [
        (p1xp1(), p1xp1().subvarieties["diagonal"], TWO_RULINGS),
        (projective_space(2), plane_curve_in_p2(3), {"L": {"h": 1}, "M": {"h": 2}}),
    ]
    for y, div, amples in cases:
        via_nc = nc_union(y, div, amples)
        via_mv = union_two_smooth(union_input_from_divisor(y, div),
                                  union_classes_from_divisor(y, div, amples))
        d = y.dim
        assert via_nc.pieces[d].dims_by_degree() == via_mv.pieces[d].dims_by_degree()
        for aname in amples:
            for k in range(-d, d + 1):
                assert (op_cokernel_dim_at(via_nc.op(aname, d), k)
                        == op_cokernel_dim_at(via_mv.op(aname, d), k)), (aname, k)
            for k in range(2, 2 * d + 3):
                assert (lambda_kj(via_nc, aname, k, d + 1)
                        == lambda_kj(via_mv, aname, k, d + 1))


def test_union_dims_do_not_depend_on_sign_convention():
    y = p1xp1()
    div = y.subvarieties["diagonal"]
    classes = union_classes_from_divisor(y, div, TWO_RULINGS)
    base = union_input_from_divisor(y, div)
    flipped = UnionInput(base.piece_a, base.piece_b, base.intersection,
                         base.push_a, base.push_b, sign=1)
    xa = union_two_smooth(base, classes)
    xb = union_two_smooth(flipped, classes)
    assert xa.pieces[2].dims_by_degree() == xb.pieces[2].dims_by_degree()
    for aname in TWO_RULINGS:
        assert (op_cokernel_dim_at(xa.op(aname, 2), 0)
                == op_cokernel_dim_at(xb.op(aname, 2), 0))


def test_union_two_smooth_dimension_mismatch_redirects():
    line = projective_space(1)
    plane = projective_space(2)
    with pytest.raises(NonEquidimensionalError):
        union_two_smooth(UnionInput(line, plane, projective_space(0), {}, {}), [])


def test_nonequidim_piece_dims():
    x2 = nonequidim_x2(3)
    assert x2.pieces[3].dims_by_degree() == {-3: 1, 2: 1}
    assert x2.pieces[4].dims_by_degree() == {k: 2 for k in (-4, -2, 0, 2, 4)}
    assert not x2.pure
    assert x2.dim == 4
    assert euler_check(x2)
    # degree gap kills the action on the stratum piece
    op = x2.op("L2", 3)
    for k in (-3, 2):
        assert op.block(k, {-3: -6, 2: 0}[k]).is_zero()
    with pytest.raises(PreconditionError):
        nonequidim_x2(1)


@pytest.mark.parametrize("d2", [3, 4, 5])
@pytest.mark.parametrize("d_e", [3, 4])
def test_equidim_odd_weight_pattern(d2, d_e):
    g = (d_e - 1) * (d_e - 2) // 2
    x2 = equidim_x2(d2, d_e)
    piece = x2.pieces[d2]
    odd = {}
    for (k, w), labels in piece.pieces.items():
        if w % 2 == 1:
            odd[k] = odd.get(k, 0) + len(labels)
    assert odd == {1 - d2: 2 * g, d2 - 2: 2 * g}
    assert euler_check(x2)
    assert all(ok for _, ok in run_audit_windows(x2))


def test_equidim_side_dims_for_d2_4():
    x2 = equidim_x2(4, 3)
    g = 1
    assert x2.extras["z2_side"].dims_by_degree() == \
        {-4: 2, -2: 4, 0: 6, 2: 4, 4: 2}
    assert x2.extras["zprime_side"].dims_by_degree() == \
        {-4: 1, -3: 2 * g, -2: 1, 1: 1, 2: 2 * g, 3: 1}
    assert x2.pieces[4].dim(3) == 0  # vanishing one degree below the top


def test_equidim_vanishing_below_top_for_other_d2():
    for d2, d_e in ((3, 3), (5, 3)):
        x2 = equidim_x2(d2, d_e)
        assert x2.pieces[d2].dim(d2 - 1) == 0


def test_equidim_rejects_bad_parameters():
    with pytest.raises(PreconditionError):
        equidim_x2(2, 3)
    with pytest.raises(PreconditionError):
        equidim_x2(4, 2)
    with pytest.raises(InvalidClassError):
        equidim_x2(4, 3, amples={"L": (1, 0, 1)})


def product_for_nonequidim(d2=3):
    x1 = glued_quadrics()
    x2 = nonequidim_x2(d2)
    return perverse_product(x1, x2, segre={"LA": ("LA", "L2"), "LB": ("LB", "L2")})


def test_perverse_product_shape():
    x = product_for_nonequidim()
    assert sorted(x.pieces) == [5, 6]
    assert x.dim == 6
    assert not x.pure
    # the j=5 piece in degree 2 carries the middle homology of the glued
    # quadrics, of dimension 3
    assert x.pieces[5].dim(2) == 3
    assert euler_check(x)


def test_perverse_product_unit():
    x1 = glued_quadrics({"L": {"e1": 1, "e2": 1}})
    pt = presentation_of_smooth(projective_space(0), {"L": {}})
    x = perverse_product(x1, pt, segre={"L": ("L", "L")})
    assert x.pieces[2].dims_by_degree() == x1.pieces[2].dims_by_degree()


def test_perverse_product_euler_multiplies():
    x1 = glued_quadrics({"L": {"e1": 1, "e2": 1}})
    x2 = nonequidim_x2(3)
    x = perverse_product(x1, x2, segre={"L": ("L", "L2")})
    total = sum(p.euler() for p in x.pieces.values())
    factor = x1.pieces[2].euler() * sum(p.euler() for p in x2.pieces.values())
    assert total == factor


def test_perverse_product_rejects_two_multipiece_factors():
    x2 = nonequidim_x2(3)
    with pytest.raises(UnsupportedProductError):
        perverse_product(x2, x2)


def test_gysin_split_line():
    pres = presentation_of_smooth(projective_space(1), {"L": {"h": 1}})
    split = gysin_split(pres.pieces[1], pres.op("L", 1))
    assert split.assembled.dims_by_degree() == {-2: 1, 1: 1}


def test_gysin_split_curve_kernel_part():
    pres = presentation_of_smooth(plane_curve(3), {"L": {"h": 1}})
    split = gysin_split(pres.pieces[1], pres.op("L", 1))
    assert split.ker_part.dim(0) == 2
    assert split.assembled.dim(0) == 2


def test_gysin_split_matches_lambda_on_nonequidim_product():
    x = product_for_nonequidim()
    split_a = gysin_split(x.pieces[5], x.op("LA", 5))
    split_b = gysin_split(x.pieces[5], x.op("LB", 5))
    assert split_a.assembled.dim(1) == lambda_kj(x, "LA", 2, 6) == 2
    assert split_b.assembled.dim(1) == lambda_kj(x, "LB", 2, 6) == 1


def test_gysin_split_rejects_higher_rank():
    pres = presentation_of_smooth(projective_space(1), {"L": {"h": 1}})
    with pytest.raises(UnsupportedOperationError):
        gysin_split(pres.pieces[1], pres.op("L", 1), r=2)

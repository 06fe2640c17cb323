"""The 2x2 matrix model: displayed constant forms, exact identities, and
the freeness harnesses at module-test scale (the acceptance suite runs the
full lengths)."""

import random
from fractions import Fraction

import pytest

from freeprod.freeword import NCPoly
from freeprod.matmodel import (
    Mat2,
    MatrixModel,
    matrix_model_generators,
    sum_model_generators,
)
from freeprod.trigalg import PI_ZERO, PiValue, TrigPoly


@pytest.fixture(scope="module")
def mm():
    return MatrixModel()


def nc_word(mm, letters):
    return NCPoly({mm.fp.word(letters): 1})


# -- constants -----------------------------------------------------------------


def test_x_matches_displayed_form(mm):
    f, v = mm.fp.leg("f"), mm.fp.leg("v")
    want = Mat2(mm.fp, (
        (nc_word(mm, [f.c(), v.gen(1), f.s()]).scaled(-1),
         nc_word(mm, [f.c(), v.gen(1), f.c()])),
        (nc_word(mm, [f.s(), v.gen(1), f.s()]).scaled(-1),
         nc_word(mm, [f.s(), v.gen(1), f.c()])),
    ))
    assert mm.X == want


def test_q_matches_displayed_form(mm):
    # Q = (c^2 cs; cs s^2) written over the cos/sin basis
    f = mm.fp.leg("f")
    c2 = mm.fp.normalize([f.c(), f.c()])
    cs = mm.fp.normalize([f.c(), f.s()])
    s2 = mm.fp.normalize([f.s(), f.s()])
    assert mm.Q == Mat2(mm.fp, ((c2, cs), (cs, s2)))


def test_p_and_p0(mm):
    one = NCPoly.unit()
    z = NCPoly.zero()
    assert mm.P == Mat2(mm.fp, ((one, z), (z, z)))
    half = Fraction(1, 2)
    assert mm.P0 == Mat2(mm.fp, ((NCPoly.unit(half), z), (z, NCPoly.unit(-half))))


def test_u_adjoint(mm):
    u = mm.fp.leg("u")
    z = NCPoly.zero()
    assert mm.U.adjoint() == Mat2(mm.fp, ((z, z), (nc_word(mm, [u.gen(-1)]), z)))


def test_w_is_unitary(mm):
    assert mm.W @ mm.W.adjoint() == Mat2.identity(mm.fp)
    assert mm.W.adjoint() @ mm.W == Mat2.identity(mm.fp)


def test_traces(mm):
    assert mm.P.Tr() == PiValue.of(Fraction(1, 2))
    assert mm.Q.Tr() == PiValue.of(Fraction(1, 2))
    assert Mat2.identity(mm.fp).Tr() == PiValue.of(1)
    assert (mm.U @ mm.X).Tr() == PI_ZERO


def test_constants_map(mm):
    names = set(mm.constants())
    assert names == {"U", "V", "W", "X", "P", "Q", "P0", "Q0"}


# -- identities ------------------------------------------------------------------


def test_partial_isometries(mm):
    report = mm.verify_partial_isometries()
    assert report.passed, report.failures


def test_rotation_small(mm):
    report = mm.verify_rotation(5)
    assert report.passed, report.failures


def test_rotation_r1_explicit(mm):
    p2, q2 = mm.P0.scaled(2), mm.Q0.scaled(2)
    want = mm.trig_mat(((TrigPoly.cos(2), TrigPoly.sin(2)),
                        (TrigPoly.sin(2, -1), TrigPoly.cos(2))))
    assert p2 @ q2 == want


def test_rotation_guard(mm):
    with pytest.raises(ValueError):
        mm.verify_rotation(0)
    with pytest.raises(ValueError):
        mm.verify_rotation(51)


@pytest.mark.parametrize("seed", range(6))
def test_matrix_trace_is_tracial(mm, seed):
    rng = random.Random(7000 + seed)
    consts = list(mm.constants().values())
    a = rng.choice(consts) @ rng.choice(consts)
    b = rng.choice(consts)
    assert (a @ b).Tr() == (b @ a).Tr()


# -- freeness harnesses ------------------------------------------------------------


def test_pq_harness(mm):
    gen_a, gen_b, offdiag = mm.generators("PQ")
    report = mm.check_freeness(gen_a, gen_b, 12, "PQ", offdiag)
    assert report.passed, report.failures[:3]
    assert report.words_checked == 24  # two words per length


def test_ux_harness_short(mm):
    gen_a, gen_b, offdiag = mm.generators("UX")
    report = mm.check_freeness(gen_a, gen_b, 3, "UX", offdiag)
    assert report.passed, report.failures[:3]
    # 2*(3 + 9 + 27) alternating words
    assert report.words_checked == 78


def test_px_uq_harness_short(mm):
    for name in ("PX", "UQ"):
        gen_a, gen_b, offdiag = mm.generators(name)
        report = mm.check_freeness(gen_a, gen_b, 4, name, offdiag)
        assert report.passed, report.failures[:3]


def test_uncentered_generator_rejected(mm):
    with pytest.raises(ValueError):
        mm.check_freeness([("P", mm.P)], [("Q", mm.Q)], 2)


def test_unknown_harness(mm):
    with pytest.raises(ValueError):
        mm.generators("XY")


def test_report_json_shape(mm):
    gen_a, gen_b, offdiag = mm.generators("PQ")
    report = mm.check_freeness(gen_a, gen_b, 2, "PQ", offdiag)
    doc = report.to_json()
    assert doc["harness"] == "PQ"
    assert doc["max_len"] == 2
    assert doc["failures"] == []


# -- embedded submodels --------------------------------------------------------------


def test_embed_sum_scalar_pairs_recover_reflections(mm):
    one = NCPoly.unit()
    assert mm.embed_sum_model(one, -one) == mm.P0.scaled(2)
    assert mm.embed_conjugated_sum(one, -one) == mm.Q0.scaled(2)


def test_embed_matrix_model_patterns(mm):
    one = NCPoly.unit()
    z = NCPoly.zero()
    # E12 over the trivial leg embeds to the u-shifted pattern
    got = mm.embed_matrix_model(((z, one), (z, z)))
    assert got == mm.U
    # and on the conjugated side to X; the sign pattern embeds to 2Q0
    assert mm.embed_matrix_model_conj(((z, one), (z, z))) == mm.X
    assert mm.embed_matrix_model_conj(((one, z), (z, -one))) == mm.Q0.scaled(2)


def test_sum_model_harness_short():
    mm = MatrixModel()
    gen_a, gen_b, offdiag = sum_model_generators(mm)
    report = mm.check_freeness(gen_a, gen_b, 4, "sum", offdiag)
    assert report.passed, report.failures[:3]


def test_matrix_model_harness_short():
    mm = MatrixModel()
    gen_a, gen_b, offdiag = matrix_model_generators(mm)
    report = mm.check_freeness(gen_a, gen_b, 2, "matrix", offdiag)
    assert report.passed, report.failures[:3]


@pytest.mark.slow
def test_ux_harness_desk_scale(mm):
    gen_a, gen_b, offdiag = mm.generators("UX")
    report = mm.check_freeness(gen_a, gen_b, 6, "UX", offdiag)
    assert report.passed, report.failures[:3]


@pytest.mark.slow
def test_px_uq_harness_desk_scale(mm):
    for name in ("PX", "UQ"):
        gen_a, gen_b, offdiag = mm.generators(name)
        report = mm.check_freeness(gen_a, gen_b, 7, name, offdiag)
        assert report.passed, (name, report.failures[:3])


@pytest.mark.slow
def test_sum_model_harness_desk_scale():
    mm = MatrixModel()
    gen_a, gen_b, offdiag = sum_model_generators(mm)
    report = mm.check_freeness(gen_a, gen_b, 6, "sum", offdiag)
    assert report.passed, report.failures[:3]


@pytest.mark.slow
def test_matrix_model_harness_desk_scale():
    mm = MatrixModel()
    gen_a, gen_b, offdiag = matrix_model_generators(mm)
    report = mm.check_freeness(gen_a, gen_b, 4, "matrix", offdiag)
    assert report.passed, report.failures[:3]

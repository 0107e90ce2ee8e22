"""Scenario systems: derivation, exhaustive solving, consequences, realization."""

import random

import pytest

from triplelines.constraints import (
    CONSEQUENCES,
    ELEVEN_CASE_I,
    ELEVEN_CASE_II,
    SCENARIO_NAMES,
    SCENARIO_TARGET_TVEC,
    TEN_CASE_A,
    TEN_CASE_B,
    TEN_E1,
    ConstraintSystem,
    build_system,
    consequence_check,
    default_battery,
    derived_equations,
    realize,
    solve_over,
)
from triplelines.errors import FieldTooLarge, UnsolvedAssignment
from triplelines.field import make_field, roots_of
from triplelines.incidence import profile
from triplelines.polynomial import IntPolynomial, collinearity_poly, poly_ring


# ---------------------------------------------------------------------------
# polynomial layer
# ---------------------------------------------------------------------------

def test_int_polynomial_arithmetic():
    (a, b), const = poly_ring(("a", "b"))
    p = (a + b) * (a - b)
    assert p == a * a - b * b
    assert (p - p).is_zero()
    F = make_field(7)
    val = p.evaluate({"a": F(3), "b": F(2)}, F)
    assert val == F(5)


def test_collinearity_poly_identity_rows():
    (a, b, c, d), const = poly_ring(("a", "b", "c", "d"))
    zero, one = const(0), const(1)
    p = collinearity_poly((one, zero, zero), (zero, one, zero), (zero, zero, one))
    assert p == const(1)
    doubled = collinearity_poly((zero, zero, one), (one, one, zero), (one, one, zero))
    assert doubled.is_zero()


def test_collinearity_poly_reproduces_a_minus_bc():
    # third forced triple of the TEN_E1 frame expands to a - bc
    eqs = derived_equations(TEN_E1)
    (a, b, c, d), const = poly_ring(("a", "b", "c", "d"))
    assert eqs[2].proportional_to(a - b * c)


# ---------------------------------------------------------------------------
# stored systems versus the geometric derivation
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("name", SCENARIO_NAMES)
def test_derived_and_stored_zero_sets_agree_on_random_points(name):
    """Zero-set agreement on 200 random GF(101) points, equation by equation.

    All equations except the reduced fourth TEN_CASE_B condition also agree
    as polynomials up to sign, which is asserted exactly.
    """
    system = build_system(name)
    derived = derived_equations(name)
    assert len(derived) == len(system.equations)
    F101 = make_field(101)
    rng = random.Random(101)
    n = len(system.variables)
    for i, (dpoly, spoly) in enumerate(zip(derived, system.equations)):
        if not (name == TEN_CASE_B and i == 3):
            assert dpoly.proportional_to(spoly), f"equation {i}"
        for _ in range(200):
            point = {v: F101(rng.randrange(101)) for v in system.variables}
            dz = dpoly.evaluate(point, F101).is_zero()
            sz = spoly.evaluate(point, F101).is_zero()
            if not (name == TEN_CASE_B and i == 3):
                assert dz == sz


def test_case_b_reduced_equation_same_solution_set():
    """The stored a+bc and the raw collinearity determinant cut the same
    solutions out of the rest of the system, over every battery field."""
    stored = build_system(TEN_CASE_B)
    derived = derived_equations(TEN_CASE_B)
    swapped = ConstraintSystem(stored.name, stored.variables,
                               tuple(derived), stored.inequations)
    for F in default_battery():
        want = [tuple(asg[v].index for v in stored.variables)
                for asg in solve_over(stored, F)]
        got = [tuple(asg[v].index for v in stored.variables)
               for asg in solve_over(swapped, F)]
        assert want == got


def test_stored_system_shapes():
    e1 = build_system(TEN_E1)
    assert len(e1.equations) == 5 and e1.variables == ("a", "b", "c", "d")
    cb = build_system(TEN_CASE_B)
    assert len(cb.equations) == 4 and cb.variables == ("a", "b", "c")
    c2 = build_system(ELEVEN_CASE_II)
    assert len(c2.equations) == 4 and c2.variables == ("a", "b")
    c1 = build_system(ELEVEN_CASE_I)
    assert len(c1.equations) == 5
    assert build_system(TEN_CASE_A).post_checks[0][0] == "m1_avoids_w"


# ---------------------------------------------------------------------------
# exhaustive solutions over the battery
# ---------------------------------------------------------------------------

def test_ten_e1_solutions_only_char2_with_cube_root():
    system = build_system(TEN_E1)
    for F in default_battery():
        sols = solve_over(system, F)
        cube_roots = roots_of((1, 1, 1), F)
        if F.p == 2 and cube_roots:
            assert len(sols) == 2
            for asg in sols:
                a = asg["a"]
                assert (a * a + a + F.one).is_zero()
                assert asg["b"] == a * a
                assert asg["c"] == a * a
                assert asg["d"] == a
            assert {asg["a"] for asg in sols} == set(cube_roots)
        else:
            assert sols == []


def test_ten_e1_gf4_explicit_conjugate_pair(gf4):
    w = gf4.element([0, 1])
    sols = solve_over(build_system(TEN_E1), gf4)
    as_tuples = [tuple(asg[v] for v in ("a", "b", "c", "d")) for asg in sols]
    assert (w, w * w, w * w, w) in as_tuples
    assert (w * w, w, w, w * w) in as_tuples


def test_ten_case_a_always_empty():
    system = build_system(TEN_CASE_A)
    for F in default_battery():
        assert solve_over(system, F) == []
        # raw solutions agree with TEN_E1, the rejection is the post-check
        raw = solve_over(system, F, apply_post_checks=False)
        assert len(raw) == len(solve_over(build_system(TEN_E1), F))


def test_ten_case_b_unique_char5_solution():
    system = build_system(TEN_CASE_B)
    for F in default_battery():
        sols = solve_over(system, F)
        if F.p == 5:
            assert len(sols) == 1
            asg = sols[0]
            assert (asg["a"], asg["b"], asg["c"]) == (F(3), F(1), F(2))
        else:
            assert sols == []


def test_eleven_case_i_rejected_by_pencil_check():
    system = build_system(ELEVEN_CASE_I)
    for F in default_battery():
        assert solve_over(system, F) == []
    gf4 = make_field(2, 2)
    raw = solve_over(system, gf4, apply_post_checks=False)
    w = gf4.element([0, 1])
    values = [tuple(asg[v] for v in ("a", "b", "c", "d")) for asg in raw]
    assert (w, w * w, w * w, w) in values and (w * w, w, w, w * w) in values


def test_eleven_case_ii_empty_after_distinctness():
    system = build_system(ELEVEN_CASE_II)
    for F in default_battery():
        assert solve_over(system, F) == []
        # dropping the (a,b) != (1,1) condition leaves exactly that solution
        relaxed = ConstraintSystem(system.name, system.variables,
                                   system.equations, system.inequations[:2])
        assert [tuple(a[v].index for v in "ab") for a in solve_over(relaxed, F)] == [(1, 1)]


def test_solution_order_deterministic_and_equation_order_free(gf4):
    system = build_system(TEN_E1)
    shuffled = ConstraintSystem(system.name, system.variables,
                                tuple(reversed(system.equations)),
                                tuple(reversed(system.inequations)))
    a = [[asg[v].index for v in system.variables] for asg in solve_over(system, gf4)]
    b = [[asg[v].index for v in system.variables] for asg in solve_over(shuffled, gf4)]
    assert a == b


def test_field_too_large_guard():
    system = build_system(ELEVEN_CASE_II)
    with pytest.raises(FieldTooLarge):
        solve_over(system, make_field(65537))


# ---------------------------------------------------------------------------
# consequence checks
# ---------------------------------------------------------------------------

def test_eleven_case_ii_consequences_on_equation_variety():
    mode, polys = CONSEQUENCES[ELEVEN_CASE_II]
    assert mode == "equations"
    rep = consequence_check(build_system(ELEVEN_CASE_II), polys,
                            default_battery(), mode=mode)
    assert rep.ok
    # non-vacuous: (0,0) and (1,1) solve the equations in every field
    assert rep.checked == 2 * len(default_battery())


def test_ten_case_b_consequence_b_squared_one():
    mode, polys = CONSEQUENCES[TEN_CASE_B]
    rep = consequence_check(build_system(TEN_CASE_B), polys,
                            default_battery(), mode=mode)
    assert rep.ok and rep.checked == 2  # (3,1,2) over GF(5) and GF(25)


def test_ten_e1_consequence_cube_root_condition():
    mode, polys = CONSEQUENCES[TEN_E1]
    char2 = [F for F in default_battery() if F.p == 2]
    rep = consequence_check(build_system(TEN_E1), polys, char2, mode=mode)
    assert rep.ok and rep.checked == 4  # two solutions over GF(4), two over GF(16)


def test_consequence_violation_is_reported_with_witness():
    system = build_system(TEN_CASE_B)
    wrong = IntPolynomial(("a", "b", "c"), {(0, 0, 0): 1})  # the constant 1
    rep = consequence_check(system, [wrong], [make_field(5)])
    assert not rep.ok
    v = rep.violations[0]
    assert v.field == make_field(5)
    assert v.assignment["a"] == make_field(5)(3)


# ---------------------------------------------------------------------------
# realization
# ---------------------------------------------------------------------------

def test_realized_solutions_hit_target_tvec_over_battery():
    for name in SCENARIO_NAMES:
        system = build_system(name)
        for F in default_battery():
            for asg in solve_over(system, F):
                A = realize(name, asg, F)
                assert profile(A).tvec == SCENARIO_TARGET_TVEC[name], (name, F)


def test_realize_ten_e1_matches_certificate(gf4):
    from triplelines.certificates import instantiate
    sols = solve_over(build_system(TEN_E1), gf4)
    wanted = {tuple(sorted(L.key() for L in instantiate("TEN_E1", gf4, asg["a"]).lines))
              for asg in sols}
    realized = {tuple(sorted(L.key() for L in realize(TEN_E1, asg, gf4).lines))
                for asg in sols}
    assert wanted == realized


def test_realize_ten_case_b_published_lines(gf5):
    asg = solve_over(build_system(TEN_CASE_B), gf5)[0]
    A = realize(TEN_CASE_B, asg, gf5)
    from triplelines.certificates import instantiate
    assert set(A.lines) == set(instantiate("TEN_E2", gf5).lines)


def test_realize_eleven_case_i_exhibits_pencil_contradiction(gf4):
    raw = solve_over(build_system(ELEVEN_CASE_I), gf4, apply_post_checks=False)
    A = realize(ELEVEN_CASE_I, raw[0], gf4)
    prof = profile(A)
    assert prof.tvec.get(5) == 1          # the five forced lines concur
    assert prof.tvec != SCENARIO_TARGET_TVEC[ELEVEN_CASE_I]


def test_realize_rejects_non_solutions(gf4):
    zero = gf4.zero
    with pytest.raises(UnsolvedAssignment):
        realize(TEN_E1, {"a": zero, "b": zero, "c": zero, "d": zero}, gf4)
    one = make_field(5)(1)
    with pytest.raises(UnsolvedAssignment):
        realize(ELEVEN_CASE_II, {"a": one, "b": one}, make_field(5))

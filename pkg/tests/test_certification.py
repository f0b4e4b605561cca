"""Tests for certification: exact LP, sine enclosures and the reference cases."""

import json
from dataclasses import replace
from fractions import Fraction

import pytest

from certification import (
    FEASIBLE_CASES,
    MAXIMAL_INFEASIBLE_VECTORS,
    MISPRINTS,
    REMAINING_CASES,
    Certificate,
    CertificateKind,
    CertificationFailure,
    IntervalError,
    InvalidPermutationError,
    LinearProgram,
    LPStatus,
    OmegaSign,
    PieceBound,
    REFERENCE_CUTS,
    RationalInterval,
    VectorCertificate,
    build_reduced_system,
    certification_frame,
    certify_feasible_pair,
    certify_infeasible_vector,
    dihedral_key,
    omega_regression_frame,
    orbit_representatives,
    pi_enclosure,
    printed_feasible_case,
    sign_of_omega_at,
    sin_enclosure,
    solve_lp,
    solve_lp_many,
    write_report,
)


# ============================================================================
# LINEAR PROGRAMS
# ============================================================================

def test_lp_optimum_is_exact():
    lp = LinearProgram.build(2, [1, 1], upper_rows=[([1, 2], 4), ([3, 1], 6)])
    result = solve_lp(lp)
    assert result.status is LPStatus.OPTIMAL
    assert result.value == Fraction(14, 5)
    assert result.point == (Fraction(8, 5), Fraction(6, 5))
    assert lp.satisfied_by(result.point)


def test_lp_infeasible_and_unbounded():
    infeasible = LinearProgram.build(1, [1], upper_rows=[([1], 1)], equal_rows=[([1], 2)])
    assert solve_lp(infeasible).status is LPStatus.INFEASIBLE
    unbounded = LinearProgram.build(1, [1])
    assert solve_lp(unbounded).status is LPStatus.UNBOUNDED


def test_solve_lp_many_matches_single_solves():
    lp = LinearProgram.build(2, [0, 0], upper_rows=[([1, 2], 4), ([3, 1], 6)])
    objectives = [[1, 0], [0, 1], [1, 1], [-1, -1]]
    many = solve_lp_many(lp, objectives)
    for objective, result in zip(objectives, many):
        assert result.value == solve_lp(lp.with_objective(objective)).value
    assert [r.value for r in many] == [2, 2, Fraction(14, 5), 0]


def test_lp_rejects_ragged_rows():
    with pytest.raises(ValueError):
        LinearProgram.build(2, [1, 1], upper_rows=[([1], 1)])


# ============================================================================
# INTERVALS
# ============================================================================

def test_pi_enclosure_is_tight():
    pi = pi_enclosure()
    assert pi.lo <= Fraction("3.14159265358979323846") < pi.hi
    assert pi.lo < Fraction("3.14159265358979323847") <= pi.hi
    assert pi.width < Fraction(1, 10**30)


def test_sine_enclosures():
    assert sin_enclosure(Fraction(90)) == RationalInterval.point(1)
    assert sin_enclosure(Fraction(0)) == RationalInterval.point(0)
    half = sin_enclosure(Fraction(30))
    assert half.contains(Fraction(1, 2))
    assert half.width < Fraction(1, 10**25)
    assert sin_enclosure(Fraction(150)) == half
    with pytest.raises(IntervalError):
        sin_enclosure(Fraction(181))


def test_interval_arithmetic():
    a = RationalInterval.of(1, 2)
    b = RationalInterval.of(-3, 1)
    assert (a + b) == RationalInterval.of(-2, 3)
    assert (a - b) == RationalInterval.of(0, 5)
    assert (a * b) == RationalInterval.of(-6, 2)
    assert a.is_positive() and not b.excludes_zero()
    with pytest.raises(IntervalError):
        RationalInterval(Fraction(2), Fraction(1))


def test_omega_sign_follows_the_tilted_pair():
    # beta_i = gamma_i makes omega vanish; tilting one pair decides its sign
    d = 3
    beta = [Fraction(40), Fraction(50), Fraction(60)]
    gamma = [Fraction(30), Fraction(50), Fraction(60)]
    assert sign_of_omega_at(beta + gamma).sign is OmegaSign.POSITIVE
    assert sign_of_omega_at(gamma + beta).sign is OmegaSign.NEGATIVE
    with pytest.raises(ValueError):
        sign_of_omega_at(beta[:d - 1] + gamma)


# ============================================================================
# PERMUTATION CLASSES
# ============================================================================

def test_orbit_representatives_count_dihedral_classes():
    distinct = [Fraction(v) for v in (180, 120, 105, 90, 60)]
    assert len(orbit_representatives(distinct)) == 12
    assert len(orbit_representatives([Fraction(120)] * 5)) == 1
    keys = {dihedral_key(seq) for _, seq in orbit_representatives(distinct)}
    assert len(keys) == 12


def test_build_reduced_system_checks_tau():
    with pytest.raises(InvalidPermutationError):
        build_reduced_system([Fraction(180), Fraction(120), Fraction(120)], (0, 0, 1))


# ============================================================================
# REFERENCE CASES
# ============================================================================

def test_reference_tables_have_expected_shape():
    assert len(MAXIMAL_INFEASIBLE_VECTORS) == 14
    assert all(v[0] == 180 and len(v) == 5 for v in MAXIMAL_INFEASIBLE_VECTORS)
    assert sorted(FEASIBLE_CASES) == sorted(["I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX", "X", "XI"])
    assert "n" not in REMAINING_CASES
    assert REMAINING_CASES["e"].printed.transposed


@pytest.mark.parametrize("name", sorted(FEASIBLE_CASES))
def test_feasible_cases_certify(name):
    case = FEASIBLE_CASES[name]
    outcome = certify_feasible_pair(case.phi, case.tau, case.x_plus, case.x_minus)
    assert outcome.ok, getattr(outcome, "reason", None)
    assert outcome.kind is CertificateKind.FEASIBLE_PAIR


def test_printed_misprint_fails_substitution():
    (name, index, printed, stored), = MISPRINTS
    case = printed_feasible_case(name)
    assert case.x_plus[index] == printed != stored
    outcome = certify_feasible_pair(case.phi, case.tau, case.x_plus, case.x_minus)
    assert isinstance(outcome, CertificationFailure)
    assert "x_plus violates" in outcome.reason


def test_swapped_pair_is_a_sign_mismatch():
    case = FEASIBLE_CASES["I"]
    outcome = certify_feasible_pair(case.phi, case.tau, case.x_minus, case.x_plus)
    assert not outcome.ok
    assert "sign mismatch" in outcome.reason


def test_certification_frame_validates():
    outcomes = [
        certify_feasible_pair(c.phi, c.tau, c.x_plus, c.x_minus) for c in FEASIBLE_CASES.values()
    ]
    df = certification_frame(outcomes)
    assert len(df) == len(FEASIBLE_CASES)
    assert df["ok"].all()


def test_write_report_without_parquet(tmp_path):
    case = FEASIBLE_CASES["I"]
    outcome = certify_feasible_pair(case.phi, case.tau, case.x_plus, case.x_minus)
    json_path, parquet_path = write_report(
        outcome.to_dict(), certification_frame([outcome]), tmp_path / "out", "single", parquet=False
    )
    assert parquet_path is None
    assert json.loads(json_path.read_text())["kind"] == outcome.to_dict()["kind"]


@pytest.mark.slow
def test_omega_regression_within_tolerance():
    df = omega_regression_frame()
    checked = df[~df["transposed"]]
    assert not checked.empty
    assert (checked["deviation"] <= 1e-12).all(), checked[checked["deviation"] > 1e-12]


@pytest.mark.slow
@pytest.mark.parametrize("values", MAXIMAL_INFEASIBLE_VECTORS, ids=lambda v: ",".join(map(str, v)))
def test_maximal_infeasible_vectors_certify(values):
    outcome = certify_infeasible_vector(values, REFERENCE_CUTS)
    assert outcome.ok, getattr(outcome, "reason", None)


def test_tampered_feasible_pair_is_not_ok():
    case = FEASIBLE_CASES["I"]
    outcome = certify_feasible_pair(case.phi, case.tau, case.x_plus, case.x_minus)
    assert outcome.ok
    plus, minus = outcome.evidence
    assert not replace(outcome, evidence=(minus, plus)).ok
    assert not replace(outcome, evidence=None).ok
    assert not replace(outcome, x_minus=None).ok
    assert not certification_frame([replace(outcome, evidence=(minus, plus))])["ok"].any()


def test_single_sign_ok_needs_agreeing_pieces():
    phi = (Fraction(180),) * 5
    tau = (0, 1, 2, 3, 4)
    positive = PieceBound((), None, RationalInterval.of(1, 2))
    straddling = PieceBound((), None, RationalInterval.of(-1, 2))
    assert Certificate(CertificateKind.SINGLE_SIGN, phi, tau, sign=1, pieces=(positive,)).ok
    assert not Certificate(CertificateKind.SINGLE_SIGN, phi, tau, sign=1, pieces=(positive, straddling)).ok
    assert not Certificate(CertificateKind.SINGLE_SIGN, phi, tau, sign=-1, pieces=(positive,)).ok
    assert not Certificate(CertificateKind.SINGLE_SIGN, phi, tau, sign=1).ok


def test_vector_certificate_ok_follows_its_cases():
    phi = (Fraction(180),) * 5
    tau = (0, 1, 2, 3, 4)
    empty = Certificate(CertificateKind.EMPTY_STRICT, phi, tau)
    bad = Certificate(CertificateKind.SINGLE_SIGN, phi, tau, sign=0)
    assert VectorCertificate(phi, (empty,)).ok
    assert not VectorCertificate(phi, ()).ok
    assert not VectorCertificate(phi, (empty, bad)).ok
    case = FEASIBLE_CASES["I"]
    pair = certify_feasible_pair(case.phi, case.tau, case.x_plus, case.x_minus)
    assert not VectorCertificate(phi, (empty, pair)).ok

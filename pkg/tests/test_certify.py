from __future__ import annotations

import random

from hypothesis import given, settings

from knotcert.certify import (
    CERTIFIED,
    INVALID_INPUT,
    NOT_APPLICABLE,
    certify,
    certify_batch,
)
from knotcert.fixtures import (
    FIGURE_EIGHT,
    TREFOIL,
    congruent,
    granny_knot,
    random_unimodular,
    square_knot,
)
from knotcert.seifert import KnotMetadata

from conftest import seifert_matrices


def test_trefoil_certified():
    cert = certify(TREFOIL, KnotMetadata(assume_irreducible=True))
    assert cert.verdict == CERTIFIED
    assert cert.simple_root_count == 1
    assert [j.jump for j in cert.jump_witnesses] == [-2]
    assert cert.consistency_checks.all_passed()
    assert cert.signature_at_minus_one == -2
    assert "left-orderable" in cert.conclusion_text
    assert "(-a, 0) u (0, a)" in cert.conclusion_text


def test_figure_eight_not_applicable():
    cert = certify(FIGURE_EIGHT, KnotMetadata(assume_irreducible=True))
    assert cert.verdict == NOT_APPLICABLE
    assert cert.simple_root_witnesses == ()
    assert cert.jump_witnesses == ()
    assert cert.odd_multiplicity_witnesses == ()
    assert cert.profile.plateau_values == (0,)


def test_granny_not_applicable_with_jump_witnesses():
    cert = certify(granny_knot())
    assert cert.verdict == NOT_APPLICABLE
    assert len(cert.jump_witnesses) == 1
    assert cert.jump_witnesses[0].jump == -4
    assert cert.jump_witnesses[0].root.multiplicity == 2
    assert cert.odd_multiplicity_witnesses == ()
    assert "SU(2)" in cert.conclusion_text


def test_square_knot_zero_jump():
    cert = certify(square_knot())
    assert cert.verdict == NOT_APPLICABLE
    assert cert.jump_witnesses[0].jump == 0
    assert "SU(2)" not in cert.conclusion_text


def test_unasserted_irreducibility_blocks_certification():
    cert = certify(TREFOIL, KnotMetadata(assume_irreducible=False))
    assert cert.verdict == NOT_APPLICABLE
    assert cert.simple_root_count == 1  # the witness is still reported
    assert "irreducibility" in cert.conclusion_text


def test_prime_filling_remark_is_conditional():
    with_prime = certify(TREFOIL, KnotMetadata(assume_m0_prime=True))
    without = certify(TREFOIL, KnotMetadata())
    assert "(-a, a)" in with_prime.conclusion_text
    assert "(-a, a)" not in without.conclusion_text


def test_certify_accepts_raw_entries():
    cert = certify([[-1, 1], [0, -1]], name="raw-trefoil")
    assert cert.verdict == CERTIFIED
    assert cert.name == "raw-trefoil"


def test_certify_invalid_input():
    cert = certify([[0, 0], [0, 0]])
    assert cert.verdict == INVALID_INPUT
    assert "NonSymplecticError" in cert.error
    assert cert.alexander is None
    assert cert.consistency_checks is None


def test_certify_batch_empty():
    assert certify_batch([]) == []


def test_certify_batch_order_and_isolation():
    meta = KnotMetadata()
    certs = certify_batch(
        [
            (TREFOIL, meta),
            ([[1]], meta),  # odd size: per-input error record
            (FIGURE_EIGHT, meta),
        ]
    )
    assert [c.verdict for c in certs] == [CERTIFIED, INVALID_INPUT, NOT_APPLICABLE]
    assert "OddSizeError" in certs[1].error


@given(seifert_matrices(max_genus=2))
@settings(max_examples=15, deadline=None)
def test_verdict_invariant_under_congruence(v):
    w = congruent(v, random_unimodular(v.size, random.Random(7), steps=5))
    cv = certify(v)
    cw = certify(w)
    assert cv.verdict == cw.verdict
    assert cv.alexander == cw.alexander
    assert [j.jump for j in cv.jump_witnesses] == [j.jump for j in cw.jump_witnesses]


@given(seifert_matrices())
@settings(max_examples=25, deadline=None)
def test_certified_implies_simple_witness_with_jump_two(v):
    cert = certify(v)
    if cert.verdict == CERTIFIED:
        assert cert.simple_root_count >= 1
        simple_jumps = [
            j for j in cert.jump_witnesses if j.root.multiplicity == 1
        ]
        assert all(abs(j.jump) == 2 for j in simple_jumps)

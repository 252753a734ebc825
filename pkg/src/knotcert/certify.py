"""Certificates tying the computed invariants to the orderability criterion.

A certificate is CERTIFIED exactly when the Alexander polynomial has a
simple root on the unit circle and the user asserts the knot exterior is
irreducible.  The certified conclusion is existential: there is some a > 0
such that every Dehn filling of rational slope in (-a, 0) u (0, a) has
left-orderable fundamental group; no value of a is claimed.  Jump and
odd-multiplicity witnesses are reported even for NOT_APPLICABLE verdicts,
since a nonzero signature jump already certifies a family of irreducible
SU(2) representations limiting to the corresponding abelian one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import InternalInconsistencyError, ValidationError
from .inertia import (
    JumpReport,
    SignatureProfile,
    det_sign_crosscheck,
    jump_reports,
    signature_profile,
)
from .laurent import (
    SymmetricLaurentPoly,
    UnitRootWitness,
    alexander_poly,
    has_simple_unit_root,
    isolate_unit_roots,
    squarefree_decompose,
    to_z_poly,
)
from .seifert import KnotMetadata, SeifertMatrix, validate

CERTIFIED = "CERTIFIED"
NOT_APPLICABLE = "NOT_APPLICABLE"
INVALID_INPUT = "INVALID_INPUT"


@dataclass(frozen=True)
class ConsistencyChecks:
    """Cross-checks that must all hold before a certificate is emitted."""

    det_sign_crosscheck: bool
    first_plateau_zero: bool
    parity: bool

    def all_passed(self) -> bool:
        return self.det_sign_crosscheck and self.first_plateau_zero and self.parity


@dataclass(frozen=True)
class Certificate:
    """Verdict plus the witnesses that justify it."""

    verdict: str
    simple_root_witnesses: tuple[UnitRootWitness, ...]
    jump_witnesses: tuple[JumpReport, ...]
    odd_multiplicity_witnesses: tuple[UnitRootWitness, ...]
    assumptions_echoed: KnotMetadata
    conclusion_text: str
    consistency_checks: ConsistencyChecks | None
    name: str | None = None
    genus: int | None = None
    alexander: SymmetricLaurentPoly | None = None
    signature_at_minus_one: int | None = None
    error: str | None = None
    profile: SignatureProfile | None = field(default=None, compare=False)

    @property
    def unit_root_count(self) -> int:
        return len(self.jump_witnesses)

    @property
    def simple_root_count(self) -> int:
        return len(self.simple_root_witnesses)


def _conclusion(verdict: str, meta: KnotMetadata, jumps: Sequence[JumpReport]) -> str:
    if verdict == CERTIFIED:
        text = (
            "The Alexander polynomial has a simple root on the unit circle. "
            "Given the asserted irreducibility of the knot exterior, there is "
            "some a > 0 such that every Dehn filling of rational slope in "
            "(-a, 0) u (0, a) has left-orderable fundamental group."
        )
        if meta.assume_m0_prime:
            text += (
                " Since the 0-surgery is asserted prime, the interval "
                "improves to (-a, a)."
            )
        return text
    if verdict == INVALID_INPUT:
        return "Input is not a valid Seifert matrix; nothing is certified."
    reasons = []
    if not any(j.root.multiplicity == 1 for j in jumps):
        reasons.append("no simple unit-circle root of the Alexander polynomial")
    if not meta.assume_irreducible:
        reasons.append("irreducibility of the knot exterior was not asserted")
    text = "Hypothesis not established: " + "; ".join(reasons) + "."
    if any(j.jump != 0 for j in jumps):
        text += (
            " A nonzero signature jump is present, which still certifies a "
            "family of irreducible SU(2) representations limiting to the "
            "abelian representation at that root."
        )
    return text


def _invalid_certificate(meta: KnotMetadata, name: str | None, message: str) -> Certificate:
    return Certificate(
        verdict=INVALID_INPUT,
        simple_root_witnesses=(),
        jump_witnesses=(),
        odd_multiplicity_witnesses=(),
        assumptions_echoed=meta,
        conclusion_text=_conclusion(INVALID_INPUT, meta, ()),
        consistency_checks=None,
        name=name,
        error=message,
    )


def certify(
    v,
    meta: KnotMetadata = KnotMetadata(),
    *,
    name: str | None = None,
    refine_bits: int = 32,
) -> Certificate:
    """Run the full pipeline on a Seifert matrix and emit a certificate.

    ``v`` may be a validated SeifertMatrix or a raw integer matrix; raw
    inputs failing validation yield an INVALID_INPUT certificate rather than
    raising.  Any failed internal consistency check raises
    InternalInconsistencyError; a certificate with failed checks is never
    emitted.
    """
    if isinstance(v, SeifertMatrix):
        matrix = v
    else:
        try:
            matrix = validate(v, name=name)
        except ValidationError as exc:
            return _invalid_certificate(meta, name, f"{type(exc).__name__}: {exc}")
    label = name if name is not None else matrix.name

    delta = alexander_poly(matrix)
    p_z = to_z_poly(delta)
    squarefree_decompose(p_z)  # raises on the impossible zero polynomial
    witnesses = isolate_unit_roots(p_z, refine_bits=refine_bits)
    profile = signature_profile(matrix, witnesses)
    jumps = jump_reports(profile)

    checks = ConsistencyChecks(
        det_sign_crosscheck=det_sign_crosscheck(matrix, profile),
        first_plateau_zero=profile.plateau_values[0] == 0,
        parity=delta.evaluate(-1).denominator == 1
        and int(delta.evaluate(-1)) % 2 != 0,
    )
    if not checks.all_passed():
        raise InternalInconsistencyError(
            f"consistency checks failed for {label or 'input'}: {checks}"
        )

    found_simple, simple = has_simple_unit_root(witnesses)
    if found_simple:
        # a simple root has exactly one eigenvalue crossing zero transversely,
        # so its signature jump must be exactly +-2; fail closed otherwise
        by_root = {j.root: j for j in jumps}
        for w in simple:
            if abs(by_root[w].jump) != 2:
                raise InternalInconsistencyError(
                    f"simple root with |jump| = {abs(by_root[w].jump)} != 2"
                )
    verdict = CERTIFIED if found_simple and meta.assume_irreducible else NOT_APPLICABLE
    simple_sorted = tuple(sorted(simple, key=lambda w: w.interval))
    odd = tuple(
        w for w in sorted(witnesses, key=lambda w: w.interval) if w.multiplicity % 2 == 1
    )
    return Certificate(
        verdict=verdict,
        simple_root_witnesses=simple_sorted,
        jump_witnesses=tuple(jumps),
        odd_multiplicity_witnesses=odd,
        assumptions_echoed=meta,
        conclusion_text=_conclusion(verdict, meta, jumps),
        consistency_checks=checks,
        name=label,
        genus=matrix.genus,
        alexander=delta,
        signature_at_minus_one=profile.value_at_minus_one,
        profile=profile,
    )


def certify_batch(
    inputs: Sequence[tuple[object, KnotMetadata]],
    *,
    refine_bits: int = 32,
) -> list[Certificate]:
    """Order-preserving certification of many (matrix, metadata) pairs.

    Invalid inputs become per-entry INVALID_INPUT records instead of
    aborting the batch.  InternalInconsistencyError still propagates: it
    signals a bug in this software, not a property of the input.
    """
    return [certify(v, meta, refine_bits=refine_bits) for v, meta in inputs]

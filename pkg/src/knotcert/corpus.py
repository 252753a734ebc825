"""Corpus ingestion, certificate serialization, reports, and step plots.

Corpus formats (selected explicitly or inferred from the file suffix):

* json  - one array of entry objects
* jsonl - one entry object per line
* csv   - rows ``name, e00, e01, ..., size`` with size^2 row-major entries
  followed by the size column

Entry objects follow the schema
``{"name": str, "seifert": [[int, ...], ...], "assume_irreducible": bool,
"assume_m0_prime": bool}`` with both flags optional (defaults true/false).
Malformed or invalid rows become per-row error records; they never abort
the parse.  All emitted artifacts (certificate JSON, report JSON, SVG, CSV)
are byte-deterministic for a fixed input.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .certify import CERTIFIED, Certificate, ConsistencyChecks, certify
from .errors import CorpusParseError, UnknownFormatError, ValidationError
from .inertia import JumpReport, SignatureProfile
from .laurent import SymmetricLaurentPoly, UnitRootWitness
from .seifert import KnotMetadata, validate

FORMATS = ("json", "jsonl", "csv")


@dataclass(frozen=True)
class CorpusEntry:
    """One named Seifert matrix with its user assertions."""

    name: str
    seifert: tuple[tuple[int, ...], ...]
    assume_irreducible: bool = True
    assume_m0_prime: bool = False

    def metadata(self) -> KnotMetadata:
        return KnotMetadata(
            assume_irreducible=self.assume_irreducible,
            assume_m0_prime=self.assume_m0_prime,
        )


@dataclass(frozen=True)
class CorpusError:
    """A row that could not be parsed or validated, with its location."""

    row: int
    name: str | None
    message: str


ParsedRow = CorpusEntry | CorpusError


def _entry_from_obj(obj, row: int) -> ParsedRow:
    if not isinstance(obj, dict):
        return CorpusError(row, None, "entry is not an object")
    name = obj.get("name")
    if not isinstance(name, str) or not name:
        return CorpusError(row, None, "missing or empty 'name'")
    seifert = obj.get("seifert")
    if not isinstance(seifert, list) or any(not isinstance(r, list) for r in seifert):
        return CorpusError(row, name, "'seifert' must be a matrix (list of lists)")
    flags = {}
    for key in ("assume_irreducible", "assume_m0_prime"):
        if key in obj:
            if not isinstance(obj[key], bool):
                return CorpusError(row, name, f"'{key}' must be a boolean")
            flags[key] = obj[key]
    try:
        matrix = validate(seifert).entries
    except (ValidationError, TypeError, ValueError) as exc:
        return CorpusError(row, name, f"row {row} ({name}): {exc}")
    return CorpusEntry(name=name, seifert=matrix, **flags)


def _parse_json(text: str) -> list[ParsedRow]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CorpusParseError(f"not valid JSON: {exc}") from exc
    if not isinstance(data, list):
        raise CorpusParseError("top-level JSON value must be an array of entries")
    return [_entry_from_obj(obj, row) for row, obj in enumerate(data)]


def _parse_jsonl(text: str) -> list[ParsedRow]:
    out: list[ParsedRow] = []
    row = 0
    for line in text.splitlines():
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            out.append(CorpusError(row, None, f"bad JSON line: {exc}"))
        else:
            out.append(_entry_from_obj(obj, row))
        row += 1
    return out


def _parse_csv(text: str) -> list[ParsedRow]:
    # columns: name, row-major entries, trailing size column
    out: list[ParsedRow] = []
    reader = csv.reader(io.StringIO(text))
    for row, record in enumerate(reader):
        if not record or all(not cell.strip() for cell in record):
            continue
        if row == 0 and len(record) >= 2 and not record[-1].strip().lstrip("-").isdigit():
            continue  # header row
        if len(record) < 2:
            out.append(CorpusError(row, None, "need at least name and size columns"))
            continue
        name = record[0].strip()
        try:
            size = int(record[-1])
            cells = [int(c) for c in record[1:-1]]
        except ValueError:
            out.append(CorpusError(row, name or None, "non-integer size or entry"))
            continue
        if size < 0 or len(cells) != size * size:
            out.append(
                CorpusError(row, name or None, f"expected {size * size} entries, got {len(cells)}")
            )
            continue
        matrix = [cells[i * size : (i + 1) * size] for i in range(size)]
        out.append(_entry_from_obj({"name": name, "seifert": matrix}, row))
    return out


def parse_corpus(path: str | Path, format: str | None = None) -> list[ParsedRow]:
    """Parse a corpus file into entries and per-row error records, in file order.

    ``format`` is one of json, jsonl, csv; when omitted it is inferred from
    the suffix.  Raises FileNotFoundError, UnknownFormatError, or
    CorpusParseError (the latter only for file-level damage).
    """
    path = Path(path)
    if format is None:
        format = path.suffix.lstrip(".").lower()
    if format not in FORMATS:
        raise UnknownFormatError(f"unknown corpus format {format!r}; expected one of {FORMATS}")
    text = path.read_text(encoding="utf-8")
    if format == "json":
        return _parse_json(text)
    if format == "jsonl":
        return _parse_jsonl(text)
    return _parse_csv(text)


def write_corpus(entries: Sequence[CorpusEntry], path: str | Path, format: str = "json") -> None:
    """Serialize entries in any of the supported corpus formats."""
    path = Path(path)
    if format == "json" or format == "jsonl":
        objs = [
            {
                "name": e.name,
                "seifert": [list(row) for row in e.seifert],
                "assume_irreducible": e.assume_irreducible,
                "assume_m0_prime": e.assume_m0_prime,
            }
            for e in entries
        ]
        if format == "json":
            path.write_text(json.dumps(objs, indent=2) + "\n", encoding="utf-8")
        else:
            path.write_text(
                "".join(json.dumps(o) + "\n" for o in objs), encoding="utf-8"
            )
        return
    if format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for e in entries:
            flat = [x for row in e.seifert for x in row]
            writer.writerow([e.name, *flat, len(e.seifert)])
        path.write_text(buf.getvalue(), encoding="utf-8")
        return
    raise UnknownFormatError(f"unknown corpus format {format!r}")


# ---------------------------------------------------------------------------
# certificate JSON schema


def _witness_to_obj(w: UnitRootWitness) -> dict:
    return {
        "interval": [str(w.interval[0]), str(w.interval[1])],
        "multiplicity": w.multiplicity,
        "angle_bounds": [str(w.angle_bounds[0]), str(w.angle_bounds[1])],
    }


def _witness_from_obj(obj: dict) -> UnitRootWitness:
    return UnitRootWitness(
        interval=(Fraction(obj["interval"][0]), Fraction(obj["interval"][1])),
        multiplicity=int(obj["multiplicity"]),
        angle_bounds=(Fraction(obj["angle_bounds"][0]), Fraction(obj["angle_bounds"][1])),
    )


def _jump_to_obj(j: JumpReport) -> dict:
    return {
        "root": _witness_to_obj(j.root),
        "left_value": j.left_value,
        "right_value": j.right_value,
        "jump": j.jump,
        "odd_multiplicity": j.odd_multiplicity,
        "transversal_simple": j.transversal_simple,
    }


def _jump_from_obj(obj: dict) -> JumpReport:
    return JumpReport(
        root=_witness_from_obj(obj["root"]),
        left_value=int(obj["left_value"]),
        right_value=int(obj["right_value"]),
        jump=int(obj["jump"]),
        odd_multiplicity=bool(obj["odd_multiplicity"]),
        transversal_simple=bool(obj["transversal_simple"]),
    )


def _alexander_to_obj(p: SymmetricLaurentPoly | None) -> dict | None:
    if p is None:
        return None
    return {str(k): p.coeffs[k] for k in sorted(p.coeffs)}


def certificate_to_dict(cert: Certificate) -> dict:
    """JSON-ready mirror of a Certificate, field for field."""
    checks = cert.consistency_checks
    return {
        "name": cert.name,
        "verdict": cert.verdict,
        "genus": cert.genus,
        "alexander": _alexander_to_obj(cert.alexander),
        "signature_at_minus_one": cert.signature_at_minus_one,
        "simple_root_witnesses": [_witness_to_obj(w) for w in cert.simple_root_witnesses],
        "jump_witnesses": [_jump_to_obj(j) for j in cert.jump_witnesses],
        "odd_multiplicity_witnesses": [
            _witness_to_obj(w) for w in cert.odd_multiplicity_witnesses
        ],
        "assumptions_echoed": {
            "assume_irreducible": cert.assumptions_echoed.assume_irreducible,
            "assume_homology_sphere": cert.assumptions_echoed.assume_homology_sphere,
            "assume_m0_prime": cert.assumptions_echoed.assume_m0_prime,
        },
        "conclusion_text": cert.conclusion_text,
        "consistency_checks": None
        if checks is None
        else {
            "det_sign_crosscheck": checks.det_sign_crosscheck,
            "first_plateau_zero": checks.first_plateau_zero,
            "parity": checks.parity,
        },
        "error": cert.error,
    }


def certificate_from_dict(obj: dict) -> Certificate:
    """Inverse of certificate_to_dict (the recomputable profile is not carried)."""
    alexander = obj.get("alexander")
    checks = obj.get("consistency_checks")
    meta = obj["assumptions_echoed"]
    return Certificate(
        verdict=obj["verdict"],
        simple_root_witnesses=tuple(
            _witness_from_obj(w) for w in obj["simple_root_witnesses"]
        ),
        jump_witnesses=tuple(_jump_from_obj(j) for j in obj["jump_witnesses"]),
        odd_multiplicity_witnesses=tuple(
            _witness_from_obj(w) for w in obj["odd_multiplicity_witnesses"]
        ),
        assumptions_echoed=KnotMetadata(
            assume_irreducible=meta["assume_irreducible"],
            assume_homology_sphere=meta["assume_homology_sphere"],
            assume_m0_prime=meta["assume_m0_prime"],
        ),
        conclusion_text=obj["conclusion_text"],
        consistency_checks=None
        if checks is None
        else ConsistencyChecks(
            det_sign_crosscheck=checks["det_sign_crosscheck"],
            first_plateau_zero=checks["first_plateau_zero"],
            parity=checks["parity"],
        ),
        name=obj.get("name"),
        genus=obj.get("genus"),
        alexander=None
        if alexander is None
        else SymmetricLaurentPoly({int(k): int(v) for k, v in alexander.items()}),
        signature_at_minus_one=obj.get("signature_at_minus_one"),
        error=obj.get("error"),
    )


def certificates_to_json(certs: Sequence[Certificate]) -> str:
    return json.dumps([certificate_to_dict(c) for c in certs], indent=2) + "\n"


def certificates_from_json(text: str) -> list[Certificate]:
    return [certificate_from_dict(obj) for obj in json.loads(text)]


# ---------------------------------------------------------------------------
# pipeline over parsed rows


def certify_rows(rows: Sequence[ParsedRow], refine_bits: int = 32) -> list[Certificate]:
    """Certify parsed corpus rows in order; error rows become INVALID_INPUT records."""
    from .certify import _invalid_certificate

    out = []
    for row in rows:
        if isinstance(row, CorpusError):
            out.append(
                _invalid_certificate(KnotMetadata(), row.name or f"row {row.row}", row.message)
            )
        else:
            out.append(
                certify(row.seifert, row.metadata(), name=row.name, refine_bits=refine_bits)
            )
    return out


# ---------------------------------------------------------------------------
# reports


def _report_row(cert: Certificate) -> dict:
    return {
        "name": cert.name,
        "genus": cert.genus,
        "alexander": _alexander_to_obj(cert.alexander),
        "unit_root_count": cert.unit_root_count,
        "simple_root_count": cert.simple_root_count,
        "jumps": [j.jump for j in cert.jump_witnesses],
        "signature_at_minus_one": cert.signature_at_minus_one,
        "verdict": cert.verdict,
        "error": cert.error,
    }


def emit_report(certificates: Sequence[Certificate], format: str = "table") -> str:
    """Render certificates as a human-readable table or machine-readable JSON."""
    if format == "json":
        return json.dumps([_report_row(c) for c in certificates], indent=2) + "\n"
    if format != "table":
        raise UnknownFormatError(f"unknown report format {format!r}")
    headers = ["name", "genus", "alexander", "roots", "simple", "jumps", "sig(-1)", "verdict"]
    rows = []
    for c in certificates:
        if c.verdict == "INVALID_INPUT":
            rows.append(
                [c.name or "?", "-", c.error or "invalid", "-", "-", "-", "-", c.verdict]
            )
        else:
            rows.append(
                [
                    c.name or "?",
                    str(c.genus),
                    str(c.alexander),
                    str(c.unit_root_count),
                    str(c.simple_root_count),
                    str([j.jump for j in c.jump_witnesses]),
                    str(c.signature_at_minus_one),
                    c.verdict,
                ]
            )
    widths = [len(h) for h in headers]
    for row in rows:
        widths = [max(w, len(cell)) for w, cell in zip(widths, row)]
    lines = [
        "  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip(),
        "  ".join("-" * w for w in widths),
    ]
    for row in rows:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# step plots


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def profile_steps(
    profile: SignatureProfile,
) -> list[tuple[Fraction, Fraction, int, Fraction, Fraction]]:
    """(phi_lo, phi_hi, signature, z_lo, z_hi) per plateau arc.

    Arc boundaries at roots use the rational midpoints of the witnesses'
    angle bounds and z-intervals; the final angle is a dyadic approximation
    of pi (pi/2 for halved-angle profiles).  Decisions upstream are exact in
    z; these cuts are display values.
    """
    end = Fraction(math.pi) / (2 if profile.paper_angles else 1)
    cuts_angle = [w.angle_mid for w in profile.jump_angles]
    cuts_z = [w.z_mid for w in profile.jump_angles]
    rows = []
    m = len(cuts_angle)
    for i, sig in enumerate(profile.plateau_values):
        phi_lo = Fraction(0) if i == 0 else cuts_angle[i - 1]
        phi_hi = cuts_angle[i] if i < m else end
        z_hi = Fraction(2) if i == 0 else cuts_z[i - 1]
        z_lo = cuts_z[i] if i < m else Fraction(-2)
        rows.append((phi_lo, phi_hi, sig, z_lo, z_hi))
    return rows


def profile_csv(profile: SignatureProfile) -> str:
    lines = ["phi_lo,phi_hi,signature,z_lo,z_hi"]
    for phi_lo, phi_hi, sig, z_lo, z_hi in profile_steps(profile):
        lines.append(
            ",".join(
                [_fmt(float(phi_lo)), _fmt(float(phi_hi)), str(sig), _fmt(float(z_lo)), _fmt(float(z_hi))]
            )
        )
    return "\n".join(lines) + "\n"


def profile_svg(profile: SignatureProfile, title: str | None = None) -> str:
    """Hand-rolled SVG step plot; byte-deterministic for a fixed profile."""
    width, height = 640, 360
    left, right, top, bottom = 60.0, 20.0, 24.0, 44.0
    steps = profile_steps(profile)
    end = float(steps[-1][1])
    values = list(profile.plateau_values)
    y_min = min(min(values) - 1, -1)
    y_max = max(max(values) + 1, 1)

    def x_of(phi: float) -> float:
        return left + (width - left - right) * phi / end

    def y_of(sig: float) -> float:
        return top + (height - top - bottom) * (y_max - sig) / (y_max - y_min)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    if title:
        parts.append(
            f'<text x="{width / 2:.2f}" y="16" font-family="monospace" font-size="13" '
            f'text-anchor="middle">{title}</text>'
        )
    axis = 'stroke="black" stroke-width="1"'
    parts.append(
        f'<line x1="{left:.2f}" y1="{y_of(y_min):.2f}" x2="{width - right:.2f}" '
        f'y2="{y_of(y_min):.2f}" {axis}/>'
    )
    parts.append(
        f'<line x1="{left:.2f}" y1="{y_of(y_min):.2f}" x2="{left:.2f}" y2="{y_of(y_max):.2f}" {axis}/>'
    )
    if profile.paper_angles:
        quarter_labels = ["0", "pi/8", "pi/4", "3pi/8", "pi/2"]
    else:
        quarter_labels = ["0", "pi/4", "pi/2", "3pi/4", "pi"]
    for k in range(5):
        phi = end * k / 4
        xk = x_of(phi)
        parts.append(
            f'<line x1="{xk:.2f}" y1="{y_of(y_min):.2f}" x2="{xk:.2f}" '
            f'y2="{y_of(y_min) + 5:.2f}" {axis}/>'
        )
        parts.append(
            f'<text x="{xk:.2f}" y="{y_of(y_min) + 18:.2f}" font-family="monospace" '
            f'font-size="11" text-anchor="middle">{quarter_labels[k]}</text>'
        )
    sig_tick = y_min + (1 if y_min % 2 else 0)
    for s in range(int(sig_tick), int(y_max) + 1, 2):
        ys = y_of(s)
        parts.append(
            f'<line x1="{left - 4:.2f}" y1="{ys:.2f}" x2="{left:.2f}" y2="{ys:.2f}" {axis}/>'
        )
        parts.append(
            f'<text x="{left - 8:.2f}" y="{ys + 4:.2f}" font-family="monospace" '
            f'font-size="11" text-anchor="end">{s}</text>'
        )
    if y_min < 0 < y_max:
        parts.append(
            f'<line x1="{left:.2f}" y1="{y_of(0):.2f}" x2="{width - right:.2f}" '
            f'y2="{y_of(0):.2f}" stroke="lightgray" stroke-width="1" stroke-dasharray="2,3"/>'
        )
    for i, (phi_lo, phi_hi, sig, _, _) in enumerate(steps):
        y = y_of(sig)
        parts.append(
            f'<line x1="{x_of(float(phi_lo)):.2f}" y1="{y:.2f}" '
            f'x2="{x_of(float(phi_hi)):.2f}" y2="{y:.2f}" stroke="crimson" stroke-width="2"/>'
        )
        if i + 1 < len(steps):
            y_next = y_of(steps[i + 1][2])
            xc = x_of(float(phi_hi))
            parts.append(
                f'<line x1="{xc:.2f}" y1="{y:.2f}" x2="{xc:.2f}" y2="{y_next:.2f}" '
                f'stroke="crimson" stroke-width="1" stroke-dasharray="3,3"/>'
            )
    angle_name = "alpha" if profile.paper_angles else "phi"
    parts.append(
        f'<text x="{(left + width - right) / 2:.2f}" y="{height - 6:.2f}" '
        f'font-family="monospace" font-size="12" text-anchor="middle">{angle_name}</text>'
    )
    parts.append(
        f'<text x="14" y="{(top + height - bottom) / 2:.2f}" font-family="monospace" '
        f'font-size="12" text-anchor="middle" transform="rotate(-90 14 '
        f'{(top + height - bottom) / 2:.2f})">signature</text>'
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def emit_profile_plot(
    profile: SignatureProfile, path: str | Path, title: str | None = None
) -> Path:
    """Write the SVG step plot at ``path`` and its CSV companion alongside.

    The companion shares the stem with a .csv suffix.  Returns the SVG path;
    raises OSError on IO failure.
    """
    svg_path = Path(path)
    csv_path = svg_path.with_suffix(".csv")
    svg_path.write_text(profile_svg(profile, title=title), encoding="utf-8")
    csv_path.write_text(profile_csv(profile), encoding="utf-8")
    return svg_path

"""Analysis reports: curve type, annihilator algebras per mode, and the obstruction verdict.

The obstruction rule: on CP^2 (where H^1 vanishes) a Poisson-deformed
generalized complex structure whose automorphism algebra is not reductive
admits no generalized Kähler structure of symplectic type with constant
scalar curvature.  A reductive algebra says nothing either way.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .curves import CurveType, SingularData, classify_from_data, singular_data
from .lie import LieSubalgebra, is_abelian, is_nilpotent, is_reductive, is_solvable
from .linalg import Matrix
from .parser import parse
from .poisson import Mode, PoissonAlgebra, annihilator
from .polynomial import HomPolynomial

OBSTRUCTED = "obstructed"
NOT_OBSTRUCTED = "not_obstructed_by_this_criterion"

NOTE_H1 = (
    "H^1(CP^2, C) = 0, so the automorphism algebra of the deformed structure equals its reduced "
    "automorphism algebra and non-reductivity obstructs constant scalar curvature generalized "
    "Kähler structures of symplectic type"
)
NOTE_MODES_DISAGREE = (
    "strict and divisor verdicts disagree; the obstruction is reported per mode and no single "
    "verdict is synthesised"
)
NOTE_CONCURRENT_LINES = (
    "three concurrent lines: the strict annihilator is a 2-dimensional abelian algebra, hence reductive; "
    "the non-reductive verdict usually quoted for this configuration holds for the curve-preserving "
    "(divisor) algebra only"
)
NOTE_TRIANGLE_EXISTENCE = (
    "three lines in general position: the Poisson structure comes from a 2-torus action and "
    "constant scalar curvature generalized Kähler structures are known to exist"
)


def rational_text(x: Fraction) -> str:
    return str(Fraction(x))


def matrix_payload(m: Matrix) -> list[list[str]]:
    return [[rational_text(x) for x in row] for row in m.rows]


@dataclass(frozen=True)
class ModeReport:
    mode: Mode
    algebra: PoissonAlgebra
    is_abelian: bool
    is_solvable: bool
    is_nilpotent: bool
    radical: LieSubalgebra
    center: LieSubalgebra
    is_reductive: bool

    @property
    def obstruction(self) -> str:
        return NOT_OBSTRUCTED if self.is_reductive else OBSTRUCTED

    def to_dict(self) -> dict:
        out = {
            "mode": self.mode.value,
            "dimension": self.algebra.dim,
            "basis": [matrix_payload(b) for b in self.algebra.basis],
        }
        if self.mode is Mode.DIVISOR:
            out["eigen_weights"] = [rational_text(w) for w in self.algebra.weights]
        out.update(
            is_abelian=self.is_abelian,
            is_solvable=self.is_solvable,
            is_nilpotent=self.is_nilpotent,
            radical={"dimension": self.radical.dim, "basis": [matrix_payload(b) for b in self.radical.basis]},
            center={"dimension": self.center.dim, "basis": [matrix_payload(b) for b in self.center.basis]},
            is_reductive=self.is_reductive,
            obstruction=self.obstruction,
        )
        return out


def analyze_mode(f: HomPolynomial, mode: Mode | str) -> ModeReport:
    g = annihilator(f, mode)
    verdict = is_reductive(g)
    return ModeReport(
        mode=Mode(mode),
        algebra=g,
        is_abelian=is_abelian(g),
        is_solvable=is_solvable(g),
        is_nilpotent=is_nilpotent(g),
        radical=verdict.radical,
        center=verdict.center,
        is_reductive=verdict.is_reductive,
    )


def singular_payload(data: SingularData) -> dict:
    return {
        "reduced": data.reduced,
        "repeated_factor_degree": data.repeated_factor_degree,
        "singular_count_over_closure": data.singular_count_over_closure,
        "tjurina_numbers": list(data.tjurina_numbers),
        "rational_singular_points": [
            {
                "point": [rational_text(x) for x in p.coordinates],
                "multiplicity": p.multiplicity,
                "tangent_directions": p.tangent_directions,
                "tjurina": p.tjurina,
            }
            for p in data.rational_singular_points
        ],
    }


@dataclass(frozen=True)
class AnalysisReport:
    form: HomPolynomial
    curve_type: CurveType
    singular: SingularData
    modes: tuple[ModeReport, ...]
    annotations: tuple[str, ...]

    @property
    def input(self) -> str:
        return self.form.render()

    def mode(self, mode: Mode | str) -> ModeReport:
        mode = Mode(mode)
        for m in self.modes:
            if m.mode is mode:
                return m
        raise KeyError(mode.value)

    @property
    def obstruction(self) -> dict[str, str]:
        return {m.mode.value: m.obstruction for m in self.modes}

    @property
    def modes_agree(self) -> bool:
        return len({m.is_reductive for m in self.modes}) <= 1

    def to_dict(self) -> dict:
        return {
            "input": self.input,
            "curve_type": self.curve_type.value,
            "index": self.curve_type.index,
            "singular_data": singular_payload(self.singular),
            "modes": {m.mode.value: m.to_dict() for m in self.modes},
            "obstruction": self.obstruction,
            "modes_agree": self.modes_agree,
            "annotations": list(self.annotations),
        }

    def to_text(self) -> str:
        lines = [
            f"input: {self.input}",
            f"curve type: {self.curve_type.value} ({self.curve_type.description})",
        ]
        s = self.singular
        lines.append(
            f"singular points over the closure: {s.singular_count_over_closure}"
            + (f"; Tjurina numbers {list(s.tjurina_numbers)}" if s.reduced else "")
        )
        for p in s.rational_singular_points:
            coords = ":".join(rational_text(x) for x in p.coordinates)
            lines.append(
                f"  [{coords}] multiplicity {p.multiplicity}, "
                f"{p.tangent_directions} tangent line(s), Tjurina {p.tjurina}"
            )
        for m in self.modes:
            lines.append(f"[{m.mode.value}] dimension {m.algebra.dim}")
            for k, b in enumerate(m.algebra.basis):
                rows = "; ".join(" ".join(rational_text(x) for x in r) for r in b.rows)
                weight = f"  (weight {rational_text(m.algebra.weights[k])})" if m.mode is Mode.DIVISOR else ""
                lines.append(f"  b{k} = [{rows}]{weight}")
            lines.append(
                f"  abelian: {_yn(m.is_abelian)}  solvable: {_yn(m.is_solvable)}  "
                f"nilpotent: {_yn(m.is_nilpotent)}"
            )
            lines.append(f"  radical dimension: {m.radical.dim}  center dimension: {m.center.dim}")
            lines.append(f"  reductive: {_yn(m.is_reductive)}  obstruction: {m.obstruction}")
        for note in self.annotations:
            lines.append(f"note: {note}")
        return "\n".join(lines)


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def analyze(f: HomPolynomial | str, modes: Iterable[Mode | str] = (Mode.STRICT, Mode.DIVISOR)) -> AnalysisReport:
    """Classify ``f`` and analyse its annihilator in each requested mode."""
    if isinstance(f, str):
        f = parse(f, 3)
    data = singular_data(f)
    curve = classify_from_data(f, data)
    reports = tuple(analyze_mode(f, m) for m in _dedupe_modes(modes))
    notes = [NOTE_H1]
    if len({r.is_reductive for r in reports}) > 1:
        notes.append(NOTE_MODES_DISAGREE)
    if curve is CurveType.THREE_LINES_CONCURRENT and any(r.mode is Mode.STRICT for r in reports):
        notes.append(NOTE_CONCURRENT_LINES)
    if curve is CurveType.THREE_LINES_GENERAL:
        notes.append(NOTE_TRIANGLE_EXISTENCE)
    return AnalysisReport(f, curve, data, reports, tuple(notes))


def _dedupe_modes(modes: Iterable[Mode | str]) -> list[Mode]:
    out: list[Mode] = []
    for m in modes:
        m = Mode(m)
        if m not in out:
            out.append(m)
    if not out:
        raise ValueError("at least one mode is required")
    return out


def modes_from_flag(flag: str) -> Sequence[Mode]:
    if flag == "both":
        return (Mode.STRICT, Mode.DIVISOR)
    return (Mode(flag),)

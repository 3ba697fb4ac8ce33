"""Report models emitted by the command-line tools."""

from fractions import Fraction
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from ..config.settings import Settings
from ..exactnum import AlgNum, render


def format_value(value: AlgNum, digits: Optional[int] = None) -> str:
    """Exact value followed by a parenthesized decimal approximation."""
    digits = digits or Settings.DISPLAY_DIGITS
    return f"{render(value)} ({value.to_decimal_string(digits)})"


def format_move(move: tuple[int, int]) -> str:
    return f"{move[0]},{move[1]}"


class _Report(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    def render(self) -> str:  # pragma: no cover - overridden
        raise NotImplementedError

    def render_machine(self) -> str:  # pragma: no cover - overridden
        raise NotImplementedError


class Evaluation(_Report):
    """Result of a state-sum evaluation."""

    value: AlgNum = Field(..., description="Exact partition function")
    colorings_visited: int = Field(default=0, ge=0, description="Complete colorings summed")
    pruned: int = Field(default=0, ge=0, description="Partial colorings cut off")
    rows_used: list[str] = Field(default_factory=list, description="Dataset rows touched")

    def render(self) -> str:
        lines = [
            f"value: {format_value(self.value)}",
            f"colorings: {self.colorings_visited}",
            f"pruned: {self.pruned}",
        ]
        if self.rows_used:
            lines.append(f"rows: {' '.join(self.rows_used)}")
        return "\n".join(lines)

    def render_machine(self) -> str:
        return "\t".join(
            [
                "eval",
                render(self.value),
                self.value.to_decimal_string(Settings.DISPLAY_DIGITS),
                str(self.colorings_visited),
                str(self.pruned),
            ]
        )


class PachnerFailure(BaseModel):
    """One failing equation."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    move: str
    boundary: str = Field(..., description="Boundary coloring, simplex=label pairs")
    lhs: AlgNum
    rhs: AlgNum
    rows: list[str] = Field(default_factory=list, description="Rows used by either side")

    def render_line(self) -> str:
        fields = [self.move, self.boundary, render(self.lhs), render(self.rhs)]
        if self.rows:
            fields.append("rows=" + ",".join(self.rows))
        return "\t".join(fields)


class PachnerReport(_Report):
    """Verification summary for one move type."""

    move: str
    dataset: str
    total: int = Field(default=0, ge=0)
    passed: int = Field(default=0, ge=0)
    failed: int = Field(default=0, ge=0)
    first_failures: list[PachnerFailure] = Field(default_factory=list)
    sample_size: Optional[int] = None
    seed: Optional[int] = None

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def render(self) -> str:
        scope = ""
        if self.sample_size is not None:
            scope = f" (sample {self.sample_size}, seed {self.seed})"
        lines = [f"move {self.move} on {self.dataset}{scope}: {self.passed}/{self.total} passed"]
        for failure in self.first_failures:
            lines.append("FAIL\t" + failure.render_line())
        if self.failed > len(self.first_failures):
            lines.append(f"... {self.failed - len(self.first_failures)} more failures")
        return "\n".join(lines)

    def render_machine(self) -> str:
        lines = [
            "\t".join(
                ["pachner", self.move, str(self.total), str(self.passed), str(self.failed)]
            )
        ]
        lines.extend("fail\t" + f.render_line() for f in self.first_failures)
        return "\n".join(lines)


class ValidationReport(_Report):
    """Dataset invariant check."""

    dataset: str
    violations: list[str] = Field(default_factory=list)
    notes: list[str] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def render(self) -> str:
        status = "ok" if self.ok else f"{len(self.violations)} violation(s)"
        lines = [f"dataset {self.dataset}: {status}"]
        lines.extend(f"violation: {v}" for v in self.violations)
        lines.extend(f"note: {n}" for n in self.notes)
        return "\n".join(lines)

    def render_machine(self) -> str:
        lines = [f"validate\t{self.dataset}\t{len(self.violations)}"]
        lines.extend(f"violation\t{v}" for v in self.violations)
        lines.extend(f"note\t{n}" for n in self.notes)
        return "\n".join(lines)


class GramReport(_Report):
    """Gram matrix, rank, kernel and positivity for m boundary circles."""

    circles: int
    basis: list[str]
    matrix: list[list[AlgNum]]
    rank: int
    expected_rank: int
    kernel: Optional[list[list[AlgNum]]] = None
    psd: Optional[bool] = None

    @property
    def ok(self) -> bool:
        return self.rank == self.expected_rank and self.psd is not False

    def render(self) -> str:
        lines = [f"circles: {self.circles}", f"basis: {' '.join(self.basis)}", "matrix:"]
        lines.extend("  [" + ", ".join(render(x) for x in row) + "]" for row in self.matrix)
        lines.append(f"rank: {self.rank} (expected {self.expected_rank})")
        if self.kernel is not None:
            lines.append(f"kernel: {len(self.kernel)} vector(s)")
            for vector in self.kernel:
                lines.append("  (" + ", ".join(render(x) for x in vector) + ")")
        if self.psd is not None:
            lines.append(f"psd: {'yes' if self.psd else 'no'}")
        return "\n".join(lines)

    def render_machine(self) -> str:
        lines = [f"gram\t{self.circles}\t{len(self.basis)}\t{self.rank}\t{self.expected_rank}"]
        for vector in self.kernel or []:
            lines.append("kernel\t" + "\t".join(render(x) for x in vector))
        if self.psd is not None:
            lines.append(f"psd\t{str(self.psd).lower()}")
        return "\n".join(lines)


class MednykhReport(_Report):
    """Both sides of the Mednykh identity for one group and genus."""

    group: str
    order: int
    genus: int
    homs: int
    lhs: Fraction
    rhs: Fraction

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs

    def render(self) -> str:
        verdict = "holds" if self.holds else "FAILS"
        return (
            f"group {self.group} (order {self.order}), genus {self.genus}: "
            f"#hom = {self.homs}, lhs = {self.lhs}, rhs = {self.rhs}, {verdict}"
        )

    def render_machine(self) -> str:
        return "\t".join(
            [
                "mednykh",
                self.group,
                str(self.genus),
                str(self.homs),
                str(self.lhs),
                str(self.rhs),
                str(self.holds).lower(),
            ]
        )


class SuiteResult(BaseModel):
    name: str
    passed: bool
    detail: str = ""


class SelftestReport(_Report):
    """Outcome of the fast acceptance subset."""

    suites: list[SuiteResult] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(s.passed for s in self.suites)

    def render(self) -> str:
        lines = [
            f"{'PASS' if s.passed else 'FAIL'} {s.name}" + (f": {s.detail}" if s.detail else "")
            for s in self.suites
        ]
        passed = sum(s.passed for s in self.suites)
        lines.append(f"{passed}/{len(self.suites)} suites passed")
        return "\n".join(lines)

    def render_machine(self) -> str:
        return "\n".join(
            f"suite\t{s.name}\t{'pass' if s.passed else 'fail'}\t{s.detail}" for s in self.suites
        )


class CalibrationRow(BaseModel):
    symmetry: str
    totals: dict[str, int]
    failures: dict[str, int]
    matches_checksum: bool


class CalibrationReport(_Report):
    """Equation totals per candidate symmetry action."""

    dataset: str
    rows: list[CalibrationRow] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return any(r.matches_checksum and not any(r.failures.values()) for r in self.rows)

    def render(self) -> str:
        lines = [f"calibration on {self.dataset}"]
        for row in self.rows:
            counts = ", ".join(
                f"{m}: {row.totals[m]} ({row.failures.get(m, 0)} failed)" for m in row.totals
            )
            mark = "matches" if row.matches_checksum else "differs"
            lines.append(f"{row.symmetry}: {counts}; {mark}")
        return "\n".join(lines)

    def render_machine(self) -> str:
        lines = []
        for row in self.rows:
            for move, total in row.totals.items():
                lines.append(
                    f"calibrate\t{row.symmetry}\t{move}\t{total}\t{row.failures.get(move, 0)}"
                )
        return "\n".join(lines)

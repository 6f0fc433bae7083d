"""Bundled reference table of maximum-length rule vectors, n = 2..12.

The dataset ships as a plain text file (one `n poly rv` row per line)
so it stays auditable and diffable; nothing is hardcoded in source.
Every row can be re-verified from scratch: recompute the characteristic
polynomial, test primitivity, and measure the actual cycle length by
raw simulation. A failing row is a finding about the data, reported
with full diagnostics and never silently dropped or edited.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .automaton import cycle_length_from, unit_seed
from .charpoly import RuleVector, characteristic_polynomial, reverse
from .gf2poly import format_poly, parse_poly
from .primitivity import is_primitive

__all__ = [
    "TableRow",
    "RowVerdict",
    "VerificationReport",
    "load_rows",
    "verify_row",
    "verify_all",
]

_DATA = "data/maxlen_rules.txt"


@dataclass(frozen=True)
class TableRow:
    """One printed (cell count, polynomial, rule vector) triple."""

    n: int
    poly_str: str
    rv_str: str

    def __post_init__(self):
        if not 1 <= self.n:
            raise ValueError(f"bad cell count {self.n}")
        if len(self.poly_str) != self.n + 1 or set(self.poly_str) - {"0", "1"}:
            raise ValueError(
                f"polynomial must be {self.n + 1} chars over 0/1: {self.poly_str!r}"
            )
        if self.poly_str[0] != "1":
            raise ValueError(f"polynomial must be monic: {self.poly_str!r}")
        if len(self.rv_str) != self.n or set(self.rv_str) - {"0", "1"}:
            raise ValueError(
                f"rule vector must be {self.n} chars over 0/1: {self.rv_str!r}"
            )


@dataclass(frozen=True)
class RowVerdict:
    """Outcome of the three checks for one row."""

    row: TableRow
    computed_poly: str
    charpoly_match: bool
    poly_primitive: bool
    cycle_length: int | None

    @property
    def passed(self) -> bool:
        return (
            self.charpoly_match
            and self.poly_primitive
            and self.cycle_length == (1 << self.row.n) - 1
        )

    def reason(self) -> str:
        """Compact diagnostic for the errata file."""
        period = (1 << self.row.n) - 1
        parts = []
        if not self.charpoly_match:
            parts.append(f"charpoly(rv)={self.computed_poly} != printed poly")
        if not self.poly_primitive:
            parts.append("printed poly not primitive")
        if self.cycle_length != period:
            parts.append(f"cycle={self.cycle_length} expected {period}")
        if not parts:
            parts.append("ok")
        return "; ".join(parts)


@dataclass(frozen=True)
class VerificationReport:
    total: int
    passed: int
    failures: tuple[RowVerdict, ...]

    def errata_lines(self) -> list[str]:
        """Failures in the dataset's row format plus a reason column."""
        return [
            f"{v.row.n} {v.row.poly_str} {v.row.rv_str} {v.reason()}"
            for v in self.failures
        ]

    def write_errata(self, path) -> None:
        with open(path, "w") as f:
            f.write("# Rows that failed re-verification; reason appended.\n")
            for line in self.errata_lines():
                f.write(line + "\n")


def _parse_line(line: str, lineno: int) -> TableRow | None:
    body = line.split("#", 1)[0].strip()
    if not body:
        return None
    parts = body.split()
    if len(parts) != 3:
        raise ValueError(f"line {lineno}: expected 'n poly rv', got {line!r}")
    try:
        n = int(parts[0])
    except ValueError:
        raise ValueError(f"line {lineno}: bad cell count in {line!r}") from None
    return TableRow(n=n, poly_str=parts[1], rv_str=parts[2])


def load_rows(n: int | None = None) -> list[TableRow]:
    """The embedded rows, in print order, optionally filtered to one n."""
    text = resources.files(__package__).joinpath(_DATA).read_text()
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        row = _parse_line(line, lineno)
        if row is not None and (n is None or row.n == n):
            rows.append(row)
    return rows


def verify_row(row: TableRow) -> RowVerdict:
    """Re-derive one row: characteristic polynomial (tried under both
    print orientations of the rule vector), primitivity of the printed
    polynomial, and the simulated cycle length from the unit seed."""
    rv = RuleVector(row.rv_str)
    computed = characteristic_polynomial(rv)
    computed_rev = characteristic_polynomial(reverse(rv))
    printed = parse_poly(row.poly_str)
    return RowVerdict(
        row=row,
        computed_poly=format_poly(computed),
        charpoly_match=(computed == printed or computed_rev == printed),
        poly_primitive=is_primitive(printed),
        cycle_length=cycle_length_from(rv, unit_seed(row.n)),
    )


def verify_all(n: int | None = None) -> VerificationReport:
    """Verify every embedded row (or just those for one n)."""
    verdicts = [verify_row(r) for r in load_rows(n)]
    failures = tuple(v for v in verdicts if not v.passed)
    return VerificationReport(
        total=len(verdicts),
        passed=len(verdicts) - len(failures),
        failures=failures,
    )

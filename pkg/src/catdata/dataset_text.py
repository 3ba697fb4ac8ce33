"""Parser for the line-oriented dataset format."""

from typing import Optional

from ..exactnum import AlgNum, parse
from ..simplicial.faces import local_faces
from ..utils.errors import ContractError, DatasetError
from .category_data import CategoryData, FRow
from .completion import complete_rows
from .labels import Label
from .symmetry import SymmetryAction


def _value(text: str, line_no: int, row_id: Optional[str] = None) -> AlgNum:
    try:
        return parse(text)
    except ContractError as e:
        raise DatasetError(f"line {line_no}: bad value {text!r}: {e}", row_id)


def parse_dataset(
    text: str, source: str = "<text>", symmetry: Optional[SymmetryAction] = None
) -> CategoryData:
    """
    Parse dataset text.

    Directives: n, unit, symmetry, complete, labels, trace, gdim, frow, ftilde,
    surface. `complete <rule>` extends the listed rows to every admissible
    labeling under a named rule set.
    Blank lines and lines starting with '#' are ignored.

    Args:
        text: Dataset contents
        source: Name used in diagnostics
        symmetry: Overrides the file's symmetry directive when given

    Returns:
        The closed CategoryData

    Raises:
        DatasetError: On any malformed or inconsistent line
    """
    n: Optional[int] = None
    unit: Optional[str] = None
    declared_symmetry = SymmetryAction.IDENTITY
    completion: Optional[str] = None
    labels: dict[int, list[str]] = {}
    traces: dict[str, tuple[int, AlgNum]] = {}
    gdims: dict[str, tuple[int, AlgNum]] = {}
    rows: list[dict] = []
    extras: dict[str, dict] = {}

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        directive, args = parts[0], parts[1:]

        if directive == "n":
            if len(args) != 1 or not args[0].isdigit():
                raise DatasetError(f"line {line_no}: expected 'n <integer>'")
            n = int(args[0])
        elif directive == "unit":
            if len(args) != 1:
                raise DatasetError(f"line {line_no}: expected 'unit <name>'")
            unit = args[0]
        elif directive == "symmetry":
            try:
                declared_symmetry = SymmetryAction(args[0] if args else "")
            except ValueError:
                choices = ", ".join(a.value for a in SymmetryAction)
                raise DatasetError(
                    f"line {line_no}: unknown symmetry {' '.join(args)!r} (choose from {choices})"
                )
        elif directive == "complete":
            if len(args) != 1:
                raise DatasetError(f"line {line_no}: expected 'complete <rule>'")
            completion = args[0]
        elif directive == "labels":
            if not args or not args[0].isdigit():
                raise DatasetError(f"line {line_no}: expected 'labels <k> <names...>'")
            labels.setdefault(int(args[0]), []).extend(args[1:])
        elif directive in ("trace", "gdim"):
            if len(args) < 2:
                raise DatasetError(f"line {line_no}: expected '{directive} <name> <value>'")
            name = args[0]
            dims = [k for k, names in labels.items() if name in names]
            if not dims:
                raise DatasetError(f"line {line_no}: {directive} for undeclared label {name!r}")
            if len(dims) > 1:
                raise DatasetError(f"line {line_no}: label name {name!r} is ambiguous")
            target = traces if directive == "trace" else gdims
            target[name] = (dims[0], _value(" ".join(args[1:]), line_no))
        elif directive == "frow":
            if n is None:
                raise DatasetError(f"line {line_no}: frow before the 'n' directive")
            if not args:
                raise DatasetError(f"line {line_no}: frow without a row id")
            row_id = args[0]
            width = len(local_faces(n + 2, n))
            if len(args) < width + 2:
                raise DatasetError(
                    f"line {line_no}: expected {width} face labels and a value", row_id
                )
            rows.append(
                {
                    "row_id": row_id,
                    "labels": tuple(args[1 : width + 1]),
                    "value": _value(" ".join(args[width + 1 :]), line_no, row_id),
                }
            )
        elif directive == "ftilde":
            if len(args) < 2:
                raise DatasetError(f"line {line_no}: expected 'ftilde <row> <value>'")
            extras.setdefault(args[0], {})["ftilde"] = _value(
                " ".join(args[1:]), line_no, args[0]
            )
        elif directive == "surface":
            if len(args) < 2:
                raise DatasetError(f"line {line_no}: expected 'surface <row> <text>'")
            extras.setdefault(args[0], {})["surface"] = " ".join(args[1:])
        else:
            raise DatasetError(f"line {line_no}: unknown directive {directive!r}")

    if n is None:
        raise DatasetError(f"{source}: missing 'n' directive")
    known_rows = {r["row_id"] for r in rows}
    for row_id in extras:
        if row_id not in known_rows:
            raise DatasetError("metadata for an unknown row", row_id)

    frows = [FRow(**r, **extras.get(r["row_id"], {})) for r in rows]
    if completion is not None:
        frows = complete_rows(completion, frows, n)

    return CategoryData(
        n=n,
        labels=labels,
        traces={Label(dim=k, name=name): v for name, (k, v) in traces.items()},
        globaldims={Label(dim=k, name=name): v for name, (k, v) in gdims.items()},
        rows=frows,
        unit=unit,
        symmetry=symmetry if symmetry is not None else declared_symmetry,
        source=source,
    )

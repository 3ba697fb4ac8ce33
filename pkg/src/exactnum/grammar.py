"""Text grammar for AlgNum values: "a/b + c/d·r + e/f·r2 + g/h·r3"."""

import re
from fractions import Fraction

from ..utils.errors import ContractError
from .algnum import AlgNum, ONE, pow2_quarter

_SYMBOLS = ("", "r", "r2", "r3")

_ATOM_POWER = re.compile(r"^2\^\((-?\d+)/4\)$")
_ATOM_INT_POWER = re.compile(r"^2\^(-?\d+)$")
_ATOM_INT = re.compile(r"^\d+$")
_NAMED_ATOMS = {
    "r": pow2_quarter(1),
    "r2": pow2_quarter(2),
    "r3": pow2_quarter(3),
    "sqrt2": pow2_quarter(2),
}


def _render_term(coeff: Fraction, symbol: str) -> str:
    magnitude = abs(coeff)
    if not symbol:
        return str(magnitude)
    if magnitude == 1:
        return symbol
    return f"{magnitude}·{symbol}"


def render(value: AlgNum) -> str:
    """Render in canonical text form; zero renders as "0"."""
    parts = []
    for coeff, symbol in zip(value.coefficients, _SYMBOLS):
        if coeff == 0:
            continue
        term = _render_term(coeff, symbol)
        if not parts:
            parts.append(f"-{term}" if coeff < 0 else term)
        else:
            parts.append(f"- {term}" if coeff < 0 else f"+ {term}")
    return " ".join(parts) if parts else "0"


def _split_top_level(text: str, separators: str) -> list[tuple[str, str]]:
    """Split on separator characters outside parentheses, keeping the separator."""
    pieces = []
    depth = 0
    current = []
    current_sep = ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ContractError(f"Unbalanced parenthesis in {text!r}")
        # a sign right after ^ belongs to the exponent
        if depth == 0 and ch in separators and not (current and current[-1] == "^"):
            pieces.append((current_sep, "".join(current)))
            current = []
            current_sep = ch
            continue
        current.append(ch)
    if depth != 0:
        raise ContractError(f"Unbalanced parenthesis in {text!r}")
    pieces.append((current_sep, "".join(current)))
    return pieces


def _parse_atom(atom: str, source: str) -> AlgNum:
    if _ATOM_INT.match(atom):
        return AlgNum(int(atom))
    if atom in _NAMED_ATOMS:
        return _NAMED_ATOMS[atom]
    match = _ATOM_POWER.match(atom)
    if match:
        return pow2_quarter(int(match.group(1)))
    match = _ATOM_INT_POWER.match(atom)
    if match:
        return pow2_quarter(4 * int(match.group(1)))
    raise ContractError(f"Cannot parse {atom!r} in value {source!r}")


def _parse_factor(factor: str, source: str) -> AlgNum:
    pieces = _split_top_level(factor, "/")
    if len(pieces) > 2 or not pieces[0][1]:
        raise ContractError(f"Cannot parse {factor!r} in value {source!r}")
    value = _parse_atom(pieces[0][1], source)
    if len(pieces) == 2:
        value = value / _parse_atom(pieces[1][1], source)
    return value


def parse(text: str) -> AlgNum:
    """
    Parse a value written in the AlgNum grammar.

    Args:
        text: e.g. "1/2·r2", "-3 + 2*sqrt2", "2^(-3/4)"

    Returns:
        The parsed exact value

    Raises:
        ContractError: If the text is not in the grammar
    """
    compact = "".join(text.split())
    if not compact:
        raise ContractError("Empty value")

    total = AlgNum(0)
    # A leading sign yields an empty first piece
    terms = _split_top_level(compact, "+-")
    for index, (sep, term) in enumerate(terms):
        if not term:
            if index == 0 and len(terms) > 1:
                continue
            raise ContractError(f"Dangling sign in value {text!r}")
        value = ONE
        for _, factor in _split_top_level(term, "·*"):
            if not factor:
                raise ContractError(f"Empty factor in value {text!r}")
            value = value * _parse_factor(factor, text)
        total = total - value if sep == "-" else total + value
    return total

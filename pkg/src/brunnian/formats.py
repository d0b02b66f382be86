"""Readers and writers for ``.cnct`` structure files and ``.fam`` family files.

``.cnct``::

    n 3
    # one generator per line, 1-based indices
    1 2
    2 3

``.fam``::

    n 2
    omega 2
    p 1/2 1/2
    x 0 1
    x 0 1

``#`` starts a comment anywhere on a line; blank lines are skipped.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator

from .errors import BrunnianError, ParseError
from .family import RandomFamily, validate_family
from .structure import ConnectivityStructure, generate
from .subsets import MAX_N, card, indices


def _lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield lineno, body.split()


def _int(source: str, lineno: int, token: str, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(source, lineno, f"{what} must be an integer, got {token!r}") from None


def _header_n(source: str, lines: Iterator[tuple[int, list[str]]]) -> tuple[int, int]:
    try:
        lineno, toks = next(lines)
    except StopIteration:
        raise ParseError(source, 1, "missing 'n <int>' header") from None
    if toks[0] != "n" or len(toks) != 2:
        raise ParseError(source, lineno, "first line must be 'n <int>'")
    n = _int(source, lineno, toks[1], "n")
    if not 1 <= n <= MAX_N:
        raise ParseError(source, lineno, f"n must satisfy 1 <= n <= {MAX_N}")
    return lineno, n


def parse_cnct(text: str, source: str = "<string>") -> ConnectivityStructure:
    """Parse a ``.cnct`` text and return the structure its lines generate."""
    lines = _lines(text)
    _, n = _header_n(source, lines)
    gens = []
    for lineno, toks in lines:
        bits = 0
        for tok in toks:
            i = _int(source, lineno, tok, "index")
            if not 1 <= i <= n:
                raise ParseError(source, lineno, f"index {i} outside 1..{n}")
            bits |= 1 << (i - 1)
        gens.append(bits)
    return generate(n, gens)


def format_cnct(k: ConnectivityStructure) -> str:
    """Canonical text: the ``n`` line, then every member of size >= 2."""
    out = [f"n {k.n}"]
    out.extend(" ".join(map(str, indices(s))) for s in k.members if card(s) >= 2)
    return "\n".join(out) + "\n"


def format_subsets(sets: Iterable[int]) -> str:
    return "".join(" ".join(map(str, indices(s))) + "\n" for s in sets)


def _rational(source: str, lineno: int, token: str) -> Fraction:
    if "." in token or "e" in token.lower():
        raise ParseError(source, lineno, f"probability {token!r} must be an integer or a/b")
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError(source, lineno, f"probability {token!r} is not a rational a/b") from None


def parse_fam(text: str, source: str = "<string>") -> RandomFamily:
    lines = _lines(text)
    _, n = _header_n(source, lines)
    try:
        lineno, toks = next(lines)
    except StopIteration:
        raise ParseError(source, 1, "missing 'omega <int>' line") from None
    if toks[0] != "omega" or len(toks) != 2:
        raise ParseError(source, lineno, "second line must be 'omega <int>'")
    m = _int(source, lineno, toks[1], "omega")
    if m < 1:
        raise ParseError(source, lineno, "omega must be positive")
    try:
        p_line, toks = next(lines)
    except StopIteration:
        raise ParseError(source, lineno, "missing 'p' line") from None
    if toks[0] != "p":
        raise ParseError(source, p_line, "third line must start with 'p'")
    if len(toks) - 1 != m:
        raise ParseError(source, p_line, f"expected {m} probabilities, got {len(toks) - 1}")
    probs = [_rational(source, p_line, t) for t in toks[1:]]
    variables = []
    last = p_line
    for lineno, toks in lines:
        last = lineno
        if toks[0] != "x":
            raise ParseError(source, lineno, "variable lines must start with 'x'")
        if len(toks) - 1 != m:
            raise ParseError(source, lineno, f"expected {m} value codes, got {len(toks) - 1}")
        codes = [_int(source, lineno, t, "value code") for t in toks[1:]]
        if any(c < 0 for c in codes):
            raise ParseError(source, lineno, "value codes must be non-negative")
        variables.append(codes)
        if len(variables) > n:
            raise ParseError(source, lineno, f"more than n = {n} variable lines")
    if len(variables) != n:
        raise ParseError(source, last, f"expected {n} variable lines, got {len(variables)}")
    try:
        return validate_family(n, probs, variables)
    except BrunnianError as exc:
        raise ParseError(source, p_line, str(exc)) from None


def format_fam(phi: RandomFamily) -> str:
    out = [f"n {phi.n}", f"omega {phi.size}", "p " + " ".join(str(p) for p in phi.probs)]
    for row in phi.values.tolist():
        out.append("x " + " ".join(map(str, row)))
    return "\n".join(out) + "\n"

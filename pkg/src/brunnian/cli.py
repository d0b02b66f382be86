"""Command-line front end: ``brunnian <verb> ...``.

Files named ``-`` mean standard input (for inputs) or standard output.
Exit codes: 0 success, 1 parse or validation error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence, TextIO

from .constructions import realize, wedge
from .errors import BrunnianError, ParseError
from .family import connectivity_structure, tensor
from .formats import format_cnct, format_fam, format_subsets, parse_cnct, parse_fam
from .oracle import MAX_CATALOG_N, enumerate_structures, verify_roundtrip
from .sampling import sample_catalog
from .search import MODELS, SearchBudget, search_minimal
from .structure import connected_components, irreducibles, structure_sum
from .subsets import card, indices


def _read(path: str, stdin: TextIO) -> tuple[str, str]:
    if path == "-":
        return stdin.read(), "<stdin>"
    try:
        return Path(path).read_text(), path
    except OSError as exc:
        raise ParseError(path, 0, f"cannot read file: {exc.strerror}") from None


def _load_cnct(path, stdin):
    text, name = _read(path, stdin)
    try:
        return parse_cnct(text, name)
    except ParseError:
        raise
    except BrunnianError as exc:
        raise ParseError(name, 0, str(exc)) from None


def _load_fam(path, stdin):
    text, name = _read(path, stdin)
    return parse_fam(text, name)


def _catalog_line(k) -> str:
    sets = " ".join("{" + ",".join(map(str, indices(s))) + "}" for s in k.members if card(s) >= 2)
    return f"{len(k.members)} {sets}".rstrip()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="brunnian",
        description="Connectivity structures of finite families of random variables.",
    )
    parser.add_argument("-o", "--output", default="-", help="output file ('-' for stdout)")
    sub = parser.add_subparsers(dest="verb", required=True)

    for verb, help_ in [
        ("generate", "close a .cnct generator list into a structure"),
        ("irreducibles", "list the irreducible members of a structure"),
        ("components", "list the connected components of a structure"),
        ("realize", "build a .fam family whose structure is the input"),
    ]:
        p = sub.add_parser(verb, help=help_)
        p.add_argument("structure")
    p = sub.add_parser("analyze", help="compute the structure of a .fam family")
    p.add_argument("family")
    p = sub.add_parser("sum", help="join of two structures")
    p.add_argument("left")
    p.add_argument("right")
    for verb, help_ in [("tensor", "tensor product of two families"),
                        ("wedge", "realize the intersection of two families' structures")]:
        p = sub.add_parser(verb, help=help_)
        p.add_argument("left")
        p.add_argument("right")
    p = sub.add_parser("enumerate", help="list every integral structure on n points")
    p.add_argument("n", type=int)
    p = sub.add_parser("verify", help="realize-and-analyze round trip over a catalog")
    p.add_argument("n", type=int)
    p.add_argument("--sample", type=int, default=None, help="check only this many seeded picks")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--footer", action="store_true", help="append a summary line")
    p.add_argument("--no-oracle", action="store_true", help="skip the brute-force path")
    p = sub.add_parser("minimize", help="search for a realization on a small universe")
    p.add_argument("structure")
    p.add_argument("--max-universe", type=int, default=SearchBudget.max_universe)
    p.add_argument("--max-alphabet", type=int, default=SearchBudget.max_alphabet)
    p.add_argument("--max-candidates", type=int, default=SearchBudget.max_candidates)
    p.add_argument("--model", choices=MODELS, default=SearchBudget.probability_model)
    return parser


def _dispatch(args, stdin: TextIO) -> tuple[str, int]:
    verb = args.verb
    if verb == "generate":
        return format_cnct(_load_cnct(args.structure, stdin)), 0
    if verb == "irreducibles":
        return format_subsets(irreducibles(_load_cnct(args.structure, stdin))), 0
    if verb == "components":
        return format_subsets(connected_components(_load_cnct(args.structure, stdin))), 0
    if verb == "sum":
        left, right = _load_cnct(args.left, stdin), _load_cnct(args.right, stdin)
        return format_cnct(structure_sum(left, right)), 0
    if verb == "realize":
        return format_fam(realize(_load_cnct(args.structure, stdin))), 0
    if verb == "analyze":
        return format_cnct(connectivity_structure(_load_fam(args.family, stdin))), 0
    if verb in ("tensor", "wedge"):
        left, right = _load_fam(args.left, stdin), _load_fam(args.right, stdin)
        op = tensor if verb == "tensor" else wedge
        return format_fam(op(left, right)), 0
    if verb == "enumerate":
        _check_catalog_n(args.n)
        return "".join(_catalog_line(k) + "\n" for k in enumerate_structures(args.n)), 0
    if verb == "verify":
        _check_catalog_n(args.n)
        catalog = enumerate_structures(args.n)
        picked = catalog if args.sample is None else sample_catalog(catalog, args.sample, args.seed)
        report = verify_roundtrip(picked, n=args.n, use_oracle=not args.no_oracle)
        text = "".join(line + "\n" for line in report.lines(footer=args.footer))
        return text, 0 if report.all_passed else 2
    if verb == "minimize":
        budget = SearchBudget(args.max_universe, args.max_alphabet, args.max_candidates, args.model)
        result = search_minimal(_load_cnct(args.structure, stdin), budget)
        how = "search" if result.found else "canonical fallback"
        head = (f"# omega {result.family.size} via {how}; canonical {result.canonical_size}; "
                f"{result.examined} candidates examined\n")
        return head + format_fam(result.family), 0
    raise AssertionError(verb)


def _check_catalog_n(n: int) -> None:
    if not 1 <= n <= MAX_CATALOG_N:
        raise ParseError("<args>", 0, f"n must satisfy 1 <= n <= {MAX_CATALOG_N}")


def main(argv: Sequence[str] | None = None, stdin: TextIO | None = None,
         stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        text, code = _dispatch(args, stdin)
    except ParseError as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    except BrunnianError as exc:
        print(f"error: <args>:0: {exc}", file=stderr)
        return 1
    if args.output == "-":
        stdout.write(text)
    else:
        Path(args.output).write_text(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

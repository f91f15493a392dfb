"""Command-line front end: ``eulersym {chars,euler,powersum,verify,padic}``."""

from __future__ import annotations

import argparse
import contextlib
import itertools
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterator, Sequence

from .dirichlet import DirichletCharacter, enumerate_characters, get_character
from .euler import alt_power_sum, euler_numbers, euler_polynomial
from .exactnum import DomainError, render
from .fermionic import convergence_trace
from .report import VERIFY_FIELDS, RecordWriter, encode_value, skip_record, verify_record
from .symmetry import THEOREMS, verify_theorem

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

ODD_WEIGHTS = list(itertools.product((1, 3, 5), repeat=3))
EVEN_CONTAINING = [w for w in itertools.product((1, 2, 3), repeat=3) if 2 in w]
DEFAULT_WEIGHTS = ODD_WEIGHTS + EVEN_CONTAINING


class UsageError(Exception):
    pass


# --- argument parsing helpers ------------------------------------------------


def parse_int_list(text: str) -> list[int]:
    """'1,3,5' or '1-8' or a mix such as '1,4-6'."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            if "-" in part[1:]:
                lo, hi = part.split("-", 1)
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(part))
        except ValueError:
            raise UsageError(f"cannot parse integer list {text!r}") from None
    if not out:
        raise UsageError(f"empty list {text!r}")
    return out


def parse_weights(text: str) -> list[tuple[int, int, int]]:
    triples = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            w = tuple(int(x) for x in chunk.split(","))
        except ValueError:
            raise UsageError(f"cannot parse weight triple {chunk!r}") from None
        if len(w) != 3 or min(w) < 1:
            raise UsageError(f"weight triple must be three positive integers: {chunk!r}")
        triples.append(w)
    if not triples:
        raise UsageError("no weight triples given")
    return triples  # type: ignore[return-value]


def select_characters(d: int, args) -> list[DirichletCharacter]:
    chars = list(enumerate_characters(d))
    if getattr(args, "chars", None):
        wanted = parse_int_list(args.chars)
        for i in wanted:
            if not 0 <= i < len(chars):
                raise DomainError(f"no character with index {i} mod {d}")
        chars = [chars[i] for i in wanted]
    if args.primitive_only:
        chars = [c for c in chars if c.is_primitive]
    return chars


# --- verify sweep ------------------------------------------------------------


@dataclass(frozen=True)
class SweepConfig:
    theorems: tuple[int, ...]
    moduli: tuple[int, ...]
    max_n: int
    weights: tuple[tuple[int, int, int], ...]
    char_indices: tuple[int, ...] | None = None
    primitive_only: bool = False
    jobs: int = 1
    inject_fault: bool = False
    fmt: str = "json"

    def validate(self) -> None:
        for t in self.theorems:
            if t not in THEOREMS:
                raise DomainError(f"unknown theorem {t}")
        for d in self.moduli:
            if d < 1 or d % 2 == 0:
                raise DomainError(f"modulus must be an odd positive integer, got {d}")
        if self.max_n < 0:
            raise DomainError("max-n must be nonnegative")
        if self.jobs < 1:
            raise DomainError("jobs must be at least 1")

    def tasks(self) -> list[tuple]:
        """One task per (theorem, d, character); records come back in this order."""
        out = []
        for t in self.theorems:
            for d in self.moduli:
                chars = enumerate_characters(d)
                idxs = self.char_indices if self.char_indices is not None else range(len(chars))
                for i in idxs:
                    if not 0 <= i < len(chars):
                        raise DomainError(f"no character with index {i} mod {d}")
                    if self.primitive_only and not chars[i].is_primitive:
                        continue
                    out.append((t, d, i, self.max_n, self.weights, self.inject_fault))
        return out


def run_task(task: tuple) -> list[dict[str, Any]]:
    theorem_id, d, index, max_n, weights, inject = task
    chi = get_character(d, index)
    thm = THEOREMS[theorem_id]
    records = []
    for n in range(max_n + 1):
        for w in weights:
            if not thm.accepts(w):
                records.append(skip_record(theorem_id, chi, n, w, "parity"))
                continue
            report = verify_theorem(theorem_id, chi, n, w, inject_fault=inject)
            records.append(verify_record(report, chi))
    return records


def sweep(config: SweepConfig) -> Iterator[dict[str, Any]]:
    config.validate()
    tasks = config.tasks()
    if config.jobs == 1 or len(tasks) <= 1:
        for task in tasks:
            yield from run_task(task)
        return
    with ProcessPoolExecutor(max_workers=config.jobs) as pool:
        for records in pool.map(run_task, tasks):
            yield from records


# --- subcommands -------------------------------------------------------------


def cmd_chars(args, writer: RecordWriter) -> int:
    for chi in select_characters(args.d, args):
        writer.write({
            "d": chi.modulus,
            "index": chi.index,
            "order": chi.order,
            "conductor": chi.conductor,
            "primitive": chi.is_primitive,
            "values": [render(v) for v in chi.values],
        })
    return EXIT_OK


def cmd_euler(args, writer: RecordWriter) -> int:
    x = Fraction(args.x) if args.x is not None else None
    for chi in select_characters(args.d, args):
        table = euler_numbers(chi, args.max_n)
        for n in range(args.max_n + 1):
            rec: dict[str, Any] = {"d": chi.modulus, "char_index": chi.index, "n": n}
            if x is None:
                rec["value"] = render(table[n])
            else:
                rec["x"] = render(x)
                rec["value"] = render(euler_polynomial(chi, n, x))
            writer.write(rec)
    return EXIT_OK


def cmd_powersum(args, writer: RecordWriter) -> int:
    if args.k < 0 or args.n < 0:
        raise DomainError("k and n must be nonnegative")
    ks = range(args.k + 1) if args.grid else [args.k]
    ns = range(args.n + 1) if args.grid else [args.n]
    for chi in select_characters(args.d, args):
        for k in ks:
            for n in ns:
                writer.write({
                    "d": chi.modulus, "char_index": chi.index, "k": k, "n": n,
                    "value": render(alt_power_sum(chi, k, n)),
                })
    return EXIT_OK


def cmd_padic(args, writer: RecordWriter) -> int:
    chars = select_characters(args.d, args)
    if not args.chars:
        chars = [c for c in chars if c.is_real]
    for chi in chars:
        trace = convergence_trace(chi, args.n, args.p, args.levels)
        for level, (partial, v) in enumerate(trace.levels, start=1):
            writer.write({
                "d": chi.modulus, "char_index": chi.index, "n": args.n, "p": args.p,
                "level": level, "partial_sum": render(partial),
                "target": render(trace.target), "valuation": encode_value(v),
            })
    return EXIT_OK


def cmd_verify(args, writer: RecordWriter) -> int:
    config = SweepConfig(
        theorems=tuple(parse_int_list(args.theorems)),
        moduli=tuple(parse_int_list(args.moduli)),
        max_n=args.max_n,
        weights=tuple(parse_weights(args.weights)) if args.weights else tuple(DEFAULT_WEIGHTS),
        char_indices=tuple(parse_int_list(args.chars)) if args.chars else None,
        primitive_only=args.primitive_only,
        jobs=args.jobs,
        inject_fault=args.inject_fault,
        fmt=args.format,
    )
    status = EXIT_OK
    for rec in sweep(config):
        writer.write(rec)
        if rec["verdict"] == "fail":
            status = EXIT_FAIL
    return status


# --- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--format", choices=("json", "csv", "text"), default="json")
    shared.add_argument("--jobs", type=int, default=1, metavar="K", help="worker processes")
    shared.add_argument("--primitive-only", action="store_true")
    shared.add_argument("--chars", metavar="LIST", help="character indices, e.g. 0,2")
    shared.add_argument("--out", metavar="PATH", help="write records here instead of stdout")

    parser = argparse.ArgumentParser(
        prog="eulersym",
        description="Generalized Euler numbers, alternating power sums and their symmetry identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chars", parents=[shared], help="list Dirichlet characters mod d")
    p.add_argument("d", type=int)
    p.set_defaults(func=cmd_chars)

    p = sub.add_parser("euler", parents=[shared], help="generalized Euler numbers or polynomial values")
    p.add_argument("d", type=int)
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--x", help="evaluate E_n(x) at this rational instead")
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("powersum", parents=[shared], help="alternating power sums T_k(n)")
    p.add_argument("d", type=int)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--grid", action="store_true", help="all k' <= k and n' <= n")
    p.set_defaults(func=cmd_powersum)

    p = sub.add_parser("padic", parents=[shared], help="p-adic convergence of alternating sums")
    p.add_argument("d", type=int)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--levels", type=int, default=5)
    p.set_defaults(func=cmd_padic)

    p = sub.add_parser("verify", parents=[shared], help="run the symmetry-identity sweep")
    p.add_argument("--theorems", default="1-8", metavar="LIST")
    p.add_argument("--moduli", default="1,3,5,7,9", metavar="LIST")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--weights", metavar='"w1,w2,w3;..."')
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fields = VERIFY_FIELDS if args.command == "verify" else None
    try:
        with contextlib.ExitStack() as stack:
            stream = sys.stdout
            if args.out:
                stream = stack.enter_context(open(args.out, "w", encoding="utf-8", newline=""))
            return args.func(args, RecordWriter(stream, args.format, fields))
    except (DomainError, UsageError) as exc:
        print(f"eulersym {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:  # e.g. a malformed --x
        print(f"eulersym {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

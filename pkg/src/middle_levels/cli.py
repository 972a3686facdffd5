"""Command-line front end: ``python -m middle_levels <command> ...``.

Exit codes: 0 success, 1 bad arguments, 2 a verification failed.
"""
from __future__ import annotations

import argparse
import sys
import time
from typing import Optional, Sequence, TextIO

from .bitseq import format_bits, middle_level_count, parse_bits
from .errors import DomainError, InvalidArgument, ResourceLimitError
from .hamcycle import CycleIterator, StepStats, default_start

EXIT_OK, EXIT_USAGE, EXIT_FAILED = 0, 1, 2
# below this many steps the pure-Python stepper beats the kernel's start-up
AUTO_COMPILED_MIN = 50_000


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise _UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="middle-levels", description="Middle levels Gray codes.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("generate", help="stream the Gray code")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--start", help="start vertex as a 0/1 string (default 1^n 0^(n+1))")
    g.add_argument("--count", type=int, help="number of vertices (default: the full cycle)")
    g.add_argument("--format", choices=("bits", "flips"), default="bits")
    g.add_argument("--engine", choices=("auto", "python", "compiled"), default="auto")

    v = sub.add_parser("verify", help="check one full cycle")
    v.add_argument("--n", type=int, required=True)

    t = sub.add_parser("twofactor", help="cycle structure of the stepper")
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--flips", action="store_true", help="use the flip selection")
    t.add_argument("--bound", type=int, default=None, help="largest n accepted")

    s = sub.add_parser("spanning", help="auxiliary graphs and the spanning-tree check")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--bound", type=int, default=None, help="largest n accepted")
    s.add_argument("--dot", metavar="FILE", help="also write the graphs in DOT format")

    b = sub.add_parser("bench", help="throughput and operation counts")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--count", type=int, default=100_000)
    b.add_argument("--engine", choices=("python", "compiled"), default="compiled")
    return p


def _check_n(n: int) -> None:
    if n < 1:
        raise InvalidArgument(f"--n must be >= 1, got {n}")


def _use_compiled(engine: str, count: int) -> bool:
    if engine == "auto":
        return count >= AUTO_COMPILED_MIN
    return engine == "compiled"


def cmd_generate(args, out: TextIO) -> int:
    n = args.n
    _check_n(n)
    start = parse_bits(args.start) if args.start else default_start(n)
    count = middle_level_count(n) if args.count is None else args.count
    if count < 1:
        raise InvalidArgument(f"--count must be >= 1, got {count}")
    if _use_compiled(args.engine, count):
        from .engine import FastCycle

        fc = FastCycle(n, start)
        x = list(start)
        for chunk in fc.chunks(count):
            if args.format == "flips":
                out.write("\n".join(str(p + 1) for p in chunk.tolist()))
            else:
                lines = []
                for p in chunk.tolist():
                    x[p] ^= 1
                    lines.append(format_bits(x))
                out.write("\n".join(lines))
            out.write("\n")
        return EXIT_OK
    it = CycleIterator(n, start)
    prev = it.current
    for _ in range(count):
        x = next(it)
        if args.format == "flips":
            (p,) = [i for i in range(len(x)) if x[i] != prev[i]]
            out.write(f"{p + 1}\n")
        else:
            out.write(format_bits(x) + "\n")
        prev = x
    return EXIT_OK


def cmd_verify(args, out: TextIO) -> int:
    from . import oracle

    n = args.n
    _check_n(n)
    N = middle_level_count(n)
    if n <= oracle.DESK_BOUND:
        it = CycleIterator(n)
        rep = oracle.verify_cycle(n, (next(it) for _ in range(N)))
    else:
        from .engine import FastCycle

        fc = FastCycle(n)
        rep = oracle.verify_flip_stream(n, fc.current, fc.chunks(N))
    if rep.ok:
        out.write(f"OK: {N} vertices, Hamiltonian\n")
        return EXIT_OK
    flags = [
        name
        for name in ("all_valid_vertices", "gray_steps", "all_distinct", "covers_all", "closes_cyclically")
        if not getattr(rep, name)
    ]
    out.write(f"FAIL: {', '.join(flags)} (first violation at {rep.first_violation})\n")
    for line in rep.problems:
        out.write(f"  {line}\n")
    return EXIT_FAILED


def cmd_twofactor(args, out: TextIO) -> int:
    from . import oracle

    _check_n(args.n)
    bound = oracle.DESK_BOUND if args.bound is None else args.bound
    cycles = oracle.two_factor(args.n, args.flips, bound=bound)
    word = "cycle" if len(cycles) == 1 else "cycles"
    out.write(f"{len(cycles)} {word}\n")
    out.write("lengths: " + " ".join(str(len(c)) for c in cycles) + "\n")
    return EXIT_OK


def cmd_spanning(args, out: TextIO) -> int:
    from . import oracle

    _check_n(args.n)
    bound = oracle.DESK_BOUND if args.bound is None else args.bound
    G = oracle.build_G(args.n, bound=bound)
    H = oracle.build_H(args.n, bound=bound)
    for name, graph in (("G", G), ("H", H)):
        c = oracle.edge_counts(graph)
        out.write(
            f"{name}_{args.n}: {graph.number_of_nodes()} nodes, {graph.number_of_edges()} edges"
            f" ({c[oracle.EdgeLabel.TAU1]} tau1, {c[oracle.EdgeLabel.TAU2]} tau2)\n"
        )
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(oracle.to_dot(G, H))
    ok = oracle.is_spanning_tree(H, G)
    out.write(f"H_{args.n} is {'a' if ok else 'NOT a'} spanning tree of G_{args.n}\n")
    return EXIT_OK if ok else EXIT_FAILED


def cmd_bench(args, out: TextIO) -> int:
    n, count = args.n, args.count
    _check_n(n)
    if count < 1:
        raise InvalidArgument(f"--count must be >= 1, got {count}")
    if args.engine == "compiled":
        from .engine import FastCycle

        fc = FastCycle(n)
        fc.advance(1)  # compile outside the timed region
        ops0, checks0 = fc.ops, fc.flip_checks
        t0 = time.perf_counter()
        for _ in fc.chunks(count):
            pass
        elapsed = time.perf_counter() - t0
        steps, ops, checks, gap = count, fc.ops - ops0, fc.flip_checks - checks0, fc.min_gap
    else:
        stats = StepStats()
        it = CycleIterator(n, stats=stats)
        t0 = time.perf_counter()
        for _ in range(count):
            next(it)
        elapsed = time.perf_counter() - t0
        steps, ops, checks, gap = stats.steps, stats.ops, stats.flip_checks, stats.min_gap
    rate = count / elapsed if elapsed > 0 else float("inf")
    out.write(f"n={n} engine={args.engine} steps={count} time={elapsed:.3f}s\n")
    out.write(f"vertices/second: {rate:,.0f}\n")
    out.write(f"ops/step: {ops / max(steps, 1):.2f} ({ops / max(steps, 1) / n:.2f} per n)\n")
    out.write(f"flip checks: {checks}, fewest steps between checks: {gap}\n")
    return EXIT_OK


COMMANDS = {
    "generate": cmd_generate,
    "verify": cmd_verify,
    "twofactor": cmd_twofactor,
    "spanning": cmd_spanning,
    "bench": cmd_bench,
}


def run(argv: Optional[Sequence[str]] = None, out: TextIO = None, err: TextIO = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except _UsageError as e:
        err.write(f"{e}\n")
        return EXIT_USAGE
    except (InvalidArgument, DomainError, ResourceLimitError) as e:
        err.write(f"error: {e}\n")
        return EXIT_USAGE
    except BrokenPipeError:
        return EXIT_OK


def main() -> None:
    sys.exit(run())

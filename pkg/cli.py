#!/usr/bin/env python3
# cli.py

"""
Online pBWT command-line tool

Reads a p-string, appends the sentinel and builds its pBWT by prepending
the characters right-to-left. The whole input is read into memory first:
"online" describes the order in which the builder consumes the text, not
streaming I/O.

Usage:
    python cli.py --sigma a --pi xyz input.txt                  # print the pBWT
    python cli.py --sigma a --pi xyz --mode verify input.txt    # check every step against the oracle
    python cli.py --sigma a --pi xyz --mode dump input.txt      # rotation table as JSON
    python cli.py --mode bench --bench-max-exp 14               # timing sweep as TSV
"""

import argparse
import logging
import sys
import time
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd
from scipy import stats

from alphabet_encoding import Alphabet
from config import (
    BENCH_MAX_EXP, BENCH_MIN_EXP, BENCH_PI_SIZE, BENCH_PI_SWEEP, BENCH_SEED,
    BENCH_SIGMA_SIZE, MAX_VERIFY_LEN, MODE_CONFIG, OUTPUT_FORMATS, SENTINEL,
)
from errors import InputError, PbwtError
from online_builder import OnlineBuilder, Snapshot, new
from oracle import OracleTables, build_tables
from utils import format_json, format_metric, format_tokens, frame_to_tsv, read_text, setup_logging, write_output

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT = 2

BENCH_COLUMNS = ["n", "pi_size", "total_seconds", "ns_per_char"]


@dataclass
class JobConfig:
    """Everything one CLI run needs"""

    sigma: str = ""
    pi: str = ""
    sentinel: str = SENTINEL
    mode: str = "build"
    output_format: Optional[str] = None
    input_path: Optional[str] = None
    output_path: Optional[str] = None
    max_verify_len: int = MAX_VERIFY_LEN
    seed: int = BENCH_SEED
    pi_size: int = BENCH_PI_SIZE
    sigma_size: int = BENCH_SIGMA_SIZE
    bench_min_exp: int = BENCH_MIN_EXP
    bench_max_exp: int = BENCH_MAX_EXP
    bench_pi_sweep: List[int] = field(default_factory=lambda: parse_sweep(BENCH_PI_SWEEP))

    def __post_init__(self):
        if self.mode not in MODE_CONFIG:
            raise InputError(f"unknown mode {self.mode!r}")
        if self.output_format is None:
            self.output_format = MODE_CONFIG[self.mode]["format"]
        if self.output_format not in OUTPUT_FORMATS:
            raise InputError(f"unknown output format {self.output_format!r}")

    def alphabet(self) -> Alphabet:
        return Alphabet.from_strings(self.sigma, self.pi, sentinel=self.sentinel)


def parse_sweep(value: str) -> List[int]:
    """Comma-separated positive |Π| values; argparse turns the error into exit status 2"""
    try:
        sizes = [int(v) for v in value.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {value!r}") from None
    if any(s < 1 for s in sizes):
        raise argparse.ArgumentTypeError(f"|Π| values must be positive, got {value!r}")
    return sizes


def load_input(config: JobConfig) -> Tuple[Alphabet, Tuple[int, ...]]:
    """Alphabet and symbol codes of the input text, without the sentinel"""
    alphabet = config.alphabet()
    text = read_text(config.input_path)
    position = text.find(alphabet.sentinel)
    if position >= 0:
        raise InputError(f"sentinel {alphabet.sentinel!r} found in input at position {position + 1}")
    return alphabet, alphabet.encode_text(text)


def find_mismatch(snapshot: Snapshot, tables: OracleTables) -> Optional[Tuple[str, int]]:
    """Name and 1-based index of the first array entry where builder and oracle disagree"""
    for name in ("L", "F", "LCPinf"):
        ours, truth = getattr(snapshot, name), getattr(tables, name)
        for index, (a, b) in enumerate(zip(ours, truth), start=1):
            if a != b:
                return name, index
        if len(ours) != len(truth):
            return name, min(len(ours), len(truth)) + 1
    return None


# ---- modes ----

def run_build(config: JobConfig) -> int:
    """Build the pBWT right-to-left and print it"""
    try:
        alphabet, codes = load_input(config)
        logger.info(f"🚀 Building pBWT of {len(codes) + 1} symbols")
        builder = OnlineBuilder.from_text(alphabet, codes)
    except PbwtError as e:
        logger.error(f"❌ {e}")
        return EXIT_INPUT

    tokens = alphabet.tokens(builder.pbwt())
    if config.output_format == "json":
        write_output(format_json({"n": builder.n, "pbwt": tokens}), config.output_path)
    else:
        write_output(format_tokens(tokens), config.output_path)
    logger.info("✅ Build complete")
    return EXIT_OK


def run_verify(config: JobConfig) -> int:
    """Compare the builder with the oracle after every prepend"""
    try:
        alphabet, codes = load_input(config)
        if len(codes) + 1 > config.max_verify_len:
            raise InputError(f"text of length {len(codes) + 1} exceeds the verify cap {config.max_verify_len}")
    except PbwtError as e:
        logger.error(f"❌ {e}")
        return EXIT_INPUT

    logger.info(f"🔍 Verifying {len(codes) + 1} steps against the oracle")
    builder = new(alphabet)
    suffix: Tuple[int, ...] = (0,)
    for step in range(len(codes) + 1):
        if step:
            c = codes[-step]
            builder.prepend(c)
            suffix = (c,) + suffix
        mismatch = find_mismatch(builder.snapshot(), build_tables(alphabet, suffix))
        if mismatch is not None:
            name, index = mismatch
            logger.error(f"❌ Step {step}: {name} differs at index {index}")
            if config.output_format == "json":
                report = {"verified": False, "step": step, "array": name, "index": index}
                write_output(format_json(report), config.output_path)
            else:
                write_output(f"MISMATCH step {step} {name} {index}\n", config.output_path)
            return EXIT_MISMATCH

    if config.output_format == "json":
        write_output(format_json({"verified": True, "steps": len(codes) + 1}), config.output_path)
    else:
        write_output(f"OK {len(codes) + 1}\n", config.output_path)
    logger.info("✅ All steps match the oracle")
    return EXIT_OK


def run_dump(config: JobConfig) -> int:
    """Print the sorted rotation table of the text with the sentinel appended"""
    try:
        alphabet, codes = load_input(config)
        if len(codes) + 1 > config.max_verify_len:
            raise InputError(f"text of length {len(codes) + 1} exceeds the dump cap {config.max_verify_len}")
    except PbwtError as e:
        logger.error(f"❌ {e}")
        return EXIT_INPUT

    tables = build_tables(alphabet, codes + (0,))
    frame = tables.to_frame(alphabet)
    if config.output_format == "json":
        document = {
            "n": tables.n,
            "sigma": list(alphabet.statics),
            "pi": list(alphabet.params),
            "records": frame.to_dict(orient="records"),
        }
        write_output(format_json(document), config.output_path)
    else:
        write_output(frame_to_tsv(frame), config.output_path)
    logger.info(f"✅ Dumped {tables.n} rows")
    return EXIT_OK


def synthetic_alphabet(sigma_size: int, pi_size: int) -> Alphabet:
    """Statics a, b, ... and parameters from the Latin Extended-A block"""
    statics = "".join(chr(ord("a") + i) for i in range(sigma_size))
    params = "".join(chr(0x100 + i) for i in range(pi_size))
    return Alphabet.from_strings(statics, params)


def time_build(alphabet: Alphabet, n: int, rng: np.random.Generator) -> float:
    """Seconds spent prepending n random non-sentinel symbols"""
    codes = rng.integers(1, alphabet.size, size=n).tolist() if alphabet.size > 1 else []
    builder = new(alphabet)
    start = time.perf_counter()
    for c in reversed(codes):
        builder.prepend(c)
    return time.perf_counter() - start


def log_trend(frame: pd.DataFrame, column: str, label: str) -> Optional[float]:
    """Log-log slope of ns_per_char against column; None with fewer than two distinct values"""
    if frame[column].nunique() < 2:
        return None
    fit = stats.linregress(np.log2(frame[column]), np.log2(frame["ns_per_char"]))
    logger.info(f"📈 {label}: log-log slope {fit.slope:.3f} (r={fit.rvalue:.3f})")
    return float(fit.slope)


def run_bench(config: JobConfig) -> int:
    """Time per-character cost over doubling n and over growing |Π|"""
    if config.bench_min_exp < 0 or config.bench_max_exp < config.bench_min_exp:
        logger.error(f"❌ Bad exponent range {config.bench_min_exp}..{config.bench_max_exp}")
        return EXIT_INPUT
    rng = np.random.default_rng(config.seed)
    rows = []

    def record(n: int, pi_size: int):
        seconds = time_build(synthetic_alphabet(config.sigma_size, pi_size), n, rng)
        rows.append({"n": n, "pi_size": pi_size, "total_seconds": seconds, "ns_per_char": seconds * 1e9 / n})
        logger.info(f"⏱️ n={format_metric(n)} |Π|={pi_size}: {format_metric(seconds * 1e9 / n)} ns/char")

    for exp in range(config.bench_min_exp, config.bench_max_exp + 1):
        record(2 ** exp, config.pi_size)
    n_sweep = pd.DataFrame(rows, columns=BENCH_COLUMNS)

    for pi_size in config.bench_pi_sweep:
        record(2 ** config.bench_min_exp, pi_size)
    frame = pd.DataFrame(rows, columns=BENCH_COLUMNS)

    log_trend(n_sweep, "n", f"n sweep at |Π|={config.pi_size}")
    log_trend(frame.iloc[len(n_sweep):], "pi_size", f"|Π| sweep at n={2 ** config.bench_min_exp}")
    write_output(frame_to_tsv(frame), config.output_path)
    return EXIT_OK


RUNNERS = {
    "build": run_build,
    "verify": run_verify,
    "dump": run_dump,
    "bench": run_bench,
}


def run(config: JobConfig) -> int:
    return RUNNERS[config.mode](config)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Online pBWT construction for parameterized strings",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  python cli.py --sigma a --pi xyz text.txt                 # pBWT tokens
  python cli.py --sigma a --pi xyz --mode verify text.txt   # oracle check
  python cli.py --sigma a --pi xyz --mode dump text.txt     # rotation table
  python cli.py --mode bench --bench-max-exp 14             # timing TSV

Exit codes: 0 success, 1 verification mismatch, 2 input or alphabet error
        """
    )
    parser.add_argument("input", nargs="?", default=None, help="Input text file (default: stdin)")
    parser.add_argument("--sigma", default="", help="Static symbols, in order")
    parser.add_argument("--pi", default="", help="Parameter symbols, in order")
    parser.add_argument("--sentinel", default=SENTINEL, help="Terminator symbol (default: %(default)s)")
    parser.add_argument("--mode", choices=list(MODE_CONFIG), default="build", help="What to do")
    parser.add_argument("--format", dest="output_format", choices=OUTPUT_FORMATS, default=None,
                        help="Output format (default depends on the mode)")
    parser.add_argument("--max-verify-len", type=int, default=MAX_VERIFY_LEN,
                        help="Longest text accepted by verify and dump")
    parser.add_argument("--seed", type=int, default=BENCH_SEED, help="Random seed for bench")
    parser.add_argument("--pi-size", type=int, default=BENCH_PI_SIZE, help="|Π| for the bench n sweep")
    parser.add_argument("--sigma-size", type=int, default=BENCH_SIGMA_SIZE,
                        help="Static symbols besides the sentinel in bench texts")
    parser.add_argument("--bench-min-exp", type=int, default=BENCH_MIN_EXP, help="Smallest n is 2**this")
    parser.add_argument("--bench-max-exp", type=int, default=BENCH_MAX_EXP, help="Largest n is 2**this")
    parser.add_argument("--bench-pi-sweep", type=parse_sweep, default=BENCH_PI_SWEEP,
                        help="Comma-separated |Π| values timed at the smallest n; empty to skip")
    parser.add_argument("-o", "--output", dest="output_path", default=None, help="Output file (default: stdout)")
    parser.add_argument("--quiet", action="store_true", help="Only log warnings and errors")
    return parser


def parse_args(argv: Optional[Sequence[str]] = None) -> Tuple[JobConfig, bool]:
    args = build_parser().parse_args(argv)
    config = JobConfig(
        sigma=args.sigma,
        pi=args.pi,
        sentinel=args.sentinel,
        mode=args.mode,
        output_format=args.output_format,
        input_path=args.input,
        output_path=args.output_path,
        max_verify_len=args.max_verify_len,
        seed=args.seed,
        pi_size=args.pi_size,
        sigma_size=args.sigma_size,
        bench_min_exp=args.bench_min_exp,
        bench_max_exp=args.bench_max_exp,
        bench_pi_sweep=args.bench_pi_sweep,
    )
    return config, args.quiet


def main(argv: Optional[Sequence[str]] = None):
    """Main entry point"""
    config, quiet = parse_args(argv)
    setup_logging(quiet=quiet)
    sys.exit(run(config))


if __name__ == "__main__":
    main()

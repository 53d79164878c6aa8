"""Verifies a theorem exhaustively over a corpus of small graphs."""

import argparse
import multiprocessing
import sys
import time
from typing import Iterable, Optional

import tqdm

from . import reports, theorems, util

EXIT_VERIFIED = 0
EXIT_PRECONDITION = 2
EXIT_VIOLATION = 3

CHUNKSIZE = 16


class Error(Exception):
    """Module-specific exception."""

    pass


def _collect(
    results: Iterable[reports.CheckItem], progress: bool
) -> reports.CheckItem:
    """Sums results in whatever order they arrive."""
    total = reports.CheckItem()
    for item in tqdm.tqdm(results, disable=not progress, unit="graph"):
        total += item
    return total


def run_verify(
    theorem_id: str,
    max_n: Optional[int] = None,
    workers: int = 1,
    seed: int = 0,
    progress: bool = False,
) -> reports.VerificationReport:
    """Runs one theorem scan.

    Args:
        theorem_id (str).
        max_n (int, optional): defaults to the theorem's own default.
        workers (int): processes to fan the corpus out to.
        seed (int): for sampled corpora.
        progress (bool): whether to show a progress bar.

    Raises:
        NotImplementedError: for an unknown theorem.
        theorems.Error: if max_n is out of range.

    Returns:
        reports.VerificationReport.
    """
    if workers < 1:
        raise Error(f"Invalid worker count: {workers}")
    theorem = theorems.get_theorem_cls(theorem_id)(seed=seed)
    if max_n is None:
        max_n = theorem.default_max_n
    theorem.validate_max_n(max_n)
    start = time.perf_counter()
    corpus = theorem.corpus(max_n)
    with util.log_elapsed(f"Verifying {theorem_id} up to n={max_n}"):
        if workers == 1:
            total = _collect(map(theorem.check, corpus), progress)
        else:
            with multiprocessing.Pool(processes=workers) as pool:
                total = _collect(
                    pool.imap_unordered(
                        theorem.check, corpus, chunksize=CHUNKSIZE
                    ),
                    progress,
                )
    report = reports.VerificationReport.from_item(
        theorem_id, theorem.class_scanned(max_n), total, start
    )
    util.log_info(
        f"{theorem_id}: {report.status}, {report.graphs_checked} graphs "
        f"checked, {len(report.failures)} failures"
    )
    return report


def add_argparse_args(parser: argparse.ArgumentParser) -> None:
    """Adds run options to an argument parser.

    Args:
        parser (argparse.ArgumentParser).
    """
    parser.add_argument(
        "--max_n",
        "--max-n",
        dest="max_n",
        type=int,
        help="Largest order to scan. Default: the theorem's own.",
    )
    parser.add_argument(
        "--out",
        help="Path to output JSON report. Default: standard output.",
    )
    parser.add_argument(
        "--workers",
        type=int,
        default=1,
        help="Number of worker processes. Default: %(default)s.",
    )
    parser.add_argument(
        "--no_progress",
        action="store_false",
        dest="progress",
        default=True,
        help="Disable the progress bar.",
    )


def main() -> None:
    """Verifier."""
    parser = argparse.ArgumentParser(description=__doc__)
    theorems.add_argparse_args(parser)
    add_argparse_args(parser)
    args = parser.parse_args()
    util.log_arguments(args)
    try:
        report = run_verify(
            args.theorem,
            args.max_n,
            workers=args.workers,
            seed=args.seed,
            progress=args.progress,
        )
    except (NotImplementedError, Error, theorems.Error) as error:
        util.log_info(f"Error: {error}")
        sys.exit(EXIT_PRECONDITION)
    if args.out:
        report.write(args.out)
    else:
        print(report.to_json_line())
    if report.status != reports.VERIFIED:
        sys.exit(EXIT_VIOLATION)
    sys.exit(EXIT_VERIFIED)


if __name__ == "__main__":
    main()

"""Utilities."""

import argparse
import contextlib
import sys
import time
from typing import Iterator


def log_info(msg: str) -> None:
    """Logs msg to sys.stderr.

    Standard output is reserved for JSON documents and graph6 lines, so
    everything diagnostic goes through here.

    Args:
        msg (str): the message to log.
    """
    print(msg, file=sys.stderr)


def log_arguments(args: argparse.Namespace) -> None:
    """Logs non-null arguments via log_info.

    Args:
        args (argparse.Namespace).
    """
    log_info("Arguments:")
    for arg, val in vars(args).items():
        if val is None:
            continue
        log_info(f"\t{arg}: {val!r}")


@contextlib.contextmanager
def log_elapsed(label: str) -> Iterator[None]:
    """Logs the wall-clock time spent inside the block.

    Args:
        label (str): what is being timed.
    """
    start = time.perf_counter()
    try:
        yield
    finally:
        log_info(f"{label}: {time.perf_counter() - start:.2f}s")

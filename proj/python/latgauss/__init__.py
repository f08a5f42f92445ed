"""Lattice Gaussian masses, tail bounds and their verification."""

import json as _json

from ._latgauss import *  # noqa: F401,F403
from ._latgauss import run_suite_jsonl as _run_suite_jsonl


def run_suite(config=None, negative_control=False):
    """Runs the verification suite.

    Returns (records, summary) parsed from the JSON-lines report. `config`
    may be a dict or a JSON string.
    """
    if isinstance(config, dict):
        config = _json.dumps(config)
    lines = _run_suite_jsonl(config, negative_control).splitlines()
    parsed = [_json.loads(line) for line in lines]
    return parsed[:-1], parsed[-1]["summary"]

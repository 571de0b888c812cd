"""Joint RCC8 / rectangle constraint solver.

Networks are passed as text in the same format the qsr command reads.
Verdicts come back as dicts with the same layout as the command's JSON.
"""

import json

from . import _qsr
from ._qsr import ParseError, StageError, compose, gen, normalize

__all__ = [
    "ParseError", "StageError", "check", "solve", "epsilon", "bipath", "biclose",
    "compose", "gen", "normalize",
]


def check(text, assume_h8=False):
    return json.loads(_qsr.check(text, assume_h8))


def solve(text, assume_h8=False):
    return json.loads(_qsr.solve(text, assume_h8))


def epsilon(text, eps="1/100"):
    return json.loads(_qsr.epsilon(text, str(eps)))


def bipath(text):
    """Propagated network text, or None when an entry empties."""
    return _qsr.bipath(text) or None


def biclose(text):
    return _qsr.biclose(text) or None

"""Bit-parallel regular expression matching engine."""

from rxe.syntax import ParseTree, RegexSyntaxError, parse
from rxe.tnfa import Tnfa, thompson, naive_close, naive_match, naive_move

__all__ = [
    "ParseTree",
    "RegexSyntaxError",
    "parse",
    "Tnfa",
    "thompson",
    "naive_close",
    "naive_match",
    "naive_move",
]

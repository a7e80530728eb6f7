"""Lexer for SBN source text.

The token classes:

* ``CONCEPT`` -- WordNet-style synset token ``lemma.P.NN`` with P one of
  ``n v a r`` and exactly two sense digits (``end.v.01``).  Lemmas may use
  ``~`` to join multiword expressions (``ice~cream.n.01``).
* ``BOX_OPERATOR`` -- an all-caps token found in the operator inventory
  (``NEGATION``, ``CONTINUATION``, ...).
* ``ROLE`` -- any other capitalized token (``Agent``, ``EQU``).  Names
  outside the role inventory are accepted but flagged with a warning.
* ``INDEX`` -- a signed relative index ``[+-][1-9][0-9]*``.
* ``CONSTANT`` -- a double-quoted string; ``\\"`` and ``\\\\`` escapes are
  allowed, unescaped quotes are not.
* ``LITERAL`` -- one of ``now``, ``speaker``, ``hearer``.
* ``COMMENT`` -- ``%`` up to end of line (outside quotes).

Any other maximal non-whitespace run raises :class:`LexError`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum

from .inventories import DEFAULT_INVENTORIES, Inventories


class TokenKind(Enum):
    CONCEPT = "Concept"
    BOX_OPERATOR = "BoxOperator"
    ROLE = "Role"
    INDEX = "IndexOperand"
    CONSTANT = "ConstantOperand"
    LITERAL = "LiteralOperand"
    COMMENT = "Comment"


LITERALS = frozenset({"now", "speaker", "hearer"})

CONCEPT_RE = re.compile(r"[A-Za-z0-9][A-Za-z0-9~'+_-]*\.[nvar]\.[0-9]{2}\Z")
INDEX_RE = re.compile(r"[+-][1-9][0-9]*\Z")
NAME_RE = re.compile(r"[A-Z][A-Za-z0-9-]*\Z")


class LexError(ValueError):
    """A non-whitespace run that matches no token class."""

    def __init__(self, line: int, column: int, fragment: str, reason: str = ""):
        self.line = line
        self.column = column
        self.fragment = fragment
        detail = f": {reason}" if reason else ""
        super().__init__(f"{line}:{column}: cannot tokenize {fragment!r}{detail}")


@dataclass(frozen=True)
class SbnToken:
    kind: TokenKind
    surface: str
    line: int = field(compare=False, default=0)
    column: int = field(compare=False, default=0)
    # set on ROLE tokens whose name is outside the configured inventory
    warning: str | None = field(compare=False, default=None)


def _classify(run: str, line: int, col: int, inv: Inventories) -> SbnToken:
    if INDEX_RE.match(run):
        return SbnToken(TokenKind.INDEX, run, line, col)
    if CONCEPT_RE.match(run):
        return SbnToken(TokenKind.CONCEPT, run, line, col)
    if run in LITERALS:
        return SbnToken(TokenKind.LITERAL, run, line, col)
    if NAME_RE.match(run):
        if run in inv.operators:
            return SbnToken(TokenKind.BOX_OPERATOR, run, line, col)
        warning = None
        if run not in inv.roles:
            warning = f"unknown role {run!r} at {line}:{col}"
        return SbnToken(TokenKind.ROLE, run, line, col, warning=warning)
    reason = ""
    if re.match(r".+\.[nvar]\.[0-9]+\Z", run):
        reason = "synset sense must be exactly two digits"
    raise LexError(line, col, run, reason)


def tokenize(text: str, inventories: Inventories = DEFAULT_INVENTORIES) -> list[SbnToken]:
    """Split SBN source text into tokens.

    Joining the non-comment surfaces with single spaces reproduces the input
    up to whitespace, with comments stripped.  Raises :class:`LexError` for
    unrecognizable runs and unterminated quoted constants.
    """
    tokens: list[SbnToken] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        i = 0
        n = len(line)
        while i < n:
            ch = line[i]
            if ch.isspace():
                i += 1
                continue
            col = i + 1
            if ch == "%":
                tokens.append(SbnToken(TokenKind.COMMENT, line[i:], lineno, col))
                break
            if ch == '"':
                j = i + 1
                while j < n:
                    if line[j] == "\\":
                        j += 2
                        continue
                    if line[j] == '"':
                        break
                    j += 1
                if j >= n:
                    raise LexError(lineno, col, line[i:], "unterminated constant")
                tokens.append(SbnToken(TokenKind.CONSTANT, line[i : j + 1], lineno, col))
                i = j + 1
                continue
            j = i
            while j < n and not line[j].isspace() and line[j] not in '%"':
                j += 1
            tokens.append(_classify(line[i:j], lineno, col, inventories))
            i = j
    return tokens


def decode_constant(surface: str) -> str:
    """Strip the quotes of a CONSTANT surface and resolve escapes."""
    body = surface[1:-1]
    out = []
    i = 0
    while i < len(body):
        if body[i] == "\\" and i + 1 < len(body):
            out.append(body[i + 1])
            i += 2
        else:
            out.append(body[i])
            i += 1
    return "".join(out)


def encode_constant(value: str) -> str:
    """Quote a string so that :func:`decode_constant` inverts it."""
    return '"' + value.replace("\\", "\\\\").replace('"', '\\"') + '"'

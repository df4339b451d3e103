"""Turn raw text into a stream of expression units (EUs).

Two regimes are supported:

* ``natural`` -- punctuation and symbol characters (Unicode categories P*
  and S*) are deleted in place, the text is split on whitespace, and each
  word becomes one EU.
* ``java`` / ``cpp`` -- comments are removed, every remaining operator or
  punctuation character becomes its own single-character EU, identifiers
  and numbers are EUs, and string/character literals survive as single
  opaque EUs (quotes included).
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass

from .corpus_io import RawText

FOLDS = ("upper", "lower", "none")
CODE_MODES = ("java", "cpp")

# Whitespace delimiters used for natural text. str.split() with no
# argument splits on these plus the rest of Unicode whitespace.
DELIMITERS = " \f\n\r\t\v"

_CPP_STRING_PREFIX = re.compile(r"(?<![\w$])(u8|u|U|L)?(R)?$")
_CPP_NUMBER_TAIL = re.compile(r"(?<![\w$])\d[\w.']*$")

_WORD = {
    "java": re.compile(r"[\w$]+|\S"),
    # inside cpp code segments a remaining "'" can only be a digit separator
    "cpp": re.compile(r"\w+(?:'\w+)*|\S"),
}


@dataclass(frozen=True)
class TokenStream:
    tokens: tuple
    mode: str = "natural"
    fold: str = "upper"

    def __len__(self):
        return len(self.tokens)

    def __iter__(self):
        return iter(self.tokens)


def _check_fold(fold):
    if fold not in FOLDS:
        raise ValueError(f"unknown fold {fold!r}; expected one of {', '.join(FOLDS)}")


def _fold(token: str, fold: str) -> str:
    if fold == "upper":
        return token.upper()
    if fold == "lower":
        return token.lower()
    return token


def _text(text) -> str:
    return text.content if isinstance(text, RawText) else text


def is_punctuation(ch: str) -> bool:
    return unicodedata.category(ch)[0] in "PS"


def strip_punctuation(text: str) -> str:
    """Delete every P* and S* character; no split points are introduced."""
    table = {ord(c): None for c in set(text) if is_punctuation(c)}
    return text.translate(table)


def tokenize_natural(text, fold: str = "upper") -> TokenStream:
    """Tokenize prose.

    >>> tokenize_natural("Hello, world! hello").tokens
    ('HELLO', 'WORLD', 'HELLO')
    """
    _check_fold(fold)
    cleaned = strip_punctuation(_text(text))
    tokens = tuple(_fold(t, fold) for t in cleaned.split())
    return TokenStream(tokens, "natural", fold)


# --------------------------------------------------------------------------
# source code
# --------------------------------------------------------------------------

def _quoted_end(src, start, quote):
    """Index just past a quoted literal that opens at ``start``.

    Backslash escapes are honoured; an unescaped newline ends an
    unterminated literal (the newline itself is not consumed).
    """
    i = start + 1
    n = len(src)
    while i < n:
        c = src[i]
        if c == "\\":
            i += 2
        elif c == quote:
            return i + 1
        elif c == "\n":
            return i
        else:
            i += 1
    return n


def _raw_string_end(src, start):
    # start points at the opening quote of R"delim( ... )delim"
    paren = src.find("(", start + 1)
    if paren < 0 or paren - start - 1 > 16:
        return _quoted_end(src, start, '"')
    closing = ")" + src[start + 1:paren] + '"'
    end = src.find(closing, paren + 1)
    return len(src) if end < 0 else end + len(closing)


def scan_source(src: str, mode: str):
    """Split source text into ``(kind, text)`` segments.

    ``kind`` is one of ``"code"``, ``"comment"``, ``"string"`` or
    ``"char"``. Concatenating the texts reproduces ``src`` exactly.
    """
    if mode not in CODE_MODES:
        raise ValueError(f"code mode must be one of {', '.join(CODE_MODES)}, got {mode!r}")
    segments = []
    code = []
    n = len(src)
    i = 0

    def flush():
        if code:
            segments.append(("code", "".join(code)))
            code.clear()

    while i < n:
        c = src[i]
        nxt = src[i + 1] if i + 1 < n else ""
        if c == "/" and nxt == "/":
            end = src.find("\n", i)
            end = n if end < 0 else end
            flush()
            segments.append(("comment", src[i:end]))
            i = end
        elif c == "/" and nxt == "*":
            end = src.find("*/", i + 2)
            end = n if end < 0 else end + 2
            flush()
            segments.append(("comment", src[i:end]))
            i = end
        elif c == '"':
            prefix = ""
            raw = False
            if mode == "java" and src.startswith('"""', i):
                end = src.find('"""', i + 3)
                end = n if end < 0 else end + 3
            else:
                if mode == "cpp":
                    m = _CPP_STRING_PREFIX.search("".join(code[-4:]))
                    if m and m.group(0):
                        prefix = m.group(0)
                        raw = bool(m.group(2))
                        del code[len(code) - len(prefix):]
                end = _raw_string_end(src, i) if raw else _quoted_end(src, i, '"')
            flush()
            segments.append(("string", prefix + src[i:end]))
            i = end
        elif c == "'":
            if mode == "cpp" and nxt.isalnum() and _CPP_NUMBER_TAIL.search("".join(code[-64:])):
                code.append(c)
                i += 1
                continue
            prefix = ""
            if mode == "cpp":
                m = _CPP_STRING_PREFIX.search("".join(code[-4:]))
                if m and m.group(1) and not m.group(2):
                    prefix = m.group(1)
                    del code[len(code) - len(prefix):]
            end = _quoted_end(src, i, "'")
            flush()
            segments.append(("char", prefix + src[i:end]))
            i = end
        else:
            code.append(c)
            i += 1
    flush()
    return segments


def strip_comments(src, mode: str) -> RawText:
    """Replace each comment with a single space.

    Comment markers inside string or character literals are left alone; an
    unterminated block comment runs to the end of the input.
    """
    label = src.source_label if isinstance(src, RawText) else ""
    parts = [" " if kind == "comment" else text for kind, text in scan_source(_text(src), mode)]
    return RawText("".join(parts), label)


def tokenize_code(src, mode: str, fold: str = "upper") -> TokenStream:
    """Tokenize Java or C++ source.

    >>> tokenize_code("int x = 1; // note", "java").tokens
    ('INT', 'X', '=', '1', ';')
    """
    _check_fold(fold)
    word = _WORD.get(mode)
    tokens = []
    for kind, text in scan_source(_text(src), mode):
        if kind == "comment":
            continue
        if kind == "code":
            tokens.extend(_fold(t, fold) for t in word.findall(text))
        else:
            tokens.append(_fold(text, fold))
    return TokenStream(tuple(tokens), mode, fold)


def tokenize(text, mode: str = "natural", fold: str = "upper") -> TokenStream:
    if mode == "natural":
        return tokenize_natural(text, fold)
    return tokenize_code(text, mode, fold)

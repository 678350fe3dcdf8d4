"""Hand-rolled parser for the Turtle subset produced by common OWL editors.

Covers: @prefix/@base and their SPARQL-style forms, prefixed names,
IRI references, blank node labels and property lists, collections,
string literals in all four quoting styles with escapes, numeric and
boolean literals, language tags, and datatype annotations.

Relative IRI references are resolved against the in-force @base; a
relative reference with no base in force is a parse error rather than
being resolved against an implicit document URI, which keeps parsing a
pure function of the bytes.
"""

from __future__ import annotations

import re
from urllib.parse import urljoin

from ..errors import ParseError
from .terms import (
    BNode,
    Literal,
    RDF_FIRST,
    RDF_NIL,
    RDF_REST,
    RDF_TYPE,
    Triple,
    XSD_NS,
)

_ABSOLUTE_IRI_RE = re.compile(r"^[A-Za-z][A-Za-z0-9+.\-]*:")
_LANGTAG_RE = re.compile(r"^[A-Za-z]+(-[A-Za-z0-9]+)*$")
# A '.' not followed by a digit terminates the statement, so the decimal
# forms require digits on both sides of the point.
_NUMBER_RE = re.compile(
    r"[+-]?(?:\d+\.\d+(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?"
    r"|\d+(?:[eE][+-]?\d+)?)"
)

# Characters that terminate a bare (non-quoted) token.
_TERMINATORS = set(" \t\r\n\f\v,;.()[]{}<>\"'^#")

_STRING_ESCAPES = {
    "t": "\t",
    "b": "\b",
    "n": "\n",
    "r": "\r",
    "f": "\f",
    '"': '"',
    "'": "'",
    "\\": "\\",
}

# Token kinds
_IRIREF = "iriref"
_PNAME = "pname"
_BLANK = "blank"
_STRING = "string"
_LANGTAG = "langtag"
_NUMBER = "number"
_BOOL = "bool"
_KEYWORD_A = "a"
_AT_PREFIX = "@prefix"
_AT_BASE = "@base"
_SPARQL_PREFIX = "PREFIX"
_SPARQL_BASE = "BASE"
_PUNCT = "punct"
_EOF = "eof"


class _Token:
    __slots__ = ("kind", "value", "extra", "line")

    def __init__(self, kind, value, line, extra=None):
        self.kind = kind
        self.value = value
        self.extra = extra
        self.line = line

    def __repr__(self):
        return f"_Token({self.kind}, {self.value!r}, line={self.line})"


class _Tokenizer:
    def __init__(self, text: str, source: str):
        self.text = text
        self.source = source
        self.pos = 0
        self.line = 1

    def error(self, message: str, line: int | None = None) -> ParseError:
        return ParseError(message, line or self.line, self.source)

    def _advance(self, n: int = 1) -> None:
        segment = self.text[self.pos : self.pos + n]
        self.line += segment.count("\n")
        self.pos += n

    def _peek(self, offset: int = 0) -> str:
        i = self.pos + offset
        return self.text[i] if i < len(self.text) else ""

    def _skip_ws_and_comments(self) -> None:
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if ch in " \t\r\n\f\v":
                self._advance()
            elif ch == "#":
                while self.pos < len(self.text) and self.text[self.pos] != "\n":
                    self.pos += 1
            else:
                return

    def next_token(self) -> _Token:
        self._skip_ws_and_comments()
        line = self.line
        if self.pos >= len(self.text):
            return _Token(_EOF, "", line)
        ch = self._peek()

        if ch == "<":
            return self._read_iriref(line)
        if ch in "\"'":
            return self._read_string(line)
        if ch == "@":
            return self._read_at_word(line)
        if ch == "^":
            if self._peek(1) == "^":
                self._advance(2)
                return _Token(_PUNCT, "^^", line)
            raise self.error("stray '^'")
        if ch in ",;()[]":
            self._advance()
            return _Token(_PUNCT, ch, line)
        if ch == ".":
            if self._peek(1).isdigit():
                return self._read_number(line)
            self._advance()
            return _Token(_PUNCT, ".", line)
        if ch.isdigit() or (ch in "+-" and (self._peek(1).isdigit() or self._peek(1) == ".")):
            return self._read_number(line)
        if ch == "_" and self._peek(1) == ":":
            return self._read_blank(line)
        return self._read_name(line)

    def _read_iriref(self, line: int) -> _Token:
        self._advance()  # consume '<'
        out = []
        while True:
            if self.pos >= len(self.text):
                raise self.error("unterminated IRI reference", line)
            ch = self._peek()
            if ch == ">":
                self._advance()
                return _Token(_IRIREF, "".join(out), line)
            if ch == "\\":
                out.append(self._read_ucs_escape())
                continue
            if ch in ' <"{}|^`' or ch in "\n\r":
                raise self.error(f"illegal character {ch!r} in IRI reference", line)
            out.append(ch)
            self._advance()

    def _read_ucs_escape(self) -> str:
        # at a backslash inside an IRI ref or string: \uXXXX or \UXXXXXXXX
        esc = self._peek(1)
        if esc == "u":
            digits = self.text[self.pos + 2 : self.pos + 6]
            width = 4
        elif esc == "U":
            digits = self.text[self.pos + 2 : self.pos + 10]
            width = 8
        else:
            raise self.error(f"unsupported escape '\\{esc}'")
        if len(digits) != width or any(c not in "0123456789abcdefABCDEF" for c in digits):
            raise self.error(f"malformed \\{esc} escape")
        self._advance(2 + width)
        return chr(int(digits, 16))

    def _read_string(self, line: int) -> _Token:
        quote = self._peek()
        long_form = self.text.startswith(quote * 3, self.pos)
        delim = quote * 3 if long_form else quote
        self._advance(len(delim))
        out = []
        while True:
            if self.pos >= len(self.text):
                raise self.error("unterminated string literal", line)
            if self.text.startswith(delim, self.pos):
                self._advance(len(delim))
                return _Token(_STRING, "".join(out), line)
            ch = self._peek()
            if ch == "\\":
                esc = self._peek(1)
                if esc in _STRING_ESCAPES:
                    out.append(_STRING_ESCAPES[esc])
                    self._advance(2)
                elif esc in "uU":
                    out.append(self._read_ucs_escape())
                else:
                    raise self.error(f"unsupported string escape '\\{esc}'", line)
                continue
            if not long_form and ch in "\n\r":
                raise self.error("newline in single-line string literal", line)
            out.append(ch)
            self._advance()

    def _read_at_word(self, line: int) -> _Token:
        self._advance()  # consume '@'
        start = self.pos
        while self.pos < len(self.text) and (
            self._peek().isalnum() or self._peek() == "-"
        ):
            self._advance()
        word = self.text[start : self.pos]
        if word == "prefix":
            return _Token(_AT_PREFIX, word, line)
        if word == "base":
            return _Token(_AT_BASE, word, line)
        if _LANGTAG_RE.match(word):
            return _Token(_LANGTAG, word, line)
        raise self.error(f"malformed language tag or directive '@{word}'", line)

    def _read_number(self, line: int) -> _Token:
        m = _NUMBER_RE.match(self.text, self.pos)
        if not m:
            raise self.error("malformed numeric literal", line)
        lexical = m.group(0)
        self._advance(len(lexical))
        if "e" in lexical or "E" in lexical:
            dt = XSD_NS + "double"
        elif "." in lexical:
            dt = XSD_NS + "decimal"
        else:
            dt = XSD_NS + "integer"
        return _Token(_NUMBER, lexical, line, extra=dt)

    def _scan_dotted(self, allow_escapes: bool) -> str:
        # Scan name characters; an interior '.' (one followed by another
        # name character) is part of the token, a trailing '.' is the
        # statement terminator and is left unconsumed.
        out = []
        while self.pos < len(self.text):
            ch = self._peek()
            if ch == "\\" and allow_escapes:
                nxt = self._peek(1)
                if nxt in "uU":
                    out.append(self._read_ucs_escape())
                else:
                    # PN_LOCAL reserved-character escape, e.g. \- or \,
                    out.append(nxt)
                    self._advance(2)
                continue
            if ch == ":":
                out.append(ch)
                self._advance()
                continue
            if ch == ".":
                nxt = self._peek(1)
                if nxt and nxt not in _TERMINATORS:
                    out.append(ch)
                    self._advance()
                    continue
                break
            if ch in _TERMINATORS:
                break
            out.append(ch)
            self._advance()
        return "".join(out)

    def _read_blank(self, line: int) -> _Token:
        self._advance(2)  # consume '_:'
        label = self._scan_dotted(allow_escapes=False)
        if not label:
            raise self.error("empty blank node label", line)
        return _Token(_BLANK, label, line)

    def _read_name(self, line: int) -> _Token:
        # Bare name: keyword, boolean, or prefixed name (prefix ':' local).
        word = self._scan_dotted(allow_escapes=True)
        if not word:
            raise self.error(f"unexpected character {self._peek()!r}", line)
        if ":" in word:
            prefix, local = word.split(":", 1)
            return _Token(_PNAME, local, line, extra=prefix)
        if word == "a":
            return _Token(_KEYWORD_A, word, line)
        if word in ("true", "false"):
            return _Token(_BOOL, word, line)
        if word.upper() == "PREFIX":
            return _Token(_SPARQL_PREFIX, word, line)
        if word.upper() == "BASE":
            return _Token(_SPARQL_BASE, word, line)
        raise self.error(f"unexpected token {word!r}", line)


class TurtleParser:
    """Recursive-descent parser over the token stream."""

    def __init__(self, text: str, source: str = "<input>"):
        self._tok = _Tokenizer(text, source)
        self.source = source
        self.prefixes: dict[str, str] = {}
        self.base: str | None = None
        self.triples: list[Triple] = []
        self.warnings: list[tuple[int, str]] = []
        self._bnode_seq = 0
        self._lookahead: _Token | None = None

    # token plumbing -----------------------------------------------------

    def _next(self) -> _Token:
        if self._lookahead is not None:
            tok, self._lookahead = self._lookahead, None
            return tok
        return self._tok.next_token()

    def _peek(self) -> _Token:
        if self._lookahead is None:
            self._lookahead = self._tok.next_token()
        return self._lookahead

    def _expect_punct(self, value: str) -> _Token:
        tok = self._next()
        if tok.kind != _PUNCT or tok.value != value:
            raise ParseError(
                f"expected {value!r}, found {tok.value!r}", tok.line, self.source
            )
        return tok

    def _fresh_bnode(self) -> BNode:
        self._bnode_seq += 1
        return BNode(f"gen{self._bnode_seq}")

    # IRI handling -------------------------------------------------------

    def _resolve_iriref(self, ref: str, line: int) -> str:
        if _ABSOLUTE_IRI_RE.match(ref):
            return ref
        if self.base is None:
            raise ParseError(
                f"relative IRI <{ref}> with no @base in force", line, self.source
            )
        return urljoin(self.base, ref)

    def _expand_pname(self, tok: _Token) -> str:
        prefix = tok.extra or ""
        ns = self.prefixes.get(prefix)
        if ns is None:
            raise ParseError(
                f"undeclared prefix '{prefix}:'", tok.line, self.source
            )
        return ns + tok.value

    # grammar ------------------------------------------------------------

    def parse(self) -> tuple[list[Triple], list[tuple[int, str]]]:
        while True:
            tok = self._peek()
            if tok.kind == _EOF:
                return self.triples, self.warnings
            if tok.kind == _AT_PREFIX:
                self._next()
                self._directive_prefix(require_dot=True)
            elif tok.kind == _AT_BASE:
                self._next()
                self._directive_base(require_dot=True)
            elif tok.kind == _SPARQL_PREFIX:
                self._next()
                self._directive_prefix(require_dot=False)
            elif tok.kind == _SPARQL_BASE:
                self._next()
                self._directive_base(require_dot=False)
            else:
                self._triples_statement()

    def _directive_prefix(self, require_dot: bool) -> None:
        name = self._next()
        if name.kind != _PNAME or name.value != "":
            raise ParseError(
                "expected prefix name ending in ':'", name.line, self.source
            )
        iri = self._next()
        if iri.kind != _IRIREF:
            raise ParseError("expected IRI reference", iri.line, self.source)
        self.prefixes[name.extra or ""] = self._resolve_iriref(iri.value, iri.line)
        if require_dot:
            self._expect_punct(".")

    def _directive_base(self, require_dot: bool) -> None:
        iri = self._next()
        if iri.kind != _IRIREF:
            raise ParseError("expected IRI reference", iri.line, self.source)
        self.base = self._resolve_iriref(iri.value, iri.line)
        if require_dot:
            self._expect_punct(".")

    def _triples_statement(self) -> None:
        tok = self._peek()
        if tok.kind == _PUNCT and tok.value == "[":
            subject = self._blank_node_property_list()
            nxt = self._peek()
            if nxt.kind == _PUNCT and nxt.value == ".":
                self._next()
                return
            self._predicate_object_list(subject)
        else:
            subject = self._subject()
            self._predicate_object_list(subject)
        self._expect_punct(".")

    def _subject(self):
        tok = self._next()
        if tok.kind == _IRIREF:
            return self._resolve_iriref(tok.value, tok.line)
        if tok.kind == _PNAME:
            return self._expand_pname(tok)
        if tok.kind == _BLANK:
            return BNode(tok.value)
        if tok.kind == _PUNCT and tok.value == "(":
            return self._collection(tok.line)
        raise ParseError(
            f"expected subject, found {tok.value!r}", tok.line, self.source
        )

    def _verb(self) -> tuple[str, int]:
        tok = self._next()
        if tok.kind == _KEYWORD_A:
            return RDF_TYPE, tok.line
        if tok.kind == _IRIREF:
            return self._resolve_iriref(tok.value, tok.line), tok.line
        if tok.kind == _PNAME:
            return self._expand_pname(tok), tok.line
        raise ParseError(
            f"expected predicate, found {tok.value!r}", tok.line, self.source
        )

    def _predicate_object_list(self, subject) -> None:
        while True:
            predicate, line = self._verb()
            self._object_list(subject, predicate, line)
            nxt = self._peek()
            if nxt.kind == _PUNCT and nxt.value == ";":
                self._next()
                # trailing ';' before '.' or ']' is legal
                after = self._peek()
                if after.kind == _PUNCT and after.value in (".", "]"):
                    return
                continue
            return

    def _object_list(self, subject, predicate: str, line: int) -> None:
        while True:
            obj = self._object()
            self.triples.append(Triple(subject, predicate, obj, line))
            nxt = self._peek()
            if nxt.kind == _PUNCT and nxt.value == ",":
                self._next()
                continue
            return

    def _object(self):
        tok = self._next()
        if tok.kind == _IRIREF:
            return self._resolve_iriref(tok.value, tok.line)
        if tok.kind == _PNAME:
            return self._expand_pname(tok)
        if tok.kind == _BLANK:
            return BNode(tok.value)
        if tok.kind == _STRING:
            return self._literal_rest(tok)
        if tok.kind == _NUMBER:
            return Literal(tok.value, None, tok.extra)
        if tok.kind == _BOOL:
            return Literal(tok.value, None, XSD_NS + "boolean")
        if tok.kind == _PUNCT and tok.value == "[":
            return self._blank_node_property_list(already_open=True)
        if tok.kind == _PUNCT and tok.value == "(":
            return self._collection(tok.line)
        raise ParseError(
            f"expected object, found {tok.value!r}", tok.line, self.source
        )

    def _literal_rest(self, string_tok: _Token) -> Literal:
        nxt = self._peek()
        if nxt.kind == _LANGTAG:
            self._next()
            return Literal(string_tok.value, nxt.value.lower(), None)
        if nxt.kind == _PUNCT and nxt.value == "^^":
            self._next()
            dt_tok = self._next()
            if dt_tok.kind == _IRIREF:
                dt = self._resolve_iriref(dt_tok.value, dt_tok.line)
            elif dt_tok.kind == _PNAME:
                dt = self._expand_pname(dt_tok)
            else:
                raise ParseError(
                    "expected datatype IRI after '^^'", dt_tok.line, self.source
                )
            return Literal(string_tok.value, None, dt)
        return Literal(string_tok.value, None, None)

    def _blank_node_property_list(self, already_open: bool = False) -> BNode:
        if not already_open:
            self._expect_punct("[")
        node = self._fresh_bnode()
        nxt = self._peek()
        if not (nxt.kind == _PUNCT and nxt.value == "]"):
            self._predicate_object_list(node)
        self._expect_punct("]")
        return node

    def _collection(self, line: int):
        items = []
        while True:
            tok = self._peek()
            if tok.kind == _PUNCT and tok.value == ")":
                self._next()
                break
            if tok.kind == _EOF:
                raise ParseError("unterminated collection", line, self.source)
            items.append((self._object(), tok.line))
        if not items:
            return RDF_NIL
        head = self._fresh_bnode()
        node = head
        for idx, (item, item_line) in enumerate(items):
            self.triples.append(Triple(node, RDF_FIRST, item, item_line))
            if idx + 1 < len(items):
                nxt_node = self._fresh_bnode()
                self.triples.append(Triple(node, RDF_REST, nxt_node, item_line))
                node = nxt_node
            else:
                self.triples.append(Triple(node, RDF_REST, RDF_NIL, item_line))
        return head


def parse_turtle(
    text: str, source: str = "<input>"
) -> tuple[list[Triple], list[tuple[int, str]]]:
    """Parse a Turtle document into triples plus parser warnings."""
    return TurtleParser(text, source).parse()

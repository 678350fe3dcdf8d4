"""Synonym lexicon: flat synsets loaded from a plain-text file.

File format: UTF-8, one synset per line, terms separated by commas,
"#" starts a comment line. Terms are trimmed, case-folded, and internal
whitespace is collapsed to single spaces, so lookups are insensitive to
spacing and case. Example line::

    loan, credit, lending
"""

from __future__ import annotations

import re
from pathlib import Path

_WS = re.compile(r"\s+")


def _canonical(term: str) -> str:
    return _WS.sub(" ", term.strip()).casefold()


class SynonymLexicon:
    """Symmetric membership over sets of equivalent terms."""

    def __init__(self, synsets: list[set[str]] | None = None):
        self.synsets: list[set[str]] = []
        self._index: dict[str, set[int]] = {}
        for synset in synsets or []:
            self.add_synset(synset)

    def add_synset(self, terms) -> None:
        cleaned = {_canonical(t) for t in terms if _canonical(t)}
        if len(cleaned) < 2:
            return
        idx = len(self.synsets)
        self.synsets.append(cleaned)
        for term in cleaned:
            self._index.setdefault(term, set()).add(idx)

    def synonymous(self, a: str, b: str) -> bool:
        """True when the two terms are equal or share a synset."""
        a = _canonical(a)
        b = _canonical(b)
        if a == b:
            return True
        return bool(self._index.get(a, set()) & self._index.get(b, set()))

    def __len__(self) -> int:
        return len(self.synsets)

    def __contains__(self, term: str) -> bool:
        return _canonical(term) in self._index

    @classmethod
    def from_text(cls, text: str) -> "SynonymLexicon":
        lex = cls()
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            lex.add_synset(line.split(","))
        return lex

    @classmethod
    def from_file(cls, path: str | Path) -> "SynonymLexicon":
        return cls.from_text(Path(path).read_text(encoding="utf-8"))

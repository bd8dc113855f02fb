"""Label tokenization shared by candidate search and property alignment."""

from __future__ import annotations

import re

_CAMEL = re.compile(r"(?<=[a-z0-9])(?=[A-Z])")
_SPLIT = re.compile(r"[^0-9A-Za-z]+")


def tokenize(label: str) -> list[str]:
    """Lowercase tokens; splits on whitespace, punctuation and camelCase.

    "disambiguationTask" -> ["disambiguation", "task"]
    "has evaluation"     -> ["has", "evaluation"]
    """
    spaced = _CAMEL.sub(" ", label)
    return [t.lower() for t in _SPLIT.split(spaced) if t]

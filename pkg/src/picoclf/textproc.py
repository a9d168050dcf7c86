"""Tokenization, stop-word filtering, and n-gram extraction."""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .errors import ValidationError

# Maximal runs of letters/digits; hyphens, punctuation and underscores all
# act as separators. Digit-only and mixed alphanumeric tokens are kept
# because dosage-style tokens ("50", "mg") carry signal.
_TOKEN_RE = re.compile(r"[^\W_]+")

DEFAULT_STOPWORDS_RESOURCE = "stopwords_english.txt"


@dataclass(frozen=True)
class TokenSequence:
    """Ordered lowercase tokens of one sentence."""

    tokens: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.tokens)

    def __iter__(self):
        return iter(self.tokens)


@dataclass(frozen=True)
class NGramRange:
    """Inclusive n-gram size range, bounded to 1..3."""

    n_min: int
    n_max: int

    def __post_init__(self) -> None:
        if not (1 <= self.n_min <= self.n_max <= 3):
            raise ValidationError(
                f"n-gram range must satisfy 1 <= n_min <= n_max <= 3, "
                f"got {self.n_min}-{self.n_max}"
            )

    @classmethod
    def parse(cls, text: str) -> "NGramRange":
        """Parse '1-2' or '2' style range labels."""
        parts = text.strip().split("-")
        try:
            if len(parts) == 1:
                n = int(parts[0])
                return cls(n, n)
            if len(parts) == 2:
                return cls(int(parts[0]), int(parts[1]))
        except ValueError:
            pass
        raise ValidationError(f"cannot parse n-gram range {text!r}")

    @property
    def label(self) -> str:
        if self.n_min == self.n_max:
            return str(self.n_min)
        return f"{self.n_min}-{self.n_max}"

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class NGramBag:
    """Multiset of n-grams from one sentence.

    Keys are window tokens joined by a single space. ``range`` records the
    n-gram range the bag was built with so downstream transforms can check
    compatibility.
    """

    counts: dict[str, int]
    range: NGramRange

    @property
    def total(self) -> int:
        return sum(self.counts.values())


@dataclass(frozen=True)
class Stoplist:
    """A fixed stop-word list plus a stable content identifier."""

    words: frozenset[str]
    source_id: str = field(compare=False, default="")

    @classmethod
    def from_words(cls, words) -> "Stoplist":
        normalized = frozenset(w.strip().lower() for w in words if w.strip())
        digest = hashlib.sha256(
            "\n".join(sorted(normalized)).encode("utf-8")
        ).hexdigest()
        return cls(words=normalized, source_id=digest[:16])


def load_stopwords(path: str | Path | None = None) -> Stoplist:
    """Load a stop-word list, one lowercase word per line, UTF-8.

    With no path the packaged English list is used. The returned
    ``source_id`` is a hash of the normalized word set, so it is stable
    under reformatting or reordering of the file.
    """
    if path is None:
        text = (
            resources.files("picoclf.data")
            .joinpath(DEFAULT_STOPWORDS_RESOURCE)
            .read_text(encoding="utf-8")
        )
    else:
        text = Path(path).read_text(encoding="utf-8")
    return Stoplist.from_words(text.splitlines())


def tokenize(text: str) -> TokenSequence:
    """Lowercase and split on every maximal run of non-alphanumerics."""
    return TokenSequence(tokens=tuple(_TOKEN_RE.findall(text.lower())))


def remove_stopwords(t: TokenSequence, stoplist: frozenset[str] | Stoplist) -> TokenSequence:
    """Drop stop-listed tokens, preserving the order of survivors."""
    words = stoplist.words if isinstance(stoplist, Stoplist) else stoplist
    return TokenSequence(tokens=tuple(tok for tok in t.tokens if tok not in words))


def ngrams(t: TokenSequence, r: NGramRange) -> NGramBag:
    """Count every contiguous token window of each size in the range."""
    toks = t.tokens
    counts: dict[str, int] = {}
    for n in range(r.n_min, r.n_max + 1):
        for i in range(len(toks) - n + 1):
            key = toks[i] if n == 1 else " ".join(toks[i : i + n])
            counts[key] = counts.get(key, 0) + 1
    return NGramBag(counts=counts, range=r)

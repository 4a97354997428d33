"""Strings and bands of a zero-relation algebra.

A string ``u = α_n ... α_1`` is written right-to-left like a composite of
maps; ``α_1`` is applied first.  A :class:`StringWord` stores its syllables
in application order ``(α_1, ..., α_n)``, which makes the stored tuple a walk
in the quiver read left to right.  Everything user facing (display,
serialisation, lexicographic order) uses the right-to-left reading, i.e.
the reversed tuple.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import lru_cache, total_ordering
from typing import NamedTuple, Optional

from .errors import PreconditionError, ResourceLimitError, UnknownNameError
from .presentation import Presentation, window

DEFAULT_CAP = 2_000_000

_SUPERSCRIPT = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")
_FROM_SUPERSCRIPT = str.maketrans("⁰¹²³⁴⁵⁶⁷⁸⁹⁻", "0123456789-")


class Syllable(NamedTuple):
    """An arrow or its formal inverse.

    Tuple order gives the syllable order used everywhere: by arrow name,
    direct before inverse.
    """
    arrow: str
    inverted: bool = False

    def inverse(self) -> "Syllable":
        return Syllable(self.arrow, not self.inverted)


@total_ordering
@dataclass(frozen=True, eq=True)
class StringWord:
    syllables: tuple  # application order α_1, ..., α_n

    def __post_init__(self):
        syl = tuple(s if isinstance(s, Syllable) else Syllable(*s) for s in self.syllables)
        if not syl:
            raise ValueError("strings have positive length")
        object.__setattr__(self, "syllables", syl)

    def __len__(self):
        return len(self.syllables)

    def __iter__(self):
        return iter(self.syllables)

    def __getitem__(self, i):
        return self.syllables[i]

    @property
    def key(self):
        """Lexicographic key: syllables read left to right as displayed."""
        return self.syllables[::-1]

    def __lt__(self, other):
        return self.key < other.key

    @property
    def is_direct(self):
        return not any(s.inverted for s in self.syllables)

    @property
    def is_inverse(self):
        return all(s.inverted for s in self.syllables)

    @property
    def is_mixed(self):
        return not (self.is_direct or self.is_inverse)

    def rotate(self, j) -> "StringWord":
        """The cyclic permutation α_j ... α_1 α_n ... α_{j+1}."""
        j %= len(self)
        return StringWord(self.syllables[j:] + self.syllables[:j])

    def rotations(self):
        return [self.rotate(j) for j in range(len(self))]

    def power(self, k) -> "StringWord":
        return StringWord(self.syllables * k)

    def display(self, upper=False, powers=False) -> str:
        return format_word(self, upper=upper, powers=powers)

    def __str__(self):
        return format_word(self)

    def to_dict(self, upper=False) -> dict:
        return {
            "syllables": [{"arrow": s.arrow, "inverse": s.inverted} for s in self.key],
            "display": format_word(self, upper=upper),
        }

    @classmethod
    def from_dict(cls, obj) -> "StringWord":
        return cls(tuple(Syllable(s["arrow"], bool(s["inverse"]))
                         for s in reversed(obj["syllables"])))


def inverse(w: StringWord) -> StringWord:
    """``(α_n ... α_1)^{-1} = α_1^{-1} ... α_n^{-1}``."""
    return StringWord(tuple(s.inverse() for s in reversed(w.syllables)))


# ---------------------------------------------------------------------------
# notation
# ---------------------------------------------------------------------------

def _uppercase_ok(names):
    return all(len(n) == 1 and n.islower() for n in names)


def format_word(w, upper=False, powers=False) -> str:
    """Right-to-left display.

    Inverse syllables render as ``a⁻¹``; with ``upper=True`` (single-letter
    lowercase arrow names only) as ``A``.  ``powers=True`` compresses runs,
    e.g. ``b²`` or ``B²`` (``b⁻²`` without ``upper``).
    """
    syl = list(reversed(w.syllables)) if isinstance(w, StringWord) else list(reversed(w))
    names = {s.arrow for s in syl}
    upper = upper and _uppercase_ok(names)
    sep = "" if all(len(n) == 1 for n in names) else "·"
    runs = []
    for s in syl:
        if powers and runs and runs[-1][0] == s:
            runs[-1][1] += 1
        else:
            runs.append([s, 1])
    parts = []
    for s, k in runs:
        if upper:
            base = s.arrow.upper() if s.inverted else s.arrow
            parts.append(base + (str(k).translate(_SUPERSCRIPT) if k > 1 else ""))
        elif s.inverted:
            parts.append(s.arrow + str(-k).translate(_SUPERSCRIPT))
        else:
            parts.append(s.arrow + (str(k).translate(_SUPERSCRIPT) if k > 1 else ""))
    return sep.join(parts)


_EXP = r"(?:\^(-?\d+)|([⁻]?[⁰¹²³⁴⁵⁶⁷⁸⁹]+))?"


def parse_word(text: str, p: Presentation) -> StringWord:
    """Read a word written right-to-left, e.g. ``"aB"``, ``"b²A"``, ``"a b^-1"``.

    Uppercase single letters denote inverses when the quiver has the
    lowercase arrow and no arrow of the uppercase name.
    """
    names = {a.name for a in p.arrows}
    text = text.strip()
    if " " in text or "·" in text:
        tokens = [t for t in re.split(r"[ ·]+", text) if t]
        pattern = re.compile(r"^(.+?)" + _EXP + r"$")
        pieces = []
        for tok in tokens:
            m = pattern.match(tok)
            pieces.append((m.group(1), m.group(2) or m.group(3)))
    else:
        pieces = []
        for m in re.finditer(r"(.)" + _EXP, text):
            pieces.append((m.group(1), m.group(2) or m.group(3)))
    display = []
    for name, exp in pieces:
        k = int(exp.translate(_FROM_SUPERSCRIPT)) if exp else 1
        inverted = k < 0
        if name not in names and name.lower() in names and name.isupper():
            name, inverted = name.lower(), not inverted
        if name not in names:
            raise UnknownNameError(f"unknown arrow {name!r} in word {text!r}")
        display.extend([Syllable(name, inverted)] * abs(k))
    return StringWord(tuple(reversed(display)))


# ---------------------------------------------------------------------------
# string predicate
# ---------------------------------------------------------------------------

class _Context(NamedTuple):
    start: dict
    end: dict
    forbidden: frozenset
    lengths: tuple


@lru_cache(maxsize=256)
def _context(p: Presentation) -> _Context:
    start, end = {}, {}
    for a in p.arrows:
        start[Syllable(a.name, False)] = a.source
        end[Syllable(a.name, False)] = a.target
        start[Syllable(a.name, True)] = a.target
        end[Syllable(a.name, True)] = a.source
    forbidden = set()
    for r in p.relations:
        forbidden.add(tuple(Syllable(x, False) for x in r))
        forbidden.add(tuple(Syllable(x, True) for x in reversed(r)))
    lengths = tuple(sorted({len(r) for r in p.relations}))
    return _Context(start, end, frozenset(forbidden), lengths)


def _check_known(syl, ctx):
    for s in syl:
        if s not in ctx.start:
            raise UnknownNameError(f"unknown arrow {s.arrow!r}")


def _tail_ok(syl, ctx) -> bool:
    """Whether the last syllable can follow the rest (local conditions only)."""
    n = len(syl)
    if n >= 2:
        prev, last = syl[-2], syl[-1]
        if ctx.end[prev] != ctx.start[last] or last == prev.inverse():
            return False
    for L in ctx.lengths:
        if L <= n and syl[n - L:] in ctx.forbidden:
            return False
    return True


def is_string(w, p: Presentation) -> bool:
    """Decide the string conditions; only windows up to the longest relation are read."""
    syl = tuple(w.syllables if isinstance(w, StringWord) else
                (s if isinstance(s, Syllable) else Syllable(*s) for s in w))
    ctx = _context(p)
    _check_known(syl, ctx)
    if not syl:
        return False
    return all(_tail_ok(syl[:i], ctx) for i in range(1, len(syl) + 1))


def concat(u: StringWord, v: StringWord, p: Presentation) -> Optional[StringWord]:
    """``uv`` (v applied first) if it is a string, else None."""
    w = StringWord(v.syllables + u.syllables)
    return w if is_string(w, p) else None


def is_cyclic(w: StringWord, p: Presentation) -> bool:
    ctx = _context(p)
    return ctx.end[w[-1]] == ctx.start[w[0]]


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def enumerate_strings(p: Presentation, k: int, cap: int = DEFAULT_CAP) -> list:
    """Str_k in lexicographic order, by extension of Str_{k-1} with tail checks."""
    if k < 1:
        raise PreconditionError("string length must be positive")
    return list(_strings(p, k, cap))


@lru_cache(maxsize=512)
def _strings(p, k, cap):
    window(p)  # admissibility precondition
    ctx = _context(p)
    if k == 1:
        level = [(s,) for s in sorted(ctx.start) if _tail_ok((s,), ctx)]
    else:
        prev = _strings(p, k - 1, cap)
        level = []
        for w in prev:
            for s in sorted(ctx.start):
                cand = w.syllables + (s,)
                if _tail_ok(cand, ctx):
                    level.append(cand)
                    if len(level) > cap:
                        raise ResourceLimitError(f"more than {cap} strings of length {k}")
    return tuple(sorted(StringWord(x) for x in level))


# ---------------------------------------------------------------------------
# cyclic strings and bands
# ---------------------------------------------------------------------------

class Cyclicity(enum.Enum):
    NOT_CYCLIC = "NotCyclic"
    BAND_POWER_ROTATION = "BandPowerRotation"
    OTHER_CYCLIC = "OtherCyclic"


@total_ordering
@dataclass(frozen=True)
class BandClass:
    """A band up to rotation, with the identifier it shares with its inverse."""
    representative: StringWord
    inverse_pair_id: StringWord

    @property
    def length(self):
        return len(self.representative)

    def __lt__(self, other):
        return (self.length, self.representative.key) < (other.length, other.representative.key)

    def __str__(self):
        return str(self.representative)


class CyclicClass(NamedTuple):
    kind: Cyclicity
    band: Optional[BandClass] = None
    exponent: Optional[int] = None


def primitive_period(w: StringWord) -> int:
    """Least d dividing |w| with w = (first d syllables)^(|w|/d)."""
    n = len(w)
    syl = w.syllables
    for d in range(1, n + 1):
        if n % d == 0 and syl == syl[:d] * (n // d):
            return d
    return n  # pragma: no cover


def _band_shaped(w: StringWord) -> bool:
    # leftmost (α_n) direct, rightmost (α_1) inverse
    return w[0].inverted and not w[-1].inverted


def is_permutable(w: StringWord, p: Presentation) -> bool:
    return all(is_string(r, p) for r in w.rotations())


def band_class_of(w: StringWord) -> BandClass:
    """Class of a word known to be a rotation of a band (no string checks)."""
    rep = min(r for r in w.rotations() if _band_shaped(r))
    rep_inv = min(r for r in inverse(w).rotations() if _band_shaped(r))
    return BandClass(rep, min(rep, rep_inv))


def classify_cyclic(w: StringWord, p: Presentation) -> CyclicClass:
    if not is_cyclic(w, p):
        return CyclicClass(Cyclicity.NOT_CYCLIC)
    if not (w.is_mixed and is_permutable(w, p)):
        return CyclicClass(Cyclicity.OTHER_CYCLIC)
    d = primitive_period(w)
    return CyclicClass(Cyclicity.BAND_POWER_ROTATION,
                       band_class_of(StringWord(w.syllables[:d])), len(w) // d)


def canonical_band(w: StringWord, p: Presentation) -> BandClass:
    """Canonical class of a rotation of a band.

    The representative is the least rotation (in display order) among those
    that start with a direct and end with an inverse syllable; the pair id
    is the lesser of the representatives of ``w`` and ``w^{-1}``.
    """
    c = classify_cyclic(w, p)
    if c.kind is not Cyclicity.BAND_POWER_ROTATION or c.exponent != 1:
        raise PreconditionError(f"{w} is not a rotation of a band")
    return c.band


def is_band(w: StringWord, p: Presentation) -> bool:
    """Band test straight from the definition (used as an oracle).

    Primitive, cyclic, leftmost syllable direct, rightmost inverse, and
    every power a string.  Powers are checked up to the first one whose
    length exceeds N+1 plus one period, which already contains every
    window of length <= N+1 of the periodic word.
    """
    if not is_string(w, p) or not is_cyclic(w, p) or not _band_shaped(w):
        return False
    if primitive_period(w) != len(w):
        return False
    n = len(w)
    K = -(-(window(p) + 1) // n) + 1
    return is_string(w.power(K), p)


def enumerate_bands(p: Presentation, max_length: int, cap: int = DEFAULT_CAP) -> list:
    """Every band class of length <= max_length, by filtering all strings."""
    found = set()
    for n in range(2, max_length + 1):
        for w in enumerate_strings(p, n, cap):
            if is_band(w, p):
                found.add(band_class_of(w))
    return sorted(found)

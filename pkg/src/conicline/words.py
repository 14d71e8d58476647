"""Free-group words and endomorphisms given by generator images.

Words are kept freely reduced at all times: every constructor and every
operation reduces its result, so equality of Word values is equality in the
free group. Letters are (label, sign) pairs; generator identity is by label.
"""

from __future__ import annotations

from dataclasses import dataclass, field

Letter = tuple[str, int]


class MissingImageError(KeyError):
    """A word contains a generator the map has no image for."""


@dataclass(frozen=True, order=True)
class Generator:
    """A named free-group generator with a display/ordering index."""
    label: str
    index: int


def _reduce(letters) -> tuple[Letter, ...]:
    out: list[Letter] = []
    for lab, sign in letters:
        if sign not in (1, -1):
            raise ValueError(f"letter sign must be +-1, got {sign}")
        if out and out[-1][0] == lab and out[-1][1] == -sign:
            out.pop()
        else:
            out.append((lab, sign))
    return tuple(out)


@dataclass(frozen=True)
class Word:
    """A freely reduced word; the empty word is the identity."""
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", _reduce(self.letters))

    def __len__(self):
        return len(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return multiply(self, other)

    def __invert__(self) -> "Word":
        return invert(self)

    def __pow__(self, k: int) -> "Word":
        base = self if k >= 0 else invert(self)
        return multiply(*([base] * abs(k))) if k else Word()

    def __repr__(self):
        return f"Word({word_text(self)!r})"

    def labels(self) -> set[str]:
        return {lab for lab, _ in self.letters}


EMPTY = Word()


def gen(label: str) -> Word:
    return Word(((label, 1),))


def word(*items) -> Word:
    """Build a word from labels and (label, sign) pairs."""
    letters = []
    for it in items:
        if isinstance(it, str):
            letters.append((it, 1))
        else:
            letters.append(tuple(it))
    return Word(tuple(letters))


def reduce(w: Word) -> Word:
    """Freely reduce; a no-op on Word values, kept as the spec'd entry point."""
    return Word(w.letters)


def multiply(*words: Word) -> Word:
    letters: list[Letter] = []
    for w in words:
        for lab, sign in w.letters:
            if letters and letters[-1][0] == lab and letters[-1][1] == -sign:
                letters.pop()
            else:
                letters.append((lab, sign))
    return Word(tuple(letters))


def invert(w: Word) -> Word:
    return Word(tuple((lab, -sign) for lab, sign in reversed(w.letters)))


def conjugate(a: Word, b: Word) -> Word:
    """a^b = b^-1 a b."""
    return multiply(invert(b), a, b)


def commutator(a: Word, b: Word) -> Word:
    """[a, b] = a b a^-1 b^-1."""
    return multiply(a, b, invert(a), invert(b))


@dataclass(frozen=True)
class GroupMap:
    """An endomorphism of a free group, given by images of generators."""
    images: dict[str, Word] = field(default_factory=dict)

    def __call__(self, w: Word) -> Word:
        return apply_map(self, w)


def identity_map(labels) -> GroupMap:
    return GroupMap({lab: gen(lab) for lab in labels})


def apply_map(m: GroupMap, w: Word) -> Word:
    out: list[Letter] = []
    for lab, sign in w.letters:
        try:
            img = m.images[lab]
        except KeyError:
            raise MissingImageError(f"no image for generator {lab!r}") from None
        seq = img.letters if sign > 0 else invert(img).letters
        for l2, s2 in seq:
            if out and out[-1][0] == l2 and out[-1][1] == -s2:
                out.pop()
            else:
                out.append((l2, s2))
    return Word(tuple(out))


def compose_maps(m1: GroupMap, m2: GroupMap) -> GroupMap:
    """apply(compose(m1, m2), w) == apply(m2, apply(m1, w))."""
    return GroupMap({lab: apply_map(m2, img) for lab, img in m1.images.items()})


def word_text(w: Word) -> str:
    """Serialize: letters as `x3` / `x3^-1` separated by spaces; empty word is `1`."""
    if not w.letters:
        return "1"
    return " ".join(lab if sign > 0 else f"{lab}^-1" for lab, sign in w.letters)


def parse_word(text: str) -> Word:
    text = text.strip()
    if text in ("", "1"):
        return Word()
    letters = []
    for tok in text.split():
        if tok.endswith("^-1"):
            letters.append((tok[:-3], -1))
        elif tok.endswith("^1"):
            letters.append((tok[:-2], 1))
        else:
            letters.append((tok, 1))
    return Word(tuple(letters))

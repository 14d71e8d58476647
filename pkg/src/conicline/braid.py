"""The braid group B_N: Artin words, half-twist bands, conjugated twists, and
the action on the free group F_N = <x1, ..., xN>.

Convention (calibrated against the source computations, see the golden tests):

* sigma_i sends x_i -> x_{i+1} and x_{i+1} -> x_{i+1} x_i x_{i+1}^-1, fixing
  the others; a braid word acts letter by letter in written order. This
  action preserves the descending product x_N ... x_1, which is exactly the
  projective relation the van Kampen layer appends.
* The half-twist along the below-axis path z_{ij} compiles to
  (s_i s_{i+1} ... s_{j-2}) s_{j-1} (s_{j-2}^-1 ... s_i^-1); the above-axis
  path uses inverted conjugating letters. Adjacent endpoints give s_i alone.
* Conjugation is a^b = b^-1 a b; a conjugator list applies left to right
  (leftmost innermost), so (a)^{b c} = (a^b)^c.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .words import GroupMap, Word, gen, invert, multiply

BELOW = "below"
ABOVE = "above"

BraidLetter = tuple[int, int]


@dataclass(frozen=True)
class Skeleton:
    """A basic path connecting fiber points i < j below or above the axis."""
    i: int
    j: int
    side: str = BELOW

    def __post_init__(self):
        if not (1 <= self.i < self.j):
            raise ValueError(f"skeleton endpoints must satisfy 1 <= i < j, got ({self.i}, {self.j})")
        if self.side not in (BELOW, ABOVE):
            raise ValueError(f"side must be {BELOW!r} or {ABOVE!r}, got {self.side!r}")


@dataclass(frozen=True)
class ConjugatedTwist:
    """A power of a half-twist, conjugated by full twists of other skeletons."""
    base: Skeleton
    power: int = 1
    conjugators: tuple[tuple[Skeleton, int], ...] = ()

    def __post_init__(self):
        if self.power == 0:
            raise ValueError("twist power must be nonzero")
        for skel, p in self.conjugators:
            if p % 2 != 0 or p == 0:
                raise ValueError(f"conjugator powers must be nonzero and even, got {p}")
        object.__setattr__(self, "conjugators", tuple(self.conjugators))

    def endpoints(self):
        return (self.base.i, self.base.j)


@dataclass(frozen=True)
class ArtinWord:
    """A word in the Artin generators s_1 .. s_{N-1} of B_N."""
    strand_count: int
    letters: tuple[BraidLetter, ...] = ()

    def __post_init__(self):
        if self.strand_count < 1:
            raise ValueError("strand count must be >= 1")
        for idx, sign in self.letters:
            if not 1 <= idx <= self.strand_count - 1:
                raise ValueError(f"letter index {idx} out of range for B_{self.strand_count}")
            if sign not in (1, -1):
                raise ValueError(f"letter sign must be +-1, got {sign}")

    def __mul__(self, other: "ArtinWord") -> "ArtinWord":
        if self.strand_count != other.strand_count:
            raise ValueError("strand counts differ")
        return ArtinWord(self.strand_count, self.letters + other.letters)

    def inverse(self) -> "ArtinWord":
        return ArtinWord(self.strand_count,
                         tuple((i, -s) for i, s in reversed(self.letters)))

    def __pow__(self, k: int) -> "ArtinWord":
        base = self if k >= 0 else self.inverse()
        return ArtinWord(self.strand_count, base.letters * abs(k))


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..N}, stored as the tuple of images of 1..N."""
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError("not a bijection of 1..N")

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """self then other."""
        return Permutation(tuple(other.images[i - 1] for i in self.images))

    def is_identity(self) -> bool:
        return all(v == k for k, v in enumerate(self.images, start=1))


def identity_permutation(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def transposition(n: int, a: int, b: int) -> Permutation:
    images = list(range(1, n + 1))
    images[a - 1], images[b - 1] = b, a
    return Permutation(tuple(images))


def band_transport(s: Skeleton) -> tuple[tuple[BraidLetter, ...], int]:
    """Conjugating letters D and core index c with half-twist = D s_c D^-1."""
    sign = 1 if s.side == BELOW else -1
    conj = tuple((k, sign) for k in range(s.i, s.j - 1))
    return conj, s.j - 1


def compile_skeleton(s: Skeleton, n: int) -> ArtinWord:
    """The band-generator expansion of the half-twist along s in B_n."""
    if s.j > n:
        raise ValueError(f"skeleton endpoint {s.j} exceeds strand count {n}")
    conj, core = band_transport(s)
    inv = tuple((i, -sg) for i, sg in reversed(conj))
    return ArtinWord(n, conj + ((core, 1),) + inv)


def compile_factor(t: ConjugatedTwist, n: int) -> ArtinWord:
    """Compile base^power conjugated per a^b = b^-1 a b, left to right."""
    v = ArtinWord(n)
    for skel, p in t.conjugators:
        v = v * compile_skeleton(skel, n) ** p
    core = compile_skeleton(t.base, n) ** t.power
    return v.inverse() * core * v


def _letter_images(idx: int, sign: int) -> dict[str, Word]:
    xi, xj = gen(f"x{idx}"), gen(f"x{idx + 1}")
    if sign > 0:
        return {f"x{idx}": xj, f"x{idx + 1}": multiply(xj, xi, invert(xj))}
    return {f"x{idx}": multiply(invert(xi), xj, xi), f"x{idx + 1}": xi}


def apply_braid(b: ArtinWord, w: Word) -> Word:
    """Act on a word over x1..xN, letters applied in written order."""
    for idx, sign in b.letters:
        images = _letter_images(idx, sign)
        out = []
        for lab, s in w.letters:
            img = images.get(lab)
            if img is None:
                seq = ((lab, s),)
            else:
                seq = img.letters if s > 0 else invert(img).letters
            for l2, s2 in seq:
                if out and out[-1][0] == l2 and out[-1][1] == -s2:
                    out.pop()
                else:
                    out.append((l2, s2))
        w = Word(tuple(out))
    return w


def artin_action(b: ArtinWord) -> GroupMap:
    n = b.strand_count
    return GroupMap({f"x{k}": apply_braid(b, gen(f"x{k}")) for k in range(1, n + 1)})


def full_twist(n: int) -> ArtinWord:
    """Delta^2, the generator of the center of B_n: (s_1 ... s_{N-1})^N."""
    if n < 1:
        raise ValueError("strand count must be >= 1")
    round_ = tuple((i, 1) for i in range(1, n))
    return ArtinWord(n, round_ * n)


def exponent_sum(b: ArtinWord) -> int:
    return sum(sign for _, sign in b.letters)


def permutation(b: ArtinWord) -> Permutation:
    perm = identity_permutation(b.strand_count)
    for idx, _ in b.letters:
        perm = perm * transposition(b.strand_count, idx, idx + 1)
    return perm


def braid_text(b: ArtinWord) -> str:
    if not b.letters:
        return "1"
    return " ".join(f"s{i}" if s > 0 else f"s{i}^-1" for i, s in b.letters)


def parse_braid(text: str, n: int) -> ArtinWord:
    text = text.strip()
    if text in ("", "1"):
        return ArtinWord(n)
    letters = []
    for tok in text.split():
        if not tok.startswith("s"):
            raise ValueError(f"bad braid letter {tok!r}")
        if tok.endswith("^-1"):
            letters.append((int(tok[1:-3]), -1))
        else:
            letters.append((int(tok[1:]), 1))
    return ArtinWord(n, tuple(letters))


def skeleton_to_json(s: Skeleton) -> dict:
    return {"i": s.i, "j": s.j, "side": s.side}


def skeleton_from_json(d: dict) -> Skeleton:
    return Skeleton(d["i"], d["j"], d["side"])


def twist_to_json(t: ConjugatedTwist) -> dict:
    return {
        "base": skeleton_to_json(t.base),
        "power": t.power,
        "conjugators": [dict(skeleton_to_json(s), power=p) for s, p in t.conjugators],
    }


def twist_from_json(d: dict) -> ConjugatedTwist:
    conjs = tuple((Skeleton(c["i"], c["j"], c["side"]), c["power"])
                  for c in d.get("conjugators", ()))
    return ConjugatedTwist(skeleton_from_json(d["base"]), d["power"], conjs)


def twist_text(t: ConjugatedTwist) -> str:
    return json.dumps(twist_to_json(t))

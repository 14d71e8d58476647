"""From a braid monodromy factorization to a raw fundamental-group
presentation: one relator per factor, plus the optional projective relation
x_N x_{N-1} ... x_1 = e.

A compiled factor has the shape C s_c^k C^-1; the relation pair (A, B) is
the pair of endpoint loops transported by C, computed through the Artin
action of C^-1 (the direction the calibrated conventions make come out in
the source's own words; see the golden tests). Branch points identify
A = B, nodes commute them, tangencies impose (AB)^2 = (BA)^2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braid import (ArtinWord, apply_braid, band_transport, compile_skeleton)
from .catalog import BMF, BMFactor, SingType
from .words import (Generator, Word, gen, invert, multiply, parse_word,
                    word_text)


def cyclic_reduce(w: Word) -> Word:
    letters = w.letters
    while len(letters) >= 2 and letters[0][0] == letters[-1][0] \
            and letters[0][1] == -letters[-1][1]:
        letters = letters[1:-1]
    return Word(letters)


@dataclass(frozen=True)
class Presentation:
    """Generators plus relators, with per-relator provenance."""
    generators: tuple[Generator, ...]
    relators: tuple[Word, ...]
    origins: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.origins:
            object.__setattr__(self, "origins", ("",) * len(self.relators))
        if len(self.origins) != len(self.relators):
            raise ValueError("origins must align with relators")
        labels = {g.label for g in self.generators}
        if len(labels) != len(self.generators):
            raise ValueError("generator labels must be unique")
        reduced = tuple(cyclic_reduce(r) for r in self.relators)
        for r in reduced:
            stray = r.labels() - labels
            if stray:
                raise ValueError(f"relator uses unknown generators {stray}")
        object.__setattr__(self, "relators", reduced)

    def labels(self) -> tuple[str, ...]:
        return tuple(g.label for g in self.generators)


def presentation(labels, relators, origins=()) -> Presentation:
    gens = tuple(Generator(lab, k) for k, lab in enumerate(labels, start=1))
    return Presentation(gens, tuple(relators), tuple(origins))


def relation_pair(f: BMFactor, n: int, labels: tuple[str, ...] | None = None):
    """The transported endpoint loops (A, B) of a monodromy factor in B_n."""
    t = f.twist
    if t.power <= 0:
        raise ValueError("monodromy factors must have positive power")
    v = ArtinWord(n)
    for skel, p in t.conjugators:
        v = v * compile_skeleton(skel, n) ** p
    d_letters, core = band_transport(t.base)
    d = ArtinWord(n, d_letters)
    e = d.inverse() * v  # (V^-1 D)^-1
    a = apply_braid(e, gen(f"x{core}"))
    b = apply_braid(e, gen(f"x{core + 1}"))
    if labels is not None:
        rename = {f"x{k}": lab for k, lab in enumerate(labels, start=1)}
        a = Word(tuple((rename[l], s) for l, s in a.letters))
        b = Word(tuple((rename[l], s) for l, s in b.letters))
    return a, b


def relator_for(sing_type: SingType, a: Word, b: Word) -> Word:
    if sing_type is SingType.BRANCH:
        return multiply(a, invert(b))
    if sing_type is SingType.NODE:
        return multiply(a, b, invert(a), invert(b))
    if sing_type is SingType.TANGENCY:
        ab, ba = multiply(a, b), multiply(b, a)
        return multiply(ab, ab, invert(ba), invert(ba))
    raise ValueError(f"unsupported singularity type {sing_type!r}")


def projective_relator(labels: tuple[str, ...]) -> Word:
    """x_N x_{N-1} ... x_1, generators in descending fiber position."""
    return Word(tuple((lab, 1) for lab in reversed(labels)))


def raw_presentation(b: BMF, projective: bool = False) -> Presentation:
    relators, origins = [], []
    for f in b.factors:
        a, bb = relation_pair(f, b.strand_count, b.labels)
        relators.append(relator_for(f.sing_type, a, bb))
        origins.append(f.origin)
    if projective:
        relators.append(projective_relator(b.labels))
        origins.append("projective")
    return presentation(b.labels, relators, origins)


def relator_equal_up_to_cyc(a: Word, b: Word) -> bool:
    """Equality of relators up to cyclic rotation and inversion."""
    a, b = cyclic_reduce(a), cyclic_reduce(b)
    if len(a) != len(b):
        return False
    if not a:
        return True
    for cand in (b, invert(b)):
        letters = cand.letters
        for r in range(len(letters)):
            if a.letters == letters[r:] + letters[:r]:
                return True
    return False


def presentation_text(p: Presentation) -> str:
    lines = ["gens: " + " ".join(p.labels())]
    lines += [word_text(r) for r in p.relators]
    return "\n".join(lines)


def parse_presentation(text: str) -> Presentation:
    lines = [l for l in (ln.strip() for ln in text.splitlines()) if l]
    if not lines or not lines[0].startswith("gens:"):
        raise ValueError("presentation text must start with a 'gens:' line")
    labels = lines[0][len("gens:"):].split()
    return presentation(labels, [parse_word(l) for l in lines[1:]])


def presentation_to_json(p: Presentation) -> dict:
    return {
        "generators": [{"label": g.label, "index": g.index} for g in p.generators],
        "relators": [word_text(r) for r in p.relators],
        "origins": list(p.origins),
    }


def presentation_from_json(d: dict) -> Presentation:
    gens = tuple(Generator(g["label"], g["index"]) for g in d["generators"])
    rels = tuple(parse_word(t) for t in d["relators"])
    return Presentation(gens, rels, tuple(d.get("origins", ())))

"""Finitely presented group toolkit: Tietze simplification, abelianization
via integer Smith normal form, and homomorphism-count fingerprints into
small permutation groups.

Fingerprints are isomorphism invariants (the number of homomorphisms into a
fixed finite group does not depend on the presentation), so they serve as a
consistency oracle between the raw van Kampen presentations and the stated
simplified ones. Equal fingerprints are reported as "consistent", never as
a proof of isomorphism.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .finite_groups import BATTERY, DEFAULT_BATTERY, FiniteGroup
from .vankampen import Presentation, cyclic_reduce, presentation
from .words import Word, invert, multiply

# --------------------------------------------------------------------------
# Smith normal form over the integers, with recorded transforms
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class SNFResult:
    """diagonal: the nonzero invariant factors d_1 | d_2 | ...; rank_free:
    number of generators not constrained (columns beyond the support)."""
    diagonal: tuple[int, ...]
    rank_free: int

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.diagonal if d > 1)


def _identity_matrix(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def smith_normal_form(matrix: list[list[int]]):
    """Return (S, U, V) with U @ matrix @ V = S diagonal, U, V unimodular,
    and the diagonal entries forming a divisibility chain."""
    a = [row[:] for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    u = _identity_matrix(rows)
    v = _identity_matrix(cols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(src, dst, c):
        a[dst] = [x + c * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + c * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, c):
        for r in a:
            r[dst] += c * r[src]
        for r in v:
            r[dst] += c * r[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    while t < min(rows, cols):
        pivot = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (best is None or abs(a[i][j]) < best):
                    best, pivot = abs(a[i][j]), (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            done = True
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    add_row(t, i, -q)
                    if a[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    add_col(t, j, -q)
                    if a[t][j]:
                        swap_cols(t, j)
                        done = False
            if done:
                break
        if a[t][t] < 0:
            negate_row(t)
        t += 1

    # enforce the divisibility chain d_i | d_{i+1}
    changed = True
    while changed:
        changed = False
        for i in range(t - 1):
            if a[i + 1][i + 1] % a[i][i] != 0:
                add_col(i + 1, i, 1)
                # re-diagonalize the 2x2 block
                while a[i + 1][i]:
                    q = a[i][i] // a[i + 1][i] if a[i + 1][i] else 0
                    if abs(a[i + 1][i]) <= abs(a[i][i]):
                        q = a[i][i] // a[i + 1][i]
                        add_row(i + 1, i, -q)
                        swap_rows(i, i + 1)
                    else:
                        q = a[i + 1][i] // a[i][i]
                        add_row(i, i + 1, -q)
                for j in (i, i + 1):
                    if a[i][j] and j != i:
                        q = a[i][j] // a[i][i]
                        add_col(i, j, -q)
                if a[i + 1][i + 1] < 0:
                    negate_row(i + 1)
                if a[i][i] < 0:
                    negate_row(i)
                changed = True
    return a, u, v


def det_int(matrix) -> int:
    """Bareiss fraction-free determinant; exact for integer matrices."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [[Fraction(x) for x in row] for row in matrix]
    sign = 1
    for k in range(n):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            factor = m[i][k] / m[k][k]
            for j in range(k, n):
                m[i][j] -= factor * m[k][j]
    out = Fraction(sign)
    for k in range(n):
        out *= m[k][k]
    assert out.denominator == 1
    return int(out)


def relator_matrix(p: Presentation) -> list[list[int]]:
    cols = {g.label: k for k, g in enumerate(p.generators)}
    rows = []
    for r in p.relators:
        row = [0] * len(cols)
        for lab, sign in r.letters:
            row[cols[lab]] += sign
        rows.append(row)
    return rows


def abelianization(p: Presentation) -> SNFResult:
    m = relator_matrix(p)
    if not m:
        return SNFResult((), len(p.generators))
    s, _, _ = smith_normal_form(m)
    diag = [s[i][i] for i in range(min(len(s), len(s[0]))) if s[i][i] != 0]
    return SNFResult(tuple(diag), len(p.generators) - len(diag))


# --------------------------------------------------------------------------
# Tietze simplification
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class TietzeResult:
    presentation: Presentation
    passes: int
    exhausted: bool


def _canonical_cyclic(w: Word) -> tuple:
    w = cyclic_reduce(w)
    if not w:
        return ()
    best = None
    for cand in (w.letters, invert(w).letters):
        for r in range(len(cand)):
            rot = cand[r:] + cand[:r]
            if best is None or rot < best:
                best = rot
    return best


def _substitute(r: Word, label: str, image: Word) -> Word:
    out = []
    for lab, sign in r.letters:
        seq = ((lab, sign),) if lab != label else \
            (image.letters if sign > 0 else invert(image).letters)
        for l2, s2 in seq:
            if out and out[-1][0] == l2 and out[-1][1] == -s2:
                out.pop()
            else:
                out.append((l2, s2))
    return cyclic_reduce(Word(tuple(out)))


def _solve_generator(r: Word, label: str) -> Word:
    """Given a relator with exactly one occurrence of `label`, express it in
    the remaining generators: r = p g^s q = e  =>  g^s = p^-1 q^-1."""
    idx = next(k for k, (lab, _) in enumerate(r.letters) if lab == label)
    sign = r.letters[idx][1]
    p = Word(r.letters[:idx])
    q = Word(r.letters[idx + 1:])
    sol = multiply(invert(p), invert(q))
    return sol if sign > 0 else invert(sol)


def _shorten_with(r: Word, s: Word, cap: int) -> Word:
    """Replace a long subword of r matching more than half of a cyclic
    rotation of s (or s^-1) with the complementary shorter word."""
    best = r
    n = len(s)
    if n < 2:
        return best
    variants = []
    for cand in (s, invert(s)):
        doubled = cand.letters + cand.letters
        for start in range(n):
            variants.append(doubled[start:start + n])
    half = n // 2 + 1
    changed = True
    while changed and len(best) <= cap:
        changed = False
        for rot in variants:
            for piece_len in range(n - 1, half - 1, -1):
                piece = rot[:piece_len]
                repl = tuple((lab, -sg) for lab, sg in reversed(rot[piece_len:]))
                letters = best.letters
                for k in range(len(letters) - piece_len + 1):
                    if letters[k:k + piece_len] == piece:
                        cand = Word(letters[:k] + repl + letters[k + piece_len:])
                        cand = cyclic_reduce(cand)
                        if len(cand) < len(best):
                            best = cand
                            changed = True
                        break
                if changed:
                    break
            if changed:
                break
    return best


def tietze_simplify(p: Presentation, max_passes: int = 50,
                    length_cap_factor: int = 4) -> TietzeResult:
    """Eliminate redundant generators and shorten relators.

    Deterministic; every move is an elementary Tietze transformation, so the
    isomorphism type is preserved (tested via fingerprints). Returns the
    best presentation found within the pass budget.
    """
    gens = list(p.generators)
    relators = list(p.relators)
    cap = max(4, length_cap_factor * max((len(r) for r in relators), default=0))
    passes = 0
    exhausted = False
    while True:
        if passes >= max_passes:
            exhausted = True
            break
        passes += 1
        changed = False
        # (a) reduce + dedupe (up to rotation and inversion) + drop trivial
        seen = set()
        cleaned = []
        for r in relators:
            r = cyclic_reduce(r)
            key = _canonical_cyclic(r)
            if not key or key in seen:
                changed = changed or bool(r) or key in seen
                continue
            seen.add(key)
            cleaned.append(r)
        if len(cleaned) != len(relators):
            changed = True
        relators = cleaned
        # (b) eliminate a generator occurring exactly once in some relator;
        # primed (conic) generators go first, then shortest defining relator.
        candidates = []
        for ridx, r in enumerate(relators):
            occurrences = {}
            for lab, _ in r.letters:
                occurrences[lab] = occurrences.get(lab, 0) + 1
            for lab, cnt in occurrences.items():
                if cnt == 1:
                    primed = 0 if lab.endswith("p") else 1
                    candidates.append((primed, len(r), lab, ridx))
        if candidates:
            candidates.sort()
            _, _, label, ridx = candidates[0]
            image = _solve_generator(relators[ridx], label)
            relators = [_substitute(r, label, image)
                        for k, r in enumerate(relators) if k != ridx]
            gens = [g for g in gens if g.label != label]
            changed = True
        else:
            # (c) bounded shortening of relators against each other
            for i in range(len(relators)):
                for j in range(len(relators)):
                    if i == j:
                        continue
                    shorter = _shorten_with(relators[i], relators[j], cap)
                    if len(shorter) < len(relators[i]):
                        relators[i] = shorter
                        changed = True
        if not changed:
            break
    out = Presentation(tuple(gens), tuple(relators))
    return TietzeResult(out, passes, exhausted)


# --------------------------------------------------------------------------
# homomorphism counting
# --------------------------------------------------------------------------


def count_homs(p: Presentation, target: FiniteGroup) -> int:
    """Number of homomorphisms into `target`: assignments generator -> element
    under which every relator evaluates to the identity. Backtracking search;
    each relator is checked as soon as all its generators are assigned."""
    labels = [g.label for g in p.generators]
    k = len(labels)
    if k == 0:
        return 1 if all(not r for r in p.relators) else 0
    # order generators greedily so short relators close early
    rel_labels = [frozenset(lab for lab, _ in r.letters) for r in p.relators]
    order: list[str] = []
    remaining = set(labels)
    while remaining:
        def fire_score(lab):
            fired = sum(1 for ls in rel_labels
                        if lab in ls and ls <= set(order) | {lab})
            return (-fired, labels.index(lab))
        nxt = min(remaining, key=fire_score)
        order.append(nxt)
        remaining.discard(nxt)
    pos = {lab: i for i, lab in enumerate(order)}
    compiled = []  # (depth, letters as (pos, sign))
    for r in p.relators:
        if not r:
            continue
        lets = tuple((pos[lab], sign) for lab, sign in r.letters)
        depth = max(px for px, _ in lets)
        compiled.append((depth, lets))
    by_depth: list[list[tuple]] = [[] for _ in range(k)]
    for depth, lets in compiled:
        by_depth[depth].append(lets)
    mult, inv, ident = target.mult, target.inv, target.identity
    order_n = target.order
    assignment = [0] * k
    total = 0

    def evaluate(lets) -> int:
        acc = ident
        for px, sign in lets:
            e = assignment[px]
            acc = mult[acc][e if sign > 0 else inv[e]]
        return acc

    def descend(depth: int):
        nonlocal total
        for e in range(order_n):
            assignment[depth] = e
            if all(evaluate(lets) == ident for lets in by_depth[depth]):
                if depth + 1 == k:
                    total += 1
                else:
                    descend(depth + 1)

    descend(0)
    return total


def count_homs_bruteforce(p: Presentation, target: FiniteGroup) -> int:
    """Plain |G|^g enumeration; the oracle count_homs must agree with."""
    labels = [g.label for g in p.generators]
    mult, inv, ident = target.mult, target.inv, target.identity
    total = 0
    for combo in itertools.product(range(target.order), repeat=len(labels)):
        assign = dict(zip(labels, combo))
        ok = True
        for r in p.relators:
            acc = ident
            for lab, sign in r.letters:
                e = assign[lab]
                acc = mult[acc][e if sign > 0 else inv[e]]
            if acc != ident:
                ok = False
                break
        if ok:
            total += 1
    return total


# --------------------------------------------------------------------------
# fingerprints and comparison
# --------------------------------------------------------------------------

S4_GENERATOR_LIMIT = 6


@dataclass(frozen=True)
class Fingerprint:
    counts: dict[str, int] = field(default_factory=dict)
    skipped: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {"counts": dict(self.counts), "skipped": list(self.skipped)}


def fingerprint(p: Presentation, battery=None) -> Fingerprint:
    """Hom counts into each battery group. The input is Tietze-simplified
    first (hom counts are presentation-independent); S4 is skipped when more
    than six generators survive simplification."""
    names = tuple(battery) if battery else DEFAULT_BATTERY
    q = tietze_simplify(p).presentation
    counts = {}
    skipped = []
    for name in names:
        group = BATTERY[name]
        if name == "S4" and len(q.generators) > S4_GENERATOR_LIMIT:
            skipped.append(name)
            continue
        counts[name] = count_homs(q, group)
    return Fingerprint(counts, tuple(skipped))


@dataclass(frozen=True)
class CompareReport:
    per_target: dict[str, tuple[int, int]]
    verdict: str  # "consistent" | "distinguished"
    skipped: tuple[str, ...] = ()

    @property
    def consistent(self) -> bool:
        return self.verdict == "consistent"

    def to_json(self) -> dict:
        return {"per_target": {k: list(v) for k, v in self.per_target.items()},
                "verdict": self.verdict, "skipped": list(self.skipped)}


def compare(p1: Presentation, p2: Presentation, battery=None) -> CompareReport:
    f1 = fingerprint(p1, battery)
    f2 = fingerprint(p2, battery)
    shared = [k for k in f1.counts if k in f2.counts]
    per = {k: (f1.counts[k], f2.counts[k]) for k in shared}
    verdict = "consistent" if all(a == b for a, b in per.values()) else "distinguished"
    skipped = tuple(sorted(set(f1.skipped) | set(f2.skipped)))
    return CompareReport(per, verdict, skipped)


# --------------------------------------------------------------------------
# randomized presentations (test support)
# --------------------------------------------------------------------------


def random_presentation(rng: random.Random, max_gens: int = 3,
                        max_relators: int = 3, max_len: int = 6) -> Presentation:
    k = rng.randint(1, max_gens)
    labels = [f"g{i}" for i in range(1, k + 1)]
    rels = []
    for _ in range(rng.randint(0, max_relators)):
        letters = tuple((rng.choice(labels), rng.choice((1, -1)))
                        for _ in range(rng.randint(1, max_len)))
        rels.append(Word(letters))
    return presentation(labels, rels)

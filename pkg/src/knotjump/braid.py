"""Braid words, knot closures, and Seifert matrices of the closure surface.

A braid word is a sequence of nonzero integers: letter +i is the positive
crossing of strands i and i+1, letter -i its inverse.  Applying Seifert's
algorithm to the closed-braid diagram gives one disk per strand and one band
per letter, so the surface deformation-retracts to a graph whose independent
loops are the pairs of consecutive occurrences of the same letter index.  The
Seifert linking form is then local: a loop self-links through the writhe of
its two bands, consecutive loops in one column interact through their shared
band, and loops in adjacent columns interact exactly when their bands
interleave along the braid axis.  The resulting matrix V satisfies
det(V - V^T) = 1 for every knot closure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

# Linking contributions of the local band patterns, as (V[a][b], V[b][a]) for
# loop a in the lower column (or earlier loop within one column).  Pinned by
# matching the Alexander polynomial of every braid in a corpus that includes
# dense interleave patterns (torus braids on up to 5 strands) against the
# reduced Burau determinant formula; the freedoms left over (a global
# transpose and a column-parity diagonal congruence) change no invariant and
# are fixed by the hand-checked trefoil and figure-eight matrices
# [[-1,1],[0,-1]] and [[-1,0],[-1,1]].
_SHARED_POS = (1, 0)  # consecutive loops in one column, shared band positive
_SHARED_NEG = (0, -1)  # consecutive loops in one column, shared band negative
_INTERLEAVE_DOWN = (0, -1)  # column-g loop starts first: p1 < q1 < p2 < q2
_INTERLEAVE_UP = (0, 1)  # column-(g+1) loop starts first: q1 < p1 < q2 < p2


@dataclass(frozen=True)
class BraidWord:
    """An element of the braid group, given by its letter sequence.

    >>> BraidWord((1, 1, 1)).strands
    2
    >>> BraidWord.parse("[-1,3,3,3,2,1,1,-3,2]").strands
    4
    """

    letters: tuple[int, ...]

    def __post_init__(self):
        if not self.letters:
            raise ValueError("braid word must contain at least one letter")
        for k, letter in enumerate(self.letters):
            if not isinstance(letter, int) or letter == 0:
                raise ValueError(f"letter {k} is {letter!r}; letters are nonzero integers")

    @classmethod
    def parse(cls, text: str) -> "BraidWord":
        body = text.strip()
        if body.startswith("[") and body.endswith("]"):
            body = body[1:-1]
        try:
            letters = tuple(int(tok) for tok in body.split(",") if tok.strip())
        except ValueError as exc:
            raise ValueError(f"cannot parse braid word {text!r}") from exc
        return cls(letters)

    @property
    def strands(self) -> int:
        return max(abs(letter) for letter in self.letters) + 1

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return "[" + ",".join(str(letter) for letter in self.letters) + "]"

    # -- closure combinatorics -------------------------------------------

    def permutation(self) -> tuple[int, ...]:
        """Position mapping of the closure: entry i is the top label at bottom slot i."""
        state = list(range(self.strands))
        for letter in self.letters:
            g = abs(letter) - 1
            state[g], state[g + 1] = state[g + 1], state[g]
        return tuple(state)

    def closure_components(self) -> int:
        perm = self.permutation()
        seen = [False] * len(perm)
        count = 0
        for start in range(len(perm)):
            if seen[start]:
                continue
            count += 1
            i = start
            while not seen[i]:
                seen[i] = True
                i = perm[i]
        return count

    def is_knot_closure(self) -> bool:
        return self.closure_components() == 1

    # -- elementary moves -------------------------------------------------

    def flip_crossing(self, pos: int) -> "BraidWord":
        """Change the crossing at index pos to its opposite sign."""
        if not 0 <= pos < len(self.letters):
            raise ValueError(f"crossing index {pos} out of range for word of length {len(self)}")
        out = list(self.letters)
        out[pos] = -out[pos]
        return BraidWord(tuple(out))

    def mirror(self) -> "BraidWord":
        """Braid whose closure is the mirror image: every crossing flipped."""
        return BraidWord(tuple(-letter for letter in self.letters))

    def insert_trivial_pair(self, pos: int, gen: int) -> "BraidWord":
        """Insert the cancelling pair (gen, -gen) before index pos.

        This is a Reidemeister II move on the closure: the knot is unchanged.
        """
        if not 0 <= pos <= len(self.letters):
            raise ValueError(f"insertion index {pos} out of range for word of length {len(self)}")
        if not 1 <= gen <= self.strands - 1:
            raise ValueError(f"generator {gen} out of range for {self.strands} strands")
        out = self.letters[:pos] + (gen, -gen) + self.letters[pos:]
        return BraidWord(out)


@dataclass(frozen=True)
class IntMatrix:
    """Small square integer matrix; immutable, exact."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        for row in self.rows:
            if len(row) != n:
                raise ValueError("matrix must be square")
            for v in row:
                if not isinstance(v, int):
                    raise ValueError(f"matrix entries must be int, got {v!r}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "IntMatrix":
        return cls(tuple(tuple(int(v) for v in row) for row in rows))

    @classmethod
    def zeros(cls, n: int) -> "IntMatrix":
        return cls(tuple((0,) * n for _ in range(n)))

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.rows[ij[0]][ij[1]]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.rows))) if self.rows else self

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(tuple(tuple(-v for v in row) for row in self.rows))

    def direct_sum(self, other: "IntMatrix") -> "IntMatrix":
        n, m = self.n, other.n
        top = tuple(row + (0,) * m for row in self.rows)
        bottom = tuple((0,) * n + row for row in other.rows)
        return IntMatrix(top + bottom)


def seifert_matrix(b: BraidWord) -> IntMatrix:
    """Seifert matrix of the knot obtained by closing the braid.

    The loop basis is ordered by column (generator index), then by position of
    the loop's first band, which makes the output deterministic.  Raises
    ValueError when the closure has more than one component.
    """
    components = b.closure_components()
    if components != 1:
        raise ValueError(
            f"braid closure has {components} components; a Seifert matrix needs a knot"
        )
    occurrences: dict[int, list[tuple[int, int]]] = {}
    for pos, letter in enumerate(b.letters):
        occurrences.setdefault(abs(letter), []).append((pos, 1 if letter > 0 else -1))
    loops: list[tuple[int, tuple[int, int], tuple[int, int]]] = []
    for col in sorted(occurrences):
        hits = occurrences[col]
        for first, second in zip(hits, hits[1:]):
            loops.append((col, first, second))
    size = len(loops)
    V = [[0] * size for _ in range(size)]
    for a, (col_a, (p1, e1), (p2, e2)) in enumerate(loops):
        V[a][a] = -(e1 + e2) // 2
        for bb in range(a + 1, size):
            col_b, (q1, f1), (q2, f2) = loops[bb]
            if col_b == col_a:
                if q1 == p2:
                    # consecutive loops share the middle band of sign e2
                    pair = _SHARED_POS if e2 > 0 else _SHARED_NEG
                    V[a][bb] += pair[0]
                    V[bb][a] += pair[1]
            elif col_b == col_a + 1:
                if p1 < q1 < p2 < q2:
                    V[a][bb] += _INTERLEAVE_DOWN[0]
                    V[bb][a] += _INTERLEAVE_DOWN[1]
                elif q1 < p1 < q2 < p2:
                    V[a][bb] += _INTERLEAVE_UP[0]
                    V[bb][a] += _INTERLEAVE_UP[1]
    return IntMatrix.from_rows(V)

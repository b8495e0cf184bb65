"""Skein-theoretic computation of signature jumps via good crossings.

Flipping one crossing relates the signatures of the two resulting knots: at a
unit-circle point where neither Alexander polynomial vanishes, the signature
of the negatively-resolved knot exceeds that of the positively-resolved one
by 2 exactly when the product of the two Alexander values is negative, and by
0 otherwise.  A crossing is "good" for a root rho of Delta(K) when the knot
obtained by flipping it has Alexander polynomial nonvanishing at rho; across
such a crossing the jump of the signature function of K at rho collapses to a
product of exact one-sided sign data.  This module finds good crossings
(threading in cancelling crossing pairs when no existing crossing works),
evaluates the jump formula, and provides randomized verifiers for the two
underlying lemmas: the crossing-change signature comparison on braid closures
and its linear-algebra core on bordered Hermitian triples.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .braid import BraidWord, seifert_matrix
from .invariants import DegenerateEvaluation, EIG_GUARD, alexander, signature_at
from .sympoly import AlgebraicRoot, SymPoly, sign_at, theta_sign


class SearchExhausted(Exception):
    """No good crossing was found within the threading depth budget."""


@dataclass(frozen=True)
class GoodProjection:
    """A crossing whose flip has nonvanishing Alexander value at the root.

    `braid` closes to the knot under study (possibly after threading, which
    does not change the closure); `pos` indexes the chosen crossing, of sign
    `epsilon`; flipping it yields a knot whose Alexander polynomial
    `flipped_delta` is nonzero at `root`.  `insertions` records the threading
    moves that produced `braid` from the original word, for reporting.
    """

    braid: BraidWord
    pos: int
    epsilon: int
    root: AlgebraicRoot
    delta: SymPoly
    flipped_delta: SymPoly
    insertions: tuple[tuple[int, int], ...] = ()


def _delta_of(word: BraidWord, cache: dict) -> SymPoly:
    hit = cache.get(word.letters)
    if hit is None:
        hit = alexander(seifert_matrix(word))
        cache[word.letters] = hit
    return hit


def _scan(word: BraidWord, root: AlgebraicRoot, delta: SymPoly, insertions, cache):
    found = []
    for pos in range(len(word)):
        flipped = word.flip_crossing(pos)
        fd = _delta_of(flipped, cache)
        if sign_at(fd, root) != 0:
            eps = 1 if word.letters[pos] > 0 else -1
            found.append(GoodProjection(word, pos, eps, root, delta, fd, insertions))
    return found


def good_crossings(b: BraidWord, root: AlgebraicRoot) -> list[GoodProjection]:
    """All good crossings of the word itself (no threading), left to right."""
    delta = _require_simple_root(b, root)
    return _scan(b, root, delta, (), {})


def _require_simple_root(b: BraidWord, root: AlgebraicRoot) -> SymPoly:
    delta = alexander(seifert_matrix(b))
    if delta.degree < 1:
        raise ValueError(
            "the closure has constant Alexander polynomial, so its signature never jumps"
        )
    order, _ = theta_sign(delta, root)
    if order == 0:
        raise ValueError("the given point is not a root of the Alexander polynomial")
    if order != 1:
        raise ValueError(f"root has multiplicity {order}; the jump formula needs a simple root")
    return delta


def make_good(b: BraidWord, root: AlgebraicRoot, max_depth: int = 2) -> GoodProjection:
    """Find a good crossing for `root`, threading up to `max_depth` pairs.

    Scans the existing crossings left to right first; when none is good,
    performs a breadth-first search over cancelling-pair insertions (ordered
    by position, then generator), re-scanning after every insertion.  The
    first hit in this deterministic order is returned.
    """
    delta = _require_simple_root(b, root)
    cache: dict = {}
    queue = deque([(b, ())])
    seen = {b.letters}
    while queue:
        word, insertions = queue.popleft()
        found = _scan(word, root, delta, insertions, cache)
        if found:
            return found[0]
        if len(insertions) >= max_depth:
            continue
        for pos in range(len(word) + 1):
            for gen in range(1, word.strands):
                child = word.insert_trivial_pair(pos, gen)
                if child.letters not in seen:
                    seen.add(child.letters)
                    queue.append((child, insertions + ((pos, gen),)))
    raise SearchExhausted(
        f"no good crossing for {b} within {max_depth} threading insertions"
    )


def skein_jump(good: GoodProjection) -> int:
    """Signature jump at the root from the good-crossing product formula.

    The value is 2 * epsilon * sgn(Delta(K), root) * sgn(Delta(flip), root),
    where each sgn is the sign of the first nonvanishing derivative with the
    orientation of the circle taken into account.  The flipped side has order
    0 by goodness; the K side must have order 1 (simple root), so the result
    is always +2 or -2.
    """
    k_order, k_sign = theta_sign(good.delta, good.root)
    f_order, f_sign = theta_sign(good.flipped_delta, good.root)
    if k_order != 1:
        raise ValueError(f"root has multiplicity {k_order} on the knot side; need 1")
    if f_order != 0:
        raise ValueError("projection is not good: flipped-side Alexander vanishes at the root")
    return 2 * good.epsilon * k_sign * f_sign


def verify_lemma_skeins(b: BraidWord, pos: int, s, dps: int = 30) -> bool:
    """Check the crossing-change signature comparison at one circle point.

    For the two closures differing in the crossing at `pos` (K+ with it
    positive, K- with it negative), returns whether
    sigma_s(K-) - sigma_s(K+) equals 2 when Delta(K+)Delta(K-) < 0 at
    t = e^{2 pi i s}, and 0 when the product is positive.  Raises ValueError
    when either Alexander value is too close to zero to sign safely.
    """
    if not 0 <= pos < len(b):
        raise ValueError(f"crossing index {pos} out of range for word of length {len(b)}")
    letter = b.letters[pos]
    plus_word = b if letter > 0 else b.flip_crossing(pos)
    minus_word = b.flip_crossing(pos) if letter > 0 else b
    v_plus = seifert_matrix(plus_word)
    v_minus = seifert_matrix(minus_word)
    val_plus = alexander(v_plus).eval_turn(s, dps)
    val_minus = alexander(v_minus).eval_turn(s, dps)
    for name, val in (("K+", val_plus), ("K-", val_minus)):
        if abs(val) < 1e-9:
            raise ValueError(f"Alexander value of {name} at turn {s} is within 1e-9 of zero")
    sig_plus = signature_at(v_plus, s)
    sig_minus = signature_at(v_minus, s)
    expected = 2 if val_plus * val_minus < 0 else 0
    return sig_minus - sig_plus == expected


# ---- bordered Hermitian triples --------------------------------------------

def _cmul(z, w):
    return (z[0] * w[0] - z[1] * w[1], z[0] * w[1] + z[1] * w[0])


def _cdet(M) -> tuple:
    """Determinant of a square matrix of Gaussian integers, by expansion."""
    n = len(M)
    if n == 0:
        return (1, 0)
    if n == 1:
        return M[0][0]
    total = (0, 0)
    for j in range(n):
        z = M[0][j]
        if z == (0, 0):
            continue
        minor = [[row[jj] for jj in range(n) if jj != j] for row in M[1:]]
        term = _cmul(z, _cdet(minor))
        if j % 2:
            term = (-term[0], -term[1])
        total = (total[0] + term[0], total[1] + term[1])
    return total


def _hermitian_signature(H: np.ndarray) -> int:
    eigs = np.linalg.eigvalsh(H)
    scale = float(np.max(np.abs(eigs))) if eigs.size else 0.0
    if scale == 0.0 or float(np.min(np.abs(eigs))) <= EIG_GUARD * scale:
        raise DegenerateEvaluation("eigenvalue too close to zero to sign")
    return int(np.sum(eigs > 0) - np.sum(eigs < 0))


def verify_lemma_tbordered(n: int, trials: int, seed: int = 20240822) -> bool:
    """Randomized check of the bordered-Hermitian determinant/signature law.

    Draws Hermitian A0 of size n with Gaussian-integer entries in [-5, 5],
    a Gaussian-integer row v, an integer corner a, and a rational cos(theta)
    in (-1, 1); forms the (n+1)-square Hermitian matrices A+ (corner a) and
    A- (corner a + 2 - 2cos(theta)).  Whenever both determinants are nonzero
    (computed exactly: the corner enters det linearly, so
    det(A-) = det(A+) + (2-2cos(theta)) det(A0) with both summand dets
    integers), checks sigma(A-) - sigma(A+) = 2 if det(A+)det(A-) < 0 else 0.
    Degenerate draws (a zero determinant, or eigenvalues too small to sign
    reliably) are re-sampled.  Returns True when all `trials` checks pass.
    """
    if n < 0:
        raise ValueError("dimension must be nonnegative")
    rng = random.Random(seed * 1000003 + n)
    done = 0
    while done < trials:
        a0 = [[(0, 0)] * n for _ in range(n)]
        for i in range(n):
            a0[i][i] = (rng.randint(-5, 5), 0)
            for j in range(i + 1, n):
                re, im = rng.randint(-5, 5), rng.randint(-5, 5)
                a0[i][j] = (re, im)
                a0[j][i] = (re, -im)
        v = [(rng.randint(-5, 5), rng.randint(-5, 5)) for _ in range(n)]
        a = rng.randint(-5, 5)
        u = 2 - 2 * Fraction(rng.randint(-99, 99), 100)

        a_plus = [[(a, 0)] + v] + [
            [(v[i][0], -v[i][1])] + a0[i] for i in range(n)
        ]
        det_plus = _cdet(a_plus)
        det_zero = _cdet(a0)
        if det_plus[1] != 0 or det_zero[1] != 0:
            raise ArithmeticError("Hermitian determinant came out non-real")
        det_minus = det_plus[0] + u * det_zero[0]
        if det_plus[0] == 0 or det_minus == 0:
            continue

        H = np.array(
            [[complex(z[0], z[1]) for z in row] for row in a_plus], dtype=complex
        )
        try:
            sig_plus = _hermitian_signature(H)
            H_minus = H.copy()
            H_minus[0, 0] += float(u)
            sig_minus = _hermitian_signature(H_minus)
        except DegenerateEvaluation:
            continue
        expected = 2 if det_plus[0] * det_minus < 0 else 0
        if sig_minus - sig_plus != expected:
            return False
        done += 1
    return True

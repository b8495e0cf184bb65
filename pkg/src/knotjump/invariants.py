"""Alexander polynomials, circle signatures, and signature jump divisors.

For a Seifert matrix V the Alexander polynomial is det(tV - V^T), computed
fraction-free over Z[t] (Bareiss elimination), symmetrized by t^{-g}, and
rewritten in x = t - 2 + 1/t, normalized so the value at t = 1 is +1.  The
signature at a circle point t is the signature of the Hermitian matrix
B(t) = (1-t)V + (1-conj(t))V^T; it is constant between roots of the Alexander
polynomial and its jumps across those roots form the jump divisor.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .braid import IntMatrix
from .sympoly import DEFAULT_DPS, AlgebraicRoot, SymPoly, isolate_roots

EIG_GUARD = 1e-9


class DegenerateEvaluation(Exception):
    """The Hermitian form is numerically singular at the requested circle point."""


# -- dense polynomials over Z[t], ascending coefficients, () is zero -------


def _zp_trim(p: list[int]) -> tuple[int, ...]:
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def _zp_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, av in enumerate(a):
        if av:
            for j, bv in enumerate(b):
                out[i + j] += av * bv
    return _zp_trim(out)


def _zp_sub(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for j, bv in enumerate(b):
        out[j] -= bv
    return _zp_trim(out)


def _zp_div_exact(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return ()
    rem = list(a)
    db, lead = len(b) - 1, b[-1]
    dq = len(a) - 1 - db
    if dq < 0:
        raise ValueError("inexact polynomial division")
    quo = [0] * (dq + 1)
    for k in range(len(rem) - 1, db - 1, -1):
        if rem[k] == 0:
            continue
        q, r = divmod(rem[k], lead)
        if r:
            raise ValueError("inexact polynomial division")
        quo[k - db] = q
        for j in range(db + 1):
            rem[k - db + j] -= q * b[j]
    if any(rem[:db] if db else []):
        raise ValueError("inexact polynomial division")
    return _zp_trim(quo)


def _poly_det_bareiss(M: list[list[tuple[int, ...]]]) -> tuple[int, ...]:
    n = len(M)
    if n == 0:
        return (1,)
    sign = 1
    prev: tuple[int, ...] = (1,)
    for k in range(n - 1):
        if not M[k][k]:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return ()
        pivot = M[k][k]
        for i in range(k + 1, n):
            row_i = M[i]
            lik = row_i[k]
            row_k = M[k]
            for j in range(k + 1, n):
                num = _zp_sub(_zp_mul(pivot, row_i[j]), _zp_mul(lik, row_k[j]))
                row_i[j] = _zp_div_exact(num, prev) if num else ()
        prev = pivot
    out = M[n - 1][n - 1]
    return out if sign == 1 else tuple(-c for c in out)


def _int_det_bareiss(rows: list[list[int]]) -> int:
    n = len(rows)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for i in range(k + 1, n):
                if rows[i][k]:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = (rows[k][k] * rows[i][j] - rows[i][k] * rows[k][j]) // prev
        prev = rows[k][k]
    return sign * rows[n - 1][n - 1]


def alexander(V: IntMatrix) -> SymPoly:
    """Symmetrized Alexander polynomial of the knot with Seifert matrix V, in x.

    Normalized so the value at x = 0 (that is, t = 1) equals +1.  The input is
    validated through det(V - V^T), which is 1 exactly for Seifert matrices of
    knots; anything else is rejected.
    """
    n = V.n
    if n == 0:
        return SymPoly.one()
    skew = [[V.rows[i][j] - V.rows[j][i] for j in range(n)] for i in range(n)]
    d = _int_det_bareiss(skew)
    if d != 1:
        raise ValueError(f"det(V - V^T) = {d}; not a Seifert matrix of a knot")
    M = [
        [
            _zp_trim([-V.rows[j][i], V.rows[i][j]])
            for j in range(n)
        ]
        for i in range(n)
    ]
    f = _poly_det_bareiss(M)
    g = n // 2
    p = SymPoly.from_t({k - g: c for k, c in enumerate(f) if c})
    value_at_one = p.eval_exact(0)
    if value_at_one == -1:
        p = -p
    elif value_at_one != 1:
        raise ValueError("Alexander normalization failed; invalid Seifert matrix")
    return p


def signature_at(V: IntMatrix, s) -> int:
    """Signature of B(t) = (1-t)V + (1-conj(t))V^T at t = exp(2*pi*i*s).

    Requires 0 < s <= 1/2 and a point where B is nonsingular; a near-zero
    eigenvalue below the relative guard raises DegenerateEvaluation instead of
    returning an unreliable count.
    """
    s_val = float(s) if not isinstance(s, Fraction) else s.numerator / s.denominator
    if not 0 < s_val <= 0.5:
        raise ValueError(f"turn {s_val} outside (0, 1/2]")
    if V.n == 0:
        return 0
    t = np.exp(2j * np.pi * s_val)
    A = np.array(V.rows, dtype=complex)
    B = (1 - t) * A + (1 - np.conj(t)) * A.T
    eigs = np.linalg.eigvalsh(B)
    scale = float(np.max(np.abs(eigs))) if eigs.size else 0.0
    if scale == 0.0 or float(np.min(np.abs(eigs))) < EIG_GUARD * scale:
        raise DegenerateEvaluation(f"Hermitian form numerically singular at turn {s_val}")
    return int(np.sum(eigs > 0) - np.sum(eigs < 0))


@dataclass(frozen=True)
class JumpEntry:
    root: AlgebraicRoot
    jump: int


@dataclass(frozen=True)
class JumpDivisor:
    """Finitely many circle roots with integer weights, ordered by turn."""

    entries: tuple[JumpEntry, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def jumps(self) -> tuple[int, ...]:
        return tuple(e.jump for e in self.entries)

    def total(self) -> int:
        """Sum of all weights; for a jump divisor this is the signature at t = -1."""
        return sum(e.jump for e in self.entries)

    def value_at(self, root: AlgebraicRoot) -> int:
        for e in self.entries:
            if e.root.same_root(root):
                return e.jump
        return 0

    def matches(self, other: "JumpDivisor") -> bool:
        """Equality as divisors: same roots (as real numbers) with equal weights."""
        if len(self.entries) != len(other.entries):
            return False
        return all(
            a.jump == b.jump and a.root.same_root(b.root)
            for a, b in zip(self.entries, other.entries)
        )


def _turn_floats(roots: list[AlgebraicRoot]) -> list[float]:
    return [float(r.turn(25)) for r in roots]


def _gap_delta(turns: list[float]) -> float:
    cuts = [0.0] + turns + [0.5]
    gap = min(b - a for a, b in zip(cuts, cuts[1:]))
    return min(1e-3, gap / 4)


def jumps_at_roots(V: IntMatrix, roots: list[AlgebraicRoot]) -> JumpDivisor:
    """Jump divisor of V supported on the given (pre-isolated) circle roots."""
    if not roots:
        return JumpDivisor(())
    refined = [r.refine(18) for r in roots]
    turns = _turn_floats(refined)
    delta = _gap_delta(turns)
    entries = []
    for root, s0 in zip(refined, turns):
        for factor in (1.0, 1.5, 0.5, 0.25):
            d = delta * factor
            try:
                jump = signature_at(V, s0 + d) - signature_at(V, s0 - d)
                break
            except DegenerateEvaluation:
                continue
        else:
            raise DegenerateEvaluation(
                f"could not find a regular evaluation point near turn {s0}"
            )
        entries.append(JumpEntry(root, jump))
    return JumpDivisor(tuple(entries))


def jump_divisor(V: IntMatrix) -> JumpDivisor:
    """Signature jump divisor on the open upper semicircle, ordered by turn."""
    delta = alexander(V)
    if delta.degree < 1:
        return JumpDivisor(())
    return jumps_at_roots(V, isolate_roots(delta))


def signature_samples(V: IntMatrix, n: int) -> list[tuple[float, int]]:
    """Sampled signature steps over (0, 1/2], ready for step plotting.

    Returns sorted (turn, signature) pairs: n grid midpoints nudged off the
    Alexander roots, one midpoint inside every gap between consecutive roots,
    and the endpoint 1/2 whose value is the classical signature.
    """
    if n < 1:
        raise ValueError("need at least one sample")
    delta = alexander(V)
    roots = isolate_roots(delta) if delta.degree >= 1 else []
    turns = _turn_floats([r.refine(12) for r in roots])
    delta_s = _gap_delta(turns) if turns else 0.125
    points: set[float] = {0.5}
    cuts = [0.0] + turns + [0.5]
    for a, b in zip(cuts, cuts[1:]):
        points.add((a + b) / 2)
    for i in range(n):
        s = (2 * i + 1) / (4 * n)
        for t0 in turns:
            if abs(s - t0) < delta_s:
                s = t0 - delta_s if s < t0 else t0 + delta_s
                break
        if 0 < s <= 0.5:
            points.add(s)
    out = []
    for s in sorted(points):
        try:
            out.append((s, signature_at(V, s)))
        except DegenerateEvaluation:
            continue
    return out

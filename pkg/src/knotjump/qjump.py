"""Jump divisors predicted from polynomial data, and the conjecture checker.

For a knot with simple Alexander roots on the unit circle, the ratio
Q(t) = P(t) / delta(t)^2 built from a second symmetric polynomial P has a
Laurent expansion c * (s - s0)^m + ... at each root turn s0.  The predicted
jump there is sign(c) * max(0, -m) on the upper semicircle, and the
conjecture under test is that this equals the signature jump.  The order m
and the sign of c are computed exactly (no tolerances) through `theta_sign`;
only the optional numeric value of c uses big-float evaluation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .braid import BraidWord, seifert_matrix
from .invariants import JumpDivisor, JumpEntry, alexander, jumps_at_roots, signature_at
from .sympoly import (
    DEFAULT_DPS,
    AlgebraicRoot,
    SymPoly,
    isolate_roots,
    mp_context,
    sign_at,
    theta_sign,
)

STATUS_MATCH = "MATCH"
STATUS_MISMATCH = "MISMATCH"
STATUS_NOT_SIMPLE = "NOT_SIMPLE"
STATUS_NO_P_DATA = "NO_P_DATA"
STATUS_VACUOUS = "VACUOUS"


class NonSimpleRoot(Exception):
    """A circle root of the Alexander polynomial has multiplicity above one."""


class CatalogError(ValueError):
    """A knot catalog file is malformed or internally inconsistent."""


@dataclass(frozen=True)
class LaurentLeading:
    """Leading Laurent behavior of P/delta^2 along the circle at one root.

    `order` is the exponent of the leading term in (s - s0); None encodes
    +infinity (P vanishes identically).  `sign` is the exact sign of the
    leading coefficient, and `numeric_c` its big-float value when order = -2.
    """

    order: int | None
    sign: int
    numeric_c: object | None = None


@dataclass(frozen=True)
class KnotRecord:
    name: str
    braid: BraidWord
    delta: SymPoly | None = None
    p1: SymPoly | None = None


@dataclass(frozen=True)
class RootRow:
    root: AlgebraicRoot
    multiplicity: int
    j: int | None
    jj: int | None
    numeric_c: object | None = None
    note: str = ""


@dataclass(frozen=True)
class KnotCheck:
    name: str
    status: str
    rows: tuple[RootRow, ...]
    delta: SymPoly
    sigma_classical: int
    sigma_from_jj: int | None


def parallel_pullback(p: SymPoly, n: int) -> SymPoly:
    """The polynomial t -> p(t^n), exactly, in the x coordinate.

    Roots pull back along s -> n*s: each root turn s0 acquires the preimages
    (k +/- s0)/n inside (0, 1/2).
    """
    if n < 1:
        raise ValueError("pullback index must be positive")
    return SymPoly.from_t({n * k: v for k, v in p.to_t().items()})


def _require_simple(delta: SymPoly, root: AlgebraicRoot) -> None:
    order, _ = theta_sign(delta, root)
    if order == 0:
        raise ValueError("the given point is not a root of delta")
    if order > 1:
        raise NonSimpleRoot(f"root has multiplicity {order}")


def _numeric_c(delta: SymPoly, p1: SymPoly, root: AlgebraicRoot, dps: int):
    ctx = mp_context(dps + 15)
    refined = root.refine(dps + 10)
    x0 = (ctx.mpf(refined.lo.numerator) / refined.lo.denominator
          + ctx.mpf(refined.hi.numerator) / refined.hi.denominator) / 2
    s0 = ctx.acos(1 + x0 / 2) / (2 * ctx.pi)
    num = _horner(ctx, p1, x0)
    dds = _horner(ctx, delta.derivative(), x0) * (-4 * ctx.pi * ctx.sin(2 * ctx.pi * s0))
    c = num / dds**2
    out = mp_context(dps)
    return +out.mpf(c)


def _horner(ctx, p: SymPoly, x):
    acc = ctx.mpf(0)
    for coeff in reversed(p.coeffs):
        acc = acc * x + ctx.mpf(coeff.numerator) / coeff.denominator
    return acc


def laurent_leading(
    delta: SymPoly, p1: SymPoly, root: AlgebraicRoot, dps: int = DEFAULT_DPS
) -> LaurentLeading:
    """Order and exact coefficient sign of P/delta^2 at a simple circle root.

    The order is ord(P) - 2 in the local parameter s - s0.  The coefficient
    sign equals the theta-sign of P because the squared denominator is
    positive; the numeric value is evaluated only for a genuine double pole.
    """
    _require_simple(delta, root)
    if p1.is_zero():
        return LaurentLeading(None, 0, None)
    k, sgn = theta_sign(p1, root)
    order = k - 2
    numeric = _numeric_c(delta, p1, root, dps) if order == -2 else None
    return LaurentLeading(order, sgn, numeric)


def _jj_at_roots(
    delta: SymPoly, p1: SymPoly, roots: list[AlgebraicRoot], dps: int
) -> tuple[JumpDivisor, list[LaurentLeading]]:
    entries = []
    leadings = []
    for root in roots:
        if root.multiplicity > 1:
            raise NonSimpleRoot(
                f"delta has a root of multiplicity {root.multiplicity} on the circle"
            )
        lead = laurent_leading(delta, p1, root, dps=dps)
        value = 0 if lead.order is None else lead.sign * max(0, -lead.order)
        entries.append(JumpEntry(root, value))
        leadings.append(lead)
    return JumpDivisor(tuple(entries)), leadings


def jj_divisor(delta: SymPoly, p1: SymPoly, dps: int = DEFAULT_DPS) -> JumpDivisor:
    """Predicted jump divisor on the upper semicircle from (delta, P) data.

    Zero-weight roots are retained so the support always matches the root set
    of delta.  Raises NonSimpleRoot if delta has a repeated circle root.
    """
    roots = isolate_roots(delta) if delta.degree >= 1 else []
    divisor, _ = _jj_at_roots(delta, p1, roots, dps)
    return divisor


def rational_q(delta: SymPoly, p1: SymPoly, dps: int = DEFAULT_DPS):
    """Callable s -> P/delta^2 at the circle point with turn s, in big floats."""
    ctx = mp_context(dps)

    def q(s):
        return p1.eval_turn(s, ctx=ctx) / delta.eval_turn(s, ctx=ctx) ** 2

    return q


def laurent_fit(func, s0, dps: int = 40):
    """Numeric double-pole coefficient of func at s0 by symmetric Richardson fit.

    Samples (s - s0)^2 * func(s) at offsets 1e-4 and 1e-5 on both sides; the
    even average removes the residue term and one extrapolation step leaves an
    O(h^4) error on the coefficient of (s - s0)^{-2}.
    """
    ctx = mp_context(dps)
    s0 = ctx.mpf(s0)
    h1 = ctx.mpf(1) / 10**4
    h2 = ctx.mpf(1) / 10**5

    def even_part(h):
        return (func(s0 + h) * h**2 + func(s0 - h) * h**2) / 2

    g1, g2 = even_part(h1), even_part(h2)
    return (h1**2 * g2 - h2**2 * g1) / (h1**2 - h2**2)


def check_conjecture(rec: KnotRecord, dps: int = DEFAULT_DPS) -> KnotCheck:
    """Compare signature jumps against predicted jumps for one catalog record.

    Statuses: VACUOUS when delta has no circle roots, NOT_SIMPLE when a root
    is repeated (signature jumps still reported), NO_P_DATA when the record
    carries no P polynomial, otherwise MATCH or MISMATCH root by root.  A
    predicted odd jump (Laurent order -1) can never match and is annotated.
    """
    V = seifert_matrix(rec.braid)
    delta = alexander(V)
    if rec.delta is not None and rec.delta != delta:
        raise CatalogError(
            f"record {rec.name!r}: stored delta {rec.delta} differs from computed {delta}"
        )
    sigma_classical = signature_at(V, 0.5) if V.n else 0
    roots = isolate_roots(delta) if delta.degree >= 1 else []
    if not roots:
        return KnotCheck(rec.name, STATUS_VACUOUS, (), delta, sigma_classical, 0)
    jdiv = jumps_at_roots(V, roots)
    if any(r.multiplicity > 1 for r in roots):
        rows = tuple(
            RootRow(e.root, e.root.multiplicity, e.jump, None) for e in jdiv.entries
        )
        return KnotCheck(rec.name, STATUS_NOT_SIMPLE, rows, delta, sigma_classical, None)
    if rec.p1 is None:
        rows = tuple(RootRow(e.root, 1, e.jump, None) for e in jdiv.entries)
        return KnotCheck(rec.name, STATUS_NO_P_DATA, rows, delta, sigma_classical, None)
    jjdiv, leadings = _jj_at_roots(delta, rec.p1, roots, dps)
    rows = []
    all_match = True
    for je, pe, lead in zip(jdiv.entries, jjdiv.entries, leadings):
        note = ""
        if pe.jump % 2:
            note = "odd predicted jump (Laurent order -1)"
        if je.jump != pe.jump:
            all_match = False
        rows.append(RootRow(je.root, 1, je.jump, pe.jump, lead.numeric_c, note))
    status = STATUS_MATCH if all_match else STATUS_MISMATCH
    return KnotCheck(rec.name, status, tuple(rows), delta, sigma_classical, jjdiv.total())


# -- catalog ingestion ----------------------------------------------------


def _record_from_json(index: int, raw) -> KnotRecord:
    where = f"record {index}"
    if not isinstance(raw, dict):
        raise CatalogError(f"{where}: expected an object, got {type(raw).__name__}")
    name = raw.get("name")
    if not isinstance(name, str) or not name:
        raise CatalogError(f"{where}: field 'name' must be a nonempty string")
    where = f"record {index} ({name!r})"
    braid_raw = raw.get("braid")
    if not isinstance(braid_raw, list) or not all(isinstance(v, int) for v in braid_raw):
        raise CatalogError(f"{where}: field 'braid' must be a list of integers")
    try:
        braid = BraidWord(tuple(braid_raw))
    except ValueError as exc:
        raise CatalogError(f"{where}: field 'braid': {exc}") from exc
    polys: dict[str, SymPoly | None] = {}
    for field in ("delta", "p"):
        value = raw.get(field)
        if value is None:
            polys[field] = None
            continue
        try:
            if isinstance(value, list):
                polys[field] = SymPoly.from_coeffs(value)
            elif isinstance(value, str):
                polys[field] = SymPoly.parse(value)
            else:
                raise ValueError(f"expected a coefficient list or string, got {type(value).__name__}")
        except (ValueError, TypeError) as exc:
            raise CatalogError(f"{where}: field {field!r}: {exc}") from exc
    unknown = set(raw) - {"name", "braid", "delta", "p"}
    if unknown:
        raise CatalogError(f"{where}: unknown fields {sorted(unknown)}")
    return KnotRecord(name, braid, polys["delta"], polys["p"])


def load_catalog(path=None) -> list[KnotRecord]:
    """Read a knot catalog JSON file, validating shape and stored polynomials.

    Every record's braid must close to a knot, and a stored delta must agree
    exactly with the one computed from the braid; violations name the record
    and field.  With no path, the catalog shipped with the package is used.
    """
    if path is None:
        text = resources.files("knotjump").joinpath("data/catalog.json").read_text()
        source = "<builtin catalog>"
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
        source = str(path)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CatalogError(
            f"{source}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(data, list):
        raise CatalogError(f"{source}: top level must be a list of records")
    records = []
    for index, raw in enumerate(data):
        rec = _record_from_json(index, raw)
        try:
            computed = alexander(seifert_matrix(rec.braid))
        except ValueError as exc:
            raise CatalogError(f"record {index} ({rec.name!r}): {exc}") from exc
        if rec.delta is not None and rec.delta != computed:
            raise CatalogError(
                f"record {index} ({rec.name!r}): stored delta '{rec.delta}' "
                f"differs from computed '{computed}'"
            )
        records.append(rec)
    return records

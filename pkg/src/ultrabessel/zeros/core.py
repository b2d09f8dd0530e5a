"""Refined zeros of j'_{nu,delta} and y'_{nu,delta}, zero counting and index bookkeeping.

Two index conventions are in play.  ``positive`` indexing counts the
positive zeros 1, 2, 3, ...  The expansion (and the phase brackets) use a
``theorem`` index that may differ by one: for j'-zeros with delta >= nu the
origin is counted as the first zero, and for y'-zeros with delta <= -nu a
zero near the origin is not.  The offset between the two is measured by
counting sign changes, not assumed.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from functools import lru_cache

from ..mcmahon import eval_expansion, expansion_table
from ..phase import Bracket, Source, bracket_for_zero, h, h_inverse, large_k_threshold
from ..rootfind import BracketFailure, ConvergenceFailure, safeguarded_newton
from ..specfun.bessel import target

KINDS = ("AZero", "BZero")
TOL_MIN = 1e-14
SEED_ORDER = 4
NEWTON_XTOL = 4e-16
SCAN_STEP = math.pi / 16
LOG_SCAN_START = 1e-300
LOG_SCAN_PER_DECADE = 4
REFINE_SPLITS = 16
TANGENCY_GAP = 1e-6
SIGN_NOISE = 1e-12


class TangencyWarning(RuntimeWarning):
    """Two sign changes closer than the tangency gap; possibly a numerical artifact."""


def normalize_kind(kind: str) -> str:
    k = str(kind).strip().lower()
    if k in ("a", "azero"):
        return "AZero"
    if k in ("b", "bzero"):
        return "BZero"
    raise ValueError(f"unknown zero kind {kind!r}; expected 'a' or 'b'")


@dataclass(frozen=True)
class ZeroQuery:
    kind: str
    nu: float
    delta: float
    k: int
    tol: float = TOL_MIN
    paper_indexing: bool = False
    certify: bool = False

    def __post_init__(self):
        object.__setattr__(self, "kind", normalize_kind(self.kind))
        if not self.nu >= 0 or math.isinf(self.nu):
            raise ValueError("nu must be finite and >= 0")
        if not math.isfinite(self.delta):
            raise ValueError("delta must be finite")
        if int(self.k) != self.k or self.k < 1:
            raise ValueError("k must be a positive integer")
        if not self.tol >= TOL_MIN:
            raise ValueError(f"tol must be >= {TOL_MIN}")


@dataclass(frozen=True)
class ZeroResult:
    value: float
    residual: float
    bracket: Bracket
    iterations: int
    index_certified: bool
    positive_index: int = 0
    theorem_index: int = 0
    scale: float = field(default=1.0, compare=False)


def _fdf(kind, nu, delta):
    def fdf(x):
        v, s, _, _ = target(kind, nu, delta, x)
        return v, s

    return fdf


def _fval(kind, nu, delta):
    def f(x):
        try:
            v, _, fv, fp = target(kind, nu, delta, x)
        except (OverflowError, ZeroDivisionError):
            return math.nan
        # below the rounding level of its two terms the sign carries no information
        if abs(v) <= SIGN_NOISE * (abs(fp) + abs(delta * fv / x)):
            return math.nan
        return v

    return f


def _sgn(v):
    if v != v or v == 0.0:
        return 0
    return 1 if v > 0 else -1


def _grid(X):
    """Log-spaced points up to min(1, X), then a uniform grid with step <= pi/16."""
    pts = []
    top = min(1.0, X)
    n_log = max(2, int(math.ceil(math.log10(top / LOG_SCAN_START) * LOG_SCAN_PER_DECADE)))
    a = math.log(LOG_SCAN_START)
    b = math.log(top)
    pts.extend(math.exp(a + (b - a) * i / n_log) for i in range(n_log))
    pts.append(top)
    if X > 1.0:
        n = max(1, int(math.ceil((X - 1.0) / SCAN_STEP)))
        pts.extend(1.0 + (X - 1.0) * i / n for i in range(1, n + 1))
    return pts


def sign_changes(f, X):
    """Intervals (a, b) on (0, X] over which f changes sign.

    Non-finite and exactly-zero samples are skipped.  Where |f| has an
    interior local minimum without a sign change the neighbourhood is
    resampled, so that a pair of nearby zeros is not missed.
    """
    if not X > 0:
        raise ValueError("X must be > 0")
    xs = _grid(X)
    vals = [f(x) for x in xs]
    out = []
    last = None  # (x, sign) of the last usable sample
    for i, (x, v) in enumerate(zip(xs, vals)):
        s = _sgn(v) if math.isfinite(v) else 0
        if s == 0:
            continue
        if last is not None and s != last[1]:
            out.append((last[0], x))
        elif (
            last is not None
            and 0 < i < len(xs) - 1
            and math.isfinite(vals[i + 1])
            and abs(v) < abs(vals[i - 1])
            and abs(v) < abs(vals[i + 1])
            and xs[i] > 1.0
        ):
            out.extend(_refine_dip(f, xs[i - 1], xs[i + 1]))
        last = (x, s)
    out.sort()
    for (a0, b0), (a1, b1) in zip(out, out[1:]):
        if a1 - b0 > TANGENCY_GAP:
            continue
        r0 = _locate(f, a0, b0)
        r1 = _locate(f, a1, b1)
        if abs(r1 - r0) < TANGENCY_GAP:
            warnings.warn(
                f"sign changes near x={r0:.17g} closer than {TANGENCY_GAP}", TangencyWarning, stacklevel=2
            )
    return out


def _locate(f, a, b, iters=60):
    fa = f(a)
    for _ in range(iters):
        m = 0.5 * (a + b)
        fm = f(m)
        if not math.isfinite(fm):
            break
        if _sgn(fm) == _sgn(fa):
            a, fa = m, fm
        else:
            b = m
    return 0.5 * (a + b)


def _refine_dip(f, a, b):
    xs = [a + (b - a) * i / REFINE_SPLITS for i in range(REFINE_SPLITS + 1)]
    vals = [f(x) for x in xs]
    found = []
    for x0, x1, v0, v1 in zip(xs, xs[1:], vals, vals[1:]):
        if _sgn(v0) * _sgn(v1) < 0:
            found.append((x0, x1))
    return found if len(found) >= 2 else []


def count_zeros(kind: str, nu: float, delta: float, X: float) -> int:
    """Number of sign changes of the ultraspherical derivative on (0, X]."""
    kind = normalize_kind(kind)
    return len(sign_changes(_fval(kind, float(nu), float(delta)), float(X)))


def _offset_probe(kind, nu):
    s0 = large_k_threshold(nu) + 2
    t = s0 - 0.25 if kind == "AZero" else s0 + 0.25
    return s0, h_inverse(nu, t)


@lru_cache(maxsize=256)
def index_offset(kind: str, nu: float, delta: float) -> int:
    """positive_index - theorem_index, measured by counting zeros below a phase probe.

    The probe sits at h = s0 - 1/4 (j'-zeros) or s0 + 1/4 (y'-zeros), midway
    between the nominal phases of the expansion-indexed s0-th and (s0+1)-th zeros.
    """
    kind = normalize_kind(kind)
    s0, X = _offset_probe(kind, float(nu))
    return count_zeros(kind, nu, delta, X) - s0


def offset_rule(kind: str, nu: float, delta: float) -> int:
    """Closed-form guess for :func:`index_offset`, used as a cross-check in tests.

    The sign of F' - delta F / x as x -> 0+ decides whether a zero sits
    near the origin; the boundary case delta = -nu for y' is left at 0.
    Pairs of close zeros before the oscillatory range are not captured:
    y' with -nu <= delta < 0 can have them (nu = 2, delta = -1.5 near
    x = 1.1 and 1.9; nu = 3.7, delta = -2 near x = 3.0 and 3.2).
    """
    kind = normalize_kind(kind)
    if kind == "AZero":
        return -1 if delta >= nu else 0
    return 1 if delta < -nu else 0


@lru_cache(maxsize=256)
def _early_zeros(kind, nu, delta):
    """Sign-change intervals of all zeros below the phase probe, in order."""
    _, X = _offset_probe(kind, nu)
    return tuple(sign_changes(_fval(kind, nu, delta), X))


def to_theorem_index(kind, nu, delta, k_positive):
    return k_positive - index_offset(kind, nu, delta)


def to_positive_index(kind, nu, delta, k_theorem):
    return k_theorem + index_offset(kind, nu, delta)


def _seed(kind, nu, delta, kt, lo, hi):
    if kt < 1:
        return None
    x0 = eval_expansion(expansion_table(kind, SEED_ORDER), nu, delta, kt)
    return x0 if lo < x0 < hi else None


def find_zero(q: ZeroQuery) -> ZeroResult:
    """k-th zero of the ultraspherical derivative, refined by safeguarded Newton.

    With ``paper_indexing`` the query's k is the theorem index; otherwise it
    counts positive zeros.  Zeros below the phase probe are bracketed from a
    full scan (so their index is certified); higher ones use phase brackets
    and are certified only when ``certify`` is set.
    """
    kind, nu, delta = q.kind, float(q.nu), float(q.delta)
    off = index_offset(kind, nu, delta)
    if q.paper_indexing:
        kt, kp = q.k, q.k + off
        if kp < 1:
            raise ValueError(f"theorem zero {q.k} is the origin, not a positive zero")
    else:
        kp, kt = q.k, q.k - off
    early = _early_zeros(kind, nu, delta)
    if kp <= len(early):
        lo, hi = early[kp - 1]
        bracket = Bracket(lo, hi, kind, max(kt, 1), Source.Scan)
        certified = True
    else:
        bracket = bracket_for_zero(kind, nu, delta, kt)
        certified = False
    fdf = _fdf(kind, nu, delta)
    x0 = _seed(kind, nu, delta, kt, bracket.lo, bracket.hi)
    try:
        x, iters, _ = safeguarded_newton(fdf, bracket.lo, bracket.hi, x0=x0, xtol=NEWTON_XTOL)
    except ConvergenceFailure:
        raise
    v, slope = fdf(x)
    scale = abs(x * slope) if slope else 1.0
    if q.certify and not certified:
        certified = count_zeros(kind, nu, delta, x + 1e-6 * max(1.0, x)) == kp
    return ZeroResult(
        value=x,
        residual=abs(v),
        bracket=bracket,
        iterations=iters,
        index_certified=certified,
        positive_index=kp,
        theorem_index=kt,
        scale=scale,
    )


def zero(kind, nu, delta, k, **kw) -> float:
    return find_zero(ZeroQuery(kind, nu, delta, k, **kw)).value


def one_term_check(kind: str, nu: float, delta: float, k_max: int, k_min: int = 10, ks=None):
    """Largest k |zero_k - (k + nu/2 + offset) pi| over the sampled theorem indices.

    ``ks`` defaults to every k in [k_min, k_max].  Returns (constant, rows)
    where rows holds (k, zero, scaled defect).
    """
    kind = normalize_kind(kind)
    off = -0.75 if kind == "AZero" else -0.25
    if ks is None:
        ks = range(k_min, k_max + 1)
    rows = []
    for k in ks:
        z = find_zero(ZeroQuery(kind, nu, delta, int(k), paper_indexing=True)).value
        rows.append((int(k), z, k * abs(z - (k + nu / 2 + off) * math.pi)))
    return max(r[2] for r in rows), rows


def phase_of_zero(nu: float, x: float) -> float:
    return h(nu, x) if x >= nu else float("nan")


__all__ = [
    "BracketFailure", "ConvergenceFailure", "KINDS", "TangencyWarning", "ZeroQuery", "ZeroResult",
    "count_zeros", "find_zero", "index_offset", "normalize_kind", "offset_rule", "one_term_check",
    "phase_of_zero", "sign_changes", "to_positive_index", "to_theorem_index", "zero",
]

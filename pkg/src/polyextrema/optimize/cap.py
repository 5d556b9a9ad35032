"""One-dimensional problems behind the simple-polygon perimeter bound.

The extremal simple n-gon (odd n) is a long chord of half-angle alpha with
a cap vertex above it and n - 2 edges running along the chord, so its
perimeter is

    f(alpha) = 4 cos(alpha / 2) + 2 (n - 2) sin(alpha).

``maximize_cap_function`` finds the maximizer numerically, without using the
closed form of the critical point, so the two can be compared.
"""

from __future__ import annotations

import math
import sys
from dataclasses import asdict, dataclass

from scipy.optimize import brentq

from polyextrema.bounds import _check_n
from polyextrema.errors import OutOfRange

GOLDEN_XTOL = 1e-12


def cap_function(alpha: float, n: int) -> float:
    return 4.0 * math.cos(alpha / 2.0) + 2.0 * (n - 2) * math.sin(alpha)


def cap_derivative(alpha: float, n: int) -> float:
    return -2.0 * math.sin(alpha / 2.0) + 2.0 * (n - 2) * math.cos(alpha)


def golden_section_max(f, lo: float, hi: float, xtol: float) -> float:
    """Maximizer of a unimodal f on [lo, hi], to an interval of width xtol."""
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    c = hi - invphi * (hi - lo)
    d = lo + invphi * (hi - lo)
    fc, fd = f(c), f(d)
    while hi - lo > xtol:
        if fc >= fd:
            hi, d, fd = d, c, fc
            c = hi - invphi * (hi - lo)
            fc = f(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + invphi * (hi - lo)
            fd = f(d)
    return 0.5 * (lo + hi)


def maximize_cap_function(n: int) -> tuple[float, float]:
    """(alpha_star, f(alpha_star)) for the cap function on [0, pi/2], odd n >= 3.

    Golden-section search brackets the maximizer to GOLDEN_XTOL; since f is
    flat there (comparisons of f lose resolution near 1e-8 in alpha), the
    result is then polished by root-finding on the analytic derivative
    inside the golden-section bracket widened until it changes sign.
    """
    n = _check_n(n, odd=True)
    a0 = golden_section_max(lambda a: cap_function(a, n), 0.0, math.pi / 2, GOLDEN_XTOL)
    width = 1e-9
    lo, hi = max(a0 - width, 0.0), min(a0 + width, math.pi / 2)
    while cap_derivative(lo, n) < 0 or cap_derivative(hi, n) > 0:
        width *= 10
        lo, hi = max(a0 - width, 0.0), min(a0 + width, math.pi / 2)
    alpha = brentq(cap_derivative, lo, hi, args=(n,), xtol=1e-16, rtol=4 * sys.float_info.epsilon, maxiter=200)
    return alpha, cap_function(alpha, n)


# --- probes of the auxiliary inequalities used for the long-chord case ---

ALPHA_MIN = math.pi / 3
ALPHA_MID = 5 * math.pi / 12
ALPHA_MAX = math.pi / 2
# the two cells on which monotonicity reduces the inequality to endpoint checks
CELLS = ((ALPHA_MIN, ALPHA_MID), (ALPHA_MID, ALPHA_MAX))


def chord_plus_vertical(alpha: float) -> float:
    """sin(alpha) + 2 sqrt(sin(alpha) - sin(alpha)^2): half of chord plus vertical chord."""
    s = math.sin(alpha)
    return s + 2.0 * math.sqrt(max(s - s * s, 0.0))


def half_cap(alpha: float) -> float:
    return 2.0 * math.cos(alpha / 2.0)


@dataclass(frozen=True)
class CaseProbe:
    alpha: float
    z: float  # chord length 2 sin(alpha)
    v: float  # vertical chord 4 sqrt(sin(alpha) - sin(alpha)^2)
    f: float  # chord_plus_vertical(alpha)
    g: float  # half_cap(alpha)
    pointwise_pass: bool  # f(alpha) < g(alpha)
    cell: tuple[float, float]
    f_cell_left: float
    g_cell_right: float
    cell_pass: bool  # f(cell left end) < g(cell right end)
    t: float  # cos(alpha / 2)
    square: float  # (2t - 1)^2
    square_bound: float  # 2 - sqrt(2)
    square_pass: bool

    @property
    def passed(self) -> bool:
        return self.pointwise_pass and self.cell_pass and self.square_pass

    def to_dict(self) -> dict:
        d = asdict(self)
        d["cell"] = list(self.cell)
        d["passed"] = self.passed
        return d


def lemma4_case_probe(alpha: float) -> CaseProbe:
    alpha = float(alpha)
    if not (math.isfinite(alpha) and ALPHA_MIN - 1e-15 <= alpha <= ALPHA_MAX + 1e-15):
        raise OutOfRange(f"alpha must lie in [pi/3, pi/2], got {alpha}")
    alpha = min(max(alpha, ALPHA_MIN), ALPHA_MAX)
    s = math.sin(alpha)
    f = chord_plus_vertical(alpha)
    g = half_cap(alpha)
    cell = CELLS[0] if alpha < ALPHA_MID else CELLS[1]
    f_left = chord_plus_vertical(cell[0])
    g_right = half_cap(cell[1])
    t = math.cos(alpha / 2.0)
    square = (2.0 * t - 1.0) ** 2
    bound = 2.0 - math.sqrt(2.0)
    return CaseProbe(
        alpha=alpha,
        z=2.0 * s,
        v=4.0 * math.sqrt(max(s - s * s, 0.0)),
        f=f,
        g=g,
        pointwise_pass=f < g,
        cell=cell,
        f_cell_left=f_left,
        g_cell_right=g_right,
        cell_pass=f_left < g_right,
        t=t,
        square=square,
        square_bound=bound,
        square_pass=square <= bound,
    )

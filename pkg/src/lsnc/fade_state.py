"""Singular fade states and effective constellations.

During the multiple-access phase the relay sees x_A + s*x_B, where s is the
channel-gain ratio.  Fade states for which two of these superpositions
coincide (fewer than M^2 distinct values) are singular; they are exactly
the ratios -(x_A - x_A')/(x_B - x_B') over pairs of constellation points.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from lsnc._numeric import GaussianRational, cluster_complex
from lsnc.signal_set import SignalSet

__all__ = [
    "FadeState",
    "enumerate_singular_fade_states",
    "psk_singular_fade_states",
    "psk_representatives",
    "effective_constellation",
    "is_singular",
]

# A float that sits within RECONSTRUCT_TOL of a rational with denominator
# <= RECONSTRUCT_DEN denotes that rational unambiguously (two such rationals
# differ by more than 1/RECONSTRUCT_DEN^2 >> RECONSTRUCT_TOL).
RECONSTRUCT_DEN = 10**6
RECONSTRUCT_TOL = 1e-12


@dataclass(frozen=True)
class FadeState:
    """A channel-gain ratio, optionally tagged with its PSK circle (k, l)."""

    value: complex
    k: int | None = None
    l: int | None = None
    exact_value: GaussianRational | None = None

    @property
    def radius(self) -> float:
        return abs(self.value)

    def __complex__(self) -> complex:
        return self.value


def _canon(v: complex) -> complex:
    # +0.0 normalizes away negative zeros so serialized output is stable
    return complex(v.real + 0.0, v.imag + 0.0)


def _sort_key(v: complex) -> tuple[float, float]:
    return (round(v.real, 12) + 0.0, round(v.imag, 12) + 0.0)


def as_exact_ratio(s: complex | FadeState) -> GaussianRational | None:
    """Exact rational value of a fade state, when it denotes one.

    FadeStates produced by exact enumeration carry it already; plain floats
    are accepted when both parts reconstruct to small rationals.
    """
    if isinstance(s, FadeState):
        if s.exact_value is not None:
            return s.exact_value
        s = s.value
    s = complex(s)
    parts = []
    for x in (s.real, s.imag):
        f = Fraction(x).limit_denominator(RECONSTRUCT_DEN)
        if abs(float(f) - x) > RECONSTRUCT_TOL:
            return None
        parts.append(f)
    return GaussianRational(parts[0], parts[1])


def enumerate_singular_fade_states(s_set: SignalSet) -> tuple[FadeState, ...]:
    """All nonzero singular fade states of a signal set, by brute force.

    Ratios with x_A = x_A' are zero (the no-signal degenerate case) and are
    excluded; everything else is deduplicated and sorted canonically.
    """
    n = s_set.size
    if s_set.exact_points is not None:
        pts = s_set.exact_points
        diffs: dict[tuple[Fraction, Fraction], GaussianRational] = {}
        for a in range(n):
            for a2 in range(n):
                if a != a2:
                    d = pts[a] - pts[a2]
                    diffs.setdefault((d.re, d.im), d)
        seen: dict[tuple[Fraction, Fraction], GaussianRational] = {}
        for num in diffs.values():
            for den in diffs.values():
                r = -num / den
                seen.setdefault((r.re, r.im), r)
        states = [
            FadeState(value=_canon(complex(g)), exact_value=g) for g in seen.values()
        ]
    else:
        pts = s_set.points
        fdiffs: dict[tuple[float, float], complex] = {}
        for a in range(n):
            for a2 in range(n):
                if a != a2:
                    d = pts[a] - pts[a2]
                    fdiffs.setdefault((d.real, d.imag), d)
        ratios = [-num / den for num in fdiffs.values() for den in fdiffs.values()]
        groups = cluster_complex(ratios)
        states = [FadeState(value=_canon(ratios[g[0]])) for g in groups]
    return tuple(sorted(states, key=lambda fs: _sort_key(fs.value)))


def _check_power_of_two(m: int) -> None:
    if m < 4 or m & (m - 1):
        raise ValueError(f"PSK closed forms need M a power of two >= 4, got {m}")


def psk_singular_fade_states(m: int) -> tuple[FadeState, ...]:
    """Closed-form singular fade states of M-PSK.

    They lie on circles of radius sin(k*pi/M)/sin(l*pi/M), k, l in 1..M/2,
    with M states per circle: phases 2n*pi/M when k and l share parity and
    (2n+1)*pi/M otherwise.  All k = l circles coincide at radius 1.
    """
    _check_power_of_two(m)
    circles: list[tuple[float, int, int, bool]] = []  # radius, k, l, same_parity
    for k in range(1, m // 2 + 1):
        for l in range(1, m // 2 + 1):
            r = math.sin(k * math.pi / m) / math.sin(l * math.pi / m)
            same = (k - l) % 2 == 0
            for r0, _, _, same0 in circles:
                if abs(r - r0) < 1e-9:
                    if same0 != same:
                        raise AssertionError("circle with conflicting phase parity")
                    break
            else:
                circles.append((r, k, l, same))
    expected = (m * m // 4 - m // 2 + 1)
    if len(circles) != expected:
        raise AssertionError(f"{len(circles)} circles, expected {expected}")
    states = []
    for r, k, l, same in circles:
        for n in range(m):
            theta = (2 * n + (0 if same else 1)) * math.pi / m
            states.append(
                FadeState(value=_canon(r * complex(math.cos(theta), math.sin(theta))), k=k, l=l)
            )
    return tuple(sorted(states, key=lambda fs: _sort_key(fs.value)))


def psk_representative(m: int, k: int, l: int) -> FadeState:
    """The per-circle representative sin(k*pi/M)/sin(l*pi/M), rotated by
    e^{j*pi/M} when k and l have opposite parity."""
    _check_power_of_two(m)
    if not (1 <= k <= m // 2 and 1 <= l <= m // 2):
        raise ValueError(f"need 1 <= k,l <= M/2, got ({k},{l})")
    if k == l:
        raise ValueError("the k = l circle has no representative (radius-1 circle)")
    r = math.sin(k * math.pi / m) / math.sin(l * math.pi / m)
    v = complex(r, 0)
    if (k - l) % 2:
        v *= complex(math.cos(math.pi / m), math.sin(math.pi / m))
    return FadeState(value=_canon(v), k=k, l=l)


def psk_representatives(m: int) -> tuple[FadeState, ...]:
    """One representative per non-unit circle: all (k, l) with k != l.

    The radius-1 circle (k = l) is left out; the plain bitwise-XOR Latin
    Square already removes it.
    """
    _check_power_of_two(m)
    return tuple(
        psk_representative(m, k, l)
        for k in range(1, m // 2 + 1)
        for l in range(1, m // 2 + 1)
        if k != l
    )


def _superposed_exact(s_set: SignalSet, g: GaussianRational) -> list[GaussianRational]:
    return [xa + g * xb for xa in s_set.exact_points for xb in s_set.exact_points]


def effective_constellation(
    s_set: SignalSet, s: complex | FadeState
) -> tuple[tuple[complex, ...], float]:
    """Distinct values of x_A + s*x_B and the minimum distance between the
    raw (unclustered) superpositions — 0 whenever any two coincide."""
    g = as_exact_ratio(s) if s_set.exact_points is not None else None
    if g is not None:
        vals = _superposed_exact(s_set, g)
        distinct = {(v.re, v.im): v for v in vals}
        pts = sorted((_canon(complex(v)) for v in distinct.values()), key=_sort_key)
        if len(pts) < len(vals):
            return tuple(pts), 0.0
        dmin = min(
            abs(complex(a - b))
            for i, a in enumerate(vals)
            for b in vals[i + 1 :]
        )
        return tuple(pts), dmin
    sv = complex(s)
    vals_f = [xa + sv * xb for xa in s_set.points for xb in s_set.points]
    groups = cluster_complex(vals_f)
    pts = sorted((_canon(vals_f[grp[0]]) for grp in groups), key=_sort_key)
    if len(pts) < len(vals_f):
        return tuple(pts), 0.0
    dmin = min(abs(a - b) for i, a in enumerate(vals_f) for b in vals_f[i + 1 :])
    return tuple(pts), dmin


def is_singular(s_set: SignalSet, s: complex | FadeState) -> bool:
    """True when the effective constellation collapses below M^2 points."""
    pts, _ = effective_constellation(s_set, s)
    return len(pts) < s_set.size**2

"""BCH-bound certification for defining sets, direct verification of the
run-membership lemmas L3-L6, and the square-root-style floors on the
minimum odd weight of an odd-like duadic pair.
"""

import math
from dataclasses import dataclass

import numpy as np

from .cyclotomic import complement_spec, defining_set

LEMMA_IDS = ("L3", "L4", "L5", "L6")
SIDES = ("S", "S'")

EXHAUSTIVE_N_MAX = 1 << 13


class HypothesisError(ValueError):
    """A lemma was invoked on a spec outside its stated hypotheses."""


@dataclass(frozen=True)
class BchCertificate:
    """A maximal arithmetic progression {start + i*v} inside a defining set.

    run_length consecutive AP terms in T certify minimum distance at least
    run_length + 1. gamma_exponent is the inverse of v mod n: relabeling
    roots by alpha^gamma_exponent turns the run into consecutive exponents.
    """

    v: int
    start: int
    run_length: int
    d_lower: int
    gamma_exponent: int

    def to_json(self):
        return {
            "v": self.v,
            "l": self.start,
            "run_length": self.run_length,
            "d_lower": self.d_lower,
            "gamma_exponent": self.gamma_exponent,
        }


@dataclass(frozen=True)
class SqrtBoundReport:
    """Floors on the minimum odd weight d0 of an odd-like duadic pair:
    d0^2 >= n always, and d0^2 - d0 + 1 >= n when the splitting multiplier
    is -1 (the latter scanned over odd integers, d0 being an odd weight)."""

    n: int
    d0_floor_sqrt: int
    d0_mu_minus1: int
    mu_is_minus1: bool

    @property
    def d0_lower(self):
        return self.d0_mu_minus1 if self.mu_is_minus1 else self.d0_floor_sqrt

    def to_json(self):
        return {
            "n": self.n,
            "d0_floor_sqrt": self.d0_floor_sqrt,
            "d0_mu_minus1": self.d0_mu_minus1,
            "mu_is_minus1": self.mu_is_minus1,
            "d0_lower": self.d0_lower,
        }


def max_ap_run(T, v):
    """Longest arithmetic progression with difference v contained in T.

    v must be a unit mod n. The AP {l + i*v} sits in T exactly when the
    consecutive-integer run {l*v^-1 + i} sits in v^-1 * T, so the scan is a
    single circular run search over the permuted bitmap. Among maximal runs
    the one with the smallest start l is reported.
    """
    n = T.n
    if math.gcd(v % n, n) != 1:
        raise ValueError(f"v={v} is not a unit mod {n}")
    v %= n
    vinv = pow(v, -1, n)
    arr = T.bool_array()
    u = arr[(np.arange(n, dtype=np.int64) * v) % n]
    zero_pos = np.flatnonzero(~u)
    if zero_pos.size == 0:
        return BchCertificate(v=v, start=0, run_length=n, d_lower=n + 1, gamma_exponent=vinv)
    gaps = (np.roll(zero_pos, -1) - zero_pos - 1) % n
    run = int(gaps.max())
    if run == 0:
        return BchCertificate(v=v, start=0, run_length=0, d_lower=1, gamma_exponent=vinv)
    run_starts = (zero_pos[gaps == run] + 1) % n
    start = int(((run_starts * v) % n).min())
    return BchCertificate(v=v, start=start, run_length=run, d_lower=run + 1, gamma_exponent=vinv)


def default_v_candidates(n):
    """The two differences 2^((m-1)/2) - 1 and 2^((m+1)/2) - 1 for n = 2^m - 1."""
    m = n.bit_length()
    cands = {(1 << ((m - 1) // 2)) - 1, (1 << ((m + 1) // 2)) - 1}
    return sorted(v for v in cands if v and math.gcd(v, n) == 1)


def best_certificate(T, v_candidates=None, exhaustive=False):
    """Best BCH certificate over the candidate differences (longest run wins,
    ties broken toward the earlier candidate)."""
    n = T.n
    if exhaustive:
        if n > EXHAUSTIVE_N_MAX:
            raise ValueError(f"exhaustive unit sweep is capped at n <= {EXHAUSTIVE_N_MAX}")
        candidates = [v for v in range(1, n) if math.gcd(v, n) == 1]
    elif v_candidates is not None:
        candidates = sorted(set(v % n for v in v_candidates))
    else:
        candidates = default_v_candidates(n)
    if not candidates:
        raise ValueError("no candidate differences to scan")
    best = None
    for v in candidates:
        cert = max_ap_run(T, v)
        if best is None or cert.run_length > best.run_length:
            best = cert
    return best


# Run-membership rules, one per lemma. Each rule fixes which residues must
# sit in S and in S' = Z_r \ S, and which difference v carries a guaranteed
# window {a*v : 1 <= a <= B} into the defining set of each side.
_EXCLUDED_T = {"L3": 3, "L4": 1, "L5": 3, "L6": 1}


def _anchor_sets(which, r, t):
    lo = ((t - 1) // 2) % r
    near = ((t + r - 1) // 2) % r
    far = ((t + r + 1) // 2) % r
    third = (t - 1) % r if which in ("L3", "L5") else 1 % r
    if which in ("L3", "L4"):
        s_req = {lo, near, third}
        comp_req = {((t + 1) // 2) % r, far}
    else:
        s_req = {lo, far, third}
        comp_req = {((t + 1) // 2) % r, near}
    return s_req, comp_req


def lemma_window(which, m, r, side):
    """(v, B) such that the lemma guarantees {a*v : 1 <= a <= B} inside the
    defining set of the given side ("S" or "S'")."""
    half = 1 << ((m - 1) // 2)
    small, big = half - 1, 2 * half - 1
    t = m % r
    first_branch = m % (2 * r) == t  # m = t mod 2r, else m = t + r mod 2r
    if which == "L3":
        b, s_gets_small = half + 2, True
    elif which == "L4":
        b, s_gets_small = half, True
    elif which == "L5":
        b, s_gets_small = (half + 2, True) if first_branch else (half, False)
    elif which == "L6":
        b, s_gets_small = (half, True) if first_branch else (half + 2, False)
    else:
        raise ValueError(f"unknown lemma {which!r}")
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}")
    v = (small if s_gets_small else big) if side == "S" else (big if s_gets_small else small)
    return v, b


def check_lemma_hypotheses(spec, which):
    """Raise HypothesisError naming the first failed condition, if any."""
    if which not in LEMMA_IDS:
        raise ValueError(f"unknown lemma {which!r}")
    if spec.unchecked:
        raise HypothesisError("lemmas require a checked spec (odd m, |S| = r/2)")
    t = spec.t
    if t == _EXCLUDED_T[which]:
        raise HypothesisError(f"{which} requires t != {_EXCLUDED_T[which]}; spec has t = m mod r = {t}")
    if which == "L3" and spec.r <= 2:
        raise HypothesisError("L3 requires r > 2")
    s_req, comp_req = _anchor_sets(which, spec.r, t)
    s_set = set(spec.S)
    missing = sorted(s_req - s_set)
    if missing:
        raise HypothesisError(f"{which} requires S to contain {sorted(s_req)}; missing {missing}")
    comp = set(range(spec.r)) - s_set
    missing = sorted(comp_req - comp)
    if missing:
        raise HypothesisError(f"{which} requires S' to contain {sorted(comp_req)}; missing {missing}")


def verify_lemma_membership(spec, which, side="S"):
    """Directly test the lemma's conclusion {a*v : 1 <= a <= B} <= T(side).

    Hypotheses are checked first (HypothesisError otherwise); the return
    value is the truth of the membership claim itself.
    """
    check_lemma_hypotheses(spec, which)
    v, b = lemma_window(which, spec.m, spec.r, side)
    target = spec if side == "S" else complement_spec(spec)
    arr = defining_set(target).bool_array()
    points = (np.arange(1, b + 1, dtype=np.int64) * v) % spec.n
    return bool(arr[points].all())


def sqrt_bounds(n, mu_is_minus1=True):
    """Smallest admissible floors for the minimum odd weight at length n."""
    if n < 3 or n % 2 == 0:
        raise ValueError(f"length must be odd and >= 3, got {n}")
    d_sqrt = math.isqrt(n - 1) + 1
    d_mu = 1
    while d_mu * d_mu - d_mu + 1 < n:
        d_mu += 2
    return SqrtBoundReport(n=n, d0_floor_sqrt=d_sqrt, d0_mu_minus1=d_mu, mu_is_minus1=mu_is_minus1)

"""Combinatorial Jantzen matrices J^≺ and J^⊲.

Entries come from a closed form in terms of ribbon heads and lengths. A second
route reads the same value off the beta-numbers of the big partitions, and a
floating-point valuation check evaluates the underlying cyclotomic factors at a
primitive root of unity.
"""

from __future__ import annotations

import cmath
import enum
from dataclasses import dataclass
from typing import Optional, Sequence

from .charge import Multicharge, beta_numbers, decompose, enumerate_multipartitions, phi, precedes, tau_inv
from .matrix import LabeledMatrix
from .partitions import Multipartition, Ribbon, extract_ribbon, node_content, strictly_dominates

__all__ = [
    "BetaPairData",
    "Ordering",
    "PairCase",
    "ToleranceAmbiguityError",
    "beta_pair_data",
    "classify",
    "j_entry",
    "j_entry_beta",
    "matrix_J",
    "valuation_oracle",
]


class Ordering(enum.Enum):
    PREC = "prec"
    DOM = "dom"


@dataclass(frozen=True)
class PairCase:
    tag: str  # "J1", "J2" or "J3"
    d: Optional[int] = None
    d2: Optional[int] = None
    rho: Optional[Ribbon] = None
    rho2: Optional[Ribbon] = None
    hhat: Optional[int] = None


_J3 = PairCase("J3")


def _mp(x) -> Multipartition:
    return x if isinstance(x, Multipartition) else Multipartition(x)


def classify(a, b) -> PairCase:
    a, b = _mp(a), _mp(b)
    if len(a) != len(b):
        raise ValueError("multipartitions of different levels")
    if a == b:
        return _J3
    diff = [i for i in range(len(a)) if a[i] != b[i]]
    if len(diff) == 1:
        i = diff[0]
        inter = a[i].intersection(b[i])
        rho = extract_ribbon(inter, a[i], i + 1)
        rho2 = extract_ribbon(inter, b[i], i + 1)
        if rho and rho2 and rho.length == rho2.length:
            return PairCase("J2", i + 1, i + 1, rho, rho2, rho.length)
        return _J3
    if len(diff) == 2:
        for i, j in (diff, diff[::-1]):
            # rho = a_i / b_i, rho' = b_j / a_j
            if a[i].contains(b[i]) and b[j].contains(a[j]):
                rho = extract_ribbon(b[i], a[i], i + 1)
                rho2 = extract_ribbon(a[j], b[j], j + 1)
                if rho and rho2 and rho.length == rho2.length:
                    return PairCase("J1", i + 1, j + 1, rho, rho2, rho.length)
    return _J3


def _ht_sign(case: PairCase) -> int:
    return -1 if (case.rho.height + case.rho2.height) % 2 else 1


def j_entry(a, b, n: int, mc: Sequence[int]) -> int:
    """Unrestricted entry j_{ab} (zero in case J3)."""
    case = classify(a, b)
    if case.tag == "J3":
        return 0
    res1 = node_content(case.rho.head, mc) % n
    res2 = node_content(case.rho2.head, mc) % n
    sign = _ht_sign(case)
    if case.tag == "J1":
        return sign if res1 == res2 else 0
    divisible = case.hhat % n == 0
    if res1 == res2 and not divisible:
        return sign
    if res1 != res2 and divisible:
        return -sign
    return 0


@dataclass(frozen=True)
class BetaPairData:
    r: int
    beta_x: int
    beta_y: int
    h: int
    gamma: int
    delta: int
    common: frozenset


def beta_pair_data(a, b, n: int, l: int, mc: Sequence[int]) -> Optional[BetaPairData]:
    """Data of the two-bead move turning B(mu) into B(lambda), when a ≺ b and it exists."""
    lam, s = tau_inv(_mp(a), mc, n)
    mu, _ = tau_inv(_mp(b), mc, n)
    r = lam.size()
    if r != mu.size() or not strictly_dominates(lam, mu):
        return None
    B_lam = set(beta_numbers(lam, s, r).values)
    B_mu = set(beta_numbers(mu, s, r).values)
    common = B_lam & B_mu
    if len(common) != r - 2:
        return None
    bx, by = sorted(B_mu - B_lam)
    a1, a2 = sorted(B_lam - B_mu)
    h = a1 - bx
    if a2 != by - h or not bx < a1 < a2 < by:
        raise AssertionError("beta-numbers do not form a two-bead move")
    nl = n * l
    cx, dx, _ = decompose(bx, n, l)
    cy, dy, _ = decompose(by, n, l)
    return BetaPairData(r, bx, by, h, (cy - cx) % nl, (n * (dy - dx)) % nl, frozenset(common))


def _between(common, d: int, lo: int, hi: int, n: int, l: int) -> int:
    lo, hi = min(lo, hi), max(lo, hi)
    count = 0
    for k in common:
        if decompose(k, n, l).d == d and lo < phi(k, n, l) < hi:
            count += 1
    return count


def j_entry_beta(a, b, n: int, l: int, mc: Sequence[int]) -> int:
    """j^≺_{ab} computed from beta-numbers of the big partitions."""
    data = beta_pair_data(a, b, n, l, mc)
    if data is None:
        return 0
    nl = n * l
    bx, by, h = data.beta_x, data.beta_y, data.h
    d = decompose(bx, n, l).d
    if data.delta > 0:
        d2 = decompose(by, n, l).d
        k, k2 = (bx + h, by - h) if decompose(bx + h, n, l).d == d else (by - h, bx + h)
        ht = _between(data.common, d, phi(bx, n, l), phi(k, n, l), n, l)
        ht += _between(data.common, d2, phi(k2, n, l), phi(by, n, l), n, l)
        sign = -1 if ht % 2 else 1
        return sign if h % nl in (data.gamma, data.delta) else 0
    ht = _between(data.common, d, phi(bx, n, l), phi(bx + h, n, l), n, l)
    ht += _between(data.common, d, phi(by - h, n, l), phi(by, n, l), n, l)
    sign = -1 if ht % 2 else 1
    hg = h % nl == data.gamma
    h0 = h % nl == 0
    if hg and not h0:
        return sign
    if h0 and not hg:
        return -sign
    return 0


def matrix_J(order_kind, n: int, l: int, mc: Sequence[int], m: int, order=None) -> LabeledMatrix:
    kind = Ordering(order_kind.value if isinstance(order_kind, Ordering) else str(order_kind).lower())
    mc = Multicharge(mc)
    if len(mc) != l:
        raise ValueError("multicharge length differs from l")
    if order is None:
        order = enumerate_multipartitions(l, m, mc, n)
    J = LabeledMatrix(order, zero=0)
    for a in order:
        for b in order:
            if a == b:
                continue
            if kind is Ordering.PREC:
                gate = precedes(a, b, mc, n)
            else:
                gate = strictly_dominates(a, b)
            if gate:
                v = j_entry(a, b, n, mc)
                if v:
                    J[a, b] = v
    return J


class ToleranceAmbiguityError(ArithmeticError):
    """A numerical value fell between the zero and nonzero thresholds."""


ZERO_TOL = 1e-9
NONZERO_TOL = 1e-6


def _is_zero(z: complex) -> bool:
    a = abs(z)
    if a < ZERO_TOL:
        return True
    if a > NONZERO_TOL:
        return False
    raise ToleranceAmbiguityError(f"|{z}| is inside the ambiguity band")


def _order_binomial(xi: complex, a1: int, a2: int, a3: int, a4: int) -> int:
    """Order of vanishing at xi of xi^a1 x^a2 - xi^a3 x^a4 (as a function of x)."""
    val = xi ** (a1 + a2) - xi ** (a3 + a4)
    if not _is_zero(val):
        return 0
    der = a2 * xi ** (a1 + a2 - 1) - a4 * xi ** (a3 + a4 - 1)
    if not _is_zero(der):
        return 1
    return 2


def valuation_oracle(a, b, n: int, l: int, mc: Sequence[int]) -> int:
    """Valuation at a primitive nl-th root of unity of the factor behind j_{ab}."""
    case = classify(a, b)
    if case.tag == "J3":
        raise ValueError("the oracle only applies to J1 and J2 pairs")
    xi = cmath.exp(2j * cmath.pi / (n * l))
    if case.tag == "J1":
        d, d2 = case.d, case.d2
        h1, h2 = case.rho.head, case.rho2.head
        a2 = l * mc[d - 1] - n * d + l * (h1.col - h1.row)
        a4 = l * mc[d2 - 1] - n * d2 + l * (h2.col - h2.row)
        return _order_binomial(xi, n * d, a2, n * d2, a4)
    # orient so that the first ribbon lies in the dominated component
    rho, rho2 = case.rho, case.rho2
    comp_a = _mp(a)[case.d - 1]
    comp_b = _mp(b)[case.d - 1]
    if strictly_dominates(comp_b, comp_a):
        rho, rho2 = rho2, rho
    N = node_content(rho2.head, mc) - node_content(rho.head, mc)
    num = _order_binomial(xi, 0, l * N, 0, 0)
    den = _order_binomial(xi, 0, l * case.hhat, 0, 0)
    return num - den

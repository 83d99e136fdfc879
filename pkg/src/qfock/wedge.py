"""q-wedge words, straightening, and the bar involution on a Fock component."""

from __future__ import annotations

import os
import threading
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple, Union

from .charge import (
    Multicharge,
    beta_numbers,
    decompose,
    enumerate_multipartitions,
    kappa,
    partition_from_beta,
    tau,
    tau_inv,
    v_length,
)
from .laurent import LaurentPoly
from .matrix import LabeledMatrix
from .partitions import Multipartition

try:  # compiled kernel if it was built
    if os.environ.get("QFOCK_PURE_PYTHON"):
        raise ImportError("pure python requested")
    from . import _straighten as _kernel
except ImportError:  # pragma: no cover - depends on the build
    from . import _straighten_py as _kernel

__all__ = [
    "ComponentLeakError",
    "KERNEL",
    "bar_standard",
    "get_straightener",
    "matrix_A",
    "rule_expand",
    "stable_length",
    "straighten",
]

KERNEL: str = _kernel.IMPLEMENTATION
Straightener = _kernel.Straightener


class ComponentLeakError(RuntimeError):
    """The bar involution produced a word outside the requested Fock component."""


def _poly(d: Dict[int, int]) -> LaurentPoly:
    return LaurentPoly(d)


def rule_expand(k1: int, k2: int, n: int, l: int) -> List[Tuple[Tuple[int, int], LaurentPoly]]:
    return [((a, b), _poly(c)) for a, b, c in _kernel.rule_terms(k1, k2, n, l)]


_shared: Dict[Tuple[int, int], object] = {}
_shared_lock = threading.Lock()


def get_straightener(n: int, l: int, use_cache: bool = True):
    """Shared cached straightener per ``(n, l)``; a fresh one when caching is off."""
    if not use_cache:
        return Straightener(n, l, False)
    with _shared_lock:
        st = _shared.get((n, l))
        if st is None:
            st = _shared[(n, l)] = Straightener(n, l, True)
    return st


def clear_caches() -> None:
    with _shared_lock:
        _shared.clear()


def straighten(word: Sequence[int], n: int, l: int, use_cache: bool = True, incremental: bool = True) -> Dict[Tuple[int, ...], LaurentPoly]:
    """Normal form of ``v_word`` as ``{ordered word: coefficient}``."""
    st = get_straightener(n, l, use_cache)
    return {w: _poly(c) for w, c in st.straighten(tuple(word), incremental).items()}


@lru_cache(maxsize=None)
def _longest_by_size(mc: Tuple[int, ...], n: int, m: int) -> Dict[int, int]:
    out: Dict[int, int] = {}
    for nu_l in enumerate_multipartitions(len(mc), m, mc, n):
        nu, _ = tau_inv(nu_l, mc, n)
        out[nu.size()] = max(out.get(nu.size(), 0), len(nu))
    return out


def stable_length(mu_l, mc: Sequence[int], n: int) -> int:
    """Shortest reversal length that leaves room for every candidate output.

    A word of length ``r`` can only straighten into partitions with at most
    ``r`` parts, so ``r`` must reach the longest partition of the same size
    in the component.  Longer reversals give the same column.
    """
    mu_l = mu_l if isinstance(mu_l, Multipartition) else Multipartition(mu_l)
    mc = tuple(Multicharge(mc))
    mu, _ = tau_inv(mu_l, mc, n)
    return max(len(mu), _longest_by_size(mc, n, mu_l.size())[mu.size()])


Length = Union[None, str, int]


def _reversal_length(mu_l, mc, n, mu, length: Length) -> int:
    if length is None or length == "full":
        return mu.size()
    if length == "stable":
        return stable_length(mu_l, mc, n)
    if isinstance(length, int) and length >= len(mu):
        return length
    raise ValueError(f"bad reversal length {length!r}")


def bar_standard(mu_l, mc: Sequence[int], n: int, use_cache: bool = True, incremental: bool = True,
                 length: Length = None) -> Dict[Multipartition, LaurentPoly]:
    """Expansion of the bar image of ``|mu_l, mc>`` in the standard basis.

    ``length`` is the number of leading beta-numbers that are reversed:
    the default ``"full"`` uses ``|mu|``, ``"stable"`` the shorter
    :func:`stable_length`; an integer is used as given.
    """
    mu_l = mu_l if isinstance(mu_l, Multipartition) else Multipartition(mu_l)
    mc = Multicharge(mc)
    l = len(mc)
    mu, s = tau_inv(mu_l, mc, n)
    r = _reversal_length(mu_l, mc, n, mu, length)
    w = beta_numbers(mu, s, r).values
    ds = [decompose(k, n, l).d for k in w]
    cs = [decompose(k, n, l).c for k in w]
    kd = kappa(ds)
    prefactor = LaurentPoly.monomial(kd - kappa(cs), -1 if kd % 2 else 1)
    rev = tuple(reversed(w))
    if v_length(rev, n, l) % 2:
        prefactor = -prefactor
    st = get_straightener(n, l, use_cache)
    out: Dict[Multipartition, LaurentPoly] = {}
    m = mu_l.size()
    for word, coeff in st.straighten(rev, incremental).items():
        c = _poly(coeff)
        if v_length(word, n, l) % 2:
            c = -c
        nu = partition_from_beta(word, s)
        nu_l, nu_mc = tau(nu, s, n, l)
        if tuple(nu_mc) != tuple(mc) or nu_l.size() != m:
            raise ComponentLeakError(f"{word} maps to {nu_l} at charge {tuple(nu_mc)}")
        out[nu_l] = prefactor * c
    return out


def matrix_A(n: int, l: int, mc: Sequence[int], m: int, use_cache: bool = True, order=None,
             length: Length = None) -> LabeledMatrix:
    mc = Multicharge(mc)
    if len(mc) != l:
        raise ValueError("multicharge length differs from l")
    if order is None:
        order = enumerate_multipartitions(l, m, mc, n)
    A = LabeledMatrix(order)
    for mu_l in order:
        for lam_l, v in bar_standard(mu_l, mc, n, use_cache, length=length).items():
            A[lam_l, mu_l] = v
    return A

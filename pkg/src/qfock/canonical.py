"""Canonical-basis matrix Δ(q) and checks of the derivative identities at q=1."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from .charge import Multicharge, enumerate_multipartitions, precedes
from .jantzen import Ordering, matrix_J
from .laurent import ONE, ZERO, AsymmetryError, LaurentPoly
from .matrix import LabeledMatrix
from .wedge import matrix_A

__all__ = [
    "AsymmetryError",
    "LabeledMatrix",
    "Report",
    "derivative_matrix",
    "matrix_Delta",
    "verify_A_identity",
    "verify_Delta_identity",
]


def matrix_Delta(A: LabeledMatrix, order: Optional[Sequence] = None) -> LabeledMatrix:
    """Solve Δ = A·bar(Δ) column by column.

    ``order`` must be a total order refining ≺ with larger elements first;
    the default is the display order of ``A``.
    """
    order = list(A.order if order is None else order)
    pos = {k: i for i, k in enumerate(order)}
    # row-wise sparse view of A
    rows = {}
    for (r, c), v in A.entries.items():
        if r != c:
            if pos[c] > pos[r]:
                raise ValueError(f"order does not refine the support of A at ({r}, {c})")
            rows.setdefault(r, []).append((c, v))
    D = LabeledMatrix(A.order)
    for mu in order:
        col = {mu: ONE}
        for lam in order[pos[mu] + 1:]:
            acc = ZERO
            for nu, a in rows.get(lam, ()):
                dv = col.get(nu)
                if dv is not None:
                    acc = acc + a * dv.bar()
            if acc:
                entry = acc.antisym_positive_part()
                if entry:
                    col[lam] = entry
        for lam, v in col.items():
            D[lam, mu] = v
    return D


def derivative_matrix(M: LabeledMatrix) -> LabeledMatrix:
    return M.map(lambda v: v.derivative_at_one(), zero=0)


def _at_one(M: LabeledMatrix) -> LabeledMatrix:
    return M.map(lambda v: v.at_one(), zero=0)


@dataclass
class Report:
    label: str
    violations: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, what: str, diffs) -> None:
        for r, c, got, want in diffs:
            self.violations.append(f"{what} at ({r}, {c}): got {got}, expected {want}")

    def __str__(self) -> str:
        if self.ok:
            return f"{self.label} ok"
        return f"{self.label} FAILED ({len(self.violations)} violations)"


def _identity_int(order) -> LabeledMatrix:
    return LabeledMatrix(order, {(k, k): 1 for k in order}, zero=0)


def _setup(n, l, mc, m):
    mc = Multicharge(mc)
    if len(mc) != l:
        raise ValueError("multicharge length differs from l")
    order = enumerate_multipartitions(l, m, mc, n)
    return mc, order


def _triangularity(report: Report, M: LabeledMatrix, mc, n, name: str) -> None:
    for r, c, v in M.nonzero():
        if r == c:
            if v != 1:
                report.violations.append(f"{name} diagonal at {r} is {v}")
        elif not precedes(r, c, mc, n):
            report.violations.append(f"{name} nonzero at ({r}, {c}) but row does not precede column")


def verify_A_identity(n: int, l: int, mc: Sequence[int], m: int, A: Optional[LabeledMatrix] = None, J: Optional[LabeledMatrix] = None) -> Report:
    mc, order = _setup(n, l, mc, m)
    A = matrix_A(n, l, mc, m, order=order) if A is None else A
    J = matrix_J(Ordering.PREC, n, l, mc, m, order=order) if J is None else J
    rep = Report("A'(1)=2J")
    I = _identity_int(order)
    rep.add("A(1)", _at_one(A).differences(I))
    prod = A @ A.map(LaurentPoly.bar)
    rep.add("A*bar(A)", prod.differences(LabeledMatrix.identity(order)))
    rep.add("A'(1)", derivative_matrix(A).differences(J.scale(2)))
    _triangularity(rep, A, mc, n, "A")
    return rep


def verify_Delta_identity(n: int, l: int, mc: Sequence[int], m: int, A: Optional[LabeledMatrix] = None,
                          J: Optional[LabeledMatrix] = None, D: Optional[LabeledMatrix] = None) -> Report:
    mc, order = _setup(n, l, mc, m)
    A = matrix_A(n, l, mc, m, order=order) if A is None else A
    J = matrix_J(Ordering.PREC, n, l, mc, m, order=order) if J is None else J
    rep = Report("Delta'(1)=J*Delta(1)")
    try:
        D = matrix_Delta(A) if D is None else D
    except AsymmetryError as exc:
        rep.violations.append(f"solve failed: {exc}")
        return rep
    D1 = _at_one(D)
    rep.add("Delta'(1)", derivative_matrix(D).differences(J @ D1))
    rep.add("A*bar(Delta)", (A @ D.map(LaurentPoly.bar)).differences(D))
    for r, c, v in D.nonzero():
        if any(coef < 0 for coef in v.coeffs.values()) or (v.min_degree() or 0) < 0:
            rep.violations.append(f"Delta entry at ({r}, {c}) is not in N[q]: {v}")
    _triangularity(rep, D, mc, n, "Delta")
    return rep

"""Exhaustive ribbon / beta-number checks on small partitions."""

import itertools

from qfock.charge import beta_numbers
from qfock.partitions import (
    Partition,
    extract_ribbon,
    node_content,
    partitions_of,
    remove_ribbon_by_beta,
    strictly_dominates,
)

CHARGES = (-2, 0, 3)


def sub_partitions(p):
    for q in itertools.product(*(range(x + 1) for x in p)):
        if all(a >= b for a, b in zip(q, q[1:])):
            yield Partition(q)


def all_ribbons(max_size, max_len):
    """(kappa, nu, ribbon) for every ribbon kappa/nu with |kappa| <= max_size."""
    for size in range(1, max_size + 1):
        for kappa in partitions_of(size):
            for nu in sub_partitions(kappa):
                if 0 < size - nu.size() <= max_len:
                    rib = extract_ribbon(nu, kappa)
                    if rib is not None:
                        yield kappa, nu, rib


def check_single_ribbons(max_size=10, max_len=6):
    """Removing a ribbon = moving the tail-row bead down by its length. Returns the ribbon count."""
    count = 0
    for kappa, nu, rib in all_ribbons(max_size, max_len):
        for s in CHARGES:
            got_nu, got = remove_ribbon_by_beta(kappa, rib.tail.row, rib.length, s)
            assert got_nu == nu and got == rib, (kappa, nu)
            beta = kappa.part(rib.tail.row) + s - rib.tail.row + 1
            assert node_content(got.head, (s,)) == beta - rib.length
        count += 1
    return count


def check_ribbon_pairs(max_size=10):
    """Two partitions of equal size differ by a pair of ribbons iff their beta-sets share r-2 beads."""
    pairs = 0
    for r in range(1, max_size + 1):
        parts = list(partitions_of(r))
        for nu, kappa in itertools.permutations(parts, 2):
            inter = nu.intersection(kappa)
            rho, rho2 = extract_ribbon(inter, nu), extract_ribbon(inter, kappa)
            for s in CHARGES:
                A = set(beta_numbers(nu, s, r).values)
                B = set(beta_numbers(kappa, s, r).values)
                both = rho is not None and rho2 is not None
                assert both == (len(A & B) == r - 2), (nu, kappa)
                if not both:
                    continue
                h = rho.length
                assert rho2.length == h
                head, head2 = node_content(rho.head, (s,)), node_content(rho2.head, (s,))
                assert head in B - A and head + h in A - B
                assert head2 in A - B and head2 + h in B - A
                y, y2 = rho2.tail.row, rho2.head.row
                x2, x = rho.tail.row, rho.head.row
                if strictly_dominates(nu, kappa):
                    assert y <= y2 < x2 <= x
                else:
                    assert strictly_dominates(kappa, nu) and x2 <= x < y <= y2
            if rho is not None and rho2 is not None:
                pairs += 1
    return pairs

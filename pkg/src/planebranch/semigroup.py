"""Numerical semigroups of plane branches and their characteristic data.

The semigroup of a branch is generated by the multiplicity v0 and the
contact orders v1, ..., vg; it determines and is determined by the
characteristic exponents beta_0, ..., beta_g through

    v_{i+1} = n_i v_i + beta_{i+1} - beta_i,      n_i = e_{i-1} / e_i,

with e_i = gcd(beta_0, ..., beta_i) = gcd(e_{i-1}, v_i).  Not every
numerical semigroup arises this way: the e-chain must drop strictly to 1
and each generator must satisfy v_{i+1} > n_i v_i.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class CharData:
    """Characteristic exponents and the derived discrete invariants."""

    beta: tuple  # (beta_0, ..., beta_g), beta_0 = multiplicity
    e: tuple  # gcd chain, e_0 = beta_0 > e_1 > ... > e_g = 1
    n: tuple  # (1, n_1, ..., n_g) with n_i = e_{i-1}/e_i
    puiseux_pairs: tuple  # ((n_i, m_i))_{i=1..g} with m_i = beta_i / e_i
    genus: int


class NumericalSemigroup:
    """A subsemigroup of the naturals with finite complement.

    Stores the minimal generating set, the conductor (first element from
    which everything is a member), a membership table over
    [0, conductor + 2 * multiplicity], and the gap list.
    """

    __slots__ = ("generators", "conductor", "gaps", "_table")

    def __init__(self, generators):
        gens = sorted(set(int(g) for g in generators))
        if not gens or gens[0] < 1:
            raise ValueError("generators must be positive integers")
        if math.gcd(*gens) != 1:
            raise ValueError("generators must have gcd 1")
        table, conductor = _sieve(gens)
        minimal = tuple(
            g for g in gens if not _reachable_without(gens, g, conductor)
        )
        self.generators = minimal
        self.conductor = conductor
        bound = conductor + 2 * minimal[0]
        if len(table) <= bound:
            table = _sieve(gens, bound)[0]
        self._table = table[: bound + 1]
        self.gaps = tuple(v for v in range(1, conductor) if not table[v])

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    def contains(self, v: int) -> bool:
        if v < 0:
            return False
        if v < len(self._table):
            return self._table[v]
        return True  # beyond the conductor everything is a member

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def gaps_above(self, threshold: int):
        return [g for g in self.gaps if g > threshold]

    def __eq__(self, other):
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators)
        return f"NumericalSemigroup(<{gens}>, conductor={self.conductor})"


def _sieve(gens, bound=None):
    """Reachability table for sums of generators and the conductor."""
    if bound is None:
        # Frobenius number is below multiplicity * max generator when gcd = 1.
        bound = gens[0] * gens[-1] + gens[-1]
    table = [False] * (bound + 1)
    table[0] = True
    for v in range(1, bound + 1):
        for g in gens:
            if g <= v and table[v - g]:
                table[v] = True
                break
    last_gap = -1
    for v in range(bound, 0, -1):
        if not table[v]:
            last_gap = v
            break
    return table, last_gap + 1


def _reachable_without(gens, g, conductor):
    others = [x for x in gens if x != g]
    if not others:
        return False
    reach = {0}
    frontier = [0]
    while frontier:
        v = frontier.pop()
        for x in others:
            w = v + x
            if w <= g and w not in reach:
                reach.add(w)
                frontier.append(w)
    return g in reach


def semigroup_from_generators(generators) -> NumericalSemigroup:
    return NumericalSemigroup(generators)


def two_generator_rep(w: int, v0: int, v1: int):
    """Write w = a*v0 + b*v1 with a, b >= 0, smallest b; None if impossible."""
    if w < 0:
        return None
    for b in range(w // v1 + 1):
        rem = w - b * v1
        if rem % v0 == 0:
            return (rem // v0, b)
    return None


def char_data_from_exponents(beta) -> CharData:
    beta = tuple(int(b) for b in beta)
    if len(beta) < 1 or beta[0] < 2:
        raise ValueError("need a multiplicity beta_0 >= 2")
    if any(b2 <= b1 for b1, b2 in zip(beta, beta[1:])):
        raise ValueError("characteristic exponents must increase strictly")
    e = [beta[0]]
    for b in beta[1:]:
        e.append(math.gcd(e[-1], b))
    if any(e2 >= e1 for e1, e2 in zip(e, e[1:])) or e[-1] != 1:
        raise ValueError("gcd chain must drop strictly to 1")
    n = [1] + [e[i - 1] // e[i] for i in range(1, len(e))]
    pairs = tuple((n[i], beta[i] // e[i]) for i in range(1, len(beta)))
    return CharData(beta=beta, e=tuple(e), n=tuple(n), puiseux_pairs=pairs, genus=len(beta) - 1)


def generators_from_char_exponents(beta):
    """Semigroup generators (v_0, ..., v_g) from characteristic exponents."""
    cd = char_data_from_exponents(beta)
    beta = cd.beta
    v = [beta[0]]
    if cd.genus >= 1:
        v.append(beta[1])
    for i in range(1, cd.genus):
        v.append(cd.n[i] * v[i] + beta[i + 1] - beta[i])
    return tuple(v)


def char_exponents_from_generators(gens):
    """Inverse of generators_from_char_exponents; validates on the way."""
    v = tuple(int(g) for g in gens)
    ok, reason = _plane_branch_checks(v)
    if not ok:
        raise ValueError(f"not a plane branch semigroup: {reason}")
    beta = [v[0]]
    if len(v) >= 2:
        beta.append(v[1])
    e = [v[0], math.gcd(v[0], v[1])] if len(v) >= 2 else [v[0]]
    for i in range(1, len(v) - 1):
        n_i = e[i - 1] // e[i]
        beta.append(v[i + 1] - n_i * v[i] + beta[i])
        e.append(math.gcd(e[i], v[i + 1]))
    return tuple(beta)


def _plane_branch_checks(v):
    if len(v) < 2:
        return (len(v) == 1 and v[0] == 1), "a single generator must be 1"
    if v[0] < 2:
        return False, "multiplicity must be >= 2"
    if any(b <= a for a, b in zip(v, v[1:])):
        return False, "generators must increase strictly"
    e = [v[0]]
    for g in v[1:]:
        e.append(math.gcd(e[-1], g))
    if any(e2 >= e1 for e1, e2 in zip(e, e[1:])):
        return False, "gcd chain must drop strictly at every generator"
    if e[-1] != 1:
        return False, "gcd of all generators must be 1"
    for i in range(1, len(v) - 1):
        n_i = e[i - 1] // e[i]
        if v[i + 1] <= n_i * v[i]:
            return False, f"generator v_{i + 1} must exceed n_{i} * v_{i}"
    return True, ""


def validate_plane_branch_semigroup(gens) -> bool:
    """Can these generators be the value semigroup of a plane branch?"""
    try:
        v = tuple(int(g) for g in gens)
    except (TypeError, ValueError):
        return False
    return _plane_branch_checks(v)[0]


def conductor_formula(gens) -> int:
    """Closed form sum((n_i - 1) v_i) - v_0 + 1 for plane branch semigroups."""
    v = tuple(gens)
    e = [v[0]]
    for g in v[1:]:
        e.append(math.gcd(e[-1], g))
    total = 0
    for i in range(1, len(v)):
        n_i = e[i - 1] // e[i]
        total += (n_i - 1) * v[i]
    return total - v[0] + 1


def gaps_above(value_set, threshold: int):
    """Gaps of a semigroup or value set strictly above the threshold."""
    return value_set.gaps_above(threshold)

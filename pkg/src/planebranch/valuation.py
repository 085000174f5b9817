"""Value sets of functions and differentials along a plane branch.

The value of a function h is the t-order of its pullback; the value of a
1-form omega = H dX + G dY is

    v(omega) = ord_t( H(x(t), y(t)) x'(t) + G(x(t), y(t)) y'(t) ) + 1.

Four sets are computed, each with one explicit witness per attained value:

  Gamma        values of functions (the numerical semigroup, re-derived
               analytically and checked against the combinatorial table),
  Lambda       values of all 1-forms,
  Lambda2      values of forms with both components in (X, Y)^2,
  LambdaPrime  values of forms with the dX-component in (X, Y)^2 and the
               dY-component in the ideal (X^2, Y).

Each set is produced by Gaussian elimination over the pulled-back basis
monomials, ordered by leading t-exponent; the combination witnessing each
pivot is carried along.  Everything is exact.

The smallest element of Lambda outside Gamma, minus v0, is the Zariski
invariant lambda; branches whose Lambda adds nothing to the semigroup
form the monomial class (equivalent to (t^v0, t^v1)) and get a sentinel.
"""

from __future__ import annotations

from dataclasses import dataclass

from .branch import PuiseuxParam
from .series import AboveTruncation, BiPoly, TSeries, bipoly_pullback


class _MonomialClass:
    """Sentinel: the branch has no differential values outside its semigroup."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "MonomialClass"

    def __bool__(self):
        return False


MONOMIAL_CLASS = _MonomialClass()


class InternalError(RuntimeError):
    """A theory-backed assertion failed; the computation cannot be trusted."""


@dataclass(frozen=True)
class DifferentialForm:
    """A 1-form H dX + G dY with polynomial components."""

    H: BiPoly
    G: BiPoly

    def in_omega2_sq(self) -> bool:
        return self.H.in_max_ideal_sq() and self.G.in_max_ideal_sq()

    def in_omega_prime(self) -> bool:
        return self.H.in_max_ideal_sq() and self.G.in_ideal_x2_y()

    def to_dict(self) -> dict:
        return {"dX": self.H.to_pairs(), "dY": self.G.to_pairs()}

    @classmethod
    def from_dict(cls, data) -> "DifferentialForm":
        return cls(H=BiPoly.from_pairs(data.get("dX", [])),
                   G=BiPoly.from_pairs(data.get("dY", [])))


class ValueSet:
    """Attained values of one of the four classes, with witnesses.

    ``finite_part`` lists every attained value below ``all_above``;
    everything from ``all_above`` on is attained.  ``witnesses`` maps each
    listed value to a BiPoly (Gamma) or DifferentialForm (Lambda family)
    realizing it; the map may extend beyond ``all_above`` up to the
    enumeration window ``decided_to`` when callers need explicit
    realizations there (term elimination does).
    """

    __slots__ = ("kind", "finite_part", "finite_set", "all_above", "witnesses", "decided_to")

    def __init__(self, kind, finite_part, all_above, witnesses, decided_to):
        self.kind = kind
        self.finite_part = tuple(sorted(finite_part))
        self.finite_set = frozenset(self.finite_part)
        self.all_above = all_above
        self.witnesses = witnesses
        self.decided_to = decided_to
        for w in range(all_above, decided_to + 1):
            if w not in witnesses:
                raise InternalError(
                    f"{kind}: value {w} >= all_above={all_above} was not attained "
                    f"within the decided window [1, {decided_to}]"
                )

    def contains(self, v: int) -> bool:
        if v >= self.all_above:
            return True
        return v in self.finite_set

    __contains__ = contains

    def gaps_above(self, threshold: int):
        return [v for v in range(threshold + 1, self.all_above) if v not in self.finite_set]

    def witness(self, v: int):
        return self.witnesses.get(v)

    def __repr__(self):
        return (
            f"ValueSet({self.kind}, finite={list(self.finite_part)}, "
            f"all_above={self.all_above})"
        )


def value_of_function(phi: PuiseuxParam, h: BiPoly):
    """t-order of the pullback of h; AboveTruncation if it vanishes through N."""
    return bipoly_pullback(h, phi).order()


def value_of_differential(phi: PuiseuxParam, omega: DifferentialForm):
    """ord(pullback(H) x' + pullback(G) y') + 1, the value of H dX + G dY."""
    s = _integrand(phi, omega.H, omega.G)
    o = s.order()
    if isinstance(o, int):
        return o + 1
    return AboveTruncation(o.trunc + 1)


def _integrand(phi: PuiseuxParam, H: BiPoly, G: BiPoly) -> TSeries:
    v0 = phi.v0
    acc = None
    if not H.is_zero():
        acc = bipoly_pullback(H, phi).shift(v0 - 1).scale(v0)
    if not G.is_zero():
        part = bipoly_pullback(G, phi) * phi.y_series().derivative()
        acc = part if acc is None else acc + part
    if acc is None:
        acc = TSeries(phi.trunc)
    return acc


def _y_power(phi: PuiseuxParam, b: int) -> TSeries:
    cache = phi._cache.setdefault("ypow", {0: TSeries.monomial(0, 1, phi.trunc)})
    if b not in cache:
        top = max(cache)
        for k in range(top + 1, b + 1):
            cache[k] = cache[k - 1] * phi.y_series()
    return cache[b]


def _monomial_pullback(phi: PuiseuxParam, a: int, b: int) -> TSeries:
    """Pullback of X^a Y^b: exact shift of a cached y-power (x is t^v0)."""
    return _y_power(phi, b).shift(a * phi.v0)


def _eliminate(rows, lead_cap):
    """Greedy Gaussian elimination by leading exponent.

    ``rows`` is a list of (sort_key, series, wH, wG) with deterministic
    keys; rows are processed by (initial order, key) and reduced against
    the pivots found so far.  Returns {lead: (series, wH, wG)} for leads
    <= lead_cap.
    """
    rows = sorted(rows, key=lambda r: (r[1].order_floor(), r[0]))
    pivots = {}
    for _, s, wH, wG in rows:
        while s.terms:
            lead = min(s.terms)
            if lead > lead_cap:
                break
            hit = pivots.get(lead)
            if hit is None:
                pivots[lead] = (s, wH, wG)
                break
            ps, pH, pG = hit
            f = s.terms[lead] / ps.terms[lead]
            s = s - ps.scale(f)
            wH = wH - pH.scale(f)
            wG = wG - pG.scale(f)
    return pivots


def _assert_window_filled(kind, values, all_above, decided_to):
    missing = [w for w in range(all_above, decided_to + 1) if w not in values]
    if missing:
        raise InternalError(
            f"{kind}: threshold {all_above} is wrong; {missing[:5]} not attained"
        )


def semigroup_of_values(phi: PuiseuxParam) -> ValueSet:
    """Gamma as attained function values, with polynomial witnesses.

    Cross-checked in full against the combinatorial membership table of
    the semigroup derived from the characteristic exponents.
    """
    if "gamma_vs" in phi._cache:
        return phi._cache["gamma_vs"]
    v0, v1 = phi.v0, phi.v1
    sg = phi.semigroup
    bound = phi.trunc - 1
    rows = []
    for a in range(bound // v0 + 1):
        for b in range((bound - a * v0) // v1 + 1):
            if a == 0 and b == 0:
                continue
            key = (a * v0 + b * v1, a, b)
            rows.append((key, _monomial_pullback(phi, a, b), BiPoly.monomial(a, b), BiPoly.zero()))
    pivots = _eliminate(rows, bound)
    values = {}
    for lead, (s, wH, _) in pivots.items():
        values[lead] = wH
    for w in range(1, bound + 1):
        if sg.contains(w) != (w in values):
            raise InternalError(
                f"function values disagree with the semigroup table at {w}: "
                f"table says {sg.contains(w)}, elimination says {w in values}"
            )
    finite = [w for w in values if w < sg.conductor]
    vs = ValueSet(
        kind="Gamma",
        finite_part=finite,
        all_above=sg.conductor,
        witnesses=values,
        decided_to=bound,
    )
    phi._cache["gamma_vs"] = vs
    return vs


_KIND_FILTERS = {
    "Lambda": {
        "dX": lambda a, b: True,
        "dY": lambda a, b: True,
    },
    "Lambda2": {
        "dX": lambda a, b: a + b >= 2,
        "dY": lambda a, b: a + b >= 2,
    },
    "LambdaPrime": {
        "dX": lambda a, b: a + b >= 2,
        "dY": lambda a, b: a >= 2 or b >= 1,
    },
}


def lambda_set(phi: PuiseuxParam, kind: str = "Lambda") -> ValueSet:
    """Differential value set of the requested class, with form witnesses.

    The witness combinations are produced by elimination over monomial
    forms X^a Y^b dX / X^a Y^b dY filtered by the class constraints; the
    basis is complete for every value decided below the cap c + 2 v0.
    """
    if kind not in _KIND_FILTERS:
        raise ValueError(f"unknown value-set kind {kind!r}")
    cache_key = ("lambda_vs", kind)
    if cache_key in phi._cache:
        return phi._cache[cache_key]
    v0, v1 = phi.v0, phi.v1
    c = phi.semigroup.conductor
    cap = c + 2 * v0
    filt = _KIND_FILTERS[kind]
    yprime = phi.y_series().derivative()
    rows = []
    for a in range(cap // v0 + 1):
        for b in range((cap - a * v0) // v1 + 1):
            base = a * v0 + b * v1
            if filt["dX"](a, b) and base + v0 <= cap:
                integ = _monomial_pullback(phi, a, b).shift(v0 - 1).scale(v0)
                rows.append(((base + v0, a, b, 0), integ,
                             BiPoly.monomial(a, b), BiPoly.zero()))
            if filt["dY"](a, b) and base + v1 <= cap:
                integ = (_monomial_pullback(phi, a, b) * yprime)
                rows.append(((base + v1, a, b, 1), integ,
                             BiPoly.zero(), BiPoly.monomial(a, b)))
    pivots = _eliminate(rows, cap - 1)
    values = {}
    for lead, (_, wH, wG) in pivots.items():
        values[lead + 1] = DifferentialForm(H=wH, G=wG)

    if kind == "Lambda":
        all_above = c
    else:
        # everything from c + v0 on is attained once some differential value
        # escapes the semigroup; the monomial class only guarantees c + 2 v0
        # (realized by X * h running over function values >= c).
        lam = _lambda_gaps(phi)
        all_above = c + v0 if lam else c + 2 * v0
    _assert_window_filled(kind, values, all_above, cap)
    finite = [w for w in values if w < all_above]

    vs = ValueSet(
        kind=kind,
        finite_part=finite,
        all_above=all_above,
        witnesses=values,
        decided_to=cap,
    )
    if kind == "Lambda":
        sg = phi.semigroup
        for w in list(vs.finite_part):
            if sg.contains(w):
                continue
            got = value_of_differential(phi, values[w])
            if got != w:
                raise InternalError(f"witness for differential value {w} attains {got}")
    phi._cache[cache_key] = vs
    return vs


def _lambda_gaps(phi: PuiseuxParam):
    """Sorted differential values outside the semigroup (below the conductor)."""
    key = "lambda_gaps"
    if key not in phi._cache:
        vs = lambda_set(phi, "Lambda")
        sg = phi.semigroup
        phi._cache[key] = tuple(w for w in vs.finite_part if not sg.contains(w))
    return phi._cache[key]


def zariski_invariant(phi: PuiseuxParam):
    """min(Lambda minus Gamma) - v0, or the monomial-class sentinel.

    When the branch is literally in the reduced shape (second y-exponent
    equal to the invariant), the independent formula through the form
    v0 X dY - v1 Y dX is asserted to agree.
    """
    gaps = _lambda_gaps(phi)
    if not gaps:
        return MONOMIAL_CLASS
    lam = gaps[0] - phi.v0
    tail = [e for e in phi.support() if e != phi.v1]
    if tail and tail[0] == lam:
        omega = DifferentialForm(
            H=BiPoly.monomial(0, 1, -phi.v1), G=BiPoly.monomial(1, 0, phi.v0)
        )
        direct = value_of_differential(phi, omega)
        if direct != lam + phi.v0:
            raise InternalError(
                f"Zariski invariant cross-check failed: {direct} != {lam + phi.v0}"
            )
    return lam


def s_sandwich_check(phi: PuiseuxParam) -> dict:
    """The six explicit values S, pinched between Lambda and Lambda2.

    S = {v0, 2v0, v1, v0+v1, 2v1, v0+lambda} consists of differential
    values attained by forms with a linear component.  The difference
    Lambda minus Lambda2 equals S, with two corrections that both occur
    exactly when n1 = 2 and the genus is at least 2:

      * v1 + lambda joins the difference (only forms with a linear part
        reach it, by cancellation against Y dY), and
      * 2 v1 leaves it, because with m1 v0 = 2 v1 the form X^(m1-1) dX has
        both components in the square of the maximal ideal yet attains
        2 v1 — so 2 v1 lies in Lambda2 in that regime.

    Everything is verified against the computed sets; any discrepancy
    raises InternalError.
    """
    lam = zariski_invariant(phi)
    if lam is MONOMIAL_CLASS:
        raise ValueError("the sandwich needs a branch outside the monomial class")
    v0, v1 = phi.v0, phi.v1
    big = lambda_set(phi, "Lambda")
    small = lambda_set(phi, "Lambda2")
    S = sorted({v0, 2 * v0, v1, v0 + v1, 2 * v1, v0 + lam})
    if len(S) != 6:
        raise InternalError(f"the six sandwich values collide: {S}")
    diff = [w for w in range(1, small.all_above) if big.contains(w) and not small.contains(w)]
    top = v1 + lam
    n1 = phi.char.n[1]
    genus = phi.char.genus
    special = n1 == 2 and genus >= 2
    expected = sorted((set(S) - {2 * v1}) | {top}) if special else S
    if diff != expected:
        raise InternalError(f"sandwich fails: expected {expected}, computed {diff}")
    has_top = top in diff
    if has_top != special:
        raise InternalError(
            f"top membership {has_top} contradicts n1={n1}, genus={genus}"
        )
    if special and not small.contains(2 * v1):
        raise InternalError(f"2*v1 = {2 * v1} should be attained in Lambda2 here")
    return {
        "S": S,
        "lambda_minus_lambda2": diff,
        "top_value": top,
        "top_attained": has_top,
        "two_v1_in_lambda2": special,
        "n1": n1,
        "genus": genus,
    }

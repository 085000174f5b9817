"""Reduction of plane branches to analytic normal forms.

The admissible coordinate changes act as

    X -> r**v0 X + p(X, Y),   Y -> r**v1 Y + q(X, Y),   r != 0,

with p of value > v0 and q of value > v1 along the branch; together with a
reparametrization t -> rho(t) they transform one Puiseux parametrization
into another with the same semigroup.  Applying a change is exact: the new
x-coordinate r**v0 t**v0 + p(x(t), y(t)) is written as (rho(t))**v0 by a
v0-th root of a unit series, and the new y-coefficients are obtained by a
triangular solve against the powers of rho, entirely over Q.

Term elimination pairs each eliminable order k with a differential form:
a form H dX + G dY of value k + v0 (with the appropriate component
constraints) yields the one-parameter family p = -s G, q = s H whose
effect on the coefficient of t**k is affine in s with nonzero slope, so a
single division finds the parameter that kills the term.  The form is
chosen so that everything below k is provably untouched (function values
of H and G give an explicit pollution threshold); when no such form
exists — this happens only for the value v1 + lambda when n1 = 2 and the
genus is at least 2 — the spill below k lands on semigroup orders and is
restored by the same machinery, all sub-steps being composed into a
single logged change.

Two branches are analytically equivalent iff their normal forms agree up
to the residual homothety scaling a_i -> r**(i - v1) a_i, which is decided
exactly by a gcd/Bezout computation on the coefficient ratios.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .branch import PuiseuxParam
from .semigroup import two_generator_rep
from .series import (
    AboveTruncation,
    BiPoly,
    R0,
    R1,
    TSeries,
    bipoly_pullback,
    rat,
    rat_str,
    series_root_unit,
)
from .valuation import (
    MONOMIAL_CLASS,
    DifferentialForm,
    InternalError,
    lambda_set,
    semigroup_of_values,
    value_of_function,
    zariski_invariant,
)


@dataclass(frozen=True)
class CoordChange:
    """One admissible change (r, p, q); the identity is (1, 0, 0)."""

    r: object
    p: BiPoly
    q: BiPoly

    def is_identity(self) -> bool:
        return self.r == 1 and self.p.is_zero() and self.q.is_zero()

    def to_dict(self) -> dict:
        return {"r": rat_str(self.r), "p": self.p.to_pairs(), "q": self.q.to_pairs()}

    @classmethod
    def from_dict(cls, data) -> "CoordChange":
        return cls(
            r=rat(data["r"]),
            p=BiPoly.from_pairs(data.get("p", [])),
            q=BiPoly.from_pairs(data.get("q", [])),
        )

    @classmethod
    def identity(cls) -> "CoordChange":
        return cls(r=R1, p=BiPoly.zero(), q=BiPoly.zero())

    @classmethod
    def homothety(cls, r) -> "CoordChange":
        return cls(r=rat(r), p=BiPoly.zero(), q=BiPoly.zero())


def compose_changes(first: CoordChange, second: CoordChange, v0: int, v1: int) -> CoordChange:
    """The single change equivalent to applying ``first`` then ``second``."""
    r1v0 = rat(first.r) ** v0
    r1v1 = rat(first.r) ** v1
    sx = BiPoly.monomial(1, 0, r1v0) + first.p
    sy = BiPoly.monomial(0, 1, r1v1) + first.q
    r2 = rat(second.r)
    return CoordChange(
        r=rat(first.r) * r2,
        p=first.p.scale(r2**v0) + second.p.substitute(sx, sy),
        q=first.q.scale(r2**v1) + second.q.substitute(sx, sy),
    )


def _ts_pow(base: TSeries, n: int, cap: int) -> TSeries:
    out = TSeries.monomial(0, 1, cap)
    b = base
    while n:
        if n & 1:
            out = (out * b).truncate(cap)
        n >>= 1
        if n:
            b = (b * b).truncate(cap)
    return out


def apply_coordinate_change(phi: PuiseuxParam, ch: CoordChange) -> PuiseuxParam:
    """Transform the parametrization by an admissible change, exactly.

    The output is trusted through the same truncation order N as the
    input: the reparametrization rho has order 1, so the unknown tail of
    y enters the solved coefficients only at orders >= N.  The semigroup
    and the leading coefficient are asserted to be preserved.
    """
    v0, v1, N = phi.v0, phi.v1, phi.trunc
    r = rat(ch.r)
    if r == 0:
        raise ValueError("the scaling r of a coordinate change must be nonzero")
    pt = bipoly_pullback(ch.p, phi).truncate(N)
    qt = bipoly_pullback(ch.q, phi).truncate(N)
    if pt.terms and min(pt.terms) <= v0:
        raise ValueError(f"p must have value > v0 = {v0} along the branch")
    if qt.terms and min(qt.terms) <= v1:
        raise ValueError(f"q must have value > v1 = {v1} along the branch")

    W = phi.y_series().scale(r**v1) + qt
    if pt.is_zero():
        # rho(t) = r t: plain coefficient scaling
        rinv = 1 / r
        new_terms = {e: c * rinv**e for e, c in W.terms.items()}
    else:
        unit = series_root_unit(
            TSeries.monomial(0, 1, N - v0) + pt.shift(-v0).scale(1 / r**v0), v0
        )
        rho = unit.shift(1).scale(r)  # order 1, leading coefficient r
        new_terms = {}
        R = W.truncate(N)
        if R.terms and min(R.terms) < v1:
            raise InternalError("transformed y acquired terms below v1")
        P = _ts_pow(rho, v1, N)  # leading coefficient r**e at t**e throughout
        for e in range(v1, N):
            ce = R.terms.get(e, R0)
            if ce != 0:
                ce = ce / r**e
                new_terms[e] = ce
                R = R - P.scale(ce)
            if e + 1 < N:
                P = (P * rho).truncate(N)
        if R.terms:
            raise InternalError(f"triangular solve left residual terms {sorted(R.terms)}")

    out = PuiseuxParam(v0, new_terms, extra=phi.extra, label=phi.label)
    if out.lead_rescale is not None:
        raise InternalError("coordinate change disturbed the leading coefficient")
    if out.semigroup.generators != phi.semigroup.generators:
        raise InternalError(
            f"coordinate change altered the semigroup: "
            f"{phi.semigroup.generators} -> {out.semigroup.generators}"
        )
    return out


# -- term elimination ---------------------------------------------------


@dataclass(frozen=True)
class _Recipe:
    """One-parameter family of changes killing a target order."""

    name: str  # EC1 | EC2 | witness | special
    p_gen: BiPoly  # p = s * p_gen
    q_gen: BiPoly  # q = s * q_gen
    safe: bool  # provably no effect below the target order
    threshold: object = None  # first order where parameter-degree >= 2 may act


def _gamma_witness(phi: PuiseuxParam, w: int) -> BiPoly:
    """A polynomial of exact value w along phi (w in the semigroup)."""
    rep = two_generator_rep(w, phi.v0, phi.v1)
    if rep is not None:
        return BiPoly.monomial(*rep)
    h = semigroup_of_values(phi).witnesses.get(w)
    if h is None:
        raise InternalError(f"no function witness for semigroup value {w}")
    return h


def _witness_threshold(phi: PuiseuxParam, H: BiPoly, G: BiPoly):
    """First t-order that parameter-degree >= 2 terms can reach, or None.

    The family p = -s G, q = s H is affine in s through every order below
    this threshold: quadratic contributions come from the square of the
    reparametrization correction acting on y (order v1 + 2(v(G) - v0)) or
    from its interaction with q (order v(H) + v(G) - v0).
    """
    def val(poly):
        if poly.is_zero():
            return None
        v = value_of_function(phi, poly)
        return None if isinstance(v, AboveTruncation) else v

    vG = val(G)
    vH = val(H)
    cands = []
    if vG is not None:
        cands.append(phi.v1 + 2 * (vG - phi.v0))
        if vH is not None:
            cands.append(vH + vG - phi.v0)
    return min(cands) if cands else None


def _witness_recipe(phi: PuiseuxParam, om: DifferentialForm, k: int, name="witness") -> _Recipe:
    thr = _witness_threshold(phi, om.H, om.G)
    return _Recipe(
        name=name,
        p_gen=-om.G,
        q_gen=om.H,
        safe=thr is None or thr > k,
        threshold=thr,
    )


def _candidate_recipes(phi: PuiseuxParam, k: int, lam):
    """Ordered elimination recipes for the coefficient of t**k.

    Priority: value-k function (q only) -> value-(k+v0-v1) function
    (p only) -> stored differential witness for k+v0, improved by
    semigroup shifts to push the pollution threshold past k -> the
    explicit form v1 X^(m1-1) dX - v0 Y dY for the one stubborn order of
    the n1 = 2, genus >= 2 stratum.
    """
    v0, v1 = phi.v0, phi.v1
    sg = phi.semigroup
    if sg.contains(k):
        return [
            _Recipe(name="EC1", p_gen=BiPoly.zero(), q_gen=_gamma_witness(phi, k), safe=True)
        ]
    if k + v0 - v1 > 0 and sg.contains(k + v0 - v1):
        return [
            _Recipe(
                name="EC2",
                p_gen=_gamma_witness(phi, k + v0 - v1),
                q_gen=BiPoly.zero(),
                safe=True,
            )
        ]
    out = []
    lp = lambda_set(phi, "LambdaPrime")
    w = k + v0
    variants = []
    base = lp.witnesses.get(w)
    if base is not None:
        variants.append((0, _witness_recipe(phi, base, k)))
        lp_min = min(lp.witnesses) if lp.witnesses else w
        for g in range(1, w - lp_min + 1):
            if not sg.contains(g):
                continue
            om = lp.witnesses.get(w - g)
            if om is None:
                continue
            shift = _gamma_witness(phi, g)
            shifted = DifferentialForm(H=shift * om.H, G=shift * om.G)
            variants.append((g, _witness_recipe(phi, shifted, k)))
        # prefer provably-clean variants with the largest head-room
        variants.sort(
            key=lambda t: (
                not t[1].safe,
                -(t[1].threshold if t[1].threshold is not None else 10**9),
                t[0],
            )
        )
        out.extend(v for _, v in variants)
    if (
        lam is not MONOMIAL_CLASS
        and phi.char.n[1] == 2
        and phi.char.genus >= 2
        and k == v1 + lam - v0
    ):
        m1 = phi.char.puiseux_pairs[0][1]
        om_star = DifferentialForm(
            H=BiPoly.monomial(m1 - 1, 0, v1), G=BiPoly.monomial(0, 1, -v0)
        )
        out.append(_witness_recipe(phi, om_star, k, name="special"))
    return out


def _interp_power_coeffs(points):
    """Power-basis coefficients of the polynomial through exact points."""
    coeffs = [R0] * len(points)
    for xi, yi in points:
        # Lagrange basis for xi: product of (s - xj)/(xi - xj) over j != i
        basis = [R1]  # low-to-high coefficients
        denom = R1
        for xj, _ in points:
            if xj == xi:
                continue
            denom = denom * (xi - xj)
            nxt = [R0] * (len(basis) + 1)
            for m, b in enumerate(basis):
                nxt[m] = nxt[m] - xj * b
                nxt[m + 1] = nxt[m + 1] + b
            basis = nxt
        scale = yi / denom
        for m, b in enumerate(basis):
            coeffs[m] = coeffs[m] + scale * b
    return coeffs


def _rational_roots(coeffs):
    """All rational roots of the polynomial (low-to-high coefficients)."""
    while coeffs and coeffs[-1] == 0:
        coeffs = coeffs[:-1]
    if len(coeffs) <= 1:
        return []
    roots = []
    if coeffs[0] == 0:
        roots.append(R0)
        while coeffs and coeffs[0] == 0:
            coeffs = coeffs[1:]
    if len(coeffs) <= 1:
        return roots
    den = 1
    for c in coeffs:
        d = int(c.denominator)
        den = den * d // math.gcd(den, d)
    ints = [int(c * den) for c in coeffs]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    ints = [v // g for v in ints]
    a_lo, a_hi = abs(ints[0]), abs(ints[-1])
    if a_lo > 10**15 or a_hi > 10**15:
        raise InternalError("parameter polynomial too large for exact root search")

    def divisors(n):
        out = set()
        d = 1
        while d * d <= n:
            if n % d == 0:
                out.add(d)
                out.add(n // d)
            d += 1
        return out

    for p in divisors(a_lo):
        for q in divisors(a_hi):
            for cand in (rat(p) / q, -rat(p) / q):
                acc = R0
                for c in reversed(ints):
                    acc = acc * cand + c
                if acc == 0 and cand not in roots:
                    roots.append(cand)
    return roots


def _solve_step(phi: PuiseuxParam, recipe: _Recipe, k: int, target):
    """Find s with coefficient_k(phi after recipe(s)) = target; apply it.

    The response at order k is a polynomial in s of degree at most
    k - v1 (every extra power of the parameter drags in one more factor
    of positive order).  Almost always it is affine and two samples
    settle it; otherwise the polynomial is interpolated exactly and its
    rational roots are enumerated.  For recipes with a pollution
    threshold above k, the jet below k is checked to be untouched.
    """
    a0 = phi.coeff(k)

    def at(s):
        ch = CoordChange(r=R1, p=recipe.p_gen.scale(s), q=recipe.q_gen.scale(s))
        return apply_coordinate_change(phi, ch), ch

    phi1, _ = at(R1)
    c1 = phi1.coeff(k) - a0
    if c1 == 0 and recipe.safe:
        raise InternalError(
            f"recipe {recipe.name} for order {k} is ineffective (zero slope)"
        )
    out = ch = None
    phi2, _ = at(rat(2))
    if c1 != 0 and phi2.coeff(k) - a0 == 2 * c1:
        s_star = (target - a0) / c1
        cand, cand_ch = at(s_star)
        if cand.coeff(k) == target:
            out, ch = cand, cand_ch
    if out is None:
        degree = k - phi.v1
        samples = {0: a0, 1: phi1.coeff(k), 2: phi2.coeff(k)}
        points = []
        for i in range(degree + 1):
            if i in samples:
                points.append((rat(i), samples[i]))
            else:
                points.append((rat(i), at(rat(i))[0].coeff(k)))
        poly = _interp_power_coeffs(points)
        poly[0] = poly[0] - target
        roots = _rational_roots(poly)
        if not roots:
            raise InternalError(
                f"recipe {recipe.name} at order {k} needs an irrational parameter"
            )
        s_star = sorted(roots, key=lambda x: (x.denominator, abs(x.numerator), x < 0))[0]
        out, ch = at(s_star)
    if out.coeff(k) != target:
        raise InternalError(f"recipe {recipe.name} failed to set order {k} exactly")
    if recipe.safe:
        for e in out.support():
            if e < k and out.terms.get(e) != phi.terms.get(e):
                raise InternalError(
                    f"recipe {recipe.name} (threshold {recipe.threshold}) "
                    f"disturbed the jet at order {e} < {k}"
                )
        for e in phi.support():
            if e < k and out.terms.get(e) != phi.terms.get(e):
                raise InternalError(
                    f"recipe {recipe.name} erased the jet at order {e} < {k}"
                )
    return out, ch


_CLEANUP_ROUNDS = 64


def eliminate_term(phi: PuiseuxParam, k: int, _target=None):
    """Remove the t**k term by one composed admissible change.

    k must be an eliminable order: above v1, different from the Zariski
    invariant, with k + v0 in Lambda.  Returns (new branch, change); the
    change replays bit-identically on the input.  The jet below k and the
    semigroup are preserved (verified, not assumed).
    """
    lam = zariski_invariant(phi)
    target = R0 if _target is None else rat(_target)
    if k <= phi.v1:
        raise ValueError(f"order {k} is not above v1 = {phi.v1}")
    if lam is not MONOMIAL_CLASS and k == lam and target == 0:
        raise ValueError(f"order {k} is the Zariski invariant; it cannot be removed")
    recipes = _candidate_recipes(phi, k, lam)
    if not recipes:
        raise ValueError(
            f"order {k} is not eliminable: {k + phi.v0} admits no differential witness"
        )
    recipe = recipes[0]
    cur, ch = _solve_step(phi, recipe, k, target)
    changes = [ch]
    if not recipe.safe:
        ref = dict(phi.terms)
        if target == 0:
            ref.pop(k, None)
        else:
            ref[k] = target
        rounds = 0
        while True:
            dirty = sorted(
                e
                for e in set(cur.terms) | set(ref)
                if phi.v1 < e <= k and cur.terms.get(e, R0) != ref.get(e, R0)
            )
            if not dirty:
                break
            rounds += 1
            if rounds > _CLEANUP_ROUNDS:
                raise InternalError(
                    f"cleanup after the unsafe recipe at order {k} did not settle; "
                    f"still dirty at {dirty}"
                )
            e = dirty[0]
            sub = [rc for rc in _candidate_recipes(cur, e, lam) if rc.safe]
            if not sub:
                raise InternalError(
                    f"no clean recipe restores order {e} after the unsafe step at {k}"
                )
            cur, ch_e = _solve_step(cur, sub[0], e, ref.get(e, R0))
            changes.append(ch_e)
    total = changes[0]
    for extra_ch in changes[1:]:
        total = compose_changes(total, extra_ch, phi.v0, phi.v1)
    replay = apply_coordinate_change(phi, total)
    if replay != cur:
        raise InternalError(f"composed change for order {k} does not replay")
    return cur, total


# -- full reduction -----------------------------------------------------


@dataclass
class NormalFormResult:
    normal: PuiseuxParam
    lam: object  # int, or None for the monomial class
    lambda_values: object  # ValueSet of the input (invariant, so also of normal)
    change_log: list = field(default_factory=list)
    free_exponents: list = field(default_factory=list)
    dimension_bound: int = 0

    def changes_as_dicts(self):
        return [ch.to_dict() for ch in self.change_log]


def _eligible(work: PuiseuxParam, lam, lam_vs):
    for e in work.support():
        if e == work.v1:
            continue
        if lam is not MONOMIAL_CLASS and e == lam:
            continue
        if lam_vs.contains(e + work.v0):
            yield e


def to_normal_form(phi: PuiseuxParam) -> NormalFormResult:
    """Reduce to the normal form: support v1, lambda, then only orders
    whose shift by v0 escapes Lambda.

    Each pass removes the smallest eliminable support order above v1 (the
    reduction never needs to look at or move the lambda term).  The
    lambda coefficient is left as found — it is not an invariant of the
    branch, only its orbit under the residual homotheties matters.
    Lambda-stability of the reduction is verified at the end.
    """
    lam_vs = lambda_set(phi, "Lambda")
    semigroup_of_values(phi)  # cross-validates the analytic semigroup
    lam = zariski_invariant(phi)
    work = phi
    log = []
    last = phi.v1
    while True:
        elig = sorted(_eligible(work, lam, lam_vs))
        if not elig:
            break
        k = elig[0]
        if k <= last:
            raise InternalError(f"reduction is not advancing: {k} after {last}")
        last = k
        work, ch = eliminate_term(work, k)
        log.append(ch)

    if lam is MONOMIAL_CLASS:
        if work.support() != [phi.v1]:
            raise InternalError(
                f"monomial class should reduce to a single term, got {work.support()}"
            )
        free = []
        dim = 0
        lam_out = None
    else:
        if work.terms.get(lam, R0) == 0:
            raise InternalError(f"normal form lost its t^{lam} term")
        for e in work.support():
            if e in (phi.v1, lam):
                continue
            if lam_vs.contains(e + phi.v0):
                raise InternalError(f"normal form kept eliminable order {e}")
            if e <= lam:
                raise InternalError(f"normal form kept order {e} below the invariant")
        free = [
            e
            for e in range(lam + 1, phi.semigroup.conductor)
            if not lam_vs.contains(e + phi.v0)
        ]
        dim = len(free)
        lam_out = lam
    stable = lambda_set(work, "Lambda")
    if (
        stable.finite_part != lam_vs.finite_part
        or stable.all_above != lam_vs.all_above
    ):
        raise InternalError("reduction changed the differential value set")
    return NormalFormResult(
        normal=work,
        lam=lam_out,
        lambda_values=lam_vs,
        change_log=log,
        free_exponents=free,
        dimension_bound=dim,
    )


def dimension_report(result: NormalFormResult) -> dict:
    """Moduli count of the stratum: the normal form's free coefficient slots."""
    return {
        "upper_bound": result.dimension_bound,
        "free_coefficients": list(result.free_exponents),
    }


# -- homothety and equivalence ------------------------------------------


def _ext_gcd(a: int, b: int):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        qt = old_r // r
        old_r, r = r, old_r - qt * r
        old_s, s = s, old_s - qt * s
        old_t, t = t, old_t - qt * t
    return old_r, old_s, old_t


def homothety_solve(terms_a, terms_b, v1: int):
    """Does some r give a_i = r**(i - v1) * b_i for all i?

    Input maps must share the support (including the leading term).  The
    answer is returned as (g, w) where g is the gcd of the exponent
    differences i - v1 and w is the common value r**g: a solution r
    exists iff every ratio a_i / b_i equals w**((i - v1)/g), and then the
    admissible r are exactly the g-th roots of w.  For equal maps this
    yields (g, 1); with no terms beyond v1 there is no constraint and the
    conventional (1, 1) is returned.
    """
    sa, sb = sorted(terms_a), sorted(terms_b)
    if sa != sb:
        return None
    pairs = []
    for e in sa:
        if e == v1:
            if terms_a[e] != terms_b[e]:
                return None
            continue
        pairs.append((e - v1, rat(terms_a[e]) / rat(terms_b[e])))
    if not pairs:
        return (1, R1)
    g = 0
    coeffs = []
    for d, _ in pairs:
        g, x, y = _ext_gcd(g, d)
        coeffs = [c * x for c in coeffs] + [y]
    w = R1
    for (d, c), u in zip(pairs, coeffs):
        w = w * c**u
    for d, c in pairs:
        if c != w ** (d // g):
            return None
    return (g, w)


@dataclass(frozen=True)
class EquivVerdict:
    equivalent: bool
    reason: str  # same_normal_form_up_to_homothety | different_gamma |
    #              different_lambda | no_homothety
    homothety: object = None  # (g, w) when equivalent

    def to_dict(self) -> dict:
        out = {
            "verdict": "equivalent" if self.equivalent else "not_equivalent",
            "reason": self.reason,
        }
        if self.homothety is not None:
            g, w = self.homothety
            out["homothety"] = {"g": g, "w": rat_str(w)}
        return out


def decide_equivalence(phi1: PuiseuxParam, phi2: PuiseuxParam) -> EquivVerdict:
    """Analytic equivalence via invariants, then normal forms.

    Cheap discrete invariants first (semigroup, then the differential
    value set); if both agree the normal forms are computed and compared
    up to the residual homothety.
    """
    if phi1.semigroup.generators != phi2.semigroup.generators:
        return EquivVerdict(equivalent=False, reason="different_gamma")
    l1 = lambda_set(phi1, "Lambda")
    l2 = lambda_set(phi2, "Lambda")
    if l1.finite_part != l2.finite_part or l1.all_above != l2.all_above:
        return EquivVerdict(equivalent=False, reason="different_lambda")
    nf1 = to_normal_form(phi1)
    nf2 = to_normal_form(phi2)
    witness = homothety_solve(nf1.normal.terms, nf2.normal.terms, phi1.v1)
    if witness is None:
        return EquivVerdict(equivalent=False, reason="no_homothety")
    return EquivVerdict(
        equivalent=True,
        reason="same_normal_form_up_to_homothety",
        homothety=witness,
    )


# -- applicability of the elimination criteria ---------------------------


def ec_applicability(phi: PuiseuxParam, j: int) -> list:
    """Which elimination criteria certify that order j is removable.

    EC1: j is a semigroup value (a q-only change works).
    EC2: j + v0 - v1 is a semigroup value (a p-only change works).
    EC3: j exceeds the Zariski invariant by an element of <v0, v1>.
    EC:  j + v0 lies in Lambda and j is not the invariant itself — the
         umbrella criterion containing the other three.
    """
    if j <= phi.v1:
        raise ValueError(f"criteria apply to orders above v1 = {phi.v1}")
    sg = phi.semigroup
    lam = zariski_invariant(phi)
    lam_vs = lambda_set(phi, "Lambda")
    flags = []
    if sg.contains(j):
        flags.append("EC1")
    if j + phi.v0 - phi.v1 >= 0 and sg.contains(j + phi.v0 - phi.v1):
        flags.append("EC2")
    if (
        lam is not MONOMIAL_CLASS
        and j > lam
        and two_generator_rep(j - lam, phi.v0, phi.v1) is not None
    ):
        flags.append("EC3")
    if lam_vs.contains(j + phi.v0) and (lam is MONOMIAL_CLASS or j != lam):
        flags.append("EC")
    return flags

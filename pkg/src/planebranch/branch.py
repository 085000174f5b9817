"""Puiseux parametrizations of plane branches, with exact working precision.

A branch is given as (t**v0, sum a_i t**i) with leading y-exponent v1,
v0 < v1, v0 not dividing v1, and gcd(v0, support) = 1 so the
parametrization is primitive.  The constructor derives the characteristic
exponents from the full support, builds the value semigroup, fixes the
working truncation N = conductor + 2 v0 + 1 (+ optional head-room), and
only then discards exponents >= N — they can influence no membership
decision below N and no normal-form coefficient.

If the leading y-coefficient is not 1 the constructor rescales y by it
(the coordinate change (X, Y/a) in the plane); the factor is kept on the
instance as ``lead_rescale`` for introspection.
"""

from __future__ import annotations

import math

from .semigroup import (
    NumericalSemigroup,
    char_data_from_exponents,
    generators_from_char_exponents,
)
from .series import R0, R1, TSeries, rat, rat_str


class BranchInputError(ValueError):
    """Raised when input data does not describe a valid plane branch."""


class PuiseuxParam:
    __slots__ = (
        "v0",
        "v1",
        "terms",
        "trunc",
        "extra",
        "char",
        "semigroup",
        "lead_rescale",
        "label",
        "_x",
        "_y",
        "_cache",
    )

    def __init__(self, v0: int, terms, extra: int = 0, label=None):
        if not isinstance(v0, int) or v0 < 2:
            raise BranchInputError("v0 must be an integer >= 2")
        if extra < 0:
            raise BranchInputError("truncation head-room must be >= 0")
        cleaned = {}
        for e, c in dict(terms).items():
            e = int(e)
            c = rat(c)
            if e < 0:
                raise BranchInputError(f"negative exponent {e} in y(t)")
            if c != 0:
                cleaned[e] = c
        if not cleaned:
            raise BranchInputError("y(t) must have at least one term")
        v1 = min(cleaned)
        if v1 <= v0:
            raise BranchInputError(f"leading y-exponent {v1} must exceed v0 = {v0}")
        if v1 % v0 == 0:
            raise BranchInputError(f"v0 = {v0} must not divide the leading exponent {v1}")
        if math.gcd(v0, *cleaned) != 1:
            raise BranchInputError("parametrization must be primitive: gcd(v0, support) = 1")

        lead = cleaned[v1]
        if lead != 1:
            cleaned = {e: c / lead for e, c in cleaned.items()}
            self.lead_rescale = lead
        else:
            self.lead_rescale = None

        beta = [v0]
        g = v0
        for s in sorted(cleaned):
            if g == 1:
                break
            if s % g != 0:
                beta.append(s)
                g = math.gcd(g, s)
        self.char = char_data_from_exponents(beta)
        self.semigroup = NumericalSemigroup(generators_from_char_exponents(beta))
        self.v0 = v0
        self.v1 = v1
        self.extra = extra
        self.trunc = self.semigroup.conductor + 2 * v0 + 1 + extra
        self.terms = {e: c for e, c in cleaned.items() if e < self.trunc}
        self.label = label
        self._x = None
        self._y = None
        self._cache = {}

    # -- series views -------------------------------------------------

    def x_series(self) -> TSeries:
        if self._x is None:
            self._x = TSeries.monomial(self.v0, 1, self.trunc)
        return self._x

    def y_series(self) -> TSeries:
        if self._y is None:
            self._y = TSeries(self.trunc, dict(self.terms), _clean=True)
        return self._y

    def support(self):
        return sorted(self.terms)

    def coeff(self, e: int):
        if e >= self.trunc:
            raise ValueError(f"coefficient at {e} is beyond working precision {self.trunc}")
        return self.terms.get(e, R0)

    def with_terms(self, terms, label=None) -> "PuiseuxParam":
        return PuiseuxParam(self.v0, terms, extra=self.extra, label=label)

    # -- comparisons and serialization ---------------------------------

    def same_curve(self, other: "PuiseuxParam") -> bool:
        return (
            self.v0 == other.v0
            and self.terms == other.terms
        )

    def __eq__(self, other):
        if not isinstance(other, PuiseuxParam):
            return NotImplemented
        return self.v0 == other.v0 and self.trunc == other.trunc and self.terms == other.terms

    def __hash__(self):
        return hash((self.v0, self.trunc, tuple(sorted(self.terms.items()))))

    def to_dict(self) -> dict:
        out = {
            "v0": self.v0,
            "terms": [[e, rat_str(c)] for e, c in sorted(self.terms.items())],
        }
        if self.label is not None:
            out["label"] = self.label
        return out

    @classmethod
    def from_dict(cls, data, extra: int = 0) -> "PuiseuxParam":
        if not isinstance(data, dict):
            raise BranchInputError("branch input must be a JSON object")
        missing = {"v0", "terms"} - set(data)
        if missing:
            raise BranchInputError(f"branch input lacks keys: {sorted(missing)}")
        v0 = data["v0"]
        if not isinstance(v0, int):
            raise BranchInputError("v0 must be an integer")
        raw = data["terms"]
        if not isinstance(raw, list):
            raise BranchInputError("terms must be a list of [exponent, coefficient] pairs")
        terms = {}
        for item in raw:
            if not isinstance(item, (list, tuple)) or len(item) != 2:
                raise BranchInputError(f"bad term entry {item!r}")
            e, c = item
            if not isinstance(e, int):
                raise BranchInputError(f"exponent {e!r} must be an integer")
            try:
                cv = rat(c) if isinstance(c, str) else rat(int(c))
            except (ValueError, ZeroDivisionError, TypeError) as exc:
                raise BranchInputError(f"bad coefficient {c!r}: {exc}") from None
            terms[e] = terms.get(e, R0) + cv
        label = data.get("label")
        try:
            return cls(v0, terms, extra=extra, label=label)
        except BranchInputError:
            raise
        except ValueError as exc:
            raise BranchInputError(str(exc)) from None

    def __repr__(self):
        y = " + ".join(
            (f"t^{e}" if c == R1 else f"({rat_str(c)})t^{e}")
            for e, c in sorted(self.terms.items())
        )
        return f"PuiseuxParam(t^{self.v0}, {y})"

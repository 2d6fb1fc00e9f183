"""Commutation scalars and the bicharacters attached to a skew polynomial ring.

The ring k_q[x_1..x_n] has x_i x_j = q_ij x_j x_i with q_ii = 1 and
q_ji = q_ij^{-1}.  Coefficients that arise from reordering monomials are
always sign * product of q_ij^e over pairs i < j; Scalar stores exactly
that, canonically (zero exponents dropped, pairs sorted), so equality is
structural.  Specialization to an actual field happens only at the edges.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as _field
from fractions import Fraction
from functools import lru_cache

from .errors import DimensionError, LaurentError, SkewekError, SpecializationError
from .monoid import Mono, is_effective

Pair = tuple[int, int]  # (i, j) with i < j, 1-based


def _canon_exponents(exps) -> tuple[tuple[Pair, int], ...]:
    out = {}
    for (i, j), e in exps.items() if isinstance(exps, dict) else exps:
        if i == j:
            continue  # q_ii = 1
        if i > j:
            i, j, e = j, i, -e  # q_ji = q_ij^{-1}
        if e:
            out[(i, j)] = out.get((i, j), 0) + e
    return tuple(sorted((k, e) for k, e in out.items() if e))


@dataclass(frozen=True)
class Scalar:
    """sign * prod q_ij^e, in canonical form."""

    sign: int = 1
    q: tuple[tuple[Pair, int], ...] = ()

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise SkewekError(f"scalar sign must be +-1, got {self.sign}")

    @classmethod
    def one(cls) -> "Scalar":
        return cls(1, ())

    @classmethod
    def make(cls, sign: int = 1, exps=()) -> "Scalar":
        return cls(sign, _canon_exponents(dict(exps)))

    def exponents(self) -> dict[Pair, int]:
        return dict(self.q)

    def __mul__(self, other: "Scalar") -> "Scalar":
        merged = dict(self.q)
        for k, e in other.q:
            merged[k] = merged.get(k, 0) + e
        return Scalar(self.sign * other.sign, _canon_exponents(merged.items()))

    def __neg__(self) -> "Scalar":
        return Scalar(-self.sign, self.q)

    def inverse(self) -> "Scalar":
        return Scalar(self.sign, tuple((k, -e) for k, e in self.q))

    def __pow__(self, m: int) -> "Scalar":
        sign = self.sign if m % 2 else 1
        return Scalar(sign, _canon_exponents((k, e * m) for k, e in self.q))

    def is_one(self) -> bool:
        return self.sign == 1 and not self.q


def q_power(i: int, j: int, e: int = 1) -> Scalar:
    """The scalar q_ij^e for any i != j (q_ji folds to q_ij^{-1})."""
    if i == j:
        raise DimensionError("q_ii is 1, not a generator")
    return Scalar.make(1, {(i, j): e})


@lru_cache(maxsize=1 << 18)
def chi(a: Mono, b: Mono) -> Scalar:
    """The alternating bicharacter: x^a x^b = chi(a,b) x^b x^a.

    Closed form prod_{i<j} q_ij^{a_i b_j - a_j b_i}; defined on all of Z^n.
    """
    if len(a) != len(b):
        raise DimensionError("chi needs equal-length exponent vectors")
    n = len(a)
    exps = {}
    for i in range(n):
        for j in range(i + 1, n):
            e = a[i] * b[j] - a[j] * b[i]
            if e:
                exps[(i + 1, j + 1)] = e
    return Scalar.make(1, exps)


@lru_cache(maxsize=1 << 18)
def bichar_c(a: Mono, b: Mono) -> Scalar:
    """Normalization cost of a product: x^a * x^b = bichar_c(a,b) x^{a+b}.

    Closed form prod_{i<j} q_ij^{-a_j b_i}; bilinear in the exponents, so
    Laurent inputs are allowed.
    """
    if len(a) != len(b):
        raise DimensionError("bichar_c needs equal-length exponent vectors")
    n = len(a)
    exps = {}
    for i in range(n):
        for j in range(i + 1, n):
            e = -a[j] * b[i]
            if e:
                exps[(i + 1, j + 1)] = e
    return Scalar.make(1, exps)


def reorder_oracle(a: Mono, b: Mono) -> Scalar:
    """Compute bichar_c(a, b) the slow way, by explicit letter sorting.

    Writes x^a x^b as a word of variable indices and insertion-sorts it,
    multiplying by q_ij each time an adjacent x_i x_j with i > j swaps.
    Independent of the closed form on purpose: it is the test oracle.
    """
    if len(a) != len(b):
        raise DimensionError("reorder_oracle needs equal-length exponent vectors")
    if not (is_effective(a) and is_effective(b)):
        raise LaurentError("reorder_oracle sorts actual words, exponents must be >= 0")
    word = []
    for v, e in enumerate(a):
        word.extend([v + 1] * e)
    for v, e in enumerate(b):
        word.extend([v + 1] * e)
    exps: dict[Pair, int] = {}
    for k in range(1, len(word)):
        pos = k
        while pos > 0 and word[pos - 1] > word[pos]:
            hi, lo = word[pos - 1], word[pos]
            # x_hi x_lo = q_hi,lo x_lo x_hi and q_hi,lo = q_lo,hi^{-1}
            exps[(lo, hi)] = exps.get((lo, hi), 0) - 1
            word[pos - 1], word[pos] = lo, hi
            pos -= 1
    return Scalar.make(1, exps)


@dataclass(frozen=True)
class CommutationMatrix:
    """Ring context: number of variables, plus q values in numeric mode."""

    n: int
    mode: str = "symbolic"  # "symbolic" | "numeric"
    field: str | None = None  # "Q" | "Fp"
    prime: int | None = None
    q: tuple[tuple[Pair, object], ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise DimensionError("need at least one variable")
        if self.mode not in ("symbolic", "numeric"):
            raise SpecializationError(f"unknown mode {self.mode!r}")
        if self.mode == "numeric":
            self.specialization()  # validates completeness

    def specialization(self) -> "FieldSpecialization":
        if self.mode != "numeric":
            raise SpecializationError("symbolic commutation matrix has no values")
        return FieldSpecialization.from_values(self.n, dict(self.q), self.field or "Q", self.prime)


def _all_pairs(n: int):
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


@dataclass(frozen=True)
class FieldSpecialization:
    """A concrete choice of field and of nonzero values for every q_ij.

    field "Q" uses Fraction values, field "Fp" uses ints mod prime.
    """

    field: str
    prime: int | None
    n: int
    values: tuple[tuple[Pair, object], ...]
    _lookup: dict = _field(default=None, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_lookup", dict(self.values))

    @classmethod
    def from_values(cls, n, values: dict, field_name="Q", prime=None) -> "FieldSpecialization":
        if field_name not in ("Q", "Fp"):
            raise SpecializationError(f"unsupported field {field_name!r}")
        if field_name == "Fp" and (prime is None or prime < 2):
            raise SpecializationError("field Fp needs a prime")
        fixed = {}
        for pair in _all_pairs(n):
            if pair not in values:
                raise SpecializationError(f"no value assigned to q_{pair[0]}_{pair[1]}")
            v = values[pair]
            if field_name == "Fp":
                v = int(v) % prime
                if v == 0:
                    raise SpecializationError(f"q_{pair[0]}_{pair[1]} is 0 mod {prime}")
            else:
                v = Fraction(v)
                if v == 0:
                    raise SpecializationError(f"q_{pair[0]}_{pair[1]} is 0")
            fixed[pair] = v
        return cls(field_name, prime, n, tuple(sorted(fixed.items())))

    @classmethod
    def all_ones(cls, n, field_name="Q", prime=None) -> "FieldSpecialization":
        return cls.from_values(n, {p: 1 for p in _all_pairs(n)}, field_name, prime)

    @classmethod
    def random_mod_p(cls, n, prime, seed) -> "FieldSpecialization":
        rng = random.Random(seed)
        vals = {p: rng.randrange(1, prime) for p in _all_pairs(n)}
        return cls.from_values(n, vals, "Fp", prime)

    def evaluate(self, s: Scalar):
        """Image of a symbolic scalar; nonzero by construction."""
        if self.field == "Fp":
            acc = self.sign_value(s.sign)
            for pair, e in s.q:
                acc = acc * pow(self._value(pair), e, self.prime) % self.prime
            return acc
        acc = Fraction(s.sign)
        for pair, e in s.q:
            acc *= self._value(pair) ** e
        return acc

    def sign_value(self, sign: int):
        if self.field == "Fp":
            return sign % self.prime
        return Fraction(sign)

    def _value(self, pair: Pair):
        try:
            return self._lookup[pair]
        except KeyError:
            raise SpecializationError(f"no value assigned to q_{pair[0]}_{pair[1]}") from None


def specialize(s: Scalar, phi: FieldSpecialization):
    """Evaluate a symbolic scalar in the specialized field."""
    return phi.evaluate(s)


# --- serialization ---------------------------------------------------------


def scalar_to_json(s: Scalar) -> dict:
    return {"sign": s.sign, "q": {f"{i},{j}": e for (i, j), e in s.q}}


def scalar_from_json(obj: dict) -> Scalar:
    exps = {}
    for key, e in obj.get("q", {}).items():
        i, j = (int(t) for t in key.split(","))
        exps[(i, j)] = int(e)
    return Scalar.make(int(obj.get("sign", 1)), exps)


def commutation_to_json(cm: CommutationMatrix) -> dict:
    out = {"schema": 1, "n": cm.n, "mode": cm.mode}
    if cm.mode == "numeric":
        out["field"] = cm.field or "Q"
        if cm.prime is not None:
            out["prime"] = cm.prime
        out["q"] = {f"{i},{j}": str(v) for (i, j), v in cm.q}
    return out


def commutation_from_json(obj: dict) -> CommutationMatrix:
    mode = obj.get("mode", "symbolic")
    n = int(obj["n"])
    if mode == "symbolic":
        return CommutationMatrix(n=n)
    field_name = obj.get("field", "Q")
    prime = obj.get("prime")
    vals = {}
    for key, v in obj.get("q", {}).items():
        i, j = (int(t) for t in key.split(","))
        vals[(i, j)] = int(v) if field_name == "Fp" else Fraction(str(v))
    return CommutationMatrix(
        n=n, mode="numeric", field=field_name, prime=prime, q=tuple(sorted(vals.items()))
    )

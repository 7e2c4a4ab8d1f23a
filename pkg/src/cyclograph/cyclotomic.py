"""Exact arithmetic in cyclotomic fields Q(zeta_n).

A value is a polynomial in zeta_n = exp(2*pi*i/n) with rational coefficients,
kept fully reduced modulo the n-th cyclotomic polynomial Phi_n, so two values
are equal exactly when their coefficient tuples agree after embedding both
into a common order (the lcm).  Rational values are always demoted to order 1.
All values are immutable and safe to share between threads; the per-order
reduction tables are cached once and only read afterwards.

The float embedding (:meth:`CycloNum.to_complex`) exists for previews and
diagnostics only; comparisons against it should allow a 1e-9 tolerance.
Nothing in the exact path touches floating point.
"""

from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

from .errors import (
    DivisionByZero,
    NotAPower,
    NotCoprime,
    NotInSubfield,
    NotRational,
    ParameterError,
)

Rational = Union[int, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _divisors(n: int) -> list[int]:
    out = []
    for d in range(1, int(math.isqrt(n)) + 1):
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
    return sorted(out)


def _poly_div_exact(num: list[int], den: Sequence[int]) -> list[int]:
    # den is monic; the division must leave no remainder
    num = list(num)
    dd = len(den) - 1
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            quot[i - dd] = c
            for j, dj in enumerate(den):
                num[i - dd + j] -= c * dj
    if any(num):
        raise ArithmeticError("inexact cyclotomic polynomial division")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, low degree first, monic, length phi(n)+1."""
    if n < 1:
        raise ParameterError(f"cyclotomic order must be >= 1, got {n}")
    if n == 1:
        return (-1, 1)
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        poly = _poly_div_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _order_data(n: int) -> tuple[tuple[int, ...], int, tuple[tuple[int, ...], ...]]:
    """(Phi_n, degree d, rows) where rows[e-d] is x^e reduced mod Phi_n."""
    phi = cyclotomic_polynomial(n)
    d = len(phi) - 1
    kmax = max(2 * d - 1, n)
    rows: list[tuple[int, ...]] = []
    if d and kmax > d:
        cur = [-c for c in phi[:d]]
        rows.append(tuple(cur))
        for _ in range(d + 1, kmax):
            top = cur[d - 1]
            cur = [0] + cur[: d - 1]
            if top:
                for j in range(d):
                    cur[j] -= top * phi[j]
            rows.append(tuple(cur))
    return phi, d, tuple(rows)


def _reduce_vec(vec: Sequence[Rational], n: int) -> tuple[Fraction, ...]:
    _, d, rows = _order_data(n)
    out = [Fraction(c) for c in vec[:d]]
    if len(out) < d:
        out.extend([_ZERO] * (d - len(out)))
    for e in range(d, len(vec)):
        c = vec[e]
        if c:
            row = rows[e - d]
            for j, rj in enumerate(row):
                if rj:
                    out[j] += c * rj
    return tuple(out)


def _degree(n: int) -> int:
    return _order_data(n)[1]


# ---------------------------------------------------------------------------
# polynomial helpers over Q[x] (used for inversion and subfield descent)


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    q = [_ZERO] * max(1, len(a) - len(b) + 1)
    inv_lead = _ONE / b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] * inv_lead
        if c:
            q[i] = c
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    return _poly_trim(q), _poly_trim(a)


class CycloNum:
    """An exact element of Q(zeta_order) in reduced polynomial form."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: tuple[Fraction, ...]):
        # coeffs must already be reduced mod Phi_order; use the classmethods
        self.order = order
        self.coeffs = coeffs

    # -- constructors -------------------------------------------------

    @classmethod
    def rational(cls, value: Rational) -> "CycloNum":
        return cls(1, (Fraction(value),))

    @classmethod
    def from_coeffs(cls, order: int, coeffs: Iterable[Rational]) -> "CycloNum":
        """Build from coefficients of powers of zeta_order (any length < order
        is padded; longer vectors up to the reduction table are folded)."""
        if order < 1:
            raise ParameterError(f"cyclotomic order must be >= 1, got {order}")
        return cls._make(order, list(coeffs))

    @classmethod
    def _make(cls, order: int, vec: Sequence[Rational]) -> "CycloNum":
        coeffs = _reduce_vec(vec, order)
        return cls._norm(order, coeffs)

    @classmethod
    def _norm(cls, order: int, coeffs: tuple[Fraction, ...]) -> "CycloNum":
        if order > 1 and not any(coeffs[1:]):
            return cls(1, (coeffs[0],))
        return cls(order, coeffs)

    # -- predicates and conversions -----------------------------------

    @property
    def is_rational(self) -> bool:
        return self.order == 1

    @property
    def is_zero(self) -> bool:
        return self.order == 1 and self.coeffs[0] == 0

    def as_rational(self) -> Fraction:
        if self.order != 1:
            raise NotRational(f"{self} is not rational")
        return self.coeffs[0]

    def as_integer(self) -> int:
        r = self.as_rational()
        if r.denominator != 1:
            raise NotRational(f"{self} is not an integer")
        return r.numerator

    def to_complex(self) -> complex:
        """Float embedding for previews; compare with a 1e-9 tolerance."""
        z = cmath.exp(2j * cmath.pi / self.order)
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + complex(c)
        return acc

    # -- arithmetic ----------------------------------------------------

    def _embedded(self, target: int) -> tuple[Fraction, ...]:
        if target == self.order:
            return self.coeffs
        step = target // self.order
        vec = [_ZERO] * ((len(self.coeffs) - 1) * step + 1)
        for j, c in enumerate(self.coeffs):
            vec[j * step] = c
        return _reduce_vec(vec, target)

    @staticmethod
    def _aligned(a: "CycloNum", b: "CycloNum"):
        if a.order == b.order:
            return a.order, a.coeffs, b.coeffs
        n = math.lcm(a.order, b.order)
        return n, a._embedded(n), b._embedded(n)

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        n, a, b = self._aligned(self, other)
        return CycloNum._norm(n, tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        n, a, b = self._aligned(self, other)
        return CycloNum._norm(n, tuple(x - y for x, y in zip(a, b)))

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return CycloNum(self.order, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if other.order == 1:
            c = other.coeffs[0]
            if c == 0:
                return CycloNum.rational(0)
            return CycloNum._norm(self.order, tuple(x * c for x in self.coeffs))
        if self.order == 1:
            return other * self
        n, a, b = self._aligned(self, other)
        conv = [_ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        return CycloNum._make(n, conv)

    __rmul__ = __mul__

    def inverse(self) -> "CycloNum":
        if self.is_zero:
            raise DivisionByZero("division by zero field element")
        if self.order == 1:
            return CycloNum(1, (_ONE / self.coeffs[0],))
        phi, _, _ = _order_data(self.order)
        r0 = [Fraction(c) for c in phi]
        r1 = _poly_trim(list(self.coeffs))
        t0: list[Fraction] = []
        t1: list[Fraction] = [_ONE]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            prod = [_ZERO] * (len(q) + len(t1) - 1)
            for i, qi in enumerate(q):
                if qi:
                    for j, tj in enumerate(t1):
                        prod[i + j] += qi * tj
            nt = [_ZERO] * max(len(t0), len(prod))
            for i, c in enumerate(t0):
                nt[i] += c
            for i, c in enumerate(prod):
                nt[i] -= c
            t0, t1 = t1, _poly_trim(nt)
        # r1 is a nonzero constant: gcd with the irreducible Phi_n
        c = r1[0]
        return CycloNum._make(self.order, [t / c for t in t1])

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if other.order == 1:
            c = other.coeffs[0]
            if c == 0:
                raise DivisionByZero("division by zero field element")
            return CycloNum._norm(self.order, tuple(x / c for x in self.coeffs))
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = CycloNum.rational(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- comparison and hashing ----------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        _, a, b = self._aligned(self, other)
        return a == b

    def __hash__(self):
        c = self.canonical()
        return hash((c.order, c.coeffs))

    def __bool__(self):
        return not self.is_zero

    # -- Galois actions -------------------------------------------------

    def conjugate(self) -> "CycloNum":
        """Complex conjugation, the image under zeta -> zeta^(n-1)."""
        return galois_apply(self.order - 1, self) if self.order > 1 else self

    # -- canonical minimal order ----------------------------------------

    def canonical(self) -> "CycloNum":
        """Rewrite over the smallest cyclotomic order containing the value."""
        if self.order == 1:
            return self
        d_self = len(self.coeffs)
        candidates = [d for d in _divisors(self.order)[:-1] if d > 1]
        candidates.sort(key=lambda d: (_degree(d), d))
        for d in candidates:
            if _degree(d) > d_self:
                continue
            sub = self._descend(d)
            if sub is not None:
                return sub
        return self

    def _descend(self, d: int):
        n = self.order
        deg_d = _degree(d)
        step = n // d
        cols = []
        for j in range(deg_d):
            vec = [_ZERO] * (j * step + 1)
            vec[j * step] = _ONE
            cols.append(list(_reduce_vec(vec, n)))
        sol = _solve_exact(cols, list(self.coeffs))
        if sol is None:
            return None
        return CycloNum._norm(d, _reduce_vec(sol, d))

    # -- subfield Q(sqrt5) ----------------------------------------------

    def as_sqrt5_pair(self) -> tuple[Fraction, Fraction]:
        """Write the value as a + b*sqrt(5); raises NotInSubfield otherwise."""
        c = self.canonical()
        if c.order == 1:
            return c.coeffs[0], _ZERO
        if c.order != 5:
            raise NotInSubfield(f"{self} is not in Q(sqrt5)")
        # sqrt5 reduces to -1 - 2*z^2 - 2*z^3 at order 5
        c0, c1, c2, c3 = c.coeffs
        if c1 != 0 or c2 != c3:
            raise NotInSubfield(f"{self} is not in Q(sqrt5)")
        b = -c2 / 2
        a = c0 + b
        return a, b

    # -- rendering and serialization -------------------------------------

    def __str__(self):
        if self.order == 1:
            return str(self.coeffs[0])
        var = f"z{self.order}"
        parts = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if j == 0:
                parts.append(str(c))
                continue
            mono = var if j == 1 else f"{var}^{j}"
            if abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts) if parts else "0"

    def __repr__(self):
        return f"CycloNum({self.order}, {self.coeffs!r})"

    def to_json(self) -> dict:
        c = self.canonical()
        return {"order": c.order, "coeffs": [_frac_str(x) for x in c.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> "CycloNum":
        try:
            order = int(obj["order"])
            coeffs = [Fraction(str(c)) for c in obj["coeffs"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise ParameterError(f"bad serialized field value: {exc}") from exc
        return cls.from_coeffs(order, coeffs)


def _frac_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _coerce(value) -> CycloNum | None:
    if isinstance(value, CycloNum):
        return value
    if isinstance(value, (int, Fraction)):
        return CycloNum.rational(value)
    return None


def _solve_exact(cols: list[list[Fraction]], target: list[Fraction]):
    """Solve sum_j x_j * cols[j] = target exactly; None if inconsistent."""
    rows = max(len(target), max((len(c) for c in cols), default=0))
    k = len(cols)
    mat = [[(cols[j][i] if i < len(cols[j]) else _ZERO) for j in range(k)]
           + [target[i] if i < len(target) else _ZERO]
           for i in range(rows)]
    pivots = []
    r = 0
    for c in range(k):
        pr = next((i for i in range(r, rows) if mat[i][c] != 0), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        inv = _ONE / mat[r][c]
        mat[r] = [v * inv for v in mat[r]]
        for i in range(rows):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [v - f * w for v, w in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if mat[i][k] != 0:
            return None
    sol = [_ZERO] * k
    for i, c in enumerate(pivots):
        sol[c] = mat[i][k]
    # columns without a pivot stay zero; verify consistency
    for i in range(rows):
        acc = _ZERO
        for j in range(k):
            if sol[j]:
                acc += sol[j] * (cols[j][i] if i < len(cols[j]) else _ZERO)
        if acc != (target[i] if i < len(target) else _ZERO):
            return None
    return sol


# ---------------------------------------------------------------------------
# the root-of-unity parameter


_PARAM_RE = re.compile(r"^w(\d+)(?:\^(\d+))?$")


@dataclass(frozen=True)
class RootParam:
    """The unit parameter omega = zeta_order^power.

    power must lie in [0, order) and be coprime to order unless it is 0;
    order 1 or power 0 both denote omega = 1.
    """

    order: int
    power: int

    def __post_init__(self):
        if self.order < 1:
            raise ParameterError(f"order must be >= 1, got {self.order}")
        if not 0 <= self.power < max(self.order, 1):
            raise ParameterError(
                f"power must lie in [0, {self.order}), got {self.power}")
        if self.power and math.gcd(self.power, self.order) != 1:
            raise ParameterError(
                f"power {self.power} is not coprime to order {self.order}")

    @classmethod
    def make(cls, order: int, power: int) -> "RootParam":
        """Canonicalizing constructor: reduces power mod order and divides
        out the gcd, so e.g. (6, 2) becomes (3, 1) and (n, 0) becomes (1, 0)."""
        if order < 1:
            raise ParameterError(f"order must be >= 1, got {order}")
        power %= order
        if power == 0:
            return cls(1, 0)
        g = math.gcd(order, power)
        return cls(order // g, power // g)

    @classmethod
    def parse(cls, text: str) -> "RootParam":
        """Accepts '1', '-1', 'i', 'w{n}', 'w{n}^{q}' and 'p/q' forms."""
        t = text.strip()
        if t == "1":
            return cls(1, 0)
        if t == "-1":
            return cls(2, 1)
        if t == "i":
            return cls(4, 1)
        m = _PARAM_RE.match(t)
        if m:
            n = int(m.group(1))
            q = int(m.group(2)) if m.group(2) else 1
            return cls.make(n, q)
        if re.fullmatch(r"\d+/\d+", t):
            p, q = t.split("/")
            return cls.make(int(p), int(q))
        if re.fullmatch(r"\d+", t):
            return cls.make(int(t), 1)
        raise ParameterError(f"cannot parse parameter {text!r}")

    @property
    def is_one(self) -> bool:
        return self.order == 1 or self.power == 0

    def value(self) -> CycloNum:
        return root_of_unity(self)

    def __str__(self):
        if self.is_one:
            return "1"
        if self.order == 2:
            return "-1"
        if self.power == 1:
            return f"w{self.order}"
        return f"w{self.order}^{self.power}"

    def to_json(self) -> dict:
        return {"order": self.order, "power": self.power}


# ---------------------------------------------------------------------------
# field operations


def root_of_unity(param: RootParam) -> CycloNum:
    """zeta_order^power as a canonical field element."""
    n, q = param.order, param.power
    vec = [0] * (q + 1)
    vec[q] = 1
    return CycloNum._make(n, vec)


def conjugate(x: CycloNum) -> CycloNum:
    return x.conjugate()


def galois_apply(q: int, x: CycloNum) -> CycloNum:
    """Image of x under the field automorphism zeta -> zeta^q.

    Raises NotCoprime when gcd(q, order) != 1, in which case the power map
    collapses into a proper subfield and is not an automorphism.
    """
    n = x.order
    if n == 1:
        return x
    qm = q % n
    if math.gcd(qm, n) != 1:
        raise NotCoprime(f"zeta -> zeta^{q} is not an automorphism at order {n}")
    if qm == 1:
        return x
    vec = [_ZERO] * n
    for j, c in enumerate(x.coeffs):
        if c:
            vec[(qm * j) % n] += c
    return CycloNum._make(n, vec)


@lru_cache(maxsize=None)
def _contribution(order: int, exp: int) -> CycloNum:
    vec = [0] * order
    vec[0] += 2
    vec[exp % order] -= 1
    vec[(-exp) % order] -= 1
    return CycloNum._make(order, vec)


def cycle_contribution(param: RootParam, k: int, g: int) -> CycloNum:
    """Determinant contribution of a k-cycle with g negative edges:
    2 - omega^(k-2g) - omega^-(k-2g), a real value in [0, 4].

    It is zero exactly when order divides power*(k-2g).
    """
    if k < 1:
        raise ParameterError(f"cycle length must be >= 1, got {k}")
    if not 0 <= g <= k // 2:
        raise ParameterError(f"negative-edge count {g} outside [0, {k // 2}]")
    return _contribution(param.order, param.power * (k - 2 * g))


def fold_index(n: int, p: int) -> int:
    """Fold n mod p into [0, (p-1)/2]; 0 exactly when p divides n."""
    if p < 3 or p % 2 == 0:
        raise ParameterError(f"fold modulus must be odd and >= 3, got {p}")
    m = n % p
    return m if m <= (p - 1) // 2 else p - m


def _exact_log(value: int, base: int) -> int:
    e = 0
    while value > 1:
        if value % base:
            raise NotAPower(f"{value} is not a power of {base}")
        value //= base
        e += 1
    return e


def log_power_of(x: CycloNum | Rational, p: int) -> int:
    """Exact exponent e with x = p**e; raises NotAPower otherwise."""
    if p < 2:
        raise ParameterError(f"base must be >= 2, got {p}")
    val = _coerce(x)
    if val is None:
        raise ParameterError(f"cannot interpret {x!r} as a field element")
    f = val.as_rational()
    if f <= 0:
        raise NotAPower(f"{f} is not a positive power of {p}")
    if f.denominator == 1:
        return _exact_log(f.numerator, p)
    if f.numerator == 1:
        return -_exact_log(f.denominator, p)
    raise NotAPower(f"{f} is not an integer power of {p}")


def field_norm_q5(x: CycloNum) -> Fraction:
    """Field norm Q(sqrt5) -> Q, a + b*sqrt5 |-> a^2 - 5*b^2."""
    a, b = x.as_sqrt5_pair()
    return a * a - 5 * b * b


# ---------------------------------------------------------------------------
# named constants of Q(sqrt5)


@lru_cache(maxsize=None)
def sqrt5() -> CycloNum:
    return CycloNum.from_coeffs(5, (0, 1, -1, -1, 1))


@lru_cache(maxsize=None)
def golden_ratio() -> CycloNum:
    return (CycloNum.rational(1) + sqrt5()) / 2


@lru_cache(maxsize=None)
def alpha() -> CycloNum:
    """Cycle contribution (5+sqrt5)/2 of alpha pairs at a fifth root."""
    return (CycloNum.rational(5) + sqrt5()) / 2


@lru_cache(maxsize=None)
def beta() -> CycloNum:
    """Cycle contribution (5-sqrt5)/2 of beta pairs at a fifth root."""
    return (CycloNum.rational(5) - sqrt5()) / 2

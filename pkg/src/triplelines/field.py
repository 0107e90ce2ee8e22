"""Exact arithmetic in GF(p) and GF(p^k).

Elements are canonical coefficient vectors of length k over Z/p (low degree
first); extension arithmetic reduces modulo a monic irreducible polynomial.
Every field caches full operation tables, which is cheap because the toolkit
never needs q > 81, and makes element arithmetic a pair of list lookups.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .errors import (
    DegreeMismatch,
    DivisionByZero,
    FieldMismatch,
    NonPrimeCharacteristic,
    ReducibleModulus,
    ZeroPolynomial,
)

MAX_DEGREE = 4


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# ---------------------------------------------------------------------------
# polynomial helpers over Z/p, coefficients low degree first, trailing zeros
# trimmed ("[]" is the zero polynomial)
# ---------------------------------------------------------------------------

def _trim(poly: list[int]) -> list[int]:
    while poly and poly[-1] == 0:
        poly.pop()
    return poly


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    """Remainder of a modulo the monic polynomial m."""
    r = [c % p for c in a]
    _trim(r)
    dm = len(m) - 1
    while len(r) - 1 >= dm:
        lead = r[-1]
        shift = len(r) - 1 - dm
        for i in range(dm + 1):
            r[shift + i] = (r[shift + i] - lead * m[i]) % p
        _trim(r)
    return r


def _monic_polys(degree: int, p: int) -> Iterable[list[int]]:
    """All monic polynomials of the given degree over Z/p."""
    if degree == 0:
        yield [1]
        return
    count = p ** degree
    for n in range(count):
        coeffs, t = [], n
        for _ in range(degree):
            coeffs.append(t % p)
            t //= p
        yield coeffs + [1]


def _poly_divides(f: Sequence[int], g: Sequence[int], p: int) -> bool:
    return not _poly_mod(g, f, p)


def default_modulus(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree k over GF(p).

    Coefficient tuples are compared low degree first.
    """
    if k == 1:
        return (0, 1)
    for candidate in _monic_polys(k, p):
        if _is_irreducible_strict(candidate, p):
            return tuple(candidate)
    raise ReducibleModulus(f"no irreducible polynomial of degree {k} over GF({p})")


def _is_irreducible_strict(modulus: Sequence[int], p: int) -> bool:
    degree = len(modulus) - 1
    for d in range(1, degree // 2 + 1):
        for f in _monic_polys(d, p):
            if _poly_divides(f, modulus, p):
                return False
    return True


TABLE_LIMIT = 1024


class FieldSpec:
    """A finite field GF(p^k) with a fixed monic irreducible modulus.

    Immutable and safe to share across threads. Fields of order up to
    TABLE_LIMIT precompute full operation tables (every field this toolkit
    actually computes in has q <= 81); larger fields fall back to direct
    modular/polynomial arithmetic per operation.
    """

    def __init__(self, p: int, k: int, modulus: tuple[int, ...]):
        self.p = p
        self.k = k
        self.modulus = modulus
        self.order = p ** k
        self.has_tables = self.order <= TABLE_LIMIT
        if self.has_tables:
            self._build_tables()

    # construction goes through make_field(); FieldSpec() itself revalidates
    # nothing beyond what table construction needs.

    def coeffs_of(self, index: int) -> tuple[int, ...]:
        if self.has_tables:
            return self._coeffs[index]
        coeffs, t = [], index
        for _ in range(self.k):
            coeffs.append(t % self.p)
            t //= self.p
        return tuple(coeffs)

    def index_of(self, coeffs: Sequence[int]) -> int:
        n = 0
        for c in reversed(list(coeffs)):
            n = n * self.p + c % self.p
        return n

    def _build_tables(self) -> None:
        p, k, q = self.p, self.k, self.order
        coeff_vectors = []
        for n in range(q):
            coeffs, t = [], n
            for _ in range(k):
                coeffs.append(t % p)
                t //= p
            coeff_vectors.append(tuple(coeffs))
        self._coeffs = coeff_vectors
        idx_of = self.index_of
        mod = list(self.modulus)
        add, mul = [], []
        for a in coeff_vectors:
            add.append([idx_of([(x + y) % p for x, y in zip(a, b)]) for b in coeff_vectors])
            row = []
            for b in coeff_vectors:
                prod = _poly_mul(_trim(list(a)), _trim(list(b)), p)
                row.append(idx_of(_poly_mod(prod, mod, p) if k > 1 else prod))
            mul.append(row)
        self.add_table = add
        self.mul_table = mul
        self.neg_table = [idx_of([(-x) % p for x in a]) for a in coeff_vectors]
        inv = [0] * q
        for a in range(1, q):
            if inv[a]:
                continue
            for b in range(a, q):
                if mul[a][b] == 1:
                    inv[a], inv[b] = b, a
                    break
        self.inv_table = inv

    # -- index-level operations (table fast path, computed fallback) -----------

    def add_idx(self, i: int, j: int) -> int:
        if self.has_tables:
            return self.add_table[i][j]
        a, b = self.coeffs_of(i), self.coeffs_of(j)
        return self.index_of([(x + y) % self.p for x, y in zip(a, b)])

    def mul_idx(self, i: int, j: int) -> int:
        if self.has_tables:
            return self.mul_table[i][j]
        prod = _poly_mul(_trim(list(self.coeffs_of(i))),
                         _trim(list(self.coeffs_of(j))), self.p)
        if self.k > 1:
            prod = _poly_mod(prod, list(self.modulus), self.p)
        return self.index_of(prod + [0] * (self.k - len(prod)))

    def neg_idx(self, i: int) -> int:
        if self.has_tables:
            return self.neg_table[i]
        return self.index_of([(-x) % self.p for x in self.coeffs_of(i)])

    def inv_idx(self, i: int) -> int:
        if self.has_tables:
            return self.inv_table[i]
        # a^(q-2) by square and multiply
        result, base, e = 1, i, self.order - 2
        while e:
            if e & 1:
                result = self.mul_idx(result, base)
            base = self.mul_idx(base, base)
            e >>= 1
        return result

    # -- identity and notation ------------------------------------------------

    def key(self) -> tuple:
        return (self.p, self.k, self.modulus)

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldSpec) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"GF({self.notation()})"

    def notation(self) -> str:
        return str(self.p) if self.k == 1 else f"{self.p}^{self.k}"

    def __reduce__(self):
        return (make_field, (self.p, self.k, list(self.modulus)))

    # -- elements --------------------------------------------------------------

    def element(self, coeffs: Sequence[int] | int) -> "FieldElement":
        if isinstance(coeffs, int):
            return self.from_int(coeffs)
        vec = [c % self.p for c in coeffs]
        if len(vec) > self.k:
            raise DegreeMismatch(
                f"{len(vec)} coefficients for an element of {self!r} (need <= {self.k})")
        vec += [0] * (self.k - len(vec))
        return FieldElement(self, self.index_of(vec))

    def from_int(self, n: int) -> "FieldElement":
        return FieldElement(self, n % self.p)

    def __call__(self, value: Sequence[int] | int) -> "FieldElement":
        return self.element(value)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self) -> list["FieldElement"]:
        """All p^k elements in coefficient-lexicographic order."""
        return [FieldElement(self, i) for i in range(self.order)]


class FieldElement:
    """A canonical element of a FieldSpec; hashable value type."""

    __slots__ = ("field", "index")

    def __init__(self, field: FieldSpec, index: int):
        self.field = field
        self.index = index

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs_of(self.index)

    def is_zero(self) -> bool:
        return self.index == 0

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"{other.field!r} element used in {self.field!r}")
            return other
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.add_idx(self.index, other.index))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, self.field.neg_idx(self.index))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.mul_idx(self.index, other.index))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.index == 0:
            raise DivisionByZero(f"inverse of zero in {self.field!r}")
        return FieldElement(self.field, self.field.inv_idx(self.index))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.index == 0:
            raise DivisionByZero(f"division by zero in {self.field!r}")
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.field.from_int(other) / self

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.field.one
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.index == other.index
        if isinstance(other, int):
            return self == self.field.from_int(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field.key(), self.index))

    def __repr__(self) -> str:
        if self.field.k == 1:
            return str(self.index)
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                head = "" if c == 1 else str(c)
                terms.append(f"{head}x" if i == 1 else f"{head}x^{i}")
        return "+".join(terms) if terms else "0"


_FIELD_CACHE: dict[tuple, FieldSpec] = {}


def make_field(p: int, k: int = 1, modulus: Optional[Sequence[int]] = None) -> FieldSpec:
    """Validated GF(p^k); picks the default modulus when none is given."""
    if not isinstance(p, int) or not is_prime(p):
        raise NonPrimeCharacteristic(f"characteristic {p} is not prime")
    if not isinstance(k, int) or k < 1:
        raise DegreeMismatch(f"extension degree must be a positive integer, got {k}")
    if k > MAX_DEGREE:
        raise DegreeMismatch(
            f"extension degree {k} exceeds the supported maximum {MAX_DEGREE}")
    if modulus is None:
        mod = default_modulus(p, k)
    else:
        mod = tuple(c % p for c in modulus)
        if len(mod) != k + 1:
            raise DegreeMismatch(
                f"modulus has {len(mod) - 1 if mod else 0} degree slots, expected degree {k}")
        if mod[-1] != 1:
            raise ReducibleModulus(f"modulus {list(mod)} is not monic over GF({p})")
        if k == 1:
            if mod != (0, 1):
                raise ReducibleModulus("prime fields use the fixed modulus x")
        elif not _is_irreducible_strict(mod, p):
            raise ReducibleModulus(f"modulus {list(mod)} is reducible over GF({p})")
    key = (p, k, mod)
    if key not in _FIELD_CACHE:
        _FIELD_CACHE[key] = FieldSpec(p, k, mod)
    return _FIELD_CACHE[key]


def parse_field(token: str, modulus: Optional[Sequence[int]] = None) -> FieldSpec:
    """Parse the CLI/file notation 'p' or 'p^k'."""
    text = token.strip()
    if "^" in text:
        p_text, k_text = text.split("^", 1)
        return make_field(int(p_text), int(k_text), modulus)
    return make_field(int(text), 1, modulus)


def arith(a: FieldElement, b: Optional[FieldElement], op: str) -> FieldElement:
    """Uniform entry point for the six field operations."""
    if op == "neg":
        return -a
    if op == "inv":
        return a.inverse()
    if b is None:
        raise FieldMismatch(f"binary operation {op!r} needs two operands")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown field operation {op!r}")


def enumerate_elements(F: FieldSpec) -> list[FieldElement]:
    return F.elements()


def reduce_int_poly(poly: Sequence[int], F: FieldSpec) -> list[FieldElement]:
    """Map integer coefficients into F and trim; raises if identically zero."""
    coeffs = [F.from_int(c) for c in poly]
    while coeffs and coeffs[-1].is_zero():
        coeffs.pop()
    if not coeffs:
        raise ZeroPolynomial("polynomial vanishes identically after reduction")
    return coeffs


def eval_poly(coeffs: Sequence[FieldElement], x: FieldElement) -> FieldElement:
    acc = x.field.zero
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def roots_of(poly: Sequence[int], F: FieldSpec) -> list[FieldElement]:
    """All roots in F of an integer-coefficient univariate polynomial.

    Exhaustive evaluation over the p^k elements, returned in canonical order.
    """
    coeffs = reduce_int_poly(poly, F)
    return [x for x in F.elements() if eval_poly(coeffs, x).is_zero()]


def cube_roots_of_unity(F: FieldSpec) -> list[FieldElement]:
    """All x with x^3 = 1; there are three exactly when 3 divides q - 1."""
    return [x for x in F.elements() if (x * x * x) == F.one]


def has_nontrivial_cube_root(F: FieldSpec) -> bool:
    return len(cube_roots_of_unity(F)) == 3

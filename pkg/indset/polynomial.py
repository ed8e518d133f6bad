"""
Exact polynomial values for the counting engines.

IndependencePolynomial holds c_k = number of independent sets of size k;
BigraphPolynomial holds c_{a,b} = number of independent sets meeting part A
in a vertices and part B in b vertices. Coefficients are Python ints and
evaluation is exact over Fraction.
"""

from dataclasses import dataclass
from fractions import Fraction

from indset.errors import DomainError

Rational = Fraction | int


def poly_add(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    if len(p) < len(q):
        p, q = q, p
    return tuple(a + (q[i] if i < len(q) else 0) for i, a in enumerate(p))


def poly_mul(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return tuple(out)


def poly_shift(p: tuple[int, ...]) -> tuple[int, ...]:
    """Multiply by the variable."""
    return (0,) + p


def grid_add(p: tuple[tuple[int, ...], ...], q: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    rows = max(len(p), len(q))
    cols = max(len(p[0]), len(q[0]))
    return tuple(
        tuple(
            (p[a][b] if a < len(p) and b < len(p[a]) else 0) + (q[a][b] if a < len(q) and b < len(q[a]) else 0)
            for b in range(cols)
        )
        for a in range(rows)
    )


def grid_mul(p: tuple[tuple[int, ...], ...], q: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    rows = len(p) + len(q) - 1
    cols = len(p[0]) + len(q[0]) - 1
    out = [[0] * cols for _ in range(rows)]
    for a1, row1 in enumerate(p):
        for b1, x in enumerate(row1):
            if not x:
                continue
            for a2, row2 in enumerate(q):
                for b2, y in enumerate(row2):
                    if y:
                        out[a1 + a2][b1 + b2] += x * y
    return tuple(tuple(row) for row in out)


def grid_shift(p: tuple[tuple[int, ...], ...], in_part_a: bool) -> tuple[tuple[int, ...], ...]:
    """Multiply by lambda (part A) or mu (part B)."""
    if in_part_a:
        return (tuple(0 for _ in p[0]),) + p
    return tuple((0,) + row for row in p)


def _trim(coeffs: tuple[int, ...]) -> tuple[int, ...]:
    end = len(coeffs)
    while end > 1 and coeffs[end - 1] == 0:
        end -= 1
    return coeffs[:end]


@dataclass(frozen=True)
class IndependencePolynomial:
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(tuple(self.coeffs)))
        if not self.coeffs or self.coeffs[0] != 1:
            raise DomainError("An independence polynomial has constant term 1")
        if any(c < 0 for c in self.coeffs):
            raise DomainError("Independence polynomial coefficients are nonnegative")

    @property
    def count(self) -> int:
        """P_G(1) = i(G)."""
        return sum(self.coeffs)

    @property
    def degree(self) -> int:
        """Independence number."""
        return len(self.coeffs) - 1

    def evaluate(self, lam: Rational) -> Fraction:
        return evaluate(self, lam)

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                power = "λ" if k == 1 else f"λ^{k}"
                terms.append(power if c == 1 else f"{c}{power}")
        return " + ".join(terms)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: list[str]) -> "IndependencePolynomial":
        return cls(tuple(int(c) for c in data))


@dataclass(frozen=True)
class BigraphPolynomial:
    """coeffs[a][b]; the grid has size_a + 1 rows and size_b + 1 columns."""

    coeffs: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.coeffs or not self.coeffs[0] or self.coeffs[0][0] != 1:
            raise DomainError("A bigraph polynomial has constant term 1")
        width = len(self.coeffs[0])
        if any(len(row) != width for row in self.coeffs):
            raise DomainError("Bigraph polynomial grid rows must have equal length")

    @property
    def size_a(self) -> int:
        return len(self.coeffs) - 1

    @property
    def size_b(self) -> int:
        return len(self.coeffs[0]) - 1

    @property
    def count(self) -> int:
        return sum(sum(row) for row in self.coeffs)

    def get(self, a: int, b: int) -> int:
        if 0 <= a < len(self.coeffs) and 0 <= b < len(self.coeffs[0]):
            return self.coeffs[a][b]
        return 0

    def evaluate2(self, lam: Rational, mu: Rational) -> Fraction:
        return evaluate2(self, lam, mu)

    def collapse(self) -> IndependencePolynomial:
        """P_G(lambda, lambda): the one-variable polynomial of the underlying graph."""
        out = [0] * (self.size_a + self.size_b + 1)
        for a, row in enumerate(self.coeffs):
            for b, c in enumerate(row):
                out[a + b] += c
        return IndependencePolynomial(tuple(out))

    def marginal_a(self) -> tuple[int, ...]:
        """Coefficients of P_G(lambda, 1) in lambda."""
        return tuple(sum(row) for row in self.coeffs)

    def marginal_b(self) -> tuple[int, ...]:
        """Coefficients of P_G(1, mu) in mu."""
        return tuple(sum(row[b] for row in self.coeffs) for b in range(self.size_b + 1))

    def to_json(self) -> dict:
        return {
            "part_sizes": [self.size_a, self.size_b],
            "coeffs": [[str(c) for c in row] for row in self.coeffs],
        }

    @classmethod
    def from_json(cls, data: dict) -> "BigraphPolynomial":
        return cls(tuple(tuple(int(c) for c in row) for row in data["coeffs"]))


def evaluate(poly: IndependencePolynomial, lam: Rational) -> Fraction:
    """Horner evaluation, exact."""
    lam = Fraction(lam)
    value = Fraction(0)
    for c in reversed(poly.coeffs):
        value = value * lam + c
    return value


def evaluate2(poly: BigraphPolynomial, lam: Rational, mu: Rational) -> Fraction:
    """Nested Horner evaluation: outer in lambda over rows, inner in mu."""
    lam, mu = Fraction(lam), Fraction(mu)
    value = Fraction(0)
    for row in reversed(poly.coeffs):
        inner = Fraction(0)
        for c in reversed(row):
            inner = inner * mu + c
        value = value * lam + inner
    return value

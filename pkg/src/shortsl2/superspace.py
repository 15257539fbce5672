"""Z/2-graded spaces, homogeneous linear maps and Koszul signs."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactlin import Matrix, ZERO, unit_vector


def sign(p: int, q: int) -> int:
    """(-1)^(pq) as a Python int."""
    return -1 if (p & q & 1) else 1


def koszul_sign(p: int, q: int) -> Fraction:
    return Fraction(sign(p, q))


@dataclass(frozen=True)
class SuperSpace:
    labels: tuple
    parities: tuple

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "parities", tuple(int(p) & 1 for p in self.parities))
        if len(self.labels) != len(self.parities):
            raise ValueError("one parity is needed per basis label")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("basis labels must be unique")

    @classmethod
    def from_pairs(cls, pairs: Sequence[tuple]) -> "SuperSpace":
        return cls(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def sdim(self) -> tuple[int, int]:
        odd = sum(self.parities)
        return (self.dim - odd, odd)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown basis label {label!r}") from None

    def parity(self, i: int) -> int:
        return self.parities[i]

    def basis_vector(self, i: int) -> tuple:
        return unit_vector(self.dim, i)

    def vector_parity(self, v) -> int | None:
        """Parity of a homogeneous vector; None for zero; raises if mixed."""
        ps = {self.parities[i] for i, a in enumerate(v) if a}
        if not ps:
            return None
        if len(ps) > 1:
            raise ValueError("vector is not homogeneous")
        return ps.pop()

    def direct_sum(self, other: "SuperSpace") -> "SuperSpace":
        return SuperSpace(self.labels + other.labels, self.parities + other.parities)


class GradedMap:
    """Homogeneous linear map; column j is the image of basis vector j."""

    __slots__ = ("domain", "codomain", "matrix", "parity")

    def __init__(self, domain: SuperSpace, codomain: SuperSpace, matrix: Matrix, parity: int):
        if matrix.rows != codomain.dim or matrix.cols != domain.dim:
            raise ValueError("matrix shape does not match domain/codomain")
        parity &= 1
        for i, row in enumerate(matrix.data):
            pi = codomain.parities[i]
            for j, x in enumerate(row):
                if x and (pi + domain.parities[j]) & 1 != parity:
                    raise ValueError(
                        f"entry ({codomain.labels[i]}, {domain.labels[j]}) breaks parity {parity}")
        self.domain = domain
        self.codomain = codomain
        self.matrix = matrix
        self.parity = parity

    @classmethod
    def identity(cls, space: SuperSpace) -> "GradedMap":
        return cls(space, space, Matrix.identity(space.dim), 0)

    @classmethod
    def zero(cls, domain: SuperSpace, codomain: SuperSpace, parity: int = 0) -> "GradedMap":
        return cls(domain, codomain, Matrix.zeros(codomain.dim, domain.dim), parity)

    @classmethod
    def infer(cls, domain: SuperSpace, codomain: SuperSpace, matrix: Matrix) -> "GradedMap":
        """Build a map reading its parity off the nonzero entries (even if zero)."""
        par = 0
        for i, row in enumerate(matrix.data):
            for j, x in enumerate(row):
                if x:
                    par = (codomain.parities[i] + domain.parities[j]) & 1
                    return cls(domain, codomain, matrix, par)
        return cls(domain, codomain, matrix, par)

    def apply(self, v) -> tuple:
        return self.matrix.apply(v)

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    def __eq__(self, other):
        return (isinstance(other, GradedMap) and self.domain == other.domain
                and self.codomain == other.codomain and self.matrix == other.matrix
                and (self.parity == other.parity or self.matrix.is_zero()))

    def __repr__(self):
        return f"GradedMap(parity={self.parity}, {self.matrix!r})"


def compose_graded(f: GradedMap, g: GradedMap) -> GradedMap:
    """f after g."""
    if g.codomain.dim != f.domain.dim or g.codomain.parities != f.domain.parities:
        raise ValueError("dimension mismatch in composition")
    return GradedMap(g.domain, f.codomain, f.matrix @ g.matrix, f.parity + g.parity)


def super_commutator(f: GradedMap, g: GradedMap) -> GradedMap:
    if f.domain != f.codomain or g.domain != g.codomain or f.domain != g.domain:
        raise ValueError("super commutator needs endomorphisms of one space")
    fg = f.matrix @ g.matrix
    gf = g.matrix @ f.matrix
    s = sign(f.parity, g.parity)
    m = fg - gf if s == 1 else fg + gf
    return GradedMap(f.domain, f.domain, m, f.parity + g.parity)


def matrix_commutator(a: Matrix, b: Matrix, pa: int, pb: int) -> Matrix:
    ab = a @ b
    ba = b @ a
    return ab - ba if sign(pa, pb) == 1 else ab + ba


class TensorSquareSpace:
    """V (x) V with flat index i * dim + j."""

    def __init__(self, factor: SuperSpace, sep: str = "⊗"):
        self.factor = factor
        n = factor.dim
        self.space = SuperSpace(
            tuple(f"{a}{sep}{b}" for a in factor.labels for b in factor.labels),
            tuple(p + q for p in factor.parities for q in factor.parities))
        self._n = n

    @property
    def dim(self) -> int:
        return self._n * self._n

    def flatten(self, i: int, j: int) -> int:
        return i * self._n + j

    def unflatten(self, k: int) -> tuple[int, int]:
        return divmod(k, self._n)

    def tensor(self, u, v) -> tuple:
        """Coordinates of u (x) v."""
        out = [ZERO] * self.dim
        n = self._n
        for i, a in enumerate(u):
            if a:
                for j, b in enumerate(v):
                    if b:
                        out[i * n + j] += a * b
        return tuple(out)

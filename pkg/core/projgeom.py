#!/usr/bin/env python3
"""
Projective primitives for the Pascal geometry toolkit
Points and lines of the plane, the conic z0*z2 = z1^2 with its parameterization, pole/polar duality and Mobius maps
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Any, Iterator, List, Optional, Sequence, Tuple, Union

from core.errors import CoincidentElementsError, ConcurrencyError, GeometryError
from utils.helpers import safe_log

Scalar = Union[int, Fraction]
Matrix3 = Tuple[Tuple[Fraction, ...], ...]


def canonical_form(coords: Sequence[Scalar]) -> Tuple[int, ...]:
    """
    Primitive integer representative of a homogeneous tuple

    Args:
        coords: Rational coordinates, not all zero

    Returns:
        Coprime integers with the first nonzero entry positive

    Raises:
        GeometryError: for the zero tuple
    """
    values = [Fraction(x) for x in coords]
    if not any(values):
        raise GeometryError("zero vector is not a projective element")
    common_den = lcm(*(v.denominator for v in values))
    ints = [int(v * common_den) for v in values]
    divisor = gcd(*ints)
    ints = [x // divisor for x in ints]
    if next(x for x in ints if x) < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def cross(u: Sequence[int], v: Sequence[int]) -> Tuple[int, int, int]:
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


def dot(u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
    return sum(x * y for x, y in zip(u, v))


class _Homogeneous:
    """Shared behaviour of canonical homogeneous tuples"""

    __slots__ = ('coords',)
    SIZE = 3

    def __init__(self, *coords: Any):
        if len(coords) == 1 and not isinstance(coords[0], (int, Fraction)):
            coords = tuple(coords[0])
        if len(coords) != self.SIZE:
            raise GeometryError(f"{type(self).__name__} needs {self.SIZE} coordinates, got {len(coords)}")
        self.coords: Tuple[int, ...] = canonical_form(coords)

    def __iter__(self) -> Iterator[int]:
        return iter(self.coords)

    def __getitem__(self, index: int) -> int:
        return self.coords[index]

    def __len__(self) -> int:
        return self.SIZE

    def __eq__(self, other: Any) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.coords))

    def __lt__(self, other: '_Homogeneous') -> bool:
        return self.coords < other.coords

    def to_list(self) -> List[int]:
        return list(self.coords)

    def __repr__(self) -> str:
        return f"{type(self).__name__}{self.coords}"


class P1Point(_Homogeneous):
    """A parameter [x0 : x1] on the projective line; its affine value is x1/x0 and infinity is [0:1]"""

    __slots__ = ()
    SIZE = 2

    @classmethod
    def from_value(cls, value: Optional[Scalar]) -> 'P1Point':
        """Affine value, or None for infinity"""
        if value is None:
            return cls(0, 1)
        value = Fraction(value)
        return cls(value.denominator, value.numerator)

    @classmethod
    def infinity(cls) -> 'P1Point':
        return cls(0, 1)

    @property
    def is_infinity(self) -> bool:
        return self.coords[0] == 0

    @property
    def value(self) -> Optional[Fraction]:
        """Affine value x1/x0, None at infinity"""
        x0, x1 = self.coords
        return None if x0 == 0 else Fraction(x1, x0)

    def __str__(self) -> str:
        value = self.value
        if value is None:
            return "inf"
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


class ProjPoint(_Homogeneous):
    __slots__ = ()

    def __str__(self) -> str:
        return "[" + ":".join(str(x) for x in self.coords) + "]"


class ProjLine(_Homogeneous):
    __slots__ = ()

    def __str__(self) -> str:
        return "<" + ":".join(str(x) for x in self.coords) + ">"


def incident(point: ProjPoint, line: ProjLine) -> bool:
    return dot(point.coords, line.coords) == 0


def on_conic(point: ProjPoint) -> bool:
    z0, z1, z2 = point.coords
    return z0 * z2 == z1 * z1


def tau(p: P1Point) -> ProjPoint:
    """The conic point [x0^2 : x0*x1 : x1^2] of a parameter"""
    x0, x1 = p.coords
    return ProjPoint(x0 * x0, x0 * x1, x1 * x1)


def tangent_at(p: P1Point) -> ProjLine:
    """Tangent to the conic at tau(p): <x1^2 : -2*x0*x1 : x0^2>"""
    x0, x1 = p.coords
    return ProjLine(x1 * x1, -2 * x0 * x1, x0 * x0)


def join(P: ProjPoint, Q: ProjPoint) -> ProjLine:
    """
    Line through two distinct points

    Raises:
        CoincidentElementsError: if P == Q
    """
    if P == Q:
        raise CoincidentElementsError("coincident elements")
    return ProjLine(cross(P.coords, Q.coords))


def meet(l: ProjLine, m: ProjLine) -> ProjPoint:
    """
    Common point of two distinct lines

    Raises:
        CoincidentElementsError: if l == m
    """
    if l == m:
        raise CoincidentElementsError("coincident elements")
    return ProjPoint(cross(l.coords, m.coords))


def chord(p: P1Point, q: P1Point) -> ProjLine:
    """Line through tau(p) and tau(q); the tangent when p == q"""
    if p == q:
        return tangent_at(p)
    return join(tau(p), tau(q))


def polar(P: ProjPoint) -> ProjLine:
    # conic matrix rows (0,0,1), (0,-2,0), (1,0,0)
    z0, z1, z2 = P.coords
    return ProjLine(z2, -2 * z1, z0)


def pole(l: ProjLine) -> ProjPoint:
    u0, u1, u2 = l.coords
    return ProjPoint(2 * u2, -u1, 2 * u0)


@dataclass(frozen=True)
class PolarTriangle:
    """A triangle on the conic, its polar triangle, perspector CH and perspectrix ch"""
    P: ProjPoint
    Q: ProjPoint
    R: ProjPoint
    P_prime: ProjPoint
    Q_prime: ProjPoint
    R_prime: ProjPoint
    CH: ProjPoint
    ch: ProjLine

    def to_dict(self) -> dict:
        return {name: getattr(self, name).to_list()
                for name in ('P', 'Q', 'R', 'P_prime', 'Q_prime', 'R_prime', 'CH', 'ch')}


def polar_triangle(P: P1Point, Q: P1Point, R: P1Point) -> PolarTriangle:
    """
    Polar triangle of three conic points together with its perspectivity

    Args:
        P, Q, R: Pairwise distinct parameters

    Returns:
        PolarTriangle with P' = pole(QR), Q' = pole(PR), R' = pole(PQ)

    Raises:
        CoincidentElementsError: if two inputs coincide
        ConcurrencyError: if the perspectivity fails to hold
    """
    if len({P, Q, R}) < 3:
        raise CoincidentElementsError("coincident elements")
    tp, tq, tr = tau(P), tau(Q), tau(R)
    p_prime = pole(join(tq, tr))
    q_prime = pole(join(tp, tr))
    r_prime = pole(join(tp, tq))

    rays = [join(tp, p_prime), join(tq, q_prime), join(tr, r_prime)]
    center = meet(rays[0], rays[1])
    if not incident(center, rays[2]):
        raise ConcurrencyError(f"PP', QQ', RR' not concurrent for {P}, {Q}, {R}")

    cross_points = [
        meet(join(tp, tq), join(p_prime, q_prime)),
        meet(join(tp, tr), join(p_prime, r_prime)),
        meet(join(tq, tr), join(q_prime, r_prime)),
    ]
    axis = join(cross_points[0], cross_points[1])
    if not incident(cross_points[2], axis):
        raise ConcurrencyError(f"Polar triangle cross points not collinear for {P}, {Q}, {R}")

    safe_log(f"Polar triangle of {P}, {Q}, {R}: CH={center}, ch={axis}", "DEBUG")
    return PolarTriangle(tp, tq, tr, p_prime, q_prime, r_prime, center, axis)


def _det2(u: Sequence[int], v: Sequence[int]) -> int:
    return u[0] * v[1] - u[1] * v[0]


class Mobius:
    """
    Invertible map x -> (a*x + b) / (c*x + d) of the parameter line

    On homogeneous parameters: x1' = a*x1 + b*x0, x0' = c*x1 + d*x0.
    """

    __slots__ = ('a', 'b', 'c', 'd')

    def __init__(self, a: Scalar, b: Scalar, c: Scalar, d: Scalar):
        self.a, self.b, self.c, self.d = (Fraction(x) for x in (a, b, c, d))
        if self.determinant == 0:
            raise GeometryError("Mobius map must have nonzero determinant")

    @classmethod
    def identity(cls) -> 'Mobius':
        return cls(1, 0, 0, 1)

    @classmethod
    def sending_to_standard(cls, p: P1Point, q: P1Point, r: P1Point) -> 'Mobius':
        """
        The map sending p, q, r to 0, 1, infinity

        Raises:
            CoincidentElementsError: if two of p, q, r coincide
        """
        if len({p, q, r}) < 3:
            raise CoincidentElementsError("coincident elements")
        rq = _det2(r.coords, q.coords)
        pq = _det2(p.coords, q.coords)
        return cls(rq * p[0], -rq * p[1], pq * r[0], -pq * r[1])

    @property
    def determinant(self) -> Fraction:
        return self.a * self.d - self.b * self.c

    def apply(self, p: P1Point) -> P1Point:
        x0, x1 = p.coords
        return P1Point(self.c * x1 + self.d * x0, self.a * x1 + self.b * x0)

    __call__ = apply

    def compose(self, other: 'Mobius') -> 'Mobius':
        """self after other"""
        return Mobius(self.a * other.a + self.b * other.c, self.a * other.b + self.b * other.d,
                      self.c * other.a + self.d * other.c, self.c * other.b + self.d * other.d)

    __matmul__ = compose

    def inverse(self) -> 'Mobius':
        return Mobius(self.d, -self.b, -self.c, self.a)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Mobius):
            return NotImplemented
        # equal as projective maps
        mine = (self.a, self.b, self.c, self.d)
        theirs = (other.a, other.b, other.c, other.d)
        return all(x * theirs[j] == y * mine[j] for j in range(4) for x, y in zip(mine, theirs))

    def __hash__(self) -> int:
        return hash(canonical_form((self.a, self.b, self.c, self.d)))

    def __repr__(self) -> str:
        return f"Mobius({self.a}, {self.b}, {self.c}, {self.d})"


def induced_plane_map(m: Mobius) -> Matrix3:
    """
    Symmetric square of a Mobius map: the plane collineation preserving the conic

    Returns:
        3x3 matrix with tau(m(p)) = induced_plane_map(m) . tau(p)
    """
    a, b, c, d = m.a, m.b, m.c, m.d
    return (
        (d * d, 2 * d * c, c * c),
        (d * b, d * a + c * b, c * a),
        (b * b, 2 * a * b, a * a),
    )


def _mat_vec(matrix: Matrix3, vector: Sequence[Scalar]) -> List[Fraction]:
    return [sum((Fraction(x) * y for x, y in zip(row, vector)), Fraction(0)) for row in matrix]


def mat_mul(left: Matrix3, right: Matrix3) -> Matrix3:
    return tuple(tuple(sum((left[i][k] * right[k][j] for k in range(3)), Fraction(0)) for j in range(3))
                 for i in range(3))


def cofactor_matrix(matrix: Matrix3) -> Matrix3:
    """Cofactors C with C^T = adj(matrix), so matrix^(-T) is C up to the determinant"""
    def minor(i: int, j: int) -> Fraction:
        rows = [r for k, r in enumerate(matrix) if k != i]
        cols = [[x for k, x in enumerate(row) if k != j] for row in rows]
        return cols[0][0] * cols[1][1] - cols[0][1] * cols[1][0]

    return tuple(tuple((-1) ** (i + j) * minor(i, j) for j in range(3)) for i in range(3))


def transform_point(matrix: Matrix3, point: ProjPoint) -> ProjPoint:
    return ProjPoint(_mat_vec(matrix, point.coords))


def transform_line(matrix: Matrix3, line: ProjLine) -> ProjLine:
    """Image of a line under the collineation (inverse-transpose action)"""
    return ProjLine(_mat_vec(cofactor_matrix(matrix), line.coords))


def mobius_conjugate(m: Mobius, h: Any) -> Any:
    """Apply a Mobius map to every letter of a sextuple"""
    return h.map_points(m.apply)


def homogeneous_matrix_equal(left: Matrix3, right: Matrix3) -> bool:
    """Equality of 3x3 matrices up to a nonzero scalar"""
    flat_l = [x for row in left for x in row]
    flat_r = [x for row in right for x in row]
    if not any(flat_l) or not any(flat_r):
        return not any(flat_l) and not any(flat_r)
    return canonical_form(flat_l) == canonical_form(flat_r)


def line_through(points: Sequence[ProjPoint]) -> Optional[ProjLine]:
    """The common line of a point set with at least two distinct members, or None if not collinear"""
    distinct = list(dict.fromkeys(points))
    if len(distinct) < 2:
        return None
    carrier = join(distinct[0], distinct[1])
    return carrier if all(incident(p, carrier) for p in distinct[2:]) else None

"""Odd-degree isogenies of Edwards curves in the a = 1 form.

A kernel is the subgroup {O, ±Q1, ..., ±Qs} of odd order l = 2s+1; the
codomain parameter is d' = A^8 * d^l with A the product of the kernel
x-coordinates.  Evaluation offers two independent routes that must
agree everywhere:

* "rational"  - the reduced one-variable rational map
     x' = (x/A^2) * prod (x^2 - b_i^2) / (1 - d b_i^2 x^2)
     y' = (-y/A^2) * prod (x^2 - a_i^2) / (1 - d a_i^2 x^2)
  (a_i, b_i) = kernel coordinates.  The -y orientation is the one the
  worked small-field mappings pin down.

* "additive"  - the defining product of group-law translates,
     prod x(P+Q)/x(Q), prod y(P+Q)/x(Q) over kernel points Q.
  For an even number s of kernel pairs the raw product is the negation
  of the rational route, so it is composed with point negation to land
  on the same representative; both are the same isogeny up to sign.
"""

from __future__ import annotations

from math import prod

from .curve import AffinePoint, EdwardsCurve
from .errors import (BadKernelGenerator, EvenDegreeUnsupported,
                     ExceptionalInput, ExceptionalPair, InvalidCurve,
                     NotASquare, NotOnCurve)

EVAL_MODES = ("rational", "additive")


def _require_a1(curve: EdwardsCurve):
    if not (curve.a == 1):
        raise InvalidCurve(
            "isogeny formulas require the a = 1 curve form; "
            "rescale E_{a,d} to E_{1,d/a} first")


def order3_division_value(alpha, d):
    """Value of the order-3 division condition 2a + 1 - d*a^3*(2 + a)
    at x-coordinate `alpha`; zero exactly at abscissas of order-3 points."""
    return alpha + alpha + 1 - d * alpha ** 3 * (alpha + 2)


def is_order3_abscissa(alpha, d) -> bool:
    return order3_division_value(alpha, d).is_zero()


class OddKernel:
    """Representatives {Q, 2Q, ..., sQ} of a cyclic subgroup of odd
    order l = 2s+1, with the cached product A of their x-coordinates."""

    def __init__(self, domain: EdwardsCurve, degree: int,
                 points: list[AffinePoint]):
        self.domain = domain
        self.degree = degree
        self.points = points
        self.A = prod((P.x for P in points), start=domain.field.one)

    @classmethod
    def from_generator(cls, Q: AffinePoint, degree: int,
                       domain: EdwardsCurve) -> "OddKernel":
        _require_a1(domain)
        if degree % 2 == 0:
            raise EvenDegreeUnsupported(f"degree {degree} is even")
        if degree < 3:
            raise BadKernelGenerator("degree must be an odd integer >= 3")
        if not domain.contains(Q):
            raise NotOnCurve(f"{Q!r} is not on {domain!r}")
        if Q.is_identity():
            raise BadKernelGenerator("kernel generator is the neutral element")
        reps = [Q]
        R = Q
        for _ in range(degree // 2 - 1):
            R = domain.add(R, Q)
            if R.is_identity():
                raise BadKernelGenerator(
                    f"generator order divides a proper factor of {degree}")
            reps.append(R)
        # (s+1)Q = -(sQ) is equivalent to (2s+1)Q = O; together with the
        # non-identity representatives this pins the order to exactly 2s+1.
        if domain.add(R, Q) != R.neg():
            raise BadKernelGenerator(f"generator does not have order {degree}")
        return cls(domain, degree, reps)

    @property
    def s(self) -> int:
        return self.degree // 2

    def full_points(self) -> list[AffinePoint]:
        """The whole subgroup: O and ±Q_i."""
        out = [self.domain.identity]
        for P in self.points:
            out.append(P)
            out.append(P.neg())
        return out

    def codomain_param(self):
        """d' = A^8 * d^l."""
        a8 = self.A.square().square().square()
        return a8 * self.domain.d ** self.degree

    def to_json(self) -> dict:
        return {"l": self.degree,
                "kernel": [P.to_json() for P in self.points],
                "A": _enc(self.A)}


def _enc(v) -> str:
    return v.to_str() if hasattr(v, "to_str") else v.to_hex()


class OddIsogeny:
    """A single odd-degree isogeny given by its kernel; callable on
    points of the domain."""

    def __init__(self, kernel: OddKernel):
        self.kernel = kernel
        self.domain = kernel.domain
        self.codomain_d = kernel.codomain_param()
        self.codomain = EdwardsCurve(self.domain.field,
                                     self.domain.field.one, self.codomain_d)

    @property
    def degree(self) -> int:
        return self.kernel.degree

    def __call__(self, P: AffinePoint, mode: str = "rational") -> AffinePoint:
        if mode == "rational":
            return self._eval_rational(P)
        if mode == "additive":
            return self._eval_additive(P)
        raise ValueError(f"unknown evaluation mode {mode!r}")

    def _eval_rational(self, P: AffinePoint) -> AffinePoint:
        field = self.domain.field
        d = self.domain.d
        one = field.one
        x2 = P.x.square()
        num_x, den_x = P.x, one
        num_y, den_y = -P.y, one
        for Q in self.kernel.points:
            a2 = Q.x.square()
            b2 = Q.y.square()
            num_x = num_x * (x2 - b2)
            den_x = den_x * (one - d * b2 * x2)
            num_y = num_y * (x2 - a2)
            den_y = den_y * (one - d * a2 * x2)
        if den_x.is_zero() or den_y.is_zero():
            raise ExceptionalInput(f"{P!r} is a pole of the isogeny")
        a_sq = self.kernel.A.square()
        return AffinePoint(num_x / (a_sq * den_x), num_y / (a_sq * den_y))

    def _eval_additive(self, P: AffinePoint) -> AffinePoint:
        dom = self.domain
        num_x, num_y = P.x, P.y
        try:
            for Q in self.kernel.points:
                R1 = dom.add(P, Q)
                R2 = dom.add(P, Q.neg())
                num_x = num_x * R1.x * R2.x
                num_y = num_y * R1.y * R2.y
        except ExceptionalPair as exc:
            raise ExceptionalInput(f"{P!r} is a pole of the isogeny") from exc
        a_sq = self.kernel.A.square()
        x_out = num_x / a_sq
        y_out = num_y / a_sq
        if self.kernel.s % 2 == 0:
            y_out = -y_out
        return AffinePoint(x_out, y_out)

    def to_json(self) -> dict:
        out = self.kernel.to_json()
        out["d_prime"] = _enc(self.codomain_d)
        return out


def recover_y(x, curve: EdwardsCurve, sign: int = 1) -> AffinePoint:
    """Lift an x-coordinate to a curve point, sign chosen by hint:
    y^2 = (1 - x^2)/(a - d*x^2)."""
    field = curve.field
    x = field(x)
    x2 = x.square()
    den = curve.a - curve.d * x2
    if den.is_zero():
        raise ExceptionalInput(f"x = {x!r} corresponds to a point at infinity")
    try:
        y = field.sqrt((field.one - x2) / den)
    except NotASquare as exc:
        raise NotOnCurve(f"no point with x = {x!r} on {curve!r}") from exc
    return AffinePoint(x, y if sign >= 0 else -y)


class IsogenyChain:
    """Composition of prime-degree isogenies dividing out <G>.

    `degrees` is the execution order, e.g. [3, 3, 5] for a generator of
    order 45 with the 3-part removed first.  Each step's kernel point is
    the current image of G multiplied by the product of the remaining
    degrees.  The chain stays callable: pushing a point evaluates every
    stored step in order.
    """

    def __init__(self, domain: EdwardsCurve, generator: AffinePoint,
                 degrees: list[int], mode: str = "rational"):
        _require_a1(domain)
        degrees = list(degrees)
        if any(l % 2 == 0 for l in degrees):
            raise EvenDegreeUnsupported(f"even degree in {degrees}")
        total = prod(degrees)
        self.domain = domain
        self.degrees = degrees
        self.mode = mode
        self.steps: list[OddIsogeny] = []
        if degrees:
            _check_exact_order(domain, generator, degrees)
        E, G = domain, generator
        for idx, l in enumerate(degrees):
            cof = total // prod(degrees[: idx + 1])
            K = E.scalar_mul(cof, G)
            step = OddIsogeny(OddKernel.from_generator(K, l, E))
            self.steps.append(step)
            G = step(G, mode)
            E = step.codomain
        self.codomain = E

    @property
    def total_degree(self) -> int:
        return prod(self.degrees)

    def __call__(self, P: AffinePoint) -> AffinePoint:
        for step in self.steps:
            P = step(P, self.mode)
        return P

    def to_json(self) -> dict:
        return {"degrees": self.degrees,
                "steps": [s.to_json() for s in self.steps],
                "d_prime": _enc(self.codomain.d)}


def _check_exact_order(E: EdwardsCurve, G: AffinePoint, degrees: list[int]):
    total = prod(degrees)
    if not E.scalar_mul(total, G).is_identity():
        raise BadKernelGenerator(f"generator order does not divide {total}")
    for q in set(degrees):
        if E.scalar_mul(total // q, G).is_identity():
            raise BadKernelGenerator(
                f"generator order is a proper divisor of {total}")

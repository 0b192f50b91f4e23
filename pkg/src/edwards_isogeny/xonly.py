"""x-only (X : Z) evaluation of 3- and 5-isogenies.

Works on the first coordinate alone; the second is recoverable from the
curve equation up to sign.  Codomains come out in the scaled form
C'(x^2 + y^2) = C' + D'x^2y^2 with d' = D'/C', which avoids inversions.

Costs (M = mul, S = square; additions are tallied separately and not
part of the advertised figures):

    get_3_isog   2M + 3S        eval_3_isog  4M + 2S   -> 6M + 5S total
    get_5_isog   2M + 6S (with the kernel squares shared from the
                 evaluation; 4M + 10S standalone)
    eval_5_isog  19M + 6S                              -> 21M + 12S total

The 3-isogeny evaluation never reads the curve parameter d: for a
kernel abscissa satisfying the order-3 division condition the map
depends on coordinates only.
"""

from __future__ import annotations


class XZPoint:
    """Projective x-line point (X : Z); (X : 0) marks an exceptional
    image (a point at infinity)."""

    __slots__ = ("X", "Z")

    def __init__(self, X, Z):
        if X.is_zero() and Z.is_zero():
            raise ValueError("(0 : 0) is not a projective point")
        self.X = X
        self.Z = Z

    @classmethod
    def from_x(cls, x) -> "XZPoint":
        return cls(x, x.field.one)

    @classmethod
    def from_affine(cls, P) -> "XZPoint":
        return cls.from_x(P.x)

    def is_exceptional(self) -> bool:
        return self.Z.is_zero()

    def affine_x(self):
        return self.X / self.Z

    def same_class(self, other: "XZPoint") -> bool:
        """Projective equality: X1*Z2 = X2*Z1."""
        return self.X * other.Z == other.X * self.Z

    def __repr__(self):
        return f"({self.X!r} : {self.Z!r})"


class ProjParams:
    """Scaled codomain parameter pair (D' : C') with d' = D'/C'."""

    __slots__ = ("D", "C")

    def __init__(self, D, C):
        self.D = D
        self.C = C

    def d_prime(self):
        return self.D / self.C

    def same_class(self, other: "ProjParams") -> bool:
        return self.D * other.C == other.D * self.C

    def __repr__(self):
        return f"(D'={self.D!r} : C'={self.C!r})"


def get_3_isog(K1: XZPoint) -> ProjParams:
    """Codomain of the 3-isogeny with kernel abscissa (X1 : Z1):
    D' = Z1*(2X1 + Z1)^3, C' = X1*(2Z1 + X1)^3, factored through
    2X1Z1 = (X1 + Z1)^2 - X1^2 - Z1^2."""
    s1 = K1.X.square()
    s2 = K1.Z.square()
    t1 = (K1.X + K1.Z).square() - s1 - s2    # 2*X1*Z1
    t4 = t1 + t1
    s1_4 = s1 + s1
    s1_4 = s1_4 + s1_4
    s2_4 = s2 + s2
    s2_4 = s2_4 + s2_4
    Dp = (t1 + s2) * (s1_4 + s2 + t4)
    Cp = (t1 + s1) * (s2_4 + s1 + t4)
    return ProjParams(Dp, Cp)                # cost: 2M+3S


def eval_3_isog(P: XZPoint, K1: XZPoint) -> XZPoint:
    """Image of (X : Z) under the 3-isogeny with kernel (X1 : Z1):
    F = X'+Z' = (X1*Z + Z1*X)^2 (X+Z), G = X'-Z' = (X1*Z - Z1*X)^2 (X-Z).
    Independent of the curve parameter d."""
    u1 = K1.X * P.Z
    u2 = P.X * K1.Z
    f = (u1 + u2).square()
    g = (u1 - u2).square()
    F = (P.X + P.Z) * f
    G = (P.X - P.Z) * g
    return XZPoint(F + G, F - G)             # cost: 4M+2S; (2X' : 2Z')


def run_3_isog(P: XZPoint, K1: XZPoint) -> tuple[XZPoint, ProjParams]:
    """Image point and codomain in one call.  cost: 6M+5S."""
    params = get_3_isog(K1)
    return eval_3_isog(P, K1), params


def _eval_5(P: XZPoint, K1: XZPoint, K2: XZPoint, d):
    s0 = P.X.square()
    s1 = K1.X.square()
    s2 = K2.X.square()
    s3 = P.Z.square()
    s4 = K1.Z.square()
    s5 = K2.Z.square()
    t0 = d * s0
    t1 = d * s1
    t2 = d * s2
    g1 = s1 - s4
    f1 = t1 - s4
    g2 = s2 - s5
    f2 = t2 - s5
    h1 = s3 * g1 - s0 * f1        # X^2(Z1^2 - dX1^2) + Z^2(X1^2 - Z1^2)
    i1 = s3 * f1 - t0 * g1        # dX^2(Z1^2 - X1^2) + Z^2(dX1^2 - Z1^2)
    h2 = s3 * g2 - s0 * f2
    i2 = s3 * f2 - t0 * g2
    l1 = s1 * s2                  # X1^2 * X2^2
    l2 = s4 * s5                  # Z1^2 * Z2^2
    Xp = P.X * l2
    Xp = Xp * h1
    Xp = Xp * h2
    Zp = P.Z * l1
    Zp = Zp * i1
    Zp = Zp * i2
    return XZPoint(Xp, Zp), l1, l2


def eval_5_isog(P: XZPoint, K1: XZPoint, K2: XZPoint, d) -> XZPoint:
    """Image of (X : Z) under the 5-isogeny with kernel abscissas
    (X1 : Z1), (X2 : Z2) of Q and 2Q.  cost: 19M+6S."""
    image, _, _ = _eval_5(P, K1, K2, d)
    return image


def _codomain_5(d, l1, l2) -> ProjParams:
    # D' = (X1^2 X2^2)^4 * d^5,  C' = (Z1^2 Z2^2)^4.   cost: 2M+6S
    D = d.square()
    D = D.square()
    D = D * d
    L = l1.square()
    L = L.square()
    Dp = L * D
    C = l2.square()
    Cp = C.square()
    return ProjParams(Dp, Cp)


def get_5_isog(K1: XZPoint, K2: XZPoint, d, shared=None) -> ProjParams:
    """Codomain of the 5-isogeny.  With `shared` = (X1^2*X2^2,
    Z1^2*Z2^2) from the evaluation pass the cost is 2M+6S; standalone
    the kernel squares are recomputed first (extra 2M+4S)."""
    if shared is None:
        s1 = K1.X.square()
        s2 = K2.X.square()
        s4 = K1.Z.square()
        s5 = K2.Z.square()
        shared = (s1 * s2, s4 * s5)
    return _codomain_5(d, shared[0], shared[1])


def run_5_isog(P: XZPoint, K1: XZPoint, K2: XZPoint,
               d) -> tuple[XZPoint, ProjParams]:
    """Image point and codomain in one pass, sharing the kernel
    squares.  cost: 21M+12S."""
    image, l1, l2 = _eval_5(P, K1, K2, d)
    return image, _codomain_5(d, l1, l2)

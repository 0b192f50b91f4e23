"""Desk-scale SIDH key exchange over F_{p^2}.

p = 4*3^m*5^n - 1, base curve E_{-1} (supersingular, order (p+1)^2 over
the extension).  Party A walks a 3^m-isogeny chain, party B a
5^n-chain; each publishes its codomain parameter and the images of the
other party's torsion basis, and both land on isomorphic final curves,
compared by j-invariant.

Secrets are parsed as R = P + k*Q (never Q + k*P), which reaches l^e of
the l^(e-1)*(l+1) cyclic subgroups; enough for a demonstration and
stated in the transcript.  All randomness comes from the setup seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .curve import AffinePoint, EdwardsCurve
from .errors import (BadKernelGenerator, DeskScaleOnly, EdwardsError,
                     ExceptionalInput, ExceptionalPair, NotOnCurve,
                     ProtocolError, SetupFailed)
from .field import OpCounter, PrimeField, is_probable_prime
from .field_ext import QuadExtField
from .isogeny import IsogenyChain, recover_y

DESK_PRIME_LIMIT = 10_000
SIDE_A = "A"   # 3^m chain
SIDE_B = "B"   # 5^n chain

_SAMPLING_BUDGET = 10_000


@dataclass
class TorsionBasis:
    degree: int       # l
    exponent: int     # e; points have exact order l^e
    P: AffinePoint
    Q: AffinePoint


@dataclass
class ProtocolParams:
    p: int
    m: int
    n: int
    seed: int
    field: QuadExtField
    curve: EdwardsCurve
    basis_a: TorsionBasis
    basis_b: TorsionBasis

    def basis(self, side: str) -> TorsionBasis:
        if side == SIDE_A:
            return self.basis_a
        if side == SIDE_B:
            return self.basis_b
        raise ValueError(f"unknown side {side!r}")

    def other(self, side: str) -> str:
        return SIDE_B if side == SIDE_A else SIDE_A

    def to_json(self) -> dict:
        return {"p": self.p, "m": self.m, "n": self.n, "seed": self.seed,
                "curve": self.curve.to_json(),
                "basis_a": [self.basis_a.P.to_json(), self.basis_a.Q.to_json()],
                "basis_b": [self.basis_b.P.to_json(), self.basis_b.Q.to_json()]}


@dataclass
class PublicKey:
    codomain_d: object            # extension-field element
    image_p: AffinePoint          # images of the other side's basis
    image_q: AffinePoint

    def to_json(self) -> dict:
        return {"d_prime": self.codomain_d.to_str(),
                "image_p": self.image_p.to_json(),
                "image_q": self.image_q.to_json()}


@dataclass
class PartyKeypair:
    side: str
    secret: int
    chain: IsogenyChain
    public: PublicKey


def setup(m: int, n: int, seed: int = 0) -> ProtocolParams:
    """Deterministic protocol parameters for p = 4*3^m*5^n - 1."""
    if m < 1 or n < 1:
        raise ValueError("need m, n >= 1 so both parties have torsion")
    p = 4 * 3 ** m * 5 ** n - 1
    if p > DESK_PRIME_LIMIT:
        raise DeskScaleOnly(f"p = {p} exceeds the demo limit {DESK_PRIME_LIMIT}")
    if not is_probable_prime(p):
        raise ValueError(f"4*3^{m}*5^{n} - 1 = {p} is not prime")
    base = PrimeField(p)
    field = QuadExtField(base)
    curve = EdwardsCurve(field, field.one, field(-1))
    rng = random.Random(seed)
    basis_a = _torsion_basis(curve, 3, m, rng)
    basis_b = _torsion_basis(curve, 5, n, rng)
    return ProtocolParams(p, m, n, seed, field, curve, basis_a, basis_b)


def _random_point(curve: EdwardsCurve, rng: random.Random) -> AffinePoint:
    for _ in range(_SAMPLING_BUDGET):
        x = curve.field.random_element(rng)
        try:
            P = recover_y(x, curve)
        except (ExceptionalInput, NotOnCurve):
            continue
        if rng.randrange(2):
            P = P.neg()
        return P
    raise SetupFailed("random point sampling exhausted")


def _torsion_basis(curve: EdwardsCurve, l: int, e: int,
                   rng: random.Random) -> TorsionBasis:
    """Two independent points of exact order l^e, built by cofactor
    multiplication of random points.  Independence: their order-l
    multiples generate different subgroups."""
    p = curve.field.p
    cofactor = (p + 1) // l ** e

    def sample() -> AffinePoint | None:
        P = _random_point(curve, rng)
        try:
            T = curve.scalar_mul(cofactor, P)
            if curve.scalar_mul(l ** (e - 1), T).is_identity():
                return None
        except ExceptionalPair:
            return None          # walked through a singular point; resample
        return T

    P = None
    for _ in range(_SAMPLING_BUDGET):
        P = sample()
        if P is not None:
            break
    else:
        raise SetupFailed(f"no point of order {l}^{e} found")
    U = curve.scalar_mul(l ** (e - 1), P)
    u_subgroup = set()
    R = U
    for _ in range(l - 1):
        u_subgroup.add(R)
        R = curve.add(R, U)
    for _ in range(_SAMPLING_BUDGET):
        Q = sample()
        if Q is None:
            continue
        V = curve.scalar_mul(l ** (e - 1), Q)
        if V not in u_subgroup:
            return TorsionBasis(l, e, P, Q)
    raise SetupFailed(f"no independent order-{l}^{e} partner found")


def keygen(params: ProtocolParams, side: str, secret: int) -> PartyKeypair:
    """Kernel R = P_side + secret*Q_side, chain of prime-degree steps,
    public key = codomain parameter plus pushed-through images of the
    other side's basis."""
    basis = params.basis(side)
    l, e = basis.degree, basis.exponent
    if not 0 <= secret < l ** e:
        raise ValueError(f"secret must lie in [0, {l}^{e})")
    E = params.curve
    R = E.add(basis.P, E.scalar_mul(secret, basis.Q))
    chain = IsogenyChain(E, R, [l] * e)
    other = params.basis(params.other(side))
    public = PublicKey(chain.codomain.d, chain(other.P), chain(other.Q))
    return PartyKeypair(side, secret, chain, public)


def derive_shared(params: ProtocolParams, keypair: PartyKeypair,
                  other_public: PublicKey):
    """Second chain, from the image kernel on the other party's
    codomain; returns the shared j-invariant in F_{p^2}."""
    basis = params.basis(keypair.side)
    l, e = basis.degree, basis.exponent
    try:
        E = EdwardsCurve(params.field, params.field.one,
                         params.field(other_public.codomain_d))
        if not (E.contains(other_public.image_p)
                and E.contains(other_public.image_q)):
            raise ProtocolError("public basis images are not on the codomain")
        R = E.add(other_public.image_p,
                  E.scalar_mul(keypair.secret, other_public.image_q))
        chain = IsogenyChain(E, R, [l] * e)
    except ProtocolError:
        raise
    except (BadKernelGenerator, EdwardsError) as exc:
        raise ProtocolError(f"malformed public key: {exc}") from exc
    return chain.codomain.j_invariant()


def count_cyclic_subgroups(curve: EdwardsCurve, l: int) -> int:
    """Number of cyclic subgroups of prime order l, by exhaustive scan
    (desk scale).  Each subgroup contributes l - 1 points of order l."""
    with curve.field.counting(OpCounter()):
        hits = 0
        for P in curve.points():
            if P.is_identity():
                continue
            try:
                if curve.scalar_mul(l, P).is_identity():
                    hits += 1
            except ExceptionalPair:
                continue         # even-order point walked through infinity
        assert hits % (l - 1) == 0
        return hits // (l - 1)


def run_exchange(m: int, n: int, seed: int = 0,
                 secret_a: int | None = None,
                 secret_b: int | None = None) -> dict:
    """Full key exchange with per-party operation counts; the
    transcript is a JSON-ready dict."""
    params = setup(m, n, seed)
    rng = random.Random(2 * seed + 1)    # distinct from the setup stream
    if secret_a is None:
        secret_a = rng.randrange(3 ** m)
    if secret_b is None:
        secret_b = rng.randrange(5 ** n)

    ctx_a, ctx_b = OpCounter(), OpCounter()
    with params.field.counting(ctx_a):
        kp_a = keygen(params, SIDE_A, secret_a)
    with params.field.counting(ctx_b):
        kp_b = keygen(params, SIDE_B, secret_b)
    with params.field.counting(ctx_a):
        j_a = derive_shared(params, kp_a, kp_b.public)
    with params.field.counting(ctx_b):
        j_b = derive_shared(params, kp_b, kp_a.public)

    return {
        "params": params.to_json(),
        "secret_a": secret_a,
        "secret_b": secret_b,
        "public_a": kp_a.public.to_json(),
        "public_b": kp_b.public.to_json(),
        "shared_j_a": j_a.to_str(),
        "shared_j_b": j_b.to_str(),
        "agree": j_a == j_b,
        "counters": {
            "alice": {"base": ctx_a.as_dict(), "ext": ctx_a.ext_as_dict()},
            "bob": {"base": ctx_b.as_dict(), "ext": ctx_b.ext_as_dict()},
        },
    }

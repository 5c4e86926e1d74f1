"""The cohomology of a finite equivariant projective space as a free module.

``X(p, q)`` is the complex projective space of ``C^p + (C^sigma)^q``.  Its
cohomology is a free module over the point ring with one basis element
``P_i`` in each extended degree class ``m``, for ``0 <= i < p+q``, where
``P_i`` restricts to ``c^i`` nonequivariantly.  Multiplicatively the ring
is generated by four classes, written here ``z0``, ``z1``, ``cw``, ``cxw``,
subject to

    z0*z1 = xi,   z1*cxw = (1-kappa)*z0*cw + e^2,   cw^p * cxw^q = 0,

together with "divided" classes ``z0^-k * cw^p`` and ``z1^-k * cxw^q``
(the unique elements returning ``cw^p`` resp. ``cxw^q`` after multiplying
back by the zeta power).  Every basis element is a monomial
``z0^s * z1^t * cw^a * cxw^b`` falling into one of six families; see
:class:`BasisMonomial`.

Products are computed by a terminating rewrite system: multiplication by
one generator at a time, normalizing after each step.  The rewrite rules
are exactly the relations above plus their consequences for divided
classes; they are exercised against the operator identities in the test
suite.  The engine is generic over the coefficient ring (the Burnside
theory by default; the constant-Z theory reuses it with the unit 1-kappa
collapsed to 1).
"""

from __future__ import annotations

from dataclasses import dataclass

from .grading import PiBDegree, deg_add
from .hscalar import HElement, h_fixed, h_rho, in_T

ALPHA = "alpha"  # z1^t * cw^a            t >= 1, a <= p-1
BETA = "beta"  # z0^s * cxw^b             s >= 1, b <= q-1
GAMMA = "gamma"  # cw^a * cxw^b           a <= p, b <= q, (a,b) != (p,q)
DELTA = "delta"  # z0 * cw^a * cxw^b      1 <= a <= p, b <= q-1
EPS = "eps"  # z0^s * cw^p * cxw^b        s <= -1, b <= q-1 (divided)
ZETAF = "zetaf"  # z1^t * cw^a * cxw^q    t <= -1, a <= p-1 (divided)


class UnsupportedProductError(ValueError):
    """Raised when both factors of a product carry divided monomials."""


@dataclass(frozen=True)
class ProjSpace:
    """The projective space X(p, q); requires p + q > 0."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0 or self.p + self.q == 0:
            raise ValueError(f"invalid projective space X({self.p},{self.q})")

    def __str__(self) -> str:
        return f"X({self.p},{self.q})"


def _family(p: int, q: int, s: int, t: int, a: int, b: int) -> str | None:
    if a < 0 or b < 0:
        return None
    if s == 0 and t >= 1 and a <= p - 1 and b == 0:
        return ALPHA
    if s >= 1 and t == 0 and a == 0 and b <= q - 1:
        return BETA
    if s == 0 and t == 0 and a <= p and b <= q and (a, b) != (p, q):
        return GAMMA
    if s == 1 and t == 0 and 1 <= a <= p and b <= q - 1:
        return DELTA
    if s <= -1 and t == 0 and a == p and b <= q - 1:
        return EPS
    if s == 0 and t <= -1 and a <= p - 1 and b == q:
        return ZETAF
    return None


@dataclass(frozen=True)
class BasisMonomial:
    """A canonical monomial z0^s * z1^t * cw^a * cxw^b over a fixed X(p, q).

    Exactly one of the six families holds; the constructor rejects any
    other exponent pattern.  Derived data: the degree class ``mclass``,
    the position ``(A, B) = (a - s, s + b)`` in that class, and the
    restriction index ``i = a + b`` (the monomial restricts to ``c^i``).
    """

    sp: ProjSpace
    s: int
    t: int
    a: int
    b: int

    def __post_init__(self):
        if self.family is None:
            raise ValueError(
                f"not a basis monomial of {self.sp}: "
                f"z0^{self.s}*z1^{self.t}*cw^{self.a}*cxw^{self.b}"
            )

    @property
    def family(self) -> str | None:
        return _family(self.sp.p, self.sp.q, self.s, self.t, self.a, self.b)

    @property
    def mclass(self) -> int:
        return self.t - self.s + self.a - self.b

    @property
    def pos(self) -> tuple[int, int]:
        return (self.a - self.s, self.s + self.b)

    @property
    def index(self) -> int:
        return self.a + self.b

    @property
    def grading(self) -> PiBDegree:
        A, B = self.pos
        return PiBDegree(self.mclass, 2 * A, 2 * B)

    def __str__(self) -> str:
        parts = []
        for name, exp in (("z0", self.s), ("z1", self.t), ("cw", self.a), ("cxw", self.b)):
            if exp == 1:
                parts.append(name)
            elif exp:
                parts.append(f"{name}^{exp}")
        return "*".join(parts) if parts else "1"


def position(x: BasisMonomial) -> tuple[int, int, int]:
    """(m, A, B) of a basis monomial: degree m*W1 + 2A + 2B*s."""
    A, B = x.pos
    return (x.mclass, A, B)


def _basis_tuples(p: int, q: int, m: int) -> list[tuple[int, int, int, int]]:
    if p == 0:
        return [(-m - j, 0, 0, j) for j in range(q)]
    if q == 0:
        return [(0, m - j, j, 0) for j in range(p)]
    if m >= 0:
        rest = _basis_tuples(p - 1, q, m - 1)
        return [(0, m, 0, 0)] + [(s, t, a + 1, b) for s, t, a, b in rest]
    rest = _basis_tuples(p, q - 1, m + 1)
    return [(-m, 0, 0, 0)] + [(s, t, a, b + 1) for s, t, a, b in rest]


def basis(sp: ProjSpace, m: int) -> list[BasisMonomial]:
    """The preferred basis of the degree class ``m``, ordered by index.

    Built by the pushforward recursion: peel off a pure zeta power and
    push the basis of the next smaller space forward by ``cw`` (m >= 0)
    or ``cxw`` (m < 0); the base cases are the single-variable spaces
    where one zeta class is invertible.

    >>> [str(P) for P in basis(ProjSpace(1, 1), 0)]
    ['1', 'z0*cw']
    """
    monos = [BasisMonomial(sp, *tup) for tup in _basis_tuples(sp.p, sp.q, m)]
    monos.sort(key=lambda x: x.index)
    assert [x.index for x in monos] == list(range(sp.p + sp.q))
    return monos


class ModuleElement:
    """A finite combination of basis monomials with point-ring coefficients.

    All terms must sit in a single total degree (monomial degree plus
    coefficient degree); the zero element is degree-agnostic.  Supports
    +, -, scaling by integers and scalars, and * via the rewrite engine.
    """

    __slots__ = ("sp", "ring", "terms")

    def __init__(self, sp: ProjSpace, terms: dict, ring=HElement):
        clean = {}
        grading = None
        for mono, coeff in terms.items():
            if not coeff:
                continue
            if mono.sp != sp:
                raise ValueError(f"monomial {mono} not over {sp}")
            total = deg_add(mono.grading, _embed(coeff.grading))
            if grading is None:
                grading = total
            elif total != grading:
                raise ValueError(f"mixed gradings: {total} vs {grading}")
            clean[mono] = coeff
        self.sp = sp
        self.ring = ring
        self.terms = clean

    @classmethod
    def zero(cls, sp: ProjSpace, ring=HElement) -> "ModuleElement":
        return cls(sp, {}, ring)

    @classmethod
    def unit(cls, sp: ProjSpace, ring=HElement) -> "ModuleElement":
        return cls(sp, {BasisMonomial(sp, 0, 0, 0, 0): ring.ring_one()}, ring)

    @property
    def grading(self) -> PiBDegree | None:
        for mono, coeff in self.terms.items():
            return deg_add(mono.grading, _embed(coeff.grading))
        return None

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ModuleElement):
            return NotImplemented
        return self.sp == other.sp and self.terms == other.terms

    def __add__(self, other: "ModuleElement") -> "ModuleElement":
        if self.sp != other.sp:
            raise ValueError("elements over different spaces")
        merged = dict(self.terms)
        for mono, coeff in other.terms.items():
            merged[mono] = merged.get(mono, coeff * 0) + coeff
        return ModuleElement(self.sp, merged, self.ring)

    def __neg__(self) -> "ModuleElement":
        return ModuleElement(self.sp, {m: -c for m, c in self.terms.items()}, self.ring)

    def __sub__(self, other: "ModuleElement") -> "ModuleElement":
        return self + (-other)

    def scale(self, c) -> "ModuleElement":
        """Multiply every coefficient by the scalar (or integer) ``c``."""
        return ModuleElement(
            self.sp, {m: coeff * c for m, coeff in self.terms.items()}, self.ring
        )

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if isinstance(other, ModuleElement):
            return mod_mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def divide_by_two(self) -> "ModuleElement":
        return ModuleElement(
            self.sp, {m: c.divide_by_two() for m, c in self.terms.items()}, self.ring
        )

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda mc: (mc[0].index, mc[0].a))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for mono, coeff in self.sorted_terms():
            ctext = str(coeff)
            mtext = str(mono)
            if mtext == "1":
                chunks.append(ctext)
            elif ctext == "1":
                chunks.append(mtext)
            elif ctext == "-1":
                chunks.append(f"-{mtext}")
            elif len(coeff.terms) > 1:
                chunks.append(f"({ctext})*{mtext}")
            else:
                chunks.append(f"{ctext}*{mtext}")
        out = chunks[0]
        for chunk in chunks[1:]:
            out += f" - {chunk[1:]}" if chunk.startswith("-") else f" + {chunk}"
        return out

    __repr__ = __str__


def _embed(deg) -> PiBDegree:
    if deg is None:
        return PiBDegree(0, 0, 0)
    return PiBDegree(0, deg.a, deg.b)


def _normalize(sp: ProjSpace, ring, coeff, s, t, a, b, out: dict) -> None:
    """Rewrite z0^s z1^t cw^a cxw^b * coeff into normal form, into ``out``.

    Entered only with exponents one generator step away from a valid
    monomial, so a <= p+1 and b <= q+1 throughout.
    """
    p, q = sp.p, sp.q
    if a >= p and b >= q:
        return  # contains cw^p * cxw^q = 0
    # cancel or deepen opposite zeta exponents; z0*z1 = xi and each zeta
    # acting on the divided tower of the other emits xi as well
    if s > 0 and t > 0:
        k = min(s, t)
        coeff = coeff * ring.ring_xi(k)
        s -= k
        t -= k
    elif s > 0 and t < 0:
        coeff = coeff * ring.ring_xi(s)
        t -= s
        s = 0
    elif s < 0 and t > 0:
        coeff = coeff * ring.ring_xi(t)
        s -= t
        t = 0
    assert not (s < 0 and t < 0)

    if t > 0:  # here s == 0
        if b >= 1:
            # one z1 meets one cxw: z1*cxw = u*z0*cw + e^2
            _normalize(sp, ring, coeff * ring.ring_u(), 1, t - 1, a + 1, b - 1, out)
            _normalize(sp, ring, coeff * ring.ring_e2(), 0, t - 1, a, b - 1, out)
            return
        if a >= p:
            assert a == p
            # z1^t * cw^p = xi^t * z0^-t * cw^p (division is unique)
            coeff = coeff * ring.ring_xi(t)
            _emit(out, BasisMonomial(sp, -t, 0, p, 0), coeff)
            return
        _emit(out, BasisMonomial(sp, 0, t, a, 0), coeff)
        return

    if t < 0:  # here s == 0; base is the divided cxw^q tower
        if b > q:
            assert b == q + 1
            # one extra cxw on the tower; mirror of the z1*cxw relation
            _normalize(sp, ring, coeff * ring.ring_u() * ring.ring_xi(1),
                       0, t - 2, a + 1, q, out)
            _normalize(sp, ring, coeff * ring.ring_e2(), 0, t - 1, a, q, out)
            return
        assert b == q
        _emit(out, BasisMonomial(sp, 0, t, a, q), coeff)
        return

    # t == 0
    if s >= 1 and b >= q:
        assert b == q
        # z0^s * cw^a * cxw^q = xi^s * z1^-s * cw^a * cxw^q
        coeff = coeff * ring.ring_xi(s)
        _emit(out, BasisMonomial(sp, 0, -s, a, q), coeff)
        return
    if s == 0 and b > q:
        assert b == q + 1
        _normalize(sp, ring, coeff * ring.ring_u() * ring.ring_xi(1),
                   0, -2, a + 1, q, out)
        _normalize(sp, ring, coeff * ring.ring_e2(), 0, -1, a, q, out)
        return
    if (s >= 2 and a >= 1) or a > p:
        assert a <= p + 1
        # z0^2 * cw = u*xi*cxw - u*e^2*z0, multiplied through; for s <= 1
        # this is the overflow rule for cw^(p+1) through the divided tower
        u = ring.ring_u()
        _normalize(sp, ring, coeff * u * ring.ring_xi(1), s - 2, 0, a - 1, b + 1, out)
        _normalize(sp, ring, -(coeff * u * ring.ring_e2()), s - 1, 0, a - 1, b, out)
        return
    if s < 0:
        assert a == p
        _emit(out, BasisMonomial(sp, s, 0, p, b), coeff)
        return
    _emit(out, BasisMonomial(sp, s, 0, a, b), coeff)


def _emit(out: dict, mono: BasisMonomial, coeff) -> None:
    out[mono] = out.get(mono, coeff * 0) + coeff


def gen_mul(gen: str, x: BasisMonomial, ring=HElement) -> ModuleElement:
    """Multiply a basis monomial by one generator, in normal form.

    >>> sp = ProjSpace(2, 2)
    >>> print(gen_mul("z1", BasisMonomial(sp, 0, 0, 0, 1)))
    e^2 + (-1 + g)*z0*cw
    """
    s, t, a, b = x.s, x.t, x.a, x.b
    if gen == "z0":
        s += 1
    elif gen == "z1":
        t += 1
    elif gen == "cw":
        a += 1
    elif gen == "cxw":
        b += 1
    else:
        raise ValueError(f"unknown generator {gen!r}")
    out: dict = {}
    _normalize(x.sp, ring, ring.ring_one(), s, t, a, b, out)
    return ModuleElement(x.sp, out, ring)


def apply_gen(gen: str, x: ModuleElement) -> ModuleElement:
    total = ModuleElement.zero(x.sp, x.ring)
    for mono, coeff in x.terms.items():
        total = total + gen_mul(gen, mono, x.ring).scale(coeff)
    return total


def is_divided(x: BasisMonomial) -> bool:
    return x.s < 0 or x.t < 0


def raw_monomial(sp: ProjSpace, s: int, t: int, a: int, b: int, ring=HElement) -> ModuleElement:
    """Normal form of the formal monomial z0^s z1^t cw^a cxw^b.

    Negative ``s`` requires ``a >= p`` (the divided cw^p tower) and
    negative ``t`` requires ``b >= q``; both negative is rejected.
    """
    if a < 0 or b < 0:
        raise ValueError("cw/cxw exponents must be nonnegative")
    if s < 0 and t < 0:
        raise ValueError("z0 and z1 exponents cannot both be negative")
    p, q = sp.p, sp.q
    if s < 0:
        if a < p:
            raise ValueError(f"z0^{s} requires a cw^{p} factor over {sp}")
        if q == 0:
            return ModuleElement.zero(sp, ring)  # cw^p = 0 when q = 0
        elem = ModuleElement(sp, {BasisMonomial(sp, s, 0, p, 0): ring.ring_one()}, ring)
        steps = [("cw", a - p), ("cxw", b), ("z1", t)]
    elif t < 0:
        if b < q:
            raise ValueError(f"z1^{t} requires a cxw^{q} factor over {sp}")
        if p == 0:
            return ModuleElement.zero(sp, ring)  # cxw^q = 0 when p = 0
        elem = ModuleElement(sp, {BasisMonomial(sp, 0, t, 0, q): ring.ring_one()}, ring)
        steps = [("cw", a), ("cxw", b - q), ("z0", s)]
    else:
        elem = ModuleElement.unit(sp, ring)
        steps = [("z0", s), ("z1", t), ("cw", a), ("cxw", b)]
    for gen, count in steps:
        for _ in range(count):
            elem = apply_gen(gen, elem)
    return elem


def mod_mul(x: ModuleElement, y: ModuleElement) -> ModuleElement:
    """Product of module elements.

    One factor must be free of divided monomials; it is split into
    generators which act one at a time on the other factor.
    """
    if x.sp != y.sp:
        raise ValueError("elements over different spaces")
    if any(is_divided(m) for m in y.terms):
        if any(is_divided(m) for m in x.terms):
            raise UnsupportedProductError(
                "both factors contain divided monomials; no generator factorization"
            )
        x, y = y, x
    total = ModuleElement.zero(x.sp, x.ring)
    for mono, coeff in y.terms.items():
        part = x.scale(coeff)
        for gen, count in (("z0", mono.s), ("z1", mono.t), ("cw", mono.a), ("cxw", mono.b)):
            for _ in range(count):
                part = apply_gen(gen, part)
        total = total + part
    return total


def coeff_vector(x: ModuleElement, m: int | None = None) -> list:
    """Coefficients of ``x`` against the ordered basis of its degree class.

    Returns ``p + q`` pairs ``(i, coefficient)``; absent terms are zero.
    """
    if m is None:
        if not x.terms:
            m = 0
        else:
            m = next(iter(x.terms)).mclass
    vector = []
    zero = x.ring.ring_one() * 0
    by_mono = dict(x.terms)
    for mono in basis(x.sp, m):
        vector.append((mono.index, by_mono.pop(mono, zero)))
    assert not by_mono, f"terms outside the basis of class m={m}: {list(by_mono)}"
    return vector


@dataclass(frozen=True)
class NoneqPoly:
    """A truncated integer polynomial in c: Z[c]/(c^N)."""

    N: int
    coeffs: tuple

    @classmethod
    def make(cls, N: int, coeffs: dict[int, int]) -> "NoneqPoly":
        clean = {k: v for k, v in coeffs.items() if v and 0 <= k < N}
        return cls(N, tuple(sorted(clean.items())))

    @classmethod
    def zero(cls, N: int) -> "NoneqPoly":
        return cls.make(N, {})

    def as_dict(self) -> dict[int, int]:
        return dict(self.coeffs)

    def __add__(self, other: "NoneqPoly") -> "NoneqPoly":
        assert self.N == other.N
        merged = self.as_dict()
        for k, v in other.coeffs:
            merged[k] = merged.get(k, 0) + v
        return NoneqPoly.make(self.N, merged)

    def scale(self, c: int) -> "NoneqPoly":
        return NoneqPoly.make(self.N, {k: c * v for k, v in self.coeffs})

    def reduce_mod(self, n: int) -> "NoneqPoly":
        return NoneqPoly.make(self.N, {k: v % n for k, v in self.coeffs})

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        bits = []
        for k, v in self.coeffs:
            body = "1" if k == 0 else ("c" if k == 1 else f"c^{k}")
            if k == 0:
                bits.append(str(v))
            elif v == 1:
                bits.append(body)
            elif v == -1:
                bits.append(f"-{body}")
            else:
                bits.append(f"{v}*{body}")
        return " + ".join(bits).replace("+ -", "- ")


# fixed-point images of the monomial families: exponent of c over each of
# the two fixed components, or None when the component is hit by a zeta
_FIXED_SHAPE = {
    ALPHA: ("a", None),
    BETA: (None, "b"),
    GAMMA: ("a", "b"),
    DELTA: (None, "b"),
    EPS: (None, "b"),
    ZETAF: ("a", None),
}


def mod_rho(x: ModuleElement) -> NoneqPoly:
    """Restriction to nonequivariant cohomology, in Z[c]/(c^(p+q))."""
    N = x.sp.p + x.sp.q
    out: dict[int, int] = {}
    for mono, coeff in x.terms.items():
        value, _ = h_rho(coeff)
        if value:
            out[mono.index] = out.get(mono.index, 0) + value
    return NoneqPoly.make(N, out)


def mod_fixed(x: ModuleElement) -> tuple[NoneqPoly, NoneqPoly]:
    """Fixed-point restriction: a pair over Z[c]/(c^p) and Z[c]/(c^q)."""
    p, q = x.sp.p, x.sp.q
    out0: dict[int, int] = {}
    out1: dict[int, int] = {}
    for mono, coeff in x.terms.items():
        value = h_fixed(coeff)
        if not value:
            continue
        shape0, shape1 = _FIXED_SHAPE[mono.family]
        if shape0 is not None:
            out0[mono.a] = out0.get(mono.a, 0) + value
        if shape1 is not None:
            out1[mono.b] = out1.get(mono.b, 0) + value
    return (NoneqPoly.make(p, out0), NoneqPoly.make(q, out1))


def in_tildeT(x: ModuleElement) -> bool:
    """True when every coefficient lies in the subgroup T."""
    return all(in_T(c) for c in x.terms.values())

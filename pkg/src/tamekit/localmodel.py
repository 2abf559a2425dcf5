"""Symbolic model of tame totally ramified extensions and their resolvends.

The model works with formal monomials pi^(a/m) in a uniformizer pi, with
coefficients in cyclotomic fields.  No identification pi^k = p is made:
every identity certified here is an exponent-level statement and stays
exact.  Two commuting-up-to-twist operators act:

    sigma:  pi^(a/m) -> zeta_m^a * pi^(a/m),   fixes all roots of unity
    phi_q:  zeta     -> zeta^q,                fixes all pi powers

so that phi_q . sigma = sigma^q . phi_q, the tame relation.

On top of the monomial layer sit group-algebra elements with TameElement
coefficients.  For s in G of order m the averaged ladder

    beta   = (1/m) sum_{i=0}^{m-1} pi^(i/m)
    beta*  = (1/m) sum_{i=0}^{m-1} pi^((i + (1-m)/2)/m)     (odd m)

gives resolvends r = sum_i sigma^i(beta) s^(-i), whose determinant against
a character chi is computed eigenfactor by eigenfactor through the cyclic
restriction multiplicities.  The verifiers check that these determinants
are exactly the monomials predicted by the Stickelberger pairings, that a
Kummer generator's twisted orbit sums recover each basis monomial, and
that the change-of-basis determinant is a unit above the chosen residue
characteristic.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .characters import CharTable, VirtualChar, restrict
from .cyclotomic import CycNum, zeta
from .groups import FiniteGroup, preset
from .padic import is_prime, lambda_valuation
from .stickelberger import _cyclic_context, pairing, star_pairing

Scalar = (int, Fraction, CycNum)


def is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            return n == 1
        p += 1
    return True


def smallest_prime_in_class(k: int, m: int) -> int:
    """Least prime congruent to k mod m (k coprime to m, or m = 1)."""
    if m == 1:
        return 2
    if gcd(k % m, m) != 1:
        raise ValueError(f"no primes in class {k} mod {m}")
    q = k % m
    while True:
        if q >= 2 and is_prime(q):
            return q
        q += m


class TameElement:
    """Finite sum of c * pi^e with e rational and c cyclotomic.

    Multiplication adds exponents; nothing collapses pi^k to a scalar, so
    equality of TameElements is equality of every coefficient.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        clean: dict[Fraction, CycNum] = {}
        for e, c in (terms or {}).items():
            e = Fraction(e)
            if isinstance(c, (int, Fraction)):
                c = CycNum.from_rational(c)
            if c:
                cur = clean.get(e)
                c = c if cur is None else cur + c
                if c:
                    clean[e] = c
                elif e in clean:
                    del clean[e]
        self.terms = clean

    @classmethod
    def zero(cls) -> "TameElement":
        return cls()

    @classmethod
    def one(cls) -> "TameElement":
        return cls({Fraction(0): 1})

    @classmethod
    def monomial(cls, exponent, coeff=1) -> "TameElement":
        return cls({Fraction(exponent): coeff})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            other = TameElement({Fraction(0): other})
        if not isinstance(other, TameElement):
            return NotImplemented
        if set(self.terms) != set(other.terms):
            return False
        return all(c == other.terms[e] for e, c in self.terms.items())

    __hash__ = None

    def __add__(self, other) -> "TameElement":
        if isinstance(other, Scalar):
            other = TameElement({Fraction(0): other})
        if not isinstance(other, TameElement):
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return TameElement(out)

    __radd__ = __add__

    def __neg__(self) -> "TameElement":
        return TameElement({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other) -> "TameElement":
        if isinstance(other, Scalar):
            return TameElement({e: c * other for e, c in self.terms.items()})
        if not isinstance(other, TameElement):
            return NotImplemented
        out: dict[Fraction, CycNum] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                c = c1 * c2
                out[e] = out[e] + c if e in out else c
        return TameElement(out)

    __rmul__ = __mul__

    def monomial_parts(self) -> tuple[Fraction, CycNum] | None:
        """(exponent, coefficient) when this is a single term, else None."""
        if len(self.terms) != 1:
            return None
        [(e, c)] = self.terms.items()
        return e, c

    def inverse(self) -> "TameElement":
        if not self.terms:
            raise ZeroDivisionError("zero is not invertible")
        parts = self.monomial_parts()
        if parts is None:
            raise ValueError("only monomials are invertible in the model")
        e, c = parts
        return TameElement({-e: c.inverse()})

    def __pow__(self, k: int) -> "TameElement":
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        out = TameElement.one()
        for _ in range(abs(k)):
            out = out * base
        return out

    def valuation(self) -> Fraction:
        if not self.terms:
            raise ValueError("zero has no valuation")
        return min(self.terms)

    def to_dict(self) -> dict:
        return {"terms": [[str(e), c.to_dict()]
                          for e, c in sorted(self.terms.items())]}

    @classmethod
    def from_dict(cls, d: dict) -> "TameElement":
        return cls({Fraction(e): CycNum.from_dict(c) for e, c in d["terms"]})

    def __repr__(self) -> str:
        if not self.terms:
            return "TameElement(0)"
        bits = [f"({c!r})*pi^({e})" for e, c in sorted(self.terms.items())]
        return "TameElement(" + " + ".join(bits) + ")"


def sigma_action(x: TameElement) -> TameElement:
    """pi^(a/b) -> zeta_b^a * pi^(a/b), with a/b in lowest terms.

    Well defined on exponents because Fraction always reduces, and the
    root of unity attached to a/b only depends on the value a/b mod 1.
    """
    return TameElement({
        e: c * zeta(e.denominator, e.numerator % e.denominator)
        for e, c in x.terms.items()})


def frobenius_action(x: TameElement, q: int) -> TameElement:
    """Raise every coefficient root of unity to the q-th power."""
    return TameElement({e: c.galois_apply(q) for e, c in x.terms.items()})


class LocalFieldSpec:
    """Residue size q and ramification degree m of one tame extension.

    Carries the tameness constraint gcd(m, q) = 1 and bounds the exponent
    denominators that sigma/frobenius accept through it.
    """

    __slots__ = ("q", "m")

    def __init__(self, q: int, m: int):
        if not is_prime_power(q):
            raise ValueError(f"residue size must be a prime power, got {q}")
        if m < 1:
            raise ValueError(f"ramification degree must be positive, got {m}")
        if gcd(m, q) != 1:
            raise ValueError(f"wild pair: gcd({m}, {q}) != 1")
        self.q = q
        self.m = m

    def _check(self, x: TameElement):
        for e in x.terms:
            if self.m % e.denominator != 0:
                raise ValueError(
                    f"exponent {e} falls outside pi^(1/{self.m}) powers")

    def sigma(self, x: TameElement) -> TameElement:
        self._check(x)
        return sigma_action(x)

    def frobenius(self, x: TameElement) -> TameElement:
        self._check(x)
        return frobenius_action(x, self.q)

    def __repr__(self) -> str:
        return f"LocalFieldSpec(q={self.q}, m={self.m})"


class GroupAlgebraElement:
    """Group-ring element with TameElement coefficients."""

    __slots__ = ("group", "terms")

    def __init__(self, group: FiniteGroup, terms: dict | None = None):
        self.group = group
        clean: dict[int, TameElement] = {}
        for g, x in (terms or {}).items():
            if isinstance(x, Scalar):
                x = TameElement({Fraction(0): x})
            if x:
                clean[g] = clean[g] + x if g in clean else x
                if not clean[g]:
                    del clean[g]
        self.terms = clean

    @classmethod
    def identity(cls, group: FiniteGroup) -> "GroupAlgebraElement":
        return cls(group, {0: TameElement.one()})

    def support(self) -> list[int]:
        return sorted(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        if self.group is not other.group:
            return False
        if set(self.terms) != set(other.terms):
            return False
        return all(x == other.terms[g] for g, x in self.terms.items())

    __hash__ = None

    def __add__(self, other) -> "GroupAlgebraElement":
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        if self.group is not other.group:
            raise ValueError("elements live over different groups")
        out = dict(self.terms)
        for g, x in other.terms.items():
            out[g] = out[g] + x if g in out else x
        return GroupAlgebraElement(self.group, out)

    def __sub__(self, other):
        return self + GroupAlgebraElement(
            other.group, {g: -x for g, x in other.terms.items()})

    def __mul__(self, other) -> "GroupAlgebraElement":
        if isinstance(other, Scalar) or isinstance(other, TameElement):
            return GroupAlgebraElement(
                self.group, {g: x * other for g, x in self.terms.items()})
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        if self.group is not other.group:
            raise ValueError("elements live over different groups")
        mul = self.group.mul
        out: dict[int, TameElement] = {}
        for g, x in self.terms.items():
            for h, y in other.terms.items():
                k = mul(g, h)
                xy = x * y
                out[k] = out[k] + xy if k in out else xy
        return GroupAlgebraElement(self.group, out)

    def __rmul__(self, other):
        if isinstance(other, Scalar) or isinstance(other, TameElement):
            return self * other
        return NotImplemented

    def right_mul(self, g: int) -> "GroupAlgebraElement":
        mul = self.group.mul
        return GroupAlgebraElement(
            self.group, {mul(h, g): x for h, x in self.terms.items()})

    def sigma(self) -> "GroupAlgebraElement":
        return GroupAlgebraElement(
            self.group, {g: sigma_action(x) for g, x in self.terms.items()})

    def frobenius(self, q: int) -> "GroupAlgebraElement":
        return GroupAlgebraElement(
            self.group,
            {g: frobenius_action(x, q) for g, x in self.terms.items()})

    def __repr__(self) -> str:
        names = self.group.names
        bits = [f"[{names[g]}]: {x!r}" for g, x in sorted(self.terms.items())]
        return "GroupAlgebraElement{" + ", ".join(bits) + "}"


def beta(m: int) -> TameElement:
    """(1/m) sum_i pi^(i/m).  Depends only on the order m."""
    w = Fraction(1, m)
    return TameElement({Fraction(i, m): w for i in range(m)})


def beta_star(m: int) -> TameElement:
    """Centered variant, exponents shifted by (1-m)/2; odd m only."""
    if m % 2 == 0:
        raise ValueError(f"centered ladder needs odd order, got {m}")
    w = Fraction(1, m)
    shift = (1 - m) // 2
    return TameElement({Fraction(i + shift, m): w for i in range(m)})


def _resolvend(G: FiniteGroup, s: int, b: TameElement) -> GroupAlgebraElement:
    m = G.element_order(s)
    terms = {}
    cur = b
    for i in range(m):
        terms[G.power(s, -i)] = cur
        cur = sigma_action(cur)
    return GroupAlgebraElement(G, terms)


def phi_resolvend(G: FiniteGroup, s: int) -> GroupAlgebraElement:
    """sum_i sigma^i(beta) s^(-i), supported on <s>."""
    return _resolvend(G, s, beta(G.element_order(s)))


def phi_star_resolvend(G: FiniteGroup, s: int) -> GroupAlgebraElement:
    """Centered resolvend; odd-order s only."""
    return _resolvend(G, s, beta_star(G.element_order(s)))


class TameCocycle:
    """Images (s, t) of the two tame generators, with t s t^-1 = s^q.

    q is the residue size; tameness demands gcd(|s|, q) = 1.
    """

    __slots__ = ("group", "s", "t", "q", "m")

    def __init__(self, group: FiniteGroup, s: int, t: int, q: int):
        m = group.element_order(s)
        if not is_prime_power(q):
            raise ValueError(f"residue size must be a prime power, got {q}")
        if gcd(m, q) != 1:
            raise ValueError(f"wild cocycle: gcd(|s|, q) = gcd({m}, {q}) != 1")
        if group.conjugate(t, s) != group.power(s, q):
            raise ValueError(
                f"relation t s t^-1 = s^q fails for s={group.names[s]}, "
                f"t={group.names[t]}, q={q}")
        self.group = group
        self.s = s
        self.t = t
        self.q = q
        self.m = m


def infer_q(G: FiniteGroup, s: int, t: int = 0) -> int:
    """Smallest prime q compatible with t s t^-1 = s^q."""
    m = G.element_order(s)
    c = G.conjugate(t, s)
    k = next((k for k in range(m) if G.power(s, k) == c), None)
    if k is None:
        raise ValueError("t does not normalize <s>")
    return smallest_prime_in_class(k, m)


def det_resolvend(x: GroupAlgebraElement, chi: VirtualChar) -> TameElement:
    """Determinant of chi's representation evaluated on x.

    Requires the support of x to generate a cyclic subgroup H: there the
    representation diagonalizes, each linear character xi of H contributes
    the eigenfactor sum_h x[h] xi(h) with multiplicity (chi|_H, xi), and
    the determinant is the product of the eigenfactors so powered.
    Negative multiplicities (virtual chi) need monomial eigenfactors.
    """
    G = x.group
    if chi.table.group is not G:
        raise ValueError("character and element live over different groups")
    if not x.terms:
        raise ValueError("zero element has no determinant")
    hull = G.subgroup_closure(x.support())
    h = len(hull)
    gens = [g for g in hull if G.element_order(g) == h]
    if not gens:
        raise ValueError(f"support generates a non-cyclic subgroup "
                         f"of order {h}")
    sub, ctab = _cyclic_context(G, min(gens))
    res = restrict(chi, sub, ctab)
    out = TameElement.one()
    for j in sorted(res.coeffs):
        mult = res.coeffs[j]
        if mult.denominator != 1:
            raise ValueError(f"non-integral multiplicity {mult} at row {j}")
        if mult == 0:
            continue
        factor = TameElement.zero()
        for g in sub.elements:
            c = x.terms.get(g)
            if c is not None:
                factor = factor + c * ctab.value(j, ctab.class_of[sub.from_parent[g]])
        if mult < 0 and factor.monomial_parts() is None:
            raise ValueError(f"eigenfactor for row {j} is not invertible")
        out = out * factor ** int(mult)
    return out


def _det_via_elimination(rows: list[list[CycNum]]) -> CycNum:
    # plain Gaussian elimination over the cyclotomic field
    n = len(rows)
    mat = [list(r) for r in rows]
    det = CycNum.from_rational(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if mat[r][c]), None)
        if piv is None:
            return CycNum.from_rational(0)
        if piv != c:
            mat[c], mat[piv] = mat[piv], mat[c]
            det = -det
        det = det * mat[c][c]
        inv = mat[c][c].inverse()
        for r in range(c + 1, n):
            if mat[r][c]:
                f = mat[r][c] * inv
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[c])]
    return det


def verify_kummer_generator(e: int, n: int, q: int | None = None,
                            precision: int | None = None) -> dict:
    """Certify that alpha = (1/e) sum_i pi^((n+i)/e) generates freely.

    Two routes per linear character: the twisted orbit sum
    sum_j sigma^j(alpha) zeta_e^(-(n+l)j) must equal the single monomial
    pi^((n+l)/e), and the determinant route through det_resolvend must
    land on the same monomial.  The e x e matrix taking the sigma-orbit
    of alpha to the monomial basis must in addition have determinant a
    unit above q, checked by exact lambda-adic valuation.
    """
    if e < 1:
        raise ValueError(f"order must be positive, got {e}")
    if abs(n) > e - 1 and e > 1 or (e == 1 and n != 0):
        raise ValueError(f"window offset {n} out of range for order {e}")
    if q is None:
        q = smallest_prime_in_class(1, e)
    if gcd(e, q) != 1:
        raise ValueError(f"wild pair: gcd({e}, {q}) != 1")

    G = preset(f"C{e}")
    s = 1 % e
    w = Fraction(1, e)
    alpha = TameElement({Fraction(n + i, e): w for i in range(e)})
    orbit = []
    cur = alpha
    for _ in range(e):
        orbit.append(cur)
        cur = sigma_action(cur)

    ctab = CharTable.cyclic(G, s)
    r = GroupAlgebraElement(G, {G.power(s, -j): orbit[j] for j in range(e)})

    checks = []
    for l in range(e):
        target = TameElement.monomial(Fraction(n + l, e))
        twisted = TameElement.zero()
        for j in range(e):
            twisted = twisted + orbit[j] * zeta(e, (-(n + l) * j) % e)
        chi = VirtualChar.irreducible(ctab, (n + l) % e)
        det_route = det_resolvend(r, chi)
        ok = twisted == target and det_route == target
        checks.append({
            "offset": l,
            "target_exponent": str(Fraction(n + l, e)),
            "twisted_sum": twisted == target,
            "det_route": det_route == target,
            "pass": ok,
        })

    # coefficient of pi^((n+i)/e) inside sigma^j(alpha)
    mat = [[orbit[j].terms.get(Fraction(n + i, e), CycNum.from_rational(0))
            for i in range(e)] for j in range(e)]
    det = _det_via_elimination(mat)
    val = lambda_valuation(det, q, precision) if det else None
    unit = {
        "q": q,
        "nonzero": bool(det),
        "lambda_valuation": val,
        "pass": bool(det) and val == 0,
    }
    return {
        "suite": "kummer-generator",
        "e": e,
        "n": n,
        "q": q,
        "checks": checks,
        "unit_determinant": unit,
        "pass": all(c["pass"] for c in checks) and unit["pass"],
    }


def verify_factorization(G: FiniteGroup, s: int, t: int | None = None,
                         q: int | None = None, label: str | None = None) -> dict:
    """Check the determinant factorization package for one odd-order s.

    Per irreducible chi: det of the plain resolvend is pi^<chi,s>, det of
    the centered resolvend is pi^<chi,s>*, and the ratio obeys the second
    Adams operation identity

        D*(chi) D(chi)^-1 = D(psi2 chi) D(chi)^-2 = pi^<psi2 chi - 2chi, s>.

    Also checks sigma-equivariance r^sigma = r.s for both resolvends.
    """
    m = G.element_order(s)
    if m % 2 == 0:
        raise ValueError(f"factorization check needs odd |s|, got {m}")
    if t is None:
        t = 0
    if q is None:
        q = infer_q(G, s, t)
    cocycle = TameCocycle(G, s, t, q)
    table = CharTable.of(G)

    r = phi_resolvend(G, s)
    r_star = phi_star_resolvend(G, s)
    equivariance = {
        "plain": r.sigma() == r.right_mul(s),
        "star": r_star.sigma() == r_star.right_mul(s),
    }

    checks = []
    for i in range(table.k):
        chi = VirtualChar.irreducible(table, i)
        psi2 = chi.adams(2)
        d = det_resolvend(r, chi)
        d_star = det_resolvend(r_star, chi)
        p_plain = pairing(chi, s)
        p_star = star_pairing(chi, s)
        f_exp = pairing(psi2 - chi - chi, s)
        d_inv = d.inverse()
        ratio = d_star * d_inv
        ok_a = d == TameElement.monomial(p_plain)
        ok_b = d_star == TameElement.monomial(p_star)
        ok_c = ratio == det_resolvend(r, psi2) * d_inv * d_inv
        ok_f = ratio == TameElement.monomial(f_exp) and f_exp == p_star - p_plain
        checks.append({
            "chi": i,
            "degree": int(table.degrees[i]),
            "det_exponent": str(p_plain),
            "det_star_exponent": str(p_star),
            "plain_matches_pairing": ok_a,
            "star_matches_pairing": ok_b,
            "adams_ratio": ok_c,
            "f_exponent": str(f_exp),
            "f_matches": ok_f,
            "pass": ok_a and ok_b and ok_c and ok_f,
        })
    return {
        "suite": "factorization",
        "group": label or getattr(G, "label", f"group of order {G.n}"),
        "element": G.names[s],
        "element_order": m,
        "t": G.names[cocycle.t],
        "q": cocycle.q,
        "equivariance": equivariance,
        "checks": checks,
        "pass": all(equivariance.values()) and all(c["pass"] for c in checks),
    }

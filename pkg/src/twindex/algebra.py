"""Finite groups and finite commutative rings as explicit operation tables.

Everything is small enough (paper-style families, at most a few hundred
elements) that dense ``n x n`` numpy tables with exhaustive axiom checks at
construction are the simplest uniform representation: one code path covers
``Z_n``, dihedral and quaternion groups, direct products, and polynomial
quotient rings. Ideal machinery (generation, enumeration, Jacobson radical,
comaximality) operates on plain element sets.

Compact spec strings such as ``"Z24"``, ``"Z2xZ2xZ4"``, ``"Z2[x]/(x^3)xZ2"``,
``"D12"``, ``"Q8"`` and ``"E2^3"`` are parsed by :func:`group_from_spec` /
:func:`ring_from_spec` for the command-line surface.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

import numpy as np

from .errors import BadParameter, RingMismatch, RingTooLarge

IDEAL_ENUM_CAP = 256


# --- table validation helpers -------------------------------------------------


def _as_table(table, n: int, what: str) -> np.ndarray:
    arr = np.asarray(table, dtype=np.int64)
    if arr.shape != (n, n):
        raise BadParameter(f"{what} table must be {n}x{n}, got shape {arr.shape}")
    if arr.size and (arr.min() < 0 or arr.max() >= n):
        raise BadParameter(f"{what} table entries must lie in [0, {n})")
    arr.setflags(write=False)
    return arr


def _check_associative(table: np.ndarray, what: str) -> None:
    n = table.shape[0]
    for a in range(n):
        if not np.array_equal(table[table[a], :], table[a, table]):
            raise BadParameter(f"{what} is not associative (witness element {a})")


def _check_identity(table: np.ndarray, e: int, what: str) -> None:
    n = table.shape[0]
    idx = np.arange(n)
    if not (np.array_equal(table[e], idx) and np.array_equal(table[:, e], idx)):
        raise BadParameter(f"element {e} is not a two-sided {what} identity")


# --- groups -------------------------------------------------------------------


class FiniteGroup:
    """A finite group given by its composition table.

    All group axioms are verified exhaustively at construction; instances are
    immutable.
    """

    def __init__(
        self,
        table,
        identity: int,
        labels: Sequence[str] | None = None,
        name: str = "group",
    ):
        tab = _as_table(table, len(table), "composition")
        n = tab.shape[0]
        if n == 0:
            raise BadParameter("a group needs at least one element")
        if not 0 <= identity < n:
            raise BadParameter(f"identity index {identity} out of range")
        _check_identity(tab, identity, "group")
        _check_associative(tab, "composition")
        if not (tab == identity).any(axis=1).all():
            raise BadParameter("some element has no inverse")
        self._table = tab
        self.identity = identity
        self.name = name
        if labels is None:
            labels = tuple(str(i) for i in range(n))
        else:
            labels = tuple(labels)
            if len(labels) != n:
                raise BadParameter(f"expected {n} labels, got {len(labels)}")
        self.element_labels = labels

    @property
    def order(self) -> int:
        return self._table.shape[0]

    def op(self, a: int, b: int) -> int:
        return int(self._table[a, b])

    def inverse(self, a: int) -> int:
        return int(np.nonzero(self._table[a] == self.identity)[0][0])

    def power(self, a: int, k: int) -> int:
        """``a`` composed with itself ``k`` times (``k >= 0``)."""
        result = self.identity
        for _ in range(k):
            result = self.op(result, a)
        return result

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.op(x, a)
            k += 1
        return k

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.order})"


def cyclic_subgroup(g: FiniteGroup, a: int) -> frozenset[int]:
    """All powers of ``a``: the cyclic subgroup it generates."""
    if not 0 <= a < g.order:
        raise BadParameter(f"element {a} out of range for {g!r}")
    seen = {g.identity}
    x = a
    while x not in seen:
        seen.add(x)
        x = g.op(x, a)
    return frozenset(seen)


def cyclic_group(n: int) -> FiniteGroup:
    """Integers modulo ``n`` under addition, elements labeled ``0..n-1``."""
    if n < 1:
        raise BadParameter(f"cyclic group needs n >= 1, got {n}")
    idx = np.arange(n)
    table = (idx[:, None] + idx[None, :]) % n
    return FiniteGroup(table, 0, [str(i) for i in range(n)], name=f"Z{n}")


def dihedral_group(n: int) -> FiniteGroup:
    """Dihedral group of order ``2n`` (``n >= 3``): rotations then reflections.

    Element ``a*n + i`` stands for ``s^a r^i``; the product rule
    ``(s^a r^i)(s^b r^j) = s^(a+b) r^(j + (-1)^b i)`` fills the table.
    """
    if n < 3:
        raise BadParameter(f"dihedral group needs n >= 3, got {n}")
    order = 2 * n
    table = np.zeros((order, order), dtype=np.int64)
    for a in range(2):
        for i in range(n):
            for b in range(2):
                for j in range(n):
                    exp = (j + (i if b == 0 else -i)) % n
                    table[a * n + i, b * n + j] = ((a + b) % 2) * n + exp
    labels = ["1"] + [f"r{i}" if i > 1 else "r" for i in range(1, n)]
    labels += ["s"] + [f"sr{i}" if i > 1 else "sr" for i in range(1, n)]
    return FiniteGroup(table, 0, labels, name=f"D{order}")


def quaternion_group() -> FiniteGroup:
    """The quaternion group of order 8 on ``1, a, a2, a3, b, ab, a2b, a3b``."""
    labels = ["1", "a", "a2", "a3", "b", "ab", "a2b", "a3b"]
    table = np.zeros((8, 8), dtype=np.int64)
    for i in range(4):
        for j in range(2):
            for k in range(4):
                for l in range(2):
                    if j == 0:
                        exp, refl = (i + k) % 4, l
                    elif l == 0:
                        exp, refl = (i - k) % 4, 1
                    else:
                        exp, refl = (i - k + 2) % 4, 0
                    table[j * 4 + i, l * 4 + k] = refl * 4 + exp
    return FiniteGroup(table, 0, labels, name="Q8")


def elementary_abelian_2(k: int) -> FiniteGroup:
    """The group ``(Z_2)^k``: XOR on bit vectors, labeled as binary strings."""
    if k < 1:
        raise BadParameter(f"elementary abelian 2-group needs k >= 1, got {k}")
    n = 1 << k
    idx = np.arange(n)
    table = idx[:, None] ^ idx[None, :]
    labels = [format(i, f"0{k}b") for i in range(n)]
    return FiniteGroup(table, 0, labels, name=f"E2^{k}")


def group_product(*groups: FiniteGroup) -> FiniteGroup:
    """Direct product; elements are tuples in row-major index order."""
    if not groups:
        raise BadParameter("product of groups needs at least one factor")
    if len(groups) == 1:
        return groups[0]
    sizes = [g.order for g in groups]
    total = int(np.prod(sizes))
    digits = _mixed_radix_digits(total, sizes)
    table = np.zeros((total, total), dtype=np.int64)
    for j, g in enumerate(groups):
        stride = int(np.prod(sizes[j + 1 :])) if j + 1 < len(sizes) else 1
        dj = digits[:, j]
        table += g._table[dj[:, None], dj[None, :]] * stride
    labels = [
        "(" + ",".join(g.element_labels[digits[i, j]] for j, g in enumerate(groups)) + ")"
        for i in range(total)
    ]
    identity = 0
    name = "x".join(g.name for g in groups)
    return FiniteGroup(table, identity, labels, name=name)


def _mixed_radix_digits(total: int, sizes: Sequence[int]) -> np.ndarray:
    """Row-major digit matrix: ``digits[i, j]`` is index ``i``'s j-th coordinate."""
    digits = np.zeros((total, len(sizes)), dtype=np.int64)
    idx = np.arange(total)
    for j in range(len(sizes) - 1, -1, -1):
        digits[:, j] = idx % sizes[j]
        idx //= sizes[j]
    return digits


# --- rings --------------------------------------------------------------------


class FiniteRing:
    """A finite commutative ring with unity given by its two tables.

    Construction verifies the abelian additive group, associative commutative
    multiplication with identity, distributivity, and ``zero != one`` for
    size >= 2.
    """

    def __init__(
        self,
        add,
        mul,
        zero: int,
        one: int,
        labels: Sequence[str] | None = None,
        name: str = "ring",
    ):
        n = len(add)
        if n < 1:
            raise BadParameter("a ring needs at least one element")
        add_t = _as_table(add, n, "addition")
        mul_t = _as_table(mul, n, "multiplication")
        if not np.array_equal(add_t, add_t.T):
            raise BadParameter("addition is not commutative")
        _check_identity(add_t, zero, "additive")
        _check_associative(add_t, "addition")
        if not (add_t == zero).any(axis=1).all():
            raise BadParameter("some element has no additive inverse")
        if not np.array_equal(mul_t, mul_t.T):
            raise BadParameter("multiplication is not commutative")
        _check_identity(mul_t, one, "multiplicative")
        _check_associative(mul_t, "multiplication")
        for a in range(n):
            row = mul_t[a]
            if not np.array_equal(mul_t[a, add_t], add_t[row[:, None], row[None, :]]):
                raise BadParameter(f"distributivity fails at element {a}")
        if n >= 2 and zero == one:
            raise BadParameter("zero and one must differ for size >= 2")
        self._add = add_t
        self._mul = mul_t
        self.zero = zero
        self.one = one
        self.name = name
        if labels is None:
            labels = tuple(str(i) for i in range(n))
        else:
            labels = tuple(labels)
            if len(labels) != n:
                raise BadParameter(f"expected {n} labels, got {len(labels)}")
        self.element_labels = labels
        self.label_index = {s: i for i, s in enumerate(labels)}

    @property
    def size(self) -> int:
        return self._add.shape[0]

    def add(self, a: int, b: int) -> int:
        return int(self._add[a, b])

    def mul(self, a: int, b: int) -> int:
        return int(self._mul[a, b])

    def neg(self, a: int) -> int:
        return int(np.nonzero(self._add[a] == self.zero)[0][0])

    def __repr__(self):
        return f"FiniteRing({self.name}, size={self.size})"


def zmod(n: int) -> FiniteRing:
    """The ring of integers modulo ``n`` (``n >= 2``)."""
    if n < 2:
        raise BadParameter(f"Z_n needs n >= 2, got {n}")
    idx = np.arange(n)
    return FiniteRing(
        (idx[:, None] + idx[None, :]) % n,
        (idx[:, None] * idx[None, :]) % n,
        0,
        1,
        [str(i) for i in range(n)],
        name=f"Z{n}",
    )


def ring_product(*rings: FiniteRing) -> FiniteRing:
    """Direct product with componentwise operations and tuple labels."""
    if not rings:
        raise BadParameter("product of rings needs at least one factor")
    if len(rings) == 1:
        return rings[0]
    sizes = [r.size for r in rings]
    total = int(np.prod(sizes))
    digits = _mixed_radix_digits(total, sizes)
    add = np.zeros((total, total), dtype=np.int64)
    mul = np.zeros((total, total), dtype=np.int64)
    zero = one = 0
    for j, r in enumerate(rings):
        stride = int(np.prod(sizes[j + 1 :])) if j + 1 < len(sizes) else 1
        dj = digits[:, j]
        add += r._add[dj[:, None], dj[None, :]] * stride
        mul += r._mul[dj[:, None], dj[None, :]] * stride
        zero += r.zero * stride
        one += r.one * stride
    labels = [
        "(" + ",".join(r.element_labels[digits[i, j]] for j, r in enumerate(rings)) + ")"
        for i in range(total)
    ]
    name = "x".join(r.name for r in rings)
    return FiniteRing(add, mul, zero, one, labels, name=name)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def poly_quotient_ring(p: int, coeffs: Sequence[int]) -> FiniteRing:
    """``Z_p[x]`` modulo the monic polynomial with the given coefficients.

    ``coeffs[i]`` is the coefficient of ``x^i``; the leading coefficient must
    reduce to 1 mod ``p`` and the degree must be at least 1. Elements are the
    ``p^deg`` residue polynomials, labeled like ``"1+x+x2"``.
    """
    if not _is_prime(p):
        raise BadParameter(f"modulus {p} is not prime")
    coeffs = [c % p for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    deg = len(coeffs) - 1
    if deg < 1:
        raise BadParameter("quotient polynomial must have degree >= 1")
    if coeffs[-1] != 1:
        raise BadParameter("quotient polynomial must be monic")
    size = p**deg

    def decode(i: int) -> list[int]:
        out = []
        for _ in range(deg):
            out.append(i % p)
            i //= p
        return out

    def encode(cs: list[int]) -> int:
        v = 0
        for c in reversed(cs[:deg]):
            v = v * p + (c % p)
        return v

    def reduce_poly(cs: list[int]) -> list[int]:
        cs = [c % p for c in cs]
        for k in range(len(cs) - 1, deg - 1, -1):
            lead = cs[k]
            if lead:
                for i in range(deg + 1):
                    cs[k - deg + i] = (cs[k - deg + i] - lead * coeffs[i]) % p
        return cs[:deg] + [0] * max(0, deg - len(cs))

    add = np.zeros((size, size), dtype=np.int64)
    mul = np.zeros((size, size), dtype=np.int64)
    polys = [decode(i) for i in range(size)]
    for i, a in enumerate(polys):
        for j, b in enumerate(polys):
            add[i, j] = encode([(x + y) % p for x, y in zip(a, b)])
            prod = [0] * (2 * deg - 1)
            for da, ca in enumerate(a):
                if ca:
                    for db, cb in enumerate(b):
                        prod[da + db] = (prod[da + db] + ca * cb) % p
            mul[i, j] = encode(reduce_poly(prod))
    labels = [_poly_label(cs) for cs in polys]
    name = f"Z{p}[x]/({_poly_label(coeffs)})"
    return FiniteRing(add, mul, 0, 1, labels, name=name)


def _poly_label(cs: Sequence[int]) -> str:
    terms = []
    for d, c in enumerate(cs):
        if c == 0:
            continue
        if d == 0:
            terms.append(str(c))
        elif d == 1:
            terms.append("x" if c == 1 else f"{c}x")
        else:
            terms.append(f"x{d}" if c == 1 else f"{c}x{d}")
    return "+".join(terms) if terms else "0"


# --- ideals -------------------------------------------------------------------


@dataclass(frozen=True)
class Ideal:
    """A subset of a finite ring closed under addition and external products."""

    ring: FiniteRing
    elements: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(sorted(set(self.elements))))

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x: int) -> bool:
        return x in set(self.elements)

    def is_proper(self) -> bool:
        return len(self.elements) < self.ring.size

    def contains_ideal(self, other: "Ideal") -> bool:
        return set(other.elements) <= set(self.elements)

    def label(self) -> str:
        return "{" + ",".join(self.ring.element_labels[x] for x in self.elements) + "}"


def ideal_generated(r: FiniteRing, gens: Iterable[int] = ()) -> Ideal:
    """Smallest ideal containing ``gens``: fixed-point closure of ``R*gens``."""
    current = {r.zero}
    for g in gens:
        if not 0 <= g < r.size:
            raise BadParameter(f"generator {g} out of range for {r!r}")
        current.update(r._mul[:, g].tolist())
    while True:
        arr = np.fromiter(current, count=len(current), dtype=np.int64)
        sums = set(r._add[np.ix_(arr, arr)].ravel().tolist())
        if sums <= current:
            break
        current |= sums
    return Ideal(r, tuple(current))


def ideal_sum(i: Ideal, j: Ideal) -> Ideal:
    """The ideal ``I + J = {a + b : a in I, b in J}``."""
    if i.ring is not j.ring:
        raise RingMismatch("cannot sum ideals of different rings")
    r = i.ring
    table = r._add[np.ix_(np.array(i.elements), np.array(j.elements))]
    return Ideal(r, tuple(set(table.ravel().tolist())))


def all_ideals(r: FiniteRing, *, cap: int = IDEAL_ENUM_CAP) -> list[Ideal]:
    """Every ideal of ``r``, sorted by (size, element list).

    Enumerates principal ideals and closes under pairwise ideal sums, which
    is complete because every ideal of a finite ring is a finite sum of
    principal ideals.
    """
    if r.size > cap:
        raise RingTooLarge(f"ring size {r.size} exceeds the enumeration cap {cap}")
    found: set[tuple[int, ...]] = set()
    worklist: list[Ideal] = []
    for x in range(r.size):
        ideal = ideal_generated(r, [x])
        if ideal.elements not in found:
            found.add(ideal.elements)
            worklist.append(ideal)
    ideals = list(worklist)
    while worklist:
        current = worklist.pop()
        for other in list(ideals):
            s = ideal_sum(current, other)
            if s.elements not in found:
                found.add(s.elements)
                ideals.append(s)
                worklist.append(s)
    ideals.sort(key=lambda i: (len(i.elements), i.elements))
    return ideals


def maximal_ideals(r: FiniteRing, *, cap: int = IDEAL_ENUM_CAP) -> list[Ideal]:
    """Proper ideals maximal under inclusion."""
    proper = [i for i in all_ideals(r, cap=cap) if i.is_proper()]
    return [
        i
        for i in proper
        if not any(o is not i and o.contains_ideal(i) for o in proper)
    ]


def jacobson_radical(r: FiniteRing, *, cap: int = IDEAL_ENUM_CAP) -> Ideal:
    """Intersection of all maximal ideals."""
    maxima = maximal_ideals(r, cap=cap)
    common = reduce(
        lambda a, b: a & b, (set(i.elements) for i in maxima), set(range(r.size))
    )
    return Ideal(r, tuple(common))


def is_comaximal(r: FiniteRing, i: Ideal, j: Ideal) -> bool:
    """True iff ``I + J`` is the whole ring (equivalently, contains one)."""
    if i.ring is not r or j.ring is not r:
        raise RingMismatch("ideals do not belong to the given ring")
    table = r._add[np.ix_(np.array(i.elements), np.array(j.elements))]
    return bool((table == r.one).any())


# --- compact spec strings -------------------------------------------------------


def _split_top_level(s: str, sep: str) -> list[str]:
    parts, depth, start = [], 0, 0
    for pos, ch in enumerate(s):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
            if depth < 0:
                raise BadParameter(f"unbalanced brackets in {s!r}")
        elif ch == sep and depth == 0:
            parts.append(s[start:pos])
            start = pos + 1
    if depth != 0:
        raise BadParameter(f"unbalanced brackets in {s!r}")
    parts.append(s[start:])
    return parts


def _parse_poly(text: str, p: int) -> list[int]:
    coeffs: dict[int, int] = {}
    for term in text.split("+"):
        term = term.strip()
        if not term:
            raise BadParameter(f"empty term in polynomial {text!r}")
        if "x" not in term:
            try:
                coeffs[0] = coeffs.get(0, 0) + int(term)
            except ValueError:
                raise BadParameter(f"bad constant term {term!r}") from None
            continue
        c_str, _, d_str = term.partition("x")
        try:
            c = int(c_str) if c_str else 1
            d = int(d_str.lstrip("^")) if d_str else 1
        except ValueError:
            raise BadParameter(f"bad polynomial term {term!r}") from None
        coeffs[d] = coeffs.get(d, 0) + c
    degree = max(coeffs)
    return [coeffs.get(d, 0) % p for d in range(degree + 1)]


def _ring_atom(atom: str) -> FiniteRing:
    if "[" in atom:
        head, _, rest = atom.partition("[")
        if not (head.startswith("Z") and rest.startswith("x]/(") and rest.endswith(")")):
            raise BadParameter(f"bad quotient ring spec {atom!r}")
        try:
            p = int(head[1:])
        except ValueError:
            raise BadParameter(f"bad modulus in {atom!r}") from None
        return poly_quotient_ring(p, _parse_poly(rest[len("x]/(") : -1], p))
    if atom.startswith("Z"):
        try:
            n = int(atom[1:])
        except ValueError:
            raise BadParameter(f"bad ring spec {atom!r}") from None
        return zmod(n)
    raise BadParameter(f"unknown ring spec {atom!r}")


def ring_from_spec(spec: str) -> FiniteRing:
    """Parse ring specs like ``Z24``, ``Z2xZ2xZ4`` or ``Z2[x]/(x^3)xZ2``."""
    spec = spec.strip()
    if not spec:
        raise BadParameter("empty ring spec")
    atoms = [_ring_atom(a) for a in _split_top_level(spec, "x")]
    return ring_product(*atoms) if len(atoms) > 1 else atoms[0]


def _group_atom(atom: str) -> FiniteGroup:
    if atom.startswith("Z"):
        try:
            return cyclic_group(int(atom[1:]))
        except ValueError:
            raise BadParameter(f"bad group spec {atom!r}") from None
    if atom.startswith("D"):
        try:
            order = int(atom[1:])
        except ValueError:
            raise BadParameter(f"bad group spec {atom!r}") from None
        if order % 2 or order < 6:
            raise BadParameter(f"dihedral spec needs an even order >= 6, got {atom!r}")
        return dihedral_group(order // 2)
    if atom == "Q8":
        return quaternion_group()
    if atom.startswith("E2^"):
        try:
            return elementary_abelian_2(int(atom[3:]))
        except ValueError:
            raise BadParameter(f"bad group spec {atom!r}") from None
    raise BadParameter(f"unknown group spec {atom!r}")


def group_from_spec(spec: str) -> FiniteGroup:
    """Parse group specs like ``Z6``, ``D12``, ``Q8``, ``E2^3`` or products."""
    spec = spec.strip()
    if not spec:
        raise BadParameter("empty group spec")
    atoms = [_group_atom(a) for a in _split_top_level(spec, "x")]
    return group_product(*atoms) if len(atoms) > 1 else atoms[0]


def ideal_from_spec(r: FiniteRing, spec: str) -> Ideal:
    """Parse an ideal given by generator labels, e.g. ``(8)`` or ``((0,1))``."""
    spec = spec.strip()
    if not (spec.startswith("(") and spec.endswith(")")):
        raise BadParameter(f"ideal spec must be parenthesized, got {spec!r}")
    inner = spec[1:-1].strip()
    gens = []
    if inner:
        for part in _split_top_level(inner, ","):
            label = part.strip()
            if label not in r.label_index:
                raise BadParameter(f"unknown element label {label!r} in {r!r}")
            gens.append(r.label_index[label])
    return ideal_generated(r, gens)

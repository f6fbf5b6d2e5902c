"""Root system combinatorics in fundamental-weight coordinates.

A weight is a plain tuple of ints: its coefficients on the fundamental
weights.  Roots are stored in the same coordinates.  All arithmetic is
exact (ints and Fractions); nothing in this package touches floats.

Supported systems: A1, A2, A3, B2, G2, with the usual Bourbaki numbering
of simple roots (B2: alpha1 long; G2: alpha1 short).
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, Sequence

from .errors import NotARoot, NotDominant, NotRestricted, WrongSystem

Weight = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]

SYSTEMS: tuple[str, ...] = ("A1", "A2", "A3", "B2", "G2")

# simple roots, fw coordinates: entry i is alpha_i, its k-th coordinate is
# the pairing of alpha_i with the k-th simple coroot
_SIMPLE_ROOTS: dict[str, tuple[Weight, ...]] = {
    "A1": ((2,),),
    "A2": ((2, -1), (-1, 2)),
    "A3": ((2, -1, 0), (-1, 2, -1), (0, -1, 2)),
    "B2": ((2, -2), (-1, 2)),
    "G2": ((2, -1), (-3, 2)),
}

# d_i = half the squared length of alpha_i, normalised so short roots get 1
_SYMMETRIZERS: dict[str, tuple[int, ...]] = {
    "A1": (1,),
    "A2": (1, 1),
    "A3": (1, 1, 1),
    "B2": (2, 1),
    "G2": (1, 3),
}


def wadd(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def wsub(a: Weight, b: Weight) -> Weight:
    return tuple(x - y for x, y in zip(a, b))


def wneg(a: Weight) -> Weight:
    return tuple(-x for x in a)


def wscale(c: int, a: Weight) -> Weight:
    return tuple(c * x for x in a)


def _mat_apply(m: Matrix, v: Weight) -> Weight:
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in m)


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def _identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


class RootSystem:
    """One of the five supported root systems, with its Weyl group
    materialised as integer matrices acting on fw coordinates."""

    def __init__(self, name: str):
        if name not in _SIMPLE_ROOTS:
            raise WrongSystem(f"unknown root system {name!r}")
        self.name = name
        self.simple_roots: tuple[Weight, ...] = _SIMPLE_ROOTS[name]
        self.rank: int = len(self.simple_roots)
        self.d: tuple[int, ...] = _SYMMETRIZERS[name]
        self.rho: Weight = (1,) * self.rank
        # cartan[i][j] = pairing of alpha_j with the i-th simple coroot,
        # so the columns are the simple roots
        self.cartan: Matrix = tuple(
            tuple(self.simple_roots[j][i] for j in range(self.rank))
            for i in range(self.rank)
        )
        self.cartan_inv: tuple[tuple[Fraction, ...], ...] = _invert(self.cartan)
        self._simple_refl: tuple[Matrix, ...] = tuple(
            self._reflection_matrix(i) for i in range(self.rank)
        )
        self.weyl: tuple[Matrix, ...] = self._generate_weyl()
        self._build_roots()
        self.lengths: tuple[int, ...] = tuple(
            self._inversions(m) for m in self.weyl
        )
        self.num_positive_roots: int = len(self.positive_roots)
        self.w0: Matrix = self.weyl[self.lengths.index(self.num_positive_roots)]
        self.coxeter_number: int = 1 + self.pairing(self.rho, self.highest_short_root)
        units = [
            tuple(1 if j == i else 0 for j in range(self.rank))
            for i in range(self.rank)
        ]
        gram = [[self.bilinear(a, b) for b in units] for a in units]
        scale = 1
        for row in gram:
            for x in row:
                scale = scale * x.denominator // math.gcd(scale, x.denominator)
        self._gram_scaled: Matrix = tuple(
            tuple(int(x * scale) for x in row) for row in gram
        )

    # -- construction ------------------------------------------------------

    def _reflection_matrix(self, i: int) -> Matrix:
        # s_i(v) = v - v_i * alpha_i, as a matrix: column i is e_i - alpha_i
        alpha = self.simple_roots[i]
        return tuple(
            tuple(
                (1 if k == j else 0) - (alpha[k] if j == i else 0)
                for j in range(self.rank)
            )
            for k in range(self.rank)
        )

    def _generate_weyl(self) -> tuple[Matrix, ...]:
        seen = {_identity(self.rank)}
        frontier = list(seen)
        while frontier:
            nxt = []
            for m in frontier:
                for s in self._simple_refl:
                    q = _mat_mul(s, m)
                    if q not in seen:
                        seen.add(q)
                        nxt.append(q)
            frontier = nxt
        return tuple(sorted(seen))

    def _build_roots(self) -> None:
        roots = {
            _mat_apply(w, alpha) for w in self.weyl for alpha in self.simple_roots
        }
        pos = []
        covec: dict[Weight, Weight] = {}
        half_len: dict[Weight, int] = {}
        for beta in roots:
            coords = self.root_coords(beta)
            if any(c.denominator != 1 for c in coords):
                raise NotARoot(f"non-integral root coordinates for {beta}")
            if all(c >= 0 for c in coords):
                pos.append(beta)
        for beta in pos:
            coords = [int(c) for c in self.root_coords(beta)]
            sq = sum(
                self.d[i] * coords[i] * beta[i] for i in range(self.rank)
            )  # (beta, beta) = sum d_i c_i beta_i with beta_i the fw coordinate
            if sq % 2:
                raise NotARoot(f"odd squared length for {beta}")
            d_beta = sq // 2
            cv = []
            for i in range(self.rank):
                num = coords[i] * self.d[i]
                if num % d_beta:
                    raise NotARoot(f"non-integral covector for {beta}")
                cv.append(num // d_beta)
            covec[beta] = tuple(cv)
            half_len[beta] = d_beta
        pos.sort(key=lambda b: (sum(int(c) for c in self.root_coords(b)), b))
        self.positive_roots: tuple[Weight, ...] = tuple(pos)
        self._covector: dict[Weight, Weight] = covec
        self._half_square: dict[Weight, int] = half_len
        for beta in pos:
            self._covector[wneg(beta)] = wneg(covec[beta])
            self._half_square[wneg(beta)] = half_len[beta]
        self.highest_root: Weight = max(
            pos, key=lambda b: sum(self.root_coords(b))
        )
        shorts = [b for b in pos if half_len[b] == 1]
        self.highest_short_root: Weight = max(
            shorts, key=lambda b: sum(self.root_coords(b))
        )

    # -- basic queries -----------------------------------------------------

    def check_weight(self, wt: Sequence[int]) -> Weight:
        wt = tuple(int(x) for x in wt)
        if len(wt) != self.rank:
            raise WrongSystem(
                f"rank-{len(wt)} weight {wt} in system {self.name}"
            )
        return wt

    def root_coords(self, wt: Weight) -> tuple[Fraction, ...]:
        """Coefficients of wt on the simple roots (exact Fractions)."""
        return tuple(
            sum(self.cartan_inv[i][j] * wt[j] for j in range(self.rank))
            for i in range(self.rank)
        )

    def in_root_lattice(self, wt: Weight) -> bool:
        return all(c.denominator == 1 for c in self.root_coords(wt))

    def bilinear(self, a: Weight, b: Weight) -> Fraction:
        """W-invariant inner product, normalised so short roots have length^2 = 2."""
        coords = self.root_coords(b)
        return sum(
            (Fraction(self.d[i]) * a[i] * coords[i] for i in range(self.rank)),
            Fraction(0),
        )

    def bilinear_scaled(self, a: Weight, b: Weight) -> int:
        """The invariant form times a fixed positive integer, as a plain
        integer; safe wherever only ratios of form values matter."""
        gram = self._gram_scaled
        return sum(
            a[i] * sum(gram[i][j] * b[j] for j in range(self.rank))
            for i in range(self.rank)
        )

    def covector(self, root: Weight) -> Weight:
        try:
            return self._covector[tuple(root)]
        except KeyError:
            raise NotARoot(f"{root} is not a root of {self.name}") from None

    def pairing(self, wt: Weight, root: Weight) -> int:
        """Integer pairing of wt with the coroot of root."""
        cv = self.covector(root)
        return sum(cv[i] * wt[i] for i in range(self.rank))

    def is_dominant(self, wt: Weight) -> bool:
        return all(x >= 0 for x in wt)

    def is_restricted(self, wt: Weight, p: int) -> bool:
        return all(0 <= x <= p - 1 for x in wt)

    def restricted_split(self, wt: Weight, p: int) -> tuple[Weight, Weight]:
        """Write a dominant weight as base + p * rest with base restricted."""
        if not self.is_dominant(wt):
            raise NotDominant(f"cannot split non-dominant weight {wt}")
        base = tuple(x % p for x in wt)
        rest = tuple((x - x % p) // p for x in wt)
        return base, rest

    # -- Weyl group actions ------------------------------------------------

    def apply(self, w: Matrix, wt: Weight) -> Weight:
        return _mat_apply(w, wt)

    def dot(self, w: Matrix, wt: Weight) -> Weight:
        """Dot action: shift by rho, act, shift back."""
        return wsub(_mat_apply(w, wadd(wt, self.rho)), self.rho)

    def reflect(self, wt: Weight, root: Weight) -> Weight:
        return wsub(wt, wscale(self.pairing(wt, root), root))

    def affine_reflect_dot(self, wt: Weight, root: Weight, n: int, p: int) -> Weight:
        """Dot-action reflection across the hyperplane pairing(. + rho) = n*p."""
        c = self.pairing(wadd(wt, self.rho), root) - n * p
        return wsub(wt, wscale(c, root))

    def det(self, w: Matrix) -> int:
        return -1 if self._inversions(w) % 2 else 1

    def _inversions(self, w: Matrix) -> int:
        n = 0
        for beta in self.positive_roots:
            img = _mat_apply(w, beta)
            if img not in self._covector:
                raise NotARoot(f"matrix does not permute roots: {w}")
            if not self._is_positive(img):
                n += 1
        return n

    def _is_positive(self, root: Weight) -> bool:
        return all(c >= 0 for c in self.root_coords(root))

    def orbit(self, wt: Weight) -> frozenset[Weight]:
        wt = self.check_weight(wt)
        return frozenset(_mat_apply(w, wt) for w in self.weyl)

    def dominant_rep(self, wt: Weight) -> Weight:
        """The dominant weight in the W-orbit of wt."""
        wt = self.check_weight(wt)
        cur = wt
        while True:
            for i in range(self.rank):
                if cur[i] < 0:
                    cur = wsub(cur, wscale(cur[i], self.simple_roots[i]))
                    break
            else:
                return cur

    def strict_dominantize(self, wt: Weight) -> tuple[Weight, int]:
        """Dominant representative together with the sign of the group
        element used; sign 0 when the weight lies on a reflecting wall."""
        cur = self.check_weight(wt)
        sign = 1
        while True:
            for i in range(self.rank):
                if cur[i] < 0:
                    cur = wsub(cur, wscale(cur[i], self.simple_roots[i]))
                    sign = -sign
                    break
            else:
                break
        if 0 in cur:
            return cur, 0
        return cur, sign

    # -- enumeration -------------------------------------------------------

    def dominant_weights_below(self, lam: Weight) -> list[Weight]:
        """All dominant mu with lam - mu a nonnegative integer combination
        of simple roots, sorted by descending height of mu."""
        lam = self.check_weight(lam)
        if not self.is_dominant(lam):
            raise NotDominant(f"{lam} is not dominant")
        bounds = self.root_coords(lam)
        out = []
        for cs in product(*(range(int(b) + 1) for b in bounds)):
            mu = lam
            for j, c in enumerate(cs):
                if c:
                    mu = wsub(mu, wscale(c, self.simple_roots[j]))
            if all(x >= 0 for x in mu):
                out.append((sum(cs), mu))
        out.sort(key=lambda t: (t[0], t[1]))
        return [mu for _, mu in out]

    def restricted_weights(self, p: int) -> Iterator[Weight]:
        """All weights with coordinates in [0, p-1], lexicographic order."""
        if p < 2:
            raise NotRestricted(f"prime must be at least 2, got {p}")
        yield from product(range(p), repeat=self.rank)

    def height(self, wt: Weight) -> Fraction:
        """Sum of the simple-root coefficients of wt."""
        return sum(self.root_coords(wt))


def _invert(m: Matrix) -> tuple[tuple[Fraction, ...], ...]:
    n = len(m)
    a = [[Fraction(m[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return tuple(tuple(row[n:]) for row in a)


@functools.lru_cache(maxsize=None)
def root_system(name: str) -> RootSystem:
    return RootSystem(name)

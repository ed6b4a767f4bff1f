"""Root systems of simple types up to rank 8 with Chevalley structure constants.

The positive roots are stored in a height-compatible order (height ascending,
ties broken by ascending lexicographic order on the coefficient vectors over
the simple roots).  Structure constants are computed with the usual
extraspecial-pair sign convention: for each non-simple positive root the
special pair with the smallest first member gets the positive sign, and all
other constants follow from the Jacobi identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

# (min rank, max rank) of the families we support
_RANK_RANGE = {"A": (1, 8), "B": (2, 8), "C": (2, 8), "D": (3, 8),
               "E": (6, 8), "F": (4, 4), "G": (2, 2)}


class RootSystemError(ValueError):
    """Invalid Cartan type or an internal consistency failure."""


@dataclass(frozen=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self):
        lo_hi = _RANK_RANGE.get(self.family)
        if lo_hi is None or not lo_hi[0] <= self.rank <= lo_hi[1]:
            raise RootSystemError(f"invalid Cartan type {self.family}{self.rank}")

    @classmethod
    def parse(cls, name: str) -> "CartanType":
        name = name.strip()
        if len(name) < 2 or not name[0].isalpha():
            raise RootSystemError(f"cannot parse Cartan type {name!r}")
        try:
            return cls(name[0].upper(), int(name[1:]))
        except ValueError as exc:
            raise RootSystemError(f"cannot parse Cartan type {name!r}") from exc

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    def cartan_matrix(self) -> list[list[int]]:
        """Cartan matrix A with A[i][j] = <alpha_j, alpha_i^vee> (0-based)."""
        n = self.rank
        a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

        def link(i, j, aij=-1, aji=-1):
            a[i][j] = aij
            a[j][i] = aji

        if self.family in ("A", "B", "C"):
            for i in range(n - 1):
                link(i, i + 1)
            if self.family == "B" and n >= 2:
                # last simple root short: its row carries the -2
                a[n - 1][n - 2] = -2
            if self.family == "C" and n >= 2:
                a[n - 2][n - 1] = -2
        elif self.family == "D":
            for i in range(n - 2):
                link(i, i + 1)
            link(n - 3, n - 1)
        elif self.family == "E":
            # Bourbaki numbering: chain 1-3-4-5-6(-7)(-8), node 2 on node 4
            edges = [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)]
            if n >= 7:
                edges.append((6, 7))
            if n == 8:
                edges.append((7, 8))
            for i, j in edges:
                link(i - 1, j - 1)
        elif self.family == "F":
            link(0, 1)
            link(1, 2, -1, -2)  # alpha_2 long, alpha_3 short
            link(2, 3)
        elif self.family == "G":
            link(0, 1, -3, -1)  # alpha_1 short, alpha_2 long
        return a

    def symmetrizers(self) -> list[int]:
        """d_i = (alpha_i, alpha_i)/2 making d_i A[i][j] symmetric."""
        n = self.rank
        if self.family == "B":
            return [2] * (n - 1) + [1]
        if self.family == "C":
            return [1] * (n - 1) + [2]
        if self.family == "F":
            return [2, 2, 1, 1]
        if self.family == "G":
            return [1, 3]
        return [1] * n

    def dimension(self) -> int:
        """Dimension of the ambient simple Lie algebra."""
        n = self.rank
        return {"A": n * (n + 2), "B": n * (2 * n + 1), "C": n * (2 * n + 1),
                "D": n * (2 * n - 1), "G": 14, "F": 52,
                "E": {6: 78, 7: 133, 8: 248}[n] if self.family == "E" else 0}[self.family]

    def num_positive_roots(self) -> int:
        return (self.dimension() - self.rank) // 2


@dataclass(frozen=True)
class Root:
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if any(c < 0 for c in self.coeffs) or not any(self.coeffs):
            raise RootSystemError(f"not a positive root: {self.coeffs}")

    @property
    def height(self) -> int:
        return sum(self.coeffs)


class RootSystem:
    """Positive roots of a simple type in height-compatible order.

    Indices are 1-based throughout, matching the coordinate labels of the
    nilradical basis e_1, ..., e_N.
    """

    def __init__(self, cartan_type: CartanType):
        self.cartan_type = cartan_type
        self.rank = cartan_type.rank
        self.cartan = cartan_type.cartan_matrix()
        self._d = cartan_type.symmetrizers()
        # symmetrizability check: d_i A[i][j] == d_j A[j][i]
        for i in range(self.rank):
            for j in range(self.rank):
                if self._d[i] * self.cartan[i][j] != self._d[j] * self.cartan[j][i]:
                    raise RootSystemError("Cartan matrix is not symmetrizable")
        coeff_vectors = self._close_under_addition()
        coeff_vectors.sort(key=lambda v: (sum(v), v))
        self.positive_roots = [Root(v) for v in coeff_vectors]
        self.N = len(self.positive_roots)
        if self.N != cartan_type.num_positive_roots():
            raise RootSystemError(
                f"{cartan_type}: built {self.N} positive roots, expected "
                f"{cartan_type.num_positive_roots()}")
        self._index = {r.coeffs: i + 1 for i, r in enumerate(self.positive_roots)}
        self.sum_table: dict[tuple[int, int], int] = {}
        for i in range(1, self.N + 1):
            for j in range(1, self.N + 1):
                if i == j:
                    continue
                s = self._vec_add(self.root(i).coeffs, self.root(j).coeffs)
                k = self._index.get(s)
                if k is not None:
                    self.sum_table[(i, j)] = k

    # -- construction helpers -------------------------------------------

    def _vec_add(self, u, v):
        return tuple(a + b for a, b in zip(u, v))

    def _close_under_addition(self) -> list[tuple[int, ...]]:
        n = self.rank
        simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
        known = set(simple)
        level = list(simple)
        while level:
            nxt = []
            for beta in level:
                for i, alpha in enumerate(simple):
                    if beta == alpha:
                        continue
                    # down-string length p through beta in direction alpha_i
                    p = 0
                    cur = tuple(b - a for b, a in zip(beta, alpha))
                    while cur in known:
                        p += 1
                        cur = tuple(b - a for b, a in zip(cur, alpha))
                    pairing = sum(self.cartan[i][j] * beta[j] for j in range(n))
                    if p - pairing >= 1:
                        up = self._vec_add(beta, alpha)
                        if up not in known:
                            known.add(up)
                            nxt.append(up)
            level = nxt
        return list(known)

    # -- queries ----------------------------------------------------------

    def root(self, i: int) -> Root:
        return self.positive_roots[i - 1]

    def height_of(self, i: int) -> int:
        return self.root(i).height

    def index_of(self, coeffs: tuple[int, ...]) -> int | None:
        return self._index.get(tuple(coeffs))

    def sum_index(self, i: int, j: int) -> int | None:
        return self.sum_table.get((i, j))

    def is_root_vector(self, coeffs: tuple[int, ...]) -> bool:
        """Whether coeffs is a positive or a negative root."""
        if all(c >= 0 for c in coeffs):
            return coeffs in self._index
        if all(c <= 0 for c in coeffs):
            return tuple(-c for c in coeffs) in self._index
        return False

    def norm2(self, i: int) -> int:
        """(beta_i, beta_i) in the scaled invariant form."""
        c = self.root(i).coeffs
        val = 0
        for a in range(self.rank):
            for b in range(self.rank):
                val += c[a] * c[b] * self._d[a] * self.cartan[a][b]
        return val

    def simple_norm2(self, i: int) -> int:
        return 2 * self._d[i - 1]

    def pairing_with_simple_coroot(self, i: int, j: int) -> int:
        """<beta_i, alpha_j^vee> for 1-based root index i and simple index j."""
        c = self.root(i).coeffs
        return sum(self.cartan[j - 1][k] * c[k] for k in range(self.rank))

    def coroot_coefficients(self, i: int) -> tuple[int, ...]:
        """beta_i^vee in the basis of simple coroots; entries are integers."""
        c = self.root(i).coeffs
        d_beta = Fraction(self.norm2(i), 2)
        out = []
        for k in range(self.rank):
            val = Fraction(c[k] * self._d[k]) / d_beta
            if val.denominator != 1:
                raise RootSystemError("non-integral coroot coefficient")
            out.append(int(val))
        return tuple(out)

    @property
    def highest_root(self) -> Root:
        return self.positive_roots[-1]

    def string_down_length(self, i: int, j: int) -> int:
        """max m >= 0 such that beta_j - m*beta_i is a (positive or negative) root."""
        bi, bj = self.root(i).coeffs, self.root(j).coeffs
        m = 0
        cur = tuple(b - a for b, a in zip(bj, bi))
        while self.is_root_vector(cur):
            m += 1
            cur = tuple(b - a for b, a in zip(cur, bi))
        return m


class StructureConstants:
    """Chevalley constants n(i,j) with [e_i, e_j] = n(i,j) e_k when beta_i+beta_j=beta_k."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.n: dict[tuple[int, int], int] = {}
        self._build()

    def _build(self):
        rs = self.rs
        by_target: dict[int, list[tuple[int, int]]] = {}
        for (i, j), k in rs.sum_table.items():
            if i < j:
                by_target.setdefault(k, []).append((i, j))
        for k in sorted(by_target):  # ascending height of the sum
            pairs = sorted(by_target[k])
            a, b = pairs[0]  # extraspecial: least first member
            val = rs.string_down_length(a, b) + 1
            self._set(a, b, val)
            gamma_n2 = rs.norm2(k)
            beta_n2 = rs.norm2(b)
            for xi, eta in pairs[1:]:
                acc = Fraction(0)
                d1 = tuple(p - q for p, q in zip(rs.root(xi).coeffs, rs.root(a).coeffs))
                i1 = rs.index_of(d1)
                if i1 is not None:
                    acc += (Fraction(rs.norm2(i1), rs.norm2(xi))
                            * self.n[(a, i1)] * self.n[(i1, eta)])
                d2 = tuple(p - q for p, q in zip(rs.root(eta).coeffs, rs.root(a).coeffs))
                i2 = rs.index_of(d2)
                if i2 is not None:
                    acc -= (Fraction(rs.norm2(i2), rs.norm2(eta))
                            * self.n[(a, i2)] * self.n[(i2, xi)])
                val = acc * Fraction(gamma_n2, beta_n2 * self.n[(a, b)])
                if val.denominator != 1 or val == 0:
                    raise RootSystemError(
                        f"structure constant recursion failed at pair ({xi},{eta})")
                expect = rs.string_down_length(xi, eta) + 1
                if abs(int(val)) != expect:
                    raise RootSystemError(
                        f"magnitude rule violated at ({xi},{eta}): "
                        f"got {int(val)}, expected +-{expect}")
                self._set(xi, eta, int(val))

    def _set(self, i, j, val):
        self.n[(i, j)] = val
        self.n[(j, i)] = -val

    def __call__(self, i: int, j: int) -> int:
        return self.n[(i, j)]

    def get(self, i: int, j: int) -> int | None:
        return self.n.get((i, j))

    def check_jacobi(self) -> None:
        """Verify the Jacobi identity on every triple of positive-root indices."""
        rs, n = self.rs, self.n

        def bracket(coef, i, j):
            # [coef*e_i, e_j] -> (coef', k) or None
            k = rs.sum_table.get((i, j))
            if k is None:
                return None
            return coef * n[(i, j)], k

        for i in range(1, rs.N + 1):
            for j in range(i + 1, rs.N + 1):
                for k in range(j + 1, rs.N + 1):
                    total: dict[int, int] = {}
                    for x, y, z in ((i, j, k), (j, k, i), (k, i, j)):
                        inner = bracket(1, x, y)
                        if inner is None:
                            continue
                        outer = bracket(inner[0], inner[1], z)
                        if outer is None:
                            continue
                        total[outer[1]] = total.get(outer[1], 0) + outer[0]
                    if any(total.values()):
                        raise RootSystemError(f"Jacobi fails on triple ({i},{j},{k})")


@dataclass(frozen=True)
class GoodPrimeData:
    bad_primes: frozenset[int]

    def is_good(self, p: int) -> bool:
        return p not in self.bad_primes


def _prime_factors(m: int) -> set[int]:
    out = set()
    d = 2
    while d * d <= m:
        while m % d == 0:
            out.add(d)
            m //= d
        d += 1
    if m > 1:
        out.add(m)
    return out


def build_root_system(ct: CartanType) -> RootSystem:
    return RootSystem(ct)


def structure_constants(rs: RootSystem) -> StructureConstants:
    return StructureConstants(rs)


def bad_primes(ct: CartanType) -> GoodPrimeData:
    """Primes dividing some coefficient of the highest root."""
    rs = cached_root_system(ct)
    primes: set[int] = set()
    for c in rs.highest_root.coeffs:
        if c > 1:
            primes |= _prime_factors(c)
    return GoodPrimeData(frozenset(primes))


@lru_cache(maxsize=None)
def _cached(family: str, rank: int) -> tuple[RootSystem, StructureConstants]:
    rs = build_root_system(CartanType(family, rank))
    return rs, structure_constants(rs)


def cached_root_system(ct: CartanType) -> RootSystem:
    return _cached(ct.family, ct.rank)[0]


def cached_constants(ct: CartanType) -> StructureConstants:
    return _cached(ct.family, ct.rank)[1]


def all_cartan_types(max_rank: int = 8):
    """Every valid Cartan type with rank <= max_rank, deterministically ordered."""
    out = []
    for fam in sorted(_RANK_RANGE):
        lo, hi = _RANK_RANGE[fam]
        for r in range(lo, min(hi, max_rank) + 1):
            out.append(CartanType(fam, r))
    return out

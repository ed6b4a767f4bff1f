"""Symbolic action of the positive root-subgroup generators on the nilradical
and on its dual.

For generator j the one-parameter action with parameter t is
sum_m t^m T_{j,m}, where T_{j,m} is the m-th divided power of the bracket with
the j-th basis vector (adjoint mode), or its transpose with alternating sign
(coadjoint mode).  All table entries are integers; this is asserted during
construction.  The module also fixes a processing order of the coordinates in
which the action is strictly triangular: height order for the nilradical and
reversed height order for the dual.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .poly import MultiPoly, Var
from .roots import (CartanType, RootSystem, StructureConstants, RootSystemError,
                    cached_root_system, cached_constants)

ADJOINT = "adjoint"
COADJOINT = "coadjoint"

# sparse matrix: {target index: {source index: int}}, 1-based coordinates
_Sparse = dict[int, dict[int, int]]


def _compose_with_ad(prev: _Sparse, ad: _Sparse, m: int) -> _Sparse:
    """prev o ad, divided by m; raises on a non-integral entry."""
    out: _Sparse = {}
    # (prev o ad)[k][i] = sum_l prev[k][l] * ad[l][i]
    for k, row in prev.items():
        for l, c1 in row.items():
            mid = ad.get(l)
            if not mid:
                continue
            dst = out.setdefault(k, {})
            for i, c2 in mid.items():
                dst[i] = dst.get(i, 0) + c1 * c2
    cleaned: _Sparse = {}
    for k, row in out.items():
        new_row = {}
        for i, c in row.items():
            if c == 0:
                continue
            q = Fraction(c, m)
            if q.denominator != 1:
                raise RootSystemError("non-integral divided power entry")
            new_row[i] = int(q)
        if new_row:
            cleaned[k] = new_row
    return cleaned


@dataclass
class ModuleWithFiltration:
    """Generator action tables for u or u* plus the triangular coordinate order."""

    rs: RootSystem
    constants: StructureConstants
    mode: str
    n: int
    # tables[j] = [T_{j,1}, T_{j,2}, ...] in coordinate space (T_{j,0} = id)
    tables: dict[int, list[_Sparse]]
    order: tuple[int, ...]  # order[s-1] = coordinate processed at step s
    position_tables: dict[int, list[_Sparse]] = field(default_factory=dict)

    def __post_init__(self):
        pos_of = {coord: s + 1 for s, coord in enumerate(self.order)}
        for j, mats in self.tables.items():
            pos_mats = []
            for mat in mats:
                pmat: _Sparse = {}
                for k, row in mat.items():
                    pk = pos_of[k]
                    prow = {}
                    for i, c in row.items():
                        pi = pos_of[i]
                        if pi >= pk:
                            raise RootSystemError(
                                f"triangularity violated: generator {j} maps "
                                f"position {pi} into position {pk}")
                        prow[pi] = c
                    pmat[pk] = prow
                pos_mats.append(pmat)
            self.position_tables[j] = pos_mats

    @property
    def cartan_type(self) -> CartanType:
        return self.rs.cartan_type

    def position_of(self, coord: int) -> int:
        return self.order.index(coord) + 1

    def coordinate_of(self, pos: int) -> int:
        return self.order[pos - 1]

    def generators_touching(self, max_pos: int) -> list[int]:
        """Generators with a nonzero entry in the leading max_pos positions."""
        out = []
        for j in range(1, self.n + 1):
            for pmat in self.position_tables[j]:
                if any(pk <= max_pos for pk in pmat):
                    out.append(j)
                    break
        return out


def _adjoint_tables(rs: RootSystem, sc: StructureConstants) -> dict[int, list[_Sparse]]:
    tables: dict[int, list[_Sparse]] = {}
    for j in range(1, rs.N + 1):
        ad: _Sparse = {}
        for i in range(1, rs.N + 1):
            k = rs.sum_index(j, i)
            if k is not None:
                ad.setdefault(k, {})[i] = sc(j, i)
        mats = []
        cur = ad
        m = 1
        while cur:
            mats.append(cur)
            m += 1
            cur = _compose_with_ad(cur, ad, m)
        tables[j] = mats
    return tables


def adjoint_module(ct_or_rs) -> ModuleWithFiltration:
    rs, sc = _resolve(ct_or_rs)
    tables = _adjoint_tables(rs, sc)
    return ModuleWithFiltration(rs=rs, constants=sc, mode=ADJOINT, n=rs.N,
                                tables=tables, order=tuple(range(1, rs.N + 1)))


def coadjoint_module(ct_or_rs) -> ModuleWithFiltration:
    rs, sc = _resolve(ct_or_rs)
    tables = {}
    for j, mats in _adjoint_tables(rs, sc).items():
        dual = []
        for m, mat in enumerate(mats, start=1):
            sign = -1 if m % 2 else 1
            t: _Sparse = {}
            for k, row in mat.items():
                for i, c in row.items():
                    t.setdefault(i, {})[k] = sign * c
            dual.append(t)
        tables[j] = dual
    return ModuleWithFiltration(rs=rs, constants=sc, mode=COADJOINT, n=rs.N,
                                tables=tables, order=tuple(range(rs.N, 0, -1)))


def _resolve(ct_or_rs):
    if isinstance(ct_or_rs, RootSystem):
        rs = ct_or_rs
        return rs, cached_constants(rs.cartan_type)
    if isinstance(ct_or_rs, CartanType):
        return cached_root_system(ct_or_rs), cached_constants(ct_or_rs)
    raise TypeError("expected CartanType or RootSystem")


def apply_generator(mod: ModuleWithFiltration, x: list[MultiPoly], j: int, t):
    """Apply the one-parameter generator j with parameter t to a symbolic vector.

    x is indexed by coordinates 1..N (list position i-1 holds coordinate i).
    t may be a Var or a MultiPoly.
    """
    if isinstance(t, Var):
        t = MultiPoly.variable(t)
    out = list(x)
    t_pow = t
    for mat in mod.tables[j]:
        for k, row in mat.items():
            acc = MultiPoly.zero()
            for i, c in row.items():
                if x[i - 1].is_zero():
                    continue
                acc = acc + x[i - 1].scale(c)
            if not acc.is_zero():
                out[k - 1] = out[k - 1] + t_pow * acc
        t_pow = t_pow * t
    return out


def apply_fq(mod: ModuleWithFiltration, x: list[int], j: int, s: int, q: int):
    """Concrete action over F_q with parameter s."""
    out = [v % q for v in x]
    s_pow = s % q
    for mat in mod.tables[j]:
        for k, row in mat.items():
            acc = 0
            for i, c in row.items():
                acc += c * x[i - 1]
            out[k - 1] = (out[k - 1] + s_pow * acc) % q
        s_pow = s_pow * s % q
    return out


def generator_matrix_mod(mod: ModuleWithFiltration, j: int, s: int, q: int):
    """Dense N x N matrix of the generator action over F_q (row-major lists)."""
    n = mod.n
    a = [[1 if r == c else 0 for c in range(n)] for r in range(n)]
    s_pow = s % q
    for mat in mod.tables[j]:
        for k, row in mat.items():
            for i, c in row.items():
                a[k - 1][i - 1] = (a[k - 1][i - 1] + s_pow * c) % q
        s_pow = s_pow * s % q
    return a


# -- full adjoint representation on g (for the conjugacy-class oracle) --------


@dataclass
class FullAlgebraTables:
    """Divided powers of ad e_j on the whole algebra, for all positive j.

    Basis layout: e_1..e_N, then the simple coroots h_1..h_rank, then
    f_1..f_N.  tables[j] = [T_{j,1}, T_{j,2}, ...] as dense integer matrices.
    """

    rs: RootSystem
    dim: int
    tables: dict[int, list[list[list[int]]]]


def full_algebra_tables(ct: CartanType) -> FullAlgebraTables:
    rs = cached_root_system(ct)
    sc = cached_constants(ct)
    n, rank = rs.N, rs.rank
    dim = 2 * n + rank

    def e_pos(i):
        return i - 1

    def h_pos(i):
        return n + i - 1

    def f_pos(i):
        return n + rank + i - 1

    tables: dict[int, list[list[list[int]]]] = {}
    for j in range(1, n + 1):
        ad = [[Fraction(0)] * dim for _ in range(dim)]
        # on e_i
        for i in range(1, n + 1):
            k = rs.sum_index(j, i)
            if k is not None:
                ad[e_pos(k)][e_pos(i)] += sc(j, i)
        # on h_i: [e_j, h_i] = -<beta_j, alpha_i^vee> e_j
        for i in range(1, rank + 1):
            ad[e_pos(j)][h_pos(i)] -= rs.pairing_with_simple_coroot(j, i)
        # on f_i
        for i in range(1, n + 1):
            if i == j:
                for k, coeff in enumerate(rs.coroot_coefficients(j), start=1):
                    if coeff:
                        ad[h_pos(k)][f_pos(j)] += coeff
                continue
            delta = tuple(p - q for p, q in
                          zip(rs.root(j).coeffs, rs.root(i).coeffs))
            d = rs.index_of(delta)
            if d is not None:
                val = -Fraction(rs.norm2(d), rs.norm2(j)) * sc(i, d)
                ad[e_pos(d)][f_pos(i)] += val
                continue
            dprime = rs.index_of(tuple(-c for c in delta))
            if dprime is not None:
                val = -Fraction(rs.norm2(dprime), rs.norm2(i)) * sc(j, dprime)
                ad[f_pos(dprime)][f_pos(i)] += val
        mats = []
        cur = ad
        m = 1
        while any(any(row) for row in cur):
            as_int = []
            for row in cur:
                int_row = []
                for c in row:
                    if Fraction(c).denominator != 1:
                        raise RootSystemError("non-integral entry in algebra table")
                    int_row.append(int(c))
                as_int.append(int_row)
            mats.append(as_int)
            m += 1
            nxt = [[Fraction(0)] * dim for _ in range(dim)]
            for r in range(dim):
                row = mats[-1][r]
                for l in range(dim):
                    c1 = row[l]
                    if not c1:
                        continue
                    for cpos in range(dim):
                        c2 = ad[l][cpos]
                        if c2:
                            nxt[r][cpos] += Fraction(c1 * c2, m)
            cur = nxt
            if m > 4 * rs.height_of(rs.N) + 8:
                raise RootSystemError("ad-nilpotency bound exceeded")
        tables[j] = mats
    return FullAlgebraTables(rs=rs, dim=dim, tables=tables)

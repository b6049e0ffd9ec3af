"""Representations of an A_n quiver with arbitrary orientation.

The quiver has vertices 1..n on a line; the orientation word fixes each edge:
letter ``R`` at position i means an arrow i -> i+1, letter ``L`` means
i+1 -> i.  Modules are representations (equivalently, right modules over the
path algebra), and every indecomposable is a thin interval module, so the
interval [a, b] doubles as a name for the indecomposable supported on it.

Hom spaces are computed by solving the commuting-square equations exactly;
Ext^1 comes from the two-term projective presentation 0 -> K -> P0 -> M -> 0,
as the cokernel of Hom(P0, N) -> Hom(K, N).  The Auslander-Reiten translate
is computed on dimension vectors through the Coxeter matrix Phi = -C^T C^-1.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .exact import (
    Matrix,
    ZERO,
    ONE,
    kernel_basis,
    rank_of,
    reduce_mod,
    rref,
    row_space_basis,
    solve,
)


class BoundaryError(Exception):
    """tau of a projective (or tau^{-1} of an injective) at module level."""


class Orientation:
    """An A_n line quiver: n vertices, orientation word over {R, L}."""

    __slots__ = ("n", "word", "arrows")

    def __init__(self, n: int, word: str = ""):
        if n < 1:
            raise ValueError("n must be at least 1")
        if word == "" and n > 1:
            word = "R" * (n - 1)
        if len(word) != n - 1 or any(c not in "RL" for c in word):
            raise ValueError(f"orientation word must have length n-1 over {{R, L}}, got {word!r}")
        self.n = n
        self.word = word
        arrows = []
        for i, c in enumerate(word, start=1):
            if c == "R":
                arrows.append((i, i, i + 1))
            else:
                arrows.append((i, i + 1, i))
        self.arrows = tuple(arrows)  # (position, source, target)

    def __eq__(self, other):
        return isinstance(other, Orientation) and self.n == other.n and self.word == other.word

    def __hash__(self):
        return hash((self.n, self.word))

    def __repr__(self):
        return f"Orientation({self.n}, {self.word!r})"

    def reversed(self) -> "Orientation":
        flipped = "".join("R" if c == "L" else "L" for c in reversed(self.word))
        return Orientation(self.n, flipped)


def linear(n: int) -> Orientation:
    return Orientation(n, "R" * (n - 1))


class Interval(NamedTuple):
    """The thin indecomposable supported on vertices a..b."""

    a: int
    b: int

    def check(self, n: int):
        if not 1 <= self.a <= self.b <= n:
            raise ValueError(f"invalid interval [{self.a},{self.b}] for n={n}")

    def __str__(self):
        return f"[{self.a},{self.b}]"

    def contains(self, v: int) -> bool:
        return self.a <= v <= self.b

    @property
    def length(self) -> int:
        return self.b - self.a + 1


def all_intervals(n: int):
    return [Interval(a, b) for a in range(1, n + 1) for b in range(a, n + 1)]


class Representation:
    """Vector spaces at the vertices, one exact matrix per arrow."""

    __slots__ = ("orient", "dims", "maps")

    def __init__(self, orient: Orientation, dims, maps):
        dims = tuple(dims)
        if len(dims) != orient.n or any(d < 0 for d in dims):
            raise ValueError("bad dimension vector")
        maps = dict(maps)
        for pos, s, t in orient.arrows:
            m = maps.get(pos)
            if m is None:
                m = Matrix.zero(dims[t - 1], dims[s - 1])
                maps[pos] = m
            if (m.rows, m.cols) != (dims[t - 1], dims[s - 1]):
                raise ValueError(f"matrix shape mismatch at arrow {pos}")
        self.orient = orient
        self.dims = dims
        self.maps = maps

    def dim(self, v: int) -> int:
        return self.dims[v - 1]

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def __repr__(self):
        return f"Representation(dims={self.dims})"


def interval_module(orient: Orientation, itv: Interval) -> Representation:
    itv.check(orient.n)
    dims = [1 if itv.contains(v) else 0 for v in range(1, orient.n + 1)]
    maps = {}
    for pos, s, t in orient.arrows:
        if itv.contains(s) and itv.contains(t):
            maps[pos] = Matrix.identity(1)
    return Representation(orient, dims, maps)


def direct_sum(orient: Orientation, reps) -> tuple:
    """Block-diagonal direct sum; returns (sum, offsets per summand)."""
    reps = list(reps)
    n = orient.n
    dims = [sum(r.dim(v) for r in reps) for v in range(1, n + 1)]
    offsets = []
    acc = [0] * n
    for r in reps:
        offsets.append(tuple(acc))
        acc = [acc[v] + r.dims[v] for v in range(n)]
    maps = {}
    for pos, s, t in orient.arrows:
        rows, cols = dims[t - 1], dims[s - 1]
        grid = [[ZERO] * cols for _ in range(rows)]
        for r, off in zip(reps, offsets):
            block = r.maps[pos]
            for i in range(block.rows):
                for j in range(block.cols):
                    grid[off[t - 1] + i][off[s - 1] + j] = block.entries[i][j]
        maps[pos] = Matrix(rows, cols, grid)
    return Representation(orient, dims, maps), offsets


class ModuleMap:
    """A morphism of representations: one matrix per vertex.

    The commuting-square condition at every arrow is verified on construction.
    """

    __slots__ = ("source", "target", "blocks")

    def __init__(self, source: Representation, target: Representation, blocks, check: bool = True):
        blocks = tuple(blocks)
        if len(blocks) != source.orient.n:
            raise ValueError("one block per vertex required")
        for v in range(1, source.orient.n + 1):
            m = blocks[v - 1]
            if (m.rows, m.cols) != (target.dim(v), source.dim(v)):
                raise ValueError(f"block shape mismatch at vertex {v}")
        if check:
            for pos, s, t in source.orient.arrows:
                lhs = blocks[t - 1] * source.maps[pos]
                rhs = target.maps[pos] * blocks[s - 1]
                if lhs != rhs:
                    raise ValueError(f"commuting-square condition fails at arrow {pos}")
        self.source = source
        self.target = target
        self.blocks = blocks

    def block(self, v: int) -> Matrix:
        return self.blocks[v - 1]

    def compose(self, first: "ModuleMap") -> "ModuleMap":
        """self o first (apply ``first``, then ``self``)."""
        if first.target is not self.source and first.target.dims != self.source.dims:
            raise ValueError("endpoints do not match")
        blocks = [self.blocks[i] * first.blocks[i] for i in range(len(self.blocks))]
        return ModuleMap(first.source, self.target, blocks, check=False)

    def flatten(self) -> tuple:
        out = []
        for m in self.blocks:
            for row in m.entries:
                out.extend(row)
        return tuple(out)

    def is_zero(self) -> bool:
        return all(m.is_zero() for m in self.blocks)

    def scale(self, c) -> "ModuleMap":
        return ModuleMap(self.source, self.target, [m.scale(c) for m in self.blocks], check=False)


def _unflatten(source: Representation, target: Representation, vec) -> ModuleMap:
    blocks = []
    pos = 0
    for v in range(1, source.orient.n + 1):
        rows, cols = target.dim(v), source.dim(v)
        grid = [[vec[pos + i * cols + j] for j in range(cols)] for i in range(rows)]
        pos += rows * cols
        blocks.append(Matrix(rows, cols, grid))
    return ModuleMap(source, target, blocks, check=False)


def hom_basis(M: Representation, N: Representation):
    """Basis of Hom(M, N): kernel of the assembled commuting-square system."""
    orient = M.orient
    n = orient.n
    # unknowns: entries of the per-vertex blocks, vertex-major then row-major
    var_offset = []
    nvars = 0
    for v in range(1, n + 1):
        var_offset.append(nvars)
        nvars += N.dim(v) * M.dim(v)
    rows = []
    for pos, s, t in orient.arrows:
        A = M.maps[pos]  # M_s -> M_t
        B = N.maps[pos]
        # condition: f_t * A - B * f_s = 0, one row per (i, j)
        for i in range(N.dim(t)):
            for j in range(M.dim(s)):
                row = [ZERO] * nvars
                base_t = var_offset[t - 1]
                cols_t = M.dim(t)
                for k in range(M.dim(t)):
                    if A.entries[k][j]:
                        row[base_t + i * cols_t + k] += A.entries[k][j]
                base_s = var_offset[s - 1]
                cols_s = M.dim(s)
                for k in range(N.dim(s)):
                    if B.entries[i][k]:
                        row[base_s + k * cols_s + j] -= B.entries[i][k]
                rows.append(row)
    basis = kernel_basis(rows, nvars) if nvars else []
    return [_unflatten(M, N, vec) for vec in basis]


@lru_cache(maxsize=None)
def _hom_basis_itv(orient: Orientation, X: Interval, Y: Interval):
    return tuple(hom_basis(interval_module(orient, X), interval_module(orient, Y)))


def hom_basis_itv(orient: Orientation, X: Interval, Y: Interval):
    return list(_hom_basis_itv(orient, X, Y))


def hom_dim_itv(orient: Orientation, X: Interval, Y: Interval) -> int:
    return len(_hom_basis_itv(orient, X, Y))


# ---------------------------------------------------------------------------
# projectives, injectives, tau


def _reachable(orient: Orientation, start: int, forward: bool) -> Interval:
    seen = {start}
    changed = True
    while changed:
        changed = False
        for _, s, t in orient.arrows:
            if forward and s in seen and t not in seen:
                seen.add(t)
                changed = True
            if not forward and t in seen and s not in seen:
                seen.add(s)
                changed = True
    lo, hi = min(seen), max(seen)
    assert seen == set(range(lo, hi + 1)), "reachable set on a line must be an interval"
    return Interval(lo, hi)


@lru_cache(maxsize=None)
def indecomposable_projective(orient: Orientation, i: int) -> Interval:
    """Vertices reachable from i along arrows."""
    if not 1 <= i <= orient.n:
        raise ValueError(f"vertex {i} out of range")
    return _reachable(orient, i, forward=True)


@lru_cache(maxsize=None)
def indecomposable_injective(orient: Orientation, i: int) -> Interval:
    """Vertices from which i is reachable."""
    if not 1 <= i <= orient.n:
        raise ValueError(f"vertex {i} out of range")
    return _reachable(orient, i, forward=False)


def projective_vertex(orient: Orientation, itv: Interval):
    """The i with P_i = itv, or None."""
    for i in range(1, orient.n + 1):
        if indecomposable_projective(orient, i) == itv:
            return i
    return None


def injective_vertex(orient: Orientation, itv: Interval):
    for i in range(1, orient.n + 1):
        if indecomposable_injective(orient, i) == itv:
            return i
    return None


class CoxeterData(NamedTuple):
    cartan: Matrix      # columns are dimension vectors of the projectives
    phi: Matrix         # -C^T C^{-1}
    phi_inv: Matrix


@lru_cache(maxsize=None)
def coxeter_data(orient: Orientation) -> CoxeterData:
    n = orient.n
    cols = [indecomposable_projective(orient, i) for i in range(1, n + 1)]
    C = Matrix(n, n, [[ONE if cols[j].contains(v) else ZERO for j in range(n)] for v in range(1, n + 1)])
    phi = C.transpose().scale(Fraction(-1)) * C.inverse()
    return CoxeterData(C, phi, phi.inverse())


def _interval_from_dimension_vector(vec) -> Interval:
    support = [v + 1 for v, d in enumerate(vec) if d != 0]
    if not support or any(d not in (0, 1) for d in vec):
        raise ValueError(f"not an interval indicator: {vec}")
    lo, hi = min(support), max(support)
    if len(support) != hi - lo + 1:
        raise ValueError(f"not an interval indicator: {vec}")
    return Interval(lo, hi)


def tau_module(orient: Orientation, M: Interval, inverse: bool = False) -> Interval:
    """AR translate of an interval via the Coxeter transformation."""
    M.check(orient.n)
    if not inverse and projective_vertex(orient, M) is not None:
        raise BoundaryError(f"tau of projective {M}")
    if inverse and injective_vertex(orient, M) is not None:
        raise BoundaryError(f"tau^-1 of injective {M}")
    data = coxeter_data(orient)
    mat = data.phi_inv if inverse else data.phi
    vec = mat.apply([ONE if M.contains(v) else ZERO for v in range(1, orient.n + 1)])
    return _interval_from_dimension_vector(vec)


# ---------------------------------------------------------------------------
# interval decomposition


def _block_offsets(rep: Representation, lo: int, hi: int):
    offs = {}
    acc = 0
    for v in range(lo, hi + 1):
        offs[v] = acc
        acc += rep.dim(v)
    return offs, acc


def _restricted_rank(rep: Representation, lo: int, hi: int) -> int:
    """Rank of the canonical map lim -> colim over the segment [lo, hi]."""
    offs, total = _block_offsets(rep, lo, hi)
    if total == 0:
        return 0
    inner = [(pos, s, t) for pos, s, t in rep.orient.arrows if lo <= s <= hi and lo <= t <= hi]
    # lim: compatible tuples (x_v): x_t = A x_s for each inner arrow
    rows = []
    for pos, s, t in inner:
        A = rep.maps[pos]
        for i in range(rep.dim(t)):
            row = [ZERO] * total
            row[offs[t] + i] = -ONE
            for j in range(rep.dim(s)):
                row[offs[s] + j] += A.entries[i][j]
            rows.append(row)
    lim = kernel_basis(rows, total) if rows else [tuple(ONE if k == c else ZERO for k in range(total)) for c in range(total)]
    # colim: quotient of the total space by (x at s) - (A x at t)
    rel = []
    for pos, s, t in inner:
        A = rep.maps[pos]
        for j in range(rep.dim(s)):
            vec = [ZERO] * total
            vec[offs[s] + j] = ONE
            for i in range(rep.dim(t)):
                vec[offs[t] + i] -= A.entries[i][j]
            rel.append(tuple(vec))
    if not lim:
        return 0
    dim_lim = len(lim)
    dim_rel = rank_of(rel)
    dim_sum = rank_of(list(lim) + rel)
    meet = dim_lim + dim_rel - dim_sum
    return dim_lim - meet


def decompose(rep: Representation):
    """Multiset of intervals with direct sum isomorphic to ``rep``.

    Uses the rank function r(a,b) of the segment maps lim -> colim and
    inclusion-exclusion over interval endpoints.
    """
    n = rep.orient.n
    ranks = {}
    for a in range(1, n + 1):
        for b in range(a, n + 1):
            ranks[(a, b)] = _restricted_rank(rep, a, b)

    def r(a, b):
        if a < 1 or b > n:
            return 0
        return ranks[(a, b)]

    out = []
    covered = 0
    for a in range(1, n + 1):
        for b in range(a, n + 1):
            mult = r(a, b) - r(a - 1, b) - r(a, b + 1) + r(a - 1, b + 1)
            assert mult >= 0, "negative multiplicity in interval decomposition"
            out.extend([Interval(a, b)] * mult)
            covered += mult * (b - a + 1)
    assert covered == rep.total_dim, "interval decomposition does not exhaust the representation"
    return sorted(out)


# ---------------------------------------------------------------------------
# projective presentations and Ext^1


class ProjPresentation(NamedTuple):
    module: Interval
    p0_summands: tuple          # vertices i with P0 = + P_i
    p0: Representation
    cover: ModuleMap            # P0 ->> M
    kernel: Representation      # K, concrete
    inclusion: ModuleMap        # K -> P0
    p1_summands: tuple          # decomposition of K into projective intervals


@lru_cache(maxsize=None)
def proj_presentation(orient: Orientation, M: Interval) -> ProjPresentation:
    M.check(orient.n)
    inner_targets = {t for _, s, t in orient.arrows if M.contains(s) and M.contains(t)}
    tops = tuple(v for v in range(M.a, M.b + 1) if v not in inner_targets)
    mod = interval_module(orient, M)
    parts = [interval_module(orient, indecomposable_projective(orient, v)) for v in tops]
    p0, offsets = direct_sum(orient, parts)
    blocks = []
    for v in range(1, orient.n + 1):
        grid = [[ZERO] * p0.dim(v) for _ in range(mod.dim(v))]
        blocks.append(grid)
    for part, off, v0 in zip(parts, offsets, tops):
        gens = hom_basis(part, mod)
        assert len(gens) == 1, "projective cover component must be one-dimensional"
        g = gens[0]
        # normalize so the component is +1 at the top vertex
        c = g.block(v0).entries[0][0]
        assert c != 0
        g = g.scale(ONE / c)
        for v in range(1, orient.n + 1):
            blk = g.block(v)
            for i in range(blk.rows):
                for j in range(blk.cols):
                    blocks[v - 1][i][off[v - 1] + j] = blk.entries[i][j]
    cover = ModuleMap(p0, mod, [Matrix(mod.dim(v), p0.dim(v), blocks[v - 1]) for v in range(1, orient.n + 1)])
    # vertexwise kernels; they form a subrepresentation since cover commutes
    kdims = []
    kbases = []
    for v in range(1, orient.n + 1):
        vecs = kernel_basis(cover.block(v).entries, p0.dim(v))
        kbases.append(vecs)
        kdims.append(len(vecs))
        assert len(vecs) == p0.dim(v) - mod.dim(v), "cover is not surjective"
    kmaps = {}
    for pos, s, t in orient.arrows:
        B_s = kbases[s - 1]
        B_t = kbases[t - 1]
        A = p0.maps[pos]
        cols = []
        for vec in B_s:
            img = A.apply(vec)
            if B_t:
                rows = [[B_t[k][i] for k in range(len(B_t))] for i in range(p0.dim(t))]
                x = solve(rows, list(img))
                assert x is not None, "kernel is not arrow-stable"
                cols.append(x)
            else:
                assert all(x == 0 for x in img)
                cols.append(tuple())
        kmaps[pos] = Matrix(kdims[t - 1], kdims[s - 1], [[cols[j][i] for j in range(kdims[s - 1])] for i in range(kdims[t - 1])])
    kernel = Representation(orient, kdims, kmaps)
    incl_blocks = [
        Matrix(p0.dim(v), kdims[v - 1], [[kbases[v - 1][j][i] for j in range(kdims[v - 1])] for i in range(p0.dim(v))])
        for v in range(1, orient.n + 1)
    ]
    inclusion = ModuleMap(kernel, p0, incl_blocks)
    p1 = tuple(decompose(kernel))
    for itv in p1:
        assert projective_vertex(orient, itv) is not None, "syzygy of a module over a hereditary algebra must be projective"
    return ProjPresentation(M, tops, p0, cover, kernel, inclusion, p1)


class Ext1Class(NamedTuple):
    """An element of Ext^1(M, N), carried as a lift K(M) -> N."""

    M: Interval
    N: Interval
    lift: ModuleMap
    coords: tuple

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.coords)

    def scale(self, c) -> "Ext1Class":
        from .exact import _frac
        c = _frac(c)
        return Ext1Class(self.M, self.N, self.lift.scale(c), tuple(c * x for x in self.coords))


class _Ext1Structure(NamedTuple):
    pres: ProjPresentation
    hom_kn: tuple               # basis of Hom(K, N)
    image_rref: tuple
    image_pivots: tuple
    quotient_rref: tuple        # canonical basis of the quotient, as flattened vectors
    quotient_pivots: tuple


@lru_cache(maxsize=None)
def _ext1_structure(orient: Orientation, M: Interval, N: Interval) -> _Ext1Structure:
    pres = proj_presentation(orient, M)
    nmod = interval_module(orient, N)
    hom_kn = tuple(hom_basis(pres.kernel, nmod))
    image = [f.compose(pres.inclusion).flatten() for f in hom_basis(pres.p0, nmod)]
    img_rref, img_piv = rref(image) if image else ([], [])
    img_rref = tuple(tuple(r) for r in img_rref[: len(img_piv)])
    img_piv = tuple(img_piv)
    reduced = [reduce_mod(h.flatten(), img_rref, img_piv) for h in hom_kn]
    q_rref, q_piv = rref([r for r in reduced if any(x != 0 for x in r)]) if reduced else ([], [])
    q_rref = tuple(tuple(r) for r in q_rref[: len(q_piv)])
    q_piv = tuple(q_piv)
    return _Ext1Structure(pres, hom_kn, img_rref, img_piv, q_rref, q_piv)


def ext1_coords(orient: Orientation, M: Interval, N: Interval, lift: ModuleMap) -> tuple:
    st = _ext1_structure(orient, M, N)
    red = reduce_mod(lift.flatten(), st.image_rref, st.image_pivots)
    coords = tuple(red[p] for p in st.quotient_pivots)
    # sanity: red must lie in the span of the canonical quotient basis
    leftover = reduce_mod(red, st.quotient_rref, st.quotient_pivots)
    assert all(x == 0 for x in leftover), "lift does not lie in Hom(K, N)"
    return coords


def ext1_class(orient: Orientation, M: Interval, N: Interval, lift: ModuleMap) -> Ext1Class:
    return Ext1Class(M, N, lift, ext1_coords(orient, M, N, lift))


@lru_cache(maxsize=None)
def _ext1_basis(orient: Orientation, M: Interval, N: Interval):
    st = _ext1_structure(orient, M, N)
    nmod = interval_module(orient, N)
    out = []
    for vec in st.quotient_rref:
        lift = _unflatten(st.pres.kernel, nmod, vec)
        out.append(Ext1Class(M, N, lift, ext1_coords(orient, M, N, lift)))
    return tuple(out)


def ext1_basis(orient: Orientation, M: Interval, N: Interval):
    return list(_ext1_basis(orient, M, N))


def ext1_dim(orient: Orientation, M: Interval, N: Interval) -> int:
    return len(_ext1_basis(orient, M, N))


# ---------------------------------------------------------------------------
# graded composition of Hom and Ext^1 elements


def _lift_over_presentations(orient: Orientation, f: ModuleMap, M: Interval, N: Interval) -> ModuleMap:
    """Chain lift K(M) -> K(N) of a map f: M -> N over the two presentations."""
    pm = proj_presentation(orient, M)
    pn = proj_presentation(orient, N)
    # unknown module map f0: P0(M) -> P0(N) with cover_N o f0 = f o cover_M
    n = orient.n
    var_offset = []
    nvars = 0
    for v in range(1, n + 1):
        var_offset.append(nvars)
        nvars += pn.p0.dim(v) * pm.p0.dim(v)
    rows = []
    rhs = []
    # module-map conditions (homogeneous)
    for pos, s, t in orient.arrows:
        A = pm.p0.maps[pos]
        B = pn.p0.maps[pos]
        for i in range(pn.p0.dim(t)):
            for j in range(pm.p0.dim(s)):
                row = [ZERO] * nvars
                base_t = var_offset[t - 1]
                cols_t = pm.p0.dim(t)
                for k in range(pm.p0.dim(t)):
                    if A.entries[k][j]:
                        row[base_t + i * cols_t + k] += A.entries[k][j]
                base_s = var_offset[s - 1]
                cols_s = pm.p0.dim(s)
                for k in range(pn.p0.dim(s)):
                    if B.entries[i][k]:
                        row[base_s + k * cols_s + j] -= B.entries[i][k]
                rows.append(row)
                rhs.append(ZERO)
    # cover condition (inhomogeneous)
    for v in range(1, n + 1):
        target = (f.block(v) * pm.cover.block(v)).entries
        cv = pn.cover.block(v)
        for i in range(cv.rows):
            for j in range(pm.p0.dim(v)):
                row = [ZERO] * nvars
                base = var_offset[v - 1]
                cols = pm.p0.dim(v)
                for k in range(pn.p0.dim(v)):
                    if cv.entries[i][k]:
                        row[base + k * cols + j] += cv.entries[i][k]
                rows.append(row)
                rhs.append(target[i][j])
    sol = solve(rows, rhs) if nvars else tuple()
    assert sol is not None, "projective lift must exist"
    f0 = _unflatten(pm.p0, pn.p0, sol)
    # restrict to the kernels: solve incl_N x = f0 (incl_M v) vertexwise
    blocks = []
    for v in range(1, n + 1):
        m_in = pm.inclusion.block(v)
        n_in = pn.inclusion.block(v)
        img = f0.block(v) * m_in
        cols = []
        for j in range(img.cols):
            col = [img.entries[i][j] for i in range(img.rows)]
            if n_in.cols:
                x = solve([list(r) for r in n_in.entries], col)
                assert x is not None, "restriction misses the kernel"
                cols.append(x)
            else:
                assert all(c == 0 for c in col)
                cols.append(tuple())
        blocks.append(Matrix(n_in.cols, img.cols, [[cols[j][i] for j in range(img.cols)] for i in range(n_in.cols)]))
    return ModuleMap(pm.kernel, pn.kernel, blocks, check=False)


def compose_hom_hom(g: ModuleMap, f: ModuleMap) -> ModuleMap:
    return g.compose(f)


def compose_ext_hom(orient: Orientation, g: Ext1Class, f: ModuleMap, f_source: Interval) -> Ext1Class:
    """(shift-1 g: N' -> N'') after (shift-0 f: M -> N'): pull back along f."""
    fk = _lift_over_presentations(orient, f, f_source, g.M)
    lift = g.lift.compose(fk)
    return ext1_class(orient, f_source, g.N, lift)


def compose_hom_ext(orient: Orientation, g: ModuleMap, f: Ext1Class) -> Ext1Class:
    """(shift-0 g: N' -> N'') after (shift-1 f: M -> N'): push forward along g."""
    lift = g.compose(f.lift)
    return ext1_class(orient, f.M, _interval_of(g.target), lift)


def _interval_of(rep: Representation) -> Interval:
    support = [v for v in range(1, rep.orient.n + 1) if rep.dim(v) == 1]
    assert support and all(d in (0, 1) for d in rep.dims)
    return Interval(min(support), max(support))

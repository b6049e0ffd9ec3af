"""The bounded derived category of a type-A_n path algebra, object level.

Indecomposables are shifted interval modules M[r].  Morphisms live only in
degree gaps 0 (module homs) and 1 (Ext^1 classes); the AR translate wraps
projectives to shifted injectives, tau P_i = I_i[-1], which makes tau and
the auto-equivalences F_m = tau^{-1}[m] total.  On top of the object
calculus: tilting verification, endomorphism algebras, the Ext profile,
sections Sigma(T), and the m-rolling procedure.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from .algebras import StructureAlgebra, global_dimension, EXCEEDS_BOUND
from .exact import ONE, ZERO
from .reps import (
    BoundaryError,
    Ext1Class,
    Interval,
    ModuleMap,
    Orientation,
    compose_ext_hom,
    compose_hom_ext,
    ext1_basis,
    ext1_dim,
    hom_basis_itv,
    hom_dim_itv,
    indecomposable_injective,
    indecomposable_projective,
    injective_vertex,
    projective_vertex,
    tau_module,
)


class PreconditionError(Exception):
    """A documented precondition of an operation is violated (exit code 3)."""


class InternalCheckError(Exception):
    """A proposition the implementation relies on failed at runtime: a bug."""


class CapExceededError(Exception):
    """Rolling did not reach the fundamental domain within the step cap."""

    def __init__(self, message, trajectory):
        super().__init__(message)
        self.trajectory = trajectory


class DerivedObject(NamedTuple):
    """An indecomposable of D^b: the interval module placed in one degree."""

    degree: int
    interval: Interval

    def __str__(self):
        return f"{self.interval}[{self.degree}]"


class DerivedSum:
    """A formal finite direct sum of indecomposables (e.g. a tilting complex).

    Summands are kept in the canonical order (degree, a, b).
    """

    def __init__(self, orient: Orientation, summands):
        self.orient = orient
        checked = []
        for s in summands:
            s.interval.check(orient.n)
            checked.append(DerivedObject(int(s.degree), Interval(*s.interval)))
        self.summands = tuple(sorted(checked, key=lambda x: (x.degree, x.interval.a, x.interval.b)))

    @property
    def n(self) -> int:
        return self.orient.n

    def __len__(self):
        return len(self.summands)

    def __iter__(self):
        return iter(self.summands)

    def __eq__(self, other):
        return isinstance(other, DerivedSum) and self.orient == other.orient and self.summands == other.summands

    def __hash__(self):
        return hash((self.orient, self.summands))

    def __repr__(self):
        return "DerivedSum(%s)" % " + ".join(str(s) for s in self.summands)

    def degree_span(self) -> int:
        degs = [s.degree for s in self.summands]
        return max(degs) - min(degs) if degs else 0


class GradedMorphism(NamedTuple):
    """A morphism X -> Y in D^b; shift = degree gap, 0 (hom) or 1 (ext)."""

    source: DerivedObject
    target: DerivedObject
    payload: object  # ModuleMap for shift 0, Ext1Class for shift 1

    @property
    def shift(self) -> int:
        return self.target.degree - self.source.degree

    def is_zero(self) -> bool:
        if isinstance(self.payload, Ext1Class):
            return self.payload.is_zero()
        return self.payload.is_zero()


def d_hom_basis(orient: Orientation, X: DerivedObject, Y: DerivedObject):
    gap = Y.degree - X.degree
    if gap == 0:
        return [GradedMorphism(X, Y, f) for f in hom_basis_itv(orient, X.interval, Y.interval)]
    if gap == 1:
        return [GradedMorphism(X, Y, e) for e in ext1_basis(orient, X.interval, Y.interval)]
    return []


def d_hom_dim(orient: Orientation, X: DerivedObject, Y: DerivedObject) -> int:
    gap = Y.degree - X.degree
    if gap == 0:
        return hom_dim_itv(orient, X.interval, Y.interval)
    if gap == 1:
        return ext1_dim(orient, X.interval, Y.interval)
    return 0


def d_compose(orient: Orientation, g: GradedMorphism, f: GradedMorphism):
    """g o f, or None when the composite vanishes for degree reasons.

    Total shift >= 2 is zero (hereditary); shift 0 o 0 is the vertexwise
    product; ext o hom pulls back along the hom, hom o ext pushes forward.
    """
    if f.target != g.source:
        raise ValueError("endpoints do not match")
    total = f.shift + g.shift
    if total >= 2:
        return None
    if f.shift == 0 and g.shift == 0:
        payload = g.payload.compose(f.payload)
        return GradedMorphism(f.source, g.target, payload)
    if f.shift == 0 and g.shift == 1:
        cls = compose_ext_hom(orient, g.payload, f.payload, f.source.interval)
        return GradedMorphism(f.source, g.target, cls)
    if f.shift == 1 and g.shift == 0:
        cls = compose_hom_ext(orient, g.payload, f.payload)
        return GradedMorphism(f.source, g.target, cls)
    raise AssertionError("unreachable shift combination")


def morphism_scalar(basis: GradedMorphism, morph) -> object:
    """Write ``morph`` as scalar * basis inside a one-dimensional Hom space."""
    if isinstance(basis.payload, Ext1Class):
        ref = basis.payload.coords
        got = morph.payload.coords if isinstance(morph, GradedMorphism) else morph.coords
    else:
        ref = basis.payload.flatten()
        got = morph.payload.flatten() if isinstance(morph, GradedMorphism) else morph.flatten()
    lead = next(i for i, x in enumerate(ref) if x != 0)
    c = got[lead] / ref[lead]
    assert all(a == c * b for a, b in zip(got, ref)), "morphism is not proportional to the basis"
    return c


# ---------------------------------------------------------------------------
# translations


def shift(X: DerivedObject, k: int) -> DerivedObject:
    return DerivedObject(X.degree + k, X.interval)


def tau_derived(orient: Orientation, X: DerivedObject) -> DerivedObject:
    i = projective_vertex(orient, X.interval)
    if i is not None:
        return DerivedObject(X.degree - 1, indecomposable_injective(orient, i))
    return DerivedObject(X.degree, tau_module(orient, X.interval))


def tau_inv_derived(orient: Orientation, X: DerivedObject) -> DerivedObject:
    i = injective_vertex(orient, X.interval)
    if i is not None:
        return DerivedObject(X.degree + 1, indecomposable_projective(orient, i))
    return DerivedObject(X.degree, tau_module(orient, X.interval, inverse=True))


def d_translate(orient: Orientation, X: DerivedObject, op: str, k: int = 1) -> DerivedObject:
    if op == "shift":
        return shift(X, k)
    if op == "tau":
        return tau_derived(orient, X)
    if op == "tau_inv":
        return tau_inv_derived(orient, X)
    raise ValueError(f"unknown translation {op!r}")


def apply_F(orient: Orientation, X: DerivedObject, m: int, power: int = 1) -> DerivedObject:
    """F_m^power with F_m = tau^{-1} [m] (and F_m^{-1} = [-m] tau)."""
    if m < 1:
        raise ValueError("m must be at least 1")
    Y = X
    for _ in range(power if power > 0 else 0):
        Y = shift(tau_inv_derived(orient, Y), m)
    for _ in range(-power if power < 0 else 0):
        Y = tau_derived(orient, shift(Y, -m))
    return Y


class OrbitCoordinates(NamedTuple):
    """X = tau^{-z} P_i with P_i the degree-0 projective at vertex i."""

    z: int
    i: int


def coordinates(orient: Orientation, X: DerivedObject) -> OrbitCoordinates:
    steps = 0
    Y = X
    if Y.degree >= 0:
        while Y.degree > 0 or projective_vertex(orient, Y.interval) is None:
            Y = tau_derived(orient, Y)
            steps += 1
    else:
        while Y.degree < 0:
            Y = tau_inv_derived(orient, Y)
            steps -= 1
        assert projective_vertex(orient, Y.interval) is not None, "walk from below must land on a projective"
    return OrbitCoordinates(steps, projective_vertex(orient, Y.interval))


def from_coordinates(orient: Orientation, coords: OrbitCoordinates) -> DerivedObject:
    X = DerivedObject(0, indecomposable_projective(orient, coords.i))
    z = coords.z
    while z > 0:
        X = tau_inv_derived(orient, X)
        z -= 1
    while z < 0:
        X = tau_derived(orient, X)
        z += 1
    return X


def in_fundamental_domain(orient: Orientation, X: DerivedObject, m: int) -> bool:
    """S_m: modules in degrees 0..m-1, plus projectives in degree m."""
    if m < 1:
        raise ValueError("m must be at least 1")
    if 0 <= X.degree <= m - 1:
        return True
    return X.degree == m and projective_vertex(orient, X.interval) is not None


# ---------------------------------------------------------------------------
# tilting complexes and endomorphism algebras


def is_tilting_complex(T: DerivedSum):
    """(verdict, certificate): Hom(T, T[i]) = 0 for i != 0 within the finite
    window forced by the degree spread, plus n pairwise distinct summands."""
    violations = []
    summands = T.summands
    if len(set(summands)) != len(summands):
        violations.append(("duplicate summands", None, None))
    if len(summands) != T.n:
        violations.append(("summand count", len(summands), T.n))
    span = T.degree_span()
    for i in range(-(span + 1), span + 2):
        if i == 0:
            continue
        for a, X in enumerate(summands):
            for b, Y in enumerate(summands):
                if d_hom_dim(T.orient, X, shift(Y, i)) > 0:
                    violations.append((i, a + 1, b + 1))
    return (not violations), violations


def endo_algebra(T: DerivedSum, check_tilting: bool = True) -> StructureAlgebra:
    """End_{D^b}(T) with basis the canonical generators of Hom(T_a, T_b).

    Basis labels are (a, b) for the one-dimensional Hom component from
    summand a to summand b; products are composition.
    """
    if check_tilting:
        ok, cert = is_tilting_complex(T)
        if not ok:
            raise PreconditionError(f"not a tilting complex: {cert[:3]}")
    orient = T.orient
    summands = T.summands
    components = {}
    for a, X in enumerate(summands, start=1):
        for b, Y in enumerate(summands, start=1):
            basis = d_hom_basis(orient, X, Y)
            if not basis:
                continue
            assert len(basis) == 1, "interval Hom components must be one-dimensional"
            components[(a, b)] = basis[0]
    labels = sorted(components)
    index = {lab: k for k, lab in enumerate(labels)}
    products = {}
    for (a, b), f in components.items():
        for (b2, c), g in components.items():
            if b2 != b:
                continue
            comp = d_compose(orient, g, f)
            if comp is None or comp.is_zero():
                continue
            key = (a, c)
            assert key in components, "nonzero composite outside the collected components"
            scalar = morphism_scalar(components[key], comp)
            products[(index[(b, c)], index[(a, b)])] = {index[key]: scalar}
    idempotents = [index[(a, a)] for a in range(1, len(summands) + 1)]
    return StructureAlgebra(labels, products, idempotents)


def ext_profile(T: DerivedSum, window: int) -> set:
    """{ i in [-window, window] : Hom(tau T [1], T[i]) != 0 }."""
    orient = T.orient
    shifted = [shift(tau_derived(orient, X), 1) for X in T.summands]
    out = set()
    for i in range(-window, window + 1):
        for X in shifted:
            if any(d_hom_dim(orient, X, shift(Y, i)) > 0 for Y in T.summands):
                out.add(i)
                break
    return out


# ---------------------------------------------------------------------------
# sections and rolling


class SectionMap:
    """A slice of the derived AR quiver: one object per tau-orbit.

    sigma maps each orbit (vertex i of the orientation quiver, i.e. the orbit
    of the degree-0 projective P_i) to the position z of the section object
    tau^{-z} P_i.  For every arrow i -> j of the orientation quiver a valid
    section satisfies sigma(j) - sigma(i) in {0, 1}: the AR quiver carries
    arrows (z, j) -> (z, i) and (z, i) -> (z+1, j) for each such arrow.
    """

    def __init__(self, orient: Orientation, sigma: dict):
        self.orient = orient
        self.sigma = dict(sigma)
        if sorted(self.sigma) != list(range(1, orient.n + 1)):
            raise ValueError("sigma must assign a position to every orbit")
        for _, i, j in orient.arrows:
            if self.sigma[j] - self.sigma[i] not in (0, 1):
                raise ValueError(f"not a section at the arrow {i}->{j}")

    def objects(self):
        return [from_coordinates(self.orient, OrbitCoordinates(self.sigma[i], i)) for i in range(1, self.orient.n + 1)]

    def section_quiver_edges(self):
        """Directed edges of the induced section quiver between orbits."""
        edges = []
        for _, i, j in self.orient.arrows:
            if self.sigma[j] == self.sigma[i]:
                edges.append((j, i))  # AR arrow (z, j) -> (z, i)
            else:
                edges.append((i, j))  # AR arrow (z, i) -> (z+1, j)
        return edges

    def sinks(self):
        outgoing = {i: 0 for i in range(1, self.orient.n + 1)}
        for s, _ in self.section_quiver_edges():
            outgoing[s] += 1
        return [i for i, c in outgoing.items() if c == 0]

    def lower(self, i: int) -> "SectionMap":
        sigma = dict(self.sigma)
        sigma[i] -= 1
        return SectionMap(self.orient, sigma)

    def __eq__(self, other):
        return isinstance(other, SectionMap) and self.orient == other.orient and self.sigma == other.sigma

    def __repr__(self):
        return f"SectionMap({self.sigma})"


def _least_section_above(orient: Orientation, bounds: dict) -> dict:
    """Smallest valid sigma with sigma(i) >= bounds[i] (None = unconstrained)."""
    big_neg = -(10 ** 9)
    sigma = {i: (bounds.get(i) if bounds.get(i) is not None else big_neg) for i in range(1, orient.n + 1)}
    changed = True
    while changed:
        changed = False
        for _, i, j in orient.arrows:
            if sigma[j] < sigma[i]:
                sigma[j] = sigma[i]
                changed = True
            if sigma[i] < sigma[j] - 1:
                sigma[i] = sigma[j] - 1
                changed = True
    return sigma


def section_of(T: DerivedSum) -> SectionMap:
    """The section Sigma(T): starts at the least section above all summands
    and lowers non-summand maximal elements (sinks) until every maximal
    element of the section lies in add T."""
    if not T.summands:
        raise PreconditionError("section of an empty sum")
    orient = T.orient
    zmax = {}
    for X in T.summands:
        z, i = coordinates(orient, X)
        zmax[i] = max(zmax.get(i, z), z)
    section = SectionMap(orient, _least_section_above(orient, zmax))
    while True:
        candidates = [i for i in section.sinks() if zmax.get(i) != section.sigma[i]]
        if not candidates:
            return section
        section = section.lower(min(candidates))


def rolling_split(T: DerivedSum):
    """(T', X): X = summands lying on Sigma(T), T' the complement.

    Asserts Hom(X, T') = 0, which the rolling construction guarantees.
    """
    orient = T.orient
    section = section_of(T)
    on_slice = []
    rest = []
    for s in T.summands:
        z, i = coordinates(orient, s)
        (on_slice if section.sigma[i] == z else rest).append(s)
    for x in on_slice:
        for t in rest:
            if d_hom_dim(orient, x, t) > 0:
                raise InternalCheckError(f"Hom({x}, {t}) != 0 across the rolling split")
    return DerivedSum(orient, rest), DerivedSum(orient, on_slice), section


def _strictly_below_tau_section(T: DerivedSum, section: SectionMap) -> bool:
    """Every summand (z, i) satisfies z <= sigma(i) - 2, i.e. lies strictly
    below tau Sigma in the past-of-slice order."""
    for s in T.summands:
        z, i = coordinates(T.orient, s)
        if z > section.sigma[i] - 2:
            return False
    return True


def roll(T: DerivedSum, m: int) -> DerivedSum:
    """One m-rolling step: T' + F_m^{-1} X for the section part X of T.

    Requires T tilting with gldim End(T) <= m+1; verifies that the result is
    again tilting and lies strictly below tau Sigma(T).
    """
    ok, cert = is_tilting_complex(T)
    if not ok:
        raise PreconditionError(f"not a tilting complex: {cert[:3]}")
    B = endo_algebra(T, check_tilting=False)
    gd = global_dimension(B, m + 1)
    if gd == EXCEEDS_BOUND:
        raise PreconditionError(f"gldim End(T) exceeds m+1 = {m + 1}")
    t_prime, x_part, section = rolling_split(T)
    rolled = DerivedSum(T.orient, list(t_prime.summands) + [apply_F(T.orient, x, m, -1) for x in x_part.summands])
    ok, cert = is_tilting_complex(rolled)
    if not ok:
        raise InternalCheckError(f"rolled complex is not tilting: {cert[:3]}")
    if not _strictly_below_tau_section(rolled, section):
        raise InternalCheckError("rolled complex is not strictly below tau Sigma(T)")
    return rolled


def fundamental_domain_shift(T: DerivedSum, m: int):
    """Largest r with every summand of T inside the shifted domain S_m[r]
    (modules in degrees r..r+m-1, projectives in degree r+m), or None.

    Shifting by [-r] is an auto-equivalence commuting with F_m, so a complex
    inside S_m[r] is the shift of one inside S_m with the same endomorphism
    algebra and isomorphic cluster-side data.
    """
    degs = [s.degree for s in T.summands]
    lo, hi = max(degs) - m, min(degs)
    for r in range(hi, lo - 1, -1):
        ok = True
        for s in T.summands:
            if r <= s.degree <= r + m - 1:
                continue
            if s.degree == r + m and projective_vertex(T.orient, s.interval) is not None:
                continue
            ok = False
            break
        if ok:
            return r
    return None


def roll_to_fundamental(T: DerivedSum, m: int, cap: int | None = None):
    """Iterate rolling until all summands lie in S_m; returns (result, h).

    The loop stops as soon as the complex fits a shifted copy S_m[r] of the
    fundamental domain and returns its [-r]-translate (r = 0 when T rolls
    into S_m itself, and h = 0 when T starts inside one).  Iterated rolling
    alone translates some complexes past S_m forever, landing only in its
    shifts; normalizing by the shift keeps every reported summand in S_m.
    """
    if cap is None:
        cap = T.n * (T.degree_span() + m + 2)
    trajectory = [T]
    current = T
    h = 0
    while True:
        r = fundamental_domain_shift(current, m)
        if r is not None:
            if r == 0:
                return current, h
            return DerivedSum(T.orient, [shift(s, -r) for s in current.summands]), h
        if h >= cap:
            raise CapExceededError(f"rolling exceeded the cap of {cap} steps", trajectory)
        current = roll(current, m)
        trajectory.append(current)
        h += 1

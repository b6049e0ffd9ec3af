"""Random and exhaustive generation of tilting complexes.

Generation is randomized backtracking over a pool of indecomposables with a
pairwise compatibility relation (no Hom in any nonzero shift, both ways).
A partial selection is extended only by pool elements compatible with every
chosen summand, which keeps the search shallow for the small ranks used in
the test suites.
"""

from __future__ import annotations

from functools import lru_cache

from .algebras import global_dimension, EXCEEDS_BOUND
from .cluster import fundamental_domain_objects
from .derived import DerivedObject, DerivedSum, d_hom_dim, endo_algebra, is_tilting_complex, shift
from .reps import Interval, Orientation, all_intervals


def window_objects(orient: Orientation, degrees):
    out = []
    for r in degrees:
        out.extend(DerivedObject(r, itv) for itv in all_intervals(orient.n))
    return out


@lru_cache(maxsize=None)
def _pair_compatible(orient: Orientation, X: DerivedObject, Y: DerivedObject) -> bool:
    span = abs(X.degree - Y.degree) + 1
    for i in range(-span - 1, span + 2):
        if i == 0:
            continue
        if d_hom_dim(orient, X, shift(Y, i)) or d_hom_dim(orient, Y, shift(X, i)):
            return False
    return True


def complete_to_tilting(orient: Orientation, chosen, pool):
    """Extend ``chosen`` to an n-element pairwise compatible set from pool
    (ordered); returns the completed list or None."""
    n = orient.n
    if len(chosen) == n:
        return list(chosen)
    for idx, cand in enumerate(pool):
        if cand in chosen:
            continue
        if all(cand != c and _pair_compatible(orient, c, cand) for c in chosen):
            res = complete_to_tilting(orient, chosen + [cand], pool[idx + 1:])
            if res is not None:
                return res
    return None


def random_tilting_complex(orient: Orientation, rng, pool=None, degrees=None, max_attempts=200):
    """A uniform-ish random tilting complex drawn by randomized backtracking."""
    if pool is None:
        pool = window_objects(orient, degrees if degrees is not None else range(0, 3))
    for _ in range(max_attempts):
        shuffled = list(pool)
        rng.shuffle(shuffled)
        res = complete_to_tilting(orient, [], shuffled)
        if res is not None:
            T = DerivedSum(orient, res)
            ok, _ = is_tilting_complex(T)
            assert ok, "backtracking produced a non-tilting set"
            return T
    raise RuntimeError("could not sample a tilting complex")


def random_tilting_in_fundamental_domain(orient: Orientation, m: int, rng, max_attempts=200):
    return random_tilting_complex(orient, rng, pool=fundamental_domain_objects(orient, m), max_attempts=max_attempts)


def random_tilting_with_gldim(orient: Orientation, m: int, rng, degrees=None, max_attempts=400):
    """A tilting complex whose endomorphism algebra has gldim <= m+1."""
    if degrees is None:
        degrees = range(0, m + 2)
    pool = window_objects(orient, degrees)
    for _ in range(max_attempts):
        T = random_tilting_complex(orient, rng, pool=pool)
        B = endo_algebra(T, check_tilting=False)
        if global_dimension(B, m + 1) != EXCEEDS_BOUND:
            return T
    raise RuntimeError("could not sample a tilting complex with small gldim")

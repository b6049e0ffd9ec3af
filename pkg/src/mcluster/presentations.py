"""Quivers, relations, presentations, and their comparison.

A presentation is a quiver together with minimal relations (linear
combinations of parallel paths of length >= 2).  Isomorphism testing is a
backtracking search over vertex bijections; for monomial relation sets the
verdict is exact, otherwise the search is complemented by dimension, Cartan
and graded-dimension invariants and may return "inconclusive".
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations

from .exact import ONE, ZERO, row_space_basis, rref, reduce_mod, vec_is_zero

ISOMORPHIC = "isomorphic"
NOT_ISOMORPHIC = "not-isomorphic"
INCONCLUSIVE = "inconclusive"

_DIM_CAP = 20000
_LEN_CAP = 60


class Quiver:
    """Finite quiver: integer vertices, arrows (id, source, target)."""

    def __init__(self, vertices, arrows):
        self.vertices = tuple(vertices)
        vset = set(self.vertices)
        if len(vset) != len(self.vertices):
            raise ValueError("duplicate vertices")
        arrows = tuple((str(a), s, t) for a, s, t in arrows)
        ids = [a for a, _, _ in arrows]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate arrow ids")
        for a, s, t in arrows:
            if s not in vset or t not in vset:
                raise ValueError(f"arrow {a} has endpoints outside the vertex set")
        self.arrows = arrows
        self.source = {a: s for a, s, t in arrows}
        self.target = {a: t for a, s, t in arrows}

    def __eq__(self, other):
        return isinstance(other, Quiver) and self.vertices == other.vertices and self.arrows == other.arrows

    def arrow_counts(self) -> dict:
        counts = {}
        for _, s, t in self.arrows:
            counts[(s, t)] = counts.get((s, t), 0) + 1
        return counts

    def out_arrows(self, v):
        return [a for a, s, _ in self.arrows if s == v]

    def in_arrows(self, v):
        return [a for a, _, t in self.arrows if t == v]

    def path_endpoints(self, path):
        if not path:
            raise ValueError("empty path has no endpoints here")
        for first, second in zip(path, path[1:]):
            if self.target[first] != self.source[second]:
                raise ValueError(f"path {path} is not composable")
        return self.source[path[0]], self.target[path[-1]]


class Relation:
    """A linear combination of parallel paths of length >= 2."""

    def __init__(self, terms):
        terms = tuple((Fraction(c), tuple(path)) for c, path in terms if c)
        if not terms:
            raise ValueError("relation must be nonzero")
        for _, path in terms:
            if len(path) < 2:
                raise ValueError("relation terms must have length >= 2")
        self.terms = terms

    @property
    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def endpoints(self, quiver: Quiver):
        eps = {quiver.path_endpoints(p) for _, p in self.terms}
        if len(eps) != 1:
            raise ValueError("relation terms are not parallel")
        return eps.pop()

    def __eq__(self, other):
        return isinstance(other, Relation) and self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __repr__(self):
        return "Relation(%s)" % " + ".join(f"{c}*{'.'.join(p)}" for c, p in self.terms)


class Presentation:
    """A quiver with relations; ``grades`` optionally annotates arrows."""

    def __init__(self, quiver: Quiver, relations, grades=None):
        self.quiver = quiver
        self.relations = tuple(relations)
        for rel in self.relations:
            rel.endpoints(quiver)
        self.grades = dict(grades) if grades else None
        if self.grades is not None:
            for a, _, _ in quiver.arrows:
                if a not in self.grades:
                    raise ValueError(f"missing grade for arrow {a}")

    @property
    def is_monomial(self) -> bool:
        return all(r.is_monomial for r in self.relations)

    def relation_paths(self):
        return {r.terms[0][1] for r in self.relations if r.is_monomial}

    # -- dimension by path counting ------------------------------------------

    def surviving_paths(self, max_len=_LEN_CAP, cap=_DIM_CAP):
        """All paths (including the lazy/vertex paths) that are nonzero in the
        quotient, or None if the count cannot be certified finite.

        Exact for monomial relations.  For non-monomial relations with
        length-homogeneous terms, works layer by layer with linear algebra.
        Returns a list of (source, target, path, grade) tuples where vertex
        paths have path = () and grade 0.
        """
        if self.is_monomial:
            forbidden = self.relation_paths()
            out = [(v, v, (), 0) for v in self.quiver.vertices]
            layer = []
            for a, s, t in self.quiver.arrows:
                if (a,) not in forbidden:
                    layer.append((a,))
            while layer:
                for p in layer:
                    s, t = self.quiver.path_endpoints(p)
                    out.append((s, t, p, self._grade_of(p)))
                    if len(out) > cap:
                        return None
                if len(layer[0]) >= max_len:
                    return None
                nxt = []
                for p in layer:
                    t = self.quiver.target[p[-1]]
                    for a in self.quiver.out_arrows(t):
                        q = p + (a,)
                        if not any(q[-k:] == f for f in forbidden for k in [len(f)] if k <= len(q)):
                            nxt.append(q)
                layer = nxt
            return out
        return self._surviving_nonmonomial(max_len, cap)

    def _grade_of(self, path):
        if self.grades is None:
            return 0
        return sum(self.grades[a] for a in path)

    def _homogeneous_by_length(self):
        for r in self.relations:
            if len({len(p) for _, p in r.terms}) != 1:
                return False
        return True

    def _surviving_nonmonomial(self, max_len, cap):
        if not self._homogeneous_by_length():
            return None
        # layer-by-layer linear algebra: ideal layer = span of p*r*q by length
        paths = {1: [(a,) for a, _, _ in self.quiver.arrows]}
        total = len(self.quiver.vertices)
        survivors = [(v, v, (), 0) for v in self.quiver.vertices]
        length = 1
        while paths.get(length):
            ideal_vectors = []
            layer = paths[length]
            index = {p: i for i, p in enumerate(layer)}
            for r in self.relations:
                rel_len = len(r.terms[0][1])
                if rel_len > length:
                    continue
                for pre in self._paths_of_length_upto(length - rel_len):
                    lq = length - rel_len - len(pre)
                    for post in self._paths_of_length(lq):
                        vec = [ZERO] * len(layer)
                        ok = True
                        for c, rpath in r.terms:
                            q = pre + rpath + post
                            try:
                                self.quiver.path_endpoints(q)
                            except ValueError:
                                ok = False
                                break
                            if q not in index:
                                ok = False
                                break
                            vec[index[q]] += c
                        if ok and not vec_is_zero(vec):
                            ideal_vectors.append(tuple(vec))
            dim_ideal = len(row_space_basis(ideal_vectors))
            # survivors in this layer: complement dimension; enumerate by RREF free columns
            reduced, pivots = rref(ideal_vectors) if ideal_vectors else ([], [])
            pivset = set(pivots)
            for i, p in enumerate(layer):
                if i not in pivset:
                    s, t = self.quiver.path_endpoints(p)
                    survivors.append((s, t, p, self._grade_of(p)))
            if len(survivors) > cap or length > max_len:
                return None
            nxt = []
            for p in layer:
                t = self.quiver.target[p[-1]]
                for a in self.quiver.out_arrows(t):
                    nxt.append(p + (a,))
            paths[length + 1] = nxt
            # stop once a whole layer dies
            if len(layer) and dim_ideal == len(layer):
                break
            length += 1
        return survivors

    def _paths_of_length(self, k):
        if k == 0:
            return [()]
        out = [(a,) for a, _, _ in self.quiver.arrows]
        for _ in range(k - 1):
            nxt = []
            for p in out:
                t = self.quiver.target[p[-1]]
                for a in self.quiver.out_arrows(t):
                    nxt.append(p + (a,))
            out = nxt
        return out

    def _paths_of_length_upto(self, k):
        out = []
        for l in range(k + 1):
            out.extend(self._paths_of_length(l))
        return out

    def dimension(self):
        """Total dimension of the presented algebra, or None if not certified."""
        paths = self.surviving_paths()
        if paths is None:
            return None
        return len(paths)

    def cartan(self):
        paths = self.surviving_paths()
        if paths is None:
            return None
        counts = {}
        for s, t, _, _ in paths:
            counts[(t, s)] = counts.get((t, s), 0) + 1
        return counts

    def graded_dimensions(self):
        paths = self.surviving_paths()
        if paths is None:
            return None
        out = {}
        for _, _, _, g in paths:
            out[g] = out.get(g, 0) + 1
        return out

    # -- serialization ---------------------------------------------------------

    def to_json_dict(self) -> dict:
        arrows = []
        for a, s, t in sorted(self.quiver.arrows, key=lambda x: x[0]):
            entry = {"id": a, "from": s, "to": t}
            if self.grades is not None:
                entry["grade"] = self.grades[a]
            arrows.append(entry)
        relations = []
        for rel in sorted(self.relations, key=lambda r: sorted(p for _, p in r.terms)):
            relations.append({
                "terms": [{"coef": str(c), "path": list(p)} for c, p in rel.terms],
            })
        return {
            "vertices": sorted(self.quiver.vertices),
            "arrows": arrows,
            "relations": relations,
        }

    def to_dot(self) -> str:
        lines = ["digraph presentation {"]
        for v in sorted(self.quiver.vertices):
            lines.append(f"  {v};")
        for a, s, t in sorted(self.quiver.arrows, key=lambda x: x[0]):
            style = ""
            if self.grades is not None and self.grades[a] > 0:
                style = ", style=bold"
            lines.append(f'  {s} -> {t} [label="{a}"{style}];')
        rel_edges = []
        for rel in self.relations:
            s, t = rel.endpoints(self.quiver)
            rel_edges.append((s, t, tuple(sorted(p for _, p in rel.terms))))
        for s, t, _ in sorted(rel_edges):
            lines.append(f"  {s} -> {t} [style=dashed];")
        lines.append("}")
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# gentleness and cycle conditions


def _simple_cycles(quiver: Quiver):
    """All simple oriented cycles, as arrow tuples up to rotation."""
    cycles = set()

    def dfs(start, v, path_arrows, visited):
        for a in quiver.out_arrows(v):
            t = quiver.target[a]
            if t == start:
                cyc = tuple(path_arrows + [a])
                k = min(range(len(cyc)), key=lambda i: cyc[i:] + cyc[:i])
                cycles.add(cyc[k:] + cyc[:k])
            elif t not in visited and t > start:
                dfs(start, t, path_arrows + [a], visited | {t})

    for v in sorted(quiver.vertices):
        dfs(v, v, [], {v})
    return sorted(cycles)


def is_gentle_with_cycles(pres: Presentation, m: int) -> dict:
    """Gentleness plus the cycle condition: every oriented cycle must have
    length m+2 with all consecutive-arrow composites among the relations."""
    q = pres.quiver
    report = {
        "monomial_quadratic": True,
        "degree_bounds": True,
        "gentle_compatibility": True,
        "cycles": [],
        "cycles_ok": True,
    }
    rel_paths = set()
    for r in pres.relations:
        if not r.is_monomial or len(r.terms[0][1]) != 2:
            report["monomial_quadratic"] = False
        elif r.is_monomial:
            rel_paths.add(r.terms[0][1])
    for v in q.vertices:
        if len(q.in_arrows(v)) > 2 or len(q.out_arrows(v)) > 2:
            report["degree_bounds"] = False
    if report["monomial_quadratic"]:
        for a, _, t in q.arrows:
            follows = [b for b in q.out_arrows(t)]
            killed = [b for b in follows if (a, b) in rel_paths]
            alive = [b for b in follows if (a, b) not in rel_paths]
            if len(killed) > 1 or len(alive) > 1:
                report["gentle_compatibility"] = False
        for b, s, _ in q.arrows:
            before = [a for a in q.in_arrows(s)]
            killed = [a for a in before if (a, b) in rel_paths]
            alive = [a for a in before if (a, b) not in rel_paths]
            if len(killed) > 1 or len(alive) > 1:
                report["gentle_compatibility"] = False
    else:
        report["gentle_compatibility"] = False
    for cyc in _simple_cycles(q):
        length_ok = len(cyc) == m + 2
        full = all(
            ((cyc[i], cyc[(i + 1) % len(cyc)]) in rel_paths)
            for i in range(len(cyc))
        )
        report["cycles"].append({"arrows": list(cyc), "length": len(cyc), "length_ok": length_ok, "full_relations": full})
        if not (length_ok and full):
            report["cycles_ok"] = False
    report["gentle"] = report["monomial_quadratic"] and report["degree_bounds"] and report["gentle_compatibility"]
    report["compliant"] = report["gentle"] and report["cycles_ok"]
    return report


# ---------------------------------------------------------------------------
# presentation isomorphism


def _degree_signature(pres: Presentation, v):
    q = pres.quiver
    return (len(q.in_arrows(v)), len(q.out_arrows(v)))


def _ideal_span_by_block(pres: Presentation, max_len: int):
    """Span of {p * r * q} up to total length max_len, per (source, target),
    in the coordinates of all paths of that length profile."""
    q = pres.quiver
    blocks = {}
    all_paths = {}
    for l in range(2, max_len + 1):
        for p in pres._paths_of_length(l):
            s, t = q.path_endpoints(p)
            all_paths.setdefault((s, t), []).append(p)
    for key in all_paths:
        all_paths[key].sort(key=lambda p: (len(p), p))
    for r in pres.relations:
        rel_len = len(r.terms[0][1])
        for pre_len in range(0, max_len - rel_len + 1):
            for pre in pres._paths_of_length(pre_len):
                for post_len in range(0, max_len - rel_len - pre_len + 1):
                    for post in pres._paths_of_length(post_len):
                        vecs = {}
                        ok = True
                        for c, rpath in r.terms:
                            full = pre + rpath + post
                            try:
                                key = q.path_endpoints(full)
                            except ValueError:
                                ok = False
                                break
                            vecs.setdefault(key, {})[full] = vecs.get(key, {}).get(full, ZERO) + c
                        if not ok or len(vecs) != 1:
                            continue
                        key, coeffs = vecs.popitem()
                        paths = all_paths[key]
                        vec = tuple(coeffs.get(p, ZERO) for p in paths)
                        if not vec_is_zero(vec):
                            blocks.setdefault(key, []).append(vec)
    return {k: row_space_basis(v) for k, v in blocks.items()}, all_paths


def _relations_correspond(p1: Presentation, p2: Presentation, vmap: dict, amap: dict) -> bool:
    if p1.is_monomial and p2.is_monomial:
        s1 = {tuple(amap[a] for a in r.terms[0][1]) for r in p1.relations}
        s2 = {r.terms[0][1] for r in p2.relations}
        return s1 == s2
    # general: the generated ideals agree up to the max relation length
    max_len = max(
        [len(p) for r in p1.relations for _, p in r.terms]
        + [len(p) for r in p2.relations for _, p in r.terms]
        + [2]
    )
    if not (p1._homogeneous_by_length() and p2._homogeneous_by_length()):
        return False
    span1, paths1 = _ideal_span_by_block(p1, max_len)
    span2, paths2 = _ideal_span_by_block(p2, max_len)
    keys1 = {(vmap[s], vmap[t]) for s, t in span1}
    if keys1 != set(span2.keys()):
        return False
    for (s, t), basis in span1.items():
        key2 = (vmap[s], vmap[t])
        translated = []
        order2 = {p: i for i, p in enumerate(paths2[key2])}
        for vec in basis:
            out = [ZERO] * len(order2)
            for coeff, p in zip(vec, paths1[(s, t)]):
                if coeff:
                    out[order2[tuple(amap[a] for a in p)]] += coeff
            translated.append(tuple(out))
        if row_space_basis(translated) != span2[key2]:
            return False
    return True


def _try_arrow_maps(p1: Presentation, p2: Presentation, vmap: dict):
    q1, q2 = p1.quiver, p2.quiver
    classes = {}
    for a, s, t in q1.arrows:
        classes.setdefault((s, t), []).append(a)
    targets = {}
    for a, s, t in q2.arrows:
        targets.setdefault((s, t), []).append(a)

    keys = sorted(classes)
    choices = []
    for key in keys:
        s, t = key
        tkey = (vmap[s], vmap[t])
        if len(targets.get(tkey, [])) != len(classes[key]):
            return None
        choices.append(list(permutations(targets[tkey])))

    def rec(idx, amap):
        if idx == len(keys):
            if _relations_correspond(p1, p2, vmap, amap):
                return dict(amap)
            return None
        for perm in choices[idx]:
            for a, b in zip(classes[keys[idx]], perm):
                amap[a] = b
            res = rec(idx + 1, amap)
            if res is not None:
                return res
            for a in classes[keys[idx]]:
                del amap[a]
        return None

    return rec(0, {})


def presentation_iso(p1: Presentation, p2: Presentation):
    """Verdict in {isomorphic, not-isomorphic, inconclusive} plus certificate.

    Returns (verdict, mapping) where mapping is (vertex_map, arrow_map) for
    an isomorphic verdict and None otherwise.
    """
    q1, q2 = p1.quiver, p2.quiver
    both_monomial = p1.is_monomial and p2.is_monomial

    def invariant_verdict():
        d1, d2 = p1.dimension(), p2.dimension()
        if d1 is not None and d2 is not None and d1 != d2:
            return NOT_ISOMORPHIC
        c1, c2 = p1.cartan(), p2.cartan()
        if c1 is not None and c2 is not None:
            if sorted(c1.values()) != sorted(c2.values()):
                return NOT_ISOMORPHIC
        g1, g2 = p1.graded_dimensions(), p2.graded_dimensions()
        if g1 is not None and g2 is not None and g1 != g2:
            return NOT_ISOMORPHIC
        return INCONCLUSIVE

    if len(q1.vertices) != len(q2.vertices) or len(q1.arrows) != len(q2.arrows):
        return NOT_ISOMORPHIC, None
    sig1 = sorted(_degree_signature(p1, v) for v in q1.vertices)
    sig2 = sorted(_degree_signature(p2, v) for v in q2.vertices)
    if sig1 != sig2:
        return NOT_ISOMORPHIC, None
    if both_monomial and len(p1.relations) != len(p2.relations):
        return NOT_ISOMORPHIC, None

    counts2 = q2.arrow_counts()
    verts1 = sorted(q1.vertices, key=lambda v: (-len(q1.out_arrows(v)) - len(q1.in_arrows(v)), v))

    def rec(idx, vmap, used):
        if idx == len(verts1):
            amap = _try_arrow_maps(p1, p2, vmap)
            if amap is not None:
                return dict(vmap), amap
            return None
        v = verts1[idx]
        for w in sorted(q2.vertices):
            if w in used or _degree_signature(p1, v) != _degree_signature(p2, w):
                continue
            ok = True
            for u, x in vmap.items():
                c1 = sum(1 for _, s, t in q1.arrows if (s, t) == (v, u))
                c1b = sum(1 for _, s, t in q1.arrows if (s, t) == (u, v))
                if counts2.get((w, x), 0) != c1 or counts2.get((x, w), 0) != c1b:
                    ok = False
                    break
            if not ok:
                continue
            vmap[v] = w
            res = rec(idx + 1, vmap, used | {w})
            if res is not None:
                return res
            del vmap[v]
        return None

    found = rec(0, {}, set())
    if found is not None:
        vmap, amap = found
        return ISOMORPHIC, (vmap, amap)
    if both_monomial:
        return NOT_ISOMORPHIC, None
    return invariant_verdict(), None

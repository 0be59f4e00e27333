"""Integer homology of a branched cover of the sphere, with intersections.

The base sphere gets the cell structure of a star: one vertex at the base
point, one arc to each branch point, and a single face wrapped around the
star. Lifting along the monodromy gives a closed oriented surface as an
explicit cell complex:

* one sheet vertex per sheet over the base point;
* one ramification vertex per cycle of each local monodromy;
* one edge per (sheet, arc) pair, oriented sheet vertex -> ramification
  vertex;
* one face per sheet, whose boundary walks every arc down and back, hopping
  sheets by the inverse local monodromy at each ramification vertex.

First homology comes from a spanning tree: non-tree edges give fundamental
cycles, face boundaries give the relations, and the quotient is free of rank
2g (asserted). Basis cycles are kept as explicit edge chains so that fiber
correspondences can act on them by linear substitution.

The intersection number of two edge chains is evaluated locally: push the
second chain off to the right of every edge; crossings then happen only
inside the disk around each vertex, where they are counted from the cyclic
order of edge ends (ascending arcs at a sheet vertex, inverse-monodromy
order at a ramification vertex). The resulting Gram matrix is checked to be
alternating and unimodular on every build.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import cover as _cover
from . import lattice
from .cover import CoverModel, components
from .errors import DisconnectedError, EquivarianceError, UnsupportedError
from .lattice import zeros


class HomologyModel:
    """Homology basis, intersection Gram and chain machinery for one
    connected cover of the rational base. Treat instances as immutable."""

    def __init__(self, cover_model: CoverModel):
        if cover_model.datum.base_genus != 0:
            raise UnsupportedError("homology model supports genus-0 bases only")
        comps = components(cover_model)
        if len(comps) != 1:
            raise DisconnectedError(
                "cover is disconnected; build per component",
                components=comps,
            )
        self.cover = cover_model
        self._build_complex()
        self._build_cycles()
        self._build_gram()

    # -- complex ----------------------------------------------------------

    def _build_complex(self):
        cov = self.cover
        d = cov.degree
        k = len(cov.perms)
        self.degree = d
        self.arc_count = k
        self.perms = [list(p) for p in cov.perms]
        self.inv_perms = []
        for p in self.perms:
            inv = [0] * d
            for i, v in enumerate(p):
                inv[v] = i
            self.inv_perms.append(inv)

        # vertices: sheets first, then one per monodromy cycle of each arc
        self.vertex_count = d
        self.branch_vertex = {}       # (arc, sheet) -> vertex id
        self.vertex_ends = [None] * d  # vertex id -> ("sheet"/"branch", ends)
        cycle_members = {}
        for i in range(k):
            seen = [False] * d
            for s in range(d):
                if seen[s]:
                    continue
                vid = self.vertex_count
                self.vertex_count += 1
                cyc = []
                t = s
                while not seen[t]:
                    seen[t] = True
                    cyc.append(t)
                    t = self.inv_perms[i][t]
                for t in cyc:
                    self.branch_vertex[(i, t)] = vid
                cycle_members[vid] = (i, cyc)
        # edge id: sheet * k + arc, oriented sheet vertex -> branch vertex
        self.edge_count = d * k
        self.edge_tail = [0] * self.edge_count
        self.edge_head = [0] * self.edge_count
        for s in range(d):
            for i in range(k):
                e = s * k + i
                self.edge_tail[e] = s
                self.edge_head[e] = self.branch_vertex[(i, s)]
        # cyclic end order per vertex; ccw is ascending arcs at a sheet
        # vertex and the inverse-monodromy cycle at a ramification vertex
        for s in range(d):
            self.vertex_ends[s] = ("sheet", [s * k + i for i in range(k)])
        self.vertex_ends.extend([None] * (self.vertex_count - d))
        for vid, (i, cyc) in cycle_members.items():
            self.vertex_ends[vid] = ("branch", [t * k + i for t in cyc])

        # face boundaries: one per sheet, arcs in ascending order
        self.faces = []
        for t in range(d):
            chain = {}
            s = t
            for i in range(k):
                chain[s * k + i] = chain.get(s * k + i, 0) + 1
                s2 = self.inv_perms[i][s]
                chain[s2 * k + i] = chain.get(s2 * k + i, 0) - 1
                s = s2
            if s != t:
                raise AssertionError("face walk failed to close")
            self.faces.append(chain)

    # -- cycles and relations ----------------------------------------------

    def _build_cycles(self):
        # spanning tree by breadth-first search from sheet vertex 0
        V, E = self.vertex_count, self.edge_count
        adj = [[] for _ in range(V)]
        for e in range(E):
            adj[self.edge_tail[e]].append((e, self.edge_head[e], +1))
            adj[self.edge_head[e]].append((e, self.edge_tail[e], -1))
        for lst in adj:
            lst.sort()
        parent_edge = [None] * V   # (edge, direction toward the root)
        order = [0]
        seen = [False] * V
        seen[0] = True
        qi = 0
        in_tree = [False] * E
        while qi < len(order):
            v = order[qi]
            qi += 1
            for e, w, _sign in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    in_tree[e] = True
                    parent_edge[w] = e
                    order.append(w)
        if not all(seen):
            raise AssertionError("1-skeleton disconnected despite transitivity")
        self.in_tree = in_tree
        self.nontree = [e for e in range(E) if not in_tree[e]]
        self.nontree_pos = {e: i for i, e in enumerate(self.nontree)}

        # path-to-root as an edge chain, memoized per vertex
        path_cache = {0: {}}

        def path(v):
            if v in path_cache:
                return path_cache[v]
            e = parent_edge[v]
            other = self.edge_tail[e] if self.edge_head[e] == v else self.edge_head[e]
            base = dict(path(other))
            # step from v toward the root: forward when v is the tail
            base[e] = base.get(e, 0) + (+1 if self.edge_tail[e] == v else -1)
            if base[e] == 0:
                del base[e]
            path_cache[v] = base
            return base

        # fundamental cycle of a non-tree edge e: e + path(head->root) - path(tail->root)
        self.fundamental = []
        for e in self.nontree:
            chain = {e: 1}
            for ee, c in path(self.edge_head[e]).items():
                chain[ee] = chain.get(ee, 0) + c
            for ee, c in path(self.edge_tail[e]).items():
                chain[ee] = chain.get(ee, 0) - c
            chain = {ee: c for ee, c in chain.items() if c}
            self.fundamental.append(chain)

        # relations: face boundaries in non-tree coordinates
        m = len(self.nontree)
        rel = zeros(m, len(self.faces))
        for t, chain in enumerate(self.faces):
            for e, c in chain.items():
                if not self.in_tree[e]:
                    rel[self.nontree_pos[e], t] = c
        st = lattice._snf_state(rel)
        r = lattice._snf_rank(st)
        if any(st.a[i][i] != 1 for i in range(r)):
            raise AssertionError("homology acquired torsion; construction broken")
        self._rel_rank = r
        self._U = lattice._lists_to_mat(st.u, m, m)
        uinv = lattice._lists_to_mat(st.uinv, m, m)
        self.genus2 = m - r
        if self.genus2 % 2:
            raise AssertionError("odd first Betti number on a closed surface")
        self.genus = self.genus2 // 2
        if self.genus != _cover.genus(self.cover):
            raise AssertionError("homology rank disagrees with the genus count")
        self.basis = []
        for j in range(r, m):
            chain = {}
            for t in range(m):
                c = uinv[t, j]
                if c:
                    for e, cc in self.fundamental[t].items():
                        chain[e] = chain.get(e, 0) + c * cc
            self.basis.append({e: c for e, c in chain.items() if c})

    def boundary(self, chain: dict) -> dict:
        out = {}
        for e, c in chain.items():
            h, t = self.edge_head[e], self.edge_tail[e]
            out[h] = out.get(h, 0) + c
            out[t] = out.get(t, 0) - c
        return {v: c for v, c in out.items() if c}

    def class_of(self, chain: dict) -> np.ndarray:
        """Homology class of a 1-cycle, in the basis of this model."""
        if self.boundary(chain):
            raise ValueError("chain is not a cycle")
        m = len(self.nontree)
        w = zeros(m, 1)
        for e, c in chain.items():
            if not self.in_tree[e]:
                w[self.nontree_pos[e], 0] = c
        u = self._U @ w
        return u[self._rel_rank:, 0]

    # -- intersection numbers ----------------------------------------------

    def _vertex_flows(self, chain: dict) -> dict:
        """Per vertex: inward flow indexed by position in the cyclic end
        order. Tail ends count edge coefficients negatively."""
        flows = {}
        for e, c in chain.items():
            for v, inward in ((self.edge_head[e], c), (self.edge_tail[e], -c)):
                kind, ends = self.vertex_ends[v]
                if v not in flows:
                    flows[v] = [0] * len(ends)
                flows[v][ends.index(e)] += inward
        return flows

    def intersection(self, z1: dict, z2: dict) -> int:
        """Algebraic intersection number of two 1-cycles.

        The second cycle is displaced to the right of every oriented edge, so
        its strand arrives just clockwise of a tail end and just counter-
        clockwise of a head end; crossings with the first cycle's radial
        strands are then read off the cyclic order.
        """
        return self._pair_flows(self._vertex_flows(z1), self._vertex_flows(z2))

    def _build_gram(self):
        g2 = self.genus2
        gram = zeros(g2, g2)
        flows = [self._vertex_flows(z) for z in self.basis]
        for a in range(g2):
            for b in range(g2):
                if a == b:
                    continue
                gram[a, b] = self._pair_flows(flows[a], flows[b])
        for a in range(g2):
            if self._pair_flows(flows[a], flows[a]) != 0:
                raise AssertionError("nonzero self-intersection")
        if not lattice.mat_equal(gram.T, -gram):
            raise AssertionError("intersection form is not alternating")
        if g2 and abs(lattice.det(gram)) != 1:
            raise AssertionError("intersection form is not unimodular")
        self.gram = gram

    def _pair_flows(self, f1, f2) -> int:
        total = 0
        for v, xs in f1.items():
            ys = f2.get(v)
            if ys is None:
                continue
            kind, _ends = self.vertex_ends[v]
            acc = 0
            run = 0
            if kind == "sheet":
                for x, y in zip(xs, ys):
                    run += y
                    acc += x * run
            else:
                for x, y in zip(xs, ys):
                    acc += x * run
                    run += y
            total -= acc
        return total

    def gram_json(self) -> list:
        return lattice.to_lists(self.gram)


def build(cover_model: CoverModel) -> HomologyModel:
    """Homology basis with intersection Gram for a connected cover of the
    rational base; deterministic for a fixed cover."""
    return HomologyModel(cover_model)


def _check_equivariance(src: CoverModel, dst: CoverModel, fiber) -> None:
    fiber = np.asarray(fiber, dtype=object)
    if fiber.shape != (src.degree, dst.degree):
        raise EquivarianceError(
            f"fiber matrix shape {fiber.shape} does not match degrees "
            f"({src.degree}, {dst.degree})"
        )
    pairs = list(zip(src.all_perms(), dst.all_perms()))
    for ps, pd in pairs:
        for i in range(src.degree):
            for j in range(dst.degree):
                if fiber[ps[i], pd[j]] != fiber[i, j]:
                    raise EquivarianceError(
                        "fiber matrix does not commute with the monodromy action"
                    )


def induced_map(src: HomologyModel, dst: HomologyModel, fiber) -> np.ndarray:
    """Action of a fiber correspondence on homology.

    ``fiber[i][j]`` is the multiplicity with which a path on source sheet i
    maps to the corresponding path on destination sheet j. Both models must
    come from the same datum. Returns the (2g_dst x 2g_src) integer matrix on
    column cycle classes.
    """
    if src.cover.datum != dst.cover.datum:
        raise ValueError("source and destination covers come from different data")
    _check_equivariance(src.cover, dst.cover, fiber)
    fiber = np.asarray(fiber, dtype=object)
    k = src.arc_count
    cols = []
    for z in src.basis:
        img = {}
        for e, c in z.items():
            s, arc = divmod(e, k)
            for t in range(dst.degree):
                w = fiber[s, t]
                if w:
                    ee = t * k + arc
                    img[ee] = img.get(ee, 0) + c * w
        img = {e: c for e, c in img.items() if c}
        if dst.boundary(img):
            raise AssertionError(
                "image chain failed to close; equivariant input cannot do this"
            )
        cols.append(dst.class_of(img))
    out = zeros(dst.genus2, src.genus2)
    for j, col in enumerate(cols):
        for i in range(dst.genus2):
            out[i, j] = col[i]
    return out


# ---------------------------------------------------------------------------
# disjoint unions


@dataclass(frozen=True)
class CoverHomology:
    """Homology of a possibly disconnected cover: the direct sum of the
    component models, with block-diagonal Gram."""

    cover: CoverModel
    parts: tuple
    part_labels: tuple
    gram: np.ndarray
    offsets: tuple

    @property
    def rank(self) -> int:
        return self.gram.shape[0]

    @property
    def genus_total(self) -> int:
        return self.rank // 2


def build_all(cover_model: CoverModel) -> CoverHomology:
    comps = components(cover_model)
    parts = []
    for comp in comps:
        sub = cover_model if len(comps) == 1 else _cover.component_cover(cover_model, comp)
        parts.append(HomologyModel(sub))
    total = sum(p.genus2 for p in parts)
    gram = zeros(total, total)
    offsets = []
    at = 0
    for p in parts:
        offsets.append(at)
        for i in range(p.genus2):
            for j in range(p.genus2):
                gram[at + i, at + j] = p.gram[i, j]
        at += p.genus2
    return CoverHomology(
        cover=cover_model,
        parts=tuple(parts),
        part_labels=tuple(tuple(c) for c in comps),
        gram=gram,
        offsets=tuple(offsets),
    )


def induced_map_all(src: CoverHomology, dst: CoverHomology, fiber) -> np.ndarray:
    """Induced homology action for covers that may split into components.

    The fiber matrix is indexed by the full canonical label sets of both
    covers; its blocks map each source component into each destination
    component.
    """
    if src.cover.datum != dst.cover.datum:
        raise ValueError("source and destination covers come from different data")
    _check_equivariance(src.cover, dst.cover, fiber)
    fiber = np.asarray(fiber, dtype=object)
    out = zeros(dst.rank, src.rank)
    for a, (pa, la) in enumerate(zip(src.parts, src.part_labels)):
        k = pa.arc_count
        for j_local in range(pa.genus2):
            z = pa.basis[j_local]
            col = src.offsets[a] + j_local
            for b, (pb, lb) in enumerate(zip(dst.parts, dst.part_labels)):
                img = {}
                for e, c in z.items():
                    s_local, arc = divmod(e, k)
                    s_global = la[s_local]
                    for t_local, t_global in enumerate(lb):
                        w = fiber[s_global, t_global]
                        if w:
                            ee = t_local * k + arc
                            img[ee] = img.get(ee, 0) + c * w
                img = {e: c for e, c in img.items() if c}
                if pb.boundary(img):
                    raise AssertionError("image chain failed to close per component")
                cls = pb.class_of(img)
                for i in range(pb.genus2):
                    out[dst.offsets[b] + i, col] = cls[i]
    return out

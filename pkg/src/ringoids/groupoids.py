"""Finite groupoids, G-sets, transport groupoids, and group ringoids
(including the coefficient-twisted variant over a functorial family of
rings)."""

from __future__ import annotations

import itertools
from math import lcm

from .abgroup import FinAbGroup
from .groups import FinGroup
from .ringoid import (AxiomFailure, FiniteRingoid, RingoidHom, StructuralError,
                      ValidationReport)
from .moduloids import tensor, TensorProduct
from .ringoid import cyclic_ring


class FinGroupoid:
    """Finite groupoid: morphism sets with associative composition,
    identities, and a certified two-sided inverse for every morphism.

    comp[(g, h)] = g . h for h: a -> b followed by g: b -> c.
    """

    __slots__ = ("name", "objects", "morphisms", "hom_sets", "comp",
                 "identities", "inverses")

    def __init__(self, objects, morphisms, comp, identities, inverses=None,
                 name=""):
        self.name = name
        self.objects = tuple(objects)
        self.morphisms = dict(morphisms)  # id -> (src, tgt)
        self.hom_sets = {}
        for a in self.objects:
            for b in self.objects:
                self.hom_sets[(a, b)] = tuple(
                    mid for mid, (s, t) in self.morphisms.items()
                    if s == a and t == b)
        self.comp = dict(comp)
        self.identities = dict(identities)
        if inverses is None:
            inverses = self._infer_inverses()
        self.inverses = dict(inverses)

    def hom(self, a, b):
        return self.hom_sets[(a, b)]

    def source(self, mid):
        return self.morphisms[mid][0]

    def target(self, mid):
        return self.morphisms[mid][1]

    def compose(self, g, h):
        """g . h with h applied first."""
        return self.comp[(g, h)]

    def identity(self, a):
        return self.identities[a]

    def inverse(self, mid):
        return self.inverses[mid]

    def _infer_inverses(self):
        out = {}
        for mid, (a, b) in self.morphisms.items():
            for cand in self.hom_sets[(b, a)]:
                if (self.comp.get((cand, mid)) == self.identities[a]
                        and self.comp.get((mid, cand)) == self.identities[b]):
                    out[mid] = cand
                    break
            else:
                raise StructuralError("morphism %r has no inverse" % (mid,))
        return out

    def __repr__(self):
        return "FinGroupoid(%r, %d objects, %d morphisms)" % (
            self.name, len(self.objects), len(self.morphisms))


def validate_groupoid(g):
    """Exhaustive: totality of composition on composables, associativity,
    identity laws, certified two-sided inverses."""
    failures = []
    for mid, (a, b) in g.morphisms.items():
        if a not in g.objects or b not in g.objects:
            raise StructuralError("morphism %r has unknown endpoints" % (mid,))
    for a in g.objects:
        if a not in g.identities:
            raise StructuralError("missing identity at %r" % (a,))
        e = g.identities[a]
        if g.morphisms.get(e) != (a, a):
            raise StructuralError("identity at %r has wrong endpoints" % (a,))
    for h, (a, b) in g.morphisms.items():
        for gg, (b2, c) in g.morphisms.items():
            if b2 != b:
                continue
            k = g.comp.get((gg, h))
            if k is None or g.morphisms.get(k) != (a, c):
                raise StructuralError("composition missing or ill-typed for (%r,%r)" % (gg, h))
    for h, (a, b) in g.morphisms.items():
        if g.comp.get((g.identities[b], h)) != h or g.comp.get((h, g.identities[a])) != h:
            failures.append(AxiomFailure("identity law", (a, b), h))
    for f, (a, b) in g.morphisms.items():
        for gg, (b2, c) in g.morphisms.items():
            if b2 != b:
                continue
            gf = g.comp[(gg, f)]
            for k, (c2, d) in g.morphisms.items():
                if c2 != c:
                    continue
                if g.comp[(k, gf)] != g.comp[(g.comp[(k, gg)], f)]:
                    failures.append(AxiomFailure("associativity", (a, b, c, d), (k, gg, f)))
    for mid, (a, b) in g.morphisms.items():
        inv = g.inverses.get(mid)
        if inv is None or g.morphisms.get(inv) != (b, a) \
                or g.comp.get((inv, mid)) != g.identities[a] \
                or g.comp.get((mid, inv)) != g.identities[b]:
            failures.append(AxiomFailure("inverse", (a, b), mid))
    return ValidationReport(failures)


def group_as_groupoid(group, obj="*", name=None):
    """One-object groupoid on a finite group; morphism ids are element
    indices, and composition g.h (h first) is the product h*g."""
    n = len(group)
    morphisms = {i: (obj, obj) for i in range(n)}
    comp = {(gg, h): group.table[h][gg] for gg in range(n) for h in range(n)}
    identities = {obj: group.identity}
    inverses = {i: group.inv(i) for i in range(n)}
    if name is None:
        name = "G%d" % n
    return FinGroupoid((obj,), morphisms, comp, identities, inverses, name=name)


def discrete_groupoid(objects, name="discrete"):
    morphisms = {("id", a): (a, a) for a in objects}
    comp = {((("id", a)), ("id", a)): ("id", a) for a in objects}
    identities = {a: ("id", a) for a in objects}
    return FinGroupoid(objects, morphisms, comp, identities, name=name)


class GSet:
    """Finite right G-set: points, and an action table point x g -> point."""

    __slots__ = ("group", "points", "act")

    def __init__(self, group, points, act):
        self.group = group
        self.points = tuple(points)
        self.act = dict(act)

    def apply(self, x, gidx):
        return self.act[(x, gidx)]

    def validate(self):
        failures = []
        e = self.group.identity
        for x in self.points:
            for gidx in range(len(self.group)):
                if (x, gidx) not in self.act or self.act[(x, gidx)] not in self.points:
                    raise StructuralError("action undefined or escapes at (%r, %d)" % (x, gidx))
            if self.apply(x, e) != x:
                failures.append(AxiomFailure("action identity", (x,), e))
            for g in range(len(self.group)):
                xg = self.apply(x, g)
                for h in range(len(self.group)):
                    if self.apply(xg, h) != self.apply(x, self.group.mul(g, h)):
                        failures.append(AxiomFailure("action compatibility", (x,), (g, h)))
        return ValidationReport(failures)

    @classmethod
    def regular(cls, group):
        points = tuple(range(len(group)))
        act = {(x, g): group.mul(x, g) for x in points for g in range(len(group))}
        return cls(group, points, act)

    @classmethod
    def trivial(cls, group, points=("pt",)):
        act = {(x, g): x for x in points for g in range(len(group))}
        return cls(group, points, act)


def disjoint_union_gset(xs, ys):
    """Disjoint union with tagged points."""
    if xs.group is not ys.group:
        raise StructuralError("disjoint union needs a shared group")
    points = tuple(("L", p) for p in xs.points) + tuple(("R", p) for p in ys.points)
    act = {}
    for (tag, p) in points:
        src = xs if tag == "L" else ys
        for g in range(len(xs.group)):
            act[((tag, p), g)] = (tag, src.apply(p, g))
    return GSet(xs.group, points, act)


def transport_groupoid(gset, name=None):
    """Objects are the points; Hom(x, y) = {g in G : x.g = y}.  Morphism ids
    are pairs (x, g)."""
    G = gset.group
    morphisms = {}
    for x in gset.points:
        for g in range(len(G)):
            morphisms[(x, g)] = (x, gset.apply(x, g))
    comp = {}
    for (x, g), (_, y) in morphisms.items():
        for h in range(len(G)):
            comp[((y, h), (x, g))] = (x, G.mul(g, h))
    identities = {x: (x, G.identity) for x in gset.points}
    inverses = {(x, g): (gset.apply(x, g), G.inv(g)) for (x, g) in morphisms}
    if name is None:
        name = "transport"
    return FinGroupoid(gset.points, morphisms, comp, identities, inverses, name=name)


class OrbitComponent:
    """One connected component: its objects, the chosen base object, the
    vertex group there, and the inclusion of the vertex group into the
    groupoid (element index -> morphism id)."""

    __slots__ = ("objects", "base", "vertex_group", "morphism_of")

    def __init__(self, objects, base, vertex_group, morphism_of):
        self.objects = tuple(objects)
        self.base = base
        self.vertex_group = vertex_group
        self.morphism_of = dict(morphism_of)


def groupoid_components(g):
    """Connected components in object order; each with the least object as
    base and the vertex group there."""
    remaining = list(g.objects)
    components = []
    while remaining:
        base = remaining[0]
        comp_objs = [o for o in g.objects
                     if g.hom(base, o) or o == base]
        remaining = [o for o in remaining if o not in comp_objs]
        loops = list(g.hom(base, base))
        idx = {mid: i for i, mid in enumerate(loops)}
        table = [[idx[g.compose(loops[j], loops[i])] for j in range(len(loops))]
                 for i in range(len(loops))]
        vertex = FinGroup(loops, table)
        components.append(OrbitComponent(comp_objs, base, vertex,
                                         {i: loops[i] for i in range(len(loops))}))
    return components


def orbit_skeleton(g):
    """Deterministic skeleton data: one OrbitComponent per connected
    component, chosen at the least object."""
    return groupoid_components(g)


# ---------------------------------------------------------------------------
# Group ringoids.
# ---------------------------------------------------------------------------

def group_ringoid(pi, scalar, name=None):
    """R pi: the free R-linearization of a groupoid, with convolution
    composition (x_i g_i)(y_j h_j) = (x_i y_j)(g_i h_j) and scalar action
    on coefficients."""
    ro = scalar.objects[0]
    rg = scalar.hom(ro, ro)
    rk = len(rg.moduli)
    objects = pi.objects
    homs = {}
    blocks = {}
    for a in objects:
        for b in objects:
            mids = pi.hom(a, b)
            blocks[(a, b)] = {mid: i for i, mid in enumerate(mids)}
            homs[(a, b)] = FinAbGroup(rg.moduli * len(mids))

    def place(a, b, mid, relem):
        hom = homs[(a, b)]
        out = [0] * len(hom.moduli)
        pos = blocks[(a, b)][mid] * rk
        for t, v in enumerate(relem):
            out[pos + t] = v
        return hom.reduce(out)

    table = {}
    for a in objects:
        for b in objects:
            for c in objects:
                mids_bc, mids_ab = pi.hom(b, c), pi.hom(a, b)
                rows = []
                for gmid in mids_bc:
                    for i in range(rk):
                        ri = rg.basis_element(i)
                        row = []
                        for hmid in mids_ab:
                            gh = pi.compose(gmid, hmid)
                            for j in range(rk):
                                prod = scalar.compose(ro, ro, ro, ri,
                                                      rg.basis_element(j))
                                row.append(place(a, c, gh, prod))
                        rows.append(tuple(row))
                table[(a, b, c)] = tuple(rows)
    identities = {a: place(a, a, pi.identity(a), scalar.identity(ro))
                  for a in objects}
    action = {}
    for a in objects:
        for b in objects:
            mids = pi.hom(a, b)
            rows = []
            for i in range(rk):
                ri = rg.basis_element(i)
                row = []
                for mid in mids:
                    for j in range(rk):
                        prod = scalar.compose(ro, ro, ro, ri, rg.basis_element(j))
                        row.append(place(a, b, mid, prod))
                rows.append(tuple(row))
            action[(a, b)] = tuple(rows)
    if name is None:
        name = "%s[%s]" % (scalar.name, pi.name)
    return FiniteRingoid(objects, homs, table, identities=identities,
                         scalar=scalar, action=action, name=name)


def group_ring_basis(pi, scalar):
    """Coordinate helper matching group_ringoid's layout: returns
    (element_of(a, b, mid, relem), block_index)."""
    ro = scalar.objects[0]
    rg = scalar.hom(ro, ro)
    rk = len(rg.moduli)

    def element_of(ringoid, a, b, mid, relem):
        hom = ringoid.hom(a, b)
        mids = pi.hom(a, b)
        out = [0] * len(hom.moduli)
        pos = mids.index(mid) * rk
        for t, v in enumerate(relem):
            out[pos + t] = v
        return hom.reduce(out)

    return element_of


# ---------------------------------------------------------------------------
# Twisted group ringoids over a functorial family of rings.
# ---------------------------------------------------------------------------

class PiRing:
    """A functor from a groupoid to finite commutative unital rings: one ring
    per object and a ring isomorphism per morphism (stored on generators)."""

    __slots__ = ("groupoid", "rings", "maps")

    def __init__(self, groupoid, rings, maps):
        self.groupoid = groupoid
        self.rings = dict(rings)
        self.maps = {mid: tuple(tuple(img) for img in imgs)
                     for mid, imgs in maps.items()}

    def ring(self, obj):
        return self.rings[obj]

    def apply(self, mid, x):
        """Image of x in R_target under the morphism's ring map."""
        src_obj, tgt_obj = self.groupoid.morphisms[mid]
        tgt = self.rings[tgt_obj]
        to = tgt.objects[0]
        tg = tgt.hom(to, to)
        imgs = self.maps[mid]
        acc = [0] * len(tg.moduli)
        for j, xj in enumerate(x):
            if xj:
                img = imgs[j]
                for t in range(len(acc)):
                    acc[t] += xj * img[t]
        return tuple(v % d for v, d in zip(acc, tg.moduli))

    @classmethod
    def constant(cls, groupoid, ring):
        """The trivial action: every morphism acts as the identity."""
        ro = ring.objects[0]
        rg = ring.hom(ro, ro)
        imgs = tuple(rg.basis_element(j) for j in range(len(rg.moduli)))
        return cls(groupoid, {a: ring for a in groupoid.objects},
                   {mid: imgs for mid in groupoid.morphisms})


class PiRingError(Exception):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


def validate_pi_ring(pr):
    """Functoriality with certified ring isomorphisms; raises with witness."""
    g = pr.groupoid
    for a in g.objects:
        ring = pr.rings.get(a)
        if ring is None or len(ring.objects) != 1 or not ring.unital:
            raise PiRingError("object %r lacks a one-object unital ring" % (a,))
    for mid, (a, b) in g.morphisms.items():
        src, tgt = pr.rings[a], pr.rings[b]
        so, to = src.objects[0], tgt.objects[0]
        sg, tg = src.hom(so, so), tgt.hom(to, to)
        if len(pr.maps.get(mid, ())) != len(sg.moduli):
            raise PiRingError("map for morphism %r has wrong arity" % (mid,))
        # additive bijection
        seen = set()
        for x in sg.elements():
            y = pr.apply(mid, x)
            if y in seen:
                raise PiRingError("ring map for %r is not injective" % (mid,), witness=x)
            seen.add(y)
        if len(seen) != tg.order():
            raise PiRingError("ring map for %r is not surjective" % (mid,))
        # multiplicative with unit
        for i in range(len(sg.moduli)):
            for j in range(len(sg.moduli)):
                x, y = sg.basis_element(i), sg.basis_element(j)
                lhs = pr.apply(mid, src.compose(so, so, so, x, y))
                rhs = tgt.compose(to, to, to, pr.apply(mid, x), pr.apply(mid, y))
                if lhs != rhs:
                    raise PiRingError("ring map for %r is not multiplicative" % (mid,),
                                      witness=(x, y))
        if pr.apply(mid, src.identity(so)) != tgt.identity(to):
            raise PiRingError("ring map for %r does not preserve the unit" % (mid,))
    for a in g.objects:
        e = g.identity(a)
        ring = pr.rings[a]
        ro = ring.objects[0]
        rg = ring.hom(ro, ro)
        for j in range(len(rg.moduli)):
            x = rg.basis_element(j)
            if pr.apply(e, x) != x:
                raise PiRingError("identity morphism at %r does not act trivially" % (a,),
                                  witness=x)
    for h, (a, b) in g.morphisms.items():
        for gg, (b2, c) in g.morphisms.items():
            if b2 != b:
                continue
            gh = g.compose(gg, h)
            ring = pr.rings[a]
            ro = ring.objects[0]
            rg = ring.hom(ro, ro)
            for j in range(len(rg.moduli)):
                x = rg.basis_element(j)
                if pr.apply(gh, x) != pr.apply(gg, pr.apply(h, x)):
                    raise PiRingError("action is not functorial", witness=(gg, h, x))


def twisted_group_ringoid(pi, pi_ring, name=None):
    """R pi for a pi-ring: Hom(a,b) is the free R_b-module on Hom(a,b)_pi,
    and composition twists coefficients through the action:
    (x g)(y h) = (x . g(y)) (g h)."""
    validate_pi_ring(pi_ring)
    objects = pi.objects
    homs = {}
    ring_of = {}
    for a in objects:
        for b in objects:
            rb = pi_ring.ring(b)
            bo = rb.objects[0]
            bg = rb.hom(bo, bo)
            ring_of[(a, b)] = (rb, bo, bg)
            homs[(a, b)] = FinAbGroup(bg.moduli * len(pi.hom(a, b)))

    def place(a, b, mid, relem):
        rb, bo, bg = ring_of[(a, b)]
        rk = len(bg.moduli)
        hom = homs[(a, b)]
        out = [0] * len(hom.moduli)
        pos = pi.hom(a, b).index(mid) * rk
        for t, v in enumerate(relem):
            out[pos + t] = v
        return hom.reduce(out)

    table = {}
    for a in objects:
        for b in objects:
            for c in objects:
                rc, co, cg = ring_of[(b, c)]
                rb_, bo_, bg_ = ring_of[(a, b)]
                rows = []
                for gmid in pi.hom(b, c):
                    for i in range(len(cg.moduli)):
                        xi = cg.basis_element(i)
                        row = []
                        for hmid in pi.hom(a, b):
                            gh = pi.compose(gmid, hmid)
                            for j in range(len(bg_.moduli)):
                                yj = bg_.basis_element(j)
                                twisted = pi_ring.apply(gmid, yj)  # g(y) in R_c
                                coeff = rc.compose(co, co, co, xi, twisted)
                                row.append(place(a, c, gh, coeff))
                        rows.append(tuple(row))
                table[(a, b, c)] = tuple(rows)
    identities = {}
    for a in objects:
        ra, ao, ag = ring_of[(a, a)]
        identities[a] = place(a, a, pi.identity(a), ra.identity(ao))
    if name is None:
        name = "Rtw[%s]" % pi.name
    return FiniteRingoid(objects, homs, table, identities=identities, name=name)


# ---------------------------------------------------------------------------
# R pi  ~  Z pi (x) R, realized with finite coefficients.
# ---------------------------------------------------------------------------

class GroupRingTensorIso:
    __slots__ = ("source", "tensor_product", "theta", "exponent")

    def __init__(self, source, tensor_product, theta, exponent):
        self.source = source
        self.tensor_product = tensor_product
        self.theta = theta
        self.exponent = exponent


def group_ringoid_tensor_iso(pi, scalar):
    """theta: R pi -> (Z/N) pi (x)_Z R where N is the additive exponent of R
    (so N.R = 0 and the target agrees with Z pi (x)_Z R).  theta sends
    x_1 g_1 + ... + x_n g_n to g_1 (x) x_1 + ... + g_n (x) x_n."""
    source = group_ringoid(pi, scalar)
    ro = scalar.objects[0]
    rg = scalar.hom(ro, ro)
    rk = len(rg.moduli)
    exponent = 1
    for d in rg.moduli:
        exponent = lcm(exponent, d)
    zn_pi = group_ringoid(pi, cyclic_ring(exponent, scalar=False, name="Z/%d" % exponent))
    tp = tensor(zn_pi, scalar, name="Z%s[%s](x)%s" % (exponent, pi.name, scalar.name))
    target = tp.ringoid
    object_map = {a: (a, ro) for a in pi.objects}
    gen_images = {}
    for a in pi.objects:
        for b in pi.objects:
            mids = pi.hom(a, b)
            zn_hom = zn_pi.hom(a, b)
            imgs = []
            for mid_pos, mid in enumerate(mids):
                basis_g = tuple(1 if t == mid_pos else 0
                                for t in range(len(zn_hom.moduli)))
                for j in range(rk):
                    imgs.append(tp.pure((a, b), (ro, ro), basis_g,
                                        rg.basis_element(j)))
            gen_images[(a, b)] = tuple(imgs)
    theta = RingoidHom(source, target, object_map, gen_images, name="theta")
    return GroupRingTensorIso(source, tp, theta, exponent)


def hom_is_bijective_everywhere(f):
    """Certify a RingoidHom is bijective on every hom-group (enumerative)."""
    for a in f.source.objects:
        for b in f.source.objects:
            src = f.source.hom(a, b)
            tgt = f.target.hom(f.object_map[a], f.object_map[b])
            seen = set()
            for x in src.elements():
                y = f.apply(a, b, x)
                if y in seen:
                    return False
                seen.add(y)
            if len(seen) != tgt.order():
                return False
    return True

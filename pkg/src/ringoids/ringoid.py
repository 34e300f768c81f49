"""Finite ringoids and moduloids.

A finite ringoid is a category with finitely many objects whose hom-sets
are finite abelian groups and whose composition is bilinear.  Composition
is stored as structure constants on the generators of the hom-groups; by
bilinearity that determines everything, and every axiom check reduces to
an exhaustive check on generators.

A moduloid additionally carries a commutative unital scalar ring (itself
a one-object ringoid) acting on every hom-group.  "Topological" data is
always discrete here, so continuity conditions are vacuous and are not
represented.
"""

from __future__ import annotations

import itertools

from .abgroup import FinAbGroup

# Full multiplication tables are cached per object triple when the pair
# space is at most this large.
_PAIR_CACHE_LIMIT = 1 << 16


class StructuralError(Exception):
    """Malformed structure data (bad index, wrong arity) as opposed to a
    violated ringoid axiom."""


class AxiomFailure:
    """A single violated axiom with a witnessing tuple of generators."""

    __slots__ = ("axiom", "location", "witness", "detail")

    def __init__(self, axiom, location, witness, detail=""):
        self.axiom = axiom
        self.location = location
        self.witness = witness
        self.detail = detail

    def __repr__(self):
        return "AxiomFailure(%s at %r, witness %r%s)" % (
            self.axiom, self.location, self.witness,
            ": " + self.detail if self.detail else "")


class ValidationReport:
    __slots__ = ("failures",)

    def __init__(self, failures=()):
        self.failures = list(failures)

    @property
    def ok(self):
        return not self.failures

    def axioms_violated(self):
        out = []
        for f in self.failures:
            if f.axiom not in out:
                out.append(f.axiom)
        return out

    def __repr__(self):
        if self.ok:
            return "ValidationReport(clean)"
        return "ValidationReport(%d failures: %s)" % (
            len(self.failures), ", ".join(self.axioms_violated()))


class FiniteRingoid:
    """Objects, hom-groups, and bilinear composition by structure constants.

    compose_table[(a, b, c)][i][j] is the composite (gen i of Hom(b,c)) after
    (gen j of Hom(a,b)), an element of Hom(a,c).  Missing triples mean the
    zero composition.  action[(a, b)][r][x] is (scalar gen r) . (gen x).
    """

    __slots__ = ("name", "objects", "homs", "compose_table", "identities",
                 "scalar", "action", "unital", "_pair_mul")

    def __init__(self, objects, homs, compose_table, identities=None,
                 scalar=None, action=None, unital=None, name=""):
        self.name = name
        self.objects = tuple(objects)
        self.homs = dict(homs)
        self.compose_table = {
            key: tuple(tuple(tuple(img) for img in row) for row in table)
            for key, table in compose_table.items()}
        self.identities = dict(identities) if identities else None
        self.scalar = scalar
        self.action = ({key: tuple(tuple(tuple(img) for img in row) for row in table)
                        for key, table in action.items()} if action else None)
        self.unital = (self.identities is not None) if unital is None else unital
        self._pair_mul = {}

    # -- basic access -------------------------------------------------

    def hom(self, a, b):
        try:
            return self.homs[(a, b)]
        except KeyError:
            raise StructuralError("no hom-group declared for (%r, %r)" % (a, b))

    def zero(self, a, b):
        return self.hom(a, b).zero()

    def identity(self, a):
        if not self.unital or self.identities is None:
            raise StructuralError("ringoid %r is not unital" % (self.name,))
        return self.identities[a]

    def is_zero_ringoid(self):
        return all(g.is_trivial() for g in self.homs.values())

    # -- composition and scalar action ---------------------------------

    def compose(self, a, b, c, y, x):
        """Composite y . x for y in Hom(b,c), x in Hom(a,b)."""
        mul = self._pair_mul.get((a, b, c))
        if mul is None:
            mul = self._build_pair_mul(a, b, c)
        if mul is not False:
            return mul[(y, x)]
        return self._compose_raw(a, b, c, y, x)

    def _build_pair_mul(self, a, b, c):
        hbc, hab = self.hom(b, c), self.hom(a, b)
        if hbc.order() * hab.order() > _PAIR_CACHE_LIMIT:
            self._pair_mul[(a, b, c)] = False
            return False
        table = {}
        for y in hbc.elements():
            for x in hab.elements():
                table[(y, x)] = self._compose_raw(a, b, c, y, x)
        self._pair_mul[(a, b, c)] = table
        return table

    def _compose_raw(self, a, b, c, y, x):
        hac = self.hom(a, c)
        sc = self.compose_table.get((a, b, c))
        if sc is None:
            return hac.zero()
        moduli = hac.moduli
        acc = [0] * len(moduli)
        for i, yi in enumerate(y):
            if not yi:
                continue
            row = sc[i]
            for j, xj in enumerate(x):
                if not xj:
                    continue
                k = yi * xj
                img = row[j]
                for t in range(len(acc)):
                    acc[t] += k * img[t]
        return tuple(v % d for v, d in zip(acc, moduli))

    def act(self, a, b, r, x):
        """Scalar action r . x for r in the scalar ring, x in Hom(a,b)."""
        if self.scalar is None:
            raise StructuralError("ringoid %r has no scalar ring" % (self.name,))
        hom = self.hom(a, b)
        table = self.action.get((a, b)) if self.action else None
        if table is None:
            return hom.zero()
        moduli = hom.moduli
        acc = [0] * len(moduli)
        for i, ri in enumerate(r):
            if not ri:
                continue
            row = table[i]
            for j, xj in enumerate(x):
                if not xj:
                    continue
                k = ri * xj
                img = row[j]
                for t in range(len(acc)):
                    acc[t] += k * img[t]
        return tuple(v % d for v, d in zip(acc, moduli))

    def __repr__(self):
        return "FiniteRingoid(%r, %d objects)" % (self.name, len(self.objects))


# ---------------------------------------------------------------------------
# Structural well-formedness (raises) and axiom validation (reports).
# ---------------------------------------------------------------------------

def _check_structure(r):
    for a in r.objects:
        for b in r.objects:
            if (a, b) not in r.homs:
                raise StructuralError("missing hom-group (%r, %r)" % (a, b))
    for (a, b, c), table in r.compose_table.items():
        for o in (a, b, c):
            if o not in r.objects:
                raise StructuralError("compose table names unknown object %r" % (o,))
        hbc, hab, hac = r.hom(b, c), r.hom(a, b), r.hom(a, c)
        if len(table) != len(hbc.moduli):
            raise StructuralError("compose table (%r,%r,%r) has wrong height" % (a, b, c))
        for row in table:
            if len(row) != len(hab.moduli):
                raise StructuralError("compose table (%r,%r,%r) has wrong width" % (a, b, c))
            for img in row:
                if len(img) != len(hac.moduli) or not hac.contains(hac.reduce(img)):
                    raise StructuralError(
                        "structure constant out of range in (%r,%r,%r)" % (a, b, c))
                if img != hac.reduce(img):
                    raise StructuralError(
                        "unreduced structure constant in (%r,%r,%r)" % (a, b, c))
    if r.unital:
        if r.identities is None:
            raise StructuralError("unital ringoid without identity table")
        for a in r.objects:
            if a not in r.identities:
                raise StructuralError("missing identity at %r" % (a,))
            if not r.hom(a, a).contains(r.identities[a]):
                raise StructuralError("identity at %r out of range" % (a,))
    if r.scalar is not None:
        if len(r.scalar.objects) != 1:
            raise StructuralError("scalar ring must have exactly one object")
        ro = r.scalar.objects[0]
        rg = r.scalar.hom(ro, ro)
        for a in r.objects:
            for b in r.objects:
                table = (r.action or {}).get((a, b))
                hom = r.hom(a, b)
                if table is None:
                    if not hom.is_trivial():
                        raise StructuralError("missing action table for (%r, %r)" % (a, b))
                    continue
                if len(table) != len(rg.moduli):
                    raise StructuralError("action table (%r,%r) has wrong height" % (a, b))
                for row in table:
                    if len(row) != len(hom.moduli):
                        raise StructuralError("action table (%r,%r) has wrong width" % (a, b))
                    for img in row:
                        if len(img) != len(hom.moduli) or img != hom.reduce(img):
                            raise StructuralError(
                                "action constant out of range in (%r,%r)" % (a, b))


def _gens(hom):
    return [(i, hom.basis_element(i), hom.moduli[i])
            for i in range(len(hom.moduli)) if hom.moduli[i] > 1]


def validate(r):
    """Exhaustive generator-level axiom check.

    Accepts exactly the structures whose bilinear extension satisfies every
    ringoid (and, when a scalar ring is present, moduloid) axiom.  Returns a
    report listing each violated axiom with a witness; raises StructuralError
    on malformed data.
    """
    _check_structure(r)
    failures = []

    # bilinear well-definedness: the order of each generator kills its products
    for a in r.objects:
        for b in r.objects:
            for c in r.objects:
                hbc, hab, hac = r.hom(b, c), r.hom(a, b), r.hom(a, c)
                for i, y, dy in _gens(hbc):
                    for j, x, dx in _gens(hab):
                        img = r.compose(a, b, c, y, x)
                        if hac.smul(dy, img) != hac.zero() or hac.smul(dx, img) != hac.zero():
                            failures.append(AxiomFailure(
                                "bilinearity", (a, b, c), (i, j),
                                "generator orders do not kill the product"))

    # associativity on generator triples
    for a in r.objects:
        for b in r.objects:
            for c in r.objects:
                for d in r.objects:
                    hcd, hbc, hab = r.hom(c, d), r.hom(b, c), r.hom(a, b)
                    for _, z, _dz in _gens(hcd):
                        for _, y, _dy in _gens(hbc):
                            zy = r.compose(b, c, d, z, y)
                            for _, x, _dx in _gens(hab):
                                yx = r.compose(a, b, c, y, x)
                                if r.compose(a, b, d, zy, x) != r.compose(a, c, d, z, yx):
                                    failures.append(AxiomFailure(
                                        "associativity", (a, b, c, d), (z, y, x)))

    # identity laws
    if r.unital:
        for a in r.objects:
            for b in r.objects:
                hab = r.hom(a, b)
                ea, eb = r.identities[a], r.identities[b]
                for _, x, _d in _gens(hab):
                    if r.compose(a, b, b, eb, x) != x:
                        failures.append(AxiomFailure("left identity", (a, b), x))
                    if r.compose(a, a, b, x, ea) != x:
                        failures.append(AxiomFailure("right identity", (a, b), x))

    # scalar ring and moduloid axioms
    if r.scalar is not None:
        s = r.scalar
        sub = validate(s)
        for f in sub.failures:
            failures.append(AxiomFailure("scalar ring " + f.axiom, f.location, f.witness))
        if not s.unital:
            failures.append(AxiomFailure("scalar unital", (), ()))
        ro = s.objects[0]
        rg = s.hom(ro, ro)
        for _, x, _d in _gens(rg):
            for _, y, _e in _gens(rg):
                if s.compose(ro, ro, ro, x, y) != s.compose(ro, ro, ro, y, x):
                    failures.append(AxiomFailure("scalar commutativity", (ro,), (x, y)))
        one = s.identities[ro] if s.unital else None
        for a in r.objects:
            for b in r.objects:
                hab = r.hom(a, b)
                for i, x, dx in _gens(hab):
                    for k, rr, dr in _gens(rg):
                        img = r.act(a, b, rr, x)
                        if hab.smul(dr, img) != hab.zero() or hab.smul(dx, img) != hab.zero():
                            failures.append(AxiomFailure(
                                "action bilinearity", (a, b), (k, i)))
                    if one is not None and r.act(a, b, one, x) != x:
                        failures.append(AxiomFailure("action unit", (a, b), x))
                    for _, r1, _d1 in _gens(rg):
                        for _, r2, _d2 in _gens(rg):
                            r12 = s.compose(ro, ro, ro, r1, r2)
                            if r.act(a, b, r12, x) != r.act(a, b, r1, r.act(a, b, r2, x)):
                                failures.append(AxiomFailure(
                                    "action associativity", (a, b), (r1, r2, x)))
        # r(yx) = (ry)x and r(yx) = y(rx) on generators; the second equation
        # is what makes composition balanced for tensor products.
        for a in r.objects:
            for b in r.objects:
                for c in r.objects:
                    hbc, hab = r.hom(b, c), r.hom(a, b)
                    for _, rr, _dr in _gens(rg):
                        for _, y, _dy in _gens(hbc):
                            ry = r.act(b, c, rr, y)
                            for _, x, _dx in _gens(hab):
                                yx = r.compose(a, b, c, y, x)
                                left = r.act(a, c, rr, yx)
                                if left != r.compose(a, b, c, ry, x):
                                    failures.append(AxiomFailure(
                                        "moduloid r(yx)=(ry)x", (a, b, c), (rr, y, x)))
                                if left != r.compose(a, b, c, y, r.act(a, b, rr, x)):
                                    failures.append(AxiomFailure(
                                        "moduloid r(yx)=y(rx)", (a, b, c), (rr, y, x)))
    return ValidationReport(failures)


# ---------------------------------------------------------------------------
# Homomorphisms.
# ---------------------------------------------------------------------------

class RingoidHom:
    """Additive functor between finite ringoids, stored as an object map
    plus the image of each hom-group generator."""

    __slots__ = ("source", "target", "object_map", "gen_images", "name")

    def __init__(self, source, target, object_map, gen_images, name=""):
        self.source = source
        self.target = target
        self.object_map = dict(object_map)
        self.gen_images = {key: tuple(tuple(img) for img in imgs)
                           for key, imgs in gen_images.items()}
        self.name = name

    def apply_object(self, a):
        return self.object_map[a]

    def apply(self, a, b, x):
        """Image of x in Hom(Fa, Fb), by additive extension."""
        fa, fb = self.object_map[a], self.object_map[b]
        tgt = self.target.hom(fa, fb)
        imgs = self.gen_images.get((a, b))
        if imgs is None:
            return tgt.zero()
        acc = [0] * len(tgt.moduli)
        for j, xj in enumerate(x):
            if not xj:
                continue
            img = imgs[j]
            for t in range(len(acc)):
                acc[t] += xj * img[t]
        return tuple(v % d for v, d in zip(acc, tgt.moduli))

    def compose_with(self, other):
        """self after other (other applies first)."""
        if other.target is not self.source:
            raise StructuralError("homomorphisms do not compose")
        object_map = {a: self.object_map[fa] for a, fa in other.object_map.items()}
        gen_images = {}
        for a in other.source.objects:
            for b in other.source.objects:
                hom = other.source.hom(a, b)
                fa, fb = other.object_map[a], other.object_map[b]
                gen_images[(a, b)] = tuple(
                    self.apply(fa, fb, other.apply(a, b, hom.basis_element(j)))
                    for j in range(len(hom.moduli)))
        return RingoidHom(other.source, self.target, object_map, gen_images)

    def __repr__(self):
        return "RingoidHom(%r)" % (self.name,)


def identity_hom(r):
    gen_images = {}
    for a in r.objects:
        for b in r.objects:
            hom = r.hom(a, b)
            gen_images[(a, b)] = tuple(hom.basis_element(j)
                                       for j in range(len(hom.moduli)))
    return RingoidHom(r, r, {a: a for a in r.objects}, gen_images, name="id")


def validate_hom(f):
    """Check additivity, multiplicativity on generator pairs, and unit
    preservation (when both sides are unital).  Structural problems raise."""
    src, tgt = f.source, f.target
    for a in src.objects:
        if a not in f.object_map or f.object_map[a] not in tgt.objects:
            raise StructuralError("object map does not land in the target")
    failures = []
    for a in src.objects:
        for b in src.objects:
            hom = src.hom(a, b)
            fa, fb = f.object_map[a], f.object_map[b]
            th = tgt.hom(fa, fb)
            imgs = f.gen_images.get((a, b))
            if imgs is None:
                if not hom.is_trivial():
                    raise StructuralError("missing generator images for (%r,%r)" % (a, b))
                continue
            if len(imgs) != len(hom.moduli):
                raise StructuralError("generator image arity mismatch at (%r,%r)" % (a, b))
            for j in range(len(hom.moduli)):
                img = imgs[j]
                if len(img) != len(th.moduli) or img != th.reduce(img):
                    raise StructuralError("generator image out of range at (%r,%r)" % (a, b))
                # additive well-definedness: order of the generator kills the image
                if th.smul(hom.moduli[j], img) != th.zero():
                    failures.append(AxiomFailure("additivity", (a, b), j))
    for a in src.objects:
        for b in src.objects:
            for c in src.objects:
                hbc, hab = src.hom(b, c), src.hom(a, b)
                fa, fb, fc = f.object_map[a], f.object_map[b], f.object_map[c]
                for _, y, _dy in _gens(hbc):
                    fy = f.apply(b, c, y)
                    for _, x, _dx in _gens(hab):
                        lhs = f.apply(a, c, src.compose(a, b, c, y, x))
                        rhs = tgt.compose(fa, fb, fc, fy, f.apply(a, b, x))
                        if lhs != rhs:
                            failures.append(AxiomFailure(
                                "multiplicativity", (a, b, c), (y, x)))
    if src.unital and tgt.unital:
        for a in src.objects:
            if f.apply(a, a, src.identity(a)) != tgt.identity(f.object_map[a]):
                failures.append(AxiomFailure("unit preservation", (a,), src.identity(a)))
    return ValidationReport(failures)


# ---------------------------------------------------------------------------
# Builders.
# ---------------------------------------------------------------------------

def one_object_ringoid(moduli, products, identity=None, name="", obj="*"):
    """Ring presented on one object: products[i][j] is generator_i * generator_j
    (note: i is applied second, matching compose(y, x))."""
    hom = FinAbGroup(moduli)
    table = {(obj, obj, obj): tuple(tuple(hom.reduce(img) for img in row)
                                    for row in products)}
    identities = {obj: hom.reduce(identity)} if identity is not None else None
    return FiniteRingoid((obj,), {(obj, obj): hom}, table,
                         identities=identities, name=name)


def with_self_scalar(ring):
    """A one-object commutative unital ring acting on itself by multiplication."""
    if len(ring.objects) != 1:
        raise StructuralError("self-scalar needs a one-object ringoid")
    obj = ring.objects[0]
    scalar = FiniteRingoid(ring.objects, ring.homs, ring.compose_table,
                           identities=ring.identities, name=ring.name)
    action = {(obj, obj): ring.compose_table.get((obj, obj, obj),
                                                 _zero_table(ring.hom(obj, obj)))}
    return FiniteRingoid(ring.objects, ring.homs, ring.compose_table,
                         identities=ring.identities, scalar=scalar,
                         action=action, name=ring.name)


def _zero_table(hom):
    k = len(hom.moduli)
    return tuple(tuple(hom.zero() for _ in range(k)) for _ in range(k))


def cyclic_ring(n, name=None, scalar=True):
    """Z/n as a one-object ringoid (n = 1 gives the zero ring)."""
    if name is None:
        name = "Z/%d" % n
    hom = FinAbGroup((n,))
    one = hom.reduce((1,))
    ring = one_object_ringoid((n,), ((one,),), identity=one, name=name)
    return with_self_scalar(ring) if scalar else ring


def zero_ring(name="0"):
    return cyclic_ring(1, name=name)


def product_ring(r1, r2, name=None, scalar=False):
    """Componentwise product of two one-object rings."""
    if len(r1.objects) != 1 or len(r2.objects) != 1:
        raise StructuralError("product_ring needs one-object ringoids")
    o1, o2 = r1.objects[0], r2.objects[0]
    h1, h2 = r1.hom(o1, o1), r2.hom(o2, o2)
    k1, k2 = len(h1.moduli), len(h2.moduli)
    hom = FinAbGroup(h1.moduli + h2.moduli)

    def pad1(v):
        return tuple(v) + (0,) * k2

    def pad2(v):
        return (0,) * k1 + tuple(v)

    products = []
    for i in range(k1 + k2):
        row = []
        for j in range(k1 + k2):
            if i < k1 and j < k1:
                row.append(pad1(r1.compose(o1, o1, o1, h1.basis_element(i),
                                           h1.basis_element(j))))
            elif i >= k1 and j >= k1:
                row.append(pad2(r2.compose(o2, o2, o2, h2.basis_element(i - k1),
                                           h2.basis_element(j - k1))))
            else:
                row.append(hom.zero())
        products.append(tuple(row))
    ident = None
    if r1.unital and r2.unital:
        ident = tuple(r1.identity(o1)) + tuple(r2.identity(o2))
    if name is None:
        name = "%sx%s" % (r1.name, r2.name)
    ring = one_object_ringoid(hom.moduli, products, identity=ident, name=name)
    return with_self_scalar(ring) if scalar else ring


def matrix_ring(base, n, name=None):
    """n x n matrices over a one-object ring, as a one-object ringoid."""
    if len(base.objects) != 1:
        raise StructuralError("matrix_ring needs a one-object base")
    o = base.objects[0]
    h = base.hom(o, o)
    k = len(h.moduli)
    slots = [(p, q, t) for p in range(n) for q in range(n) for t in range(k)]
    moduli = tuple(h.moduli[t] for (_, _, t) in slots)
    hom = FinAbGroup(moduli)

    def put(p, q, elem, acc):
        for t, val in enumerate(elem):
            acc[(p * n + q) * k + t] = (acc[(p * n + q) * k + t] + val) % moduli[(p * n + q) * k + t]

    products = []
    for (p1, q1, t1) in slots:
        row = []
        for (p2, q2, t2) in slots:
            acc = [0] * len(slots)
            if q1 == p2:  # E_{p1 q1} . E_{p2 q2} lands at (p1, q2)
                prod = base.compose(o, o, o, h.basis_element(t1), h.basis_element(t2))
                put(p1, q2, prod, acc)
            row.append(tuple(acc))
        products.append(tuple(row))
    ident = None
    if base.unital:
        acc = [0] * len(slots)
        for p in range(n):
            put(p, p, base.identity(o), acc)
        ident = tuple(acc)
    if name is None:
        name = "M%d(%s)" % (n, base.name)
    return one_object_ringoid(moduli, products, identity=ident, name=name)


def direct_sum(r1, r2, name=""):
    """Direct sum of two moduloids on the same object set: hom-groups are
    direct sums, composition and action are componentwise."""
    if tuple(r1.objects) != tuple(r2.objects):
        raise StructuralError("direct sum needs identical object lists")
    objects = r1.objects
    homs = {}
    table = {}
    for a in objects:
        for b in objects:
            homs[(a, b)] = FinAbGroup(r1.hom(a, b).moduli + r2.hom(a, b).moduli)
    for a in objects:
        for b in objects:
            for c in objects:
                h1bc, h1ab, h1ac = r1.hom(b, c), r1.hom(a, b), r1.hom(a, c)
                h2bc, h2ab, h2ac = r2.hom(b, c), r2.hom(a, b), r2.hom(a, c)
                k1bc, k1ab = len(h1bc.moduli), len(h1ab.moduli)
                rows = []
                for i in range(k1bc + len(h2bc.moduli)):
                    row = []
                    for j in range(k1ab + len(h2ab.moduli)):
                        if i < k1bc and j < k1ab:
                            img = r1.compose(a, b, c, h1bc.basis_element(i),
                                             h1ab.basis_element(j))
                            row.append(tuple(img) + h2ac.zero())
                        elif i >= k1bc and j >= k1ab:
                            img = r2.compose(a, b, c, h2bc.basis_element(i - k1bc),
                                             h2ab.basis_element(j - k1ab))
                            row.append(h1ac.zero() + tuple(img))
                        else:
                            row.append(homs[(a, c)].zero())
                    rows.append(tuple(row))
                table[(a, b, c)] = tuple(rows)
    identities = None
    if r1.unital and r2.unital:
        identities = {a: tuple(r1.identity(a)) + tuple(r2.identity(a))
                      for a in objects}
    scalar = None
    action = None
    if r1.scalar is not None and r2.scalar is not None:
        scalar = r1.scalar
        ro = scalar.objects[0]
        rk = len(scalar.hom(ro, ro).moduli)
        action = {}
        for a in objects:
            for b in objects:
                h1, h2 = r1.hom(a, b), r2.hom(a, b)
                rows = []
                for i in range(rk):
                    rgen = scalar.hom(ro, ro).basis_element(i)
                    row = []
                    for j in range(len(h1.moduli)):
                        row.append(tuple(r1.act(a, b, rgen, h1.basis_element(j)))
                                   + h2.zero())
                    for j in range(len(h2.moduli)):
                        row.append(h1.zero()
                                   + tuple(r2.act(a, b, rgen, h2.basis_element(j))))
                    rows.append(tuple(row))
                action[(a, b)] = tuple(rows)
    return FiniteRingoid(objects, homs, table, identities=identities,
                         scalar=scalar, action=action, name=name)


def zero_moduloid(objects, scalar, name="0-moduloid"):
    """Non-unital moduloid over the given ring with every hom-group trivial."""
    from .abgroup import TRIVIAL_GROUP
    objects = tuple(objects)
    homs = {(a, b): TRIVIAL_GROUP for a in objects for b in objects}
    return FiniteRingoid(objects, homs, {}, identities=None, scalar=scalar,
                         action={}, unital=False, name=name)


def forget_units(r, name=None):
    """The same moduloid viewed non-unitally (identity table dropped)."""
    return FiniteRingoid(r.objects, r.homs, r.compose_table, identities=None,
                         scalar=r.scalar, action=r.action, unital=False,
                         name=name if name is not None else r.name)


def ringoid_equal_structure(r1, r2):
    """Literal structural equality of objects, hom moduli, composition,
    identities; ignores names and scalar data."""
    if tuple(r1.objects) != tuple(r2.objects):
        return False
    for key in set(r1.homs) | set(r2.homs):
        if r1.homs.get(key) != r2.homs.get(key):
            return False
    keys = set(r1.compose_table) | set(r2.compose_table)
    for key in keys:
        a, b, c = key
        t1 = r1.compose_table.get(key)
        t2 = r2.compose_table.get(key)
        if t1 is None:
            t1 = _zero_key_table(r1, a, b, c)
        if t2 is None:
            t2 = _zero_key_table(r2, a, b, c)
        if t1 != t2:
            return False
    if r1.unital != r2.unital:
        return False
    if r1.unital and r1.identities != r2.identities:
        return False
    return True


def _zero_key_table(r, a, b, c):
    hbc, hab, hac = r.hom(b, c), r.hom(a, b), r.hom(a, c)
    return tuple(tuple(hac.zero() for _ in range(len(hab.moduli)))
                 for _ in range(len(hbc.moduli)))

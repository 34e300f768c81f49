"""Bounded K-theory invariants.

K0 is the Grothendieck completion of the bounded iso-class monoid of the
additive completion; the reported group carries an honest-bound contract
(the true K0 is a quotient of it, since isomorphisms are only discovered,
never revoked).  Relative K0 for non-unital moduloids is the kernel, in
degree zero, of the split surjection induced by the unitization projection,
computed on bounded idempotent classes so that the splitting is visible.
K1 is reported per rank as GL_n abelianizations with stabilization maps.
"""

from __future__ import annotations

import itertools

from .additive import (AdditiveView, DEFAULT_CEILING, IsoWitness, MatMorphism,
                       Undecided, complete, enumerate_objsums, iso_class_table)
from .groups import FinGroup, abelianization
from .intlinalg import (AbPresentation, hom_is_isomorphism, hom_is_surjective,
                        hom_is_injective, hom_kernel_lattice, hom_well_defined,
                        kernel_presentation, lattice_basis, lattice_contains,
                        lattices_equal, solve_row_combination)
from .moduloids import scalar_ringoid, unitize, unitization_projection
from .ringoid import RingoidHom, StructuralError


class CeilingExceeded(Exception):
    """An enumeration was abandoned because its size exceeds the ceiling."""

    def __init__(self, message, size=None, ceiling=None):
        super().__init__(message)
        self.size = size
        self.ceiling = ceiling


# ---------------------------------------------------------------------------
# Absolute bounded K0.
# ---------------------------------------------------------------------------

class KZeroResult:
    """Bounded K0: presentation on the base objects, one relation per
    discovered isomorphism of formal sums within the bound."""

    __slots__ = ("bound", "presentation", "gen_labels", "gen_reps",
                 "stabilized", "stabilized_since", "undecided", "table",
                 "per_bound")

    def __init__(self, bound, presentation, gen_labels, gen_reps, stabilized,
                 stabilized_since, undecided, table, per_bound):
        self.bound = bound
        self.presentation = presentation
        self.gen_labels = tuple(gen_labels)
        self.gen_reps = tuple(gen_reps)
        self.stabilized = stabilized
        self.stabilized_since = stabilized_since
        self.undecided = undecided
        self.table = table
        self.per_bound = per_bound

    def __repr__(self):
        return "KZeroResult(%s at L=%d%s)" % (
            self.presentation, self.bound,
            ", stabilized at L=%d" % self.stabilized_since
            if self.stabilized_since else ", not stabilized")


def count_vector(objsum, objects):
    vec = [0] * len(objects)
    for a in objsum:
        vec[objects.index(a)] += 1
    return vec


def k0_bounded(r, bound, ceiling=DEFAULT_CEILING, view=None, table=None):
    if not r.unital:
        raise StructuralError("absolute K0 needs a unital ringoid")
    if view is None:
        view = complete(r)
    if table is None:
        table = iso_class_table(view, bound, ceiling=ceiling)
    objects = list(r.objects)
    relation_info = []
    for s, cls in table.class_of.items():
        rep = table.reps[cls]
        if s == rep:
            continue
        row = [x - y for x, y in zip(count_vector(s, objects),
                                     count_vector(rep, objects))]
        relation_info.append((len(s), row))
    per_bound = {}
    for l in range(bound + 1):
        rows = [row for (mlen, row) in relation_info if mlen <= l]
        per_bound[l] = AbPresentation(len(objects), rows)
    stabilized = bound >= 1 and per_bound[bound] == per_bound[bound - 1]
    stabilized_since = None
    for l in range(2, bound + 1):
        if all(per_bound[j] == per_bound[l - 1] for j in range(l, bound + 1)):
            stabilized_since = l
            break
    gen_reps = [table.reps[table.class_of[(a,)]] for a in objects]
    return KZeroResult(bound, per_bound[bound], [str(a) for a in objects],
                       gen_reps, stabilized, stabilized_since,
                       table.undecided, table, per_bound)


class InducedMap:
    """Degree-zero functoriality: the matrix [a] -> [F(a)] on generators,
    checked against both relation lattices."""

    __slots__ = ("source", "target", "matrix", "well_defined", "failing_relation")

    def __init__(self, source, target, matrix, well_defined, failing_relation):
        self.source = source
        self.target = target
        self.matrix = tuple(tuple(row) for row in matrix)
        self.well_defined = well_defined
        self.failing_relation = failing_relation

    def apply(self, vec):
        n = len(self.matrix[0]) if self.matrix else 0
        out = [0] * n
        for i, c in enumerate(vec):
            if c:
                for j in range(n):
                    out[j] += c * self.matrix[i][j]
        return out

    def is_isomorphism(self):
        return self.well_defined and hom_is_isomorphism(
            self.source.presentation.relations, self.target.presentation.relations,
            self.matrix, len(self.matrix), len(self.matrix[0]) if self.matrix else 0)


def k0_induced(f, source_result, target_result):
    """Induced map on bounded K0 along a ringoid homomorphism.  A relation
    that fails to transport is reported as a bound artifact, not raised."""
    src_objects = list(f.source.objects)
    tgt_objects = list(f.target.objects)
    matrix = []
    for a in src_objects:
        row = [0] * len(tgt_objects)
        row[tgt_objects.index(f.object_map[a])] = 1
        matrix.append(row)
    ok, bad = hom_well_defined(source_result.presentation.relations,
                               target_result.presentation.relations,
                               matrix, len(tgt_objects))
    return InducedMap(source_result, target_result, matrix, ok, bad)


# ---------------------------------------------------------------------------
# Bounded idempotent classes (the projective shadow used by relative K0).
# ---------------------------------------------------------------------------

class IdemClasses:
    """Certified classes of idempotent endomorphisms of single objects,
    with relations [p] + [q] = [p + q] for orthogonal pairs (witnessed by
    an explicit splitting, no search needed) and [0] = 0."""

    __slots__ = ("ringoid", "reps", "class_of", "relations", "presentation",
                 "undecided_pairs")

    def __init__(self, ringoid, reps, class_of, relations, undecided_pairs):
        self.ringoid = ringoid
        self.reps = tuple(reps)
        self.class_of = dict(class_of)
        self.relations = [list(r) for r in relations]
        self.presentation = AbPresentation(len(reps), relations)
        self.undecided_pairs = tuple(undecided_pairs)

    def label(self, idx):
        a, p = self.reps[idx]
        return "[%s@%s]" % ("+".join(str(c) for c in p) or "0", a)


def _idem_image_sizes(r, a, p):
    sizes = []
    for c in r.objects:
        hom = r.hom(c, a)
        sizes.append(len({r.compose(c, a, a, p, h) for h in hom.elements()}))
    return tuple(sizes)


def idem_classes(r, ceiling=DEFAULT_CEILING):
    """Classify the idempotents of every End(a), a a single object."""
    idems = []
    for a in r.objects:
        hom = r.hom(a, a)
        for p in hom.elements():
            if r.compose(a, a, a, p, p) == p:
                idems.append((a, p))
    reps = []
    class_of = {}
    invariants = []
    undecided_pairs = []
    for (a, p) in idems:
        inv = _idem_image_sizes(r, a, p)
        assigned = None
        for idx, (b, q) in enumerate(reps):
            if invariants[idx] != inv:
                continue
            res = _idem_equivalent(r, a, p, b, q, ceiling)
            if res is True:
                assigned = idx
                break
            if isinstance(res, Undecided):
                undecided_pairs.append(((a, p), (b, q)))
        if assigned is None:
            assigned = len(reps)
            reps.append((a, p))
            invariants.append(inv)
        class_of[(a, p)] = assigned
    relations = []
    zero_cls = None
    for a in r.objects:
        hom = r.hom(a, a)
        zc = class_of.get((a, hom.zero()))
        if zc is not None:
            zero_cls = zc
            row = [0] * len(reps)
            row[zc] = 1
            relations.append(row)
            break
    for a in r.objects:
        hom = r.hom(a, a)
        local = [p for (b, p) in idems if b == a]
        for i, p in enumerate(local):
            for q in local[i:]:
                if (r.compose(a, a, a, p, q) == hom.zero()
                        and r.compose(a, a, a, q, p) == hom.zero()):
                    s = hom.add(p, q)
                    row = [0] * len(reps)
                    row[class_of[(a, p)]] += 1
                    row[class_of[(a, q)]] += 1
                    row[class_of[(a, s)]] -= 1
                    if any(row):
                        relations.append(row)
    if zero_cls is None and reps:
        pass  # no zero idempotent only when some End(a) is empty; impossible here
    return IdemClasses(r, reps, class_of, relations, undecided_pairs)


def _idem_equivalent(r, a, p, b, q, ceiling):
    """p in End(a) ~ q in End(b): search x in Hom(b,a), y in Hom(a,b) with
    x.y = p and y.x = q (then the images are isomorphic)."""
    hba, hab = r.hom(b, a), r.hom(a, b)
    size = hba.order() * hab.order()
    if size > ceiling:
        return Undecided(((a, p), (b, q)), size, ceiling)
    for x in hba.elements():
        for y in hab.elements():
            if (r.compose(a, b, a, x, y) == p
                    and r.compose(b, a, b, y, x) == q):
                return True
    return False


class RelativeKZeroResult:
    """Degree-zero relative K-theory of a non-unital moduloid: the kernel of
    K0(M+) -> K0(R_M) on bounded idempotent classes."""

    __slots__ = ("bound", "presentation", "gen_labels", "kernel_basis",
                 "idem_plus", "idem_scalar", "mplus", "rm", "projection",
                 "matrix", "undecided", "stabilized", "stabilized_since")

    def __init__(self, bound, presentation, gen_labels, kernel_basis, idem_plus,
                 idem_scalar, mplus, rm, projection, matrix, undecided):
        self.bound = bound
        self.presentation = presentation
        self.gen_labels = tuple(gen_labels)
        self.kernel_basis = [list(r) for r in kernel_basis]
        self.idem_plus = idem_plus
        self.idem_scalar = idem_scalar
        self.mplus = mplus
        self.rm = rm
        self.projection = projection
        self.matrix = [list(r) for r in matrix]
        self.undecided = undecided
        self.stabilized = True
        self.stabilized_since = min(2, bound) if bound >= 2 else None

    def __repr__(self):
        return "RelativeKZeroResult(%s at L=%d)" % (self.presentation, self.bound)


def k0_relative(m, bound, ceiling=DEFAULT_CEILING):
    """Kernel of the split surjection K0(M+) -> K0(R_M) in degree zero.

    The free iso-class monoid cannot see the splitting (M+ has the same
    objects as R_M), so both sides are computed on bounded idempotent
    classes; for unital m this recovers the absolute K0, which is the
    degree-zero content of the unitization corollary.
    """
    if m.unital:
        raise StructuralError("relative K0 expects a non-unital moduloid")
    if m.scalar is None:
        raise StructuralError("relative K0 needs a scalar ring")
    mplus = unitize(m)
    rm = scalar_ringoid(m.objects, m.scalar)
    projection = unitization_projection(m, mplus=mplus, rm=rm)
    icp = idem_classes(mplus, ceiling=ceiling)
    icr = idem_classes(rm, ceiling=ceiling)
    matrix = []
    for (a, p) in icp.reps:
        q = projection.apply(a, a, p)
        row = [0] * len(icr.reps)
        row[icr.class_of[(a, q)]] = 1
        matrix.append(row)
    pres, basis = kernel_presentation(icp.relations, icr.relations, matrix,
                                      len(icp.reps), len(icr.reps))
    labels = []
    for vec in basis:
        terms = []
        for i, c in enumerate(vec):
            if c:
                terms.append(("%+d" % c) + icp.label(i))
        labels.append("".join(terms) or "0")
    undecided = bool(icp.undecided_pairs or icr.undecided_pairs)
    return RelativeKZeroResult(bound, pres, labels, basis, icp, icr, mplus, rm,
                               projection, matrix, undecided)


# ---------------------------------------------------------------------------
# Cofinality (degree-zero shadow).
# ---------------------------------------------------------------------------

class CofinalityReport:
    __slots__ = ("sub_presentation", "ambient", "matrix", "is_isomorphism",
                 "cofinality_witnesses", "undecided")

    def __init__(self, sub_presentation, ambient, matrix, is_isomorphism,
                 cofinality_witnesses, undecided):
        self.sub_presentation = sub_presentation
        self.ambient = ambient
        self.matrix = matrix
        self.is_isomorphism = is_isomorphism
        self.cofinality_witnesses = cofinality_witnesses
        self.undecided = undecided


def cofinality_check(r, bound, ceiling=DEFAULT_CEILING):
    """K0 comparison for the strictly cofinal subcategory of sums of length
    at least 2.  Relations on the subcategory side are harvested from single
    objects and from pairs (2-tuples in its own completion): two pairs with
    the same flattening are isomorphic by the identity matrix, and
    flattenings within the ambient bound use the ambient classification."""
    ambient = k0_bounded(r, bound, ceiling=ceiling)
    table = ambient.table
    objects = list(r.objects)
    sub_objs = [s for s in enumerate_objsums(r.objects, bound) if len(s) >= 2]
    index = {s: i for i, s in enumerate(sub_objs)}
    n = len(sub_objs)

    def key_of(flat):
        if len(flat) <= bound:
            return ("class", table.class_of[flat])
        return ("flat", flat)

    buckets = {}

    def put(key, vec):
        buckets.setdefault(key, []).append(vec)

    for s in sub_objs:
        vec = [0] * n
        vec[index[s]] = 1
        put(key_of(s), vec)
    for i, s in enumerate(sub_objs):
        for t in sub_objs[i:]:
            vec = [0] * n
            vec[index[s]] += 1
            vec[index[t]] += 1
            put(key_of(s + t), vec)
    relations = []
    for key in buckets:
        pivot, *rest = buckets[key]
        for vec in rest:
            row = [a - b for a, b in zip(vec, pivot)]
            if any(row):
                relations.append(row)
    sub_pres = AbPresentation(n, relations)
    matrix = [count_vector(s, objects) for s in sub_objs]
    iso = hom_is_isomorphism(sub_pres.relations, ambient.presentation.relations,
                             matrix, n, len(objects))
    witnesses = []
    filler = sub_objs[0] if sub_objs else None
    for s in enumerate_objsums(r.objects, 1):
        if filler is not None and len(s + filler) <= bound:
            witnesses.append((s, filler, s + filler))
    return CofinalityReport(sub_pres, ambient, matrix, iso, witnesses,
                            ambient.undecided)


# ---------------------------------------------------------------------------
# The fibration theorem's degree-zero shadow.
# ---------------------------------------------------------------------------

class FibrationReport:
    __slots__ = ("k0_ideal", "k0_total", "k0_quotient", "inclusion_rows",
                 "quotient_map", "composite_zero", "exact", "undecided",
                 "unresolved_classes")

    def __init__(self, k0_ideal, k0_total, k0_quotient, inclusion_rows,
                 quotient_map, composite_zero, exact, undecided,
                 unresolved_classes):
        self.k0_ideal = k0_ideal
        self.k0_total = k0_total
        self.k0_quotient = k0_quotient
        self.inclusion_rows = inclusion_rows
        self.quotient_map = quotient_map
        self.composite_zero = composite_zero
        self.exact = exact
        self.undecided = undecided
        self.unresolved_classes = unresolved_classes


def free_class_of_idempotent(view, a, p, bound, ceiling=DEFAULT_CEILING):
    """The free class of an idempotent p in End(a): an ObjSum t with a
    certified splitting v.u = 1_t, u.v = p, or None if no such sum exists
    within the bound."""
    base = view.base
    hom = base.hom(a, a)
    if p == hom.zero():
        return ()
    if base.unital and p == base.identity(a):
        return (a,)
    pmat = MatMorphism((a,), (a,), [[p]])
    for t in enumerate_objsums(base.objects, bound):
        if not t:
            continue
        size = view.hom_order(t, (a,)) * view.hom_order((a,), t)
        if size > ceiling:
            continue
        one_t = view.identity(t)
        for u in view.hom_elements(t, (a,)):
            for v in view.hom_elements((a,), t):
                if view.compose(v, u) == one_t and view.compose(u, v) == pmat:
                    return t
    return None


def fibration_check(m, ideal, bound, ceiling=DEFAULT_CEILING):
    """Degree-zero exactness of K(J) -> K(M) -> K(M/J) for an ideal in a
    unital moduloid: composite zero and image = kernel at K0(M), exactly."""
    from .moduloids import ideal_moduloid, quotient

    if not m.unital:
        raise StructuralError("fibration check needs a unital moduloid")
    sub, incl = ideal_moduloid(ideal)
    rel = k0_relative(sub, bound, ceiling=ceiling)
    view = complete(m)
    k0m = k0_bounded(m, bound, ceiling=ceiling, view=view)
    quot, qhom = quotient(m, ideal)
    k0q = k0_bounded(quot, bound, ceiling=ceiling)
    jmap = k0_induced(qhom, k0m, k0q)

    # J+ -> M: (x + lambda) -> incl(x) + lambda . e_a  (m is unital)
    scalar = m.scalar
    ro = scalar.objects[0]
    rg = scalar.hom(ro, ro)
    rk = len(rg.moduli)
    gen_images = {}
    for a in m.objects:
        for b in m.objects:
            sub_hom = sub.hom(a, b)
            imgs = [incl.apply(a, b, sub_hom.basis_element(j))
                    for j in range(len(sub_hom.moduli))]
            if a == b:
                imgs += [m.act(a, a, rg.basis_element(i), m.identity(a))
                         for i in range(rk)]
            gen_images[(a, b)] = tuple(imgs)
    jplus_to_m = RingoidHom(rel.mplus, m, {a: a for a in m.objects}, gen_images,
                            name="J+ -> M")

    objects = list(m.objects)
    unresolved = []
    class_images = []
    for (a, p) in rel.idem_plus.reps:
        q = jplus_to_m.apply(a, a, p)
        t = free_class_of_idempotent(view, a, q, bound, ceiling=ceiling)
        if t is None:
            unresolved.append((a, p))
            class_images.append(None)
        else:
            class_images.append(count_vector(t, objects))
    inclusion_rows = []
    for vec in rel.kernel_basis:
        row = [0] * len(objects)
        resolved = True
        for i, c in enumerate(vec):
            if c:
                img = class_images[i]
                if img is None:
                    resolved = False
                    break
                for j in range(len(objects)):
                    row[j] += c * img[j]
        inclusion_rows.append(row if resolved else None)

    tgt_rel = k0q.presentation.relations
    composite_zero = True
    for row in inclusion_rows:
        if row is None:
            composite_zero = False
            continue
        image = jmap.apply(row)
        if not lattice_contains(list(tgt_rel), len(image), image):
            composite_zero = False
    # exactness at K0(M): image lattice of i_* equals kernel lattice of j_*
    lam_m = [list(r) for r in k0m.presentation.relations]
    image_rows = [row for row in inclusion_rows if row is not None] + lam_m
    kernel_rows = hom_kernel_lattice(k0m.presentation.relations, tgt_rel,
                                     jmap.matrix, len(objects),
                                     len(quot.objects))
    exact = (not unresolved
             and lattices_equal(image_rows, kernel_rows, len(objects)))
    undecided = rel.undecided or k0m.undecided or k0q.undecided
    return FibrationReport(rel, k0m, k0q, inclusion_rows, jmap,
                           composite_zero, exact, undecided, unresolved)


# ---------------------------------------------------------------------------
# GL and bounded K1.
# ---------------------------------------------------------------------------

def gl(view, s, ceiling=DEFAULT_CEILING):
    """The group of invertible endomorphisms of a formal sum, as a table.

    Every element of End(s) is tested: an endomorphism is invertible iff
    left composition with it is bijective on Hom((c), s) for every base
    object c (complete by additivity), and the group table then certifies
    closure and inverses."""
    s = tuple(s)
    if not view.has_identities:
        raise StructuralError("GL needs a unital base")
    n = view.hom_order(s, s)
    if n > ceiling:
        raise CeilingExceeded("|End| = %d exceeds the ceiling %d" % (n, ceiling),
                              size=n, ceiling=ceiling)
    invertibles = [u for u in view.hom_elements(s, s) if view.is_invertible(u)]
    index = {u: i for i, u in enumerate(invertibles)}
    table = []
    for u in invertibles:
        row = []
        for v in invertibles:
            w = view.compose(u, v)
            row.append(index[w])  # KeyError here would refute closure
        table.append(row)
    return FinGroup(invertibles, table)


class StabilizationStep:
    __slots__ = ("rank", "matrix", "is_isomorphism")

    def __init__(self, rank, matrix, is_isomorphism):
        self.rank = rank
        self.matrix = matrix
        self.is_isomorphism = is_isomorphism


class KOneResult:
    """Per-rank GL abelianizations with stabilization maps; a single group
    would misrepresent the limit (GL_3 over F2 already dips back to 0)."""

    __slots__ = ("ranks", "groups", "steps", "last_step_iso", "truncated_at")

    def __init__(self, ranks, groups, steps, last_step_iso, truncated_at):
        self.ranks = dict(ranks)
        self.groups = dict(groups)
        self.steps = list(steps)
        self.last_step_iso = last_step_iso
        self.truncated_at = truncated_at

    def __repr__(self):
        inner = ", ".join("GL%d^ab=%s" % (n, self.ranks[n])
                          for n in sorted(self.ranks))
        return "KOneResult(%s)" % inner


def stabilization_embedding(view, s, t):
    """j: GL(s) -> GL(s + t), x -> i_s x p_s + i_t p_t (a block-diagonal
    matrix extending by the identity)."""
    i_s, i_t, p_s, p_t = view.biproduct(s, t)

    def embed(x):
        return view.add(view.compose(view.compose(i_s, x), p_s),
                        view.compose(i_t, p_t))

    return embed


def k1_bounded(r, n_max, ceiling=DEFAULT_CEILING):
    """Abelianizations of GL_n for n <= n_max over a one-object unital base,
    with the induced stabilization maps."""
    if len(r.objects) != 1:
        raise StructuralError("bounded K1 is implemented for one-object bases")
    obj = r.objects[0]
    view = complete(r)
    groups = {}
    ranks = {}
    coords = {}
    truncated_at = None
    for n in range(1, n_max + 1):
        s = (obj,) * n
        try:
            g = gl(view, s, ceiling=ceiling)
        except CeilingExceeded:
            truncated_at = n
            break
        pres, elem_coords = abelianization(g)
        groups[n] = g
        ranks[n] = pres
        coords[n] = elem_coords
    steps = []
    avail = sorted(groups)
    for n in avail:
        if n + 1 not in groups:
            break
        s = (obj,) * n
        embed = stabilization_embedding(view, s, (obj,))
        gn, gn1 = groups[n], groups[n + 1]
        src_pres, tgt_pres = ranks[n], ranks[n + 1]
        matrix = []
        for rep in _coset_reps(gn, coords[n]):
            image = embed(gn.elements[rep])
            matrix.append(list(coords[n + 1][gn1.index(image)]))
        ok, _ = hom_well_defined(src_pres.relations, tgt_pres.relations, matrix,
                                 tgt_pres.generators)
        iso = ok and hom_is_isomorphism(src_pres.relations, tgt_pres.relations,
                                        matrix, src_pres.generators,
                                        tgt_pres.generators)
        steps.append(StabilizationStep(n, matrix, iso))
    last_step_iso = steps[-1].is_isomorphism if steps else None
    return KOneResult(ranks, groups, steps, last_step_iso, truncated_at)


def _coset_reps(group, elem_coords):
    """One group element per abelianization generator, in generator order."""
    k = len(elem_coords[0]) if elem_coords else 0
    reps = [None] * k
    for idx, vec in enumerate(elem_coords):
        pos = vec.index(1)
        if reps[pos] is None:
            reps[pos] = idx
    return reps


def determinant_of_matmorphism(r, f):
    """Leibniz determinant of a square matrix over a one-object commutative
    base; used only as a checkable property of the computed GL tables."""
    obj = r.objects[0]
    hom = r.hom(obj, obj)
    n = len(f.src)
    total = hom.zero()
    for perm in itertools.permutations(range(n)):
        sign = _perm_sign(perm)
        prod = r.identity(obj)
        for i in range(n):
            prod = r.compose(obj, obj, obj, prod, f.entries[i][perm[i]])
        total = hom.add(total, hom.smul(sign, prod))
    return total


def _perm_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def ring_units(r):
    """Unit group elements of a one-object ring, by exhaustive search."""
    obj = r.objects[0]
    hom = r.hom(obj, obj)
    one = r.identity(obj)
    units = []
    for u in hom.elements():
        for v in hom.elements():
            if (r.compose(obj, obj, obj, u, v) == one
                    and r.compose(obj, obj, obj, v, u) == one):
                units.append(u)
                break
    return units


# ---------------------------------------------------------------------------
# Exterior products.
# ---------------------------------------------------------------------------

class ExteriorProduct:
    """The degree-zero pairing K0(M) x K0(N) -> K0(M (x) N), on generators
    [a].[b] = [a (x) b]; bilinear by construction."""

    __slots__ = ("left", "right", "target", "pair_index", "well_defined",
                 "failing_side")

    def __init__(self, left, right, target, pair_index, well_defined,
                 failing_side):
        self.left = left
        self.right = right
        self.target = target
        self.pair_index = pair_index
        self.well_defined = well_defined
        self.failing_side = failing_side

    def pair(self, u, v):
        n = len(self.target.gen_labels)
        out = [0] * n
        for i, ci in enumerate(u):
            if not ci:
                continue
            for j, cj in enumerate(v):
                if cj:
                    out[self.pair_index[(i, j)]] += ci * cj
        return out


def exterior_product(left_result, right_result, tensor_prod, target_result):
    """Pairing for a tensor product built by moduloids.tensor, checked for
    well-definedness against all three relation lattices."""
    m = tensor_prod.left
    n = tensor_prod.right
    t = tensor_prod.ringoid
    t_objects = list(t.objects)
    pair_index = {}
    for i, a in enumerate(m.objects):
        for j, b in enumerate(n.objects):
            pair_index[(i, j)] = t_objects.index((a, b))
    n_tgt = len(t_objects)
    tgt_rel = list(target_result.presentation.relations)
    well = True
    failing = None
    for row in left_result.presentation.relations:
        for j in range(len(n.objects)):
            vec = [0] * n_tgt
            for i, c in enumerate(row):
                if c:
                    vec[pair_index[(i, j)]] += c
            if not lattice_contains(tgt_rel, n_tgt, vec):
                well, failing = False, ("left", row, j)
    for row in right_result.presentation.relations:
        for i in range(len(m.objects)):
            vec = [0] * n_tgt
            for j, c in enumerate(row):
                if c:
                    vec[pair_index[(i, j)]] += c
            if not lattice_contains(tgt_rel, n_tgt, vec):
                well, failing = False, ("right", i, row)
    return ExteriorProduct(left_result, right_result, target_result,
                           pair_index, well, failing)

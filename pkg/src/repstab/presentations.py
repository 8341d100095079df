"""Finitely presented contravariant functors on a family of p-groups.

An object is a list of representable generators e_G together with relation
columns; a relation column with source H is a formal rational combination
of surjections H -> G_i placed in the generator rows (the Yoneda
description of a map e_H -> sum e_{G_i}).  Evaluation at T is the cokernel
of the evaluated relation matrix, with basis labels (generator index,
surjection) surviving the first-independent convention of
:mod:`repstab.linalg`.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import config
from .errors import NotInFamily, NotSurjective
from .groups import (GroupType, make_morphism, identity_morphism,
                     enumerate_epis, count_epis, is_surjective,
                     quotient_exists, trivial_group, cyclic)
from .linalg import BasedSpace, QMatrix, StreamCoker
from .subgroups import enumerate_subgroups, quotient
from .families import Family


@dataclass(frozen=True)
class MorphismCombination:
    """Formal rational combination of surjections source -> target."""

    source: GroupType
    target: GroupType
    terms: tuple  # ((Morphism, Fraction), ...) sorted, zero coeffs pruned

    @classmethod
    def make(cls, source, target, terms):
        agg = {}
        for mor, coeff in (terms.items() if isinstance(terms, dict) else terms):
            if mor.source != source or mor.target != target:
                raise ValueError("term endpoints do not match the combination")
            if not is_surjective(mor):
                raise NotSurjective("combination keys must be surjections")
            c = agg.get(mor, Fraction(0)) + Fraction(coeff)
            agg[mor] = c
        items = tuple(sorted(((m, c) for m, c in agg.items() if c),
                             key=lambda t: t[0].sort_key()))
        return cls(source, target, items)

    def is_zero(self):
        return not self.terms


class PresentedObject:
    """Finitely presented object: generators plus relation columns."""

    def __init__(self, family, generators, rel_sources=(), columns=()):
        self.family = family
        self.generators = tuple(generators)
        self.rel_sources = tuple(rel_sources)
        self.columns = tuple(tuple(col) for col in columns)
        for g in self.generators:
            if not family.contains(g):
                raise NotInFamily(f"generator {g!r} outside {family!r}")
        for h in self.rel_sources:
            if not family.contains(h):
                raise NotInFamily(f"relation source {h!r} outside {family!r}")
        if len(self.columns) != len(self.rel_sources):
            raise ValueError("one column per relation source required")
        for h, col in zip(self.rel_sources, self.columns):
            if len(col) != len(self.generators):
                raise ValueError("column length must match generator count")
            for i, entry in enumerate(col):
                if entry is None:
                    continue
                if entry.source != h or entry.target != self.generators[i]:
                    raise ValueError("misaligned combination endpoints")
        self._evals = {}

    def content_key(self):
        cols = tuple(
            tuple((i, entry.terms) for i, entry in enumerate(col)
                  if entry is not None and entry.terms)
            for col in self.columns)
        return (self.family.key(), self.generators, self.rel_sources, cols)

    def __eq__(self, other):
        return (isinstance(other, PresentedObject)
                and self.content_key() == other.content_key())

    def __hash__(self):
        return hash(self.content_key())

    def __repr__(self):
        return (f"PresentedObject({self.family!r}, gens={len(self.generators)},"
                f" rels={len(self.rel_sources)})")


class EvalData:
    __slots__ = ("labels", "index", "coker", "space")

    def __init__(self, labels, index, coker, space):
        self.labels = labels
        self.index = index
        self.coker = coker
        self.space = space


def _eval_data(x, t, limit=None):
    if not x.family.contains(t):
        raise NotInFamily(f"{t!r} is not in {x.family!r}")
    got = x._evals.get(t)
    if got is not None:
        return got
    config.check_order(t.order, limit, what="evaluation")
    labels = []
    for i, g in enumerate(x.generators):
        for u in enumerate_epis(t, g):
            labels.append((i, u))
    index = {lab: k for k, lab in enumerate(labels)}
    coker = StreamCoker(len(labels))
    for j, h in enumerate(x.rel_sources):
        col_entries = x.columns[j]
        for beta in enumerate_epis(t, h):
            col = {}
            for i, entry in enumerate(col_entries):
                if entry is None:
                    continue
                for mor, coeff in entry.terms:
                    k = index[(i, mor @ beta)]
                    col[k] = col.get(k, Fraction(0)) + coeff
            col = {k: v for k, v in col.items() if v}
            if col:
                coker.offer(col)
    surv = coker.surviving()
    sp = BasedSpace(len(surv), tuple(labels[r] for r in surv))
    data = EvalData(labels, index, coker, sp)
    x._evals[t] = data
    return data


def evaluate(x, t, limit=None):
    """The value X(t) as a based space."""
    return _eval_data(x, t, limit).space


def evaluate_dim(x, t, limit=None):
    """dim X(t); avoids materializing surjection sets for free objects."""
    if not x.rel_sources:
        if not x.family.contains(t):
            raise NotInFamily(f"{t!r} is not in {x.family!r}")
        return sum(count_epis(t, g) for g in x.generators)
    return _eval_data(x, t, limit).space.dim


def structure_map(x, alpha, limit=None):
    """Matrix of the pullback X(target(alpha)) -> X(source(alpha))."""
    if not is_surjective(alpha):
        raise NotSurjective("structure maps exist along surjections only")
    src = _eval_data(x, alpha.target, limit)   # X evaluated at the target
    dst = _eval_data(x, alpha.source, limit)
    cols = []
    for (i, u) in src.space.labels:
        k = dst.index[(i, u @ alpha)]
        cols.append(dst.coker.project({k: Fraction(1)}))
    rows = tuple(tuple(cols[j][r] for j in range(len(cols)))
                 for r in range(dst.space.dim))
    return QMatrix(dst.space.dim, src.space.dim, rows)


def element_class(x, t, gen_index, epi):
    """Coordinates of the class of a presentation basis element [epi]."""
    data = _eval_data(x, t)
    return data.coker.project({data.index[(gen_index, epi)]: Fraction(1)})


def indecomposables_Q(x, g, limit=None):
    """Value of the indecomposables quotient at g.

    Quotient of X(g) by the images of the pullbacks along all projections
    from proper quotients.
    """
    data = _eval_data(x, g, limit)
    coker = StreamCoker(data.space.dim)
    for s in enumerate_subgroups(g, limit=limit):
        if s.order == 1:
            continue
        _qt, proj = quotient(g, s)
        mat = structure_map(x, proj, limit)
        for j in range(mat.cols):
            col = {i: mat.entries[i][j] for i in range(mat.rows)
                   if mat.entries[i][j]}
            if col:
                coker.offer(col)
    surv = coker.surviving()
    return BasedSpace(len(surv),
                      tuple(data.space.labels[r] for r in surv))


def filtration_L(x, n, g, limit=None):
    """The subspace of X(g) generated from values at groups of order <= n."""
    data = _eval_data(x, g, limit)
    coker = StreamCoker(data.space.dim)
    picked = []
    for h in x.family.members(max_order=n):
        if not quotient_exists(g, h):
            continue
        for alpha in enumerate_epis(g, h):
            mat = structure_map(x, alpha, limit)
            for j in range(mat.cols):
                col = {i: mat.entries[i][j] for i in range(mat.rows)
                       if mat.entries[i][j]}
                if col and coker.offer(col):
                    picked.append((h, alpha, j))
    return BasedSpace(len(picked), tuple(picked))


def base_and_support(x, bound, limit=None):
    """(base, support) scanned over family members of order <= bound.

    base is the least order with a nonzero value, or None when the object
    vanishes on the whole scanned range.
    """
    support = []
    base = None
    for g in x.family.members(max_order=bound):
        if evaluate_dim(x, g, limit):
            support.append(g)
            if base is None or g.order < base:
                base = g.order
    return base, support


# ---------------------------------------------------------------------------
# explicit functors and bounded presentations


class ExplicitFunctor:
    """A functor given by computable values and structure maps.

    `space_fn(T) -> BasedSpace` and `matrix_fn(alpha) -> QMatrix` (the
    matrix of the pullback X(target) -> X(source)).  An optional
    `push_fn(alpha, vec)` applies a single pullback without materializing
    the matrix; the heavy resolution machinery only ever pushes vectors.
    """

    def __init__(self, family, space_fn, matrix_fn, push_fn=None):
        self.family = family
        self._space_fn = space_fn
        self._matrix_fn = matrix_fn
        self._push_fn = push_fn
        self._spaces = {}
        self._mats = {}

    def space(self, t):
        got = self._spaces.get(t)
        if got is None:
            got = self._spaces[t] = self._space_fn(t)
        return got

    def matrix(self, alpha):
        key = alpha
        got = self._mats.get(key)
        if got is None:
            got = self._mats[key] = self._matrix_fn(alpha)
        return got

    def push(self, alpha, vec):
        """Image of a value-space vector under the pullback of alpha."""
        if self._push_fn is not None:
            return self._push_fn(alpha, vec)
        return self.matrix(alpha).apply(vec)


def functor_of_presentation(x):
    def push_fn(alpha, vec):
        src = _eval_data(x, alpha.target)
        dst = _eval_data(x, alpha.source)
        acc = {}
        for pos, val in enumerate(vec):
            if val:
                i, u = src.space.labels[pos]
                k = dst.index[(i, u @ alpha)]
                acc[k] = acc.get(k, Fraction(0)) + val
        return dst.coker.project({k: v for k, v in acc.items() if v})

    return ExplicitFunctor(x.family,
                           lambda t: evaluate(x, t),
                           lambda a: structure_map(x, a),
                           push_fn)


def _proper_pullback_span(fun, g):
    cols = []
    for s in enumerate_subgroups(g):
        if s.order == 1:
            continue
        qt, proj = quotient(g, s)
        qdim = fun.space(qt).dim
        for j in range(qdim):
            unit = tuple(Fraction(1 if k == j else 0) for k in range(qdim))
            pushed = fun.push(proj, unit)
            cols.append({i: v for i, v in enumerate(pushed) if v})
    return cols


def _cover(fun, bound, minimal):
    """Choose generators (type, vector) covering `fun` at orders <= bound.

    Minimal covers pick module generators over the automorphism action:
    one representable copy reaches the whole automorphism span of its
    vector, so each picked vector is closed off under the action before
    the next pick.
    """
    from .groups import automorphism_generators
    gens = []
    for g in fun.family.members(max_order=bound):
        sp = fun.space(g)
        if sp.dim == 0:
            continue
        if minimal:
            coker = StreamCoker(sp.dim)
            for col in _proper_pullback_span(fun, g):
                coker.offer(col)
            psis = automorphism_generators(g)
            for i in range(sp.dim):
                vec = tuple(Fraction(1 if k == i else 0)
                            for k in range(sp.dim))
                if not coker.offer({i: Fraction(1)}):
                    continue
                gens.append((g, vec))
                frontier = [vec]
                while frontier:
                    v = frontier.pop()
                    for psi in psis:
                        w = fun.push(psi, v)
                        if coker.offer({k: val for k, val in enumerate(w)
                                        if val}):
                            frontier.append(w)
        else:
            for i in range(sp.dim):
                vec = tuple(Fraction(1 if k == i else 0)
                            for k in range(sp.dim))
                gens.append((g, vec))
    return gens


def _counit_matrix(fun, gens, t):
    """Matrix of sum e_{G_k} -> fun at t, with the free basis labeled
    (k, alpha) for alpha in Epi(t, G_k)."""
    sp = fun.space(t)
    labels = []
    cols = []
    for k, (g, vec) in enumerate(gens):
        for alpha in enumerate_epis(t, g):
            labels.append((k, alpha))
            cols.append(fun.push(alpha, vec))
    rows = tuple(tuple(cols[j][i] for j in range(len(cols)))
                 for i in range(sp.dim))
    return labels, QMatrix(sp.dim, len(cols), rows)


def kernel_functor(fun, gens, bound):
    """Kernel of the counit of a free cover, as an ExplicitFunctor.

    The kernel value at T is based by tracked vectors in the free module
    coordinates (k, alpha).  The basis comes out of the row reduction in
    free-variable normal form: basis vector j is the unique kernel vector
    whose free coordinates are a delta at the j-th free column, so
    expressing a kernel element is just reading off its free coordinates.
    """
    basis_cache = {}

    def kernel_basis(t):
        got = basis_cache.get(t)
        if got is not None:
            return got
        labels, mat = _counit_matrix(fun, gens, t)
        from .linalg import _rref
        rref_rows, pivots = _rref([list(r) for r in mat.entries])
        free = [j for j in range(mat.cols) if j not in pivots]
        kern = []
        for fj in free:
            vec = [Fraction(0)] * mat.cols
            vec[fj] = Fraction(1)
            for i, pj in enumerate(pivots):
                vec[pj] = -rref_rows[i][fj]
            kern.append(tuple(vec))
        basis_cache[t] = (labels, tuple(kern), tuple(free))
        return basis_cache[t]

    def space_fn(t):
        _labels, kern, _free = kernel_basis(t)
        return BasedSpace(len(kern), tuple(range(len(kern))))

    def _push_free(alpha, coeffs):
        tl, tkern, _tfree = kernel_basis(alpha.target)
        sl, _skern, sfree = kernel_basis(alpha.source)
        sindex = {lab: i for i, lab in enumerate(sl)}
        out = {}
        for bidx, c in coeffs:
            for pos, val in enumerate(tkern[bidx]):
                if val:
                    k, u = tl[pos]
                    tgt = sindex[(k, u @ alpha)]
                    out[tgt] = out.get(tgt, Fraction(0)) + c * val
        free_pos = {fj: i for i, fj in enumerate(sfree)}
        col = [Fraction(0)] * len(sfree)
        for tgt, val in out.items():
            if val and tgt in free_pos:
                col[free_pos[tgt]] = val
        return tuple(col)

    def matrix_fn(alpha):
        _tl, tkern, _tf = kernel_basis(alpha.target)
        cols = [_push_free(alpha, [(j, Fraction(1))])
                for j in range(len(tkern))]
        nrows = len(cols[0]) if cols else \
            len(kernel_basis(alpha.source)[2])
        rows = tuple(tuple(cols[j][i] for j in range(len(cols)))
                     for i in range(nrows))
        return QMatrix(nrows, len(cols), rows)

    def push_fn(alpha, vec):
        coeffs = [(j, Fraction(v)) for j, v in enumerate(vec) if v]
        return _push_free(alpha, coeffs)

    return ExplicitFunctor(fun.family, space_fn, matrix_fn,
                           push_fn), kernel_basis


def present_explicit(fun, scale, minimal=True):
    """A PresentedObject matching `fun` on all members of order <= scale."""
    gens = _cover(fun, scale, minimal)
    kfun, kbasis = kernel_functor(fun, gens, scale)
    rel_gens = _cover(kfun, scale, minimal)
    gen_types = tuple(g for g, _v in gens)
    rel_sources = []
    columns = []
    for h, kvec in rel_gens:
        labels, kern, _free = kbasis(h)
        # kvec is in kernel coordinates: expand to the free module
        free_vec = {}
        for pos, val in enumerate(kvec):
            if val:
                for fpos, fval in enumerate(kern[pos]):
                    if fval:
                        free_vec[fpos] = free_vec.get(fpos, Fraction(0)) \
                            + val * fval
        per_gen = {}
        for fpos, val in free_vec.items():
            if val:
                k, alpha = labels[fpos]
                per_gen.setdefault(k, []).append((alpha, val))
        col = []
        for k in range(len(gen_types)):
            terms = per_gen.get(k)
            col.append(None if not terms else
                       MorphismCombination.make(h, gen_types[k], terms))
        rel_sources.append(h)
        columns.append(tuple(col))
    return PresentedObject(fun.family, gen_types, tuple(rel_sources),
                           tuple(columns))


# ---------------------------------------------------------------------------
# built-in objects


@dataclass(frozen=True)
class ChiInterval:
    """Convex membership predicate given as an interval in the quotient
    order: lo <= T <= hi (either bound may be omitted)."""

    lo: GroupType = None
    hi: GroupType = None

    def contains(self, t):
        if self.lo is not None and not quotient_exists(t, self.lo):
            return False
        if self.hi is not None and not quotient_exists(self.hi, t):
            return False
        return True


@dataclass(frozen=True)
class BuiltinObject:
    kind: str           # e, c, t_triv, s_triv, chi, unit
    family: Family
    group: GroupType = None
    interval: ChiInterval = None

    def __post_init__(self):
        if self.kind not in ("e", "c", "t_triv", "s_triv", "chi", "unit"):
            raise ValueError(f"unknown builtin kind {self.kind!r}")
        if self.kind in ("e", "c", "t_triv", "s_triv"):
            if self.group is None or not self.family.contains(self.group):
                raise NotInFamily("builtin parameter group must be a member")
        if self.kind == "chi" and self.interval is None:
            raise ValueError("chi needs an interval predicate")


def free_object(family, *gens):
    return PresentedObject(family, tuple(gens))


def unit_object(family):
    return free_object(family, trivial_group(family.p))


def _aut_orbit_count(g, t):
    """Number of orbits of Aut(g) precomposition on Epi(g, t)."""
    return len(_orbit_reps(g, t))


def coinduced_dims(g, family, bound):
    """Dimension table of the coinduced object at g with trivial weights."""
    return {t: _aut_orbit_count(g, t) for t in family.members(bound)}


def builtin_to_presentation(b, scale, limit=None):
    """Presentation agreeing with the builtin on all orders <= scale."""
    config.check_order(scale, limit, what="builtin presentation")
    fam = b.family
    if b.kind == "unit":
        return unit_object(fam)
    if b.kind == "e":
        return free_object(fam, b.group)
    if b.kind == "c":
        return _coinvariant_presentation(fam, b.group)
    if b.kind == "s_triv":
        return _simple_presentation(fam, b.group, scale)
    if b.kind == "t_triv":
        fun = _coinduced_functor(fam, b.group)
        return present_explicit(fun, scale, minimal=True)
    if b.kind == "chi":
        fun = _chi_functor(fam, b.interval)
        return present_explicit(fun, scale, minimal=True)
    raise ValueError(b.kind)


def _coinvariant_presentation(family, g):
    """e_g modulo the automorphism action (trivial coefficients)."""
    from .groups import automorphism_generators
    ident = identity_morphism(g)
    rel_sources, columns = [], []
    for psi in automorphism_generators(g):
        comb = MorphismCombination.make(g, g, [(psi, 1), (ident, -1)])
        if not comb.is_zero():
            rel_sources.append(g)
            columns.append((comb,))
    return PresentedObject(family, (g,), tuple(rel_sources), tuple(columns))


def _simple_presentation(family, g, scale):
    """The simple object supported at g, presented up to `scale`."""
    from .groups import automorphism_generators
    rel_sources, columns = [], []
    ident = identity_morphism(g)
    for psi in automorphism_generators(g):
        comb = MorphismCombination.make(g, g, [(psi, 1), (ident, -1)])
        if not comb.is_zero():
            rel_sources.append(g)
            columns.append((comb,))
    for t in family.members(max_order=scale):
        if t.order <= g.order or not quotient_exists(t, g):
            continue
        for alpha in enumerate_epis(t, g):
            rel_sources.append(t)
            columns.append((MorphismCombination.make(t, g, [(alpha, 1)]),))
    return PresentedObject(family, (g,), tuple(rel_sources), tuple(columns))


def _coinduced_functor(family, g):
    def space_fn(t):
        n = _aut_orbit_count(g, t)
        return BasedSpace(n, tuple(_orbit_reps(g, t)))

    def matrix_fn(alpha):
        # the pullback precomposes orbit indicator functions with
        # (alpha o -): the row of an orbit rep gamma: g -> source has a 1
        # in the column of the orbit of alpha o gamma
        treps = _orbit_reps(g, alpha.target)
        tpreps = _orbit_reps(g, alpha.source)
        tlookup = _orbit_lookup(g, alpha.target)
        rows = []
        for gamma in tpreps:
            o = tlookup[(alpha @ gamma).matrix]
            rows.append(tuple(Fraction(1 if idx == o else 0)
                              for idx in range(len(treps))))
        return QMatrix(len(tpreps), len(treps), tuple(rows))

    return ExplicitFunctor(family, space_fn, matrix_fn)


@lru_cache(maxsize=None)
def _orbit_structure(g, t):
    """(reps, lookup) for Aut(g) precomposition orbits on Epi(g, t)."""
    if not quotient_exists(g, t):
        return (), {}
    from .groups import automorphism_generators
    epis = enumerate_epis(g, t)
    index = {f.matrix: i for i, f in enumerate(epis)}
    gens = automorphism_generators(g)
    parent = list(range(len(epis)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i, f in enumerate(epis):
        for psi in gens:
            j = index[(f @ psi).matrix]
            ra, rb = find(i), find(j)
            if ra != rb:
                parent[ra] = rb
    roots = {}
    reps = []
    for i, f in enumerate(epis):
        r = find(i)
        if r not in roots:
            roots[r] = len(reps)
            reps.append(epis[r])
    lookup = {f.matrix: roots[find(i)] for i, f in enumerate(epis)}
    return tuple(reps), lookup


def _orbit_reps(g, t):
    return _orbit_structure(g, t)[0]


def _orbit_lookup(g, t):
    return _orbit_structure(g, t)[1]


def _chi_functor(family, interval):
    def space_fn(t):
        inside = interval.contains(t)
        return BasedSpace(1 if inside else 0, ("chi",) if inside else ())

    def matrix_fn(alpha):
        t, tp = alpha.target, alpha.source
        a, b = interval.contains(t), interval.contains(tp)
        if a and b:
            return QMatrix.identity(1)
        return QMatrix.zeros(1 if b else 0, 1 if a else 0)

    return ExplicitFunctor(family, space_fn, matrix_fn)


# ---------------------------------------------------------------------------
# presentation surgery


def restrict_presentation(x, subfamily):
    """Restriction to a downward-closed subfamily: drop outside data.

    Entries from kept relation sources into dropped generators vanish
    automatically (no surjections leave the subfamily downward).
    """
    if not subfamily.downward_closed:
        raise NotInFamily("restriction requires a downward-closed subfamily")
    keep_gen = [i for i, g in enumerate(x.generators)
                if subfamily.contains(g)]
    gens = tuple(x.generators[i] for i in keep_gen)
    rel_sources, columns = [], []
    for h, col in zip(x.rel_sources, x.columns):
        if not subfamily.contains(h):
            continue
        newcol = tuple(col[i] for i in keep_gen)
        rel_sources.append(h)
        columns.append(newcol)
    return PresentedObject(subfamily, gens, tuple(rel_sources),
                           tuple(columns))


def quotient_by_elements(x, t, vectors):
    """Quotient presentation by classes of vectors in X(t).

    Each vector (coordinates on the X(t) basis) is lifted to the free
    cover and becomes a fresh relation column with source t.
    """
    data = _eval_data(x, t)
    rel_sources = list(x.rel_sources)
    columns = [tuple(col) for col in x.columns]
    for vec in vectors:
        per_gen = {}
        for pos, val in enumerate(vec):
            if val:
                # the surviving basis classes are ambient basis elements
                amb = data.space.labels[pos]
                per_gen.setdefault(amb[0], []).append((amb[1], Fraction(val)))
        col = []
        for k in range(len(x.generators)):
            terms = per_gen.get(k)
            col.append(None if not terms else
                       MorphismCombination.make(t, x.generators[k], terms))
        rel_sources.append(t)
        columns.append(tuple(col))
    return PresentedObject(x.family, x.generators, tuple(rel_sources),
                           tuple(columns))


def direct_sum(x, y):
    if x.family != y.family:
        raise NotInFamily("direct sum requires a common family")
    gens = x.generators + y.generators
    rel_sources = x.rel_sources + y.rel_sources
    columns = []
    pad_y = (None,) * len(y.generators)
    pad_x = (None,) * len(x.generators)
    for col in x.columns:
        columns.append(tuple(col) + pad_y)
    for col in y.columns:
        columns.append(pad_x + tuple(col))
    return PresentedObject(x.family, gens, rel_sources, tuple(columns))


# ---------------------------------------------------------------------------
# shipped example objects


def torsion_example_a(p, family=None):
    """Cokernel of the difference of the two projections C_p^2 -> C_p."""
    from .families import all_abelian
    fam = family or all_abelian(p)
    c = cyclic(p, 1)
    c2 = GroupType(p, (1, 1))
    lam = make_morphism(c2, c, [[1, 0]])
    rho = make_morphism(c2, c, [[0, 1]])
    comb = MorphismCombination.make(c2, c, [(lam, 1), (rho, -1)])
    return PresentedObject(fam, (c,), (c2,), ((comb,),))


def torsion_example_b(family=None):
    """Cokernel of the sum of the three surjections C_2^2 -> C_2."""
    from .families import all_abelian
    fam = family or all_abelian(2)
    c = cyclic(2, 1)
    c2 = GroupType(2, (1, 1))
    lam = make_morphism(c2, c, [[1, 0]])
    rho = make_morphism(c2, c, [[0, 1]])
    sig = make_morphism(c2, c, [[1, 1]])
    comb = MorphismCombination.make(c2, c, [(lam, 1), (rho, 1), (sig, 1)])
    return PresentedObject(fam, (c,), (c2,), ((comb,),))

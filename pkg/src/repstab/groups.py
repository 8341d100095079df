"""Finite abelian p-groups and their surjective homomorphisms.

A group is a prime together with a non-increasing partition of exponents:
(p, [l1 >= l2 >= ...]) stands for Z/p^l1 + Z/p^l2 + ...; the empty
partition is the trivial group.  A homomorphism is an integer matrix acting
on the cyclic generators, stored with entry (i, j) reduced modulo p^{mu_i}
(mu = target exponents).  Well-definedness forces p^{max(0, mu_i - l_j)} to
divide entry (i, j).

Surjectivity onto a p-group only depends on the induced map of Frattini
quotients, so it is tested by the rank of the matrix mod p.  Enumerations
walk all well-defined matrices in lexicographic (row-major) order, which
fixes canonical, cache-stable orderings everywhere downstream.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
import math

from . import config
from .errors import DivisibilityViolation, ShapeMismatch


@dataclass(frozen=True)
class GroupType:
    """Isomorphism type of a finite abelian p-group."""

    p: int
    exponents: tuple

    def __post_init__(self):
        if self.p < 2 or not _is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")
        ex = tuple(int(e) for e in self.exponents)
        if any(e < 1 for e in ex):
            raise ValueError("exponents must be positive")
        if list(ex) != sorted(ex, reverse=True):
            raise ValueError("exponents must be sorted non-increasing")
        object.__setattr__(self, "exponents", ex)

    # Trivial groups with different p are the same group; fold them together.
    def __eq__(self, other):
        if not isinstance(other, GroupType):
            return NotImplemented
        if not self.exponents and not other.exponents:
            return True
        return self.p == other.p and self.exponents == other.exponents

    def __hash__(self):
        if not self.exponents:
            return hash(("trivial",))
        return hash((self.p, self.exponents))

    @property
    def rank(self):
        return len(self.exponents)

    @property
    def order(self):
        return self.p ** sum(self.exponents)

    @property
    def exponent_log(self):
        """Log_p of the group exponent (0 for the trivial group)."""
        return self.exponents[0] if self.exponents else 0

    def is_trivial(self):
        return not self.exponents

    def moduli(self):
        return tuple(self.p ** e for e in self.exponents)

    def key(self):
        """Canonical cache key, e.g. "p2-l2.1"; the trivial group is "p2-l"."""
        return f"p{self.p}-l" + ".".join(str(e) for e in self.exponents)

    def sort_key(self):
        return (self.order, self.exponents)

    def elements(self):
        """All elements as coordinate tuples, in lexicographic order."""
        return list(product(*[range(m) for m in self.moduli()]))

    def __repr__(self):
        if not self.exponents:
            return "GroupType(trivial)"
        body = "x".join(f"C{self.p ** e}" for e in self.exponents)
        return f"GroupType({body})"


def group(p, exponents):
    return GroupType(p, tuple(exponents))


def trivial_group(p=2):
    return GroupType(p, ())


def cyclic(p, e):
    return GroupType(p, (e,)) if e else GroupType(p, ())


def delta_rank(g):
    """Minimal size of a generating set (rank of the Frattini quotient)."""
    return g.rank


@lru_cache(maxsize=None)
def _is_prime(n):
    if n < 2:
        return False
    for q in range(2, int(math.isqrt(n)) + 1):
        if n % q == 0:
            return False
    return True


@dataclass(frozen=True)
class Morphism:
    """Homomorphism between abelian p-groups in canonical reduced form."""

    source: GroupType
    target: GroupType
    matrix: tuple  # rows indexed by target generators, reduced mod p^{mu_i}

    @property
    def p(self):
        return self.target.p if self.target.exponents else self.source.p

    def __call__(self, x):
        """Apply to an element given as a coordinate tuple of the source."""
        mods = self.target.moduli()
        return tuple(
            sum(r * c for r, c in zip(row, x)) % m
            for row, m in zip(self.matrix, mods)
        )

    def __matmul__(self, other):
        """Composition self o other (other is applied first)."""
        if other.target != self.source:
            raise ShapeMismatch(
                f"cannot compose {self.source!r}<-{other.target!r}")
        mods = self.target.moduli()
        k = self.source.rank
        n = other.source.rank
        rows = tuple(
            tuple(sum(self.matrix[i][t] * other.matrix[t][j]
                      for t in range(k)) % m for j in range(n))
            for i, m in enumerate(mods)
        )
        return Morphism(other.source, self.target, rows)

    def sort_key(self):
        return tuple(v for row in self.matrix for v in row)

    def __repr__(self):
        return f"Morphism({self.source!r}->{self.target!r}, {self.matrix})"


def make_morphism(source, target, matrix):
    """Validate, canonically reduce, and wrap an integer matrix as a map."""
    rows = [list(r) for r in matrix]
    if len(rows) != target.rank or any(len(r) != source.rank for r in rows):
        raise ShapeMismatch(
            f"matrix must be {target.rank}x{source.rank}, got "
            f"{len(rows)}x{[len(r) for r in rows]}")
    p = target.p if target.exponents else source.p
    mu = target.exponents
    lam = source.exponents
    canon = []
    for i, row in enumerate(rows):
        m = p ** mu[i]
        out = []
        for j, v in enumerate(row):
            need = p ** max(0, mu[i] - lam[j])
            if v % need:
                raise DivisibilityViolation(
                    f"entry ({i},{j})={v} must be divisible by {need}")
            out.append(v % m)
        canon.append(tuple(out))
    return Morphism(source, target, tuple(canon))


def identity_morphism(g):
    return Morphism(g, g, tuple(
        tuple(1 if i == j else 0 for j in range(g.rank))
        for i in range(g.rank)))


def zero_morphism(source, target):
    return Morphism(source, target,
                    tuple(tuple(0 for _ in range(source.rank))
                          for _ in range(target.rank)))


def _rank_mod_p(rows, p):
    """Rank over F_p of a small integer matrix given as list of row lists."""
    mat = [[v % p for v in row] for row in rows]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    for col in range(ncols):
        piv = None
        for i in range(rank, len(mat)):
            if mat[i][col]:
                piv = i
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = pow(mat[rank][col], -1, p)
        mat[rank] = [(v * inv) % p for v in mat[rank]]
        for i in range(len(mat)):
            if i != rank and mat[i][col]:
                c = mat[i][col]
                mat[i] = [(a - c * b) % p for a, b in zip(mat[i], mat[rank])]
        rank += 1
        if rank == len(mat):
            break
    return rank


def is_surjective(f):
    """Onto iff the matrix mod p has full rank over the prime field."""
    s = f.target.rank
    if s == 0:
        return True
    if f.source.rank < s:
        return False
    return _rank_mod_p([list(r) for r in f.matrix], f.p) == s


def quotient_exists(t, g):
    """Whether g is a quotient type of t (componentwise exponent bound)."""
    if t.p != g.p and not g.is_trivial() and not t.is_trivial():
        return False
    if g.rank > t.rank:
        return False
    return all(m <= l for m, l in zip(g.exponents, t.exponents))


def _entry_choices(t, g):
    """Per-entry allowed values (row-major) for well-defined matrices t->g."""
    p = g.p if g.exponents else t.p
    choices = []
    for mi in g.exponents:
        m = p ** mi
        for lj in t.exponents:
            step = p ** max(0, mi - lj)
            choices.append(range(0, m, step))
    return choices


def hom_candidate_count(t, g):
    n = 1
    p = g.p if g.exponents else t.p
    for mi in g.exponents:
        for lj in t.exponents:
            n *= p ** min(mi, lj)
    return n


def iter_epis(t, g):
    """Lazily yield all surjections t -> g in lexicographic matrix order."""
    if g.is_trivial():
        yield Morphism(t, g, ())
        return
    if not quotient_exists(t, g):
        return
    s, r = g.rank, t.rank
    p = g.p
    choices = _entry_choices(t, g)
    for flat in product(*choices):
        rows = [list(flat[i * r:(i + 1) * r]) for i in range(s)]
        if _rank_mod_p(rows, p) == s:
            yield Morphism(t, g, tuple(tuple(row) for row in rows))


_EPI_CACHE = {}


def enumerate_epis(t, g, limit=None):
    """All surjections t -> g, canonical and lexicographically ordered.

    Results are memoized; concurrent computations would only ever race to
    store equal lists.
    """
    key = (t, g)
    got = _EPI_CACHE.get(key)
    if got is None:
        if not g.is_trivial() and quotient_exists(t, g):
            config.check_candidates(hom_candidate_count(t, g), limit,
                                    what="epi enumeration")
        got = tuple(iter_epis(t, g))
        _EPI_CACHE[key] = got
    return list(got)


_COUNT_CACHE = {}


def count_epis(t, g):
    """|Epi(t, g)| by enumeration (vectorized scan for large hom sets)."""
    key = (t, g)
    got = _EPI_CACHE.get(key)
    if got is not None:
        return len(got)
    cnt = _COUNT_CACHE.get(key)
    if cnt is not None:
        return cnt
    if g.is_trivial():
        cnt = 1
    elif not quotient_exists(t, g):
        cnt = 0
    else:
        n = hom_candidate_count(t, g)
        if n <= 1 << 14:
            cnt = sum(1 for _ in iter_epis(t, g))
        else:
            config.check_candidates(n, config.MAX_COUNT_CANDIDATES,
                                    what="epi count")
            cnt = _count_epis_vectorized(t, g)
    _COUNT_CACHE[key] = cnt
    return cnt


def _count_epis_vectorized(t, g):
    import numpy as np

    p = g.p
    s, r = g.rank, t.rank
    # only the residues mod p matter for surjectivity, so each entry slot
    # contributes its choice count as sheer multiplicity once the slot is
    # forced to be divisible by p
    lam = t.exponents
    mu = g.exponents
    free_slots = []      # positions (i, j) whose entries range over all of F_p
    multiplicity = 1
    for i in range(s):
        for j in range(r):
            n_choices = p ** min(mu[i], lam[j])
            if mu[i] <= lam[j]:
                # residues cycle through F_p evenly
                free_slots.append((i, j))
                multiplicity *= n_choices // p
            else:
                # entry is always divisible by p: zero residue
                multiplicity *= n_choices
    k = len(free_slots)
    total = p ** k
    chunk = 1 << 18
    count = 0
    inv_table = np.array([0] + [pow(v, -1, p) for v in range(1, p)],
                         dtype=np.int16)
    for start in range(0, total, chunk):
        stop = min(start + chunk, total)
        idx = np.arange(start, stop, dtype=np.int64)
        if p == 2:
            rows_int = np.zeros((stop - start, s), dtype=np.uint32)
            rem = idx
            for (i, j) in reversed(free_slots):
                rem, digit = np.divmod(rem, 2)
                rows_int[:, i] |= digit.astype(np.uint32) << j
            count += int(np.count_nonzero(
                _batch_rank_mod2(rows_int, r) == s))
        else:
            mats = np.zeros((stop - start, s, r), dtype=np.int16)
            rem = idx
            for (i, j) in reversed(free_slots):
                rem, digit = np.divmod(rem, p)
                mats[:, i, j] = digit.astype(np.int16)
            count += int(np.count_nonzero(
                _batch_rank_mod_p(mats, p, inv_table) == s))
    return count * multiplicity


def _batch_rank_mod2(rows_int, r):
    """Ranks over F_2 for a batch of matrices given as bitmask rows."""
    import numpy as np

    n, s = rows_int.shape
    basis = np.zeros((n, r), dtype=np.uint32)
    rank = np.zeros(n, dtype=np.int16)
    for i in range(s):
        v = rows_int[:, i].copy()
        alive = np.ones(n, dtype=bool)
        for b in range(r - 1, -1, -1):
            has = ((v >> b) & 1).astype(bool) & alive
            if not has.any():
                continue
            can = has & (basis[:, b] == 0)
            basis[can, b] = v[can]
            rank += can
            alive &= ~can
            red = has & ~can
            v = np.where(red, v ^ basis[:, b], v)
    return rank


def _batch_rank_mod_p(mats, p, inv_table):
    """Ranks of a batch of small matrices over F_p.

    Streams the rows of every matrix through a per-matrix echelon basis
    indexed by leading position; all operations are (batch, cols) shaped,
    which keeps the memory traffic linear in the input.
    """
    import numpy as np

    n, s, r = mats.shape
    basis = np.zeros((n, r, r), dtype=np.int16)
    filled = np.zeros((n, r), dtype=bool)
    rank = np.zeros(n, dtype=np.int16)
    for i in range(s):
        v = mats[:, i, :].astype(np.int16) % p
        alive = np.ones(n, dtype=bool)
        for b in range(r):
            coef = v[:, b]
            has = (coef != 0) & alive
            if not has.any():
                continue
            can_insert = has & ~filled[:, b]
            if can_insert.any():
                inv = inv_table[coef * can_insert]
                norm = (v * inv[:, None]) % p
                basis[can_insert, b, :] = norm[can_insert]
                filled[can_insert, b] = True
                rank += can_insert
                alive &= ~can_insert
            reduce = has & ~can_insert
            if reduce.any():
                v = np.where(reduce[:, None],
                             (v - coef[:, None] * basis[:, b, :]) % p, v)
    return rank


def automorphisms(g, limit=None):
    """All invertible endomorphisms; equals enumerate_epis(g, g)."""
    config.check_order(g.order, limit, what="automorphism enumeration")
    return enumerate_epis(g, g)


def count_automorphisms(g):
    return count_epis(g, g)


@lru_cache(maxsize=None)
def automorphism_generators(g):
    """A small generating set of Aut(g): swaps, transvections, unit scalings.

    Verified against the full automorphism list in the test suite for small
    groups; used for orbit and coinvariant computations where enumerating
    the whole automorphism group would be hopeless.
    """
    p = g.p
    lam = g.exponents
    r = g.rank
    gens = []

    def from_rows(rows):
        return make_morphism(g, g, rows)

    ident = [[1 if i == j else 0 for j in range(r)] for i in range(r)]
    for i in range(r):
        for j in range(r):
            if i == j:
                continue
            rows = [row[:] for row in ident]
            rows[i][j] = p ** max(0, lam[i] - lam[j])
            gens.append(from_rows(rows))
    for i in range(r):
        for u in _unit_generators(p, lam[i]):
            if u != 1:
                rows = [row[:] for row in ident]
                rows[i][i] = u
                gens.append(from_rows(rows))
    out, seen = [], set()
    for f in gens:
        if f.matrix not in seen:
            seen.add(f.matrix)
            out.append(f)
    return tuple(out)


def _unit_generators(p, k):
    """Generators of (Z/p^k)^*  (cyclic for odd p; {-1, 5} for p = 2)."""
    m = p ** k
    if m <= 2:
        return []
    if p == 2:
        return [m - 1] if k == 2 else [m - 1, 5]
    for cand in range(2, m):
        if math.gcd(cand, p) != 1:
            continue
        if _mult_order(cand, m) == (p - 1) * p ** (k - 1):
            return [cand]
    raise RuntimeError("no primitive root found")  # unreachable for odd p


def _mult_order(a, m):
    x, k = a % m, 1
    while x != 1:
        x = (x * a) % m
        k += 1
    return k


def lift_epi(alpha, beta):
    """Fill the diagonal of a cospan of surjections with a surjection.

    Given alpha: A -> C and beta: B -> C where A is a free module over
    Z/p^n (all exponents equal), B has exponent dividing p^n, and
    rank(A) >= rank(B), returns gamma: A -> B with beta o gamma = alpha and
    gamma surjective.
    """
    from .errors import NotSurjective
    from .intmat import solve_integer

    a_t, b_t, c_t = alpha.source, beta.source, alpha.target
    if alpha.target != beta.target:
        raise ShapeMismatch("cospan legs must share a target")
    if not (is_surjective(alpha) and is_surjective(beta)):
        raise NotSurjective("both legs must be surjective")
    if len(set(a_t.exponents)) > 1:
        raise ShapeMismatch("the lifting source must be a free module")
    if a_t.rank < b_t.rank:
        raise ShapeMismatch("rank of the free source must dominate")
    p = a_t.p
    n_exp = a_t.exponent_log
    if b_t.exponent_log > n_exp:
        raise ShapeMismatch("target exponent must divide the source exponent")
    nn, mm, ll = a_t.rank, b_t.rank, c_t.rank

    def preimage(f, c_elt):
        # x with f(x) = c_elt, via an integer solve against the relations
        mat = [list(f.matrix[i]) + [p ** c_t.exponents[i] if k == i else 0
                                    for k in range(ll)]
               for i in range(ll)]
        sol = solve_integer(mat, list(c_elt))
        return tuple(sol[:f.source.rank])

    c_gens = [tuple(1 if i == k else 0 for i in range(ll)) for k in range(ll)]
    b_vecs = [list(preimage(beta, cg)) for cg in c_gens]
    b_vecs = _complete_mod_p(b_vecs, b_t, p)
    # make the completed vectors map to 0 under beta
    for idx in range(ll, mm):
        img = beta(tuple(v % m for v, m in zip(b_vecs[idx], b_t.moduli())))
        for i in range(ll):
            if img[i]:
                for j in range(mm):
                    b_vecs[idx][j] -= img[i] * b_vecs[i][j]
    a_vecs = [list(preimage(alpha, cg)) for cg in c_gens]
    a_vecs = _complete_mod_p(a_vecs, a_t, p)
    for idx in range(ll, nn):
        img = alpha(tuple(v % m for v, m in zip(a_vecs[idx], a_t.moduli())))
        for i in range(ll):
            if img[i]:
                for j in range(nn):
                    a_vecs[idx][j] -= img[i] * a_vecs[i][j]
    # gamma sends a_i to b_i (i < mm) and to 0 beyond; express in standard
    # coordinates by inverting the a-basis mod p^n
    q = p ** n_exp
    amat = [[a_vecs[k][i] % q for k in range(nn)] for i in range(nn)]
    ainv = _invert_mod(amat, q)
    rows = []
    for i in range(mm):
        row = [sum(b_vecs[k][i] * ainv[k][j] for k in range(mm)) for j in range(nn)]
        rows.append(row)
    gamma = make_morphism(a_t, b_t, rows)
    return gamma


def _complete_mod_p(vecs, gtype, p):
    """Extend vectors to a full generating family (a basis of G/pG)."""
    r = gtype.rank
    rows = [[v % p for v in vec] for vec in vecs]
    chosen = [list(v) for v in vecs]
    cur = _rank_mod_p(rows, p) if rows else 0
    for k in range(r):
        if len(chosen) == r:
            break
        cand = [1 if i == k else 0 for i in range(r)]
        if _rank_mod_p(rows + [cand], p) > cur:
            rows.append(cand)
            chosen.append(list(cand))
            cur += 1
    return chosen


def _invert_mod(mat, modulus):
    """Inverse of a square integer matrix that is invertible mod `modulus`."""
    n = len(mat)
    aug = [[mat[i][j] % modulus for j in range(n)]
           + [1 if j == i else 0 for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = None
        for i in range(col, n):
            if math.gcd(aug[i][col], modulus) == 1:
                piv = i
                break
        if piv is None:
            raise ShapeMismatch("matrix not invertible modulo modulus")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = pow(aug[col][col], -1, modulus)
        aug[col] = [(v * inv) % modulus for v in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                c = aug[i][col]
                aug[i] = [(a - c * b) % modulus for a, b in zip(aug[i], aug[col])]
    return [[aug[i][n + j] for j in range(n)] for i in range(n)]

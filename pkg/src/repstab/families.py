"""Families of finite abelian p-groups and their closure properties.

A family is a membership predicate on isomorphism types together with four
derived flags that the tensor/hom and truncation machinery consults:
widely_closed, multiplicative, subgroup_closed, downward_closed.  All
supported families contain the trivial group.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import count

from .errors import ParseError
from .groups import GroupType

KINDS = ("Zpinf", "Zpn", "Cpinf", "Cpn", "Fpn", "Ep", "TruncatedLeq")


@dataclass(frozen=True)
class Family:
    kind: str
    p: int
    n: int = None
    base: "Family" = None
    bound: int = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}")
        if self.kind in ("Zpn", "Cpn", "Fpn") and not self.n:
            raise ValueError(f"{self.kind} needs the exponent parameter n")
        if self.kind == "TruncatedLeq" and (self.base is None or not self.bound):
            raise ValueError("TruncatedLeq needs base family and order bound")

    # ---- closure flags -------------------------------------------------
    @property
    def widely_closed(self):
        if self.kind in ("Zpinf", "Zpn", "Ep"):
            return True
        if self.kind in ("Cpinf", "Cpn"):
            return True   # global families are convex, hence widely closed
        if self.kind == "Fpn":
            return self.n == 1
        return self.base.widely_closed  # truncation keeps wide closure

    @property
    def multiplicative(self):
        if self.kind in ("Zpinf", "Zpn", "Ep"):
            return True
        if self.kind == "Fpn":
            return True
        return False  # cyclic families and truncations are not

    @property
    def subgroup_closed(self):
        if self.kind in ("Zpinf", "Zpn", "Ep", "Cpinf", "Cpn"):
            return True
        if self.kind == "Fpn":
            return self.n == 1
        return self.base.subgroup_closed

    @property
    def downward_closed(self):
        if self.kind in ("Zpinf", "Zpn", "Ep", "Cpinf", "Cpn"):
            return True
        if self.kind == "Fpn":
            return self.n == 1
        return self.base.downward_closed

    @property
    def expansive(self):
        """Whether ranks grow without bound above every member."""
        if self.kind in ("Zpinf", "Zpn", "Ep", "Fpn"):
            return True
        return False

    # ---- membership and iteration --------------------------------------
    def contains(self, g):
        if g.is_trivial():
            return True
        if g.p != self.p:
            return False
        lam = g.exponents
        if self.kind == "Zpinf":
            return True
        if self.kind == "Zpn":
            return lam[0] <= self.n
        if self.kind == "Cpinf":
            return len(lam) <= 1
        if self.kind == "Cpn":
            return len(lam) <= 1 and lam[0] <= self.n
        if self.kind == "Fpn":
            return all(e == self.n for e in lam)
        if self.kind == "Ep":
            return all(e == 1 for e in lam)
        return g.order <= self.bound and self.base.contains(g)

    def members(self, max_order):
        """All member types of order <= max_order, canonically sorted."""
        out = [GroupType(self.p, ())]
        k = 1
        while self.p ** k <= max_order:
            for lam in _partitions(k):
                g = GroupType(self.p, lam)
                if self.contains(g):
                    out.append(g)
            k += 1
        out.sort(key=lambda g: g.sort_key())
        return out

    def key(self):
        if self.kind == "TruncatedLeq":
            return f"{self.base.key()}-le{self.bound}"
        n = f",{self.n}" if self.n else ""
        return f"{self.kind}:{self.p}{n}"

    def __repr__(self):
        return f"Family({self.key()})"


@lru_cache(maxsize=None)
def _partitions(total):
    """Partitions of `total` as non-increasing tuples."""
    def rec(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest
    return tuple(rec(total, total))


def family_contains(family, g):
    return family.contains(g)


def all_abelian(p):
    return Family("Zpinf", p)


def exponent_bounded(p, n):
    return Family("Zpn", p, n)


def cyclic_family(p, n=None):
    return Family("Cpn", p, n) if n else Family("Cpinf", p)


def free_modules(p, n):
    return Family("Fpn", p, n)


def elementary(p):
    return Family("Ep", p)


def truncated(base, bound):
    return Family("TruncatedLeq", base.p, base=base, bound=bound)


def parse_family_spec(text):
    """Parse CLI family specs.

    Accepted forms: Z2inf, Z3inf, Zpinf:p, Zpn:p,n, Cpinf:p, Cpn:p,n,
    Fpn:p,n, Ep:p, and the shorthands F<q> / E<p> / Z<q> with q = p^n.
    """
    t = text.strip()
    if t in ("Z2inf", "Z3inf"):
        return all_abelian(int(t[1]))
    if ":" in t:
        head, _, args = t.partition(":")
        try:
            parts = [int(a) for a in args.split(",") if a]
        except ValueError as exc:
            raise ParseError(f"bad family parameters in {text!r}") from exc
        if head == "Zpinf" and len(parts) == 1:
            return all_abelian(parts[0])
        if head == "Zpn" and len(parts) == 2:
            return exponent_bounded(*parts)
        if head == "Cpinf" and len(parts) == 1:
            return cyclic_family(parts[0])
        if head == "Cpn" and len(parts) == 2:
            return cyclic_family(*parts)
        if head == "Fpn" and len(parts) == 2:
            return free_modules(*parts)
        if head == "Ep" and len(parts) == 1:
            return elementary(parts[0])
        raise ParseError(f"unknown family spec {text!r}")
    for prefix, maker in (("F", free_modules), ("Z", exponent_bounded)):
        if t.startswith(prefix) and t[1:].isdigit():
            q = int(t[1:])
            p, n = _prime_power(q, text)
            return maker(p, n)
    if t.startswith("E") and t[1:].isdigit():
        return elementary(int(t[1:]))
    raise ParseError(f"unknown family spec {text!r}")


def _prime_power(q, original):
    for p in count(2):
        if p * p > q and q > 1:
            return q, 1
        if q % p == 0:
            n = 0
            while q % p == 0:
                q //= p
                n += 1
            if q != 1:
                raise ParseError(f"{original!r}: not a prime power")
            return p, n
    raise ParseError(f"{original!r}: not a prime power")

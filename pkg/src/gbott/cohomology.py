"""Cohomology ring of a tower: presentation, Chern classes, normal form.

For a tower of height h the integral cohomology ring is the quotient of
Z[x_1, ..., x_h] (deg x_i = 2) by the h relations

    r_i = x_i * prod_{j=1..n_i} (l_ij + x_i),
    l_ij = sum_{k<i} a^i_{jk} x_k,

equivalently r_i = x_i^(n_i+1) + c_1(xi_i) x_i^(n_i) + ... + c_n(xi_i) x_i
where c_k(xi_i) is the k-th elementary symmetric polynomial of the l_ij.
The quotient is a free module on the monomials {x^e : 0 <= e_i <= n_i},
and because c_k(xi_i) only involves x_1..x_(i-1), the relations form a
triangular rewriting system: eliminating the highest stage index first,
the rewrite x_i^(n_i+1) -> -(c_1 x_i^(n_i) + ... + c_n x_i) terminates
and lands on the unique basis-supported normal form.  No Groebner
machinery is needed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .backend import kernel as _k
from .errors import DimensionMismatch
from .poly import Polynomial, default_names
from .tower import TowerSpec


@dataclass(frozen=True)
class ChernData:
    """Chern classes c_0..c_{n_i} of one stage bundle, embedded in the
    full generator set; c_0 = 1 and c_k = 0 for k > n_i by convention."""

    stage: int
    classes: tuple[Polynomial, ...]

    def total(self) -> Polynomial:
        out = self.classes[0]
        for c in self.classes[1:]:
            out = out + c
        return out

    def c(self, k: int) -> Polynomial:
        """c_k, with the zero convention above the bundle rank."""
        if k < 0:
            raise IndexError("negative Chern index")
        if k < len(self.classes):
            return self.classes[k]
        return Polynomial.zero(self.classes[0].nvars)


def chern_classes(t: TowerSpec, stage: int) -> ChernData:
    """Chern classes of the stage bundle: c_k is the k-th elementary
    symmetric polynomial of the linear forms given by the stage's
    coefficient rows.  Stage 1 sits over a point, so its total class
    is 1."""
    if not 1 <= stage <= t.height:
        raise IndexError(f"stage {stage} out of range 1..{t.height}")
    h = t.height
    elementary = [_k.punit(h)]
    for row in t.stages[stage - 1].coeffs:
        form = {}
        for k, a in enumerate(row):
            if a:
                e = [0] * h
                e[k] = 1
                form[tuple(e)] = a
        new = [elementary[0]]
        for k in range(1, len(elementary) + 1):
            prev = elementary[k] if k < len(elementary) else {}
            new.append(_k.padd(prev, _k.pmul(elementary[k - 1], form)))
        elementary = new
    classes = tuple(Polynomial._wrap(d, h) for d in elementary)
    return ChernData(stage=stage, classes=classes)


class CohomRing:
    """Quotient-ring presentation of a tower's cohomology.

    Immutable after construction; `normal_form` is a pure function of
    its input, so instances can be shared freely across threads or
    processes.
    """

    def __init__(self, tower: TowerSpec):
        self.tower = tower
        self.nvars = tower.height
        self.caps = tower.dims  # max basis exponent per generator
        self.chern = tuple(
            chern_classes(tower, i) for i in range(1, tower.height + 1)
        )
        relations = []
        tails = []
        for i in range(1, tower.height + 1):
            n = tower.dims[i - 1]
            xi = Polynomial.variable(i, self.nvars)._terms
            rel = dict(xi)
            for row in tower.stages[i - 1].coeffs:
                form = dict(xi)
                for k, a in enumerate(row):
                    if a:
                        e = [0] * self.nvars
                        e[k] = 1
                        form[tuple(e)] = a
                rel = _k.pmul(rel, form)
            relations.append(Polynomial._wrap(rel, self.nvars))
            lead = [0] * self.nvars
            lead[i - 1] = n + 1
            # x_i^(n+1) = r_i - (lower order) => rewrite target is lead - r_i
            tails.append(_k.psub({tuple(lead): 1}, rel))
        self.relations = tuple(relations)
        self._tails = tuple(tails)
        self._basis = None

    # -- reduction ----------------------------------------------------------

    def _reduce(self, terms: dict) -> dict:
        out = _k.preduce(terms, self.caps, self._tails)
        assert self._supported(out), "normal form left the monomial basis"
        return out

    def _supported(self, terms: dict) -> bool:
        caps = self.caps
        for e in terms:
            for i, cap in enumerate(caps):
                if e[i] > cap:
                    return False
        return True

    def normal_form(self, p: Polynomial) -> Polynomial:
        """The unique representative supported on the monomial basis
        {x^e : e_i <= n_i}.  Accepts polynomials in fewer generators and
        embeds them."""
        if p.nvars > self.nvars:
            raise DimensionMismatch(
                f"polynomial has {p.nvars} generators, ring has {self.nvars}"
            )
        if p.nvars < self.nvars:
            p = p.extended(self.nvars)
        return Polynomial._wrap(self._reduce(p._terms), self.nvars)

    def is_zero(self, p: Polynomial, over_integers: bool = False) -> bool:
        """True iff p represents the zero class.  The ring is a free
        module, so for integral p the answer is the same over Z and
        over Q; the flag is informational only."""
        return not self.normal_form(p)._terms

    # -- structure ----------------------------------------------------------

    def basis_exponents(self) -> tuple[tuple[int, ...], ...]:
        """All basis monomial exponents, sorted by (degree, tuple);
        the count is the total Betti number prod(n_i + 1)."""
        if self._basis is None:
            exps = itertools.product(*(range(c + 1) for c in self.caps))
            self._basis = tuple(sorted(exps, key=lambda e: (sum(e), e)))
        return self._basis

    def poincare_ranks(self) -> tuple[int, ...]:
        return poincare_ranks(self.tower)

    def report(self, names=None) -> str:
        """Text presentation: generators, relations, Poincare ranks."""
        names = tuple(names) if names is not None else default_names(self.nvars)
        lines = [
            "generators: "
            + ", ".join(f"{n} (degree 2)" for n in names)
        ]
        lines.append("relations:")
        for rel in self.relations:
            lines.append(f"  {rel.serialize(names)}")
        ranks = " ".join(str(r) for r in self.poincare_ranks())
        lines.append(f"poincare ranks: {ranks}")
        return "\n".join(lines)

    def __repr__(self) -> str:
        return f"CohomRing(dims={self.tower.dims})"


def build_ring(t: TowerSpec) -> CohomRing:
    return CohomRing(t)


def poincare_ranks(t: TowerSpec) -> tuple[int, ...]:
    """Rank of the degree-2d piece for d = 0..sum(n_i): coefficients of
    prod_i (1 + t + ... + t^(n_i))."""
    ranks = [1]
    for n in t.dims:
        new = [0] * (len(ranks) + n)
        for d, r in enumerate(ranks):
            for k in range(n + 1):
                new[d + k] += r
        ranks = new
    return tuple(ranks)

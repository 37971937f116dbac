"""Formal complexes of twisted Schur bundles.

A formal complex only remembers its terms: a degree, a bundle and an
integer multiplicity (the dimension of the multiplicity space ∧^ν V*).
Differentials are never stored. Everything computed from a formal complex
(rank, K-class, Euler pairing, first page of Ext) is insensitive to them.
"""
from __future__ import annotations

import collections
import dataclasses
from typing import Counter, Dict, Iterable, List, Optional, Tuple

from loguru import logger

import igr.parse as parse
from igr.collection import CollectionSpec
from igr.errors import PreconditionError
from igr.ext import ext_groups, parallel_map
from igr.oddcoh import CohomologyVerdict, GradedDim, possible_differential, sign
from igr.schur import binomial, dim_gl
from igr.spaces import OddSpace, Space
from igr.weights import GLWeight, TwistedBundle, dual


@dataclasses.dataclass(frozen=True)
class Term:
    degree: int
    bundle: TwistedBundle
    mult: int
    # ν of the multiplicity space ∧^ν V*; display only.
    wedge: Optional[int] = dataclasses.field(default=None, compare=False)

    def text(self) -> str:
        bundle = self.bundle.normalized().text()
        if self.wedge is None:
            prefix = "" if self.mult == 1 else f"{self.mult}*"
        elif self.wedge == 0:
            prefix = ""
        elif self.wedge == 1:
            prefix = "V*(x)"
        else:
            prefix = f"L{self.wedge}V*(x)"
        return f"{prefix}{bundle}"


def _sort_key(term: Term):
    return (-term.degree, term.bundle.absorbed.lex_key())


@dataclasses.dataclass(frozen=True)
class FormalComplex:
    name: str
    terms: Tuple[Term, ...]
    m: Optional[int] = None

    @staticmethod
    def of(name: str, terms: Iterable[Term], m: Optional[int] = None) -> FormalComplex:
        merged: Dict[Tuple[int, GLWeight], Term] = {}
        for term in terms:
            if term.mult <= 0:
                raise ValueError(f"term {term} needs a positive multiplicity")
            key = (term.degree, term.bundle.absorbed)
            if key in merged:
                old = merged[key]
                term = Term(old.degree, old.bundle, old.mult + term.mult)
            merged[key] = term
        return FormalComplex(name, tuple(sorted(merged.values(), key=_sort_key)), m)

    @staticmethod
    def single(bundle: TwistedBundle, name: Optional[str] = None) -> FormalComplex:
        return FormalComplex(name or bundle.text(), (Term(0, bundle, 1),))

    def degrees(self) -> List[int]:
        return sorted({t.degree for t in self.terms})

    def terms_at(self, degree: int) -> List[Term]:
        return [t for t in self.terms if t.degree == degree]

    def twisted(self, l: int) -> FormalComplex:
        if l == 0:
            return self
        return FormalComplex(
            f"{self.name}({l})",
            tuple(Term(t.degree, t.bundle.twisted(l), t.mult, t.wedge) for t in self.terms),
            self.m,
        )

    def renamed(self, name: str) -> FormalComplex:
        return FormalComplex(name, self.terms, self.m)

    def rank(self) -> int:
        """Alternating sum of ranks; signed."""
        return sum(sign(t.degree) * t.mult * dim_gl(t.bundle.absorbed) for t in self.terms)

    def k_class(self) -> Dict[GLWeight, int]:
        total: Counter[GLWeight] = collections.Counter()
        for t in self.terms:
            total[t.bundle.absorbed] += sign(t.degree) * t.mult
        return {w: c for w, c in total.items() if c}

    def text(self) -> str:
        return self.name

    def serialize(self, out) -> None:
        print(f"# {self.name}", file=out)
        for t in self.terms:
            print(f"{t.degree:>3}  {t.text()}  [mult {t.mult}]", file=out)

    def serialize_to_string(self) -> str:
        return parse.serialize_to_string_impl(self.serialize)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "m": self.m,
            "terms": [
                {
                    "degree": t.degree,
                    "weight": list(t.bundle.normalized().weight.entries),
                    "twist": t.bundle.normalized().t,
                    "wedge": t.wedge,
                    "mult": t.mult,
                }
                for t in self.terms
            ],
        }


def staircase_weight(a: int, b: int, i: int) -> GLWeight:
    """μ_i for λ = (a, 0, −b), extended through the leftmost term."""
    if i <= a:
        return GLWeight((a - i, 0, -b))
    if i <= a + b:
        return GLWeight((-1, a - i, -b))
    return GLWeight((-1, -b - 1, a - i))


def staircase(a: int, b: int, m: int) -> FormalComplex:
    """The staircase complex of U^{a,0,−b} on Gr(3, m).

    Terms sit in degrees −i for i = 0..m−2; the term in degree −i is
    ∧^{ν_i} V* ⊗ U^{μ_i} with ν_i = |λ| − |μ_i|.
    """
    if a < 0 or b < 0 or a + b > m - 3:
        raise PreconditionError(f"staircase needs a, b >= 0 and a+b <= m-3, got a={a} b={b} m={m}")
    size = a - b
    terms = []
    for i in range(m - 1):
        mu = staircase_weight(a, b, i)
        nu = size - mu.size
        terms.append(Term(-i, TwistedBundle(mu), binomial(m, nu), nu))
    return FormalComplex.of(f"St({a},{b};{m})", terms, m)


def truncate(c: FormalComplex, cut: int, keep: str = "above") -> FormalComplex:
    """Stupid truncation: keep degrees >= cut ("above") or <= cut ("below")."""
    degrees = c.degrees()
    if not degrees or not degrees[0] <= cut <= degrees[-1]:
        raise PreconditionError(f"cut {cut} outside the support {degrees} of {c.name}")
    if keep == "above":
        kept = [t for t in c.terms if t.degree >= cut]
    elif keep == "below":
        kept = [t for t in c.terms if t.degree <= cut]
    else:
        raise ValueError(f"keep must be 'above' or 'below', got {keep!r}")
    return FormalComplex(f"{c.name}[>={cut}]" if keep == "above" else f"{c.name}[<={cut}]", tuple(kept), c.m)


def shift(c: FormalComplex, s: int) -> FormalComplex:
    """C[s]: the term in degree d moves to degree d − s."""
    return FormalComplex(
        f"{c.name}[{s}]",
        tuple(Term(t.degree - s, t.bundle, t.mult, t.wedge) for t in c.terms),
        c.m,
    )


def dual_complex(c: FormalComplex, l: int) -> FormalComplex:
    """Term-wise dual twisted by l, with degrees negated."""
    terms = []
    for t in c.terms:
        wedge = None
        if t.wedge is not None and c.m is not None:
            wedge = c.m - t.wedge
        terms.append(Term(-t.degree, TwistedBundle(dual(t.bundle.absorbed).shift(l)), t.mult, wedge))
    return FormalComplex.of(f"{c.name}*({l})", terms, c.m)


def cone_terms(source: FormalComplex, target: FormalComplex, name: str) -> FormalComplex:
    """Terms of Cone(source → target) = target ⊕ source[1]."""
    moved = shift(source, 1)
    return FormalComplex.of(name, list(target.terms) + list(moved.terms), target.m)


def object_E() -> FormalComplex:
    st = staircase(3, 0, 9)
    return shift(truncate(st, -3), -3).renamed("E")


def object_F() -> FormalComplex:
    st = staircase(2, 1, 9)
    return shift(truncate(st, -2), -2).renamed("F")


def object_H() -> FormalComplex:
    return cone_terms(object_F(), object_E(), "H")


NAMED_OBJECTS = {"E": object_E, "F": object_F, "H": object_H}


def restriction_split_check(a: int, b: int, m: int) -> bool:
    """Restricting the staircase of (a,0,−b) from Gr(3,m+1) to Gr(3,m).

    Compares, degree by degree, the terms on Gr(3,m+1), whose multiplicities
    are C(m+1,ν), against the staircase of λ on Gr(3,m) plus the staircase
    of μ₁ = (a−1,0,−b) shifted by [1].
    """
    if a < 1:
        raise PreconditionError(f"restriction splitting needs λ1 > λ2, got a={a}")
    if b < 0 or a + b > m - 3:
        raise PreconditionError(f"restriction splitting needs a+b <= m-3, got a={a} b={b} m={m}")

    def tally(c: FormalComplex) -> Counter[Tuple[int, GLWeight]]:
        out: Counter[Tuple[int, GLWeight]] = collections.Counter()
        for t in c.terms:
            out[(t.degree, t.bundle.absorbed)] += t.mult
        return out

    restricted = tally(staircase(a, b, m + 1))
    split = tally(staircase(a, b, m)) + tally(shift(staircase(a - 1, b, m), 1))
    if restricted != split:
        logger.warning("restriction of St({},{}) to Gr(3,{}) does not split: {} vs {}", a, b, m, restricted, split)
        return False
    return True


def _term_pairs(first: FormalComplex, second: FormalComplex) -> List[Tuple[Term, Term]]:
    return [(s, t) for s in first.terms for t in second.terms]


def euler_pairing(
    first: FormalComplex,
    second: FormalComplex,
    space: Space = OddSpace.IGR_3_9,
    threads: Optional[int] = 1,
) -> int:
    """χ(first, second) = Σ (−1)^{d1+d2} m1 m2 χ(Ext•(term1, term2))."""
    pairs = _term_pairs(first, second)
    values = parallel_map(
        lambda pair: sign(pair[0].degree + pair[1].degree)
        * pair[0].mult
        * pair[1].mult
        * ext_groups(pair[0].bundle, pair[1].bundle, space).euler,
        pairs,
        threads,
    )
    return sum(values)


@dataclasses.dataclass(frozen=True)
class ExtTable:
    """First page of Ext•(first, second): E1^{p,q} = ⊕_{d2−d1=p} Ext^q(term1, term2)."""

    first: str
    second: str
    entries: Tuple[Tuple[Tuple[int, int], int], ...]
    undecided: Tuple[Tuple[str, str], ...]
    euler: int

    def verdict(self) -> CohomologyVerdict:
        if self.undecided:
            return CohomologyVerdict.indeterminate(self.euler)
        if not self.entries:
            return CohomologyVerdict.acyclic()
        if possible_differential([pq for pq, _ in self.entries]) is not None:
            return CohomologyVerdict.indeterminate(self.euler)
        total: Counter[int] = collections.Counter()
        for (p, q), dim in self.entries:
            total[p + q] += dim
        return CohomologyVerdict.exact(GradedDim.of(total))

    def to_json(self) -> dict:
        return {
            "left": self.first,
            "right": self.second,
            "entries": [{"p": p, "q": q, "dim": d} for (p, q), d in self.entries],
            "undecided": [list(pair) for pair in self.undecided],
            "euler": self.euler,
            "result": self.verdict().to_json(),
        }

    def __str__(self) -> str:
        cells = ", ".join(f"({p},{q}): {d}" for (p, q), d in self.entries) or "empty"
        return f"E1 Ext({self.first}, {self.second}) = {cells}; {self.verdict()}"


def ext_e1_table(
    first: FormalComplex,
    second: FormalComplex,
    space: Space = OddSpace.IGR_3_9,
    threads: Optional[int] = 1,
) -> ExtTable:
    pairs = _term_pairs(first, second)
    verdicts = parallel_map(lambda pair: ext_groups(pair[0].bundle, pair[1].bundle, space), pairs, threads)
    entries: Counter[Tuple[int, int]] = collections.Counter()
    undecided = []
    euler = 0
    for (s, t), verdict in zip(pairs, verdicts):
        weight = s.mult * t.mult
        p = t.degree - s.degree
        euler += sign(p) * weight * verdict.euler
        if not verdict.determinate:
            undecided.append((s.bundle.text(), t.bundle.text()))
            continue
        for q, dim in verdict.dims.dims:
            entries[(p, q)] += weight * dim
    return ExtTable(
        first.name,
        second.name,
        tuple(sorted((pq, d) for pq, d in entries.items() if d)),
        tuple(undecided),
        euler,
    )


def as_complex(x) -> FormalComplex:
    if isinstance(x, FormalComplex):
        return x
    return FormalComplex.single(x)


def ext_objects(first, second, space: Space = OddSpace.IGR_3_9) -> CohomologyVerdict:
    """Ext between bundles or formal complexes, for mixed collections."""
    if isinstance(first, TwistedBundle) and isinstance(second, TwistedBundle):
        return ext_groups(first, second, space)
    return ext_e1_table(as_complex(first), as_complex(second), space).verdict()


def collection_B() -> CollectionSpec:
    """H followed by the members of B1."""
    return CollectionSpec("B", [object_H()] + list(CollectionSpec.B1.members))

"""The G-invariant and catenary data of a matroid, exactly.

A rank sequence is a 0/1 string of length n with r ones; its gap encoding is
an (n,r)-composition (a_0, a_1, ..., a_r) with a_0 >= 0 and a_j > 0 for
j >= 1.  The G-invariant of a matroid is the integer vector counting, over
all n! element orderings, the rank sequence each ordering produces.  The
catenary data counts flags (maximal chains of flats) by composition, and is
the coordinate vector of the G-invariant in the triangular gamma basis.

All coefficients are exact Python ints; the Tutte specialization runs on
exact rationals and must clear every denominator.
"""

from __future__ import annotations

import itertools
import math
import os
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .errors import ExactnessError
from .matroid import Matroid, elements_of

DEFAULT_ORACLE_LIMIT = 9


def oracle_limit(explicit: int | None = None) -> int:
    """Permutation/subset oracle cap: explicit arg, else env, else default."""
    if explicit is not None:
        return explicit
    env = os.environ.get("GINV_ORACLE_LIMIT")
    return int(env) if env else DEFAULT_ORACLE_LIMIT


# -- sequences and compositions ---------------------------------------------

def seq_to_comp(seq: str) -> tuple[int, ...]:
    """Gap encoding of a 0/1 string: 0^{a_0} 1 0^{a_1 - 1} ... 1 0^{a_r - 1}."""
    if set(seq) - {"0", "1"}:
        raise ValueError(f"not a 0/1 sequence: {seq!r}")
    parts = [0]
    for ch in seq:
        if ch == "1":
            parts.append(1)
        else:
            parts[-1] += 1
    return tuple(parts)


def comp_to_seq(comp) -> str:
    """Inverse of seq_to_comp."""
    comp = tuple(comp)
    if comp[0] < 0 or any(a < 1 for a in comp[1:]):
        raise ValueError(f"not a composition: {comp}")
    return "0" * comp[0] + "".join("1" + "0" * (a - 1) for a in comp[1:])


def seq_comp_bijection(x):
    """Round-tripping converter between sequences and compositions."""
    if isinstance(x, str):
        return seq_to_comp(x)
    return comp_to_seq(x)


def dominates(b, a) -> bool:
    """b dominates a: every prefix sum of b is at most that of a."""
    b, a = tuple(b), tuple(a)
    if len(b) != len(a) or sum(b) != sum(a):
        raise ValueError(f"compositions of different shape: {b} vs {a}")
    pb = pa = 0
    for x, y in zip(b, a):
        pb += x
        pa += y
        if pb > pa:
            return False
    return True


def compositions(n: int, r: int):
    """All (n,r)-compositions: a_0 >= 0, a_j >= 1, summing to n."""
    if r == 0:
        yield (n,)
        return
    for cuts in itertools.combinations(range(n), r):
        parts = [cuts[0]] + [cuts[i + 1] - cuts[i] for i in range(r - 1)] \
            + [n - cuts[r - 1]]
        yield tuple(parts)


def _falling(t: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= t - i
    return out


# -- invariant containers ----------------------------------------------------

def _clean(mapping) -> dict:
    return {k: int(v) for k, v in mapping.items() if v != 0}


@dataclass(frozen=True)
class GInvariant:
    """Integer vector on the rank-sequence symbols of shape (n, r)."""

    n: int
    r: int
    coeffs: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        coeffs = _clean(self.coeffs)
        for key in coeffs:
            if len(key) != self.n or key.count("1") != self.r:
                raise ValueError(f"symbol {key!r} is not an ({self.n},{self.r})-sequence")
        object.__setattr__(self, "coeffs", coeffs)

    def __getitem__(self, key: str) -> int:
        return self.coeffs.get(key, 0)

    def total(self) -> int:
        """Sum of all coefficients; n! for the invariant of a matroid."""
        return sum(self.coeffs.values())

    def items(self):
        return sorted(self.coeffs.items())

    def __eq__(self, other):
        return (isinstance(other, GInvariant) and self.n == other.n
                and self.r == other.r and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.n, self.r, frozenset(self.coeffs.items())))

    def __repr__(self):
        terms = " + ".join(f"{c}[{k}]" for k, c in self.items())
        return f"GInvariant({self.n},{self.r}: {terms})"


@dataclass(frozen=True)
class CatenaryData:
    """Flag counts by (n,r)-composition: the gamma-basis coordinates."""

    n: int
    r: int
    counts: Mapping[tuple, int] = field(default_factory=dict)

    def __post_init__(self):
        counts = {}
        for key, v in self.counts.items():
            key = tuple(int(a) for a in key)
            if v == 0:
                continue
            if (len(key) != self.r + 1 or sum(key) != self.n or key[0] < 0
                    or any(a < 1 for a in key[1:])):
                raise ValueError(f"{key} is not an ({self.n},{self.r})-composition")
            counts[key] = int(v)
        object.__setattr__(self, "counts", counts)

    def __getitem__(self, key) -> int:
        return self.counts.get(tuple(key), 0)

    def total(self) -> int:
        return sum(self.counts.values())

    def items(self):
        return sorted(self.counts.items())

    def loops(self) -> int:
        """Common first part of the keys: the number of loops."""
        firsts = {key[0] for key in self.counts}
        if len(firsts) != 1:
            raise ExactnessError(f"inconsistent loop counts across keys: {sorted(firsts)}")
        return firsts.pop()

    def __eq__(self, other):
        return (isinstance(other, CatenaryData) and self.n == other.n
                and self.r == other.r and self.counts == other.counts)

    def __hash__(self):
        return hash((self.n, self.r, frozenset(self.counts.items())))

    def __repr__(self):
        terms = ", ".join(f"{k}: {c}" for k, c in self.items())
        return f"CatenaryData({self.n},{self.r}: {{{terms}}})"


@dataclass(frozen=True)
class TuttePolynomial:
    """Bivariate polynomial with exact integer coefficients on x^i y^j."""

    terms: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(
            self, "terms",
            {(int(i), int(j)): int(c) for (i, j), c in self.terms.items() if c != 0})

    def __getitem__(self, key) -> int:
        return self.terms.get(tuple(key), 0)

    def items(self):
        return sorted(self.terms.items())

    def evaluate(self, x, y):
        return sum(c * x ** i * y ** j for (i, j), c in self.terms.items())

    def __eq__(self, other):
        return isinstance(other, TuttePolynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        def mono(i, j):
            parts = [f"x^{i}" if i > 1 else "x" if i else "",
                     f"y^{j}" if j > 1 else "y" if j else ""]
            return "".join(parts) or "1"
        body = " + ".join(
            (f"{c}" if c != 1 or (i == 0 and j == 0) else "") + mono(i, j)
            for (i, j), c in sorted(self.terms.items(), reverse=True))
        return f"TuttePolynomial({body})"


# -- gamma basis --------------------------------------------------------------

def _dominated_by(a: tuple) -> list[tuple]:
    """All compositions b with b dominating a (prefix sums <= those of a)."""
    r = len(a) - 1
    n = sum(a)
    prefixes = list(itertools.accumulate(a))
    out = []

    def rec(idx, used, parts):
        if idx == r:
            rest = n - used
            if rest >= 1 or (r == 0 and rest == 0):
                out.append(tuple(parts) + (rest,))
            return
        lo = 0 if idx == 0 else 1
        for val in range(lo, prefixes[idx] - used + 1):
            parts.append(val)
            rec(idx + 1, used + val, parts)
            parts.pop()

    if r == 0:
        return [a]
    rec(0, 0, [])
    return out


@lru_cache(maxsize=None)
def gamma_coeffs(a: tuple) -> dict[str, int]:
    """Symbol-basis coefficients of gamma(a), keyed by rank sequence.

    Support is exactly the dominance up-set of a; the diagonal coefficient is
    a_0! * prod_j a_j (a_j - 1)!.
    """
    a = tuple(int(x) for x in a)
    if a[0] < 0 or any(x < 1 for x in a[1:]):
        raise ValueError(f"not a composition: {a}")
    out = {}
    pa = list(itertools.accumulate(a))
    for b in _dominated_by(a):
        pb = list(itertools.accumulate(b))
        coeff = _falling(a[0], b[0])
        for j in range(1, len(a)):
            slack = pa[j - 1] - pb[j - 1]
            coeff *= a[j] * _falling(a[j] - 1 + slack, b[j] - 1)
        out[comp_to_seq(b)] = coeff
    return out


def gamma_expand(a) -> GInvariant:
    a = tuple(a)
    return GInvariant(sum(a), len(a) - 1, gamma_coeffs(a))


@lru_cache(maxsize=None)
def gamma_one(a: tuple) -> int:
    """All-ones specialization of gamma(a): its coefficient sum."""
    return sum(gamma_coeffs(tuple(a)).values())


# -- catenary data of a matroid -----------------------------------------------

def catenary(m: Matroid) -> CatenaryData:
    """Flag counts by composition, via depth-first chain enumeration.

    Covers of a flat X are the closures cl(X + e) for e outside X,
    deduplicated, so no global flat-lattice precomputation is needed.
    """
    completions: dict[int, Counter] = {m.full: Counter({(): 1})}

    def rec(flat: int) -> Counter:
        got = completions.get(flat)
        if got is not None:
            return got
        covers = {m.closure(flat | (1 << e))
                  for e in elements_of(m.full & ~flat)}
        agg = Counter()
        for cov in covers:
            step = (cov & ~flat).bit_count()
            for suffix, cnt in rec(cov).items():
                agg[(step,) + suffix] += cnt
        completions[flat] = agg
        return agg

    bottom = m.closure(0)
    counts = {(bottom.bit_count(),) + suffix: cnt
              for suffix, cnt in rec(bottom).items()}
    return CatenaryData(m.n, m.r, counts)


def g_from_catenary(c: CatenaryData) -> GInvariant:
    """Sum of count * gamma(composition) over the catenary vector."""
    acc: dict[str, int] = {}
    for comp, cnt in c.counts.items():
        for key, coeff in gamma_coeffs(comp).items():
            acc[key] = acc.get(key, 0) + cnt * coeff
    return GInvariant(c.n, c.r, acc)


def g_invariant(m: Matroid) -> GInvariant:
    """G-invariant of a matroid, through its catenary data."""
    return g_from_catenary(catenary(m))


def catenary_from_g(g: GInvariant) -> CatenaryData:
    """Invert the gamma-basis change by back-substitution along dominance.

    Rejects inputs whose coordinates are not nonnegative integers; such a
    vector is not the G-invariant of any matroid.
    """
    residual = dict(g.coeffs)
    counts: dict[tuple, int] = {}
    # larger prefix-sum total = lower in dominance; those are solved first
    order = sorted(compositions(g.n, g.r),
                   key=lambda comp: sum(itertools.accumulate(comp)),
                   reverse=True)
    for a in order:
        key = comp_to_seq(a)
        num = residual.get(key, 0)
        if num == 0:
            continue
        coeffs = gamma_coeffs(a)
        den = coeffs[key]
        if num % den:
            raise ExactnessError(
                f"gamma coordinate at {a} is {num}/{den}: not an integer")
        nu = num // den
        if nu < 0:
            raise ExactnessError(f"gamma coordinate at {a} is negative: {nu}")
        counts[a] = nu
        for sym, coeff in coeffs.items():
            residual[sym] = residual.get(sym, 0) - nu * coeff
    if any(v for v in residual.values()):
        bad = sorted(k for k, v in residual.items() if v)
        raise ExactnessError(f"vector is not in the gamma span; residue at {bad}")
    return CatenaryData(g.n, g.r, counts)


# -- brute-force oracles -------------------------------------------------------

def _rank_table(m: Matroid) -> list[int]:
    bases = list(m.bases)
    table = [0] * (1 << m.n)
    for x in range(1, 1 << m.n):
        table[x] = max((x & b).bit_count() for b in bases)
    return table


def g_brute_force(m: Matroid, limit: int | None = None) -> GInvariant:
    """Ground-truth G-invariant: walk all n! element orderings."""
    cap = oracle_limit(limit)
    if m.n > cap:
        raise ValueError(f"brute force capped at n <= {cap}, got n = {m.n}")
    table = _rank_table(m)
    counts: Counter = Counter()
    for perm in itertools.permutations(range(m.n)):
        mask = 0
        prev = 0
        chars = []
        for e in perm:
            mask |= 1 << e
            cur = table[mask]
            chars.append("1" if cur > prev else "0")
            prev = cur
        counts["".join(chars)] += 1
    return GInvariant(m.n, m.r, counts)


def tutte_brute_force(m: Matroid, limit: int | None = None) -> TuttePolynomial:
    """Corank-nullity sum over all 2^n subsets."""
    cap = oracle_limit(limit)
    if m.n > cap:
        raise ValueError(f"brute force capped at n <= {cap}, got n = {m.n}")
    table = _rank_table(m)
    weights: Counter = Counter()
    for x in range(1 << m.n):
        weights[(m.r - table[x], x.bit_count() - table[x])] += 1
    terms: dict[tuple[int, int], int] = {}
    for (a, b), w in weights.items():
        for i in range(a + 1):
            ci = math.comb(a, i) * (-1) ** (a - i)
            for j in range(b + 1):
                cj = math.comb(b, j) * (-1) ** (b - j)
                key = (i, j)
                terms[key] = terms.get(key, 0) + w * ci * cj
    return TuttePolynomial(terms)


# -- specializations and closed forms -------------------------------------------

def tutte_from_g(g: GInvariant) -> TuttePolynomial:
    """Tutte polynomial via the prefix-weight specialization of each symbol.

    Each symbol contributes sum over m of
    (x-1)^(r - wt_m) (y-1)^(m - wt_m) / (m! (n-m)!) with wt_m the number of
    ones among its first m entries.  Exact rationals throughout; a
    non-integral final coefficient means g is not a matroid invariant.
    """
    n, r = g.n, g.r
    powers: dict[tuple[int, int], Fraction] = {}
    for key, c in g.coeffs.items():
        wt = 0
        for mlen in range(n + 1):
            if mlen:
                wt += key[mlen - 1] == "1"
            idx = (r - wt, mlen - wt)
            powers[idx] = powers.get(idx, 0) + Fraction(
                c, math.factorial(mlen) * math.factorial(n - mlen))
    terms: dict[tuple[int, int], Fraction] = {}
    for (a, b), w in powers.items():
        for i in range(a + 1):
            ci = math.comb(a, i) * (-1) ** (a - i)
            for j in range(b + 1):
                cj = math.comb(b, j) * (-1) ** (b - j)
                key = (i, j)
                terms[key] = terms.get(key, 0) + w * ci * cj
    out = {}
    for key, val in terms.items():
        if val.denominator != 1:
            raise ExactnessError(
                f"Tutte coefficient at {key} is {val}: not an integer")
        out[key] = int(val)
    return TuttePolynomial(out)


def basis_count(c: CatenaryData) -> int:
    """Number of bases: (1/r!) sum of count * a_1 a_2 ... a_r."""
    total = 0
    for comp, cnt in c.counts.items():
        total += cnt * math.prod(comp[1:])
    fact = math.factorial(c.r)
    if total % fact:
        raise ExactnessError(
            f"ordered-basis total {total} is not divisible by {c.r}!")
    return total // fact


def pmd_catenary(alphas) -> CatenaryData:
    """Catenary data of a perfect matroid design with flat sizes alphas.

    All flags share the composition of consecutive differences; their count
    is the product over i of (alpha_r - alpha_i) / (alpha_{i+1} - alpha_i).
    """
    alphas = [int(a) for a in alphas]
    if alphas[0] < 0 or any(x >= y for x, y in zip(alphas, alphas[1:])):
        raise ValueError(f"flat sizes must strictly increase: {alphas}")
    r = len(alphas) - 1
    n = alphas[-1]
    count = Fraction(1)
    for i in range(r):
        count *= Fraction(alphas[r] - alphas[i], alphas[i + 1] - alphas[i])
    if count.denominator != 1:
        raise ExactnessError(f"design parameters give flag count {count}")
    comp = (alphas[0],) + tuple(alphas[i + 1] - alphas[i] for i in range(r))
    return CatenaryData(n, r, {comp: int(count)})


def paving_catenary(n: int, r: int, copoint_counts: Mapping[int, int]) -> CatenaryData:
    """Catenary data of a paving matroid from its copoint size census.

    A size-m copoint contributes f_{r-1}(m) * (m)_{r-2} flags of composition
    (0, 1, ..., 1, m-r+2, n-m).
    """
    if r < 2:
        raise ValueError("paving census formula needs rank >= 2")
    counts: dict[tuple, int] = {}
    for m, f in copoint_counts.items():
        m, f = int(m), int(f)
        if f == 0:
            continue
        if not r - 1 <= m < n:
            raise ValueError(f"copoint size {m} impossible for (n,r)=({n},{r})")
        comp = (0,) + (1,) * (r - 2) + (m - r + 2, n - m)
        counts[comp] = counts.get(comp, 0) + f * _falling(m, r - 2)
    return CatenaryData(n, r, counts)

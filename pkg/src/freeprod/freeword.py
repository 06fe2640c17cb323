"""Exact traces of words in a free product of moment-oracle legs.

A *leg* is a tracial algebra given by its moments: the interval algebra of
exact trig polynomials, a Haar-unitary leg (tr(w^k) = 0 for k != 0), or a
finite commutative leg with m uniformly weighted atoms.  Legs are mutually
free by construction; a Word is an alternating sequence of letters from
distinct legs, and an NCPoly is a finite linear combination of words with
coefficients in Q[L] (L = 1/pi).

Two independent trace algorithms are provided and cross-checked:

* ``trace_word`` - recursive centering.  Writing each letter x as
  (x - tr(x)) + tr(x), the product of the fully centered letters has trace
  zero by freeness, and every other expansion term drops at least one
  letter, renormalizes, and is strictly shorter.  Memoized on the
  canonical word.

* ``trace_bipartite`` - the non-crossing partition formula for a word
  alternating between two free families: the sum over pi in NC(n) of the
  partitioned cumulant of the first family times the partitioned trace of
  the second family over the Kreweras complement of pi.

Free cumulants are obtained from moments by the NC(n) recursion
k_n = m_n - sum over pi != 1_n of k_pi, with k_pi multiplicative over
blocks; mixed cumulants across distinct legs vanish.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .ncpart import NCPartition, enumerate_nc, kreweras
from . import trigalg
from .trigalg import PI_ONE, PI_ZERO, PiValue, TrigPoly, _frac

MAX_WORD_LETTERS = 64
MAX_CUMULANT_N = 10
MAX_PARTITION_N = 10


class EvaluationLimitError(RuntimeError):
    """Word length or tuple length exceeded the evaluator guard."""


class FamilySplitError(ValueError):
    """Invalid family assignment for the partition-formula evaluator."""


class UnknownNameError(KeyError):
    """Unknown leg or element name."""


# ---------------------------------------------------------------------------
# Legs


class Leg:
    kind = "abstract"

    def __init__(self, leg_id: str):
        self.id = leg_id

    def __repr__(self):
        return f"{type(self).__name__}({self.id!r})"


class TrigLeg(Leg):
    """The interval algebra of exact trig polynomials with trace
    (2/pi) * integral over [0, pi/2]."""

    kind = "trig"

    def letter(self, poly: TrigPoly) -> "TrigLetter":
        return TrigLetter(self.id, poly)

    def c(self, k: int = 1) -> "TrigLetter":
        return TrigLetter(self.id, TrigPoly.cos(k))

    def s(self, k: int = 1) -> "TrigLetter":
        return TrigLetter(self.id, TrigPoly.sin(k))


class HaarLeg(Leg):
    """One Haar unitary: tr(w^k) = 1 if k = 0 else 0."""

    kind = "haar"

    def gen(self, power: int = 1) -> "HaarLetter":
        return HaarLetter(self.id, power)


class FiniteCommLeg(Leg):
    """m commuting atoms with uniform weights 1/m; elements are rational
    m-vectors, the trace is the mean of the entries."""

    kind = "finite_comm"

    def __init__(self, leg_id: str, m: int, elements: Optional[dict] = None):
        super().__init__(leg_id)
        if m < 1:
            raise ValueError("need at least one atom")
        self.m = m
        self.elements: Dict[str, Tuple[Fraction, ...]] = {}
        for name, vec in (elements or {}).items():
            self.add_element(name, vec)

    def add_element(self, name: str, vec) -> None:
        v = tuple(_frac(x) for x in vec)
        if len(v) != self.m:
            raise ValueError(f"element {name!r} must have {self.m} entries")
        self.elements[name] = v

    def letter(self, vec) -> "CommLetter":
        v = tuple(_frac(x) for x in vec)
        if len(v) != self.m:
            raise ValueError(f"vector must have {self.m} entries")
        return CommLetter(self.id, v)

    def element(self, name: str) -> "CommLetter":
        if name not in self.elements:
            raise UnknownNameError(f"no element {name!r} in leg {self.id!r}")
        return CommLetter(self.id, self.elements[name])


# ---------------------------------------------------------------------------
# Letters and words


@dataclass(frozen=True)
class TrigLetter:
    leg: str
    poly: TrigPoly


@dataclass(frozen=True)
class HaarLetter:
    leg: str
    power: int


@dataclass(frozen=True)
class CommLetter:
    leg: str
    vec: Tuple[Fraction, ...]


Letter = Union[TrigLetter, HaarLetter, CommLetter]
Word = Tuple[Letter, ...]


class _Unit:
    """Identity placeholder used when padding family-interleaved sequences."""

    __repr__ = lambda self: "UNIT"  # noqa: E731


UNIT = _Unit()


def letter_str(letter) -> str:
    if letter is UNIT:
        return "1"
    if isinstance(letter, TrigLetter):
        terms = list(letter.poly.items())
        if len(terms) == 1 and terms[0][1] == 1:
            (kind, k), _ = terms[0]
            if kind == "c" and k == 0:
                return "1"
            return kind if k == 1 else f"{kind}[{k}]"
        return f"({letter.poly})"
    if isinstance(letter, HaarLetter):
        if letter.power == 1:
            return letter.leg
        if letter.power == -1:
            return letter.leg + "*"
        return f"{letter.leg}^{letter.power}"
    if isinstance(letter, CommLetter):
        return "d{" + letter.leg + ":" + ",".join(str(q) for q in letter.vec) + "}"
    raise TypeError(f"not a letter: {letter!r}")


def word_str(word: Word) -> str:
    return " ".join(letter_str(l) for l in word) if word else "1"


def _letter_sort_key(letter):
    if isinstance(letter, TrigLetter):
        return (0, letter.leg, tuple(letter.poly.items()))
    if isinstance(letter, HaarLetter):
        return (1, letter.leg, letter.power)
    return (2, letter.leg, letter.vec)


def _word_sort_key(word: Word):
    return (len(word), tuple(_letter_sort_key(l) for l in word))


class NCPoly:
    """Finite linear combination of alternating words, coefficients in Q[L].

    The empty word is the unit.  Zero-coefficient terms are dropped on
    construction, so equality is structural.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        d = {}
        if terms:
            for word, coeff in dict(terms).items():
                coeff = coeff if isinstance(coeff, PiValue) else PiValue.of(coeff)
                if not coeff.is_zero():
                    d[tuple(word)] = coeff
        self._terms = d

    @classmethod
    def zero(cls) -> "NCPoly":
        return cls()

    @classmethod
    def unit(cls, coeff=1) -> "NCPoly":
        return cls({(): coeff})

    def is_zero(self) -> bool:
        return not self._terms

    def terms(self) -> List[Tuple[Word, PiValue]]:
        return sorted(self._terms.items(), key=lambda kv: _word_sort_key(kv[0]))

    def nterms(self) -> int:
        return len(self._terms)

    def coeff(self, word: Word) -> PiValue:
        return self._terms.get(tuple(word), PI_ZERO)

    def __add__(self, other: "NCPoly") -> "NCPoly":
        d = dict(self._terms)
        for w, c in other._terms.items():
            cur = d.get(w)
            d[w] = c if cur is None else cur + c
        return NCPoly(d)

    def __neg__(self) -> "NCPoly":
        return NCPoly({w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "NCPoly") -> "NCPoly":
        return self + (-other)

    def scaled(self, coeff) -> "NCPoly":
        coeff = coeff if isinstance(coeff, PiValue) else PiValue.of(coeff)
        return NCPoly({w: c * coeff for w, c in self._terms.items()})

    def __eq__(self, other):
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def adjoint(self) -> "NCPoly":
        # Coefficients are real; trig and comm letters are self-adjoint,
        # the adjoint of a Haar power negates it, and the word reverses.
        d = {}
        for w, c in self._terms.items():
            aw = tuple(_adjoint_letter(l) for l in reversed(w))
            d[aw] = c
        return NCPoly(d)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = [f"({c}) {word_str(w)}" for w, c in self.terms()]
        return " + ".join(parts)

    def __repr__(self):
        return f"NCPoly({self})"


def _adjoint_letter(letter: Letter) -> Letter:
    if isinstance(letter, HaarLetter):
        return HaarLetter(letter.leg, -letter.power)
    return letter


# ---------------------------------------------------------------------------
# The free product evaluator


class FreeProduct:
    """A free product of named legs, with exact trace evaluation."""

    def __init__(self, legs: Iterable[Leg]):
        self.legs: Dict[str, Leg] = {}
        for leg in legs:
            if leg.id in self.legs:
                raise ValueError(f"duplicate leg id {leg.id!r}")
            self.legs[leg.id] = leg
        self._tr_memo: Dict[Word, PiValue] = {}
        self._cum_memo: Dict[Tuple[Letter, ...], PiValue] = {}

    def add_leg(self, leg: Leg) -> Leg:
        if leg.id in self.legs:
            raise ValueError(f"duplicate leg id {leg.id!r}")
        self.legs[leg.id] = leg
        return leg

    def leg(self, leg_id: str) -> Leg:
        try:
            return self.legs[leg_id]
        except KeyError:
            raise UnknownNameError(f"unknown leg {leg_id!r}") from None

    # -- normalization ------------------------------------------------------

    def normalize(self, letters: Sequence[Letter], coeff=1) -> NCPoly:
        """Merge same-leg neighbours, absorb identity components as scalars,
        and return the resulting combination of alternating words."""
        coeff = coeff if isinstance(coeff, PiValue) else PiValue.of(coeff)
        acc: Dict[Word, PiValue] = {(): coeff}
        for letter in letters:
            if letter.leg not in self.legs:
                raise UnknownNameError(f"unknown leg {letter.leg!r}")
            nxt: Dict[Word, PiValue] = {}
            for word, c in acc.items():
                self._append_letter(nxt, word, c, letter)
            acc = {w: c for w, c in nxt.items() if not c.is_zero()}
            if not acc:
                break
        return NCPoly(acc)

    def word(self, letters: Sequence[Letter]) -> Word:
        """Normalize a letter sequence that is expected to stay a single
        scalar-free word, and return it."""
        nc = self.normalize(letters)
        terms = nc.terms()
        if len(terms) != 1 or terms[0][1] != PI_ONE:
            raise ValueError(
                f"letter sequence does not normalize to a single unit-coefficient "
                f"word: {nc}"
            )
        return terms[0][0]

    def mul(self, a: NCPoly, b: NCPoly) -> NCPoly:
        out: Dict[Word, PiValue] = {}
        for w1, c1 in a._terms.items():
            for w2, c2 in b._terms.items():
                piece: Dict[Word, PiValue] = {w1: c1 * c2}
                for letter in w2:
                    nxt: Dict[Word, PiValue] = {}
                    for word, c in piece.items():
                        self._append_letter(nxt, word, c, letter)
                    piece = nxt
                for w, c in piece.items():
                    cur = out.get(w)
                    out[w] = c if cur is None else cur + c
        return NCPoly(out)

    def _append_letter(self, out: Dict[Word, PiValue], word: Word, coeff: PiValue,
                       letter: Letter) -> None:
        if word and word[-1].leg == letter.leg:
            merged = self._merge(word[-1], letter)
            base = word[:-1]
        else:
            merged = letter
            base = word
        for scale, reduced in self._split(merged):
            w2 = base if reduced is None else base + (reduced,)
            cur = out.get(w2)
            add = coeff * scale
            out[w2] = add if cur is None else cur + add

    def _merge(self, a: Letter, b: Letter) -> Letter:
        if isinstance(a, TrigLetter) and isinstance(b, TrigLetter):
            return TrigLetter(a.leg, a.poly * b.poly)
        if isinstance(a, HaarLetter) and isinstance(b, HaarLetter):
            return HaarLetter(a.leg, a.power + b.power)
        if isinstance(a, CommLetter) and isinstance(b, CommLetter):
            return CommLetter(a.leg, tuple(x * y for x, y in zip(a.vec, b.vec)))
        raise TypeError(f"cannot merge letters {a!r} and {b!r}")

    @staticmethod
    def _split(letter: Letter) -> List[Tuple[Fraction, Optional[Letter]]]:
        """Decompose a payload over the leg's linear basis.

        Returns (coefficient, basis letter) pairs, with ``None`` standing
        for the identity.  Basis letters are: single cos/sin terms with
        unit coefficient for the trig leg, nonzero powers for a Haar leg,
        and the centered atom indicators e_i - 1/m (i = 2..m) for a finite
        commutative leg, which keeps commutative basis letters trace-free.
        Words over basis letters form a linear basis of the free product,
        so combinations built from them cancel exactly.
        """
        one = Fraction(1)
        if isinstance(letter, TrigLetter):
            out: List[Tuple[Fraction, Optional[Letter]]] = []
            for (kind, k), q in letter.poly.items():
                if kind == "c" and k == 0:
                    out.append((q, None))
                else:
                    out.append((q, TrigLetter(letter.leg, TrigPoly({(kind, k): 1}))))
            return out
        if isinstance(letter, HaarLetter):
            if letter.power == 0:
                return [(one, None)]
            return [(one, letter)]
        if isinstance(letter, CommLetter):
            vec = letter.vec
            m = len(vec)
            mean = sum(vec, Fraction(0)) / m
            out = []
            if mean:
                out.append((mean, None))
            base = Fraction(-1, m)
            for i in range(1, m):
                q = vec[i] - vec[0]
                if q:
                    centered = tuple(
                        base + 1 if j == i else base for j in range(m))
                    out.append((q, CommLetter(letter.leg, centered)))
            return out
        raise TypeError(f"not a letter: {letter!r}")

    # -- letter/leg oracles --------------------------------------------------

    def letter_trace(self, letter: Letter) -> PiValue:
        if isinstance(letter, TrigLetter):
            return trigalg.trace(letter.poly)
        if isinstance(letter, HaarLetter):
            return PI_ONE if letter.power == 0 else PI_ZERO
        if isinstance(letter, CommLetter):
            m = len(letter.vec)
            return PiValue.of(sum(letter.vec, Fraction(0)) / m)
        raise TypeError(f"not a letter: {letter!r}")

    def leg_moment(self, letters: Tuple[Letter, ...]) -> PiValue:
        """Trace of the ordered in-leg product of same-leg letters."""
        legs = {l.leg for l in letters}
        if len(legs) != 1:
            raise ValueError("moment tuple must come from a single leg")
        combined = letters[0]
        for letter in letters[1:]:
            combined = self._merge(combined, letter)
        return self.letter_trace(combined)

    def leg_cumulant(self, letters: Tuple[Letter, ...]) -> PiValue:
        """Free cumulant of same-leg letters, by the NC(n) recursion."""
        letters = tuple(letters)
        cached = self._cum_memo.get(letters)
        if cached is not None:
            return cached
        n = len(letters)
        if n > MAX_CUMULANT_N:
            raise EvaluationLimitError(f"cumulant length {n} exceeds {MAX_CUMULANT_N}")
        if n == 1:
            result = self.leg_moment(letters)
        else:
            result = self.leg_moment(letters)
            for p in enumerate_nc(n):
                if len(p.blocks) == 1:
                    continue
                prod = PI_ONE
                for block in p.blocks:
                    prod = prod * self.leg_cumulant(tuple(letters[i - 1] for i in block))
                    if prod.is_zero():
                        break
                result = result - prod
        self._cum_memo[letters] = result
        return result

    # -- trace by centering recursion ----------------------------------------

    def trace_word(self, word: Word) -> PiValue:
        """Exact trace of an alternating word, by recursive centering."""
        word = tuple(word)
        for a, b in zip(word, word[1:]):
            if a.leg == b.leg:
                raise ValueError("word is not alternating-normalized")
        return self._trace_word(word)

    def _trace_word(self, word: Word) -> PiValue:
        cached = self._tr_memo.get(word)
        if cached is not None:
            return cached
        n = len(word)
        if n > MAX_WORD_LETTERS:
            raise EvaluationLimitError(f"word length {n} exceeds {MAX_WORD_LETTERS}")
        if n == 0:
            result = PI_ONE
        elif n == 1:
            result = self.letter_trace(word[0])
        else:
            traces = [self.letter_trace(l) for l in word]
            nonzero = [i for i, t in enumerate(traces) if not t.is_zero()]
            if not nonzero:
                # alternating product of centered letters from free legs
                result = PI_ZERO
            else:
                # 0 = tr(prod of (x_i - t_i)); expanding and solving for the
                # full word, every surviving term deletes a nonempty subset
                # of the positions with nonzero trace.
                agg: Dict[Word, PiValue] = {}
                k = len(nonzero)
                for mask in range(1, 1 << k):
                    factor = PI_ONE
                    drop = set()
                    for bit in range(k):
                        if mask & (1 << bit):
                            i = nonzero[bit]
                            drop.add(i)
                            factor = factor * (-traces[i])
                    rest = [l for i, l in enumerate(word) if i not in drop]
                    sub = self.normalize(rest, coeff=factor)
                    for w, c in sub._terms.items():
                        cur = agg.get(w)
                        agg[w] = c if cur is None else cur + c
                total = PI_ZERO
                for w, c in agg.items():
                    if not c.is_zero():
                        total = total + c * self._trace_word(w)
                result = -total
        self._tr_memo[word] = result
        return result

    def trace(self, nc: NCPoly) -> PiValue:
        """Linear extension of the word trace to combinations."""
        total = PI_ZERO
        for w, c in nc._terms.items():
            total = total + c * self._trace_word(w)
        return total

    # -- trace by the partition formula ---------------------------------------

    def trace_bipartite(self, word: Word, f1_positions: Iterable[int]) -> PiValue:
        """Trace via the non-crossing partition formula.

        ``f1_positions`` are 0-based positions of the letters forming the
        cumulant-side family; the remaining letters form the trace side.
        The two families must use disjoint leg sets.  Identity placeholders
        are interleaved so the sequence reads x1 y1 x2 y2 ... xn yn; then

            tr = sum over pi in NC(n) of k_pi[x] * tr_{K(pi)}[y].

        Cumulant-side blocks that mix legs vanish; trace-side blocks must
        stay within one leg.
        """
        word = tuple(word)
        f1 = set(f1_positions)
        for i in f1:
            if not (0 <= i < len(word)):
                raise FamilySplitError(f"position {i} outside word")
        legs1 = {word[i].leg for i in f1}
        legs2 = {l.leg for i, l in enumerate(word) if i not in f1}
        if legs1 & legs2:
            raise FamilySplitError(
                f"families share legs {sorted(legs1 & legs2)}; they must be free"
            )
        xs: List[object] = []
        ys: List[object] = []
        expect_x = True
        for i, letter in enumerate(word):
            fam1 = i in f1
            if expect_x:
                if fam1:
                    xs.append(letter)
                    expect_x = False
                else:
                    xs.append(UNIT)
                    ys.append(letter)
            else:
                if fam1:
                    ys.append(UNIT)
                    xs.append(letter)
                else:
                    ys.append(letter)
                    expect_x = True
        if not expect_x:
            ys.append(UNIT)
        n = len(xs)
        if n > MAX_PARTITION_N:
            raise EvaluationLimitError(
                f"partition formula over {n} slots exceeds {MAX_PARTITION_N}"
            )
        if n == 0:
            return PI_ONE
        total = PI_ZERO
        for p in enumerate_nc(n):
            kappa = PI_ONE
            for block in p.blocks:
                kappa = kappa * self._cum_block(tuple(xs[i - 1] for i in block))
                if kappa.is_zero():
                    break
            if kappa.is_zero():
                continue
            comp = _kreweras_cached(p)
            tau = PI_ONE
            for block in comp.blocks:
                tau = tau * self._trace_block(tuple(ys[i - 1] for i in block))
                if tau.is_zero():
                    break
            total = total + kappa * tau
        return total

    def _cum_block(self, entries: Tuple[object, ...]) -> PiValue:
        if len(entries) == 1:
            e = entries[0]
            return PI_ONE if e is UNIT else self.letter_trace(e)
        if any(e is UNIT for e in entries):
            # cumulants of order >= 2 vanish when an entry is the identity
            return PI_ZERO
        legs = {e.leg for e in entries}
        if len(legs) > 1:
            # mixed cumulants of free legs vanish
            return PI_ZERO
        return self.leg_cumulant(entries)  # type: ignore[arg-type]

    def _trace_block(self, entries: Tuple[object, ...]) -> PiValue:
        letters = tuple(e for e in entries if e is not UNIT)
        if not letters:
            return PI_ONE
        legs = {l.leg for l in letters}
        if len(legs) > 1:
            raise FamilySplitError(
                "trace-side block mixes legs; assign multi-leg letters to the "
                "cumulant side"
            )
        return self.leg_moment(letters)


_KREWERAS_CACHE: Dict[NCPartition, NCPartition] = {}


def _kreweras_cached(p: NCPartition) -> NCPartition:
    got = _KREWERAS_CACHE.get(p)
    if got is None:
        got = kreweras(p)
        _KREWERAS_CACHE[p] = got
    return got


# ---------------------------------------------------------------------------
# Generic moment/cumulant transforms


def moments_to_cumulants(moment: Callable[[tuple], object]) -> Callable[[tuple], object]:
    """Turn a moment functional on tuples into its free cumulant functional.

    k_n(x_1..x_n) = m_n(x_1..x_n) - sum over pi in NC(n), pi != 1_n, of the
    product over blocks B of k_{|B|}(x restricted to B).
    """
    memo: dict = {}

    def cumulant(xs: tuple):
        xs = tuple(xs)
        if xs in memo:
            return memo[xs]
        n = len(xs)
        if n == 0:
            raise ValueError("empty tuple")
        if n > MAX_CUMULANT_N:
            raise EvaluationLimitError(f"cumulant length {n} exceeds {MAX_CUMULANT_N}")
        result = moment(xs)
        if n > 1:
            for p in enumerate_nc(n):
                if len(p.blocks) == 1:
                    continue
                prod = None
                for block in p.blocks:
                    val = cumulant(tuple(xs[i - 1] for i in block))
                    prod = val if prod is None else prod * val
                result = result - prod
        memo[xs] = result
        return result

    return cumulant


def cumulants_to_moments(cumulant: Callable[[tuple], object]) -> Callable[[tuple], object]:
    """Inverse transform: m_n = sum over pi in NC(n) of k_pi."""

    def moment(xs: tuple):
        xs = tuple(xs)
        n = len(xs)
        if n == 0:
            raise ValueError("empty tuple")
        if n > MAX_CUMULANT_N:
            raise EvaluationLimitError(f"moment length {n} exceeds {MAX_CUMULANT_N}")
        total = None
        for p in enumerate_nc(n):
            prod = None
            for block in p.blocks:
                val = cumulant(tuple(xs[i - 1] for i in block))
                prod = val if prod is None else prod * val
            total = prod if total is None else total + prod
        return total

    return moment


# ---------------------------------------------------------------------------
# R-diagonal support


def r_diagonal_filter(letters: Sequence[HaarLetter]) -> bool:
    """Whether a free cumulant of Haar-unitary letters can be nonzero.

    Mixed legs or a nonzero total power force the cumulant to vanish.  For
    generator/inverse tuples (all powers +-1) the cumulant survives only
    when the powers strictly alternate.  Balanced tuples involving higher
    powers are outside that criterion and are conservatively kept.
    """
    letters = tuple(letters)
    if not letters:
        raise ValueError("empty tuple")
    for l in letters:
        if not isinstance(l, HaarLetter):
            raise TypeError(f"expected Haar letters, got {l!r}")
    if len({l.leg for l in letters}) > 1:
        return False
    if sum(l.power for l in letters) != 0:
        return False
    powers = [l.power for l in letters]
    if all(abs(p) == 1 for p in powers):
        return all(a == -b for a, b in zip(powers, powers[1:]))
    return True


def contributing_partitions(fp: FreeProduct, letters: Sequence[Letter]) -> List[NCPartition]:
    """Partitions of the letter positions whose partitioned cumulant is not
    forced to vanish: blocks must stay within one leg, and Haar blocks must
    pass the alternating generator/inverse filter."""
    letters = tuple(letters)
    m = len(letters)
    out = []
    for p in enumerate_nc(m):
        ok = True
        for block in p.blocks:
            picked = tuple(letters[i - 1] for i in block)
            legs = {l.leg for l in picked}
            if len(legs) > 1:
                ok = False
                break
            leg = fp.leg(picked[0].leg)
            if leg.kind == "haar":
                if not r_diagonal_filter(picked):  # type: ignore[arg-type]
                    ok = False
                    break
        if not ok:
            continue
        out.append(p)
    return out


# ---------------------------------------------------------------------------
# The standard model and model files


def standard_model(extra_legs: Iterable[Leg] = ()) -> FreeProduct:
    """Trig leg ``f`` plus Haar legs ``u`` and ``v``, the ambient free
    product used by the 2x2 matrix model."""
    legs: List[Leg] = [TrigLeg("f"), HaarLeg("u"), HaarLeg("v")]
    legs.extend(extra_legs)
    return FreeProduct(legs)


def legs_from_model_dict(doc: dict) -> List[Leg]:
    """Parse the JSON model document: a ``legs`` array of declarations with
    ``kind`` in {"finite_comm", "haar"}; finite_comm legs carry ``m`` and a
    map of named rational vectors."""
    legs: List[Leg] = []
    for decl in doc.get("legs", []):
        kind = decl.get("kind")
        leg_id = decl.get("id")
        if not leg_id or not isinstance(leg_id, str):
            raise ValueError("leg declaration needs a string 'id'")
        if kind == "finite_comm":
            leg = FiniteCommLeg(leg_id, int(decl["m"]))
            for name, vec in decl.get("elements", {}).items():
                leg.add_element(name, vec)
            legs.append(leg)
        elif kind == "haar":
            legs.append(HaarLeg(leg_id))
        else:
            raise ValueError(f"unknown leg kind {kind!r}")
    return legs

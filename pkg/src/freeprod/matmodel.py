"""2x2 matrices over the free-product algebra, the model constants, and
exhaustive freeness harnesses.

The ambient algebra is the free product of the trig leg (generated by
c = cos theta, s = sin theta), two Haar unitaries u, v, and any declared
finite commutative legs.  The model constants are

    U = (0 u; 0 0)        V = (0 v; 0 0)       W = (c -s; s c)
    X = W V W*            P = U U*             Q = X X* = W P W*
    P0 = P - 1/2          Q0 = Q - 1/2

with the normalized matrix trace Tr(A) = (tr(A11) + tr(A22)) / 2.

Freeness of two sets of matrices is checked at desk scale: every
alternating product of centered generators, over all four start/end
patterns up to a length bound, must have exactly vanishing trace - and,
stronger, both diagonal entries must have vanishing scalar trace.  When a
product involves an off-diagonal generator, the off-diagonal entries are
checked as well.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .freeword import FreeProduct, NCPoly, standard_model
from .trigalg import PiValue, TrigPoly


class Mat2:
    """2x2 matrix over NCPoly, tied to a FreeProduct for multiplication."""

    __slots__ = ("fp", "e")

    def __init__(self, fp: FreeProduct, entries: Sequence[Sequence[NCPoly]]):
        self.fp = fp
        self.e = ((entries[0][0], entries[0][1]), (entries[1][0], entries[1][1]))

    @classmethod
    def zero(cls, fp: FreeProduct) -> "Mat2":
        z = NCPoly.zero()
        return cls(fp, ((z, z), (z, z)))

    @classmethod
    def identity(cls, fp: FreeProduct) -> "Mat2":
        one = NCPoly.unit()
        z = NCPoly.zero()
        return cls(fp, ((one, z), (z, one)))

    @classmethod
    def diag(cls, fp: FreeProduct, a: NCPoly, d: NCPoly) -> "Mat2":
        z = NCPoly.zero()
        return cls(fp, ((a, z), (z, d)))

    @classmethod
    def scalar(cls, fp: FreeProduct, q) -> "Mat2":
        one = NCPoly.unit(q)
        z = NCPoly.zero()
        return cls(fp, ((one, z), (z, one)))

    def __matmul__(self, other: "Mat2") -> "Mat2":
        a, b = self.e, other.e
        mul = self.fp.mul
        return Mat2(self.fp, (
            (mul(a[0][0], b[0][0]) + mul(a[0][1], b[1][0]),
             mul(a[0][0], b[0][1]) + mul(a[0][1], b[1][1])),
            (mul(a[1][0], b[0][0]) + mul(a[1][1], b[1][0]),
             mul(a[1][0], b[0][1]) + mul(a[1][1], b[1][1])),
        ))

    def __add__(self, other: "Mat2") -> "Mat2":
        a, b = self.e, other.e
        return Mat2(self.fp, tuple(
            tuple(a[i][j] + b[i][j] for j in range(2)) for i in range(2)))

    def __sub__(self, other: "Mat2") -> "Mat2":
        a, b = self.e, other.e
        return Mat2(self.fp, tuple(
            tuple(a[i][j] - b[i][j] for j in range(2)) for i in range(2)))

    def __neg__(self) -> "Mat2":
        return Mat2(self.fp, tuple(tuple(-x for x in row) for row in self.e))

    def scaled(self, q) -> "Mat2":
        return Mat2(self.fp, tuple(tuple(x.scaled(q) for x in row) for row in self.e))

    def adjoint(self) -> "Mat2":
        a = self.e
        return Mat2(self.fp, (
            (a[0][0].adjoint(), a[1][0].adjoint()),
            (a[0][1].adjoint(), a[1][1].adjoint()),
        ))

    def power(self, n: int) -> "Mat2":
        if n < 0:
            raise ValueError("nonnegative powers only")
        out = Mat2.identity(self.fp)
        for _ in range(n):
            out = out @ self
        return out

    def __eq__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        return self.e == other.e

    def Tr(self) -> PiValue:
        half = Fraction(1, 2)
        return (self.fp.trace(self.e[0][0]) + self.fp.trace(self.e[1][1])) * half

    def __str__(self):
        return (f"[[{self.e[0][0]}, {self.e[0][1]}],"
                f" [{self.e[1][0]}, {self.e[1][1]}]]")

    __repr__ = __str__


@dataclass
class CheckReport:
    """Identity-check outcome; failures carry the offending item."""

    harness: str
    max_len: int
    words_checked: int
    failures: List[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "harness": self.harness,
            "max_len": self.max_len,
            "words_checked": self.words_checked,
            "failures": self.failures,
        }


class MatrixModel:
    """Model constants plus the verification harnesses."""

    def __init__(self, fp: Optional[FreeProduct] = None):
        self.fp = fp if fp is not None else standard_model()
        f = self.fp.leg("f")
        u = self.fp.leg("u")
        v = self.fp.leg("v")
        self._c = f.c()
        self._s = f.s()
        self._u = u
        self._v = v
        nc = lambda *letters: self.fp.normalize(letters)  # noqa: E731
        z = NCPoly.zero()
        fp_ = self.fp
        self.U = Mat2(fp_, ((z, nc(u.gen(1))), (z, z)))
        self.V = Mat2(fp_, ((z, nc(v.gen(1))), (z, z)))
        self.W = Mat2(fp_, ((nc(self._c), -nc(self._s)), (nc(self._s), nc(self._c))))
        self.X = self.W @ self.V @ self.W.adjoint()
        self.P = self.U @ self.U.adjoint()
        self.Q = self.X @ self.X.adjoint()
        half = Fraction(1, 2)
        self.P0 = self.P - Mat2.scalar(fp_, half)
        self.Q0 = self.Q - Mat2.scalar(fp_, half)

    def constants(self) -> Dict[str, Mat2]:
        return {
            "U": self.U, "V": self.V, "W": self.W, "X": self.X,
            "P": self.P, "Q": self.Q, "P0": self.P0, "Q0": self.Q0,
        }

    def trig_mat(self, entries: Sequence[Sequence[TrigPoly]]) -> Mat2:
        f = self.fp.leg("f")
        return Mat2(self.fp, tuple(
            tuple(self.fp.normalize([f.letter(p)]) for p in row) for row in entries))

    # -- explicit identities --------------------------------------------------

    def verify_rotation(self, r_max: int) -> CheckReport:
        """(2P0 2Q0)^r is the rotation block (c_{2r} s_{2r}; -s_{2r} c_{2r})
        and (2Q0 2P0)^r 2Q0 is the reflection block
        (c_{2r+2} s_{2r+2}; s_{2r+2} -c_{2r+2}), entrywise exactly."""
        if not (1 <= r_max <= 50):
            raise ValueError("r_max must be in 1..50")
        report = CheckReport("rotation", r_max, 0)
        p2, q2 = self.P0.scaled(2), self.Q0.scaled(2)
        pq = p2 @ q2
        qp = q2 @ p2
        pq_pow = Mat2.identity(self.fp)
        qp_pow = Mat2.identity(self.fp)
        for r in range(1, r_max + 1):
            pq_pow = pq_pow @ pq
            qp_pow = qp_pow @ qp
            cos2r = TrigPoly.cos(2 * r)
            sin2r = TrigPoly.sin(2 * r)
            want_rot = self.trig_mat(((cos2r, sin2r), (-sin2r, cos2r)))
            report.words_checked += 1
            if pq_pow != want_rot:
                report.failures.append({"r": r, "which": "(2P0.2Q0)^r",
                                        "got": str(pq_pow)})
            cos2 = TrigPoly.cos(2 * r + 2)
            sin2 = TrigPoly.sin(2 * r + 2)
            want_ref = self.trig_mat(((cos2, sin2), (sin2, -cos2)))
            got = qp_pow @ q2
            report.words_checked += 1
            if got != want_ref:
                report.failures.append({"r": r, "which": "(2Q0.2P0)^r 2Q0",
                                        "got": str(got)})
        return report

    def verify_partial_isometries(self) -> CheckReport:
        """U*U + UU* = 1 and X*X + XX* = 1, the absorption identities
        PU = U, QX = X, UP = 0, XQ = 0, and (2P0)^2 = (2Q0)^2 = 1."""
        fp = self.fp
        one = Mat2.identity(fp)
        zero = Mat2.zero(fp)
        checks = [
            ("U*U + UU* = 1", self.U.adjoint() @ self.U + self.U @ self.U.adjoint(), one),
            ("X*X + XX* = 1", self.X.adjoint() @ self.X + self.X @ self.X.adjoint(), one),
            ("U^2 = 0", self.U @ self.U, zero),
            ("(U*)^2 = 0", self.U.adjoint() @ self.U.adjoint(), zero),
            ("PU = U", self.P @ self.U, self.U),
            ("QX = X", self.Q @ self.X, self.X),
            ("UP = 0", self.U @ self.P, zero),
            ("XQ = 0", self.X @ self.Q, zero),
            ("(2P0)^2 = 1", self.P0.scaled(2) @ self.P0.scaled(2), one),
            ("(2Q0)^2 = 1", self.Q0.scaled(2) @ self.Q0.scaled(2), one),
            ("Q = W P W*", self.W @ self.P @ self.W.adjoint(), self.Q),
            ("X = W V W*", self.W @ self.V @ self.W.adjoint(), self.X),
        ]
        report = CheckReport("partial_isometries", 0, 0)
        for name, got, want in checks:
            report.words_checked += 1
            if got != want:
                report.failures.append({"identity": name, "got": str(got)})
        return report

    # -- freeness harness ------------------------------------------------------

    def check_freeness(self, gen_a: Sequence[Tuple[str, Mat2]],
                       gen_b: Sequence[Tuple[str, Mat2]],
                       max_len: int, harness: str = "freeness",
                       offdiag_names: Iterable[str] = ()) -> CheckReport:
        """Every alternating product g1 h1 g2 h2 ... (all four start/end
        patterns, lengths 1..max_len) of centered generators must have
        Tr = 0; genuine products (length >= 2) must also have both diagonal
        entries of scalar trace 0, and products containing a generator
        listed in ``offdiag_names`` (the partial-isometry generators) are
        checked on all four entries.  A lone centered generator only
        carries the matrix-trace identity: diag(1, -1) has Tr = 0 but its
        diagonal entries are not scalar-trace-free.

        Precondition: every generator is centered (Tr = 0) - violations
        raise rather than report.
        """
        for name, g in list(gen_a) + list(gen_b):
            if not g.Tr().is_zero():
                raise ValueError(f"generator {name} is not centered: Tr = {g.Tr()}")
        offdiag = frozenset(offdiag_names)
        report = CheckReport(harness, max_len, 0)

        def walk(prod: Optional[Mat2], names: List[str], full_check: bool,
                 nxt: Sequence[Tuple[str, Mat2]], other: Sequence[Tuple[str, Mat2]],
                 remaining: int) -> None:
            if names:
                report.words_checked += 1
                self._check_product(report, prod, names, full_check)
            if remaining == 0:
                return
            for name, g in nxt:
                walk(g if prod is None else prod @ g,
                     names + [name],
                     full_check or name in offdiag,
                     other, nxt, remaining - 1)

        walk(None, [], False, gen_a, gen_b, max_len)
        walk(None, [], False, gen_b, gen_a, max_len)
        return report

    def _check_product(self, report: CheckReport, prod: Mat2, names: List[str],
                       full_check: bool) -> None:
        word = " ".join(names)
        if len(names) == 1:
            t = prod.Tr()
            if not t.is_zero():
                report.failures.append({"word": word, "entry": "Tr", "value": str(t)})
            if not full_check:
                return
        entries = [(0, 0), (1, 1)] + ([(0, 1), (1, 0)] if full_check else [])
        for i, j in entries:
            t = self.fp.trace(prod.e[i][j])
            if not t.is_zero():
                report.failures.append({
                    "word": word, "entry": f"{i + 1}{j + 1}", "value": str(t),
                })

    # -- embedded submodels ---------------------------------------------------

    def embed_sum_model(self, a1: NCPoly, a2: NCPoly) -> Mat2:
        """diag(a1, a2): the copy of a two-summand direct sum inside the
        matrix algebra."""
        return Mat2.diag(self.fp, a1, a2)

    def embed_conjugated_sum(self, b1: NCPoly, b2: NCPoly) -> Mat2:
        """W diag(b1, b2) W*: the rotated copy of a second direct sum."""
        return self.W @ Mat2.diag(self.fp, b1, b2) @ self.W.adjoint()

    def embed_matrix_model(self, entries: Sequence[Sequence[NCPoly]]) -> Mat2:
        """Y* (a_ij) Y with Y = diag(1, u): the twisted copy of a full 2x2
        matrix algebra over a leg."""
        y = Mat2.diag(self.fp, NCPoly.unit(),
                      self.fp.normalize([self._u.gen(1)]))
        m = Mat2(self.fp, entries)
        return y.adjoint() @ m @ y

    def embed_matrix_model_conj(self, entries: Sequence[Sequence[NCPoly]]) -> Mat2:
        """W Z* (b_ij) Z W* with Z = diag(1, v): the second twisted copy."""
        z = Mat2.diag(self.fp, NCPoly.unit(),
                      self.fp.normalize([self._v.gen(1)]))
        m = Mat2(self.fp, entries)
        return self.W @ z.adjoint() @ m @ z @ self.W.adjoint()

    # -- standard generator sets -----------------------------------------------

    def generators(self, harness: str) -> Tuple[List[Tuple[str, Mat2]],
                                                List[Tuple[str, Mat2]],
                                                frozenset]:
        """The centered spanning sets for the named harness, plus the names
        of the partial-isometry generators (whose presence in a word makes
        all four entry traces vanish, not just the diagonal ones).

        PQ: {2P0} vs {2Q0}; UX: {U, U*, 2P0} vs {X, X*, 2Q0};
        PX: {2P0} vs {X, X*, 2Q0}; UQ: {U, U*, 2P0} vs {2Q0}.
        """
        p2 = ("2P0", self.P0.scaled(2))
        q2 = ("2Q0", self.Q0.scaled(2))
        a_full = [("U", self.U), ("U*", self.U.adjoint()), p2]
        b_full = [("X", self.X), ("X*", self.X.adjoint()), q2]
        offdiag = frozenset({"U", "U*", "X", "X*"})
        table = {
            "PQ": ([p2], [q2], frozenset()),
            "UX": (a_full, b_full, offdiag),
            "PX": ([p2], b_full, offdiag),
            "UQ": (a_full, [q2], offdiag),
        }
        if harness not in table:
            raise ValueError(f"unknown harness {harness!r}; expected one of "
                             f"{sorted(table)} or sum/matrix")
        return table[harness]


def _two_atom_leg(fp: FreeProduct, leg_id: str) -> "FiniteCommLeg":
    from .freeword import FiniteCommLeg

    if leg_id in fp.legs:
        return fp.legs[leg_id]  # type: ignore[return-value]
    leg = FiniteCommLeg(leg_id, 2, {"h": (1, -1)})
    fp.add_leg(leg)
    return leg


def sum_model_generators(mm: MatrixModel) -> Tuple[List[Tuple[str, Mat2]],
                                                   List[Tuple[str, Mat2]],
                                                   frozenset]:
    """Desk-scale direct-sum freeness instance: four fresh two-atom
    commutative legs A1, A2, B1, B2; the first family embeds centered
    pairs as diag(a1, a2), the second as W diag(b1, b2) W*.  The three
    generators per side span the centered part of each two-summand sum."""
    fp = mm.fp
    a1 = _two_atom_leg(fp, "A1")
    a2 = _two_atom_leg(fp, "A2")
    b1 = _two_atom_leg(fp, "B1")
    b2 = _two_atom_leg(fp, "B2")
    one = NCPoly.unit()
    z = NCPoly.zero()
    ha1 = fp.normalize([a1.element("h")])
    ha2 = fp.normalize([a2.element("h")])
    hb1 = fp.normalize([b1.element("h")])
    hb2 = fp.normalize([b2.element("h")])
    gen_a = [
        ("a-sign", mm.embed_sum_model(one, -one)),
        ("a-left", mm.embed_sum_model(ha1, z)),
        ("a-right", mm.embed_sum_model(z, ha2)),
    ]
    gen_b = [
        ("b-sign", mm.embed_conjugated_sum(one, -one)),
        ("b-left", mm.embed_conjugated_sum(hb1, z)),
        ("b-right", mm.embed_conjugated_sum(z, hb2)),
    ]
    return gen_a, gen_b, frozenset()


def matrix_model_generators(mm: MatrixModel) -> Tuple[List[Tuple[str, Mat2]],
                                                      List[Tuple[str, Mat2]],
                                                      frozenset]:
    """Desk-scale matrix-times-matrix freeness instance: 2x2 matrices over
    a two-atom leg A embedded by conjugation with diag(1, u), against the
    same shape over a leg B embedded by W diag(1, v)* . diag(1, v) W*.
    The seven generators per side span the centered 2x2 matrices."""
    fp = mm.fp
    a = _two_atom_leg(fp, "A")
    b = _two_atom_leg(fp, "B")
    one = NCPoly.unit()
    z = NCPoly.zero()

    def side(h: NCPoly, embed) -> List[Tuple[str, Mat2]]:
        shapes = [
            ("11h", ((h, z), (z, z))),
            ("22h", ((z, z), (z, h))),
            ("sign", ((one, z), (z, -one))),
            ("12", ((z, one), (z, z))),
            ("12h", ((z, h), (z, z))),
            ("21", ((z, z), (one, z))),
            ("21h", ((z, z), (h, z))),
        ]
        return [(name, embed(entries)) for name, entries in shapes]

    ha = fp.normalize([a.element("h")])
    hb = fp.normalize([b.element("h")])
    gen_a = [("a" + n, m) for n, m in side(ha, mm.embed_matrix_model)]
    gen_b = [("b" + n, m) for n, m in side(hb, mm.embed_matrix_model_conj)]
    return gen_a, gen_b, frozenset()

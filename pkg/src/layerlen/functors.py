"""Pre-radical expressions, torsion radicals and layer lengths.

Functor expressions are evaluated on objects only.  Subfunctors of the
identity produce submodules (``sub``); every expression produces a value
module (``value``).  Layer lengths iterate a second functor until the
first one vanishes; the radical and socle variants always terminate
because their iterations strictly drop total dimension, while the generic
form detects stabilization and reports infinity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from . import linalg, reps
from .errors import ContractViolation, ParseError

INFINITE = math.inf

Verdict = Literal["yes", "no", "unknown"]


def _both(a: Verdict, b: Verdict) -> Verdict:
    return "yes" if a == "yes" and b == "yes" else "unknown"


@dataclass(frozen=True)
class FunctorMeta:
    """Three-valued structural facts about a functor expression.

    Static verdicts come from general lemmas (pre-radicals preserve monos;
    torsion radicals are idempotent radicals; t_S preserves epis because
    its torsion-free class is closed under quotients; q of an idempotent
    pre-radical with submodule-closed torsion class preserves monos).
    ``t_sub_closed`` records whether the torsion class {M : a(M)=M} is
    known to be closed under submodules.
    """

    preradical: Verdict = "unknown"
    radical: Verdict = "unknown"
    idempotent: Verdict = "unknown"
    preserves_epis: Verdict = "unknown"
    preserves_monos: Verdict = "unknown"
    t_sub_closed: Verdict = "unknown"

    def as_dict(self):
        return {
            "preradical": self.preradical,
            "radical": self.radical,
            "idempotent": self.idempotent,
            "preserves_epis": self.preserves_epis,
            "preserves_monos": self.preserves_monos,
        }


class Functor:
    """Base class of evaluable functor expressions."""

    is_subfunctor = False

    def sub(self, M: reps.Rep) -> reps.SubRep:
        raise ContractViolation(f"{self.describe()} is not a subfunctor of Id")

    def value(self, M: reps.Rep) -> reps.Rep:
        if self.is_subfunctor:
            return reps.realize(self.sub(M))[0]
        raise NotImplementedError

    @property
    def meta(self) -> FunctorMeta:
        raise NotImplementedError

    def describe(self) -> str:
        raise NotImplementedError

    def __repr__(self):
        return self.describe()


class Identity(Functor):
    is_subfunctor = True

    def sub(self, M):
        return reps.full_subrep(M)

    def value(self, M):
        return M

    @property
    def meta(self):
        return FunctorMeta("yes", "yes", "yes", "yes", "yes", "yes")

    def describe(self):
        return "id"


class Rad(Functor):
    is_subfunctor = True

    def sub(self, M):
        return reps.radical(M)

    @property
    def meta(self):
        # T_rad = {M : rad M = M} = {0} by Nakayama, trivially sub-closed
        return FunctorMeta("yes", "yes", "unknown", "yes", "yes", "yes")

    def describe(self):
        return "rad"


class Soc(Functor):
    is_subfunctor = True

    def sub(self, M):
        return reps.socle(M)

    @property
    def meta(self):
        # socle is left exact: idempotent with semisimples sub-closed
        return FunctorMeta("yes", "unknown", "yes", "unknown", "yes", "yes")

    def describe(self):
        return "soc"


def _vertex_set(algebra, vertices) -> frozenset[int]:
    out = set()
    for v in vertices:
        out.add(reps._vertex_index(algebra, v))
    return frozenset(out)


class TorsT(Functor):
    """t_S: the torsion radical of the ttf-theory generated by S.

    t_S(M) is the smallest submodule N with M/N supported on the S
    vertices, i.e. the submodule generated by every vector sitting at a
    non-S vertex.
    """

    is_subfunctor = True

    def __init__(self, algebra, vertices):
        self.algebra = algebra
        self.vertices = _vertex_set(algebra, vertices)

    def sub(self, M):
        gens = []
        for v in range(len(M.dims)):
            if v in self.vertices:
                gens.append([])
            else:
                gens.append(list(linalg.eye(M.dims[v])))
        return reps.generated_subrep(M, gens)

    @property
    def meta(self):
        return FunctorMeta("yes", "yes", "yes", "yes", "yes", "unknown")

    def describe(self):
        labels = sorted(self.algebra.quiver.vertices[v] for v in self.vertices)
        return "t{" + ",".join(labels) + "}"


class TorsX(Functor):
    """x_S: the largest submodule supported on the S vertices."""

    is_subfunctor = True

    def __init__(self, algebra, vertices):
        self.algebra = algebra
        self.vertices = _vertex_set(algebra, vertices)

    def sub(self, M):
        p = M.algebra.p
        allowed = [
            linalg.Subspace.full(p, M.dims[v])
            if v in self.vertices
            else linalg.Subspace.zero(p, M.dims[v])
            for v in range(len(M.dims))
        ]
        return reps.largest_subrep_inside(M, allowed)

    @property
    def meta(self):
        # torsion class is X_S, closed under submodules
        return FunctorMeta("yes", "yes", "yes", "unknown", "yes", "yes")

    def describe(self):
        labels = sorted(self.algebra.quiver.vertices[v] for v in self.vertices)
        return "x{" + ",".join(labels) + "}"


class TorsGen(Functor):
    """Idempotent radical of the torsion theory generated by a module list.

    Computed as the trace closure: enlarge N until the generators have no
    nonzero maps into M/N.
    """

    is_subfunctor = True

    def __init__(self, generators: list[reps.Rep], name: str | None = None):
        if not generators:
            raise ContractViolation("TorsGen needs at least one generator")
        self.generators = tuple(generators)
        self.name = name

    def sub(self, M):
        current = trace(list(self.generators), M)
        for _ in range(M.total_dim + 1):
            quot, proj = reps.quotient(M, current)
            upstairs = trace(list(self.generators), quot)
            if upstairs.is_zero():
                return current
            p = M.algebra.p
            pulled = []
            for v in range(len(M.dims)):
                pulled.append(linalg.preimage(proj.mats[v], upstairs.spaces[v], p))
            current = reps.SubRep(M, tuple(pulled))
        return current

    @property
    def meta(self):
        return FunctorMeta("yes", "yes", "yes", "unknown", "yes", "unknown")

    def describe(self):
        if self.name:
            return self.name
        dims = ",".join(str(sum(g.dims)) for g in self.generators)
        return f"gen[{dims}]"


class QuotOf(Functor):
    """q_a = Id/a for a subfunctor a of the identity."""

    def __init__(self, inner: Functor):
        if not inner.is_subfunctor:
            raise ContractViolation("q(...) requires a subfunctor of Id")
        self.inner = inner

    def value(self, M):
        return reps.quotient(M, self.inner.sub(M))[0]

    @property
    def meta(self):
        im = self.inner.meta
        return FunctorMeta(
            preradical="no",
            radical="no",
            idempotent="yes" if im.radical == "yes" else "unknown",
            preserves_epis="yes",
            preserves_monos="yes"
            if im.idempotent == "yes" and im.t_sub_closed == "yes"
            else "unknown",
            t_sub_closed="unknown",
        )

    def describe(self):
        return f"q({self.inner.describe()})"


class Compose(Functor):
    """outer o inner, evaluated on values; a subfunctor when both are."""

    def __init__(self, outer: Functor, inner: Functor):
        self.outer = outer
        self.inner = inner
        self.is_subfunctor = outer.is_subfunctor and inner.is_subfunctor

    def sub(self, M):
        if not self.is_subfunctor:
            return super().sub(M)
        inner_sub = self.inner.sub(M)
        realized, incl = reps.realize(inner_sub)
        return incl.apply_subrep(self.outer.sub(realized))

    def value(self, M):
        return self.outer.value(self.inner.value(M))

    @property
    def meta(self):
        om, im = self.outer.meta, self.inner.meta
        pre = _both(om.preradical, im.preradical)
        return FunctorMeta(
            preradical=pre,
            radical="unknown",
            idempotent="unknown",
            preserves_epis=_both(om.preserves_epis, im.preserves_epis),
            preserves_monos=_both(om.preserves_monos, im.preserves_monos),
            t_sub_closed="unknown",
        )

    def describe(self):
        return f"{self.outer.describe()}.{self.inner.describe()}"


class SocQuot(Functor):
    """G_a: M -> a(M)/soc(a(M)) (the socle-quotient companion of a)."""

    def __init__(self, inner: Functor):
        self.inner = inner

    def value(self, M):
        X = self.inner.value(M)
        return reps.quotient(X, reps.socle(X))[0]

    @property
    def meta(self):
        im = self.inner.meta
        # Id/soc preserves both monos and epis, so G_a inherits from a.
        return FunctorMeta(
            preradical="no",
            radical="unknown",
            idempotent="unknown",
            preserves_epis=im.preserves_epis,
            preserves_monos=im.preserves_monos,
            t_sub_closed="unknown",
        )

    def describe(self):
        return f"G({self.inner.describe()})"


def alpha_radical(inner: Functor) -> Functor:
    """F_a = rad o a, the iteration step of the a-radical layer length."""
    return Compose(Rad(), inner)


def evaluate(f: Functor, M: reps.Rep) -> reps.Rep:
    return f.value(M)


def trace(generators: list[reps.Rep], M: reps.Rep) -> reps.SubRep:
    """Trace of the generator list in M: the sum of all hom images."""
    p = M.algebra.p
    accs = [linalg.RrefAccumulator(d, p) for d in M.dims]
    for X in generators:
        for f in reps.hom_space(X, M):
            for v in range(len(M.dims)):
                for col in f.mats[v].T:
                    accs[v].add(col)
    return reps.SubRep(M, tuple(acc.to_subspace() for acc in accs))


def layer_length(alpha: Functor, beta: Functor, M: reps.Rep):
    """min{i >= 0 : alpha(beta^i(M)) = 0}, or math.inf.

    Infinity is reported when the beta-iteration stabilizes up to
    isomorphism with a nonzero alpha-value, or runs past total_dim(M)+1
    steps without reaching zero.
    """
    cur = M
    for i in range(M.total_dim + 2):
        if evaluate(alpha, cur).total_dim == 0:
            return i
        nxt = evaluate(beta, cur)
        if nxt.total_dim == cur.total_dim and cur.total_dim > 0:
            if reps.is_isomorphic(cur, nxt):
                return INFINITE
        cur = nxt
    return INFINITE


def radical_layer_length(alpha: Functor, M: reps.Rep):
    """dl^a(M): layer length along F_a = rad o a."""
    return layer_length(alpha, alpha_radical(alpha), M)


def socle_layer_length(alpha: Functor, M: reps.Rep):
    """dl_a(M): layer length along G_a = a/(soc o a)."""
    return layer_length(alpha, SocQuot(alpha), M)


def loewy_length(M: reps.Rep):
    return radical_layer_length(Identity(), M)


@dataclass(frozen=True)
class Membership:
    in_t: bool
    in_x: bool
    in_f: bool

    def as_dict(self):
        return {"in_t": self.in_t, "in_x": self.in_x, "in_f": self.in_f}


def class_membership(algebra, vertices, M: reps.Rep) -> Membership:
    """Membership of M in T_S / X_S / F_S for the ttf-theory of S.

    X_S is a support condition (the composition factors of a quiver
    representation at vertex v are copies of S_v); T_S and F_S are read
    off the top and the socle.
    """
    S = _vertex_set(algebra, vertices)
    in_x = all(M.dims[v] == 0 for v in range(len(M.dims)) if v not in S)
    top_dims = reps.top(M).dims
    in_t = all(top_dims[v] == 0 for v in S)
    soc_dims = reps.socle(M).dims
    in_f = all(soc_dims[v] == 0 for v in S)
    return Membership(in_t, in_x, in_f)


@dataclass(frozen=True)
class TorsionData:
    """An idempotent radical together with its two module classes."""

    functor: Functor

    def radical_of(self, M: reps.Rep) -> reps.SubRep:
        return self.functor.sub(M)

    def in_torsion(self, M: reps.Rep) -> bool:
        return self.functor.sub(M).is_full()

    def in_free(self, M: reps.Rep) -> bool:
        return self.functor.sub(M).is_zero()


def torsion_from_simples(algebra, vertices) -> TorsionData:
    return TorsionData(TorsT(algebra, vertices))


def cotorsion_from_simples(algebra, vertices) -> TorsionData:
    return TorsionData(TorsX(algebra, vertices))


def torsion_generated_by(generators: list[reps.Rep], name=None) -> TorsionData:
    return TorsionData(TorsGen(generators, name=name))


# ---------------------------------------------------------------------------
# mini-language:  id | rad | soc | t{1,2} | x{1} | q(E) | F(E) | G(E) | E.E


def parse_functor(text: str, algebra) -> Functor:
    s = "".join(text.split())
    expr, pos = _parse_expr(s, 0, algebra)
    if pos != len(s):
        raise ParseError(f"unexpected trailing input at {pos}: {s[pos:]!r}")
    return expr


def _parse_expr(s: str, pos: int, algebra):
    factors = []
    expr, pos = _parse_atom(s, pos, algebra)
    factors.append(expr)
    while pos < len(s) and s[pos] == ".":
        expr, pos = _parse_atom(s, pos + 1, algebra)
        factors.append(expr)
    out = factors[-1]
    for f in reversed(factors[:-1]):
        out = Compose(f, out)
    return out, pos


def _parse_atom(s: str, pos: int, algebra):
    if s.startswith("id", pos):
        return Identity(), pos + 2
    if s.startswith("rad", pos):
        return Rad(), pos + 3
    if s.startswith("soc", pos):
        return Soc(), pos + 3
    for head, cls in (("t{", TorsT), ("x{", TorsX)):
        if s.startswith(head, pos):
            end = s.find("}", pos)
            if end < 0:
                raise ParseError("unterminated vertex set")
            body = s[pos + 2 : end]
            labels = [x for x in body.split(",") if x] if body else []
            try:
                expr = cls(algebra, labels)
            except Exception as exc:
                raise ParseError(str(exc)) from exc
            return expr, end + 1
    for head, wrap in (
        ("q(", lambda e: QuotOf(e)),
        ("F(", alpha_radical),
        ("G(", lambda e: SocQuot(e)),
        ("(", lambda e: e),
    ):
        if s.startswith(head, pos):
            inner, nxt = _parse_expr(s, pos + len(head), algebra)
            if nxt >= len(s) or s[nxt] != ")":
                raise ParseError("missing closing parenthesis")
            try:
                return wrap(inner), nxt + 1
            except ContractViolation as exc:
                raise ParseError(str(exc)) from exc
    raise ParseError(f"cannot parse functor expression at position {pos}: {s[pos:]!r}")

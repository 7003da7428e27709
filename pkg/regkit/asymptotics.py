#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Asymptotic regularity
=====================

Non-standard bigraded rings
---------------------------
.. autosummary::
    :toctree: generated/

    nonstandard_ring
    rho
    RhoTable
    rho_table
    rho_initial_invariance
    PrimeFactor
    prime_filtration
    rho_linear_law_monomial
    rho_from_filtration

Powers
------
.. autosummary::
    :toctree: generated/

    ideal_power
    power_module
    reg_power_sequence
    LinearLaw
    VanishingLaw
    NotStabilized
    fit_linear_law
    koszul_power_laws
"""

import logging
import warnings
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from joblib import Parallel, delayed

from ._cache import cache
from ._typing import ExtendedInt, Monomial, Multidegree
from .core.field import FieldSpec, QQ
from .core.groebner import buchberger, syzygies
from .core.ideal import Ideal
from .core.module import FreeModule, ModuleVector
from .core.order import DEGREVLEX, MonomialOrder
from .core.poly import Polynomial
from .core.ring import (
    PolynomialRing,
    degree_add,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
    monomial_quotient,
)
from .core.slices import quotient_dimension
from .koszul import koszul_summary
from .resolve import (
    Cokernel,
    PresentedModule,
    RESOLUTION_ORDER,
    presentation_of,
    regularity,
)
from .util.exceptions import CrossCheckError, ParameterError, RegkitWarning
from .util.utils import NEG_INF, env_n_jobs, format_value, is_neg_inf, valid_int

__all__ = [
    "nonstandard_ring",
    "rho",
    "RhoTable",
    "rho_table",
    "RhoInvarianceReport",
    "rho_initial_invariance",
    "PrimeFactor",
    "prime_filtration",
    "rho_linear_law_monomial",
    "rho_from_filtration",
    "ideal_power",
    "power_module",
    "reg_power_sequence",
    "LinearLaw",
    "VanishingLaw",
    "NotStabilized",
    "fit_linear_law",
    "KoszulPowerLaws",
    "koszul_power_laws",
]

logger = logging.getLogger(__name__)


# ----- laws -----
@dataclass
class LinearLaw:
    """``f(v) = delta * v + c`` for ``v >= v_start``.

    ``verified_to`` is the last ``v`` the law was observed at; ``None``
    means the law is a proven closed form valid for every ``v >= v_start``.
    """

    delta: int
    c: int
    v_start: int
    verified_to: Optional[int] = None
    certified: bool = False

    def value(self, v: int) -> ExtendedInt:
        if v < self.v_start:
            raise ParameterError(f"v={v} lies before the start of the law ({self.v_start})")
        return self.delta * v + self.c

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": "linear",
            "delta": self.delta,
            "c": self.c,
            "v_start": self.v_start,
            "verified_to": self.verified_to,
            "certified": self.certified,
        }

    def __str__(self) -> str:
        return f"{self.delta}*v + {self.c} (v >= {self.v_start})"


@dataclass
class VanishingLaw:
    """``f(v) = -inf`` for every ``v > v_last``.

    ``value`` is ``f(v_last)``; ``v_last = None`` means ``f`` vanishes
    everywhere on the observed range.
    """

    v_last: Optional[int]
    value: ExtendedInt = NEG_INF
    certified: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return format_value(
            {"kind": "vanishing", "v_last": self.v_last, "value": self.value, "certified": self.certified}
        )

    def __str__(self) -> str:
        return f"-inf for v > {self.v_last}"


@dataclass
class NotStabilized:
    """No constant-slope window of at least three points was observed."""

    values: List[Tuple[int, ExtendedInt]]
    reason: str = "no terminal window of three points with constant differences"

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": "not-stabilized", "reason": self.reason}

    def __str__(self) -> str:
        return "not yet stabilized"


Law = Union[LinearLaw, VanishingLaw, NotStabilized]


# ----- non-standard rings and rho -----
def nonstandard_ring(
    degrees: Sequence[int], field: FieldSpec = QQ, names: Optional[Sequence[str]] = None
) -> PolynomialRing:
    """``K[Y_1, ..., Y_g]`` with ``deg Y_j = (d_j, 1)``.

    Examples
    --------
    >>> A = nonstandard_ring([2, 3])
    >>> str(A)
    'QQ[Y1,Y2] deg Y1 = (2,1) deg Y2 = (3,1)'
    """
    degrees = [valid_int(d, name="d_j", minimum=0) for d in degrees]
    if names is None:
        names = [f"Y{j + 1}" for j in range(len(degrees))]
    return PolynomialRing(field, names, [(d, 1) for d in degrees])


def _check_nonstandard(ring: PolynomialRing) -> None:
    if ring.arity != 2 or any(d[1] != 1 for d in ring.degrees):
        raise ParameterError(f"{ring} is not graded by (d_j, 1)")


def _as_module(N: Any) -> PresentedModule:
    N = presentation_of(N)
    _check_nonstandard(N.ring)
    return N


def rho(N: Any, v: int) -> ExtendedInt:
    """``rho_N(v) = sup {i : N_(i, v) != 0}``.

    Only finitely many ``i`` can carry ``N_(i, v)``: a generator of degree
    ``(alpha, beta)`` reaches at most ``(v - beta) * max d_j + alpha``. The
    candidates are tested from the top by degree-slice linear algebra.

    Parameters
    ----------
    N : module over a ring from `nonstandard_ring`
    v : int

    Returns
    -------
    int or NEG_INF
        ``NEG_INF`` when ``v`` is below every generator's second degree or
        the whole strand vanishes

    Examples
    --------
    >>> A = nonstandard_ring([2, 3])
    >>> rho(Cokernel(FreeModule.cyclic(A), []), 4)
    12
    """
    N = _as_module(N)
    v = valid_int(v, name="v")
    top = max(d[0] for d in N.ring.degrees)
    gens = [t for t in N.ambient.twists if t[1] <= v]
    if not gens:
        return NEG_INF
    hi = max((v - b) * top + a for a, b in gens)
    lo = min(a for a, _ in gens)
    for i in range(hi, lo - 1, -1):
        if quotient_dimension(N.ambient, N.relations, (i, v)) > 0:
            return i
    return NEG_INF


@dataclass
class RhoTable:
    """``rho_N(v)`` for ``v = 0..v_max``."""

    values: Dict[int, ExtendedInt]
    module: PresentedModule = field(repr=False)

    def to_dict(self) -> Dict[str, Any]:
        return format_value({str(v): r for v, r in sorted(self.values.items())})


def rho_table(N: Any, v_max: int) -> RhoTable:
    N = _as_module(N)
    v_max = valid_int(v_max, name="v_max", minimum=0)
    return RhoTable({v: rho(N, v) for v in range(v_max + 1)}, N)


@dataclass
class RhoInvarianceReport:
    """``rho`` of ``F/U`` against ``rho`` of ``F/in(U)``."""

    original: RhoTable
    initial: RhoTable

    @property
    def holds(self) -> bool:
        return self.original.values == self.initial.values

    def verify(self) -> bool:
        if not self.holds:
            raise CrossCheckError(
                f"rho(F/U) = {self.original.values} differs from rho(F/in(U)) = {self.initial.values}"
            )
        return True


def rho_initial_invariance(
    F: FreeModule,
    U: Sequence[ModuleVector],
    order: MonomialOrder = DEGREVLEX,
    v_max: int = 6,
) -> RhoInvarianceReport:
    """Compare ``rho_{F/U}`` and ``rho_{F/in(U)}`` for ``v = 0..v_max``.

    Examples
    --------
    >>> A = nonstandard_ring([1, 1, 1])
    >>> Y1, Y2, Y3 = A.gens()
    >>> F = FreeModule.cyclic(A)
    >>> rho_initial_invariance(F, [ModuleVector.from_entries(F, [Y1**2 - Y2*Y3])]).holds
    True
    """
    _check_nonstandard(F.ring)
    U = list(U)
    initial = buchberger(U, order, module=F).initial_module() if U else []
    return RhoInvarianceReport(
        rho_table(Cokernel(F, U), v_max), rho_table(Cokernel(F, initial), v_max)
    )


# ----- prime filtrations of monomial modules -----
@dataclass(frozen=True)
class PrimeFactor:
    """A factor ``(A / (Y_j : j not in G))(-shift)`` of a prime filtration.

    Attributes
    ----------
    G : tuple of int
        Indices of the variables acting nontrivially on the factor
    shift : multidegree
        Degree ``(w1, w2)`` of its generator
    component : int
        Basis vector of the ambient free module the factor lives on
    generator : monomial
        Monomial ``m`` with ``J + (m) / J`` equal to this factor
    """

    G: Tuple[int, ...]
    shift: Multidegree
    component: int = 0
    generator: Optional[Monomial] = None


def _minimal_monomials(gens: Sequence[Monomial]) -> List[Monomial]:
    out: List[Monomial] = []
    for m in sorted(set(gens), key=lambda m: (sum(m), m)):
        if not any(monomial_divides(g, m) for g in out):
            out.append(m)
    return out


def _colon(J: Sequence[Monomial], m: Monomial) -> List[Monomial]:
    return _minimal_monomials([monomial_quotient(monomial_lcm(g, m), m) for g in J])


def _first_variable(u: Monomial) -> int:
    return next(i for i, e in enumerate(u) if e)


def _component_filtration(
    ring: PolynomialRing, J: List[Monomial], k: int, twist: Multidegree
) -> List[PrimeFactor]:
    factors = []
    n = ring.ngens
    one = ring.one()
    while one not in J:
        m = one
        while True:
            P = _colon(J, m)
            composite = [u for u in P if sum(u) > 1]
            if not composite:
                break
            u = max(composite)
            i = _first_variable(u)
            m = monomial_mul(m, monomial_quotient(u, ring.variable(i)))
        killed = {_first_variable(u) for u in P}
        G = tuple(j for j in range(n) if j not in killed)
        factors.append(PrimeFactor(G, degree_add(ring.monomial_degree(m), twist), k, m))
        J = _minimal_monomials(J + [m])
    return factors


def prime_filtration(N: Any) -> List[PrimeFactor]:
    """Cyclic prime factors of a monomial module ``F / U``.

    Each component ``A / J_k`` is filtered by repeated colons: starting from
    ``m = 1``, while ``J : m`` has a minimal generator ``u`` that is not a
    variable, ``m`` is multiplied by ``u`` divided by its first variable.
    Once ``J : m`` is generated by variables, ``(J + (m)) / J`` is the
    factor ``A / (J : m)`` shifted by ``deg m``, and ``J`` grows by ``m``.

    Raises
    ------
    ParameterError
        If a relation is not a monomial of a single component

    Examples
    --------
    >>> A = nonstandard_ring([2, 3])
    >>> Y1, Y2 = A.gens()
    >>> F = FreeModule.cyclic(A)
    >>> prime_filtration(Cokernel(F, [ModuleVector.from_entries(F, [Y1*Y2])]))
    [PrimeFactor(G=(1,), shift=(3, 1), component=0, generator=(0, 1)), PrimeFactor(G=(0,), shift=(0, 0), component=0, generator=(0, 0))]
    """
    N = presentation_of(N)
    ring = N.ring
    J: Dict[int, List[Monomial]] = {k: [] for k in range(N.ambient.rank)}
    for r in N.relations:
        if len(r.terms) != 1:
            raise ParameterError(f"relation {r} is not a monomial")
        ((k, m),) = r.terms
        J[k].append(m)
    factors: List[PrimeFactor] = []
    for k, twist in enumerate(N.ambient.twists):
        factors.extend(_component_filtration(ring, _minimal_monomials(J[k]), k, twist))
    logger.debug("prime filtration with %d factors", len(factors))
    return factors


def _factor_of_module(N: Any) -> PrimeFactor:
    N = presentation_of(N)
    if N.ambient.rank != 1:
        raise ParameterError("a prime factor is a cyclic module")
    killed = set()
    for r in N.relations:
        if len(r.terms) != 1:
            raise ParameterError(f"annihilator of {N} is not a monomial prime")
        ((_, m),) = r.terms
        if sum(m) != 1:
            raise ParameterError(f"annihilator of {N} is not a monomial prime")
        killed.add(_first_variable(m))
    G = tuple(j for j in range(N.ring.ngens) if j not in killed)
    return PrimeFactor(G, N.ambient.twists[0])


def rho_linear_law_monomial(
    factor: Any, ring: Optional[PolynomialRing] = None
) -> Union[LinearLaw, VanishingLaw]:
    """Closed form of ``rho`` on a shifted cyclic factor ``A / P``.

    With ``G`` nonempty, ``rho(v) = max_{j in G} d_j * (v - w2) + w1`` for
    every ``v >= w2``. With ``G`` empty the factor is a copy of the field in
    degree ``(w1, w2)``.

    Parameters
    ----------
    factor : PrimeFactor or module
        A module must be cyclic with an annihilator generated by variables
    ring : PolynomialRing
        Required with a `PrimeFactor`

    Raises
    ------
    ParameterError
        If the annihilator is not a monomial prime

    Examples
    --------
    >>> A = nonstandard_ring([2, 3])
    >>> str(rho_linear_law_monomial(PrimeFactor((1,), (5, 1)), A))
    '3*v + 2 (v >= 1)'
    """
    if not isinstance(factor, PrimeFactor):
        N = presentation_of(factor)
        ring = N.ring
        factor = _factor_of_module(N)
    if ring is None:
        raise ParameterError("a prime factor needs its ring")
    _check_nonstandard(ring)
    w1, w2 = factor.shift
    if not factor.G:
        return VanishingLaw(w2, w1, certified=True)
    delta = max(ring.degrees[j][0] for j in factor.G)
    return LinearLaw(delta, w1 - delta * w2, w2, None, certified=True)


def _law_value(law: Union[LinearLaw, VanishingLaw], v: int) -> ExtendedInt:
    if isinstance(law, VanishingLaw):
        return law.value if v == law.v_last else NEG_INF
    return law.value(v) if v >= law.v_start else NEG_INF


def rho_from_filtration(N: Any, v: int) -> ExtendedInt:
    """``max`` over prime factors of their closed-form ``rho`` values."""
    N = _as_module(N)
    values = [_law_value(rho_linear_law_monomial(f, N.ring), v) for f in prime_filtration(N)]
    return max(values, default=NEG_INF)


# ----- powers -----
def ideal_power(I: Ideal, v: int) -> Ideal:
    """Minimal generators of ``I^v``; ``v = 0`` gives the unit ideal with a warning.

    Examples
    --------
    >>> R = PolynomialRing(QQ, ['x', 'y'])
    >>> x, y = R.gens()
    >>> str(ideal_power(Ideal(R, [x, y]), 2))
    '(x^2, x*y, y^2)'
    """
    return I.power(v)


def power_module(I: Ideal, v: int, M: Any = None) -> PresentedModule:
    """A presentation of ``I^v M`` as a submodule of ``M = F0 / U``.

    The generators are ``f * e_k`` for ``f`` among the minimal generators of
    ``I^v``; the relations are the syzygies of those generators together with
    ``U``, projected onto the first block.

    Parameters
    ----------
    I : Ideal
    v : int >= 0
    M : module, optional
        Defaults to the ring itself

    Returns
    -------
    PresentedModule
        Zero (with a `RegkitWarning`) when ``I^v M = 0``
    """
    if M is None:
        M = Cokernel(I.module, [])
    M = presentation_of(M)
    if M.ring != I.ring:
        raise ParameterError("the ideal and the module live over different rings")
    power = ideal_power(I, v) if v else Ideal(I.ring, [Polynomial.constant(I.ring, 1)])
    F0 = M.ambient
    gens, degrees = [], []
    for k, twist in enumerate(F0.twists):
        for f in power.generators:
            gens.append(ModuleVector._raw(F0, {(k, m): c for m, c in f.terms.items()}))
            degrees.append(degree_add(f.degree(), twist))
    h = len(gens)
    if M.is_zero() or not gens:
        out = PresentedModule(FreeModule(I.ring, []), [], "cokernel")
    else:
        syz = syzygies(gens + list(M.relations), RESOLUTION_ORDER, module=F0)
        G = FreeModule(I.ring, degrees)
        rel = []
        for s in syz.syzygies:
            terms = {(j, m): c for (j, m), c in s.terms.items() if j < h}
            if terms:
                rel.append(ModuleVector._raw(G, terms))
        out = presentation_of(Cokernel(G, rel))
    if out.is_zero():
        warnings.warn(f"I^{v} M is the zero module", RegkitWarning, stacklevel=2)
    return out


def _power_regularity(I: Ideal, M: Any, v: int, check: bool) -> ExtendedInt:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RegkitWarning)
        P = power_module(I, v, M)
    if P.is_zero():
        return NEG_INF
    reg = regularity(P)
    if check:
        reg1 = koszul_summary(P).reg1
        if reg1 != reg:
            raise CrossCheckError(f"reg_1 = {reg1} but reg_3 = {reg} for I^{v} M")
        if P.t0() > reg:
            raise CrossCheckError(f"t_0 = {P.t0()} exceeds reg = {reg} for I^{v} M")
    logger.info("reg(I^%d M) = %s", v, reg)
    return reg


@cache(level=30)
def reg_power_sequence(
    I: Ideal,
    M: Any = None,
    v_max: int = 4,
    n_jobs: Optional[int] = None,
    check: bool = True,
) -> List[Tuple[int, ExtendedInt]]:
    """``reg(I^v M)`` for ``v = 1..v_max``.

    Each value comes from the minimal resolution. With ``check``, the Koszul
    regularity of the same module must agree, ``t_0 <= reg`` must hold, and
    for an equigenerated ``I`` (degree ``d``) with ``M`` generated in a single
    degree ``d0`` the bound ``reg >= v d + d0`` is enforced.

    Parameters
    ----------
    I : Ideal
    M : module, optional
        Defaults to the ring itself
    v_max : int >= 1
    n_jobs : int, optional
        Number of `joblib` workers; defaults to ``REGKIT_N_JOBS``
    check : bool

    Returns
    -------
    list of (v, reg)
        ``reg`` is ``NEG_INF`` where ``I^v M = 0``

    Raises
    ------
    CrossCheckError

    Examples
    --------
    >>> R = PolynomialRing(QQ, ['x', 'y'])
    >>> x, y = R.gens()
    >>> reg_power_sequence(Ideal(R, [x**2, y**3]), v_max=4)
    [(1, 4), (2, 7), (3, 10), (4, 13)]
    """
    v_max = valid_int(v_max, name="v_max", minimum=1)
    if n_jobs is None:
        n_jobs = env_n_jobs()
    I = I.minimal()
    if M is not None:
        M = presentation_of(M)
    values = Parallel(n_jobs=n_jobs)(
        delayed(_power_regularity)(I, M, v, check) for v in range(1, v_max + 1)
    )
    seq = list(zip(range(1, v_max + 1), values))
    if check and I.ring.arity == 1 and I.is_equigenerated():
        d = I.generator_degrees()[0]
        tw = {t[0] for t in M.ambient.twists} if M is not None else {0}
        if len(tw) == 1:
            (d0,) = tw
            for v, reg in seq:
                if not is_neg_inf(reg) and reg < v * d + d0:
                    raise CrossCheckError(f"reg(I^{v} M) = {reg} is below {v * d + d0}")
    return seq


def fit_linear_law(seq: Sequence[Tuple[int, ExtendedInt]], gen_degrees: Sequence[int]) -> Law:
    """Detect the eventual linear law of a sequence.

    The largest terminal window of consecutive ``v`` with constant first
    differences is taken; it must contain at least three points. A terminal
    run of at least three ``NEG_INF`` values gives a `VanishingLaw`.

    Parameters
    ----------
    seq : list of (v, value)
    gen_degrees : set of int
        Admissible slopes

    Returns
    -------
    LinearLaw, VanishingLaw or NotStabilized
        Fitted laws are never certified

    Raises
    ------
    CrossCheckError
        If the observed slope is not among ``gen_degrees``

    Examples
    --------
    >>> fit_linear_law([(1, 5), (2, 7), (3, 10), (4, 13)], {2, 3})
    LinearLaw(delta=3, c=1, v_start=2, verified_to=4, certified=False)
    """
    seq = sorted((valid_int(v, name="v"), r) for v, r in seq)
    if not seq:
        return NotStabilized([])
    tail = 0
    while tail < len(seq) and is_neg_inf(seq[-1 - tail][1]):
        tail += 1
    if tail:
        if tail < 3:
            return NotStabilized(seq, "sequence ends in a short run of -inf")
        finite = [(v, r) for v, r in seq if not is_neg_inf(r)]
        return VanishingLaw(finite[-1][0] if finite else None, finite[-1][1] if finite else NEG_INF)

    start = len(seq) - 1
    delta = None
    while start > 0:
        (v0, r0), (v1, r1) = seq[start - 1], seq[start]
        if v1 - v0 != 1 or is_neg_inf(r0):
            break
        if delta is None:
            delta = r1 - r0
        elif r1 - r0 != delta:
            break
        start -= 1
    if len(seq) - start < 3:
        return NotStabilized(seq)
    if delta not in set(gen_degrees):
        raise CrossCheckError(f"observed slope {delta} is not a generator degree {sorted(gen_degrees)}")
    v_last, r_last = seq[-1]
    return LinearLaw(delta, r_last - delta * v_last, seq[start][0], v_last, certified=False)


@dataclass
class KoszulPowerLaws:
    """``t_i(I^v M)`` per ``v`` and the law fitted to each ``i``."""

    t: Dict[int, List[ExtendedInt]]
    laws: Dict[int, Law]

    def to_dict(self) -> Dict[str, Any]:
        return format_value(
            {
                "t": {str(v): t for v, t in sorted(self.t.items())},
                "laws": {str(i): law.to_dict() for i, law in sorted(self.laws.items())},
            }
        )


def _koszul_t(I: Ideal, M: Any, v: int) -> List[ExtendedInt]:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RegkitWarning)
        P = power_module(I, v, M)
    return koszul_summary(P).t


def koszul_power_laws(
    I: Ideal, M: Any = None, v_max: int = 5, n_jobs: Optional[int] = None
) -> KoszulPowerLaws:
    """Fit ``v -> t_i(I^v M)`` separately for each Koszul index ``i``.

    Each sequence is eventually linear with slope among the generator
    degrees of ``I``, or eventually ``-inf``; their maximum after
    subtracting ``i`` is ``reg(I^v M)``.
    """
    v_max = valid_int(v_max, name="v_max", minimum=1)
    if n_jobs is None:
        n_jobs = env_n_jobs()
    I = I.minimal()
    vs = list(range(1, v_max + 1))
    rows = Parallel(n_jobs=n_jobs)(delayed(_koszul_t)(I, M, v) for v in vs)
    table = dict(zip(vs, rows))
    n = I.ring.ngens
    degrees = I.generator_degrees()
    laws = {i: fit_linear_law([(v, table[v][i]) for v in vs], degrees) for i in range(n + 1)}
    return KoszulPowerLaws(table, laws)

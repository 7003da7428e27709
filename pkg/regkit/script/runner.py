#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Script execution
================

.. autosummary::
    :toctree: generated/

    RunFlags
    ResultDocument
    run
    run_file
"""

import csv
import io
import json
import logging
import time
import warnings
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple

from ..asymptotics import (
    fit_linear_law,
    prime_filtration,
    reg_power_sequence,
    rho_from_filtration,
    rho_initial_invariance,
    rho_table,
)
from ..core.ideal import Ideal
from ..core.module import FreeModule, ModuleVector
from ..koszul import koszul_summary, reg_via_duality
from ..rees import (
    bigraded_resolution,
    linear_powers_test,
    rees_degreewise_check,
    rees_ideal,
    reg_bidirectional,
)
from ..resolve import (
    Cokernel,
    betti_table,
    minimal_free_resolution,
    presentation_of,
    quotient_ring,
    shift_module,
    summary,
)
from ..util.exceptions import CrossCheckError, ParameterError, RegkitError, RegkitWarning
from ..util.utils import NEG_INF, env_seed, format_value
from ..version import version as _version
from .parser import (
    Command,
    IdealDecl,
    ModuleDecl,
    RingDecl,
    SessionScript,
    Target,
    parse_session,
    render,
)

__all__ = ["RunFlags", "ResultDocument", "run", "run_file", "EXIT_OK", "EXIT_ERROR", "EXIT_CROSSCHECK"]

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_CROSSCHECK = 2

#: Defaults for command options
DEFAULT_MAX_V = 4
DEFAULT_BUDGET = 5
DEFAULT_RHO_V = 6


@dataclass
class RunFlags:
    """Command-line overrides for a run."""

    max_v: Optional[int] = None
    timing: bool = False
    n_jobs: Optional[int] = None


@dataclass
class ResultDocument:
    """Structured results of one script, in statement order."""

    results: List[Dict[str, Any]] = field(default_factory=list)
    provenance: Dict[str, Any] = field(default_factory=dict)
    rows: List[Tuple[Any, ...]] = field(default_factory=list)

    @property
    def status(self) -> str:
        states = {r["status"] for r in self.results}
        if "cross-check-failed" in states:
            return "cross-check-failed"
        if "error" in states:
            return "error"
        return "ok"

    @property
    def exit_code(self) -> int:
        return {"ok": EXIT_OK, "error": EXIT_ERROR, "cross-check-failed": EXIT_CROSSCHECK}[self.status]

    def to_dict(self) -> Dict[str, Any]:
        return format_value(
            {"status": self.status, "results": self.results, "provenance": self.provenance}
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerow(["statement", "v", "value"])
        csv.writer(buf, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n").writerows(self.rows)
        return buf.getvalue()


class _Session(object):
    def __init__(self, script: SessionScript, flags: RunFlags):
        self.script = script
        self.flags = flags
        self.rings = {}
        self.objects: Dict[str, Any] = {}
        self.doc = ResultDocument()

    # ----- declarations -----
    def declare(self, s) -> None:
        if isinstance(s, RingDecl):
            self.rings[s.name] = s.ring()
        elif isinstance(s, IdealDecl):
            self.objects[s.name] = Ideal(self.rings[s.ring], s.generators)
        elif isinstance(s, ModuleDecl):
            self.objects[s.name] = self.module(s)

    def module(self, s: ModuleDecl) -> Any:
        ring = self.rings[s.ring]
        if s.kind == "coker":
            F = FreeModule(ring, s.twists)
            cols = []
            for c in range(len(s.rows[0])):
                cols.append(ModuleVector.from_entries(F, [row[c] for row in s.rows]))
            return Cokernel(F, [v for v in cols if v])
        if s.kind == "free":
            return Cokernel(FreeModule(ring, s.twists), [])
        if s.kind == "quotient":
            return quotient_ring(self.resolve(s.source))
        return shift_module(self.resolve(s.source), s.amount)

    def resolve(self, t: Target) -> Any:
        if t.name is not None:
            return self.objects[t.name]
        return Ideal(self.rings[t.ring], t.generators)

    # ----- commands -----
    def execute(self, c: Command) -> None:
        text = render(SessionScript([c])).strip().rstrip(";")
        entry: Dict[str, Any] = {"statement": text, "command": c.name, "line": c.line}
        started = time.perf_counter()
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            try:
                entry["result"] = self.handler(c.name)(c, text)
                entry["status"] = "ok"
            except CrossCheckError as exc:
                entry["status"] = "cross-check-failed"
                entry["error"] = str(exc)
                logger.error("line %s: %s: %s", c.line, text, exc)
            except RegkitError as exc:
                entry["status"] = "error"
                entry["error"] = f"{type(exc).__name__}: {exc}"
                logger.error("line %s: %s: %s", c.line, text, exc)
            except Exception as exc:
                entry["status"] = "error"
                entry["error"] = f"{type(exc).__name__}: {exc}"
                logger.exception("line %s: %s: unexpected failure", c.line, text)
        entry["warnings"] = sorted({str(w.message) for w in caught})
        if self.flags.timing:
            entry["seconds"] = round(time.perf_counter() - started, 6)
        self.doc.results.append(entry)

    def handler(self, name: str) -> Callable[[Command, str], Dict[str, Any]]:
        return {
            "reg": self.cmd_reg,
            "betti": self.cmd_betti,
            "koszul": self.cmd_koszul,
            "duality": self.cmd_duality,
            "verify": self.cmd_verify,
            "powers": self.cmd_powers,
            "rees": self.cmd_rees,
            "linear-powers": self.cmd_linear_powers,
            "rho": self.cmd_rho,
        }[name]

    def cmd_reg(self, c: Command, text: str) -> Dict[str, Any]:
        M = presentation_of(self.resolve(c.target))
        if M.is_zero():
            warnings.warn("regularity of the zero module is -inf", RegkitWarning)
            return {"reg": NEG_INF, "t0": NEG_INF}
        s = summary(betti_table(minimal_free_resolution(M)), M.ring.ngens)
        if s.t0 > s.reg3:
            raise CrossCheckError(f"t_0 = {s.t0} exceeds reg = {s.reg3}")
        return {"reg": s.reg3, "t0": s.t0, **s.to_dict()}

    def cmd_betti(self, c: Command, text: str) -> Dict[str, Any]:
        M = presentation_of(self.resolve(c.target))
        B = betti_table(minimal_free_resolution(M))
        out = {"betti": B.to_dict(), "text": B.to_text()}
        if B.arity == 1 and B.standard:
            out["summary"] = summary(B, M.ring.ngens).to_dict()
        return out

    def cmd_koszul(self, c: Command, text: str) -> Dict[str, Any]:
        return koszul_summary(self.resolve(c.target), c.option("bound")).to_dict()

    def cmd_duality(self, c: Command, text: str) -> Dict[str, Any]:
        return reg_via_duality(self.resolve(c.target)).to_dict()

    def cmd_verify(self, c: Command, text: str) -> Dict[str, Any]:
        M = presentation_of(self.resolve(c.target))
        n = M.ring.ngens
        if M.is_zero():
            warnings.warn("regularity of the zero module is -inf", RegkitWarning)
            return {"reg1": NEG_INF, "reg3": NEG_INF, "reg2": NEG_INF, "reg_dual": NEG_INF, "agree": True}
        B = betti_table(minimal_free_resolution(M))
        s = summary(B, n)
        k = koszul_summary(M)
        dual = reg_via_duality(M)
        out = {
            "reg1": k.reg1,
            "reg2": s.reg2,
            "reg3": s.reg3,
            "reg_dual": dual.reg_via_duality,
            "t0": s.t0,
        }
        if not (k.reg1 == s.reg3 == s.reg2 == dual.reg_via_duality):
            raise CrossCheckError(
                f"reg1 = {k.reg1}, reg2 = {s.reg2}, reg3 = {s.reg3}, reg_dual = {dual.reg_via_duality}"
            )
        low = min(t[0] for t in M.ambient.twists)
        for i in range(n + 1):
            for j in range(low + i, s.reg3 + i + 2):
                h = k.ranks.get((i, j), 0)
                beta = B[(i, j)] if j <= s.reg3 + i else 0
                if h != beta:
                    raise CrossCheckError(f"dim H_{i}(M)_{j} = {h} but beta_{i},{j} = {beta}")
        if not k.euler_ok:
            raise CrossCheckError("degreewise Euler characteristics disagree")
        out["agree"] = True
        return out

    def max_v(self, c: Command) -> int:
        if self.flags.max_v is not None:
            return self.flags.max_v
        return c.option("max_v", DEFAULT_MAX_V)

    def cmd_powers(self, c: Command, text: str) -> Dict[str, Any]:
        I = self.resolve(c.target)
        M = None
        if c.option("module") is not None:
            M = presentation_of(self.objects[c.option("module")])
            if M.ring != I.ring:
                raise ParameterError("the module lives over a different ring")
        seq = reg_power_sequence(I, M, self.max_v(c), self.flags.n_jobs)
        law = fit_linear_law(seq, I.minimal().generator_degrees())
        self.doc.rows.extend((text, v, r) for v, r in seq)
        return {"sequence": [[v, r] for v, r in seq], "law": law.to_dict()}

    def cmd_rees(self, c: Command, text: str) -> Dict[str, Any]:
        I = self.resolve(c.target)
        P = rees_ideal(I)
        _, B = bigraded_resolution(P)
        out = {"rees": P.to_dict(), "betti": B.to_dict()}
        if P.normalized:
            reg10, reg01 = reg_bidirectional(B, P.x_count, P.y_count)
            out.update(reg10=reg10, reg01=reg01)
            rees_degreewise_check(P)
        return out

    def cmd_linear_powers(self, c: Command, text: str) -> Dict[str, Any]:
        I = self.resolve(c.target)
        budget = c.option("budget", self.flags.max_v or DEFAULT_BUDGET)
        report = linear_powers_test(I, budget=budget, n_jobs=self.flags.n_jobs)
        self.doc.rows.extend((text, v, r) for v, r in report.sequence)
        return report.to_dict()

    def cmd_rho(self, c: Command, text: str) -> Dict[str, Any]:
        N = presentation_of(self.resolve(c.target))
        v_max = c.option("v_max", DEFAULT_RHO_V)
        table = rho_table(N, v_max)
        out: Dict[str, Any] = {"rho": table.to_dict()}
        report = rho_initial_invariance(N.ambient, N.relations, v_max=v_max)
        report.verify()
        out["initial_invariance"] = report.holds
        if all(len(r.terms) == 1 for r in N.relations):
            factors = prime_filtration(N)
            for v, value in table.values.items():
                law = rho_from_filtration(N, v)
                if law != value:
                    raise CrossCheckError(f"rho({v}) = {value} but the filtration gives {law}")
            out["filtration"] = [
                {"G": list(f.G), "shift": list(f.shift), "component": f.component} for f in factors
            ]
        return out

    def run(self) -> ResultDocument:
        started = time.perf_counter()
        for s in self.script.statements:
            if isinstance(s, Command):
                self.execute(s)
            else:
                self.declare(s)
        fields = sorted({str(r).split("[")[0] for r in self.rings.values()})
        self.doc.provenance = {
            "fields": fields,
            "order": "degrevlex",
            "version": _version,
            "seed": env_seed(),
        }
        if self.flags.timing:
            self.doc.provenance["seconds"] = round(time.perf_counter() - started, 6)
        return self.doc


def run(script: SessionScript, flags: Optional[RunFlags] = None) -> ResultDocument:
    """Execute the commands of a parsed script in order.

    Engine errors are recorded with the originating statement and execution
    continues with the next command.

    Examples
    --------
    >>> doc = run(parse_session("ring R = QQ[x,y]; verify (x^2, x*y);"))
    >>> doc.results[0]["result"]["reg3"], doc.exit_code
    (2, 0)
    """
    return _Session(script, flags or RunFlags()).run()


def run_file(path: str, flags: Optional[RunFlags] = None, field_override=None) -> ResultDocument:
    with open(path, "r", encoding="utf-8") as fdesc:
        text = fdesc.read()
    return run(parse_session(text, field_override), flags)

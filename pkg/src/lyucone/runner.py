"""Script execution: turn a parsed script into presentations and reports.

Ample statements declare named selections on a let-bound space; reports are
evaluated in order against everything declared so far.  For product spaces
a selection is written in Segre form, one parenthesized factor selection
per product factor, and the runner pushes the factors down to the
corresponding sub-constructions.

The runner is deterministic end to end: identical scripts produce
byte-identical JSON/CSV output.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import script as S
from .atoms import (PerversePresentation, SmoothAtom, atom_product,
                    blowup_p2, p1xp1, plane_curve, plane_curve_in_p2,
                    presentation_of_smooth, projective_space)
from .constructions import equidim_x2, nc_union, nonequidim_x2, perverse_product
from .errors import (InternalInconsistencyError, LyuconeError, ScriptError)
from .lyubeznik import (DependenceReport, LyubeznikTable, ParityReport,
                        dependence_report, lambda_table, parity_report)
from .oracle import euler_check, run_audit_windows


@dataclass
class RunReport:
    """Everything the report statements of one script produced."""

    tables: list[LyubeznikTable] = field(default_factory=list)
    dependences: list[DependenceReport] = field(default_factory=list)
    parities: list[ParityReport] = field(default_factory=list)
    metadata: dict = field(default_factory=dict)


def _fail(node: S.Node, message: str) -> ScriptError:
    return ScriptError(message, node.line, node.col)


class _Runner:
    def __init__(self, parsed: S.Script, krange=None, jrange=None, audit=False):
        self.script = parsed
        self.krange = krange
        self.jrange = jrange
        self.audit = audit
        self.env: dict[str, S.Node] = {}
        self.amples: dict[str, dict[str, S.Node]] = {}
        self.report = RunReport()

    # ----- resolution helpers

    def _resolve(self, node: S.Node) -> S.Node:
        seen = set()
        while isinstance(node, S.Name):
            if node.ident in seen:
                raise _fail(node, f"circular definition of {node.ident!r}")
            seen.add(node.ident)
            bound = self.env.get(node.ident)
            if bound is None:
                raise _fail(node, f"undefined identifier {node.ident!r}")
            node = bound
        return node

    def _atom(self, node: S.Node) -> SmoothAtom:
        expr = self._resolve(node)
        if isinstance(expr, S.AtomP):
            return projective_space(expr.n)
        if isinstance(expr, S.AtomP1xP1):
            return p1xp1()
        if isinstance(expr, S.AtomBlowupP2):
            return blowup_p2()
        if isinstance(expr, S.AtomCurve):
            return plane_curve(expr.degree)
        if isinstance(expr, S.ProductExpr):
            return atom_product(self._atom(expr.first), self._atom(expr.second))
        raise _fail(node, "expected a smooth atom here (P, P1xP1, BlowupP2, "
                          "Curve, or Product of those)")

    def _sum_coeffs(self, node: S.Node, what: str) -> dict[str, int]:
        if not isinstance(node, S.AmpSum):
            raise _fail(node, f"{what} takes a plain class combination, "
                              "not a Segre product")
        coeffs: dict[str, int] = {}
        for term in node.terms:
            coeffs[term.cls] = coeffs.get(term.cls, 0) + term.coeff
        return coeffs

    def _atom_selection(self, expr: S.Node, amp: S.Node) -> dict[str, int]:
        """Coefficients over an atom's class names, honoring Segre factors."""
        expr = self._resolve(expr)
        if isinstance(expr, S.ProductExpr) and isinstance(amp, S.AmpSegre):
            if len(amp.factors) != 2:
                raise _fail(amp, "this product has exactly two factors")
            first = self._atom_selection(expr.first, amp.factors[0])
            second = self._atom_selection(expr.second, amp.factors[1])
            out = {f"p1_{k}": v for k, v in first.items()}
            out.update({f"p2_{k}": v for k, v in second.items()})
            return out
        return self._sum_coeffs(amp, "an atom selection")

    # ----- materialization

    def _materialize(self, node: S.Node, amples: dict[str, S.Node]) -> PerversePresentation:
        expr = self._resolve(node)
        try:
            return self._materialize_inner(node, expr, amples)
        except ScriptError:
            raise
        except InternalInconsistencyError:
            raise
        except LyuconeError as err:
            raise ScriptError(str(err), expr.line, expr.col) from err

    def _materialize_inner(self, node: S.Node, expr: S.Node,
                           amples: dict[str, S.Node]) -> PerversePresentation:
        if isinstance(expr, (S.AtomP, S.AtomP1xP1, S.AtomBlowupP2, S.AtomCurve,
                             S.ProductExpr)):
            atom = self._atom(expr)
            sel = {an: self._atom_selection(expr, amp) for an, amp in amples.items()}
            return presentation_of_smooth(atom, sel or None)
        if isinstance(expr, S.NCUnionExpr):
            y = self._atom(expr.space)
            div = self._divisor(y, expr.divisor)
            sel = {an: self._sum_coeffs(amp, "an NCUnion selection")
                   for an, amp in amples.items()}
            return nc_union(y, div, sel or None)
        if isinstance(expr, S.NonEquidimExpr):
            mults = {}
            for an, amp in amples.items():
                coeffs = self._sum_coeffs(amp, "a NonEquidimX2 selection")
                if set(coeffs) != {"L2"}:
                    raise _fail(amp, "NonEquidimX2 has the single class L2")
                mults[an] = coeffs["L2"]
            return nonequidim_x2(expr.d2, amples=mults or None)
        if isinstance(expr, S.EquidimExpr):
            sels = {}
            for an, amp in amples.items():
                coeffs = self._sum_coeffs(amp, "an EquidimX2 selection")
                extra = set(coeffs) - {"a", "b", "xi"}
                if extra:
                    raise _fail(amp, f"EquidimX2 classes are a, b, xi "
                                     f"(got {sorted(extra)[0]!r})")
                sels[an] = (coeffs.get("a", 0), coeffs.get("b", 0),
                            coeffs.get("xi", 0))
            return equidim_x2(expr.d2, expr.d_e, amples=sels or None)
        if isinstance(expr, S.PerverseProductExpr):
            first_amps = {}
            second_amps = {}
            for an, amp in amples.items():
                if not isinstance(amp, S.AmpSegre) or len(amp.factors) != 2:
                    raise _fail(amp, "selections on a PerverseProduct are "
                                     "Segre: (factor one) * (factor two)")
                first_amps[an] = amp.factors[0]
                second_amps[an] = amp.factors[1]
            pa = self._materialize(expr.first, first_amps)
            pb = self._materialize(expr.second, second_amps)
            segre = {an: (an, an) for an in amples}
            return perverse_product(pa, pb, segre=segre or None)
        raise _fail(node, "cannot build this expression")

    def _divisor(self, y: SmoothAtom, div: S.Name):
        bound = self.env.get(div.ident)
        if bound is not None:
            resolved = self._resolve(bound)
            if isinstance(resolved, S.AtomCurve):
                if y.name != "P2":
                    raise _fail(div, "plane curves embed into P(2)")
                return plane_curve_in_p2(resolved.degree)
            raise _fail(div, f"{div.ident!r} is not usable as a divisor")
        if div.ident in y.subvarieties:
            return y.subvarieties[div.ident]
        raise _fail(div, f"{y.name} has no divisor named {div.ident!r}")

    def _presentation_for(self, target: S.Name) -> PerversePresentation:
        if target.ident not in self.env:
            raise _fail(target, f"undefined identifier {target.ident!r}")
        amples = self.amples.get(target.ident, {})
        pres = self._materialize(S.Name(target.line, target.col, target.ident),
                                 amples)
        if self.audit:
            failures = [desc for desc, ok in run_audit_windows(pres) if not ok]
            if failures:
                raise InternalInconsistencyError(
                    f"exactness audit failed: {failures[0]}")
            if not euler_check(pres):
                raise InternalInconsistencyError(
                    f"Euler-characteristic audit failed for {pres.name}")
        self.report.metadata.setdefault("conventions", {})[pres.name] = \
            _json_safe(pres.conventions)
        return pres

    # ----- statement execution

    def run(self) -> RunReport:
        for stmt in self.script.statements:
            if isinstance(stmt, S.LetStmt):
                if stmt.name in self.env:
                    raise _fail(stmt, f"duplicate binding {stmt.name!r}")
                self.env[stmt.name] = stmt.expr
            elif isinstance(stmt, S.AmpleStmt):
                if stmt.target not in self.env:
                    raise _fail(stmt, f"undefined identifier {stmt.target!r}")
                per = self.amples.setdefault(stmt.target, {})
                if stmt.name in per:
                    raise _fail(stmt, f"duplicate selection {stmt.name!r} "
                                      f"on {stmt.target!r}")
                per[stmt.name] = stmt.selection
            elif isinstance(stmt, S.ReportStmt):
                self._run_report(stmt)
        if self.krange or self.jrange:
            self.report.metadata["ranges"] = {
                "k": list(self.krange) if self.krange else None,
                "j": list(self.jrange) if self.jrange else None,
            }
        return self.report

    def _run_report(self, stmt: S.ReportStmt):
        if stmt.target.ident not in self.env:
            raise _fail(stmt.target,
                        f"undefined identifier {stmt.target.ident!r}")
        declared = self.amples.get(stmt.target.ident, {})
        try:
            if stmt.kind == "table":
                if not declared:
                    raise _fail(stmt, f"no ample selections declared on "
                                      f"{stmt.target.ident!r}")
                pres = self._presentation_for(stmt.target)
                for an in sorted(declared):
                    self.report.tables.append(
                        lambda_table(pres, an, self.krange, self.jrange))
                return
            for an in stmt.selections:
                if an not in declared:
                    raise _fail(stmt, f"no selection {an!r} declared on "
                                      f"{stmt.target.ident!r}")
            pres = self._presentation_for(stmt.target)
            if stmt.kind == "dependence":
                rep = dependence_report(pres, stmt.selections[0],
                                        stmt.selections[1],
                                        self.krange, self.jrange)
                self.report.dependences.append(rep)
                self.report.tables.extend([rep.table_a, rep.table_b])
            else:
                k0, j0 = stmt.position
                self.report.parities.append(
                    parity_report(pres, stmt.selections[0], stmt.selections[1],
                                  k0, j0))
        except ScriptError:
            raise
        except InternalInconsistencyError:
            raise
        except LyuconeError as err:
            raise ScriptError(str(err), stmt.line, stmt.col) from err


def _json_safe(value):
    if isinstance(value, dict):
        return {str(k): _json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_safe(v) for v in value]
    if isinstance(value, (str, int, bool)) or value is None:
        return value
    return str(value)


def run_script(parsed: S.Script, krange: tuple[int, int] | None = None,
               jrange: tuple[int, int] | None = None,
               audit: bool = False) -> RunReport:
    """Execute a parsed script; deterministic for identical input."""
    return _Runner(parsed, krange, jrange, audit).run()

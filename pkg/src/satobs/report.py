"""JSON and text emission of reports.

Every rational is written as a ``"p/q"`` (or ``"p"``) string so that the
JSON form parses back to an identical ``Report``.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .cobordism import ClasperCertificate, CobordismCertificate, TwistMove
from .corpus import Report, ReportEntry
from .dinv import AffineConstant, ZkBound
from .pipeline import (
    CoverData,
    Hypothesis,
    LensSum,
    ObstructionCertificate,
    Outcome,
    TrivialS3,
    UserSupplied,
    Verdict,
)

SCHEMA = "satobs.report/1"


class ReportFormatError(ValueError):
    pass


def q_str(x) -> str:
    return str(Fraction(x))


def q_parse(s) -> Fraction:
    if isinstance(s, bool) or not isinstance(s, (str, int)):
        raise ReportFormatError(f"expected a rational string, got {s!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as e:
        raise ReportFormatError(f"bad rational {s!r}") from e


def _matrix(m) -> list:
    return [[int(x) for x in r] for r in m]


def _tmatrix(m) -> tuple:
    return tuple(tuple(int(x) for x in r) for r in m)


# -- ambients and cover data --------------------------------------------------------

def ambient_to_dict(a) -> dict:
    if isinstance(a, TrivialS3):
        return {"type": "S3"}
    if isinstance(a, LensSum):
        return {"type": "lens-sum", "ms": list(a.ms)}
    if isinstance(a, UserSupplied):
        return {"type": "homology", "factors": list(a.factors)}
    raise TypeError(f"unknown ambient {a!r}")


def ambient_from_dict(d: dict):
    kind = d.get("type")
    if kind == "S3":
        return TrivialS3()
    if kind == "lens-sum":
        return LensSum(tuple(int(m) for m in d["ms"]))
    if kind == "homology":
        return UserSupplied(tuple(int(f) for f in d["factors"]))
    raise ReportFormatError(f"unknown ambient type {kind!r}")


def cover_data_to_dict(cd: CoverData) -> dict:
    return {
        "q": cd.q,
        "w": cd.w,
        "n": cd.n,
        "lk": [[q_str(x) for x in r] for r in cd.lk],
        "fr": None if cd.fr is None else [q_str(x) for x in cd.fr],
        "ambient": ambient_to_dict(cd.ambient),
        "provenance": cd.provenance,
    }


def cover_data_from_dict(d: dict, q=None) -> CoverData:
    """Also used for the user blocks of pattern files, where most keys are optional."""
    try:
        return CoverData(
            q=int(d.get("q", q)),
            w=int(d["w"]),
            lk=tuple(tuple(q_parse(x) for x in r) for r in d["lk"]),
            n=int(d.get("n", 1)),
            fr=None if d.get("fr") is None else tuple(q_parse(x) for x in d["fr"]),
            ambient=ambient_from_dict(d.get("ambient", {"type": "S3"})),
            provenance=d.get("provenance", "user-supplied"),
        )
    except (KeyError, TypeError) as e:
        raise ReportFormatError(f"malformed cover data: {e}") from e


# -- certificates --------------------------------------------------------------------

def cobordism_to_dict(c: CobordismCertificate) -> dict:
    return {
        "initial": _matrix(c.initial),
        "moves": [[m.i, m.j, m.sign] for m in c.moves],
        "final": _matrix(c.final),
        "pair": list(c.pair),
        "definiteness": c.definiteness,
        "two_handles": c.two_handle_count,
    }


def cobordism_from_dict(d: dict) -> CobordismCertificate:
    return CobordismCertificate(
        _tmatrix(d["initial"]),
        tuple(TwistMove(i, j, s) for i, j, s in d["moves"]),
        _tmatrix(d["final"]),
        tuple(d["pair"]),
        d["definiteness"],
    )


def constant_to_dict(c: AffineConstant) -> dict:
    return {"numeric": q_str(c.numeric), "symbols": list(c.symbols), "text": str(c)}


def constant_from_dict(d: dict) -> AffineConstant:
    return AffineConstant(q_parse(d["numeric"]), tuple(d["symbols"]))


def bound_to_dict(b: ZkBound) -> dict:
    return {
        "k": b.k,
        "constant": b.constant,
        "expression": b.expression,
        "value": None if b.value is None else q_str(b.value),
        "threshold": b.threshold,
        "threshold_expression": b.threshold_expression,
    }


def bound_from_dict(d: dict) -> ZkBound:
    return ZkBound(
        d["k"], d["constant"], d["expression"],
        None if d["value"] is None else q_parse(d["value"]),
        d["threshold"], d["threshold_expression"],
    )


def certificate_to_dict(c: ObstructionCertificate) -> dict:
    return {
        "q": c.q,
        "lens_sum": list(c.lens_sum),
        "c0": None if c.c0 is None else q_str(c.c0),
        "cobordism": cobordism_to_dict(c.cobordism),
        "clasper": {
            "source": _matrix(c.clasper.source),
            "target": _matrix(c.clasper.target),
            "equivalent": c.clasper.equivalent,
        },
        "constant": constant_to_dict(c.constant),
        "bound": bound_to_dict(c.bound),
        "identification": c.identification,
        "invariance": c.invariance,
    }


def certificate_from_dict(d: dict) -> ObstructionCertificate:
    cl = d["clasper"]
    return ObstructionCertificate(
        d["q"],
        tuple(d["lens_sum"]),
        None if d["c0"] is None else q_parse(d["c0"]),
        cobordism_from_dict(d["cobordism"]),
        ClasperCertificate(_tmatrix(cl["source"]), _tmatrix(cl["target"]), cl["equivalent"]),
        constant_from_dict(d["constant"]),
        bound_from_dict(d["bound"]),
        d["identification"],
        d["invariance"],
    )


# -- verdicts and reports -------------------------------------------------------------

def verdict_to_dict(v: Verdict) -> dict:
    return {
        "theorem": v.theorem,
        "outcome": v.outcome.value,
        "mirrored": v.mirrored,
        "hypotheses": [{"name": h.name, "passed": h.passed, "detail": h.detail} for h in v.hypotheses],
        "certificate": None if v.certificate is None else certificate_to_dict(v.certificate),
        "notes": list(v.notes),
    }


def verdict_from_dict(d: dict) -> Verdict:
    return Verdict(
        d["theorem"],
        Outcome(d["outcome"]),
        d["mirrored"],
        tuple(Hypothesis(h["name"], h["passed"], h["detail"]) for h in d["hypotheses"]),
        None if d["certificate"] is None else certificate_from_dict(d["certificate"]),
        tuple(d["notes"]),
    )


def report_to_dict(r: Report) -> dict:
    return {
        "schema": SCHEMA,
        "pattern": r.pattern,
        "word": r.word,
        "winding": r.winding,
        "declared_slice_unknot": r.declared_slice_unknot,
        "outcome": r.outcome.value,
        "entries": [
            {"q": e.q, "cover_data": cover_data_to_dict(e.cover_data), "verdict": verdict_to_dict(e.verdict)}
            for e in r.entries
        ],
        "notes": list(r.notes),
    }


def report_from_dict(d: dict) -> Report:
    if d.get("schema") != SCHEMA:
        raise ReportFormatError(f"unsupported schema {d.get('schema')!r}, expected {SCHEMA}")
    try:
        return Report(
            d["pattern"],
            d["word"],
            d["winding"],
            d["declared_slice_unknot"],
            tuple(
                ReportEntry(e["q"], cover_data_from_dict(e["cover_data"]), verdict_from_dict(e["verdict"]))
                for e in d["entries"]
            ),
            Outcome(d["outcome"]),
            tuple(d["notes"]),
        )
    except (KeyError, TypeError, ValueError) as e:
        raise ReportFormatError(f"malformed report: {e}") from e


def emit(r: Report) -> str:
    return json.dumps(report_to_dict(r), indent=2, sort_keys=True)


def parse(text: str) -> Report:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as e:
        raise ReportFormatError(str(e)) from e
    return report_from_dict(d)


def emit_many(reports) -> str:
    return json.dumps({"schema": SCHEMA, "reports": [report_to_dict(r) for r in reports]},
                      indent=2, sort_keys=True)


def parse_many(text: str) -> list[Report]:
    d = json.loads(text)
    if d.get("schema") != SCHEMA:
        raise ReportFormatError(f"unsupported schema {d.get('schema')!r}")
    return [report_from_dict(r) for r in d["reports"]]


# -- text ----------------------------------------------------------------------------

def _fmt_matrix(m) -> str:
    return "[" + "; ".join(" ".join(str(x) for x in r) for r in m) + "]"


def render_text(r: Report) -> str:
    lines = [f"pattern {r.pattern}: {r.word}", f"  winding number w = {r.winding}"]
    if not r.entries:
        lines.append("  no verdicts")
    for e in r.entries:
        cd, v = e.cover_data, e.verdict
        lines.append(f"  q = {e.q} [{cd.provenance}] n = {cd.n}")
        lines.append(f"    lk = {_fmt_matrix(cd.lk)}")
        if cd.fr is not None:
            lines.append(f"    fr = ({', '.join(str(x) for x in cd.fr)})")
        lines.append(f"    test {v.theorem}: {v.outcome.value}" + (" (mirrored)" if v.mirrored else ""))
        for h in v.hypotheses:
            mark = "ok" if h.passed else "FAILS"
            lines.append(f"      - {h.name}: {mark}" + (f" ({h.detail})" if h.detail else ""))
        if v.certificate is not None:
            c = v.certificate
            moves = ", ".join(f"({m.i + 1},{m.j + 1})" for m in c.cobordism.moves) or "none"
            lines.append(f"    certificate: {c.cobordism.two_handle_count} twist(s): {moves}")
            i, j = c.cobordism.pair
            lines.append(f"      reaches H_{c.q} = {_fmt_matrix(c.cobordism.final)} on lifts {i + 1},{j + 1}")
            lines.append(f"      C = {c.constant}; d_max(Z_k) <= {c.bound.expression}")
        for n in v.notes:
            lines.append(f"    note: {n}")
    lines.append(f"  outcome: {r.outcome.value}")
    for n in r.notes:
        lines.append(f"  note: {n}")
    return "\n".join(lines)


def certificate_json(c: CobordismCertificate) -> str:
    return json.dumps({"schema": SCHEMA, "cobordism": cobordism_to_dict(c)}, indent=2, sort_keys=True)


def jsonable(x: Any) -> Any:
    """Fractions to strings, recursively; used for ad hoc CLI output."""
    if isinstance(x, Fraction):
        return q_str(x)
    if isinstance(x, (list, tuple)):
        return [jsonable(y) for y in x]
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    return x

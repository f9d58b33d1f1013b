"""Per-loop analysis reports (JSON and text)."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from fractions import Fraction

from . import identities, theorems
from .probability import (cc_bound_value, moufang_bound_value, p_assoc, p_assoc_decomposed,
                          p_comm, render)
from .structure import NucleusKind, cosets, nucleus
from .table import Loop, is_commutative
from .textformat import content_hash


def _frac(v: Fraction) -> dict:
    return {"num": v.numerator, "den": v.denominator, "text": f"{v.numerator}/{v.denominator}"}


def _verdict(v: identities.IdentityVerdict) -> dict:
    return {"holds": v.holds, "witness": list(v.witness) if v.witness else None, "detail": v.detail}


@dataclass
class AnalysisReport:
    source: str
    source_sha256: str
    loop: Loop
    claims: list[theorems.TheoremVerdict] = field(default_factory=list)
    data: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "input": {"source": self.source, "source_sha256": self.source_sha256,
                      "content_hash": content_hash(self.loop)},
            "classification": "loop",
            "order": self.loop.order,
            "identity": self.loop.identity,
            **self.data,
            "claims": [c.to_json() for c in self.claims],
            "table": self.loop.rows(),
        }

    def to_text(self) -> str:
        d = self.data
        ids = d["identities"]
        lines = [
            f"source:        {self.source}",
            f"content hash:  {content_hash(self.loop)}",
            f"classification: loop of order {self.loop.order}, identity {self.loop.identity}",
            "identities:",
        ]
        for name, v in ids.items():
            mark = "yes" if v["holds"] else "no"
            if not v["holds"] and v["witness"] is not None:
                mark += f" (witness {' '.join(map(str, v['witness']))}"
                mark += f"; {v['detail']})" if v["detail"] else ")"
            lines.append(f"  {name:<14} {mark}")
        lines.append("  moufang variants " + ", ".join(
            f"({k}) {'yes' if ok else 'no'}" for k, ok in d["moufang_variants"].items()))
        nuc = d["nuclei"]
        lines += [
            f"nucleus:       {{{' '.join(map(str, d['nucleus']))}}} "
            f"(left {nuc['left']}, middle {nuc['middle']}, right {nuc['right']}, full {nuc['full']})",
            f"index [G:N]:   {d['index'] if d['index'] is not None else 'cosets do not partition'}",
            f"nuclear commutators: {'yes' if d['nuclear_commutators'] else 'no'}",
            f"p_comm:        {render(self._f('p_comm'))}",
            f"p_assoc:       {render(self._f('p_assoc'))}",
        ]
        dec = d["decomposition"]
        lines.append(f"  cases:       {dec['case1']} + {dec['case2']} + {dec['case3']} "
                     f"of {dec['total']} triples")
        lines.append(f"per-loop bounds: moufang form {render(self._f('moufang_bound_value'), False)}, "
                     f"cc form {render(self._f('cc_bound_value'), False)}")
        lines.append("claims:")
        for c in self.claims:
            if not c.applicable:
                status = f"not applicable ({c.reason})"
            elif c.verified:
                status = "verified"
                rel = c.evidence.get("relation")
                if rel == "equal":
                    status += " (equality: bound attained)"
            else:
                status = f"FALSIFIED {c.counterexample}"
            lines.append(f"  {c.claim:<14} {status}")
        return "\n".join(lines) + "\n"

    def _f(self, key: str) -> Fraction:
        v = self.data[key]
        return Fraction(v["num"], v["den"])


def analyze(t: Loop, source: str, raw: bytes, claims=theorems.CLAIMS) -> AnalysisReport:
    N = nucleus(t)
    dec = cosets(t, N)
    breakdown = p_assoc_decomposed(t)
    data = {
        "identities": {
            "associative": _verdict(identities.is_associative(t)),
            "moufang": _verdict(identities.is_moufang(t, "all")),
            "cc": _verdict(identities.is_cc(t)),
            "alternative": _verdict(identities.is_alternative(t)),
            "diassociative": _verdict(identities.is_diassociative(t)),
            "commutative": {"holds": is_commutative(t), "witness": None, "detail": None},
        },
        "moufang_variants": {str(v): identities.moufang_witness(t, v) is None for v in (1, 2, 3)},
        "nuclei": {k.value: len(nucleus(t, k)) for k in NucleusKind},
        "nucleus": list(N.members),
        "nucleus_size": len(N),
        "index": dec.index,
        "cosets_partition": dec.partition,
        "nuclear_commutators": theorems.has_nuclear_commutators(t),
        "p_comm": _frac(p_comm(t)),
        "p_assoc": _frac(p_assoc(t)),
        "decomposition": {
            "case1": breakdown.case1, "case2": breakdown.case2, "case3": breakdown.case3,
            "case3_partial": breakdown.case3_partial, "total": breakdown.total,
            "fraction": _frac(breakdown.fraction),
        },
        "moufang_bound_value": _frac(moufang_bound_value(t)),
        "cc_bound_value": _frac(cc_bound_value(t)),
    }
    return AnalysisReport(source, hashlib.sha256(raw).hexdigest(), t,
                          theorems.verify(t, claims), data)

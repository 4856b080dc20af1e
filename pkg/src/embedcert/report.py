"""JSON report builders; the layout is pinned by ``report_schema.json``."""

from __future__ import annotations

import json
from importlib import resources

from . import __version__
from .complex import SimplicialComplex
from .cycles import CertificateKind, CycleCertificate, GirthValue, MCompleteResult, Refutation
from .homology import HomologyProfile, TorsionCertificate, homology_profile
from .obstruction import ObstructionVerdict

SCHEMA_VERSION = 1


def load_schema() -> dict:
    return json.loads(resources.files("embedcert").joinpath("report_schema.json").read_text())


def _header(cx: SimplicialComplex, kind: str) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "tool_version": __version__,
        "kind": kind,
        "input_digest": cx.digest(),
        "dim": cx.dim,
        "n": cx.n,
        "f_vector": list(cx.f_vector),
    }


def profile_dict(p: HomologyProfile) -> dict:
    return {
        "betti_z2": list(p.beta),
        "delta": list(p.delta),
        "chi": list(p.chi),
        "euler_characteristic": p.euler_characteristic,
        "torsion": [list(t) for t in p.torsion],
    }


def girth_dict(g: GirthValue | None) -> dict | None:
    if g is None:
        return None
    return {"value": g.value, "quality": g.quality}


def certificate_dict(cx: SimplicialComplex, cert: CycleCertificate) -> dict:
    return {
        "kind": cert.kind.value,
        "m": cert.m,
        "weights": list(cert.weights),
        "supports": cert.supports(cx),
    }


def torsion_dict(t: TorsionCertificate | None) -> dict | None:
    if t is None:
        return None
    return {"degree": t.degree, "factors": list(t.factors), "claim": t.claim}


def refutation_dict(r: Refutation | None) -> dict | None:
    if r is None:
        return None
    return {"girth": r.girth, "beta": r.beta, "f_top": r.f_top, "m": r.m,
            "lhs": r.lhs, "rhs": r.rhs, "weak_bound": r.weak_bound}


def info_report(cx: SimplicialComplex) -> dict:
    out = _header(cx, "info")
    prof = homology_profile(cx)
    out.update(profile_dict(prof))
    out["pure"] = cx.is_pure()
    out["ridge_regularity"] = cx.ridge_regularity().value
    out["balanced"] = cx.is_balanced() if cx.dim >= 1 else None
    return out


def obstruct_report(cx: SimplicialComplex, v: ObstructionVerdict) -> dict:
    out = _header(cx, "obstruct")
    out.update(profile_dict(homology_profile(cx, with_torsion=False)))
    out.pop("torsion")
    out["balanced"] = cx.is_balanced()
    out["target"] = v.target.value
    out["verdict"] = v.verdict.value
    out["girth"] = girth_dict(v.girth)
    out["torsion"] = torsion_dict(v.torsion)
    out["torsion_checked"] = v.torsion_checked
    out["inequalities"] = [r.to_dict() for r in v.reports]
    out["violated"] = [r.name for r in v.violated]
    out["sanity_failures"] = [r.name for r in v.sanity_failures]
    out["notes"] = list(v.notes)
    out["certificates"] = []
    if v.girth is not None and v.girth.witness is not None:
        out["certificates"].append(
            certificate_dict(cx, CycleCertificate(CertificateKind.GIRTH_WITNESS, (v.girth.witness,))))
    return out


def girth_report(cx: SimplicialComplex, g: GirthValue) -> dict:
    out = _header(cx, "girth")
    out["girth"] = girth_dict(g)
    out["certificates"] = []
    if g.witness is not None:
        out["certificates"].append(certificate_dict(cx, CycleCertificate(CertificateKind.GIRTH_WITNESS, (g.witness,))))
    return out


def mcomplete_report(cx: SimplicialComplex, m: int, res: MCompleteResult) -> dict:
    out = _header(cx, "mcomplete")
    out["m"] = m
    out["decision"] = res.decision.value
    out["reason"] = res.reason
    out["nodes"] = res.nodes
    out["refutation"] = refutation_dict(res.refutation)
    out["certificates"] = [certificate_dict(cx, res.certificate)] if res.certificate else []
    return out

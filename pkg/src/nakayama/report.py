"""Analysis reports (JSON / text table) and DOT renderings."""

from __future__ import annotations

import json

from .algebra import LINEAR, Algebra, serialize
from .checks import check_theorems
from .epsilon import classify, delta, epsilon_algebra, reflexive_chain
from .errors import ContradictionReport
from .homdim import finitistic_summary, function_quiver, gamma, phi, profiles, psi
from .homext import depth, grade
from .perm import kupisch_to_dyck, permutation, ties
from .search import findings
from .serial import INF, all_modules, exists, inj, is_projective, omega_k, proj, sigma_k, simple

RENDER_KINDS = ("ar", "resolution", "coresolution", "epsilon-gamma", "ties")


def plain(x):
    if isinstance(x, float) and x == INF:
        return "inf"
    if isinstance(x, tuple) and len(x) == 2 and type(x).__name__ == "Module":
        return str(x)
    if isinstance(x, (list, tuple)):
        return [plain(y) for y in x]
    if isinstance(x, (set, frozenset)):
        return [plain(y) for y in sorted(x)]
    if isinstance(x, dict):
        return {str(plain(k)): plain(v) for k, v in x.items()}
    return x


def _modules(ms):
    return [str(M) for M in sorted(ms)]


def analyze(A: Algebra) -> tuple[dict, bool]:
    """The full report and whether every check passed."""
    checks = check_theorems(A, raise_on_failure=False)
    failures = [{"check": exc.check, "witness": repr(exc.witness)} for exc in checks.failures]
    report = {"algebra": _algebra_block(A)}
    try:
        report.update(_body(A))
    except ContradictionReport as exc:
        failures.append({"check": exc.check, "witness": repr(exc.witness)})
    f = report.setdefault("findings", {})
    f["checks"] = {name: (res if isinstance(res, str) else "fail") for name, res in checks.results.items()}
    f["failures"] = failures
    return plain(report), not failures


def _algebra_block(A):
    block = {
        "kupisch": serialize(A),
        "kind": A.kind,
        "n": A.n,
        "canonical": list(A.canonical()),
        "projective_lengths": list(A.kupisch),
        "injective_lengths": list(A.inj_len),
        "projective_socles": list(A.proj_socle),
        "extensions": [],
    }
    if A.kind == LINEAR:
        block["dyck"] = str(kupisch_to_dyck(A))
        block["extensions"].append("a(S) and a'(S) use the cyclic definition on a linear algebra")
    if A.n == 1:
        block["extensions"].append("one simple module: h is the identity")
    return block


def _body(A):
    P = permutation(A)
    rows = []
    for p in profiles(A):
        v = p.vertex
        rows.append(
            {
                "vertex": v,
                "pd_S": p.pd_S,
                "id_S": p.id_S,
                "pd_IS": p.pd_IS,
                "id_PS": p.id_PS,
                "e": p.e,
                "e_star": p.e_star,
                "f": p.f,
                "f_star": p.f_star,
                "g": p.g,
                "a": p.a,
                "a_prime": p.a_prime,
                "del": p.delooping,
                "des": p.desuspending,
                "grade": grade(A, v),
                "h": P(v),
                "h_star": P.inverse[v - 1],
                "psi": psi(A, v),
                "gamma": gamma(A, v),
                "phi": phi(A, v),
                "psi_cyclic": p.psi_cyclic,
                "gamma_cyclic": p.gamma_cyclic,
            }
        )
    s = finitistic_summary(A)
    summary = {
        "finpro": s.finpro,
        "fininj": s.fininj,
        "del": s.del_A,
        "des": s.des_A,
        "gldim": s.gldim,
        "depth": depth(A),
        "a": s.a_A,
        "c_psi": s.c_psi,
        "c_gamma": s.c_gamma,
        "gorenstein": s.gorenstein,
        "selfinjective": s.selfinjective,
        "permutation": str(P),
        "permutation_one_line": list(P.mapping),
        "psi_components": [list(c) for c in function_quiver(A, "psi").components],
        "gamma_components": [list(c) for c in function_quiver(A, "gamma").components],
    }
    cls = classify(A, check=False)
    classes = {
        "r": cls.r,
        "torsionless": sorted(cls.S_torsionless),
        "id_ge_2": sorted(cls.T_id_ge2),
        "pd_ge_2": sorted(cls.U_pd_ge2),
        "divisible": sorted(cls.D_divisible),
        "peaks": _modules(cls.peaks),
        "valleys": _modules(cls.valleys),
        "minimal_projectives": _modules(cls.minimal_projectives),
        "minimal_injectives": _modules(cls.minimal_injectives),
    }
    if A.cyclic:
        E = epsilon_algebra(A)
        ch = reflexive_chain(A)
        classes["delta"] = {t: str(delta(A, t).module) for t in sorted(cls.T_id_ge2)}
        classes["epsilon"] = {
            "components": [serialize(C) for C in E.components],
            "vertex_map": {t: list(E.vertex_map[t]) for t in sorted(E.vertex_map)},
        }
        classes["reflexive_chain"] = {
            "reduced_reflexive": _modules(ch.reduced_reflexive),
            "second_syzygies": _modules(ch.second_syzygies),
            "filtered": _modules(ch.filtered),
            "reflexive": _modules(ch.reflexive),
            "proper": list(ch.proper),
        }
    tie_rows = [
        {
            "T": t.T,
            "S": t.S,
            "z": t.z,
            "parity": t.parity,
            "proj_resolution": [str(M) for M in t.proj_resolution],
            "proj_terminal": str(t.proj_terminal),
            "inj_coresolution": [str(M) for M in t.inj_coresolution],
            "inj_terminal": str(t.inj_terminal),
            "peak": str(t.peak) if t.peak is not None else None,
        }
        for t in ties(A)
    ]
    return {"simples": rows, "summary": summary, "classes": classes, "ties": tie_rows, "findings": findings(A)}


def to_json(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


TABLE_COLUMNS = ("vertex", "pd_S", "pd_IS", "id_S", "id_PS", "e", "e_star", "f", "f_star", "a", "del", "des", "grade", "h")


def to_table(report: dict) -> str:
    lines = [report["algebra"]["kupisch"]]
    if "simples" in report:
        rows = [[str(r[c]) for c in TABLE_COLUMNS] for r in report["simples"]]
        widths = [max(len(c), *(len(r[k]) for r in rows)) for k, c in enumerate(TABLE_COLUMNS)]
        lines.append("  ".join(c.rjust(w) for c, w in zip(TABLE_COLUMNS, widths)))
        lines.extend("  ".join(x.rjust(w) for x, w in zip(r, widths)) for r in rows)
        lines.append("")
        lines.extend(f"{k}: {v}" for k, v in report["summary"].items())
    for fail in report["findings"]["failures"]:
        lines.append(f"FAILED {fail['check']}: {fail['witness']}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- DOT


def _q(s) -> str:
    return '"' + str(s) + '"'


def render(A: Algebra, kind: str) -> str:
    if kind not in RENDER_KINDS:
        raise ValueError(f"unknown render kind {kind!r}; choose from {', '.join(RENDER_KINDS)}")
    name = kind.replace("-", "_")
    lines = [f"digraph {name} {{", f"  label={_q(serialize(A))};"]
    lines += {
        "ar": _ar,
        "resolution": lambda A: _function_quiver(A, "gamma"),
        "coresolution": lambda A: _function_quiver(A, "psi"),
        "epsilon-gamma": _epsilon_gamma,
        "ties": _ties,
    }[kind](A)
    lines.append("}")
    return "\n".join(lines) + "\n"


def _ar(A):
    mods = all_modules(A)
    out = ["  rankdir=BT;"]
    for ell in sorted({M.length for M in mods}):
        row = " ".join(_q(M) for M in mods if M.length == ell)
        out.append(f"  {{ rank=same; {row} }}")
    for M in mods:
        if exists(A, M.socle, M.length + 1):
            out.append(f"  {_q(M)} -> {_q(f'{M.socle}:{M.length + 1}')};")
        if M.length > 1:
            out.append(f"  {_q(M)} -> {_q(f'{A.wrap(M.socle + 1)}:{M.length - 1}')};")
    for M in mods:
        if not is_projective(A, M):
            out.append(f"  {_q(M)} -> {_q(f'{A.wrap(M.socle - 1)}:{M.length}')} [style=dashed, constraint=false];")
    return out


def _function_quiver(A, kind):
    Q = function_quiver(A, kind)
    out = [f"  {v};" for v in A.vertices]
    out += [f"  {v} -> {w};" for v, w in Q.successor.items() if w is not None]
    return out


def _epsilon_gamma(A):
    if not A.cyclic:
        return []
    E = epsilon_algebra(A)
    out = []
    for t in sorted(E.vertex_map):
        idx, j = E.vertex_map[t]
        out.append(f"  {_q(f'{idx}.{j}')} [label={_q(f'T={t} Delta={delta(A, t).module}')}];")
    for t in sorted(E.vertex_map):
        idx, j = E.vertex_map[t]
        g = gamma(E.components[idx], j)
        if g is not None:
            out.append(f"  {_q(f'{idx}.{j}')} -> {_q(f'{idx}.{g}')};")
    return out


def _ties(A):
    out = []
    for t in ties(A):
        out.append(f"  subgraph cluster_{t.T} {{")
        out.append(f"    label={_q(f'T={t.T} S={t.S} z={t.z}')};")
        if t.z == 0:
            out.append(f"    {_q(f'{t.T}/peak {t.peak}')};")
        else:
            # even z walks from I(T) and P(S), odd z from the simples themselves
            even = t.parity == "even"
            N = inj(A, t.T) if even else simple(A, t.T)
            M = proj(A, t.S) if even else simple(A, t.S)
            walk = [omega_k(A, N, k) for k in range(t.z + 1)]
            cowalk = [sigma_k(A, M, k) for k in range(t.z + 1)]
            for a, b in zip(walk, walk[1:]):
                out.append(f"    {_q(f'{t.T}/{a}')} -> {_q(f'{t.T}/{b}')} [label=Omega];")
            for a, b in zip(cowalk, cowalk[1:]):
                out.append(f"    {_q(f'{t.T}/{a}')} -> {_q(f'{t.T}/{b}')} [label=Sigma, style=dashed];")
        out.append("  }")
    return out


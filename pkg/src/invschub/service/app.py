"""FastAPI front end over the involution Schubert calculus engine.

Every endpoint is a pure function of its request body, so responses are
byte-stable across runs; warm polynomial caches only make repeats faster.
Guard violations map to HTTP 422 with code "guard"; a falsified structural
fact maps to HTTP 500 with code "falsification".
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from invschub import involutions as inv
from invschub import insertion as ins
from invschub import pfaffian as pf
from invschub import transition as tr
from invschub import vexillary as vx
from invschub.involutions import FalsificationError
from invschub.permutations import (
    EnumerationGuardError,
    Permutation,
    parse_permutation,
    print_cycles,
    reverse_permutation,
)
from invschub.schubert import inv_schubert_poly, schubert_poly
from invschub.service import models as m


class UsageError(ValueError):
    pass


def _parse(value: str, notation: str, involution: bool = False) -> Permutation:
    try:
        w = parse_permutation(value, notation)
    except (ValueError, IndexError) as exc:
        raise UsageError(f"cannot parse {value!r} as {notation}: {exc}") from exc
    if involution and not w.is_involution():
        raise UsageError(f"{value!r} is not an involution")
    return w


def _poly_response(label: str, poly) -> m.PolynomialResponse:
    return m.PolynomialResponse(
        input=label,
        text=str(poly),
        degree=poly.degree(),
        terms=[m.PolynomialTerm(exponents=e, coeff=c) for e, c in poly.to_pairs()],
    )


def _expansion_response(label: str, expansion) -> m.ExpansionResponse:
    return m.ExpansionResponse(
        input=label,
        basis=expansion.basis,
        terms=[
            m.ExpansionTerm(shape=list(lam), coeff=c) for lam, c in expansion.coeffs
        ],
    )


def _tableau_payload(t) -> m.TableauPayload:
    if isinstance(t, ins.SetValuedShiftedTableau):
        rows = [
            ["".join(ins.entry_str(v) for v in cell) for cell in row]
            for row in t.rows
        ]
    else:
        rows = [[ins.entry_str(v) for v in row] for row in t.rows]
    return m.TableauPayload(rows=rows, shape=list(t.shape), text=t.render())


def create_app() -> FastAPI:
    app = FastAPI(
        title="invschub",
        description="Involution Schubert calculus as a service",
        version="0.1.0",
    )

    @app.exception_handler(UsageError)
    async def usage_handler(request: Request, exc: UsageError):
        return JSONResponse(
            status_code=400,
            content={"error": {"code": "usage", "message": str(exc)}},
        )

    @app.exception_handler(EnumerationGuardError)
    async def guard_handler(request: Request, exc: EnumerationGuardError):
        return JSONResponse(
            status_code=422,
            content={"error": {"code": "guard", "message": str(exc)}},
        )

    @app.exception_handler(FalsificationError)
    async def falsification_handler(request: Request, exc: FalsificationError):
        return JSONResponse(
            status_code=500,
            content={"error": {"code": "falsification", "message": str(exc)}},
        )

    @app.get("/health")
    def health():
        return {"status": "ok", "schema": m.SCHEMA}

    @app.post("/schubert", response_model=m.PolynomialResponse)
    def schubert(req: m.SchubertRequest):
        w = _parse(req.value, req.notation)
        return _poly_response(req.value, schubert_poly(w))

    @app.post("/inv-schubert", response_model=m.PolynomialResponse)
    def inv_schubert(req: m.InvSchubertRequest):
        y = _parse(req.value, req.notation, involution=True)
        if req.method == "atom-sum" and inv.inv_length(y) > req.guard:
            raise EnumerationGuardError(
                f"involution length {inv.inv_length(y)} exceeds guard {req.guard}"
            )
        return _poly_response(req.value, inv_schubert_poly(y, method=req.method))

    @app.post("/expand-fhat", response_model=m.ExpansionResponse)
    def expand_fhat(req: m.ExpandRequest):
        y = _parse(req.value, req.notation, involution=True)
        if len(y.support) > req.guard + 4:
            raise EnumerationGuardError(
                f"support size {len(y.support)} too large for tree expansion"
            )
        return _expansion_response(req.value, tr.expand_Fhat(y, basis=req.basis))

    @app.post("/expand-f", response_model=m.ExpansionResponse)
    def expand_f(req: m.ExpandFRequest):
        w = _parse(req.value, req.notation)
        return _expansion_response(req.value, tr.expand_F(w))

    @app.post("/ls-tree", response_model=m.TreeResponse)
    def ls_tree(req: m.TreeRequest):
        notation = req.notation or (
            "cycles" if req.kind == "involution" else "one-line"
        )
        if req.kind == "involution":
            z = _parse(req.value, notation, involution=True)
            if len(z.support) > req.guard:
                raise EnumerationGuardError(
                    f"support size {len(z.support)} exceeds tree guard {req.guard}"
                )
            tree = tr.inv_ls_tree(z)
            render = print_cycles
        else:
            w = _parse(req.value, notation)
            if len(w.support) > req.guard:
                raise EnumerationGuardError(
                    f"support size {len(w.support)} exceeds tree guard {req.guard}"
                )
            tree = tr.classical_ls_tree(w)
            render = tr.render_one_line
        resp = m.TreeResponse(
            input=req.value,
            kind=req.kind,
            node_count=tree.node_count(),
            leaves=sorted(render(l) for l in tree.leaves()),
        )
        if req.layout == "indented":
            resp.text = tree.to_indented(render)
        else:
            resp.edges = tree.to_edges(render)
        return resp

    @app.post("/insert", response_model=m.InsertResponse)
    def insert_word(req: m.InsertRequest):
        try:
            if req.algorithm == "ick":
                _, q, res = ins.involution_ck_insert(req.word, keep_trace=req.trace)
                rec_payload = _tableau_payload(q)
            else:
                res = ins.shifted_hecke_insert(req.word, keep_trace=req.trace)
                rec_payload = _tableau_payload(res.recording)
        except (ins.NotAnInvolutionWord, ValueError) as exc:
            raise UsageError(str(exc)) from exc
        resp = m.InsertResponse(
            word=list(req.word),
            algorithm=req.algorithm,
            insertion=_tableau_payload(res.insertion),
            recording=rec_payload,
        )
        if req.trace:
            resp.trace = [
                (_tableau_payload(p_t), _tableau_payload(q_t))
                for p_t, q_t in res.trace
            ]
        return resp

    @app.post("/classify", response_model=m.ClassifyResponse)
    def classify(req: m.ClassifyRequest):
        z = _parse(req.value, req.notation, involution=True)
        witness = None
        if req.property == "p-vexillary":
            method = "patterns" if req.method == "default" else req.method
            value = vx.is_p_vexillary(z, method)
            if not value and method == "patterns":
                for pat in vx.ELEVEN_P:
                    hit, pts = vx.contains_inv_pattern(z, pat, witness=True)
                    if hit:
                        witness = {
                            "pattern": print_cycles(pat),
                            "points": list(pts),
                        }
                        break
        elif req.property == "q-vexillary":
            method = "vexillary" if req.method == "default" else req.method
            value = vx.is_q_vexillary(z, method)
            if not value:
                for pat in vx.FIVE_Q:
                    hit, pts = vx.contains_inv_pattern(z, pat, witness=True)
                    if hit:
                        witness = {
                            "pattern": print_cycles(pat),
                            "points": list(pts),
                        }
                        break
        elif req.property == "i-grassmannian":
            value, data = inv.is_i_grassmannian(z)
            if value:
                phi, n, r = data
                witness = {"phi": list(phi), "n": n, "r": r}
        else:
            value = inv.is_dominant(z)
        return m.ClassifyResponse(
            input=req.value, property=req.property, value=value, witness=witness
        )

    @app.post("/verify", response_model=m.VerifyResponse)
    def verify(req: m.VerifyRequest):
        runner = _VERIFIERS[req.check]
        ok, cases, witness = runner(req)
        return m.VerifyResponse(check=req.check, ok=ok, cases=cases, witness=witness)

    @app.post("/count", response_model=m.CountResponse)
    def count(req: m.CountRequest):
        if req.stop < req.start:
            raise UsageError("stop must be at least start")
        guard = req.guard if req.guard is not None else (16 if req.sequence == "r" else 12)
        values = [
            _SEQUENCES[req.sequence](n, guard)
            for n in range(req.start, req.stop + 1)
        ]
        return m.CountResponse(
            sequence=req.sequence, start=req.start, stop=req.stop, values=values
        )

    return app


# -- verification sweeps --------------------------------------------------------


def _map_jobs(fn, cases, jobs: int):
    if jobs <= 1:
        return [fn(c) for c in cases]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, cases))


def _verify_pfaffian(req: m.VerifyRequest):
    cases = [
        (phi, n)
        for n in range(1, req.max_n + 1)
        for r in range(1, n + 1)
        for phi in itertools.combinations(range(1, n + 1), r)
    ]
    results = _map_jobs(lambda c: (c, pf.verify_pfaffian_theorem(*c)), cases, req.jobs)
    for case, ok in sorted(results, key=lambda t: t[0]):
        if not ok:
            return False, len(cases), f"phi={case[0]} n={case[1]}"
    return True, len(cases), None


def _verify_schurp_pfaffian(req: m.VerifyRequest):
    from invschub.symfunc import strict_partitions_of

    cases = [
        lam for d in range(1, req.max_n + 1) for lam in strict_partitions_of(d)
    ]
    results = _map_jobs(
        lambda lam: (lam, pf.schurP_pfaffian_check(lam, req.width)), cases, req.jobs
    )
    for lam, ok in sorted(results):
        if not ok:
            return False, len(cases), f"shape={lam} width={req.width}"
    return True, len(cases), None


def _verify_transition(req: m.VerifyRequest):
    cases = []
    for y in inv.involutions(req.max_n):
        for a in y.support:
            if a < y(a):
                cases.append((y, (a, y(a))))
    results = _map_jobs(
        lambda c: (c, tr.transition_identity_check(c[0], c[1])), cases, req.jobs
    )
    for (y, cyc), ok in results:
        if not ok:
            return False, len(cases), f"y={print_cycles(y)} cycle={cyc}"
    return True, len(cases), None


def _verify_triangularity(req: m.VerifyRequest):
    cases = list(inv.involutions(req.max_n))
    results = _map_jobs(lambda y: (y, tr.triangularity_certificate(y)), cases, req.jobs)
    for y, rep in results:
        if not rep.ok:
            return False, len(cases), f"y={print_cycles(y)}"
    return True, len(cases), None


def _verify_insertion_agreement(req: m.VerifyRequest):
    cases = list(inv.involutions(req.max_n))

    def one(y):
        return y, ins.beta_coefficients(y, guard=10**9).as_dict() == tr.expand_Fhat(
            y
        ).as_dict()

    results = _map_jobs(one, cases, req.jobs)
    for y, ok in results:
        if not ok:
            return False, len(cases), f"y={print_cycles(y)}"
    return True, len(cases), None


_VERIFIERS = {
    "pfaffian": _verify_pfaffian,
    "schur-p-pfaffian": _verify_schurp_pfaffian,
    "transition": _verify_transition,
    "triangularity": _verify_triangularity,
    "insertion-agreement": _verify_insertion_agreement,
}


# -- counting sequences ------------------------------------------------------------


def _count_reduced(n: int, guard: int) -> int:
    from invschub.permutations import reduced_words

    return len(reduced_words(reverse_permutation(n), guard=guard))


def _count_inv_words(n: int, guard: int) -> int:
    return len(inv.involution_words(reverse_permutation(n), guard=guard))


def _count_igrass(n: int, guard: int) -> int:
    return sum(1 for y in inv.involutions(n) if inv.is_i_grassmannian(y)[0])


def _count_pvex(n: int, guard: int) -> int:
    return sum(1 for y in inv.involutions(n) if vx.is_p_vexillary(y, "direct"))


_SEQUENCES = {
    "r": _count_reduced,
    "rhat": _count_inv_words,
    "g": _count_igrass,
    "v": _count_pvex,
}


app = create_app()

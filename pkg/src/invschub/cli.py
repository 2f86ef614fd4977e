"""Thin command-line client for the compute service.

Every subcommand assembles a request, sends it to the service (in-process
by default, or a remote instance via --server) and formats the response.
Exit codes: 0 success, 1 usage error, 2 enumeration guard, 3 a verification
sweep falsified an identity.
"""

from __future__ import annotations

import json
import os
import sys

import click

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_GUARD = 2
EXIT_FALSIFIED = 3


class ServiceClient:
    """POSTs to a remote server when given a base URL, otherwise drives the
    ASGI app directly through the test transport."""

    def __init__(self, server: str | None):
        self._server = server
        self._client = None

    def _ensure(self):
        if self._client is None:
            if self._server:
                import httpx

                self._client = httpx.Client(base_url=self._server, timeout=600.0)
            else:
                import warnings

                with warnings.catch_warnings():
                    warnings.simplefilter("ignore")
                    from fastapi.testclient import TestClient

                from invschub.service.app import app

                self._client = TestClient(app, raise_server_exceptions=False)
        return self._client

    def post(self, path: str, payload: dict) -> tuple[int, dict]:
        resp = self._ensure().post(path, json=payload)
        try:
            body = resp.json()
        except json.JSONDecodeError:
            body = {"error": {"code": "internal", "message": resp.text}}
        return resp.status_code, body


def _fail(body: dict) -> int:
    err = body.get("error", {})
    code = err.get("code", "internal")
    click.echo(f"error ({code}): {err.get('message', 'unknown error')}", err=True)
    if code == "guard":
        return EXIT_GUARD
    if code == "falsification":
        return EXIT_FALSIFIED
    return EXIT_USAGE


def _emit(ctx, body: dict, text_fn) -> None:
    if ctx.obj["format"] == "json":
        click.echo(json.dumps(body, sort_keys=True))
    else:
        click.echo(text_fn(body))


def _call(ctx, path: str, payload: dict, text_fn) -> None:
    status, body = ctx.obj["client"].post(path, payload)
    if status != 200:
        sys.exit(_fail(body))
    _emit(ctx, body, text_fn)


@click.group()
@click.option("--server", default=None, help="Base URL of a running service.")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["text", "json"]),
    default=None,
    help="Output format; INVSCHUB_FORMAT sets the default.",
)
@click.option("--jobs", default=1, show_default=True, help="Worker threads for sweeps.")
@click.pass_context
def main(ctx, server, fmt, jobs):
    """Involution Schubert calculus toolkit."""
    ctx.ensure_object(dict)
    ctx.obj["client"] = ServiceClient(server)
    ctx.obj["format"] = fmt or os.environ.get("INVSCHUB_FORMAT", "text")
    ctx.obj["jobs"] = jobs


_notation = click.option(
    "--notation",
    type=click.Choice(["one-line", "cycles", "word"]),
    default=None,
    help="Input notation (defaults: one-line for permutations, cycles for involutions).",
)
_guard = click.option("--guard", default=None, type=int, help="Enumeration guard.")


@main.command()
@click.argument("perm")
@_notation
@click.pass_context
def schubert(ctx, perm, notation):
    """Schubert polynomial of PERM."""
    _call(
        ctx,
        "/schubert",
        {"value": perm, "notation": notation or "one-line"},
        lambda b: b["text"],
    )


@main.command("inv-schubert")
@click.argument("inv")
@_notation
@_guard
@click.option(
    "--method",
    type=click.Choice(["recursion", "atom-sum"]),
    default="recursion",
    show_default=True,
)
@click.pass_context
def inv_schubert(ctx, inv, notation, guard, method):
    """Involution Schubert polynomial of INV."""
    payload = {"value": inv, "notation": notation or "cycles", "method": method}
    if guard:
        payload["guard"] = guard
    _call(ctx, "/inv-schubert", payload, lambda b: b["text"])


def _expansion_text(b: dict) -> str:
    if not b["terms"]:
        return "0"
    letter = {"Schur": "s", "SchurP": "P", "SchurQ": "Q"}.get(b["basis"], "b")
    bits = []
    for t in b["terms"]:
        name = f"{letter}({','.join(map(str, t['shape']))})"
        bits.append(name if t["coeff"] == 1 else f"{t['coeff']}*{name}")
    return " + ".join(bits)


@main.command("expand-fhat")
@click.argument("inv")
@_notation
@_guard
@click.option(
    "--basis",
    type=click.Choice(["P", "Q"]),
    default="P",
    show_default=True,
    help="Schur P or Schur Q target basis.",
)
@click.pass_context
def expand_fhat(ctx, inv, notation, guard, basis):
    """Schur P/Q expansion of the involution Stanley function of INV."""
    payload = {"value": inv, "notation": notation or "cycles", "basis": basis}
    if guard:
        payload["guard"] = guard
    _call(ctx, "/expand-fhat", payload, _expansion_text)


@main.command("expand-f")
@click.argument("perm")
@_notation
@click.pass_context
def expand_f(ctx, perm, notation):
    """Schur expansion of the Stanley symmetric function of PERM."""
    _call(
        ctx,
        "/expand-f",
        {"value": perm, "notation": notation or "one-line"},
        _expansion_text,
    )


@main.command("ls-tree")
@click.argument("element")
@click.option(
    "--kind",
    type=click.Choice(["involution", "classical"]),
    default="involution",
    show_default=True,
)
@_notation
@_guard
@click.option(
    "--layout",
    type=click.Choice(["indented", "edges"]),
    default="indented",
    show_default=True,
)
@click.pass_context
def ls_tree(ctx, element, kind, notation, guard, layout):
    """Transition tree of ELEMENT with its leaves."""
    default_notation = "cycles" if kind == "involution" else "one-line"
    payload = {
        "kind": kind,
        "value": element,
        "notation": notation or default_notation,
        "layout": layout,
    }
    if guard:
        payload["guard"] = guard

    def text(b):
        head = f"nodes: {b['node_count']}  leaves: {', '.join(b['leaves'])}"
        if b.get("text"):
            return head + "\n" + b["text"]
        return head + "\n" + "\n".join(f"{u} -> {v}" for u, v in b["edges"])

    _call(ctx, "/ls-tree", payload, text)


@main.command()
@click.argument("letters", nargs=-1, type=int, required=True)
@click.option(
    "--algorithm",
    type=click.Choice(["sh", "ick"]),
    default="sh",
    show_default=True,
    help="Shifted Hecke insertion or its involution-word restriction.",
)
@click.option("--trace/--no-trace", default=False, show_default=True)
@click.pass_context
def insert(ctx, letters, algorithm, trace):
    """Insert a word, e.g.: insert 5 4 1 3 4 5 2 1 2"""

    def text(b):
        lines = [f"P:\n{b['insertion']['text']}", f"Q:\n{b['recording']['text']}"]
        if b.get("trace"):
            steps = []
            for k, (p, q) in enumerate(b["trace"], start=1):
                steps.append(f"after letter {k}:\nP:\n{p['text']}\nQ:\n{q['text']}")
            lines = steps + lines
        return "\n\n".join(lines)

    _call(
        ctx,
        "/insert",
        {"word": list(letters), "algorithm": algorithm, "trace": trace},
        text,
    )


@main.command()
@click.argument(
    "property",
    type=click.Choice(["p-vex", "q-vex", "i-grass", "dominant"]),
)
@click.argument("inv")
@_notation
@click.option("--method", default="default", show_default=True)
@click.pass_context
def classify(ctx, property, inv, notation, method):
    """Classify INV: p-vex, q-vex, i-grass or dominant."""
    prop = {
        "p-vex": "p-vexillary",
        "q-vex": "q-vexillary",
        "i-grass": "i-grassmannian",
        "dominant": "dominant",
    }[property]

    def text(b):
        out = f"{b['property']}: {'yes' if b['value'] else 'no'}"
        if b.get("witness"):
            out += f"  witness: {json.dumps(b['witness'], sort_keys=True)}"
        return out

    _call(
        ctx,
        "/classify",
        {
            "value": inv,
            "notation": notation or "cycles",
            "property": prop,
            "method": method,
        },
        text,
    )


@main.command()
@click.argument(
    "check",
    type=click.Choice(
        [
            "pfaffian",
            "schur-p-pfaffian",
            "transition",
            "triangularity",
            "insertion-agreement",
        ]
    ),
)
@click.option("--max-n", default=4, show_default=True, help="Sweep bound.")
@click.option(
    "--width",
    default=6,
    show_default=True,
    help="Truncation width for symmetric-function sweeps.",
)
@click.pass_context
def verify(ctx, check, max_n, width):
    """Run a verification sweep; exits 3 on a falsified identity."""
    status, body = ctx.obj["client"].post(
        "/verify",
        {"check": check, "max_n": max_n, "width": width, "jobs": ctx.obj["jobs"]},
    )
    if status != 200:
        sys.exit(_fail(body))
    _emit(
        ctx,
        body,
        lambda b: (
            f"{b['check']}: {'pass' if b['ok'] else 'FALSIFIED'} ({b['cases']} cases)"
            + (f"  witness: {b['witness']}" if b.get("witness") else "")
        ),
    )
    if not body["ok"]:
        sys.exit(EXIT_FALSIFIED)


@main.command()
@click.argument("sequence", type=click.Choice(["r", "rhat", "g", "v"]))
@click.argument("start", type=int)
@click.argument("stop", type=int)
@_guard
@click.pass_context
def count(ctx, sequence, start, stop, guard):
    """Terms START..STOP of a counting sequence (r, rhat, g, v)."""
    payload = {"sequence": sequence, "start": start, "stop": stop}
    if guard:
        payload["guard"] = guard
    _call(ctx, "/count", payload, lambda b: " ".join(map(str, b["values"])))


if __name__ == "__main__":
    main()

"""Thin batch client for the nonrep service.

Every computational command is a request against the HTTP API; by
default the service runs in-process over an ASGI transport, and
``--url`` (or NONREP_URL) targets a remote instance instead.  Exit
codes: 0 pass, 1 usage or input error, 2 verification counterexample.
"""
from __future__ import annotations

import asyncio
import json
import sys
from typing import Optional

import click
import httpx

from .certificates import certificate_to_json, write_certificate

# click reserves exit code 2 for usage errors; 2 means "counterexample" here
click.UsageError.exit_code = 1

DEFAULT_MAX_ORDER = 12
DEFAULT_MAX_WALK = 10


class ServiceClient:
    def __init__(self, url: Optional[str]):
        self.url = url

    def post(self, path: str, payload: dict) -> tuple[int, dict]:
        if self.url:
            with httpx.Client(base_url=self.url, timeout=600.0) as client:
                resp = client.post(path, json=payload)
        else:
            resp = asyncio.run(self._post_inprocess(path, payload))
        try:
            body = resp.json()
        except json.JSONDecodeError:
            body = {"detail": resp.text}
        return resp.status_code, body

    @staticmethod
    async def _post_inprocess(path: str, payload: dict) -> httpx.Response:
        from .service import app
        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(transport=transport,
                                     base_url="http://nonrep.local",
                                     timeout=None) as client:
            return await client.post(path, json=payload)


def _read(path: str) -> str:
    try:
        with open(path, "r") as fh:
            return fh.read()
    except OSError as exc:
        raise click.ClickException(str(exc)) from None


def _finish(ctx_client_result: tuple[int, dict], out: Optional[str]) -> None:
    status, body = ctx_client_result
    if status != 200:
        click.echo(f"error: {body.get('detail', body)}", err=True)
        sys.exit(1)
    cert = body["certificate"]
    if out:
        write_certificate(cert, out)
    else:
        click.echo(certificate_to_json(cert), nl=False)
    sys.exit(body["exit_code"])


@click.group()
@click.option("--url", envvar="NONREP_URL", default=None,
              help="Base URL of a running service; default runs in-process.")
@click.pass_context
def main(ctx, url):
    """Nonrepetitive colouring toolkit."""
    ctx.obj = ServiceClient(url)


@main.group()
def colour():
    """Construct certified colourings."""


@colour.command("path")
@click.option("--n", type=int, required=True, help="Number of path vertices.")
@click.option("--max-walk", type=int, default=DEFAULT_MAX_WALK, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.pass_obj
def colour_path(client, n, max_walk, out):
    _finish(client.post("/colour/path", {"n": n, "max_walk": max_walk}), out)


@colour.command("tw")
@click.option("--graph", "graph_path", type=click.Path(exists=True), required=True)
@click.option("--format", "fmt", type=click.Choice(["edgelist", "graph6"]),
              default="edgelist", show_default=True)
@click.option("--td", "td_path", type=click.Path(exists=True), required=True)
@click.option("--max-order", type=int, default=DEFAULT_MAX_ORDER, show_default=True)
@click.option("--max-walk", type=int, default=DEFAULT_MAX_WALK, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.pass_obj
def colour_tw(client, graph_path, fmt, td_path, max_order, max_walk, out):
    payload = {
        "graph": {"text": _read(graph_path), "format": fmt},
        "td": _read(td_path),
        "max_order": max_order,
        "max_walk": max_walk,
    }
    _finish(client.post("/colour/tw", payload), out)


@colour.command("planar")
@click.option("--graph", "graph_path", type=click.Path(exists=True), required=True)
@click.option("--format", "fmt", type=click.Choice(["edgelist", "graph6"]),
              default="edgelist", show_default=True)
@click.option("--structure", "structure_path", type=click.Path(exists=True), default=None)
@click.option("--compute-structure", is_flag=True, default=False,
              help="Derive the product structure from the triangulation.")
@click.option("--max-order", type=int, default=DEFAULT_MAX_ORDER, show_default=True)
@click.option("--max-walk", type=int, default=DEFAULT_MAX_WALK, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.pass_obj
def colour_planar(client, graph_path, fmt, structure_path, compute_structure,
                  max_order, max_walk, out):
    payload = {
        "graph": {"text": _read(graph_path), "format": fmt},
        "compute_structure": compute_structure,
        "max_order": max_order,
        "max_walk": max_walk,
    }
    if structure_path:
        payload["structure"] = _read(structure_path)
    _finish(client.post("/colour/planar", payload), out)


@colour.command("genus")
@click.option("--graph", "graph_path", type=click.Path(exists=True), required=True)
@click.option("--format", "fmt", type=click.Choice(["edgelist", "graph6"]),
              default="edgelist", show_default=True)
@click.option("--structure", "structure_path", type=click.Path(exists=True), required=True)
@click.option("--max-order", type=int, default=DEFAULT_MAX_ORDER, show_default=True)
@click.option("--max-walk", type=int, default=DEFAULT_MAX_WALK, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.pass_obj
def colour_genus(client, graph_path, fmt, structure_path, max_order, max_walk, out):
    payload = {
        "graph": {"text": _read(graph_path), "format": fmt},
        "structure": _read(structure_path),
        "max_order": max_order,
        "max_walk": max_walk,
    }
    _finish(client.post("/colour/genus", payload), out)


@main.command("verify")
@click.option("--graph", "graph_path", type=click.Path(exists=True), required=True)
@click.option("--format", "fmt", type=click.Choice(["edgelist", "graph6"]),
              default="edgelist", show_default=True)
@click.option("--colouring", "colouring_path", type=click.Path(exists=True), required=True)
@click.option("--max-order", type=int, default=DEFAULT_MAX_ORDER, show_default=True)
@click.option("--max-walk", type=int, default=DEFAULT_MAX_WALK, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.pass_obj
def verify_cmd(client, graph_path, fmt, colouring_path, max_order, max_walk, out):
    """Certify a colouring with bounded-exhaustive searches."""
    payload = {
        "graph": {"text": _read(graph_path), "format": fmt},
        "colouring": _read(colouring_path),
        "max_order": max_order,
        "max_walk": max_walk,
    }
    _finish(client.post("/verify", payload), out)


@main.command("bounds")
@click.argument("formula")
@click.option("--g", type=int, default=None, help="Euler genus.")
@click.option("--k", type=int, default=None, help="Structure parameter.")
@click.option("--r", type=int, default=None, help="Richness.")
@click.option("--c", type=int, default=None, help="Per-bag colour count.")
@click.option("--c-prime", type=int, default=None, help="Low-degree bag colour count.")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.pass_obj
def bounds_cmd(client, formula, g, k, r, c, c_prime, out):
    """Evaluate a closed-form palette bound."""
    payload = {"formula": formula, "g": g, "k": k, "r": r, "c": c, "c_prime": c_prime}
    _finish(client.post("/bounds", payload), out)


@main.group()
def structure():
    """Validate or compute product structures."""


@structure.command("validate")
@click.option("--graph", "graph_path", type=click.Path(exists=True), required=True)
@click.option("--format", "fmt", type=click.Choice(["edgelist", "graph6"]),
              default="edgelist", show_default=True)
@click.option("--structure", "structure_path", type=click.Path(exists=True), required=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.pass_obj
def structure_validate(client, graph_path, fmt, structure_path, out):
    payload = {
        "graph": {"text": _read(graph_path), "format": fmt},
        "structure": _read(structure_path),
    }
    _finish(client.post("/structure/validate", payload), out)


@structure.command("compute")
@click.option("--graph", "graph_path", type=click.Path(exists=True), required=True)
@click.option("--format", "fmt", type=click.Choice(["edgelist", "graph6"]),
              default="edgelist", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.pass_obj
def structure_compute(client, graph_path, fmt, out):
    payload = {"graph": {"text": _read(graph_path), "format": fmt}}
    _finish(client.post("/structure/compute", payload), out)


@main.group()
def corpus():
    """Seeded instance generators (local, no service round-trip)."""


def _emit_graph(g, out: Optional[str]) -> None:
    from .graphs import serialize_graph
    text = serialize_graph(g)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


@corpus.command("triangulation")
@click.option("--n", type=int, required=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def corpus_triangulation(n, seed, out):
    import random

    from .corpus import random_triangulation
    from .graphs import InputError
    try:
        _emit_graph(random_triangulation(n, random.Random(seed)), out)
    except InputError as exc:
        raise click.ClickException(str(exc)) from None


@corpus.command("chordal")
@click.option("--n", type=int, required=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def corpus_chordal(n, seed, out):
    import random

    from .corpus import random_connected_chordal
    from .graphs import InputError
    try:
        _emit_graph(random_connected_chordal(n, random.Random(seed)), out)
    except InputError as exc:
        raise click.ClickException(str(exc)) from None


@corpus.command("partial-3-tree")
@click.option("--n", type=int, required=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def corpus_partial_3_tree(n, seed, out):
    import random

    from .corpus import random_partial_ktree
    from .graphs import InputError
    try:
        _emit_graph(random_partial_ktree(n, 3, random.Random(seed)), out)
    except InputError as exc:
        raise click.ClickException(str(exc)) from None


@main.command("serve")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    from .service import app
    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()

"""Command-line front end: a thin client over the HTTP service. Requests
are dispatched to an in-process app by default, or to a running server
with --server. Exit codes: 0 success, 1 invalid input, 2 property
violation (a collapse check failed).
"""

from __future__ import annotations

import asyncio
import json
import os
from importlib import resources

import click
import httpx

from . import __version__


class CliFailure(Exception):
    def __init__(self, message: str, code: int = 1):
        super().__init__(message)
        self.code = code


async def _call_asgi(method: str, path: str, payload):
    from .service.app import create_app

    transport = httpx.ASGITransport(app=create_app())
    async with httpx.AsyncClient(transport=transport, base_url="http://service.local") as client:
        return await client.request(method, path, json=payload)


def _describe_error(resp: httpx.Response) -> str:
    try:
        detail = resp.json().get("detail")
    except ValueError:
        detail = None
    if isinstance(detail, dict) and "message" in detail:
        return f"{detail.get('error', 'error')}: {detail['message']}"
    if isinstance(detail, list) and detail:
        first = detail[0]
        loc = ".".join(str(part) for part in first.get("loc", ()))
        return f"bad request field {loc}: {first.get('msg', 'invalid')}"
    return f"request failed with status {resp.status_code}"


def _call(server: str | None, method: str, path: str, payload=None):
    if server:
        try:
            resp = httpx.request(method, server.rstrip("/") + path, json=payload, timeout=60.0)
        except httpx.HTTPError as e:
            raise CliFailure(f"cannot reach server: {e}") from None
    else:
        resp = asyncio.run(_call_asgi(method, path, payload))
    if resp.status_code >= 400:
        raise CliFailure(_describe_error(resp))
    return resp.json()


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as e:
        raise CliFailure(f"cannot read {path}: {e.strerror or e}") from None
    except json.JSONDecodeError as e:
        raise CliFailure(f"{path} is not valid JSON: {e}") from None


def _subset_arg(arg: str) -> list[str]:
    if os.path.exists(arg):
        doc = _load_json(arg)
        if not isinstance(doc, list):
            raise CliFailure(f"{arg} must hold a JSON list of element names")
        return [str(x) for x in doc]
    return [part.strip() for part in arg.split(",") if part.strip()]


def common_options(fn):
    fn = click.option(
        "--format",
        "fmt",
        type=click.Choice(["text", "json"]),
        default="text",
        show_default=True,
        help="output format",
    )(fn)
    fn = click.option(
        "--server",
        default=None,
        metavar="URL",
        help="base URL of a running service (default: run in-process)",
    )(fn)
    return fn


def _emit(fmt: str, payload: dict, lines_fn) -> None:
    if fmt == "json":
        click.echo(json.dumps(payload, indent=2))
    else:
        for line in lines_fn(payload):
            click.echo(line)


@click.group()
@click.version_option(__version__)
def cli():
    """Chain lattices, Morse collapse and homology checks for finite cell
    complexes given as JSON files."""


@cli.command()
@click.argument("complex_path", metavar="COMPLEX")
@common_options
def validate(complex_path, server, fmt):
    """Check a complex file: face references, dimensions, square-zero."""
    payload = _call(server, "POST", "/complex/validate", _load_json(complex_path))

    def lines(p):
        yield f"valid: {p['valid']}"
        yield f"regular: {p['regular']}"
        yield f"dimension: {p['dimension']}"
        yield f"cell counts: {p['cell_counts']}"
        for err in p["errors"]:
            yield f"error: {err}"

    _emit(fmt, payload, lines)
    return 0 if payload["valid"] else 1


def _dot(payload: dict) -> str:
    out = ["digraph chains {"]
    for ch in payload["chains"]:
        out.append(f'  "{ch["id"]}";')
    for lo, hi in payload["hasse"]:
        out.append(f'  "{lo}" -> "{hi}";')
    out.append("}")
    return "\n".join(out)


@cli.command()
@click.argument("complex_path", metavar="COMPLEX")
@click.option("--emit-dot", is_flag=True, help="print the Hasse diagram as DOT text")
@common_options
def chains(complex_path, emit_dot, server, fmt):
    """List the chains of a complex: order, ideal, support, Hasse covers."""
    payload = _call(server, "POST", "/complex/chains", _load_json(complex_path))
    if emit_dot:
        click.echo(_dot(payload))
        return 0

    def lines(p):
        yield f"counts: {p['counts']}"
        for ch in p["chains"]:
            support = ",".join(ch["support"])
            yield (
                f"{ch['id']} order={ch['order']} "
                f"ideal={p['ideals'][ch['id']]} support={{{support}}}"
            )
        for lo, hi in p["hasse"]:
            yield f"{lo} < {hi}"

    _emit(fmt, payload, lines)
    return 0


@cli.command("morse-check")
@click.argument("complex_path", metavar="COMPLEX")
@click.argument("morse_path", metavar="MORSE")
@common_options
def morse_check(complex_path, morse_path, server, fmt):
    """Check the at-most-one-exception condition for a Morse function."""
    payload = _call(
        server,
        "POST",
        "/morse/check",
        {"complex": _load_json(complex_path), "morse": _load_json(morse_path)},
    )

    def lines(p):
        yield f"valid: {p['valid']}"
        for v in p["violations"]:
            yield f"violation: {v['chain']} has {v['kind']} {v['neighbors']}"
        for ch in p["double_exceptions"]:
            yield f"double exception: {ch}"

    _emit(fmt, payload, lines)
    return 0 if payload["valid"] else 1


@cli.command()
@click.argument("complex_path", metavar="COMPLEX")
@click.argument("morse_path", metavar="MORSE")
@click.option(
    "--convention",
    default="paper",
    show_default=True,
    help="inequality convention: paper | forman",
)
@common_options
def critical(complex_path, morse_path, convention, server, fmt):
    """Report the critical chains of a Morse function per order."""
    payload = _call(
        server,
        "POST",
        "/morse/critical",
        {
            "complex": _load_json(complex_path),
            "morse": _load_json(morse_path),
            "convention": convention,
        },
    )

    def lines(p):
        yield f"convention: {p['convention']}"
        yield f"counts: {p['counts']}"
        for k, ids in enumerate(p["critical"]):
            yield f"order {k}: {', '.join(ids) if ids else '-'}"

    _emit(fmt, payload, lines)
    return 0


@cli.command()
@click.argument("complex_path", metavar="COMPLEX")
@common_options
def homology(complex_path, server, fmt):
    """Betti numbers, torsion invariant factors and Euler characteristic."""
    payload = _call(server, "POST", "/complex/homology", _load_json(complex_path))

    def lines(p):
        yield f"betti: {p['betti']}"
        yield f"torsion: {p['torsion']}"
        yield f"euler: {p['euler']}"

    _emit(fmt, payload, lines)
    return 0


@cli.command()
@click.argument("complex_path", metavar="COMPLEX")
@click.argument("morse_path", metavar="MORSE")
@common_options
def collapse(complex_path, morse_path, server, fmt):
    """Collapse along a Morse function and verify the homological checks."""
    payload = _call(
        server,
        "POST",
        "/morse/collapse",
        {"complex": _load_json(complex_path), "morse": _load_json(morse_path)},
    )

    def lines(p):
        yield f"betti: {p['betti']} (collapsed: {p['collapsed']['betti']})"
        yield f"torsion: {p['torsion']} (collapsed: {p['collapsed']['torsion']})"
        yield f"euler: {p['euler']}"
        yield f"morse counts: {p['morse_counts']}"
        for name, ok in p["checks"].items():
            yield f"check {name}: {'pass' if ok else 'FAIL'}"
        yield f"status: {p['evidence']}; {p['note']}"

    _emit(fmt, payload, lines)
    return 0 if all(payload["checks"].values()) else 2


@cli.command()
@click.argument("complex_path", metavar="COMPLEX")
@click.argument("morse_path", metavar="[MORSE]", required=False)
@click.option(
    "--convention",
    default="paper",
    show_default=True,
    help="inequality convention: paper | forman",
)
@common_options
def nccw(complex_path, morse_path, convention, server, fmt):
    """Decomposition descriptor of a complex, collapsed first when a Morse
    function is given."""
    if morse_path:
        payload = _call(
            server,
            "POST",
            "/nccw/from-morse",
            {
                "complex": _load_json(complex_path),
                "morse": _load_json(morse_path),
                "convention": convention,
            },
        )
    else:
        payload = _call(server, "POST", "/nccw/commutative", _load_json(complex_path))

    def lines(p):
        yield f"algebras: {', '.join(p['algebras'])}"
        for lv in p["levels"]:
            yield f"level {lv['k']}: fiber={lv['fiber']} lambda={lv['lambda']}"
            for cell, targets in lv["attaching"].items():
                yield f"  {cell} -> {', '.join(targets)}"

    _emit(fmt, payload, lines)
    return 0


@cli.command("gen-morse")
@click.argument("complex_path", metavar="COMPLEX")
@click.option("--seed", type=int, default=0, show_default=True, help="generation seed")
@common_options
def gen_morse(complex_path, seed, server, fmt):
    """Generate a valid Morse function; JSON output is a loadable values
    file."""
    payload = _call(
        server, "POST", "/morse/generate", {"complex": _load_json(complex_path), "seed": seed}
    )

    def lines(p):
        for chain, value in p["values"].items():
            yield f"{chain} = {value}"

    _emit(fmt, payload, lines)
    return 0


@cli.command("poset-closure")
@click.argument("poset_path", metavar="POSET")
@click.argument("subset", metavar="SUBSET")
@common_options
def poset_closure(poset_path, subset, server, fmt):
    """Closure of a subset in a finite poset and its absorbing flag.

    SUBSET is a JSON list file or an inline comma-separated list."""
    payload = _call(
        server,
        "POST",
        "/poset/closure",
        {"poset": _load_json(poset_path), "subset": _subset_arg(subset)},
    )

    def lines(p):
        yield f"closure: {', '.join(p['closure']) if p['closure'] else '(empty)'}"
        yield f"absorbing: {p['absorbing']}"

    _emit(fmt, payload, lines)
    return 0


@cli.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    from .service.app import create_app

    uvicorn.run(create_app(), host=host, port=port)
    return 0


@cli.command()
def fixtures():
    """Print the paths of the bundled example files."""
    root = resources.files("ncmorse") / "fixtures"
    for entry in sorted(root.iterdir(), key=lambda p: p.name):
        click.echo(str(entry))
    return 0


def main(argv=None) -> int:
    try:
        rv = cli.main(args=argv, standalone_mode=False)
    except CliFailure as e:
        click.echo(f"error: {e}", err=True)
        return e.code
    except click.exceptions.Exit as e:
        return e.exit_code
    except click.ClickException as e:
        e.show()
        return 1
    except click.exceptions.Abort:
        click.echo("aborted", err=True)
        return 1
    return rv if isinstance(rv, int) else 0


if __name__ == "__main__":
    raise SystemExit(main())

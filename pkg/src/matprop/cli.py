"""Command-line front door, implemented as a thin client of the service.

By default the CLI talks to an in-process instance of the HTTP app, so no
server needs to run; `--server URL` points it at a remote one instead.
Inputs are positional and may be inline text, a path to a file, or `-`
for standard input.

Exit codes: 0 success (and `equal` true), 1 `equal` false, 2 parse or
typecheck errors, 3 rig or shape mismatches.
"""

from __future__ import annotations

import argparse
import os
import sys

RIG_NAMES = ("bool", "nat", "int", "f2", "rat", "nnrat", "ratfunc")

EXIT_OK = 0
EXIT_UNEQUAL = 1
EXIT_BAD_INPUT = 2
EXIT_MISMATCH = 3


def _client(server: str | None):
    if server:
        import httpx

        return httpx.Client(base_url=server)
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient

    from .service import create_app

    return TestClient(create_app())


def read_input(arg: str) -> str:
    """Resolve a positional input: '-' is stdin, an existing path is read,
    anything else is taken as inline text."""
    if arg == "-":
        return sys.stdin.read()
    if os.path.exists(arg) and os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            return fh.read()
    return arg


def _fail(detail) -> int:
    if isinstance(detail, dict):
        kind = detail.get("kind", "error")
        msg = detail.get("message", "")
        if "start" in detail:
            msg += f" [{detail['start']}..{detail['end']}]"
        print(f"error ({kind}): {msg}", file=sys.stderr)
        if kind in ("rig-mismatch", "shape", "domain"):
            return EXIT_MISMATCH
        return EXIT_BAD_INPUT
    print(f"error: {detail}", file=sys.stderr)
    return EXIT_BAD_INPUT


def _post(client, path: str, payload: dict):
    resp = client.post(path, json=payload)
    if resp.status_code in (400, 422):
        return None, resp.json().get("detail")
    resp.raise_for_status()
    return resp.json(), None


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="matprop",
        description="Evaluate, compare, normalize, rewrite, and render wiring diagrams over a rig.",
    )
    ap.add_argument("--server", help="URL of a running service (default: in-process)")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, help, *, inputs=1, rig=True, bound=False, rules=False, fmt=False):
        p = sub.add_parser(name, help=help)
        if rig:
            p.add_argument("--rig", choices=RIG_NAMES, default="nat")
        if bound:
            p.add_argument("--bound", type=int, default=100)
        if rules:
            p.add_argument("--rules", default="auto",
                           help="base, auto, or additions like +special,+chartwo,+antipode")
        if fmt:
            p.add_argument("--format", choices=("text", "dot"), default="text")
        for i in range(inputs):
            p.add_argument(f"input{i}" if inputs > 1 else "input",
                           help="inline text, a file path, or - for stdin")
        return p

    add("check", "typecheck a term and print its arity")
    add("eval", "evaluate a term to a matrix")
    add("equal", "decide whether two terms denote the same matrix", inputs=2)
    add("decompose", "turn a matrix file into its canonical term", rig=False, fmt=True)
    add("normalize", "replace a term by its canonical form", fmt=True)
    add("rewrite", "apply the diagram relations with a step bound",
        bound=True, rules=True, fmt=True)
    add("render", "emit a dot graph for a term")
    add("rel2mat", "relation file to bool matrix", rig=False)
    add("mat2rel", "bool matrix file to relation", rig=False)
    add("span2mat", "span file to nat matrix", rig=False)
    add("mat2span", "nat matrix file to span", rig=False)
    p = sub.add_parser("axioms", help="run the axiom table for a rig")
    p.add_argument("--rig", choices=RIG_NAMES, default="nat")
    p.add_argument("--samples", type=int, default=100)
    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    return ap


def _render_term_output(client, args, data) -> int:
    if getattr(args, "format", "text") == "dot":
        body, err = _post(client, "/render", {"rig": data["rig"], "term": data["term"]})
        if err:
            return _fail(err)
        print(body["dot"], end="")
    else:
        print(data["term"])
    return EXIT_OK


def run(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)

    if args.command == "serve":
        import uvicorn

        from .service import app

        uvicorn.run(app, host=args.host, port=args.port)
        return EXIT_OK

    client = _client(args.server)
    cmd = args.command

    if cmd == "check":
        data, err = _post(client, "/check", {"rig": args.rig, "term": read_input(args.input)})
        if err:
            return _fail(err)
        print(f"{data['dom']} -> {data['cod']}")
        return EXIT_OK

    if cmd == "eval":
        data, err = _post(client, "/eval", {"rig": args.rig, "term": read_input(args.input)})
        if err:
            return _fail(err)
        print(data["text"], end="")
        return EXIT_OK

    if cmd == "equal":
        data, err = _post(client, "/equal", {
            "rig": args.rig,
            "left": read_input(args.input0),
            "right": read_input(args.input1),
        })
        if err:
            return _fail(err)
        print("true" if data["equal"] else "false")
        return EXIT_OK if data["equal"] else EXIT_UNEQUAL

    if cmd == "decompose":
        data, err = _post(client, "/decompose", {"matrix": read_input(args.input)})
        if err:
            return _fail(err)
        return _render_term_output(client, args, data)

    if cmd == "normalize":
        data, err = _post(client, "/normalize", {"rig": args.rig, "term": read_input(args.input)})
        if err:
            return _fail(err)
        return _render_term_output(client, args, data)

    if cmd == "rewrite":
        data, err = _post(client, "/rewrite", {
            "rig": args.rig,
            "term": read_input(args.input),
            "bound": args.bound,
            "rules": args.rules,
        })
        if err:
            return _fail(err)
        if getattr(args, "format", "text") == "dot":
            body, err = _post(client, "/render", {"rig": data["rig"], "term": data["term"]})
            if err:
                return _fail(err)
            print(body["dot"], end="")
        else:
            print(data["term"])
            for line in data["trace"]:
                print(line)
        return EXIT_OK

    if cmd == "render":
        data, err = _post(client, "/render", {"rig": args.rig, "term": read_input(args.input)})
        if err:
            return _fail(err)
        print(data["dot"], end="")
        return EXIT_OK

    if cmd in ("rel2mat", "mat2rel", "span2mat", "mat2span"):
        data, err = _post(client, "/convert", {"kind": cmd, "data": read_input(args.input)})
        if err:
            return _fail(err)
        print(data["output"], end="")
        return EXIT_OK

    if cmd == "axioms":
        data, err = _post(client, "/axioms", {"rig": args.rig, "samples": args.samples})
        if err:
            return _fail(err)
        for check in data["checks"]:
            status = "pass" if check["holds"] else "FAIL"
            print(f"{check['name']:<16} {status}")
        print(f"{'all':<16} {'pass' if data['all_hold'] else 'FAIL'}")
        return EXIT_OK

    raise AssertionError(f"unhandled command {cmd}")


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

"""Command-line client for the layerlen service.

The CLI only builds request payloads, dispatches them (to the in-process
endpoint functions by default, or to a remote server with --server), and
prints the responses.  Exit codes: 0 pass, 1 verification/bound failure,
2 usage or parse error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import service
from .errors import LayerlenError
from .reports import json_line

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

_CODE_TO_EXIT = {
    "parse": EXIT_USAGE,
    "usage": EXIT_USAGE,
    "budget": EXIT_BUDGET,
    "hypothesis": EXIT_FAIL,
    "internal": EXIT_FAIL,
}


class CliFailure(Exception):
    def __init__(self, message: str, exit_code: int):
        super().__init__(message)
        self.exit_code = exit_code


def _read(path: str) -> str:
    p = Path(path)
    if not p.is_file():
        raise CliFailure(f"no such file: {path}", EXIT_USAGE)
    return p.read_text()


def _dispatch(server: str | None, route: str, endpoint, payload) -> dict:
    if server:
        import httpx

        resp = httpx.post(
            server.rstrip("/") + route, json=payload.model_dump(), timeout=600.0
        )
        if resp.status_code >= 400:
            try:
                body = resp.json()
            except ValueError:
                body = {}
            err = body.get("error", {})
            raise CliFailure(
                err.get("detail", f"server error {resp.status_code}"),
                _CODE_TO_EXIT.get(err.get("code"), EXIT_USAGE),
            )
        return resp.json()
    try:
        return endpoint(payload).model_dump()
    except LayerlenError as exc:
        raise CliFailure(str(exc), _CODE_TO_EXIT.get(exc.code, EXIT_FAIL))


def _simples_groups(tokens):
    if tokens is None:
        return None
    return [[t for t in tokens if t != ""]]


def cmd_check(args) -> int:
    payload = service.AlgebraRequest(
        algebra=_read(args.algebra),
        length_cap=args.length_cap,
        name=Path(args.algebra).stem,
    )
    out = _dispatch(args.server, "/check", service.check, payload)
    print(
        f"name={out['name']} p={out['p']} dim={out['dimension']}"
        f" loewy_length={out['loewy_length']} nil_index={out['nil_index']}"
    )
    print("vertices: " + " ".join(out["vertices"]))
    print("basis: " + " ".join(out["basis"]))
    return EXIT_PASS


def cmd_functor_eval(args) -> int:
    payload = service.FunctorEvalRequest(
        algebra=_read(args.algebra),
        module=_read(args.module),
        functor=args.functor,
        name=Path(args.algebra).stem,
    )
    out = _dispatch(args.server, "/functor-eval", service.functor_eval, payload)
    dims = " ".join(f"{k}={v}" for k, v in out["dims"].items())
    print(f"{out['functor']}: dims {dims} total={out['total_dim']}")
    return EXIT_PASS


def cmd_layer(args) -> int:
    payload = service.LayerRequest(
        algebra=_read(args.algebra),
        module=_read(args.module),
        alpha=args.alpha,
        beta=args.beta,
        mode=args.mode,
        name=Path(args.algebra).stem,
    )
    out = _dispatch(args.server, "/layer", service.layer, payload)
    print(out["value"] if out["finite"] else "inf")
    return EXIT_PASS


def cmd_verify(args) -> int:
    payload = service.VerifyRequest(
        algebra=_read(args.algebra),
        theorem=args.theorem,
        samples=args.samples,
        max_dim=args.max_dim,
        seed=args.seed,
        simples=_simples_groups(args.simples),
        name=Path(args.algebra).stem,
    )
    out = _dispatch(args.server, "/verify", service.verify, payload)
    print(json_line(out))
    return EXIT_PASS if out["status"] == "pass" else EXIT_FAIL


def cmd_psi(args) -> int:
    payload = service.PsiRequest(
        algebra=_read(args.algebra),
        module=_read(args.module),
        pd_cap=args.pd_cap,
        name=Path(args.algebra).stem,
    )
    out = _dispatch(args.server, "/psi", service.psi_endpoint, payload)
    print(json_line(out))
    return EXIT_PASS


def cmd_findim_bound(args) -> int:
    payload = service.BoundRequest(
        algebra=_read(args.algebra),
        simples=[s for s in (args.simples or []) if s != ""],
        ell=args.ell,
        enum_bound=args.enum_bound,
        pd_cap=args.pd_cap,
        mode=args.mode,
        name=Path(args.algebra).stem,
    )
    out = _dispatch(args.server, "/findim-bound", service.findim_bound, payload)
    print(json_line(out))
    return EXIT_PASS if out["status"] == "ok" else EXIT_FAIL


def cmd_enumerate(args) -> int:
    payload = service.EnumerateRequest(
        algebra=_read(args.algebra),
        max_dim=args.max_dim,
        name=Path(args.algebra).stem,
    )
    out = _dispatch(args.server, "/enumerate", service.enumerate_endpoint, payload)
    print(f"iso_classes {out['count']}")
    for record in out["modules"]:
        dims = " ".join(f"{k}={v}" for k, v in record["dims"].items())
        print(f"dims {dims} total={record['total_dim']}")
    return EXIT_PASS


def cmd_decompose(args) -> int:
    payload = service.DecomposeRequest(
        algebra=_read(args.algebra),
        module=_read(args.module),
        name=Path(args.algebra).stem,
    )
    out = _dispatch(args.server, "/decompose", service.decompose_endpoint, payload)
    for s in out["summands"]:
        dims = " ".join(f"{k}={v}" for k, v in s["dims"].items())
        print(
            f"summand dims {dims} multiplicity={s['multiplicity']}"
            f" certificate={s['certificate']}"
        )
    print(f"witness_ok {str(out['witness_ok']).lower()}")
    return EXIT_PASS


def cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run(service.app, host=args.host, port=args.port)
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="layerlen",
        description="Layer lengths and finitistic-dimension bounds for bound quiver algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument(
            "--server",
            default=None,
            help="URL of a running layerlen service; default runs in-process",
        )
        p.add_argument("--length-cap", type=int, default=12)

    p = sub.add_parser("check", help="validate an algebra file")
    p.add_argument("algebra")
    common(p)
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("functor-eval", help="evaluate a functor expression on a module")
    p.add_argument("algebra")
    p.add_argument("module")
    p.add_argument("--functor", required=True)
    common(p)
    p.set_defaults(fn=cmd_functor_eval)

    p = sub.add_parser("layer", help="layer lengths of a module")
    p.add_argument("algebra")
    p.add_argument("module")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", default=None)
    p.add_argument("--mode", choices=["radical", "socle"], default="radical")
    common(p)
    p.set_defaults(fn=cmd_layer)

    p = sub.add_parser("verify", help="run a comparison-theorem suite")
    p.add_argument("algebra")
    p.add_argument("--theorem", required=True)
    p.add_argument("--samples", type=int, default=40)
    p.add_argument("--max-dim", type=int, default=4)
    p.add_argument("--seed", type=int, default=service.DEFAULT_SEED)
    p.add_argument("--simples", nargs="*", default=None)
    common(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("psi", help="Igusa-Todorov report for a module")
    p.add_argument("algebra")
    p.add_argument("module")
    p.add_argument("--pd-cap", type=int, default=20)
    common(p)
    p.set_defaults(fn=cmd_psi)

    p = sub.add_parser("findim-bound", help="finitistic-dimension bound report")
    p.add_argument("algebra")
    p.add_argument("--simples", nargs="*", default=[])
    p.add_argument("--ell", type=int, default=0)
    p.add_argument("--enum-bound", type=int, default=3)
    p.add_argument("--pd-cap", type=int, default=20)
    p.add_argument("--mode", choices=["bigteo", "mhlm2", "radcube"], default="bigteo")
    common(p)
    p.set_defaults(fn=cmd_findim_bound)

    p = sub.add_parser("enumerate", help="modules up to iso within a dimension bound")
    p.add_argument("algebra")
    p.add_argument("--max-dim", type=int, required=True)
    common(p)
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("decompose", help="Krull-Schmidt decomposition of a module")
    p.add_argument("algebra")
    p.add_argument("module")
    common(p)
    p.set_defaults(fn=cmd_decompose)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(fn=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except CliFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())

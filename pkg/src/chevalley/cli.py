"""Command-line frontend for the verification suite.

Each subcommand builds a request model, runs it in-process (or POSTs it to a
running service with --server), and renders TSV or JSON. Output is
byte-identical for identical flags and seed. Exit codes: 0 all checks pass,
1 a check failed, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import Optional

from pydantic import BaseModel, ValidationError

from . import __version__
from .service import ops
from .service import schemas as sc

PASS = 0
CHECK_FAILED = 1
USAGE = 2

OPS = {
    "roots": (sc.RootsRequest, ops.roots_op),
    "weyl-scan": (sc.WeylScanRequest, ops.weyl_scan_op),
    "relations": (sc.RelationsRequest, ops.relations_op),
    "rgd-check": (sc.RgdCheckRequest, ops.rgd_check_op),
    "vrgd-check": (sc.VrgdCheckRequest, ops.vrgd_check_op),
    "torsion": (sc.TorsionRequest, ops.torsion_op),
    "torsion-scan": (sc.TorsionScanRequest, ops.torsion_scan_op),
    "congruence-probe": (sc.CongruenceProbeRequest, ops.congruence_probe_op),
    "approx": (sc.ApproxRequest, ops.approx_op),
}


def _env_seed() -> int:
    raw = os.environ.get("CHEVALLEY_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chevalley",
        description="Exact checks on adjoint Chevalley groups over Q",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, typed: bool = True, seeded: bool = True):
        if typed:
            p.add_argument("--type", dest="type_label", choices=list("ABCDEFG"),
                           help="classification letter")
            p.add_argument("--rank", type=int, help="rank of the root system")
            p.add_argument("--all-types", action="store_true",
                           help="sweep the built-in type matrix instead of one type")
            p.add_argument("--budget-seconds", type=float, default=600.0,
                           help="wall-clock guard for --all-types sweeps")
        if seeded:
            p.add_argument("--seed", type=int, default=None,
                           help="sample seed (default: CHEVALLEY_SEED or 0)")
        p.add_argument("--format", choices=["tsv", "json"], default="tsv")
        p.add_argument("--output", help="write here instead of stdout")
        p.add_argument("--server", help="POST to a running service at this base URL")

    p = sub.add_parser("roots", help="root system table")
    common(p, seeded=False)

    p = sub.add_parser("weyl-scan", help="every Weyl element with order and eigenvalue data")
    common(p, seeded=False)
    p.add_argument("--max-size", type=int, default=1152)

    p = sub.add_parser("relations", help="defining relation families over samples")
    common(p)
    p.add_argument("--samples", type=int, default=50)

    p = sub.add_parser("rgd-check", help="root-group-datum axioms")
    common(p)
    p.add_argument("--prime", type=int, default=2)
    p.add_argument("--budget", type=int, default=100)

    p = sub.add_parser("vrgd-check", help="valued root-group-datum axioms")
    common(p)
    p.add_argument("--prime", type=int, default=2)
    p.add_argument("--budget", type=int, default=100)

    p = sub.add_parser("torsion", help="survey representative orders over one Weyl word")
    common(p)
    p.add_argument("--word", help="comma-separated simple reflection indices (default: Coxeter)")
    p.add_argument("--samples", type=int, default=50)

    p = sub.add_parser("torsion-scan", help="classify every Weyl element")
    common(p)
    p.add_argument("--max-size", type=int, default=1152)
    p.add_argument("--samples", type=int, default=5)

    p = sub.add_parser("congruence-probe", help="torsion probe of a congruence subgroup")
    common(p)
    p.add_argument("--prime", type=int, default=2)
    p.add_argument("--modulus", type=int, default=3)
    p.add_argument("--words", type=int, default=200)
    p.add_argument("--max-len", type=int, default=8)
    p.add_argument("--no-strict", dest="strict", action="store_false",
                   help="permit modulus 2 and record findings without failing")

    p = sub.add_parser("approx", help="p-adic approximation inside a congruence subgroup")
    common(p, typed=False, seeded=False)
    p.add_argument("--prime", type=int, default=2)
    p.add_argument("--modulus", type=int, default=3)
    p.add_argument("--lambda", dest="lam", default="7", help="rational to approximate")
    p.add_argument("--precision", type=int, default=4)
    p.add_argument("--type", dest="type_label", choices=list("ABCDEFG"),
                   help="also approximate a root-group element of this type")
    p.add_argument("--rank", type=int)
    p.add_argument("--root-index", type=int, default=1)
    p.add_argument("--all-types", action="store_true",
                   help="sweep the generator approximation over the type matrix")
    p.add_argument("--budget-seconds", type=float, default=600.0)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _request_payload(args: argparse.Namespace, model: type[BaseModel], seed: int) -> dict:
    payload = {}
    for name in model.model_fields:
        if name == "seed":
            payload[name] = seed
        elif hasattr(args, name):
            value = getattr(args, name)
            if value is not None:
                payload[name] = value
    if isinstance(payload.get("word"), str):
        payload["word"] = [int(tok) for tok in payload["word"].split(",") if tok != ""]
    return payload


def _execute(command: str, request: BaseModel, server: Optional[str]) -> BaseModel:
    model, handler = OPS[command]
    if server is None:
        return handler(request)
    import httpx

    url = server.rstrip("/") + "/" + command
    try:
        reply = httpx.post(url, json=request.model_dump(), timeout=600.0)
    except httpx.HTTPError as exc:
        raise ValueError(f"service unreachable: {exc}") from exc
    if reply.status_code != 200:
        raise ValueError(f"service returned {reply.status_code}: {reply.text}")
    return sc.RESPONSE_MODELS[command].model_validate(reply.json())


def _sweep_requests(args: argparse.Namespace, model: type[BaseModel], seed: int) -> list[BaseModel]:
    requests = []
    for label, rank in sc.ACCEPTANCE_MATRIX:
        payload = _request_payload(args, model, seed)
        payload["type_label"] = label
        if "rank" in model.model_fields:
            payload["rank"] = rank
        requests.append(model.model_validate(payload))
    return requests


# -- rendering --------------------------------------------------------------

def _b(value: bool) -> str:
    return "true" if value else "false"


def _cell(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return _b(value)
    if isinstance(value, (list, dict)):
        return json.dumps(value, separators=(",", ":"), sort_keys=True) if value else "-"
    return str(value)


def _word_cell(word: list[int]) -> str:
    return ",".join(str(i) for i in word) if word else "e"


def _tsv_table(command: str, resp: BaseModel) -> tuple[list[str], list[list[str]]]:
    if command == "roots":
        return ["coords", "height"], [
            [",".join(map(str, r.coords)), str(r.height)] for r in resp.roots
        ]
    if command == "weyl-scan":
        return ["word", "order", "det_minus_one", "eigenvalue_one"], [
            [_word_cell(r.word), str(r.order), r.det_minus_one, _b(r.eigenvalue_one)]
            for r in resp.rows
        ]
    if command == "relations":
        return ["relation", "samples", "ok", "detail", "counterexample"], [
            [r.relation, str(r.samples), _b(r.ok), r.detail or "-", _cell(r.counterexample)]
            for r in resp.rows
        ]
    if command in ("rgd-check", "vrgd-check"):
        return ["axiom", "samples", "status", "counterexample", "detail"], [
            [r.axiom, str(r.samples), r.status, _cell(r.counterexample), r.detail or "-"]
            for r in resp.rows
        ]
    if command == "torsion":
        return ["order", "count"], [[r.order, str(r.count)] for r in resp.orders]
    if command == "torsion-scan":
        return ["word", "weyl_order", "criterion", "det_minus_one", "verdict"], [
            [_word_cell(r.word), str(r.weyl_order), _b(r.criterion), r.det_minus_one, r.verdict]
            for r in resp.rows
        ]
    if command == "congruence-probe":
        return (
            ["checked", "skipped_identity", "verdict", "violating_word", "violating_order"],
            [[str(resp.checked), str(resp.skipped_identity), resp.verdict,
              _cell(resp.violating_word), _cell(resp.violating_order)]],
        )
    if command == "approx":
        cols = ["lam", "mu", "nu_diff", "precision", "alpha", "achieved"]
        gen = resp.generator
        return cols, [[
            resp.lam, resp.mu, resp.nu_diff, str(resp.precision),
            ",".join(map(str, gen.alpha)) if gen else "-",
            gen.achieved if gen else "-",
        ]]
    raise ValueError(f"no table layout for {command}")


_PROV_SKIP = {"rows", "roots", "orders", "cartan", "generator", "violating_word"}


def _provenance(resp: BaseModel) -> list[str]:
    lines = []
    for name, value in resp.model_dump().items():
        if name in _PROV_SKIP:
            continue
        lines.append(f"# {name}={_cell(value)}")
    return lines


def _render_tsv(command: str, responses: list[BaseModel], sweep: Optional[dict]) -> str:
    lines = [f"# command={command}"]
    if sweep is not None:
        lines.append(f"# sweep={_b(True)}")
        lines.append(f"# budget_seconds={sweep['budget_seconds']}")
        lines.append(f"# truncated={_b(sweep['truncated'])}")
    for resp in responses:
        lines.extend(_provenance(resp))
        columns, rows = _tsv_table(command, resp)
        lines.append("\t".join(columns))
        lines.extend("\t".join(cells) for cells in rows)
    return "\n".join(lines) + "\n"


def _render_json(command: str, responses: list[BaseModel], sweep: Optional[dict], seed: int) -> str:
    if sweep is None:
        doc = responses[0].model_dump()
    else:
        doc = sc.SweepResponse(
            seed=seed,
            command=command,
            budget_seconds=sweep["budget_seconds"],
            truncated=sweep["truncated"],
            results=[r.model_dump() for r in responses],
        ).model_dump()
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "serve":
        import uvicorn

        from .service.app import app

        uvicorn.run(app, host=args.host, port=args.port)
        return PASS

    command = args.command
    model, _ = OPS[command]
    seed = args.seed if getattr(args, "seed", None) is not None else _env_seed()

    try:
        if getattr(args, "all_types", False):
            requests = _sweep_requests(args, model, seed)
        else:
            if "type_label" in model.model_fields and command != "approx":
                if args.type_label is None or args.rank is None:
                    parser.error(f"{command} needs --type and --rank (or --all-types)")
            requests = [model.model_validate(_request_payload(args, model, seed))]
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE

    responses: list[BaseModel] = []
    sweep_meta = None
    started = time.monotonic()
    try:
        if getattr(args, "all_types", False):
            truncated = False
            for request in requests:
                if time.monotonic() - started > args.budget_seconds:
                    truncated = True
                    break
                responses.append(_execute(command, request, args.server))
            sweep_meta = {"budget_seconds": args.budget_seconds, "truncated": truncated}
        else:
            responses.append(_execute(command, requests[0], args.server))
    except (ValueError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except AssertionError as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return CHECK_FAILED

    if args.format == "json":
        text = _render_json(command, responses, sweep_meta, seed)
    else:
        text = _render_tsv(command, responses, sweep_meta)

    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)

    return PASS if all(ops.response_ok(r) for r in responses) else CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())

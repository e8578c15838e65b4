"""Command-line thin client for the matchwalk service.

Every subcommand marshals its flags into a request, posts it to the service
and writes the returned CSV/tables to disk or stdout.  Without ``--server``
the service app is mounted in-process (same code path as a remote server,
no socket).  ``serve`` starts a standalone server.

A plain key-value config file (``key = value`` lines, ``#`` comments) can
supply any flag; explicit flags win.
"""

from __future__ import annotations

import argparse
import asyncio
import sys

import httpx

__all__ = ["main"]

CONFIG_KEYS = {
    "n": str,
    "t": int,
    "alpha": float,
    "c": float,
    "steps": int,
    "seed": int,
    "out": str,
    "workers": int,
    "modes": str,
    "server": str,
    "column": str,
    "initial": str,
    "drop_smallest": int,
    "exact": lambda v: v.lower() in ("1", "true", "yes"),
}


def parse_config_file(path: str) -> dict:
    """Read ``key = value`` lines; unknown keys are rejected early."""
    values: dict = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise SystemExit(f"{path}:{lineno}: expected 'key = value'")
            key, value = (part.strip() for part in line.split("=", 1))
            if key not in CONFIG_KEYS:
                raise SystemExit(f"{path}:{lineno}: unknown config key {key!r}")
            values[key] = CONFIG_KEYS[key](value)
    return values


def _request(server: str | None, path: str, payload: dict) -> dict:
    async def go():
        if server:
            async with httpx.AsyncClient(base_url=server, timeout=None) as client:
                response = await client.post(path, json=payload)
        else:
            from .service import create_app

            transport = httpx.ASGITransport(app=create_app())
            async with httpx.AsyncClient(
                transport=transport, base_url="http://matchwalk.local", timeout=None
            ) as client:
                response = await client.post(path, json=payload)
        if response.status_code != 200:
            raise SystemExit(f"service error {response.status_code}: {response.text}")
        return response.json()

    return asyncio.run(go())


def _write_or_print(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _merged(args: argparse.Namespace, key: str, default=None):
    value = getattr(args, key, None)
    if value is not None:
        return value
    if args.config_values and key in args.config_values:
        return args.config_values[key]
    return default


def _parse_grid(value) -> list[int] | None:
    if value is None:
        return None
    if isinstance(value, int):
        return [value]
    return [int(part) for part in str(value).split(",") if part]


def _parse_modes(value) -> list[str]:
    if value is None:
        return ["quantum", "classical"]
    return [part for part in str(value).split(",") if part]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matchwalk",
        description="quantum search of a marked matching on signed complete graphs",
    )
    parser.add_argument("--server", help="base URL of a running service")
    parser.add_argument("--config", help="key=value config file; flags win")
    sub = parser.add_subparsers(dest="command", required=True)

    spectrum = sub.add_parser("spectrum", help="closed-form vs numeric spectrum CSV")
    spectrum.add_argument("--n", type=int)
    spectrum.add_argument("--t", type=int)
    spectrum.add_argument("--out")

    search = sub.add_parser("search", help="finding-probability trace CSV")
    search.add_argument("--n", type=int)
    search.add_argument("--t", type=int)
    search.add_argument("--steps", type=int)
    search.add_argument("--initial", choices=["basis", "uniform"])
    search.add_argument("--out")

    classical = sub.add_parser("classical", help="edge-walk hitting times CSV")
    classical.add_argument("--n", type=int)
    classical.add_argument("--t", type=int)
    classical.add_argument("--no-exact", action="store_true")
    classical.add_argument("--out")

    sweep = sub.add_parser("sweep", help="grid sweep over n with t = ceil(c*n^alpha)")
    sweep.add_argument("--n", help="comma-separated grid (default built-in)")
    sweep.add_argument("--alpha", type=float)
    sweep.add_argument("--c", type=float)
    sweep.add_argument("--seed", type=int)
    sweep.add_argument("--workers", type=int)
    sweep.add_argument("--modes", help="comma subset of quantum,classical,spectra")
    sweep.add_argument("--out")

    fit = sub.add_parser("fit", help="log-log slope of a sweep column")
    fit.add_argument("dataset", help="sweep CSV file")
    fit.add_argument("--column", required=True)
    fit.add_argument("--drop-smallest", type=int, dest="drop_smallest")

    report = sub.add_parser("report", help="quantum vs classical comparison")
    report.add_argument("dataset", help="sweep CSV file")
    report.add_argument("--out", help="prefix for plot-data files")

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    args.config_values = parse_config_file(args.config) if args.config else {}
    server = _merged(args, "server")

    if args.command == "serve":
        import uvicorn

        from .service import create_app

        uvicorn.run(create_app(), host=args.host, port=args.port)
        return 0

    if args.command == "spectrum":
        payload = {
            "n": int(_merged(args, "n", 4)),
            "t": int(_merged(args, "t", 0)),
        }
        data = _request(server, "/spectrum", payload)
        _write_or_print(data["csv"], _merged(args, "out"))
        return 0

    if args.command == "search":
        payload = {
            "n": int(_merged(args, "n", 4)),
            "t": int(_merged(args, "t", 1)),
            "steps": _merged(args, "steps"),
            "initial": _merged(args, "initial", "basis"),
        }
        data = _request(server, "/search", payload)
        _write_or_print(data["csv"], _merged(args, "out"))
        return 0

    if args.command == "classical":
        exact = not args.no_exact if args.no_exact else _merged(args, "exact", True)
        payload = {
            "n": int(_merged(args, "n", 4)),
            "t": int(_merged(args, "t", 1)),
            "exact": bool(exact),
        }
        data = _request(server, "/classical", payload)
        _write_or_print(data["csv"], _merged(args, "out"))
        return 0

    if args.command == "sweep":
        payload = {
            "n_grid": _parse_grid(_merged(args, "n")),
            "alpha": float(_merged(args, "alpha", 0.0)),
            "c": float(_merged(args, "c", 1.0)),
            "modes": _parse_modes(_merged(args, "modes")),
            "seed": int(_merged(args, "seed", 0)),
            "workers": int(_merged(args, "workers", 1)),
        }
        data = _request(server, "/sweep", payload)
        _write_or_print(data["csv"], _merged(args, "out"))
        return 0

    if args.command == "fit":
        with open(args.dataset) as fh:
            csv_text = fh.read()
        payload = {
            "csv": csv_text,
            "column": _merged(args, "column"),
            "drop_smallest": int(_merged(args, "drop_smallest", 2)),
        }
        data = _request(server, "/fit", payload)
        print(
            f"column={data['column']} slope={data['slope']:.6g} "
            f"intercept={data['intercept']:.6g} r_squared={data['r_squared']:.6g}"
        )
        return 0

    if args.command == "report":
        with open(args.dataset) as fh:
            csv_text = fh.read()
        data = _request(server, "/report", {"csv": csv_text})
        sys.stdout.write(data["table"])
        if data.get("ratio_slope") is not None:
            print(f"speedup slope: {data['ratio_slope']:.6g}")
        prefix = _merged(args, "out")
        if prefix:
            for name, text in data["curve_csv"].items():
                with open(f"{prefix}.{name}.csv", "w", newline="") as fh:
                    fh.write(text)
        return 0

    raise SystemExit(f"unknown command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())

"""
Command-line front end: `python -m src.main <subcommand> ...`.

Subcommands: field-info, eval, gauss, jacobi, f4, verify, table.
Exit codes: 0 pass, 1 verification failure, 2 usage or input error.
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

import pandas as pd

from src.chars import AddChar, parse_char, parse_paramset
from src.constant import (DEFAULT_PSI_SHIFT, DEFAULT_SAMPLE_SIZE, DEFAULT_SEED,
                          ExitCode, OutputFormat, VerifyMode)
from src.cyclo import CycloNum
from src.errors import FiniteHgfError
from src.gf import FiniteField, construct_field, field_from_q
from src.hgf import HgfSpec, appell_f4, hgf_eval, hgf_table
from src.runner import (load_configuration, resolve_threads, run_profile,
                        summary_frame, write_report, write_summary_csv)
from src.sums import gauss, gauss0, jacobi
from src.utils import UtilsJson, UtilsPath
from src.verify import suite_passed

logger = logging.getLogger(__name__)

BASE_PATH = Path(__file__).resolve().parent.parent


def _q_list(text: str) -> List[int]:
    try:
        return [int(token) for token in text.split(",") if token.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected a comma list of integers, got '{text}'") from e


def _add_field_args(parser: argparse.ArgumentParser, q_list: bool = False,
                    psi_default: Optional[int] = DEFAULT_PSI_SHIFT) -> None:
    group = parser.add_argument_group("field")
    if q_list:
        group.add_argument("--q", type=_q_list, help="Comma list of field orders, e.g. 5,7,9.")
    else:
        group.add_argument("--q", type=int, help="Field order, a prime power.")
        group.add_argument("--p", type=int, help="Characteristic (with --f).")
        group.add_argument("--f", type=int, default=1, help="Extension degree.")
        group.add_argument("--modulus", type=str,
                           help="Comma list of modulus coefficients, lowest degree first.")
    group.add_argument("--psi-shift", type=int, default=psi_default,
                       help="Shift a of the additive character ψ_a.")


def setup_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """
    Set up the argument parser with one sub-parser per command.
    """
    parser = argparse.ArgumentParser(
        prog="finite-hgf",
        description="Exact hypergeometric functions over finite fields.")
    parser.add_argument("--log-level", default="WARNING",
                        choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    parser.add_argument("--format", default=OutputFormat.JSON.value,
                        choices=[f.value for f in OutputFormat])
    sub = parser.add_subparsers(dest="command", required=True)

    info = sub.add_parser("field-info", help="Print p, f, q, modulus and generator.")
    _add_field_args(info)

    ev = sub.add_parser("eval", help="Evaluate F(A, B; λ).")
    _add_field_args(ev)
    ev.add_argument("--num", default="", help="Upper parameters, e.g. 'phi,chi:1'.")
    ev.add_argument("--den", default="", help="Lower parameters.")
    ev.add_argument("--rfs", action="store_true", help="Adjoin ε to the lower parameters.")
    ev.add_argument("--lam", required=True, help="λ as an integer encoding or 'g^k'.")

    gs = sub.add_parser("gauss", help="Gauss sum g(χ) (or g°(χ) with --circled).")
    _add_field_args(gs)
    gs.add_argument("--chi", required=True)
    gs.add_argument("--circled", action="store_true")

    jc = sub.add_parser("jacobi", help="Jacobi sum j(χ, χ').")
    _add_field_args(jc)
    jc.add_argument("--chi", required=True)
    jc.add_argument("--chi2", required=True)

    f4 = sub.add_parser("f4", help="Appell F4(α, β; γ, γ'; x, y).")
    _add_field_args(f4)
    for name in ("alpha", "beta", "gamma", "gamma2"):
        f4.add_argument(f"--{name}", required=True)
    f4.add_argument("--x", required=True)
    f4.add_argument("--y", required=True)

    vf = sub.add_parser("verify", help="Check catalog identities exactly.")
    _add_field_args(vf, q_list=True, psi_default=None)
    vf.add_argument("--profile", help="Profile of config/run_config.json (default: 'default').")
    vf.add_argument("--config-dir", type=Path, default=BASE_PATH / "config")
    vf.add_argument("--ids", help="'all' or a comma list of catalog ids.")
    vf.add_argument("--mode", choices=[m.value for m in VerifyMode])
    vf.add_argument("--n", type=int, help=f"Sample size (default {DEFAULT_SAMPLE_SIZE}).")
    vf.add_argument("--seed", type=int, help=f"Sampling seed (default {DEFAULT_SEED}).")
    vf.add_argument("--threads", type=int, help="Worker processes.")
    vf.add_argument("--out", type=Path, help="Report JSON path.")
    vf.add_argument("--summary-csv", type=Path, help="Also write a per-report summary CSV.")
    vf.add_argument("--timing", action="store_true", help="Keep elapsed_ms in the report file.")

    tb = sub.add_parser("table", help="F(A, B; λ) for every λ ∈ k.")
    _add_field_args(tb)
    tb.add_argument("--num", default="")
    tb.add_argument("--den", default="")
    tb.add_argument("--rfs", action="store_true")
    tb.add_argument("--out", type=Path, help="Write the table instead of printing it.")

    return parser.parse_args(argv)


def resolve_field(args: argparse.Namespace) -> FiniteField:
    if args.q is not None:
        return field_from_q(args.q)
    if args.p is None:
        raise FiniteHgfError("A field needs --q or --p.")
    modulus = None
    if args.modulus:
        modulus = [int(c) for c in args.modulus.split(",")]
    return construct_field(args.p, args.f, modulus)


def _emit_value(value: CycloNum, fmt: str) -> None:
    if fmt == OutputFormat.TEXT:
        print(str(value))
        print(f"approx (display only): {value.approx()}")
    elif fmt == OutputFormat.CSV:
        print(pd.DataFrame([{"value": UtilsJson.to_json_string(value.to_json())}])
              .to_csv(index=False), end="")
    else:
        print(UtilsJson.to_json_string(value.to_json()))


def cmd_field_info(args: argparse.Namespace) -> int:
    descriptor = resolve_field(args).descriptor()
    if args.format == OutputFormat.TEXT:
        for key, value in descriptor.items():
            print(f"{key}: {value}")
    elif args.format == OutputFormat.CSV:
        row = {k: UtilsJson.to_json_string(v) if isinstance(v, list) else v
               for k, v in descriptor.items()}
        print(pd.DataFrame([row]).to_csv(index=False), end="")
    else:
        print(UtilsJson.to_json_string(descriptor))
    return ExitCode.PASS


def _spec(args: argparse.Namespace, field: FiniteField) -> HgfSpec:
    psi = AddChar(field, args.psi_shift)
    num = parse_paramset(field, args.num)
    den = parse_paramset(field, args.den)
    if args.rfs:
        return HgfSpec.rfs(field, num, den, psi)
    return HgfSpec(num, den, psi)


def cmd_eval(args: argparse.Namespace) -> int:
    field = resolve_field(args)
    spec = _spec(args, field)
    _emit_value(hgf_eval(spec, field.parse_element(args.lam)), args.format)
    return ExitCode.PASS


def cmd_gauss(args: argparse.Namespace) -> int:
    field = resolve_field(args)
    chi = parse_char(field, args.chi)
    psi = AddChar(field, args.psi_shift)
    _emit_value(gauss0(chi, psi) if args.circled else gauss(chi, psi), args.format)
    return ExitCode.PASS


def cmd_jacobi(args: argparse.Namespace) -> int:
    field = resolve_field(args)
    _emit_value(jacobi(parse_char(field, args.chi), parse_char(field, args.chi2)), args.format)
    return ExitCode.PASS


def cmd_f4(args: argparse.Namespace) -> int:
    field = resolve_field(args)
    chars = [parse_char(field, getattr(args, name)) for name in ("alpha", "beta", "gamma", "gamma2")]
    value = appell_f4(*chars, field.parse_element(args.x), field.parse_element(args.y),
                      AddChar(field, args.psi_shift))
    _emit_value(value, args.format)
    return ExitCode.PASS


def cmd_table(args: argparse.Namespace) -> int:
    field = resolve_field(args)
    spec = _spec(args, field)
    values = hgf_table(spec)
    rows = [{"lambda": lam, "value": values[lam].to_json()} for lam in field.enumerate_elements()]
    rows.sort(key=lambda row: row["lambda"])

    if args.format == OutputFormat.CSV:
        flat = [{"lambda": row["lambda"], "value": UtilsJson.to_json_string(row["value"])}
                for row in rows]
        if args.out:
            UtilsPath.write_csv_file(args.out, flat, ["lambda", "value"])
            print(f"Wrote {len(flat)} rows to {args.out}")
        else:
            print(pd.DataFrame(flat, columns=["lambda", "value"]).to_csv(index=False), end="")
    elif args.format == OutputFormat.TEXT:
        lines = [f"{lam}\t{values[lam]}\t~{values[lam].approx()}"
                 for lam in sorted(field.enumerate_elements())]
        if args.out:
            UtilsPath.write_text_file(args.out, lines)
            print(f"Wrote {len(lines)} rows to {args.out}")
        else:
            print(f"# {spec} over {field}; approximations are display only")
            print("\n".join(lines))
    else:
        document = {"field": field.descriptor(), "spec": spec.to_dict(), "rows": rows}
        if args.out:
            UtilsJson.write_json_file(args.out, document)
            print(f"Wrote {len(rows)} rows to {args.out}")
        else:
            print(UtilsJson.to_json_string(document))
    return ExitCode.PASS


def _verify_config(args: argparse.Namespace) -> Dict[str, Any]:
    config = load_configuration(args.config_dir, args.profile or "default")
    overrides = {
        "fields": args.q,
        "ids": args.ids,
        "mode": args.mode,
        "sample_size": args.n,
        "seed": args.seed,
        "psi_shift": args.psi_shift,
    }
    config.update({k: v for k, v in overrides.items() if v is not None})
    if args.n is not None and args.mode is None:
        config["mode"] = VerifyMode.SAMPLE.value
    return config


def cmd_verify(args: argparse.Namespace) -> int:
    config = _verify_config(args)
    threads = resolve_threads(args.threads, config)
    reports = run_profile(config, threads)

    out = args.out or BASE_PATH / config["output_dir"] / config["report_name"]
    write_report(reports, out, timing=args.timing)
    print(f"Wrote {len(reports)} reports to {out}")
    if args.summary_csv:
        write_summary_csv(reports, args.summary_csv)
        print(f"Wrote summary to {args.summary_csv}")

    for report in reports:
        if report.reason:
            print(f"warning: {report.identity} over GF({report.field['q']}): {report.reason}",
                  file=sys.stderr)
    if args.format == OutputFormat.JSON:
        print(UtilsJson.to_json_string([report.to_dict(args.timing) for report in reports]))
    elif args.format == OutputFormat.CSV:
        print(summary_frame(reports).to_csv(index=False), end="")
    else:
        frame = summary_frame(reports)
        print(frame.to_string(index=False) if not frame.empty else "no reports")

    passed = suite_passed(reports)
    print("PASS" if passed else "FAIL")
    return ExitCode.PASS if passed else ExitCode.FAILURE


COMMANDS: Dict[str, Callable[[argparse.Namespace], int]] = {
    "field-info": cmd_field_info,
    "eval": cmd_eval,
    "gauss": cmd_gauss,
    "jacobi": cmd_jacobi,
    "f4": cmd_f4,
    "verify": cmd_verify,
    "table": cmd_table,
}


def main(argv: Optional[List[str]] = None) -> int:
    """
    Parses arguments, runs one subcommand and returns its exit code.
    """
    try:
        args = setup_args(argv)
    except SystemExit as e:
        return ExitCode.PASS if e.code == 0 else ExitCode.USAGE
    logging.basicConfig(level=getattr(logging, args.log_level),
                        format="%(asctime)s %(levelname)s %(name)s: %(message)s")
    try:
        return int(COMMANDS[args.command](args))
    except (FiniteHgfError, ValueError, FileNotFoundError) as e:
        print(f"error: {e}", file=sys.stderr)
        return ExitCode.USAGE


if __name__ == "__main__":
    sys.exit(main())

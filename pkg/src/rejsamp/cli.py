"""Command-line front end.

Subcommands: sample, simulate, kat generate|verify, fom, params.

Exit codes are a stable contract: 0 success, 2 usage or malformed input,
3 unsupported security level, 4 memory capacity, 5 self-check or KAT
mismatch. Every command is deterministic given its full flag set; the
seed is always an explicit argument.

Binary vector artifacts use the packed 64-bit-word convention (element 0
in the most significant byte of word 0, words serialized big-endian), so
the file bytes are the elements in order, zero-padded to a multiple of 8.
"""

import argparse
import json
import sys

from . import aesprg, fom, hwsim, kat
from .params import address_counts, builtin_params, level_from_number
from .sampler import FieldVector, rej_samp_prg, rejection_stats

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_UNSUPPORTED_LEVEL = 3
EXIT_CAPACITY = 4
EXIT_MISMATCH = 5


def _seed_arg(s: str) -> bytes:
    try:
        b = bytes.fromhex(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{s!r} is not hex")
    if len(b) != aesprg.KEY_BYTES:
        raise argparse.ArgumentTypeError("seed must be exactly 32 hex digits")
    return b


def _iv_arg(s: str) -> bytes:
    try:
        b = bytes.fromhex(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{s!r} is not hex")
    if len(b) != aesprg.IV_BYTES:
        raise argparse.ArgumentTypeError("iv must be exactly 4 hex digits")
    return b


def _write_vector(vec: FieldVector, path: str, fmt: str):
    if fmt == "bin":
        with open(path, "wb") as f:
            f.write(vec.to_packed_bytes())
    elif fmt == "csv":
        with open(path, "w") as f:
            f.write(vec.to_csv())
    else:
        with open(path, "w") as f:
            json.dump(list(vec.elems), f)
            f.write("\n")


def _cmd_params(args) -> int:
    levels = [args.level] if args.level else [1, 3, 5]
    out = {}
    for n in levels:
        p = builtin_params(level_from_number(n))
        d = p.to_dict()
        d["tau_addrs"], d["out_addrs"] = address_counts(p)
        d["required_mem_words"] = p.required_mem_words
        out[p.sec_level.value] = d
    text = json.dumps(out if len(levels) > 1 else out[next(iter(out))],
                      indent=2) + "\n"
    if args.params_out:
        with open(args.params_out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_sample(args) -> int:
    p = builtin_params(level_from_number(args.level))
    raw = aesprg.keystream(args.seed, args.iv, p.tau)
    vec = rej_samp_prg(args.seed, args.iv, p)
    stats = rejection_stats(raw, p.tau, p.n_prime, p.q)
    print(f"elements: {len(vec)} (q={p.q})")
    print(f"stream bytes: {stats.tau}, masked to q: {stats.masked_to_q} "
          f"(rate {stats.rejection_rate:.5f}), replaced from tail: "
          f"{stats.replaced}, zero-filled: {stats.zero_filled}")
    if args.out:
        _write_vector(vec, args.out, args.format)
        print(f"wrote {args.format} artifact to {args.out}")
    return EXIT_OK


def _cmd_simulate(args) -> int:
    if args.program:
        with open(args.program) as f:
            words = hwsim.parse_program(f.read())
        level = hwsim.decode(next(
            w for w in words
            if hwsim.decode(w).op != hwsim.Opcode.NOP)).security_level()
    else:
        if args.level is None:
            print("simulate: --level is required without --program",
                  file=sys.stderr)
            return EXIT_USAGE
        level = level_from_number(args.level)
        words = hwsim.default_program(level)
    p = builtin_params(level)
    result = hwsim.run_program(words, args.seed, args.iv,
                               mem_depth=args.mem_depth, freq_hz=args.freq)
    sys.stdout.write(json.dumps(result.report.to_json_dict()) + "\n")
    if args.trace:
        with open(args.trace, "w") as f:
            f.write("cycle,unit,event,addr,data\n")
            for cycle, unit, event, addr, data in result.trace_rows():
                addr_s = "" if addr is None else str(addr)
                data_s = "" if data is None else f"{data:016x}"
                f.write(f"{cycle},{unit},{event},{addr_s},{data_s}\n")
    if args.out:
        _write_vector(result.vector, args.out, args.format)
    if not args.no_self_check:
        golden = rej_samp_prg(args.seed, args.iv, p)
        if result.vector.elems != golden.elems:
            print("self-check FAILED: simulator output differs from the "
                  "golden model", file=sys.stderr)
            return EXIT_MISMATCH
        print("self-check: simulator output matches the golden model",
              file=sys.stderr)
    return EXIT_OK


def _cmd_kat(args) -> int:
    if args.kat_mode == "generate":
        text = kat.generate_kat(args.seed, args.iv, args.level,
                                count=args.count)
        if args.out:
            with open(args.out, "w") as f:
                f.write(text)
        else:
            sys.stdout.write(text)
        return EXIT_OK
    with open(args.path) as f:
        records = kat.parse_kat(f.read())
    mismatch = kat.verify_kat(records)
    if mismatch is not None:
        print(mismatch[1], file=sys.stderr)
        return EXIT_MISMATCH
    print(f"verified {len(records)} record(s)")
    return EXIT_OK


def _cmd_fom(args) -> int:
    if args.metrics:
        with open(args.metrics) as f:
            doc = json.load(f)
    else:
        doc = fom.REFERENCE_INPUTS
    if not isinstance(doc, dict) or "platforms" not in doc:
        raise ValueError('metrics file must be an object with a "platforms" '
                         'list')
    metrics = [fom.metrics_from_dict(e) for e in doc["platforms"]]
    report = fom.fom_report(metrics,
                            scale_to_nm=doc.get("scale_to_nm"),
                            lut_area_um2=doc.get("lut_area_um2", 1.0))
    for warning in report["warnings"]:
        print(f"warning: {warning}", file=sys.stderr)
    text = (fom.report_to_csv(report) if args.format == "csv"
            else json.dumps(report, indent=2) + "\n")
    if args.out:
        with open(args.out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="rejsamp",
        description="Bit-exact model of an AES-CTR rejection-sampling "
                    "coprocessor for QR-UOV.",
        epilog="Binary artifacts pack 8 one-byte elements per 64-bit word, "
               "element 0 in the most significant byte, words serialized "
               "big-endian: the file holds the elements in order, "
               "zero-padded to a multiple of 8 bytes. Exit codes: 0 ok, "
               "2 usage/malformed input, 3 unsupported level, 4 memory "
               "capacity, 5 self-check or KAT mismatch.")
    sub = ap.add_subparsers(dest="command", required=True)

    pp = sub.add_parser("params", help="emit parameter sets as JSON")
    pp.add_argument("--level", type=int, choices=[1, 3, 5])
    pp.add_argument("--params-out", metavar="PATH")
    pp.set_defaults(func=_cmd_params)

    ps = sub.add_parser("sample", help="run the golden sampler")
    ps.add_argument("--level", type=int, choices=[1, 3, 5], required=True)
    ps.add_argument("--seed", type=_seed_arg, required=True,
                    help="32 hex digits")
    ps.add_argument("--iv", type=_iv_arg, required=True, help="4 hex digits")
    ps.add_argument("--out", metavar="PATH")
    ps.add_argument("--format", choices=["bin", "csv", "json"], default="bin")
    ps.set_defaults(func=_cmd_sample)

    pm = sub.add_parser("simulate", help="run the cycle-level simulator")
    pm.add_argument("--level", type=int, choices=[1, 3, 5])
    pm.add_argument("--seed", type=_seed_arg, required=True)
    pm.add_argument("--iv", type=_iv_arg, required=True)
    pm.add_argument("--freq", type=float, default=222e6,
                    help="clock frequency in Hz (default 222e6)")
    pm.add_argument("--mem-depth", type=int, default=1024)
    pm.add_argument("--trace", metavar="PATH", help="write a CSV access trace")
    pm.add_argument("--out", metavar="PATH")
    pm.add_argument("--format", choices=["bin", "csv", "json"], default="bin")
    pm.add_argument("--program", metavar="PATH",
                    help="hex instruction file overriding the default program")
    pm.add_argument("--no-self-check", action="store_true",
                    help="skip the golden-model comparison")
    pm.set_defaults(func=_cmd_simulate)

    pk = sub.add_parser("kat", help="known-answer-test files")
    ksub = pk.add_subparsers(dest="kat_mode", required=True)
    kg = ksub.add_parser("generate")
    kg.add_argument("--level", type=int, choices=[1, 3, 5], required=True)
    kg.add_argument("--seed", type=_seed_arg, required=True)
    kg.add_argument("--iv", type=_iv_arg, required=True)
    kg.add_argument("--count", type=int, default=1)
    kg.add_argument("--out", metavar="PATH")
    kg.set_defaults(func=_cmd_kat)
    kv = ksub.add_parser("verify")
    kv.add_argument("path", metavar="PATH")
    kv.set_defaults(func=_cmd_kat)

    pf = sub.add_parser("fom", help="figures-of-merit report")
    pf.add_argument("metrics", nargs="?", metavar="METRICS.json",
                    help="platform metrics file (built-in reference inputs "
                         "when omitted)")
    pf.add_argument("--format", choices=["json", "csv"], default="json")
    pf.add_argument("--out", metavar="PATH")
    pf.set_defaults(func=_cmd_fom)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except hwsim.UnsupportedLevelError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_UNSUPPORTED_LEVEL
    except hwsim.CapacityError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAPACITY
    except (kat.KatError, ValueError, json.JSONDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

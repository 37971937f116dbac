from __future__ import annotations

import argparse
import dataclasses
import json
import multiprocessing
import sys
from typing import Optional, Sequence

from loguru import logger

from igr import complexes, fullness
from igr.bbw import bbw_even
from igr.cli.file_wrappers import input_file, output_file
from igr.cli.verify import verify_paper
from igr.collection import CollectionSpec
from igr.errors import IgrError, PreconditionError
from igr.ext import (
    check_block_semiorthogonality,
    check_exceptional,
    check_lefschetz_basis,
    ext_groups,
    ext_over_twists,
)
from igr.invariants import SpaceInvariants
from igr.oddcoh import cohomology, koszul_page
from igr.parse import parse_range
from igr.schur import lr, pieri_oracle
from igr.spaces import EvenSpace, OddSpace, Space, parse_space
from igr.status import Status
from igr.weights import TwistedBundle


@dataclasses.dataclass
class RunConfig:
    command: str
    space: Space
    json: bool
    threads: int
    twists: range
    verbose: bool

    @staticmethod
    def from_args(args: argparse.Namespace) -> RunConfig:
        threads = args.threads
        if threads is None:
            threads = multiprocessing.cpu_count()
            logger.info("using threads=cpu_count() ({})", threads)
        assert threads > 0, f"Can't use {threads} threads!"
        return RunConfig(
            command=args.command,
            space=parse_space(args.space),
            json=args.json,
            threads=threads,
            twists=parse_range(getattr(args, "twists", None) or "0"),
            verbose=args.verbose > 0,
        )


def _setup_logging(verbose: int, quiet: bool) -> None:
    level = "WARNING" if quiet else "DEBUG" if verbose else "INFO"
    logger.remove()
    logger.add(sys.stderr, level=level, format="{level: <8} {message}")


def _print_json(data) -> None:
    print(json.dumps(data, indent=2))


def _object(text: str):
    """A named complex (E, F, H) or a bundle literal."""
    if text.upper() in complexes.NAMED_OBJECTS:
        return complexes.NAMED_OBJECTS[text.upper()]()
    return TwistedBundle.parse(text)


def cmd_decompose(config: RunConfig, args) -> int:
    first, second = TwistedBundle.parse(args.first), TwistedBundle.parse(args.second)
    result = lr(first.absorbed, second.absorbed)
    status = Status.PASS
    if args.check and pieri_oracle(first.absorbed, second.absorbed) != result:
        logger.warning("Littlewood-Richardson and Pieri expansions disagree")
        status = Status.FAIL
    if config.json:
        _print_json({"left": first.text(), "right": second.text(), "terms": result.to_json()})
    else:
        result.serialize(sys.stdout)
    return status.exit_code


def cmd_cohomology(config: RunConfig, args) -> int:
    bundle = TwistedBundle.parse(args.bundle)
    if isinstance(config.space, EvenSpace):
        result = bbw_even(config.space, bundle)
        if config.json:
            _print_json({"space": str(config.space), "bundle": bundle.text(), "result": result.to_json()})
        else:
            print(f"H*({config.space}, {bundle}) = {result}")
        return Status.PASS.exit_code

    verdict = cohomology(config.space, bundle)
    page = koszul_page(config.space, bundle) if args.page else None
    if config.json:
        data = {"space": str(config.space), "bundle": bundle.text(), "result": verdict.to_json()}
        if page is not None:
            data["page"] = page.rows()
        _print_json(data)
    else:
        print(f"H*({config.space}, {bundle}) = {verdict}")
        if page is not None:
            print(page)
    return Status.PASS.exit_code if verdict.determinate else Status.INDETERMINATE.exit_code


def cmd_ext(config: RunConfig, args) -> int:
    first, second = TwistedBundle.parse(args.first), TwistedBundle.parse(args.second)
    results = ext_over_twists(first, second, config.twists, config.space)
    status = Status.worst(Status.PASS if v.determinate else Status.INDETERMINATE for _, v in results)
    if config.json:
        _print_json(
            [{"twist": t, "left": first.twisted(t).text(), "right": second.text(), "result": v.to_json()} for t, v in results]
        )
    else:
        for t, verdict in results:
            print(f"Ext({first.twisted(t)}, {second}) = {verdict}")
    return status.exit_code


def cmd_staircase(config: RunConfig, args) -> int:
    if args.truncate is not None:
        c = complexes.NAMED_OBJECTS[args.truncate.upper()]()
    else:
        a, middle, minus_b = TwistedBundle.parse(args.weight).absorbed.entries
        if middle != 0:
            raise PreconditionError(f"staircase weights look like U[a,0,-b], got {args.weight}")
        c = complexes.staircase(a, -minus_b, args.m)
    if config.json:
        _print_json(dict(c.to_json(), rank=c.rank()))
    else:
        c.serialize(sys.stdout)
        print(f"rank {c.rank()}")
    return Status.PASS.exit_code


def cmd_pairing(config: RunConfig, args) -> int:
    left = complexes.as_complex(_object(args.left))
    right = complexes.as_complex(_object(args.right))
    chi = complexes.euler_pairing(left, right, config.space, config.threads)
    table = complexes.ext_e1_table(left, right, config.space, config.threads)
    if config.json:
        _print_json({"euler": chi, "table": table.to_json()})
    else:
        print(f"chi({left.name}, {right.name}) = {chi}")
        print(table)
    return Status.PASS.exit_code if table.verdict().determinate else Status.INDETERMINATE.exit_code


def _collection(args) -> CollectionSpec:
    if args.file is not None:
        with input_file(args.file) as f:
            return CollectionSpec.parse(f, name=args.file)
    if args.preset.upper() == "B":
        return complexes.collection_B()
    return CollectionSpec.preset(args.preset)


def cmd_check_collection(config: RunConfig, args) -> int:
    collection = _collection(args)
    ext = complexes.ext_objects if collection.name == "B" else ext_groups
    index = args.index if args.index is not None else config.space.index
    if args.mode == "lefschetz":
        report = check_lefschetz_basis(collection, index, config.space, config.threads, ext)
    elif args.mode == "exceptional":
        report = check_exceptional(collection, config.space, config.threads, ext)
    else:
        report = check_block_semiorthogonality(collection, index, config.space, config.threads, ext)
    if config.json:
        _print_json(report.to_json())
    else:
        report.serialize(sys.stdout, config.verbose)
    return report.status.exit_code


def cmd_fullness(config: RunConfig, args) -> int:
    if not isinstance(config.space, OddSpace) or config.space.k != 3:
        raise PreconditionError(f"the closure engine works on IGr(3, 2n+1), got {config.space}")
    n = config.space.n
    window = fullness.default_window(n)
    if args.mode == "replay":
        if n != 4:
            raise PreconditionError("the scripted schedule is written for igr:3:9")
        report = fullness.replay_paper_steps(n)
        state, ok = report.state, report.ok
    else:
        seed = fullness.seed_from_collection(CollectionSpec.preset(args.seed), window)
        state = fullness.saturate(seed, n, window)
        ok, report = fullness.final_check(state), None

    if args.log is not None:
        with output_file(args.log) as f:
            state.serialize_log(f)
    if args.diagram is not None:
        with output_file(args.diagram) as f:
            if args.diagram.endswith(".svg"):
                f.write(str(state.visualize_as_svg()))
            else:
                f.write(state.visualize_as_text())

    if config.json:
        data = report.to_json() if report is not None else {"full": ok, "bundles": len(state), "steps": len(state.log)}
        _print_json(data)
    elif report is not None:
        report.serialize(sys.stdout)
    else:
        print(f"{len(state)} bundles after {len(state.log)} steps; full: {ok}")
    return Status.PASS.exit_code if ok else Status.FAIL.exit_code


def cmd_k0(config: RunConfig, args) -> int:
    inv = SpaceInvariants.for_space(config.space)
    if config.json:
        _print_json(inv.to_json())
    else:
        inv.serialize(sys.stdout)
    return Status.PASS.exit_code


def cmd_verify_paper(config: RunConfig, args) -> int:
    if config.space != OddSpace.IGR_3_9:
        raise PreconditionError("verify-paper runs on igr:3:9")
    report = verify_paper(config.threads, args.basis)
    if config.json:
        _print_json(report.to_json())
    else:
        report.serialize(sys.stdout)
    return report.status.exit_code


COMMANDS = {
    "decompose": cmd_decompose,
    "cohomology": cmd_cohomology,
    "ext": cmd_ext,
    "staircase": cmd_staircase,
    "pairing": cmd_pairing,
    "check-collection": cmd_check_collection,
    "fullness": cmd_fullness,
    "k0": cmd_k0,
    "verify-paper": cmd_verify_paper,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--space", type=str, default="igr:3:9", help="The space, as igr:k:m. Default: igr:3:9.")
    common.add_argument("--json", action="store_true", help="Print machine-readable output.")
    common.add_argument("--threads", type=int, default=None,
                        help="Number of worker threads. Default: number of CPU cores.")
    common.add_argument("-v", "--verbose", action="count", default=0, help="Log debug messages.")
    common.add_argument("-q", "--quiet", action="store_true", help="Log warnings only.")

    parser = argparse.ArgumentParser(
        prog="igr", description="Cohomology, Ext-groups and fullness checks on isotropic Grassmannians."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", parents=[common], help="Decompose a tensor product of Schur bundles.")
    p.add_argument("first", type=str)
    p.add_argument("second", type=str)
    p.add_argument("--check", action="store_true", help="Compare against the iterated Pieri expansion.")

    p = sub.add_parser("cohomology", parents=[common], help="Cohomology of a twisted Schur bundle.")
    p.add_argument("bundle", type=str)
    p.add_argument("--page", action="store_true", help="Also print the first Koszul page; rows {p,q,rep,mult} with --json.")

    p = sub.add_parser("ext", parents=[common], help="Ext(first(t), second) for a range of twists.")
    p.add_argument("first", type=str)
    p.add_argument("second", type=str)
    p.add_argument("--twists", type=str, default="0", help="Twists as a..b or a single integer.")

    p = sub.add_parser("staircase", parents=[common], help="Staircase complex of U[a,0,-b] on Gr(3,m).")
    p.add_argument("--m", type=int, default=9)
    p.add_argument("--weight", type=str, default="U[3,0,0]")
    p.add_argument("--truncate", type=str, choices=["E", "F", "H"], default=None,
                   help="Print the named truncation instead.")

    p = sub.add_parser("pairing", parents=[common], help="Euler pairing and Ext page between complexes.")
    p.add_argument("--left", type=str, required=True, help="E, F, H or a bundle literal.")
    p.add_argument("--right", type=str, required=True, help="E, F, H or a bundle literal.")

    p = sub.add_parser("check-collection", parents=[common], help="Check a collection of bundles.")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--preset", type=str, help="B, B1, B2, B1B2, S1, S2 or S.")
    source.add_argument("--file", type=str, help="One bundle literal per line. Use - for stdin.")
    p.add_argument("--index", type=int, default=None, help="Number of twists. Default: the Fano index.")
    p.add_argument("--mode", choices=["lefschetz", "exceptional", "semiorthogonal"], default="lefschetz")

    p = sub.add_parser("fullness", parents=[common], help="Run the closure engine.")
    p.add_argument("--mode", choices=["replay", "saturate"], default="saturate")
    p.add_argument("--seed", type=str, default="B1B2", help="Preset whose twists 0..2n-2 seed the closure.")
    p.add_argument("--log", type=str, default=None, help="Write the step log as JSON lines.")
    p.add_argument("--diagram", type=str, default=None, help="Write a diagram; .svg for SVG, else text.")

    sub.add_parser("k0", parents=[common], help="Dimension, index and rank of K0.")

    p = sub.add_parser("verify-paper", parents=[common], help="Run every check of the IGr(3,9) theorem.")
    p.add_argument("--basis", type=str, default="default", help="Use B1B2 to check the union as a basis.")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    _setup_logging(args.verbose, args.quiet)
    try:
        config = RunConfig.from_args(args)
        return COMMANDS[args.command](config, args)
    except IgrError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


def cli():
    sys.exit(main())

"""Command-line interface.

Exit codes: 0 when a property holds or a claim is verified, 1 when it fails
(or a harness finds a violation), 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .exactla import DEFAULT_PRIME, is_prime
from .fixtures import FIXTURES, IDEAL_FIXTURES, ideal_fixture, load_fixture
from .geometry import (
    ConstructionError,
    GenericityError,
    PointSet,
    all_but_one_configuration,
    ideal_dim,
    reduce_points,
)
from .groebner import ArtinianAlgebra, NotArtinianError, buchberger
from .invariants import betti_table, detect_koszul_tails
from .io import InputError, dump, ideal_to_dict, load, points_to_dict
from .lefschetz import DEFAULT_TRIALS, TheoremViolation, slp, verify_example2, verify_theorem1, verify_theorem2, wlp

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


@dataclass
class CommandConfig:
    subcommand: str
    input: str | None = None
    fixture: str | None = None
    output: str | None = None
    field: int | None = None
    seed: int = 0
    trials: int = DEFAULT_TRIALS
    format: str = "table"
    target: str | None = None
    n: int | None = None
    d: int | None = None

    def __post_init__(self) -> None:
        if self.field is not None and not is_prime(self.field):
            raise InputError(f"--field {self.field} is not prime")
        if self.seed < 0 or self.trials < 1:
            raise InputError("--seed must be non-negative and --trials positive")

    @property
    def modulus(self) -> int:
        return DEFAULT_PRIME if self.field is None else self.field


class _Input:
    """A loaded input: either points or an ideal, with a printable name."""

    def __init__(self, cfg: CommandConfig):
        if (cfg.input is None) == (cfg.fixture is None):
            raise InputError("give exactly one of --input PATH or --fixture NAME")
        self.points: PointSet | None = None
        self.names: list[str] | None = None
        self.gens = None
        if cfg.fixture is not None:
            if cfg.fixture not in FIXTURES:
                raise InputError(f"unknown fixture {cfg.fixture!r}; choose from {', '.join(FIXTURES)}")
            self.source = f"fixture {cfg.fixture}"
            if cfg.fixture in IDEAL_FIXTURES:
                self.names, self.gens = ideal_fixture(cfg.fixture, cfg.modulus)
            else:
                self.points = load_fixture(cfg.fixture, cfg.modulus)
        else:
            self.source = cfg.input
            obj = load(cfg.input, cfg.field)
            if isinstance(obj, PointSet):
                self.points = obj
            else:
                self.names, self.gens = obj
        self.p = self.points.p if self.points is not None else (
            self.gens[0].p if self.gens else cfg.modulus)

    def algebra(self, seed: int) -> ArtinianAlgebra:
        if self.points is not None:
            try:
                return reduce_points(self.points, seed).algebra
            except GenericityError as exc:
                raise InputError(str(exc)) from exc
        gb = buchberger(self.gens, n_vars=len(self.names), p=self.p)
        try:
            return ArtinianAlgebra(gb)
        except NotArtinianError as exc:
            raise InputError(f"{self.source}: quotient is not Artinian; "
                             f"no power of {self.names[exc.variable]} lies in the ideal") from exc


def _header(cfg: CommandConfig, inp: _Input) -> str:
    return f"-- {cfg.subcommand} {inp.source} field={inp.p} seed={cfg.seed}"


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _emit_json(obj: dict) -> None:
    _emit(json.dumps(obj, sort_keys=True))


def cmd_betti(cfg: CommandConfig) -> int:
    inp = _Input(cfg)
    A = inp.algebra(cfg.seed)
    B = betti_table(A)
    if cfg.format == "structured":
        _emit_json({"source": inp.source, "field": inp.p, "seed": cfg.seed, "n_vars": B.n_vars,
                    "betti": [list(t) for t in B.triples()]})
    else:
        _emit(_header(cfg, inp) + "\n" + B.render())
    return EXIT_OK


def cmd_hilbert(cfg: CommandConfig) -> int:
    inp = _Input(cfg)
    A = inp.algebra(cfg.seed)
    if cfg.format == "structured":
        _emit_json({"source": inp.source, "field": inp.p, "seed": cfg.seed,
                    "n_vars": A.n_vars, "h_vector": list(A.h_vector)})
    else:
        _emit(_header(cfg, inp) + "\n" + "h-vector: " + " ".join(map(str, A.h_vector)))
    return EXIT_OK


def _lefschetz(cfg: CommandConfig, which) -> int:
    inp = _Input(cfg)
    A = inp.algebra(cfg.seed)
    rep = which(A, cfg.trials, cfg.seed)
    if cfg.format == "structured":
        _emit_json({
            "source": inp.source, "field": inp.p, "seed": cfg.seed, "trials": cfg.trials,
            "property": rep.property, "verdict": rep.verdict, "h_vector": list(A.h_vector),
            "maps": [{"source_degree": r.source_degree, "power": r.power, "source_dim": r.source_dim,
                      "target_dim": r.target_dim, "rank": r.rank, "full_rank": r.full_rank,
                      "kind": r.kind} for r in rep.records],
        })
    else:
        _emit(_header(cfg, inp) + f"\nh-vector: {list(A.h_vector)}\n" + rep.render())
    return EXIT_OK if rep.holds else EXIT_FAIL


def cmd_wlp(cfg: CommandConfig) -> int:
    return _lefschetz(cfg, wlp)


def cmd_slp(cfg: CommandConfig) -> int:
    return _lefschetz(cfg, slp)


def cmd_tail(cfg: CommandConfig) -> int:
    inp = _Input(cfg)
    A = inp.algebra(cfg.seed)
    B = betti_table(A)
    report = detect_koszul_tails(B)
    if cfg.format == "structured":
        _emit_json({"source": inp.source, "field": inp.p, "seed": cfg.seed, "n_vars": B.n_vars,
                    "tails": [list(t) for t in report.tails], "maximal": report.maximal})
    else:
        _emit(_header(cfg, inp) + "\n" + B.render() + "\nKoszul tails: " + report.describe())
    return EXIT_OK


def _need_nd(cfg: CommandConfig) -> tuple[int, int]:
    if cfg.n is None or cfg.d is None:
        raise InputError("--n and --d are required")
    if cfg.n < 3:
        raise InputError("--n must be at least 3: with two variables every Artinian quotient has WLP")
    if cfg.d < 1:
        raise InputError("--d must be at least 1")
    return cfg.n, cfg.d


def cmd_construct(cfg: CommandConfig) -> int:
    n, d = _need_nd(cfg)
    if cfg.output is None:
        raise InputError("--output PATH is required")
    try:
        c = all_but_one_configuration(n, d, cfg.seed, cfg.modulus)
    except ConstructionError as exc:
        sys.stderr.write(f"construction failed: {exc}\n")
        return EXIT_FAIL
    Path(cfg.output).write_text(dump(points_to_dict(c.points)))
    X = c.points
    _emit("\n".join([
        f"-- construct n={n} d={d} field={X.p} seed={cfg.seed}",
        f"f = {c.hypersurface}",
        f"points: {len(c.on_hypersurface)} fixing f + {len(c.off)} off V(f) + {len(c.extra)} extra on V(f) = {len(X)}",
        f"dim (I_X)_{d} = {ideal_dim(X, d)}",
        f"dim (I_X)_{d + 1} = {ideal_dim(X, d + 1)}",
        f"wrote {cfg.output}",
    ]))
    return EXIT_OK


def cmd_verify(cfg: CommandConfig) -> int:
    try:
        if cfg.target == "thm1":
            n, d = _need_nd(cfg)
            _emit(verify_theorem1(n, d, cfg.seed, cfg.trials, p=cfg.modulus).render())
            return EXIT_OK
        if cfg.target == "thm2":
            inp = _Input(cfg)
            A = inp.algebra(cfg.seed)
            if A.n_vars < 3:
                raise InputError("thm2 needs an algebra in at least 3 variables")
            _emit(_header(cfg, inp) + "\n" + verify_theorem2(A, cfg.trials, cfg.seed).render())
            return EXIT_OK
        if cfg.target == "example2":
            rec = verify_example2(cfg.seed, cfg.trials, p=cfg.modulus)
            _emit(rec.render())
            return EXIT_OK if rec.matches else EXIT_FAIL
    except (TheoremViolation, ConstructionError) as exc:
        sys.stderr.write(f"violation: {exc}\n")
        return EXIT_FAIL
    raise InputError(f"unknown verification target {cfg.target!r}")


def cmd_fixture(cfg: CommandConfig) -> int:
    name = cfg.target
    if name not in FIXTURES:
        raise InputError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURES)}")
    if name in IDEAL_FIXTURES:
        text = dump(ideal_to_dict(*ideal_fixture(name, cfg.modulus)))
    else:
        text = dump(points_to_dict(load_fixture(name, cfg.modulus)))
    if cfg.output:
        Path(cfg.output).write_text(text)
    else:
        _emit(text)
    return EXIT_OK


COMMANDS = {
    "betti": cmd_betti, "hilbert": cmd_hilbert, "wlp": cmd_wlp, "slp": cmd_slp,
    "tail": cmd_tail, "construct": cmd_construct, "verify": cmd_verify, "fixture": cmd_fixture,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="point file or ideal file (JSON)")
    common.add_argument("--fixture", help=f"built-in input: {', '.join(FIXTURES)}")
    common.add_argument("--output", help="output path (construct, fixture)")
    common.add_argument("--field", type=int, help=f"prime modulus (default {DEFAULT_PRIME})")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    common.add_argument("--format", choices=("table", "structured"), default="table")

    parser = argparse.ArgumentParser(prog="koszultail", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True)
    for name in ("betti", "hilbert", "wlp", "slp", "tail"):
        sub.add_parser(name, parents=[common])
    construct = sub.add_parser("construct", parents=[common],
                               help="all-but-one-point configuration on a hypersurface")
    construct.add_argument("--n", type=int, required=True, help="ambient dimension")
    construct.add_argument("--d", type=int, required=True, help="hypersurface degree")
    verify = sub.add_parser("verify", parents=[common])
    verify.add_argument("target", choices=("thm1", "thm2", "example2"))
    verify.add_argument("--n", type=int)
    verify.add_argument("--d", type=int)
    fixture = sub.add_parser("fixture", parents=[common], help="write a built-in fixture as a file")
    fixture.add_argument("target", metavar="NAME")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = CommandConfig(**{k: v for k, v in vars(args).items()})
        return COMMANDS[cfg.subcommand](cfg)
    except InputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

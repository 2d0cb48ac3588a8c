"""``socle-lab`` command-line front end."""

from __future__ import annotations

import argparse
import sys
import warnings
from pathlib import Path

from .field import Field
from .finlen import DEFAULT_CAP, NotFiniteLengthError
from .groebner import Ideal, SaturationError, ideal_colon, ideal_dimension, normal_form, saturate
from .idealize import idealize_cyclic, index_shift_check
from .locoh import h0_module, h1_socdim
from .monomial_decomp import MonomialIdeal, irreducible_decomposition, verify_irredundant
from .poly import PolynomialParseError, order_from_name
from .ringspec import RingSpecError, parse_ring_spec
from . import experiments as ex
from .zerodim import colength, index_of_reducibility, socle_dimension

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _load(args):
    if not args.spec:
        raise UsageError("--spec is required for this command")
    return parse_ring_spec(Path(args.spec))


def _gens(spec, text: str | None, flag: str) -> list:
    """A named ideal of the ring-spec file, or a literal comma-separated generator list."""
    if text is None:
        raise UsageError(f"{flag} is required for this command")
    if text in spec.ideals:
        return spec.ideals[text]
    return spec.ring._flatten([text])


def _show_ideal(I: Ideal, order) -> str:
    return "\n".join(g.format(order) for g in I.groebner(order).elements) or "0"


def _emit(report: ex.ExperimentReport, args) -> int:
    sys.stdout.write(report.to_table())
    if args.report:
        Path(args.report).write_text(report.to_jsonl(), encoding="utf-8")
    return EXIT_FAIL if report.verdict == ex.FAIL else EXIT_OK


def cmd_gb(args):
    spec = _load(args)
    print(_show_ideal(spec.ring.ideal(*_gens(spec, args.ideal, "--ideal")), args.order))


def cmd_nf(args):
    spec = _load(args)
    if args.poly is None:
        raise UsageError("--poly is required")
    I = spec.ring.ideal(*_gens(spec, args.ideal, "--ideal"))
    print(normal_form(spec.ring.poly(args.poly), I.groebner(args.order)).format(args.order))


def cmd_colon(args):
    spec = _load(args)
    I = spec.ring.ideal(*_gens(spec, args.ideal, "--ideal"))
    J = spec.ring.ideal(*_gens(spec, args.by, "--by"))
    print(_show_ideal(ideal_colon(I, J), args.order))


def cmd_saturate(args):
    spec = _load(args)
    I = spec.ring.ideal(*_gens(spec, args.ideal, "--ideal"))
    J = spec.ring.ideal(*_gens(spec, args.by, "--by")) if args.by else spec.ring.max_ideal
    S, steps = saturate(I, J, cap=args.cap)
    print(_show_ideal(S, args.order))
    print(f"# stable after {steps} colon steps")


def cmd_dim(args):
    spec = _load(args)
    if args.ideal is None:
        print(spec.ring.dimension())
    else:
        print(ideal_dimension(spec.ring.ideal(*_gens(spec, args.ideal, "--ideal"))))


def cmd_colength(args):
    spec = _load(args)
    print(colength(spec.ring.ideal(*_gens(spec, args.ideal, "--ideal"))))


def cmd_socdim(args):
    spec = _load(args)
    print(socle_dimension(spec.ring.ideal(*_gens(spec, args.ideal, "--ideal")), method="both"))


def cmd_index(args):
    spec = _load(args)
    r = index_of_reducibility(_gens(spec, args.ideal, "--ideal"), spec.ring)
    print(f"index {r.index}  colength {r.colength}  parameter ideal {r.is_parameter}")


def cmd_h0(args):
    spec = _load(args)
    mod = h0_module(spec.ring, args.cap)
    print(f"length {mod.length}  socdim {mod.socle_dim}  annihilated by m^{mod.ann_power}")


def cmd_h1(args):
    spec = _load(args)
    gens = _gens(spec, args.ideal, "--ideal")
    if len(gens) != 2:
        raise UsageError("h1 needs a parameter pair (two generators)")
    try:
        print(f"socdim H^1 {h1_socdim(gens[0], gens[1], spec.ring, args.cap)}")
    except NotFiniteLengthError as e:
        print(f"H^1 {e}")


def cmd_idealize(args):
    spec = _load(args)
    J = _gens(spec, args.by, "--by")
    ide = idealize_cyclic(spec.ring, J)
    print(ide.result)
    if args.ideal is not None:
        r = index_shift_check(spec.ring, _gens(spec, args.ideal, "--ideal"), J, ide)
        print(f"index on A {r.idx_A}  index on M {r.idx_M}  shift by one {r.equal_plus_one}")
        return EXIT_OK if r.equal_plus_one else EXIT_FAIL


def cmd_decomp(args):
    spec = _load(args)
    I = MonomialIdeal.from_polys(_gens(spec, args.ideal, "--ideal"))
    comps = irreducible_decomposition(I)
    ring = spec.ring.ambient
    for c in comps:
        print("(" + ", ".join(str(ring.monomial(g)) for g in c.generators) + ")")
    ok = verify_irredundant(comps, I)
    print(f"# {len(comps)} components, irredundant {ok}")
    return EXIT_OK if ok else EXIT_FAIL


def _field(text: str) -> Field:
    if text in ("rational", "QQ"):
        return Field.rationals()
    try:
        return Field.prime(int(text))
    except ValueError as e:
        raise UsageError(f"bad --field {text!r}: {e}") from None


def cmd_reproduce_example(args):
    try:
        ns = [int(t) for t in args.n.split(",")] if "," in args.n or "-" not in args.n \
            else list(range(int(args.n.split("-")[0]), int(args.n.split("-")[1]) + 1))
    except ValueError:
        raise UsageError(f"bad --n {args.n!r}; use e.g. 3,4,5 or 3-5") from None
    return _emit(ex.reproduce_example(args.dim, ns, _field(args.field)), args)


def cmd_verify_dim1(args):
    spec = _load(args)
    return _emit(ex.verify_dim1(spec.ring, args.samples, args.seed, spec.digest), args)


def cmd_verify_dim2(args):
    spec = _load(args)
    return _emit(ex.verify_dim2(spec.ring, args.samples, args.seed, args.max_power,
                                args.cap, digest=spec.digest), args)


def cmd_sci_probe(args):
    spec = _load(args)
    return _emit(ex.sci_probe(spec.ring, args.max_power, args.samples, args.seed,
                              spec.digest), args)


COMMANDS = {
    "gb": (cmd_gb, "reduced Groebner basis of an ideal (relations included)"),
    "nf": (cmd_nf, "normal form of --poly modulo --ideal"),
    "colon": (cmd_colon, "colon ideal --ideal : --by"),
    "saturate": (cmd_saturate, "saturation of --ideal by --by (default: the maximal ideal)"),
    "dim": (cmd_dim, "Krull dimension of the ring, or of --ideal"),
    "colength": (cmd_colength, "colength of a zero-dimensional --ideal"),
    "socdim": (cmd_socdim, "socle dimension of the quotient by --ideal"),
    "index": (cmd_index, "index of reducibility of --ideal"),
    "h0": (cmd_h0, "length and socle of H^0 of the ring"),
    "h1": (cmd_h1, "socle dimension of H^1 from a parameter pair --ideal"),
    "idealize": (cmd_idealize, "idealization by R/--by; with --ideal, check the index shift"),
    "decomp": (cmd_decomp, "irreducible decomposition of a monomial --ideal"),
    "reproduce-example": (cmd_reproduce_example, "indices 2 and 3 on the idealization example"),
    "verify-dim1": (cmd_verify_dim1, "dimension-one certificate against sampled indices"),
    "verify-dim2": (cmd_verify_dim2, "dimension-two index formula at stabilization"),
    "sci-probe": (cmd_sci_probe, "search powers of m for irreducible parameter ideals"),
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="socle-lab", description="Socles and indices of reducibility.")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for name, (_, help_text) in COMMANDS.items():
        s = sub.add_parser(name, help=help_text)
        s.add_argument("--spec", help="ring-spec file")
        s.add_argument("--ideal", help="named ideal from the ring-spec file, or generators 'f, g, ...'")
        s.add_argument("--by", help="second ideal (colon, saturate, idealize)")
        s.add_argument("--poly", help="polynomial (nf)")
        s.add_argument("--order", default="grevlex", choices=["grevlex", "lex"])
        s.add_argument("--cap", type=int, default=DEFAULT_CAP, help="finite-length search cap")
        s.add_argument("--seed", type=int, default=0)
        s.add_argument("--samples", type=int, default=20)
        s.add_argument("--max-power", type=int, default=6)
        s.add_argument("--report", help="write line-delimited JSON records here")
        if name == "reproduce-example":
            s.add_argument("--dim", type=int, default=2)
            s.add_argument("--n", default="3,4,5", help="exponents: 3,4,5 or 3-5")
            s.add_argument("--field", default="32003", help="'rational' or a prime")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    args.order = order_from_name(args.order)
    warnings.simplefilter("always")
    try:
        code = COMMANDS[args.command][0](args)
    except (UsageError, RingSpecError, PolynomialParseError, KeyError, FileNotFoundError,
            ValueError, SaturationError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        print(f"socle-lab: error: {msg}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK if code is None else code


if __name__ == "__main__":
    sys.exit(main())

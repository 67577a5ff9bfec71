"""
Command-line front end.

Subcommands: fundamental, apply, check, qpoly, zpoly, sweep, rational.
Global flags (accepted before or after the subcommand): --format, --out,
--jobs, --log-level, --log-format. HIROTA_JOBS sets the default for --jobs.

Exit codes: 0 success (a nonexistence verdict from ``fundamental`` is a
success), 1 negative answer (nonzero residual, no object of that degree,
failed sweep), 2 usage or input errors.
"""

import argparse
import os
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from fractions import Fraction
from functools import partial
from typing import Dict, List, Optional

from .config import apply_config, cli_config, load_config
from .constants import EXIT_NEGATIVE, EXIT_OK, EXIT_USAGE, MIN_CERTIFIED_DEGREE
from .dop import apply_combination, apply_operator, kdvlike_operator, parse_operator
from .enums import OutputFormat, Verdict
from .errors import (ConfigError, HirotaError, InvalidParameterError, OutOfScopeError, ParseError,
                     PreconditionError, UnboundConstantError, UnknownVariableError)
from .fundsol import alignment, build_q, specialize
from .kdvlike import T
from .leading import Certificate, nonexistence_certificate, z_poly, z_recursive
from .logging_config import configure_logging, get_logger
from .persistence import load_poly, result_exists, save_result
from .render import (render_certificate, render_check, render_family, render_poly, render_rational,
                     render_sweep)
from .solutions import SolutionFamily, classify, log_derivative, verify_kdvlike

logger = get_logger(__name__)

_BINDING_RE = re.compile(r'^\s*([A-Za-z][A-Za-z0-9_]*)\s*=\s*(-?\d+(?:/\d+)?)\s*$')

USAGE_ERRORS = (ParseError, UnknownVariableError, PreconditionError, InvalidParameterError,
                UnboundConstantError, ConfigError, OutOfScopeError)


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=[f.value for f in OutputFormat], default=argparse.SUPPRESS,
                        help='Output format')
    common.add_argument('--out', default=argparse.SUPPRESS, help='Write output to PATH')
    common.add_argument('--jobs', type=int, default=argparse.SUPPRESS, help='Worker processes')
    common.add_argument('--log-level', choices=['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'],
                        default=argparse.SUPPRESS, help='Set the logging level')
    common.add_argument('--log-format', default=argparse.SUPPRESS, help='Set the logging format')
    return common


def build_parser() -> argparse.ArgumentParser:
    """Create the argument parser with all subcommands."""
    common = _common_options()
    parser = argparse.ArgumentParser(prog='hirota', parents=[common],
                                     description='Exact bilinear computations for the KdV-like equation')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('fundamental', parents=[common], help='Classify solutions of x-degree m')
    p.add_argument('-m', type=int, required=True, help='Spatial degree')
    p.add_argument('--constants', help='Bindings such as "c2=1,c0=-1/2"')

    p = sub.add_parser('apply', parents=[common], help='Apply a bilinear operator')
    p.add_argument('opspec', help='Operator, e.g. "D(3;x^1,t^1)"')
    p.add_argument('f', help='JSON polynomial file')
    p.add_argument('g', nargs='?', help='Second JSON polynomial file (defaults to f)')

    p = sub.add_parser('check', parents=[common], help='Residual of the bilinear equation')
    p.add_argument('f', help='JSON polynomial file')

    p = sub.add_parser('qpoly', parents=[common], help='Print Q_k')
    p.add_argument('-k', type=int, required=True)
    p.add_argument('--m', dest='m_value', type=int, help='Specialize at this degree')

    p = sub.add_parser('zpoly', parents=[common], help='Print z_q')
    p.add_argument('-q', type=int, required=True)
    p.add_argument('--recursive', action='store_true', help='Use the leading-term recursion')

    p = sub.add_parser('sweep', parents=[common], help='Nonexistence certificates over a range')
    p.add_argument('start', type=int)
    p.add_argument('stop', type=int, nargs='?', help='Last degree (defaults to the configured sweep_to)')
    p.add_argument('--direct', action='store_true', help='Recompute leading remainder coefficients')

    p = sub.add_parser('rational', parents=[common], help='Rational solution of degree m')
    p.add_argument('-m', type=int, required=True)

    return parser


def parse_bindings(text: Optional[str]) -> Dict[str, Fraction]:
    """
    Parse "c2=1,c0=-1/2" into a mapping.

    Raises:
        ParseError: On malformed items or repeated names.
    """
    bindings: Dict[str, Fraction] = {}
    if not text:
        return bindings
    for item in text.split(','):
        match = _BINDING_RE.match(item)
        if not match:
            raise ParseError(f"malformed constant binding {item.strip()!r}")
        name, value = match.group(1), match.group(2)
        if name in bindings:
            raise ParseError(f"constant {name} bound twice")
        try:
            bindings[name] = Fraction(value)
        except ZeroDivisionError:
            raise ParseError(f"zero denominator in binding {item.strip()!r}") from None
    return bindings


@contextmanager
def _output(path: Optional[str]):
    if path:
        with open(path, 'w') as f:
            yield f
    else:
        yield sys.stdout


def cmd_fundamental(args, cfg) -> int:
    bindings = parse_bindings(args.constants)
    result = classify(args.m)
    if isinstance(result, Certificate):
        if bindings:
            raise ParseError(f"no solution family of degree {args.m}, so no constants to bind")
        text = render_certificate(result, cfg.format)
    else:
        unknown = [n for n in bindings if n not in result.constants]
        if unknown:
            raise ParseError(f"no free constant named {', '.join(unknown)} at m={args.m}")
        if bindings:
            result = SolutionFamily(result.m, result.f.compose(bindings, strict=False), result.constraints,
                                    tuple(n for n in result.constants if n not in bindings))
        text = render_family(result, cfg.format)
    _emit(text, cfg, result)
    return EXIT_OK


def cmd_apply(args, cfg) -> int:
    op = parse_operator(args.opspec)
    f = load_poly(args.f)
    g = load_poly(args.g) if args.g else f
    value = apply_operator(op, f, g)
    _emit(render_poly(value, cfg.format), cfg, value)
    return EXIT_OK


def cmd_check(args, cfg) -> int:
    f = load_poly(args.f)
    residual = T(f)
    bilinear = apply_combination(kdvlike_operator(), f, f)
    _emit(render_check(residual, bilinear, cfg.format), cfg)
    return EXIT_OK if residual.is_zero() else EXIT_NEGATIVE


def cmd_qpoly(args, cfg) -> int:
    q = build_q(args.k)
    if args.m_value is None:
        value = q.value
    else:
        value = specialize(q, args.m_value, alignment(args.m_value, args.k))
    _emit(render_poly(value, cfg.format), cfg, value)
    return EXIT_OK


def cmd_zpoly(args, cfg) -> int:
    if args.q < 0:
        raise PreconditionError(f"q must be non-negative, got {args.q}")
    z = z_recursive(args.q) if args.recursive else z_poly(args.q)
    _emit(render_poly(z, cfg.format), cfg, z)
    return EXIT_OK


def run_sweep(start: int, stop: int, direct: bool, jobs: int) -> List[Certificate]:
    """Certificates for start..stop, in order of m."""
    if not MIN_CERTIFIED_DEGREE <= start <= stop:
        raise PreconditionError(f"sweep needs {MIN_CERTIFIED_DEGREE} <= start <= stop, got {start}..{stop}")
    task = partial(nonexistence_certificate, direct=direct)
    degrees = range(start, stop + 1)
    if jobs == 1:
        return list(map(task, degrees))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(task, degrees))


def cmd_sweep(args, cfg) -> int:
    import settings
    stop = settings.SWEEP_TO if args.stop is None else args.stop
    certs = run_sweep(args.start, stop, args.direct, cfg.jobs)
    _emit(render_sweep(certs, cfg.format), cfg)
    ok = all(c.verdict is Verdict.NOT_EXISTS for c in certs)
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_rational(args, cfg) -> int:
    result = classify(args.m)
    if isinstance(result, Certificate):
        print(f"no polynomial solution of degree {args.m}: "
              f"{result.witness.poly} = {result.witness.value} != 0", file=sys.stderr)
        return EXIT_NEGATIVE
    u = log_derivative(result.f)
    residual = verify_kdvlike(u)
    _emit(render_rational(u, residual, cfg.format), cfg)
    return EXIT_OK if residual.is_zero() else EXIT_NEGATIVE


def _emit(text: str, cfg, result=None) -> None:
    if result is not None and cfg.out and cfg.format is OutputFormat.JSON:
        save_dir, filename = os.path.split(cfg.out)
        if result_exists(save_dir, filename):
            logger.warning(f"overwriting {cfg.out}")
        save_result(result, save_dir, filename)
        return
    with _output(cfg.out) as stream:
        print(text, file=stream)


COMMANDS = {
    'fundamental': cmd_fundamental,
    'apply': cmd_apply,
    'check': cmd_check,
    'qpoly': cmd_qpoly,
    'zpoly': cmd_zpoly,
    'sweep': cmd_sweep,
    'rational': cmd_rational,
}


def main(argv=None, config_path='config/prefs.toml') -> int:
    """
    Run the command line.

    Args:
        argv (list, optional): Arguments without the program name. Defaults to sys.argv[1:].
        config_path (str): TOML configuration file.

    Returns:
        int: Exit code.
    """
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(argv)
    try:
        config = load_config(config_path, argv)
        apply_config(config)
        configure_logging(config['logging']['level'], config['logging']['format'],
                          config['logging'].get('date_format'))
        cfg = cli_config(config)
        logger.debug(f"running {args.command} with {cfg}")
        return COMMANDS[args.command](args, cfg)
    except USAGE_ERRORS as e:
        logger.debug("usage error", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        logger.debug("i/o error", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except HirotaError as e:
        logger.debug("computation failed", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_NEGATIVE

"""Text, JSON and LaTeX rendering of results."""

import json
from fractions import Fraction
from typing import Sequence

from .enums import OutputFormat
from .exactpoly import MultiPoly
from .leading import Certificate
from .persistence import convert_result_data, dumps
from .solutions import RationalSolution, SolutionFamily


def fraction_text(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}" if value.denominator != 1 else str(value.numerator)


def render_poly(p: MultiPoly, fmt: OutputFormat) -> str:
    if fmt is OutputFormat.JSON:
        return dumps(p)
    if fmt is OutputFormat.LATEX:
        return p.to_latex()
    return str(p)


def render_family(family: SolutionFamily, fmt: OutputFormat) -> str:
    if fmt is OutputFormat.JSON:
        return dumps(family)
    if fmt is OutputFormat.LATEX:
        return f"f(x,t)={family.f.to_latex()}"
    lines = [f"m = {family.m}", f"f = {family.f}"]
    lines.extend(f"constraint: {name} = {value}" for name, value in family.constraints)
    return '\n'.join(lines)


def render_certificate(cert: Certificate, fmt: OutputFormat) -> str:
    if fmt is OutputFormat.JSON:
        return dumps(cert)
    witness = cert.witness
    if fmt is OutputFormat.LATEX:
        return f"m={cert.m}:\\ \\text{{no solution}},\\ {witness.poly}={fraction_text(witness.value)}\\neq 0"
    line = f"m = {cert.m}: {cert.verdict.value} ({witness.poly} = {fraction_text(witness.value)})"
    if cert.leading:
        values = ', '.join(f"R_{k}: {fraction_text(v)}" for k, v in sorted(cert.leading.items()))
        line += f" leading [{values}]"
    return line


def render_rational(u: RationalSolution, residual: MultiPoly, fmt: OutputFormat) -> str:
    if fmt is OutputFormat.JSON:
        data = convert_result_data(u)
        data['residual'] = convert_result_data(residual)
        return json.dumps(data, sort_keys=True)
    if fmt is OutputFormat.LATEX:
        if u.is_zero():
            return "u(x,t)=0"
        return f"u(x,t)=\\frac{{{u.numerator.to_latex()}}}{{{u.denominator.to_latex()}}}"
    return f"u = ({u.numerator}) / ({u.denominator})\nresidual = {residual}"


def render_check(residual_t: MultiPoly, bilinear: MultiPoly, fmt: OutputFormat) -> str:
    if fmt is OutputFormat.JSON:
        return json.dumps({'T': convert_result_data(residual_t), 'bilinear': convert_result_data(bilinear),
                           'zero': residual_t.is_zero()}, sort_keys=True)
    if fmt is OutputFormat.LATEX:
        return f"Tf={residual_t.to_latex()},\\quad (D_{{3,x}}D_{{3,t}}+D_{{3,x}}^4)f\\cdot f={bilinear.to_latex()}"
    return f"T f = {residual_t}\nbilinear = {bilinear}"


def render_sweep(certs: Sequence[Certificate], fmt: OutputFormat) -> str:
    if fmt is OutputFormat.JSON:
        return json.dumps([convert_result_data(c) for c in certs], sort_keys=True)
    return '\n'.join(render_certificate(c, fmt) for c in certs)

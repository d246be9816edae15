"""Uniform front end over the three ways of computing coefficients."""

import enum
import math

from .clifford import RepTag
from .closed_form import ClosedFormInput, coeffs_rep_a, coeffs_rep_b, tr_2x2
from .matching import Model, resolve_rep, scatter
from .schrodinger import schrodinger_transfer_matrix


class Engine(enum.Enum):
    CLOSED_FORM = "closed"
    ORACLE = "oracle"
    SCHRODINGER = "schrodinger"


ALL_ENGINES = (Engine.CLOSED_FORM, Engine.ORACLE, Engine.SCHRODINGER)


def compute(scenario, engine, model=Model.FOUR_BY_FOUR, rep_tag=None):
    """Return ((T1, T2, R1, R2), cond) for one scenario.

    The Schrodinger engine is spin-blind: it reports T and R in the T1 / R1
    slots and NaN for T2 / R2. ``cond`` is NaN for engines without a linear
    solve.
    """
    engine = Engine(engine)
    model, tag = resolve_rep(model, rep_tag)
    nan = math.nan
    if engine is Engine.SCHRODINGER:
        T, R = schrodinger_transfer_matrix(scenario)
        return (T, nan, R, nan), nan
    if engine is Engine.ORACLE:
        coeffs, amps = scatter(scenario, model, tag)
        return coeffs.as_tuple(), amps.cond
    inp = ClosedFormInput.from_scenario(scenario)
    if tag is RepTag.TWO_BY_TWO:
        T, R = tr_2x2(inp)
        return (T, 0.0, R, 0.0), nan
    if tag is RepTag.FOUR_REP_A:
        return coeffs_rep_a(inp), nan
    return coeffs_rep_b(inp), nan

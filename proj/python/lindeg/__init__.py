"""Linear degenerations of partial flag varieties.

Rank tables are lists of rows: row a holds R(a, a), ..., R(a, n), the ranks of
the composite maps out of vertex a (R(a, a) is the dimension m). Decompositions
are dicts {(a, b): multiplicity} of interval modules U[a, b].
"""

import json

from ._lindeg import (
    GuardExceeded,
    NotFlat,
    NotIrreducible,
    NotRealizable,
    PreconditionError,
    ValidationError,
    __version__,
    count_points,
    decompose_from_ranks,
    degenerates_to,
    enumerate_orbits,
    euler_form,
    ext_dim,
    fixed_points,
    hasse_dot,
    hom_dim,
    is_catenoid,
    is_realizable,
    minimal_projective_resolution,
    ranks_from_decomposition,
    representative,
    run_verify,
    sigma_bijection_check,
    singular_census,
    singular_witness,
    strata_dot,
    well_behaved_rep,
)
from . import _lindeg


def classify(m, ranks, d):
    """Degeneration report for a rank table, as a dict."""
    return json.loads(_lindeg.classify_ranks_json(m, ranks, list(d)))


def classify_problem(problem):
    """Degeneration report for a problem file given as a dict or JSON text."""
    text = problem if isinstance(problem, str) else json.dumps(problem)
    return json.loads(_lindeg.classify_problem_json(text))


def singular_model_mh(m, d, h):
    return json.loads(_lindeg.singular_model_mh_json(m, list(d), h))


def singular_summary(m, ranks, d):
    return json.loads(_lindeg.singular_summary_json(m, ranks, list(d)))


def _problem_text(problem):
    return problem if isinstance(problem, str) else json.dumps(problem)


def points(problem):
    """Number of points of Gr_d(M) over the problem's prime field."""
    return count_points(_problem_text(problem))


def census(problem):
    """(total, singular) point counts over the problem's prime field."""
    return singular_census(_problem_text(problem))

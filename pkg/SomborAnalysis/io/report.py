"""
machine-readable reports

every JSON document is an envelope {"command": ..., "result": ...}
(schema in schema/report.schema.json); floats are rounded to 9 decimals so
identical runs give identical bytes. tables go through pandas.
"""

import json

import pandas as pd

from ..weights import edge_weight


DECIMALS = 9
FLOAT_FORMAT = "%.9f"


def _load_json(filename):
    with open(filename, 'r') as _f:
        _result = json.loads(_f.read())
    return _result


def _save_json(filename, var):
    with open(filename, 'w') as _f:
        _f.write(dumps(var))
    return True


def _rounded(var):
    if isinstance(var, float):
        return round(var, DECIMALS)
    if isinstance(var, dict):
        return {key: _rounded(value) for key, value in var.items()}
    if isinstance(var, (list, tuple)):
        return [_rounded(item) for item in var]
    return var


def envelope(command, result):
    return {"command": command, "result": _rounded(result)}


def dumps(var):
    return json.dumps(_rounded(var), indent=2) + "\n"


def to_csv(frame):
    return frame.to_csv(float_format=FLOAT_FORMAT, index=False)


## tables

def _sequence_text(D):
    return "-".join(str(d) for d in D) if len(D) else "K2"


def sweep_frame(result):
    '''
    one row per degree sequence: verified ones first, then the skipped ones.

    columns: degree_sequence, n, labeled_count, isomorphism_classes,
    greedy_value, oracle_min, status
    '''
    _rows = []
    for item in result.reports:
        _rows.append({
            "degree_sequence": _sequence_text(item.degree_sequence),
            "n": item.n,
            "labeled_count": item.labeled_count,
            "isomorphism_classes": item.isomorphism_classes,
            "greedy_value": item.greedy_value,
            "oracle_min": item.oracle_min,
            "status": "pass" if item.passed else "fail",
        })
    for D, count in result.skipped:
        _rows.append({
            "degree_sequence": _sequence_text(D),
            "n": D.total_vertices(),
            "labeled_count": count,
            "isomorphism_classes": None,
            "greedy_value": None,
            "oracle_min": None,
            "status": "skipped",
        })
    return pd.DataFrame(_rows, columns=["degree_sequence", "n", "labeled_count", "isomorphism_classes",
                                        "greedy_value", "oracle_min", "status"])


def report_frame(report):
    return pd.DataFrame([{
        "degree_sequence": _sequence_text(report.degree_sequence),
        "n": report.n,
        "labeled_count": report.labeled_count,
        "isomorphism_classes": report.isomorphism_classes,
        "minimizer_classes": report.minimizer_classes,
        "greedy_value": report.greedy_value,
        "oracle_min": report.oracle_min,
        "status": "pass" if report.passed else "fail",
    }])


def edge_frame(tree):
    deg = tree.degrees
    _rows = [{"u": u, "v": v, "d_u": deg[u], "d_v": deg[v],
              "weight": edge_weight(deg[u], deg[v])} for u, v in tree.edges]
    return pd.DataFrame(_rows, columns=["u", "v", "d_u", "d_v", "weight"])


def index_frame(values):
    return pd.DataFrame([{"index": name, "value": value} for name, value in values.items()],
                        columns=["index", "value"])


def trace_frame(trace):
    _rows = [{"step": item.step,
              "removed": "%d-%d %d-%d" % (item.removed[0] + item.removed[1]),
              "added": "%d-%d %d-%d" % (item.added[0] + item.added[1]),
              "delta": item.delta,
              "sombor": item.sombor} for item in trace]
    return pd.DataFrame(_rows, columns=["step", "removed", "added", "delta", "sombor"])


def decomposition_frame(records):
    return pd.DataFrame(records, columns=["t", "attached_at", "d_t", "d_p", "added_leaves", "delta", "running_total"])


def enumeration_frame(rows):
    return pd.DataFrame(rows, columns=["code", "sombor", "canonical_form"])


def survey_frame(survey):
    return pd.DataFrame([{
        "degree_sequence": _sequence_text(survey.degree_sequence),
        "starts": survey.starts,
        "max_steps": survey.max_steps,
        "distinct_fixed_points": len(survey.fixed_point_values),
        "at_greedy": survey.at_greedy,
        "above_greedy": survey.above_greedy,
        "below_greedy": survey.below_greedy,
        "greedy_value": survey.greedy_value,
    }])

"""Readers and writers for the on-disk formats.

Formats (all numeric output uses 12 significant digits):

- edge list CSV, header ``src,dst,weight``; zero-based integer vertices
- signal CSV, header ``vertex,re,im``; for spectral-domain signals the
  first column holds the frequency bin instead of a vertex
- spectrum CSV, header ``k,re_lambda,im_lambda,abs_lambda``
- complex matrix CSV, cells as ``re;im``
- filter spec JSON, ``{"kind": "ideal", "omega": [...]}`` or
  ``{"kind": "diagonal", "response": [[re, im], ...]}``
- sampling plan JSON, ``{omega, sample_set, gamma, b_norm, certificate}``
- sweep trials CSV, header ``sigma,trial,graph,err_l2,bound``
"""
from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import FileFormatError
from .graphs import DirectedGraph, Edge
from .sampling import BandModel, SamplingPlan
from .transform import GraphSignal, SpectralFilter, VERTEX


def fmt(x: float) -> str:
    """Render a real number with 12 significant digits."""
    return f"{float(x):.12g}"


def round12(x: float) -> float:
    """Round to 12 significant digits (for JSON payloads)."""
    return float(fmt(x))


def _open_rows(path) -> list[list[str]]:
    try:
        with open(path, newline="") as fh:
            return [row for row in csv.reader(fh) if row]
    except OSError as exc:
        raise FileFormatError(f"cannot read {path}: {exc}") from exc


def _check_header(rows: list[list[str]], expected: list[str], path) -> list[list[str]]:
    if not rows or [c.strip() for c in rows[0]] != expected:
        raise FileFormatError(f"{path}: expected header {','.join(expected)}")
    return rows[1:]


# -- edge lists ---------------------------------------------------------------

def write_edge_list(g: DirectedGraph, path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["src", "dst", "weight"])
        for src, dst, weight in g.edges:
            writer.writerow([src, dst, fmt(weight)])


def read_edge_list(path, n: int | None = None) -> DirectedGraph:
    """Parse an edge-list CSV.

    The format carries no vertex count, so ``n`` defaults to the largest
    vertex index plus one; pass it explicitly for graphs with trailing
    isolated vertices.
    """
    body = _check_header(_open_rows(path), ["src", "dst", "weight"], path)
    edges = []
    for lineno, row in enumerate(body, start=2):
        if len(row) != 3:
            raise FileFormatError(f"{path}:{lineno}: expected 3 columns, got {len(row)}")
        try:
            edges.append(Edge(int(row[0]), int(row[1]), float(row[2])))
        except ValueError as exc:
            raise FileFormatError(f"{path}:{lineno}: {exc}") from exc
    if n is None:
        if not edges:
            raise FileFormatError(f"{path}: empty edge list needs an explicit vertex count")
        n = max(max(e.src, e.dst) for e in edges) + 1
    try:
        return DirectedGraph(n, tuple(edges))
    except ValueError as exc:
        raise FileFormatError(f"{path}: {exc}") from exc


# -- signals ------------------------------------------------------------------

def write_signal(signal: GraphSignal, path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["vertex", "re", "im"])
        for i, z in enumerate(signal.values):
            writer.writerow([i, fmt(z.real), fmt(z.imag)])


def read_signal(path, domain: str = VERTEX) -> GraphSignal:
    body = _check_header(_open_rows(path), ["vertex", "re", "im"], path)
    entries = {}
    for lineno, row in enumerate(body, start=2):
        if len(row) != 3:
            raise FileFormatError(f"{path}:{lineno}: expected 3 columns, got {len(row)}")
        try:
            entries[int(row[0])] = complex(float(row[1]), float(row[2]))
        except ValueError as exc:
            raise FileFormatError(f"{path}:{lineno}: {exc}") from exc
    n = len(entries)
    if n == 0:
        raise FileFormatError(f"{path}: no signal rows")
    if sorted(entries) != list(range(n)):
        raise FileFormatError(f"{path}: indices must cover 0..{n - 1} exactly once")
    values = np.array([entries[i] for i in range(n)])
    try:
        return GraphSignal(values, domain)
    except ValueError as exc:
        raise FileFormatError(f"{path}: {exc}") from exc


# -- spectra ------------------------------------------------------------------

def write_spectrum(lambdas: np.ndarray, path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["k", "re_lambda", "im_lambda", "abs_lambda"])
        for k, lam in enumerate(lambdas):
            writer.writerow([k, fmt(lam.real), fmt(lam.imag), fmt(abs(lam))])


def read_spectrum(path) -> np.ndarray:
    body = _check_header(
        _open_rows(path), ["k", "re_lambda", "im_lambda", "abs_lambda"], path
    )
    lams = []
    for lineno, row in enumerate(body, start=2):
        try:
            lams.append(complex(float(row[1]), float(row[2])))
        except (ValueError, IndexError) as exc:
            raise FileFormatError(f"{path}:{lineno}: {exc}") from exc
    return np.array(lams, dtype=np.complex128)


# -- complex matrices ---------------------------------------------------------

def write_matrix(m: np.ndarray, path) -> None:
    m = np.atleast_2d(np.asarray(m, dtype=np.complex128))
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        for row in m:
            writer.writerow([f"{fmt(z.real)};{fmt(z.imag)}" for z in row])


def read_matrix(path) -> np.ndarray:
    rows = _open_rows(path)
    if not rows:
        raise FileFormatError(f"{path}: empty matrix file")
    out = []
    for lineno, row in enumerate(rows, start=1):
        parsed = []
        for cell in row:
            try:
                re, im = cell.split(";")
                parsed.append(complex(float(re), float(im)))
            except ValueError as exc:
                raise FileFormatError(f"{path}:{lineno}: bad cell {cell!r}") from exc
        out.append(parsed)
    if len({len(r) for r in out}) != 1:
        raise FileFormatError(f"{path}: ragged rows")
    return np.array(out, dtype=np.complex128)


# -- filters ------------------------------------------------------------------

def filter_from_spec(spec: dict, n: int) -> SpectralFilter:
    kind = spec.get("kind")
    if kind == "ideal":
        try:
            return SpectralFilter.ideal([int(i) for i in spec["omega"]], n)
        except (KeyError, TypeError, ValueError) as exc:
            raise FileFormatError(f"bad ideal filter spec: {exc}") from exc
    if kind == "diagonal":
        try:
            response = np.array([complex(re, im) for re, im in spec["response"]])
        except (KeyError, TypeError, ValueError) as exc:
            raise FileFormatError(f"bad diagonal filter spec: {exc}") from exc
        if response.shape != (n,):
            raise FileFormatError(f"diagonal filter has {response.shape[0]} taps, graph has {n}")
        return SpectralFilter(response)
    raise FileFormatError(f"unknown filter kind {kind!r}")


def read_filter_spec(path, n: int) -> SpectralFilter:
    try:
        with open(path) as fh:
            spec = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise FileFormatError(f"cannot parse filter spec {path}: {exc}") from exc
    return filter_from_spec(spec, n)


def write_filter_spec(filt: SpectralFilter, path) -> None:
    resp = filt.response
    if np.all(np.isin(resp, [0.0 + 0j, 1.0 + 0j])):
        spec = {"kind": "ideal", "omega": [int(i) for i in np.flatnonzero(resp == 1.0)]}
    else:
        spec = {
            "kind": "diagonal",
            "response": [[round12(z.real), round12(z.imag)] for z in resp],
        }
    Path(path).write_text(json.dumps(spec, indent=2) + "\n")


# -- sampling plans -----------------------------------------------------------

def write_plan(plan: SamplingPlan, band: BandModel, path) -> None:
    """Export a plan with its unit-noise certificate ``||V_omega||_2 / gamma``."""
    payload = {
        "omega": [int(i) for i in band.omega],
        "sample_set": [int(i) for i in plan.sample_set],
        "gamma": round12(plan.gamma),
        "b_norm": round12(plan.b_norm),
        "certificate": round12(band.synthesis_norm / plan.gamma) if plan.gamma > 0 else None,
    }
    Path(path).write_text(json.dumps(payload, indent=2) + "\n")


def read_plan(path) -> dict:
    try:
        with open(path) as fh:
            payload = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise FileFormatError(f"cannot parse plan {path}: {exc}") from exc
    for key in ("omega", "sample_set", "gamma", "b_norm", "certificate"):
        if key not in payload:
            raise FileFormatError(f"{path}: plan is missing {key!r}")
    return payload


# -- experiment sweeps --------------------------------------------------------

def write_trials_csv(rows: Iterable[Sequence], path) -> None:
    """Rows of ``(sigma, trial, graph, err_l2, bound)``."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["sigma", "trial", "graph", "err_l2", "bound"])
        for sigma, trial, graph, err, bound in rows:
            writer.writerow([fmt(sigma), trial, graph, fmt(err), fmt(bound)])


def read_trials_csv(path) -> list[tuple[float, int, str, float, float]]:
    body = _check_header(
        _open_rows(path), ["sigma", "trial", "graph", "err_l2", "bound"], path
    )
    out = []
    for lineno, row in enumerate(body, start=2):
        try:
            out.append((float(row[0]), int(row[1]), row[2], float(row[3]), float(row[4])))
        except (ValueError, IndexError) as exc:
            raise FileFormatError(f"{path}:{lineno}: {exc}") from exc
    return out


def write_summary_csv(rows, path) -> None:
    """Rows with fields (graph, sigma, err_mean, err_std, err_abs_mean, bound_mean)."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["graph", "sigma", "err_mean", "err_std", "err_abs_mean", "bound_mean"])
        for row in rows:
            writer.writerow(
                [row.graph, fmt(row.sigma), fmt(row.err_mean), fmt(row.err_std),
                 fmt(row.err_abs_mean), fmt(row.bound_mean)]
            )


def read_summary_csv(path) -> list[tuple[str, float, float, float, float, float]]:
    body = _check_header(
        _open_rows(path),
        ["graph", "sigma", "err_mean", "err_std", "err_abs_mean", "bound_mean"],
        path,
    )
    out = []
    for lineno, row in enumerate(body, start=2):
        try:
            out.append((row[0],) + tuple(float(v) for v in row[1:6]))
        except (ValueError, IndexError) as exc:
            raise FileFormatError(f"{path}:{lineno}: {exc}") from exc
    return out


# -- decomposition bundles ----------------------------------------------------

def write_decomposition_bundle(
    dec, henrici: float, path, v_path=None, u_path=None
) -> None:
    """JSON summary of a decomposition; eigenvalues as ``[re, im]`` pairs.

    ``v_path``/``u_path`` optionally dump the bases as complex matrix CSVs
    and are recorded in the bundle when given.
    """
    payload = {
        "lambdas": [[round12(l.real), round12(l.imag)] for l in dec.lambdas],
        "kappa": round12(dec.kappa),
        "henrici": round12(henrici),
        "residual": round12(dec.residual),
    }
    if v_path is not None:
        write_matrix(dec.v, v_path)
        payload["v_csv"] = str(v_path)
    if u_path is not None:
        write_matrix(dec.u, u_path)
        payload["u_csv"] = str(u_path)
    Path(path).write_text(json.dumps(payload, indent=2) + "\n")

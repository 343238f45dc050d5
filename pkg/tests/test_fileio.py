import json

import numpy as np
import pytest

from dirlap import (
    FileFormatError,
    SpectralFilter,
    gen_perturbed_cycle,
    henrici_departure,
    make_band,
    plan_sampling,
    spectral_signal,
    vertex_signal,
)
from dirlap import fileio


class TestEdgeList:
    def test_round_trip(self, tmp_path):
        g = gen_perturbed_cycle(12, 0.3, 0.8, seed=5)
        path = tmp_path / "g.csv"
        fileio.write_edge_list(g, path)
        assert fileio.read_edge_list(path).edges == g.edges

    def test_header_enforced(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("a,b,c\n0,1,1.0\n")
        with pytest.raises(FileFormatError):
            fileio.read_edge_list(path)

    def test_bad_weight_reported_with_line(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("src,dst,weight\n0,1,heavy\n")
        with pytest.raises(FileFormatError, match=":2"):
            fileio.read_edge_list(path)

    def test_explicit_vertex_count(self, tmp_path):
        path = tmp_path / "g.csv"
        path.write_text("src,dst,weight\n0,1,1\n")
        assert fileio.read_edge_list(path, n=5).n == 5

    def test_duplicate_edge_becomes_format_error(self, tmp_path):
        path = tmp_path / "dup.csv"
        path.write_text("src,dst,weight\n0,1,1\n0,1,2\n")
        with pytest.raises(FileFormatError, match="duplicate"):
            fileio.read_edge_list(path)


class TestSignals:
    def test_round_trip(self, tmp_path, rng):
        sig = vertex_signal(rng.standard_normal(9) + 1j * rng.standard_normal(9))
        path = tmp_path / "x.csv"
        fileio.write_signal(sig, path)
        back = fileio.read_signal(path)
        assert np.allclose(back.values, sig.values, atol=1e-11)
        assert back.domain == "vertex"

    def test_spectral_domain_flag(self, tmp_path):
        path = tmp_path / "xhat.csv"
        fileio.write_signal(spectral_signal([1.0, 2.0]), path)
        assert fileio.read_signal(path, domain="spectral").domain == "spectral"

    def test_gap_in_indices_rejected(self, tmp_path):
        path = tmp_path / "x.csv"
        path.write_text("vertex,re,im\n0,1,0\n2,1,0\n")
        with pytest.raises(FileFormatError, match="cover"):
            fileio.read_signal(path)


class TestSpectrumCsv:
    def test_round_trip(self, tmp_path, cycle4):
        _, dec = cycle4
        path = tmp_path / "spec.csv"
        fileio.write_spectrum(dec.lambdas, path)
        assert np.allclose(fileio.read_spectrum(path), dec.lambdas, atol=1e-11)

    def test_twelve_significant_digits(self, tmp_path):
        path = tmp_path / "spec.csv"
        fileio.write_spectrum(np.array([1 / 3 + 1j * np.pi]), path)
        text = path.read_text()
        assert "0.333333333333" in text
        assert "3.14159265359" in text


class TestMatrixCsv:
    def test_round_trip(self, tmp_path, rng):
        m = rng.standard_normal((4, 6)) + 1j * rng.standard_normal((4, 6))
        path = tmp_path / "m.csv"
        fileio.write_matrix(m, path)
        assert np.allclose(fileio.read_matrix(path), m, atol=1e-11)

    def test_bad_cell(self, tmp_path):
        path = tmp_path / "m.csv"
        path.write_text("1;0,2\n")
        with pytest.raises(FileFormatError):
            fileio.read_matrix(path)


class TestFilterSpec:
    def test_ideal_round_trip(self, tmp_path):
        filt = SpectralFilter.ideal([0, 2, 3], 6)
        path = tmp_path / "f.json"
        fileio.write_filter_spec(filt, path)
        back = fileio.read_filter_spec(path, 6)
        assert np.array_equal(back.response, filt.response)
        assert json.loads(path.read_text())["kind"] == "ideal"

    def test_diagonal_round_trip(self, tmp_path, rng):
        filt = SpectralFilter(rng.standard_normal(5) + 1j * rng.standard_normal(5))
        path = tmp_path / "f.json"
        fileio.write_filter_spec(filt, path)
        back = fileio.read_filter_spec(path, 5)
        assert np.allclose(back.response, filt.response, atol=1e-11)

    def test_wrong_tap_count(self, tmp_path):
        path = tmp_path / "f.json"
        path.write_text(json.dumps({"kind": "diagonal", "response": [[1, 0]]}))
        with pytest.raises(FileFormatError):
            fileio.read_filter_spec(path, 3)

    def test_unknown_kind(self, tmp_path):
        path = tmp_path / "f.json"
        path.write_text(json.dumps({"kind": "butterworth"}))
        with pytest.raises(FileFormatError):
            fileio.read_filter_spec(path, 3)


class TestPlanJson:
    def test_round_trip_fields(self, tmp_path, perturbed20):
        _, dec = perturbed20
        band = make_band(dec, 4)
        plan = plan_sampling(band, range(0, 20, 2))
        path = tmp_path / "plan.json"
        fileio.write_plan(plan, band, path)
        payload = fileio.read_plan(path)
        assert payload["omega"] == [0, 1, 2, 3]
        assert payload["sample_set"] == list(range(0, 20, 2))
        assert payload["gamma"] == pytest.approx(plan.gamma, rel=1e-11)
        assert payload["certificate"] == pytest.approx(
            band.synthesis_norm / plan.gamma, rel=1e-11
        )

    def test_rank_deficient_plan_has_null_certificate(self, tmp_path, perturbed20):
        _, dec = perturbed20
        band = make_band(dec, 5)
        plan = plan_sampling(band, [0, 1])
        path = tmp_path / "plan.json"
        fileio.write_plan(plan, band, path)
        assert fileio.read_plan(path)["certificate"] is None


class TestTrialsCsv:
    def test_round_trip(self, tmp_path):
        rows = [(0.01, 0, "cycle", 0.0123456789012, 0.02), (0.5, 3, "perturbed", 1.25, 9.5)]
        path = tmp_path / "trials.csv"
        fileio.write_trials_csv(rows, path)
        back = fileio.read_trials_csv(path)
        assert back[0][2] == "cycle"
        assert back[1] == (0.5, 3, "perturbed", 1.25, 9.5)
        assert back[0][3] == pytest.approx(0.0123456789012, rel=1e-11)


class TestDecompositionBundle:
    def test_bundle_with_bases(self, tmp_path, cycle4):
        lap, dec = cycle4
        path = tmp_path / "dec.json"
        v_path = tmp_path / "v.csv"
        u_path = tmp_path / "u.csv"
        fileio.write_decomposition_bundle(
            dec, henrici_departure(lap, dec), path, v_path=v_path, u_path=u_path
        )
        payload = json.loads(path.read_text())
        assert len(payload["lambdas"]) == 4
        assert payload["kappa"] == pytest.approx(1.0, abs=1e-9)
        assert payload["henrici"] == pytest.approx(0.0, abs=1e-6)
        assert np.allclose(fileio.read_matrix(v_path), dec.v, atol=1e-11)
        assert np.allclose(fileio.read_matrix(u_path), dec.u, atol=1e-11)

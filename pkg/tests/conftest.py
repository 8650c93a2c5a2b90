import pytest

from bvd1d.experiments import PROFILES, run_benchmark
from bvd1d.solver import SchemeConfig

BENCHMARK_CONFIGS = {
    "wenoz": SchemeConfig("wenoz"),
    "bvd1": SchemeConfig("bvd1"),
    "bvd2": SchemeConfig("bvd2"),
    "bvd3": SchemeConfig("bvd3"),
    "bvd4": SchemeConfig("bvd4"),
    "bvd4-beta4": SchemeConfig("bvd4", beta=4.0),
}


@pytest.fixture(scope="session")
def complex_wave_runs():
    """One-period complex-wave benchmark (N=200, CFL 0.2) per configuration."""
    return {
        name: run_benchmark(config, PROFILES["complex_waves"], n_cells=200, cfl=0.2)
        for name, config in BENCHMARK_CONFIGS.items()
    }

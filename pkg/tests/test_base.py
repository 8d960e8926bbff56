import pytest

from sgprod.base import BaseToolkit, Settings, check_guard
from sgprod.exceptions import EXIT_FAILURE, EXIT_USAGE, ConfigError, GraphError, GuardExceededError


def test_defaults(settings):
    assert settings.oracle_edge_guard == 24
    assert settings.coset_guard == 17
    assert settings.complete_guard == 5
    assert settings.cliques_guard == 4
    assert settings.chunk_size == 1024
    assert settings.jobs == 0
    assert settings.seed == 0


def test_from_env():
    settings = Settings.from_env({"SG_GUARD_EDGES": "30", "SG_JOBS": "4", "SG_SEED": "9"})
    assert settings.oracle_edge_guard == 30
    assert settings.jobs == 4
    assert settings.seed == 9


def test_overrides_win_over_environment():
    settings = Settings.from_env({"SG_SEED": "9", "SG_JOBS": ""}, seed=3, jobs=None)
    assert settings.seed == 3
    assert settings.jobs == 0


@pytest.mark.parametrize("environ", [{"SG_JOBS": "many"}, {"SG_GUARD_EDGES": "0"}, {"SG_JOBS": "-2"}])
def test_from_env_errors(environ):
    with pytest.raises(ConfigError):
        Settings.from_env(environ)


def test_from_env_reads_process_environment(monkeypatch):
    monkeypatch.setenv("SG_SEED", "11")
    assert Settings.from_env().seed == 11


def test_check_guard():
    check_guard(5, 5, "edges")
    with pytest.raises(GuardExceededError) as info:
        check_guard(6, 5, "edges")
    assert info.value.exit_code == EXIT_FAILURE


def test_error_exit_codes():
    assert GraphError("bad").exit_code == EXIT_USAGE
    assert GraphError("bad", exit_code=EXIT_FAILURE).exit_code == EXIT_FAILURE


def test_toolkit_settings(monkeypatch):
    monkeypatch.delenv("SG_JOBS", raising=False)
    assert BaseToolkit(jobs=2).settings.jobs == 2
    base = Settings(seed=5)
    toolkit = BaseToolkit(base, chunk_size=8)
    assert toolkit.settings.seed == 5
    assert toolkit.settings.chunk_size == 8

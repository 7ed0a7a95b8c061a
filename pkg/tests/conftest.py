"""This file prepares config fixtures for other tests."""

from pathlib import Path
from typing import Optional

import pytest
import rootutils
from hydra import compose, initialize
from hydra.core.global_hydra import GlobalHydra
from omegaconf import DictConfig, open_dict


@pytest.fixture(scope="package")
def cfg_run_global() -> DictConfig:
    """A pytest fixture for setting up a default Hydra DictConfig for running commands.

    :return: A DictConfig object containing a default Hydra configuration.
    """
    with initialize(version_base="1.3", config_path="../configs"):
        cfg = compose(config_name="run.yaml", return_hydra_config=True, overrides=[])

        # set defaults for all tests
        with open_dict(cfg):
            cfg.paths.root_dir = str(rootutils.find_root(indicator=".project-root"))
            cfg.extras.print_config = False

    return cfg


@pytest.fixture(scope="function")
def cfg_run(cfg_run_global: DictConfig, tmp_path: Path) -> DictConfig:
    """A pytest fixture built on top of the `cfg_run_global()` fixture, which accepts a temporary
    logging path `tmp_path` for generating a temporary logging path.

    This is called by each test which uses the `cfg_run` arg. Each test generates its own
    temporary logging path.

    :param cfg_run_global: The input DictConfig object to be modified.
    :param tmp_path: The temporary logging path.

    :return: A DictConfig with updated output and log directories corresponding to `tmp_path`.
    """
    cfg = cfg_run_global.copy()

    with open_dict(cfg):
        cfg.paths.output_dir = str(tmp_path)
        cfg.paths.log_dir = str(tmp_path)

    yield cfg

    GlobalHydra.instance().clear()


@pytest.fixture(scope="function")
def compose_command(cfg_run: DictConfig):
    """A pytest fixture returning a factory that composes the run config for one command.

    :param cfg_run: The per-test config, whose paths are reused.

    :return: A function mapping a command name (``None`` keeps the default or lets an
        experiment choose) and overrides to a composed DictConfig.
    """

    def compose_for(command: Optional[str], *overrides: str) -> DictConfig:
        GlobalHydra.instance().clear()
        with initialize(version_base="1.3", config_path="../configs"):
            cfg = compose(
                config_name="run.yaml",
                return_hydra_config=True,
                overrides=[f"command={command}", *overrides] if command else list(overrides),
            )
        with open_dict(cfg):
            cfg.paths.root_dir = cfg_run.paths.root_dir
            cfg.paths.output_dir = cfg_run.paths.output_dir
            cfg.paths.log_dir = cfg_run.paths.log_dir
            cfg.extras.print_config = False
        return cfg

    return compose_for

import sys
from typing import Any, Callable, Dict, Tuple

import hydra
import rootutils
from omegaconf import DictConfig

rootutils.setup_root(__file__, indicator=".project-root", pythonpath=True)
# ------------------------------------------------------------------------------------ #
# the setup_root above is equivalent to:
# - adding project root dir to PYTHONPATH
#       (so you don't need to force user to install project as a package)
#       (necessary before importing any local modules e.g. `from src import utils`)
# - setting up PROJECT_ROOT environment variable
#       (which is used as a base for paths in "configs/paths/default.yaml")
#       (this way all filepaths are the same no matter where you run the code)
# - loading environment variables from ".env" in root dir
#
# more info: https://github.com/ashleve/rootutils
# ------------------------------------------------------------------------------------ #

from src.utils import WorkerLogger, extras, task_wrapper

log = WorkerLogger(__name__, main_process_only=True)


@task_wrapper
def run(cfg: DictConfig) -> Tuple[Dict[str, Any], Dict[str, Any]]:
    """Runs the command selected by the ``command`` config group.

    This method is wrapped in optional @task_wrapper decorator, that controls the behavior during
    failure. Useful for saving info about the crash to the run log.

    :param cfg: A DictConfig configuration composed by Hydra.
    :return: A tuple with the exit code and dict with all instantiated objects.
    """
    if not cfg.get("command"):
        log.error("No command selected! Use e.g. `command=witness command.p=5 command.q=1`")
        return {"exit_code": 1}, {"cfg": cfg}

    log.info(f"Instantiating command <{cfg.command._target_}>")
    command: Callable[[], int] = hydra.utils.instantiate(cfg.command)

    object_dict = {
        "cfg": cfg,
        "command": command,
    }

    exit_code = command()
    log.info(f"Command finished with exit code {exit_code}")

    return {"exit_code": exit_code}, object_dict


@hydra.main(version_base="1.3", config_path="../configs", config_name="run.yaml")
def main(cfg: DictConfig) -> int:
    """Main entry point.

    :param cfg: DictConfig configuration composed by Hydra.
    :return: The exit code of the command.
    """
    # apply extra utilities
    # (e.g. ignore python warnings, print cfg tree, etc.)
    extras(cfg)

    metric_dict, _ = run(cfg)

    # hydra discards the return value, so failures leave through SystemExit
    exit_code = metric_dict["exit_code"]
    if exit_code != 0:
        sys.exit(exit_code)

    return exit_code


if __name__ == "__main__":
    main()

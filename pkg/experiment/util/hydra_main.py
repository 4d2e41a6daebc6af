#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~
#  MIT License
#
#  Copyright (c) 2022 The nomcheck Authors
#
#  Distributed under the terms of the MIT License,
#  see LICENSE.txt in the project root for the full license text.
#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~

import logging
from pathlib import Path
from typing import Callable
from typing import NoReturn
from typing import Optional

import hydra
from omegaconf import DictConfig
from omegaconf import OmegaConf

from experiment.util.run_utils import EXIT_ERROR
from experiment.util.run_utils import log_error_and_exit


log = logging.getLogger(__name__)


# ========================================================================= #
# Config Resolvers                                                          #
# ========================================================================= #


# experiment/config
CONFIG_DIR = str(Path(__file__).resolve().parent.parent / 'config')


class ConfigurationError(Exception):
    pass


def _required_value(msg: str):
    raise ConfigurationError(msg)


def register_hydra_resolvers():
    """
    Enable the resolvers used by `experiment/config`, calling this again is a no-op.
      - `${exit:<msg>}` marks a value that must be overridden
      - `${abspath:<path>}` resolves a path against the directory the command was run from
    """
    for name, fn in [('exit', _required_value), ('abspath', hydra.utils.to_absolute_path)]:
        if not OmegaConf.has_resolver(name):
            OmegaConf.register_new_resolver(name, fn)


# ========================================================================= #
# Entry Point                                                               #
# ========================================================================= #


def _fail(err_type: str, err: Optional[BaseException], exc_info: bool) -> NoReturn:
    log_error_and_exit(err_type=err_type, err_msg='<UNKNOWN>' if (err is None) else str(err), exit_code=EXIT_ERROR, exc_info=exc_info)


def hydra_main(
    callback: Callable[[DictConfig], Optional[int]],
    config_name: str = 'config',
    log_level: Optional[int] = logging.INFO,
    log_exc_info_callback: bool = False,
    log_exc_info_hydra: bool = False,
    exit_on_code: bool = True,
) -> int:
    """
    Compose `config_name` from `experiment/config` with the command line
    overrides and run `callback` on it. The callback returns the exit code,
    SAT is 0 and UNSAT is 1. Any error is logged and exits with code 2.
    If `exit_on_code` is set, non-zero codes raise `SystemExit`.
    """
    # hydra has not configured logging yet
    if log_level is not None:
        logging.basicConfig(level=log_level)
    register_hydra_resolvers()
    result = {'code': EXIT_ERROR}

    @hydra.main(config_path=CONFIG_DIR, config_name=config_name, version_base='1.1')
    def _run(cfg: DictConfig):
        try:
            result['code'] = callback(cfg) or 0
        except (SystemExit, KeyboardInterrupt):
            raise
        except Exception as e:
            _fail(type(e).__name__, e, exc_info=log_exc_info_callback)

    try:
        _run()
    except SystemExit:
        raise
    except KeyboardInterrupt as e:
        _fail('interrupted', e, exc_info=False)
    except BaseException as e:
        _fail('hydra error', e, exc_info=log_exc_info_hydra)

    code = result['code']
    if exit_on_code and code:
        raise SystemExit(code)
    return code


# ========================================================================= #
# END                                                                       #
# ========================================================================= #

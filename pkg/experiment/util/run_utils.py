#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~
#  MIT License
#
#  Copyright (c) 2022 The nomcheck Authors
#
#  Distributed under the terms of the MIT License,
#  see LICENSE.txt in the project root for the full license text.
#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~

import logging
import sys
from typing import NoReturn


log = logging.getLogger(__name__)


# ========================================================================= #
# EXIT CODES                                                                #
# ========================================================================= #


EXIT_SAT = 0
EXIT_UNSAT = 1
EXIT_ERROR = 2


# ========================================================================= #
# ERRORS                                                                    #
# ========================================================================= #


def log_error_and_exit(err_type: str, err_msg: str, exit_code: int = EXIT_ERROR, exc_info=True) -> NoReturn:
    # truncate error
    err_msg = err_msg[:244] + ' <TRUNCATED>' if len(err_msg) > 244 else err_msg
    # diagnostics always go to standard error
    log.error(f'exiting: {err_type} | {err_msg}', exc_info=exc_info)
    sys.exit(exit_code)


# ========================================================================= #
# END                                                                       #
# ========================================================================= #

# Copyright (c) the drdom authors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.

from concurrent.futures import Executor, ProcessPoolExecutor
import logging
import typing as tp

import numpy as np
import omegaconf


logger = logging.getLogger(__name__)

T = tp.TypeVar('T')


def config_section(cfg: omegaconf.DictConfig, key: str) -> tp.Dict[str, tp.Any]:
    """Resolved section `key` of `cfg` as a plain dict, empty when the section is absent.

    Raises:
        ValueError: If the section is not a mapping.
    """
    if key not in cfg or cfg[key] is None:
        return {}
    section = omegaconf.OmegaConf.to_container(cfg[key], resolve=True)
    if not isinstance(section, dict):
        raise ValueError(f"Config section {key!r} must be a mapping, got {type(section).__name__}.")
    return {str(k): v for k, v in section.items()}


def instance_rng(seed: int, index: int) -> np.random.Generator:
    """Generator for instance `index` of a run seeded with `seed`.

    The stream only depends on `(seed, index)`, so instances can be drawn in any order
    and on any worker.
    """
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(index,)))


class _Completed(tp.Generic[T]):
    """Outcome of a call already made, returned or raised again by `result`."""

    def __init__(self, value: tp.Optional[T] = None, error: tp.Optional[BaseException] = None):
        self._value = value
        self._error = error

    def result(self) -> T:
        if self._error is not None:
            raise self._error
        return tp.cast(T, self._value)


class InlineExecutor:
    """Runs each submitted instance right away in the calling process."""

    def submit(self, fn: tp.Callable[..., T], *args: tp.Any, **kwargs: tp.Any) -> _Completed[T]:
        try:
            return _Completed(value=fn(*args, **kwargs))
        except Exception as error:
            return _Completed(error=error)

    def __enter__(self) -> 'InlineExecutor':
        return self

    def __exit__(self, exc_type, exc_value, exc_tb):
        return None


def worker_pool(jobs: int) -> tp.Union[Executor, InlineExecutor]:
    """Pool for `jobs` sweep workers: worker processes above one job, the calling process otherwise."""
    if jobs > 1:
        return ProcessPoolExecutor(jobs)
    return InlineExecutor()

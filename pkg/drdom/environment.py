# Copyright (c) the drdom authors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.

"""
Provides the drdom configuration: base YAML file, sweep presets and dotted overrides.
"""

import logging
import os
from pathlib import Path
import typing as tp

import omegaconf


logger = logging.getLogger(__name__)


class DRDomEnvironment:
    """Configuration shared by the command line and the library entry points.

    The base configuration is read from `config/config.yaml` next to the package, or from the
    file named by the following environment variable:

        DRDOM_CONFIG (optional): Path to the yaml file holding the base configuration.

    Sweep presets are looked up in the `sweep/` folder next to the base configuration file.
    """
    _instance = None
    CONFIG_ENV = "DRDOM_CONFIG"

    def __init__(self, config_path: tp.Optional[tp.Union[str, Path]] = None) -> None:
        """Loads configuration."""
        if config_path is None:
            config_path = os.getenv(
                self.CONFIG_ENV,
                Path(__file__).parent.parent.joinpath("config", "config.yaml"),
            )
        self.config_path = Path(config_path)
        if not self.config_path.exists():
            raise ValueError(f"Configuration file {self.config_path} does not exist.")
        logger.debug("Loading configuration from %s", self.config_path)
        self.config = omegaconf.OmegaConf.load(self.config_path)
        assert isinstance(self.config, omegaconf.DictConfig)

    @classmethod
    def instance(cls):
        if cls._instance is None:
            cls._instance = cls()
        return cls._instance

    @classmethod
    def reset(cls):
        """Clears the environment and forces a reload on next invocation."""
        cls._instance = None

    @classmethod
    def use_config(cls, config_path: tp.Union[str, Path]):
        """Replaces the environment by one loaded from `config_path`."""
        cls._instance = cls(config_path)
        return cls._instance

    @classmethod
    def get_config_dir(cls) -> Path:
        return cls.instance().config_path.parent

    @classmethod
    def get_preset_path(cls, name: str) -> Path:
        """Path of the sweep preset `name`, either a yaml file path or a name under `sweep/`."""
        if name.endswith('.yaml'):
            return Path(name)
        return cls.get_config_dir() / "sweep" / f"{name}.yaml"

    @classmethod
    def get_config(cls, preset: tp.Optional[str] = None,
                   overrides: tp.Sequence[str] = ()) -> omegaconf.DictConfig:
        """Base configuration merged with an optional preset and `key=value` overrides.

        The cached base configuration is never modified, every call returns a fresh config.
        """
        parts = [cls.instance().config]
        if preset is not None:
            path = cls.get_preset_path(preset)
            if not path.exists():
                raise ValueError(f"Unknown preset {preset!r}, {path} does not exist.")
            parts.append(omegaconf.OmegaConf.load(path))
        if overrides:
            parts.append(omegaconf.OmegaConf.from_dotlist(list(overrides)))
        config = omegaconf.OmegaConf.merge(*parts)
        assert isinstance(config, omegaconf.DictConfig)
        return config

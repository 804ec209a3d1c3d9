# /project/config/__init__.py
import os
import logging
import yaml

from cubing.errors import ConfigError

DEFAULT_CONFIG_PATH = '~/.ccx/config.yml'
CONFIG_ENV_VAR = 'CCX_CONFIG'


class AppConfig:
    def __init__(self):
        self.max_workers = 3
        self.vertex_budget = 100000
        self.max_walls = 20
        self.axis_window = 5
        self.search_radius = 2
        self.implicit_max_power = 4
        self.brute_force_limit = 30
        self.log_file = None
        self.log_level = 'INFO'

    def as_dict(self):
        return dict(vars(self))


class ConfigurationManager:
    def __init__(self, config_file_path=None):
        path = config_file_path or os.environ.get(CONFIG_ENV_VAR) or DEFAULT_CONFIG_PATH
        self.config_file_path = os.path.expanduser(path)
        self.app_config = AppConfig()
        self.logger = logging.getLogger(__name__)
        self.apply_overrides(self.load_file())

    def load_file(self):
        if not os.path.exists(self.config_file_path):
            return {}
        with open(self.config_file_path, 'r') as config_file:
            try:
                current_config = yaml.safe_load(config_file)
            except yaml.YAMLError as e:
                raise ConfigError(f"Malformed config file {self.config_file_path}: {e}") from None
        if current_config is None:
            return {}
        if not isinstance(current_config, dict):
            raise ConfigError(f"Config file {self.config_file_path} must hold a mapping of settings")
        return current_config

    def apply_overrides(self, overrides):
        defaults = AppConfig().as_dict()
        for key, value in overrides.items():
            if key not in defaults:
                self.logger.warning(f"Ignoring unknown setting '{key}' in {self.config_file_path}")
                continue
            default = defaults[key]
            if isinstance(default, int) and (not isinstance(value, int) or isinstance(value, bool) or value < 1):
                raise ConfigError(f"Setting '{key}' must be a positive integer, got {value!r}")
            if key == 'log_level' and str(value).upper() not in ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'):
                raise ConfigError(f"Setting 'log_level' must be a logging level name, got {value!r}")
            setattr(self.app_config, key, value.upper() if key == 'log_level' else value)

    def create_default_config_file(self):
        if os.path.exists(self.config_file_path):
            raise ConfigError(f"Config file {self.config_file_path} already exists")
        os.makedirs(os.path.dirname(self.config_file_path) or '.', exist_ok=True)
        with open(self.config_file_path, 'w') as config_file:
            yaml.safe_dump(AppConfig().as_dict(), config_file, default_flow_style=False)
        self.logger.info(f"Config file created at {self.config_file_path}.")
        return self.config_file_path

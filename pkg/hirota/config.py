import argparse
import os
import sys
from dataclasses import dataclass
from typing import Optional

import toml

from .constants import JOBS_ENV_VAR
from .enums import OutputFormat
from .errors import ConfigError, InvalidParameterError


@dataclass(frozen=True)
class CliConfig:
    """
    Output and parallelism options for one command-line run.

    Args:
        format (OutputFormat): Rendering format.
        out (str, optional): Output path; None writes to standard output.
        jobs (int): Worker processes for sweeps, at least 1.
    """
    format: OutputFormat = OutputFormat.TEXT
    out: Optional[str] = None
    jobs: int = 1

    def __post_init__(self):
        if self.jobs < 1:
            raise InvalidParameterError(f"jobs must be at least 1, got {self.jobs}")


def _global_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument('--log-level', type=str, help='Set logging level')
    parser.add_argument('--log-format', type=str, help='Set logging format')
    parser.add_argument('--format', type=str, help='Output format')
    parser.add_argument('--out', type=str, help='Output path')
    parser.add_argument('--jobs', type=int, help='Worker processes')
    return parser


def _parse_jobs(value, source: str) -> int:
    try:
        jobs = int(value)
    except (TypeError, ValueError):
        raise ConfigError(f"{source} must be an integer, got {value!r}") from None
    if jobs < 1:
        raise ConfigError(f"{source} must be at least 1, got {jobs}")
    return jobs


def load_config(default_config_path='config/prefs.toml', args=None, environ=None):
    """
    Load configuration from TOML file with environment and command-line overrides.

    Precedence, lowest first: settings.py, the TOML file, HIROTA_JOBS,
    command-line flags.

    Args:
        default_config_path (str): Path to the configuration file.
        args (list, optional): Command-line arguments; unknown ones are ignored.
        environ (Mapping, optional): Environment to read. Defaults to os.environ.

    Returns:
        dict: Merged configuration dictionary.

    Raises:
        ConfigError: If HIROTA_JOBS or a jobs setting is not a positive integer.
    """
    import settings

    config = {
        'logging': {
            'level': settings.DEFAULT_LOG_LEVEL,
            'format': settings.LOG_FORMAT,
            'date_format': settings.LOG_DATE_FORMAT
        },
        'output': {
            'format': settings.DEFAULT_FORMAT,
            'out': settings.DEFAULT_OUT
        },
        'compute': {
            'jobs': settings.DEFAULT_JOBS,
            'sweep_to': settings.SWEEP_TO,
            'random_seed': settings.RANDOM_SEED
        }
    }

    if os.path.exists(default_config_path):
        try:
            with open(default_config_path, 'r') as f:
                toml_config = toml.load(f)

            for section, values in toml_config.items():
                if section in config:
                    config[section].update(values)
                else:
                    config[section] = values
        except Exception as e:
            print(f"Warning: Could not load configuration file: {e}", file=sys.stderr)

    environ = os.environ if environ is None else environ
    if environ.get(JOBS_ENV_VAR):
        config['compute']['jobs'] = _parse_jobs(environ[JOBS_ENV_VAR], JOBS_ENV_VAR)

    parsed, _ = _global_parser().parse_known_args(args or [])

    if parsed.log_level:
        config['logging']['level'] = parsed.log_level
    if parsed.log_format:
        config['logging']['format'] = parsed.log_format
    if parsed.format:
        config['output']['format'] = parsed.format
    if parsed.out:
        config['output']['out'] = parsed.out
    if parsed.jobs is not None:
        config['compute']['jobs'] = parsed.jobs

    config['compute']['jobs'] = _parse_jobs(config['compute']['jobs'], 'jobs')
    return config


def apply_config(config):
    """
    Apply the loaded configuration to the settings module.

    Args:
        config (dict): Configuration dictionary.
    """
    import settings

    settings.DEFAULT_LOG_LEVEL = config['logging']['level']
    settings.LOG_FORMAT = config['logging']['format']
    settings.LOG_DATE_FORMAT = config.get('logging', {}).get('date_format', settings.LOG_DATE_FORMAT)

    settings.DEFAULT_FORMAT = config['output']['format']
    settings.DEFAULT_OUT = config['output'].get('out')

    settings.DEFAULT_JOBS = config['compute']['jobs']
    settings.SWEEP_TO = config['compute'].get('sweep_to', settings.SWEEP_TO)
    settings.RANDOM_SEED = config['compute'].get('random_seed', settings.RANDOM_SEED)


def cli_config(config) -> CliConfig:
    """
    Build the CliConfig of a merged configuration.

    Raises:
        ConfigError: If the output format is unknown.
    """
    try:
        fmt = OutputFormat(config['output']['format'])
    except ValueError:
        raise ConfigError(f"unknown output format {config['output']['format']!r}") from None
    return CliConfig(fmt, config['output'].get('out'), config['compute']['jobs'])

"""Configuration loader"""
import os
from functools import lru_cache

import yaml
from dotenv import load_dotenv

load_dotenv()


@lru_cache(maxsize=None)
def load_family_config():
    """Load the enumerable-family registry"""
    config_path = os.path.join(os.path.dirname(__file__), 'families.yaml')
    with open(config_path, 'r') as f:
        return yaml.safe_load(f)


@lru_cache(maxsize=None)
def load_settings():
    """Load global settings, with environment overrides applied"""
    config_path = os.path.join(os.path.dirname(__file__), 'settings.yaml')
    with open(config_path, 'r') as f:
        settings = yaml.safe_load(f)

    max_oracle = os.getenv('FISHBIJ_MAX_ORACLE')
    if max_oracle:
        settings['max_oracle'] = int(max_oracle)

    log_level = os.getenv('FISHBIJ_LOG_LEVEL')
    if log_level:
        settings['log_level'] = log_level.upper()

    return settings

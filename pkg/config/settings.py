"""
Settings Manager - Configuration Loading
defaults < config/config.json < STREAMLAB_* environment (a .env file is honoured)
"""

import copy
import json
from pathlib import Path
from typing import Dict, Optional
import logging
import os
from dotenv import load_dotenv, set_key

load_dotenv() # Load environment variables from .env file

logger = logging.getLogger(__name__)

PROJECT_ROOT = Path(__file__).resolve().parent.parent


DEFAULT_CONFIG = {
    # Bench profile applied when no --profile flag is given; None means none
    'profile': None,
    # Custom bench profiles saved with `streamlab profiles add`
    'profiles': {},
    'vectors_path': str(PROJECT_ROOT / 'data' / 'vectors' / 'portfolio_kat.txt'),
    'reference_dir': str(PROJECT_ROOT / 'data' / 'reference'),
    'log_level': 'INFO',
    'log_file': None,
    'bench': {
        'lengths': [16, 32, 64, 128, 256, 512, 1024, 2048],
        'iterations': 5000,
        'warmup_iterations': 500,
        'include_setup': True,
        'ciphers': ['SALSA20_12', 'RABBIT', 'HC128', 'SOSEMANUK'],
        'seed': 20240917,
    }
}


def config_file_path() -> Path:
    """Active config file: STREAMLAB_CONFIG or config/config.json"""
    return Path(os.getenv('STREAMLAB_CONFIG', str(PROJECT_ROOT / 'config' / 'config.json')))


def _apply_env_overrides(config: Dict) -> Dict:
    config['vectors_path'] = os.getenv('STREAMLAB_VECTORS_PATH', config['vectors_path'])
    config['reference_dir'] = os.getenv('STREAMLAB_REFERENCE_DIR', config['reference_dir'])
    config['log_level'] = os.getenv('STREAMLAB_LOG_LEVEL', config['log_level'])
    config['profile'] = os.getenv('STREAMLAB_PROFILE') or config['profile']

    bench = config['bench']
    bench['iterations'] = int(os.getenv('STREAMLAB_ITERATIONS', bench['iterations']))
    bench['warmup_iterations'] = int(os.getenv('STREAMLAB_WARMUP', bench['warmup_iterations']))
    bench['seed'] = int(os.getenv('STREAMLAB_SEED', bench['seed']))
    return config


def read_config_file(config_path: Optional[str] = None) -> Dict:
    """
    Raw contents of the config file, without defaults or environment

    Returns:
        Parsed JSON object; empty when the file is missing

    Raises:
        ValueError: file exists but is not a JSON object
    """
    config_file = Path(config_path) if config_path else config_file_path()
    if not config_file.exists():
        return {}
    with open(config_file, 'r') as f:
        config = json.load(f)
    if not isinstance(config, dict):
        raise ValueError(f"{config_file} does not hold a JSON object")
    return config


def load_config(config_path: Optional[str] = None) -> Dict:
    """
    Load configuration file

    Args:
        config_path: Path to config file (default: config_file_path())

    Returns:
        Configuration dictionary (defaults < file < environment)
    """
    config_path = str(config_path or config_file_path())
    merged_config = copy.deepcopy(DEFAULT_CONFIG)

    if not Path(config_path).exists():
        logger.warning(f"⚠️  Config file not found: {config_path}")
        logger.info("📝 Using default configuration")
        return _apply_env_overrides(merged_config)

    try:
        config = read_config_file(config_path)

        bench = config.pop('bench', {})
        merged_config.update(config)
        merged_config['bench'].update(bench)

        logger.debug(f"✅ Configuration loaded from {config_path}")
        return _apply_env_overrides(merged_config)

    except (OSError, ValueError) as e:
        logger.error(f"❌ Error loading config: {e}")
        logger.info("📝 Using default configuration")
        return _apply_env_overrides(copy.deepcopy(DEFAULT_CONFIG))


def save_config(config: Dict, config_path: Optional[str] = None) -> bool:
    """
    Write a configuration dictionary as JSON

    Args:
        config: Configuration dictionary
        config_path: Path to save config (default: config_file_path())

    Returns:
        True when the file was written
    """
    config_file = Path(config_path) if config_path else config_file_path()

    try:
        config_file.parent.mkdir(parents=True, exist_ok=True)
        with open(config_file, 'w') as f:
            json.dump(config, f, indent=2)
            f.write('\n')

        logger.info(f"✅ Configuration saved to {config_file}")
        return True

    except OSError as e:
        logger.error(f"❌ Error saving config to {config_file}: {e}")
        return False


def update_config_file(updates: Dict, config_path: Optional[str] = None) -> bool:
    """
    Merge updates into the config file, leaving every other key as written

    The ``profiles`` and ``bench`` blocks are merged one level deep.

    Raises:
        ValueError: existing file is not valid JSON
    """
    config = read_config_file(config_path)
    for key, value in updates.items():
        if key in ('profiles', 'bench') and isinstance(config.get(key), dict):
            config[key] = {**config[key], **value}
        else:
            config[key] = value
    return save_config(config, config_path)


def update_env_var(key: str, value: str, env_file: str) -> bool:
    """
    Set a variable in an existing .env file and in the current process

    Args:
        key: Environment variable name
        value: Environment variable value
        env_file: Path to the .env file (never created here)

    Returns:
        False when the file is missing or cannot be written
    """
    env_path = Path(env_file)
    if not env_path.exists():
        logger.warning(f"⚠️  .env file not found: {env_file}")
        return False

    try:
        set_key(str(env_path), key, value)
    except OSError as e:
        logger.error(f"❌ Error updating {key} in {env_file}: {e}")
        return False

    os.environ[key] = value
    logger.debug(f"✅ {env_file}: {key}={value}")
    return True

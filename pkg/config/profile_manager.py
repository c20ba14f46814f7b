"""
Profile Manager - Benchmark Profile Configuration
Manages the built-in full, desk and smoke benchmark profiles plus custom ones from config.json
"""

from typing import Dict, Optional
import logging

logger = logging.getLogger(__name__)


PROFILES = {
    'full': {
        'name': 'Full',
        'description': 'Published protocol: 5000 timed executions per cipher and length',
        'iterations': 5000,
        'warmup_iterations': 500,
        'include_setup': True,
        'lengths': [16, 32, 64, 128, 256, 512, 1024, 2048],
    },

    'desk': {
        'name': 'Desk',
        'description': 'Full grid at 1000 iterations (a few minutes on a laptop)',
        'iterations': 1000,
        'warmup_iterations': 100,
        'include_setup': True,
        'lengths': [16, 32, 64, 128, 256, 512, 1024, 2048],
    },

    'smoke': {
        'name': 'Smoke',
        'description': 'Full grid at 20 iterations for CI',
        'iterations': 20,
        'warmup_iterations': 2,
        'include_setup': True,
        'lengths': [16, 32, 64, 128, 256, 512, 1024, 2048],
    }
}


class ProfileManager:
    """
    Manages benchmark profiles
    """

    def __init__(self, default_profile: str = 'full', custom_profiles: Optional[Dict[str, Dict]] = None):
        self.profiles = {name: dict(profile) for name, profile in PROFILES.items()}
        for name, config in (custom_profiles or {}).items():
            self.create_custom_profile(name, config)
        self.current_profile = default_profile if default_profile in self.profiles else 'full'

    def get_profile(self, profile_name: str = None) -> Dict:
        """
        Get a benchmark profile

        Args:
            profile_name: Name of profile (full, desk, smoke)
                         If None, returns current profile

        Returns:
            Profile configuration dictionary
        """
        if profile_name is None:
            profile_name = self.current_profile

        if profile_name not in self.profiles:
            logger.warning(f"⚠️  Unknown profile: {profile_name}, using full")
            profile_name = 'full'

        return dict(self.profiles[profile_name])

    def set_profile(self, profile_name: str) -> Dict:
        """
        Set the current profile

        Args:
            profile_name: Name of profile to activate

        Returns:
            The activated profile configuration
        """
        if profile_name not in self.profiles:
            logger.error(f"❌ Unknown profile: {profile_name}")
            raise ValueError(f"Profile '{profile_name}' not found")

        self.current_profile = profile_name
        profile = self.profiles[profile_name]

        logger.info(f"✅ Profile set to: {profile['name']}")
        logger.info(f"   Iterations: {profile['iterations']} (warm-up {profile['warmup_iterations']})")
        logger.info(f"   Include setup: {profile['include_setup']}")

        return dict(profile)

    def list_profiles(self) -> Dict[str, str]:
        """
        List all available profiles

        Returns:
            Dictionary of profile names and descriptions
        """
        return {
            name: profile['description']
            for name, profile in self.profiles.items()
        }

    def create_custom_profile(
        self,
        name: str,
        config: Dict
    ) -> Dict:
        """
        Create a custom profile

        Args:
            name: Custom profile name (built-in names are reserved)
            config: Profile configuration

        Returns:
            The stored profile, in the shape config.json keeps under "profiles"
        """
        if name in PROFILES:
            raise ValueError(f"'{name}' is a built-in profile")

        required = ['iterations', 'warmup_iterations', 'include_setup']
        for field in required:
            if field not in config:
                raise ValueError(f"Missing required field: {field}")

        if config['iterations'] < 1:
            raise ValueError("iterations must be at least 1")
        if config['warmup_iterations'] < 0:
            raise ValueError("warmup_iterations must be non-negative")
        if any(n < 1 for n in config.get('lengths', [1])):
            raise ValueError("lengths must be positive")

        profile = {
            'name': config.get('name', name.title()),
            'description': config.get('description', 'Custom profile'),
            'lengths': list(config.get('lengths', PROFILES['full']['lengths'])),
        }
        profile.update({field: config[field] for field in required})
        self.profiles[name] = profile

        logger.info(f"✅ Custom profile created: {name}")
        return dict(profile)

"""
Validated configuration models
"""

from typing import Any, Dict, List

from pydantic import BaseModel, Field, field_validator

from core.ciphers.cipher_core import PORTFOLIO, CipherId

PUBLISHED_LENGTHS = [16, 32, 64, 128, 256, 512, 1024, 2048]
DEFAULT_SEED = 20240917


class BenchConfig(BaseModel):
    """Benchmark experiment parameters"""
    lengths: List[int] = Field(default_factory=lambda: list(PUBLISHED_LENGTHS))
    iterations: int = Field(default=5000, ge=1)
    warmup_iterations: int = Field(default=500, ge=0)
    include_setup: bool = True
    ciphers: List[CipherId] = Field(default_factory=lambda: list(PORTFOLIO))
    seed: int = DEFAULT_SEED

    @field_validator('lengths')
    @classmethod
    def _check_lengths(cls, v: List[int]) -> List[int]:
        if not v:
            raise ValueError("lengths must not be empty")
        if any(n <= 0 for n in v):
            raise ValueError(f"lengths must be positive, got {v}")
        return sorted(set(v))

    @field_validator('ciphers', mode='before')
    @classmethod
    def _parse_ciphers(cls, v: Any) -> List[CipherId]:
        if isinstance(v, str):
            v = [part for part in v.split(',') if part.strip()]
        parsed = [c if isinstance(c, CipherId) else CipherId.parse(c) for c in v]
        if not parsed:
            raise ValueError("ciphers must not be empty")
        if len(set(parsed)) != len(parsed):
            raise ValueError(f"duplicate cipher in {[c.value for c in parsed]}")
        return parsed

    @classmethod
    def from_profile(cls, profile: Dict[str, Any], **overrides) -> "BenchConfig":
        """Build from a profile dict; overrides that are None are ignored"""
        values = {
            key: profile[key]
            for key in ('lengths', 'iterations', 'warmup_iterations', 'include_setup', 'ciphers', 'seed')
            if key in profile
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def describe(self) -> Dict[str, str]:
        return {
            'lengths': ' '.join(str(n) for n in self.lengths),
            'iterations': str(self.iterations),
            'warmup_iterations': str(self.warmup_iterations),
            'include_setup': str(self.include_setup).lower(),
            'ciphers': ' '.join(c.value for c in self.ciphers),
            'seed': str(self.seed),
        }

"""
Configuration Manager for OneCenter
Handles loading, saving, and validating solver settings.
"""

import json
from pathlib import Path
from typing import Optional

from .logger import get_logger


class ConfigManager:
    """Manages solver configuration stored in a JSON file."""
    
    DEFAULT_CONFIG = {
        "l1_dimension_cap": 24,      # 2^d signed-sum table limit
        "threads": 0,                # 0 = machine parallelism
        "point_chunk_size": 4096,
        "mask_chunk_size": 65536,
        "codec_block_factor": 10,    # block length = ceil(factor * log2 d)
        "codec_max_reseeds": 64,
        "codec_separation_divisor": 4,       # Hamming separation ceil(L / 4)
        "codec_edit_separation_divisor": 8,  # edit separation ceil(L / 8)
        "default_eps": 0.1,
        "log_level": "WARNING"
    }
    
    def __init__(self, config_path: Optional[str] = None):
        """
        Initialize ConfigManager.
        
        Args:
            config_path: Path to config file. If None, uses onecenter.json
                next to the project root when it exists.
        """
        if config_path is None:
            self.config_path = Path(__file__).parent.parent / "onecenter.json"
        else:
            self.config_path = Path(config_path)
        
        self.config = self._load_config()
    
    def _load_config(self) -> dict:
        """Load configuration from file, falling back to defaults."""
        config = self.DEFAULT_CONFIG.copy()
        if not self.config_path.exists():
            return config
        try:
            with open(self.config_path, 'r', encoding='utf-8') as f:
                loaded_config = json.load(f)
            if not isinstance(loaded_config, dict):
                raise ValueError("top-level value must be an object")
            # Merge with defaults to ensure all keys exist
            config.update(loaded_config)
        except (json.JSONDecodeError, ValueError, IOError) as e:
            get_logger().warning(f"Error loading config {self.config_path}: {e}. Using defaults.")
        return config
    
    def save(self) -> bool:
        """Save current configuration to file."""
        try:
            self.config_path.parent.mkdir(parents=True, exist_ok=True)
            with open(self.config_path, 'w', encoding='utf-8') as f:
                json.dump(self.config, f, indent=4, ensure_ascii=False)
            return True
        except IOError as e:
            get_logger().error(f"Error saving config: {e}")
            return False
    
    def get(self, key: str, default=None):
        """Get a configuration value."""
        return self.config.get(key, default)
    
    def set(self, key: str, value) -> None:
        """Set a configuration value (does not auto-save)."""
        self.config[key] = value
    
    @property
    def l1_dimension_cap(self) -> int:
        """Largest dimension accepted by the signed-sum solver."""
        return int(self.config.get("l1_dimension_cap", 24))
    
    @l1_dimension_cap.setter
    def l1_dimension_cap(self, value: int) -> None:
        if int(value) < 1:
            raise ValueError("l1_dimension_cap must be positive")
        self.config["l1_dimension_cap"] = int(value)
    
    @property
    def threads(self) -> int:
        """Worker threads (0 means one per CPU)."""
        return int(self.config.get("threads", 0))
    
    @threads.setter
    def threads(self, value: int) -> None:
        if int(value) < 0:
            raise ValueError("threads must be >= 0")
        self.config["threads"] = int(value)
    
    @property
    def point_chunk_size(self) -> int:
        return int(self.config.get("point_chunk_size", 4096))
    
    @point_chunk_size.setter
    def point_chunk_size(self, value: int) -> None:
        if int(value) < 1:
            raise ValueError("point_chunk_size must be positive")
        self.config["point_chunk_size"] = int(value)
    
    @property
    def mask_chunk_size(self) -> int:
        return int(self.config.get("mask_chunk_size", 65536))
    
    @mask_chunk_size.setter
    def mask_chunk_size(self, value: int) -> None:
        if int(value) < 1:
            raise ValueError("mask_chunk_size must be positive")
        self.config["mask_chunk_size"] = int(value)
    
    @property
    def codec_block_factor(self) -> int:
        return int(self.config.get("codec_block_factor", 10))
    
    @property
    def codec_max_reseeds(self) -> int:
        return int(self.config.get("codec_max_reseeds", 64))
    
    @property
    def codec_separation_divisor(self) -> int:
        return int(self.config.get("codec_separation_divisor", 4))
    
    @property
    def codec_edit_separation_divisor(self) -> int:
        return int(self.config.get("codec_edit_separation_divisor", 8))
    
    @property
    def default_eps(self) -> float:
        return float(self.config.get("default_eps", 0.1))
    
    @default_eps.setter
    def default_eps(self, value: float) -> None:
        if float(value) <= 0:
            raise ValueError("default_eps must be positive")
        self.config["default_eps"] = float(value)
    
    @property
    def log_level(self) -> str:
        return str(self.config.get("log_level", "WARNING")).upper()
    
    @log_level.setter
    def log_level(self, value: str) -> None:
        self.config["log_level"] = value.upper()
    
    def validate(self) -> tuple[bool, list[str]]:
        """
        Check every setting for a usable value.
        
        Returns:
            Tuple of (is_valid, list_of_errors)
        """
        errors = []
        if self.l1_dimension_cap < 1 or self.l1_dimension_cap > 30:
            errors.append(f"l1_dimension_cap out of range: {self.l1_dimension_cap}")
        if self.threads < 0:
            errors.append(f"threads must be >= 0: {self.threads}")
        if self.point_chunk_size < 1 or self.mask_chunk_size < 1:
            errors.append("chunk sizes must be positive")
        if self.codec_block_factor < 1:
            errors.append("codec_block_factor must be positive")
        if self.codec_max_reseeds < 1:
            errors.append("codec_max_reseeds must be positive")
        if self.codec_separation_divisor < 1 or self.codec_edit_separation_divisor < 1:
            errors.append("codec separation divisors must be positive")
        if self.default_eps <= 0:
            errors.append("default_eps must be positive")
        if self.log_level not in ("DEBUG", "INFO", "WARNING", "ERROR"):
            errors.append(f"Unknown log_level: {self.log_level}")
        return len(errors) == 0, errors


# Singleton instance for easy access
_config_instance: Optional[ConfigManager] = None


def get_config() -> ConfigManager:
    """Get the global ConfigManager instance."""
    global _config_instance
    if _config_instance is None:
        _config_instance = ConfigManager()
    return _config_instance


def set_config(config: ConfigManager) -> None:
    """Replace the global ConfigManager (CLI --config, tests)."""
    global _config_instance
    _config_instance = config

"""
Logger module for OneCenter.
Provides a singleton logger for centralized application logging.
"""

from contextlib import contextmanager
from typing import Iterator, List
from datetime import datetime
import sys
import threading
import time


class Logger:
    """Singleton Logger class."""
    
    _instance = None
    
    LEVEL_DEBUG = "DEBUG"
    LEVEL_INFO = "INFO"
    LEVEL_WARNING = "WARNING"
    LEVEL_ERROR = "ERROR"
    
    _RANK = {LEVEL_DEBUG: 10, LEVEL_INFO: 20, LEVEL_WARNING: 30, LEVEL_ERROR: 40}
    
    def __new__(cls):
        if cls._instance is None:
            cls._instance = super(Logger, cls).__new__(cls)
            cls._instance._initialized = False
        return cls._instance
    
    def __init__(self):
        if self._initialized:
            return
            
        self._lock = threading.Lock()
        self.log_history: List[str] = []
        self.level = self.LEVEL_WARNING
        self.echo = True
        self._initialized = True
    
    def set_level(self, level: str):
        """Set the minimum level that is stored and echoed."""
        level = level.upper()
        if level not in self._RANK:
            raise ValueError(f"Unknown log level: {level}")
        self.level = level
    
    def is_enabled(self, level: str) -> bool:
        return self._RANK[level] >= self._RANK[self.level]
    
    def _emit(self, level: str, message: str):
        """Record one line in the history and echo it."""
        if not self.is_enabled(level):
            return
        timestamp = datetime.now().strftime("%H:%M:%S")
        formatted_log = f"[{timestamp}] [{level}] {message}"
        
        with self._lock:
            self.log_history.append(formatted_log)
            # Keep only last 1000 logs
            if len(self.log_history) > 1000:
                self.log_history.pop(0)
        
        # stdout carries results, so the echo goes to stderr
        if self.echo:
            print(formatted_log, file=sys.stderr)
    
    def info(self, message: str):
        self._emit(self.LEVEL_INFO, message)
        
    def warning(self, message: str):
        self._emit(self.LEVEL_WARNING, message)
        
    def error(self, message: str):
        self._emit(self.LEVEL_ERROR, message)
        
    def debug(self, message: str):
        self._emit(self.LEVEL_DEBUG, message)

    @contextmanager
    def timed(self, label: str, level: str = LEVEL_DEBUG) -> Iterator[None]:
        """Log the wall time of the with-block as "<label> took <s>s"."""
        start = time.perf_counter()
        try:
            yield
        finally:
            self._emit(level, f"{label} took {time.perf_counter() - start:.3f}s")

    def save_to_file(self, filepath: str):
        """Save log history to a file."""
        try:
            with open(filepath, 'w', encoding='utf-8') as f:
                with self._lock:
                    f.write("\n".join(self.log_history))
        except Exception as e:
            self.error(f"Failed to save log to file: {e}")
            
    def clear(self):
        """Clear log history."""
        with self._lock:
            self.log_history.clear()


# Global accessor
def get_logger() -> Logger:
    return Logger()

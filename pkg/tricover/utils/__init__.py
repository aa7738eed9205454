from .logger_config import setup_logging
from .parallel import parallel_map, worker_count


__all__ = ["parallel_map", "setup_logging", "worker_count"]

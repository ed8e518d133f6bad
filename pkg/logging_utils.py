from pathlib import Path
from loguru import logger
import os
import sys

# Base directories configuration
BASE_DIR = Path(__file__).parent
LOG_DIR = Path(os.environ.get("INDSET_LOG_DIR", BASE_DIR / "logs"))
LOG_DIR.mkdir(parents=True, exist_ok=True)

# Default log configuration
DEFAULT_ROTATION = "10 MB"
DEFAULT_RETENTION = "1 day"
DEFAULT_FORMAT = "{time:YYYY-MM-DD HH:mm:ss.SSS} | {level: <8} | {extra[run_id]: <8} | {module} | {message}"
CONSOLE_FORMAT = "{time:HH:mm:ss.SSS} | {level: <8} | {extra[run_id]: <8} | {module} | {message}"
CONSOLE_LEVEL = os.environ.get("INDSET_LOG_LEVEL", "INFO").upper()

# Clear default logger configuration
logger.remove()

_module_sinks: set[str] = set()


def configure_main_logger():
    """Configure the main application logger with file and console handlers"""
    log_file = LOG_DIR / "app.log"

    logger.add(
        str(log_file),
        rotation=DEFAULT_ROTATION,
        retention=DEFAULT_RETENTION,
        format=DEFAULT_FORMAT,
        enqueue=False,
    )

    # stdout belongs to the CLI results
    logger.add(
        sys.stderr,
        level=CONSOLE_LEVEL,
        format=CONSOLE_FORMAT,
    )

    return logger.bind(run_id="MAIN")


def get_module_logger(module_name: str):
    """
    Get a logger configured for a specific module

    Args:
        module_name: Name of the module (e.g., 'counting', 'sweep')

    Returns:
        A configured logger instance bound to the specified module
    """
    if module_name not in _module_sinks:
        log_file = LOG_DIR / f"{module_name}.log"
        logger.add(
            str(log_file),
            rotation=DEFAULT_ROTATION,
            retention=DEFAULT_RETENTION,
            format=DEFAULT_FORMAT,
            filter=lambda record: record["extra"].get("module") == module_name,
        )
        _module_sinks.add(module_name)

    return logger.bind(module=module_name, run_id="-----")


def get_run_logger(run_id: str):
    """Get a logger with the specified sweep run ID"""
    return logger.bind(run_id=run_id)


# Initialize main logger
main_logger = configure_main_logger()

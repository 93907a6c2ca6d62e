"""
/***************************************************************************
 Tool Utils
                              -------------------
 Logging and path helpers shared by the library and the command line.
 ***************************************************************************/
"""

import glob
import logging
import os
from datetime import datetime

logger = logging.getLogger("diagmon")


class ToolUtils:

    TOOL_NAME = "diagmon"
    TOOL_ID = "diagmon"

    logsDirectory = ""
    currentLogFile = None
    _file_handler = None
    _stream_handler = None

    @staticmethod
    def package_root_path():
        """
        Returns the root path of the diagmon package
        """
        return os.path.abspath(os.path.join(os.path.dirname(__file__), os.pardir))

    @staticmethod
    def fixtures_path():
        """Returns the directory holding the shipped table fixtures."""
        return os.path.join(ToolUtils.package_root_path(), "fixtures")

    @staticmethod
    def default_config_path():
        return os.path.join(ToolUtils.package_root_path(), "default_config.yaml")

    @staticmethod
    def init_logger(logs_directory=None):
        if logs_directory is not None:
            ToolUtils.logsDirectory = logs_directory
        else:
            ToolUtils.logsDirectory = os.path.join(os.getcwd(), "logs")

        try:
            os.makedirs(ToolUtils.logsDirectory, exist_ok=True)
        except OSError:
            logger.error(f"Can't create log files directory '{ToolUtils.logsDirectory}'.")
            return

        # One log file per session
        timestamp = datetime.now().strftime("%Y-%m-%d_%H-%M-%S")
        logfile = os.path.join(ToolUtils.logsDirectory, f"{ToolUtils.TOOL_ID}_{timestamp}.log")
        ToolUtils.currentLogFile = logfile

        ToolUtils._cleanup_old_logs(ToolUtils.logsDirectory, keep=10)

        fileHandler = logging.FileHandler(logfile, mode="w")
        fileHandler.setLevel(logging.DEBUG)
        fileHandler.setFormatter(logging.Formatter("%(asctime)s %(levelname)-7s %(message)s"))

        # basicConfig is a no-op once the root logger has handlers
        root_logger = logging.getLogger()
        root_logger.setLevel(logging.DEBUG)
        root_logger.addHandler(fileHandler)
        ToolUtils._file_handler = fileHandler

    @staticmethod
    def init_console(verbose: bool = False):
        """Attach a stderr handler; DEBUG when *verbose*, WARNING otherwise."""
        if ToolUtils._stream_handler is not None:
            return
        handler = logging.StreamHandler()
        handler.setLevel(logging.DEBUG if verbose else logging.WARNING)
        handler.setFormatter(logging.Formatter("%(levelname)-7s %(message)s"))
        logger.addHandler(handler)
        if verbose:
            logger.setLevel(logging.DEBUG)
        ToolUtils._stream_handler = handler

    @staticmethod
    def shutdown_logger():
        """Close and remove the handlers installed by init_logger and init_console."""
        root_logger = logging.getLogger()
        handler = ToolUtils._file_handler
        if handler is not None:
            try:
                root_logger.removeHandler(handler)
                handler.close()
            except Exception:
                pass
            ToolUtils._file_handler = None

        handler = ToolUtils._stream_handler
        if handler is not None:
            logger.removeHandler(handler)
            ToolUtils._stream_handler = None

    @staticmethod
    def _cleanup_old_logs(logs_dir: str, keep: int = 10):
        """Remove old log files, keeping only the most recent ones.

        Args:
            logs_dir: Directory containing log files
            keep: Number of most recent log files to keep
        """
        log_files = glob.glob(os.path.join(logs_dir, f"{ToolUtils.TOOL_ID}_*.log"))
        log_files.sort(key=os.path.getmtime, reverse=True)
        for old_file in log_files[keep:]:
            try:
                os.remove(old_file)
            except OSError:
                pass  # Ignore errors when removing old logs

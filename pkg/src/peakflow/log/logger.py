"""
Module for custom logging.

This module defines the CustomLogger class, which sets up a logging mechanism for solver
runs and benchmark sweeps. It creates log directories and attaches a file handler writing
timestamped records. Provides a logger instance.
"""

import os
import logging
import datetime
from ..utils.utils import create_directory, ensure_parent_directory

LOG_FORMAT = '%(asctime)s - %(levelname)s - %(message)s'


class CustomLogger():
    """
    Custom logger for managing solver and benchmark logs.

    The CustomLogger class attaches a file handler to the ``peakflow`` logger.
    If no log file path is provided, it creates a log directory structure
    based on the current working directory and the process ID, and generates
    a log file name that includes the log name and a timestamp.
    """

    def __init__(self, log_name, log_file_path=None, level=logging.INFO):
        """
        Initialize a CustomLogger instance.

        Args:
            log_name (str): The name to be used in the log file name.
            log_file_path (str, optional): The full path to the log file. If None,
                                           a default directory structure is created.
                                           Defaults to None.
            level (int, optional): Logging level of the handler and logger.
                                   Defaults to logging.INFO.
        """
        self.log_name = log_name
        self.__pid = os.getpid()
        self.__source_directory = os.path.abspath(os.getcwd())
        if log_file_path is None:
            self.__log_file_path = self.init_directory()
        else:
            ensure_parent_directory(log_file_path)
            self.__log_file_path = log_file_path

        self.logger = logging.getLogger("peakflow")
        self.logger.setLevel(level)
        if not self.__has_handler():
            handler = logging.FileHandler(self.__log_file_path, mode='a', encoding="utf-8")
            handler.setFormatter(logging.Formatter(LOG_FORMAT))
            self.logger.addHandler(handler)

    @property
    def log_file_path(self):
        """
        Returns:
            str: The path of the file this logger writes to.
        """
        return self.__log_file_path

    def __has_handler(self):
        """
        Private method: __has_handler()
        Checks whether a file handler for this log file is already attached,
        so repeated construction does not duplicate records.
        """
        target = os.path.abspath(self.__log_file_path)
        for handler in self.logger.handlers:
            if isinstance(handler, logging.FileHandler) and handler.baseFilename == target:
                return True
        return False

    def init_directory(self):
        """
        Initialize and return the log file path.

        Creates a "logs" directory in the current working directory
        and a subdirectory named after the current process ID.
        Constructs a log file name using the log name
        and the current date and time.

        Returns:
            str: The full path to the generated log file.
        """
        log_directory_path = os.path.join(self.__source_directory, "logs")
        create_directory(log_directory_path)
        active_directory_path = os.path.join(log_directory_path, str(self.__pid))
        create_directory(active_directory_path)
        log_file_path = os.path.join(
            active_directory_path,
            "{log_name}_{date:%Y_%m_%d_%H_%M_%S}.log".format(
                log_name=self.log_name, date=datetime.datetime.now()
            )
        )
        return log_file_path

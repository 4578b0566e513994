"""
Module: loggable

This module defines the Loggable base class, which gives solvers and the benchmark
harness the same optional-logger behaviour: a validated ``logger`` property,
``logger_is_set()`` for the wrappers, and a message helper.
"""

import logging
from .logger import CustomLogger


class Loggable():
    """
    Loggable

    Base class for objects that optionally log through a ``logging.Logger``.
    """

    def __init__(self, logger=False, log_name="peakflow"):
        """
        Loggable Class Constructor

        Arguments:
            logger (logging.Logger or bool, optional): If False, no logger is used.
                If True, a CustomLogger is instantiated. Alternatively, a user-defined
                logger can be provided. Defaults to False.
            log_name (str, optional): Log file name used when a CustomLogger is created.
        """
        self.__log_name = log_name
        self.logger = logger

    @property
    def logger(self):
        """Gets the logger.

        Returns:
            logging.Logger or None: The current logger.
        """
        return self.__logger

    @logger.setter
    def logger(self, logger):
        """Sets the logger.

        Args:
            logger (logging.Logger or bool): If True, initializes the default CustomLogger.
                If False, no logger is used. If a logging.Logger instance is provided,
                it is used directly.

        Raises:
            TypeError: If logger is not a logging.Logger instance or a bool.
        """
        if logger is None or logger is False:
            self.__logger = None
        elif isinstance(logger, logging.Logger):
            self.__logger = logger
        elif logger is True:
            self.__logger = CustomLogger(self.__log_name).logger
        else:
            raise TypeError("Logger must be a logging.Logger or a bool")

    def logger_is_set(self):
        """Checks if a logger is set.

        Returns:
            bool: True if a logger is initialized, False otherwise.
        """
        return self.__logger is not None

    def display_message(self, message, level=logging.INFO):
        """
        Public method: display_message()
        Logs the message at ``level`` when a logger is set.

        Arguments:
            message (str): The message to log.
            level (int, optional): Logging level. Defaults to logging.INFO.
        """
        if self.logger_is_set():
            self.__logger.log(level, message)

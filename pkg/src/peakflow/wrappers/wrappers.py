"""
Module: wrappers

This module provides decorators which aid with enhanced logging capabilities.
It includes a timer decorator to measure and log the execution time of methods,
and a log_error decorator that catches exceptions during method execution,
logs error details (such as the function name and line number), and re-raises
a Peakflow exception carrying a custom error message.
"""

from functools import wraps
import time
import traceback

from ..exceptions.exception import PeakflowError


def timer(func):
    """
    Decorator that logs the execution time of the decorated method.
    Execution time is computed by measuring ``time.perf_counter`` before and after the call.
    * only compatible with class methods whose instance exposes logger_is_set() and logger.

    Arguments:
        func (function): The function whose execution time will be measured.

    Returns:
        function: The wrapped function with execution time logging.
    """
    @wraps(func)
    def wrap(*args, **kwargs):
        start = time.perf_counter()
        result = func(*args, **kwargs)
        end = time.perf_counter()
        if args[0].logger_is_set():
            args[0].logger.info("%s took: %s sec", func.__name__, end - start)
        return result
    return wrap


def log_error(err_msg, log_only=False, exception=PeakflowError):
    """
    Decorator factory that returns a decorator to log errors during method execution.

    This decorator wraps the target method in a try-except block.
    If an exception occurs, it extracts the location of the error and logs the error
    using the object's logger if it is set.
    Peakflow exceptions are re-raised untouched, since they already describe the failure;
    any other exception is re-raised as ``exception(err_msg)`` chained to the original.

    Arguments:
        err_msg (string):
            Custom error message to be used when re-raising the exception.
        log_only (bool, optional):
            False (Default): re-raises the exception.
            True: only logs the error without re-raising the exception
            (only honoured when a logger is set).
        exception (type, optional):
            Exception class used for wrapping foreign exceptions. Defaults to PeakflowError.

    Returns:
        function:
            Decorator that can be applied to a method to add error logging.
    """
    def log_error_inner(func):
        @wraps(func)
        def wrap(*args, **kwargs):
            try:
                return func(*args, **kwargs)
            except Exception as e:
                tb_last_frame = traceback.extract_tb(e.__traceback__)[-1]
                _, _, function_name, code_line = tb_last_frame
                if args[0].logger_is_set():
                    raised_msg = f"Error Occurred at: {function_name}; On line: {code_line};"
                    args[0].logger.error(raised_msg)
                    args[0].logger.error("Exception %s", e)
                    if log_only:
                        return None
                if isinstance(e, PeakflowError):
                    raise
                raise exception(err_msg) from e
        return wrap
    return log_error_inner

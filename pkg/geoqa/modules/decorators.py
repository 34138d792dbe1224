from functools import wraps
from logging import getLogger
from typing import Callable

from geoqa.modules.error import GeoQAError

logger = getLogger('geoqa.pipeline')

def stage(name: str):
    """Tag unexpected failures raised inside the wrapped step with the pipeline stage `name`."""

    def decorator(func: Callable):
        @wraps(func)
        def wrapper(*args, **kwargs):
            try:
                return func(*args, **kwargs)
            except GeoQAError:
                raise
            except (ValueError, KeyError, IndexError, TypeError) as e:
                logger.error(f'Unexpected failure in {name}: {e}')
                raise GeoQAError(name, str(e)) from e

        return wrapper
    return decorator

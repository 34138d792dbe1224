from logging import getLogger
from logging.config import dictConfig

from .config import LOGGER_CONFIG_JSON

dictConfig(LOGGER_CONFIG_JSON)

version = '0.1.0'
logger = getLogger('geoqa')

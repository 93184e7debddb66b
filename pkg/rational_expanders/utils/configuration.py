import configparser
import os

from plico.utils.logger import Logger

from rational_expanders.utils.caps import Caps, HarnessDefaults
from rational_expanders.utils.exceptions import ConfigurationException


_logger = Logger.of('configuration')


class ConfigurationKey(object):
    CAPS = 'caps'
    CLASSIFY = 'classify'
    HARNESS = 'harness'

    MAX_UNIVARIATE_DEGREE = 'max_univariate_degree'
    MAX_BIVARIATE_UNKNOWNS = 'max_bivariate_unknowns'
    CLASSIFY_MAX_DEGREE = 'classify_max_degree'
    G_DEGREE = 'g_degree'
    L_DEGREE = 'l_degree'
    MODE = 'mode'
    WORKERS = 'workers'
    SEED = 'seed'


_DEFAULTS = {
    ConfigurationKey.CAPS: {
        ConfigurationKey.MAX_UNIVARIATE_DEGREE: Caps.MAX_UNIVARIATE_DEGREE,
        ConfigurationKey.MAX_BIVARIATE_UNKNOWNS: Caps.MAX_BIVARIATE_UNKNOWNS,
        ConfigurationKey.CLASSIFY_MAX_DEGREE: Caps.CLASSIFY_MAX_DEGREE,
    },
    ConfigurationKey.CLASSIFY: {
        ConfigurationKey.G_DEGREE: Caps.CLASSIFY_G_DEGREE,
        ConfigurationKey.L_DEGREE: Caps.CLASSIFY_L_DEGREE,
        ConfigurationKey.MODE: 'real',
    },
    ConfigurationKey.HARNESS: {
        ConfigurationKey.WORKERS: HarnessDefaults.WORKERS,
        ConfigurationKey.SEED: 0,
    },
}


def packaged_config_file_path():
    return os.path.join(os.path.dirname(os.path.dirname(__file__)),
                        'conf', 'rational_expanders.conf')


class ExpanderConfiguration(object):
    '''
    Typed view of the ini configuration, falling back to the built-in
    defaults for missing keys. Unknown sections or keys are rejected.
    '''

    def __init__(self):
        self._parser = configparser.ConfigParser()

    @classmethod
    def load(cls, *paths):
        '''
        Read the given files in order, later ones overriding earlier
        ones; None and missing optional files are skipped
        '''
        configuration = cls()
        for path in paths:
            if path is None:
                continue
            configuration.read(path)
        return configuration

    def read(self, path):
        if not os.path.isfile(path):
            raise ConfigurationException("no configuration file %s" % path)
        try:
            self._parser.read(path)
        except configparser.Error as e:
            raise ConfigurationException("%s: %s" % (path, e))
        self._check()
        _logger.debug("configuration read from %s" % path)

    def read_string(self, text):
        try:
            self._parser.read_string(text)
        except configparser.Error as e:
            raise ConfigurationException(str(e))
        self._check()

    def _check(self):
        for section in self._parser.sections():
            if section not in _DEFAULTS:
                raise ConfigurationException(
                    "unknown configuration section [%s]" % section)
            for key in self._parser.options(section):
                if key not in _DEFAULTS[section]:
                    raise ConfigurationException(
                        "unknown key '%s' in [%s]" % (key, section))

    def _get_int(self, section, key):
        if not self._parser.has_option(section, key):
            return _DEFAULTS[section][key]
        try:
            return self._parser.getint(section, key)
        except ValueError:
            raise ConfigurationException("[%s] %s must be an integer" % (
                section, key))

    def max_univariate_degree(self):
        return self._get_int(ConfigurationKey.CAPS,
                             ConfigurationKey.MAX_UNIVARIATE_DEGREE)

    def max_bivariate_unknowns(self):
        return self._get_int(ConfigurationKey.CAPS,
                             ConfigurationKey.MAX_BIVARIATE_UNKNOWNS)

    def classify_max_degree(self):
        return self._get_int(ConfigurationKey.CAPS,
                             ConfigurationKey.CLASSIFY_MAX_DEGREE)

    def g_degree(self):
        return self._get_int(ConfigurationKey.CLASSIFY,
                             ConfigurationKey.G_DEGREE)

    def l_degree(self):
        return self._get_int(ConfigurationKey.CLASSIFY,
                             ConfigurationKey.L_DEGREE)

    def mode(self):
        mode = self._parser.get(
            ConfigurationKey.CLASSIFY, ConfigurationKey.MODE,
            fallback=_DEFAULTS[ConfigurationKey.CLASSIFY][
                ConfigurationKey.MODE]).strip().lower()
        if mode not in ('real', 'complex'):
            raise ConfigurationException("mode must be real or complex")
        return mode

    def workers(self):
        return self._get_int(ConfigurationKey.HARNESS,
                             ConfigurationKey.WORKERS)

    def seed(self):
        return self._get_int(ConfigurationKey.HARNESS, ConfigurationKey.SEED)

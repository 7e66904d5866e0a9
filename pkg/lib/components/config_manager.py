import os
import json
import copy
import threading

from lib import paths

# Ogni sezione ha i suoi valori predefiniti: un file di impostazioni
# mancante o incompleto viene completato chiave per chiave, così ogni
# comando parte anche senza aver mai eseguito `settings --init`.
DEFAULT_SECTIONS = {
    "bounds": {
        "C": "10",
        # None: q vale n, il numero di rette della configurazione
        "q": None,
        "precision_bits": 64,
    },
    "flecnode": {
        "max_degree": 6,
    },
    "projection": {
        "max_retries": 8,
        "sample_triples": 50,
    },
    "lemmas": {
        "probe_lines": 100,
        "probe_seed": 0,
    },
    "lab": {
        "default_seed": 1,
        "output_dir": "./outputs",
    },
    "logging": {
        "level": "INFO",
    },
}


class SettingsError(ValueError):
    pass


class ConfigManager:
    """Loads, type-checks and saves the ruledLab settings file."""

    def __init__(self, logger, config_path=None, schema_path=None):
        self.logger = logger
        self.config_path = config_path or paths.SETTINGS_FILE
        self.schema_path = schema_path or paths.SCHEMA_FILE
        self.config_lock = threading.RLock()
        self.schema = self._load_schema()
        self.config = {}
        self.load_config()

    def _load_schema(self):
        try:
            with open(self.schema_path, "r") as f:
                return json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            self.logger.warning(f"Settings schema not available ({e}); values are not type-checked.")
            return {}

    def load_config(self):
        """Loads the settings file, completing it with the default sections."""
        with self.config_lock:
            if not os.path.exists(self.config_path):
                self.logger.info(f"No settings file at {self.config_path}, using the defaults.")
                self.config = {}
            else:
                self.logger.info(f"Loading settings from {self.config_path}")
                try:
                    with open(self.config_path, "r") as f:
                        self.config = json.load(f)
                except (json.JSONDecodeError, IOError) as e:
                    raise SettingsError(f"Failed to load or parse settings {self.config_path}: {e}") from None
                if not isinstance(self.config, dict):
                    raise SettingsError(f"Settings file {self.config_path} does not hold a JSON object")
            self._apply_default_sections()
            self._check_types()

    def _apply_default_sections(self):
        """Aggiunge le sezioni (e le chiavi) mancanti."""
        for section, defaults in DEFAULT_SECTIONS.items():
            current = self.config.setdefault(section, {})
            if not isinstance(current, dict):
                self.logger.warning(f"Section '{section}' is not an object, replacing it with the defaults.")
                current = self.config[section] = {}
            for key, value in defaults.items():
                current.setdefault(key, copy.deepcopy(value))

    def _valid(self, key, value):
        rule = self.schema.get(key)
        if rule is None or value is None:
            return True
        kind = rule.get("type")
        if kind == "number":
            return isinstance(value, (int, float)) and not isinstance(value, bool)
        if kind == "boolean":
            return isinstance(value, bool)
        if kind == "text":
            return isinstance(value, str)
        if kind == "select":
            return value in rule.get("options", [])
        return True

    def _check_types(self):
        for section, values in self.config.items():
            if not isinstance(values, dict):
                continue
            for key, value in values.items():
                if self._valid(key, value):
                    continue
                default = DEFAULT_SECTIONS.get(section, {}).get(key)
                self.logger.warning(f"Setting {section}.{key}={value!r} has the wrong type, using {default!r}.")
                values[key] = copy.deepcopy(default)

    def save_config(self, new_config=None):
        """Writes the settings (the current ones by default) and reloads them."""
        self.logger.info(f"Saving settings to {self.config_path}...")
        with self.config_lock:
            try:
                directory = os.path.dirname(self.config_path)
                if directory:
                    os.makedirs(directory, exist_ok=True)
                with open(self.config_path, "w") as f:
                    json.dump(new_config if new_config is not None else self.config, f, indent=2)
                self.load_config()
                return True
            except (OSError, TypeError, SettingsError) as e:
                self.logger.error(f"Failed to save settings: {e}", exc_info=True)
                return False

    def get(self, section, default=None):
        return self.config.get(section, default)

    def value(self, section, key):
        return self.config.get(section, {}).get(key, DEFAULT_SECTIONS.get(section, {}).get(key))

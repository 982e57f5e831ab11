import os
import unittest
from unittest.mock import patch

from modules.core.services import settings as settings_module
from modules.core.services.errors import ConfigurationError
from modules.core.services.settings import (
    DEFAULT_CERTIFICATE_BOUND,
    DEFAULT_ENUMERATION_CAP,
    ENV_CAP,
    ENV_DEV_MODE,
    Settings,
    resolve_cap,
)


class TestSettings(unittest.TestCase):
    def setUp(self):
        # Patch QSettings to avoid touching the user's stored preferences
        self.qsettings_patcher = patch("modules.core.services.settings.QSettings")
        self.mock_qsettings = self.qsettings_patcher.start()
        self.mock_instance = self.mock_qsettings.return_value

        self.stored = {}

        def get_value(key, default=None, type=None):
            return self.stored.get(key, default)

        self.mock_instance.value.side_effect = get_value

        self.env_patcher = patch.dict(os.environ, {}, clear=False)
        self.env_patcher.start()
        os.environ.pop(ENV_CAP, None)
        os.environ.pop(ENV_DEV_MODE, None)
        settings_module._instance = None

    def tearDown(self):
        settings_module._instance = None
        self.env_patcher.stop()
        self.qsettings_patcher.stop()

    def test_defaults(self):
        s = Settings()
        self.assertEqual(s.enumeration_cap, DEFAULT_ENUMERATION_CAP)
        self.assertEqual(s.certificate_order_bound, DEFAULT_CERTIFICATE_BOUND)
        self.assertFalse(s.dev_mode)
        self.mock_qsettings.assert_called_with("FibTile", "FibTile")

    def test_env_var_overrides_stored_cap(self):
        self.stored["enumeration/cap"] = 50
        with patch.dict(os.environ, {ENV_CAP: "123"}):
            self.assertEqual(Settings().enumeration_cap, 123)
        self.assertEqual(Settings().enumeration_cap, 50)

    def test_malformed_env_cap_names_variable(self):
        for raw in ("lots", "0", "-4"):
            with patch.dict(os.environ, {ENV_CAP: raw}):
                with self.assertRaises(ConfigurationError) as ctx:
                    Settings().enumeration_cap
                self.assertIn(ENV_CAP, str(ctx.exception))

    def test_bad_stored_cap_falls_back_to_default(self):
        self.stored["enumeration/cap"] = "garbage"
        self.assertEqual(Settings().enumeration_cap, DEFAULT_ENUMERATION_CAP)

    def test_cap_setter_rejects_non_positive(self):
        s = Settings()
        with self.assertRaises(ConfigurationError):
            s.enumeration_cap = 0
        s.enumeration_cap = 77
        self.mock_instance.setValue.assert_called_with("enumeration/cap", 77)

    def test_dev_mode_from_env(self):
        with patch.dict(os.environ, {ENV_DEV_MODE: "yes"}):
            self.assertTrue(Settings().dev_mode)
        with patch.dict(os.environ, {ENV_DEV_MODE: "off"}):
            self.assertFalse(Settings().dev_mode)

    def test_resolve_cap(self):
        self.assertEqual(resolve_cap(5), 5)
        with patch.dict(os.environ, {ENV_CAP: "9"}):
            self.assertEqual(resolve_cap(None), 9)
        with self.assertRaises(ConfigurationError):
            resolve_cap(0)


if __name__ == "__main__":
    unittest.main()

import os

from ..utils.tool_utils import ToolUtils, logger
from .engine_config import EngineConfig, LimitsConfig, OutputConfig

FORMAT_ENV_VAR = "DIAGMON_FORMAT"


class Settings:
    """Singleton holding the engine configuration.

    The defaults are read once from ``default_config.yaml`` next to the
    package; the ``DIAGMON_FORMAT`` environment variable replaces the default
    output format.

    Usage::

        from diagmon.core.settings import Settings

        cap = Settings().limits.max_elements
        Settings.override(max_elements=10_000)

    A custom *config_path* can be passed on first instantiation. Subsequent
    calls ignore the argument and return the existing singleton; call
    :meth:`reset` to load again.
    """

    instance = None

    def __new__(cls, config_path=None):
        if cls.instance is not None:
            return cls.instance

        path = config_path or ToolUtils.default_config_path()
        config = EngineConfig.from_yaml(path)

        env_format = os.environ.get(FORMAT_ENV_VAR)
        if env_format:
            config = EngineConfig(limits=config.limits, output=OutputConfig(format=env_format))
            logger.debug(f"Output format '{env_format}' taken from {FORMAT_ENV_VAR}")

        instance = super().__new__(cls)
        instance.config = config
        cls.instance = instance
        return instance

    @property
    def limits(self) -> LimitsConfig:
        return self.config.limits

    @property
    def output_format(self) -> str:
        return self.config.output.format

    @staticmethod
    def override(**limits) -> None:
        """Replace limit values, ignoring keys whose value is None."""
        updates = {key: value for key, value in limits.items() if value is not None}
        if not updates:
            return
        settings = Settings()
        merged = {**settings.config.limits.model_dump(), **updates}
        settings.config = settings.config.model_copy(update={"limits": LimitsConfig(**merged)})
        logger.debug(f"Limits overridden: {updates}")

    @staticmethod
    def reset() -> None:
        Settings.instance = None

# coding=utf-8

"""Application utilities."""

import random
from contextlib import contextmanager
from typing import Any, Dict, Iterator, Optional

from django.conf import settings
from django.test.utils import override_settings

from tractrank import constants
from tractrank.exceptions import GuardConfigurationError, GuardExceeded


def get_setting(name: str, default: Any) -> Any:
    """Read a setting, falling back to the default outside a configured project.

    :param name: The setting name.
    :param default: The value to use when the setting is missing.
    :return: The setting value.
    """
    if not settings.configured:
        return default
    return getattr(settings, name, default)


def parse_guards(text: Optional[str]) -> Dict[str, int]:
    """Parse a `name=value,name=value` guard string.

    :param text: The raw guard string, usually from the environment.
    :return: A mapping of guard names to limits.
    """
    parsed = {}
    if not text or not text.strip():
        return parsed
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        name, separator, value = item.partition("=")
        if not separator:
            raise GuardConfigurationError(f"Guard '{item}' must be 'name=value'.")
        parsed[name.strip()] = value.strip()
    return validate_guards(parsed)


def validate_guards(raw: Dict[str, Any]) -> Dict[str, int]:
    """Check guard names and coerce limits to positive integers."""
    clean = {}
    for name, value in raw.items():
        if name not in constants.DEFAULT_GUARDS:
            raise GuardConfigurationError(f"Unknown guard '{name}'.")
        try:
            limit = int(value)
        except (TypeError, ValueError) as error:
            raise GuardConfigurationError(
                f"Guard '{name}' must be an integer, got '{value}'."
            ) from error
        if limit <= 0:
            raise GuardConfigurationError(f"Guard '{name}' must be positive.")
        clean[name] = limit
    return clean


def get_guards() -> Dict[str, int]:
    """Return the effective guard table."""
    guards = dict(constants.DEFAULT_GUARDS)
    guards.update(
        validate_guards(
            get_setting(
                constants.SETTING_TRACTRANK_GUARDS,
                constants.DEFAULT_TRACTRANK_GUARDS,
            )
            or {}
        )
    )
    return guards


def get_guard(name: str) -> int:
    """Return the limit of a single guard."""
    return get_guards()[name]


def check_guard(name: str, value: int) -> None:
    """Raise `GuardExceeded` if `value` is above the limit of guard `name`."""
    limit = get_guard(name)
    if value > limit:
        raise GuardExceeded(name, limit, value)


def default_seed() -> int:
    """The seed used by randomized constructions when none is given."""
    return int(
        get_setting(
            constants.SETTING_TRACTRANK_SEED, constants.DEFAULT_TRACTRANK_SEED
        )
    )


def matroidal_mode() -> str:
    """Default mode of the matroidal rank over the Krasner hyperfield."""
    return get_setting(
        constants.SETTING_TRACTRANK_MATROIDAL_MODE,
        constants.DEFAULT_TRACTRANK_MATROIDAL_MODE,
    )


def random_source(seed: Optional[int] = None) -> random.Random:
    """A private random generator, seeded from the settings by default."""
    return random.Random(default_seed() if seed is None else seed)


@contextmanager
def settings_overrides(
    guards: Optional[Dict[str, int]] = None, seed: Optional[int] = None
) -> Iterator[None]:
    """Apply guard and seed overrides for the duration of a block.

    Guards are merged over the configured ones. Django's `override_settings`
    does the swapping; it lives in `django.test.utils` but only touches the
    settings object and its change signal. Outside a configured project the
    block runs unchanged.

    :param guards: Guard limits to apply on top of `TRACTRANK_GUARDS`.
    :param seed: A replacement for `TRACTRANK_SEED`.
    """
    overrides: Dict[str, Any] = {}
    if guards:
        current = get_setting(constants.SETTING_TRACTRANK_GUARDS, {}) or {}
        overrides[constants.SETTING_TRACTRANK_GUARDS] = {**current, **guards}
    if seed is not None:
        overrides[constants.SETTING_TRACTRANK_SEED] = seed
    if not overrides or not settings.configured:
        yield
        return
    with override_settings(**overrides):
        yield

from .core import settings

__ALL__ = (
    'settings',
)

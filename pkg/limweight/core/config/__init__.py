from .settings import settings

__ALL__ = (
    'settings',
)

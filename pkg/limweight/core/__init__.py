# Core utilities and shared components for limweight
from .config import settings

__ALL__ = (
    'settings',
)

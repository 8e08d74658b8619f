from app.schemas.base import (
    BaseSchema,
    DomainSchema,
)


__all__ = [
    "BaseSchema",
    "DomainSchema",
]

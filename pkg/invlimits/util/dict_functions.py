from datetime import datetime
from enum import Enum

import numpy as np
from pydantic import BaseModel


def serialize(d, stringify=False):
    """
    Serializes an object to json. Currently it can
    convert datetime to isoformat, numpy scalars and arrays,
    pydantic models and any of the invlimits.models, which
    holds an :attr:`to_dict` function.
    """
    if isinstance(d, dict):
        return {str(k): __convert(v, stringify=stringify) for k, v in d.items()}
    elif isinstance(d, (list, tuple)):
        return [__convert(v, stringify=stringify) for v in d]
    elif isinstance(d, BaseModel):
        return serialize(d.model_dump(mode='json'), stringify=stringify)
    elif hasattr(d, 'to_dict'):
        return serialize(d.to_dict(), stringify=stringify)
    else:
        return __convert(d, stringify=stringify)


def __convert(value, stringify=False):
    if isinstance(value, (dict, list, tuple, BaseModel)):
        return serialize(value, stringify=stringify)
    elif hasattr(value, 'to_dict'):
        return __convert(value.to_dict(), stringify=stringify)
    elif isinstance(value, datetime):
        return value.isoformat()
    elif isinstance(value, Enum):
        return value.value
    elif isinstance(value, np.ndarray):
        return value.tolist()
    elif isinstance(value, np.generic):
        return value.item()
    else:
        if stringify:
            return str(value)
        else:
            return value

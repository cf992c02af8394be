"""
Pydantic models of the JSON input files.

The models only validate the *shape* of the files. All mathematical
invariants (directedness, coherence, group axioms) are checked by the
loaders in :mod:`invlimits.api`.

"""
from typing import Annotated, Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, Field, TypeAdapter, ValidationError, field_validator

from invlimits.util.exceptions import MalformedInput


class FinitePosetFile(BaseModel):
    kind: Literal['finite']
    elements: List[str] = Field(min_length=1)
    leq: List[Tuple[str, str]] = []

    @field_validator('elements')
    @classmethod
    def nonempty_ids(cls, elements: List[str]) -> List[str]:
        if any(e == '' for e in elements):
            raise ValueError('element ids have to be nonempty strings')
        return elements


class BuiltinPosetFile(BaseModel):
    kind: Literal['builtin']
    name: Literal['powerset', 'chain', 'omega']
    param: int = Field(ge=0)


PosetFile = Annotated[Union[FinitePosetFile, BuiltinPosetFile], Field(discriminator='kind')]


class SystemFile(BaseModel):
    poset: PosetFile
    fibers: Dict[str, List[str]]
    maps: Dict[str, Dict[str, str]] = {}


class TreeFile(BaseModel):
    nodes: List[str] = Field(min_length=1)
    parent: Dict[str, str] = {}


class GroupTable(BaseModel):
    elements: List[str] = Field(min_length=1)
    mul: List[List[int]]
    id: int = Field(ge=0)


class GroupSystemFile(BaseModel):
    poset: PosetFile
    groups: Dict[str, GroupTable]
    homs: Dict[str, List[int]] = {}


class ElementFile(BaseModel):
    system: Optional[str] = None
    variant: Literal['free', 'abelian'] = 'free'
    words: Dict[str, str]


def split_pair_key(key: str) -> Tuple[str, str]:
    """
    Split a ``'p<q'`` key of the ``maps`` and ``homs`` sections.
    """
    parts = key.split('<')
    if len(parts) != 2 or parts[0] == '' or parts[1] == '':
        raise MalformedInput(f"'{key}' is not a valid pair key. Use 'p<q'.")
    return parts[0], parts[1]


def validate(model, data: Union[dict, BaseModel]):
    """
    Validate ``data`` against the given model (or annotated union) and
    turn pydantic errors into :class:`MalformedInput`.
    """
    if isinstance(data, BaseModel):
        return data
    try:
        return TypeAdapter(model).validate_python(data)
    except ValidationError as e:
        raise MalformedInput(str(e))

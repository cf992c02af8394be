"""IO API

Every loader of :mod:`invlimits.api` accepts either an already parsed
dictionary, a file name or the JSON content itself. The functions
in this module resolve these cases.
"""
from typing import Union
import os
import io
import json
import hashlib

from invlimits.util.exceptions import MalformedInput


def from_json(file_name_or_content: Union[str, dict]) -> dict:
    """
    Return the parsed JSON object. A dict is returned unchanged, an
    existing path is read, any other string is parsed as JSON content.
    """
    if isinstance(file_name_or_content, dict):
        return file_name_or_content

    # check filename
    if not os.path.exists(file_name_or_content):
        # file does not exist, thus content is assumed
        if not file_name_or_content.lstrip().startswith('{'):
            raise FileNotFoundError(f"No such file: '{file_name_or_content}'")
        fs = io.StringIO()
        fs.write(file_name_or_content)
        fs.seek(0)
        try:
            return json.load(fs)
        except json.JSONDecodeError as e:
            raise MalformedInput(f"Invalid JSON content: {str(e)}")

    # this is alread a file path
    with open(file_name_or_content, 'r', encoding='utf-8') as js:
        try:
            return json.load(js)
        except json.JSONDecodeError as e:
            raise MalformedInput(f"Invalid JSON in {file_name_or_content}: {str(e)}")


def digest(path: str) -> str:
    """SHA-256 hex digest of the file at path."""
    h = hashlib.sha256()
    with open(path, 'rb') as f:
        for chunk in iter(lambda: f.read(65536), b''):
            h.update(chunk)
    return h.hexdigest()


def file_kind(data: dict) -> str:
    """
    Guess the kind of an input file from its top-level keys.
    Returns one of ``'poset'``, ``'system'``, ``'groups'``, ``'element'``
    or ``'tree'``.
    """
    if 'kind' in data:
        return 'poset'
    if 'poset' in data and 'groups' in data:
        return 'groups'
    if 'poset' in data and 'fibers' in data:
        return 'system'
    if 'words' in data:
        return 'element'
    if 'nodes' in data:
        return 'tree'
    raise MalformedInput(f"Cannot infer the file kind from the keys {sorted(data.keys())}.")

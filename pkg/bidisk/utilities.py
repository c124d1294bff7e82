"""Contains various file handling helper functions."""

import builtins
import json
from requests import get
from .base import DEFAULT_SEED, ParseError
from .maps import load_map, VALIDATION_SAMPLES

def open_map(path, *args, **kwargs):
    """Opens a map-spec file at a given path and builds the map it describes.

    For example:

        >>> bidisk.open_map('/path/to/map.json', samples=1024)

    This will read map.json and check the resulting map on a sample of 1024
    points.

    :param str path: the location of the file.
    :param int samples: the size of the validation sample.
    :param int seed: the sampling seed.
    :rtype: ``ScalarMap``"""

    with builtins.open(path) as f: filestring = f.read()
    return parse_map_string(filestring, path, *args, **kwargs)


def fetch_map(url, *args, **kwargs):
    """Fetches a map-spec file from a remote location via HTTP.

    :param str url: the location of the file.
    :param int samples: the size of the validation sample.
    :param int seed: the sampling seed.
    :raises ValueError: if no file is found.
    :rtype: ``ScalarMap``"""

    response = get(url, stream=True)
    if response.status_code == 200:
        return parse_map_string(response.text, url, *args, **kwargs)
    raise ValueError("Could not find anything at {}".format(url))


def parse_map_string(filestring, path, samples=VALIDATION_SAMPLES,
                     seed=DEFAULT_SEED):
    """Takes the contents of a map-spec file - a JSON object - and builds and
    validates the map it describes.

    :param str filestring: the contents of some file.
    :param str path: where the contents came from, for error messages.
    :param int samples: the size of the validation sample.
    :param int seed: the sampling seed.
    :raises ParseError: if the contents are not a JSON map spec.
    :rtype: ``ScalarMap``"""

    try:
        spec = json.loads(filestring)
    except ValueError as e:
        raise ParseError("{} is not valid JSON: {}".format(path, e))
    return load_map(spec, samples=samples, seed=seed)


def map_from_source(source, *args, **kwargs):
    """Builds a map from any of the places one can come from - a
    ``builtin:NAME`` reference, an ``http(s)://`` URL or a file path.

    :param str source: the source to read.
    :param int samples: the size of the validation sample.
    :param int seed: the sampling seed.
    :rtype: ``ScalarMap``"""

    if source.startswith("builtin:"):
        return load_map({"builtin": source[8:]}, *args, **kwargs)
    if source.startswith("http"):
        return fetch_map(source, *args, **kwargs)
    return open_map(source, *args, **kwargs)


def save(filestring, path):
    """Saves a filestring to file.

    :param str filestring: the string to save.
    :param str path: the place to save it."""

    with builtins.open(path, "w", newline="") as f: f.write(filestring)

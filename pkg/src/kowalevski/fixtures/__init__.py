"""Versioned fixture data: sample parameters and search skeletons."""

import json
from importlib import resources


def load(name: str):
    with resources.files(__package__).joinpath(name).open() as fh:
        return json.load(fh)


def table1_params() -> dict:
    data = load("table1_params.json")
    data.pop("_comment", None)
    return data

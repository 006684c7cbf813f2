# coding=utf-8
"""Utilities to convert Levy model dictionaries to Python objects."""
from elva_pricing.levy.nig import NIG
from elva_pricing.levy.vg import VG
from elva_pricing.levy.cgmy import CGMY
from elva_pricing.levy.mjd import MJD


LEVY_MODEL_TYPES = ('NIG', 'VG', 'CGMY', 'MJD')


def dict_to_levy_model(model_dict, raise_exception=True):
    """Get a Python object of any Levy model from a dictionary.

    Args:
        model_dict: A dictionary of any elva_pricing Levy model.
        raise_exception: Boolean to note whether an exception should be raised
            if the object is not identified as a Levy model. (Default: True).

    Returns:
        A Python object derived from the input model_dict.
    """
    try:  # get the type key from the dictionary
        model_type = model_dict['type']
    except KeyError:
        raise ValueError('Levy model dictionary lacks required "type" key.')

    if model_type == 'NIG':
        return NIG.from_dict(model_dict)
    elif model_type == 'VG':
        return VG.from_dict(model_dict)
    elif model_type == 'CGMY':
        return CGMY.from_dict(model_dict)
    elif model_type == 'MJD':
        return MJD.from_dict(model_dict)
    elif raise_exception:
        raise ValueError(
            '{} is not a recognized Levy model type. Choose from the following:\n'
            '{}'.format(model_type, '\n'.join(LEVY_MODEL_TYPES)))

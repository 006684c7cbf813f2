"""Levy model library with the parameter sets of the premium tables."""
from ._loadmodels import _models


# establish variables for the built-in models
nig = _models['nig']
vg = _models['vg']
cgmy = _models['cgmy']
mjd = _models['mjd']

# make a list of models to look up items in the library
MODELS = tuple(_models.keys())


def model_by_name(model_name):
    """Get a Levy model from the library given its name.

    Args:
        model_name: A text string for the name of the model.
    """
    try:
        return _models[model_name]
    except KeyError:
        raise ValueError('"{}" was not found in the Levy model library.'.format(
            model_name))

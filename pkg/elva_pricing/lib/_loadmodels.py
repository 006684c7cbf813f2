"""Load the Levy model parameter sets and any models of the user library."""
from elva_pricing.config import folders
from elva_pricing.levy import NIG, VG, CGMY, MJD
from elva_pricing.levy.dictutil import dict_to_levy_model, LEVY_MODEL_TYPES

import os
import json


# empty dictionary to hold loaded models
_models = {}


def check_and_add_model(model, name=None):
    """Lock a model and add it to the library under a name or its display_name."""
    model.lock()
    _models[name or model.display_name] = model


# parameter sets of the published premium tables
for _model in (NIG(6.0, -0.4, 2.0), VG(0.85, 0.0, 0.2), CGMY(0.02, 5.0, 15.0, 1.2),
               MJD(0.25, 0.6, 0.01, 0.13)):
    _model.display_name = _model.__class__.__name__.lower()
    check_and_add_model(_model)


def load_models_from_folder(lib_folder):
    """Load all of the Levy models from JSON files in a folder.

    Args:
        lib_folder: Path to a folder of JSON files that contain one model or
            a collection of models keyed by name.
    """
    for f in os.listdir(lib_folder):
        f_path = os.path.join(lib_folder, f)
        if os.path.isfile(f_path) and f_path.endswith('.json'):
            with open(f_path) as json_file:
                data = json.load(json_file)
            if 'type' in data:  # single object
                if data['type'] in LEVY_MODEL_TYPES:
                    check_and_add_model(dict_to_levy_model(data))
            else:  # a collection of several objects
                for m_name in data:
                    try:
                        m_dict = data[m_name]
                        if m_dict['type'] in LEVY_MODEL_TYPES:
                            check_and_add_model(dict_to_levy_model(m_dict), m_name)
                    except (TypeError, KeyError, ValueError, AssertionError):
                        pass  # not an acceptable JSON; possibly a comment


# load models from a user folder if it exists
if folders.user_model_folder is not None:
    load_models_from_folder(folders.user_model_folder)

"""Load the numerical presets and any presets of the user library."""
from elva_pricing.config import folders
from elva_pricing.parameter import NumericalConfig

import os
import json


# empty dictionary to hold loaded presets
_presets = {}


def check_and_add_preset(preset):
    """Lock a preset and add it to the library by its display_name."""
    preset.lock()
    _presets[preset.display_name] = preset


# built-in presets of (paths, grid step, time steps per year)
for _name, _paths, _dy, _steps in (
        ('A', 43000, 0.015, 7), ('B', 250000, 0.010, 10), ('C', 670000, 0.008, 15),
        ('D', 2000000, 0.005, 22), ('benchmark', 40000000, 0.001, 100)):
    check_and_add_preset(NumericalConfig(
        dy=_dy, steps_per_year=_steps, n_paths=_paths, display_name=_name))


def load_presets_from_folder(lib_folder):
    """Load all of the NumericalConfig objects from JSON files in a folder.

    Args:
        lib_folder: Path to a folder of JSON files that contain one preset or
            a collection of presets keyed by name.
    """
    for f in os.listdir(lib_folder):
        f_path = os.path.join(lib_folder, f)
        if os.path.isfile(f_path) and f_path.endswith('.json'):
            with open(f_path) as json_file:
                data = json.load(json_file)
            if 'type' in data:  # single object
                if data['type'] == 'NumericalConfig':
                    check_and_add_preset(NumericalConfig.from_dict(data))
            else:  # a collection of several objects
                for p_name in data:
                    try:
                        p_dict = data[p_name]
                        if p_dict['type'] == 'NumericalConfig':
                            if 'display_name' not in p_dict:
                                p_dict['display_name'] = p_name
                            check_and_add_preset(NumericalConfig.from_dict(p_dict))
                    except (TypeError, KeyError):
                        pass  # not an acceptable JSON; possibly a comment


# load presets from a user folder if it exists
if folders.user_preset_folder is not None:
    load_presets_from_folder(folders.user_preset_folder)

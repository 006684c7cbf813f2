"""Numerical preset library."""
from ._loadpresets import _presets


# establish variables for the built-in presets
preset_a = _presets['A']
preset_b = _presets['B']
preset_c = _presets['C']
preset_d = _presets['D']
benchmark = _presets['benchmark']

# make a list of presets to look up items in the library
PRESETS = tuple(_presets.keys())


def preset_by_name(preset_name):
    """Get a NumericalConfig from the library given its name.

    Args:
        preset_name: A text string for the display_name of the preset.
    """
    try:
        return _presets[preset_name]
    except KeyError:
        raise ValueError('"{}" was not found in the preset library.'.format(
            preset_name))

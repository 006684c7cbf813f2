"""Elva_pricing configurations.

Import this into every module where access configurations are needed.

Usage:

.. code-block:: python

    from elva_pricing.config import folders
    print(folders.output_folder)
    folders.max_tree_steps = 50000
"""
import os
import json

import ladybug.config as lb_config
from fairyfly.config import folders as ff_folders
from fairyfly.typing import int_positive


class Folders(object):
    """Elva_pricing folders and engine resource limits.

    Args:
        config_file: The path to the config.json file from which folders are loaded.
            If None, the config.json module included in this package will be used.
            Default: None.
        mute: If False, the paths to the various folders will be printed as they
            are found. If True, no printing will occur upon initialization of this
            class. Default: True.

    Properties:
        * output_folder
        * elva_lib_path
        * user_preset_folder
        * user_model_folder
        * user_mortality_folder
        * max_tree_steps
        * max_grid_points
        * config_file
        * mute
    """
    MAX_TREE_STEPS = 20000
    MAX_GRID_POINTS = 400000

    def __init__(self, config_file=None, mute=True):
        self.mute = bool(mute)  # set the mute value
        self.config_file = config_file  # load paths from the config JSON file

    @property
    def output_folder(self):
        """Get or set the path to the folder where result files are written by default.

        The folder is not created until something is written into it.
        """
        return self._output_folder

    @output_folder.setter
    def output_folder(self, path):
        if not path:  # use the default simulation folder of fairyfly
            path = self._find_output_folder()
        self._output_folder = path
        if not self.mute:
            print('Path to the output folder is set to: {}'.format(path))

    @property
    def elva_lib_path(self):
        """Get or set the path to the folder from which user presets are loaded.

        This will be the elva folder within the user's standards folder if it exists.
        """
        return self._elva_lib_path

    @elva_lib_path.setter
    def elva_lib_path(self, path):
        if not path:  # check the default locations of the standards library
            path = self._find_elva_lib()

        # gather all of the sub folders underneath the master folder
        if path and os.path.isdir(path):
            self._elva_lib_path = path
            preset_dir = os.path.join(path, 'presets')
            model_dir = os.path.join(path, 'models')
            mort_dir = os.path.join(path, 'mortality')
            self._user_preset_folder = preset_dir if os.path.isdir(preset_dir) else None
            self._user_model_folder = model_dir if os.path.isdir(model_dir) else None
            self._user_mortality_folder = mort_dir if os.path.isdir(mort_dir) else None
            if not self.mute:
                print('Path to ELVA library is set to: {}'.format(self._elva_lib_path))
        else:
            if path:
                msg = '{} is not a valid path to an ELVA standards library.'.format(path)
                print(msg)
            self._elva_lib_path = None
            self._user_preset_folder = None
            self._user_model_folder = None
            self._user_mortality_folder = None

    @property
    def user_preset_folder(self):
        """Get the path to the user numerical preset folder."""
        return self._user_preset_folder

    @property
    def user_model_folder(self):
        """Get the path to the user Levy model folder."""
        return self._user_model_folder

    @property
    def user_mortality_folder(self):
        """Get the path to the user mortality table folder."""
        return self._user_mortality_folder

    @property
    def max_tree_steps(self):
        """Get or set an integer for the maximum number of short-rate tree time steps.

        Pricing requests with maturity * steps_per_year above this value are
        rejected before any memory is allocated.
        """
        return self._max_tree_steps

    @max_tree_steps.setter
    def max_tree_steps(self, value):
        self._max_tree_steps = int_positive(value, 'max_tree_steps') \
            if value else self.MAX_TREE_STEPS

    @property
    def max_grid_points(self):
        """Get or set an integer for the maximum number of log-price grid points."""
        return self._max_grid_points

    @max_grid_points.setter
    def max_grid_points(self, value):
        self._max_grid_points = int_positive(value, 'max_grid_points') \
            if value else self.MAX_GRID_POINTS

    @property
    def config_file(self):
        """Get or set the path to the config.json file from which folders are loaded.

        Setting this to None will result in using the config.json module included
        in this package.
        """
        return self._config_file

    @config_file.setter
    def config_file(self, cfg):
        if cfg is None:
            cfg = os.path.join(os.path.dirname(__file__), 'config.json')
        self._load_from_file(cfg)
        self._config_file = cfg

    def _load_from_file(self, file_path):
        """Set all of the the properties of this object from a config JSON file.

        Args:
            file_path: Path to a JSON file containing the file paths. A sample of this
                JSON is the config.json file within this package.
        """
        # check the default file path
        assert os.path.isfile(str(file_path)), \
            ValueError('No file found at {}'.format(file_path))

        # set the default values to be all blank
        default_val = {
            "output_folder": r'',
            "elva_lib_path": r'',
            "max_tree_steps": r'',
            "max_grid_points": r''
        }

        with open(file_path, 'r') as cfg:
            try:
                values = json.load(cfg)
            except Exception as e:
                print('Failed to load values from {}.\n{}'.format(file_path, e))
            else:
                for key, p in values.items():
                    if not key.startswith('__') and str(p).strip():
                        default_val[key] = str(p).strip()

        # set the folders and limits
        self.output_folder = default_val["output_folder"]
        self.elva_lib_path = default_val["elva_lib_path"]
        self.max_tree_steps = default_val["max_tree_steps"]
        self.max_grid_points = default_val["max_grid_points"]

    @staticmethod
    def _find_output_folder():
        """Find the default output folder next to the fairyfly simulation folder."""
        return os.path.join(ff_folders.default_simulation_folder, 'elva')

    @staticmethod
    def _find_elva_lib():
        """Find the user standards folder in its default location."""
        # first check if there's a user-defined folder in AppData
        app_folder = os.getenv('APPDATA')
        if app_folder is not None:
            lib_folder = os.path.join(app_folder, 'ladybug_tools', 'standards', 'elva')
            if os.path.isdir(lib_folder):
                return lib_folder
        # then check the ladybug_tools installation folder
        lb_install = lb_config.folders.ladybug_tools_folder
        if os.path.isdir(lb_install):
            lib_folder = os.path.join(lb_install, 'resources', 'standards', 'elva')
            if os.path.isdir(lib_folder):
                return lib_folder


"""Object possesing all key folders within the configuration."""
folders = Folders(mute=True)

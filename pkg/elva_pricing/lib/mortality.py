"""Mortality table library."""
import os

from elva_pricing.config import folders
from elva_pricing.mortality import MortalityTable

DEFAULT_AGE = 30
_data_folder = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'data')

# default table of a policyholder aged 30 at inception
default_mortality = MortalityTable.from_csv(
    os.path.join(_data_folder, 'mortality_age30.csv'), DEFAULT_AGE)
default_mortality.lock()


def mortality_by_name(name, age=None):
    """Get a MortalityTable from the keyword default, a user table or a CSV path.

    Args:
        name: Text for the keyword default, the name of a CSV file in the user
            mortality folder (without extension) or the path to a CSV file.
        age: An optional integer for the age at inception of tables loaded
            from files. (Default: None).
    """
    if name == 'default':
        return default_mortality
    if folders.user_mortality_folder is not None:
        user_path = os.path.join(folders.user_mortality_folder, '{}.csv'.format(name))
        if os.path.isfile(user_path):
            return MortalityTable.from_csv(user_path, age)
    if os.path.isfile(name):
        return MortalityTable.from_csv(name, age)
    raise ValueError('"{}" was not found in the mortality library and is not a '
                     'path to a mortality file.'.format(name))

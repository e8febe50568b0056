import os
import glob
import warnings
import functools

from .Parser import parse_source

STUB_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'stubs')


def stub_files(stubDir=None):
    """The sorted list of ``.mj`` files in stubDir (the bundled stubs by default)."""
    stubDir = STUB_DIR if stubDir is None else stubDir
    files = sorted(glob.glob(os.path.join(stubDir, '*.mj')))
    if not files:
        warnings.warn('No stub declarations (*.mj) found in %s' % stubDir)
    return files


@functools.lru_cache(maxsize=8)
def _load(stubDir):
    units = []
    for path in stub_files(stubDir):
        with open(path, encoding='utf-8') as f:
            source = f.read()
        fileId = 'stubs/' + os.path.basename(path)
        units.append(parse_source(source, fileId))
    return tuple(units)


def load_stubs(stubDir=None, verbose=False):
    """
    Parse the stub library.

    Parameters
    ----------
    stubDir : str, optional
        Directory of stub ``.mj`` files.  By default the stubs bundled
        with oodc are used.
    verbose : bool, optional
        If True print which stub files were loaded.

    Returns
    -------
    tuple of list
        One parsed unit per stub file.  The units are shared between
        callers and must not be modified.
    """
    stubDir = os.path.abspath(STUB_DIR if stubDir is None else stubDir)
    units = _load(stubDir)
    if verbose:
        print('Loaded', len(units), 'stub files from', stubDir)
    return units

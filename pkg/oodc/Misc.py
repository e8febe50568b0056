import io
import os

from numpydoc.docscrape import FunctionDoc


def update_docstring(**dic):
    def wrapper(func):
        doc = FunctionDoc(func)
        for k, v in dic.items():
            doc[k] = v
        func.__doc__ = str(doc)
        return func
    return wrapper


def read_sources(paths):
    """
    Read source files as (fileId, text) pairs.  The file id reported in
    diagnostics is the path as given.
    """
    sources = []
    for path in paths:
        with io.open(path, encoding='utf-8') as f:
            sources.append((path, f.read()))
    return sources


def write_source(directory, fileId, text):
    """Write text to directory under fileId's base name and return the path written."""
    if not os.path.isdir(directory):
        os.makedirs(directory)
    path = os.path.join(directory, os.path.basename(fileId))
    with io.open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(text)
    return path

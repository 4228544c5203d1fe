# imports - module imports
from bpyutils.cli.util     import *
from nlsid.cli.parser      import get_args
from bpyutils.util._dict   import merge_dict
from bpyutils.util.types   import get_function_arguments

def command(fn):
    params = get_function_arguments(fn)

    def wrapper(argv = None):
        # parse at call time: argv is the command line of this invocation
        args = get_args(argv)
        return fn(**merge_dict(params, args))

    return wrapper

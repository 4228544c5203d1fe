# imports - module imports
from nlsid.cli.parser import get_args, COMMANDS

def test_args():
    args = get_args([ ])

    assert args["command"]  == "pipeline"
    assert args["seed"]     is None
    assert args["out_dir"]  == "output"
    assert args["jobs"]     == 1
    assert args["verbose"]  == False
    assert args["no_color"] == False

    args = get_args(["fit", "--config", "linear-sanity", "--seed", "3", "-j", "4", "--out-dir", "foobar"])

    assert args["command"] == "fit"
    assert args["config"]  == "linear-sanity"
    assert args["seed"]    == 3
    assert args["jobs"]    == 4
    assert args["out_dir"] == "foobar"

    args = get_args(["--threads", "2", "--verbose"], known = False, as_dict = False)

    assert args.jobs    == 2
    assert args.verbose == True
    assert args.command == "pipeline"

    assert "pipeline" in COMMANDS and "closedloop" in COMMANDS

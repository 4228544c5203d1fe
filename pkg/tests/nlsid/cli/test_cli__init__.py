# imports - module imports
from nlsid import cli

def test_command():
    @cli.command
    def foobar(**kwargs):
        return kwargs

    params = foobar(argv = ["design", "--seed", "3"])

    assert params["command"] == "design"
    assert params["seed"]    == 3

    params = foobar(argv = [ ])

    assert params["command"] == "pipeline"
    assert params["seed"]    is None

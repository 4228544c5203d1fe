from nlsid import cli

def cli_format(string, type_, no_color = False):
    if not no_color:
        string = cli.format(string, type_)

    return string

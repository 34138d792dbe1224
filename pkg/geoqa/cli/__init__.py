from geoqa.cli.commands import cli

import factory

from hoairy.core.run_config import RunConfig


class RunConfigFactory(factory.Factory):
    class Meta:
        model = RunConfig

    subcommand = "det"
    n = 1
    k = 1
    x = (0.0,)
    alpha = (1.0,)
    format = "json"

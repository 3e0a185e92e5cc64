"""Multi-UAV visible light communication deployment: models and optimizers.

The package splits into physical models (channel, energy), the deployment
problem itself (problem), two decomposition-based optimizers (moead, cicm),
baselines plus evaluation tooling (bench) and a command line front end
(cli, config).
"""

from uavlc.bench import (
    PowerGrid,
    RunReport,
    high_quality_area,
    hypervolume,
    power_grid,
    random_deployment,
    run_experiment,
    uniform_deployment,
)
from uavlc.channel import VlcParams, channel_gain, lambert_order
from uavlc.cicm import CicmParams, run_moead_cicm
from uavlc.energy import RotorcraftParams, motion_energy, propulsion_power
from uavlc.moead import OptimizerParams, ParetoArchive, run_moead
from uavlc.problem import Scenario, evaluate, make_receiver_grid, repair

__version__ = "0.1.0"

__all__ = [
    "CicmParams",
    "OptimizerParams",
    "ParetoArchive",
    "PowerGrid",
    "RotorcraftParams",
    "RunReport",
    "Scenario",
    "VlcParams",
    "channel_gain",
    "evaluate",
    "high_quality_area",
    "hypervolume",
    "lambert_order",
    "make_receiver_grid",
    "motion_energy",
    "power_grid",
    "propulsion_power",
    "random_deployment",
    "repair",
    "run_experiment",
    "run_moead",
    "run_moead_cicm",
    "uniform_deployment",
]

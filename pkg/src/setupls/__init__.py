"""Parameterized local search for single-machine scheduling with family setup times."""
from .distances import insert_distance, multi_window_distance, swap_distance, window_distance
from .edds import CapacityError, EddChain, edd_chains, start_dd, start_sm, start_tm
from .estimator import ScheduleSearch
from .hillclimb import RunReport, StrategyConfig, run
from .internal_mm import InternalMmQuery, InternalMmResult, solve_internal_mm
from .model import (Evaluation, InputError, Instance, Job, Objective, compare, evaluate,
                    is_edds, is_feasible, validate_setup)
from .neighborhoods import improve_insert, improve_multi_window, improve_swap, improve_window

__version__ = "0.1.0"

# Directorize core

__version__ = "0.1.0"

# Errors
from .errors import (
    ZeroCapError, MachineSyntaxError, MachineValidationError, InfeasibleNoiseError,
    ConvergenceError, ResourceGuardError, CapacityZeroError, ParameterError, LengthMismatchError,
)

# Configuration
from .config.settings import Settings, load_settings

# Channel model
from .channel.symbols import add_words, sub_words, to_digits, from_digits, digits_needed, all_words
from .channel.machine import (
    Edge, NoiseMachine, InvariantCheck, ValidationReport, validate,
    parse_machine, render_machine, load_machine, resolve_machine, corpus_names,
)
from .channel.session import ChannelUse, ChannelSession, open_session, step, render_transcript

# Spectral quantities
from .spectral.perron import SpectralSummary, adjacency_matrix, perron, spectral_summary, topological_entropy
from .spectral.counts import count_noise_sequences, count_all_noise_sequences, count_union_sequences, count_bounds

# Coupled graph and zero test
from .coupled.graph import CoupledEdge, CoupledGraph, build_coupled, realizable
from .coupled.zerotest import Verdict, ZeroTestVerdict, zero_capacity_test

# Capacities
from .capacity.report import CapacityReport, BlocklengthBounds, capacity_report, blocklength_bounds
from .capacity.markov import (
    MarkovChannel, markov_channel, transition_matrix, stationary_distribution,
    entropy_rate, feedback_capacity, sample_path, empirical_entropy_rate,
)
from .capacity.minimize import (
    MinimizationResult, free_parameters, channel_from_parameters, minimize_feedback_capacity,
)
from .capacity.gilbert import GilbertElliotChannel

# Brute-force oracles
from .oracle.noise import enumerate_noise, noise_union, is_feasible_noise, check_count, count_table, output_fiber
from .oracle.confusability import confusable, confusable_by_enumeration, realizable_differences
from .oracle.codebook import Codebook, max_codebook, is_zero_error_codebook
from .oracle.universality import UniversalityResult, universality_oracle

# Feedback codec
from .codec.scheme import Stage, StageKind, FeedbackScheme, plan_stages, build_scheme, achieved_rate, rate_profile
from .codec.transmit import (
    NoiseSchedule, FixedSchedule, RandomSchedule, exhaustive_schedules,
    TransmitResult, transmit, decode, VerificationSummary, verify_exhaustive,
)
